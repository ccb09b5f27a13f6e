// core/include/augeval/stft.h

// Copyright 2026 The Augeval Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUGEVAL_STFT_H_
#define AUGEVAL_STFT_H_

#include <complex>
#include <cstddef>
#include <vector>

#include "augeval/audio.h"

namespace augeval {

// Periodic Hann window of the given length.
std::vector<double> hann_window(std::size_t length);

// One-sided short-time spectrum, frames stored time-major.
struct Spectrogram {
  std::vector<std::complex<double>> bins;  // n_frames * n_bins()
  std::size_t n_fft = 0;
  std::size_t hop = 0;
  int sample_rate = 0;
  std::size_t n_frames = 0;

  std::size_t n_bins() const { return n_fft / 2 + 1; }
  std::complex<double>& at(std::size_t frame, std::size_t bin) {
    return bins[frame * n_bins() + bin];
  }
  const std::complex<double>& at(std::size_t frame, std::size_t bin) const {
    return bins[frame * n_bins() + bin];
  }
  double bin_hz(std::size_t bin) const {
    return static_cast<double>(bin) * sample_rate / static_cast<double>(n_fft);
  }
};

// Centered analysis: the signal is padded by n_fft/2 zeros on both sides, so
// frame t is centered on sample t*hop and the frame count is
// floor(len/hop) + 1. n_fft must be even and positive, hop positive; empty
// input and hop > n_fft are rejected (std::invalid_argument).
Spectrogram stft(const AudioClip& clip, std::size_t n_fft, std::size_t hop);

// Weighted overlap-add inverse. synthesis_hop == 0 reuses the analysis hop.
// length < 0 keeps the natural output span (n_frames - 1) * hop' after the
// center padding is trimmed; otherwise the result is cut or zero-padded to
// exactly `length` samples.
AudioClip istft(const Spectrogram& spec, std::size_t synthesis_hop = 0,
                long long length = -1);

}  // namespace augeval

#endif  // AUGEVAL_STFT_H_

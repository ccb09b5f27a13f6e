// core/src/stft.cc

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

#include "augeval/stft.h"

#include <cmath>
#include <stdexcept>

#include "augeval/fft.h"

namespace augeval {
namespace {

constexpr double kPi = 3.14159265358979323846;
// Floor under the overlap-add window-power sum; bins quieter than this hold
// no usable signal and are left at zero instead of being divided up.
constexpr double kOlaFloor = 1e-11;

}  // namespace

std::vector<double> hann_window(std::size_t length) {
  std::vector<double> w(length);
  for (std::size_t i = 0; i < length; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) /
                                static_cast<double>(length));
  }
  return w;
}

Spectrogram stft(const AudioClip& clip, std::size_t n_fft, std::size_t hop) {
  if (n_fft == 0 || n_fft % 2 != 0) {
    throw std::invalid_argument("stft: n_fft must be even and positive");
  }
  if (hop == 0) throw std::invalid_argument("stft: hop must be positive");
  if (hop > n_fft) throw std::invalid_argument("stft: hop must not exceed n_fft");
  if (clip.samples.empty()) throw std::invalid_argument("stft: empty signal");
  if (clip.sample_rate <= 0) throw std::invalid_argument("stft: bad sample rate");

  const std::size_t len = clip.samples.size();
  const std::size_t pad = n_fft / 2;
  const std::size_t n_frames = len / hop + 1;
  const std::vector<double> window = hann_window(n_fft);

  Spectrogram spec;
  spec.n_fft = n_fft;
  spec.hop = hop;
  spec.sample_rate = clip.sample_rate;
  spec.n_frames = n_frames;
  spec.bins.resize(n_frames * spec.n_bins());

  std::vector<std::complex<double>> frame(n_fft);
  for (std::size_t t = 0; t < n_frames; ++t) {
    // Frame t covers padded samples [t*hop, t*hop + n_fft); padded index i
    // maps back to signal index i - pad.
    const std::size_t start = t * hop;
    for (std::size_t i = 0; i < n_fft; ++i) {
      const long long src = static_cast<long long>(start + i) - static_cast<long long>(pad);
      const double value =
          (src >= 0 && src < static_cast<long long>(len))
              ? static_cast<double>(clip.samples[static_cast<std::size_t>(src)])
              : 0.0;
      frame[i] = std::complex<double>(value * window[i], 0.0);
    }
    fft(&frame);
    for (std::size_t k = 0; k < spec.n_bins(); ++k) spec.at(t, k) = frame[k];
  }
  return spec;
}

AudioClip istft(const Spectrogram& spec, std::size_t synthesis_hop, long long length) {
  if (spec.n_frames == 0) throw std::invalid_argument("istft: empty spectrogram");
  if (spec.n_fft == 0 || spec.n_fft % 2 != 0) {
    throw std::invalid_argument("istft: bad n_fft");
  }
  const std::size_t hop = synthesis_hop == 0 ? spec.hop : synthesis_hop;
  if (hop == 0 || hop > spec.n_fft) throw std::invalid_argument("istft: bad hop");

  const std::size_t n_fft = spec.n_fft;
  const std::size_t pad = n_fft / 2;
  const std::size_t padded_len = (spec.n_frames - 1) * hop + n_fft;
  const std::vector<double> window = hann_window(n_fft);

  std::vector<double> acc(padded_len, 0.0);
  std::vector<double> norm(padded_len, 0.0);
  std::vector<std::complex<double>> frame(n_fft);
  for (std::size_t t = 0; t < spec.n_frames; ++t) {
    for (std::size_t k = 0; k < spec.n_bins(); ++k) frame[k] = spec.at(t, k);
    // Rebuild the negative frequencies from Hermitian symmetry.
    for (std::size_t k = spec.n_bins(); k < n_fft; ++k) {
      frame[k] = std::conj(frame[n_fft - k]);
    }
    ifft(&frame);
    const std::size_t start = t * hop;
    for (std::size_t i = 0; i < n_fft; ++i) {
      acc[start + i] += frame[i].real() * window[i];
      norm[start + i] += window[i] * window[i];
    }
  }
  for (std::size_t i = 0; i < padded_len; ++i) {
    if (norm[i] > kOlaFloor) acc[i] /= norm[i];
  }

  const long long natural = static_cast<long long>((spec.n_frames - 1) * hop);
  const long long want = length < 0 ? natural : length;

  AudioClip out;
  out.sample_rate = spec.sample_rate;
  out.samples.resize(static_cast<std::size_t>(want < 0 ? 0 : want), 0.0f);
  for (long long i = 0; i < want; ++i) {
    const long long src = i + static_cast<long long>(pad);
    if (src < static_cast<long long>(padded_len)) {
      out.samples[static_cast<std::size_t>(i)] = static_cast<float>(acc[src]);
    }
  }
  return out;
}

}  // namespace augeval

// core/src/stretch.cc

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

#include "augeval/stretch.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "augeval/stft.h"

namespace augeval {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

}  // namespace

StretchFactor::StretchFactor(double r) : r_(r) {
  if (!(r >= kMin && r <= kMax)) {
    throw std::invalid_argument("stretch factor " + std::to_string(r) +
                                " outside [0.5, 2.0]");
  }
}

AudioClip time_stretch(const AudioClip& clip, StretchFactor r, const StretchParams& params) {
  if (clip.samples.empty()) throw std::invalid_argument("time_stretch: empty signal");
  const double rate = r.value();
  const long long target_len =
      std::llround(static_cast<double>(clip.samples.size()) / rate);

  const Spectrogram in = stft(clip, params.n_fft, params.hop);
  const std::size_t n_bins = in.n_bins();

  // Expected per-hop phase advance of each bin's center frequency.
  std::vector<double> phi_advance(n_bins);
  for (std::size_t k = 0; k < n_bins; ++k) {
    phi_advance[k] =
        kTwoPi * static_cast<double>(k) * params.hop / static_cast<double>(params.n_fft);
  }

  Spectrogram out;
  out.n_fft = in.n_fft;
  out.hop = in.hop;
  out.sample_rate = in.sample_rate;
  out.n_frames = static_cast<std::size_t>(
      std::ceil(static_cast<double>(in.n_frames) / rate));
  out.bins.resize(out.n_frames * n_bins);

  std::vector<double> phase(n_bins);
  for (std::size_t k = 0; k < n_bins; ++k) phase[k] = std::arg(in.at(0, k));

  for (std::size_t s = 0; s < out.n_frames; ++s) {
    const double t = static_cast<double>(s) * rate;
    const std::size_t t0 = static_cast<std::size_t>(t);
    const double frac = t - static_cast<double>(t0);

    for (std::size_t k = 0; k < n_bins; ++k) {
      const std::complex<double> a =
          t0 < in.n_frames ? in.at(t0, k) : std::complex<double>(0.0, 0.0);
      const std::complex<double> b =
          t0 + 1 < in.n_frames ? in.at(t0 + 1, k) : std::complex<double>(0.0, 0.0);
      const double mag = (1.0 - frac) * std::abs(a) + frac * std::abs(b);
      out.at(s, k) = std::polar(mag, phase[k]);

      // Instantaneous frequency: measured phase advance, deviation wrapped
      // to [-pi, pi), added onto the nominal advance.
      double delta = std::arg(b) - std::arg(a) - phi_advance[k];
      delta -= kTwoPi * std::round(delta / kTwoPi);
      phase[k] += phi_advance[k] + delta;
    }
  }

  return istft(out, 0, target_len);
}

}  // namespace augeval

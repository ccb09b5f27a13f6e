// core/src/vtlp.cc

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

#include "augeval/vtlp.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "augeval/rng.h"
#include "augeval/stft.h"

namespace augeval {
namespace {

// Maps a warped frequency back to the frequency it came from. The forward
// warp is f -> alpha*f below the boundary b, then the line from
// (b, alpha*b) to (nyquist, nyquist).
double unwarp(double freq, double alpha, double boundary, double nyquist) {
  const double knee = alpha * boundary;
  if (freq <= knee) return freq / alpha;
  return boundary + (freq - knee) * (nyquist - boundary) / (nyquist - knee);
}

}  // namespace

void validate_vtlp_config(const VtlpConfig& cfg, int sample_rate) {
  if (sample_rate <= 0) throw std::invalid_argument("vtlp: bad sample rate");
  const double nyquist = sample_rate / 2.0;
  if (!(cfg.warp_lo > 0.0 && cfg.warp_lo <= 1.0 && cfg.warp_hi >= 1.0)) {
    throw std::invalid_argument("vtlp: warp range must satisfy 0 < lo <= 1 <= hi");
  }
  if (!(cfg.boundary_hz > 0.0 && cfg.boundary_hz < nyquist)) {
    throw std::invalid_argument("vtlp: boundary must lie in (0, nyquist)");
  }
  if (!(cfg.warp_hi * cfg.boundary_hz < nyquist)) {
    throw std::invalid_argument("vtlp: warp_hi * boundary must stay below nyquist");
  }
  if (cfg.n_fft == 0 || cfg.n_fft % 2 != 0 || cfg.hop == 0 || cfg.hop > cfg.n_fft) {
    throw std::invalid_argument("vtlp: bad n_fft/hop");
  }
}

AudioClip vtlp_with_alpha(const AudioClip& clip, const VtlpConfig& cfg, double alpha) {
  if (clip.sample_rate <= 0) throw std::invalid_argument("vtlp: bad sample rate");
  const double nyquist = clip.sample_rate / 2.0;
  if (!(alpha > 0.0) || alpha * cfg.boundary_hz >= nyquist) {
    throw std::invalid_argument("vtlp: warp factor " + std::to_string(alpha) +
                                " maps the boundary past nyquist");
  }
  if (!(cfg.boundary_hz > 0.0 && cfg.boundary_hz < nyquist)) {
    throw std::invalid_argument("vtlp: boundary must lie in (0, nyquist)");
  }

  Spectrogram spec = stft(clip, cfg.n_fft, cfg.hop);
  const std::size_t n_bins = spec.n_bins();
  const double bin_hz = static_cast<double>(clip.sample_rate) / static_cast<double>(cfg.n_fft);

  std::vector<double> mag(n_bins);
  for (std::size_t t = 0; t < spec.n_frames; ++t) {
    for (std::size_t k = 0; k < n_bins; ++k) mag[k] = std::abs(spec.at(t, k));
    for (std::size_t k = 0; k < n_bins; ++k) {
      const double src = unwarp(static_cast<double>(k) * bin_hz, alpha, cfg.boundary_hz,
                                nyquist) /
                         bin_hz;
      const auto k0 = static_cast<std::size_t>(src);
      const double frac = src - static_cast<double>(k0);
      double value;
      if (k0 + 1 < n_bins) {
        value = (1.0 - frac) * mag[k0] + frac * mag[k0 + 1];
      } else {
        value = mag[n_bins - 1];
      }
      spec.at(t, k) = std::polar(value, std::arg(spec.at(t, k)));
    }
  }
  return istft(spec, 0, static_cast<long long>(clip.samples.size()));
}

AudioClip vtlp(const AudioClip& clip, const VtlpConfig& cfg) {
  validate_vtlp_config(cfg, clip.sample_rate);
  SplitMix rng(cfg.seed);
  const double alpha = rng.uniform(cfg.warp_lo, cfg.warp_hi);
  return vtlp_with_alpha(clip, cfg, alpha);
}

}  // namespace augeval

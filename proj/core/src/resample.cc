// core/src/resample.cc

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

#include "augeval/resample.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace augeval {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kKaiserBeta = 10.0;     // ~100 dB stopband
constexpr double kZeroCrossings = 32.0;  // sinc half-width before stretching
constexpr double kCutoffHeadroom = 0.95;

double bessel_i0(double x) {
  const double half = x / 2.0;
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < 64; ++k) {
    const double f = half / k;
    term *= f * f;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double sinc(double u) {
  if (u == 0.0) return 1.0;
  const double a = kPi * u;
  return std::sin(a) / a;
}

// Band-limited interpolation of `in` at fractional positions (in input
// samples). `step` is the mean position increment; when it exceeds 1 the
// kernel is widened and its cutoff lowered to suppress aliasing.
std::vector<float> sinc_interpolate(const std::vector<float>& in,
                                    const std::vector<double>& positions, double step) {
  const double scale = std::min(1.0, 1.0 / step);
  const double cutoff = 0.5 * kCutoffHeadroom * scale;  // cycles per input sample
  const double half_width = kZeroCrossings / scale;
  const double i0_beta = bessel_i0(kKaiserBeta);
  const auto n = static_cast<long long>(in.size());

  std::vector<float> out(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const double t = positions[i];
    const auto lo = static_cast<long long>(std::ceil(t - half_width));
    const auto hi = static_cast<long long>(std::floor(t + half_width));
    double num = 0.0;
    double den = 0.0;
    for (long long j = lo; j <= hi; ++j) {
      const double x = t - static_cast<double>(j);
      const double frac = x / half_width;
      const double window = bessel_i0(kKaiserBeta * std::sqrt(std::max(0.0, 1.0 - frac * frac))) / i0_beta;
      const double w = 2.0 * cutoff * sinc(2.0 * cutoff * x) * window;
      den += w;
      if (j >= 0 && j < n) num += w * static_cast<double>(in[static_cast<std::size_t>(j)]);
    }
    out[i] = den > 1e-12 ? static_cast<float>(num / den) : 0.0f;
  }
  return out;
}

}  // namespace

AudioClip resample(const AudioClip& clip, int target_rate) {
  if (target_rate <= 0) {
    throw std::invalid_argument("resample: target rate must be positive");
  }
  if (clip.sample_rate <= 0) {
    throw std::invalid_argument("resample: source rate must be positive");
  }
  if (clip.samples.empty()) throw std::invalid_argument("resample: empty signal");
  if (target_rate == clip.sample_rate) return clip;

  const auto src = static_cast<std::int64_t>(clip.sample_rate);
  const auto dst = static_cast<std::int64_t>(target_rate);
  const auto in_len = static_cast<std::int64_t>(clip.samples.size());
  const std::int64_t out_len =
      std::max<std::int64_t>(1, std::llround(static_cast<double>(in_len) * dst / src));

  std::vector<double> positions(static_cast<std::size_t>(out_len));
  for (std::int64_t i = 0; i < out_len; ++i) {
    // Exact rational position i * src / dst; the products stay well inside
    // the 53-bit double mantissa for any realistic clip.
    positions[static_cast<std::size_t>(i)] =
        static_cast<double>(i * src) / static_cast<double>(dst);
  }

  AudioClip out;
  out.sample_rate = target_rate;
  out.samples = sinc_interpolate(clip.samples, positions,
                                 static_cast<double>(src) / static_cast<double>(dst));
  return out;
}

AudioClip speed_perturb(const AudioClip& clip, StretchFactor r) {
  if (clip.sample_rate <= 0) {
    throw std::invalid_argument("speed_perturb: bad sample rate");
  }
  if (clip.samples.empty()) throw std::invalid_argument("speed_perturb: empty signal");
  const double rate = r.value();
  if (rate == 1.0) return clip;

  const auto in_len = static_cast<std::int64_t>(clip.samples.size());
  const std::int64_t out_len =
      std::max<std::int64_t>(1, std::llround(static_cast<double>(in_len) / rate));
  std::vector<double> positions(static_cast<std::size_t>(out_len));
  for (std::int64_t i = 0; i < out_len; ++i) {
    positions[static_cast<std::size_t>(i)] = static_cast<double>(i) * rate;
  }

  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples = sinc_interpolate(clip.samples, positions, rate);
  return out;
}

}  // namespace augeval

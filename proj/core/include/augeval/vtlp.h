// core/include/augeval/vtlp.h

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

#ifndef AUGEVAL_VTLP_H_
#define AUGEVAL_VTLP_H_

#include <cstddef>
#include <cstdint>

#include "augeval/audio.h"

namespace augeval {

// Vocal-tract-length perturbation settings. The warp factor is drawn
// uniformly from [warp_lo, warp_hi]; frequencies below boundary_hz are
// scaled by it and the band above follows a straight line that keeps
// Nyquist fixed.
struct VtlpConfig {
  double warp_lo = 0.9;
  double warp_hi = 1.1;
  double boundary_hz = 4800.0;
  std::uint64_t seed = 0;
  std::size_t n_fft = 2048;
  std::size_t hop = 512;
};

// Requires warp_lo <= 1 <= warp_hi, 0 < boundary_hz < Nyquist, and
// warp_hi * boundary_hz < Nyquist (the warped knee must stay below
// Nyquist). Throws std::invalid_argument otherwise.
void validate_vtlp_config(const VtlpConfig& cfg, int sample_rate);

// Applies the piecewise-linear warp with a fixed factor: magnitudes are
// moved along the frequency axis (inverse-mapped, linearly interpolated);
// each bin keeps its original phase. Duration is preserved.
AudioClip vtlp_with_alpha(const AudioClip& clip, const VtlpConfig& cfg, double alpha);

// Draws alpha from [warp_lo, warp_hi] using cfg.seed, then warps.
// Deterministic: the same clip, config, and seed give identical output.
AudioClip vtlp(const AudioClip& clip, const VtlpConfig& cfg);

}  // namespace augeval

#endif  // AUGEVAL_VTLP_H_

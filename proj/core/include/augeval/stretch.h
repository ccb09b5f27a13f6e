// core/include/augeval/stretch.h

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

#ifndef AUGEVAL_STRETCH_H_
#define AUGEVAL_STRETCH_H_

#include <cstddef>

#include "augeval/audio.h"

namespace augeval {

// Playback rate. r < 1 slows playback down, so the output gets LONGER:
// output duration ~= input / r. (r = 0.9 turns 10 s into ~11.1 s.)
class StretchFactor {
 public:
  // Throws std::invalid_argument outside the enforced range [0.5, 2.0].
  explicit StretchFactor(double r);
  double value() const { return r_; }

  static constexpr double kMin = 0.5;
  static constexpr double kMax = 2.0;

 private:
  double r_;
};

struct StretchParams {
  std::size_t n_fft = 2048;
  std::size_t hop = 512;
};

// Phase-vocoder time stretch: duration scales by 1/r, pitch is preserved.
// Per-bin instantaneous frequency is estimated from the phase advance
// between analysis frames and re-accumulated at the stretched frame
// positions. Deterministic; output trimmed to round(len / r) samples.
AudioClip time_stretch(const AudioClip& clip, StretchFactor r,
                       const StretchParams& params = {});

}  // namespace augeval

#endif  // AUGEVAL_STRETCH_H_

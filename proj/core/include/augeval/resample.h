// core/include/augeval/resample.h

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

#ifndef AUGEVAL_RESAMPLE_H_
#define AUGEVAL_RESAMPLE_H_

#include "augeval/audio.h"
#include "augeval/stretch.h"

namespace augeval {

// Kaiser-windowed sinc resampling to target_rate. Output length is
// round(len * target / source); a same-rate call is an exact passthrough.
// Throws std::invalid_argument on a non-positive rate or empty input.
AudioClip resample(const AudioClip& clip, int target_rate);

// Speed perturbation: relabel the clip's sample rate as rate * r, then
// resample back to the original rate. Net effect: duration scales by 1/r
// and every frequency scales by r (pitch moves with speed). r = 1 is a
// bit-identical passthrough.
AudioClip speed_perturb(const AudioClip& clip, StretchFactor r);

}  // namespace augeval

#endif  // AUGEVAL_RESAMPLE_H_

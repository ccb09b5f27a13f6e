// core/include/augeval/audio.h

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

#ifndef AUGEVAL_AUDIO_H_
#define AUGEVAL_AUDIO_H_

#include <vector>

namespace augeval {

// Mono audio. Samples are nominally in [-1, 1]; intermediate processing may
// exceed that range and is clamped only when writing 16-bit PCM.
struct AudioClip {
  std::vector<float> samples;
  int sample_rate = 0;

  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

// Throws std::invalid_argument unless the rate is positive and every sample
// is finite.
void validate_audio(const AudioClip& clip);

// Clamps samples to [-1, 1] in place; returns how many were clamped.
std::size_t clamp_to_unit(AudioClip* clip);

}  // namespace augeval

#endif  // AUGEVAL_AUDIO_H_

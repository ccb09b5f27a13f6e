// core/src/audio.cc

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

#include "augeval/audio.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace augeval {

void validate_audio(const AudioClip& clip) {
  if (clip.sample_rate <= 0) {
    throw std::invalid_argument("audio: sample rate must be positive, got " +
                                std::to_string(clip.sample_rate));
  }
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    if (!std::isfinite(clip.samples[i])) {
      throw std::invalid_argument("audio: non-finite sample at index " + std::to_string(i));
    }
  }
}

std::size_t clamp_to_unit(AudioClip* clip) {
  std::size_t clamped = 0;
  for (float& s : clip->samples) {
    if (s > 1.0f) {
      s = 1.0f;
      ++clamped;
    } else if (s < -1.0f) {
      s = -1.0f;
      ++clamped;
    }
  }
  return clamped;
}

}  // namespace augeval

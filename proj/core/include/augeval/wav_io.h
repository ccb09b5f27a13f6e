// core/include/augeval/wav_io.h

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

#ifndef AUGEVAL_WAV_IO_H_
#define AUGEVAL_WAV_IO_H_

#include <filesystem>

#include "augeval/audio.h"

namespace augeval {

// Reads a RIFF/WAVE file holding 16-bit PCM. Multichannel input is downmixed
// to mono by averaging. Throws std::runtime_error on malformed or
// unsupported files.
AudioClip read_wav(const std::filesystem::path& path);

// Writes mono 16-bit PCM. Samples are clamped to [-1, 1] and rounded.
// Throws std::runtime_error on IO failure, std::invalid_argument on a bad
// sample rate.
void write_wav(const std::filesystem::path& path, const AudioClip& clip);

}  // namespace augeval

#endif  // AUGEVAL_WAV_IO_H_

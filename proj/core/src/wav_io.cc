// core/src/wav_io.cc

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

#include "augeval/wav_io.h"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace augeval {
namespace {

constexpr std::uint16_t kFormatPcm = 1;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(static_cast<std::uint16_t>(p[0]) |
                                    (static_cast<std::uint16_t>(p[1]) << 8));
}

void put_u32(std::string* out, std::uint32_t v) {
  out->push_back(static_cast<char>(v & 0xff));
  out->push_back(static_cast<char>((v >> 8) & 0xff));
  out->push_back(static_cast<char>((v >> 16) & 0xff));
  out->push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string* out, std::uint16_t v) {
  out->push_back(static_cast<char>(v & 0xff));
  out->push_back(static_cast<char>((v >> 8) & 0xff));
}

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& message) {
  throw std::runtime_error(path.string() + ": " + message);
}

}  // namespace

AudioClip read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();

  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 || std::memcmp(data + 8, "WAVE", 4) != 0) {
    fail(path, "not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  std::uint16_t channels = 0;
  std::uint16_t bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* pcm = nullptr;
  std::size_t pcm_bytes = 0;

  // Walk the chunk list; chunks are word-aligned.
  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const unsigned char* id = data + pos;
    const std::uint32_t chunk_size = read_u32(data + pos + 4);
    const std::size_t body = pos + 8;
    if (body + chunk_size > size) fail(path, "truncated chunk");
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (chunk_size < 16) fail(path, "fmt chunk too small");
      const std::uint16_t format = read_u16(data + body);
      if (format != kFormatPcm) {
        fail(path, "unsupported format tag " + std::to_string(format) + " (want 16-bit PCM)");
      }
      channels = read_u16(data + body + 2);
      rate = read_u32(data + body + 4);
      bits = read_u16(data + body + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      pcm = data + body;
      pcm_bytes = chunk_size;
    }
    pos = body + chunk_size + (chunk_size & 1);
  }

  if (!have_fmt) fail(path, "missing fmt chunk");
  if (pcm == nullptr) fail(path, "missing data chunk");
  if (bits != 16) fail(path, "unsupported bit depth " + std::to_string(bits));
  if (channels == 0) fail(path, "zero channels");
  if (rate == 0) fail(path, "zero sample rate");

  const std::size_t frame_bytes = static_cast<std::size_t>(channels) * 2;
  const std::size_t frames = pcm_bytes / frame_bytes;

  AudioClip clip;
  clip.sample_rate = static_cast<int>(rate);
  clip.samples.resize(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (std::uint16_t c = 0; c < channels; ++c) {
      const unsigned char* s = pcm + f * frame_bytes + c * 2;
      const auto v = static_cast<std::int16_t>(read_u16(s));
      acc += static_cast<double>(v) / 32768.0;
    }
    clip.samples[f] = static_cast<float>(acc / channels);
  }
  return clip;
}

void write_wav(const std::filesystem::path& path, const AudioClip& clip) {
  if (clip.sample_rate <= 0) {
    throw std::invalid_argument("write_wav: sample rate must be positive");
  }
  const std::uint32_t rate = static_cast<std::uint32_t>(clip.sample_rate);
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(clip.samples.size() * 2);

  std::string out;
  out.reserve(44 + data_bytes);
  out.append("RIFF");
  put_u32(&out, 36 + data_bytes);
  out.append("WAVE");
  out.append("fmt ");
  put_u32(&out, 16);
  put_u16(&out, kFormatPcm);
  put_u16(&out, 1);  // mono
  put_u32(&out, rate);
  put_u32(&out, rate * 2);  // byte rate
  put_u16(&out, 2);         // block align
  put_u16(&out, 16);        // bits per sample
  out.append("data");
  put_u32(&out, data_bytes);
  for (float sample : clip.samples) {
    double v = static_cast<double>(sample);
    if (v > 1.0) v = 1.0;
    if (v < -1.0) v = -1.0;
    const auto q = static_cast<std::int16_t>(std::lrint(v * 32767.0));
    put_u16(&out, static_cast<std::uint16_t>(q));
  }

  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("write_wav: cannot open for writing: " + path.string());
  }
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) {
    throw std::runtime_error("write_wav: write failed: " + path.string());
  }
}

}  // namespace augeval

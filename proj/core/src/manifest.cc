// core/src/manifest.cc

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

#include "augeval/manifest.h"

#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace augeval {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::filesystem::path& path, std::size_t line,
                          const std::string& what) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + what);
}

std::string require_string(const json& j, const char* field,
                           const std::filesystem::path& path, std::size_t line) {
  auto it = j.find(field);
  if (it == j.end() || !it->is_string()) {
    fail_at(path, line, std::string("missing field '") + field + "'");
  }
  return it->get<std::string>();
}

}  // namespace

std::string to_string(Cohort c) {
  switch (c) {
    case Cohort::patient: return "patient";
    case Cohort::control: return "control";
    case Cohort::synthetic: return "synthetic";
  }
  throw std::invalid_argument("bad cohort value");
}

std::string to_string(PromptSource s) {
  switch (s) {
    case PromptSource::LIT1: return "LIT1";
    case PromptSource::LIT2: return "LIT2";
    case PromptSource::LIT3: return "LIT3";
    case PromptSource::LIT4: return "LIT4";
    case PromptSource::LIT5: return "LIT5";
    case PromptSource::LIT6: return "LIT6";
    case PromptSource::NEWS: return "NEWS";
    case PromptSource::EXTERNAL: return "EXTERNAL";
  }
  throw std::invalid_argument("bad prompt source value");
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::original: return "original";
    case Provenance::time_stretch: return "time_stretch";
    case Provenance::speed_perturb: return "speed_perturb";
    case Provenance::vtlp: return "vtlp";
    case Provenance::knnvc: return "knnvc";
    case Provenance::tts: return "tts";
  }
  throw std::invalid_argument("bad provenance value");
}

Cohort parse_cohort(const std::string& s) {
  if (s == "patient") return Cohort::patient;
  if (s == "control") return Cohort::control;
  if (s == "synthetic") return Cohort::synthetic;
  throw std::invalid_argument("unknown cohort: '" + s + "'");
}

PromptSource parse_prompt_source(const std::string& s) {
  static const std::pair<const char*, PromptSource> table[] = {
      {"LIT1", PromptSource::LIT1}, {"LIT2", PromptSource::LIT2},
      {"LIT3", PromptSource::LIT3}, {"LIT4", PromptSource::LIT4},
      {"LIT5", PromptSource::LIT5}, {"LIT6", PromptSource::LIT6},
      {"NEWS", PromptSource::NEWS}, {"EXTERNAL", PromptSource::EXTERNAL}};
  for (const auto& [name, value] : table) {
    if (s == name) return value;
  }
  throw std::invalid_argument("unknown prompt source: '" + s + "'");
}

Provenance parse_provenance(const std::string& s) {
  static const std::pair<const char*, Provenance> table[] = {
      {"original", Provenance::original},
      {"time_stretch", Provenance::time_stretch},
      {"speed_perturb", Provenance::speed_perturb},
      {"vtlp", Provenance::vtlp},
      {"knnvc", Provenance::knnvc},
      {"tts", Provenance::tts}};
  for (const auto& [name, value] : table) {
    if (s == name) return value;
  }
  throw std::invalid_argument("unknown provenance: '" + s + "'");
}

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open manifest: " + path.string());
  }
  const std::filesystem::path base = path.has_parent_path()
                                         ? path.parent_path()
                                         : std::filesystem::path(".");
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      fail_at(path, line_no, std::string("parse error: ") + e.what());
    }
    if (!j.is_object()) fail_at(path, line_no, "record is not an object");

    ManifestEntry e;
    e.utterance_id = require_string(j, "utterance_id", path, line_no);
    e.speaker_id = require_string(j, "speaker_id", path, line_no);
    e.reference_text = require_string(j, "reference_text", path, line_no);
    e.prompt_id = require_string(j, "prompt_id", path, line_no);
    e.audio_path = require_string(j, "audio_path", path, line_no);
    try {
      e.cohort = parse_cohort(require_string(j, "cohort", path, line_no));
      e.prompt_source =
          parse_prompt_source(require_string(j, "prompt_source", path, line_no));
      e.provenance =
          parse_provenance(require_string(j, "provenance", path, line_no));
    } catch (const std::invalid_argument& err) {
      fail_at(path, line_no, err.what());
    }
    auto dur = j.find("duration_s");
    if (dur == j.end() || !dur->is_number()) {
      fail_at(path, line_no, "missing field 'duration_s'");
    }
    e.duration_s = dur->get<double>();
    if (e.duration_s < 0) fail_at(path, line_no, "duration_s must be nonnegative");
    if (e.utterance_id.empty()) fail_at(path, line_no, "empty utterance_id");
    if (e.speaker_id.empty()) fail_at(path, line_no, "empty speaker_id");

    std::filesystem::path audio(e.audio_path);
    if (audio.is_relative()) e.audio_path = (base / audio).lexically_normal().string();
    entries.push_back(std::move(e));
  }
  try {
    validate_manifest(entries);
  } catch (const std::runtime_error& err) {
    throw std::runtime_error(path.string() + ": " + err.what());
  }
  return entries;
}

void save_manifest(const std::vector<ManifestEntry>& entries,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write manifest: " + path.string());
  }
  const std::filesystem::path base =
      path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const std::filesystem::path abs_base = std::filesystem::absolute(base);
  for (const ManifestEntry& e : entries) {
    std::filesystem::path audio(e.audio_path);
    std::error_code ec;
    std::filesystem::path rel =
        std::filesystem::relative(std::filesystem::absolute(audio), abs_base, ec);
    const std::string stored = (!ec && !rel.empty()) ? rel.generic_string()
                                                     : audio.generic_string();
    json j;
    j["utterance_id"] = e.utterance_id;
    j["speaker_id"] = e.speaker_id;
    j["cohort"] = to_string(e.cohort);
    j["prompt_id"] = e.prompt_id;
    j["prompt_source"] = to_string(e.prompt_source);
    j["reference_text"] = e.reference_text;
    j["audio_path"] = stored;
    j["duration_s"] = e.duration_s;
    j["provenance"] = to_string(e.provenance);
    out << j.dump() << '\n';
  }
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

void validate_manifest(const std::vector<ManifestEntry>& entries) {
  std::unordered_set<std::string> seen;
  seen.reserve(entries.size());
  for (const ManifestEntry& e : entries) {
    if (!seen.insert(e.utterance_id).second) {
      throw std::runtime_error("duplicate utterance_id: '" + e.utterance_id + "'");
    }
    const bool synthetic_prov =
        e.provenance == Provenance::knnvc || e.provenance == Provenance::tts;
    if ((e.cohort == Cohort::synthetic) != synthetic_prov) {
      throw std::runtime_error(
          "utterance '" + e.utterance_id +
          "': cohort 'synthetic' is required exactly for knnvc/tts provenance");
    }
    if (e.prompt_source == PromptSource::EXTERNAL &&
        e.provenance != Provenance::tts) {
      throw std::runtime_error("utterance '" + e.utterance_id +
                               "': EXTERNAL prompts are only valid for tts entries");
    }
    if (e.duration_s < 0) {
      throw std::runtime_error("utterance '" + e.utterance_id +
                               "': negative duration");
    }
  }
}

}  // namespace augeval

// core/src/campaign.cc

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

#include "augeval/campaign.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "json.hpp"

#include "augeval/audio.h"
#include "augeval/pairing.h"
#include "augeval/resample.h"
#include "augeval/rng.h"
#include "augeval/wav_io.h"

namespace augeval {
namespace {

namespace fs = std::filesystem;

std::string format_factor(double factor) {
  std::ostringstream out;
  out << factor;
  return out.str();
}

void warn_clamped(const std::string& utterance_id, std::size_t n) {
  if (n == 0) return;
  std::ostringstream msg;
  msg << "warning: " << utterance_id << ": clamped " << n << " samples to [-1, 1]\n";
  std::cerr << msg.str();
}

fs::path absolute_norm(const fs::path& path) {
  return fs::absolute(path).lexically_normal();
}

// Per-utterance work shared by the audio-warping methods: read, transform,
// clamp, write, describe.
ManifestEntry derive_audio_entry(const ManifestEntry& source, const AugmentSpec& spec,
                                 const fs::path& audio_dir) {
  AudioClip clip = read_wav(source.audio_path);
  validate_audio(clip);

  AudioClip out;
  std::string suffix;
  Provenance provenance = Provenance::original;
  switch (spec.method) {
    case AugmentMethod::kTimeStretch:
      out = time_stretch(clip, StretchFactor(*spec.factor));
      suffix = "_ts" + format_factor(*spec.factor);
      provenance = Provenance::time_stretch;
      break;
    case AugmentMethod::kSpeedPerturb:
      out = speed_perturb(clip, StretchFactor(*spec.factor));
      suffix = "_sp" + format_factor(*spec.factor);
      provenance = Provenance::speed_perturb;
      break;
    case AugmentMethod::kVtlp: {
      VtlpConfig cfg = *spec.vtlp;
      // Every utterance draws its own warp factor, reproducibly.
      cfg.seed = derive_seed(spec.vtlp->seed, source.utterance_id);
      out = vtlp(clip, cfg);
      suffix = "_vtlp";
      provenance = Provenance::vtlp;
      break;
    }
    default:
      throw std::logic_error("derive_audio_entry: not an audio method");
  }
  warn_clamped(source.utterance_id, clamp_to_unit(&out));

  ManifestEntry entry = source;
  entry.utterance_id = source.utterance_id + suffix;
  entry.provenance = provenance;
  const fs::path out_path = audio_dir / (entry.utterance_id + ".wav");
  write_wav(out_path, out);
  entry.audio_path = absolute_norm(out_path).string();
  entry.duration_s = out.duration_s();
  return entry;
}

struct KnnContext {
  std::map<std::string, std::string> pairing;          // source -> target speaker
  std::map<std::string, FeatureSequence> target_pools; // target speaker -> pool
};

KnnContext prepare_knn(const std::vector<ManifestEntry>& manifest,
                       const std::vector<const ManifestEntry*>& targeted,
                       const AugmentSpec& spec) {
  KnnContext ctx;

  std::vector<std::string> sources;
  std::vector<std::string> pool_speakers;
  const Cohort pool_cohort =
      spec.target_cohort == Cohort::patient ? Cohort::control : Cohort::patient;
  for (const ManifestEntry& entry : manifest) {
    if (entry.provenance != Provenance::original) continue;
    if (entry.cohort == spec.target_cohort) sources.push_back(entry.speaker_id);
    if (entry.cohort == pool_cohort) pool_speakers.push_back(entry.speaker_id);
  }

  if (!spec.pairing_file.empty() && fs::exists(spec.pairing_file)) {
    ctx.pairing = load_pairing(spec.pairing_file);
  } else {
    ctx.pairing = pair_speakers(sources, pool_speakers, spec.pairing_seed);
    if (!spec.pairing_file.empty()) save_pairing(ctx.pairing, spec.pairing_file);
  }

  std::set<std::string> needed;
  for (const ManifestEntry* entry : targeted) {
    auto it = ctx.pairing.find(entry->speaker_id);
    if (it == ctx.pairing.end()) {
      throw std::invalid_argument("pairing has no target for speaker: " + entry->speaker_id);
    }
    needed.insert(it->second);
  }

  // Pool = every feature file available for the target speaker's original
  // recordings in the manifest slice we were given.
  for (const std::string& speaker : needed) {
    FeatureSequence pool;
    pool.utterance_id = speaker;
    for (const ManifestEntry& entry : manifest) {
      if (entry.speaker_id != speaker || entry.provenance != Provenance::original) continue;
      const fs::path path = spec.features_dir / (entry.utterance_id + ".feat");
      if (!fs::exists(path)) continue;
      FeatureSequence part = load_features(path);
      if (pool.feature_dim == 0) {
        pool.feature_dim = part.feature_dim;
        pool.frame_rate = part.frame_rate;
      } else if (pool.feature_dim != part.feature_dim) {
        throw std::runtime_error("inconsistent feature dimension in pool of speaker " +
                                 speaker + ": " + path.string());
      }
      pool.values.insert(pool.values.end(), part.values.begin(), part.values.end());
    }
    if (pool.values.empty()) {
      throw std::runtime_error("no feature files for target speaker " + speaker + " under " +
                               spec.features_dir.string());
    }
    ctx.target_pools.emplace(speaker, std::move(pool));
  }
  return ctx;
}

ManifestEntry derive_knn_entry(const ManifestEntry& source, const AugmentSpec& spec,
                               const KnnContext& ctx, const fs::path& features_out_dir) {
  const fs::path source_path = spec.features_dir / (source.utterance_id + ".feat");
  if (!fs::exists(source_path)) {
    throw std::runtime_error("missing features for utterance " + source.utterance_id +
                             ": " + source_path.string());
  }
  FeatureSequence features = load_features(source_path);
  features.utterance_id = source.utterance_id;

  const FeatureSequence& pool = ctx.target_pools.at(ctx.pairing.at(source.speaker_id));
  FeatureSequence matched = knn_match(features, pool, *spec.knn);

  ManifestEntry entry = source;
  entry.utterance_id = source.utterance_id + "_knnvc";
  entry.cohort = Cohort::synthetic;
  entry.provenance = Provenance::knnvc;
  const fs::path out_path = features_out_dir / (entry.utterance_id + ".feat");
  save_features(matched, out_path);
  entry.audio_path = absolute_norm(out_path).string();
  entry.duration_s = matched.frame_rate > 0.0
                         ? static_cast<double>(matched.n_frames()) / matched.frame_rate
                         : 0.0;
  return entry;
}

void run_workers(std::size_t n_items, int jobs, const std::function<void(std::size_t)>& work) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto loop = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n_items) return;
      try {
        work(i);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
        next.store(n_items);  // drain remaining work
        return;
      }
    }
  };

  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(n_items)));
  if (n_threads == 1) {
    loop();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(loop);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

AugmentMethod parse_augment_method(const std::string& text) {
  if (text == "time_stretch") return AugmentMethod::kTimeStretch;
  if (text == "speed_perturb") return AugmentMethod::kSpeedPerturb;
  if (text == "vtlp") return AugmentMethod::kVtlp;
  if (text == "knnvc") return AugmentMethod::kKnnVc;
  if (text == "tts_ingest") return AugmentMethod::kTtsIngest;
  throw std::invalid_argument("unknown augmentation method: " + text);
}

std::string to_string(AugmentMethod method) {
  switch (method) {
    case AugmentMethod::kTimeStretch: return "time_stretch";
    case AugmentMethod::kSpeedPerturb: return "speed_perturb";
    case AugmentMethod::kVtlp: return "vtlp";
    case AugmentMethod::kKnnVc: return "knnvc";
    case AugmentMethod::kTtsIngest: return "tts_ingest";
  }
  throw std::logic_error("unreachable");
}

void validate_spec(const AugmentSpec& spec) {
  const std::string name = to_string(spec.method);
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(name + " requires " + what);
  };
  auto forbid = [&](bool absent, const std::string& what) {
    if (!absent) throw std::invalid_argument(name + " does not use " + what);
  };

  switch (spec.method) {
    case AugmentMethod::kTimeStretch:
    case AugmentMethod::kSpeedPerturb:
      require(spec.factor.has_value(), "a stretch factor");
      StretchFactor(*spec.factor);  // range check
      forbid(!spec.vtlp.has_value(), "vtlp settings");
      forbid(!spec.knn.has_value(), "knn settings");
      forbid(spec.clips_dir.empty() && spec.prompts_file.empty(), "tts inputs");
      break;
    case AugmentMethod::kVtlp:
      require(spec.vtlp.has_value(), "vtlp settings");
      forbid(!spec.factor.has_value(), "a stretch factor");
      forbid(!spec.knn.has_value(), "knn settings");
      forbid(spec.clips_dir.empty() && spec.prompts_file.empty(), "tts inputs");
      break;
    case AugmentMethod::kKnnVc:
      require(spec.knn.has_value(), "knn settings");
      require(!spec.features_dir.empty(), "a features directory");
      forbid(!spec.factor.has_value(), "a stretch factor");
      forbid(!spec.vtlp.has_value(), "vtlp settings");
      forbid(spec.clips_dir.empty() && spec.prompts_file.empty(), "tts inputs");
      break;
    case AugmentMethod::kTtsIngest:
      require(!spec.clips_dir.empty(), "a clips directory");
      require(!spec.prompts_file.empty(), "a prompts file");
      forbid(!spec.factor.has_value(), "a stretch factor");
      forbid(!spec.vtlp.has_value(), "vtlp settings");
      forbid(!spec.knn.has_value(), "knn settings");
      break;
  }
  if (spec.method != AugmentMethod::kTtsIngest && spec.target_cohort == Cohort::synthetic) {
    throw std::invalid_argument("target cohort must be patient or control");
  }
}

std::string describe_spec(const AugmentSpec& spec) {
  nlohmann::ordered_json doc;
  doc["method"] = to_string(spec.method);
  switch (spec.method) {
    case AugmentMethod::kTimeStretch:
    case AugmentMethod::kSpeedPerturb:
      doc["target_cohort"] = to_string(spec.target_cohort);
      doc["factor"] = *spec.factor;
      break;
    case AugmentMethod::kVtlp:
      doc["target_cohort"] = to_string(spec.target_cohort);
      doc["vtlp"] = {{"warp_lo", spec.vtlp->warp_lo},
                     {"warp_hi", spec.vtlp->warp_hi},
                     {"boundary_hz", spec.vtlp->boundary_hz},
                     {"seed", spec.vtlp->seed},
                     {"n_fft", spec.vtlp->n_fft},
                     {"hop", spec.vtlp->hop}};
      break;
    case AugmentMethod::kKnnVc:
      doc["target_cohort"] = to_string(spec.target_cohort);
      doc["knn"] = {{"k", spec.knn->k},
                    {"similarity", to_string(spec.knn->similarity)},
                    {"feature_dim", spec.knn->feature_dim}};
      doc["pairing_seed"] = spec.pairing_seed;
      doc["features_dir"] = spec.features_dir.generic_string();
      doc["pairing_file"] = spec.pairing_file.generic_string();
      break;
    case AugmentMethod::kTtsIngest:
      doc["clips_dir"] = spec.clips_dir.generic_string();
      doc["prompts_file"] = spec.prompts_file.generic_string();
      doc["speaker_map_file"] = spec.speaker_map_file.generic_string();
      break;
  }
  return doc.dump(2);
}

std::vector<ManifestEntry> run_augmentation(const std::vector<ManifestEntry>& manifest,
                                            const AugmentSpec& spec,
                                            const std::filesystem::path& out_dir) {
  validate_spec(spec);

  std::vector<ManifestEntry> result = manifest;
  if (spec.method == AugmentMethod::kTtsIngest) {
    const std::vector<ManifestEntry> fresh =
        ingest_tts(spec.clips_dir, spec.prompts_file, spec.speaker_map_file, out_dir);
    result.insert(result.end(), fresh.begin(), fresh.end());
    validate_manifest(result);
    return result;
  }

  std::vector<const ManifestEntry*> targeted;
  for (const ManifestEntry& entry : manifest) {
    if (entry.provenance == Provenance::original && entry.cohort == spec.target_cohort) {
      targeted.push_back(&entry);
    }
  }
  if (targeted.empty()) return result;

  const fs::path audio_dir = out_dir / "audio";
  const fs::path features_out_dir = out_dir / "features";
  KnnContext knn_ctx;
  if (spec.method == AugmentMethod::kKnnVc) {
    fs::create_directories(features_out_dir);
    knn_ctx = prepare_knn(manifest, targeted, spec);
  } else {
    fs::create_directories(audio_dir);
  }

  std::vector<ManifestEntry> fresh(targeted.size());
  run_workers(targeted.size(), spec.jobs, [&](std::size_t i) {
    if (spec.method == AugmentMethod::kKnnVc) {
      fresh[i] = derive_knn_entry(*targeted[i], spec, knn_ctx, features_out_dir);
    } else {
      fresh[i] = derive_audio_entry(*targeted[i], spec, audio_dir);
    }
  });

  result.insert(result.end(), std::make_move_iterator(fresh.begin()),
                std::make_move_iterator(fresh.end()));
  validate_manifest(result);
  return result;
}

std::vector<ManifestEntry> ingest_tts(const std::filesystem::path& clips_dir,
                                      const std::filesystem::path& prompts_file,
                                      const std::filesystem::path& speaker_map_file,
                                      const std::filesystem::path& out_dir) {
  if (!fs::is_directory(clips_dir)) {
    throw std::runtime_error("clips directory does not exist: " + clips_dir.string());
  }

  std::vector<std::string> prompts;
  {
    std::ifstream in(prompts_file, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot open prompts file: " + prompts_file.string());
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      prompts.push_back(line);
    }
  }

  std::map<std::string, std::string> speaker_map;
  if (!speaker_map_file.empty()) speaker_map = load_pairing(speaker_map_file);

  struct Clip {
    std::string speaker;
    std::size_t index;
    fs::path path;
  };
  std::vector<Clip> clips;
  std::vector<fs::path> voices;
  for (const fs::directory_entry& item : fs::directory_iterator(clips_dir)) {
    if (item.is_directory()) voices.push_back(item.path());
  }
  std::sort(voices.begin(), voices.end());
  for (const fs::path& voice_dir : voices) {
    const std::string voice = voice_dir.filename().string();
    auto mapped = speaker_map.find(voice);
    const std::string speaker = mapped == speaker_map.end() ? voice : mapped->second;
    for (const fs::directory_entry& item : fs::directory_iterator(voice_dir)) {
      if (!item.is_regular_file() || item.path().extension() != ".wav") continue;
      const std::string stem = item.path().stem().string();
      const bool numeric =
          !stem.empty() && std::all_of(stem.begin(), stem.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
          });
      if (!numeric) {
        throw std::runtime_error("clip name is not a prompt index: " + item.path().string());
      }
      clips.push_back(Clip{speaker, static_cast<std::size_t>(std::stoull(stem)), item.path()});
    }
  }
  std::sort(clips.begin(), clips.end(), [](const Clip& a, const Clip& b) {
    if (a.speaker != b.speaker) return a.speaker < b.speaker;
    return a.index < b.index;
  });
  if (clips.empty()) return {};

  const fs::path audio_dir = out_dir / "audio";
  fs::create_directories(audio_dir);

  std::vector<ManifestEntry> entries(clips.size());
  std::unordered_set<std::string> ids;
  for (const Clip& clip : clips) {
    if (!ids.insert(clip.speaker + "/" + std::to_string(clip.index)).second) {
      throw std::runtime_error("two voices map to the same speaker/index: " + clip.speaker +
                               "/" + std::to_string(clip.index));
    }
  }

  run_workers(clips.size(), 1, [&](std::size_t i) {
    const Clip& clip = clips[i];
    if (clip.index == 0 || clip.index > prompts.size() || prompts[clip.index - 1].empty()) {
      throw std::runtime_error("no prompt text for clip: " + clip.path.string());
    }
    AudioClip audio = read_wav(clip.path);
    if (audio.sample_rate != kCanonicalSampleRate) {
      audio = resample(audio, kCanonicalSampleRate);
    }

    ManifestEntry entry;
    entry.utterance_id = "tts_" + clip.speaker + "_" + std::to_string(clip.index);
    entry.speaker_id = clip.speaker;
    entry.cohort = Cohort::synthetic;
    entry.prompt_id = "EXT-" + std::to_string(clip.index);
    entry.prompt_source = PromptSource::EXTERNAL;
    entry.reference_text = prompts[clip.index - 1];
    entry.provenance = Provenance::tts;
    const fs::path out_path = audio_dir / (entry.utterance_id + ".wav");
    write_wav(out_path, audio);
    entry.audio_path = absolute_norm(out_path).string();
    entry.duration_s = audio.duration_s();
    entries[i] = std::move(entry);
  });
  return entries;
}

}  // namespace augeval

// core/src/wer.cc

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

#include "augeval/wer.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace augeval {
namespace {

enum class Step : std::uint8_t { kMatch, kSub, kDel, kIns };

}  // namespace

EditCounts wer_counts(const std::vector<std::string>& reference,
                      const std::vector<std::string>& hypothesis) {
  if (reference.empty()) {
    throw std::invalid_argument("wer_counts: empty reference");
  }
  const std::size_t n = reference.size();
  const std::size_t m = hypothesis.size();

  // Full DP matrix with a step trace; utterances are short so the quadratic
  // memory is irrelevant next to a stable, reproducible S/D/I split.
  std::vector<std::int32_t> cost((n + 1) * (m + 1));
  std::vector<Step> step((n + 1) * (m + 1));
  auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };

  for (std::size_t i = 1; i <= n; ++i) {
    cost[at(i, 0)] = static_cast<std::int32_t>(i);
    step[at(i, 0)] = Step::kDel;
  }
  for (std::size_t j = 1; j <= m; ++j) {
    cost[at(0, j)] = static_cast<std::int32_t>(j);
    step[at(0, j)] = Step::kIns;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const bool same = reference[i - 1] == hypothesis[j - 1];
      const std::int32_t diag = cost[at(i - 1, j - 1)] + (same ? 0 : 1);
      const std::int32_t del = cost[at(i - 1, j)] + 1;
      const std::int32_t ins = cost[at(i, j - 1)] + 1;
      // Prefer the diagonal, then deletion, then insertion.
      std::int32_t best = diag;
      Step how = same ? Step::kMatch : Step::kSub;
      if (del < best) {
        best = del;
        how = Step::kDel;
      }
      if (ins < best) {
        best = ins;
        how = Step::kIns;
      }
      cost[at(i, j)] = best;
      step[at(i, j)] = how;
    }
  }

  EditCounts counts;
  counts.ref_len = static_cast<std::int64_t>(n);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    switch (step[at(i, j)]) {
      case Step::kMatch:
        --i;
        --j;
        break;
      case Step::kSub:
        ++counts.substitutions;
        --i;
        --j;
        break;
      case Step::kDel:
        ++counts.deletions;
        --i;
        break;
      case Step::kIns:
        ++counts.insertions;
        --j;
        break;
    }
  }
  return counts;
}

std::vector<Hypothesis> load_hypotheses(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open hypothesis file: " + path.string());
  }
  std::vector<Hypothesis> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t cut = line.find_first_of(" \t");
    std::string id = line.substr(0, cut == std::string::npos ? line.size() : cut);
    if (id.empty()) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": missing utterance id");
    }
    if (!seen.insert(id).second) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": duplicate utterance id: " + id);
    }
    std::string text;
    if (cut != std::string::npos) {
      std::size_t start = line.find_first_not_of(" \t", cut);
      if (start != std::string::npos) text = line.substr(start);
    }
    out.push_back(Hypothesis{std::move(id), std::move(text)});
  }
  return out;
}

WerReport score_run(const std::vector<ManifestEntry>& references,
                    const std::vector<Hypothesis>& hypotheses,
                    const NormalizationConfig& cfg) {
  std::unordered_map<std::string, const ManifestEntry*> by_id;
  by_id.reserve(references.size());
  for (const ManifestEntry& entry : references) {
    by_id.emplace(entry.utterance_id, &entry);
  }

  WerReport report;
  report.per_utterance.reserve(hypotheses.size());
  for (const Hypothesis& hyp : hypotheses) {
    auto it = by_id.find(hyp.utterance_id);
    if (it == by_id.end()) {
      throw std::invalid_argument("score_run: hypothesis for unknown utterance: " +
                                  hyp.utterance_id);
    }
    const ManifestEntry& ref = *it->second;
    const std::vector<std::string> ref_tokens = tokenize(normalize(ref.reference_text, cfg));
    if (ref_tokens.empty()) {
      throw std::invalid_argument("score_run: reference is empty after normalization: " +
                                  ref.utterance_id);
    }
    const std::vector<std::string> hyp_tokens = tokenize(normalize(hyp.text, cfg));

    UtteranceScore score;
    score.utterance_id = hyp.utterance_id;
    score.speaker_id = ref.speaker_id;
    score.counts = wer_counts(ref_tokens, hyp_tokens);
    score.wer = score.counts.rate();
    report.per_utterance.push_back(std::move(score));
  }
  std::sort(report.per_utterance.begin(), report.per_utterance.end(),
            [](const UtteranceScore& a, const UtteranceScore& b) {
              return a.utterance_id < b.utterance_id;
            });

  std::map<std::string, double> wer_sums;
  for (const UtteranceScore& score : report.per_utterance) {
    SpeakerScore& agg = report.per_speaker[score.speaker_id];
    agg.n_utterances += 1;
    agg.errors += score.counts.errors();
    agg.ref_len += score.counts.ref_len;
    wer_sums[score.speaker_id] += score.wer;
  }
  double mean_sum = 0.0;
  double pooled_sum = 0.0;
  for (auto& [speaker, agg] : report.per_speaker) {
    agg.mean_wer = wer_sums[speaker] / static_cast<double>(agg.n_utterances);
    agg.pooled_wer = agg.ref_len > 0
                         ? static_cast<double>(agg.errors) / static_cast<double>(agg.ref_len)
                         : 0.0;
    mean_sum += agg.mean_wer;
    pooled_sum += agg.pooled_wer;
  }
  if (!report.per_speaker.empty()) {
    const double n = static_cast<double>(report.per_speaker.size());
    report.overall_mean = mean_sum / n;
    report.overall_pooled = pooled_sum / n;
  }
  return report;
}

void write_report_json(const WerReport& report, const std::filesystem::path& path) {
  nlohmann::ordered_json doc;
  doc["overall"] = {{"mean_wer", report.overall_mean},
                    {"pooled_wer", report.overall_pooled},
                    {"n_speakers", report.per_speaker.size()},
                    {"n_utterances", report.per_utterance.size()}};
  nlohmann::ordered_json speakers = nlohmann::ordered_json::object();
  for (const auto& [speaker, agg] : report.per_speaker) {
    speakers[speaker] = {{"n_utterances", agg.n_utterances},
                         {"errors", agg.errors},
                         {"ref_len", agg.ref_len},
                         {"mean_wer", agg.mean_wer},
                         {"pooled_wer", agg.pooled_wer}};
  }
  doc["per_speaker"] = std::move(speakers);
  nlohmann::ordered_json utts = nlohmann::ordered_json::array();
  for (const UtteranceScore& score : report.per_utterance) {
    utts.push_back({{"utterance_id", score.utterance_id},
                    {"speaker_id", score.speaker_id},
                    {"substitutions", score.counts.substitutions},
                    {"deletions", score.counts.deletions},
                    {"insertions", score.counts.insertions},
                    {"ref_len", score.counts.ref_len},
                    {"wer", score.wer}});
  }
  doc["per_utterance"] = std::move(utts);

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write report: " + path.string());
  }
  out << doc.dump(2) << '\n';
}

void write_report_table(const WerReport& report, std::ostream& out) {
  std::size_t width = 7;  // fits "speaker" and "OVERALL"
  for (const auto& [speaker, agg] : report.per_speaker) {
    width = std::max(width, speaker.size());
  }
  std::ostringstream line;
  line << std::left << std::setw(static_cast<int>(width)) << "speaker" << std::right
       << std::setw(7) << "utts" << std::setw(9) << "errors" << std::setw(9) << "ref"
       << std::setw(10) << "mean" << std::setw(10) << "pooled";
  out << line.str() << '\n';
  out << std::string(line.str().size(), '-') << '\n';
  auto pct = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << 100.0 * v << '%';
    return s.str();
  };
  for (const auto& [speaker, agg] : report.per_speaker) {
    out << std::left << std::setw(static_cast<int>(width)) << speaker << std::right
        << std::setw(7) << agg.n_utterances << std::setw(9) << agg.errors << std::setw(9)
        << agg.ref_len << std::setw(10) << pct(agg.mean_wer) << std::setw(10)
        << pct(agg.pooled_wer) << '\n';
  }
  out << std::left << std::setw(static_cast<int>(width)) << "OVERALL" << std::right
      << std::setw(7) << report.per_utterance.size() << std::setw(9) << "" << std::setw(9)
      << "" << std::setw(10) << pct(report.overall_mean) << std::setw(10)
      << pct(report.overall_pooled) << '\n';
}

}  // namespace augeval

// core/include/augeval/correction.h

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

#ifndef AUGEVAL_CORRECTION_H_
#define AUGEVAL_CORRECTION_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "augeval/manifest.h"
#include "augeval/normalize.h"
#include "augeval/wer.h"

namespace augeval {

struct CorrectionConfig {
  std::string model_name;
  double temperature = 0.0;
  int max_tokens = 400;
  int n_runs = 3;
  std::string endpoint_url;  // full URL of a chat-completion route
  double timeout_s = 30.0;
  std::string language_label = "Dutch";
  std::string api_key;     // sent as a bearer token when non-empty
  int max_in_flight = 4;   // concurrent requests
  int max_attempts = 2;    // tries per request before fallback
  double backoff_s = 0.5;  // doubles after every failed attempt
};

void validate_correction_config(const CorrectionConfig& cfg);

struct ParsedUrl {
  bool tls = false;
  std::string host;
  int port = 0;
  std::string path;
};

// Accepts http:// and https:// URLs with optional port and path.
ParsedUrl parse_url(const std::string& url);
bool is_loopback_host(const std::string& host);

// Fills the correction prompt template with the hypothesis and language
// label. Throws std::invalid_argument on an empty hypothesis.
std::string build_prompt(const std::string& hypothesis, const CorrectionConfig& cfg);

// Content of the last well-formed [...] span, trimmed; nullopt when the
// response contains no such span (the caller then scores the original).
std::optional<std::string> extract_correction(const std::string& response_text);

// The exact JSON body sent for one hypothesis; byte-stable for identical
// config and hypothesis.
std::string chat_request_body(const std::string& hypothesis, const CorrectionConfig& cfg);

struct RunAttempt {
  bool fallback = true;
  std::string corrected;     // text to score; equals the original on fallback
  std::string raw_response;  // response body, or the failure description
};

struct CorrectionRecord {
  std::string utterance_id;
  std::string original;
  std::vector<RunAttempt> per_run;  // exactly n_runs entries
};

// Performs cfg.n_runs correction passes over every hypothesis with bounded
// request concurrency. Per-request failures (transport, HTTP status, or an
// answer without brackets) degrade to fallback; only configuration errors
// throw. When audit_log is given, every request/response lands there as one
// JSON line. Records come back sorted by utterance_id.
std::vector<CorrectionRecord> correct_run(const std::vector<Hypothesis>& hypotheses,
                                          const CorrectionConfig& cfg,
                                          std::ostream* audit_log = nullptr);

void save_records(const std::vector<CorrectionRecord>& records,
                  const std::filesystem::path& path);

struct MultiRunReport {
  WerReport uncorrected;           // baseline of the original hypotheses
  std::vector<WerReport> per_run;  // one report per correction pass
  double mean_overall = 0.0;       // mean of per-run overall_mean
  double mean_overall_pooled = 0.0;
};

// Scores every run (and the uncorrected baseline) against the references
// and averages the per-run overall values.
MultiRunReport mean_wer_over_runs(const std::vector<CorrectionRecord>& records,
                                  const std::vector<ManifestEntry>& references,
                                  const NormalizationConfig& norm_cfg = {});

}  // namespace augeval

#endif  // AUGEVAL_CORRECTION_H_

// core/src/correction.cc

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

#include "augeval/correction.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace augeval {
namespace {

constexpr char kTemplateHead[] =
    "The following is the output of an automatic speech recognition system "
    "for an utterance of a speaker with speech pathology in ";
constexpr char kTemplateTail[] =
    "\n\nPlease correct the sentence. Please put the corrected sentence "
    "within square brackets [like this]. If the sentence is already correct, "
    "repeat the sentence within square brackets.";

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && (std::isspace(static_cast<unsigned char>(text[begin])) != 0)) ++begin;
  while (end > begin && (std::isspace(static_cast<unsigned char>(text[end - 1])) != 0)) --end;
  return text.substr(begin, end - begin);
}

}  // namespace

void validate_correction_config(const CorrectionConfig& cfg) {
  if (cfg.model_name.empty()) throw std::invalid_argument("correction: model name is empty");
  if (cfg.n_runs < 1) throw std::invalid_argument("correction: n_runs must be >= 1");
  if (cfg.temperature < 0.0) throw std::invalid_argument("correction: temperature must be >= 0");
  if (cfg.max_tokens <= 0) throw std::invalid_argument("correction: max_tokens must be positive");
  if (cfg.timeout_s <= 0.0) throw std::invalid_argument("correction: timeout must be positive");
  if (cfg.max_in_flight < 1) {
    throw std::invalid_argument("correction: max_in_flight must be >= 1");
  }
  if (cfg.max_attempts < 1) {
    throw std::invalid_argument("correction: max_attempts must be >= 1");
  }
  if (cfg.backoff_s < 0.0) throw std::invalid_argument("correction: backoff must be >= 0");
  parse_url(cfg.endpoint_url);  // throws when malformed
}

ParsedUrl parse_url(const std::string& url) {
  ParsedUrl out;
  std::string rest;
  if (url.rfind("http://", 0) == 0) {
    out.tls = false;
    rest = url.substr(7);
  } else if (url.rfind("https://", 0) == 0) {
    out.tls = true;
    rest = url.substr(8);
  } else {
    throw std::invalid_argument("endpoint URL must start with http:// or https://: " + url);
  }
  const std::size_t slash = rest.find('/');
  std::string hostport = slash == std::string::npos ? rest : rest.substr(0, slash);
  out.path = slash == std::string::npos ? "/" : rest.substr(slash);

  std::string port_text;
  if (!hostport.empty() && hostport.front() == '[') {
    const std::size_t close = hostport.find(']');
    if (close == std::string::npos) {
      throw std::invalid_argument("unterminated IPv6 literal in URL: " + url);
    }
    out.host = hostport.substr(1, close - 1);
    if (close + 1 < hostport.size()) {
      if (hostport[close + 1] != ':') {
        throw std::invalid_argument("malformed authority in URL: " + url);
      }
      port_text = hostport.substr(close + 2);
    }
  } else {
    const std::size_t colon = hostport.rfind(':');
    if (colon == std::string::npos) {
      out.host = hostport;
    } else {
      out.host = hostport.substr(0, colon);
      port_text = hostport.substr(colon + 1);
    }
  }
  if (out.host.empty()) throw std::invalid_argument("URL is missing a host: " + url);
  if (port_text.empty()) {
    out.port = out.tls ? 443 : 80;
  } else {
    try {
      out.port = std::stoi(port_text);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad port in URL: " + url);
    }
    if (out.port < 1 || out.port > 65535) {
      throw std::invalid_argument("port out of range in URL: " + url);
    }
  }
  return out;
}

bool is_loopback_host(const std::string& host) {
  return host == "localhost" || host == "::1" || host.rfind("127.", 0) == 0;
}

std::string build_prompt(const std::string& hypothesis, const CorrectionConfig& cfg) {
  if (hypothesis.empty()) {
    throw std::invalid_argument("build_prompt: empty hypothesis");
  }
  std::string prompt;
  prompt.reserve(sizeof(kTemplateHead) + sizeof(kTemplateTail) + cfg.language_label.size() +
                 hypothesis.size() + 2);
  prompt += kTemplateHead;
  prompt += cfg.language_label;
  prompt += ": ";
  prompt += hypothesis;
  prompt += kTemplateTail;
  return prompt;
}

std::optional<std::string> extract_correction(const std::string& response_text) {
  std::optional<std::string> last;
  std::size_t open = std::string::npos;
  for (std::size_t i = 0; i < response_text.size(); ++i) {
    const char c = response_text[i];
    if (c == '[') {
      open = i;  // the innermost opener wins
    } else if (c == ']' && open != std::string::npos) {
      const std::string content = trim(response_text.substr(open + 1, i - open - 1));
      if (!content.empty()) last = content;
      open = std::string::npos;
    }
  }
  return last;
}

std::string chat_request_body(const std::string& hypothesis, const CorrectionConfig& cfg) {
  nlohmann::ordered_json body;
  body["model"] = cfg.model_name;
  body["messages"] = nlohmann::ordered_json::array(
      {{{"role", "user"}, {"content", build_prompt(hypothesis, cfg)}}});
  body["temperature"] = cfg.temperature;
  body["max_tokens"] = cfg.max_tokens;
  return body.dump();
}

namespace {

struct AuditSink {
  std::ostream* out = nullptr;
  std::mutex mu;

  void log(const std::string& utterance_id, int run, int attempt,
           const std::string& request, const std::string& status,
           const std::string& response) {
    if (out == nullptr) return;
    nlohmann::ordered_json line;
    line["utterance_id"] = utterance_id;
    line["run"] = run;
    line["attempt"] = attempt;
    line["request"] = request;
    line["status"] = status;
    line["response"] = response;
    std::lock_guard<std::mutex> lock(mu);
    (*out) << line.dump() << '\n';
  }
};

RunAttempt request_once(const Hypothesis& hyp, int run, const CorrectionConfig& cfg,
                        const ParsedUrl& url, AuditSink* audit) {
  RunAttempt attempt;
  attempt.fallback = true;
  attempt.corrected = hyp.text;

  if (hyp.text.empty()) {
    attempt.raw_response = "empty hypothesis; no request sent";
    audit->log(hyp.utterance_id, run, 0, "", "skipped", attempt.raw_response);
    return attempt;
  }
  const std::string body = chat_request_body(hyp.text, cfg);

  std::string failure;
  for (int try_no = 1; try_no <= cfg.max_attempts; ++try_no) {
    if (try_no > 1 && cfg.backoff_s > 0.0) {
      const double factor = static_cast<double>(1 << (try_no - 2));
      std::this_thread::sleep_for(std::chrono::duration<double>(cfg.backoff_s * factor));
    }

    const std::string scheme_host_port = (url.tls ? "https://" : "http://") +
                                         (url.host.find(':') != std::string::npos
                                              ? "[" + url.host + "]"
                                              : url.host) +
                                         ":" + std::to_string(url.port);
    httplib::Client client(scheme_host_port);
    const auto sec = static_cast<time_t>(cfg.timeout_s);
    const auto usec = static_cast<time_t>((cfg.timeout_s - static_cast<double>(sec)) * 1e6);
    client.set_connection_timeout(sec, usec);
    client.set_read_timeout(sec, usec);
    client.set_write_timeout(sec, usec);

    httplib::Headers headers;
    if (!cfg.api_key.empty()) headers.emplace("Authorization", "Bearer " + cfg.api_key);

    httplib::Result result = client.Post(url.path, headers, body, "application/json");
    if (!result) {
      failure = "transport error: " + httplib::to_string(result.error());
      audit->log(hyp.utterance_id, run, try_no, body, "transport_error", failure);
      continue;
    }
    if (result->status < 200 || result->status >= 300) {
      failure = "HTTP " + std::to_string(result->status);
      audit->log(hyp.utterance_id, run, try_no, body, std::to_string(result->status),
                 result->body);
      continue;
    }

    std::string content;
    try {
      const nlohmann::json doc = nlohmann::json::parse(result->body);
      content = doc.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      failure = std::string("malformed response: ") + e.what();
      audit->log(hyp.utterance_id, run, try_no, body, std::to_string(result->status),
                 result->body);
      continue;
    }

    audit->log(hyp.utterance_id, run, try_no, body, std::to_string(result->status),
               result->body);
    attempt.raw_response = content;
    // A well-formed answer without brackets is the model's final word:
    // fall back without retrying.
    if (std::optional<std::string> corrected = extract_correction(content)) {
      attempt.fallback = false;
      attempt.corrected = *corrected;
    }
    return attempt;
  }

  attempt.raw_response = failure;
  return attempt;
}

}  // namespace

std::vector<CorrectionRecord> correct_run(const std::vector<Hypothesis>& hypotheses,
                                          const CorrectionConfig& cfg,
                                          std::ostream* audit_log) {
  validate_correction_config(cfg);
  const ParsedUrl url = parse_url(cfg.endpoint_url);

  std::vector<CorrectionRecord> records(hypotheses.size());
  for (std::size_t h = 0; h < hypotheses.size(); ++h) {
    records[h].utterance_id = hypotheses[h].utterance_id;
    records[h].original = hypotheses[h].text;
    records[h].per_run.resize(static_cast<std::size_t>(cfg.n_runs));
  }
  if (hypotheses.empty()) return records;

  AuditSink audit;
  audit.out = audit_log;

  const std::size_t n_tasks = hypotheses.size() * static_cast<std::size_t>(cfg.n_runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= n_tasks) return;
      const std::size_t h = task / static_cast<std::size_t>(cfg.n_runs);
      const int run = static_cast<int>(task % static_cast<std::size_t>(cfg.n_runs));
      records[h].per_run[static_cast<std::size_t>(run)] =
          request_once(hypotheses[h], run, cfg, url, &audit);
    }
  };

  const int n_threads =
      std::max(1, std::min<int>(cfg.max_in_flight, static_cast<int>(n_tasks)));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::sort(records.begin(), records.end(),
            [](const CorrectionRecord& a, const CorrectionRecord& b) {
              return a.utterance_id < b.utterance_id;
            });
  return records;
}

void save_records(const std::vector<CorrectionRecord>& records,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write correction records: " + path.string());
  }
  for (const CorrectionRecord& record : records) {
    nlohmann::ordered_json line;
    line["utterance_id"] = record.utterance_id;
    line["original"] = record.original;
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (const RunAttempt& attempt : record.per_run) {
      runs.push_back({{"fallback", attempt.fallback},
                      {"text", attempt.corrected},
                      {"raw_response", attempt.raw_response}});
    }
    line["runs"] = std::move(runs);
    out << line.dump() << '\n';
  }
}

MultiRunReport mean_wer_over_runs(const std::vector<CorrectionRecord>& records,
                                  const std::vector<ManifestEntry>& references,
                                  const NormalizationConfig& norm_cfg) {
  std::size_t n_runs = 0;
  for (const CorrectionRecord& record : records) {
    n_runs = std::max(n_runs, record.per_run.size());
  }

  MultiRunReport report;
  std::vector<Hypothesis> originals;
  originals.reserve(records.size());
  for (const CorrectionRecord& record : records) {
    originals.push_back(Hypothesis{record.utterance_id, record.original});
  }
  report.uncorrected = score_run(references, originals, norm_cfg);

  for (std::size_t run = 0; run < n_runs; ++run) {
    std::vector<Hypothesis> hyps;
    hyps.reserve(records.size());
    for (const CorrectionRecord& record : records) {
      const std::string& text =
          run < record.per_run.size() ? record.per_run[run].corrected : record.original;
      hyps.push_back(Hypothesis{record.utterance_id, text});
    }
    report.per_run.push_back(score_run(references, hyps, norm_cfg));
  }

  if (!report.per_run.empty()) {
    double mean = 0.0;
    double pooled = 0.0;
    for (const WerReport& run : report.per_run) {
      mean += run.overall_mean;
      pooled += run.overall_pooled;
    }
    report.mean_overall = mean / static_cast<double>(report.per_run.size());
    report.mean_overall_pooled = pooled / static_cast<double>(report.per_run.size());
  }
  return report;
}

}  // namespace augeval

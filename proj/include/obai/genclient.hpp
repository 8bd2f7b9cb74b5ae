#pragma once

#include <string>
#include <utility>
#include <vector>

#include "obai/corpus.hpp"
#include "obai/ingest.hpp"

namespace obai::gen {

// One essay request against a chat-completions-compatible endpoint.
struct GenRequest {
  std::string prompt;
  int target_words = 0;
  std::string model_name;
  std::string endpoint_url;
  double temperature = 1.0;
  int max_retries = 3;
};

// Provenance record written next to every generated text. The API key is
// never stored or logged.
struct GenRecord {
  GenRequest request;
  std::string response_text;
  int word_count = 0;
  std::string timestamp_utc;  // ISO-8601
  int attempt = 1;
  bool length_warning = false;
};

class AuthError : public ConfigError {
 public:
  explicit AuthError(const std::string& what) : ConfigError(what) {}
};

class RetriesExhaustedError : public InputError {
 public:
  explicit RetriesExhaustedError(const std::string& what) : InputError(what) {}
};

class EmptyCompletionError : public InputError {
 public:
  explicit EmptyCompletionError(const std::string& what) : InputError(what) {}
};

struct GenClientOptions {
  // Backoff schedule is unit, 2*unit, 4*unit; tests shrink the unit.
  int backoff_unit_ms = 1000;
};

// Counts words the same way the rest of the pipeline does.
int count_words(const std::string& text);

std::string slugify(const std::string& prompt);

// POSTs {model, messages:[{role:user, content: prompt + length hint}]}
// and returns the first choice. Retries 429/5xx (and transport errors)
// with exponential backoff. Throws AuthError before any request when the
// key is empty, and on 401.
GenRecord generate_essay(const GenRequest& req, const std::string& api_key,
                         const GenClientOptions& opts = {});

// One text + one JSON sidecar per prompt under out_dir, named
// <slug>_<index>.txt. Completions off target by more than tolerance_pct
// are regenerated up to max_retries, then accepted with a warning flag.
Corpus build_matched_corpus(
    const std::vector<std::pair<std::string, int>>& prompts,
    const std::string& out_dir, const GenRequest& request_template,
    const std::string& api_key, double tolerance_pct = 20.0,
    const GenClientOptions& opts = {});

}  // namespace obai::gen

#include "obai/genclient.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace obai::gen {

using nlohmann::json;

namespace {

struct SplitUrl {
  std::string base;  // scheme://host[:port]
  std::string path;
};

SplitUrl split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos)
    throw ConfigError("endpoint URL must be absolute: " + url);
  auto path_start = url.find('/', scheme_end + 3);
  SplitUrl out;
  if (path_start == std::string::npos) {
    out.base = url;
    out.path = "/";
  } else {
    out.base = url.substr(0, path_start);
    out.path = url.substr(path_start);
  }
  return out;
}

std::string utc_now_iso8601() {
  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool retryable_status(int status) {
  return status == 429 || (status >= 500 && status < 600);
}

}  // namespace

int count_words(const std::string& text) {
  IngestConfig cfg;
  try {
    auto sentences = tokenize(text, cfg);
    int words = 0;
    for (const auto& sent : sentences)
      for (const auto& tok : sent.tokens)
        if (tok.is_word) ++words;
    return words;
  } catch (const InputError&) {
    return 0;
  }
}

std::string slugify(const std::string& prompt) {
  std::string slug;
  bool pending_dash = false;
  for (char c : prompt) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc)) {
      if (pending_dash && !slug.empty()) slug.push_back('-');
      pending_dash = false;
      slug.push_back(static_cast<char>(std::tolower(uc)));
    } else {
      pending_dash = true;
    }
    if (slug.size() >= 40) break;
  }
  if (slug.empty()) slug = "prompt";
  return slug;
}

GenRecord generate_essay(const GenRequest& req, const std::string& api_key,
                         const GenClientOptions& opts) {
  if (api_key.empty())
    throw AuthError(
        "no API key configured; set OBAI_API_KEY or pass --api-key");
  if (req.target_words <= 0)
    throw ConfigError("target word count must be positive");

  const SplitUrl url = split_url(req.endpoint_url);

  json body{
      {"model", req.model_name},
      {"messages",
       json::array({json{{"role", "user"},
                         {"content", req.prompt + " Write approximately " +
                                         std::to_string(req.target_words) +
                                         " words."}}})},
      {"temperature", req.temperature},
  };
  const std::string payload = body.dump();

  std::string last_error;
  for (int attempt = 1; attempt <= req.max_retries + 1; ++attempt) {
    if (attempt > 1) {
      int delay = opts.backoff_unit_ms << (attempt - 2);
      std::this_thread::sleep_for(std::chrono::milliseconds(delay));
    }
    httplib::Client client(url.base);
    client.set_connection_timeout(30);
    client.set_read_timeout(120);
    httplib::Headers headers{{"Authorization", "Bearer " + api_key}};
    auto res = client.Post(url.path, headers, payload, "application/json");

    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 401)
      throw AuthError("endpoint rejected the API key (HTTP 401)");
    if (retryable_status(res->status)) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200)
      throw InputError("generation request failed with HTTP " +
                       std::to_string(res->status));

    json parsed = json::parse(res->body, nullptr, false);
    if (parsed.is_discarded())
      throw InputError("endpoint returned malformed JSON");
    std::string content;
    if (parsed.contains("choices") && parsed["choices"].is_array() &&
        !parsed["choices"].empty()) {
      const json& choice = parsed["choices"][0];
      if (choice.contains("message") && choice["message"].contains("content"))
        content = choice["message"]["content"].get<std::string>();
    }
    if (content.empty())
      throw EmptyCompletionError("endpoint returned an empty completion");

    GenRecord rec;
    rec.request = req;
    rec.response_text = content;
    rec.word_count = count_words(content);
    rec.timestamp_utc = utc_now_iso8601();
    rec.attempt = attempt;
    return rec;
  }
  throw RetriesExhaustedError("generation failed after " +
                              std::to_string(req.max_retries + 1) +
                              " attempts (" + last_error + ")");
}

namespace {

json sidecar_json(const GenRecord& rec) {
  return json{{"prompt", rec.request.prompt},
              {"target_words", rec.request.target_words},
              {"model", rec.request.model_name},
              {"endpoint", rec.request.endpoint_url},
              {"temperature", rec.request.temperature},
              {"max_retries", rec.request.max_retries},
              {"response_text", rec.response_text},
              {"word_count", rec.word_count},
              {"timestamp", rec.timestamp_utc},
              {"attempt", rec.attempt},
              {"length_warning", rec.length_warning}};
}

}  // namespace

Corpus build_matched_corpus(
    const std::vector<std::pair<std::string, int>>& prompts,
    const std::string& out_dir, const GenRequest& request_template,
    const std::string& api_key, double tolerance_pct,
    const GenClientOptions& opts) {
  if (prompts.empty()) throw InputError("no prompts given");
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  Corpus corpus;
  corpus.label = "generated";
  int index = 0;
  for (const auto& [prompt, target] : prompts) {
    ++index;
    GenRequest req = request_template;
    req.prompt = prompt;
    req.target_words = target;

    GenRecord rec;
    for (int regen = 0;; ++regen) {
      rec = generate_essay(req, api_key, opts);
      double deviation =
          std::fabs(static_cast<double>(rec.word_count) - target) /
          static_cast<double>(target) * 100.0;
      if (deviation <= tolerance_pct) break;
      if (regen >= req.max_retries) {
        rec.length_warning = true;
        break;
      }
    }

    const std::string stem =
        slugify(prompt) + "_" + std::to_string(index);
    const fs::path text_path = fs::path(out_dir) / (stem + ".txt");
    const fs::path meta_path = fs::path(out_dir) / (stem + ".json");
    {
      std::ofstream out(text_path, std::ios::binary);
      if (!out) throw InputError("cannot write " + text_path.string());
      out << rec.response_text;
      if (!rec.response_text.empty() && rec.response_text.back() != '\n')
        out << "\n";
    }
    {
      std::ofstream out(meta_path, std::ios::binary);
      if (!out) throw InputError("cannot write " + meta_path.string());
      out << sidecar_json(rec).dump(2) << "\n";
    }
    IngestConfig cfg;
    Document doc =
        document_from_text(stem, rec.response_text, cfg, SourceLabel::kAi);
    doc.metadata["origin"] = text_path.string();
    doc.metadata["model"] = req.model_name;
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

}  // namespace obai::gen

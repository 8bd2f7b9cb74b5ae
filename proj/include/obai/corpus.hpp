#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace obai {

// Input or data problems (bad files, empty corpora, missing annotations).
// The CLI maps these to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed file content; carries the offending location in the message.
class ParseError : public InputError {
 public:
  explicit ParseError(const std::string& what) : InputError(what) {}
};

// Bad configuration (missing API key, unknown flags, bad model files).
// The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class SourceLabel { kHuman, kAi, kUnknown };

std::string to_string(SourceLabel label);
SourceLabel source_label_from_string(const std::string& s);

// One surface token. Offsets are byte offsets into Document::raw_text.
// Annotation fields are absent until a tagger/parser (or a CoNLL-U file)
// fills them in. head uses 1-based indices within the sentence, 0 = root.
struct Token {
  std::string surface;
  std::string lower;
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  bool is_word = false;  // true iff surface contains an alphabetic character
  std::optional<std::string> upos;
  std::optional<std::string> xpos;
  std::optional<int> head;
  std::optional<std::string> deprel;

  bool has_upos() const { return upos.has_value(); }
  bool has_head() const { return head.has_value(); }
};

struct Sentence {
  std::vector<Token> tokens;

  bool empty() const { return tokens.empty(); }
  std::size_t size() const { return tokens.size(); }
};

struct Document {
  std::string id;
  SourceLabel source_label = SourceLabel::kUnknown;
  std::string raw_text;
  std::vector<Sentence> sentences;
  std::map<std::string, std::string> metadata;

  std::size_t token_count() const;
  std::size_t word_count() const;  // tokens with is_word
};

struct Corpus {
  std::string label;
  std::vector<Document> documents;
};

// Named non-negative integer counts plus the bases they are measured
// against (total_words, total_tokens, total_consonants, ...).
struct FeatureCounts {
  std::map<std::string, std::int64_t> counts;
  std::map<std::string, std::int64_t> bases;

  std::int64_t count(const std::string& name) const;
  std::int64_t base(const std::string& name) const;
};

// Pointwise sum of counts and bases; missing keys are treated as zero.
FeatureCounts merge_counts(const FeatureCounts& a, const FeatureCounts& b);

// The 17 universal POS tags.
const std::vector<std::string>& upos_inventory();
bool is_valid_upos(const std::string& tag);

// Offset sanity over a document: start < end per token, non-decreasing
// across consecutive tokens, and every range within raw_text.
bool offsets_consistent(const Document& doc);

// Dependency-tree sanity for an annotated sentence: every token has a
// head in range, exactly one root, no self-heads, and no cycles.
bool is_valid_tree(const Sentence& sentence);

// Projectivity: no two arcs cross when drawn above the sentence.
bool is_projective(const Sentence& sentence);

}  // namespace obai

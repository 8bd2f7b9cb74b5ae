#include "obai/corpus.hpp"

#include <algorithm>

namespace obai {

std::string to_string(SourceLabel label) {
  switch (label) {
    case SourceLabel::kHuman:
      return "human";
    case SourceLabel::kAi:
      return "ai";
    case SourceLabel::kUnknown:
      break;
  }
  return "unknown";
}

SourceLabel source_label_from_string(const std::string& s) {
  if (s == "human") return SourceLabel::kHuman;
  if (s == "ai") return SourceLabel::kAi;
  if (s == "unknown") return SourceLabel::kUnknown;
  throw InputError("unknown source label: " + s);
}

std::size_t Document::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

std::size_t Document::word_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences)
    for (const auto& t : s.tokens)
      if (t.is_word) ++n;
  return n;
}

std::int64_t FeatureCounts::count(const std::string& name) const {
  auto it = counts.find(name);
  return it == counts.end() ? 0 : it->second;
}

std::int64_t FeatureCounts::base(const std::string& name) const {
  auto it = bases.find(name);
  return it == bases.end() ? 0 : it->second;
}

FeatureCounts merge_counts(const FeatureCounts& a, const FeatureCounts& b) {
  FeatureCounts out = a;
  for (const auto& [k, v] : b.counts) out.counts[k] += v;
  for (const auto& [k, v] : b.bases) out.bases[k] += v;
  return out;
}

const std::vector<std::string>& upos_inventory() {
  static const std::vector<std::string> kTags = {
      "ADJ",  "ADP",   "ADV",  "AUX",  "CCONJ", "DET",  "INTJ", "NOUN", "NUM",
      "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};
  return kTags;
}

bool is_valid_upos(const std::string& tag) {
  const auto& tags = upos_inventory();
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

bool offsets_consistent(const Document& doc) {
  std::size_t prev_end = 0;
  for (const auto& sent : doc.sentences) {
    for (const auto& tok : sent.tokens) {
      if (tok.char_start >= tok.char_end) return false;
      if (tok.char_start < prev_end) return false;
      if (tok.char_end > doc.raw_text.size()) return false;
      prev_end = tok.char_end;
    }
  }
  return true;
}

bool is_valid_tree(const Sentence& sentence) {
  const int n = static_cast<int>(sentence.size());
  if (n == 0) return false;
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = sentence.tokens[i];
    if (!t.head || !t.deprel) return false;
    int h = *t.head;
    if (h < 0 || h > n) return false;
    if (h == i + 1) return false;  // self-head
    if (h == 0) ++roots;
  }
  if (roots != 1) return false;
  // Cycle check: walk from every node to the root.
  for (int i = 0; i < n; ++i) {
    int steps = 0;
    int cur = i + 1;
    while (cur != 0) {
      cur = *sentence.tokens[cur - 1].head;
      if (++steps > n) return false;
    }
  }
  return true;
}

bool is_projective(const Sentence& sentence) {
  const int n = static_cast<int>(sentence.size());
  for (int d = 1; d <= n; ++d) {
    if (!sentence.tokens[d - 1].head) return false;
    int h = *sentence.tokens[d - 1].head;
    if (h == 0) continue;
    int lo = std::min(h, d), hi = std::max(h, d);
    for (int d2 = 1; d2 <= n; ++d2) {
      int h2 = *sentence.tokens[d2 - 1].head;
      if (h2 == 0) continue;
      int lo2 = std::min(h2, d2), hi2 = std::max(h2, d2);
      // Proper overlap means crossing arcs.
      if (lo < lo2 && lo2 < hi && hi < hi2) return false;
      if (lo2 < lo && lo < hi2 && hi2 < hi) return false;
    }
  }
  return true;
}

}  // namespace obai

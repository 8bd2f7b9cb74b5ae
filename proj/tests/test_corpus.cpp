#include <doctest.h>

#include <random>

#include "obai/corpus.hpp"

using namespace obai;

namespace {

FeatureCounts make_counts(std::initializer_list<std::pair<const char*, std::int64_t>> counts,
                          std::initializer_list<std::pair<const char*, std::int64_t>> bases = {}) {
  FeatureCounts fc;
  for (const auto& [k, v] : counts) fc.counts[k] = v;
  for (const auto& [k, v] : bases) fc.bases[k] = v;
  return fc;
}

FeatureCounts random_counts(std::mt19937& rng) {
  static const char* kKeys[] = {"noun", "verb", "nasal", "det", "adj"};
  std::uniform_int_distribution<int> n_keys(0, 5);
  std::uniform_int_distribution<std::int64_t> value(0, 100);
  FeatureCounts fc;
  int k = n_keys(rng);
  for (int i = 0; i < k; ++i) fc.counts[kKeys[value(rng) % 5]] = value(rng);
  if (value(rng) % 2) fc.bases["total_words"] = value(rng);
  return fc;
}

bool equal(const FeatureCounts& a, const FeatureCounts& b) {
  return a.counts == b.counts && a.bases == b.bases;
}

// Drops zero-valued entries so identities compare cleanly.
FeatureCounts normalized(FeatureCounts fc) {
  for (auto it = fc.counts.begin(); it != fc.counts.end();)
    it = it->second == 0 ? fc.counts.erase(it) : std::next(it);
  for (auto it = fc.bases.begin(); it != fc.bases.end();)
    it = it->second == 0 ? fc.bases.erase(it) : std::next(it);
  return fc;
}

}  // namespace

TEST_CASE("merge_counts sums pointwise with missing keys as zero") {
  FeatureCounts a = make_counts({{"noun", 3}});
  FeatureCounts b = make_counts({{"noun", 2}, {"verb", 1}});
  FeatureCounts merged = merge_counts(a, b);
  CHECK(merged.count("noun") == 5);
  CHECK(merged.count("verb") == 1);
}

TEST_CASE("merge_counts with empty is identity") {
  FeatureCounts x = make_counts({{"nasal", 7}}, {{"total_consonants", 40}});
  FeatureCounts merged = merge_counts(x, FeatureCounts{});
  CHECK(equal(merged, x));
}

TEST_CASE("merge_counts sums bases too") {
  FeatureCounts a = make_counts({{"nasal", 7}}, {{"total_consonants", 40}});
  FeatureCounts b = make_counts({{"nasal", 5}}, {{"total_consonants", 30}});
  FeatureCounts merged = merge_counts(a, b);
  CHECK(merged.count("nasal") == 12);
  CHECK(merged.base("total_consonants") == 70);
}

TEST_CASE("merge_counts is associative and commutative") {
  std::mt19937 rng(20240612);
  for (int trial = 0; trial < 200; ++trial) {
    FeatureCounts a = random_counts(rng);
    FeatureCounts b = random_counts(rng);
    FeatureCounts c = random_counts(rng);
    CHECK(equal(merge_counts(a, b), merge_counts(b, a)));
    CHECK(equal(merge_counts(merge_counts(a, b), c),
                merge_counts(a, merge_counts(b, c))));
    CHECK(equal(normalized(merge_counts(a, FeatureCounts{})), normalized(a)));
  }
}

TEST_CASE("source labels round-trip") {
  for (auto label : {SourceLabel::kHuman, SourceLabel::kAi,
                     SourceLabel::kUnknown})
    CHECK(source_label_from_string(to_string(label)) == label);
  CHECK_THROWS_AS(source_label_from_string("robot"), InputError);
}

TEST_CASE("tree validation catches structural problems") {
  Sentence sent;
  for (int i = 0; i < 3; ++i) {
    Token t;
    t.surface = "w" + std::to_string(i);
    t.lower = t.surface;
    t.char_start = static_cast<std::size_t>(i) * 3;
    t.char_end = t.char_start + 2;
    t.is_word = true;
    sent.tokens.push_back(t);
  }

  // w1 <- w2 -> w3, rooted at w2
  sent.tokens[0].head = 2;
  sent.tokens[0].deprel = "dep";
  sent.tokens[1].head = 0;
  sent.tokens[1].deprel = "root";
  sent.tokens[2].head = 2;
  sent.tokens[2].deprel = "dep";
  CHECK(is_valid_tree(sent));
  CHECK(is_projective(sent));

  SUBCASE("two roots") {
    sent.tokens[2].head = 0;
    CHECK_FALSE(is_valid_tree(sent));
  }
  SUBCASE("self head") {
    sent.tokens[2].head = 3;
    CHECK_FALSE(is_valid_tree(sent));
  }
  SUBCASE("cycle") {
    sent.tokens[0].head = 3;
    sent.tokens[2].head = 1;
    CHECK_FALSE(is_valid_tree(sent));
  }
  SUBCASE("head out of range") {
    sent.tokens[2].head = 9;
    CHECK_FALSE(is_valid_tree(sent));
  }
}

TEST_CASE("projectivity check spots crossing arcs") {
  // 1 -> 3, 2 -> 4 crosses.
  Sentence sent;
  for (int i = 0; i < 4; ++i) {
    Token t;
    t.surface = "w";
    t.lower = "w";
    t.char_start = static_cast<std::size_t>(i) * 2;
    t.char_end = t.char_start + 1;
    sent.tokens.push_back(t);
  }
  sent.tokens[0].head = 3;
  sent.tokens[0].deprel = "dep";
  sent.tokens[1].head = 4;
  sent.tokens[1].deprel = "dep";
  sent.tokens[2].head = 0;
  sent.tokens[2].deprel = "root";
  sent.tokens[3].head = 3;
  sent.tokens[3].deprel = "dep";
  CHECK(is_valid_tree(sent));
  CHECK_FALSE(is_projective(sent));
}

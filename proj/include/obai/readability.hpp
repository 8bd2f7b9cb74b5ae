#pragma once

#include <string>
#include <vector>

#include "obai/corpus.hpp"
#include "obai/features.hpp"
#include "obai/phonology.hpp"

namespace obai::read {

// Shared count basis for the formula set. Words here are tokens with any
// alphanumeric character (so numerals count); letters_and_digits spans
// exactly those tokens. The linsear_* fields capture the first-100-words
// sample so the formulas stay pure functions of this struct.
struct TextStats {
  std::int64_t words = 0;
  std::int64_t sentences = 0;
  std::int64_t letters_and_digits = 0;
  std::int64_t syllables = 0;
  std::int64_t complex_words = 0;   // >= 3 syllables
  std::int64_t polysyllables = 0;   // same rule, kept for SMOG
  std::int64_t difficult_words = 0;
  std::int64_t linsear_easy = 0;    // <= 2 syllables within the sample
  std::int64_t linsear_hard = 0;
  std::int64_t linsear_sentences = 1;
};

struct ReadabilityReport {
  double reading_time_sec = 0.0;
  double flesch_reading_ease = 0.0;
  double flesch_kincaid_grade = 0.0;
  double gunning_fog = 0.0;
  double coleman_liau = 0.0;
  double ari = 0.0;
  double smog = 0.0;
  double linsear_write = 0.0;
  double passive_sentence_pct = 0.0;
  double dale_chall = 0.0;
  double difficult_words = 0.0;
};

struct PassiveStats {
  std::int64_t passive = 0;
  std::int64_t sentences = 0;
  double pct = 0.0;
};

constexpr double kDefaultWordsPerMinute = 238.0;

// Counts for one document. Throws InputError when the document has no
// words.
TextStats text_stats(const Document& doc, const phon::PhonLexicon& lex,
                     const feat::WordList& easy);

// Passive detection: with full dependency annotation a sentence is
// passive iff it contains nsubj:pass or aux:pass; otherwise a BE/GET
// form followed within three word tokens by a past participle.
PassiveStats passive_sentences(const Document& doc);

// The eleven report measures from precomputed stats. wpm must be > 0.
ReadabilityReport compute_readability(const TextStats& stats,
                                      const Document& doc,
                                      double wpm = kDefaultWordsPerMinute);

struct CorpusReadability {
  std::vector<std::pair<std::string, ReadabilityReport>> per_document;
  ReadabilityReport mean;  // unweighted over documents
};

CorpusReadability corpus_readability(const Corpus& corpus,
                                     const phon::PhonLexicon& lex,
                                     const feat::WordList& easy,
                                     double wpm = kDefaultWordsPerMinute);

}  // namespace obai::read

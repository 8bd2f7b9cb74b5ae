#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "obai/corpus.hpp"
#include "obai/features.hpp"
#include "obai/parser.hpp"
#include "obai/phonology.hpp"
#include "obai/readability.hpp"
#include "obai/registry.hpp"
#include "obai/stats.hpp"
#include "obai/tagger.hpp"

namespace obai::report {

enum class OutputFormat { kJson, kCsv, kMarkdown };

OutputFormat output_format_from_string(const std::string& s);

// Everything the pipeline needs at run time.
struct Resources {
  phon::PhonLexicon lexicon;
  feat::WordList wordlist;
  feat::LabelMap labelmap;
  std::optional<tag::TaggerModel> tagger;
  std::optional<parse::ParserModel> parser;
  double wpm = read::kDefaultWordsPerMinute;
  stats::TestConfig test;
  bool paper_rows_only = false;
  bool require_parse = true;  // readability can fall back to heuristics
  std::size_t workers = 0;    // 0 = hardware concurrency
};

struct DocumentAnalysis {
  std::string id;
  std::map<Level, FeatureCounts> counts;
  feat::LexicalRatios ratios;
  read::ReadabilityReport readability;
};

struct CorpusAnalysis {
  std::string label;
  std::vector<DocumentAnalysis> documents;
  std::map<Level, FeatureCounts> pooled;
  feat::LexicalRatios pooled_ratios;
  read::ReadabilityReport readability_mean;
};

// Tags and parses a document when annotations are missing; pre-annotated
// documents pass through untouched.
Document ensure_annotated(const Document& doc, const Resources& res);

// Per-document feature counts and readability, plus pooled counts.
// Documents are processed in a worker pool and merged in input order.
CorpusAnalysis analyze_corpus(const Corpus& corpus, const Resources& res);

struct ComparisonRow {
  Level level;
  std::string feature;
  std::string display_name;
  std::int64_t count_a = 0;
  std::int64_t count_b = 0;
  bool skipped = false;
  std::string skip_reason;
  stats::BinomialResult result;
};

// One row per registry feature (optionally paper rows only), in registry
// order. Features at zero in both corpora are marked skipped.
std::vector<ComparisonRow> compare_corpora(const CorpusAnalysis& a,
                                           const CorpusAnalysis& b,
                                           const stats::TestConfig& cfg,
                                           bool paper_rows_only);

std::string analysis_to_json(const CorpusAnalysis& a);
std::string analysis_to_csv(const CorpusAnalysis& a);
std::string analysis_to_markdown(const CorpusAnalysis& a);

std::string comparison_to_json(const std::vector<ComparisonRow>& rows,
                               const std::string& label_a,
                               const std::string& label_b);
std::string comparison_to_csv(const std::vector<ComparisonRow>& rows);
std::string comparison_to_markdown(const std::vector<ComparisonRow>& rows,
                                   const std::string& label_a,
                                   const std::string& label_b);

// Grouped per-corpus counts for external plotting:
// feature,count_A,count_B,level
std::string figure_counts_csv(const std::vector<ComparisonRow>& rows);

// Readability tables with the eleven standard row labels; one value
// column per corpus.
std::string readability_to_json(
    const std::vector<std::pair<std::string, read::CorpusReadability>>& cols);
std::string readability_to_csv(
    const std::vector<std::pair<std::string, read::CorpusReadability>>& cols);
std::string readability_to_markdown(
    const std::vector<std::pair<std::string, read::CorpusReadability>>& cols);

}  // namespace obai::report

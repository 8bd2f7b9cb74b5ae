#pragma once

#include <map>
#include <set>
#include <string>

#include "obai/corpus.hpp"

namespace obai::feat {

// Maps raw dependency labels to report feature names. Labels not claimed
// by the map fall through under their raw name. scheme_id "ud" switches
// on two derived rules that have no single-label equivalent:
//   prepositional_modifier <- ADP tokens attached as case
//   object_preposition     <- nmod/obl tokens with an ADP case child
struct LabelMap {
  std::map<std::string, std::string> pairs;
  std::string scheme_id;

  static LabelMap load(const std::string& path);
  static LabelMap from_string(const std::string& content,
                              const std::string& name);
  static LabelMap bundled_ud();
};

// Familiar-word list for easy/difficult splits, one lowercase word per
// line, '#' comments.
struct WordList {
  std::set<std::string> words;
  std::string name;

  static WordList load(const std::string& path);
  static WordList from_string(const std::string& content,
                              const std::string& name);
  bool contains_with_inflections(const std::string& lower_word) const;
};

// UPOS tag tallies over word tokens; basis total_words.
FeatureCounts morphological_counts(const Document& doc);

// Dependency-relation tallies over all tokens, mapped to report names;
// basis total_tokens.
FeatureCounts syntactic_counts(const Document& doc, const LabelMap& map);

// Easy/difficult, content/function, hapax, and type counts over word
// tokens; basis total_words.
FeatureCounts lexical_counts(const Document& doc, const WordList& easy);

// types / total_words and hapax_legomena / total_words, from the counts
// produced by lexical_counts. Reported descriptively, never tested.
struct LexicalRatios {
  double ttr = 0.0;
  double hapax_ratio = 0.0;
};
LexicalRatios lexical_ratios(const FeatureCounts& lexical);

}  // namespace obai::feat

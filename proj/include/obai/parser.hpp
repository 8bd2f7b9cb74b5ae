#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "obai/corpus.hpp"

namespace obai::parse {

// Greedy arc-standard transition parser with averaged-perceptron
// scoring. Transitions are SHIFT, LEFT-ARC(label), RIGHT-ARC(label);
// a guard on the artificial root keeps every output single-rooted.
struct ParserModel {
  std::map<std::string, std::map<std::string, double>> weights;
  std::vector<std::string> labels;       // sorted deprel labels
  std::vector<std::string> transitions;  // sorted transition names

  void save(const std::string& path) const;
  std::string serialize() const;
  static ParserModel load(const std::string& path);
  static ParserModel deserialize(const std::string& content,
                                 const std::string& name);
};

struct TrainStats {
  std::size_t used_sentences = 0;
  std::size_t skipped_nonprojective = 0;
};

// Static-oracle training over the projective sentences of the treebank;
// non-projective (or otherwise invalid) trees are skipped and counted.
// Throws InputError when no usable sentence remains.
ParserModel train_parser(const Corpus& treebank, int epochs,
                         std::uint64_t seed, TrainStats* stats = nullptr);

// Decodes every sentence to a single-rooted projective tree; requires
// UPOS tags.
Document parse(const Document& doc, const ParserModel& model);

// Unlabeled attachment score against gold heads.
double unlabeled_attachment(const Corpus& gold, const ParserModel& model);

}  // namespace obai::parse

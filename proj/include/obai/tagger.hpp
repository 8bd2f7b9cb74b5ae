#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "obai/corpus.hpp"

namespace obai::tag {

// Averaged-perceptron POS tagger. Tags are UPOS, or joint "UPOS|XPOS"
// labels when the training treebank carries XPOS throughout.
struct TaggerModel {
  std::map<std::string, std::map<std::string, double>> weights;
  std::vector<std::string> tagset;  // sorted
  bool joint_xpos = false;

  void save(const std::string& path) const;
  std::string serialize() const;
  static TaggerModel load(const std::string& path);
  static TaggerModel deserialize(const std::string& content,
                                 const std::string& name);
};

// Trains on gold UPOS (and XPOS when present on every token). Sentence
// order is shuffled per epoch from `seed`; training is deterministic for
// a fixed (treebank, epochs, seed).
TaggerModel train_tagger(const Corpus& treebank, int epochs,
                         std::uint64_t seed);

// Greedy left-to-right decode; returns an annotated copy.
Document tag(const Document& doc, const TaggerModel& model);

// UPOS accuracy over all tokens of a gold-annotated corpus.
double tagging_accuracy(const Corpus& gold, const TaggerModel& model);

}  // namespace obai::tag

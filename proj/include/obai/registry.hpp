#pragma once

#include <string>
#include <vector>

namespace obai {

enum class Level { kPhonology, kMorphology, kSyntax, kLexicon };

std::string to_string(Level level);

// One reportable feature. Ordering follows the comparison table's level
// grouping; paper_row marks the rows that make up the --paper-rows view,
// extensions come after them within each level. basis names the count
// each feature is measured against.
struct RegistryEntry {
  Level level;
  std::string name;
  std::string display_name;
  bool paper_row;
  std::string basis;
};

const std::vector<RegistryEntry>& feature_registry();

// nullptr when the (level, name) pair is not registered.
const RegistryEntry* find_feature(Level level, const std::string& name);

}  // namespace obai

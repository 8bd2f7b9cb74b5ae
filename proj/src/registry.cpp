#include "obai/registry.hpp"

namespace obai {

std::string to_string(Level level) {
  switch (level) {
    case Level::kPhonology: return "phonology";
    case Level::kMorphology: return "morphology";
    case Level::kSyntax: return "syntax";
    case Level::kLexicon: break;
  }
  return "lexicon";
}

const std::vector<RegistryEntry>& feature_registry() {
  using L = Level;
  static const std::vector<RegistryEntry> kRegistry = {
      // phonology
      {L::kPhonology, "approximant", "approximant", true, "total_consonants"},
      {L::kPhonology, "fricative", "fricative", true, "total_consonants"},
      {L::kPhonology, "lateral", "lateral", true, "total_consonants"},
      {L::kPhonology, "nasal", "nasal", true, "total_consonants"},
      {L::kPhonology, "plosive", "plosive", true, "total_consonants"},
      {L::kPhonology, "alveolar", "alveolar", true, "total_consonants"},
      {L::kPhonology, "bilabial", "bilabial", true, "total_consonants"},
      {L::kPhonology, "dental", "dental", true, "total_consonants"},
      {L::kPhonology, "labiodental", "labiodental", true, "total_consonants"},
      {L::kPhonology, "postalveolar", "postalveolar", true, "total_consonants"},
      {L::kPhonology, "voiced", "voiced", true, "total_consonants"},
      {L::kPhonology, "voiceless", "voiceless", true, "total_consonants"},
      {L::kPhonology, "primary_stress", "primary stress", true, "total_words"},
      {L::kPhonology, "secondary_stress", "secondary stress", true,
       "total_words"},
      {L::kPhonology, "affricate", "affricate", false, "total_consonants"},
      {L::kPhonology, "palatal", "palatal", false, "total_consonants"},
      {L::kPhonology, "velar", "velar", false, "total_consonants"},
      {L::kPhonology, "glottal", "glottal", false, "total_consonants"},
      {L::kPhonology, "vowel_phonemes", "vowel phonemes", false, "total_words"},
      {L::kPhonology, "syllables", "syllables", false, "total_words"},
      // morphology
      {L::kMorphology, "adjective", "adjective", true, "total_words"},
      {L::kMorphology, "adposition", "adposition", true, "total_words"},
      {L::kMorphology, "adverb", "adverb", true, "total_words"},
      {L::kMorphology, "auxiliary", "auxiliary", true, "total_words"},
      {L::kMorphology, "coordinating_conjunction", "coordinating conjunction",
       true, "total_words"},
      {L::kMorphology, "noun", "noun", true, "total_words"},
      {L::kMorphology, "particle", "particle", true, "total_words"},
      {L::kMorphology, "pronoun", "pronoun", true, "total_words"},
      {L::kMorphology, "subordinating_conjunction",
       "subordinating conjunction", true, "total_words"},
      {L::kMorphology, "verb", "verb", true, "total_words"},
      {L::kMorphology, "determiner", "determiner", false, "total_words"},
      {L::kMorphology, "interjection", "interjection", false, "total_words"},
      {L::kMorphology, "numeral", "numeral", false, "total_words"},
      {L::kMorphology, "proper_noun", "proper noun", false, "total_words"},
      // syntax
      {L::kSyntax, "adjectival_modifier", "adjectival modifier", true,
       "total_tokens"},
      {L::kSyntax, "adverbial_modifier", "adverbial modifier", true,
       "total_tokens"},
      {L::kSyntax, "conjunct", "conjunct", true, "total_tokens"},
      {L::kSyntax, "determiner", "determiner", true, "total_tokens"},
      {L::kSyntax, "direct_object", "direct object", true, "total_tokens"},
      {L::kSyntax, "nominal_subject", "nominal subject", true, "total_tokens"},
      {L::kSyntax, "object_preposition", "object preposition", true,
       "total_tokens"},
      {L::kSyntax, "prepositional_modifier", "prepositional modifier", true,
       "total_tokens"},
      {L::kSyntax, "root", "root", true, "total_tokens"},
      // lexicon
      {L::kLexicon, "easy_word", "easy word", true, "total_words"},
      {L::kLexicon, "difficult_word", "difficult word", true, "total_words"},
      {L::kLexicon, "content_word", "content word", true, "total_words"},
      {L::kLexicon, "function_word", "function word", true, "total_words"},
      {L::kLexicon, "hapax_legomena", "hapax legomena", false, "total_words"},
      {L::kLexicon, "types", "types", false, "total_words"},
  };
  return kRegistry;
}

const RegistryEntry* find_feature(Level level, const std::string& name) {
  for (const RegistryEntry& e : feature_registry())
    if (e.level == level && e.name == name) return &e;
  return nullptr;
}

}  // namespace obai

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "obai/corpus.hpp"

namespace obai::phon {

enum class Manner { kPlosive, kFricative, kAffricate, kNasal, kLateral,
                    kApproximant };
enum class Place { kBilabial, kLabiodental, kDental, kAlveolar,
                   kPostalveolar, kPalatal, kVelar, kGlottal };
enum class Voicing { kVoiced, kVoiceless };

std::string to_string(Manner m);
std::string to_string(Place p);
std::string to_string(Voicing v);

struct PhonemeInfo {
  bool is_vowel = false;
  Manner manner = Manner::kPlosive;
  Place place = Place::kBilabial;
  Voicing voicing = Voicing::kVoiced;
};

// Fixed ARPAbet classification: 24 consonants, 15 vowels.
// Simplifications baked in: W is bilabial, R alveolar, L lateral only.
const std::map<std::string, PhonemeInfo>& arpabet_table();
bool is_arpabet_vowel(const std::string& symbol);
bool is_arpabet_consonant(const std::string& symbol);

struct Phoneme {
  std::string symbol;  // bare ARPAbet symbol, no stress digit
  int stress = -1;     // 0/1/2 on vowels, -1 on consonants
};

struct Pronunciation {
  std::vector<Phoneme> phonemes;

  int vowel_count() const;
  bool has_stress(int level) const;
};

// Pronunciation lexicon in CMU dictionary plain-text format.
// Only the first listed variant of each word is kept; entries without a
// vowel phoneme are dropped so every stored word has >= 1 syllable.
class PhonLexicon {
 public:
  static PhonLexicon load(const std::string& path);
  static PhonLexicon from_string(const std::string& content,
                                 const std::string& name);

  std::optional<Pronunciation> lookup(const std::string& word) const;
  std::size_t size() const { return entries_.size(); }
  std::size_t rejected_entries() const { return rejected_; }

 private:
  std::map<std::string, Pronunciation> entries_;
  std::size_t rejected_ = 0;
};

struct SyllableCount {
  int count = 1;
  bool oov = false;
};

// Syllables for one word: vowel phonemes when the word is in the
// lexicon, otherwise an orthographic heuristic (vowel-letter groups,
// silent final e, floor at one). Throws InputError when the word has no
// alphabetic character.
SyllableCount syllable_count(const std::string& word, const PhonLexicon& lex);

// Consonant manner/place/voicing, vowel, syllable, and word-stress
// counts over all purely alphabetic word tokens of a document. Words not
// in the lexicon contribute heuristic syllables and the oov_words basis
// only.
FeatureCounts phonological_counts(const Document& doc, const PhonLexicon& lex);

}  // namespace obai::phon

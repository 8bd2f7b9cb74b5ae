#include "obai/phonology.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace obai::phon {
namespace {

constexpr const char* kVowels[] = {"AA", "AE", "AH", "AO", "AW", "AY", "EH",
                                   "ER", "EY", "IH", "IY", "OW", "OY", "UH",
                                   "UW"};

struct ConsonantRow {
  const char* symbol;
  Manner manner;
  Place place;
  Voicing voicing;
};

constexpr ConsonantRow kConsonants[] = {
    {"P", Manner::kPlosive, Place::kBilabial, Voicing::kVoiceless},
    {"B", Manner::kPlosive, Place::kBilabial, Voicing::kVoiced},
    {"T", Manner::kPlosive, Place::kAlveolar, Voicing::kVoiceless},
    {"D", Manner::kPlosive, Place::kAlveolar, Voicing::kVoiced},
    {"K", Manner::kPlosive, Place::kVelar, Voicing::kVoiceless},
    {"G", Manner::kPlosive, Place::kVelar, Voicing::kVoiced},
    {"F", Manner::kFricative, Place::kLabiodental, Voicing::kVoiceless},
    {"V", Manner::kFricative, Place::kLabiodental, Voicing::kVoiced},
    {"TH", Manner::kFricative, Place::kDental, Voicing::kVoiceless},
    {"DH", Manner::kFricative, Place::kDental, Voicing::kVoiced},
    {"S", Manner::kFricative, Place::kAlveolar, Voicing::kVoiceless},
    {"Z", Manner::kFricative, Place::kAlveolar, Voicing::kVoiced},
    {"SH", Manner::kFricative, Place::kPostalveolar, Voicing::kVoiceless},
    {"ZH", Manner::kFricative, Place::kPostalveolar, Voicing::kVoiced},
    {"HH", Manner::kFricative, Place::kGlottal, Voicing::kVoiceless},
    {"CH", Manner::kAffricate, Place::kPostalveolar, Voicing::kVoiceless},
    {"JH", Manner::kAffricate, Place::kPostalveolar, Voicing::kVoiced},
    {"M", Manner::kNasal, Place::kBilabial, Voicing::kVoiced},
    {"N", Manner::kNasal, Place::kAlveolar, Voicing::kVoiced},
    {"NG", Manner::kNasal, Place::kVelar, Voicing::kVoiced},
    {"L", Manner::kLateral, Place::kAlveolar, Voicing::kVoiced},
    {"R", Manner::kApproximant, Place::kAlveolar, Voicing::kVoiced},
    {"W", Manner::kApproximant, Place::kBilabial, Voicing::kVoiced},
    {"Y", Manner::kApproximant, Place::kPalatal, Voicing::kVoiced},
};

std::string ascii_lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool all_ascii_alpha(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalpha(static_cast<unsigned char>(c))) return false;
  return true;
}

bool is_vowel_letter(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
      return true;
    default:
      return false;
  }
}

// Orthographic fallback: count maximal vowel-letter groups, drop a final
// silent e (kept for consonant+le endings), floor at one.
int heuristic_syllables(const std::string& lower_word) {
  int groups = 0;
  bool in_group = false;
  bool final_group_is_lone_e = false;
  for (char c : lower_word) {
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      in_group = false;
      continue;
    }
    if (is_vowel_letter(c)) {
      if (!in_group) {
        ++groups;
        in_group = true;
        final_group_is_lone_e = (c == 'e');
      } else {
        final_group_is_lone_e = false;
      }
    } else {
      in_group = false;
      final_group_is_lone_e = false;
    }
  }
  std::size_t len = lower_word.size();
  if (groups > 1 && final_group_is_lone_e && len >= 1 &&
      lower_word[len - 1] == 'e') {
    bool consonant_le = len >= 3 && lower_word[len - 2] == 'l' &&
                        std::isalpha(static_cast<unsigned char>(lower_word[len - 3])) &&
                        !is_vowel_letter(lower_word[len - 3]);
    if (!consonant_le) --groups;
  }
  return groups < 1 ? 1 : groups;
}

}  // namespace

std::string to_string(Manner m) {
  switch (m) {
    case Manner::kPlosive: return "plosive";
    case Manner::kFricative: return "fricative";
    case Manner::kAffricate: return "affricate";
    case Manner::kNasal: return "nasal";
    case Manner::kLateral: return "lateral";
    case Manner::kApproximant: break;
  }
  return "approximant";
}

std::string to_string(Place p) {
  switch (p) {
    case Place::kBilabial: return "bilabial";
    case Place::kLabiodental: return "labiodental";
    case Place::kDental: return "dental";
    case Place::kAlveolar: return "alveolar";
    case Place::kPostalveolar: return "postalveolar";
    case Place::kPalatal: return "palatal";
    case Place::kVelar: return "velar";
    case Place::kGlottal: break;
  }
  return "glottal";
}

std::string to_string(Voicing v) {
  return v == Voicing::kVoiced ? "voiced" : "voiceless";
}

const std::map<std::string, PhonemeInfo>& arpabet_table() {
  static const std::map<std::string, PhonemeInfo> kTable = [] {
    std::map<std::string, PhonemeInfo> t;
    for (const ConsonantRow& row : kConsonants) {
      PhonemeInfo info;
      info.is_vowel = false;
      info.manner = row.manner;
      info.place = row.place;
      info.voicing = row.voicing;
      t[row.symbol] = info;
    }
    for (const char* v : kVowels) {
      PhonemeInfo info;
      info.is_vowel = true;
      t[v] = info;
    }
    return t;
  }();
  return kTable;
}

bool is_arpabet_vowel(const std::string& symbol) {
  auto it = arpabet_table().find(symbol);
  return it != arpabet_table().end() && it->second.is_vowel;
}

bool is_arpabet_consonant(const std::string& symbol) {
  auto it = arpabet_table().find(symbol);
  return it != arpabet_table().end() && !it->second.is_vowel;
}

int Pronunciation::vowel_count() const {
  int n = 0;
  for (const Phoneme& p : phonemes)
    if (p.stress >= 0) ++n;
  return n;
}

bool Pronunciation::has_stress(int level) const {
  for (const Phoneme& p : phonemes)
    if (p.stress == level) return true;
  return false;
}

PhonLexicon PhonLexicon::from_string(const std::string& content,
                                     const std::string& name) {
  PhonLexicon lex;
  std::istringstream in(content);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.compare(0, 3, ";;;") == 0) continue;

    std::istringstream fields(line);
    std::string word;
    fields >> word;
    if (word.empty()) continue;

    // Variant entries like READ(2): first listed pronunciation wins.
    auto paren = word.find('(');
    if (paren != std::string::npos) continue;

    Pronunciation pron;
    std::string sym;
    while (fields >> sym) {
      Phoneme ph;
      char last = sym.back();
      if (last >= '0' && last <= '2' && sym.size() > 1) {
        ph.symbol = sym.substr(0, sym.size() - 1);
        ph.stress = last - '0';
        if (!is_arpabet_vowel(ph.symbol))
          throw ParseError(name + " line " + std::to_string(line_no) +
                           ": stress digit on non-vowel symbol '" + sym + "'");
      } else {
        ph.symbol = sym;
        if (!is_arpabet_consonant(ph.symbol)) {
          if (is_arpabet_vowel(ph.symbol))
            throw ParseError(name + " line " + std::to_string(line_no) +
                             ": vowel '" + sym + "' missing stress digit");
          throw ParseError(name + " line " + std::to_string(line_no) +
                           ": unknown phoneme symbol '" + sym + "'");
        }
      }
      pron.phonemes.push_back(std::move(ph));
    }
    if (pron.phonemes.empty())
      throw ParseError(name + " line " + std::to_string(line_no) +
                       ": entry without phonemes");
    if (pron.vowel_count() == 0) {
      // No syllable nucleus; keep the lexicon's >=1 syllable guarantee.
      ++lex.rejected_;
      continue;
    }
    lex.entries_.emplace(ascii_lower(word), std::move(pron));
  }
  return lex;
}

PhonLexicon PhonLexicon::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open pronunciation lexicon: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str(), path);
}

std::optional<Pronunciation> PhonLexicon::lookup(const std::string& word) const {
  auto it = entries_.find(ascii_lower(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

SyllableCount syllable_count(const std::string& word, const PhonLexicon& lex) {
  bool has_alpha = false;
  for (char c : word)
    if (std::isalpha(static_cast<unsigned char>(c))) {
      has_alpha = true;
      break;
    }
  if (!has_alpha)
    throw InputError("syllable_count: no alphabetic character in '" + word +
                     "'");
  if (auto pron = lex.lookup(word)) return {pron->vowel_count(), false};
  return {heuristic_syllables(ascii_lower(word)), true};
}

FeatureCounts phonological_counts(const Document& doc, const PhonLexicon& lex) {
  FeatureCounts fc;
  // Fixed keys so empty documents still report a full row set.
  static const char* kZeroKeys[] = {
      "plosive", "fricative", "affricate", "nasal", "lateral", "approximant",
      "bilabial", "labiodental", "dental", "alveolar", "postalveolar",
      "palatal", "velar", "glottal", "voiced", "voiceless", "vowel_phonemes",
      "syllables", "primary_stress", "secondary_stress"};
  for (const char* k : kZeroKeys) fc.counts[k] = 0;
  fc.bases["total_consonants"] = 0;
  fc.bases["total_words"] = 0;
  fc.bases["oov_words"] = 0;

  for (const Sentence& sent : doc.sentences) {
    for (const Token& tok : sent.tokens) {
      if (!tok.is_word || !all_ascii_alpha(tok.surface)) continue;
      fc.bases["total_words"] += 1;
      auto pron = lex.lookup(tok.lower);
      if (!pron) {
        fc.bases["oov_words"] += 1;
        fc.counts["syllables"] += heuristic_syllables(tok.lower);
        continue;
      }
      for (const Phoneme& ph : pron->phonemes) {
        const PhonemeInfo& info = arpabet_table().at(ph.symbol);
        if (info.is_vowel) {
          fc.counts["vowel_phonemes"] += 1;
          fc.counts["syllables"] += 1;
        } else {
          fc.bases["total_consonants"] += 1;
          fc.counts[to_string(info.manner)] += 1;
          fc.counts[to_string(info.place)] += 1;
          fc.counts[to_string(info.voicing)] += 1;
        }
      }
      if (pron->has_stress(1)) fc.counts["primary_stress"] += 1;
      if (pron->has_stress(2)) fc.counts["secondary_stress"] += 1;
    }
  }
  return fc;
}

}  // namespace obai::phon

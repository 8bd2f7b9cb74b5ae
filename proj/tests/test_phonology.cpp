#include <doctest.h>

#include "obai/ingest.hpp"
#include "obai/phonology.hpp"

using namespace obai;
using namespace obai::phon;

namespace {

const char* kMiniLexicon =
    ";;; test lexicon\n"
    "CAT  K AE1 T\n"
    "SAT  S AE1 T\n"
    "THE  DH AH0\n"
    "ON  AA1 N\n"
    "MAT  M AE1 T\n"
    "READ  R IY1 D\n"
    "READ(2)  R EH1 D\n"
    "ABOVE  AH0 B AH1 V\n"
    "UNDERSTAND  AH2 N D ER0 S T AE1 N D\n"
    "JUDGE  JH AH1 JH\n"
    "YELLOW  Y EH1 L OW0\n";

PhonLexicon mini() { return PhonLexicon::from_string(kMiniLexicon, "mini"); }

Document word_doc(const std::string& text) {
  IngestConfig cfg;
  return document_from_text("t", text, cfg);
}

}  // namespace

TEST_CASE("classification table covers the full consonant and vowel set") {
  const char* consonants[] = {"P", "B", "T",  "D",  "K", "G",  "F",  "V",
                              "TH", "DH", "S", "Z",  "SH", "ZH", "HH", "CH",
                              "JH", "M",  "N", "NG", "L",  "R",  "W",  "Y"};
  const char* vowels[] = {"AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER",
                          "EY", "IH", "IY", "OW", "OY", "UH", "UW"};
  CHECK(arpabet_table().size() == 39);
  for (const char* c : consonants) {
    CAPTURE(c);
    CHECK(is_arpabet_consonant(c));
  }
  for (const char* v : vowels) {
    CAPTURE(v);
    CHECK(is_arpabet_vowel(v));
  }
}

TEST_CASE("lexicon load: variants, comments, case folding") {
  PhonLexicon lex = mini();
  auto cat = lex.lookup("cat");
  REQUIRE(cat.has_value());
  REQUIRE(cat->phonemes.size() == 3);
  CHECK(cat->phonemes[0].symbol == "K");
  CHECK(cat->phonemes[1].symbol == "AE");
  CHECK(cat->phonemes[1].stress == 1);
  CHECK(cat->phonemes[2].symbol == "T");

  // READ(2) is ignored: first variant only.
  auto read = lex.lookup("READ");
  REQUIRE(read.has_value());
  CHECK(read->phonemes[1].symbol == "IY");

  CHECK_FALSE(lex.lookup("missing").has_value());
}

TEST_CASE("lexicon load errors") {
  CHECK_THROWS_AS(PhonLexicon::from_string("BAD  Q X1\n", "t"), ParseError);
  CHECK_THROWS_AS(PhonLexicon::from_string("BAD  K AE\n", "t"), ParseError);
  CHECK_THROWS_AS(PhonLexicon::from_string("BAD  K3 T\n", "t"), ParseError);
  // Entries without a vowel are rejected but not fatal.
  PhonLexicon lex = PhonLexicon::from_string("HMM  HH M\nCAT  K AE1 T\n", "t");
  CHECK(lex.size() == 1);
  CHECK(lex.rejected_entries() == 1);
}

TEST_CASE("syllable counts: lexicon path and heuristic path") {
  PhonLexicon lex = mini();
  CHECK(syllable_count("cat", lex).count == 1);
  CHECK_FALSE(syllable_count("cat", lex).oov);
  CHECK(syllable_count("understand", lex).count == 3);

  // Heuristic: not in the mini lexicon.
  auto make = syllable_count("make", lex);
  CHECK(make.count == 1);  // silent final e
  CHECK(make.oov);
  CHECK(syllable_count("syllable", lex).count == 3);  // consonant+le
  CHECK(syllable_count("apple", lex).count == 2);
  CHECK(syllable_count("whole", lex).count == 1);
  CHECK(syllable_count("rhythm", lex).count == 1);  // floor at one
  CHECK(syllable_count("idea", lex).count == 2);    // "idea": i, ea
  CHECK_THROWS_AS(syllable_count("1234", lex), InputError);
}

TEST_CASE("phonological counts for the single word 'cat'") {
  PhonLexicon lex = mini();
  FeatureCounts fc = phonological_counts(word_doc("cat"), lex);
  CHECK(fc.count("plosive") == 2);
  CHECK(fc.count("voiceless") == 2);
  CHECK(fc.count("velar") == 1);
  CHECK(fc.count("alveolar") == 1);
  CHECK(fc.count("primary_stress") == 1);
  CHECK(fc.count("secondary_stress") == 0);
  CHECK(fc.count("syllables") == 1);
  CHECK(fc.count("vowel_phonemes") == 1);
  CHECK(fc.base("total_consonants") == 2);
  CHECK(fc.base("total_words") == 1);
  CHECK(fc.base("oov_words") == 0);
}

TEST_CASE("oov words contribute heuristic syllables only") {
  PhonLexicon lex = mini();
  FeatureCounts fc = phonological_counts(word_doc("zyzzyva cat"), lex);
  CHECK(fc.base("total_words") == 2);
  CHECK(fc.base("oov_words") == 1);
  CHECK(fc.base("total_consonants") == 2);  // cat only
  CHECK(fc.count("syllables") == 1 + 3);    // zy-zzy-va heuristically
}

TEST_CASE("all-oov document yields zero consonants") {
  PhonLexicon lex = mini();
  FeatureCounts fc = phonological_counts(word_doc("qqq zzz"), lex);
  CHECK(fc.base("oov_words") == fc.base("total_words"));
  CHECK(fc.base("total_consonants") == 0);
  CHECK(fc.count("nasal") == 0);
}

TEST_CASE("punctuation-only document counts nothing") {
  IngestConfig cfg;
  Document doc = document_from_text("p", "... !!!", cfg);
  PhonLexicon lex = mini();
  FeatureCounts fc = phonological_counts(doc, lex);
  CHECK(fc.base("total_words") == 0);
  CHECK(fc.count("syllables") == 0);
}

TEST_CASE("manner, place, and voicing sums all equal total consonants") {
  PhonLexicon lex = mini();
  for (const char* text :
       {"the cat sat on the mat", "judge yellow above", "understand read the",
        "cat zyzzyva on"}) {
    FeatureCounts fc = phonological_counts(word_doc(text), lex);
    std::int64_t manner = fc.count("plosive") + fc.count("fricative") +
                          fc.count("affricate") + fc.count("nasal") +
                          fc.count("lateral") + fc.count("approximant");
    std::int64_t place = fc.count("bilabial") + fc.count("labiodental") +
                         fc.count("dental") + fc.count("alveolar") +
                         fc.count("postalveolar") + fc.count("palatal") +
                         fc.count("velar") + fc.count("glottal");
    std::int64_t voicing = fc.count("voiced") + fc.count("voiceless");
    CAPTURE(text);
    CHECK(manner == fc.base("total_consonants"));
    CHECK(place == fc.base("total_consonants"));
    CHECK(voicing == fc.base("total_consonants"));
    CHECK(fc.count("nasal") <= fc.base("total_consonants"));
    CHECK(fc.count("syllables") >=
          fc.base("total_words") - fc.base("oov_words"));
  }
}

TEST_CASE("stress counts partition in-lexicon words") {
  PhonLexicon lex = mini();
  // above: primary only; understand: primary + secondary; the/on: varied.
  FeatureCounts fc = phonological_counts(word_doc("above understand the"), lex);
  std::int64_t in_lex = fc.base("total_words") - fc.base("oov_words");
  CHECK(in_lex == 3);
  CHECK(fc.count("primary_stress") == 2);
  CHECK(fc.count("secondary_stress") == 1);
}

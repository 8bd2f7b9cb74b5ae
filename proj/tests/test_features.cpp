#include <doctest.h>

#include "obai/features.hpp"
#include "obai/ingest.hpp"

using namespace obai;
using namespace obai::feat;

namespace {

Document tagged_doc(const std::string& text,
                    const std::vector<std::string>& tags) {
  IngestConfig cfg;
  Document doc = document_from_text("t", text, cfg);
  std::size_t k = 0;
  for (auto& sent : doc.sentences)
    for (auto& tok : sent.tokens) {
      REQUIRE(k < tags.size());
      tok.upos = tags[k++];
    }
  REQUIRE(k == tags.size());
  return doc;
}

// Builds a parsed document from explicit (surface, upos, head, deprel).
Document parsed_doc(
    const std::vector<std::tuple<std::string, std::string, int, std::string>>&
        rows) {
  Document doc;
  doc.id = "t";
  Sentence sent;
  std::size_t offset = 0;
  for (const auto& [surface, upos, head, deprel] : rows) {
    Token t;
    t.surface = surface;
    t.lower = surface;
    for (char& c : t.lower)
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    t.char_start = offset;
    t.char_end = offset + surface.size();
    offset = t.char_end + 1;
    t.is_word = true;
    t.upos = upos;
    t.head = head;
    t.deprel = deprel;
    sent.tokens.push_back(t);
    doc.raw_text += surface + " ";
  }
  doc.sentences.push_back(sent);
  return doc;
}

WordList tiny_list() {
  return WordList::from_string(
      "# familiar words\nthe\ncat\nsat\non\nmat\nstop\nmake\ncarry\nbox\n",
      "tiny");
}

}  // namespace

TEST_CASE("morphological counts tally UPOS over word tokens") {
  Document doc = tagged_doc("The cat sat .", {"DET", "NOUN", "VERB", "PUNCT"});
  FeatureCounts fc = morphological_counts(doc);
  CHECK(fc.count("determiner") == 1);
  CHECK(fc.count("noun") == 1);
  CHECK(fc.count("verb") == 1);
  CHECK(fc.count("adjective") == 0);
  CHECK(fc.base("total_words") == 3);  // "." is not a word token
}

TEST_CASE("all-punctuation sentence counts zero words") {
  Document doc = tagged_doc("- - !", {"PUNCT", "PUNCT", "PUNCT"});
  FeatureCounts fc = morphological_counts(doc);
  CHECK(fc.base("total_words") == 0);
  for (const auto& [k, v] : fc.counts) CHECK(v == 0);
}

TEST_CASE("UPOS counts partition total words") {
  Document doc = tagged_doc(
      "Yes the two cats quickly ate and I saw X .",
      {"INTJ", "DET", "NUM", "NOUN", "ADV", "VERB", "CCONJ", "PRON", "VERB",
       "X", "PUNCT"});
  FeatureCounts fc = morphological_counts(doc);
  std::int64_t sum = 0;
  for (const auto& [k, v] : fc.counts) sum += v;
  CHECK(sum == fc.base("total_words"));
  CHECK(fc.count("other") == 1);  // the X-tagged word token
}

TEST_CASE("untagged document raises") {
  IngestConfig cfg;
  Document doc = document_from_text("u", "No tags here.", cfg);
  CHECK_THROWS_AS(morphological_counts(doc), InputError);
  CHECK_THROWS_AS(lexical_counts(doc, tiny_list()), InputError);
}

TEST_CASE("syntactic counts map UD relations to report names") {
  Document doc = parsed_doc({{"She", "PRON", 2, "nsubj"},
                             {"ate", "VERB", 0, "root"},
                             {"apples", "NOUN", 2, "obj"}});
  FeatureCounts fc = syntactic_counts(doc, LabelMap::bundled_ud());
  CHECK(fc.count("nominal_subject") == 1);
  CHECK(fc.count("root") == 1);
  CHECK(fc.count("direct_object") == 1);
  CHECK(fc.base("total_tokens") == 3);
}

TEST_CASE("derived UD rules: prepositional_modifier and object_preposition") {
  // "in the house": house <- obl with case child "in" (ADP) and det "the".
  Document doc = parsed_doc({{"lives", "VERB", 0, "root"},
                             {"in", "ADP", 4, "case"},
                             {"the", "DET", 4, "det"},
                             {"house", "NOUN", 1, "obl"}});
  FeatureCounts fc = syntactic_counts(doc, LabelMap::bundled_ud());
  CHECK(fc.count("prepositional_modifier") == 1);
  CHECK(fc.count("object_preposition") == 1);
  CHECK(fc.count("determiner") == 1);
  CHECK(fc.count("root") == 1);
}

TEST_CASE("obl without an ADP case child is not an object_preposition") {
  Document doc = parsed_doc({{"left", "VERB", 0, "root"},
                             {"yesterday", "NOUN", 1, "obl"}});
  FeatureCounts fc = syntactic_counts(doc, LabelMap::bundled_ud());
  CHECK(fc.count("object_preposition") == 0);
  CHECK(fc.count("obl") == 1);  // falls through under its raw name
}

TEST_CASE("nsubj:pass maps to nominal_subject; unmapped labels keep raw names") {
  Document doc = parsed_doc({{"The", "DET", 2, "det"},
                             {"ball", "NOUN", 4, "nsubj:pass"},
                             {"was", "AUX", 4, "aux:pass"},
                             {"thrown", "VERB", 0, "root"}});
  FeatureCounts fc = syntactic_counts(doc, LabelMap::bundled_ud());
  CHECK(fc.count("nominal_subject") == 1);
  CHECK(fc.count("aux:pass") == 1);
  CHECK(fc.count("determiner") == 1);
}

TEST_CASE("unparsed document raises") {
  Document doc = tagged_doc("No heads .", {"DET", "NOUN", "PUNCT"});
  CHECK_THROWS_AS(syntactic_counts(doc, LabelMap::bundled_ud()), InputError);
}

TEST_CASE("label map files parse pairs and scheme directives") {
  LabelMap map = LabelMap::from_string(
      "# scheme_id = ud\namod\tadjectival_modifier\nobj\tdirect_object\n",
      "m");
  CHECK(map.scheme_id == "ud");
  CHECK(map.pairs.at("amod") == "adjectival_modifier");
  CHECK_THROWS_AS(LabelMap::from_string("missing_tab_line\n", "m"),
                  ParseError);
}

TEST_CASE("lexical counts: TTR, hapax, easy/difficult partition") {
  Document doc = tagged_doc("the the the", {"DET", "DET", "DET"});
  FeatureCounts fc = lexical_counts(doc, tiny_list());
  CHECK(fc.count("types") == 1);
  CHECK(fc.count("hapax_legomena") == 0);
  CHECK(fc.base("total_words") == 3);
  LexicalRatios r = lexical_ratios(fc);
  CHECK(r.ttr == doctest::Approx(1.0 / 3.0));

  CHECK(fc.count("easy_word") + fc.count("difficult_word") ==
        fc.base("total_words"));
}

TEST_CASE("inflection stripping finds easy base forms") {
  WordList list = tiny_list();
  CHECK(list.contains_with_inflections("cats"));     // -s
  CHECK(list.contains_with_inflections("stopped"));  // -ed with doubling
  CHECK(list.contains_with_inflections("making"));   // -ing with final e
  CHECK(list.contains_with_inflections("boxes"));    // -es
  // y->ies alternation is outside the simple rule set.
  CHECK_FALSE(list.contains_with_inflections("carries"));
  CHECK_FALSE(list.contains_with_inflections("zebra"));

  Document doc = tagged_doc("cats sat", {"NOUN", "VERB"});
  FeatureCounts fc = lexical_counts(doc, list);
  CHECK(fc.count("easy_word") == 2);
  CHECK(fc.count("difficult_word") == 0);
}

TEST_CASE("content and function word classes") {
  Document doc = tagged_doc(
      "The quick fox jumps over lazy dogs and two cats",
      {"DET", "ADJ", "NOUN", "VERB", "ADP", "ADJ", "NOUN", "CCONJ", "NUM",
       "NOUN"});
  FeatureCounts fc = lexical_counts(doc, tiny_list());
  CHECK(fc.count("content_word") == 6);   // ADJ x2, NOUN x3, VERB
  CHECK(fc.count("function_word") == 3);  // DET, ADP, CCONJ
  // NUM belongs to neither class.
  CHECK(fc.count("content_word") + fc.count("function_word") + 1 ==
        fc.base("total_words"));
}

TEST_CASE("hapax legomena counts types occurring once") {
  Document doc = tagged_doc("a b a c", {"X", "X", "X", "X"});
  FeatureCounts fc = lexical_counts(doc, tiny_list());
  CHECK(fc.count("types") == 3);
  CHECK(fc.count("hapax_legomena") == 2);  // b, c
}

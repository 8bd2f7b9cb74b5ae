#include <doctest.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <random>

#include "obai/ingest.hpp"

using namespace obai;

namespace {

std::vector<std::string> surfaces(const Sentence& sent) {
  std::vector<std::string> out;
  for (const Token& t : sent.tokens) out.push_back(t.surface);
  return out;
}

// Every byte of the input is either inside exactly one token, whitespace,
// or a dropped control character.
void check_totality(const std::string& text, const std::vector<Sentence>& sents) {
  std::vector<int> covered(text.size(), 0);
  for (const Sentence& s : sents)
    for (const Token& t : s.tokens) {
      REQUIRE(t.char_start < t.char_end);
      REQUIRE(t.char_end <= text.size());
      for (std::size_t i = t.char_start; i < t.char_end; ++i) covered[i] += 1;
    }
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (covered[i] == 0) {
      bool droppable = std::isspace(c) || c < 0x20 || c == 0x7F || c >= 0x80;
      CHECK_MESSAGE(droppable, "uncovered byte at ", i, " in: ", text);
    } else {
      CHECK(covered[i] == 1);
    }
  }
}

}  // namespace

TEST_CASE("basic whitespace and punctuation split") {
  IngestConfig cfg;
  auto sents = tokenize("The cat sat.", cfg);
  REQUIRE(sents.size() == 1);
  CHECK(surfaces(sents[0]) == std::vector<std::string>{"The", "cat", "sat", "."});
  CHECK(sents[0].tokens[0].is_word);
  CHECK_FALSE(sents[0].tokens[3].is_word);
  CHECK(sents[0].tokens[0].lower == "the");
}

TEST_CASE("clitic splitting and sentence boundary") {
  IngestConfig cfg;
  auto sents = tokenize("Don't stop. Go!", cfg);
  REQUIRE(sents.size() == 2);
  CHECK(surfaces(sents[0]) ==
        std::vector<std::string>{"Do", "n't", "stop", "."});
  CHECK(surfaces(sents[1]) == std::vector<std::string>{"Go", "!"});
}

TEST_CASE("clitic splitting can be disabled") {
  IngestConfig cfg;
  cfg.clitic_splitting = false;
  auto sents = tokenize("Don't stop.", cfg);
  REQUIRE(sents.size() == 1);
  CHECK(surfaces(sents[0]) == std::vector<std::string>{"Don't", "stop", "."});
}

TEST_CASE("abbreviations do not end sentences") {
  IngestConfig cfg;
  auto sents = tokenize("Dr. Smith left.", cfg);
  REQUIRE(sents.size() == 1);
  CHECK(surfaces(sents[0]) ==
        std::vector<std::string>{"Dr.", "Smith", "left", "."});

  auto sents2 = tokenize("We saw birds, e.g. crows. They flew.", cfg);
  REQUIRE(sents2.size() == 2);
}

TEST_CASE("more clitics: 's 're 've 'll 'd 'm") {
  IngestConfig cfg;
  auto sents = tokenize("She's told we're they've I'll he'd I'm here.", cfg);
  REQUIRE(sents.size() == 1);
  CHECK(surfaces(sents[0]) ==
        std::vector<std::string>{"She", "'s", "told", "we", "'re", "they",
                                 "'ve", "I", "'ll", "he", "'d", "I", "'m",
                                 "here", "."});
}

TEST_CASE("hyphenated words stay whole, numbers keep separators") {
  IngestConfig cfg;
  auto sents = tokenize("A well-known rate of 3.14 and 1,000 units.", cfg);
  REQUIRE(sents.size() == 1);
  auto surf = surfaces(sents[0]);
  CHECK(std::find(surf.begin(), surf.end(), "well-known") != surf.end());
  CHECK(std::find(surf.begin(), surf.end(), "3.14") != surf.end());
  CHECK(std::find(surf.begin(), surf.end(), "1,000") != surf.end());
  CHECK(sents[0].tokens[0].is_word);
}

TEST_CASE("numerals are words only for the alnum rule") {
  IngestConfig cfg;
  auto sents = tokenize("I saw 42 cats.", cfg);
  const Token* num = nullptr;
  for (const Token& t : sents[0].tokens)
    if (t.surface == "42") num = &t;
  REQUIRE(num != nullptr);
  CHECK_FALSE(num->is_word);  // no alphabetic character
}

TEST_CASE("curly quotes fold and offsets stay consistent") {
  IngestConfig cfg;
  std::string text = "“Don’t,” she said.";
  Document doc = document_from_text("q", text, cfg);
  REQUIRE(!doc.sentences.empty());
  auto surf = surfaces(doc.sentences[0]);
  CHECK(surf == std::vector<std::string>{"\"", "Do", "n't", ",", "\"", "she",
                                         "said", "."});
  CHECK(offsets_consistent(doc));
}

TEST_CASE("empty and whitespace-only input raise") {
  IngestConfig cfg;
  CHECK_THROWS_AS(tokenize("", cfg), InputError);
  CHECK_THROWS_AS(tokenize("   \n\t ", cfg), InputError);
}

TEST_CASE("tokenize totality on randomized inputs") {
  std::mt19937 rng(424242);
  const std::string alphabet =
      "abc XYZ.,!?'\"()-0123456789\t\n;:/摧é";  // includes multibyte
  IngestConfig cfg;
  int nonempty = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<int> len(0, 60);
    std::string text;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      // Walk codepoint boundaries of the alphabet string.
      std::size_t pos = rng() % alphabet.size();
      while (pos > 0 && (static_cast<unsigned char>(alphabet[pos]) & 0xC0) == 0x80)
        --pos;
      std::size_t end = pos + 1;
      while (end < alphabet.size() &&
             (static_cast<unsigned char>(alphabet[end]) & 0xC0) == 0x80)
        ++end;
      text += alphabet.substr(pos, end - pos);
    }
    std::string normalized = normalize_text(text);
    try {
      auto sents = tokenize(normalized, IngestConfig{false, false});
      ++nonempty;
      check_totality(normalized, sents);
      // Determinism: same bytes, same structure.
      auto again = tokenize(normalized, IngestConfig{false, false});
      REQUIRE(sents.size() == again.size());
      for (std::size_t s = 0; s < sents.size(); ++s)
        CHECK(surfaces(sents[s]) == surfaces(again[s]));
    } catch (const InputError&) {
      // whitespace-only sample
    }
  }
  CHECK(nonempty > 500);
}

TEST_CASE("conllu minimal file and range/empty-node skipping") {
  std::string content =
      "# sent_id = 1\n"
      "1\tHello\t_\tINTJ\tUH\t_\t2\tdiscourse\t_\t_\n"
      "2\tworld\t_\tNOUN\tNN\t_\t0\troot\t_\t_\n"
      "\n";
  Corpus c = read_conllu_string(content, "mini");
  REQUIRE(c.documents.size() == 1);
  REQUIRE(c.documents[0].sentences.size() == 1);
  const Sentence& sent = c.documents[0].sentences[0];
  REQUIRE(sent.size() == 2);
  CHECK(sent.tokens[0].surface == "Hello");
  CHECK(*sent.tokens[0].head == 2);
  CHECK(*sent.tokens[1].head == 0);
  CHECK(*sent.tokens[1].upos == "NOUN");
  CHECK(offsets_consistent(c.documents[0]));

  std::string with_range =
      "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tdo\t_\tAUX\t_\t_\t3\taux\t_\t_\n"
      "2\tn't\t_\tPART\t_\t_\t3\tadvmod\t_\t_\n"
      "3\tstop\t_\tVERB\t_\t_\t0\troot\t_\t_\n"
      "5.1\tghost\t_\tVERB\t_\t_\t_\t_\t_\t_\n"
      "\n";
  Corpus c2 = read_conllu_string(with_range, "range");
  REQUIRE(c2.documents[0].sentences[0].size() == 3);
  CHECK(c2.documents[0].sentences[0].tokens[0].surface == "do");
}

namespace {

std::string parse_error_message(const std::string& content) {
  try {
    read_conllu_string(content, "bad");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("conllu parse errors name the line") {
  CHECK(parse_error_message("1\tonly\tthree\n\n").find("line 1") !=
        std::string::npos);
  CHECK(parse_error_message("1\tw\t_\tNOUN\t_\t_\tx\tdep\t_\t_\n\n")
            .find("non-integer HEAD") != std::string::npos);
  CHECK(parse_error_message("1\tw\t_\tNOUN\t_\t_\t4\tdep\t_\t_\n\n")
            .find("HEAD out of range") != std::string::npos);
}

TEST_CASE("multibyte letters stay inside word tokens") {
  IngestConfig cfg;
  auto sents = tokenize("café victory.", cfg);
  REQUIRE(sents.size() == 1);
  CHECK(sents[0].tokens[0].surface == "café");
  CHECK(sents[0].tokens[0].is_word);
  CHECK(sents[0].tokens[0].lower == "café");
}

TEST_CASE("conllu round-trip preserves annotations") {
  std::string content =
      "1\tShe\t_\tPRON\tPRP\t_\t2\tnsubj\t_\t_\n"
      "2\tate\t_\tVERB\tVBD\t_\t0\troot\t_\t_\n"
      "3\tapples\t_\tNOUN\tNNS\t_\t2\tobj\t_\t_\n"
      "4\t.\t_\tPUNCT\t.\t_\t2\tpunct\t_\t_\n"
      "\n";
  Corpus c = read_conllu_string(content, "rt");
  std::string written = to_conllu(c.documents[0]);
  Corpus c2 = read_conllu_string(written, "rt2");
  REQUIRE(c2.documents.size() == 1);
  const Sentence& a = c.documents[0].sentences[0];
  const Sentence& b = c2.documents[0].sentences[0];
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.tokens[i].surface == b.tokens[i].surface);
    CHECK(a.tokens[i].upos == b.tokens[i].upos);
    CHECK(a.tokens[i].xpos == b.tokens[i].xpos);
    CHECK(a.tokens[i].head == b.tokens[i].head);
    CHECK(a.tokens[i].deprel == b.tokens[i].deprel);
  }
}

TEST_CASE("to_conllu writes placeholders and requires UPOS") {
  IngestConfig cfg;
  Document doc = document_from_text("x", "Hi there.", cfg);
  CHECK_THROWS_AS(to_conllu(doc), InputError);
  for (auto& sent : doc.sentences)
    for (auto& tok : sent.tokens) tok.upos = "X";
  std::string out = to_conllu(doc);
  CHECK(out.find("1\tHi\t_\tX\t_\t_\t_\t_\t_\t_\n") == 0);
  CHECK(out.back() == '\n');
}

TEST_CASE("load_corpus walks directories deterministically") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "obai_ingest_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "b.txt") << "Second file text here.";
  std::ofstream(dir / "a.txt") << "First file text here.";
  std::ofstream(dir / "c.conllu")
      << "1\tWord\t_\tNOUN\t_\t_\t0\troot\t_\t_\n\n";

  IngestConfig cfg;
  Corpus c = load_corpus({dir.string()}, "human", cfg);
  REQUIRE(c.documents.size() == 3);
  CHECK(c.documents[0].id == "a");
  CHECK(c.documents[1].id == "b");
  CHECK(c.documents[2].sentences[0].tokens[0].upos.has_value());
  CHECK(c.documents[0].source_label == SourceLabel::kHuman);

  fs::path empty_dir = dir / "empty";
  fs::create_directories(empty_dir);
  CHECK_THROWS_AS(load_corpus({empty_dir.string()}, "x", cfg), InputError);
  fs::remove_all(dir);
}

TEST_CASE("document ids split on newdoc comments") {
  std::string content =
      "# newdoc id = essay-one\n"
      "1\tA\t_\tDET\t_\t_\t0\troot\t_\t_\n"
      "\n"
      "# newdoc id = essay-two\n"
      "1\tB\t_\tNOUN\t_\t_\t0\troot\t_\t_\n"
      "\n";
  Corpus c = read_conllu_string(content, "multi");
  REQUIRE(c.documents.size() == 2);
  CHECK(c.documents[0].id == "essay-one");
  CHECK(c.documents[1].id == "essay-two");
}

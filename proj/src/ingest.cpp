#include "obai/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace obai {
namespace {

struct Codepoint {
  char32_t cp;
  std::size_t byte_start;
  std::size_t byte_len;
};

// Lenient UTF-8 decode: malformed bytes fall back to their Latin-1 value
// so offsets always stay byte-accurate and tokenization never throws.
std::vector<Codepoint> decode_utf8(const std::string& s) {
  std::vector<Codepoint> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = b0;
    std::size_t len = 1;
    if (b0 >= 0xF0 && i + 3 < s.size()) {
      unsigned char b1 = s[i + 1], b2 = s[i + 2], b3 = s[i + 3];
      if ((b1 & 0xC0) == 0x80 && (b2 & 0xC0) == 0x80 && (b3 & 0xC0) == 0x80) {
        cp = ((b0 & 0x07u) << 18) | ((b1 & 0x3Fu) << 12) | ((b2 & 0x3Fu) << 6) |
             (b3 & 0x3Fu);
        len = 4;
      }
    } else if (b0 >= 0xE0 && i + 2 < s.size()) {
      unsigned char b1 = s[i + 1], b2 = s[i + 2];
      if ((b1 & 0xC0) == 0x80 && (b2 & 0xC0) == 0x80) {
        cp = ((b0 & 0x0Fu) << 12) | ((b1 & 0x3Fu) << 6) | (b2 & 0x3Fu);
        len = 3;
      }
    } else if (b0 >= 0xC0 && i + 1 < s.size()) {
      unsigned char b1 = s[i + 1];
      if ((b1 & 0xC0) == 0x80) {
        cp = ((b0 & 0x1Fu) << 6) | (b1 & 0x3Fu);
        len = 2;
      }
    }
    out.push_back({cp, i, len});
    i += len;
  }
  return out;
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_space_cp(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f' || c == 0xA0 || (c >= 0x2000 && c <= 0x200A) ||
         c == 0x2028 || c == 0x2029 || c == 0x202F || c == 0x3000;
}

bool is_control_cp(char32_t c) {
  return (c < 0x20 && c != '\t' && c != '\n' && c != '\r' && c != '\v' &&
          c != '\f') ||
         c == 0x7F || c == 0xFEFF || c == 0x200B;
}

bool is_digit_cp(char32_t c) { return c >= '0' && c <= '9'; }

bool is_punct_cp(char32_t c) {
  if (c < 0x80)
    return std::ispunct(static_cast<unsigned char>(c)) != 0;
  if (c >= 0x2010 && c <= 0x2015) return true;  // hyphens and dashes
  if (c >= 0x2018 && c <= 0x201F) return true;  // curly quotes
  if (c == 0x2026) return true;                 // ellipsis
  if (c == 0xA1 || c == 0xBF || c == 0xAB || c == 0xBB) return true;
  if (c == 0x2039 || c == 0x203A) return true;
  return false;
}

bool is_letter_cp(char32_t c) {
  if (c < 0x80) return std::isalpha(static_cast<unsigned char>(c)) != 0;
  if (c == 0xAA || c == 0xB5 || c == 0xBA) return true;
  if (c < 0xC0) return false;  // Latin-1 symbols and punctuation
  if (c == 0xD7 || c == 0xF7) return false;
  if (is_space_cp(c) || is_punct_cp(c) || is_control_cp(c)) return false;
  // Anything else outside ASCII is treated as a letter; edited English
  // text only brings in accented Latin here.
  return true;
}

bool is_upper_cp(char32_t c) {
  if (c < 0x80) return std::isupper(static_cast<unsigned char>(c)) != 0;
  return c >= 0xC0 && c <= 0xDE && c != 0xD7;
}

char32_t lower_cp(char32_t c) {
  if (c < 0x80) return static_cast<char32_t>(std::tolower(static_cast<int>(c)));
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  return c;
}

// Combining mark -> precomposed Latin-1/Latin-Extended where a mapping
// exists; returns 0 when the pair has no precomposed form.
char32_t compose(char32_t base, char32_t mark) {
  struct Row {
    char32_t mark;
    const char* bases;
    const char32_t* composed;
  };
  static const char32_t kGrave[] = {0xE0, 0xE8, 0xEC, 0xF2, 0xF9,
                                    0xC0, 0xC8, 0xCC, 0xD2, 0xD9};
  static const char32_t kAcute[] = {0xE1, 0xE9, 0xED, 0xF3, 0xFA,
                                    0xC1, 0xC9, 0xCD, 0xD3, 0xDA};
  static const char32_t kCirc[] = {0xE2, 0xEA, 0xEE, 0xF4, 0xFB,
                                   0xC2, 0xCA, 0xCE, 0xD4, 0xDB};
  static const char32_t kDiaer[] = {0xE4, 0xEB, 0xEF, 0xF6, 0xFC,
                                    0xC4, 0xCB, 0xCF, 0xD6, 0xDC};
  static const Row kRows[] = {
      {0x300, "aeiouAEIOU", kGrave},
      {0x301, "aeiouAEIOU", kAcute},
      {0x302, "aeiouAEIOU", kCirc},
      {0x308, "aeiouAEIOU", kDiaer},
  };
  for (const Row& row : kRows) {
    if (row.mark != mark) continue;
    for (std::size_t i = 0; row.bases[i]; ++i)
      if (static_cast<char32_t>(row.bases[i]) == base) return row.composed[i];
  }
  if (mark == 0x303) {
    if (base == 'n') return 0xF1;
    if (base == 'N') return 0xD1;
    if (base == 'a') return 0xE3;
    if (base == 'A') return 0xC3;
    if (base == 'o') return 0xF5;
    if (base == 'O') return 0xD5;
  }
  if (mark == 0x327) {
    if (base == 'c') return 0xE7;
    if (base == 'C') return 0xC7;
  }
  return 0;
}

const std::vector<std::string>& abbreviations() {
  static const std::vector<std::string> kAbbrev = {
      "mr.", "mrs.", "ms.", "dr.", "prof.", "e.g.", "i.e.",
      "etc.", "vs.", "u.s.", "u.k.", "no.", "st."};
  return kAbbrev;
}

std::string lowercase_string(const std::string& s) {
  std::string out;
  for (const Codepoint& c : decode_utf8(s)) encode_utf8(lower_cp(c.cp), out);
  return out;
}

bool is_abbreviation(const std::string& word) {
  const std::string low = lowercase_string(word);
  const auto& list = abbreviations();
  return std::find(list.begin(), list.end(), low) != list.end();
}

struct RawToken {
  std::size_t byte_start;
  std::size_t byte_end;
  std::string surface;
  bool abbreviation = false;
};

class ChunkTokenizer {
 public:
  ChunkTokenizer(const std::vector<Codepoint>& cps, bool clitics,
                 std::vector<RawToken>& out)
      : cps_(cps), clitics_(clitics), out_(out) {}

  void process(std::size_t lo, std::size_t hi) {
    if (lo >= hi) return;
    // Leading punctuation, one codepoint at a time.
    if (is_punct_cp(cps_[lo].cp) && hi - lo > 1 &&
        !leading_part_of_number(lo, hi)) {
      emit(lo, lo + 1);
      process(lo + 1, hi);
      return;
    }
    // Peel trailing punctuation.
    std::vector<std::pair<std::size_t, std::size_t>> trail;
    std::size_t end = hi;
    while (end > lo && is_punct_cp(cps_[end - 1].cp)) {
      if (cps_[end - 1].cp == '.' && matches_abbreviation(lo, end)) break;
      if (end - lo == 1) break;  // lone punctuation chunk
      // Merge runs of the same sentence-ish mark (e.g. "...", "!!").
      if (!trail.empty() && cps_[trail.back().first].cp == cps_[end - 1].cp &&
          is_run_char(cps_[end - 1].cp)) {
        trail.back().first = end - 1;
      } else {
        trail.push_back({end - 1, end});
      }
      --end;
    }
    if (end > lo) handle_core(lo, end);
    for (auto it = trail.rbegin(); it != trail.rend(); ++it)
      emit(it->first, it->second);
  }

 private:
  static bool is_run_char(char32_t c) {
    return c == '.' || c == '!' || c == '?' || c == '-';
  }

  bool leading_part_of_number(std::size_t lo, std::size_t hi) const {
    // ".5" or "-3": keep the mark glued to a following digit.
    return (cps_[lo].cp == '.' || cps_[lo].cp == '-') && lo + 1 < hi &&
           is_digit_cp(cps_[lo + 1].cp);
  }

  bool matches_abbreviation(std::size_t lo, std::size_t end) const {
    std::string text;
    for (std::size_t i = lo; i < end; ++i) encode_utf8(cps_[i].cp, text);
    return is_abbreviation(text);
  }

  void handle_core(std::size_t lo, std::size_t hi) {
    if (matches_abbreviation(lo, hi)) {
      emit(lo, hi, /*abbrev=*/true);
      return;
    }
    // Split at interior punctuation that never stays word-internal.
    for (std::size_t i = lo; i < hi; ++i) {
      char32_t c = cps_[i].cp;
      if (!is_punct_cp(c)) continue;
      if (c == '-' || c == '\'') continue;  // hyphenated words, clitics
      if ((c == '.' || c == ',') && i > lo && i + 1 < hi &&
          is_digit_cp(cps_[i - 1].cp) && is_digit_cp(cps_[i + 1].cp))
        continue;  // 3.14 / 1,000
      if (c == '.' && looks_like_initialism(lo, hi)) continue;  // U.S.A
      process(lo, i);
      emit(i, i + 1);
      process(i + 1, hi);
      return;
    }
    split_clitics(lo, hi);
  }

  bool looks_like_initialism(std::size_t lo, std::size_t hi) const {
    // Alternating single letters and dots: U.S.A or U.S.A.
    if (hi - lo < 3) return false;
    for (std::size_t i = lo; i < hi; ++i) {
      bool even = ((i - lo) % 2) == 0;
      if (even && !is_letter_cp(cps_[i].cp)) return false;
      if (!even && cps_[i].cp != '.') return false;
    }
    return true;
  }

  void split_clitics(std::size_t lo, std::size_t hi) {
    if (!clitics_) {
      emit(lo, hi);
      return;
    }
    static const char* kClitics[] = {"n't", "'re", "'ve", "'ll",
                                     "'s",  "'d",  "'m"};
    std::string low;
    for (std::size_t i = lo; i < hi; ++i) encode_utf8(lower_cp(cps_[i].cp), low);
    for (const char* suffix : kClitics) {
      std::size_t n = std::string(suffix).size();  // clitics are ASCII
      if (low.size() > n && low.compare(low.size() - n, n, suffix) == 0) {
        split_clitics(lo, hi - n);
        emit(hi - n, hi);
        return;
      }
    }
    emit(lo, hi);
  }

  void emit(std::size_t lo, std::size_t hi, bool abbrev = false) {
    RawToken tok;
    tok.byte_start = cps_[lo].byte_start;
    tok.byte_end = cps_[hi - 1].byte_start + cps_[hi - 1].byte_len;
    for (std::size_t i = lo; i < hi; ++i) encode_utf8(cps_[i].cp, tok.surface);
    tok.abbreviation = abbrev;
    out_.push_back(std::move(tok));
  }

  const std::vector<Codepoint>& cps_;
  bool clitics_;
  std::vector<RawToken>& out_;
};

bool token_is_terminator(const RawToken& t) {
  if (t.abbreviation) return false;
  if (t.surface.empty()) return false;
  for (char c : t.surface)
    if (c != '.' && c != '!' && c != '?') return false;
  return true;
}

bool token_is_closer(const RawToken& t) {
  return t.surface == ")" || t.surface == "]" || t.surface == "}" ||
         t.surface == "\"" || t.surface == "'" || t.surface == "»" ||
         t.surface == "’" || t.surface == "”";
}

bool token_is_opener(const RawToken& t) {
  return t.surface == "(" || t.surface == "[" || t.surface == "{" ||
         t.surface == "\"" || t.surface == "'" || t.surface == "«" ||
         t.surface == "‘" || t.surface == "“";
}

bool starts_uppercase(const RawToken& t) {
  auto cps = decode_utf8(t.surface);
  return !cps.empty() && is_upper_cp(cps[0].cp);
}

Token finalize_token(const RawToken& raw) {
  Token tok;
  tok.surface = raw.surface;
  tok.lower = lowercase_string(raw.surface);
  tok.char_start = raw.byte_start;
  tok.char_end = raw.byte_end;
  tok.is_word = false;
  for (const Codepoint& c : decode_utf8(raw.surface))
    if (is_letter_cp(c.cp)) {
      tok.is_word = true;
      break;
    }
  return tok;
}

}  // namespace

std::string normalize_text(const std::string& raw) {
  std::vector<Codepoint> cps = decode_utf8(raw);
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t c = cps[i].cp;
    if (c == 0x2018 || c == 0x2019 || c == 0x201A || c == 0x201B) {
      out.push_back('\'');
      continue;
    }
    if (c == 0x201C || c == 0x201D || c == 0x201E || c == 0x201F) {
      out.push_back('"');
      continue;
    }
    if (i + 1 < cps.size()) {
      char32_t composed = compose(c, cps[i + 1].cp);
      if (composed != 0) {
        encode_utf8(composed, out);
        ++i;
        continue;
      }
    }
    encode_utf8(c, out);
  }
  return out;
}

std::vector<Sentence> tokenize(const std::string& raw, const IngestConfig& cfg) {
  const std::string text = cfg.normalize_unicode ? normalize_text(raw) : raw;
  std::vector<Codepoint> cps = decode_utf8(text);

  std::vector<RawToken> raw_tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (is_space_cp(cps[i].cp) || is_control_cp(cps[i].cp)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && !is_space_cp(cps[j].cp) &&
           !is_control_cp(cps[j].cp))
      ++j;
    ChunkTokenizer(cps, cfg.clitic_splitting, raw_tokens).process(i, j);
    i = j;
  }
  if (raw_tokens.empty())
    throw InputError("empty document: no tokens in input text");

  // Sentence boundaries: terminator (+ closing quotes) followed by
  // whitespace and a capitalized token.
  std::vector<Sentence> sentences;
  Sentence current;
  for (std::size_t t = 0; t < raw_tokens.size(); ++t) {
    current.tokens.push_back(finalize_token(raw_tokens[t]));
    if (!token_is_terminator(raw_tokens[t])) continue;

    std::size_t after = t + 1;
    while (after < raw_tokens.size() && token_is_closer(raw_tokens[after]) &&
           raw_tokens[after].byte_start == raw_tokens[after - 1].byte_end) {
      current.tokens.push_back(finalize_token(raw_tokens[after]));
      ++t;
      ++after;
    }
    if (after >= raw_tokens.size()) break;
    if (raw_tokens[after].byte_start <= raw_tokens[after - 1].byte_end)
      continue;  // no whitespace gap
    std::size_t probe = after;
    while (probe < raw_tokens.size() && token_is_opener(raw_tokens[probe]))
      ++probe;
    if (probe < raw_tokens.size() && starts_uppercase(raw_tokens[probe])) {
      sentences.push_back(std::move(current));
      current = Sentence{};
    }
  }
  if (!current.tokens.empty()) sentences.push_back(std::move(current));
  return sentences;
}

Document document_from_text(const std::string& id, const std::string& text,
                            const IngestConfig& cfg, SourceLabel label) {
  Document doc;
  doc.id = id;
  doc.source_label = label;
  doc.raw_text = cfg.normalize_unicode ? normalize_text(text) : text;
  IngestConfig inner = cfg;
  inner.normalize_unicode = false;  // already applied; keeps offsets aligned
  doc.sentences = tokenize(doc.raw_text, inner);
  return doc;
}

namespace {

int parse_head(const std::string& field, std::size_t line_no) {
  if (field.empty()) throw ParseError("line " + std::to_string(line_no) +
                                      ": empty HEAD column");
  for (char c : field)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("line " + std::to_string(line_no) +
                       ": non-integer HEAD '" + field + "'");
  return std::stoi(field);
}

struct PendingToken {
  Token token;
  std::size_t line_no;
};

void finish_sentence(std::vector<PendingToken>& pending, Document& doc) {
  if (pending.empty()) return;
  const int n = static_cast<int>(pending.size());
  Sentence sent;
  for (int idx = 0; idx < n; ++idx) {
    PendingToken& p = pending[idx];
    if (p.token.head) {
      int h = *p.token.head;
      if (h < 0 || h > n)
        throw ParseError("line " + std::to_string(p.line_no) +
                         ": HEAD out of range: " + std::to_string(h));
      if (h == idx + 1)
        throw ParseError("line " + std::to_string(p.line_no) +
                         ": token is its own head");
      if (!p.token.deprel)
        throw ParseError("line " + std::to_string(p.line_no) +
                         ": HEAD present without DEPREL");
    }
    sent.tokens.push_back(std::move(p.token));
  }
  doc.sentences.push_back(std::move(sent));
  pending.clear();
}

void assign_offsets(Document& doc) {
  std::string text;
  for (auto& sent : doc.sentences) {
    for (auto& tok : sent.tokens) {
      if (!text.empty()) text.push_back(' ');
      tok.char_start = text.size();
      text += tok.surface;
      tok.char_end = text.size();
    }
  }
  doc.raw_text = std::move(text);
}

}  // namespace

Corpus read_conllu_string(const std::string& content, const std::string& name) {
  Corpus corpus;
  corpus.label = name;
  Document doc;
  doc.id = name;
  int doc_index = 0;
  bool doc_has_content = false;
  std::vector<PendingToken> pending;

  auto flush_document = [&](const std::string& next_id) {
    finish_sentence(pending, doc);
    if (!doc.sentences.empty()) {
      assign_offsets(doc);
      corpus.documents.push_back(std::move(doc));
    }
    doc = Document{};
    doc.id = next_id;
  };

  std::istringstream in(content);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish_sentence(pending, doc);
      continue;
    }
    if (line[0] == '#') {
      const std::string kNewdoc = "# newdoc";
      if (line.compare(0, kNewdoc.size(), kNewdoc) == 0) {
        std::string next_id = name + "#" + std::to_string(++doc_index);
        auto eq = line.find("id =");
        if (eq != std::string::npos) {
          std::string given = line.substr(eq + 4);
          while (!given.empty() && given.front() == ' ') given.erase(0, 1);
          if (!given.empty()) next_id = given;
        }
        if (doc_has_content) flush_document(next_id);
        else doc.id = next_id;
        doc_has_content = true;
      }
      continue;
    }

    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        cols.push_back(line.substr(start));
        break;
      }
      cols.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (cols.size() != 10)
      throw ParseError("line " + std::to_string(line_no) + ": expected 10 " +
                       "tab-separated columns, got " +
                       std::to_string(cols.size()));

    const std::string& id_col = cols[0];
    if (id_col.find('-') != std::string::npos) continue;  // multiword range
    if (id_col.find('.') != std::string::npos) continue;  // empty node

    PendingToken p;
    p.line_no = line_no;
    p.token.surface = cols[1];
    p.token.lower = lowercase_string(cols[1]);
    for (const Codepoint& c : decode_utf8(cols[1]))
      if (is_letter_cp(c.cp)) {
        p.token.is_word = true;
        break;
      }
    if (cols[3] != "_") p.token.upos = cols[3];
    if (cols[4] != "_") p.token.xpos = cols[4];
    if (cols[6] != "_") p.token.head = parse_head(cols[6], line_no);
    if (cols[7] != "_") p.token.deprel = cols[7];
    pending.push_back(std::move(p));
    doc_has_content = true;
  }
  finish_sentence(pending, doc);
  if (!doc.sentences.empty()) {
    assign_offsets(doc);
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

Corpus read_conllu(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open CoNLL-U file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return read_conllu_string(buf.str(),
                              std::filesystem::path(path).stem().string());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string to_conllu(const Document& doc) {
  std::string out;
  for (const auto& sent : doc.sentences) {
    for (std::size_t i = 0; i < sent.tokens.size(); ++i) {
      const Token& t = sent.tokens[i];
      if (!t.upos)
        throw InputError("document '" + doc.id +
                         "' has tokens without UPOS; tag it first");
      out += std::to_string(i + 1);
      out.push_back('\t');
      out += t.surface;
      out += "\t_\t";
      out += *t.upos;
      out.push_back('\t');
      out += t.xpos ? *t.xpos : "_";
      out += "\t_\t";
      out += t.head ? std::to_string(*t.head) : "_";
      out.push_back('\t');
      out += t.deprel ? *t.deprel : "_";
      out += "\t_\t_\n";
    }
    out.push_back('\n');
  }
  return out;
}

void write_conllu(const Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write CoNLL-U file: " + path);
  out << to_conllu(doc);
  if (!out) throw InputError("I/O failure writing " + path);
}

Corpus load_corpus(const std::vector<std::string>& paths,
                   const std::string& label, const IngestConfig& cfg) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& p : paths) {
    fs::path path(p);
    if (fs::is_directory(path)) {
      for (const auto& entry : fs::directory_iterator(path)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        if (ext == ".txt" || ext == ".conllu") files.push_back(entry.path());
      }
    } else if (fs::is_regular_file(path)) {
      files.push_back(path);
    } else {
      throw InputError("no such file or directory: " + p);
    }
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              if (a.filename() != b.filename())
                return a.filename() < b.filename();
              return a < b;
            });

  Corpus corpus;
  corpus.label = label;
  SourceLabel source = SourceLabel::kUnknown;
  if (label == "human" || label == "ai") source = source_label_from_string(label);

  for (const auto& file : files) {
    if (file.extension() == ".conllu") {
      Corpus sub = read_conllu(file.string());
      for (auto& d : sub.documents) {
        d.source_label = source;
        d.metadata["origin"] = file.string();
        corpus.documents.push_back(std::move(d));
      }
      continue;
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    Document doc = document_from_text(file.stem().string(), buf.str(), cfg,
                                      source);
    doc.metadata["origin"] = file.string();
    corpus.documents.push_back(std::move(doc));
  }
  if (corpus.documents.empty())
    throw InputError("no documents loaded from the given paths");
  return corpus;
}

}  // namespace obai

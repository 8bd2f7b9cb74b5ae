#include "obai/features.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace obai::feat {
namespace {

const std::map<std::string, std::string>& upos_feature_names() {
  static const std::map<std::string, std::string> kNames = {
      {"ADJ", "adjective"},
      {"ADP", "adposition"},
      {"ADV", "adverb"},
      {"AUX", "auxiliary"},
      {"CCONJ", "coordinating_conjunction"},
      {"DET", "determiner"},
      {"INTJ", "interjection"},
      {"NOUN", "noun"},
      {"NUM", "numeral"},
      {"PART", "particle"},
      {"PRON", "pronoun"},
      {"PROPN", "proper_noun"},
      {"PUNCT", "punctuation"},
      {"SCONJ", "subordinating_conjunction"},
      {"SYM", "symbol"},
      {"VERB", "verb"},
      {"X", "other"},
  };
  return kNames;
}

bool is_content_upos(const std::string& upos) {
  return upos == "NOUN" || upos == "PROPN" || upos == "VERB" ||
         upos == "ADJ" || upos == "ADV";
}

bool is_function_upos(const std::string& upos) {
  return upos == "ADP" || upos == "AUX" || upos == "CCONJ" ||
         upos == "SCONJ" || upos == "DET" || upos == "PRON" || upos == "PART";
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

LabelMap LabelMap::from_string(const std::string& content,
                               const std::string& name) {
  LabelMap map;
  std::istringstream in(content);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      // Directive comments: "# scheme_id = ud"
      auto pos = line.find("scheme_id");
      if (pos != std::string::npos) {
        auto eq = line.find('=', pos);
        if (eq != std::string::npos) {
          std::string value = line.substr(eq + 1);
          std::string trimmed;
          for (char c : value)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
          map.scheme_id = trimmed;
        }
      }
      continue;
    }
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw ParseError(name + " line " + std::to_string(line_no) +
                       ": expected raw_label<TAB>feature_name");
    map.pairs[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return map;
}

LabelMap LabelMap::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open label map: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str(), path);
}

LabelMap LabelMap::bundled_ud() {
  LabelMap map;
  map.scheme_id = "ud";
  map.pairs = {
      {"amod", "adjectival_modifier"}, {"advmod", "adverbial_modifier"},
      {"conj", "conjunct"},            {"det", "determiner"},
      {"obj", "direct_object"},        {"nsubj", "nominal_subject"},
      {"nsubj:pass", "nominal_subject"}, {"root", "root"},
  };
  return map;
}

WordList WordList::from_string(const std::string& content,
                               const std::string& name) {
  WordList list;
  list.name = name;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::string word;
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) break;
      word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (!word.empty()) list.words.insert(word);
  }
  if (list.words.empty()) throw InputError("word list is empty: " + name);
  return list;
}

WordList WordList::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open word list: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str(), path);
}

bool WordList::contains_with_inflections(const std::string& lower_word) const {
  if (words.count(lower_word)) return true;
  std::vector<std::string> candidates;
  auto add_stripped_forms = [&](const std::string& suffix) {
    if (!ends_with(lower_word, suffix) ||
        lower_word.size() <= suffix.size())
      return;
    std::string base = lower_word.substr(0, lower_word.size() - suffix.size());
    candidates.push_back(base);
    if (suffix == "ed" || suffix == "ing") {
      // stopped -> stop, making -> make
      if (base.size() >= 2 && base[base.size() - 1] == base[base.size() - 2])
        candidates.push_back(base.substr(0, base.size() - 1));
      candidates.push_back(base + "e");
    }
  };
  add_stripped_forms("s");
  add_stripped_forms("es");
  add_stripped_forms("ed");
  add_stripped_forms("ing");
  for (const auto& c : candidates)
    if (words.count(c)) return true;
  return false;
}

FeatureCounts morphological_counts(const Document& doc) {
  FeatureCounts fc;
  for (const auto& [upos, feature] : upos_feature_names())
    if (upos != "PUNCT" && upos != "SYM" && upos != "X")
      fc.counts[feature] = 0;
  fc.bases["total_words"] = 0;
  for (const Sentence& sent : doc.sentences) {
    for (const Token& tok : sent.tokens) {
      if (!tok.is_word) continue;
      if (!tok.upos)
        throw InputError("document '" + doc.id +
                         "' is untagged; run the tagger first");
      auto it = upos_feature_names().find(*tok.upos);
      if (it == upos_feature_names().end())
        throw InputError("document '" + doc.id + "': unknown UPOS tag '" +
                         *tok.upos + "'");
      fc.bases["total_words"] += 1;
      fc.counts[it->second] += 1;
    }
  }
  return fc;
}

FeatureCounts syntactic_counts(const Document& doc, const LabelMap& map) {
  FeatureCounts fc;
  for (const auto& [raw, feature] : map.pairs) fc.counts[feature] = 0;
  const bool ud_rules = map.scheme_id == "ud";
  if (ud_rules) {
    fc.counts["prepositional_modifier"] = 0;
    fc.counts["object_preposition"] = 0;
  }
  fc.bases["total_tokens"] = 0;

  for (const Sentence& sent : doc.sentences) {
    const int n = static_cast<int>(sent.size());
    for (int i = 0; i < n; ++i) {
      const Token& tok = sent.tokens[i];
      if (!tok.head || !tok.deprel)
        throw InputError("document '" + doc.id +
                         "' is unparsed; run the parser first");
      fc.bases["total_tokens"] += 1;

      auto mapped = map.pairs.find(*tok.deprel);
      if (mapped != map.pairs.end()) {
        fc.counts[mapped->second] += 1;
        continue;
      }
      if (ud_rules) {
        if (*tok.deprel == "case" && tok.upos && *tok.upos == "ADP") {
          fc.counts["prepositional_modifier"] += 1;
          continue;
        }
        if (*tok.deprel == "nmod" || *tok.deprel == "obl") {
          bool has_adp_case_child = false;
          for (int j = 0; j < n; ++j) {
            const Token& child = sent.tokens[j];
            if (child.head && *child.head == i + 1 && child.deprel &&
                *child.deprel == "case" && child.upos &&
                *child.upos == "ADP") {
              has_adp_case_child = true;
              break;
            }
          }
          if (has_adp_case_child) {
            fc.counts["object_preposition"] += 1;
            continue;
          }
        }
      }
      fc.counts[*tok.deprel] += 1;  // unmapped labels keep their raw name
    }
  }
  return fc;
}

FeatureCounts lexical_counts(const Document& doc, const WordList& easy) {
  FeatureCounts fc;
  fc.counts["easy_word"] = 0;
  fc.counts["difficult_word"] = 0;
  fc.counts["content_word"] = 0;
  fc.counts["function_word"] = 0;
  fc.counts["hapax_legomena"] = 0;
  fc.counts["types"] = 0;
  fc.bases["total_words"] = 0;

  std::unordered_map<std::string, int> type_freq;
  for (const Sentence& sent : doc.sentences) {
    for (const Token& tok : sent.tokens) {
      if (!tok.is_word) continue;
      if (!tok.upos)
        throw InputError("document '" + doc.id +
                         "' is untagged; run the tagger first");
      fc.bases["total_words"] += 1;
      if (easy.contains_with_inflections(tok.lower))
        fc.counts["easy_word"] += 1;
      else
        fc.counts["difficult_word"] += 1;
      if (is_content_upos(*tok.upos)) fc.counts["content_word"] += 1;
      if (is_function_upos(*tok.upos)) fc.counts["function_word"] += 1;
      type_freq[tok.lower] += 1;
    }
  }
  fc.counts["types"] = static_cast<std::int64_t>(type_freq.size());
  for (const auto& [form, freq] : type_freq)
    if (freq == 1) fc.counts["hapax_legomena"] += 1;
  return fc;
}

LexicalRatios lexical_ratios(const FeatureCounts& lexical) {
  LexicalRatios r;
  const double total = static_cast<double>(lexical.base("total_words"));
  if (total > 0) {
    r.ttr = static_cast<double>(lexical.count("types")) / total;
    r.hapax_ratio =
        static_cast<double>(lexical.count("hapax_legomena")) / total;
  }
  return r;
}

}  // namespace obai::feat

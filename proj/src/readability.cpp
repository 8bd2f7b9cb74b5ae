#include "obai/readability.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace obai::read {
namespace {

bool has_alpha(const std::string& s) {
  for (char c : s)
    if (std::isalpha(static_cast<unsigned char>(c))) return true;
  return false;
}

bool is_readability_word(const Token& tok) {
  for (char c : tok.surface)
    if (std::isalnum(static_cast<unsigned char>(c))) return true;
  return false;
}

std::int64_t alnum_chars(const std::string& s) {
  std::int64_t n = 0;
  for (char c : s)
    if (std::isalnum(static_cast<unsigned char>(c))) ++n;
  return n;
}

const std::set<std::string>& be_get_forms() {
  static const std::set<std::string> kForms = {
      "am", "is", "are", "was", "were", "be", "been", "being",
      "get", "gets", "got", "gotten", "getting"};
  return kForms;
}

const std::set<std::string>& irregular_participles() {
  static const std::set<std::string> kList = {
      "begun",   "bought", "brought", "built",  "caught", "chosen", "done",
      "drawn",   "driven", "eaten",   "fallen", "felt",   "flown",  "found",
      "given",   "gone",   "grown",   "heard",  "held",   "hidden", "kept",
      "known",   "laid",   "led",     "left",   "lost",   "made",   "meant",
      "met",     "paid",   "put",     "read",   "run",    "said",   "seen",
      "sent",    "set",    "shown",   "sold",   "spent",  "spoken", "stood",
      "sung",    "taught", "thought", "thrown", "told",   "understood",
      "won",     "worn",   "written"};
  return kList;
}

bool looks_like_participle(const Token& tok) {
  if (tok.xpos) return *tok.xpos == "VBN";
  if (!tok.upos || *tok.upos != "VERB") return false;
  const std::string& w = tok.lower;
  if (w.size() > 2 && (w.compare(w.size() - 2, 2, "ed") == 0 ||
                       w.compare(w.size() - 2, 2, "en") == 0))
    return true;
  return irregular_participles().count(w) > 0;
}

bool sentence_fully_parsed(const Sentence& sent) {
  for (const Token& t : sent.tokens)
    if (!t.head || !t.deprel) return false;
  return true;
}

bool passive_by_deps(const Sentence& sent) {
  for (const Token& t : sent.tokens)
    if (t.deprel && (*t.deprel == "nsubj:pass" || *t.deprel == "aux:pass"))
      return true;
  return false;
}

bool passive_by_heuristic(const Sentence& sent, const std::string& doc_id) {
  std::vector<const Token*> words;
  for (const Token& t : sent.tokens)
    if (t.is_word) words.push_back(&t);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!words[i]->upos)
      throw InputError("document '" + doc_id +
                       "' is untagged; run the tagger first");
    if (!be_get_forms().count(words[i]->lower)) continue;
    for (std::size_t j = i + 1; j < words.size() && j <= i + 3; ++j)
      if (looks_like_participle(*words[j])) return true;
  }
  return false;
}

}  // namespace

TextStats text_stats(const Document& doc, const phon::PhonLexicon& lex,
                     const feat::WordList& easy) {
  TextStats st;
  st.sentences = static_cast<std::int64_t>(doc.sentences.size());

  std::int64_t sample_limit = 100;
  std::int64_t sampled = 0;
  std::int64_t sample_sentences = 0;

  for (const Sentence& sent : doc.sentences) {
    bool sentence_in_sample = false;
    for (const Token& tok : sent.tokens) {
      if (!is_readability_word(tok)) continue;
      st.words += 1;
      st.letters_and_digits += alnum_chars(tok.surface);

      int syll = 1;  // tokens without letters (plain numerals) count one
      if (has_alpha(tok.surface))
        syll = phon::syllable_count(tok.lower, lex).count;
      st.syllables += syll;
      if (syll >= 3) {
        st.complex_words += 1;
        st.polysyllables += 1;
      }
      // Numerals count as familiar; everything else goes through the
      // easy-word list.
      if (has_alpha(tok.surface) &&
          !easy.contains_with_inflections(tok.lower))
        st.difficult_words += 1;

      if (sampled < sample_limit) {
        sampled += 1;
        if (!sentence_in_sample) {
          sentence_in_sample = true;
          sample_sentences += 1;
        }
        if (syll >= 3)
          st.linsear_hard += 1;
        else
          st.linsear_easy += 1;
      }
    }
  }
  if (st.words == 0)
    throw InputError("document '" + doc.id + "' has no words");
  st.linsear_sentences = std::max<std::int64_t>(1, sample_sentences);
  return st;
}

PassiveStats passive_sentences(const Document& doc) {
  PassiveStats ps;
  ps.sentences = static_cast<std::int64_t>(doc.sentences.size());
  for (const Sentence& sent : doc.sentences) {
    bool passive = sentence_fully_parsed(sent)
                       ? passive_by_deps(sent)
                       : passive_by_heuristic(sent, doc.id);
    if (passive) ps.passive += 1;
  }
  if (ps.sentences > 0)
    ps.pct = 100.0 * static_cast<double>(ps.passive) /
             static_cast<double>(ps.sentences);
  return ps;
}

ReadabilityReport compute_readability(const TextStats& stats,
                                      const Document& doc, double wpm) {
  if (stats.words <= 0 || stats.sentences <= 0)
    throw InputError("readability needs at least one word and one sentence");
  if (wpm <= 0) throw ConfigError("words-per-minute must be positive");

  const double w = static_cast<double>(stats.words);
  const double s = static_cast<double>(stats.sentences);
  const double syll = static_cast<double>(stats.syllables);
  const double letters = static_cast<double>(stats.letters_and_digits);
  const double cmplx = static_cast<double>(stats.complex_words);
  const double poly = static_cast<double>(stats.polysyllables);
  const double difficult = static_cast<double>(stats.difficult_words);

  ReadabilityReport r;
  r.reading_time_sec = 60.0 * w / wpm;
  r.flesch_reading_ease = 206.835 - 1.015 * (w / s) - 84.6 * (syll / w);
  r.flesch_kincaid_grade = 0.39 * (w / s) + 11.8 * (syll / w) - 15.59;
  r.gunning_fog = 0.4 * (w / s + 100.0 * cmplx / w);
  const double l = 100.0 * letters / w;
  const double sp = 100.0 * s / w;
  r.coleman_liau = 0.0588 * l - 0.296 * sp - 15.8;
  r.ari = 4.71 * (letters / w) + 0.5 * (w / s) - 21.43;
  r.smog = 1.0430 * std::sqrt(poly * 30.0 / s) + 3.1291;

  const double linsear_r =
      (1.0 * static_cast<double>(stats.linsear_easy) +
       3.0 * static_cast<double>(stats.linsear_hard)) /
      static_cast<double>(stats.linsear_sentences);
  r.linsear_write = linsear_r > 20.0 ? linsear_r / 2.0 : linsear_r / 2.0 - 1.0;

  r.dale_chall = 0.1579 * (100.0 * difficult / w) + 0.0496 * (w / s);
  if (difficult / w > 0.05) r.dale_chall += 3.6365;

  r.passive_sentence_pct = passive_sentences(doc).pct;
  r.difficult_words = difficult;
  return r;
}

CorpusReadability corpus_readability(const Corpus& corpus,
                                     const phon::PhonLexicon& lex,
                                     const feat::WordList& easy, double wpm) {
  if (corpus.documents.empty())
    throw InputError("corpus '" + corpus.label + "' is empty");
  CorpusReadability out;
  for (const Document& doc : corpus.documents) {
    TextStats st = text_stats(doc, lex, easy);
    out.per_document.emplace_back(doc.id, compute_readability(st, doc, wpm));
  }
  const double n = static_cast<double>(out.per_document.size());
  for (const auto& [id, rep] : out.per_document) {
    out.mean.reading_time_sec += rep.reading_time_sec / n;
    out.mean.flesch_reading_ease += rep.flesch_reading_ease / n;
    out.mean.flesch_kincaid_grade += rep.flesch_kincaid_grade / n;
    out.mean.gunning_fog += rep.gunning_fog / n;
    out.mean.coleman_liau += rep.coleman_liau / n;
    out.mean.ari += rep.ari / n;
    out.mean.smog += rep.smog / n;
    out.mean.linsear_write += rep.linsear_write / n;
    out.mean.passive_sentence_pct += rep.passive_sentence_pct / n;
    out.mean.dale_chall += rep.dale_chall / n;
    out.mean.difficult_words += rep.difficult_words / n;
  }
  return out;
}

}  // namespace obai::read

#include "obai/tagger.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "obai/perceptron_util.hpp"

namespace obai::tag {
namespace {

std::string word_shape(const std::string& surface) {
  std::string shape;
  char last = '\0';
  for (char c : surface) {
    char cls;
    unsigned char uc = static_cast<unsigned char>(c);
    if (std::isupper(uc))
      cls = 'X';
    else if (std::islower(uc))
      cls = 'x';
    else if (std::isdigit(uc))
      cls = 'd';
    else
      cls = '-';
    if (cls != last) shape.push_back(cls);
    last = cls;
  }
  return shape;
}

// Fixed feature template: word, lowercase, short suffixes/prefix,
// previous tags, neighbouring lowercased words, and the shape signature.
std::vector<std::string> token_features(const Sentence& sent, std::size_t i,
                                        const std::string& prev,
                                        const std::string& prev2) {
  const Token& tok = sent.tokens[i];
  const std::string& lower = tok.lower;
  std::vector<std::string> feats;
  feats.reserve(12);
  feats.push_back("bias");
  feats.push_back("w=" + tok.surface);
  feats.push_back("lw=" + lower);
  for (std::size_t k = 1; k <= 3; ++k)
    if (lower.size() >= k) feats.push_back("suf" + std::to_string(k) + "=" +
                                           lower.substr(lower.size() - k));
  if (!lower.empty()) feats.push_back("pre1=" + lower.substr(0, 1));
  feats.push_back("pt=" + prev);
  feats.push_back("ptt=" + prev2 + "|" + prev);
  feats.push_back("plw=" + (i > 0 ? sent.tokens[i - 1].lower : "<s>"));
  feats.push_back("nlw=" +
                  (i + 1 < sent.size() ? sent.tokens[i + 1].lower : "</s>"));
  feats.push_back("shape=" + word_shape(tok.surface));
  return feats;
}

std::string joint_label(const Token& tok) {
  return *tok.upos + "|" + (tok.xpos ? *tok.xpos : "_");
}

std::string predict(const TaggerModel& model,
                    const std::vector<std::string>& feats) {
  std::map<std::string, double> scores;
  for (const auto& f : feats) {
    auto it = model.weights.find(f);
    if (it == model.weights.end()) continue;
    for (const auto& [tag, w] : it->second) scores[tag] += w;
  }
  // Tagset is sorted; ties go to the lexicographically smallest tag.
  std::string best = model.tagset.front();
  double best_score = scores.count(best) ? scores[best] : 0.0;
  for (const auto& tag : model.tagset) {
    double s = scores.count(tag) ? scores[tag] : 0.0;
    if (s > best_score) {
      best = tag;
      best_score = s;
    }
  }
  return best;
}

}  // namespace

TaggerModel train_tagger(const Corpus& treebank, int epochs,
                         std::uint64_t seed) {
  if (epochs < 1) throw ConfigError("train_tagger: epochs must be >= 1");

  std::vector<const Sentence*> sentences;
  bool all_have_xpos = true;
  std::vector<std::string> tags;
  for (const Document& doc : treebank.documents) {
    for (const Sentence& sent : doc.sentences) {
      if (sent.empty()) continue;
      sentences.push_back(&sent);
      for (const Token& tok : sent.tokens) {
        if (!tok.upos)
          throw InputError("train_tagger: token '" + tok.surface +
                           "' has no gold UPOS");
        if (!tok.xpos) all_have_xpos = false;
      }
    }
  }
  if (sentences.empty()) throw InputError("train_tagger: empty treebank");

  TaggerModel model;
  model.joint_xpos = all_have_xpos;
  for (const Sentence* sent : sentences)
    for (const Token& tok : sent->tokens)
      tags.push_back(model.joint_xpos ? joint_label(tok) : *tok.upos);
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  model.tagset = std::move(tags);

  AveragedWeights learner;
  SplitMix64 rng(seed);

  for (int epoch = 0; epoch < epochs; ++epoch) {
    shuffle_indices(sentences.size(), rng, [&](std::size_t a, std::size_t b) {
      std::swap(sentences[a], sentences[b]);
    });
    for (const Sentence* sent : sentences) {
      std::string prev = "<s>", prev2 = "<s2>";
      for (std::size_t i = 0; i < sent->size(); ++i) {
        learner.begin_step();
        auto feats = token_features(*sent, i, prev, prev2);
        std::string gold = model.joint_xpos ? joint_label(sent->tokens[i])
                                            : *sent->tokens[i].upos;
        std::string guess =
            learner.best(feats, model.tagset);
        if (guess != gold) {
          for (const auto& f : feats) {
            learner.update(f, gold, +1.0);
            learner.update(f, guess, -1.0);
          }
        }
        prev2 = prev;
        prev = guess;
      }
    }
  }
  model.weights = learner.averaged();
  return model;
}

Document tag(const Document& doc, const TaggerModel& model) {
  if (model.tagset.empty()) throw ConfigError("tagger model has no tags");
  Document out = doc;
  for (Sentence& sent : out.sentences) {
    std::string prev = "<s>", prev2 = "<s2>";
    for (std::size_t i = 0; i < sent.size(); ++i) {
      auto feats = token_features(sent, i, prev, prev2);
      std::string label = predict(model, feats);
      Token& tok = sent.tokens[i];
      if (model.joint_xpos) {
        auto bar = label.find('|');
        tok.upos = label.substr(0, bar);
        std::string xpos = label.substr(bar + 1);
        if (xpos != "_") tok.xpos = xpos;
      } else {
        tok.upos = label;
      }
      prev2 = prev;
      prev = label;
    }
  }
  return out;
}

double tagging_accuracy(const Corpus& gold, const TaggerModel& model) {
  std::int64_t total = 0, correct = 0;
  for (const Document& doc : gold.documents) {
    Document stripped = doc;
    for (Sentence& sent : stripped.sentences)
      for (Token& tok : sent.tokens) {
        tok.upos.reset();
        tok.xpos.reset();
      }
    Document tagged = tag(stripped, model);
    for (std::size_t s = 0; s < doc.sentences.size(); ++s)
      for (std::size_t i = 0; i < doc.sentences[s].size(); ++i) {
        ++total;
        if (doc.sentences[s].tokens[i].upos == tagged.sentences[s].tokens[i].upos)
          ++correct;
      }
  }
  if (total == 0) throw InputError("tagging_accuracy: empty corpus");
  return static_cast<double>(correct) / static_cast<double>(total);
}

std::string TaggerModel::serialize() const {
  std::ostringstream out;
  out << "OBAI-TAGGER/1\n";
  out << "joint\t" << (joint_xpos ? 1 : 0) << "\n";
  out << "tags";
  for (const auto& t : tagset) out << "\t" << t;
  out << "\n";
  out.precision(17);
  for (const auto& [feat, per_tag] : weights)
    for (const auto& [tag, w] : per_tag)
      if (w != 0.0) out << feat << "\t" << tag << "\t" << w << "\n";
  return out.str();
}

void TaggerModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write model file: " + path);
  out << serialize();
  if (!out) throw InputError("I/O failure writing " + path);
}

TaggerModel TaggerModel::deserialize(const std::string& content,
                                     const std::string& name) {
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line) || line != "OBAI-TAGGER/1")
    throw ConfigError(name + ": not an OBAI-TAGGER/1 model file");
  TaggerModel model;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      if (tab == std::string::npos) {
        cols.push_back(line.substr(start));
        break;
      }
      cols.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (cols[0] == "joint" && cols.size() == 2) {
      model.joint_xpos = cols[1] == "1";
      continue;
    }
    if (cols[0] == "tags") {
      model.tagset.assign(cols.begin() + 1, cols.end());
      continue;
    }
    if (cols.size() != 3)
      throw ConfigError(name + " line " + std::to_string(line_no) +
                        ": bad weight row");
    double w = 0.0;
    auto [ptr, ec] =
        std::from_chars(cols[2].data(), cols[2].data() + cols[2].size(), w);
    if (ec != std::errc() || !std::isfinite(w))
      throw ConfigError(name + " line " + std::to_string(line_no) +
                        ": bad weight value '" + cols[2] + "'");
    model.weights[cols[0]][cols[1]] = w;
  }
  if (model.tagset.empty())
    throw ConfigError(name + ": model has an empty tagset");
  return model;
}

TaggerModel TaggerModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str(), path);
}

}  // namespace obai::tag

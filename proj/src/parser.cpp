#include "obai/parser.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "obai/perceptron_util.hpp"

namespace obai::parse {
namespace {

constexpr const char* kShift = "SHIFT";

std::string left_arc(const std::string& label) {
  return "LEFT-ARC(" + label + ")";
}
std::string right_arc(const std::string& label) {
  return "RIGHT-ARC(" + label + ")";
}

// Parser state over token indices 1..n; 0 is the artificial root.
struct State {
  std::vector<int> stack{0};
  int next = 1;  // first buffer item
  int n = 0;
  std::vector<int> head;          // 1-based; head[i] = -1 until attached
  std::vector<std::string> label;

  explicit State(int n_tokens)
      : n(n_tokens), head(n_tokens + 1, -1), label(n_tokens + 1) {}

  bool buffer_empty() const { return next > n; }
  bool terminal() const { return buffer_empty() && stack.size() == 1; }
  int s0() const { return stack.empty() ? -1 : stack.back(); }
  int s1() const {
    return stack.size() < 2 ? -1 : stack[stack.size() - 2];
  }

  bool shift_legal() const { return !buffer_empty(); }
  bool left_legal() const { return stack.size() >= 2 && s1() != 0; }
  bool right_legal() const {
    if (stack.size() < 2) return false;
    // Attaching to the root is only allowed as the very last step; this
    // keeps exactly one head-0 token per sentence.
    if (s1() == 0) return buffer_empty() && stack.size() == 2;
    return true;
  }

  void apply_shift() {
    stack.push_back(next);
    ++next;
  }
  void apply_left(const std::string& l) {
    int dep = s1();
    head[dep] = s0();
    label[dep] = l;
    stack.erase(stack.end() - 2);
  }
  void apply_right(const std::string& l) {
    int dep = s0();
    head[dep] = s1();
    label[dep] = l;
    stack.pop_back();
  }

  void apply(const std::string& transition) {
    if (transition == kShift) {
      apply_shift();
    } else if (transition.rfind("LEFT-ARC(", 0) == 0) {
      apply_left(transition.substr(9, transition.size() - 10));
    } else {
      apply_right(transition.substr(10, transition.size() - 11));
    }
  }
};

std::string tok_word(const Sentence& sent, int idx) {
  if (idx <= 0) return "<root>";
  return sent.tokens[idx - 1].lower;
}

std::string tok_pos(const Sentence& sent, int idx) {
  if (idx <= 0) return "<root>";
  const Token& t = sent.tokens[idx - 1];
  return t.upos ? *t.upos : "<none>";
}

// Features over the top two stack items and the first buffer item.
std::vector<std::string> state_features(const State& st, const Sentence& sent) {
  int s0 = st.s0(), s1 = st.s1();
  int b0 = st.buffer_empty() ? -1 : st.next;
  auto w = [&](int i) { return i < 0 ? "<none>" : tok_word(sent, i); };
  auto p = [&](int i) { return i < 0 ? "<none>" : tok_pos(sent, i); };

  std::vector<std::string> feats;
  feats.reserve(14);
  feats.push_back("bias");
  feats.push_back("s0w=" + w(s0));
  feats.push_back("s0p=" + p(s0));
  feats.push_back("s1w=" + w(s1));
  feats.push_back("s1p=" + p(s1));
  feats.push_back("b0w=" + w(b0));
  feats.push_back("b0p=" + p(b0));
  feats.push_back("s0wp=" + w(s0) + "|" + p(s0));
  feats.push_back("s1wp=" + w(s1) + "|" + p(s1));
  feats.push_back("s0p|s1p=" + p(s0) + "|" + p(s1));
  feats.push_back("s0w|s1w=" + w(s0) + "|" + w(s1));
  feats.push_back("s0p|b0p=" + p(s0) + "|" + p(b0));
  feats.push_back("s1p|b0p=" + p(s1) + "|" + p(b0));
  feats.push_back("s0p|s1p|b0p=" + p(s0) + "|" + p(s1) + "|" + p(b0));
  return feats;
}

std::vector<std::string> legal_transitions(
    const State& st, const std::vector<std::string>& all_transitions) {
  std::vector<std::string> legal;
  for (const auto& t : all_transitions) {
    if (t == kShift) {
      if (st.shift_legal()) legal.push_back(t);
    } else if (t.rfind("LEFT-ARC(", 0) == 0) {
      if (st.left_legal()) legal.push_back(t);
    } else {
      if (st.right_legal()) legal.push_back(t);
    }
  }
  return legal;
}

bool gold_tree_usable(const Sentence& sent) {
  return is_valid_tree(sent) && is_projective(sent);
}

// Static oracle for projective trees: build an arc as soon as the
// dependent has collected all of its own dependents.
std::string oracle_transition(const State& st, const Sentence& sent,
                              std::vector<int>& pending_deps) {
  int s0 = st.s0(), s1 = st.s1();
  if (st.stack.size() >= 2) {
    if (s1 != 0 && *sent.tokens[s1 - 1].head == s0 && pending_deps[s1] == 0)
      return left_arc(*sent.tokens[s1 - 1].deprel);
    if (s0 != 0 && *sent.tokens[s0 - 1].head == s1 && pending_deps[s0] == 0) {
      if (s1 != 0 || (st.buffer_empty() && st.stack.size() == 2))
        return right_arc(*sent.tokens[s0 - 1].deprel);
    }
  }
  if (!st.buffer_empty()) return kShift;
  return "";  // cannot happen for projective single-root gold trees
}

}  // namespace

ParserModel train_parser(const Corpus& treebank, int epochs,
                         std::uint64_t seed, TrainStats* stats) {
  if (epochs < 1) throw ConfigError("train_parser: epochs must be >= 1");

  std::vector<const Sentence*> usable;
  std::size_t skipped = 0;
  std::vector<std::string> labels;
  for (const Document& doc : treebank.documents) {
    for (const Sentence& sent : doc.sentences) {
      if (sent.empty()) continue;
      for (const Token& tok : sent.tokens)
        if (!tok.upos)
          throw InputError("train_parser: token '" + tok.surface +
                           "' has no gold UPOS");
      if (!gold_tree_usable(sent)) {
        ++skipped;
        continue;
      }
      usable.push_back(&sent);
      for (const Token& tok : sent.tokens) labels.push_back(*tok.deprel);
    }
  }
  if (stats) {
    stats->used_sentences = usable.size();
    stats->skipped_nonprojective = skipped;
  }
  if (usable.empty())
    throw InputError("train_parser: no projective sentences in treebank (" +
                     std::to_string(skipped) + " skipped)");

  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  ParserModel model;
  model.labels = labels;
  model.transitions.push_back(kShift);
  for (const auto& l : labels) {
    model.transitions.push_back(left_arc(l));
    model.transitions.push_back(right_arc(l));
  }
  std::sort(model.transitions.begin(), model.transitions.end());

  AveragedWeights learner;
  SplitMix64 rng(seed);

  for (int epoch = 0; epoch < epochs; ++epoch) {
    shuffle_indices(usable.size(), rng, [&](std::size_t a, std::size_t b) {
      std::swap(usable[a], usable[b]);
    });
    for (const Sentence* sent : usable) {
      const int n = static_cast<int>(sent->size());
      State st(n);
      std::vector<int> pending(n + 1, 0);
      for (const Token& tok : sent->tokens) pending[*tok.head] += 1;

      while (!st.terminal()) {
        std::string want = oracle_transition(st, *sent, pending);
        if (want.empty()) break;  // defensive; gold was validated
        learner.begin_step();
        auto feats = state_features(st, *sent);
        auto legal = legal_transitions(st, model.transitions);
        std::string guess = learner.best(feats, legal);
        if (guess != want) {
          for (const auto& f : feats) {
            learner.update(f, want, +1.0);
            learner.update(f, guess, -1.0);
          }
        }
        if (want != kShift) {
          int dep = (want.rfind("LEFT-ARC(", 0) == 0) ? st.s1() : st.s0();
          pending[*sent->tokens[dep - 1].head] -= 1;
        }
        st.apply(want);
      }
    }
  }
  model.weights = learner.averaged();
  return model;
}

namespace {

std::string predict_transition(const ParserModel& model,
                               const std::vector<std::string>& feats,
                               const std::vector<std::string>& legal) {
  std::map<std::string, double> scores;
  for (const auto& f : feats) {
    auto it = model.weights.find(f);
    if (it == model.weights.end()) continue;
    for (const auto& [t, w] : it->second) scores[t] += w;
  }
  std::string best = legal.front();
  double best_score = scores.count(best) ? scores[best] : 0.0;
  for (const auto& t : legal) {
    auto it = scores.find(t);
    double s = it == scores.end() ? 0.0 : it->second;
    if (s > best_score) {
      best = t;
      best_score = s;
    }
  }
  return best;
}

}  // namespace

Document parse(const Document& doc, const ParserModel& model) {
  if (model.transitions.empty())
    throw ConfigError("parser model has no transitions");
  Document out = doc;
  for (Sentence& sent : out.sentences) {
    for (const Token& tok : sent.tokens)
      if (!tok.upos)
        throw InputError("document '" + doc.id +
                         "' is untagged; run the tagger first");
    const int n = static_cast<int>(sent.size());
    State st(n);
    while (!st.terminal()) {
      auto legal = legal_transitions(st, model.transitions);
      auto feats = state_features(st, sent);
      st.apply(predict_transition(model, feats, legal));
    }
    for (int i = 1; i <= n; ++i) {
      sent.tokens[i - 1].head = st.head[i];
      sent.tokens[i - 1].deprel =
          st.head[i] == 0 && st.label[i].empty() ? "root" : st.label[i];
    }
  }
  return out;
}

double unlabeled_attachment(const Corpus& gold, const ParserModel& model) {
  std::int64_t total = 0, correct = 0;
  for (const Document& doc : gold.documents) {
    Document stripped = doc;
    for (Sentence& sent : stripped.sentences)
      for (Token& tok : sent.tokens) {
        tok.head.reset();
        tok.deprel.reset();
      }
    Document parsed = parse(stripped, model);
    for (std::size_t s = 0; s < doc.sentences.size(); ++s)
      for (std::size_t i = 0; i < doc.sentences[s].size(); ++i) {
        if (!doc.sentences[s].tokens[i].head) continue;
        ++total;
        if (*doc.sentences[s].tokens[i].head ==
            *parsed.sentences[s].tokens[i].head)
          ++correct;
      }
  }
  if (total == 0) throw InputError("unlabeled_attachment: empty corpus");
  return static_cast<double>(correct) / static_cast<double>(total);
}

std::string ParserModel::serialize() const {
  std::ostringstream out;
  out << "OBAI-PARSER/1\n";
  out << "labels";
  for (const auto& l : labels) out << "\t" << l;
  out << "\n";
  out.precision(17);
  for (const auto& [feat, per_t] : weights)
    for (const auto& [t, w] : per_t)
      if (w != 0.0) out << feat << "\t" << t << "\t" << w << "\n";
  return out.str();
}

void ParserModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write model file: " + path);
  out << serialize();
  if (!out) throw InputError("I/O failure writing " + path);
}

ParserModel ParserModel::deserialize(const std::string& content,
                                     const std::string& name) {
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line) || line != "OBAI-PARSER/1")
    throw ConfigError(name + ": not an OBAI-PARSER/1 model file");
  ParserModel model;
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
    if (cols[0] == "labels") {
      model.labels.assign(cols.begin() + 1, cols.end());
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
  if (model.labels.empty())
    throw ConfigError(name + ": model has an empty label set");
  model.transitions.push_back(kShift);
  for (const auto& l : model.labels) {
    model.transitions.push_back(left_arc(l));
    model.transitions.push_back(right_arc(l));
  }
  std::sort(model.transitions.begin(), model.transitions.end());
  return model;
}

ParserModel ParserModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str(), path);
}

}  // namespace obai::parse

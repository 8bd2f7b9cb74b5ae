#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace obai {

// Small deterministic generator so shuffles are reproducible across
// standard libraries and platforms.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// Fisher-Yates over [0, n); modulo bias is irrelevant for shuffling
// training data.
template <typename SwapFn>
void shuffle_indices(std::size_t n, SplitMix64& rng, SwapFn swap) {
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next() % i);
    if (j != i - 1) swap(i - 1, j);
  }
}

// Perceptron weights with lazily maintained per-cell running totals, so
// the final weights are the average over every update step.
class AveragedWeights {
 public:
  void begin_step() { ++step_; }

  double weight(const std::string& feature, const std::string& label) const {
    auto f = cells_.find(feature);
    if (f == cells_.end()) return 0.0;
    auto c = f->second.find(label);
    return c == f->second.end() ? 0.0 : c->second.w;
  }

  // Highest-scoring label; ties go to the earliest entry of `labels`,
  // which callers keep sorted.
  std::string best(const std::vector<std::string>& feats,
                   const std::vector<std::string>& labels) const {
    std::map<std::string, double> scores;
    for (const auto& f : feats) {
      auto it = cells_.find(f);
      if (it == cells_.end()) continue;
      for (const auto& [label, cell] : it->second) scores[label] += cell.w;
    }
    std::string best_label = labels.front();
    double best_score = 0.0;
    {
      auto it = scores.find(best_label);
      if (it != scores.end()) best_score = it->second;
    }
    for (const auto& label : labels) {
      auto it = scores.find(label);
      double s = it == scores.end() ? 0.0 : it->second;
      if (s > best_score) {
        best_label = label;
        best_score = s;
      }
    }
    return best_label;
  }

  void update(const std::string& feature, const std::string& label,
              double delta) {
    Cell& cell = cells_[feature][label];
    cell.total += cell.w * static_cast<double>(step_ - 1 - cell.last);
    cell.last = step_ - 1;
    cell.w += delta;
  }

  // Averages over all steps seen so far; with one step this equals the
  // final weights.
  std::map<std::string, std::map<std::string, double>> averaged() const {
    std::map<std::string, std::map<std::string, double>> out;
    if (step_ == 0) return out;
    const double steps = static_cast<double>(step_);
    for (const auto& [feature, per_label] : cells_) {
      for (const auto& [label, cell] : per_label) {
        double total =
            cell.total + cell.w * static_cast<double>(step_ - cell.last);
        double avg = total / steps;
        if (avg != 0.0) out[feature][label] = avg;
      }
    }
    return out;
  }

 private:
  struct Cell {
    double w = 0.0;
    double total = 0.0;
    std::uint64_t last = 0;  // step through which `total` accounts for w
  };
  std::map<std::string, std::map<std::string, Cell>> cells_;
  std::uint64_t step_ = 0;
};

}  // namespace obai

// Copyright 2026 The codeppl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Add-k smoothed n-gram model with longest-seen-suffix backoff, used as the
// in-process reference scorer.
//
// For a context h (the last order-1 tokens, or fewer when the history is
// shorter) the model finds the longest suffix h' of h that occurred in
// training and returns
//
//   p(t | h) = (count(h', t) + k) / (count(h') + k * V)
//
// where count(h') counts the occurrences of h' followed by any token. The
// empty suffix is the unigram estimate, so every conditional distribution
// sums to one.

#ifndef CODEPPL_NGRAM_HPP_
#define CODEPPL_NGRAM_HPP_

#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "codeppl/common.hpp"
#include "codeppl/scorer.hpp"
#include "codeppl/tokenization.hpp"

namespace codeppl {

class NgramModel {
 public:
  NgramModel(std::size_t order, double smoothing_constant, std::uint32_t vocab_size)
      : order_(order), k_(smoothing_constant), vocab_(vocab_size), totals_(1, 0) {
    if (order == 0) throw std::invalid_argument("n-gram order must be >= 1");
    if (!(smoothing_constant > 0.0)) throw std::invalid_argument("smoothing constant must be positive");
    if (vocab_size < 2) throw std::invalid_argument("n-gram vocab_size must be >= 2");
  }

  std::size_t order() const { return order_; }
  double smoothing_constant() const { return k_; }
  std::uint32_t vocab_size() const { return vocab_; }
  std::size_t context_nodes() const { return totals_.size(); }

  void add_sequence(std::span<const TokenId> seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] >= vocab_) {
        throw std::out_of_range("token " + std::to_string(seq[i]) + " outside vocabulary of " +
                                std::to_string(vocab_));
      }
      std::uint32_t node = 0;
      bump(node, seq[i]);
      const std::size_t depth = std::min(order_ - 1, i);
      for (std::size_t d = 1; d <= depth; ++d) {
        node = child_or_create(node, seq[i - d]);
        bump(node, seq[i]);
      }
    }
  }

  // Occurrences of `context` (exactly, no backoff) followed by any token.
  std::uint64_t context_count(std::span<const TokenId> context) const {
    if (context.size() >= order_) return 0;
    std::uint32_t node = 0;
    for (std::size_t d = 1; d <= context.size(); ++d) {
      auto it = children_.find(key(node, context[context.size() - d]));
      if (it == children_.end()) return 0;
      node = it->second;
    }
    return totals_[node];
  }

  double prob(std::span<const TokenId> context, TokenId target) const {
    if (target >= vocab_) throw std::out_of_range("target outside vocabulary");
    std::uint32_t node = deepest_seen(context);
    auto it = counts_.find(key(node, target));
    double c = it == counts_.end() ? 0.0 : static_cast<double>(it->second);
    return (c + k_) / (static_cast<double>(totals_[node]) + k_ * vocab_);
  }

  double log2_prob(std::span<const TokenId> context, TokenId target) const {
    return std::log2(prob(context, target));
  }

 private:
  static std::uint64_t key(std::uint32_t node, TokenId tok) { return (std::uint64_t{node} << 32) | tok; }

  void bump(std::uint32_t node, TokenId target) {
    ++totals_[node];
    ++counts_[key(node, target)];
  }

  std::uint32_t child_or_create(std::uint32_t node, TokenId tok) {
    auto [it, inserted] = children_.try_emplace(key(node, tok), static_cast<std::uint32_t>(totals_.size()));
    if (inserted) totals_.push_back(0);
    return it->second;
  }

  std::uint32_t deepest_seen(std::span<const TokenId> context) const {
    std::uint32_t node = 0;
    const std::size_t depth = std::min(order_ - 1, context.size());
    for (std::size_t d = 1; d <= depth; ++d) {
      auto it = children_.find(key(node, context[context.size() - d]));
      if (it == children_.end() || totals_[it->second] == 0) break;
      node = it->second;
    }
    return node;
  }

  std::size_t order_;
  double k_;
  std::uint32_t vocab_;
  // Suffix trie over reversed contexts; node 0 is the empty context.
  std::vector<std::uint64_t> totals_;
  std::unordered_map<std::uint64_t, std::uint32_t> children_;
  std::unordered_map<std::uint64_t, std::uint64_t> counts_;
};

inline NgramModel ngram_train(const std::vector<std::vector<TokenId>>& corpus, std::size_t order,
                              double smoothing_constant, std::uint32_t vocab_size) {
  if (corpus.empty()) throw std::invalid_argument("ngram_train: empty corpus");
  std::size_t longest = 0;
  for (const auto& s : corpus) longest = std::max(longest, s.size());
  if (order > longest) {
    throw Error("ngram_train: order " + std::to_string(order) + " exceeds every sequence (longest " +
                std::to_string(longest) + ")");
  }
  NgramModel model(order, smoothing_constant, vocab_size);
  for (const auto& s : corpus) model.add_sequence(s);
  return model;
}

inline NgramModel ngram_train(const std::vector<TokenSequence>& corpus, std::size_t order, double smoothing_constant,
                              std::uint32_t vocab_size) {
  std::vector<std::vector<TokenId>> seqs;
  seqs.reserve(corpus.size());
  for (const auto& s : corpus) seqs.push_back(s.ids);
  return ngram_train(seqs, order, smoothing_constant, vocab_size);
}

class NgramScorer final : public Scorer {
 public:
  explicit NgramScorer(std::shared_ptr<const NgramModel> model, std::string id = {})
      : model_(std::move(model)), id_(id.empty() ? "ngram" + std::to_string(model_->order()) : std::move(id)) {}

  const std::string& id() const override { return id_; }
  ScorerKind kind() const override { return ScorerKind::kNgram; }
  std::uint32_t vocab_size() const override { return model_->vocab_size(); }
  const NgramModel& model() const { return *model_; }

  std::vector<double> score_batch(std::span<const Window> windows) override {
    std::vector<double> out;
    out.reserve(windows.size());
    for (const auto& w : windows) {
      check_target(w);
      out.push_back(model_->log2_prob(w.context, w.target));
    }
    return out;
  }

 private:
  std::shared_ptr<const NgramModel> model_;
  std::string id_;
};

}  // namespace codeppl

#endif  // CODEPPL_NGRAM_HPP_

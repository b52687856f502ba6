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


#ifndef CODEPPL_SCORER_HPP_
#define CODEPPL_SCORER_HPP_

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "codeppl/common.hpp"

namespace codeppl {

enum class ScorerKind { kUniform, kNgram, kExternal };

inline std::string_view to_string(ScorerKind k) {
  switch (k) {
    case ScorerKind::kUniform:
      return "uniform";
    case ScorerKind::kNgram:
      return "ngram";
    case ScorerKind::kExternal:
      return "external";
  }
  return "uniform";
}

// One prediction: the target token and the tokens visible before it.
struct Window {
  std::span<const TokenId> context;
  TokenId target;
};

// Source of conditional token log-probabilities over a fixed vocabulary.
// Implementations must be safe to call from several threads at once.
class Scorer {
 public:
  virtual ~Scorer() = default;

  virtual const std::string& id() const = 0;
  virtual ScorerKind kind() const = 0;
  virtual std::uint32_t vocab_size() const = 0;

  // log2 p(target | context) for every window, in input order.
  virtual std::vector<double> score_batch(std::span<const Window> windows) = 0;

  double score(std::span<const TokenId> context, TokenId target) {
    const Window w{context, target};
    return score_batch(std::span<const Window>(&w, 1)).at(0);
  }

 protected:
  void check_target(const Window& w) const {
    if (w.target >= vocab_size()) {
      throw std::out_of_range("scorer '" + id() + "': token " + std::to_string(w.target) +
                              " outside vocabulary of " + std::to_string(vocab_size()));
    }
  }
};

// p = 1/V for every token.
class UniformScorer final : public Scorer {
 public:
  explicit UniformScorer(std::uint32_t vocab_size)
      : vocab_(vocab_size), id_("uniform" + std::to_string(vocab_size)) {
    if (vocab_size < 2) throw std::invalid_argument("uniform scorer needs vocab_size >= 2");
  }

  const std::string& id() const override { return id_; }
  ScorerKind kind() const override { return ScorerKind::kUniform; }
  std::uint32_t vocab_size() const override { return vocab_; }

  std::vector<double> score_batch(std::span<const Window> windows) override {
    const double lp = -std::log2(static_cast<double>(vocab_));
    for (const auto& w : windows) check_target(w);
    return std::vector<double>(windows.size(), lp);
  }

 private:
  std::uint32_t vocab_;
  std::string id_;
};

}  // namespace codeppl

#endif  // CODEPPL_SCORER_HPP_

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


// Per-file perplexity by the sliding-window method.
//
// With context size c and stride 1, window j covers tokens [j, j + c) and
// scores only its last token, so token i (i >= c - 1) is predicted from the
// c - 1 tokens before it and every scored token is scored exactly once:
//
//   n_scored   = N - c + 1
//   perplexity = 2 ^ ( -(1 / n_scored) * sum_i log2 p(x_i | x_{i-c+1} .. x_{i-1}) )
//
// A general stride s scores the last s tokens of windows starting at
// multiples of s, which reduces to the above for s = 1.

#ifndef CODEPPL_ENGINE_HPP_
#define CODEPPL_ENGINE_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "codeppl/common.hpp"
#include "codeppl/scorer.hpp"
#include "codeppl/stats.hpp"
#include "codeppl/tokenization.hpp"

namespace codeppl {

inline std::vector<std::uint32_t> default_candidate_contexts() {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 8; c <= 512; c *= 2) out.push_back(c);
  return out;
}

struct EngineConfig {
  std::uint32_t ctx_size = 64;
  std::uint32_t stride = 1;
  std::uint32_t batch_size = 0;  // 0: same as ctx_size
  std::uint64_t seed = 13;
  std::vector<std::uint32_t> candidate_ctx = default_candidate_contexts();
  // A file must hold at least this many context windows' worth of tokens.
  std::uint32_t min_length_factor = 2;

  std::uint32_t effective_batch_size() const { return batch_size == 0 ? ctx_size : batch_size; }

  void validate() const {
    if (ctx_size == 0) throw Error("ctx_size must be positive");
    if (stride == 0) throw Error("stride must be >= 1");
    if (stride > ctx_size) throw Error("stride must not exceed ctx_size");
    if (min_length_factor == 0) throw Error("min_length_factor must be >= 1");
    for (std::size_t i = 1; i < candidate_ctx.size(); ++i) {
      if (candidate_ctx[i] <= candidate_ctx[i - 1]) throw Error("candidate context sizes must be strictly increasing");
    }
  }
};

struct ContextChoice {
  EngineConfig config;
  // Largest admissible context as a rational: (median - stride) / 2.
  double bound = 0.0;
  // floor(bound): the largest admissible integer context size.
  std::int64_t integer_bound = 0;
};

// Picks the largest candidate c with  (c + stride / 2) * 2 <= median, i.e.
// the smallest per-language median file length must cover two windows after
// the half-stride increment. Evaluated exactly on doubled integers.
inline ContextChoice configure_context(double min_median_file_tokens, std::uint32_t stride,
                                       std::vector<std::uint32_t> candidates = default_candidate_contexts()) {
  if (stride == 0) throw Error("configure_context: stride must be >= 1");
  if (!(min_median_file_tokens > 0.0)) throw Error("configure_context: median must be positive");
  if (candidates.empty()) throw Error("configure_context: empty candidate set");
  // Medians are integers or half-integers, so 2 * median is integral.
  const auto twice_median = static_cast<std::int64_t>(std::llround(2.0 * min_median_file_tokens));
  ContextChoice out;
  out.bound = (static_cast<double>(twice_median) / 2.0 - stride) / 2.0;
  out.integer_bound = (twice_median - 2 * static_cast<std::int64_t>(stride)) / 4;
  if (twice_median < 2 * static_cast<std::int64_t>(stride)) out.integer_bound = -1;

  std::optional<std::uint32_t> best;
  for (std::uint32_t c : candidates) {
    if (4 * static_cast<std::int64_t>(c) + 2 * static_cast<std::int64_t>(stride) <= twice_median) best = c;
  }
  if (!best) {
    throw Error("configure_context: no candidate context size satisfies ctx <= " + format_double(out.bound) +
                " (median " + format_double(min_median_file_tokens) + ", stride " + std::to_string(stride) +
                "); smallest candidate is " + std::to_string(candidates.front()));
  }
  out.config.ctx_size = *best;
  out.config.stride = stride;
  out.config.candidate_ctx = std::move(candidates);
  out.config.validate();
  return out;
}

struct FileScore {
  FileKey source;
  std::string scorer_id;
  std::size_t n_tokens = 0;
  std::size_t n_scored = 0;
  double sum_log2p = 0.0;  // bits, <= 0
  double perplexity = 0.0;
};

// A file could not be scored: too short, or the scorer misbehaved.
class ScoringError : public Error {
 public:
  using Error::Error;
};

// Number of positions the engine scores for a sequence of length n.
inline std::size_t scored_positions(std::size_t n, const EngineConfig& cfg) {
  std::size_t first = cfg.ctx_size - cfg.stride;
  return n > first ? n - first : 0;
}

inline FileScore file_perplexity(const TokenSequence& tokens, Scorer& scorer, const EngineConfig& cfg) {
  cfg.validate();
  const std::size_t n = tokens.ids.size();
  const std::size_t c = cfg.ctx_size;
  const std::size_t s = cfg.stride;
  const std::size_t min_len = std::max<std::size_t>(c, std::size_t{cfg.min_length_factor} * c);
  if (n < min_len) {
    throw ScoringError("too short: " + std::to_string(n) + " tokens, need at least " + std::to_string(min_len) +
                       " for ctx_size " + std::to_string(c));
  }
  const std::size_t first = c - s;
  const std::size_t batch = std::max<std::size_t>(1, cfg.effective_batch_size());
  const std::span<const TokenId> ids(tokens.ids);

  KahanSum sum;
  std::vector<Window> windows;
  windows.reserve(batch);
  std::size_t batch_first = first;
  auto flush = [&] {
    if (windows.empty()) return;
    std::vector<double> lp = scorer.score_batch(windows);
    if (lp.size() != windows.size()) {
      throw ScoringError("scorer returned " + std::to_string(lp.size()) + " values for " +
                         std::to_string(windows.size()) + " windows");
    }
    for (std::size_t k = 0; k < lp.size(); ++k) {
      if (!std::isfinite(lp[k]) || lp[k] > 0.0) {
        throw ScoringError("scorer returned log2p " + format_double(lp[k]) + " at position " +
                           std::to_string(batch_first + k) + "; need a finite value <= 0");
      }
      sum.add(lp[k]);
    }
    batch_first += windows.size();
    windows.clear();
  };
  for (std::size_t i = first; i < n; ++i) {
    std::size_t start = ((i - first) / s) * s;
    windows.push_back({ids.subspan(start, i - start), ids[i]});
    if (windows.size() == batch) flush();
  }
  flush();

  FileScore out;
  out.source = tokens.source;
  out.scorer_id = scorer.id();
  out.n_tokens = n;
  out.n_scored = n - first;
  out.sum_log2p = sum.value();
  out.perplexity = std::exp2(-out.sum_log2p / static_cast<double>(out.n_scored));
  return out;
}

struct FileFailure {
  FileKey source;
  std::string reason;
};

struct BatchResult {
  std::vector<FileScore> scores;
  std::vector<FileFailure> failures;
};

// Scores every file; per-file failures are collected, not thrown. Transport
// errors are retried up to `max_attempts` times per file. Output is sorted
// by (language, project, path) whatever the worker count.
inline BatchResult batch_perplexity(const std::vector<TokenSequence>& files, Scorer& scorer, const EngineConfig& cfg,
                                    unsigned workers = 1, unsigned max_attempts = 3) {
  cfg.validate();
  std::vector<std::optional<FileScore>> scores(files.size());
  std::vector<std::string> errors(files.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      for (unsigned attempt = 1;; ++attempt) {
        try {
          scores[i] = file_perplexity(files[i], scorer, cfg);
          break;
        } catch (const TransportError& e) {
          if (attempt >= max_attempts) {
            errors[i] = "transport failure after " + std::to_string(attempt) + " attempts: " + e.what();
            break;
          }
        } catch (const std::exception& e) {
          errors[i] = e.what();
          break;
        }
      }
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1 || files.size() < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, files.size()); ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  BatchResult out;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (scores[i]) {
      out.scores.push_back(std::move(*scores[i]));
    } else {
      out.failures.push_back({files[i].source, errors[i]});
    }
  }
  std::sort(out.scores.begin(), out.scores.end(),
            [](const FileScore& a, const FileScore& b) { return a.source < b.source; });
  std::sort(out.failures.begin(), out.failures.end(),
            [](const FileFailure& a, const FileFailure& b) { return a.source < b.source; });
  return out;
}

}  // namespace codeppl

#endif  // CODEPPL_ENGINE_HPP_

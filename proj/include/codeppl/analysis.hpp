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


// Aggregation of file scores into per-language summaries and the ranking,
// correlation and scatter tables built on them.

#ifndef CODEPPL_ANALYSIS_HPP_
#define CODEPPL_ANALYSIS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "codeppl/common.hpp"
#include "codeppl/engine.hpp"
#include "codeppl/stats.hpp"

namespace codeppl {

inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

// ---------------------------------------------------------------- summaries

struct LanguageSummary {
  std::string language;
  std::size_t n_files = 0;
  std::size_t n_outliers_removed = 0;
  double median = 0.0;  // of the retained values
  // Box statistics of the retained values; absent with fewer than 4 scores.
  std::optional<double> q1, q3, whisker_low, whisker_high;
  // Tukey fences computed on all values.
  std::optional<double> fence_low, fence_high;
  std::vector<double> outliers;
  bool flagged = false;  // too few scores for quartiles
};

inline constexpr std::size_t kMinValuesForQuartiles = 4;

// Tukey 1.5 IQR outlier removal, then box statistics (type-7 quartiles) of
// what remains.
inline LanguageSummary summarize_values(std::string language, std::vector<double> values) {
  if (values.empty()) throw Error("no scores for language '" + language + "'");
  LanguageSummary s;
  s.language = std::move(language);
  s.n_files = values.size();
  std::sort(values.begin(), values.end());
  if (values.size() < kMinValuesForQuartiles) {
    s.median = median(values);
    s.flagged = true;
    return s;
  }
  double q1 = quantile_sorted(values, 0.25);
  double q3 = quantile_sorted(values, 0.75);
  double iqr = q3 - q1;
  s.fence_low = q1 - 1.5 * iqr;
  s.fence_high = q3 + 1.5 * iqr;
  std::vector<double> kept;
  for (double v : values) {
    if (v < *s.fence_low || v > *s.fence_high) {
      s.outliers.push_back(v);
    } else {
      kept.push_back(v);
    }
  }
  s.n_outliers_removed = s.outliers.size();
  s.median = median(kept);
  s.q1 = quantile_sorted(kept, 0.25);
  s.q3 = quantile_sorted(kept, 0.75);
  s.whisker_low = kept.front();
  s.whisker_high = kept.back();
  return s;
}

inline void sort_by_median(std::vector<LanguageSummary>& summaries) {
  std::sort(summaries.begin(), summaries.end(), [](const LanguageSummary& a, const LanguageSummary& b) {
    return std::tie(a.median, a.language) < std::tie(b.median, b.language);
  });
}

// Per-language summaries sorted by ascending median.
inline std::vector<LanguageSummary> language_summary(const std::map<std::string, std::vector<double>>& by_language) {
  std::vector<LanguageSummary> out;
  for (const auto& [lang, values] : by_language) out.push_back(summarize_values(lang, values));
  sort_by_median(out);
  return out;
}

inline std::vector<LanguageSummary> language_summary(const std::vector<FileScore>& scores) {
  std::map<std::string, std::vector<double>> groups;
  for (const auto& s : scores) groups[s.source.language].push_back(s.perplexity);
  return language_summary(groups);
}

// `language_of` maps "project/path" to a language; scores missing from it are
// an error.
inline std::vector<LanguageSummary> language_summary(const std::vector<FileScore>& scores,
                                                     const std::map<std::string, std::string>& language_of) {
  std::map<std::string, std::vector<double>> groups;
  for (const auto& s : scores) {
    auto it = language_of.find(s.source.str());
    if (it == language_of.end()) throw Error("no language for scored file " + s.source.str());
    groups[it->second].push_back(s.perplexity);
  }
  return language_summary(groups);
}

// ---------------------------------------------------------------- ranks

// 1-based ranks; ties share the mean of their positions.
inline std::vector<double> average_ranks(const std::vector<double>& values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && values[idx[j + 1]] == values[idx[i]]) ++j;
    double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = r;
    i = j + 1;
  }
  return ranks;
}

namespace detail {

// Tie group sizes of a vector.
inline std::vector<double> tie_groups(const std::vector<double>& values) {
  std::map<double, double> counts;
  for (double v : values) counts[v] += 1.0;
  std::vector<double> out;
  for (const auto& [v, c] : counts) {
    if (c > 1.0) out.push_back(c);
  }
  return out;
}

inline void check_pair(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("rankings differ in length: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  if (a.size() < 3) throw std::invalid_argument("rank correlation needs n >= 3");
}

// Sum of squares of a ranking about its mean, tie corrected:
// (n^3 - n)/12 - sum over tie groups of (t^3 - t)/12.
inline double rank_sum_sq(const std::vector<double>& r) {
  const double n = static_cast<double>(r.size());
  double s = (n * n * n - n) / 12.0;
  for (double t : tie_groups(r)) s -= (t * t * t - t) / 12.0;
  return s;
}

// rho = (Sx + Sy - sum d^2) / (2 sqrt(Sx Sy)), given Sx and Sy.
inline double spearman_given(double sx, double sy, const std::vector<double>& rx, const std::vector<double>& ry) {
  if (sx <= 0.0 || sy <= 0.0) throw std::invalid_argument("rank correlation of a constant ranking is undefined");
  double d2 = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  return std::clamp((sx + sy - d2) / (2.0 * std::sqrt(sx * sy)), -1.0, 1.0);
}

// Spearman rho on precomputed average ranks, rank-difference form with the
// tie correction.
inline double spearman_from_ranks(const std::vector<double>& rx, const std::vector<double>& ry) {
  return spearman_given(rank_sum_sq(rx), rank_sum_sq(ry), rx, ry);
}

inline double tied_pairs(const std::vector<double>& v) {
  double out = 0;
  for (double t : tie_groups(v)) out += t * (t - 1) / 2.0;
  return out;
}

// C - D over all pairs.
inline double concordance_s(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      double da = a[i] - a[j], db = b[i] - b[j];
      if (da != 0 && db != 0) s += ((da > 0) == (db > 0)) ? 1 : -1;
    }
  }
  return s;
}

// tau-b = (C - D) / sqrt((n0 - n1)(n0 - n2)); `denom` is the square root.
inline double kendall_denominator(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  const double n0 = n * (n - 1) / 2.0;
  double denom = std::sqrt((n0 - tied_pairs(a)) * (n0 - tied_pairs(b)));
  if (denom == 0.0) throw std::invalid_argument("rank correlation of a constant ranking is undefined");
  return denom;
}

inline double kendall_tau_b(const std::vector<double>& a, const std::vector<double>& b) {
  return std::clamp(concordance_s(a, b) / kendall_denominator(a, b), -1.0, 1.0);
}

// Two-sided exact permutation p-value: the share of all n! arrangements of
// `b` whose statistic is at least as extreme as the observed one.
template <typename Statistic>
double exact_permutation_p(const std::vector<double>& a, std::vector<double> b, double observed, Statistic stat) {
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<double> shuffled(b.size());
  const double threshold = std::abs(observed) - 1e-12;
  double extreme = 0, total = 0;
  do {
    for (std::size_t i = 0; i < perm.size(); ++i) shuffled[i] = b[perm[i]];
    if (std::abs(stat(a, shuffled)) >= threshold) extreme += 1;
    total += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return extreme / total;
}

}  // namespace detail

// Largest n for which p-values are computed by exact enumeration.
inline constexpr std::size_t kExactPermutationMaxN = 8;

struct Correlation {
  double coefficient = 0.0;
  double p = 1.0;
};

// Spearman rho of two rankings (or raw values; both are converted to
// average ranks). Two-sided p: exact permutation distribution for n <= 8,
// otherwise Student t with n - 2 degrees of freedom.
inline Correlation spearman(const std::vector<double>& a, const std::vector<double>& b) {
  detail::check_pair(a, b);
  const auto ra = average_ranks(a), rb = average_ranks(b);
  Correlation out;
  out.coefficient = detail::spearman_from_ranks(ra, rb);
  const std::size_t n = a.size();
  if (n <= kExactPermutationMaxN) {
    // Tie structure, hence Sx and Sy, is the same for every arrangement.
    const double sx = detail::rank_sum_sq(ra), sy = detail::rank_sum_sq(rb);
    out.p = detail::exact_permutation_p(ra, rb, out.coefficient,
                                        [&](const auto& x, const auto& y) {
                                          return detail::spearman_given(sx, sy, x, y);
                                        });
  } else if (std::abs(out.coefficient) >= 1.0) {
    out.p = 0.0;
  } else {
    double df = static_cast<double>(n) - 2.0;
    double t = out.coefficient * std::sqrt(df / (1.0 - out.coefficient * out.coefficient));
    boost::math::students_t_distribution<double> dist(df);
    out.p = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t))));
  }
  return out;
}

// Kendall tau-b. Two-sided p: exact permutation distribution for n <= 8,
// otherwise the normal approximation with tie-corrected variance of S.
inline Correlation kendall(const std::vector<double>& a, const std::vector<double>& b) {
  detail::check_pair(a, b);
  Correlation out;
  out.coefficient = detail::kendall_tau_b(a, b);
  const std::size_t n = a.size();
  if (n <= kExactPermutationMaxN) {
    const double denom = detail::kendall_denominator(a, b);
    out.p = detail::exact_permutation_p(a, b, out.coefficient, [&](const auto& x, const auto& y) {
      return std::clamp(detail::concordance_s(x, y) / denom, -1.0, 1.0);
    });
    return out;
  }
  const double s = detail::concordance_s(a, b);
  const double nn = static_cast<double>(n);
  auto sums = [](const std::vector<double>& ties) {
    double v1 = 0, v2 = 0, v3 = 0;
    for (double t : ties) {
      v1 += t * (t - 1) * (2 * t + 5);
      v2 += t * (t - 1) * (t - 2);
      v3 += t * (t - 1);
    }
    return std::array<double, 3>{v1, v2, v3};
  };
  auto ta = sums(detail::tie_groups(a)), tb = sums(detail::tie_groups(b));
  double var = (nn * (nn - 1) * (2 * nn + 5) - ta[0] - tb[0]) / 18.0 +
               ta[1] * tb[1] / (9.0 * nn * (nn - 1) * (nn - 2)) + ta[2] * tb[2] / (2.0 * nn * (nn - 1));
  double z = s / std::sqrt(var);
  out.p = std::min(1.0, std::erfc(std::abs(z) / std::sqrt(2.0)));
  return out;
}

struct RankCorrelation {
  double rho = 0.0, p_rho = 1.0, tau = 0.0, p_tau = 1.0;
  std::size_t n = 0;
};

inline RankCorrelation rank_correlation(const std::vector<double>& a, const std::vector<double>& b) {
  auto s = spearman(a, b);
  auto k = kendall(a, b);
  return {s.coefficient, s.p, k.coefficient, k.p, a.size()};
}

// ---------------------------------------------------------------- rankings

// language -> rank (1 = lowest median) from summaries sorted by median.
inline std::map<std::string, double> ranking_of(const std::vector<LanguageSummary>& summaries) {
  std::vector<LanguageSummary> sorted = summaries;
  sort_by_median(sorted);
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) out[sorted[i].language] = static_cast<double>(i + 1);
  return out;
}

struct ExternalRanking {
  std::string study;
  std::string model;
  std::map<std::string, double> rank;  // language -> rank
};

// CSV `study,model,language,rank`; one row per (model, language).
inline std::vector<ExternalRanking> load_rankings(const std::filesystem::path& path) {
  CsvTable csv = read_csv(path);
  std::size_t c_study = csv.column("study"), c_model = csv.column("model"), c_lang = csv.column("language"),
              c_rank = csv.column("rank");
  std::vector<ExternalRanking> out;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    std::string where = path.string() + ": line " + std::to_string(csv.lines[r]);
    if (row.size() != csv.header.size()) throw Error(where + ": wrong field count");
    double rank;
    try {
      std::size_t used = 0;
      rank = std::stod(row[c_rank], &used);
      if (used != row[c_rank].size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw Error(where + ": rank '" + row[c_rank] + "' is not a number");
    }
    auto it = std::find_if(out.begin(), out.end(), [&](const ExternalRanking& e) {
      return e.study == row[c_study] && e.model == row[c_model];
    });
    if (it == out.end()) {
      out.push_back({row[c_study], row[c_model], {}});
      it = out.end() - 1;
    }
    if (!it->rank.emplace(row[c_lang], rank).second) throw Error(where + ": duplicate language " + row[c_lang]);
  }
  return out;
}

struct CorrelationRow {
  std::string study;
  std::string model;
  RankCorrelation result;
};

// Correlates `reference` with each external ranking over their common
// languages. Rows are sorted by descending rho.
inline std::vector<CorrelationRow> compare_rankings(const std::map<std::string, double>& reference,
                                                    const std::vector<ExternalRanking>& others) {
  std::vector<CorrelationRow> rows;
  for (const auto& other : others) {
    std::vector<double> a, b;
    for (const auto& [lang, r] : reference) {
      auto it = other.rank.find(lang);
      if (it != other.rank.end()) {
        a.push_back(r);
        b.push_back(it->second);
      }
    }
    if (a.size() < 3) {
      throw Error("ranking " + other.study + "/" + other.model + " shares only " + std::to_string(a.size()) +
                  " languages with the reference (need 3)");
    }
    rows.push_back({other.study, other.model, rank_correlation(a, b)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CorrelationRow& x, const CorrelationRow& y) { return x.result.rho > y.result.rho; });
  return rows;
}

// ---------------------------------------------------------------- models

using ModelMedians = std::map<std::string, std::map<std::string, double>>;  // model -> language -> median

struct PearsonMatrix {
  std::vector<std::string> models;     // by descending mean off-diagonal correlation
  std::vector<std::string> languages;  // common language set
  std::vector<std::vector<double>> r;  // NaN where undefined
  std::vector<std::string> flags;
};

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return kMissing;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

inline PearsonMatrix pearson_matrix(const ModelMedians& medians) {
  if (medians.size() < 2) throw Error("pearson_matrix needs at least 2 models");
  PearsonMatrix out;
  std::set<std::string> common;
  for (const auto& [lang, v] : medians.begin()->second) common.insert(lang);
  for (const auto& [model, by_lang] : medians) {
    std::set<std::string> keep;
    for (const auto& l : common) {
      if (by_lang.count(l)) keep.insert(l);
    }
    common = std::move(keep);
  }
  if (common.size() < 3) {
    throw Error("pearson_matrix: models share " + std::to_string(common.size()) + " languages (need 3)");
  }
  out.languages.assign(common.begin(), common.end());

  std::vector<std::string> names;
  std::vector<std::vector<double>> vecs;
  for (const auto& [model, by_lang] : medians) {
    names.push_back(model);
    std::vector<double> v;
    for (const auto& l : out.languages) v.push_back(by_lang.at(l));
    vecs.push_back(std::move(v));
  }
  const std::size_t m = names.size();
  std::vector<std::vector<double>> r(m, std::vector<double>(m, kMissing));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      double c = pearson(vecs[i], vecs[j]);
      if (i == j && !std::isnan(c)) c = 1.0;
      r[i][j] = r[j][i] = c;
    }
    if (std::isnan(r[i][i])) out.flags.push_back("model '" + names[i] + "' has zero variance; its correlations are undefined");
  }

  std::vector<double> mean(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double s = 0;
    int k = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && !std::isnan(r[i][j])) s += r[i][j], ++k;
    }
    mean[i] = k ? s / k : -std::numeric_limits<double>::infinity();
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return mean[a] > mean[b]; });
  for (std::size_t i : order) out.models.push_back(names[i]);
  out.r.assign(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out.r[i][j] = r[order[i]][order[j]];
  }
  return out;
}

struct ParallelCoordinates {
  std::vector<std::string> models;     // ascending overall median
  std::vector<std::string> languages;  // sorted by name
  std::vector<std::vector<double>> value;  // [language][model], NaN if absent
};

inline ParallelCoordinates parallel_coordinates(const ModelMedians& medians) {
  ParallelCoordinates out;
  std::vector<std::pair<double, std::string>> overall;
  std::set<std::string> langs;
  for (const auto& [model, by_lang] : medians) {
    std::vector<double> v;
    for (const auto& [l, x] : by_lang) v.push_back(x), langs.insert(l);
    overall.emplace_back(v.empty() ? kMissing : median(v), model);
  }
  std::sort(overall.begin(), overall.end());
  for (const auto& [m, name] : overall) out.models.push_back(name);
  out.languages.assign(langs.begin(), langs.end());
  for (const auto& l : out.languages) {
    std::vector<double> row;
    for (const auto& model : out.models) {
      const auto& by_lang = medians.at(model);
      auto it = by_lang.find(l);
      row.push_back(it == by_lang.end() ? kMissing : it->second);
    }
    out.value.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------- attributes

struct AttributeTable {
  std::set<std::string> attributes;
  std::map<std::string, std::map<std::string, double>> values;  // language -> attribute -> value

  void set(const std::string& language, const std::string& attribute, double v) {
    attributes.insert(attribute);
    values[language][attribute] = v;
  }
};

// CSV with a `language` column and one numeric column per attribute; empty
// cells are missing values. Merges into `table`.
inline void load_attributes(const std::filesystem::path& path, AttributeTable& table) {
  CsvTable csv = read_csv(path);
  std::size_t c_lang = csv.column("language");
  for (std::size_t c = 0; c < csv.header.size(); ++c) {
    if (c != c_lang) table.attributes.insert(csv.header[c]);
  }
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    for (std::size_t c = 0; c < csv.header.size() && c < row.size(); ++c) {
      if (c == c_lang || trim(row[c]).empty() || trim(row[c]) == "NA") continue;
      try {
        table.set(row[c_lang], csv.header[c], std::stod(row[c]));
      } catch (const std::exception&) {
        throw Error(path.string() + ": line " + std::to_string(csv.lines[r]) + ": '" + row[c] + "' is not numeric");
      }
    }
  }
}

struct ScatterPoint {
  std::string language;
  double x = 0.0;
  double y = 0.0;
};

struct Scatter {
  std::string attribute;
  std::vector<ScatterPoint> points;
  std::vector<std::string> missing;
};

// (attribute value, median perplexity) per summarized language.
inline Scatter attribute_scatter(const std::vector<LanguageSummary>& summaries, const AttributeTable& table,
                                 const std::string& attribute) {
  if (!table.attributes.count(attribute)) throw Error("unknown attribute '" + attribute + "'");
  Scatter out;
  out.attribute = attribute;
  for (const auto& s : summaries) {
    auto lang = table.values.find(s.language);
    if (lang != table.values.end()) {
      auto v = lang->second.find(attribute);
      if (v != lang->second.end()) {
        out.points.push_back({s.language, v->second, s.median});
        continue;
      }
    }
    out.missing.push_back(s.language);
  }
  return out;
}

}  // namespace codeppl

#endif  // CODEPPL_ANALYSIS_HPP_

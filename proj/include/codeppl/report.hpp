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


// Writes the analysis bundle: CSV tables, SVG charts and run.json.

#ifndef CODEPPL_REPORT_HPP_
#define CODEPPL_REPORT_HPP_

#include <cctype>
#include <cmath>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codeppl/analysis.hpp"
#include "codeppl/common.hpp"
#include "codeppl/svg.hpp"

namespace codeppl {

inline constexpr int kRunSchemaVersion = 1;

struct ModelReport {
  std::string model;
  std::vector<LanguageSummary> summaries;  // ascending median
};

struct ReportBundle {
  std::vector<ModelReport> models;  // the first one is the reference model
  std::optional<std::vector<CorrelationRow>> correlations;
  std::optional<PearsonMatrix> pearson;
  std::optional<ParallelCoordinates> parallel;
  std::vector<Scatter> scatters;
  nlohmann::json run = nlohmann::json::object();
};

// File-name-safe form of a model or attribute name.
inline std::string file_stem(std::string_view name) {
  std::string out;
  for (char c : name) {
    bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '_';
    out += ok ? c : '_';
  }
  return out.empty() ? "_" : out;
}

namespace detail {

inline std::string cell(double v) { return std::isnan(v) ? "NA" : format_double(v); }
inline std::string cell(const std::optional<double>& v) { return v ? cell(*v) : std::string(); }

}  // namespace detail

// Settings every run.json records about the statistics.
inline nlohmann::json analysis_settings() {
  return {{"quartile_method", "linear interpolation (type 7)"},
          {"outlier_rule", "Tukey fences, 1.5 IQR"},
          {"min_values_for_quartiles", kMinValuesForQuartiles},
          {"p_values", "two-sided"},
          {"exact_p_max_n", kExactPermutationMaxN}};
}

inline void write_run_json(const std::filesystem::path& path, nlohmann::json run) {
  run["schema_version"] = kRunSchemaVersion;
  run["version"] = std::string(kVersion);
  write_file(path, run.dump(2) + "\n");
}

// Returns the paths written, in writing order.
inline std::vector<std::filesystem::path> emit_report(const ReportBundle& bundle, const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  if (bundle.models.empty()) throw Error("emit_report: no models");
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create " + out_dir.string() + ": " + ec.message());
  std::vector<fs::path> written;
  auto put = [&](const std::string& name, const std::string& data) {
    write_file(out_dir / name, data);
    written.push_back(out_dir / name);
  };

  {
    std::ostringstream csv;
    write_csv_row(csv, {"model", "language", "n_files", "n_outliers_removed", "median", "q1", "q3", "whisker_low",
                        "whisker_high", "fence_low", "fence_high", "flag"});
    for (const auto& m : bundle.models) {
      for (const auto& s : m.summaries) {
        write_csv_row(csv, {m.model, s.language, std::to_string(s.n_files), std::to_string(s.n_outliers_removed),
                            detail::cell(s.median), detail::cell(s.q1), detail::cell(s.q3),
                            detail::cell(s.whisker_low), detail::cell(s.whisker_high), detail::cell(s.fence_low),
                            detail::cell(s.fence_high), s.flagged ? "median_only" : ""});
      }
    }
    put("summary.csv", csv.str());
  }
  {
    std::ostringstream csv;
    write_csv_row(csv, {"model", "rank", "language", "median"});
    for (const auto& m : bundle.models) {
      for (std::size_t i = 0; i < m.summaries.size(); ++i) {
        write_csv_row(csv, {m.model, std::to_string(i + 1), m.summaries[i].language,
                            detail::cell(m.summaries[i].median)});
      }
    }
    put("ranking.csv", csv.str());
  }
  if (bundle.correlations) {
    std::ostringstream csv;
    write_csv_row(csv, {"study", "model", "rho", "p", "tau", "p"});
    for (const auto& row : *bundle.correlations) {
      const auto& r = row.result;
      write_csv_row(csv, {row.study, row.model, detail::cell(r.rho), detail::cell(r.p_rho), detail::cell(r.tau),
                          detail::cell(r.p_tau)});
    }
    put("correlations.csv", csv.str());
  }
  if (bundle.pearson) {
    const auto& pm = *bundle.pearson;
    std::ostringstream csv;
    std::vector<std::string> header{"model"};
    header.insert(header.end(), pm.models.begin(), pm.models.end());
    write_csv_row(csv, header);
    for (std::size_t i = 0; i < pm.models.size(); ++i) {
      std::vector<std::string> row{pm.models[i]};
      for (double v : pm.r[i]) row.push_back(detail::cell(v));
      write_csv_row(csv, row);
    }
    put("pearson.csv", csv.str());
  }
  if (bundle.parallel) {
    const auto& pc = *bundle.parallel;
    std::ostringstream csv;
    std::vector<std::string> header{"language"};
    header.insert(header.end(), pc.models.begin(), pc.models.end());
    write_csv_row(csv, header);
    for (std::size_t l = 0; l < pc.languages.size(); ++l) {
      std::vector<std::string> row{pc.languages[l]};
      for (double v : pc.value[l]) row.push_back(detail::cell(v));
      write_csv_row(csv, row);
    }
    put("parallel.csv", csv.str());
    put("parallel.svg", svg::parallel(pc));
  }

  put("boxplot.svg", svg::boxplot(bundle.models.front().summaries, bundle.models.front().model));
  if (bundle.models.size() > 1) {
    for (const auto& m : bundle.models) put("boxplot_" + file_stem(m.model) + ".svg", svg::boxplot(m.summaries, m.model));
  }

  for (const auto& sc : bundle.scatters) {
    std::ostringstream csv;
    write_csv_row(csv, {"language", sc.attribute, "median"});
    for (const auto& p : sc.points) write_csv_row(csv, {p.language, detail::cell(p.x), detail::cell(p.y)});
    for (const auto& lang : sc.missing) write_csv_row(csv, {lang, "NA", ""});
    std::string stem = "scatter_" + file_stem(sc.attribute);
    put(stem + ".csv", csv.str());
    put(stem + ".svg", svg::scatter(sc, "median perplexity"));
  }

  nlohmann::json run = bundle.run;
  run["analysis"] = analysis_settings();
  write_run_json(out_dir / "run.json", run);
  written.push_back(out_dir / "run.json");
  return written;
}

}  // namespace codeppl

#endif  // CODEPPL_REPORT_HPP_

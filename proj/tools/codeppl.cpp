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


// codeppl: curate a corpus, score it, and analyze the scores.
//
//   codeppl curate        --config run.conf
//   codeppl perplexity    --config run.conf [--scorer SPEC]... [--ctx-size N]
//   codeppl analyze       [name=]scores.csv... [--rankings r.csv] [--attributes a.csv]
//   codeppl protocol-check --scorer SPEC [--fixture table.json]

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "codeppl/config.hpp"
#include "codeppl/pipeline.hpp"

namespace {

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> ctx_size;
  std::optional<std::uint32_t> stride;
  std::vector<std::string> scorers;
  std::optional<std::string> clean_mode;
  std::optional<unsigned> workers;
  std::optional<std::string> out;
  std::vector<std::string> sets;
};

void add_common(CLI::App* app, std::string& config, Overrides& o) {
  app->add_option("--config", config, "run configuration file")->required()->check(CLI::ExistingFile);
  app->add_option("--seed", o.seed, "seed for sampling and splits");
  app->add_option("--ctx-size", o.ctx_size, "context size, or 'auto'");
  app->add_option("--stride", o.stride, "sliding-window stride");
  app->add_option("--scorer", o.scorers, "scorer spec (repeatable; replaces the config list)");
  app->add_option("--clean-mode", o.clean_mode, "header | all_comments | raw");
  app->add_option("--workers", o.workers, "worker threads");
  app->add_option("--out", o.out, "output directory");
  app->add_option("--set", o.sets, "extra key=value config override (repeatable)");
}

codeppl::RunConfig resolve(const std::string& path, const Overrides& o) {
  codeppl::RunConfig cfg = codeppl::load_config(path);
  if (o.seed) cfg.set_seed(*o.seed);
  if (o.ctx_size) codeppl::apply_setting(cfg, "engine.ctx_size", *o.ctx_size);
  if (o.stride) cfg.engine.stride = *o.stride;
  if (!o.scorers.empty()) cfg.scorers = o.scorers;
  if (o.clean_mode) cfg.clean_mode = codeppl::parse_clean_mode(*o.clean_mode);
  if (o.workers) cfg.workers = std::max(1u, *o.workers);
  if (o.out) cfg.out_dir = *o.out;
  for (const auto& kv : o.sets) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw codeppl::Error("--set expects key=value, got '" + kv + "'");
    codeppl::apply_setting(cfg, codeppl::trim(kv.substr(0, eq)), codeppl::trim(kv.substr(eq + 1)),
                           std::filesystem::current_path());
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"codeppl: perplexity of source code across programming languages"};
  app.set_version_flag("--version", std::string(codeppl::kVersion));
  app.require_subcommand(1);

  std::string curate_cfg, ppl_cfg;
  Overrides curate_o, ppl_o;
  auto* curate = app.add_subcommand("curate", "filter, classify, deduplicate and sample the corpus");
  add_common(curate, curate_cfg, curate_o);
  auto* ppl = app.add_subcommand("perplexity", "clean, tokenize and score the sample");
  add_common(ppl, ppl_cfg, ppl_o);

  std::vector<std::string> score_files;
  std::optional<std::string> rankings;
  std::vector<std::string> attributes, attribute_names;
  std::string report_out = "report";
  auto* analyze = app.add_subcommand("analyze", "summaries, rankings, correlations and plots");
  analyze->add_option("scores", score_files, "[name=]scores.csv; several files form the model axis")->required();
  analyze->add_option("--rankings", rankings, "external rankings CSV (study,model,language,rank)");
  analyze->add_option("--attributes", attributes, "language attribute CSV (repeatable)");
  analyze->add_option("--attribute", attribute_names, "attribute to plot (default: all)");
  analyze->add_option("--out", report_out, "report directory");

  std::string check_scorer;
  std::optional<std::string> check_fixture;
  bool check_misalign = false;
  auto* check = app.add_subcommand("protocol-check", "handshake a scorer and validate the wire contract");
  check->add_option("--scorer", check_scorer, "scorer spec (http://, exec:, mock:, env:)");
  check->add_option("--fixture", check_fixture, "expected log2p table (mock fixture JSON)");
  check->add_flag("--misalign", check_misalign, "make an in-process mock drop one value per reply");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*curate) {
      auto cfg = resolve(curate_cfg, curate_o);
      auto result = codeppl::cmd_curate(cfg);
      for (const auto& line : result.log) std::cout << line << '\n';
      std::cout << "wrote " << cfg.sample_path().string() << '\n';
    } else if (*ppl) {
      auto cfg = resolve(ppl_cfg, ppl_o);
      auto result = codeppl::cmd_perplexity(cfg);
      std::cout << "ctx_size " << result.engine.ctx_size << (cfg.ctx_auto ? " (derived)" : " (fixed)") << '\n';
      std::cout << "files sampled " << result.n_sampled << ", after size filter " << result.n_size_filtered
                << ", scored set " << result.n_scored_files << '\n';
      for (const auto& r : result.runs) {
        std::cout << r.id << ": " << r.result.scores.size() << " scored, " << r.result.failures.size()
                  << " failed -> " << (r.dir / "scores.csv").string() << '\n';
        for (const auto& f : r.result.failures) std::cerr << "  failed " << f.source.str() << ": " << f.reason << '\n';
      }
    } else if (*analyze) {
      codeppl::AnalyzeOptions opt;
      for (const auto& s : score_files) opt.inputs.push_back(codeppl::parse_analyze_input(s));
      if (rankings) opt.rankings = *rankings;
      for (const auto& a : attributes) opt.attributes.emplace_back(a);
      opt.attribute_names = attribute_names;
      opt.out_dir = report_out;
      auto bundle = codeppl::cmd_analyze(opt);
      for (const auto& m : bundle.models) {
        std::cout << m.model << ':';
        for (const auto& s : m.summaries) std::cout << ' ' << s.language << '=' << codeppl::format_double(s.median);
        std::cout << '\n';
      }
      std::cout << "report written to " << opt.out_dir.string() << '\n';
    } else if (*check) {
      std::string spec = check_scorer;
      if (spec.empty()) {
        const char* env = std::getenv("CODEPPL_SCORER");
        if (!env || !*env) throw codeppl::Error("protocol-check: no --scorer and CODEPPL_SCORER is unset");
        spec = env;
      }
      std::optional<std::filesystem::path> fixture;
      if (check_fixture) fixture = *check_fixture;
      auto report = codeppl::cmd_protocol_check(spec, fixture, check_misalign);
      for (const auto& c : report.checks) {
        std::cout << (c.ok ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << '\n';
      }
      return report.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "codeppl: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

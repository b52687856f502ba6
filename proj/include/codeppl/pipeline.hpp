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


// The four CLI commands as library calls: curate, perplexity, analyze and
// protocol-check, plus the scorer spec strings they accept.

#ifndef CODEPPL_PIPELINE_HPP_
#define CODEPPL_PIPELINE_HPP_

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "codeppl/analysis.hpp"
#include "codeppl/cleaning.hpp"
#include "codeppl/common.hpp"
#include "codeppl/config.hpp"
#include "codeppl/corpus.hpp"
#include "codeppl/encoding.hpp"
#include "codeppl/engine.hpp"
#include "codeppl/hash.hpp"
#include "codeppl/ngram.hpp"
#include "codeppl/protocol.hpp"
#include "codeppl/report.hpp"
#include "codeppl/rng.hpp"
#include "codeppl/scorer.hpp"
#include "codeppl/tokenization.hpp"
#include "codeppl/transport.hpp"

namespace codeppl {

// ---------------------------------------------------------------- scorer specs

// Forms:
//   uniform[:V]                      V defaults to the tokenizer vocabulary
//   ngram[:order=3,k=0.01,holdout=0.5]
//   http://host:port                 POST /score
//   exec:<command line>              protocol over the child's stdin/stdout
//   mock:<fixture.json>              in-process fixture replay
//   env:VAR                          spec read from an environment variable
//   name=<spec>                      any of the above under a chosen id
struct ScorerSpec {
  std::string text;
  std::string name;
  std::string kind;  // uniform | ngram | http | exec | mock
  std::string target;
  std::map<std::string, std::string> params;

  bool is_external() const { return kind == "http" || kind == "exec" || kind == "mock"; }
};

inline ScorerSpec parse_scorer_spec(const std::string& text) {
  ScorerSpec spec;
  spec.text = text;
  std::string rest = trim(text);
  if (rest.rfind("env:", 0) == 0) {
    std::string var = rest.substr(4);
    const char* v = std::getenv(var.c_str());
    if (!v || !*v) throw Error("scorer spec '" + text + "': environment variable " + var + " is not set");
    ScorerSpec inner = parse_scorer_spec(v);
    inner.text = text;
    return inner;
  }
  if (auto eq = rest.find('='); eq != std::string::npos && rest.substr(0, eq).find(':') == std::string::npos &&
                                !rest.substr(0, eq).empty()) {
    spec.name = rest.substr(0, eq);
    rest = rest.substr(eq + 1);
  }
  auto colon = rest.find(':');
  std::string head = rest.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : rest.substr(colon + 1);
  if (rest.rfind("http://", 0) == 0 || rest.rfind("https://", 0) == 0) {
    spec.kind = "http";
    spec.target = rest;
  } else if (head == "exec" || head == "mock") {
    if (tail.empty()) throw Error("scorer spec '" + text + "': missing " + (head == "exec" ? "command" : "fixture path"));
    spec.kind = head;
    spec.target = tail;
  } else if (head == "uniform") {
    spec.kind = head;
    spec.target = tail;
  } else if (head == "ngram") {
    spec.kind = head;
    for (const auto& kv : split(tail, ',')) {
      if (trim(kv).empty()) continue;
      auto e = kv.find('=');
      if (e == std::string::npos) throw Error("scorer spec '" + text + "': expected key=value, got '" + kv + "'");
      std::string k = trim(kv.substr(0, e));
      if (k != "order" && k != "k" && k != "holdout") throw Error("scorer spec '" + text + "': unknown ngram key " + k);
      spec.params[k] = trim(kv.substr(e + 1));
    }
  } else {
    throw Error("unknown scorer spec '" + text + "' (expected uniform, ngram, http://, exec:, mock: or env:)");
  }
  return spec;
}

// Client for an external spec (http, exec or mock).
inline std::shared_ptr<ProtocolClient> open_client(const ScorerSpec& spec, bool misalign_mock = false) {
  if (spec.kind == "http") return std::make_shared<ProtocolClient>(std::make_unique<HttpTransport>(spec.target));
  if (spec.kind == "exec") return std::make_shared<ProtocolClient>(std::make_unique<ProcessTransport>(spec.target));
  if (spec.kind == "mock") {
    auto service = std::make_shared<MockScorerService>(MockScorerService::from_fixture(spec.target));
    service->set_misalign(misalign_mock);
    return std::make_shared<ProtocolClient>(std::make_unique<FunctionTransport>(
        [service](const std::string& line) { return service->handle(line); }, "mock:" + spec.target));
  }
  throw Error("scorer spec '" + spec.text + "' is not an external scorer");
}

// ---------------------------------------------------------------- helpers

namespace detail {

template <typename F>
auto stage(const std::string& command, const std::string& name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const std::exception& e) {
    throw Error(command + ": " + name + ": " + e.what());
  }
}

inline void write_sample(const std::filesystem::path& path, const std::vector<SourceFile>& files) {
  std::ostringstream out;
  write_sample_csv(out, files);
  write_file(path, out.str());
}

inline std::string param(const ScorerSpec& spec, const std::string& key, const std::string& fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

inline double param_double(const ScorerSpec& spec, const std::string& key, double fallback) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) return fallback;
  try {
    std::size_t used = 0;
    double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error("scorer spec '" + spec.text + "': " + key + " = '" + it->second + "' is not a number");
  }
}

}  // namespace detail

// ---------------------------------------------------------------- curate

struct CurateResult {
  std::vector<SourceFile> sample;
  std::vector<std::string> log;  // one line per funnel stage
};

inline CurateResult cmd_curate(const RunConfig& cfg) {
  const std::string cmd = "curate";
  detail::stage(cmd, "config", [&] {
    cfg.validate({"corpus_root", "manifest", "ext_map"});
    return 0;
  });
  CurateResult out;
  auto manifest = detail::stage(cmd, "manifest", [&] { return load_manifest(cfg.manifest, cfg.corpus_root); });
  out.log.push_back("manifest_rows " + std::to_string(manifest.records.size() + manifest.diagnostics.size()) +
                    " (rejected " + std::to_string(manifest.diagnostics.size()) + ")");
  FilterFunnel funnel;
  auto projects = detail::stage(cmd, "filter_projects", [&] {
    return filter_projects(manifest.records, cfg.licenses, cfg.min_lang_frequency, &funnel);
  });
  out.log.push_back("license_filter " + std::to_string(funnel.after_license));
  out.log.push_back("quality_filter " + std::to_string(funnel.after_quality));
  out.log.push_back("language_frequency_filter " + std::to_string(funnel.after_language_frequency));
  auto ext = detail::stage(cmd, "ext_map", [&] { return load_extension_map(cfg.ext_map); });
  ClassifyStats cstats;
  auto files = detail::stage(cmd, "classify_files", [&] { return classify_files(projects, ext, &cstats, cfg.workers); });
  out.log.push_back("classified_files " + std::to_string(files.size()) + " (seen " + std::to_string(cstats.files_seen) +
                    ", unmapped " + std::to_string(cstats.unmapped) + ", unreadable " +
                    std::to_string(cstats.unreadable) + ")");
  auto unique = detail::stage(cmd, "dedup_files", [&] { return dedup_files(files); });
  out.log.push_back("dedup_files " + std::to_string(unique.size()));
  out.sample = detail::stage(cmd, "stratified_sample", [&] { return stratified_sample(unique, cfg.sample); });
  std::set<std::string> langs;
  for (const auto& f : out.sample) langs.insert(f.language);
  out.log.push_back("sample " + std::to_string(out.sample.size()) + " (" + std::to_string(cfg.sample.per_language_count) +
                    " per language, " + std::to_string(langs.size()) + " languages, stage " +
                    std::string(to_string(cfg.sample.stage)) + ")");

  detail::stage(cmd, "write", [&] {
    detail::write_sample(cfg.sample_path(), out.sample);
    std::string log;
    for (const auto& l : out.log) log += l + "\n";
    for (const auto& d : manifest.diagnostics) log += "rejected " + d + "\n";
    write_file(cfg.out_dir / "curation_log.txt", log);
    nlohmann::json run;
    run["command"] = "curate";
    run["config"] = cfg.to_json();
    run["seed"] = cfg.sample.seed;
    run["corpus_digest"] = corpus_digest(out.sample);
    run["funnel"] = {{"projects", funnel.input},
                     {"after_license", funnel.after_license},
                     {"after_quality", funnel.after_quality},
                     {"after_language_frequency", funnel.after_language_frequency},
                     {"classified_files", files.size()},
                     {"deduplicated_files", unique.size()},
                     {"sampled_files", out.sample.size()}};
    write_run_json(cfg.out_dir / "run.json", run);
    return 0;
  });
  return out;
}

// ---------------------------------------------------------------- perplexity

struct ScorerRun {
  std::string id;
  std::string spec;
  std::filesystem::path dir;
  BatchResult result;
  std::size_t n_train = 0;  // n-gram training files
};

struct PerplexityResult {
  EngineConfig engine;
  std::optional<ContextChoice> context;
  std::map<std::string, TokenStats> token_stats;
  std::size_t n_sampled = 0, n_size_filtered = 0, n_scored_files = 0;
  std::vector<ScorerRun> runs;
};

namespace detail {

struct PreparedCorpus {
  std::vector<SourceFile> files;  // canonical order, token_count set
  std::map<FileKey, TokenSequence> tokens;
  std::size_t encoding_flagged = 0, cleaning_flagged = 0;
};

inline PreparedCorpus prepare(const RunConfig& cfg, std::vector<SourceFile> files, const GrammarSet& grammars,
                              Tokenizer& tokenizer) {
  auto manifest = load_manifest(cfg.manifest, cfg.corpus_root);
  std::map<std::string, std::filesystem::path> roots;
  for (const auto& r : manifest.records) roots[r.name] = r.root_path;
  std::optional<TokenCache> cache;
  if (cfg.token_cache && tokenizer.descriptor().kind != TokenizerKind::kWhitespace) cache.emplace(*cfg.token_cache);

  PreparedCorpus out;
  sort_canonical(files);
  for (auto& f : files) {
    auto root = roots.find(f.project);
    if (root == roots.end()) throw Error(f.project + "/" + f.path + ": project not in manifest");
    f.abs_path = root->second / f.path;
    std::string bytes = read_file(f.abs_path);
    if (sha256_hex(bytes) != f.content_hash) throw Error(f.project + "/" + f.path + ": content changed since curation");
    const std::string variant(to_string(cfg.clean_mode));
    std::optional<std::vector<TokenId>> ids;
    if (cache) ids = cache->get(f.content_hash, tokenizer.descriptor().id, variant);
    if (!ids) {
      DecodedText text = detect_and_decode(bytes);
      out.encoding_flagged += text.flagged;
      CleanedFile cleaned = clean(text.text, grammars.at(f.language), cfg.clean_mode);
      out.cleaning_flagged += cleaned.flagged;
      ids = tokenizer.encode(cleaned.text);
      if (cache) cache->put(f.content_hash, tokenizer.descriptor().id, variant, *ids);
    }
    f.token_count = ids->size();
    out.tokens[f.key()] = TokenSequence{tokenizer.descriptor().id, std::move(*ids), f.key()};
  }
  out.files = std::move(files);
  return out;
}

inline void write_scores(const std::filesystem::path& dir, const BatchResult& r) {
  std::ostringstream scores;
  write_csv_row(scores, {"file", "project", "language", "n_tokens", "n_scored", "perplexity"});
  for (const auto& s : r.scores) {
    write_csv_row(scores, {s.source.path, s.source.project, s.source.language, std::to_string(s.n_tokens),
                           std::to_string(s.n_scored), format_double(s.perplexity)});
  }
  write_file(dir / "scores.csv", scores.str());
  std::ostringstream failures;
  write_csv_row(failures, {"file", "project", "language", "reason"});
  for (const auto& f : r.failures) write_csv_row(failures, {f.source.path, f.source.project, f.source.language, f.reason});
  write_file(dir / "failures.csv", failures.str());
}

// Per language, a seeded share `holdout` of files is scored and the rest
// trains the model. holdout = 0 trains and scores on every file.
inline std::pair<std::vector<TokenSequence>, std::vector<TokenSequence>> holdout_split(
    const std::vector<TokenSequence>& seqs, double holdout, std::uint64_t seed) {
  if (holdout == 0.0) return {seqs, seqs};
  std::map<std::string, std::vector<TokenSequence>> by_lang;
  for (const auto& s : seqs) by_lang[s.source.language].push_back(s);
  std::vector<TokenSequence> train, eval;
  for (auto& [lang, group] : by_lang) {
    if (group.size() < 2) throw Error("holdout split: language '" + lang + "' has fewer than 2 files");
    SplitMix64 rng(derive_seed(seed, "holdout/" + lang));
    seeded_shuffle(group, rng);
    auto n_eval = static_cast<std::size_t>(std::llround(holdout * static_cast<double>(group.size())));
    n_eval = std::clamp<std::size_t>(n_eval, 1, group.size() - 1);
    for (std::size_t i = 0; i < group.size(); ++i) (i < n_eval ? eval : train).push_back(std::move(group[i]));
  }
  auto by_key = [](const TokenSequence& a, const TokenSequence& b) { return a.source < b.source; };
  std::sort(train.begin(), train.end(), by_key);
  std::sort(eval.begin(), eval.end(), by_key);
  return {std::move(train), std::move(eval)};
}

}  // namespace detail

inline PerplexityResult cmd_perplexity(const RunConfig& cfg) {
  const std::string cmd = "perplexity";
  detail::stage(cmd, "config", [&] {
    cfg.validate({"corpus_root", "manifest", "grammars", "sample_csv"});
    return 0;
  });
  auto specs_text = cfg.scorer_specs();
  if (specs_text.empty()) throw Error("perplexity: no scorer configured (set `scorer` or CODEPPL_SCORER)");
  std::vector<ScorerSpec> specs;
  for (const auto& s : specs_text) specs.push_back(detail::stage(cmd, "scorer spec", [&] { return parse_scorer_spec(s); }));

  PerplexityResult result;
  auto sample = detail::stage(cmd, "read sample", [&] { return read_sample_csv(cfg.sample_path()); });
  result.n_sampled = sample.size();
  std::set<std::string> languages;
  for (const auto& f : sample) languages.insert(f.language);
  auto grammars = detail::stage(cmd, "grammars", [&] {
    auto g = load_grammars(cfg.grammars);
    require_grammars(g, languages);
    return g;
  });

  // External clients are opened up front: they may also supply the tokenizer.
  std::map<std::size_t, std::shared_ptr<ProtocolClient>> clients;
  std::map<std::size_t, std::shared_ptr<Scorer>> externals;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (!specs[i].is_external()) continue;
    detail::stage(cmd, "connect " + specs[i].text, [&] {
      clients[i] = open_client(specs[i]);
      externals[i] = std::make_shared<ExternalScorer>(clients[i], specs[i].name);
      return 0;
    });
  }
  Tokenizer tokenizer = detail::stage(cmd, "tokenizer", [&] {
    if (cfg.tokenizer == "byte") return Tokenizer::bytes();
    if (cfg.tokenizer == "whitespace") return Tokenizer::whitespace();
    if (!clients.count(0)) throw Error("tokenizer = scorer needs the first scorer to be external");
    auto client = clients[0];
    return Tokenizer::external(externals[0]->id(), externals[0]->vocab_size(),
                               [client](std::string_view text) { return client->tokenize(text); });
  });

  auto corpus = detail::stage(cmd, "prepare", [&] { return detail::prepare(cfg, sample, grammars, tokenizer); });
  std::vector<TokenSequence> all;
  for (const auto& f : corpus.files) all.push_back(corpus.tokens.at(f.key()));
  result.token_stats = detail::stage(cmd, "token_stats", [&] { return token_stats(all, languages); });

  result.engine = cfg.engine;
  if (cfg.ctx_auto) {
    result.context = detail::stage(cmd, "configure_context", [&] {
      return configure_context(min_median_tokens(result.token_stats), cfg.engine.stride, cfg.engine.candidate_ctx);
    });
    result.engine.ctx_size = result.context->config.ctx_size;
  }

  auto filtered = detail::stage(cmd, "size_filter", [&] {
    return size_filter(corpus.files, result.engine.ctx_size, cfg.size_filter_factor);
  });
  result.n_size_filtered = filtered.size();
  if (filtered.empty()) {
    throw Error("perplexity: size_filter: no file has " + std::to_string(cfg.size_filter_factor) + " x " +
                std::to_string(result.engine.ctx_size) + " tokens");
  }
  std::vector<SourceFile> final_set = filtered;
  std::optional<std::size_t> second_quota;
  if (cfg.second_count) {
    final_set = detail::stage(cmd, "second sample", [&] {
      std::map<std::string, std::size_t> per_lang;
      for (const auto& f : filtered) ++per_lang[f.language];
      std::size_t quota = *cfg.second_count;
      if (quota == 0) {
        quota = per_lang.begin()->second;
        for (const auto& [l, n] : per_lang) quota = std::min(quota, n);
      }
      second_quota = quota;
      SampleSpec spec{quota, cfg.sample.seed, SampleStage::kSecond};
      return stratified_sample(filtered, spec);
    });
  }
  result.n_scored_files = final_set.size();

  std::filesystem::create_directories(cfg.out_dir);
  detail::stage(cmd, "write", [&] {
    std::ostringstream ts;
    write_csv_row(ts, {"language", "n_files", "median_tokens", "median_unique_tokens"});
    for (const auto& [lang, s] : result.token_stats) {
      write_csv_row(ts, {lang, std::to_string(s.n_files), format_double(s.median_tokens),
                         format_double(s.median_unique_tokens)});
    }
    write_file(cfg.out_dir / "token_stats.csv", ts.str());
    if (cfg.second_count) detail::write_sample(cfg.out_dir / "second_sample.csv", final_set);
    return 0;
  });

  std::vector<TokenSequence> seqs;
  for (const auto& f : final_set) seqs.push_back(corpus.tokens.at(f.key()));
  const std::uint32_t vocab = tokenizer.descriptor().vocab_size;

  std::set<std::string> used_ids;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    ScorerRun run;
    run.spec = spec.text;
    std::shared_ptr<Scorer> scorer;
    std::vector<TokenSequence> eval = seqs;
    nlohmann::json scorer_json = {{"spec", spec.text}};
    detail::stage(cmd, "scorer " + spec.text, [&] {
      if (spec.kind == "uniform") {
        std::uint32_t v = spec.target.empty() ? vocab : detail::parse_unsigned<std::uint32_t>("uniform", spec.target);
        scorer = std::make_shared<UniformScorer>(v);
      } else if (spec.kind == "ngram") {
        auto order = detail::parse_unsigned<std::size_t>("order", detail::param(spec, "order", "3"));
        double k = detail::param_double(spec, "k", 0.01);
        double holdout = detail::param_double(spec, "holdout", 0.5);
        if (!(holdout >= 0.0 && holdout < 1.0)) throw Error("holdout must be in [0, 1)");
        auto [train, test] = detail::holdout_split(seqs, holdout, cfg.sample.seed);
        run.n_train = train.size();
        auto model = std::make_shared<const NgramModel>(ngram_train(train, order, k, vocab));
        scorer = std::make_shared<NgramScorer>(model, spec.name);
        eval = std::move(test);
        scorer_json["order"] = order;
        scorer_json["k"] = k;
        scorer_json["holdout"] = holdout;
        scorer_json["train_files"] = run.n_train;
      } else {
        scorer = externals.at(i);
      }
      if (spec.kind == "uniform" && !spec.name.empty()) throw Error("uniform scorers take no name");
      if (scorer->vocab_size() != vocab) {
        throw Error("scorer vocabulary " + std::to_string(scorer->vocab_size()) + " does not match tokenizer '" +
                    tokenizer.descriptor().id + "' vocabulary " + std::to_string(vocab));
      }
      return 0;
    });
    run.id = scorer->id();
    std::string dir_name = file_stem(run.id);
    for (int n = 2; used_ids.count(dir_name); ++n) dir_name = file_stem(run.id) + "_" + std::to_string(n);
    used_ids.insert(dir_name);
    run.dir = specs.size() == 1 ? cfg.out_dir : cfg.out_dir / dir_name;
    run.result = batch_perplexity(eval, *scorer, result.engine, cfg.workers);

    detail::stage(cmd, "write", [&] {
      detail::write_scores(run.dir, run.result);
      nlohmann::json j;
      j["command"] = "perplexity";
      j["config"] = cfg.to_json();
      j["seed"] = cfg.sample.seed;
      j["tokenizer"] = {{"id", tokenizer.descriptor().id},
                        {"kind", to_string(tokenizer.descriptor().kind)},
                        {"vocab_size", vocab}};
      scorer_json["id"] = run.id;
      scorer_json["kind"] = to_string(scorer->kind());
      scorer_json["vocab_size"] = scorer->vocab_size();
      j["scorer"] = scorer_json;
      j["scorer_ids"] = nlohmann::json::array();
      for (const auto& other : specs) j["scorer_ids"].push_back(other.text);
      std::vector<SourceFile> scored_files;
      std::set<FileKey> eval_keys;
      for (const auto& s : eval) eval_keys.insert(s.source);
      for (const auto& f : final_set) {
        if (eval_keys.count(f.key())) scored_files.push_back(f);
      }
      j["corpus_digest"] = corpus_digest(scored_files);
      j["sample_digest"] = corpus_digest(sample);
      j["engine"] = {{"ctx_size", result.engine.ctx_size},
                     {"ctx_derived", cfg.ctx_auto},
                     {"stride", result.engine.stride},
                     {"batch_size", result.engine.effective_batch_size()},
                     {"min_length_factor", result.engine.min_length_factor},
                     {"size_filter_factor", cfg.size_filter_factor}};
      if (result.context) {
        j["engine"]["min_median_tokens"] = min_median_tokens(result.token_stats);
        j["engine"]["ctx_bound"] = result.context->bound;
        j["engine"]["ctx_integer_bound"] = result.context->integer_bound;
      }
      j["counts"] = {{"sampled", result.n_sampled},
                     {"size_filtered", result.n_size_filtered},
                     {"second_stage", cfg.second_count ? nlohmann::json(result.n_scored_files) : nlohmann::json()},
                     {"second_stage_quota", second_quota ? nlohmann::json(*second_quota) : nlohmann::json()},
                     {"evaluated", eval.size()},
                     {"scored", run.result.scores.size()},
                     {"failed", run.result.failures.size()},
                     {"encoding_flagged", corpus.encoding_flagged},
                     {"cleaning_flagged", corpus.cleaning_flagged}};
      write_run_json(run.dir / "run.json", j);
      return 0;
    });
    result.runs.push_back(std::move(run));
  }
  if (specs.size() > 1) {
    nlohmann::json j;
    j["command"] = "perplexity";
    j["config"] = cfg.to_json();
    j["seed"] = cfg.sample.seed;
    j["runs"] = nlohmann::json::array();
    for (const auto& r : result.runs) j["runs"].push_back({{"id", r.id}, {"dir", r.dir.filename().string()}});
    write_run_json(cfg.out_dir / "run.json", j);
  }
  return result;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeInput {
  std::string name;  // model axis label
  std::filesystem::path scores;
};

// "name=path" or a bare path; a bare path is named after its directory.
inline AnalyzeInput parse_analyze_input(const std::string& arg) {
  auto eq = arg.find('=');
  if (eq != std::string::npos && eq > 0) return {arg.substr(0, eq), arg.substr(eq + 1)};
  std::filesystem::path p(arg);
  std::string name = std::filesystem::absolute(p).parent_path().filename().string();
  return {name.empty() ? "model" : name, p};
}

struct AnalyzeOptions {
  std::vector<AnalyzeInput> inputs;
  std::optional<std::filesystem::path> rankings;
  std::vector<std::filesystem::path> attributes;
  std::vector<std::string> attribute_names;  // empty: every attribute in the tables
  std::filesystem::path out_dir = "report";
};

inline std::vector<FileScore> read_scores_csv(const std::filesystem::path& path) {
  CsvTable csv = read_csv(path);
  const std::vector<std::string> want{"file", "project", "language", "n_tokens", "n_scored", "perplexity"};
  if (csv.header != want) {
    throw Error(path.string() + ": schema mismatch: expected header '" + join(want, ",") + "', got '" +
                join(csv.header, ",") + "'");
  }
  std::vector<FileScore> out;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    std::string where = path.string() + ": line " + std::to_string(csv.lines[r]);
    if (row.size() != want.size()) throw Error(where + ": wrong field count");
    FileScore s;
    s.source = {row[2], row[1], row[0]};
    auto n_tok = detail::parse_count(row[3]), n_sc = detail::parse_count(row[4]);
    if (!n_tok || !n_sc) throw Error(where + ": bad token counts");
    s.n_tokens = *n_tok;
    s.n_scored = *n_sc;
    try {
      s.perplexity = std::stod(row[5]);
    } catch (const std::exception&) {
      throw Error(where + ": perplexity '" + row[5] + "' is not a number");
    }
    if (!(s.perplexity > 0.0) || !std::isfinite(s.perplexity)) throw Error(where + ": perplexity must be positive");
    out.push_back(std::move(s));
  }
  if (out.empty()) throw Error(path.string() + ": no scores");
  return out;
}

inline ReportBundle cmd_analyze(const AnalyzeOptions& opt) {
  const std::string cmd = "analyze";
  if (opt.inputs.empty()) throw Error("analyze: at least one scores CSV is required");
  ReportBundle bundle;
  ModelMedians medians;
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& in : opt.inputs) {
    for (const auto& m : bundle.models) {
      if (m.model == in.name) throw Error("analyze: duplicate model name '" + in.name + "'");
    }
    auto scores = detail::stage(cmd, in.scores.string(), [&] { return read_scores_csv(in.scores); });
    ModelReport m{in.name, language_summary(scores)};
    for (const auto& s : m.summaries) medians[m.model][s.language] = s.median;
    inputs.push_back({{"model", in.name}, {"sha256", sha256_hex(read_file(in.scores))}, {"files", scores.size()}});
    bundle.models.push_back(std::move(m));
  }
  if (opt.rankings) {
    bundle.correlations = detail::stage(cmd, "rankings", [&] {
      return compare_rankings(ranking_of(bundle.models.front().summaries), load_rankings(*opt.rankings));
    });
  }
  if (bundle.models.size() > 1) {
    bundle.pearson = detail::stage(cmd, "pearson", [&] { return pearson_matrix(medians); });
    bundle.parallel = parallel_coordinates(medians);
  }
  if (!opt.attributes.empty()) {
    AttributeTable table;
    for (const auto& p : opt.attributes) {
      detail::stage(cmd, "attributes", [&] {
        load_attributes(p, table);
        return 0;
      });
    }
    std::vector<std::string> names = opt.attribute_names;
    if (names.empty()) names.assign(table.attributes.begin(), table.attributes.end());
    for (const auto& a : names) {
      bundle.scatters.push_back(detail::stage(cmd, "attribute_scatter", [&] {
        return attribute_scatter(bundle.models.front().summaries, table, a);
      }));
    }
  }
  bundle.run["command"] = "analyze";
  bundle.run["inputs"] = inputs;
  bundle.run["reference_model"] = bundle.models.front().model;
  if (opt.rankings) bundle.run["rankings_sha256"] = sha256_hex(read_file(*opt.rankings));
  detail::stage(cmd, "write", [&] { return emit_report(bundle, opt.out_dir); });
  return bundle;
}

// ---------------------------------------------------------------- protocol-check

// `fixture` optionally names a mock fixture whose table the scorer must
// reproduce exactly.
inline ProtocolReport cmd_protocol_check(const std::string& scorer_spec,
                                         const std::optional<std::filesystem::path>& fixture = std::nullopt,
                                         bool misalign_mock = false) {
  ScorerSpec spec = parse_scorer_spec(scorer_spec);
  auto client = open_client(spec, misalign_mock);
  std::optional<std::vector<double>> table;
  if (fixture) {
    table = MockScorerService::from_fixture(*fixture).table();
  } else if (spec.kind == "mock") {
    table = MockScorerService::from_fixture(spec.target).table();
  }
  return protocol_check(*client, table);
}

}  // namespace codeppl

#endif  // CODEPPL_PIPELINE_HPP_

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


// Run configuration: a flat `key = value` file. Blank lines and lines
// starting with '#' are ignored. Relative paths resolve against the
// directory holding the file. Keys:
//
//   config_version            must be 1
//   corpus_root               directory the manifest's relative roots resolve against
//   manifest                  project manifest CSV
//   ext_map                   language,extension CSV
//   grammars                  comment grammar JSON
//   licenses                  comma-separated allowed license tags
//   min_lang_frequency        fraction in [0, 1]
//   seed                      unsigned; drives sampling and holdout splits
//   sample.per_language_count first-stage quota
//   sample.stage              first | second
//   sample.second_count       auto | off | N  (second stage inside `perplexity`)
//   sample_csv                sample CSV path (default <out_dir>/sample.csv)
//   tokenizer                 byte | whitespace | scorer
//   scorer                    scorer spec; repeat the key for several scorers
//   clean_mode                header | all_comments | raw
//   engine.ctx_size           auto | N
//   engine.stride             N
//   engine.batch_size         N, 0 = ctx_size
//   engine.candidate_ctx      comma-separated increasing sizes
//   engine.min_length_factor  N
//   engine.size_filter_factor N
//   token_cache               directory (optional)
//   workers                   N
//   out_dir                   output directory

#ifndef CODEPPL_CONFIG_HPP_
#define CODEPPL_CONFIG_HPP_

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "codeppl/cleaning.hpp"
#include "codeppl/common.hpp"
#include "codeppl/corpus.hpp"
#include "codeppl/engine.hpp"

namespace codeppl {

inline constexpr int kConfigVersion = 1;

// Default license allow-list: the GNU copyleft family.
inline std::set<std::string> default_licenses() {
  return {"gpl-2.0", "gpl-3.0", "agpl-3.0", "lgpl-2.1", "lgpl-3.0"};
}

struct RunConfig {
  std::filesystem::path corpus_root;
  std::filesystem::path manifest;
  std::filesystem::path ext_map;
  std::filesystem::path grammars;
  std::set<std::string> licenses = default_licenses();
  double min_lang_frequency = 0.01;
  SampleSpec sample;
  // Second-stage quota: nullopt = off, 0 = auto (smallest language after the
  // size filter).
  std::optional<std::size_t> second_count = 0;
  std::optional<std::filesystem::path> sample_csv;
  std::string tokenizer = "byte";
  std::vector<std::string> scorers;
  CleanMode clean_mode = CleanMode::kHeaderStripped;
  EngineConfig engine;
  bool ctx_auto = true;
  std::uint32_t size_filter_factor = 3;
  std::optional<std::filesystem::path> token_cache;
  unsigned workers = 1;
  std::filesystem::path out_dir = "out";

  std::filesystem::path sample_path() const { return sample_csv ? *sample_csv : out_dir / "sample.csv"; }

  void set_seed(std::uint64_t seed) {
    sample.seed = seed;
    engine.seed = seed;
  }

  // Scorers from the config, else the CODEPPL_SCORER environment variable.
  std::vector<std::string> scorer_specs() const {
    if (!scorers.empty()) return scorers;
    if (const char* env = std::getenv("CODEPPL_SCORER"); env && *env) return {env};
    return {};
  }

  // Checks that referenced inputs exist. `need` lists the keys a command
  // requires.
  void validate(const std::set<std::string>& need) const {
    auto check = [&](const std::string& key, const std::filesystem::path& p, bool dir) {
      if (!need.count(key)) return;
      if (p.empty()) throw Error("config: '" + key + "' is not set");
      std::error_code ec;
      bool ok = dir ? std::filesystem::is_directory(p, ec) : std::filesystem::is_regular_file(p, ec);
      if (!ok) throw Error("config: " + key + " '" + p.string() + "' does not exist");
    };
    check("corpus_root", corpus_root, true);
    check("manifest", manifest, false);
    check("ext_map", ext_map, false);
    check("grammars", grammars, false);
    if (need.count("sample_csv")) check("sample_csv", sample_path(), false);
    if (!(min_lang_frequency >= 0.0 && min_lang_frequency <= 1.0)) {
      throw Error("config: min_lang_frequency must be in [0, 1]");
    }
    if (tokenizer != "byte" && tokenizer != "whitespace" && tokenizer != "scorer") {
      throw Error("config: tokenizer must be byte, whitespace or scorer");
    }
    engine.validate();
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["config_version"] = kConfigVersion;
    j["corpus_root"] = corpus_root.generic_string();
    j["manifest"] = manifest.generic_string();
    j["ext_map"] = ext_map.generic_string();
    j["grammars"] = grammars.generic_string();
    j["licenses"] = licenses;
    j["min_lang_frequency"] = min_lang_frequency;
    j["seed"] = sample.seed;
    j["sample"] = {{"per_language_count", sample.per_language_count}, {"stage", to_string(sample.stage)}};
    j["sample"]["second_count"] = !second_count ? nlohmann::json("off")
                                  : *second_count == 0 ? nlohmann::json("auto")
                                                       : nlohmann::json(*second_count);
    j["tokenizer"] = tokenizer;
    j["scorers"] = scorer_specs();
    j["clean_mode"] = to_string(clean_mode);
    j["engine"] = {{"ctx_size", ctx_auto ? nlohmann::json("auto") : nlohmann::json(engine.ctx_size)},
                   {"stride", engine.stride},
                   {"batch_size", engine.batch_size},
                   {"candidate_ctx", engine.candidate_ctx},
                   {"min_length_factor", engine.min_length_factor},
                   {"size_filter_factor", size_filter_factor}};
    j["workers"] = workers;
    return j;
  }
};

namespace detail {

template <typename T>
T parse_unsigned(const std::string& key, const std::string& value) {
  auto n = parse_count(value);
  if (!n || *n > std::numeric_limits<T>::max()) {
    throw Error("config: " + key + " = '" + value + "' is not a valid count");
  }
  return static_cast<T>(*n);
}

inline std::vector<std::uint32_t> parse_size_list(const std::string& key, const std::string& value) {
  std::vector<std::uint32_t> out;
  for (const auto& part : split(value, ',')) out.push_back(parse_unsigned<std::uint32_t>(key, trim(part)));
  return out;
}

}  // namespace detail

// Applies one setting; also used for command-line overrides.
inline void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value,
                          const std::filesystem::path& base = {}) {
  auto path = [&] {
    std::filesystem::path p(value);
    return p.is_relative() && !base.empty() ? (base / p).lexically_normal() : p;
  };
  if (key == "config_version") {
    if (value != std::to_string(kConfigVersion)) {
      throw Error("config: unsupported config_version " + value + " (expected " + std::to_string(kConfigVersion) + ")");
    }
  } else if (key == "corpus_root") {
    cfg.corpus_root = path();
  } else if (key == "manifest") {
    cfg.manifest = path();
  } else if (key == "ext_map") {
    cfg.ext_map = path();
  } else if (key == "grammars") {
    cfg.grammars = path();
  } else if (key == "licenses") {
    cfg.licenses.clear();
    for (const auto& l : split(value, ',')) {
      if (!trim(l).empty()) cfg.licenses.insert(to_lower(trim(l)));
    }
  } else if (key == "min_lang_frequency") {
    try {
      cfg.min_lang_frequency = std::stod(value);
    } catch (const std::exception&) {
      throw Error("config: min_lang_frequency = '" + value + "' is not a number");
    }
  } else if (key == "seed") {
    cfg.set_seed(detail::parse_unsigned<std::uint64_t>(key, value));
  } else if (key == "sample.per_language_count") {
    cfg.sample.per_language_count = detail::parse_unsigned<std::size_t>(key, value);
  } else if (key == "sample.stage") {
    cfg.sample.stage = parse_stage(value);
  } else if (key == "sample.second_count") {
    if (value == "off") {
      cfg.second_count.reset();
    } else if (value == "auto") {
      cfg.second_count = 0;
    } else {
      cfg.second_count = detail::parse_unsigned<std::size_t>(key, value);
    }
  } else if (key == "sample_csv") {
    cfg.sample_csv = path();
  } else if (key == "tokenizer") {
    cfg.tokenizer = value;
  } else if (key == "scorer") {
    cfg.scorers.push_back(value);
  } else if (key == "clean_mode") {
    cfg.clean_mode = parse_clean_mode(value);
  } else if (key == "engine.ctx_size") {
    cfg.ctx_auto = value == "auto";
    if (!cfg.ctx_auto) cfg.engine.ctx_size = detail::parse_unsigned<std::uint32_t>(key, value);
  } else if (key == "engine.stride") {
    cfg.engine.stride = detail::parse_unsigned<std::uint32_t>(key, value);
  } else if (key == "engine.batch_size") {
    cfg.engine.batch_size = detail::parse_unsigned<std::uint32_t>(key, value);
  } else if (key == "engine.candidate_ctx") {
    cfg.engine.candidate_ctx = detail::parse_size_list(key, value);
  } else if (key == "engine.min_length_factor") {
    cfg.engine.min_length_factor = detail::parse_unsigned<std::uint32_t>(key, value);
  } else if (key == "engine.size_filter_factor") {
    cfg.size_filter_factor = detail::parse_unsigned<std::uint32_t>(key, value);
  } else if (key == "token_cache") {
    cfg.token_cache = path();
  } else if (key == "workers") {
    cfg.workers = std::max(1u, detail::parse_unsigned<unsigned>(key, value));
  } else if (key == "out_dir") {
    cfg.out_dir = path();
  } else {
    throw Error("config: unknown key '" + key + "'");
  }
}

inline RunConfig parse_config(std::string_view text, const std::filesystem::path& base = {}) {
  RunConfig cfg;
  cfg.corpus_root = base;
  bool versioned = false;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("config line " + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    try {
      apply_setting(cfg, key, value, base);
    } catch (const Error& e) {
      throw Error("config line " + std::to_string(line_no) + ": " + e.what());
    }
    versioned |= key == "config_version";
  }
  if (!versioned) throw Error("config: missing config_version");
  return cfg;
}

inline RunConfig load_config(const std::filesystem::path& path) {
  auto base = std::filesystem::absolute(path).parent_path();
  try {
    return parse_config(read_file(path), base);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace codeppl

#endif  // CODEPPL_CONFIG_HPP_

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


// Corpus curation: manifest ingestion, project filtering, extension-based
// classification, exact-content deduplication, per-language stratified
// sampling and the token-count size filter.

#ifndef CODEPPL_CORPUS_HPP_
#define CODEPPL_CORPUS_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "codeppl/common.hpp"
#include "codeppl/hash.hpp"
#include "codeppl/rng.hpp"

namespace codeppl {

struct ProjectRecord {
  std::string name;
  std::string license;
  std::uint64_t stars = 0;
  std::uint64_t forks = 0;
  std::optional<std::string> primary_language;
  std::filesystem::path root_path;
};

struct ManifestLoad {
  std::vector<ProjectRecord> records;
  // One line per rejected row, "line N: reason".
  std::vector<std::string> diagnostics;
};

namespace detail {

inline std::optional<std::uint64_t> parse_count(const std::string& s) {
  std::string t = trim(s);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return std::nullopt;
  }
  try {
    return std::stoull(t);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace detail

// Parses a manifest CSV with header
// `name,license,stars,forks,primary_language,root_path`. Relative root paths
// resolve against `corpus_root`, or the manifest's directory when empty.
// Malformed rows are rejected individually.
inline ManifestLoad parse_manifest(std::string_view text, const std::filesystem::path& corpus_root) {
  static const std::vector<std::string> kHeader = {"name",  "license",          "stars",
                                                   "forks", "primary_language", "root_path"};
  CsvTable csv = parse_csv(text);
  for (auto& h : csv.header) h = trim(h);
  if (csv.header != kHeader) {
    throw Error("manifest header must be '" + join(kHeader, ",") + "', got '" + join(csv.header, ",") + "'");
  }
  ManifestLoad out;
  std::set<std::string> seen;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    std::string where = "line " + std::to_string(csv.lines[r]) + ": ";
    if (row.size() != kHeader.size()) {
      out.diagnostics.push_back(where + "expected 6 fields, got " + std::to_string(row.size()));
      continue;
    }
    ProjectRecord rec;
    rec.name = trim(row[0]);
    rec.license = to_lower(trim(row[1]));
    auto stars = detail::parse_count(row[2]);
    auto forks = detail::parse_count(row[3]);
    if (rec.name.empty()) {
      out.diagnostics.push_back(where + "empty project name");
      continue;
    }
    if (!stars || !forks) {
      out.diagnostics.push_back(where + "stars/forks must be non-negative integers");
      continue;
    }
    if (!seen.insert(rec.name).second) {
      out.diagnostics.push_back(where + "duplicate project name '" + rec.name + "'");
      continue;
    }
    rec.stars = *stars;
    rec.forks = *forks;
    if (std::string lang = trim(row[4]); !lang.empty()) rec.primary_language = lang;
    std::filesystem::path root = trim(row[5]);
    if (root.empty()) {
      out.diagnostics.push_back(where + "empty root_path");
      continue;
    }
    rec.root_path = root.is_relative() ? corpus_root / root : root;
    out.records.push_back(std::move(rec));
  }
  return out;
}

inline ManifestLoad load_manifest(const std::filesystem::path& manifest,
                                  const std::filesystem::path& corpus_root = {}) {
  std::filesystem::path base = corpus_root.empty() ? manifest.parent_path() : corpus_root;
  try {
    return parse_manifest(read_file(manifest), base);
  } catch (const Error& e) {
    throw Error(manifest.string() + ": " + e.what());
  }
}

// Per-stage survivor counts of filter_projects.
struct FilterFunnel {
  std::size_t input = 0;
  std::size_t after_license = 0;
  std::size_t after_quality = 0;
  std::size_t after_language_frequency = 0;
};

// Keeps projects with an allowed license, at least one star and one fork, a
// primary language, and whose primary language accounts for at least
// `min_lang_frequency` of the license-filtered projects.
inline std::vector<ProjectRecord> filter_projects(const std::vector<ProjectRecord>& manifest,
                                                  const std::set<std::string>& allowed_licenses,
                                                  double min_lang_frequency,
                                                  FilterFunnel* funnel = nullptr) {
  if (manifest.empty()) throw std::invalid_argument("filter_projects: empty manifest");
  if (!(min_lang_frequency >= 0.0 && min_lang_frequency <= 1.0)) {
    throw std::invalid_argument("filter_projects: min_lang_frequency must lie in [0, 1]");
  }
  std::set<std::string> allowed;
  for (const auto& l : allowed_licenses) allowed.insert(to_lower(l));

  std::vector<ProjectRecord> licensed;
  for (const auto& p : manifest) {
    if (allowed.count(to_lower(p.license))) licensed.push_back(p);
  }

  std::map<std::string, std::size_t> lang_count;
  for (const auto& p : licensed) {
    if (p.primary_language) ++lang_count[*p.primary_language];
  }

  std::vector<ProjectRecord> quality;
  for (const auto& p : licensed) {
    if (p.stars >= 1 && p.forks >= 1 && p.primary_language) quality.push_back(p);
  }

  std::vector<ProjectRecord> out;
  const double denom = static_cast<double>(licensed.size());
  for (const auto& p : quality) {
    double freq = static_cast<double>(lang_count[*p.primary_language]) / denom;
    if (freq >= min_lang_frequency) out.push_back(p);
  }
  if (funnel) {
    funnel->input = manifest.size();
    funnel->after_license = licensed.size();
    funnel->after_quality = quality.size();
    funnel->after_language_frequency = out.size();
  }
  return out;
}

// ---------------------------------------------------------------- extensions

// File extension (lowercase, leading dot) to language.
class ExtensionMap {
 public:
  void add(std::string extension, const std::string& language) {
    extension = to_lower(trim(extension));
    if (extension.size() < 2 || extension.front() != '.') {
      throw Error("extension '" + extension + "' must start with '.'");
    }
    if (language.empty()) throw Error("empty language for extension " + extension);
    auto [it, inserted] = entries_.emplace(extension, language);
    if (!inserted && it->second != language) {
      throw Error("extension " + extension + " maps to both " + it->second + " and " + language);
    }
  }

  std::optional<std::string> language_for(const std::filesystem::path& file) const {
    std::string ext = to_lower(file.extension().string());
    if (ext.empty()) return std::nullopt;
    auto it = entries_.find(ext);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  std::set<std::string> languages() const {
    std::set<std::string> out;
    for (const auto& [ext, lang] : entries_) out.insert(lang);
    return out;
  }

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

// CSV `language,extension`, one extension per row.
inline ExtensionMap load_extension_map(const std::filesystem::path& path) {
  CsvTable csv = read_csv(path);
  std::size_t lang_col = csv.column("language");
  std::size_t ext_col = csv.column("extension");
  ExtensionMap map;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    if (row.size() <= std::max(lang_col, ext_col)) {
      throw Error(path.string() + ": line " + std::to_string(csv.lines[r]) + ": short row");
    }
    try {
      map.add(row[ext_col], trim(row[lang_col]));
    } catch (const Error& e) {
      throw Error(path.string() + ": line " + std::to_string(csv.lines[r]) + ": " + e.what());
    }
  }
  return map;
}

// ---------------------------------------------------------------- files

struct SourceFile {
  std::string project;
  std::string path;  // relative to the project root, '/'-separated
  std::string language;
  std::string content_hash;  // SHA-256 of the raw bytes, lowercase hex
  std::filesystem::path abs_path;
  std::optional<std::uint64_t> token_count;

  FileKey key() const { return {language, project, path}; }
};

inline bool canonical_less(const SourceFile& a, const SourceFile& b) { return a.key() < b.key(); }

inline void sort_canonical(std::vector<SourceFile>& files) {
  std::sort(files.begin(), files.end(), canonical_less);
}

struct ClassifyStats {
  std::size_t files_seen = 0;
  std::size_t unmapped = 0;
  std::size_t unreadable = 0;
};

// Walks every project root, keeps files whose extension is mapped, and hashes
// their bytes. Hashing fans out over `workers` threads; the result is sorted
// canonically. `.git` directories are not descended into.
inline std::vector<SourceFile> classify_files(const std::vector<ProjectRecord>& projects,
                                              const ExtensionMap& ext_map,
                                              ClassifyStats* stats = nullptr,
                                              unsigned workers = 1) {
  namespace fs = std::filesystem;
  ClassifyStats local;
  std::vector<SourceFile> candidates;
  for (const auto& project : projects) {
    std::error_code ec;
    if (!fs::is_directory(project.root_path, ec)) {
      throw Error("project '" + project.name + "': cannot read root " + project.root_path.string());
    }
    fs::recursive_directory_iterator it(project.root_path, fs::directory_options::skip_permission_denied, ec);
    if (ec) {
      throw Error("project '" + project.name + "': cannot read root " + project.root_path.string() + ": " +
                  ec.message());
    }
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
      if (ec) {
        ++local.unreadable;
        ec.clear();
        continue;
      }
      const fs::directory_entry& entry = *it;
      if (entry.is_directory(ec) && entry.path().filename() == ".git") {
        it.disable_recursion_pending();
        continue;
      }
      if (!entry.is_regular_file(ec)) continue;
      ++local.files_seen;
      auto lang = ext_map.language_for(entry.path());
      if (!lang) {
        ++local.unmapped;
        continue;
      }
      SourceFile f;
      f.project = project.name;
      f.path = fs::relative(entry.path(), project.root_path, ec).generic_string();
      if (ec) f.path = entry.path().filename().generic_string();
      f.language = *lang;
      f.abs_path = entry.path();
      candidates.push_back(std::move(f));
    }
  }

  std::vector<char> ok(candidates.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      try {
        candidates[i].content_hash = sha256_hex(read_file(candidates[i].abs_path));
        ok[i] = 1;
      } catch (const Error&) {
        ok[i] = 0;
      }
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1 || candidates.size() < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<SourceFile> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (ok[i]) {
      out.push_back(std::move(candidates[i]));
    } else {
      ++local.unreadable;
    }
  }
  sort_canonical(out);
  if (stats) *stats = local;
  return out;
}

// One representative per distinct content hash: the lexicographically
// smallest (project, path). Output is in canonical order.
inline std::vector<SourceFile> dedup_files(const std::vector<SourceFile>& files) {
  std::unordered_map<std::string, const SourceFile*> best;
  for (const auto& f : files) {
    if (f.content_hash.empty()) throw std::invalid_argument("dedup_files: missing content hash for " + f.path);
    auto [it, inserted] = best.emplace(f.content_hash, &f);
    if (!inserted && std::tie(f.project, f.path) < std::tie(it->second->project, it->second->path)) {
      it->second = &f;
    }
  }
  std::vector<SourceFile> out;
  out.reserve(best.size());
  for (const auto& [hash, f] : best) out.push_back(*f);
  sort_canonical(out);
  return out;
}

// ---------------------------------------------------------------- sampling

enum class SampleStage { kFirst, kSecond };

inline std::string_view to_string(SampleStage s) { return s == SampleStage::kFirst ? "first" : "second"; }

inline SampleStage parse_stage(std::string_view s) {
  if (s == "first") return SampleStage::kFirst;
  if (s == "second") return SampleStage::kSecond;
  throw Error("unknown sample stage '" + std::string(s) + "' (expected first|second)");
}

struct SampleSpec {
  std::size_t per_language_count = 161;
  std::uint64_t seed = 13;
  SampleStage stage = SampleStage::kFirst;
};

// Draws exactly `per_language_count` files per language, spreading the quota
// over as many projects as possible: rounds take one file from every project
// that still has files, projects visited in a seeded order each round, files
// within a project drawn in seeded order.
inline std::vector<SourceFile> stratified_sample(const std::vector<SourceFile>& files, const SampleSpec& spec) {
  if (spec.per_language_count == 0) throw std::invalid_argument("stratified_sample: per_language_count must be > 0");

  // language -> project -> files (path order)
  std::map<std::string, std::map<std::string, std::vector<SourceFile>>> groups;
  for (const auto& f : files) groups[f.language][f.project].push_back(f);

  for (const auto& [lang, projects] : groups) {
    std::size_t total = 0;
    for (const auto& [p, fs] : projects) total += fs.size();
    if (total < spec.per_language_count) {
      throw Error("language '" + lang + "' has " + std::to_string(total) + " files, fewer than the quota of " +
                  std::to_string(spec.per_language_count));
    }
  }

  std::vector<SourceFile> out;
  for (auto& [lang, projects] : groups) {
    SplitMix64 rng(derive_seed(spec.seed, "sample/" + std::string(to_string(spec.stage)) + "/" + lang));
    std::vector<std::string> names;
    for (auto& [p, fs] : projects) {
      std::sort(fs.begin(), fs.end(), [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
      seeded_shuffle(fs, rng);
      names.push_back(p);
    }
    std::map<std::string, std::size_t> cursor;
    std::size_t taken = 0;
    while (taken < spec.per_language_count) {
      std::vector<std::string> active;
      for (const auto& n : names) {
        if (cursor[n] < projects[n].size()) active.push_back(n);
      }
      seeded_shuffle(active, rng);
      for (const auto& n : active) {
        out.push_back(projects[n][cursor[n]++]);
        if (++taken == spec.per_language_count) break;
      }
    }
  }
  sort_canonical(out);
  return out;
}

// Keeps files with at least `factor` x ctx_size tokens.
inline std::vector<SourceFile> size_filter(const std::vector<SourceFile>& files, std::uint64_t ctx_size,
                                           std::uint64_t factor = 3) {
  if (ctx_size == 0) throw std::invalid_argument("size_filter: ctx_size must be positive");
  std::vector<SourceFile> out;
  for (const auto& f : files) {
    if (!f.token_count) throw Error("size_filter: token count missing for " + f.project + "/" + f.path);
    if (*f.token_count >= factor * ctx_size) out.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------- sample CSV

inline void write_sample_csv(std::ostream& out, std::vector<SourceFile> files) {
  sort_canonical(files);
  write_csv_row(out, {"project", "path", "language", "content_hash", "token_count"});
  for (const auto& f : files) {
    write_csv_row(out, {f.project, f.path, f.language, f.content_hash,
                        f.token_count ? std::to_string(*f.token_count) : std::string()});
  }
}

inline std::vector<SourceFile> read_sample_csv(const std::filesystem::path& path) {
  CsvTable csv = read_csv(path);
  std::size_t c_project = csv.column("project"), c_path = csv.column("path"), c_lang = csv.column("language"),
              c_hash = csv.column("content_hash"), c_tok = csv.column("token_count");
  std::vector<SourceFile> out;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    if (row.size() != csv.header.size()) {
      throw Error(path.string() + ": line " + std::to_string(csv.lines[r]) + ": wrong field count");
    }
    SourceFile f;
    f.project = row[c_project];
    f.path = row[c_path];
    f.language = row[c_lang];
    f.content_hash = row[c_hash];
    if (!row[c_tok].empty()) {
      auto n = detail::parse_count(row[c_tok]);
      if (!n) throw Error(path.string() + ": line " + std::to_string(csv.lines[r]) + ": bad token_count");
      f.token_count = *n;
    }
    out.push_back(std::move(f));
  }
  return out;
}

// Digest identifying a file set: SHA-256 over the canonical listing.
inline std::string corpus_digest(std::vector<SourceFile> files) {
  sort_canonical(files);
  Sha256 h;
  for (const auto& f : files) {
    h.update(f.language).update("\t").update(f.project).update("\t").update(f.path).update("\t");
    h.update(f.content_hash).update("\n");
  }
  return h.hex();
}

}  // namespace codeppl

#endif  // CODEPPL_CORPUS_HPP_

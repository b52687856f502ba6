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


#ifndef CODEPPL_TOKENIZATION_HPP_
#define CODEPPL_TOKENIZATION_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "codeppl/common.hpp"
#include "codeppl/stats.hpp"

namespace codeppl {

enum class TokenizerKind { kByte, kWhitespace, kExternal };

inline std::string_view to_string(TokenizerKind k) {
  switch (k) {
    case TokenizerKind::kByte:
      return "byte";
    case TokenizerKind::kWhitespace:
      return "whitespace";
    case TokenizerKind::kExternal:
      return "external";
  }
  return "byte";
}

inline TokenizerKind parse_tokenizer_kind(std::string_view s) {
  if (s == "byte") return TokenizerKind::kByte;
  if (s == "whitespace") return TokenizerKind::kWhitespace;
  if (s == "external") return TokenizerKind::kExternal;
  throw Error("unknown tokenizer kind '" + std::string(s) + "' (expected byte|whitespace|external)");
}

struct TokenizerDescriptor {
  std::string id;
  std::uint32_t vocab_size = 256;
  TokenizerKind kind = TokenizerKind::kByte;
};

struct TokenSequence {
  std::string tokenizer_id;
  std::vector<TokenId> ids;
  FileKey source;
};

// Turns text into token ids. Byte: UTF-8 bytes are ids 0-255. Whitespace:
// whitespace-delimited words are interned in first-seen order, so the
// vocabulary grows over a run and encoding must happen on one thread in a
// fixed file order. External: delegates to a callback, normally the scorer
// protocol's tokenize request.
class Tokenizer {
 public:
  using ExternalEncode = std::function<std::vector<TokenId>(std::string_view)>;

  static Tokenizer bytes() { return Tokenizer({"byte", 256, TokenizerKind::kByte}); }
  static Tokenizer whitespace() { return Tokenizer({"whitespace", 2, TokenizerKind::kWhitespace}); }
  static Tokenizer external(std::string id, std::uint32_t vocab_size, ExternalEncode encode) {
    Tokenizer t({std::move(id), vocab_size, TokenizerKind::kExternal});
    t.external_ = std::move(encode);
    return t;
  }

  explicit Tokenizer(TokenizerDescriptor desc) : desc_(std::move(desc)) {
    if (desc_.vocab_size < 2) throw Error("tokenizer '" + desc_.id + "': vocab_size must be >= 2");
  }

  std::vector<TokenId> encode(std::string_view text) {
    std::vector<TokenId> ids;
    switch (desc_.kind) {
      case TokenizerKind::kByte:
        ids.reserve(text.size());
        for (unsigned char c : text) ids.push_back(c);
        break;
      case TokenizerKind::kWhitespace: {
        std::size_t i = 0;
        while (i < text.size()) {
          while (i < text.size() && is_ws(text[i])) ++i;
          std::size_t b = i;
          while (i < text.size() && !is_ws(text[i])) ++i;
          if (i > b) ids.push_back(intern(text.substr(b, i - b)));
        }
        break;
      }
      case TokenizerKind::kExternal:
        if (!external_) throw Error("tokenizer '" + desc_.id + "' has no external endpoint");
        ids = external_(text);
        for (TokenId id : ids) {
          if (id >= desc_.vocab_size) {
            throw ProtocolError("tokenizer '" + desc_.id + "' returned id " + std::to_string(id) +
                                " outside vocabulary of " + std::to_string(desc_.vocab_size));
          }
        }
        break;
    }
    return ids;
  }

  TokenSequence encode(std::string_view text, FileKey source) {
    return {desc_.id, encode(text), std::move(source)};
  }

  // For whitespace tokenizers the vocabulary is the interning table so far.
  const TokenizerDescriptor& descriptor() const { return desc_; }

 private:
  static bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

  TokenId intern(std::string_view word) {
    auto [it, inserted] = table_.try_emplace(std::string(word), static_cast<TokenId>(table_.size()));
    desc_.vocab_size = std::max<std::uint32_t>(2, static_cast<std::uint32_t>(table_.size()));
    return it->second;
  }

  TokenizerDescriptor desc_;
  std::unordered_map<std::string, TokenId> table_;
  ExternalEncode external_;
};

struct TokenStats {
  std::size_t n_files = 0;
  double median_tokens = 0.0;
  double median_unique_tokens = 0.0;
};

inline std::size_t unique_count(const std::vector<TokenId>& ids) {
  return std::unordered_set<TokenId>(ids.begin(), ids.end()).size();
}

// Per-language medians of file length and of distinct ids per file. When
// `languages` is given, each must have at least one sequence.
inline std::map<std::string, TokenStats> token_stats(const std::vector<TokenSequence>& sequences,
                                                     const std::set<std::string>& languages = {}) {
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const auto& s : sequences) {
    auto& [total, unique] = groups[s.source.language];
    total.push_back(static_cast<double>(s.ids.size()));
    unique.push_back(static_cast<double>(unique_count(s.ids)));
  }
  for (const auto& lang : languages) {
    if (!groups.count(lang)) throw Error("token_stats: no token sequences for language '" + lang + "'");
  }
  std::map<std::string, TokenStats> out;
  for (const auto& [lang, vals] : groups) {
    out[lang] = {vals.first.size(), median(vals.first), median(vals.second)};
  }
  return out;
}

// Smallest per-language median file length: the input to context-size
// derivation.
inline double min_median_tokens(const std::map<std::string, TokenStats>& stats) {
  if (stats.empty()) throw Error("no token statistics");
  double m = stats.begin()->second.median_tokens;
  for (const auto& [lang, s] : stats) m = std::min(m, s.median_tokens);
  return m;
}

// ---------------------------------------------------------------- cache

// Binary record: u32 id-length, tokenizer id, u32 source-length, source id,
// u32 token count, then the ids. All integers little-endian 32-bit.
namespace detail {

inline void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF), static_cast<char>((v >> 16) & 0xFF),
               static_cast<char>((v >> 24) & 0xFF)};
  out.write(b, 4);
}

inline std::optional<std::uint32_t> get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) return std::nullopt;
  return static_cast<std::uint32_t>(b[0]) | static_cast<std::uint32_t>(b[1]) << 8 |
         static_cast<std::uint32_t>(b[2]) << 16 | static_cast<std::uint32_t>(b[3]) << 24;
}

}  // namespace detail

struct TokenRecord {
  std::string tokenizer_id;
  std::string source_id;
  std::vector<TokenId> ids;
};

inline void write_token_record(std::ostream& out, const TokenRecord& rec) {
  detail::put_u32(out, static_cast<std::uint32_t>(rec.tokenizer_id.size()));
  out.write(rec.tokenizer_id.data(), static_cast<std::streamsize>(rec.tokenizer_id.size()));
  detail::put_u32(out, static_cast<std::uint32_t>(rec.source_id.size()));
  out.write(rec.source_id.data(), static_cast<std::streamsize>(rec.source_id.size()));
  detail::put_u32(out, static_cast<std::uint32_t>(rec.ids.size()));
  for (TokenId id : rec.ids) detail::put_u32(out, id);
}

// Returns nullopt at clean end of stream; throws on a truncated record.
inline std::optional<TokenRecord> read_token_record(std::istream& in) {
  auto read_str = [&](std::string& s) {
    auto len = detail::get_u32(in);
    if (!len) return false;
    s.resize(*len);
    return static_cast<bool>(in.read(s.data(), *len));
  };
  TokenRecord rec;
  if (in.peek() == std::char_traits<char>::eof()) return std::nullopt;
  if (!read_str(rec.tokenizer_id) || !read_str(rec.source_id)) throw Error("truncated token record");
  auto count = detail::get_u32(in);
  if (!count) throw Error("truncated token record");
  rec.ids.resize(*count);
  for (auto& id : rec.ids) {
    auto v = detail::get_u32(in);
    if (!v) throw Error("truncated token record");
    id = *v;
  }
  return rec;
}

// One record file per (content hash, tokenizer, clean mode).
class TokenCache {
 public:
  explicit TokenCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::optional<std::vector<TokenId>> get(const std::string& content_hash, const std::string& tokenizer_id,
                                          std::string_view variant) const {
    auto p = path_for(content_hash, tokenizer_id, variant);
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    auto rec = read_token_record(in);
    if (!rec || rec->tokenizer_id != tokenizer_id || rec->source_id != source_id(content_hash, variant)) {
      return std::nullopt;
    }
    return rec->ids;
  }

  void put(const std::string& content_hash, const std::string& tokenizer_id, std::string_view variant,
           const std::vector<TokenId>& ids) const {
    auto p = path_for(content_hash, tokenizer_id, variant);
    std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write token cache " + p.string());
    write_token_record(out, {tokenizer_id, source_id(content_hash, variant), ids});
  }

 private:
  static std::string source_id(const std::string& hash, std::string_view variant) {
    return hash + ":" + std::string(variant);
  }
  std::filesystem::path path_for(const std::string& hash, const std::string& tok, std::string_view variant) const {
    return dir_ / tok / (hash + "." + std::string(variant) + ".tok");
  }

  std::filesystem::path dir_;
};

}  // namespace codeppl

#endif  // CODEPPL_TOKENIZATION_HPP_

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


// Comment removal driven by per-language comment grammars. A small scanner
// splits a file into comment, string-literal and hashbang spans; the two
// strip modes then drop either the leading comment block or every comment.

#ifndef CODEPPL_CLEANING_HPP_
#define CODEPPL_CLEANING_HPP_

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "codeppl/common.hpp"

namespace codeppl {

struct StringForm {
  std::string open;
  std::string close;
  std::string escape;  // empty: no escapes; equal to close: doubled closer
  bool multiline = true;

  friend bool operator==(const StringForm&, const StringForm&) = default;
};

struct BlockForm {
  std::string open;
  std::string close;
  // Opener and closer only count at column 0, and the closing line is part of
  // the comment (Ruby =begin/=end, Perl POD).
  bool line_anchored = false;

  friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

struct CommentGrammar {
  std::string language;
  std::vector<std::string> line_markers;
  // Marker only starts a comment at a word boundary (shell-style `#`).
  bool line_marker_requires_boundary = false;
  // Marker is ignored right after any of these characters (Perl `$#`).
  std::string line_marker_not_after;
  std::vector<BlockForm> block_delimiters;
  std::vector<StringForm> string_delimiters;
  // String openers whose literal, at the head of a file, is documentation and
  // survives header stripping.
  std::vector<std::string> doc_comment_forms;
  bool hashbang_supported = false;

  void validate() const {
    auto fail = [&](const std::string& why) { throw Error("grammar '" + language + "': " + why); };
    if (language.empty()) throw Error("grammar with empty language name");
    for (const auto& m : line_markers) {
      if (m.empty()) fail("empty line marker");
    }
    for (std::size_t i = 0; i < block_delimiters.size(); ++i) {
      const auto& b = block_delimiters[i];
      if (b.open.empty() || b.close.empty()) fail("empty block delimiter");
      for (std::size_t j = 0; j < i; ++j) {
        if (block_delimiters[j] == b) fail("duplicate block delimiter " + b.open);
      }
    }
    for (std::size_t i = 0; i < string_delimiters.size(); ++i) {
      const auto& s = string_delimiters[i];
      if (s.open.empty() || s.close.empty()) fail("empty string delimiter");
      for (std::size_t j = 0; j < i; ++j) {
        if (string_delimiters[j] == s) fail("duplicate string delimiter " + s.open);
      }
    }
    for (const auto& d : doc_comment_forms) {
      bool known = std::any_of(string_delimiters.begin(), string_delimiters.end(),
                               [&](const StringForm& s) { return s.open == d; });
      if (!known) fail("doc comment form " + d + " is not a string delimiter");
    }
  }
};

inline void from_json(const nlohmann::json& j, StringForm& s) {
  s.open = j.at("open").get<std::string>();
  s.close = j.at("close").get<std::string>();
  s.escape = j.value("escape", std::string());
  s.multiline = j.value("multiline", true);
}

inline void from_json(const nlohmann::json& j, BlockForm& b) {
  b.open = j.at("open").get<std::string>();
  b.close = j.at("close").get<std::string>();
  b.line_anchored = j.value("line_anchored", false);
}

inline void from_json(const nlohmann::json& j, CommentGrammar& g) {
  g.language = j.at("language").get<std::string>();
  g.line_markers = j.value("line_markers", std::vector<std::string>{});
  g.line_marker_requires_boundary = j.value("line_marker_requires_boundary", false);
  g.line_marker_not_after = j.value("line_marker_not_after", std::string());
  g.block_delimiters = j.value("block_delimiters", std::vector<BlockForm>{});
  g.string_delimiters = j.value("string_delimiters", std::vector<StringForm>{});
  g.doc_comment_forms = j.value("doc_comment_forms", std::vector<std::string>{});
  g.hashbang_supported = j.value("hashbang_supported", false);
}

using GrammarSet = std::map<std::string, CommentGrammar>;

inline constexpr int kGrammarSchemaVersion = 1;

// Grammar fixture: {"schema_version": 1, "grammars": [ {...}, ... ]}.
inline GrammarSet parse_grammars(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("grammar file is not valid JSON: ") + e.what());
  }
  if (doc.value("schema_version", 0) != kGrammarSchemaVersion) {
    throw Error("grammar file schema_version must be " + std::to_string(kGrammarSchemaVersion));
  }
  GrammarSet out;
  try {
    for (const auto& item : doc.at("grammars")) {
      auto g = item.get<CommentGrammar>();
      g.validate();
      if (!out.emplace(g.language, g).second) throw Error("duplicate grammar for language " + g.language);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed grammar record: ") + e.what());
  }
  return out;
}

inline GrammarSet load_grammars(const std::filesystem::path& path) {
  try {
    return parse_grammars(read_file(path));
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

// Every language in `languages` must have exactly one grammar.
inline void require_grammars(const GrammarSet& grammars, const std::set<std::string>& languages) {
  for (const auto& lang : languages) {
    if (!grammars.count(lang)) throw Error("no comment grammar for language '" + lang + "'");
  }
}

// ---------------------------------------------------------------- lexing

enum class SpanKind { kLineComment, kBlockComment, kString, kHashbang };

struct Span {
  SpanKind kind;
  std::size_t begin;
  std::size_t end;
  std::string_view opener;  // delimiter text that opened the span
  bool unterminated = false;

  bool is_comment() const { return kind == SpanKind::kLineComment || kind == SpanKind::kBlockComment; }
  friend bool operator==(const Span& a, const Span& b) {
    return a.kind == b.kind && a.begin == b.begin && a.end == b.end;
  }
};

namespace detail {

inline bool is_hspace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }
inline bool is_space(char c) { return is_hspace(c) || c == '\n'; }

inline bool starts_at(std::string_view text, std::size_t i, std::string_view token) {
  return text.size() - i >= token.size() && text.compare(i, token.size(), token) == 0;
}

inline std::size_t line_end(std::string_view text, std::size_t i) {
  std::size_t e = text.find('\n', i);
  return e == std::string_view::npos ? text.size() : e;
}

inline std::size_t line_begin(std::string_view text, std::size_t i) {
  while (i > 0 && text[i - 1] != '\n') --i;
  return i;
}

inline bool anchored_word_at(std::string_view text, std::size_t i, std::string_view word) {
  if (i != 0 && text[i - 1] != '\n') return false;
  if (!starts_at(text, i, word)) return false;
  std::size_t after = i + word.size();
  return after == text.size() || !std::isalnum(static_cast<unsigned char>(text[after]));
}

}  // namespace detail

// Splits `text` into comment, string and hashbang spans (code is whatever
// lies between). Spans are sorted and non-overlapping.
inline std::vector<Span> lex(std::string_view text, const CommentGrammar& g) {
  using namespace detail;
  std::vector<Span> spans;
  std::size_t i = 0;
  const std::size_t n = text.size();
  if (g.hashbang_supported && starts_at(text, 0, "#!")) {
    i = line_end(text, 0);
    spans.push_back({SpanKind::kHashbang, 0, i, "#!"});
  }
  while (i < n) {
    enum { kNone, kLine, kBlock, kString } what = kNone;
    std::size_t best_len = 0;
    const BlockForm* block = nullptr;
    const StringForm* str = nullptr;
    std::string_view marker;

    for (const auto& b : g.block_delimiters) {
      bool hit = b.line_anchored ? anchored_word_at(text, i, b.open) : starts_at(text, i, b.open);
      if (hit && b.open.size() > best_len) {
        what = kBlock, best_len = b.open.size(), block = &b;
      }
    }
    for (const auto& m : g.line_markers) {
      if (!starts_at(text, i, m) || m.size() <= best_len) continue;
      if (i > 0) {
        char prev = text[i - 1];
        if (g.line_marker_requires_boundary && !(is_space(prev) || std::string_view(";&|()<>").find(prev) !=
                                                                        std::string_view::npos)) {
          continue;
        }
        if (g.line_marker_not_after.find(prev) != std::string::npos) continue;
      }
      what = kLine, best_len = m.size(), marker = m;
    }
    for (const auto& s : g.string_delimiters) {
      if (starts_at(text, i, s.open) && s.open.size() > best_len) {
        what = kString, best_len = s.open.size(), str = &s;
      }
    }

    switch (what) {
      case kNone:
        ++i;
        break;
      case kLine: {
        std::size_t e = line_end(text, i);
        spans.push_back({SpanKind::kLineComment, i, e, marker});
        i = e;
        break;
      }
      case kBlock: {
        Span s{SpanKind::kBlockComment, i, n, block->open};
        if (block->line_anchored) {
          std::size_t j = line_end(text, i);
          s.unterminated = true;
          while (j < n) {
            std::size_t ls = j + 1;
            if (anchored_word_at(text, ls, block->close)) {
              s.end = line_end(text, ls);
              s.unterminated = false;
              break;
            }
            j = line_end(text, ls);
          }
        } else {
          std::size_t c = text.find(block->close, i + block->open.size());
          if (c == std::string_view::npos) {
            s.unterminated = true;
          } else {
            s.end = c + block->close.size();
          }
        }
        spans.push_back(s);
        i = s.end;
        break;
      }
      case kString: {
        std::size_t j = i + str->open.size();
        Span s{SpanKind::kString, i, n, str->open, true};
        while (j < n) {
          if (!str->escape.empty() && starts_at(text, j, str->escape)) {
            if (str->escape == str->close) {
              if (starts_at(text, j + str->close.size(), str->close)) {
                j += 2 * str->close.size();
                continue;
              }
            } else {
              j += str->escape.size() + 1;
              continue;
            }
          }
          if (starts_at(text, j, str->close)) {
            s.end = j + str->close.size();
            s.unterminated = false;
            break;
          }
          if (text[j] == '\n' && !str->multiline) {
            s.end = j;
            break;
          }
          ++j;
        }
        if (s.end > n) s.end = n;
        spans.push_back(s);
        i = s.end;
        break;
      }
    }
  }
  return spans;
}

// ---------------------------------------------------------------- stripping

enum class CleanMode { kHeaderStripped, kAllCommentsStripped, kRaw };

inline std::string_view to_string(CleanMode m) {
  switch (m) {
    case CleanMode::kHeaderStripped:
      return "header";
    case CleanMode::kAllCommentsStripped:
      return "all_comments";
    case CleanMode::kRaw:
      return "raw";
  }
  return "raw";
}

inline CleanMode parse_clean_mode(std::string_view s) {
  if (s == "header" || s == "header_stripped") return CleanMode::kHeaderStripped;
  if (s == "all_comments" || s == "all_comments_stripped") return CleanMode::kAllCommentsStripped;
  if (s == "raw") return CleanMode::kRaw;
  throw Error("unknown clean mode '" + std::string(s) + "' (expected header|all_comments|raw)");
}

struct CleanedFile {
  std::string text;
  CleanMode mode = CleanMode::kRaw;
  std::size_t bytes_removed = 0;
  // Comment spans dropped, in coordinates of the input text.
  std::vector<Span> removed_comments;
  // Set on an unterminated block comment.
  bool flagged = false;
  std::string diagnostic;
};

// Removes the leading run of comments and blank lines. A hashbang line and
// documentation strings in the header are kept; everything from the first
// code token on is untouched. An unterminated block comment in the header
// leaves the file unchanged and flags it.
inline CleanedFile strip_header_boilerplate(std::string_view text, const CommentGrammar& g) {
  using namespace detail;
  CleanedFile out;
  out.mode = CleanMode::kHeaderStripped;
  const std::vector<Span> spans = lex(text, g);
  const std::size_t n = text.size();
  std::size_t pos = 0;
  std::size_t next_span = 0;
  std::string kept;

  if (!spans.empty() && spans[0].kind == SpanKind::kHashbang) {
    pos = std::min(n, spans[0].end + 1);
    kept.append(text.substr(0, pos));
    next_span = 1;
  }

  auto is_doc = [&](const Span& s) {
    return s.kind == SpanKind::kString &&
           std::find(g.doc_comment_forms.begin(), g.doc_comment_forms.end(), s.opener) != g.doc_comment_forms.end();
  };

  std::size_t body_start = n;
  while (true) {
    std::size_t q = pos;
    while (q < n && is_space(text[q])) ++q;
    if (q == n) break;
    while (next_span < spans.size() && spans[next_span].begin < q) ++next_span;
    const Span* s = (next_span < spans.size() && spans[next_span].begin == q) ? &spans[next_span] : nullptr;
    std::size_t ls = line_begin(text, q);
    std::size_t cut = ls >= pos ? ls : q;
    if (s && s->is_comment()) {
      if (s->unterminated) {
        out.text = std::string(text);
        out.removed_comments.clear();
        out.flagged = true;
        out.diagnostic = "unterminated block comment in header at offset " + std::to_string(s->begin);
        return out;
      }
      out.removed_comments.push_back(*s);
      pos = s->end;
      ++next_span;
      continue;
    }
    if (s && is_doc(*s) && !s->unterminated) {
      std::size_t e = line_end(text, s->end);
      bool rest_blank = std::all_of(text.begin() + s->end, text.begin() + e, is_hspace);
      if (rest_blank) {
        std::size_t stop = std::min(n, e + 1);
        kept.append(text.substr(cut, stop - cut));
        pos = stop;
        ++next_span;
        continue;
      }
    }
    body_start = cut;
    break;
  }
  out.text = kept;
  out.text.append(text.substr(std::min(body_start, n)));
  out.bytes_removed = text.size() - out.text.size();
  return out;
}

// Removes every comment. String literals are left alone; a line that held
// nothing but comments disappears, trailing whitespace before an
// end-of-line comment is trimmed, and an inline block comment between two
// tokens becomes one space. An unterminated block comment runs to end of
// file and flags the result.
inline CleanedFile strip_all_comments(std::string_view text, const CommentGrammar& g) {
  using namespace detail;
  CleanedFile out;
  out.mode = CleanMode::kAllCommentsStripped;
  const std::vector<Span> spans = lex(text, g);
  const std::size_t n = text.size();
  std::string& o = out.text;
  o.reserve(n);
  std::size_t line_start = 0;
  bool line_had_comment = false;

  auto line_blank = [&] {
    return std::all_of(o.begin() + static_cast<std::ptrdiff_t>(line_start), o.end(), is_hspace);
  };
  auto emit_range = [&](std::size_t from, std::size_t to) {
    for (std::size_t k = from; k < to; ++k) {
      char c = text[k];
      if (c == '\n') {
        if (line_had_comment && line_blank()) {
          o.resize(line_start);
        } else {
          o += '\n';
        }
        line_start = o.size();
        line_had_comment = false;
      } else {
        o += c;
      }
    }
  };

  std::size_t i = 0;
  for (const auto& s : spans) {
    if (!s.is_comment()) continue;
    emit_range(i, s.begin);
    out.removed_comments.push_back(s);
    if (s.unterminated) {
      out.flagged = true;
      out.diagnostic = "unterminated block comment at offset " + std::to_string(s.begin);
    }
    line_had_comment = true;
    std::size_t e = line_end(text, s.end);
    bool rest_blank = std::all_of(text.begin() + static_cast<std::ptrdiff_t>(s.end),
                                  text.begin() + static_cast<std::ptrdiff_t>(e), is_hspace);
    if (rest_blank) {
      while (o.size() > line_start && is_hspace(o.back())) o.pop_back();
      i = e;
    } else {
      i = s.end;
      if (line_blank() || is_hspace(o.back())) {
        while (i < n && is_hspace(text[i])) ++i;
      } else if (!is_hspace(text[i])) {
        o += ' ';
      }
    }
  }
  emit_range(i, n);
  if (line_had_comment && line_blank()) o.resize(line_start);
  out.bytes_removed = text.size() >= o.size() ? text.size() - o.size() : 0;
  return out;
}

inline CleanedFile clean(std::string_view text, const CommentGrammar& g, CleanMode mode) {
  switch (mode) {
    case CleanMode::kHeaderStripped:
      return strip_header_boilerplate(text, g);
    case CleanMode::kAllCommentsStripped:
      return strip_all_comments(text, g);
    case CleanMode::kRaw:
      break;
  }
  CleanedFile out;
  out.text = std::string(text);
  out.mode = CleanMode::kRaw;
  return out;
}

}  // namespace codeppl

#endif  // CODEPPL_CLEANING_HPP_

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


// External scorer wire protocol: newline-delimited JSON, one request per
// line, one reply per line.
//
//   {"id": k, "op": "score_batch", "windows": [{"context": [..], "target": t}, ..]}
//     -> {"id": k, "log2p": [..]}       aligned with windows, finite, <= 0
//   {"id": k, "op": "tokenize", "text": "..."}  -> {"id": k, "ids": [..]}
//   {"id": k, "op": "info"}                     -> {"id": k, "vocab_size": V, "name": "..."}
//
// Any reply may instead carry {"error": "..."}.

#ifndef CODEPPL_PROTOCOL_HPP_
#define CODEPPL_PROTOCOL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "codeppl/common.hpp"
#include "codeppl/scorer.hpp"

namespace codeppl {

using nlohmann::json;

// Carries one request line to the scorer and returns its reply line.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::string roundtrip(const std::string& request) = 0;
  virtual std::string describe() const = 0;
};

// In-process transport around a request handler.
class FunctionTransport final : public Transport {
 public:
  using Handler = std::function<std::string(const std::string&)>;
  explicit FunctionTransport(Handler handler, std::string name = "in-process")
      : handler_(std::move(handler)), name_(std::move(name)) {}
  std::string roundtrip(const std::string& request) override { return handler_(request); }
  std::string describe() const override { return name_; }

 private:
  Handler handler_;
  std::string name_;
};

inline std::string excerpt(std::string_view payload, std::size_t max_len = 160) {
  if (payload.size() <= max_len) return std::string(payload);
  return std::string(payload.substr(0, max_len)) + "...";
}

struct ScorerInfo {
  std::uint32_t vocab_size = 0;
  std::string name;
};

// Client side of the protocol. Requests are serialized per connection.
class ProtocolClient {
 public:
  explicit ProtocolClient(std::unique_ptr<Transport> transport) : transport_(std::move(transport)) {}

  ScorerInfo info() {
    json reply = call({{"op", "info"}});
    if (!reply.contains("vocab_size") || !reply["vocab_size"].is_number_integer() ||
        reply["vocab_size"].get<std::int64_t>() < 2) {
      throw ProtocolError("info reply lacks an integer vocab_size >= 2: " + excerpt(reply.dump()));
    }
    ScorerInfo out;
    out.vocab_size = reply["vocab_size"].get<std::uint32_t>();
    out.name = reply.value("name", std::string());
    return out;
  }

  std::vector<TokenId> tokenize(std::string_view text) {
    json reply = call({{"op", "tokenize"}, {"text", std::string(text)}});
    if (!reply.contains("ids") || !reply["ids"].is_array()) {
      throw ProtocolError("tokenize reply lacks an ids array: " + excerpt(reply.dump()));
    }
    std::vector<TokenId> ids;
    ids.reserve(reply["ids"].size());
    for (const auto& v : reply["ids"]) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 0xFFFFFFFFLL) {
        throw ProtocolError("tokenize reply has a non-token id: " + excerpt(reply.dump()));
      }
      ids.push_back(v.get<TokenId>());
    }
    return ids;
  }

  std::vector<double> score_batch(std::span<const Window> windows) {
    json arr = json::array();
    for (const auto& w : windows) {
      arr.push_back({{"context", std::vector<TokenId>(w.context.begin(), w.context.end())}, {"target", w.target}});
    }
    json reply = call({{"op", "score_batch"}, {"windows", std::move(arr)}});
    if (!reply.contains("log2p") || !reply["log2p"].is_array()) {
      throw ProtocolError("score_batch reply lacks a log2p array: " + excerpt(reply.dump()));
    }
    const auto& lp = reply["log2p"];
    if (lp.size() != windows.size()) {
      throw ProtocolError("score_batch reply misaligned: " + std::to_string(lp.size()) + " values for " +
                          std::to_string(windows.size()) + " windows: " + excerpt(reply.dump()));
    }
    std::vector<double> out;
    out.reserve(lp.size());
    for (const auto& v : lp) {
      if (!v.is_number()) throw ProtocolError("score_batch reply has a non-numeric value: " + excerpt(reply.dump()));
      double d = v.get<double>();
      if (!std::isfinite(d) || d > 0.0) {
        throw ProtocolError("score_batch reply value " + format_double(d) + " is not a finite log2p <= 0: " +
                            excerpt(reply.dump()));
      }
      out.push_back(d);
    }
    return out;
  }

  std::string describe() const { return transport_->describe(); }

 private:
  json call(json request) {
    std::lock_guard<std::mutex> lock(mu_);
    const std::uint64_t id = next_id_++;
    request["id"] = id;
    const std::string line = request.dump();
    std::string raw = transport_->roundtrip(line);
    while (!raw.empty() && (raw.back() == '\n' || raw.back() == '\r')) raw.pop_back();
    json reply;
    try {
      reply = json::parse(raw);
    } catch (const json::exception&) {
      throw ProtocolError("reply is not JSON: " + excerpt(raw));
    }
    if (!reply.is_object()) throw ProtocolError("reply is not a JSON object: " + excerpt(raw));
    if (reply.contains("error")) {
      throw ProtocolError("scorer error: " + (reply["error"].is_string() ? reply["error"].get<std::string>()
                                                                          : reply["error"].dump()));
    }
    if (reply.contains("id") && (!reply["id"].is_number_unsigned() || reply["id"].get<std::uint64_t>() != id)) {
      throw ProtocolError("reply id " + reply["id"].dump() + " does not match request id " + std::to_string(id));
    }
    return reply;
  }

  std::unique_ptr<Transport> transport_;
  std::mutex mu_;
  std::uint64_t next_id_ = 1;
};

// Scorer backed by a remote model through the protocol.
class ExternalScorer final : public Scorer {
 public:
  ExternalScorer(std::shared_ptr<ProtocolClient> client, std::string id = {}) : client_(std::move(client)) {
    ScorerInfo info = client_->info();
    vocab_ = info.vocab_size;
    id_ = !id.empty() ? std::move(id) : !info.name.empty() ? info.name : "external";
  }

  const std::string& id() const override { return id_; }
  ScorerKind kind() const override { return ScorerKind::kExternal; }
  std::uint32_t vocab_size() const override { return vocab_; }
  ProtocolClient& client() { return *client_; }

  std::vector<double> score_batch(std::span<const Window> windows) override {
    return client_->score_batch(windows);
  }

 private:
  std::shared_ptr<ProtocolClient> client_;
  std::uint32_t vocab_ = 0;
  std::string id_;
};

// ---------------------------------------------------------------- mock

// Test double for a model server. Scores every target with a fixed table
// read from a fixture (context ignored) and tokenizes text to UTF-8 bytes
// modulo the vocabulary. `misalign` drops the last value of every
// score_batch reply.
class MockScorerService {
 public:
  MockScorerService(std::string name, std::vector<double> log2p_table)
      : name_(std::move(name)), table_(std::move(log2p_table)) {
    if (table_.size() < 2) throw Error("mock scorer table needs at least 2 entries");
    for (double v : table_) {
      if (!std::isfinite(v) || v > 0.0) throw Error("mock scorer table entries must be finite and <= 0");
    }
  }

  // {"name": ..., "vocab_size": V, "log2p": [V values]}
  static MockScorerService from_fixture(const std::filesystem::path& path) {
    json doc;
    try {
      doc = json::parse(read_file(path));
      auto table = doc.at("log2p").get<std::vector<double>>();
      if (doc.at("vocab_size").get<std::size_t>() != table.size()) {
        throw Error("vocab_size does not match the log2p table length");
      }
      return MockScorerService(doc.value("name", std::string("mock")), std::move(table));
    } catch (const json::exception& e) {
      throw Error(path.string() + ": " + e.what());
    } catch (const Error& e) {
      throw Error(path.string() + ": " + e.what());
    }
  }

  void set_misalign(bool on) { misalign_ = on; }
  const std::vector<double>& table() const { return table_; }
  const std::string& name() const { return name_; }

  std::string handle(const std::string& line) const {
    json req;
    try {
      req = json::parse(line);
    } catch (const json::exception& e) {
      return json{{"error", std::string("malformed request: ") + e.what()}}.dump();
    }
    json reply = json::object();
    if (req.contains("id")) reply["id"] = req["id"];
    try {
      const std::string op = req.at("op").get<std::string>();
      if (op == "info") {
        reply["vocab_size"] = table_.size();
        reply["name"] = name_;
      } else if (op == "tokenize") {
        std::vector<TokenId> ids;
        for (unsigned char c : req.at("text").get<std::string>()) ids.push_back(c % table_.size());
        reply["ids"] = ids;
      } else if (op == "score_batch") {
        json lp = json::array();
        for (const auto& w : req.at("windows")) {
          auto t = w.at("target").get<std::size_t>();
          if (t >= table_.size()) throw Error("target " + std::to_string(t) + " outside vocabulary");
          lp.push_back(table_[t]);
        }
        if (misalign_ && !lp.empty()) lp.erase(lp.size() - 1);
        reply["log2p"] = std::move(lp);
      } else {
        reply["error"] = "unknown op '" + op + "'";
      }
    } catch (const std::exception& e) {
      reply = json{{"error", e.what()}};
      if (req.contains("id")) reply["id"] = req["id"];
    }
    return reply.dump();
  }

 private:
  std::string name_;
  std::vector<double> table_;
  bool misalign_ = false;
};

// Serves newline-delimited requests until end of input.
template <typename Handler>
void serve_lines(std::istream& in, std::ostream& out, Handler&& handle) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out << handle(line) << '\n' << std::flush;
  }
}

// ---------------------------------------------------------------- conformance

struct ProtocolCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ProtocolReport {
  std::vector<ProtocolCheck> checks;
  bool ok() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const ProtocolCheck& c) { return c.ok; });
  }
};

// Handshakes a scorer and validates the wire contract: info, tokenize
// round-trip, and score_batch alignment. With `expected_table`, scored values
// must equal the table entry of each target.
inline ProtocolReport protocol_check(ProtocolClient& client,
                                     const std::optional<std::vector<double>>& expected_table = std::nullopt) {
  ProtocolReport report;
  auto run = [&](const std::string& name, auto&& body) {
    ProtocolCheck c;
    c.name = name;
    try {
      c.detail = body();
      c.ok = true;
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    report.checks.push_back(std::move(c));
    return report.checks.back().ok;
  };

  ScorerInfo info;
  bool have_info = run("info", [&] {
    info = client.info();
    return "vocab_size " + std::to_string(info.vocab_size) + ", name '" + info.name + "'";
  });
  if (!have_info) return report;

  std::vector<TokenId> ids;
  run("tokenize", [&] {
    const std::string sample = "int main(void) {\n  return 0; // done\n}\n";
    ids = client.tokenize(sample);
    if (ids.empty()) throw ProtocolError("non-empty text produced no ids");
    for (TokenId id : ids) {
      if (id >= info.vocab_size) throw ProtocolError("id " + std::to_string(id) + " outside vocabulary");
    }
    if (client.tokenize(sample) != ids) throw ProtocolError("tokenize is not deterministic");
    if (!client.tokenize("").empty()) throw ProtocolError("empty text produced ids");
    return std::to_string(ids.size()) + " ids, deterministic";
  });
  if (ids.size() < 2) {
    ids.clear();
    for (TokenId t = 0; t < 16; ++t) ids.push_back(t % info.vocab_size);
  }

  auto make_windows = [&](std::size_t count) {
    std::vector<Window> ws;
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t pos = 1 + k % (ids.size() - 1);
      ws.push_back({std::span<const TokenId>(ids).subspan(0, pos), ids[pos]});
    }
    return ws;
  };

  for (std::size_t count : {std::size_t{1}, std::size_t{7}, std::size_t{64}}) {
    run("score_batch[" + std::to_string(count) + "]", [&] {
      auto ws = make_windows(count);
      std::vector<double> lp = client.score_batch(ws);
      if (client.score_batch(ws) != lp) throw ProtocolError("score_batch is not deterministic");
      if (expected_table) {
        for (std::size_t k = 0; k < ws.size(); ++k) {
          double want = expected_table->at(ws[k].target);
          if (lp[k] != want) {
            throw ProtocolError("value " + format_double(lp[k]) + " for target " + std::to_string(ws[k].target) +
                                " differs from fixture " + format_double(want));
          }
        }
      }
      return std::to_string(lp.size()) + " aligned values";
    });
  }
  return report;
}

}  // namespace codeppl

#endif  // CODEPPL_PROTOCOL_HPP_

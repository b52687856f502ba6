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


// Network and subprocess transports for the scorer protocol, kept apart from
// protocol.hpp so that only binaries which talk to real endpoints pull in
// cpp-httplib and Boost.Process.

#ifndef CODEPPL_TRANSPORT_HPP_
#define CODEPPL_TRANSPORT_HPP_

#include <memory>
#include <mutex>
#include <string>

#include <pthread.h>
#include <signal.h>

#include <boost/process.hpp>
#include <httplib.h>

#include "codeppl/common.hpp"
#include "codeppl/protocol.hpp"

namespace codeppl {

// POST /score with the request line as a JSON body.
class HttpTransport final : public Transport {
 public:
  explicit HttpTransport(const std::string& base_url) : url_(base_url), client_(base_url) {
    client_.set_connection_timeout(5);
    client_.set_read_timeout(120);
    client_.set_keep_alive(true);
  }

  std::string roundtrip(const std::string& request) override {
    auto res = client_.Post("/score", request, "application/json");
    if (!res) throw TransportError(url_ + ": " + httplib::to_string(res.error()));
    if (res->status != 200) {
      if (res->body.find("\"error\"") != std::string::npos) return res->body;
      throw TransportError(url_ + ": HTTP " + std::to_string(res->status));
    }
    return res->body;
  }

  std::string describe() const override { return url_; }

 private:
  std::string url_;
  httplib::Client client_;
};

// A child that exited leaves a broken pipe. While alive, this blocks SIGPIPE
// on the calling thread and consumes any it raised, so a failed write shows
// up as a stream error instead of killing the process.
class PipeSignalGuard {
 public:
  PipeSignalGuard() {
    sigemptyset(&pipe_set_);
    sigaddset(&pipe_set_, SIGPIPE);
    sigset_t pending;
    sigpending(&pending);
    was_pending_ = sigismember(&pending, SIGPIPE) == 1;
    pthread_sigmask(SIG_BLOCK, &pipe_set_, &old_set_);
  }
  ~PipeSignalGuard() {
    sigset_t pending;
    sigpending(&pending);
    if (!was_pending_ && sigismember(&pending, SIGPIPE) == 1) {
      const timespec zero{0, 0};
      sigtimedwait(&pipe_set_, nullptr, &zero);
    }
    pthread_sigmask(SIG_SETMASK, &old_set_, nullptr);
  }
  PipeSignalGuard(const PipeSignalGuard&) = delete;
  PipeSignalGuard& operator=(const PipeSignalGuard&) = delete;

 private:
  sigset_t pipe_set_, old_set_;
  bool was_pending_ = false;
};

// Runs a scorer as a child process speaking the protocol on stdin/stdout.
class ProcessTransport final : public Transport {
 public:
  explicit ProcessTransport(const std::string& command_line) : command_(command_line) {
    try {
      child_ = boost::process::child(command_line, boost::process::std_in < to_child_,
                                     boost::process::std_out > from_child_);
    } catch (const std::exception& e) {
      throw TransportError("cannot start scorer '" + command_line + "': " + e.what());
    }
  }

  ~ProcessTransport() override {
    {
      // close() retries a write that failed earlier and throws on EPIPE.
      PipeSignalGuard guard;
      try {
        to_child_.close();
      } catch (const std::exception&) {
      }
      to_child_.pipe().close();
    }
    std::error_code ec;
    if (child_.running(ec)) child_.wait_for(std::chrono::seconds(2), ec);
    if (child_.running(ec)) child_.terminate(ec);
  }

  std::string roundtrip(const std::string& request) override {
    write_line(request);
    std::string reply;
    if (!to_child_ || !std::getline(from_child_, reply)) {
      throw TransportError("scorer process '" + command_ + "' closed its output");
    }
    return reply;
  }

  std::string describe() const override { return "exec:" + command_; }

 private:
  void write_line(const std::string& request) {
    PipeSignalGuard guard;
    try {
      to_child_ << request << '\n' << std::flush;
    } catch (const std::exception& e) {
      throw TransportError("scorer process '" + command_ + "' closed its input: " + e.what());
    }
  }

  std::string command_;
  boost::process::opstream to_child_;
  boost::process::ipstream from_child_;
  boost::process::child child_;
};

// Routes POST /score to `handler` and serves until stopped.
template <typename Handler>
void mount_score_endpoint(httplib::Server& server, Handler handler) {
  server.Post("/score", [handler](const httplib::Request& req, httplib::Response& res) {
    res.set_content(handler(req.body), "application/json");
  });
}

}  // namespace codeppl

#endif  // CODEPPL_TRANSPORT_HPP_

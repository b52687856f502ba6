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


// Stand-in model server for protocol testing. Replays a fixed log2p table:
// every target is scored with table[target] whatever its context.
//
//   codeppl_mock_scorer --fixture table.json --stdio
//   codeppl_mock_scorer --fixture table.json --port 8093

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "codeppl/protocol.hpp"
#include "codeppl/transport.hpp"

int main(int argc, char** argv) {
  CLI::App app{"replaying mock scorer"};
  std::string fixture;
  int port = 0;
  bool stdio = false, misalign = false;
  std::string host = "127.0.0.1";
  app.add_option("--fixture", fixture, "JSON {name, vocab_size, log2p}")->required()->check(CLI::ExistingFile);
  app.add_option("--port", port, "serve HTTP POST /score on this port");
  app.add_option("--host", host, "bind address");
  app.add_flag("--stdio", stdio, "serve newline-delimited JSON on stdin/stdout");
  app.add_flag("--misalign", misalign, "drop the last value of each score_batch reply");
  CLI11_PARSE(app, argc, argv);
  if (stdio == (port != 0)) {
    std::cerr << "codeppl_mock_scorer: choose exactly one of --stdio or --port\n";
    return 2;
  }
  try {
    auto service = codeppl::MockScorerService::from_fixture(fixture);
    service.set_misalign(misalign);
    auto handle = [&service](const std::string& line) { return service.handle(line); };
    if (stdio) {
      codeppl::serve_lines(std::cin, std::cout, handle);
      return 0;
    }
    httplib::Server server;
    codeppl::mount_score_endpoint(server, handle);
    std::cerr << "listening on " << host << ':' << port << '\n';
    return server.listen(host, port) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "codeppl_mock_scorer: " << e.what() << '\n';
    return 1;
  }
}

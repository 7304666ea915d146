// Copyright 2026 The transdir Authors.
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

#ifndef TRANSDIR_SUBPROCESS_BACKEND_H_
#define TRANSDIR_SUBPROCESS_BACKEND_H_

#include <sys/types.h>

#include <chrono>
#include <span>
#include <string>
#include <vector>

#include "transdir/scorer_backend.h"

namespace transdir {

// Drives an external scorer process over the newline-delimited JSON protocol
// (see wire_protocol.h). The command line is run through /bin/sh -c; the
// child's stderr is inherited.
//
// Writes and reads are interleaved with poll() so a batch larger than the
// pipe buffers cannot deadlock against a scorer that answers while still
// receiving input.
class SubprocessBackend : public ScorerBackend {
 public:
  // Launches the process and performs the hello handshake. Throws
  // ScorerUnavailable if the process cannot start or exits before answering,
  // ProtocolViolation on a bad handshake.
  explicit SubprocessBackend(
      const std::string& command_line,
      std::chrono::milliseconds handshake_timeout = std::chrono::minutes(5));
  ~SubprocessBackend() override;

  SubprocessBackend(const SubprocessBackend&) = delete;
  SubprocessBackend& operator=(const SubprocessBackend&) = delete;

  const std::string& scorer_id() const override { return scorer_id_; }
  pid_t pid() const { return pid_; }

 protected:
  std::vector<ScoreResponse> do_score_batch(
      std::span<const ScoreRequest> requests) override;

 private:
  // Sends `out` (possibly empty) while collecting complete lines until
  // `want_lines` lines are available or the deadline passes.
  void exchange(std::string out, std::size_t want_lines,
                std::chrono::steady_clock::time_point deadline);
  std::string pop_line();
  void fail(const std::string& message);
  void shutdown();

  std::string command_;
  std::string scorer_id_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  bool dead_ = false;
  std::string read_buffer_;
  std::vector<std::string> lines_;
};

}  // namespace transdir

#endif  // TRANSDIR_SUBPROCESS_BACKEND_H_

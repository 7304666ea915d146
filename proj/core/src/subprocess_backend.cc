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

#include "transdir/subprocess_backend.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <mutex>
#include <unordered_map>

#include "transdir/error.h"
#include "transdir/wire_protocol.h"

extern char** environ;

namespace transdir {

namespace {

void ignore_sigpipe_once() {
  static std::once_flag flag;
  std::call_once(flag, [] { ::signal(SIGPIPE, SIG_IGN); });
}

void close_fd(int& fd) {
  if (fd >= 0) {
    ::close(fd);
    fd = -1;
  }
}

}  // namespace

SubprocessBackend::SubprocessBackend(const std::string& command_line,
                                     std::chrono::milliseconds handshake_timeout)
    : command_(command_line) {
  ignore_sigpipe_once();

  int in_pipe[2];   // engine -> child stdin
  int out_pipe[2];  // child stdout -> engine
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) {
    throw ScorerUnavailable(std::string("pipe: ") + std::strerror(errno));
  }
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw ScorerUnavailable(std::string("pipe: ") + std::strerror(errno));
  }

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in_pipe[0], STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out_pipe[1], STDOUT_FILENO);

  const char* argv[] = {"/bin/sh", "-c", command_.c_str(), nullptr};
  const int rc = ::posix_spawn(&pid_, "/bin/sh", &actions, nullptr,
                               const_cast<char* const*>(argv), environ);
  posix_spawn_file_actions_destroy(&actions);
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  if (rc != 0) {
    pid_ = -1;
    close_fd(to_child_);
    close_fd(from_child_);
    throw ScorerUnavailable("cannot launch scorer '" + command_ +
                            "': " + std::strerror(rc));
  }
  ::fcntl(to_child_, F_SETFL, ::fcntl(to_child_, F_GETFL) | O_NONBLOCK);
  ::fcntl(from_child_, F_SETFL, ::fcntl(from_child_, F_GETFL) | O_NONBLOCK);

  try {
    exchange(encode_hello_request() + "\n", 1,
             std::chrono::steady_clock::now() + handshake_timeout);
    scorer_id_ = decode_hello_response(pop_line());
  } catch (...) {
    shutdown();
    throw;
  }
}

SubprocessBackend::~SubprocessBackend() { shutdown(); }

void SubprocessBackend::shutdown() {
  close_fd(to_child_);
  close_fd(from_child_);
  if (pid_ <= 0) return;
  // Closing stdin asks the scorer to exit; give it a moment, then kill.
  for (int i = 0; i < 200; ++i) {
    int status;
    const pid_t r = ::waitpid(pid_, &status, WNOHANG);
    if (r == pid_ || r < 0) {
      pid_ = -1;
      return;
    }
    ::usleep(10'000);
  }
  ::kill(pid_, SIGKILL);
  int status;
  ::waitpid(pid_, &status, 0);
  pid_ = -1;
}

void SubprocessBackend::fail(const std::string& message) {
  dead_ = true;
  throw ScorerUnavailable("scorer '" + command_ + "': " + message);
}

std::string SubprocessBackend::pop_line() {
  std::string line = std::move(lines_.front());
  lines_.erase(lines_.begin());
  return line;
}

void SubprocessBackend::exchange(
    std::string out, std::size_t want_lines,
    std::chrono::steady_clock::time_point deadline) {
  std::size_t written = 0;
  char buf[65536];
  while (lines_.size() < want_lines || written < out.size()) {
    pollfd fds[2];
    nfds_t n = 0;
    fds[n++] = {from_child_, POLLIN, 0};
    const bool writing = written < out.size();
    if (writing) fds[n++] = {to_child_, POLLOUT, 0};

    const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (remaining.count() <= 0) fail("timed out waiting for response");
    const int timeout = static_cast<int>(
        std::min<long long>(remaining.count(), 1'000'000'000LL));
    const int ready = ::poll(fds, n, timeout);
    if (ready < 0) {
      if (errno == EINTR) continue;
      fail(std::string("poll: ") + std::strerror(errno));
    }
    if (ready == 0) continue;

    if (writing && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t w =
          ::write(to_child_, out.data() + written, out.size() - written);
      if (w < 0 && errno != EAGAIN && errno != EINTR) {
        fail("process closed its input (" + std::string(std::strerror(errno)) +
             ")");
      }
      if (w > 0) written += static_cast<std::size_t>(w);
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      const ssize_t r = ::read(from_child_, buf, sizeof(buf));
      if (r < 0) {
        if (errno == EAGAIN || errno == EINTR) continue;
        fail(std::string("read: ") + std::strerror(errno));
      }
      if (r == 0) fail("process exited");
      read_buffer_.append(buf, static_cast<std::size_t>(r));
      std::size_t start = 0;
      for (std::size_t nl; (nl = read_buffer_.find('\n', start)) !=
                           std::string::npos;
           start = nl + 1) {
        std::string line = read_buffer_.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines_.push_back(std::move(line));
      }
      read_buffer_.erase(0, start);
    }
  }
}

std::vector<ScoreResponse> SubprocessBackend::do_score_batch(
    std::span<const ScoreRequest> requests) {
  if (dead_ || pid_ <= 0) {
    throw ScorerUnavailable("scorer '" + command_ + "' is not running");
  }
  std::unordered_map<std::string, std::size_t> pending;
  std::string out;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    pending.emplace(requests[i].id, i);
    out += encode_request(requests[i]);
    out.push_back('\n');
  }

  std::vector<ScoreResponse> responses(requests.size());
  const auto deadline =
      std::chrono::steady_clock::time_point::max() - std::chrono::hours(1);
  exchange(std::move(out), 0, deadline);
  while (!pending.empty()) {
    if (lines_.empty()) exchange({}, 1, deadline);
    ScoreResponse response;
    try {
      response = decode_response(pop_line());
    } catch (const ScoringFailure&) {
      dead_ = true;
      throw;
    }
    auto it = pending.find(response.id);
    if (it == pending.end()) {
      dead_ = true;
      throw ProtocolViolation("response for unknown or already answered id '" +
                              response.id + "'");
    }
    responses[it->second] = std::move(response);
    pending.erase(it);
  }
  return responses;
}

}  // namespace transdir

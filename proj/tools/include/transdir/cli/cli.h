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

#ifndef TRANSDIR_CLI_CLI_H_
#define TRANSDIR_CLI_CLI_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace transdir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitScorerError = 3;

inline constexpr const char* kCacheDirEnv = "TRANSDIR_CACHE_DIR";

// Everything one invocation needs. Filled from flags, a key=value config file
// and TRANSDIR_CACHE_DIR; flags win.
struct RunConfig {
  // Scorer backend: a scorer command or a score file. Without either, the
  // cache directory alone serves scores.
  std::string scorer_cmd;
  std::string scores_file;
  std::string cache_dir;  // empty: $XDG_CACHE_HOME/transdir
  std::string scorer_id;
  std::size_t batch_size = 32;

  // Input: a corpus file or two line-aligned text files.
  std::string corpus;
  std::string src;
  std::string tgt;
  std::string langs;  // "X:Y"
  std::string doc_boundaries;
  std::string doc_id = "doc";

  // Annotations in aligned mode, subset filters in corpus mode.
  std::vector<std::string> gold;
  std::vector<std::string> types;
  std::vector<std::string> directions;  // "de-en": original de
  std::vector<std::string> datasets;
  std::optional<std::size_t> min_doc_sents;
  std::optional<std::size_t> min_docs_per_direction;

  std::string level = "sentence";
  std::size_t buckets = 0;
  std::size_t doc_threshold = 10;

  std::string doc;  // forensic: document to analyse
  std::size_t permutations = 10000;
  std::uint64_t seed = 0;
  double alpha = 0.05;
  bool small_sample_correction = false;

  std::string format;  // default depends on the command
  std::string out;
  std::string import_file;
};

// Runs the tool with argv-style arguments (args[0] is the program name).
// Returns the exit code: 0 ok, 2 input error, 3 scorer error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace transdir::cli

#endif  // TRANSDIR_CLI_CLI_H_

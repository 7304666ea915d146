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

#ifndef TRANSDIR_PERMUTATION_H_
#define TRANSDIR_PERMUTATION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "transdir/detection.h"

namespace transdir {

enum class PermutationMethod { kMonteCarlo, kExhaustive };

std::string_view to_string(PermutationMethod m);

// Outcome of a swap permutation test on one document.
//
// The statistic is D = pooled log P_tok(y|x) - pooled log P_tok(x|y). A
// permuted D counts as extreme when D_perm * sign(D_obs) >= |D_obs| (every
// permutation counts when D_obs == 0). The p-value is twice the extreme
// fraction, capped at 1.
struct PValueReport {
  double observed_stat = 0.0;
  double p_value = 1.0;
  std::size_t n_permutations = 0;  // 2^n for exhaustive runs
  std::uint64_t seed = 0;          // unused for exhaustive runs
  PermutationMethod method = PermutationMethod::kMonteCarlo;
  std::size_t extreme_count = 0;
  bool small_sample_correction = false;
};

inline constexpr std::size_t kDefaultPermutations = 10000;
inline constexpr std::size_t kExhaustiveSegmentLimit = 20;

struct PermutationOptions {
  std::size_t n_permutations = kDefaultPermutations;
  std::uint64_t seed = 0;
  // Use (extreme + 1) / (N + 1) in place of extreme / N before doubling.
  bool small_sample_correction = false;
};

// Monte Carlo test. Each permutation flips one fair coin per segment, in
// segment order, from a std::mt19937_64 seeded with options.seed (the top
// bit of each 64-bit draw decides the swap); a swapped segment exchanges its
// (sum, count) pairs between the two directions. Deterministic for a given
// seed. Throws TooFewSegments for fewer than 2 segments.
PValueReport permutation_test(std::span<const DirectionScores> segments,
                              const PermutationOptions& options = {});

// Enumerates all 2^n swap subsets (the identity included). Throws
// TooFewSegments for an empty document and TooManySegments when n exceeds
// max_segments.
PValueReport exact_permutation_test(
    std::span<const DirectionScores> segments,
    std::size_t max_segments = kExhaustiveSegmentLimit);

}  // namespace transdir

#endif  // TRANSDIR_PERMUTATION_H_

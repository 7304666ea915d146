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

#include "transdir/permutation.h"

#include <algorithm>
#include <random>
#include <vector>

#include "transdir/error.h"

namespace transdir {

namespace {

bool is_extreme(double d_perm, double d_obs) {
  if (d_obs > 0.0) return d_perm >= d_obs;
  if (d_obs < 0.0) return d_perm <= d_obs;
  return true;
}

double doubled_fraction(std::size_t extreme, std::size_t total,
                        bool correction) {
  const double num = static_cast<double>(extreme + (correction ? 1 : 0));
  const double den = static_cast<double>(total + (correction ? 1 : 0));
  return std::min(1.0, 2.0 * num / den);
}

}  // namespace

std::string_view to_string(PermutationMethod m) {
  return m == PermutationMethod::kExhaustive ? "exhaustive" : "monte-carlo";
}

PValueReport permutation_test(std::span<const DirectionScores> segments,
                              const PermutationOptions& options) {
  if (segments.size() < 2) {
    throw TooFewSegments("permutation test needs at least 2 segments, got " +
                         std::to_string(segments.size()));
  }
  if (options.n_permutations == 0) {
    throw InvalidArgument("number of permutations must be >= 1");
  }
  PValueReport report;
  report.method = PermutationMethod::kMonteCarlo;
  report.seed = options.seed;
  report.n_permutations = options.n_permutations;
  report.small_sample_correction = options.small_sample_correction;
  report.observed_stat = pool(segments).log_margin();

  std::mt19937_64 rng(options.seed);
  std::vector<std::uint8_t> swap(segments.size());
  for (std::size_t k = 0; k < options.n_permutations; ++k) {
    for (auto& s : swap) s = static_cast<std::uint8_t>(rng() >> 63);
    if (is_extreme(pool(segments, swap).log_margin(), report.observed_stat)) {
      ++report.extreme_count;
    }
  }
  report.p_value = doubled_fraction(report.extreme_count, report.n_permutations,
                                    options.small_sample_correction);
  return report;
}

PValueReport exact_permutation_test(std::span<const DirectionScores> segments,
                                    std::size_t max_segments) {
  if (segments.empty()) {
    throw TooFewSegments("exact permutation test needs at least 1 segment");
  }
  if (max_segments > 30) {
    throw InvalidArgument("exhaustive enumeration is limited to 30 segments");
  }
  if (segments.size() > max_segments) {
    throw TooManySegments("exhaustive test limited to " +
                          std::to_string(max_segments) + " segments, got " +
                          std::to_string(segments.size()));
  }
  PValueReport report;
  report.method = PermutationMethod::kExhaustive;
  report.observed_stat = pool(segments).log_margin();

  const std::size_t n = segments.size();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<std::uint8_t> swap(n);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    for (std::size_t i = 0; i < n; ++i) swap[i] = (mask >> i) & 1u;
    if (is_extreme(pool(segments, swap).log_margin(), report.observed_stat)) {
      ++report.extreme_count;
    }
  }
  report.n_permutations = static_cast<std::size_t>(subsets);
  report.p_value = doubled_fraction(report.extreme_count, report.n_permutations,
                                    false);
  return report;
}

}  // namespace transdir

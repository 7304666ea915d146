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

#ifndef TRANSDIR_SUMMATION_H_
#define TRANSDIR_SUMMATION_H_

#include <cstddef>
#include <span>

namespace transdir {

// Inputs up to this length are summed left to right.
inline constexpr std::size_t kPairwiseBlock = 1024;

// Sums in binary64. Sequences longer than kPairwiseBlock are split in half
// recursively (pairwise / tree summation), which keeps the rounding error
// at O(log n) ulps instead of O(n).
double pairwise_sum(std::span<const double> values);

}  // namespace transdir

#endif  // TRANSDIR_SUMMATION_H_

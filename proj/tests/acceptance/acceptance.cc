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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "random_corpus.h"
#include "test_util.h"
#include "transdir/cli/cli.h"
#include "transdir/corpus_filter.h"
#include "transdir/corpus_io.h"
#include "transdir/detection.h"
#include "transdir/metrics.h"
#include "transdir/permutation.h"

namespace transdir {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

TokenScores scores(std::vector<double> lp) {
  return TokenScores{std::move(lp), std::nullopt, "acceptance", "de", "en"};
}

double rel_err(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

Outcome pooling_equals_concatenation() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 2000;
    const std::vector<double> all = testing::random_logprobs(rng, n);
    std::vector<TokenScores> segments;
    std::size_t start = 0;
    while (start < n) {
      const std::size_t len = 1 + rng() % std::min<std::size_t>(n - start, 64);
      segments.push_back(scores({all.begin() + start, all.begin() + start + len}));
      start += len;
    }
    worst = std::max(worst, rel_err(doc_avg_token_logprob(segments),
                                    avg_token_logprob(all)));
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "max rel err " << worst << ", " << secs << " s";
  return {worst <= 1e-12 && secs < 5.0, d.str()};
}

Outcome geometric_mean_oracle() {
  std::mt19937_64 rng(1002);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::vector<double> lp = testing::random_logprobs(rng, 1 + rng() % 30);
    double product = 1.0;
    for (double v : lp) product *= std::exp(v);
    const double root = std::pow(product, 1.0 / static_cast<double>(lp.size()));
    worst = std::max(worst, rel_err(std::exp(avg_token_logprob(lp)), root));
  }
  std::ostringstream d;
  d << "max rel err " << worst;
  return {worst <= 1e-9, d.str()};
}

Outcome bias_reproduces_reference() {
  const double b = directional_bias(0.8972, 0.5050);
  char rounded[16];
  std::snprintf(rounded, sizeof rounded, "%.2f", b);
  std::ostringstream d;
  d.precision(17);
  d << "B = " << b << ", rounded " << rounded;
  return {b == 0.3922 && std::string(rounded) == "0.39", d.str()};
}

Outcome antisymmetry_and_ties() {
  std::mt19937_64 rng(1004);
  std::uniform_real_distribution<double> u(-12.0, 0.0);
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const double a = u(rng);
    const double b = i % 10 == 0 ? a : u(rng);
    const DirectionVerdict fwd = verdict_from_averages(a, b);
    const DirectionVerdict bwd = verdict_from_averages(b, a);
    if (a == b) {
      if (!fwd.tie || fwd.predicted != Direction::kY2X || !bwd.tie) ++failures;
      continue;
    }
    if (fwd.tie || bwd.tie || bwd.predicted != reversed(fwd.predicted) ||
        bwd.log_margin != -fwd.log_margin) {
      ++failures;
    }
  }
  return {failures == 0, std::to_string(failures) + " violations in 10000 pairs"};
}

std::vector<DirectionScores> random_document(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> shift(-0.6, 0.6);
  const double doc_shift = shift(rng);
  std::vector<DirectionScores> doc;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t cx = 1 + rng() % 30, cy = 1 + rng() % 30;
    double sx = 0.0, sy = 0.0;
    for (double v : testing::random_logprobs(rng, cx, -4.0, 0.0)) sx += v;
    for (double v : testing::random_logprobs(rng, cy, -4.0, 0.0)) sy += v;
    sx = std::min(0.0, sx + doc_shift * static_cast<double>(cx));
    doc.push_back(DirectionScores::from_sums(sx, cx, sy, cy));
  }
  return doc;
}

Outcome monte_carlo_matches_exact() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1005);
  int agree = 0;
  int asymmetric = 0;
  int informative = 0;  // exact p below 0.5
  for (int i = 0; i < 50; ++i) {
    const auto doc = random_document(rng, 2 + rng() % 11);
    const PValueReport exact = exact_permutation_test(doc);
    const PValueReport mc = permutation_test(doc, {10000, 5000u + i, false});
    const double q = std::min(1.0, static_cast<double>(exact.extreme_count) /
                                       static_cast<double>(exact.n_permutations));
    const double sd = 2.0 * std::sqrt(q * (1.0 - q) / 10000.0);
    if (std::abs(mc.p_value - exact.p_value) <= 3.0 * sd) ++agree;
    informative += exact.p_value < 0.5;

    std::vector<DirectionScores> swapped;
    for (const auto& s : doc) swapped.push_back(s.swapped());
    if (exact_permutation_test(swapped).p_value != exact.p_value) ++asymmetric;
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << agree << "/50 within 3 sd, " << informative << " with exact p < 0.5, "
    << asymmetric << " asymmetric, " << secs << " s";
  return {agree >= 49 && asymmetric == 0 && secs < 30.0, d.str()};
}

Outcome null_behaviour() {
  std::mt19937_64 rng(1006);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<DirectionScores> doc;
    const std::size_t n = 2 + rng() % 25;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t c = 1 + rng() % 40;
      double s = 0.0;
      for (double v : testing::random_logprobs(rng, c)) s += v;
      doc.push_back(DirectionScores::from_sums(s, c, s, c));
    }
    const PValueReport r = n <= kExhaustiveSegmentLimit
                               ? exact_permutation_test(doc)
                               : permutation_test(doc, {2000, 7, false});
    if (r.observed_stat != 0.0 || r.p_value != 1.0) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " of 100 constructions off"};
}

Outcome golden_end_to_end() {
  using testing::fixture;
  const testing::TempDir cache;
  const std::vector<std::string> base = {
      "transdir", "", "--corpus", fixture("corpus20.jsonl").string(), "--scores-file",
      fixture("corpus20.scores.jsonl").string(), "--cache-dir", cache.path().string()};
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"detect"}, "corpus20.detect.txt"},
      {{"evaluate"}, "corpus20.evaluate.md"},
      {{"evaluate", "--level", "document", "--format", "csv"}, "corpus20.evaluate_doc.csv"},
      {{"forensic", "--doc", "d1"}, "corpus20.forensic_d1.txt"}};
  int mismatches = 0;
  for (int run = 0; run < 2; ++run) {
    for (const auto& [extra, golden] : cases) {
      std::vector<std::string> args = base;
      args[1] = extra[0];
      args.insert(args.end(), extra.begin() + 1, extra.end());
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      if (code != 0 || out.str() != testing::read_file(fixture(golden))) {
        ++mismatches;
        std::cerr << "  mismatch on run " << run + 1 << ": " << golden << "\n"
                  << err.str();
      }
    }
  }
  return {mismatches == 0,
          std::to_string(8 - mismatches) + "/8 outputs identical to goldens"};
}

Outcome corpus_round_trip_and_idempotence() {
  std::mt19937_64 rng(1008);
  const testing::TempDir dir;
  int round_trip_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const Corpus c = testing::random_corpus(rng);
    save_corpus(c, dir / "c.jsonl");
    if (load_corpus(dir / "c.jsonl") != c) ++round_trip_failures;
  }
  int idempotence_failures = 0;
  const Corpus base = testing::random_corpus(rng, 40, 6);
  for (int i = 0; i < 50; ++i) {
    CorpusFilter f;
    if (rng() & 1) f.gold_directions = std::set<Direction>{Direction::kX2Y, Direction::kY2X};
    if (rng() & 1) f.language_pairs = std::set<std::string>{"de-en", "en-fr", "uk-cs"};
    if (rng() & 1) f.translation_types = std::set<TranslationType>{TranslationType::kHT};
    if (rng() & 1) f.dataset_tags = std::set<std::string>{"set0", ""};
    if (rng() & 1) f.min_doc_sentences = 1 + rng() % 4;
    if (rng() & 1) f.min_docs_per_direction = 1 + rng() % 3;
    const Corpus once = filter_corpus(base, f);
    if (filter_corpus(once, f) != once) ++idempotence_failures;
  }
  return {round_trip_failures == 0 && idempotence_failures == 0,
          std::to_string(round_trip_failures) + " round-trip and " +
              std::to_string(idempotence_failures) + " idempotence failures"};
}

}  // namespace
}  // namespace transdir

int main() {
  using transdir::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"pooling equals concatenation", transdir::pooling_equals_concatenation},
      {"geometric-mean oracle", transdir::geometric_mean_oracle},
      {"bias reproduces reference value", transdir::bias_reproduces_reference},
      {"decision-rule antisymmetry and ties", transdir::antisymmetry_and_ties},
      {"permutation test correctness", transdir::monte_carlo_matches_exact},
      {"null behaviour", transdir::null_behaviour},
      {"end-to-end golden run", transdir::golden_end_to_end},
      {"corpus round trip and filter idempotence",
       transdir::corpus_round_trip_and_idempotence},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << o.detail << ")\n";
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

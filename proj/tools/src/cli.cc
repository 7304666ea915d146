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

#include "transdir/cli/cli.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <set>
#include <utility>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "transdir/cli/report.h"
#include "transdir/corpus_filter.h"
#include "transdir/corpus_io.h"
#include "transdir/corpus_stats.h"
#include "transdir/detection.h"
#include "transdir/error.h"
#include "transdir/evaluation.h"
#include "transdir/permutation.h"
#include "transdir/score_cache.h"
#include "transdir/score_record.h"
#include "transdir/score_store.h"
#include "transdir/scorer.h"
#include "transdir/scorer_backend.h"
#include "transdir/subprocess_backend.h"
#include "transdir/text.h"

namespace transdir::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Input

std::pair<std::string, std::string> parse_langs(const std::string& langs) {
  const auto colon = langs.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == langs.size() ||
      langs.find(':', colon + 1) != std::string::npos) {
    throw InvalidArgument("--langs expects X:Y, got '" + langs + "'");
  }
  return {langs.substr(0, colon), langs.substr(colon + 1)};
}

Corpus load_aligned(const RunConfig& c) {
  if (c.src.empty() || c.tgt.empty()) {
    throw InvalidArgument("aligned mode needs both --src and --tgt");
  }
  if (c.langs.empty()) throw InvalidArgument("aligned mode needs --langs X:Y");
  if (c.gold.size() > 1 || c.types.size() > 1) {
    throw InvalidArgument(
        "in aligned mode --gold and --types take a single value");
  }
  AlignedImportOptions opts;
  std::tie(opts.lang_x, opts.lang_y) = parse_langs(c.langs);
  if (!c.gold.empty()) opts.gold = parse_direction(c.gold.front());
  if (!c.types.empty()) opts.type = parse_translation_type(c.types.front());
  opts.doc_id = c.doc_id;
  if (!c.doc_boundaries.empty()) opts.boundaries = c.doc_boundaries;
  if (c.datasets.size() == 1) opts.dataset_tag = c.datasets.front();
  return import_aligned_files(c.src, c.tgt, opts);
}

CorpusFilter make_filter(const RunConfig& c, bool aligned) {
  CorpusFilter f;
  if (!aligned) {
    if (!c.gold.empty()) {
      f.gold_directions.emplace();
      for (const auto& g : c.gold) f.gold_directions->insert(parse_direction(g));
    }
    if (!c.types.empty()) {
      f.translation_types.emplace();
      for (const auto& t : c.types) {
        f.translation_types->insert(parse_translation_type(t));
      }
    }
    if (!c.langs.empty()) {
      const auto [x, y] = parse_langs(c.langs);
      f.language_pairs = std::set<std::string>{x + "-" + y};
    }
    if (!c.datasets.empty()) {
      f.dataset_tags = std::set<std::string>(c.datasets.begin(),
                                             c.datasets.end());
    }
  }
  if (!c.directions.empty()) {
    f.language_directions =
        std::set<std::string>(c.directions.begin(), c.directions.end());
  }
  f.min_doc_sentences = c.min_doc_sents;
  f.min_docs_per_direction = c.min_docs_per_direction;
  return f;
}

Corpus load_input(const RunConfig& c) {
  const bool aligned = !c.src.empty() || !c.tgt.empty();
  if (aligned && !c.corpus.empty()) {
    throw InvalidArgument("give either --corpus or --src/--tgt, not both");
  }
  Corpus corpus;
  if (aligned) {
    corpus = load_aligned(c);
  } else if (!c.corpus.empty()) {
    corpus = load_corpus(c.corpus);
  } else {
    throw InvalidArgument("no input: give --corpus or --src and --tgt");
  }
  corpus = filter_corpus(corpus, make_filter(c, aligned));
  if (corpus.documents.empty()) throw EmptyInput("no segments");
  return corpus;
}

// ---------------------------------------------------------------------------
// Scoring

fs::path resolve_cache_dir(const RunConfig& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return fs::path(xdg) / "transdir";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "transdir";
  }
  return ".transdir-cache";
}

// Starts the scorer process only when a request actually misses the cache,
// so fully cached reruns need no scorer at all.
class LazySubprocessBackend : public ScorerBackend {
 public:
  LazySubprocessBackend(std::string command, std::string scorer_id)
      : command_(std::move(command)), scorer_id_(std::move(scorer_id)) {}

  const std::string& scorer_id() const override { return scorer_id_; }

 protected:
  std::vector<ScoreResponse> do_score_batch(
      std::span<const ScoreRequest> requests) override {
    if (!process_) {
      process_ = std::make_unique<SubprocessBackend>(command_);
      if (process_->scorer_id() != scorer_id_) {
        throw ProtocolViolation("scorer reports id '" + process_->scorer_id() +
                                "' but --scorer-id is '" + scorer_id_ + "'");
      }
    }
    return process_->score_batch(requests);
  }

 private:
  std::string command_;
  std::string scorer_id_;
  std::unique_ptr<SubprocessBackend> process_;
};

std::unique_ptr<ScorerBackend> make_backend(const RunConfig& c,
                                            const ScoreCache& cache) {
  if (!c.scorer_cmd.empty() && !c.scores_file.empty()) {
    throw InvalidArgument("give only one of --scorer-cmd and --scores-file");
  }
  std::optional<std::string> id;
  if (!c.scorer_id.empty()) id = c.scorer_id;
  if (!c.scorer_cmd.empty()) {
    if (id) return std::make_unique<LazySubprocessBackend>(c.scorer_cmd, *id);
    return std::make_unique<SubprocessBackend>(c.scorer_cmd);
  }
  if (!c.scores_file.empty()) {
    return std::make_unique<StoreBackend>(load_score_file(c.scores_file), id);
  }
  ScoreStore cached = cache.load_all();
  if (cached.empty()) {
    throw InvalidArgument("no scorer: give --scorer-cmd or --scores-file (cache " +
                          cache.dir().string() + " is empty)");
  }
  return std::make_unique<StoreBackend>(std::move(cached), id);
}

struct ScoredCorpus {
  std::string scorer_id;
  // Parallel to corpus.documents; one entry per pair.
  std::vector<std::vector<DirectionScores>> documents;
};

// Every score lands in the cache directory before any analysis runs.
ScoredCorpus score_corpus(const Corpus& corpus, const RunConfig& c) {
  if (c.batch_size == 0) throw InvalidArgument("--batch-size must be positive");
  ScoreCache cache(resolve_cache_dir(c));
  std::unique_ptr<ScorerBackend> backend = make_backend(c, cache);
  Scorer scorer(*backend, &cache, c.batch_size);
  const std::vector<SegmentPair> pairs = corpus.all_pairs();
  const std::vector<BidirectionalScores> scores = scorer.score_pairs(pairs);

  ScoredCorpus out;
  out.scorer_id = scorer.scorer_id();
  std::size_t i = 0;
  for (const Document& doc : corpus.documents) {
    std::vector<DirectionScores> ds;
    ds.reserve(doc.size());
    for (std::size_t k = 0; k < doc.size(); ++k, ++i) {
      ds.push_back(make_direction_scores(scores[i].xy, scores[i].yx));
    }
    out.documents.push_back(std::move(ds));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Output helpers

std::string arrow(const std::string& from, const std::string& to) {
  return from + "->" + to;
}

// Direction label for pair languages: x2y -> "de->en".
std::string direction_label(Direction d, const std::string& x,
                            const std::string& y) {
  switch (d) {
    case Direction::kX2Y: return arrow(x, y);
    case Direction::kY2X: return arrow(y, x);
    default: return std::string(to_string(d));
  }
}

std::string format_g(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_null()) return "";
  return v.dump();
}

// Flat records as a JSON array or as a table with the first record's keys.
std::string emit_records(const std::vector<ordered_json>& records,
                         Format format) {
  if (format == Format::kJson) {
    return ordered_json(records).dump(2) + "\n";
  }
  Table t;
  if (!records.empty()) {
    for (const auto& [key, _] : records.front().items()) t.header.push_back(key);
  }
  for (const ordered_json& r : records) {
    std::vector<std::string> row;
    for (const std::string& key : t.header) row.push_back(cell(r.at(key)));
    t.rows.push_back(std::move(row));
  }
  return render_tables({t}, format);
}

Format format_or(const RunConfig& c, Format fallback) {
  return c.format.empty() ? fallback : parse_format(c.format);
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << bytes;
  out.close();
  if (!out) throw InvalidArgument("error writing " + path);
}

ordered_json verdict_record(const std::string& level, const std::string& id,
                            const SegmentPair& first, std::size_t segments,
                            const DirectionVerdict& v, double sum_xy,
                            std::size_t count_xy, double sum_yx,
                            std::size_t count_yx) {
  return ordered_json{
      {"level", level},
      {"id", id},
      {"doc_id", first.doc_id},
      {"lang_x", first.lang_x},
      {"lang_y", first.lang_y},
      {"segments", segments},
      {"gold", to_string(first.gold_direction)},
      {"predicted", to_string(v.predicted)},
      {"tie", v.tie},
      {"log_margin", v.log_margin},
      {"prob_ratio", v.prob_ratio},
      {"logp_tok_xy", sum_xy / static_cast<double>(count_xy)},
      {"logp_tok_yx", sum_yx / static_cast<double>(count_yx)},
      {"sum_xy", sum_xy},
      {"count_xy", count_xy},
      {"sum_yx", sum_yx},
      {"count_yx", count_yx},
  };
}

// One human-readable verdict line; P_tok in the linear domain.
std::string verdict_line(const std::string& level, const std::string& id,
                         const SegmentPair& first, const DirectionVerdict& v,
                         double logp_xy, double logp_yx,
                         std::size_t segments) {
  const std::string& x = first.lang_x;
  const std::string& y = first.lang_y;
  std::string line = level + " " + id + " " + x + "-" + y +
                     " verdict=" + direction_label(v.predicted, x, y);
  if (v.tie) line += " tie=yes";
  line += " P_tok(" + arrow(x, y) + ")=" + sig3(std::exp(logp_xy)) +
          " P_tok(" + arrow(y, x) + ")=" + sig3(std::exp(logp_yx)) +
          " ratio=" + sig3(v.prob_ratio) +
          " gold=" + direction_label(first.gold_direction, x, y);
  if (level == "doc") line += " segments=" + std::to_string(segments);
  return line + "\n";
}

// ---------------------------------------------------------------------------
// Commands

int cmd_detect(const RunConfig& c, std::ostream& out) {
  const Corpus corpus = load_input(c);
  const ScoredCorpus scored = score_corpus(corpus, c);

  std::string text = "# scorer=" + scored.scorer_id +
                     " pairs=" + std::to_string(corpus.pair_count()) +
                     " documents=" + std::to_string(corpus.documents.size()) +
                     "\n";
  std::vector<ordered_json> records;
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    const Document& doc = corpus.documents[d];
    const auto& ds = scored.documents[d];
    for (std::size_t k = 0; k < doc.size(); ++k) {
      const DirectionVerdict v = detect_sentence(ds[k]);
      text += verdict_line("pair", doc.pairs[k].pair_id, doc.pairs[k], v,
                           ds[k].logp_tok_xy, ds[k].logp_tok_yx, 1);
      records.push_back(verdict_record(
          "pair", doc.pairs[k].pair_id, doc.pairs[k], 1, v, ds[k].sum_xy,
          ds[k].count_xy, ds[k].sum_yx, ds[k].count_yx));
    }
  }
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    const Document& doc = corpus.documents[d];
    if (doc.size() < 2) continue;
    const auto& ds = scored.documents[d];
    const PooledScores pooled = pool(ds);
    const DirectionVerdict v = detect_document(ds);
    text += verdict_line("doc", doc.doc_id, doc.pairs.front(), v,
                         pooled.logp_tok_xy(), pooled.logp_tok_yx(),
                         doc.size());
    records.push_back(verdict_record("doc", doc.doc_id, doc.pairs.front(),
                                     doc.size(), v, pooled.sum_xy,
                                     pooled.count_xy, pooled.sum_yx,
                                     pooled.count_yx));
  }
  const Format format = format_or(c, Format::kJson);
  out << text;
  if (!c.out.empty()) write_file(c.out, emit_records(records, format));
  return kExitOk;
}

int cmd_evaluate(const RunConfig& c, std::ostream& out) {
  if (c.level != "sentence" && c.level != "document") {
    throw InvalidArgument("--level must be sentence or document");
  }
  const Format format = format_or(c, Format::kMarkdown);
  const Corpus corpus = load_input(c);
  const ScoredCorpus scored = score_corpus(corpus, c);

  std::vector<EvaluationItem> items;
  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    const Document& doc = corpus.documents[d];
    const auto& ds = scored.documents[d];
    if (c.level == "sentence") {
      for (std::size_t k = 0; k < doc.size(); ++k) {
        const SegmentPair& p = doc.pairs[k];
        items.push_back(EvaluationItem{p.lang_x, p.lang_y, p.translation_type,
                                       p.dataset_tag.value_or(""),
                                       p.gold_direction, detect_sentence(ds[k]),
                                       source_char_length(p)});
      }
      continue;
    }
    // A document with mixed annotations falls into the "unknown" type and
    // the empty dataset tag.
    const SegmentPair& first = doc.pairs.front();
    TranslationType type = first.translation_type;
    std::string tag = first.dataset_tag.value_or("");
    std::size_t chars = 0;
    for (const SegmentPair& p : doc.pairs) {
      if (p.translation_type != type) type = TranslationType::kUnknown;
      if (p.dataset_tag.value_or("") != tag) tag.clear();
      chars += source_char_length(p);
    }
    items.push_back(EvaluationItem{first.lang_x, first.lang_y, type, tag,
                                   first.gold_direction, detect_document(ds),
                                   chars});
  }
  const EvaluationReport report =
      build_evaluation_report(items, {c.level, c.buckets});
  const std::string bytes = emit_report(report, format);
  if (c.out.empty()) {
    out << bytes;
  } else {
    write_file(c.out, bytes);
  }
  return kExitOk;
}

std::string conclusion(const PValueReport& r, double alpha,
                       const DirectionVerdict& v, const std::string& x,
                       const std::string& y) {
  const std::string p = format_g("%.4g", r.p_value);
  const std::string a = format_g("%g", alpha);
  if (v.tie || r.p_value >= alpha) {
    return "With p = " + p + " >= alpha = " + a +
           ", we cannot reject the null hypothesis; the segments do not "
           "significantly favour either translation direction.";
  }
  const std::string& original = v.predicted == Direction::kX2Y ? x : y;
  const std::string& translation = v.predicted == Direction::kX2Y ? y : x;
  return "With p = " + p + " < alpha = " + a +
         ", we reject the null hypothesis and conclude that the " +
         translation + " segments are translated from the " + original +
         " segments.";
}

int cmd_forensic(const RunConfig& c, std::ostream& out) {
  if (!(c.alpha > 0.0 && c.alpha < 1.0)) {
    throw InvalidArgument("--alpha must lie strictly between 0 and 1");
  }
  Corpus corpus = load_input(c);
  if (!c.doc.empty()) {
    std::vector<Document> picked;
    for (Document& d : corpus.documents) {
      if (d.doc_id == c.doc) picked.push_back(std::move(d));
    }
    if (picked.empty()) throw InvalidArgument("no document '" + c.doc + "'");
    corpus.documents = std::move(picked);
  }
  if (corpus.documents.size() != 1) {
    throw InvalidArgument("forensic analysis needs exactly one document, got " +
                          std::to_string(corpus.documents.size()) +
                          " (select one with --doc)");
  }
  const Document& doc = corpus.documents.front();
  if (doc.size() < 2) {
    throw TooFewSegments("forensic analysis needs at least 2 segments, got " +
                         std::to_string(doc.size()));
  }
  const Format format = format_or(c, Format::kJson);
  const ScoredCorpus scored = score_corpus(corpus, c);
  const auto& ds = scored.documents.front();

  const PooledScores pooled = pool(ds);
  const DirectionVerdict v = detect_document(ds);
  const PValueReport r =
      doc.size() <= kExhaustiveSegmentLimit
          ? exact_permutation_test(ds)
          : permutation_test(ds, {c.permutations, c.seed,
                                  c.small_sample_correction});
  const std::string& x = doc.lang_x();
  const std::string& y = doc.lang_y();

  out << "document " << doc.doc_id << " " << x << "-" << y << " segments="
      << doc.size() << " scorer=" << scored.scorer_id << "\n";
  out << "pooled P_tok(" << arrow(x, y) << ") = "
      << sig3(std::exp(pooled.logp_tok_xy())) << "\n";
  out << "pooled P_tok(" << arrow(y, x) << ") = "
      << sig3(std::exp(pooled.logp_tok_yx())) << "\n";
  out << "verdict: " << (v.tie ? "tie" : direction_label(v.predicted, x, y))
      << " (log margin " << format_g("%.6g", v.log_margin) << ", ratio "
      << sig3(v.prob_ratio) << ")\n";
  out << "permutation test: method=" << to_string(r.method)
      << " permutations=" << r.n_permutations;
  if (r.method == PermutationMethod::kMonteCarlo) out << " seed=" << r.seed;
  out << " extreme=" << r.extreme_count
      << " D_obs=" << format_g("%.6g", r.observed_stat)
      << " p=" << format_g("%.4g", r.p_value) << "\n";
  out << conclusion(r, c.alpha, v, x, y) << "\n";

  if (!c.out.empty()) {
    ordered_json rec{
        {"doc_id", doc.doc_id},
        {"lang_x", x},
        {"lang_y", y},
        {"segments", doc.size()},
        {"scorer_id", scored.scorer_id},
        {"logp_tok_xy", pooled.logp_tok_xy()},
        {"logp_tok_yx", pooled.logp_tok_yx()},
        {"predicted", to_string(v.predicted)},
        {"tie", v.tie},
        {"log_margin", v.log_margin},
        {"method", to_string(r.method)},
        {"n_permutations", r.n_permutations},
        {"seed", r.seed},
        {"small_sample_correction", r.small_sample_correction},
        {"extreme_count", r.extreme_count},
        {"observed_stat", r.observed_stat},
        {"p_value", r.p_value},
        {"alpha", c.alpha},
        {"significant", !v.tie && r.p_value < c.alpha},
    };
    const std::string bytes = format == Format::kJson
                                  ? rec.dump(2) + "\n"
                                  : emit_records({rec}, format);
    write_file(c.out, bytes);
  }
  return kExitOk;
}

int cmd_stats(const RunConfig& c, std::ostream& out) {
  const Format format = format_or(c, Format::kMarkdown);
  const std::string bytes =
      emit_stats(corpus_stats(load_input(c), c.doc_threshold), format);
  if (c.out.empty()) {
    out << bytes;
  } else {
    write_file(c.out, bytes);
  }
  return kExitOk;
}

int cmd_cache_ls(const RunConfig& c, std::ostream& out) {
  const ScoreCache cache(resolve_cache_dir(c));
  for (const CacheKey& key : cache.keys()) {
    const std::optional<ScoreRecord> rec = cache.get(key);
    if (!rec) continue;  // removed concurrently
    out << key.hex() << " " << rec->scorer_id << " "
        << arrow(rec->src_lang, rec->tgt_lang) << " tokens="
        << rec->token_logprobs.size() << "\n";
  }
  return kExitOk;
}

int cmd_cache_clear(const RunConfig& c, std::ostream& out) {
  ScoreCache cache(resolve_cache_dir(c));
  const std::size_t n = cache.clear();
  out << "removed " << n << " entries from " << cache.dir().string() << "\n";
  return kExitOk;
}

int cmd_cache_import(const RunConfig& c, std::ostream& out) {
  ScoreCache cache(resolve_cache_dir(c));
  const std::size_t n = cache.import(load_score_file(c.import_file));
  out << "imported " << n << " records into " << cache.dir().string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Argument parsing

void add_options(CLI::App& app, RunConfig& c) {
  app.set_config("--config", "",
                 "key=value config file (flags on the command line win)");

  const char* scoring = "Scoring";
  app.add_option("--scorer-cmd", c.scorer_cmd,
                 "Scorer command speaking the JSON-lines protocol")
      ->group(scoring);
  app.add_option("--scores-file", c.scores_file, "Precomputed score file")
      ->group(scoring);
  app.add_option("--cache-dir", c.cache_dir,
                 "Score cache directory (default $XDG_CACHE_HOME/transdir)")
      ->envname(kCacheDirEnv)
      ->group(scoring);
  app.add_option("--scorer-id", c.scorer_id,
                 "Scorer id; lets cached reruns skip starting the scorer")
      ->group(scoring);
  app.add_option("--batch-size", c.batch_size, "Requests per scorer batch")
      ->check(CLI::PositiveNumber)
      ->group(scoring);

  const char* input = "Input";
  app.add_option("--corpus", c.corpus, "Corpus file (JSON lines)")
      ->group(input);
  app.add_option("--src", c.src, "Line-aligned text file, side x")
      ->group(input);
  app.add_option("--tgt", c.tgt, "Line-aligned text file, side y")
      ->group(input);
  app.add_option("--langs", c.langs,
                 "X:Y languages of --src/--tgt; a language-pair filter "
                 "with --corpus")
      ->group(input);
  app.add_option("--doc-boundaries", c.doc_boundaries,
                 "File with one document id per aligned line")
      ->group(input);
  app.add_option("--doc-id", c.doc_id,
                 "Document id for aligned files without boundaries")
      ->group(input);

  const char* subset = "Subset";
  app.add_option("--gold", c.gold,
                 "Gold direction(s): x2y, y2x, none, unknown")
      ->delimiter(',')
      ->group(subset);
  app.add_option("--types", c.types,
                 "Translation type(s): HT, NMT, pre-NMT, LLM, unknown")
      ->delimiter(',')
      ->group(subset);
  app.add_option("--directions", c.directions,
                 "Original-to-translation language directions, e.g. de-en")
      ->delimiter(',')
      ->group(subset);
  app.add_option("--datasets", c.datasets, "Dataset tags")
      ->delimiter(',')
      ->group(subset);
  app.add_option("--min-doc-sents", c.min_doc_sents,
                 "Drop documents with fewer segments")
      ->group(subset);
  app.add_option("--min-docs-per-direction", c.min_docs_per_direction,
                 "Drop language pairs with fewer documents in either "
                 "direction")
      ->group(subset);

  const char* output = "Output";
  app.add_option("--format", c.format, "csv, json or markdown")
      ->group(output);
  app.add_option("--out", c.out, "Output file")->group(output);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  RunConfig c;
  CLI::App app{
      "Infers the original translation direction of parallel text from "
      "conditional translation probabilities.",
      "transdir"};
  app.require_subcommand(1);
  add_options(app, c);

  auto* detect = app.add_subcommand(
      "detect", "Per-pair and per-document direction verdicts");
  auto* evaluate = app.add_subcommand(
      "evaluate", "Accuracy and bias against gold directions");
  evaluate->add_option("--level", c.level, "sentence or document");
  evaluate->add_option("--buckets", c.buckets,
                       "Source-length bucket width in characters (0: off)");
  auto* forensic = app.add_subcommand(
      "forensic", "Pooled verdict with a permutation test for one document");
  forensic->add_option("--doc", c.doc, "Document to analyse");
  forensic->add_option("--permutations", c.permutations,
                       "Monte Carlo permutations (documents over 20 segments)")
      ->check(CLI::PositiveNumber);
  forensic->add_option("--seed", c.seed, "Monte Carlo seed");
  forensic->add_option("--alpha", c.alpha, "Significance level");
  forensic->add_flag("--small-sample-correction", c.small_sample_correction,
                     "Use (k+1)/(N+1) for Monte Carlo p-values");
  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("--doc-threshold", c.doc_threshold,
                    "Minimum source sentences for the documents>=N column");
  auto* cache = app.add_subcommand("cache", "Inspect or fill the score cache");
  cache->require_subcommand(1);
  auto* cache_ls = cache->add_subcommand("ls", "List cache entries");
  auto* cache_clear = cache->add_subcommand("clear", "Remove all entries");
  auto* cache_import =
      cache->add_subcommand("import", "Copy a score file into the cache");
  cache_import->add_option("file", c.import_file, "Score file")->required();
  for (CLI::App* sub : {detect, evaluate, forensic, stats, cache, cache_ls,
                        cache_clear, cache_import}) {
    sub->fallthrough();
  }

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (*detect) return cmd_detect(c, out);
  if (*evaluate) return cmd_evaluate(c, out);
  if (*forensic) return cmd_forensic(c, out);
  if (*stats) return cmd_stats(c, out);
  if (*cache_ls) return cmd_cache_ls(c, out);
  if (*cache_clear) return cmd_cache_clear(c, out);
  return cmd_cache_import(c, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ScoringFailure& e) {
    err << "transdir: scorer error";
    if (!e.request_id().empty()) {
      err << " for pair " << pair_id_of_request(e.request_id());
    }
    err << ": " << e.what() << "\n";
    return kExitScorerError;
  } catch (const Error& e) {
    err << "transdir: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "transdir: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace transdir::cli

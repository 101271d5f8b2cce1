// Copyright 2026 The Arasent Authors.
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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. With --amc it runs only the checks that
// need the real corpus named by $AMC_CORPUS, and exits 77 (skipped) when the
// variable is unset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arasent/classifier.h"
#include "arasent/cli.h"
#include "arasent/corpus.h"
#include "arasent/csv.h"
#include "arasent/error.h"
#include "arasent/evaluation.h"
#include "arasent/synthetic.h"
#include "arasent/sweep.h"
#include "arasent/tagset.h"
#include "oracles.h"

namespace arasent {
namespace {

namespace fs = std::filesystem;

const fs::path kData = ARASENT_TEST_DATA;
const fs::path kReference = ARASENT_REFERENCE_DATA;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

bool RunCriterion(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = c.run();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (outcome.pass && seconds >= c.limit_seconds) {
    outcome.pass = false;
    outcome.detail = "over time limit";
  }
  std::printf("criterion %d %-28s %s  %.3fs (limit %gs)%s%s\n", c.number, c.name.c_str(),
              outcome.pass ? "PASS" : "FAIL", seconds, c.limit_seconds,
              outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
  std::fflush(stdout);
  return outcome.pass;
}

fs::path WorkDir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("arasent_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Outcome ScoringExactness() {
  Outcome o;
  const std::pair<const char*, int64_t> forms[] = {
      {"E4.1+", 1},  {"E4.1++", 2},  {"E4.1+++", 3}, {"E4.1-", -1},
      {"E4.1--", -2}, {"E4.1---", -3}, {"E4.1", 0},  {"E2", 0}};
  for (const auto& [raw, half] : forms) {
    o.Check(TagScore(ParseTag(raw)).half_units() == half, std::string("weight of ") + raw);
    o.Check(oracle::HalfUnitWeight(raw) == half, std::string("oracle weight of ") + raw);
  }
  // Random codes and sign runs against the independent weight oracle.
  std::mt19937_64 rng(101);
  const std::string code_chars = "0123456789.abcfimn%@";
  for (int i = 0; i < 20000; ++i) {
    std::string raw = "E";
    for (size_t n = rng() % 5; n > 0; --n) raw += code_chars[rng() % code_chars.size()];
    const size_t run = rng() % 4;
    raw.append(run, rng() % 2 ? '+' : '-');
    o.Check(TagScore(ParseTag(raw)).half_units() == oracle::HalfUnitWeight(raw), "weight of " + raw);
  }
  return o;
}

Outcome SignRule() {
  Outcome o;
  std::mt19937_64 rng(102);
  for (int i = 0; i < 10000; ++i) {
    int64_t half = static_cast<int64_t>(rng() % 2001) - 1000;
    if (i < 3) half = i - 1;
    const Polarity p = Classify(SentimentScore::FromHalfUnits(half));
    const Polarity expected = half > 0 ? Polarity::kPositive
                              : half < 0 ? Polarity::kNegative
                                         : Polarity::kNeutral;
    o.Check(p == expected, "score " + SentimentScore::FromHalfUnits(half).ToString());
  }
  return o;
}

Outcome MetaphorAdjustment() {
  Outcome o;
  std::mt19937_64 rng(103);
  const MetaphorPolarity kinds[] = {MetaphorPolarity::kPositive, MetaphorPolarity::kNegative,
                                    MetaphorPolarity::kNeutral, MetaphorPolarity::kNull};
  for (int i = 0; i < 5000; ++i) {
    TaggedReview tagged;
    Review review;
    review.id = tagged.review_id = "r" + std::to_string(i);
    for (size_t n = rng() % 30; n > 0; --n) {
      const char* sign[] = {"+", "++", "+++", "-", "--", "---", ""};
      std::string raw = (rng() % 2 ? "E4.1" : "A1.1") + std::string(sign[rng() % 7]);
      tagged.tokens.push_back({"w", {ParseTag(raw)}});
    }
    int64_t expected_half = 0;
    for (size_t n = rng() % 4; n > 0; --n) {
      const MetaphorPolarity m = kinds[rng() % 4];
      review.metaphors.push_back({m == MetaphorPolarity::kNull ? "" : "m", m});
      expected_half += m == MetaphorPolarity::kPositive   ? 4
                       : m == MetaphorPolarity::kNegative ? -4
                                                          : 0;
    }
    const ClassificationResult tool1 = ClassifySemantic(tagged);
    const ClassificationResult tool2 = ClassifyWithMetaphor(tagged, review);
    o.Check((tool2.final_score - tool1.final_score).half_units() == expected_half,
            "review " + review.id);
    o.Check(tool2.predicted == Classify(tool2.final_score), "sign rule on " + review.id);
  }
  return o;
}

Outcome MetricOracle() {
  Outcome o;
  std::mt19937_64 rng(104);
  for (int i = 0; i < 500; ++i) {
    oracle::Pairs pairs(rng() % 201);
    for (auto& [g, p] : pairs) {
      g = kAllPolarities[rng() % 3];
      p = kAllPolarities[rng() % 3];
    }
    const ConfusionMatrix m = Confusion(pairs);
    auto near = [](const Metrics& a, const oracle::Prf& b) {
      return std::abs(a.precision - b.p) <= 1e-12 && std::abs(a.recall - b.r) <= 1e-12 &&
             std::abs(a.f_score - b.f) <= 1e-12;
    };
    for (Polarity c : kAllPolarities) {
      o.Check(near(ClassMetrics(m, c), oracle::ClassPrf(pairs, c)),
              "class metrics, corpus " + std::to_string(i));
    }
    o.Check(near(MacroMetrics(m), oracle::MacroPrf(pairs)), "macro, corpus " + std::to_string(i));
  }
  return o;
}

const std::vector<std::string>& TableOrder() {
  static const std::vector<std::string> labels = {
      "All reviews",    "Positive reviews", "Negative reviews", "Neutral reviews",
      ">=1000 tks",     "999 tks ~500 tks", "499 tks ~100 tks", "99 tks ~90 tks",
      "79 tks ~70 tks", "69 tks ~60 tks",   "59 tks ~50 tks",   "49 tks ~40 tks",
      "39 tks ~30 tks", "29 tks ~20 tks",   "19 tks ~10 tks",   "9 tks ~5 tks",
      "4 tks ~1 tks"};
  return labels;
}

void CheckTableStructure(Outcome& o, const std::vector<Review>& corpus,
                         const EvaluationReport& report) {
  o.Check(report.rows.size() == 17, "row count " + std::to_string(report.rows.size()));
  for (size_t i = 0; i < std::min<size_t>(17, report.rows.size()); ++i) {
    o.Check(report.rows[i].category.Label() == TableOrder()[i], "row " + std::to_string(i));
  }
  if (report.rows.size() != 17) return;
  o.Check(report.rows[0].review_count == corpus.size(), "All count");
  o.Check(report.rows[1].review_count + report.rows[2].review_count +
                  report.rows[3].review_count ==
              corpus.size(),
          "polarity counts");
  size_t binned = report.unbinned.review_count;
  for (size_t i = 4; i < 17; ++i) binned += report.rows[i].review_count;
  o.Check(binned == corpus.size(), "bin counts plus unbinned");
  for (size_t i = 4; i < 17; ++i) {
    size_t expected = 0;
    for (const Review& r : corpus) expected += LengthBins(BinScheme::kStandard)[i - 4].Contains(r.token_count);
    o.Check(report.rows[i].review_count == expected, "bin " + TableOrder()[i]);
  }
}

Outcome TableStructure() {
  Outcome o;
  for (uint64_t seed : {1, 2, 3}) {
    SyntheticCorpusOptions options;
    options.seed = seed;
    const auto corpus = GenerateSyntheticCorpus(options);
    o.Check(corpus.size() == 1000, "synthetic size");
    const auto results = ClassifyCorpus(corpus, {});
    CheckTableStructure(o, corpus, Evaluate(corpus, results));
  }
  // The synthetic corpus is shaped after the published counts; its report
  // must carry the same per-row review counts as the transcribed table.
  const auto reference = ParseReportCsv(ReadFile(kReference / "tool1_table.csv"));
  const auto corpus = GenerateSyntheticCorpus({});
  const auto report = Evaluate(corpus, ClassifyCorpus(corpus, {}));
  o.Check(reference.size() == 17, "reference rows");
  for (size_t i = 0; i < reference.size() && i < report.rows.size(); ++i) {
    o.Check(reference[i].category == report.rows[i].category.Label() &&
                reference[i].review_count == report.rows[i].review_count,
            "reference count for " + reference[i].category);
  }
  o.detail = "synthetic corpus; AMC gold counts are checked by the amc_acceptance test";
  return o;
}

Outcome ComparisonTable() {
  Outcome o;
  const fs::path dir = WorkDir("compare");
  const auto table = csv::Table::FromText(ReadFile(kData / "comparison_table.csv"));
  std::string f1 = "category,f_score\n", f2 = "category,f_score\n";
  for (const auto& row : table.rows()) {
    f1 += csv::FormatRow({row[0], row[1]});
    f2 += csv::FormatRow({row[0], row[2]});
  }
  WriteFile(dir / "tool1.csv", f1);
  WriteFile(dir / "tool2.csv", f2);
  std::ostringstream out, err;
  const int status =
      cli::CmdCompare(dir / "tool1.csv", dir / "tool2.csv", dir / "cmp.csv", out, err);
  o.Check(status == 0, "compare exit " + std::to_string(status) + " " + err.str());
  if (status != 0) return o;
  const auto result = csv::Table::FromText(ReadFile(dir / "cmp.csv"));
  o.Check(result.rows().size() == 17 && table.rows().size() == 17, "17 rows");
  const size_t best = result.RequireColumn("f_best");
  const size_t tie = result.RequireColumn("tie");
  for (size_t i = 0; i < table.rows().size() && i < result.rows().size(); ++i) {
    const auto& want = table.rows()[i];
    const auto& got = result.rows()[i];
    o.Check(got[0] == want[0], "category order at " + std::to_string(i));
    o.Check(std::stod(got[best]) == std::stod(want[3]), "f_best for " + want[0]);
    o.Check((got[tie] == "tie") == (want[1] == want[2]), "tie flag for " + want[0]);
  }
  return o;
}

void CheckZeroRow(Outcome& o, std::vector<Review> corpus) {
  // Make every >=1000-token review wrong under Tool 1, then require the row
  // to be exactly zero.
  const auto predicted = ClassifyCorpus(corpus, {});
  size_t long_reviews = 0;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].token_count < 1000) continue;
    ++long_reviews;
    const Polarity p = predicted[i].predicted;
    corpus[i].gold_overall = p == Polarity::kPositive ? Polarity::kNegative : Polarity::kPositive;
  }
  o.Check(long_reviews > 0, "no >=1000-token reviews");
  for (Aggregation a : {Aggregation::kMacro, Aggregation::kMicro, Aggregation::kWeighted}) {
    const auto report = Evaluate(corpus, predicted, {a});
    const MetricsRow& row = report.rows[4];
    o.Check(row.review_count == long_reviews && row.metrics.precision == 0.0 &&
                row.metrics.recall == 0.0 && row.metrics.f_score == 0.0,
            std::string(">=1000 row not zero under ") + std::string(AggregationName(a)));
  }
  const auto reference = ParseReportCsv(ReadFile(kReference / "tool1_table.csv"));
  o.Check(reference[4].metrics.precision == 0.0 && reference[4].metrics.recall == 0.0 &&
              reference[4].metrics.f_score == 0.0,
          "reference >=1000 row");
}

// Runs the 24-configuration sweep on `corpus_path` against the transcribed
// tables; writes the summary and per-row deltas to `out_dir`.
void CheckSweep(Outcome& o, const fs::path& corpus_path, const fs::path& out_dir) {
  cli::RunConfig config;
  config.corpus_path = corpus_path;
  config.output_dir = out_dir;
  std::ostringstream out, err;
  const int status = cli::CmdSweep(config, kReference / "tool1_table.csv",
                                   kReference / "tool2_table.csv", out, err);
  o.Check(status == 0, "sweep exit " + std::to_string(status) + " " + err.str());
  if (status != 0) return;
  const auto summary = csv::Table::FromText(ReadFile(out_dir / cli::kSweepSummaryFile));
  o.Check(summary.rows().size() == 24, "sweep summary rows");
  const auto deltas = csv::Table::FromText(ReadFile(out_dir / cli::kSweepDeltasFile));
  o.Check(deltas.rows().size() == 24 * 17, "sweep delta rows");
  o.Check(out.str().find("closest: tool1/") != std::string::npos &&
              out.str().find("closest: tool2/") != std::string::npos,
          "closest configurations not reported");
  std::string closest;
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("closest: ", 0) == 0) closest += (closest.empty() ? "" : "; ") + line.substr(9);
  }
  o.detail = closest + "; deltas in " + out_dir.string();
}

Outcome Reproduction(const fs::path& out_root) {
  Outcome o;
  const fs::path dir = out_root / "sweep_synthetic";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto corpus = GenerateSyntheticCorpus({});
  WriteCorpus(dir / "corpus.csv", corpus);
  CheckSweep(o, dir / "corpus.csv", dir);
  CheckZeroRow(o, corpus);
  if (o.pass) o.detail = "synthetic corpus, published values not compared; " + o.detail;
  return o;
}

Outcome Determinism() {
  Outcome o;
  const fs::path dir = WorkDir("determinism");
  WriteCorpus(dir / "corpus.csv", GenerateSyntheticCorpus({}));
  double worst = 0;
  for (const char* sub : {"a", "b"}) {
    const auto start = std::chrono::steady_clock::now();
    cli::RunConfig config;
    config.corpus_path = dir / "corpus.csv";
    config.output_dir = dir / sub;
    std::ostringstream out, err;
    o.Check(cli::CmdClassify(config, out, err) == 0, "classify: " + err.str());
    o.Check(cli::CmdEvaluate(config, config.output_dir / cli::kClassificationsFile, out, err) == 0,
            "evaluate: " + err.str());
    worst = std::max(
        worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  o.Check(worst < 5.0, "single run over 5 s");
  for (const char* file : {cli::kClassificationsFile, cli::kReportFile}) {
    o.Check(ReadFile(dir / "a" / file) == ReadFile(dir / "b" / file),
            std::string(file) + " differs between runs");
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "slowest run %.3fs (limit 5s)", worst);
  if (o.pass) o.detail = buf;
  return o;
}

// Checks that need the real corpus.
int RunAmc(const fs::path& out_root) {
  const char* path = std::getenv("AMC_CORPUS");
  if (path == nullptr || *path == '\0') {
    std::printf("AMC_CORPUS is not set; skipping AMC checks\n");
    return 77;
  }
  const std::vector<Review> corpus = LoadCorpus(path);
  bool ok = RunCriterion({5, "table-structure (AMC)", 5.0, [&] {
                            Outcome o;
                            o.Check(corpus.size() == 1000, "corpus size");
                            size_t counts[3] = {0, 0, 0};
                            for (const Review& r : corpus) ++counts[PolarityIndex(r.gold_overall)];
                            o.Check(counts[0] == 702 && counts[1] == 171 && counts[2] == 127,
                                    "gold counts " + std::to_string(counts[0]) + "/" +
                                        std::to_string(counts[1]) + "/" +
                                        std::to_string(counts[2]));
                            CheckTableStructure(o, corpus, Evaluate(corpus, ClassifyCorpus(corpus, {})));
                            return o;
                          }});
  ok &= RunCriterion({7, "sweep (AMC)", 60.0, [&] {
                        Outcome o;
                        const fs::path dir = out_root / "sweep_amc";
                        fs::remove_all(dir);
                        fs::create_directories(dir);
                        CheckSweep(o, path, dir);
                        return o;
                      }});
  return ok ? 0 : 1;
}

}  // namespace
}  // namespace arasent

int main(int argc, char** argv) {
  using namespace arasent;
  bool amc = false;
  fs::path out_root = fs::current_path() / "acceptance_out";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--amc") {
      amc = true;
    } else if (arg == "--out" && i + 1 < argc) {
      out_root = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--amc] [--out DIR]\n", argv[0]);
      return 2;
    }
  }
  fs::create_directories(out_root);
  if (amc) return RunAmc(out_root);

  const std::vector<Criterion> criteria = {
      {1, "scoring-exactness", 1.0, ScoringExactness},
      {2, "sign-rule", 1.0, SignRule},
      {3, "metaphor-adjustment", 1.0, MetaphorAdjustment},
      {4, "metric-oracle", 10.0, MetricOracle},
      {5, "table-structure", 5.0, TableStructure},
      {6, "comparison-table", 1.0, ComparisonTable},
      {7, "reproduction-sweep", 30.0, [&] { return Reproduction(out_root); }},
      {8, "determinism", 10.0, Determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) failed += !RunCriterion(c);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

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

#include "arasent/cli.h"

#include <array>
#include <functional>
#include <map>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "arasent/csv.h"
#include "arasent/error.h"
#include "arasent/sweep.h"
#include "arasent/synthetic.h"

namespace arasent::cli {
namespace {

std::string OneLine(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

int Guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const Error& e) {
    err << "error[" << ErrorCodeName(e.code()) << "]: " << OneLine(e.what()) << "\n";
    return ExitStatusFor(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error[IoError]: " << OneLine(e.what()) << "\n";
    return 2;
  }
}

void EnsureDirectory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::kIoError, "cannot create output directory '" + dir.string() + "'");
  }
}

std::vector<ClassificationResult> Classify(const RunConfig& config,
                                           const std::vector<Review>& corpus,
                                           std::ostream& err) {
  std::vector<ParseWarning> warnings;
  auto results = ClassifyCorpus(corpus, config.classifier_options(), &warnings);
  if (!warnings.empty()) {
    err << "warning: " << warnings.size()
        << " tokens without a tag separator were kept untagged\n";
  }
  return results;
}

}  // namespace

ClassifierOptions RunConfig::classifier_options() const {
  ClassifierOptions options;
  options.tool = tool;
  options.tag_stream.candidates = candidate_policy;
  options.metaphor_neutral = metaphor_neutral_policy;
  options.format_override = tagged_format_override;
  return options;
}

EvaluationOptions RunConfig::evaluation_options() const {
  return {aggregation, bins, gold_reference};
}

int CmdPreprocess(const std::filesystem::path& input, const std::string& map_spec,
                  const std::filesystem::path& out_dir, size_t batch_size,
                  std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const SubstitutionMap map =
        map_spec.empty() ? DefaultSubstitutionMap() : ParseSubstitutionSpec(map_spec);
    std::vector<Review> reviews = LoadCorpus(input);
    for (Review& review : reviews) {
      try {
        review.raw_text = PreprocessForTagger(review.raw_text, map);
      } catch (const Error& e) {
        throw Error(e.code(), "review '" + review.id + "': " + e.what());
      }
    }
    const std::vector<Batch> batches = BatchSplit(reviews, batch_size);
    EnsureDirectory(out_dir);
    WriteCorpus(out_dir / kPreprocessedFile, reviews);
    for (const Batch& batch : batches) {
      WriteCorpus(out_dir / BatchFileName(batch.index), batch.reviews);
    }
    out << "batches: " << batches.size() << "\n";
  });
}

int CmdClassify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const std::vector<Review> corpus = LoadCorpus(config.corpus_path);
    const auto results = Classify(config, corpus, err);
    EnsureDirectory(config.output_dir);
    WriteFile(config.output_dir / kClassificationsFile, FormatClassificationsCsv(results));
    std::array<size_t, 3> counts{};
    for (const auto& r : results) ++counts[PolarityIndex(r.predicted)];
    out << "classified " << results.size() << " reviews: " << counts[0] << " positive, "
        << counts[1] << " negative, " << counts[2] << " neutral\n";
  });
}

int CmdEvaluate(const RunConfig& config,
                const std::optional<std::filesystem::path>& classifications,
                std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const std::vector<Review> corpus = LoadCorpus(config.corpus_path);
    const std::vector<ClassificationResult> results =
        classifications ? ParseClassificationsCsv(ReadFile(*classifications))
                        : Classify(config, corpus, err);
    const EvaluationReport report = Evaluate(corpus, results, config.evaluation_options());
    EnsureDirectory(config.output_dir);
    WriteFile(config.output_dir / kReportFile, FormatReportCsv(report));
    out << RenderReportTable(report);
  });
}

int CmdCompare(const std::filesystem::path& report1, const std::filesystem::path& report2,
               const std::filesystem::path& out_file, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const FScoreColumn first = ParseFScoreColumn(ReadFile(report1));
    const FScoreColumn second = ParseFScoreColumn(ReadFile(report2));
    const std::vector<ComparisonRow> rows = Compare(first, second);
    if (out_file.has_parent_path()) EnsureDirectory(out_file.parent_path());
    WriteFile(out_file, FormatComparisonCsv(rows));
    out << RenderComparisonTable(rows);
  });
}

int CmdSweep(const RunConfig& config,
             const std::optional<std::filesystem::path>& reference_tool1,
             const std::optional<std::filesystem::path>& reference_tool2,
             std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const std::vector<Review> corpus = LoadCorpus(config.corpus_path);
    SweepOptions options;
    options.bins = config.bins;
    options.metaphor_neutral = config.metaphor_neutral_policy;
    if (reference_tool1) options.reference_tool1 = ParseReportCsv(ReadFile(*reference_tool1));
    if (reference_tool2) options.reference_tool2 = ParseReportCsv(ReadFile(*reference_tool2));
    const SweepOutcome outcome = RunSweep(corpus, options);
    EnsureDirectory(config.output_dir);
    WriteFile(config.output_dir / kSweepSummaryFile, FormatSweepSummaryCsv(outcome));
    WriteFile(config.output_dir / kSweepDeltasFile, FormatSweepDeltasCsv(outcome));
    out << "evaluated " << outcome.results.size() << " configurations\n";
    for (const auto& closest : {outcome.closest_tool1, outcome.closest_tool2}) {
      if (!closest) continue;
      const SweepResult& r = outcome.results[*closest];
      out << "closest: " << r.config.Name() << " (mean |delta| " << *r.mean_abs_delta
          << ")\n";
    }
  });
}

int CmdSynth(uint64_t seed, const std::filesystem::path& out_file, std::ostream& out,
             std::ostream& err) {
  return Guarded(err, [&] {
    SyntheticCorpusOptions options;
    options.seed = seed;
    const std::vector<Review> corpus = GenerateSyntheticCorpus(options);
    if (out_file.has_parent_path()) EnsureDirectory(out_file.parent_path());
    WriteCorpus(out_file, corpus);
    out << "wrote " << corpus.size() << " reviews\n";
  });
}

int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rule-based sentiment classification of semantically tagged reviews"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string out_path;
  std::string format_override;
  app.add_option("--corpus", config.corpus_path, "Corpus CSV");
  app.add_option("--tool", config.tool, "semantic (tool 1) or metaphor (tool 2)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Tool>{{"semantic", Tool::kSemanticOnly},
                                      {"tool1", Tool::kSemanticOnly},
                                      {"metaphor", Tool::kWithMetaphor},
                                      {"tool2", Tool::kWithMetaphor}},
          CLI::ignore_case));
  app.add_option("--aggregation", config.aggregation, "macro, micro or weighted")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Aggregation>{{"macro", Aggregation::kMacro},
                                             {"micro", Aggregation::kMicro},
                                             {"weighted", Aggregation::kWeighted}},
          CLI::ignore_case));
  app.add_option("--candidate-policy", config.candidate_policy, "first or all")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, CandidatePolicy>{{"first", CandidatePolicy::kFirstTag},
                                                 {"all", CandidatePolicy::kAllTags}},
          CLI::ignore_case));
  app.add_option("--metaphor-neutral-policy", config.metaphor_neutral_policy,
                 "zero-contribution or zero-total")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, MetaphorNeutralPolicy>{
              {"zero-contribution", MetaphorNeutralPolicy::kZeroContribution},
              {"zero-total", MetaphorNeutralPolicy::kZeroTotal}},
          CLI::ignore_case));
  app.add_option("--gold-reference", config.gold_reference, "overall or metaphor")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, GoldReference>{{"overall", GoldReference::kOverall},
                                               {"metaphor", GoldReference::kMetaphor}},
          CLI::ignore_case));
  app.add_option("--bins", config.bins, "standard or complete")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, BinScheme>{{"standard", BinScheme::kStandard},
                                           {"complete", BinScheme::kComplete}},
          CLI::ignore_case));
  app.add_option("--tagged-format", format_override,
                 "Parse all tag streams as horizontal, vertical or xml");
  app.add_option("--out", out_path, "Output directory (output file for compare/synth)");

  auto* preprocess = app.add_subcommand("preprocess", "Substitute punctuation and batch");
  std::string map_spec;
  size_t batch_size = kDefaultBatchSize;
  preprocess->add_option("--map", map_spec, "CHAR=LETTERS[,...]; default .=FS,!=EX");
  preprocess->add_option("--batch-size", batch_size)->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Classify every review");

  auto* evaluate = app.add_subcommand("evaluate", "Score predictions against gold labels");
  std::string classifications;
  evaluate->add_option("--classifications", classifications,
                       "Existing classifications.csv; classify on the fly when absent");

  auto* compare = app.add_subcommand("compare", "Highest F-score per category");
  std::string report1, report2;
  compare->add_option("report1", report1)->required();
  compare->add_option("report2", report2)->required();

  auto* sweep = app.add_subcommand("sweep", "Evaluate every interpretation setting");
  std::string reference1, reference2;
  sweep->add_option("--reference-tool1", reference1, "Reference report CSV for tool 1");
  sweep->add_option("--reference-tool2", reference2, "Reference report CSV for tool 2");

  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  uint64_t seed = 1;
  synth->add_option("--seed", seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // argv[0]
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[Usage]: " << OneLine(e.what()) << "\n";
    return 2;
  }

  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
  };
  const int status = Guarded(err, [&] {
    if (!format_override.empty()) config.tagged_format_override = ParseTaggedFormat(format_override);
    if (!out_path.empty()) config.output_dir = out_path;
    if (*preprocess || *classify || *evaluate || *sweep) {
      require(!config.corpus_path.empty(), "--corpus is required");
    }
    if (*synth) config.seed = seed;
    if (*compare || *synth) require(!out_path.empty(), "--out is required");
  });
  if (status != 0) return status;

  if (*preprocess) {
    return CmdPreprocess(config.corpus_path, map_spec, config.output_dir, batch_size, out, err);
  }
  if (*classify) return CmdClassify(config, out, err);
  if (*evaluate) {
    std::optional<std::filesystem::path> path;
    if (!classifications.empty()) path = classifications;
    return CmdEvaluate(config, path, out, err);
  }
  if (*compare) return CmdCompare(report1, report2, out_path, out, err);
  if (*sweep) {
    std::optional<std::filesystem::path> r1, r2;
    if (!reference1.empty()) r1 = reference1;
    if (!reference2.empty()) r2 = reference2;
    return CmdSweep(config, r1, r2, out, err);
  }
  return CmdSynth(*config.seed, out_path, out, err);
}

}  // namespace arasent::cli

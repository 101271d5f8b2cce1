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

#ifndef ARASENT_CLI_H_
#define ARASENT_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arasent/classifier.h"
#include "arasent/corpus.h"
#include "arasent/evaluation.h"

namespace arasent::cli {

struct RunConfig {
  std::filesystem::path corpus_path;
  std::optional<TaggedFormat> tagged_format_override;
  Tool tool = Tool::kSemanticOnly;
  Aggregation aggregation = Aggregation::kMacro;
  CandidatePolicy candidate_policy = CandidatePolicy::kFirstTag;
  MetaphorNeutralPolicy metaphor_neutral_policy = MetaphorNeutralPolicy::kZeroContribution;
  BinScheme bins = BinScheme::kStandard;
  GoldReference gold_reference = GoldReference::kOverall;
  std::filesystem::path output_dir = ".";
  std::optional<uint64_t> seed;

  ClassifierOptions classifier_options() const;
  EvaluationOptions evaluation_options() const;
};

// File names written under RunConfig::output_dir.
inline constexpr char kClassificationsFile[] = "classifications.csv";
inline constexpr char kReportFile[] = "report.csv";
inline constexpr char kPreprocessedFile[] = "preprocessed.csv";
inline constexpr char kSweepSummaryFile[] = "sweep_summary.csv";
inline constexpr char kSweepDeltasFile[] = "sweep_deltas.csv";

// Each command returns the process exit status: 0 on success, otherwise the
// status of the failure's ErrorCode. Failures print one line to err of the
// form "error[Code]: message".

// Substitutes sentence-break characters in the text column, then writes
// preprocessed.csv and batch_NNN.csv files to out_dir.
int CmdPreprocess(const std::filesystem::path& input, const std::string& map_spec,
                  const std::filesystem::path& out_dir, size_t batch_size,
                  std::ostream& out, std::ostream& err);

// Writes classifications.csv.
int CmdClassify(const RunConfig& config, std::ostream& out, std::ostream& err);

// Writes report.csv and prints the report table. Reuses an existing
// classifications file when given, otherwise classifies the corpus.
int CmdEvaluate(const RunConfig& config,
                const std::optional<std::filesystem::path>& classifications,
                std::ostream& out, std::ostream& err);

int CmdCompare(const std::filesystem::path& report1, const std::filesystem::path& report2,
               const std::filesystem::path& out_file, std::ostream& out, std::ostream& err);

// Evaluates every SweepConfig for both tools; writes sweep_summary.csv and
// sweep_deltas.csv. Reference tables are report CSVs.
int CmdSweep(const RunConfig& config,
             const std::optional<std::filesystem::path>& reference_tool1,
             const std::optional<std::filesystem::path>& reference_tool2,
             std::ostream& out, std::ostream& err);

// Writes a synthetic corpus CSV.
int CmdSynth(uint64_t seed, const std::filesystem::path& out_file, std::ostream& out,
             std::ostream& err);

// Full command line, including argv[0].
int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arasent::cli

#endif  // ARASENT_CLI_H_

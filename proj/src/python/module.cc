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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "arasent/classifier.h"
#include "arasent/cli.h"
#include "arasent/corpus.h"
#include "arasent/error.h"
#include "arasent/evaluation.h"
#include "arasent/synthetic.h"
#include "arasent/tagset.h"

namespace py = pybind11;

namespace arasent {
namespace {

using Matrix = std::vector<std::vector<uint64_t>>;

ConfusionMatrix ToMatrix(const Matrix& rows) {
  if (rows.size() != 3) throw Error(ErrorCode::kInvalidArgument, "matrix must be 3x3");
  ConfusionMatrix m;
  for (Polarity g : kAllPolarities) {
    const auto& row = rows[PolarityIndex(g)];
    if (row.size() != 3) throw Error(ErrorCode::kInvalidArgument, "matrix must be 3x3");
    for (Polarity p : kAllPolarities) m.Add(g, p, row[PolarityIndex(p)]);
  }
  return m;
}

Matrix FromMatrix(const ConfusionMatrix& m) {
  Matrix rows(3, std::vector<uint64_t>(3));
  for (Polarity g : kAllPolarities) {
    for (Polarity p : kAllPolarities) rows[PolarityIndex(g)][PolarityIndex(p)] = m.at(g, p);
  }
  return rows;
}

std::tuple<double, double, double> AsTuple(const Metrics& m) {
  return {m.precision, m.recall, m.f_score};
}

}  // namespace
}  // namespace arasent

PYBIND11_MODULE(_arasent, m) {
  using namespace arasent;
  m.doc() = "Emotion-tag sentiment classification and evaluation";

  static py::exception<Error> error_type(m, "ArasentError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(std::string(e.what()));
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::enum_<Polarity>(m, "Polarity")
      .value("POSITIVE", Polarity::kPositive)
      .value("NEGATIVE", Polarity::kNegative)
      .value("NEUTRAL", Polarity::kNeutral);
  py::enum_<TagSign>(m, "TagSign")
      .value("NONE", TagSign::kNone)
      .value("PLUS", TagSign::kPlus)
      .value("MINUS", TagSign::kMinus);
  py::enum_<MetaphorPolarity>(m, "MetaphorPolarity")
      .value("POSITIVE", MetaphorPolarity::kPositive)
      .value("NEGATIVE", MetaphorPolarity::kNegative)
      .value("NEUTRAL", MetaphorPolarity::kNeutral)
      .value("NULL", MetaphorPolarity::kNull);
  py::enum_<TaggedFormat>(m, "TaggedFormat")
      .value("HORIZONTAL", TaggedFormat::kHorizontal)
      .value("VERTICAL", TaggedFormat::kVertical)
      .value("XML", TaggedFormat::kXml);
  py::enum_<CandidatePolicy>(m, "CandidatePolicy")
      .value("FIRST_TAG", CandidatePolicy::kFirstTag)
      .value("ALL_TAGS", CandidatePolicy::kAllTags);
  py::enum_<Tool>(m, "Tool")
      .value("SEMANTIC_ONLY", Tool::kSemanticOnly)
      .value("WITH_METAPHOR", Tool::kWithMetaphor);
  py::enum_<MetaphorNeutralPolicy>(m, "MetaphorNeutralPolicy")
      .value("ZERO_CONTRIBUTION", MetaphorNeutralPolicy::kZeroContribution)
      .value("ZERO_TOTAL", MetaphorNeutralPolicy::kZeroTotal);
  py::enum_<Aggregation>(m, "Aggregation")
      .value("MACRO", Aggregation::kMacro)
      .value("MICRO", Aggregation::kMicro)
      .value("WEIGHTED", Aggregation::kWeighted);
  py::enum_<BinScheme>(m, "BinScheme")
      .value("STANDARD", BinScheme::kStandard)
      .value("COMPLETE", BinScheme::kComplete);
  py::enum_<GoldReference>(m, "GoldReference")
      .value("OVERALL", GoldReference::kOverall)
      .value("METAPHOR", GoldReference::kMetaphor);

  py::class_<SemanticTag>(m, "SemanticTag")
      .def_readonly("field_letter", &SemanticTag::field_letter)
      .def_readonly("category_code", &SemanticTag::category_code)
      .def_readonly("sign", &SemanticTag::sign)
      .def_readonly("intensity", &SemanticTag::intensity)
      .def_property_readonly("raw", &SemanticTag::raw)
      .def("__eq__", [](const SemanticTag& a, const SemanticTag& b) { return a == b; })
      .def("__repr__", [](const SemanticTag& t) { return "SemanticTag('" + t.raw() + "')"; });

  m.def("parse_tag", &ParseTag, py::arg("raw"));
  m.def("is_emotion_tag", &IsEmotionTag, py::arg("tag"));
  m.def("tag_polarity", &TagPolarity, py::arg("tag"));

  py::class_<TaggedToken>(m, "TaggedToken")
      .def_readonly("surface", &TaggedToken::surface)
      .def_readonly("tags", &TaggedToken::tags)
      .def("__repr__", [](const TaggedToken& t) {
        return "TaggedToken(" + RenderHorizontal(std::span(&t, 1)) + ")";
      });

  auto def_stream_parser = [&m](const char* name, auto fn) {
    m.def(
        name,
        [fn](const std::string& text, CandidatePolicy candidates) {
          return fn(text, TagStreamOptions{candidates}, nullptr);
        },
        py::arg("text"), py::arg("candidates") = CandidatePolicy::kFirstTag);
  };
  def_stream_parser("parse_horizontal", &ParseHorizontal);
  def_stream_parser("parse_vertical", &ParseVertical);
  def_stream_parser("parse_xml", &ParseXml);

  py::class_<MetaphorAnnotation>(m, "MetaphorAnnotation")
      .def(py::init<>())
      .def_readwrite("surface", &MetaphorAnnotation::surface)
      .def_readwrite("gold_polarity", &MetaphorAnnotation::gold_polarity);

  py::class_<Review>(m, "Review")
      .def(py::init<>())
      .def_readwrite("id", &Review::id)
      .def_readwrite("raw_text", &Review::raw_text)
      .def_readwrite("token_count", &Review::token_count)
      .def_readwrite("gold_overall", &Review::gold_overall)
      .def_readwrite("tagged_text", &Review::tagged_text)
      .def_readwrite("tagged_format", &Review::tagged_format)
      .def_readwrite("metaphors", &Review::metaphors);

  m.def("count_tokens", [](const std::string& text) { return CountTokens(text); });
  m.def("load_corpus", [](const std::filesystem::path& p) { return LoadCorpus(p); },
        py::arg("path"));
  m.def("parse_corpus", [](const std::string& text) { return ParseCorpus(text); },
        py::arg("csv_text"));
  m.def("format_corpus", [](const std::vector<Review>& r) { return FormatCorpus(r); });
  m.def(
      "preprocess_for_tagger",
      [](const std::string& text, const std::string& spec) {
        return PreprocessForTagger(text, spec.empty() ? DefaultSubstitutionMap()
                                                      : ParseSubstitutionSpec(spec));
      },
      py::arg("text"), py::arg("map_spec") = "");
  m.def(
      "batch_split",
      [](const std::vector<Review>& reviews, size_t batch_size) {
        std::vector<std::vector<Review>> out;
        for (Batch& b : BatchSplit(reviews, batch_size)) out.push_back(std::move(b.reviews));
        return out;
      },
      py::arg("reviews"), py::arg("batch_size") = kDefaultBatchSize);
  m.def(
      "synthetic_corpus",
      [](uint64_t seed) {
        SyntheticCorpusOptions options;
        options.seed = seed;
        return GenerateSyntheticCorpus(options);
      },
      py::arg("seed") = 1);

  // Scores cross the boundary as floats; every value is an exact multiple of
  // 0.5.
  m.def("tag_score", [](const SemanticTag& t) { return TagScore(t).value(); });
  m.def("score_tags", [](const std::vector<SemanticTag>& tags) {
    return ScoreTags(tags).score.value();
  });
  m.def("classify", [](double score) {
    return score > 0 ? Polarity::kPositive
                     : score < 0 ? Polarity::kNegative : Polarity::kNeutral;
  });
  m.def("metaphor_contribution", [](MetaphorPolarity p) {
    return MetaphorContribution({"", p}).value();
  });
  m.def("gold_to_score", [](Polarity p) { return GoldToScore(p).value(); });

  py::class_<ClassificationResult>(m, "ClassificationResult")
      .def_readonly("review_id", &ClassificationResult::review_id)
      .def_property_readonly("base_score",
                             [](const ClassificationResult& r) { return r.base_score.value(); })
      .def_property_readonly(
          "metaphor_contribution",
          [](const ClassificationResult& r) { return r.metaphor_contribution.value(); })
      .def_property_readonly("final_score",
                             [](const ClassificationResult& r) { return r.final_score.value(); })
      .def_readonly("predicted", &ClassificationResult::predicted)
      .def_readonly("counted_tags", &ClassificationResult::counted_tags);

  m.def(
      "classify_corpus",
      [](const std::vector<Review>& corpus, Tool tool, CandidatePolicy candidates,
         MetaphorNeutralPolicy neutral) {
        ClassifierOptions options;
        options.tool = tool;
        options.tag_stream.candidates = candidates;
        options.metaphor_neutral = neutral;
        return ClassifyCorpus(corpus, options);
      },
      py::arg("corpus"), py::arg("tool") = Tool::kSemanticOnly,
      py::arg("candidates") = CandidatePolicy::kFirstTag,
      py::arg("metaphor_neutral") = MetaphorNeutralPolicy::kZeroContribution);

  m.def("confusion", [](const std::vector<std::pair<Polarity, Polarity>>& pairs) {
    return FromMatrix(Confusion(pairs));
  });
  m.def("class_metrics", [](const Matrix& mat, Polarity target) {
    return AsTuple(ClassMetrics(ToMatrix(mat), target));
  });
  m.def(
      "aggregate_metrics",
      [](const Matrix& mat, Aggregation a) { return AsTuple(AggregateMetrics(ToMatrix(mat), a)); },
      py::arg("matrix"), py::arg("aggregation") = Aggregation::kMacro);
  m.def("f_score", &FScore, py::arg("precision"), py::arg("recall"));

  m.def(
      "evaluate",
      [](const std::vector<Review>& corpus, const std::vector<ClassificationResult>& results,
         Aggregation aggregation, BinScheme bins, GoldReference gold) {
        const EvaluationReport report = Evaluate(corpus, results, {aggregation, bins, gold});
        py::list rows;
        for (const MetricsRow& row : report.rows) {
          py::dict d;
          d["category"] = row.category.Label();
          d["review_count"] = row.review_count;
          d["precision"] = row.metrics.precision;
          d["recall"] = row.metrics.recall;
          d["f_score"] = row.metrics.f_score;
          rows.append(d);
        }
        return rows;
      },
      py::arg("corpus"), py::arg("results"), py::arg("aggregation") = Aggregation::kMacro,
      py::arg("bins") = BinScheme::kStandard, py::arg("gold") = GoldReference::kOverall);

  m.def("compare", [](const FScoreColumn& tool1, const FScoreColumn& tool2) {
    py::list rows;
    for (const ComparisonRow& r : Compare(tool1, tool2)) {
      rows.append(py::make_tuple(r.category, r.f_tool1, r.f_tool2, r.f_best, r.tie));
    }
    return rows;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        std::vector<std::string> argv = {"arasent"};
        argv.insert(argv.end(), args.begin(), args.end());
        const int status = cli::Main(argv, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"));
}

# Copyright 2026 The Arasent Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pathlib

import pytest

import arasent

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def test_parse_tag():
    tag = arasent.parse_tag("E4.1++")
    assert tag.field_letter == "E"
    assert tag.category_code == "4.1"
    assert tag.sign == arasent.TagSign.PLUS
    assert tag.intensity == 2
    assert tag.raw == "E4.1++"
    assert arasent.is_emotion_tag(tag)
    assert arasent.tag_polarity(tag) == arasent.Polarity.POSITIVE


@pytest.mark.parametrize("raw, code", [("", "EmptyTag"), ("e4+", "BadLeadingChar"),
                                       ("E4+-", "MixedSigns"), ("E4++++", "ExcessIntensity")])
def test_parse_tag_errors(raw, code):
    with pytest.raises(arasent.ArasentError) as info:
        arasent.parse_tag(raw)
    assert info.value.code == code
    assert isinstance(info.value, ValueError)


def test_scores():
    weights = {"E4.1+": 0.5, "E4.1++": 1.0, "E4.1+++": 1.5, "E4.1-": -0.5,
               "E4.1--": -1.0, "E4.1---": -1.5, "E4.1": 0.0}
    for raw, weight in weights.items():
        assert arasent.tag_score(arasent.parse_tag(raw)) == weight
    tags = [arasent.parse_tag(t) for t in ("E4.1+", "Z5", "E2--", "E1+++")]
    assert arasent.score_tags(tags) == 1.0
    assert arasent.classify(0.5) == arasent.Polarity.POSITIVE
    assert arasent.classify(0.0) == arasent.Polarity.NEUTRAL
    assert arasent.metaphor_contribution(arasent.MetaphorPolarity.NEGATIVE) == -2.0
    assert arasent.gold_to_score(arasent.Polarity.NEGATIVE) == -1.0


def test_tag_streams():
    tokens = arasent.parse_horizontal("كتاب_Z5 رائع_O4.2+/E4.1+", arasent.CandidatePolicy.ALL_TAGS)
    assert [t.surface for t in tokens] == ["كتاب", "رائع"]
    assert [t.raw for t in tokens[1].tags] == ["O4.2+", "E4.1+"]
    assert len(arasent.parse_vertical("رائع\tE4.1+\n")) == 1
    assert arasent.parse_xml('<text><w tag="E2-">ممل</w></text>')[0].tags[0].raw == "E2-"


def test_metrics():
    pairs = [(arasent.Polarity.POSITIVE, arasent.Polarity.POSITIVE),
             (arasent.Polarity.POSITIVE, arasent.Polarity.NEGATIVE),
             (arasent.Polarity.NEGATIVE, arasent.Polarity.NEGATIVE)]
    matrix = arasent.confusion(pairs)
    assert sum(map(sum, matrix)) == 3
    p, r, f = arasent.class_metrics(matrix, arasent.Polarity.POSITIVE)
    assert (p, r) == (1.0, 0.5)
    assert f == pytest.approx(2 / 3)
    assert arasent.f_score(0.0, 0.0) == 0.0
    rows = arasent.compare([("Neutral reviews", 0.18936877)], [("Neutral reviews", 0.17708333)])
    assert rows == [("Neutral reviews", 0.18936877, 0.17708333, 0.18936877, False)]


def test_pipeline_on_fixture():
    corpus = arasent.load_corpus(str(DATA / "ten_reviews.csv"))
    assert len(corpus) == 10
    results = arasent.classify_corpus(corpus)
    assert [r.review_id for r in results] == [r.id for r in corpus]
    assert results[0].final_score == 0.5
    rows = arasent.evaluate(corpus, results)
    assert len(rows) == 17
    assert rows[0]["category"] == "All reviews"
    golden = (DATA / "ten_reviews_report.golden.csv").read_text().splitlines()[1]
    assert golden.startswith("All reviews,10,")
    assert float(golden.split(",")[-1]) == pytest.approx(rows[0]["f_score"], abs=5e-9)

    tool2 = arasent.classify_corpus(corpus, arasent.Tool.WITH_METAPHOR)
    assert tool2[1].final_score == -3.0


def test_synthetic_and_batches():
    corpus = arasent.synthetic_corpus(1)
    assert len(corpus) == 1000
    assert [len(b) for b in arasent.batch_split(corpus)] == [100] * 10
    again = arasent.parse_corpus(arasent.format_corpus(corpus))
    assert [r.id for r in again] == [r.id for r in corpus]


def test_preprocess():
    assert arasent.preprocess_for_tagger("جميل.") == "جميل FS "
    with pytest.raises(arasent.ArasentError) as info:
        arasent.preprocess_for_tagger("FS.")
    assert info.value.code == "CollidingPlaceholder"


def test_run_cli(tmp_path):
    status, out, err = arasent.run_cli(["evaluate", "--corpus", str(DATA / "ten_reviews.csv"),
                                        "--out", str(tmp_path)])
    assert status == 0, err
    assert "All reviews" in out
    assert (tmp_path / "report.csv").read_text() == (
        DATA / "ten_reviews_report.golden.csv").read_text()
    status, _, err = arasent.run_cli(["classify", "--corpus", str(tmp_path / "missing.csv"),
                                      "--out", str(tmp_path)])
    assert status == 2
    assert err.startswith("error[IoError]: ")

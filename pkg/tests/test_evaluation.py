"""Faithfulness/relevancy scoring and the evaluation harness."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from jurisrag.chunking import Chunk
from jurisrag.corpus import Status
from jurisrag.embedding import EmbedderConfig
from jurisrag.evaluation import (
    Category,
    Claim,
    EvalRecord,
    LlmJudge,
    NoClaimsError,
    StubJudge,
    Subcategory,
    Verdict,
    compute_aggregates,
    decompose_claims,
    load_queries,
    render_table,
    run_eval,
    score_faithfulness,
    score_relevancy,
    write_report,
)
from jurisrag.index import ScoredChunk
from jurisrag.llm import LlmClientConfig

SMOKE_QUERIES = Path(__file__).resolve().parent / "data" / "eval_smoke.jsonl"


def context(text: str) -> ScoredChunk:
    return ScoredChunk(
        Chunk(
            chunk_id="doc:0000",
            doc_id="doc",
            entity="Atlantis",
            title="Atlantis AI Act",
            year=2020,
            status=Status.ENACTED,
            structural_ref=None,
            ordinal=0,
            text=text,
        ),
        0.1,
    )


class TestStubJudge:
    def test_claims_are_sentences(self):
        judge = StubJudge()
        claims = judge.split_claims("First thing. Second thing! Third thing?")
        assert claims == ["First thing.", "Second thing!", "Third thing?"]

    def test_support_is_substring_containment(self):
        judge = StubJudge()
        contexts = ["The controller shall erase personal data without delay."]
        assert judge.is_supported("erase personal data", contexts) is Verdict.SUPPORTED
        assert judge.is_supported("retain data forever", contexts) is Verdict.UNSUPPORTED

    def test_regenerated_questions_echo_answer(self):
        judge = StubJudge()
        assert judge.regenerate_questions("the answer", 3) == ["the answer"] * 3

    @pytest.mark.parametrize(
        "text",
        [
            "The sources do not contain this information.",
            "This question cannot be answered from the sources.",
            "No sources were retrieved; nothing to cite.",
            "The corpus DOES NOT CONTAIN relevant law.",
        ],
    )
    def test_noncommittal_markers(self, text):
        assert StubJudge().is_noncommittal(text) is True

    def test_committal_answer(self):
        assert StubJudge().is_noncommittal("Erasure is required by Article 17.") is False


class TestFaithfulness:
    def test_three_of_four_supported_is_exactly_three_quarters(self):
        contexts = [
            context("Erasure must occur without undue delay. Consent may be withdrawn."),
            context("Controllers shall inform other controllers of erasure requests."),
        ]
        claims = [
            Claim("Erasure must occur without undue delay."),
            Claim("Consent may be withdrawn."),
            Claim("Controllers shall inform other controllers of erasure requests."),
            Claim("Fines reach four percent of global turnover."),
        ]
        score = score_faithfulness(claims, contexts, StubJudge())
        assert score == 0.75
        assert [c.verdict for c in claims] == [
            Verdict.SUPPORTED,
            Verdict.SUPPORTED,
            Verdict.SUPPORTED,
            Verdict.UNSUPPORTED,
        ]

    def test_all_supported(self):
        contexts = [context("Alpha beta gamma.")]
        claims = [Claim("Alpha beta gamma.")]
        assert score_faithfulness(claims, contexts, StubJudge()) == 1.0

    def test_none_supported(self):
        contexts = [context("Alpha.")]
        claims = [Claim("Omega."), Claim("Psi.")]
        assert score_faithfulness(claims, contexts, StubJudge()) == 0.0

    def test_zero_claims_raises(self):
        with pytest.raises(NoClaimsError):
            score_faithfulness([], [context("text")], StubJudge())

    def test_decompose_claims_uses_judge(self):
        claims = decompose_claims("One. Two.", StubJudge())
        assert [c.text for c in claims] == ["One.", "Two."]
        assert all(c.verdict is None for c in claims)


class TestRelevancy:
    def embedder(self) -> EmbedderConfig:
        return EmbedderConfig(dim=256)

    def test_noncommittal_scores_zero(self):
        score = score_relevancy(
            "What does Article 17 require?",
            "The sources do not contain this information.",
            StubJudge(),
            self.embedder(),
        )
        assert score == 0.0

    def test_restated_question_scores_one(self):
        question = "What does Article 17 of the GDPR require?"
        score = score_relevancy(question, question, StubJudge(), self.embedder())
        assert score == pytest.approx(1.0, abs=1e-6)

    def test_unrelated_answer_scores_lower_than_paraphrase(self):
        question = "What does Article 17 of the GDPR require about erasure?"
        close = score_relevancy(
            question, "Article 17 of the GDPR requires erasure of data.", StubJudge(), self.embedder()
        )
        far = score_relevancy(
            question, "Volcanic basalt columns form hexagonal patterns.", StubJudge(), self.embedder()
        )
        assert close > far
        assert 0.0 <= far <= 1.0

    def test_clamped_to_unit_interval(self):
        # Token sets with no overlap can go (slightly) negative in cosine;
        # the clamp keeps the score at 0.
        score = score_relevancy("aa bb cc", "zz yy xx", StubJudge(), self.embedder())
        assert 0.0 <= score <= 1.0


class TestLlmJudge:
    def judge(self, replies: dict[str, str]) -> LlmJudge:
        def transport(url, payload, headers, timeout):
            prompt = payload["messages"][0]["content"]
            for needle, reply in replies.items():
                if needle in prompt:
                    return 200, {"choices": [{"message": {"content": reply}}]}
            raise AssertionError(f"unexpected prompt: {prompt[:60]}")

        return LlmJudge(LlmClientConfig(endpoint="https://judge.example/v1", model_name="j"), transport)

    def test_split_claims_parses_lines(self):
        judge = self.judge({"one claim per line": "Claim one.\n\nClaim two.\n"})
        assert judge.split_claims("whatever") == ["Claim one.", "Claim two."]

    def test_is_supported_parses_verdict(self):
        assert self.judge({"directly supported": "Yes."}).is_supported("c", ["ctx"]) is Verdict.SUPPORTED
        assert self.judge({"directly supported": "no"}).is_supported("c", ["ctx"]) is Verdict.UNSUPPORTED
        assert self.judge({"directly supported": "maybe"}).is_supported("c", ["ctx"]) is Verdict.UNKNOWN

    def test_regenerate_questions_truncates_to_n(self):
        judge = self.judge({"questions that the answer": "Q1?\nQ2?\nQ3?\nQ4?"})
        assert judge.regenerate_questions("a", 3) == ["Q1?", "Q2?", "Q3?"]

    def test_noncommittal_parse(self):
        assert self.judge({"cannot be answered": "yes"}).is_noncommittal("a") is True
        assert self.judge({"cannot be answered": "No"}).is_noncommittal("a") is False


def make_record(query_id="q1", category=Category.SINGLE_ENTITY,
                subcategory=Subcategory.CONCEPTUAL, **kw) -> EvalRecord:
    return EvalRecord(query_id=query_id, category=category, subcategory=subcategory, **kw)


class TestAggregates:
    def test_failed_records_excluded(self):
        records = [
            make_record("a", faithfulness=1.0, relevancy=0.5),
            make_record("b", faithfulness=0.5, relevancy=0.5),
            make_record("c", failure_reason="no context"),
            make_record("d", category=Category.MULTI_JURISDICTIONAL,
                        subcategory=Subcategory.HARDER_COMPARISON,
                        faithfulness=0.0, relevancy=1.0),
        ]
        aggregates = compute_aggregates(records)
        assert aggregates["single_entity"] == {"n": 2, "faithfulness": 0.75, "relevancy": 0.5}
        assert aggregates["multi_jurisdictional"] == {"n": 1, "faithfulness": 0.0, "relevancy": 1.0}
        assert aggregates["overall"]["n"] == 3

    def test_absent_category_renders_dash(self):
        records = [make_record("a", faithfulness=1.0, relevancy=1.0)]
        from jurisrag.evaluation import EvalReport

        table = render_table(EvalReport(records=records, aggregates=compute_aggregates(records)))
        lines = table.splitlines()
        assert any("Multi-jurisdictional" in line and "-" in line for line in lines)
        assert any("Single-entity" in line and "1.00" in line for line in lines)


class TestLoadQueries:
    def test_fixture_file_parses(self):
        queries = load_queries(SMOKE_QUERIES)
        assert len(queries) == 6
        assert queries[0].id == "s01"
        assert queries[0].category is Category.SINGLE_ENTITY
        assert queries[0].subcategory is Subcategory.ARTICLE_SPECIFIC

    def test_unknown_category_rejected(self, tmp_path):
        path = tmp_path / "queries.jsonl"
        path.write_text(
            json.dumps({"id": "x", "category": "nope", "subcategory": "conceptual", "query": "q"}) + "\n",
            encoding="utf-8",
        )
        with pytest.raises(ValueError):
            load_queries(path)


class TestRunEval:
    def test_smoke_run_scores_five_and_fails_one(self, engine):
        report = run_eval(SMOKE_QUERIES, engine, judge=StubJudge())
        assert len(report.records) == 6
        by_id = {r.query_id: r for r in report.records}
        failed = by_id["s06"]
        assert failed.failure_reason == "no context retrieved for African Union (route PathB)"
        assert failed.faithfulness is None and failed.relevancy is None
        for query_id in ("s01", "s02", "s03", "s04", "s05"):
            record = by_id[query_id]
            assert record.failure_reason is None
            assert 0.0 <= record.faithfulness <= 1.0
            assert 0.0 <= record.relevancy <= 1.0
        assert report.aggregates["overall"]["n"] == 5

    def test_reruns_are_byte_identical(self, engine, tmp_path):
        first = tmp_path / "r1.json"
        second = tmp_path / "r2.json"
        write_report(run_eval(SMOKE_QUERIES, engine, judge=StubJudge()), first)
        write_report(run_eval(SMOKE_QUERIES, engine, judge=StubJudge()), second)
        assert first.read_bytes() == second.read_bytes()

    def test_report_is_valid_json_with_expected_shape(self, engine, tmp_path):
        path = tmp_path / "report.json"
        write_report(run_eval(SMOKE_QUERIES, engine, judge=StubJudge()), path)
        data = json.loads(path.read_text(encoding="utf-8"))
        assert set(data) == {"records", "aggregates"}
        assert {r["query_id"] for r in data["records"]} == {f"s{i:02d}" for i in range(1, 7)}
        assert set(data["aggregates"]) == {"single_entity", "multi_jurisdictional", "overall"}

    def test_write_is_atomic_on_failure(self, engine, tmp_path, monkeypatch):
        path = tmp_path / "report.json"
        write_report(run_eval(SMOKE_QUERIES, engine, judge=StubJudge()), path)
        original = path.read_bytes()

        import os

        def exploding_replace(src, dst):
            raise OSError("disk full")

        monkeypatch.setattr(os, "replace", exploding_replace)
        with pytest.raises(OSError):
            write_report(run_eval(SMOKE_QUERIES, engine, judge=StubJudge()), path)
        assert path.read_bytes() == original  # target untouched mid-failure


class TestRenderTable:
    def test_rows_and_formatting(self, engine):
        report = run_eval(SMOKE_QUERIES, engine, judge=StubJudge())
        table = render_table(report)
        lines = table.splitlines()
        assert lines[0].startswith("Query Category")
        assert lines[1].startswith("Single-entity")
        assert lines[2].startswith("Multi-jurisdictional")
        assert lines[3].startswith("Overall")
        assert "3" in lines[1] and "2" in lines[2] and "5" in lines[3]

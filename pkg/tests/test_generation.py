"""Prompt assembly, citations, offline stub, and live-call plumbing."""

from __future__ import annotations

import pytest

from jurisrag.analysis import Route
from jurisrag.chunking import Chunk
from jurisrag.corpus import Status
from jurisrag.generation import (
    NO_SOURCES_ANSWER,
    Answer,
    assemble_prompt,
    build_answer,
    format_citations,
    generate_answer,
)
from jurisrag.index import ScoredChunk
from jurisrag.llm import LlmClientConfig, LlmUnavailableError


def make_context(doc_id="gdpr", ordinal=3, entity="European Union", title="GDPR",
                 year=2016, structural_ref="Article 17", text="The data subject shall...",
                 score=0.0) -> ScoredChunk:
    return ScoredChunk(
        Chunk(
            chunk_id=f"{doc_id}:{ordinal:04d}",
            doc_id=doc_id,
            entity=entity,
            title=title,
            year=year,
            status=Status.ENACTED,
            structural_ref=structural_ref,
            ordinal=ordinal,
            text=text,
        ),
        score,
    )


class TestAssemblePrompt:
    def test_full_prompt_snapshot(self):
        contexts = [
            make_context(text="Erasure without undue delay."),
            make_context(doc_id="jp-gov", ordinal=0, entity="Japan", title="AI Governance Guidelines",
                         year=2021, structural_ref=None, text="Agile governance."),
        ]
        prompt = assemble_prompt("What is erasure?", contexts)
        assert prompt == (
            "You are a research assistant for AI regulation and governance. Answer the "
            "question using ONLY the numbered sources below. Cite sources inline as [n]. "
            "If the sources do not contain the information needed, state that explicitly "
            "instead of guessing."
            "\n\nSources:\n"
            "[1] European Union — GDPR (2016), Article 17 :: Erasure without undue delay.\n"
            "[2] Japan — AI Governance Guidelines (2021) :: Agile governance."
            "\n\nQuestion: What is erasure?\nAnswer:"
        )

    def test_structural_ref_only_when_present(self):
        with_ref = assemble_prompt("q", [make_context()])
        without = assemble_prompt("q", [make_context(structural_ref=None)])
        assert ", Article 17" in with_ref
        assert ", Article 17" not in without

    def test_no_sources_prompt(self):
        prompt = assemble_prompt("What is erasure?", [])
        assert "No sources were retrieved" in prompt
        assert prompt.endswith("Question: What is erasure?\nAnswer:")
        assert "[1]" not in prompt

    def test_sources_numbered_in_given_order(self):
        contexts = [make_context(ordinal=i, text=f"text {i}") for i in range(3)]
        prompt = assemble_prompt("q", contexts)
        assert prompt.index("[1]") < prompt.index("[2]") < prompt.index("[3]")


class TestFormatCitations:
    def test_fields_copied_verbatim(self):
        [citation] = format_citations([make_context()])
        assert citation.doc_id == "gdpr"
        assert citation.title == "GDPR"
        assert citation.entity == "European Union"
        assert citation.year == 2016
        assert citation.structural_ref == "Article 17"
        assert citation.chunk_id == "gdpr:0003"

    def test_duplicate_chunks_cited_once(self):
        ctx = make_context()
        citations = format_citations([ctx, ctx, make_context(ordinal=4)])
        assert [c.chunk_id for c in citations] == ["gdpr:0003", "gdpr:0004"]

    def test_order_preserved(self):
        contexts = [make_context(doc_id="b", ordinal=0), make_context(doc_id="a", ordinal=0)]
        assert [c.doc_id for c in format_citations(contexts)] == ["b", "a"]

    def test_to_dict_omits_null_structural_ref(self):
        [with_ref] = format_citations([make_context()])
        [without] = format_citations([make_context(structural_ref=None)])
        assert with_ref.to_dict()["structural_ref"] == "Article 17"
        assert "structural_ref" not in without.to_dict()


class TestOfflineGeneration:
    def test_stub_echoes_source_labels(self):
        prompt = assemble_prompt("q", [make_context(), make_context(ordinal=4)])
        text = generate_answer(prompt, offline=True)
        assert text == "Offline mode: answer grounded in sources [1], [2]."

    def test_stub_without_sources(self):
        text = generate_answer(assemble_prompt("q", []), offline=True)
        assert text == NO_SOURCES_ANSWER

    def test_no_client_means_stub_even_when_online_flagged(self):
        prompt = assemble_prompt("q", [make_context()])
        assert generate_answer(prompt, client=None, offline=False) == (
            "Offline mode: answer grounded in sources [1]."
        )


class TestLiveGeneration:
    def config(self) -> LlmClientConfig:
        return LlmClientConfig(endpoint="https://llm.example/v1", model_name="test-model")

    def test_posts_prompt_and_returns_first_choice(self):
        seen = {}

        def transport(url, payload, headers, timeout):
            seen["url"] = url
            seen["payload"] = payload
            return 200, {"choices": [{"message": {"content": "Grounded answer [1]."}}]}

        prompt = assemble_prompt("What is erasure?", [make_context()])
        text = generate_answer(prompt, client=self.config(), transport=transport, offline=False)
        assert text == "Grounded answer [1]."
        assert seen["url"] == "https://llm.example/v1"
        assert seen["payload"]["model"] == "test-model"
        assert seen["payload"]["messages"] == [{"role": "user", "content": prompt}]
        assert seen["payload"]["temperature"] == 0.0

    def test_transport_failure_raises_llm_unavailable(self):
        from jurisrag.transport import TransportFailure

        def transport(url, payload, headers, timeout):
            raise TransportFailure("refused")

        with pytest.raises(LlmUnavailableError):
            generate_answer("prompt", client=self.config(), transport=transport, offline=False)

    def test_http_error_raises_llm_unavailable(self):
        def transport(url, payload, headers, timeout):
            return 500, {"error": "boom"}

        with pytest.raises(LlmUnavailableError):
            generate_answer("prompt", client=self.config(), transport=transport, offline=False)

    def test_malformed_choice_payload_raises(self):
        def transport(url, payload, headers, timeout):
            return 200, {"choices": []}

        with pytest.raises(LlmUnavailableError):
            generate_answer("prompt", client=self.config(), transport=transport, offline=False)


class TestBuildAnswer:
    def test_coverage_note_for_missing_jurisdiction(self, engine):
        result = engine.retrieve("Compare India and Singapore's approaches to AI governance.")
        answer = build_answer(result, offline=True)
        assert answer.coverage_note == "The retrieved sources contain no documents from: India."

    def test_no_note_when_all_requested_covered(self, engine):
        result = engine.retrieve("Compare the UK and Canada's approaches to AI regulation.")
        answer = build_answer(result, offline=True)
        assert answer.coverage_note is None

    def test_citations_match_contexts(self, engine):
        result = engine.retrieve("What does Article 17 of the GDPR say?")
        answer = build_answer(result, offline=True)
        assert [c.chunk_id for c in answer.citations] == ["gdpr:0003", "gdpr:0004", "gdpr:0005"]
        assert answer.route is Route.PATH_A

    def test_empty_retrieval_yields_no_sources_answer(self, engine):
        result = engine.retrieve("What is India's national AI strategy?")
        answer = build_answer(result, offline=True)
        assert answer.text == NO_SOURCES_ANSWER
        assert answer.citations == ()
        assert answer.coverage_note == "The retrieved sources contain no documents from: India."

    def test_to_dict_shape(self, engine):
        result = engine.retrieve("What are Japan's AI governance guidelines?")
        data = build_answer(result, offline=True).to_dict()
        assert set(data) == {"text", "citations", "route"}
        assert data["route"] == "PathB"
        assert all("chunk_id" in c for c in data["citations"])

"""Grounded answer generation with verbatim citations.

The prompt is a fixed template: an instruction to answer only from the
numbered sources, the sources themselves (one block per retrieved chunk, in
score order), then the question.  Citations are copied field-for-field from
the chunks that were actually supplied — the generator can never cite
something retrieval did not produce.

Offline mode substitutes a deterministic stub that echoes the source labels,
which keeps every downstream consumer (CLI, service, evaluation) exercisable
without a model.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .analysis import Route
from .index import ScoredChunk
from .llm import LlmClientConfig, complete
from .pipeline import RetrievalResult
from .transport import Transport

__all__ = [
    "Citation",
    "Answer",
    "assemble_prompt",
    "format_citations",
    "generate_answer",
    "build_answer",
]

PROMPT_INSTRUCTION = (
    "You are a research assistant for AI regulation and governance. Answer the "
    "question using ONLY the numbered sources below. Cite sources inline as [n]. "
    "If the sources do not contain the information needed, state that explicitly "
    "instead of guessing."
)

PROMPT_NO_SOURCES = (
    "No sources were retrieved for this question. State that the question cannot "
    "be answered from the available sources; do not answer from memory."
)

_SOURCE_LABEL_RX = re.compile(r"^\[(\d+)\]", re.MULTILINE)

NO_SOURCES_ANSWER = "No sources were retrieved; the question cannot be answered from the available sources."


@dataclass(frozen=True)
class Citation:
    doc_id: str
    title: str
    entity: str
    year: int
    structural_ref: str | None
    chunk_id: str

    def to_dict(self) -> dict:
        out = {
            "doc_id": self.doc_id,
            "title": self.title,
            "entity": self.entity,
            "year": self.year,
            "chunk_id": self.chunk_id,
        }
        if self.structural_ref is not None:
            out["structural_ref"] = self.structural_ref
        return out


@dataclass(frozen=True)
class Answer:
    text: str
    citations: tuple[Citation, ...]
    route: Route
    coverage_note: str | None = None

    def to_dict(self) -> dict:
        out: dict = {
            "text": self.text,
            "citations": [c.to_dict() for c in self.citations],
            "route": self.route.value,
        }
        if self.coverage_note is not None:
            out["coverage_note"] = self.coverage_note
        return out


def _source_line(number: int, sc: ScoredChunk) -> str:
    chunk = sc.chunk
    head = f"[{number}] {chunk.entity} — {chunk.title} ({chunk.year})"
    if chunk.structural_ref is not None:
        head += f", {chunk.structural_ref}"
    return f"{head} :: {chunk.text}"


def assemble_prompt(query: str, contexts: list[ScoredChunk] | tuple[ScoredChunk, ...]) -> str:
    """Deterministic prompt: instruction, numbered sources in given order, question."""
    if contexts:
        blocks = "\n".join(_source_line(i + 1, sc) for i, sc in enumerate(contexts))
        body = f"{PROMPT_INSTRUCTION}\n\nSources:\n{blocks}"
    else:
        body = PROMPT_NO_SOURCES
    return f"{body}\n\nQuestion: {query}\nAnswer:"


def format_citations(contexts: list[ScoredChunk] | tuple[ScoredChunk, ...]) -> list[Citation]:
    """One citation per distinct chunk, fields copied verbatim, order preserved."""
    seen: set[str] = set()
    citations = []
    for sc in contexts:
        chunk = sc.chunk
        if chunk.chunk_id in seen:
            continue
        seen.add(chunk.chunk_id)
        citations.append(
            Citation(
                doc_id=chunk.doc_id,
                title=chunk.title,
                entity=chunk.entity,
                year=chunk.year,
                structural_ref=chunk.structural_ref,
                chunk_id=chunk.chunk_id,
            )
        )
    return citations


def _offline_answer(prompt: str) -> str:
    labels = _SOURCE_LABEL_RX.findall(prompt)
    if not labels:
        return NO_SOURCES_ANSWER
    refs = ", ".join(f"[{n}]" for n in labels)
    return f"Offline mode: answer grounded in sources {refs}."


def generate_answer(
    prompt: str,
    client: LlmClientConfig | None = None,
    transport: Transport | None = None,
    offline: bool = True,
) -> str:
    """Produce the answer text for an assembled prompt.

    Offline (or with no client configured) this returns the deterministic
    stub; live errors surface as :class:`~jurisrag.llm.LlmUnavailableError`.
    """
    if offline or client is None:
        return _offline_answer(prompt)
    return complete(prompt, client, transport)


def build_answer(
    result: RetrievalResult,
    client: LlmClientConfig | None = None,
    transport: Transport | None = None,
    offline: bool = True,
) -> Answer:
    """Generate and package the answer for a retrieval result.

    A coverage note is attached exactly when some requested jurisdiction
    contributed no context, so comparative answers are honest about one-sided
    sources.
    """
    prompt = assemble_prompt(result.analysis.raw_query, result.contexts)
    text = generate_answer(prompt, client=client, transport=transport, offline=offline)
    missing = sorted(set(result.analysis.entities) - set(result.entities_covered))
    note = None
    if missing:
        note = "The retrieved sources contain no documents from: " + ", ".join(missing) + "."
    return Answer(
        text=text,
        citations=tuple(format_citations(result.contexts)),
        route=result.analysis.route,
        coverage_note=note,
    )

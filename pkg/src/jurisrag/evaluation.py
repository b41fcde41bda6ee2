"""Answer quality evaluation: faithfulness and answer relevancy.

Faithfulness decomposes the answer into atomic claims and scores the fraction
a judge finds supported by the retrieved contexts.  Relevancy asks the judge
to write ``n_q`` questions the answer would directly answer and averages their
embedding-cosine similarity to the original question; answers flagged as
noncommittal ("the sources do not contain ...") score 0.0 by definition.

Both metrics run against either a live judge endpoint or the deterministic
offline stub: sentence-level claims, substring support checks, the answer
itself echoed as the regenerated questions.  The stub plus the reference
embedder make entire evaluation runs bit-reproducible.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Protocol, TYPE_CHECKING

import numpy as np

from .embedding import EmbedderConfig, embed_batch
from .errors import JurisragError
from .index import ScoredChunk
from .llm import LlmClientConfig, complete
from .transport import Transport

if TYPE_CHECKING:  # pragma: no cover
    from .engine import QueryEngine

__all__ = [
    "Verdict",
    "Claim",
    "Category",
    "Subcategory",
    "EvalQuery",
    "EvalRecord",
    "EvalReport",
    "NoClaimsError",
    "StubJudge",
    "LlmJudge",
    "decompose_claims",
    "score_faithfulness",
    "score_relevancy",
    "load_queries",
    "run_eval",
    "write_report",
    "render_table",
]

N_REGENERATED_QUESTIONS = 3

NONCOMMITTAL_MARKERS = (
    "do not contain",
    "does not contain",
    "cannot be answered",
    "no sources",
)

_SENTENCE_SPLIT_RX = re.compile(r"(?<=[.!?])\s+")


class NoClaimsError(JurisragError):
    """Faithfulness is undefined for an answer with zero claims."""


class Verdict(str, Enum):
    SUPPORTED = "supported"
    UNSUPPORTED = "unsupported"
    UNKNOWN = "unknown"


@dataclass
class Claim:
    text: str
    verdict: Verdict | None = None


class Category(str, Enum):
    SINGLE_ENTITY = "single_entity"
    MULTI_JURISDICTIONAL = "multi_jurisdictional"


class Subcategory(str, Enum):
    ARTICLE_SPECIFIC = "article_specific"
    CONCEPTUAL = "conceptual"
    EU_MEMBER_STATE = "eu_member_state"
    STRAIGHTFORWARD_COMPARISON = "straightforward_comparison"
    HARDER_COMPARISON = "harder_comparison"


@dataclass(frozen=True)
class EvalQuery:
    id: str
    category: Category
    subcategory: Subcategory
    query: str


@dataclass
class EvalRecord:
    query_id: str
    category: Category
    subcategory: Subcategory
    faithfulness: float | None = None
    relevancy: float | None = None
    failure_reason: str | None = None

    def to_dict(self) -> dict:
        out: dict = {
            "query_id": self.query_id,
            "category": self.category.value,
            "subcategory": self.subcategory.value,
        }
        if self.faithfulness is not None:
            out["faithfulness"] = self.faithfulness
        if self.relevancy is not None:
            out["relevancy"] = self.relevancy
        if self.failure_reason is not None:
            out["failure_reason"] = self.failure_reason
        return out


@dataclass
class EvalReport:
    records: list[EvalRecord]
    aggregates: dict

    def to_dict(self) -> dict:
        return {"records": [r.to_dict() for r in self.records], "aggregates": self.aggregates}


# ---- judges ---------------------------------------------------------------


class Judge(Protocol):  # pragma: no cover - typing only
    def split_claims(self, answer_text: str) -> list[str]: ...

    def is_supported(self, claim_text: str, contexts: list[str]) -> Verdict: ...

    def regenerate_questions(self, answer_text: str, n: int) -> list[str]: ...

    def is_noncommittal(self, answer_text: str) -> bool: ...


class StubJudge:
    """Deterministic judge used offline; no model, no network.

    Claims are sentences; a claim is supported iff it appears verbatim in some
    context; the regenerated questions are the answer text itself.
    """

    def split_claims(self, answer_text: str) -> list[str]:
        parts = _SENTENCE_SPLIT_RX.split(answer_text.strip())
        return [p.strip() for p in parts if p.strip()]

    def is_supported(self, claim_text: str, contexts: list[str]) -> Verdict:
        if any(claim_text in ctx for ctx in contexts):
            return Verdict.SUPPORTED
        return Verdict.UNSUPPORTED

    def regenerate_questions(self, answer_text: str, n: int) -> list[str]:
        return [answer_text] * n

    def is_noncommittal(self, answer_text: str) -> bool:
        lowered = answer_text.casefold()
        return any(marker in lowered for marker in NONCOMMITTAL_MARKERS)


class LlmJudge:
    """Judge backed by a completion endpoint (same wire protocol as generation)."""

    def __init__(self, config: LlmClientConfig, transport: Transport | None = None):
        self.config = config
        self.transport = transport

    def _ask(self, prompt: str) -> str:
        return complete(prompt, self.config, self.transport)

    def split_claims(self, answer_text: str) -> list[str]:
        text = self._ask(
            "List every distinct factual claim made by the answer below, one claim per line, "
            f"with no numbering or commentary.\n\nAnswer:\n{answer_text}"
        )
        return [line.strip() for line in text.splitlines() if line.strip()]

    def is_supported(self, claim_text: str, contexts: list[str]) -> Verdict:
        joined = "\n\n".join(contexts)
        text = self._ask(
            "Is the following claim directly supported by the context? Reply with exactly "
            f"'yes' or 'no'.\n\nClaim: {claim_text}\n\nContext:\n{joined}"
        )
        token = text.strip().casefold()
        if token.startswith("yes"):
            return Verdict.SUPPORTED
        if token.startswith("no"):
            return Verdict.UNSUPPORTED
        return Verdict.UNKNOWN

    def regenerate_questions(self, answer_text: str, n: int) -> list[str]:
        text = self._ask(
            f"Write {n} questions that the answer below directly answers, one per line, "
            f"with no numbering.\n\nAnswer:\n{answer_text}"
        )
        questions = [line.strip() for line in text.splitlines() if line.strip()]
        return questions[:n] if questions else [answer_text] * n

    def is_noncommittal(self, answer_text: str) -> bool:
        text = self._ask(
            "Does the answer below state that the question cannot be answered from the "
            f"available sources? Reply with exactly 'yes' or 'no'.\n\nAnswer:\n{answer_text}"
        )
        return text.strip().casefold().startswith("yes")


# ---- metrics --------------------------------------------------------------


def decompose_claims(answer_text: str, judge: Judge) -> list[Claim]:
    return [Claim(text=text) for text in judge.split_claims(answer_text)]


def score_faithfulness(claims: list[Claim], contexts: list[ScoredChunk] | tuple[ScoredChunk, ...], judge: Judge) -> float:
    """Fraction of claims supported by the contexts; assigns verdicts in place."""
    if not claims:
        raise NoClaimsError("cannot score faithfulness without claims")
    context_texts = [sc.chunk.text for sc in contexts]
    supported = 0
    for claim in claims:
        claim.verdict = judge.is_supported(claim.text, context_texts)
        if claim.verdict is Verdict.SUPPORTED:
            supported += 1
    return supported / len(claims)


def score_relevancy(question: str, answer_text: str, judge: Judge, embedder: EmbedderConfig = EmbedderConfig()) -> float:
    """Mean cosine between the question and judge-regenerated questions, in [0, 1].

    Noncommittal answers score 0.0 regardless of their wording's similarity.
    """
    if judge.is_noncommittal(answer_text):
        return 0.0
    questions = judge.regenerate_questions(answer_text, N_REGENERATED_QUESTIONS)
    vectors = embed_batch([question] + questions, embedder)
    query_vec = np.asarray(vectors[0], dtype=np.float64)
    sims = [float(np.dot(query_vec, np.asarray(vec, dtype=np.float64))) for vec in vectors[1:]]
    mean = float(np.mean(sims))
    return min(1.0, max(0.0, mean))


# ---- harness --------------------------------------------------------------


def load_queries(path: str | Path) -> list[EvalQuery]:
    """Read a line-delimited query file: {"id", "category", "subcategory", "query"}."""
    queries = []
    with Path(path).open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            record = json.loads(line)
            queries.append(
                EvalQuery(
                    id=record["id"],
                    category=Category(record["category"]),
                    subcategory=Subcategory(record["subcategory"]),
                    query=record["query"],
                )
            )
    return queries


def compute_aggregates(records: list[EvalRecord]) -> dict:
    """Mean faithfulness/relevancy per category and overall, scored records only."""

    def summarize(selected: list[EvalRecord]) -> dict | None:
        scored = [r for r in selected if r.failure_reason is None]
        if not scored:
            return None
        return {
            "n": len(scored),
            "faithfulness": float(np.mean([r.faithfulness for r in scored])),
            "relevancy": float(np.mean([r.relevancy for r in scored])),
        }

    aggregates: dict = {}
    for category in Category:
        summary = summarize([r for r in records if r.category is category])
        if summary is not None:
            aggregates[category.value] = summary
    overall = summarize(records)
    if overall is not None:
        aggregates["overall"] = overall
    return aggregates


def run_eval(
    query_path: str | Path,
    engine: "QueryEngine",
    judge: Judge | None = None,
    embedder: EmbedderConfig | None = None,
) -> EvalReport:
    """Retrieve, generate, and score every query in the file.

    Queries whose retrieval produces no context (or whose answer yields no
    claims) are recorded with a ``failure_reason`` and excluded from the
    aggregates.  With the stub judge and reference embedder the report is
    bit-reproducible across runs.
    """
    judge = judge or StubJudge()
    embedder = embedder if embedder is not None else engine.embedder_config
    records: list[EvalRecord] = []
    for query in load_queries(query_path):
        record = EvalRecord(query_id=query.id, category=query.category, subcategory=query.subcategory)
        records.append(record)
        result, answer = engine.answer(query.query)
        if not result.contexts:
            record.failure_reason = result.diagnostic or "no context retrieved"
            continue
        claims = decompose_claims(answer.text, judge)
        if not claims:
            record.failure_reason = "answer produced no claims"
            continue
        record.faithfulness = score_faithfulness(claims, result.contexts, judge)
        record.relevancy = score_relevancy(query.query, answer.text, judge, embedder)
    return EvalReport(records=records, aggregates=compute_aggregates(records))


def write_report(report: EvalReport, path: str | Path) -> None:
    """Serialize the report as JSON, atomically (write temp file, then rename)."""
    path = Path(path)
    payload = json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n"
    tmp = path.with_name(path.name + ".tmp")
    try:
        tmp.write_text(payload, encoding="utf-8")
        os.replace(tmp, path)
    finally:
        tmp.unlink(missing_ok=True)


_TABLE_LABELS = {
    Category.SINGLE_ENTITY.value: "Single-entity",
    Category.MULTI_JURISDICTIONAL.value: "Multi-jurisdictional",
    "overall": "Overall",
}


def render_table(report: EvalReport) -> str:
    """Plain-text summary table; scores rounded to two decimals at display only."""
    rows = [("Query Category", "n", "Avg. Faithfulness", "Avg. Relevancy")]
    for key, label in _TABLE_LABELS.items():
        summary = report.aggregates.get(key)
        if summary is None:
            rows.append((label, "0", "-", "-"))
        else:
            rows.append((label, str(summary["n"]), f"{summary['faithfulness']:.2f}", f"{summary['relevancy']:.2f}"))
    widths = [max(len(row[col]) for row in rows) for col in range(4)]
    lines = ["   ".join(cell.ljust(widths[col]) for col, cell in enumerate(row)).rstrip() for row in rows]
    return "\n".join(lines)

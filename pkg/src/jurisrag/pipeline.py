"""Conditional retrieval over the flat index.

PathA resolves article references by pure metadata lookup — no embeddings, no
distance computations.  PathB over-retrieves ``k * over_retrieval_factor``
candidates, filters them to the requested jurisdiction, and applies
multiplicative priority boosts (scores are squared L2 distances, so a factor
below 1 *promotes* a chunk).  When an EU member state has no matching chunks
at all, the same candidate pool is re-filtered to the member plus the EU
entity — EU-level law applies to member states.  PathC stays purely semantic
and balances jurisdictions by a round-robin pass over the per-entity
candidate groups.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .analysis import ArticleRef, DocumentNameIndex, QueryAnalysis, Route, analyze_query
from .corpus import Corpus, EntityRegistry, Status
from .embedding import EmbedderConfig, embed_batch
from .errors import JurisragError
from .index import Index, MetadataFilter, ScoredChunk
from .llm import LlmClientConfig
from .transport import Transport

__all__ = [
    "PipelineConfig",
    "FallbackKind",
    "RetrievalResult",
    "EmptyIndexError",
    "AmbiguousDocumentError",
    "apply_priority_boosts",
    "round_robin_rerank",
    "path_a_lookup",
    "path_b_search",
    "path_c_search",
    "retrieve",
]


class EmptyIndexError(JurisragError):
    """Retrieval was attempted against an index with no rows."""


class AmbiguousDocumentError(JurisragError):
    """An article reference matched more than one document."""


class FallbackKind(str, Enum):
    NONE = "none"
    EU_EXPANSION = "eu_expansion"
    PATH_A_MISS_TO_B = "path_a_miss_to_b"


@dataclass(frozen=True)
class PipelineConfig:
    k: int = 5
    over_retrieval_factor: int = 25
    boost_enacted: float = 0.6
    boost_proposed: float = 0.8
    boost_name_mention: float = 0.7

    def __post_init__(self) -> None:
        if self.k <= 0:
            raise ValueError("k must be positive")
        if self.over_retrieval_factor < 1:
            raise ValueError("over_retrieval_factor must be at least 1")
        for name in ("boost_enacted", "boost_proposed", "boost_name_mention"):
            value = getattr(self, name)
            if not (0 < value <= 1):
                raise ValueError(f"{name} must be in (0, 1]")

    @property
    def fetch_k(self) -> int:
        return self.k * self.over_retrieval_factor


@dataclass(frozen=True)
class RetrievalResult:
    analysis: QueryAnalysis
    contexts: tuple[ScoredChunk, ...]
    fallback_applied: FallbackKind
    entities_covered: frozenset[str]
    diagnostic: str | None = None
    distance_computations: int = 0

    def to_dict(self) -> dict:
        return {
            "analysis": self.analysis.to_dict(),
            "contexts": [
                {
                    "chunk_id": sc.chunk.chunk_id,
                    "doc_id": sc.chunk.doc_id,
                    "entity": sc.chunk.entity,
                    "title": sc.chunk.title,
                    "year": sc.chunk.year,
                    "status": sc.chunk.status.value,
                    "structural_ref": sc.chunk.structural_ref,
                    "ordinal": sc.chunk.ordinal,
                    "score": sc.score,
                    "text": sc.chunk.text,
                }
                for sc in self.contexts
            ],
            "fallback_applied": self.fallback_applied.value,
            "entities_covered": sorted(self.entities_covered),
            "diagnostic": self.diagnostic,
            "distance_computations": self.distance_computations,
        }


def _final_order(candidates: list[ScoredChunk]) -> list[ScoredChunk]:
    return sorted(candidates, key=lambda sc: (sc.score, sc.chunk.doc_id, sc.chunk.ordinal))


def apply_priority_boosts(candidates: list[ScoredChunk], analysis: QueryAnalysis, config: PipelineConfig) -> list[ScoredChunk]:
    """Multiply scores by the status / name-mention factors and re-sort.

    Enacted law gets ``boost_enacted``, proposed or draft law
    ``boost_proposed``, and chunks from a document the query names get
    ``boost_name_mention`` on top; factors compose multiplicatively.
    """
    boosted = []
    for sc in candidates:
        factor = 1.0
        if sc.chunk.status is Status.ENACTED:
            factor *= config.boost_enacted
        elif sc.chunk.status in (Status.PROPOSED, Status.DRAFT):
            factor *= config.boost_proposed
        if sc.chunk.title in analysis.name_mentions:
            factor *= config.boost_name_mention
        boosted.append(ScoredChunk(chunk=sc.chunk, score=sc.score * factor))
    return _final_order(boosted)


def round_robin_rerank(candidates: list[ScoredChunk], requested_entities: tuple[str, ...], k: int) -> list[ScoredChunk]:
    """Select up to ``k`` candidates, cycling over the requested jurisdictions.

    Groups cycle in order of their best (lowest) score; each pass takes every
    group's next-best candidate, so no single jurisdiction floods the result.
    Once the requested groups are exhausted, remaining slots fill with other
    jurisdictions' candidates in plain score order.  Input must already be
    sorted ascending.
    """
    requested = set(requested_entities)
    groups: dict[str, deque[ScoredChunk]] = {}
    for sc in candidates:
        if sc.chunk.entity in requested:
            groups.setdefault(sc.chunk.entity, deque()).append(sc)
    cycle = sorted(
        groups,
        key=lambda e: (groups[e][0].score, groups[e][0].chunk.doc_id, groups[e][0].chunk.ordinal),
    )

    selected: list[ScoredChunk] = []
    while len(selected) < k and any(groups[e] for e in cycle):
        for entity in cycle:
            if groups[entity]:
                selected.append(groups[entity].popleft())
                if len(selected) == k:
                    break
    if len(selected) < k:
        for sc in candidates:
            if sc.chunk.entity not in requested:
                selected.append(sc)
                if len(selected) == k:
                    break
    return selected


def path_a_lookup(article_ref: ArticleRef, index: Index, name_index: DocumentNameIndex) -> list[ScoredChunk]:
    """Direct metadata lookup of an article's chunks; zero vector math.

    Raises :class:`AmbiguousDocumentError` when the document hint matches more
    than one document; returns [] when the document or unit is unknown so the
    caller can fall back to semantic search.
    """
    doc_ids = name_index.resolve(article_ref.document_hint)
    if len(doc_ids) > 1:
        raise AmbiguousDocumentError(
            f"document hint {article_ref.document_hint!r} matches {len(doc_ids)} documents: {', '.join(doc_ids)}"
        )
    if not doc_ids:
        return []
    title = name_index.doc_titles[doc_ids[0]]
    hits = index.lookup(MetadataFilter(title=title, structural_ref=article_ref.unit_label))
    return [ScoredChunk(chunk=chunk, score=0.0) for chunk in hits]


def path_b_search(
    analysis: QueryAnalysis,
    query_vec: np.ndarray,
    index: Index,
    registry: EntityRegistry,
    config: PipelineConfig,
    entity: str | None = None,
) -> tuple[list[ScoredChunk], FallbackKind]:
    """Single-jurisdiction retrieval: over-fetch, filter, boost, truncate."""
    entity = entity if entity is not None else analysis.entities[0]
    candidates = index.search(query_vec, config.fetch_k)
    pool = [sc for sc in candidates if sc.chunk.entity == entity]
    fallback = FallbackKind.NONE
    if not pool and entity in registry.eu_member_states:
        allowed = {entity, registry.eu_entity}
        pool = [sc for sc in candidates if sc.chunk.entity in allowed]
        fallback = FallbackKind.EU_EXPANSION
    boosted = apply_priority_boosts(pool, analysis, config)
    return boosted[: config.k], fallback


def path_c_search(analysis: QueryAnalysis, query_vec: np.ndarray, index: Index, config: PipelineConfig) -> list[ScoredChunk]:
    """Comparative retrieval: over-fetch with no filter, no boosts, round-robin."""
    candidates = index.search(query_vec, config.fetch_k)
    return round_robin_rerank(candidates, analysis.entities, config.k)


def _global_search(analysis: QueryAnalysis, query_vec: np.ndarray, index: Index, config: PipelineConfig) -> list[ScoredChunk]:
    """PathB semantics minus the entity filter, for queries naming no jurisdiction."""
    candidates = index.search(query_vec, config.fetch_k)
    return apply_priority_boosts(candidates, analysis, config)[: config.k]


def retrieve(
    query: str,
    corpus: Corpus,
    index: Index,
    config: PipelineConfig = PipelineConfig(),
    embedder: EmbedderConfig = EmbedderConfig(),
    name_index: DocumentNameIndex | None = None,
    llm: LlmClientConfig | None = None,
    transport: Transport | None = None,
    offline: bool = True,
) -> RetrievalResult:
    """Analyze ``query``, dispatch to the matching pathway, package the result."""
    if len(index) == 0:
        raise EmptyIndexError("cannot retrieve from an empty index")
    if name_index is None:
        name_index = DocumentNameIndex.from_corpus(corpus)
    analysis = analyze_query(query, corpus.registry, name_index, llm=llm, transport=transport, offline=offline)

    distance_base = index.distance_computations
    fallback = FallbackKind.NONE
    contexts: list[ScoredChunk]

    if analysis.route is Route.PATH_A:
        assert analysis.article_ref is not None
        contexts = path_a_lookup(analysis.article_ref, index, name_index)
        if not contexts:
            fallback = FallbackKind.PATH_A_MISS_TO_B
            query_vec = embed_batch([query], embedder, transport)[0]
            entity = _path_a_fallback_entity(analysis, name_index)
            if entity is not None:
                contexts, _ = path_b_search(analysis, query_vec, index, corpus.registry, config, entity=entity)
            else:
                contexts = _global_search(analysis, query_vec, index, config)
    elif analysis.route is Route.PATH_B:
        query_vec = embed_batch([query], embedder, transport)[0]
        contexts, fallback = path_b_search(analysis, query_vec, index, corpus.registry, config)
    elif analysis.route is Route.PATH_C:
        query_vec = embed_batch([query], embedder, transport)[0]
        contexts = path_c_search(analysis, query_vec, index, config)
    else:
        query_vec = embed_batch([query], embedder, transport)[0]
        contexts = _global_search(analysis, query_vec, index, config)

    contexts = _final_order(contexts)
    covered = frozenset(sc.chunk.entity for sc in contexts)
    diagnostic = None
    if not contexts:
        requested = ", ".join(analysis.entities) or "any jurisdiction"
        diagnostic = f"no context retrieved for {requested} (route {analysis.route.value})"
    return RetrievalResult(
        analysis=analysis,
        contexts=tuple(contexts),
        fallback_applied=fallback,
        entities_covered=covered,
        diagnostic=diagnostic,
        distance_computations=index.distance_computations - distance_base,
    )


def _path_a_fallback_entity(analysis: QueryAnalysis, name_index: DocumentNameIndex) -> str | None:
    """Pick the jurisdiction filter for a PathA miss.

    Prefer the entity of the document the reference resolved to; otherwise the
    single detected entity, if any; otherwise search unfiltered.
    """
    if analysis.article_ref is not None:
        doc_ids = name_index.resolve(analysis.article_ref.document_hint)
        if len(doc_ids) == 1:
            return name_index.doc_entities[doc_ids[0]]
    if len(analysis.entities) == 1:
        return analysis.entities[0]
    return None

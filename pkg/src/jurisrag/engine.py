"""Query engine wiring: one object that owns corpus, index, and configs.

The CLI, the HTTP service, and the evaluation harness all drive the same
engine, so a query behaves identically no matter which surface submitted it.
"""

from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from pathlib import Path

from .chunking import ChunkPolicy, chunk_document
from .corpus import Corpus, CorpusValidationError, DocType, load_manifest, validate_corpus
from .embedding import EmbedderConfig, embed_batch
from .generation import Answer, build_answer
from .index import Index, build_index, load_index, save_index
from .llm import LlmClientConfig
from .analysis import DocumentNameIndex, QueryAnalysis, analyze_query
from .pipeline import PipelineConfig, RetrievalResult, retrieve
from .transport import Transport

__all__ = ["IngestStats", "ingest", "QueryEngine"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IngestStats:
    documents: int
    chunks: int
    structured_chunks: int
    unstructured_chunks: int


def ingest(
    manifest_path: str | Path,
    index_base: str | Path,
    policy: ChunkPolicy = ChunkPolicy(),
    embedder: EmbedderConfig = EmbedderConfig(),
    transport: Transport | None = None,
) -> IngestStats:
    """Load, validate, chunk, embed, and persist a corpus as an index pair.

    Raises :class:`~jurisrag.corpus.CorpusValidationError` (with the full
    violation list) when the manifest's content is invalid.
    """
    corpus = load_manifest(manifest_path)
    violations = validate_corpus(corpus)
    if violations:
        raise CorpusValidationError(violations)

    chunks = []
    structured = 0
    for doc in corpus.documents:
        doc_chunks = chunk_document(doc, policy)
        if doc.doc_type is DocType.STRUCTURED:
            structured += len(doc_chunks)
        chunks.extend(doc_chunks)
    vectors = embed_batch([c.text for c in chunks], embedder, transport) if chunks else []
    index = build_index(chunks, vectors, dim=embedder.dim)
    save_index(index, index_base)
    logger.info("ingested %d documents into %d chunks at %s", len(corpus.documents), len(chunks), index_base)
    return IngestStats(
        documents=len(corpus.documents),
        chunks=len(chunks),
        structured_chunks=structured,
        unstructured_chunks=len(chunks) - structured,
    )


class QueryEngine:
    """Retrieval + generation against one corpus/index pair."""

    def __init__(
        self,
        corpus: Corpus,
        index: Index,
        pipeline_config: PipelineConfig | None = None,
        embedder_config: EmbedderConfig | None = None,
        llm_config: LlmClientConfig | None = None,
        offline: bool = True,
        transport: Transport | None = None,
    ):
        self.corpus = corpus
        self.index = index
        self.pipeline_config = pipeline_config or PipelineConfig()
        self.embedder_config = embedder_config or EmbedderConfig()
        self.llm_config = llm_config
        self.offline = offline
        self.transport = transport
        self.name_index = DocumentNameIndex.from_corpus(corpus)

    @classmethod
    def from_paths(
        cls,
        manifest_path: str | Path,
        index_base: str | Path,
        **kwargs,
    ) -> "QueryEngine":
        corpus = load_manifest(manifest_path)
        index = load_index(index_base)
        return cls(corpus, index, **kwargs)

    @property
    def chunk_count(self) -> int:
        return len(self.index)

    def _config_for(self, k: int | None) -> PipelineConfig:
        if k is None:
            return self.pipeline_config
        return dataclasses.replace(self.pipeline_config, k=k)

    def analyze(self, question: str) -> QueryAnalysis:
        return analyze_query(
            question,
            self.corpus.registry,
            self.name_index,
            llm=self.llm_config,
            transport=self.transport,
            offline=self.offline,
        )

    def retrieve(self, question: str, k: int | None = None) -> RetrievalResult:
        return retrieve(
            question,
            self.corpus,
            self.index,
            config=self._config_for(k),
            embedder=self.embedder_config,
            name_index=self.name_index,
            llm=self.llm_config,
            transport=self.transport,
            offline=self.offline,
        )

    def generate(self, result: RetrievalResult) -> Answer:
        return build_answer(result, client=self.llm_config, transport=self.transport, offline=self.offline)

    def answer(self, question: str, k: int | None = None) -> tuple[RetrievalResult, Answer]:
        result = self.retrieve(question, k)
        return result, self.generate(result)

"""Multi-jurisdictional retrieval-augmented query engine for regulatory corpora.

Pipeline: type-specific chunking -> normalized embeddings -> flat exhaustive
vector index -> conditional routing (article lookup / single-jurisdiction /
comparative / global) -> priority-aware re-ranking -> cited generation, with
an offline-reproducible evaluation harness on top.
"""

from .analysis import QueryAnalysis, Route, analyze_query
from .chunking import Chunk, ChunkPolicy, chunk_corpus, chunk_document, recursive_split
from .corpus import Corpus, Document, EntityRegistry, Status, load_manifest, save_manifest, validate_corpus
from .embedding import Backend, EmbedderConfig, embed_batch, l2_normalize, reference_embed
from .engine import IngestStats, QueryEngine, ingest
from .errors import JurisragError
from .evaluation import EvalReport, run_eval
from .generation import Answer, Citation, assemble_prompt, build_answer
from .index import Index, MetadataFilter, ScoredChunk, build_index, load_index, save_index
from .llm import LlmClientConfig
from .pipeline import FallbackKind, PipelineConfig, RetrievalResult, retrieve

__version__ = "0.1.0"

__all__ = [
    "Answer",
    "Backend",
    "Chunk",
    "ChunkPolicy",
    "Citation",
    "Corpus",
    "Document",
    "EmbedderConfig",
    "EntityRegistry",
    "EvalReport",
    "FallbackKind",
    "Index",
    "IngestStats",
    "JurisragError",
    "LlmClientConfig",
    "MetadataFilter",
    "PipelineConfig",
    "QueryAnalysis",
    "QueryEngine",
    "RetrievalResult",
    "Route",
    "ScoredChunk",
    "Status",
    "analyze_query",
    "assemble_prompt",
    "build_answer",
    "build_index",
    "chunk_corpus",
    "chunk_document",
    "embed_batch",
    "ingest",
    "l2_normalize",
    "load_index",
    "load_manifest",
    "recursive_split",
    "reference_embed",
    "retrieve",
    "run_eval",
    "save_index",
    "save_manifest",
    "validate_corpus",
    "__version__",
]

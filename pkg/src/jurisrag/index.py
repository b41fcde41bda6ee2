"""Flat exhaustive vector index over chunk embeddings.

Search computes squared L2 distance against every candidate row (no ANN
structures), sorts ascending with a deterministic ``(distance, doc_id,
ordinal)`` tie-break, and truncates.  For unit vectors squared L2 is a
monotone transform of cosine similarity (d² = 2 − 2·cos), so nearest-by-L2
equals nearest-by-cosine.

Metadata lookups never touch the vectors; the ``distance_computations``
counter exists so callers can assert that (one increment per row scored).

Persistence writes a pair of files next to each other:

    <name>.jrix          binary header + little-endian float32 rows
    <name>.chunks.jsonl  one chunk record per row, same order

Header layout (little-endian): magic ``b"JRIX"``, version u16, dim u32,
row count u64.
"""

from __future__ import annotations

import json
import os
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .chunking import Chunk
from .corpus import Status
from .errors import DimensionMismatchError, JurisragError

__all__ = [
    "ScoredChunk",
    "MetadataFilter",
    "Index",
    "IndexFormatError",
    "LengthMismatchError",
    "UnnormalizedVectorError",
    "build_index",
    "save_index",
    "load_index",
]

MAGIC = b"JRIX"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sHIQ")
_NORM_TOLERANCE = 1e-4


class IndexFormatError(JurisragError):
    """An index file is corrupt or written by an unknown format version."""


class LengthMismatchError(JurisragError):
    """Chunk and vector counts differ."""


class UnnormalizedVectorError(JurisragError):
    """A vector submitted for indexing is not unit-norm."""


@dataclass(frozen=True)
class ScoredChunk:
    chunk: Chunk
    score: float


@dataclass(frozen=True)
class MetadataFilter:
    """Conjunctive chunk filter; unset fields match everything."""

    entities: frozenset[str] | None = None
    statuses: frozenset[Status] | None = None
    title: str | None = None
    structural_ref: str | None = None

    def is_empty(self) -> bool:
        return self.entities is None and self.statuses is None and self.title is None and self.structural_ref is None

    def matches(self, chunk: Chunk) -> bool:
        if self.entities is not None and chunk.entity not in self.entities:
            return False
        if self.statuses is not None and chunk.status not in self.statuses:
            return False
        if self.title is not None and chunk.title != self.title:
            return False
        if self.structural_ref is not None and chunk.structural_ref != self.structural_ref:
            return False
        return True


def _sort_key(entry: tuple[float, Chunk]):
    dist, chunk = entry
    return (dist, chunk.doc_id, chunk.ordinal)


class Index:
    """Immutable flat index; build via :func:`build_index` or :func:`load_index`."""

    def __init__(self, vectors: np.ndarray, chunks: list[Chunk]):
        if vectors.ndim != 2:
            raise ValueError("vectors must be a 2-D array")
        if vectors.shape[0] != len(chunks):
            raise LengthMismatchError(f"{vectors.shape[0]} vectors vs {len(chunks)} chunks")
        self._vectors = vectors.astype("<f4", copy=False)
        self._chunks = list(chunks)
        self.distance_computations = 0

    @property
    def dim(self) -> int:
        return int(self._vectors.shape[1])

    @property
    def vectors(self) -> np.ndarray:
        return self._vectors

    @property
    def chunks(self) -> list[Chunk]:
        return list(self._chunks)

    def __len__(self) -> int:
        return len(self._chunks)

    def search(self, query_vec: np.ndarray, fetch_k: int, metadata_filter: MetadataFilter | None = None) -> list[ScoredChunk]:
        """Exhaustive nearest-neighbour search by squared L2 distance.

        The filter restricts the candidate rows *before* truncation, so a
        filtered search still returns up to ``fetch_k`` results.
        """
        if fetch_k < 0:
            raise ValueError("fetch_k must be non-negative")
        if fetch_k == 0 or len(self._chunks) == 0:
            return []
        query = np.asarray(query_vec, dtype=np.float64).reshape(-1)
        if query.shape[0] != self.dim:
            raise DimensionMismatchError(f"query dim {query.shape[0]} != index dim {self.dim}")

        if metadata_filter is None or metadata_filter.is_empty():
            rows = range(len(self._chunks))
            matrix = self._vectors.astype(np.float64)
        else:
            rows = [i for i, chunk in enumerate(self._chunks) if metadata_filter.matches(chunk)]
            if not rows:
                return []
            matrix = self._vectors[rows].astype(np.float64)

        diffs = matrix - query
        dists = np.einsum("ij,ij->i", diffs, diffs)
        self.distance_computations += len(dists)

        scored = [(float(dists[j]), self._chunks[row]) for j, row in enumerate(rows)]
        scored.sort(key=_sort_key)
        return [ScoredChunk(chunk=chunk, score=dist) for dist, chunk in scored[:fetch_k]]

    def lookup(self, metadata_filter: MetadataFilter) -> list[Chunk]:
        """Metadata-only scan, ordered by (doc_id, ordinal); no vector math."""
        if metadata_filter.is_empty():
            raise ValueError("metadata lookup requires at least one filter field")
        hits = [chunk for chunk in self._chunks if metadata_filter.matches(chunk)]
        hits.sort(key=lambda c: (c.doc_id, c.ordinal))
        return hits


def build_index(chunks: list[Chunk], vectors: list[np.ndarray], dim: int | None = None) -> Index:
    """Assemble an index, validating counts, dimensions and normalization."""
    if len(chunks) != len(vectors):
        raise LengthMismatchError(f"{len(vectors)} vectors vs {len(chunks)} chunks")
    if not vectors:
        return Index(np.zeros((0, dim or 0), dtype="<f4"), [])
    dims = {np.asarray(v).reshape(-1).shape[0] for v in vectors}
    if len(dims) != 1:
        raise DimensionMismatchError(f"vectors have mixed dimensions: {sorted(dims)}")
    actual = dims.pop()
    if dim is not None and actual != dim:
        raise DimensionMismatchError(f"vectors have dim {actual}, expected {dim}")
    matrix = np.vstack([np.asarray(v, dtype=np.float64).reshape(1, -1) for v in vectors])
    norms = np.linalg.norm(matrix, axis=1)
    bad = np.nonzero(np.abs(norms - 1.0) > _NORM_TOLERANCE)[0]
    if bad.size:
        raise UnnormalizedVectorError(f"vector {bad[0]} has norm {norms[bad[0]]:.6f}")
    return Index(matrix.astype("<f4"), chunks)


# ---- persistence ----------------------------------------------------------


def _index_paths(base_path: str | Path) -> tuple[Path, Path]:
    base = Path(base_path)
    return base.with_name(base.name + ".jrix"), base.with_name(base.name + ".chunks.jsonl")


def _chunk_record(chunk: Chunk) -> dict:
    record = {
        "chunk_id": chunk.chunk_id,
        "doc_id": chunk.doc_id,
        "entity": chunk.entity,
        "title": chunk.title,
        "year": chunk.year,
        "status": chunk.status.value,
        "ordinal": chunk.ordinal,
        "text": chunk.text,
    }
    if chunk.structural_ref is not None:
        record["structural_ref"] = chunk.structural_ref
    return record


def _atomic_write_bytes(path: Path, payload: bytes) -> None:
    tmp = path.with_name(path.name + ".tmp")
    try:
        tmp.write_bytes(payload)
        os.replace(tmp, path)
    finally:
        tmp.unlink(missing_ok=True)


def save_index(index: Index, base_path: str | Path) -> tuple[Path, Path]:
    """Write ``<base>.jrix`` and ``<base>.chunks.jsonl`` atomically."""
    vec_path, chunks_path = _index_paths(base_path)
    header = _HEADER.pack(MAGIC, FORMAT_VERSION, index.dim, len(index))
    _atomic_write_bytes(vec_path, header + index.vectors.astype("<f4").tobytes(order="C"))
    lines = "".join(json.dumps(_chunk_record(c), ensure_ascii=False) + "\n" for c in index.chunks)
    _atomic_write_bytes(chunks_path, lines.encode("utf-8"))
    return vec_path, chunks_path


def load_index(base_path: str | Path) -> Index:
    """Load an index pair written by :func:`save_index`; vectors are bit-exact."""
    vec_path, chunks_path = _index_paths(base_path)
    try:
        blob = vec_path.read_bytes()
    except OSError as exc:
        raise IndexFormatError(f"cannot read index file {vec_path}: {exc}") from exc
    if len(blob) < _HEADER.size:
        raise IndexFormatError(f"{vec_path}: truncated header")
    magic, version, dim, rows = _HEADER.unpack_from(blob)
    if magic != MAGIC:
        raise IndexFormatError(f"{vec_path}: bad magic {magic!r}")
    if version != FORMAT_VERSION:
        raise IndexFormatError(f"{vec_path}: unsupported format version {version}")
    expected = _HEADER.size + rows * dim * 4
    if len(blob) != expected:
        raise IndexFormatError(f"{vec_path}: expected {expected} bytes, found {len(blob)}")
    vectors = np.frombuffer(blob, dtype="<f4", offset=_HEADER.size).reshape(rows, dim).copy()

    chunks: list[Chunk] = []
    try:
        lines = chunks_path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise IndexFormatError(f"cannot read docstore {chunks_path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            chunks.append(
                Chunk(
                    chunk_id=record["chunk_id"],
                    doc_id=record["doc_id"],
                    entity=record["entity"],
                    title=record["title"],
                    year=int(record["year"]),
                    status=Status(record["status"]),
                    structural_ref=record.get("structural_ref"),
                    ordinal=int(record["ordinal"]),
                    text=record["text"],
                )
            )
        except (KeyError, ValueError) as exc:
            raise IndexFormatError(f"{chunks_path}:{lineno}: bad chunk record: {exc}") from exc
    if len(chunks) != rows:
        raise LengthMismatchError(f"{rows} vectors vs {len(chunks)} docstore records")
    return Index(vectors, chunks)

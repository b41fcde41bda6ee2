"""Text embedding with a deterministic local backend and a remote HTTP backend.

The reference backend exists so the whole pipeline runs offline and
reproducibly: each whitespace token is hashed (keyed by the seed) into one of
``dim`` buckets with a ±1 contribution, and the bag-of-tokens vector is then
L2-normalized.  It is not a semantic model, but near-duplicate texts land close
together and disjoint texts far apart, which is enough for retrieval plumbing
and evaluation arithmetic.

The remote backend POSTs ``{"texts": [...]}`` and expects ``{"vectors":
[[...], ...]}``.  Normalization always happens client-side, whichever backend
produced the raw vectors.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatchError, JurisragError
from .transport import Transport, TransportFailure, http_post_json

__all__ = [
    "Backend",
    "EmbedderConfig",
    "EmptyTextError",
    "ZeroVectorError",
    "EmbeddingTransportError",
    "EmbeddingServiceError",
    "l2_normalize",
    "reference_embed",
    "embed_batch",
]

EMBED_ENDPOINT_ENV = "EMBED_ENDPOINT"
EMBED_API_KEY_ENV = "EMBED_API_KEY"

_NORM_EPS = 1e-12


class Backend(str, Enum):
    REFERENCE = "reference"
    REMOTE = "remote"


class EmptyTextError(JurisragError):
    """An empty string was submitted for embedding."""


class ZeroVectorError(JurisragError):
    """A vector with zero norm cannot be normalized."""


class EmbeddingTransportError(JurisragError):
    """The embedding service could not be reached."""


class EmbeddingServiceError(JurisragError):
    """The embedding service responded with an error or a malformed payload."""


@dataclass(frozen=True)
class EmbedderConfig:
    dim: int = 768
    backend: Backend = Backend.REFERENCE
    remote_endpoint: str | None = None
    batch_size: int = 32
    seed: int = 0

    def __post_init__(self) -> None:
        if self.dim <= 0:
            raise ValueError("dim must be positive")
        if self.batch_size <= 0:
            raise ValueError("batch_size must be positive")
        if self.backend is Backend.REMOTE and not self.remote_endpoint:
            raise ValueError("remote backend requires remote_endpoint")


def l2_normalize(vec: np.ndarray) -> np.ndarray:
    """Scale ``vec`` to unit L2 norm (float32). Raises on zero vectors."""
    arr = np.asarray(vec, dtype=np.float64)
    norm = float(np.linalg.norm(arr))
    if norm < _NORM_EPS:
        raise ZeroVectorError("cannot normalize a zero vector")
    return (arr / norm).astype(np.float32)


def reference_embed(text: str, dim: int, seed: int = 0) -> np.ndarray:
    """Deterministic bag-of-tokens embedding: hash tokens into signed buckets.

    The same (text, dim, seed) triple always yields the bit-identical vector;
    token order does not matter.
    """
    tokens = text.split()
    if not tokens:
        raise ZeroVectorError("text has no tokens to embed")
    key = seed.to_bytes(8, "little", signed=True)
    raw = np.zeros(dim, dtype=np.float64)
    for token in tokens:
        digest = hashlib.blake2b(token.encode("utf-8"), digest_size=16, key=key).digest()
        bucket = int.from_bytes(digest[:8], "little") % dim
        sign = 1.0 if digest[8] & 1 else -1.0
        raw[bucket] += sign
    return l2_normalize(raw)


def _remote_embed(texts: list[str], config: EmbedderConfig, transport: Transport) -> list[np.ndarray]:
    endpoint = config.remote_endpoint or os.environ.get(EMBED_ENDPOINT_ENV, "")
    headers = {}
    api_key = os.environ.get(EMBED_API_KEY_ENV)
    if api_key:
        headers["Authorization"] = f"Bearer {api_key}"

    vectors: list[np.ndarray] = []
    for start in range(0, len(texts), config.batch_size):
        batch = texts[start : start + config.batch_size]
        try:
            status, body = transport(endpoint, {"texts": batch}, headers, 60.0)
        except TransportFailure as exc:
            raise EmbeddingTransportError(str(exc)) from exc
        if not (200 <= status < 300):
            raise EmbeddingServiceError(f"embedding service returned status {status}")
        if not isinstance(body, dict) or "vectors" not in body:
            raise EmbeddingServiceError("embedding service response missing 'vectors'")
        rows = body["vectors"]
        if len(rows) != len(batch):
            raise EmbeddingServiceError(f"expected {len(batch)} vectors, got {len(rows)}")
        for row in rows:
            if len(row) != config.dim:
                raise DimensionMismatchError(f"expected dim {config.dim}, got {len(row)}")
            vectors.append(np.asarray(row, dtype=np.float64))
    return vectors


def embed_batch(texts: list[str], config: EmbedderConfig = EmbedderConfig(), transport: Transport | None = None) -> list[np.ndarray]:
    """Embed ``texts`` in order; every returned vector is L2-normalized.

    Raises :class:`EmptyTextError` for empty inputs and surfaces transport
    failures, service errors and dimension mismatches distinctly.
    """
    for i, text in enumerate(texts):
        if not isinstance(text, str):
            raise TypeError(f"texts[{i}] is not a string")
        if text == "":
            raise EmptyTextError(f"texts[{i}] is empty")
    if config.backend is Backend.REFERENCE:
        return [reference_embed(text, config.dim, config.seed) for text in texts]
    raw = _remote_embed(texts, config, transport or http_post_json)
    return [l2_normalize(vec) for vec in raw]

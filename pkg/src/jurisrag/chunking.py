"""Type-specific chunking.

Structured documents produce one chunk per structural unit (article/section);
units longer than the cap are re-split into fixed character windows that share
an exact overlap, so a unit can always be reconstructed from its sub-chunks.
Unstructured documents are split by a recursive separator cascade (blank line,
newline, sentence, word, single character) into bounded chunks whose overlap
snaps to the chosen boundary.

All sizes and overlaps count Unicode code points, not bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .corpus import Corpus, DocType, Document, Status, check_markers
from .errors import JurisragError

__all__ = [
    "ChunkPolicy",
    "Chunk",
    "InvalidMarkersError",
    "recursive_split",
    "split_spans",
    "chunk_structured",
    "chunk_unstructured",
    "chunk_document",
    "chunk_corpus",
]

DEFAULT_SEPARATORS: tuple[str, ...] = ("\n\n", "\n", ". ", " ", "")

# Oversize structural units are split at exact character offsets (the last
# cascade stage only) so consecutive sub-chunks share exactly the configured
# overlap; unstructured text keeps the full cascade and snaps to boundaries.
_CHAR_ONLY: tuple[str, ...] = ("",)


class InvalidMarkersError(JurisragError):
    """Structural markers are missing, unordered, or out of range."""


@dataclass(frozen=True)
class ChunkPolicy:
    structured_max_chars: int = 2000
    structured_split_overlap_chars: int = 100
    unstructured_chunk_chars: int = 1000
    unstructured_overlap_chars: int = 200
    separators: tuple[str, ...] = DEFAULT_SEPARATORS

    def __post_init__(self) -> None:
        if self.structured_max_chars <= 0 or self.unstructured_chunk_chars <= 0:
            raise ValueError("chunk size caps must be positive")
        if not (0 <= self.structured_split_overlap_chars < self.structured_max_chars):
            raise ValueError("structured overlap must be in [0, structured_max_chars)")
        if not (0 <= self.unstructured_overlap_chars < self.unstructured_chunk_chars):
            raise ValueError("unstructured overlap must be in [0, unstructured_chunk_chars)")
        if not self.separators or self.separators[-1] != "":
            raise ValueError("separators must be non-empty and end with the character-level fallback \"\"")


@dataclass(frozen=True)
class Chunk:
    """One indexable piece of a document, carrying the metadata used downstream."""

    chunk_id: str
    doc_id: str
    entity: str
    title: str
    year: int
    status: Status
    structural_ref: str | None
    ordinal: int
    text: str


# ---- splitting primitive --------------------------------------------------


def _split_after(text: str, lo: int, hi: int, sep: str) -> Iterable[tuple[int, int]]:
    """Split ``text[lo:hi]`` on ``sep``, keeping the separator attached to the
    preceding piece so that pieces concatenate back to the original range."""
    start = lo
    while start < hi:
        found = text.find(sep, start, hi)
        if found == -1:
            yield (start, hi)
            return
        end = found + len(sep)
        yield (start, end)
        start = end


def _atomic_pieces(text: str, lo: int, hi: int, target: int, separators: Sequence[str], sep_idx: int, out: list[tuple[int, int]]) -> None:
    """Collect contiguous pieces of at most ``target`` chars covering [lo, hi)."""
    if hi - lo <= target:
        if hi > lo:
            out.append((lo, hi))
        return
    idx = sep_idx
    while separators[idx] != "" and text.find(separators[idx], lo, hi) == -1:
        idx += 1
    sep = separators[idx]
    if sep == "":
        out.extend((pos, pos + 1) for pos in range(lo, hi))
        return
    for start, end in _split_after(text, lo, hi, sep):
        if end - start <= target:
            out.append((start, end))
        else:
            _atomic_pieces(text, start, end, target, separators, idx + 1, out)


def _merge_pieces(pieces: list[tuple[int, int]], target: int, overlap: int) -> list[tuple[int, int]]:
    """Greedily pack pieces into spans of at most ``target`` chars, re-emitting
    up to ``overlap`` trailing chars (whole pieces) at each span boundary."""
    spans: list[tuple[int, int]] = []
    current: list[tuple[int, int]] = []
    current_len = 0
    for piece in pieces:
        piece_len = piece[1] - piece[0]
        if current and current_len + piece_len > target:
            spans.append((current[0][0], current[-1][1]))
            tail: list[tuple[int, int]] = []
            tail_len = 0
            for prev in reversed(current):
                prev_len = prev[1] - prev[0]
                if tail_len + prev_len > overlap:
                    break
                tail.append(prev)
                tail_len += prev_len
            tail.reverse()
            while tail and tail_len + piece_len > target:
                dropped = tail.pop(0)
                tail_len -= dropped[1] - dropped[0]
            current = tail
            current_len = tail_len
        current.append(piece)
        current_len += piece_len
    if current:
        spans.append((current[0][0], current[-1][1]))
    return spans


def split_spans(text: str, target: int, overlap: int, separators: Sequence[str] = DEFAULT_SEPARATORS) -> list[tuple[int, int]]:
    """Like :func:`recursive_split` but returns (start, end) offsets into ``text``.

    Spans are ordered, each at most ``target`` chars, jointly cover the whole
    input, and consecutive spans overlap by at most ``overlap`` chars (exactly
    ``overlap`` when the character-level fallback applies).
    """
    if target <= 0:
        raise ValueError("target must be positive")
    if not (0 <= overlap < target):
        raise ValueError("overlap must be in [0, target)")
    if not separators or separators[-1] != "":
        raise ValueError("separators must end with the character-level fallback \"\"")
    if not text:
        return []
    if len(text) <= target:
        return [(0, len(text))]
    pieces: list[tuple[int, int]] = []
    _atomic_pieces(text, 0, len(text), target, tuple(separators), 0, pieces)
    return _merge_pieces(pieces, target, overlap)


def recursive_split(text: str, target: int, overlap: int, separators: Sequence[str] = DEFAULT_SEPARATORS) -> list[str]:
    """Split ``text`` into ordered pieces of at most ``target`` chars.

    The highest-priority separator present in the text decides the split
    boundaries; oversized fragments fall through to lower-priority separators
    and ultimately to single characters, which guarantees conformance for any
    input.  Every character of the input appears in at least one piece.
    """
    return [text[start:end] for start, end in split_spans(text, target, overlap, separators)]


# ---- document chunking ----------------------------------------------------


def _make_chunk(doc: Document, ordinal: int, text: str, structural_ref: str | None) -> Chunk:
    return Chunk(
        chunk_id=f"{doc.id}:{ordinal:04d}",
        doc_id=doc.id,
        entity=doc.entity,
        title=doc.title,
        year=doc.year,
        status=doc.status,
        structural_ref=structural_ref,
        ordinal=ordinal,
        text=text,
    )


def structural_units(doc: Document) -> list[tuple[str, int, int]]:
    """Return (label, start, end) for each structural unit of ``doc``.

    Unit text runs from its marker offset to the next marker offset (or end of
    body).  Text before the first marker belongs to no unit; manifests should
    mark front matter explicitly if it needs to be indexed.
    """
    problems = check_markers(doc)
    if problems:
        raise InvalidMarkersError("; ".join(str(p) for p in problems))
    markers = doc.structure_markers or ()
    units = []
    for i, (label, offset) in enumerate(markers):
        end = markers[i + 1][1] if i + 1 < len(markers) else len(doc.body)
        units.append((label, offset, end))
    return units


def chunk_structured(doc: Document, policy: ChunkPolicy = ChunkPolicy()) -> list[Chunk]:
    """One chunk per structural unit; oversize units become overlapping sub-chunks.

    Sub-chunks of an oversize unit inherit the unit's label and share exactly
    ``policy.structured_split_overlap_chars`` characters with their neighbour,
    so concatenating them with overlaps removed reproduces the unit verbatim.
    """
    chunks: list[Chunk] = []
    ordinal = 0
    for label, start, end in structural_units(doc):
        unit = doc.body[start:end]
        if len(unit) <= policy.structured_max_chars:
            chunks.append(_make_chunk(doc, ordinal, unit, label))
            ordinal += 1
            continue
        for span_start, span_end in split_spans(
            unit, policy.structured_max_chars, policy.structured_split_overlap_chars, _CHAR_ONLY
        ):
            chunks.append(_make_chunk(doc, ordinal, unit[span_start:span_end], label))
            ordinal += 1
    return chunks


def chunk_unstructured(doc: Document, policy: ChunkPolicy = ChunkPolicy()) -> list[Chunk]:
    """Split a free-text document with the separator cascade; no structural refs."""
    chunks = []
    for ordinal, (start, end) in enumerate(
        split_spans(doc.body, policy.unstructured_chunk_chars, policy.unstructured_overlap_chars, policy.separators)
    ):
        chunks.append(_make_chunk(doc, ordinal, doc.body[start:end], None))
    return chunks


def chunk_document(doc: Document, policy: ChunkPolicy = ChunkPolicy()) -> list[Chunk]:
    if doc.doc_type is DocType.STRUCTURED:
        return chunk_structured(doc, policy)
    return chunk_unstructured(doc, policy)


def chunk_corpus(corpus: Corpus, policy: ChunkPolicy = ChunkPolicy()) -> list[Chunk]:
    """Chunk every document, preserving manifest order."""
    chunks: list[Chunk] = []
    for doc in corpus.documents:
        chunks.extend(chunk_document(doc, policy))
    return chunks

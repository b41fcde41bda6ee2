"""Corpus model: documents, the jurisdiction registry, manifest IO, validation.

A corpus is described by a line-delimited JSON manifest.  The first record
carries the jurisdiction registry (canonical entity names, alias table, EU
membership); every following record describes one document and points at a
UTF-8 text file holding the document body:

    {"registry": {"entities": [...], "aliases": {...},
                  "eu_member_states": [...], "eu_entity": "European Union"}}
    {"id": "...", "entity": "...", "region": "...", "title": "...",
     "year": 2024, "language": "en", "status": "enacted",
     "doc_type": "structured", "path": "texts/....txt",
     "structure_markers": [["Article 1", 0], ...],
     "short_names": ["..."]}

Body paths are resolved relative to the manifest's directory.
``structure_markers`` is required for structured documents and maps structural
unit labels to character offsets into the body.  ``short_names`` is optional
and registers alternative names a query may use to refer to the document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Iterable

from .errors import JurisragError

__all__ = [
    "Status",
    "DocType",
    "Document",
    "EntityRegistry",
    "Corpus",
    "Violation",
    "ManifestError",
    "DuplicateIdError",
    "CorpusValidationError",
    "load_manifest",
    "save_manifest",
    "validate_corpus",
]

YEAR_MIN = 1900
YEAR_MAX = 2100


class Status(str, Enum):
    """Legal lifecycle status of a document; drives retrieval priority."""

    ENACTED = "enacted"
    PROPOSED = "proposed"
    DRAFT = "draft"
    STRATEGY = "strategy"
    POLICY = "policy"
    WHITE_PAPER = "white_paper"
    OTHER = "other"


class DocType(str, Enum):
    STRUCTURED = "structured"
    UNSTRUCTURED = "unstructured"


class ManifestError(JurisragError):
    """The manifest (or a file it references) could not be loaded."""


class DuplicateIdError(ManifestError):
    """Two documents in the manifest share an id."""


class CorpusValidationError(JurisragError):
    """A corpus failed validation; carries the full violation list."""

    def __init__(self, violations: list["Violation"]):
        super().__init__(f"corpus validation failed with {len(violations)} violation(s)")
        self.violations = violations


@dataclass(frozen=True)
class Document:
    """One regulatory document plus the metadata used for routing and boosts."""

    id: str
    entity: str
    region: str
    title: str
    year: int
    language: str
    status: Status
    doc_type: DocType
    body: str
    structure_markers: tuple[tuple[str, int], ...] | None = None
    short_names: tuple[str, ...] = ()


@dataclass(frozen=True)
class EntityRegistry:
    """Canonical jurisdiction names plus the alias table used for detection."""

    entities: tuple[str, ...]
    aliases: dict[str, str] = field(default_factory=dict)
    eu_member_states: frozenset[str] = frozenset()
    eu_entity: str = "European Union"


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]
    registry: EntityRegistry

    def document(self, doc_id: str) -> Document:
        for doc in self.documents:
            if doc.id == doc_id:
                return doc
        raise KeyError(doc_id)


@dataclass(frozen=True)
class Violation:
    """A single validation finding; ``doc_id`` is None for registry problems."""

    code: str
    message: str
    doc_id: str | None = None

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        where = self.doc_id or "registry"
        return f"{where}: {self.code}: {self.message}"


# ---- manifest IO ----------------------------------------------------------


def _parse_registry(record: dict) -> EntityRegistry:
    reg = record["registry"]
    entities = tuple(reg["entities"])
    aliases = dict(reg.get("aliases", {}))
    members = frozenset(reg.get("eu_member_states", ()))
    eu_entity = reg.get("eu_entity", "European Union")
    known = set(entities)
    for alias, target in aliases.items():
        if target not in known:
            raise ManifestError(f"alias {alias!r} maps to unknown entity {target!r}")
    for member in members:
        if member not in known:
            raise ManifestError(f"EU member state {member!r} is not a registered entity")
    if eu_entity not in known:
        raise ManifestError(f"EU entity {eu_entity!r} is not a registered entity")
    return EntityRegistry(entities=entities, aliases=aliases, eu_member_states=members, eu_entity=eu_entity)


def _parse_document(record: dict, base_dir: Path, registry: EntityRegistry) -> Document:
    doc_id = record.get("id", "")
    try:
        status = Status(record["status"])
    except ValueError:
        raise ManifestError(f"document {doc_id!r}: unknown status {record['status']!r}") from None
    try:
        doc_type = DocType(record["doc_type"])
    except ValueError:
        raise ManifestError(f"document {doc_id!r}: unknown doc_type {record['doc_type']!r}") from None
    if record["entity"] not in registry.entities:
        raise ManifestError(f"document {doc_id!r}: entity {record['entity']!r} not declared in registry")

    body_path = base_dir / record["path"]
    try:
        body = body_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ManifestError(f"document {doc_id!r}: cannot read body file {body_path}: {exc}") from exc

    markers = record.get("structure_markers")
    if doc_type is DocType.STRUCTURED and not markers:
        raise ManifestError(f"document {doc_id!r}: structured document without structure_markers")
    marker_tuple = None
    if markers is not None:
        marker_tuple = tuple((str(label), int(offset)) for label, offset in markers)

    return Document(
        id=doc_id,
        entity=record["entity"],
        region=record.get("region", ""),
        title=record["title"],
        year=int(record["year"]),
        language=record.get("language", "en"),
        status=status,
        doc_type=doc_type,
        body=body,
        structure_markers=marker_tuple,
        short_names=tuple(record.get("short_names", ())),
    )


def load_manifest(path: str | Path) -> Corpus:
    """Load a corpus from a line-delimited JSON manifest.

    Raises :class:`ManifestError` for unreadable files, malformed records,
    unknown status/doc_type tokens, undeclared entities and structured
    documents without markers, and :class:`DuplicateIdError` for repeated ids.
    """
    path = Path(path)
    if not path.is_file():
        raise ManifestError(f"manifest not found: {path}")
    base_dir = path.parent

    registry: EntityRegistry | None = None
    documents: list[Document] = []
    seen_ids: set[str] = set()
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ManifestError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
            if registry is None:
                if "registry" not in record:
                    raise ManifestError(f"{path}:{lineno}: first record must carry the registry")
                registry = _parse_registry(record)
                continue
            try:
                doc = _parse_document(record, base_dir, registry)
            except KeyError as exc:
                raise ManifestError(f"{path}:{lineno}: missing field {exc}") from exc
            if doc.id in seen_ids:
                raise DuplicateIdError(f"duplicate document id {doc.id!r}")
            seen_ids.add(doc.id)
            documents.append(doc)
    if registry is None:
        raise ManifestError(f"{path}: manifest has no registry record")
    return Corpus(documents=tuple(documents), registry=registry)


def save_manifest(corpus: Corpus, path: str | Path, texts_dir: str = "texts") -> None:
    """Write ``corpus`` as a manifest plus one UTF-8 body file per document.

    Inverse of :func:`load_manifest`: loading the written manifest yields an
    equal corpus with byte-equal bodies.
    """
    path = Path(path)
    base_dir = path.parent
    (base_dir / texts_dir).mkdir(parents=True, exist_ok=True)

    reg = corpus.registry
    lines = [
        json.dumps(
            {
                "registry": {
                    "entities": list(reg.entities),
                    "aliases": reg.aliases,
                    "eu_member_states": sorted(reg.eu_member_states),
                    "eu_entity": reg.eu_entity,
                }
            },
            ensure_ascii=False,
        )
    ]
    for doc in corpus.documents:
        rel = f"{texts_dir}/{doc.id}.txt"
        (base_dir / rel).write_text(doc.body, encoding="utf-8")
        record: dict = {
            "id": doc.id,
            "entity": doc.entity,
            "region": doc.region,
            "title": doc.title,
            "year": doc.year,
            "language": doc.language,
            "status": doc.status.value,
            "doc_type": doc.doc_type.value,
            "path": rel,
        }
        if doc.structure_markers is not None:
            record["structure_markers"] = [[label, offset] for label, offset in doc.structure_markers]
        if doc.short_names:
            record["short_names"] = list(doc.short_names)
        lines.append(json.dumps(record, ensure_ascii=False))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


# ---- validation -----------------------------------------------------------


def check_markers(doc: Document) -> list[Violation]:
    """Validate the structural markers of one document."""
    problems: list[Violation] = []
    markers = doc.structure_markers
    if doc.doc_type is DocType.STRUCTURED and not markers:
        problems.append(Violation("MissingMarkers", "structured document has no structure_markers", doc.id))
        return problems
    if not markers:
        return problems
    last = -1
    for label, offset in markers:
        if offset <= last:
            problems.append(
                Violation("NonMonotonicMarkers", f"marker {label!r} offset {offset} not strictly increasing", doc.id)
            )
        if not (0 <= offset < len(doc.body)):
            problems.append(
                Violation("MarkerOutOfRange", f"marker {label!r} offset {offset} outside body of length {len(doc.body)}", doc.id)
            )
        last = max(last, offset)
    return problems


def validate_corpus(corpus: Corpus) -> list[Violation]:
    """Check every corpus invariant; returns findings instead of raising.

    An empty result means the corpus is valid.
    """
    violations: list[Violation] = []
    reg = corpus.registry
    known = set(reg.entities)

    for alias, target in reg.aliases.items():
        if target not in known:
            violations.append(Violation("UnknownAliasTarget", f"alias {alias!r} maps to unknown entity {target!r}"))
    for member in sorted(reg.eu_member_states):
        if member not in known:
            violations.append(Violation("UnknownEuMember", f"EU member state {member!r} not a registered entity"))
    if reg.eu_entity not in known:
        violations.append(Violation("UnknownEuEntity", f"EU entity {reg.eu_entity!r} not a registered entity"))

    seen: set[str] = set()
    for doc in corpus.documents:
        if not doc.id:
            violations.append(Violation("EmptyId", "document id is empty", doc.id))
        if doc.id in seen:
            violations.append(Violation("DuplicateId", f"document id {doc.id!r} occurs more than once", doc.id))
        seen.add(doc.id)
        if doc.entity not in known:
            violations.append(Violation("UnknownEntity", f"entity {doc.entity!r} not a registered entity", doc.id))
        if not (YEAR_MIN <= doc.year <= YEAR_MAX):
            violations.append(Violation("YearOutOfRange", f"year {doc.year} outside [{YEAR_MIN}, {YEAR_MAX}]", doc.id))
        violations.extend(check_markers(doc))
    return violations

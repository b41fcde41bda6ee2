"""Query analysis: entity detection, article references, route classification.

Routing is conditional on what the query mentions:

* an article/section reference to a known document -> PathA (direct lookup)
* two or more jurisdictions                        -> PathC (comparison)
* exactly one jurisdiction                         -> PathB (filtered search)
* nothing recognizable                             -> Global (plain search)

Entity detection is a case-insensitive word-boundary regex over canonical
names and the registry's alias table, longest alternative first so that
e.g. "South Korea" wins over a bare "Korea".  An LLM fallback exists for
queries where the regex finds nothing at all; it is constrained to return
registered entities and degrades silently when unavailable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .corpus import Corpus, EntityRegistry
from .llm import LlmClientConfig, LlmUnavailableError, complete
from .transport import Transport

__all__ = [
    "Route",
    "ArticleRef",
    "QueryAnalysis",
    "DocumentNameIndex",
    "detect_entities",
    "detect_entities_llm",
    "detect_name_mentions",
    "extract_article_ref",
    "classify_route",
    "analyze_query",
]


class Route(str, Enum):
    PATH_A = "PathA"
    PATH_B = "PathB"
    PATH_C = "PathC"
    GLOBAL = "Global"


@dataclass(frozen=True)
class ArticleRef:
    """A structural-unit reference such as ("Article 17", "GDPR")."""

    unit_label: str
    document_hint: str


@dataclass(frozen=True)
class QueryAnalysis:
    raw_query: str
    entities: tuple[str, ...]
    article_ref: ArticleRef | None
    name_mentions: frozenset[str]
    route: Route
    used_llm_fallback: bool = False

    def to_dict(self) -> dict:
        out: dict = {
            "query": self.raw_query,
            "entities": list(self.entities),
            "name_mentions": sorted(self.name_mentions),
            "route": self.route.value,
            "used_llm_fallback": self.used_llm_fallback,
        }
        if self.article_ref is not None:
            out["article_ref"] = {
                "unit_label": self.article_ref.unit_label,
                "document_hint": self.article_ref.document_hint,
            }
        return out


@dataclass(frozen=True)
class DocumentNameIndex:
    """Lookup from document names (titles and registered short names) to doc ids."""

    surface_to_docs: dict[str, tuple[str, ...]]
    doc_titles: dict[str, str]
    doc_entities: dict[str, str]

    @classmethod
    def from_corpus(cls, corpus: Corpus) -> "DocumentNameIndex":
        surfaces: dict[str, list[str]] = {}
        titles: dict[str, str] = {}
        entities: dict[str, str] = {}
        for doc in corpus.documents:
            titles[doc.id] = doc.title
            entities[doc.id] = doc.entity
            for surface in (doc.title, *doc.short_names):
                key = surface.casefold()
                bucket = surfaces.setdefault(key, [])
                if doc.id not in bucket:
                    bucket.append(doc.id)
        return cls(
            surface_to_docs={k: tuple(v) for k, v in surfaces.items()},
            doc_titles=titles,
            doc_entities=entities,
        )

    def resolve(self, surface: str) -> tuple[str, ...]:
        return self.surface_to_docs.get(surface.casefold(), ())

    def surfaces(self) -> list[str]:
        return list(self.surface_to_docs)


def _boundary_pattern(names: list[str]) -> re.Pattern | None:
    """Word-boundary alternation over ``names``, longest first."""
    if not names:
        return None
    ordered = sorted(set(names), key=lambda n: (-len(n), n))
    return re.compile(r"\b(?:" + "|".join(re.escape(n) for n in ordered) + r")\b", re.IGNORECASE)


def detect_entities(query: str, registry: EntityRegistry) -> list[str]:
    """Canonical jurisdictions mentioned in the query, first-appearance order.

    Aliases resolve to their canonical entity and duplicates collapse; at any
    position the longest registered name wins.
    """
    surface_to_canonical = {name.casefold(): name for name in registry.entities}
    for alias, target in registry.aliases.items():
        surface_to_canonical.setdefault(alias.casefold(), target)
    pattern = _boundary_pattern(list(registry.entities) + list(registry.aliases))
    if pattern is None:
        return []
    found: list[str] = []
    for match in pattern.finditer(query):
        canonical = surface_to_canonical[match.group(0).casefold()]
        if canonical not in found:
            found.append(canonical)
    return found


_LLM_FALLBACK_PROMPT = (
    "Identify which jurisdictions the question below refers to. Reply with a "
    "comma-separated list of names taken ONLY from this list, or the word 'none'.\n"
    "Jurisdictions: {entities}\n"
    "Question: {query}"
)


def detect_entities_llm(
    query: str,
    registry: EntityRegistry,
    config: LlmClientConfig,
    transport: Transport | None = None,
) -> list[str]:
    """LLM-backed entity detection for queries the regex could not resolve.

    Whatever the model answers, only names matching ``registry.entities``
    (case-insensitively) survive; anything else is discarded.
    """
    prompt = _LLM_FALLBACK_PROMPT.format(entities=", ".join(registry.entities), query=query)
    text = complete(prompt, config, transport)
    canonical_by_fold = {name.casefold(): name for name in registry.entities}
    found: list[str] = []
    for part in re.split(r"[,\n;]+", text):
        name = canonical_by_fold.get(part.strip().strip(".").casefold())
        if name and name not in found:
            found.append(name)
    return found


def detect_name_mentions(query: str, name_index: DocumentNameIndex) -> frozenset[str]:
    """Canonical titles of documents the query names (by title or short name)."""
    pattern = _boundary_pattern(name_index.surfaces())
    if pattern is None:
        return frozenset()
    titles: set[str] = set()
    for match in pattern.finditer(query):
        for doc_id in name_index.resolve(match.group(0)):
            titles.add(name_index.doc_titles[doc_id])
    return frozenset(titles)


# "Article 17", "Art. 9", "Section 1798.100", "§ 22" — the unit token must
# start with a digit so that phrases like "article spirit" do not match, and
# the keyword must not sit inside a longer word ("subsection 5").
_UNIT_RX = re.compile(
    r"(?<![A-Za-z])(Article|Art\.|Section|§)\s*(\d+(?:\.\d+)*(?:\([A-Za-z0-9]+\))*)",
    re.IGNORECASE,
)
_UNIT_KEYWORD = {"article": "Article", "art.": "Article", "section": "Section", "§": "Section"}


def extract_article_ref(query: str, name_index: DocumentNameIndex) -> ArticleRef | None:
    """Find an article/section reference that can be tied to a known document.

    Returns None when there is no numeric unit or when no registered document
    name appears in the query to anchor the reference.
    """
    unit_match = _UNIT_RX.search(query)
    if unit_match is None:
        return None
    keyword = _UNIT_KEYWORD[unit_match.group(1).casefold()]
    unit_label = f"{keyword} {unit_match.group(2)}"

    pattern = _boundary_pattern(name_index.surfaces())
    if pattern is None:
        return None
    mentions = list(pattern.finditer(query))
    if not mentions:
        return None
    # Prefer the document named after the unit ("Article 17 of the GDPR");
    # otherwise take the first name mentioned anywhere.
    after = [m for m in mentions if m.start() >= unit_match.end()]
    hint = (after[0] if after else mentions[0]).group(0)
    return ArticleRef(unit_label=unit_label, document_hint=hint)


def classify_route(entities: list[str] | tuple[str, ...], article_ref: ArticleRef | None) -> Route:
    if article_ref is not None:
        return Route.PATH_A
    if len(entities) >= 2:
        return Route.PATH_C
    if len(entities) == 1:
        return Route.PATH_B
    return Route.GLOBAL


def analyze_query(
    query: str,
    registry: EntityRegistry,
    name_index: DocumentNameIndex,
    llm: LlmClientConfig | None = None,
    transport: Transport | None = None,
    offline: bool = True,
) -> QueryAnalysis:
    """Full analysis pass over one query.

    The LLM fallback runs only when the regex detector finds nothing, an LLM
    is configured, and we are not offline; if it fails the query degrades to
    the Global route rather than erroring out.
    """
    entities = detect_entities(query, registry)
    used_fallback = False
    if not entities and llm is not None and not offline:
        used_fallback = True
        try:
            entities = detect_entities_llm(query, registry, llm, transport)
        except LlmUnavailableError:
            entities = []
    article_ref = extract_article_ref(query, name_index)
    mentions = detect_name_mentions(query, name_index)
    return QueryAnalysis(
        raw_query=query,
        entities=tuple(entities),
        article_ref=article_ref,
        name_mentions=mentions,
        route=classify_route(entities, article_ref),
        used_llm_fallback=used_fallback,
    )

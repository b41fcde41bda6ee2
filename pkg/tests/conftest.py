"""Shared fixtures: the committed corpus, a built index, and an offline engine.

Everything here is session-scoped — the corpus is small enough that building
the index once keeps the whole suite fast, and every consumer treats these
objects as read-only.
"""

from __future__ import annotations

from pathlib import Path

import pytest

from jurisrag.chunking import ChunkPolicy, chunk_corpus
from jurisrag.corpus import load_manifest
from jurisrag.embedding import EmbedderConfig, embed_batch
from jurisrag.engine import QueryEngine
from jurisrag.index import build_index

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
MANIFEST = FIXTURES / "corpus" / "manifest.jsonl"
DATA = Path(__file__).resolve().parent / "data"

# Populated by tests/test_acceptance.py; echoed after the run so the
# per-criterion verdicts survive pytest's output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def refuse_network(url, payload, headers, timeout):
    raise AssertionError(f"offline test attempted a network call to {url}")


@pytest.fixture(scope="session")
def corpus():
    return load_manifest(MANIFEST)


@pytest.fixture(scope="session")
def chunks(corpus):
    return chunk_corpus(corpus, ChunkPolicy())


@pytest.fixture(scope="session")
def embedder_config():
    return EmbedderConfig()


@pytest.fixture(scope="session")
def index(chunks, embedder_config):
    vectors = embed_batch([c.text for c in chunks], embedder_config, refuse_network)
    return build_index(chunks, vectors, dim=embedder_config.dim)


@pytest.fixture(scope="session")
def engine(corpus, index, embedder_config):
    # The failing transport proves that offline retrieval + generation +
    # evaluation never touch the network.
    return QueryEngine(
        corpus,
        index,
        embedder_config=embedder_config,
        offline=True,
        transport=refuse_network,
    )

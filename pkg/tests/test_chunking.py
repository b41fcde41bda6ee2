"""Splitter and chunker behaviour.

The span-arithmetic and merge examples here were worked out by hand before
being run, so they act as an independent oracle for the splitter; the
hypothesis properties then generalise cover/size/overlap guarantees to
arbitrary text.
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jurisrag.chunking import (
    DEFAULT_SEPARATORS,
    ChunkPolicy,
    InvalidMarkersError,
    chunk_corpus,
    chunk_document,
    chunk_structured,
    chunk_unstructured,
    recursive_split,
    split_spans,
    structural_units,
)
from jurisrag.corpus import DocType, Document, Status


def make_doc(body: str, doc_type=DocType.UNSTRUCTURED, markers=None, **overrides) -> Document:
    fields = dict(
        id="doc-1",
        entity="Atlantis",
        region="Ocean",
        title="Atlantis AI Act",
        year=2020,
        language="en",
        status=Status.ENACTED,
        doc_type=doc_type,
        body=body,
        structure_markers=markers,
        short_names=(),
    )
    fields.update(overrides)
    return Document(**fields)


class TestCharacterWindowArithmetic:
    """Pure stride arithmetic when only the character-level fallback applies."""

    @pytest.mark.parametrize(
        "length, expected",
        [
            (1, [(0, 1)]),
            (2000, [(0, 2000)]),
            (2001, [(0, 2000), (1900, 2001)]),
            (3900, [(0, 2000), (1900, 3900)]),
            (4200, [(0, 2000), (1900, 3900), (3800, 4200)]),
            (5000, [(0, 2000), (1900, 3900), (3800, 5000)]),
        ],
    )
    def test_stride_equals_target_minus_overlap(self, length, expected):
        assert split_spans("x" * length, 2000, 100, ("",)) == expected

    def test_zero_overlap(self):
        assert split_spans("x" * 10, 4, 0, ("",)) == [(0, 4), (4, 8), (8, 10)]

    def test_empty_text(self):
        assert split_spans("", 2000, 100) == []
        assert recursive_split("", 1000, 200) == []


class TestSeparatorCascade:
    def test_sentence_separator_attaches_to_preceding_piece(self):
        assert recursive_split("One. Two. Three.", 8, 0) == ["One. ", "Two. ", "Three."]

    def test_word_separator_with_overlap_reemission(self):
        # "aa bb cc dd": word pieces of 3,3,3,2 chars; target 6 keeps two words
        # per chunk and the 3-char overlap re-emits the trailing word.
        assert recursive_split("aa bb cc dd", 6, 3) == ["aa bb ", "bb cc ", "cc dd"]

    def test_paragraph_boundary_is_preferred_over_mid_text_cut(self):
        text = "A" * 600 + "\n\n" + "B" * 600
        assert split_spans(text, 1000, 200) == [(0, 602), (602, 1202)]

    def test_first_present_separator_wins(self):
        # No blank line anywhere, so the cascade falls through to "\n".
        text = "A" * 30 + "\n" + "B" * 30
        assert split_spans(text, 40, 0) == [(0, 31), (31, 61)]

    def test_oversized_piece_recurses_into_finer_separators(self):
        text = "alpha beta gamma delta. " * 3
        spans = split_spans(text, 10, 0)
        assert "".join(text[s:e] for s, e in spans) == text
        assert all(e - s <= 10 for s, e in spans)

    def test_character_fallback_when_no_separator_fits(self):
        assert recursive_split("abcdefgh", 3, 0) == ["abc", "def", "gh"]

    def test_whole_text_fits_in_one_chunk(self):
        assert recursive_split("short text", 1000, 200) == ["short text"]


@st.composite
def split_case(draw):
    text = draw(st.text(alphabet="ab .\n", max_size=300))
    target = draw(st.integers(min_value=1, max_value=40))
    overlap = draw(st.integers(min_value=0, max_value=target - 1))
    return text, target, overlap


class TestSplitterProperties:
    @settings(max_examples=200, deadline=None)
    @given(split_case())
    def test_cover_size_and_overlap_bounds(self, case):
        text, target, overlap = case
        spans = split_spans(text, target, overlap)
        if not text:
            assert spans == []
            return
        assert spans[0][0] == 0
        assert spans[-1][1] == len(text)
        for start, end in spans:
            assert 0 <= start < end <= len(text)
            assert end - start <= target
        for (s1, e1), (s2, e2) in zip(spans, spans[1:]):
            assert s2 > s1 and e2 > e1  # strictly advancing: no stalls
            assert s2 <= e1  # no gaps
            assert e1 - s2 <= overlap  # carried context never exceeds overlap

    @settings(max_examples=200, deadline=None)
    @given(split_case())
    def test_overlap_removed_concatenation_reconstructs_text(self, case):
        text, target, overlap = case
        spans = split_spans(text, target, overlap)
        rebuilt = ""
        prev_end = 0
        for start, end in spans:
            rebuilt += text[start:end][prev_end - start:]
            prev_end = end
        assert rebuilt == text

    @settings(max_examples=100, deadline=None)
    @given(split_case())
    def test_chunks_are_verbatim_slices(self, case):
        text, target, overlap = case
        pieces = recursive_split(text, target, overlap)
        spans = split_spans(text, target, overlap)
        assert pieces == [text[s:e] for s, e in spans]


TWO_ARTICLES = "Article 1 — One.\nFirst words.\n\nArticle 2 — Two.\nSecond words."


class TestStructuralUnits:
    def test_units_span_marker_to_marker(self):
        doc = make_doc(
            TWO_ARTICLES,
            doc_type=DocType.STRUCTURED,
            markers=(("Article 1", 0), ("Article 2", TWO_ARTICLES.index("Article 2"))),
        )
        units = structural_units(doc)
        assert units == [
            ("Article 1", 0, TWO_ARTICLES.index("Article 2")),
            ("Article 2", TWO_ARTICLES.index("Article 2"), len(TWO_ARTICLES)),
        ]

    def test_text_before_first_marker_is_not_chunked(self):
        body = "Preamble text.\n\n" + TWO_ARTICLES
        offset = len("Preamble text.\n\n")
        doc = make_doc(
            body,
            doc_type=DocType.STRUCTURED,
            markers=(("Article 1", offset), ("Article 2", body.index("Article 2"))),
        )
        chunks = chunk_structured(doc)
        assert chunks[0].text.startswith("Article 1")
        assert "Preamble" not in "".join(c.text for c in chunks)

    def test_non_monotonic_markers_raise(self):
        doc = make_doc(
            TWO_ARTICLES,
            doc_type=DocType.STRUCTURED,
            markers=(("Article 2", 30), ("Article 1", 0)),
        )
        with pytest.raises(InvalidMarkersError):
            structural_units(doc)

    def test_marker_beyond_body_raises(self):
        doc = make_doc("tiny", doc_type=DocType.STRUCTURED, markers=(("Article 1", 99),))
        with pytest.raises(InvalidMarkersError):
            structural_units(doc)


class TestStructuredChunking:
    def test_one_chunk_per_small_unit(self):
        doc = make_doc(
            TWO_ARTICLES,
            doc_type=DocType.STRUCTURED,
            markers=(("Article 1", 0), ("Article 2", TWO_ARTICLES.index("Article 2"))),
        )
        chunks = chunk_structured(doc)
        assert [c.structural_ref for c in chunks] == ["Article 1", "Article 2"]
        assert "".join(c.text for c in chunks) == TWO_ARTICLES
        assert [c.chunk_id for c in chunks] == ["doc-1:0000", "doc-1:0001"]

    def test_oversize_unit_splits_with_exact_overlap(self):
        body = "Article 1 " + "x" * 4190  # one 4200-char unit
        doc = make_doc(body, doc_type=DocType.STRUCTURED, markers=(("Article 1", 0),))
        chunks = chunk_structured(doc)
        assert [len(c.text) for c in chunks] == [2000, 2000, 400]
        assert all(c.structural_ref == "Article 1" for c in chunks)
        for left, right in zip(chunks, chunks[1:]):
            assert left.text[-100:] == right.text[:100]
        rebuilt = chunks[0].text + "".join(c.text[100:] for c in chunks[1:])
        assert rebuilt == body

    def test_fixture_oversize_article_spans(self, corpus):
        doc = corpus.document("gdpr")
        sub = [c for c in chunk_structured(doc) if c.structural_ref == "Article 17"]
        assert [len(c.text) for c in sub] == [2000, 2000, 400]
        assert sub[0].text[-100:] == sub[1].text[:100]
        assert sub[1].text[-100:] == sub[2].text[:100]

    def test_metadata_copied_onto_chunks(self):
        doc = make_doc(
            TWO_ARTICLES,
            doc_type=DocType.STRUCTURED,
            markers=(("Article 1", 0), ("Article 2", TWO_ARTICLES.index("Article 2"))),
        )
        chunk = chunk_structured(doc)[0]
        assert (chunk.doc_id, chunk.entity, chunk.title, chunk.year, chunk.status) == (
            "doc-1",
            "Atlantis",
            "Atlantis AI Act",
            2020,
            Status.ENACTED,
        )


class TestUnstructuredChunking:
    def test_short_body_is_single_chunk(self):
        doc = make_doc("A short policy statement.")
        chunks = chunk_unstructured(doc)
        assert len(chunks) == 1
        assert chunks[0].text == "A short policy statement."
        assert chunks[0].structural_ref is None

    def test_long_body_overlaps_at_most_policy_overlap(self):
        body = " ".join(f"sentence {i} words here." for i in range(200))
        chunks = chunk_unstructured(doc := make_doc(body))
        assert all(len(c.text) <= 1000 for c in chunks)
        prev_end = 0
        pos = 0
        for c in chunks:
            at = doc.body.index(c.text, pos)
            if prev_end:
                assert prev_end - at <= 200
            pos = at + 1
            prev_end = at + len(c.text)
        assert prev_end == len(body)


class TestCorpusChunking:
    def test_ordinals_contiguous_per_document(self, chunks):
        seen: dict[str, int] = {}
        for chunk in chunks:
            expected = seen.get(chunk.doc_id, 0)
            assert chunk.ordinal == expected
            assert chunk.chunk_id == f"{chunk.doc_id}:{chunk.ordinal:04d}"
            seen[chunk.doc_id] = expected + 1

    def test_deterministic(self, corpus, chunks):
        assert chunk_corpus(corpus, ChunkPolicy()) == chunks

    def test_size_caps_respected_on_fixture_corpus(self, corpus, chunks):
        structured_ids = {d.id for d in corpus.documents if d.doc_type is DocType.STRUCTURED}
        for chunk in chunks:
            cap = 2000 if chunk.doc_id in structured_ids else 1000
            assert len(chunk.text) <= cap

    def test_every_fixture_document_reconstructs(self, corpus):
        for doc in corpus.documents:
            doc_chunks = chunk_document(doc)
            if doc.doc_type is DocType.STRUCTURED:
                by_ref: dict[str, list] = {}
                for c in doc_chunks:
                    by_ref.setdefault(c.structural_ref, []).append(c)
                rebuilt = ""
                for label, _start, _end in structural_units(doc):
                    parts = by_ref[label]
                    rebuilt += parts[0].text + "".join(p.text[100:] for p in parts[1:])
                assert rebuilt == doc.body, doc.id
            else:
                spans = split_spans(doc.body, 1000, 200)
                assert [c.text for c in doc_chunks] == [doc.body[s:e] for s, e in spans]
                rebuilt = ""
                prev_end = 0
                for s, e in spans:
                    rebuilt += doc.body[s:e][prev_end - s:]
                    prev_end = e
                assert rebuilt == doc.body, doc.id


class TestChunkPolicy:
    def test_defaults(self):
        policy = ChunkPolicy()
        assert policy.structured_max_chars == 2000
        assert policy.structured_split_overlap_chars == 100
        assert policy.unstructured_chunk_chars == 1000
        assert policy.unstructured_overlap_chars == 200
        assert policy.separators == ("\n\n", "\n", ". ", " ", "")

    def test_overlap_must_be_smaller_than_target(self):
        with pytest.raises(ValueError):
            ChunkPolicy(unstructured_overlap_chars=1000)

    def test_separators_must_end_with_character_fallback(self):
        with pytest.raises(ValueError):
            ChunkPolicy(separators=("\n\n", " "))

    def test_char_counts_are_code_points(self):
        # 3 code points; UTF-8 byte length would be larger.
        assert split_spans("é😀é", 2, 0) == [(0, 2), (2, 3)]

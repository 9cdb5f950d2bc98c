import random

import pytest
from hypothesis import given, strategies as st

from serkit.core import (
    ENTITY_TYPES,
    EntityType,
    MalformedIOBError,
    OverlappingSpansError,
    Span,
    TagLabel,
    decode_spans,
    encode_iob,
    repair_iob,
    validate_iob,
)

OS = EntityType.OPERATING_SYSTEM
APP = EntityType.APPLICATION
DEV = EntityType.DEVICE
LANG = EntityType.LANGUAGE


def labels(*texts):
    return tuple(TagLabel.parse(t) for t in texts)


class TestEncode:
    def test_multiword_spans(self):
        # "Windows XP ... Internet Explorer 6" with two entity spans
        out = encode_iob(7, [Span(0, 2, OS), Span(4, 7, APP)])
        assert [str(l) for l in out] == [
            "B-OPERATING_SYSTEM",
            "I-OPERATING_SYSTEM",
            "O",
            "O",
            "B-APPLICATION",
            "I-APPLICATION",
            "I-APPLICATION",
        ]

    def test_no_spans(self):
        assert [str(l) for l in encode_iob(3, [])] == ["O", "O", "O"]

    def test_single_token_entity(self):
        assert [str(l) for l in encode_iob(1, [Span(0, 1, DEV)])] == ["B-DEVICE"]

    def test_overlap_rejected_with_pair(self):
        with pytest.raises(OverlappingSpansError) as err:
            encode_iob(5, [Span(0, 3, OS), Span(2, 4, APP)])
        assert err.value.first.as_triple() == (0, 3, "OPERATING_SYSTEM")
        assert err.value.second.as_triple() == (2, 4, "APPLICATION")

    def test_span_out_of_range(self):
        with pytest.raises(ValueError):
            encode_iob(2, [Span(1, 3, OS)])


class TestValidate:
    def test_i_without_b(self):
        out = validate_iob(labels("O", "I-DEVICE"))
        assert len(out) == 1
        assert (out[0].index, out[0].reason) == (1, "I-without-B")

    def test_i_type_mismatch(self):
        out = validate_iob(labels("B-DEVICE", "I-LANGUAGE"))
        assert len(out) == 1
        assert (out[0].index, out[0].reason) == (1, "I-type-mismatch")

    def test_leading_i(self):
        out = validate_iob(labels("I-DEVICE"))
        assert (out[0].index, out[0].reason) == (0, "I-without-B")

    def test_encode_output_always_valid(self):
        out = encode_iob(6, [Span(0, 2, OS), Span(3, 6, APP)])
        assert validate_iob(out) == []


class TestDecode:
    def test_direct_inverse(self):
        spans = decode_spans(labels("B-OPERATING_SYSTEM", "I-OPERATING_SYSTEM", "O"))
        assert [s.as_triple() for s in spans] == [(0, 2, "OPERATING_SYSTEM")]

    def test_empty(self):
        assert decode_spans(labels("O", "O")) == []

    def test_adjacent_b(self):
        spans = decode_spans(labels("B-DEVICE", "B-DEVICE"))
        assert [s.as_triple() for s in spans] == [(0, 1, "DEVICE"), (1, 2, "DEVICE")]

    def test_malformed_raises_with_index(self):
        with pytest.raises(MalformedIOBError) as err:
            decode_spans(labels("O", "I-DEVICE", "I-LANGUAGE"))
        assert err.value.index == 1
        assert err.value.reason == "I-without-B"


def brute_force_scan(label_strings):
    """Independent left-to-right span scanner used as the decode oracle."""
    spans = []
    i = 0
    n = len(label_strings)
    while i < n:
        if label_strings[i].startswith("B-"):
            etype = label_strings[i][2:]
            j = i + 1
            while j < n and label_strings[j] == f"I-{etype}":
                j += 1
            spans.append((i, j, etype))
            i = j
        else:
            i += 1
    return spans


def random_wellformed_labels(rng, length):
    out = []
    open_type = None
    for _ in range(length):
        choices = ["O", "B"]
        if open_type is not None:
            choices.append("I")
        kind = rng.choice(choices)
        if kind == "O":
            out.append("O")
            open_type = None
        elif kind == "B":
            open_type = rng.choice(ENTITY_TYPES).value
            out.append(f"B-{open_type}")
        else:
            out.append(f"I-{open_type}")
    return out


def test_decode_matches_brute_force_scanner_on_1000_random_sequences():
    rng = random.Random(20240901)
    for _ in range(1000):
        strs = random_wellformed_labels(rng, rng.randint(0, 24))
        decoded = [s.as_triple() for s in decode_spans(labels(*strs))]
        assert decoded == brute_force_scan(strs)


@st.composite
def span_sets(draw):
    n_tokens = draw(st.integers(min_value=1, max_value=18))
    bounds = draw(
        st.lists(st.integers(min_value=0, max_value=n_tokens), unique=True, max_size=8)
    )
    bounds = sorted(bounds)
    spans = []
    for a, b in zip(bounds[::2], bounds[1::2]):
        if a < b:
            etype = draw(st.sampled_from(ENTITY_TYPES))
            spans.append(Span(a, b, etype))
    return n_tokens, spans


@given(span_sets())
def test_roundtrip_encode_then_decode(case):
    n_tokens, spans = case
    decoded = decode_spans(encode_iob(n_tokens, spans))
    assert [s.as_triple() for s in decoded] == [s.as_triple() for s in sorted(spans)]


@given(span_sets())
def test_encode_output_passes_validation(case):
    n_tokens, spans = case
    assert validate_iob(encode_iob(n_tokens, spans)) == []


class TestRepair:
    def test_orphan_i_becomes_b(self):
        out = repair_iob(labels("O", "I-DEVICE"))
        assert [str(l) for l in out] == ["O", "B-DEVICE"]

    def test_type_switch_becomes_b(self):
        out = repair_iob(labels("B-DEVICE", "I-LANGUAGE"))
        assert [str(l) for l in out] == ["B-DEVICE", "B-LANGUAGE"]

    def test_wellformed_untouched(self):
        seq = labels("B-DEVICE", "I-DEVICE", "O")
        assert repair_iob(seq) == seq

    @given(st.lists(st.sampled_from([f"{k}-{t.value}" for k in "BI" for t in ENTITY_TYPES] + ["O"]), max_size=12))
    def test_repair_always_wellformed(self, strs):
        assert validate_iob(repair_iob(labels(*strs))) == []

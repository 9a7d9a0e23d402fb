import pytest
from hypothesis import given, strategies as st

from oracles import brute_upsilon_bar, brute_upsilon_bar_ext, pair_of
from tautdiv.boundary import (
    IRR,
    BoundaryIndex,
    HalfIndex,
    PointClass,
    SurfaceType,
    canonicalize,
    enumerate_upsilon_bar,
    enumerate_upsilon_bar_ext,
    extended_class,
    parse_index,
)
from tautdiv.errors import InvalidHalf, InvalidSymbol, MalformedInput, UnstableSurface

STABLE = [(g, n) for g in range(6) for n in range(7) if 2 * g - 2 + n > 0]


def split(i, *labels):
    return BoundaryIndex("split", i, tuple(labels))


@pytest.mark.parametrize("g,n", [(0, 0), (0, 1), (0, 2), (1, 0)])
def test_unstable_surfaces_rejected(g, n):
    with pytest.raises(UnstableSurface, match="2g-2\\+n > 0"):
        SurfaceType(g, n)


def test_surface_rejects_negative_and_huge():
    with pytest.raises(UnstableSurface):
        SurfaceType(-1, 5)
    with pytest.raises(UnstableSurface):
        SurfaceType(1, 63)


def test_canonicalize_examples():
    assert canonicalize((2, ()), SurfaceType(3, 0)) == split(1)
    with pytest.raises(InvalidHalf):
        canonicalize((1, {2}), SurfaceType(1, 2))
    assert canonicalize((0, {1, 2}), SurfaceType(1, 2)) == split(0, 1, 2)
    assert canonicalize(HalfIndex(1, ()), SurfaceType(1, 2)) == split(0, 1, 2)


def test_canonicalize_genus_tie_uses_label_order():
    s = SurfaceType(2, 2)
    assert canonicalize((1, {2}), s) == split(1, 1)
    assert canonicalize((1, {1, 2}), s) == split(1)


def test_canonicalize_rejects_excluded_half():
    with pytest.raises(InvalidHalf):
        canonicalize((0, ()), SurfaceType(2, 0))
    with pytest.raises(InvalidHalf):
        canonicalize((4, ()), SurfaceType(3, 0))


@pytest.mark.parametrize(
    "g,n,expected",
    [
        (1, 1, []),
        (2, 0, [split(1)]),
        (0, 4, [split(0, 1, 2), split(0, 1, 3), split(0, 1, 4)]),
    ],
)
def test_enumerate_examples(g, n, expected):
    assert list(enumerate_upsilon_bar(SurfaceType(g, n))) == expected


def test_enumerate_ext_examples():
    assert enumerate_upsilon_bar_ext(SurfaceType(1, 1)) == (PointClass(1),)
    assert enumerate_upsilon_bar_ext(SurfaceType(2, 0)) == (split(1),)
    assert set(enumerate_upsilon_bar_ext(SurfaceType(1, 2))) == {split(0, 1, 2), PointClass(1), PointClass(2)}


@pytest.mark.parametrize("g,n", STABLE)
def test_enumeration_matches_brute_force(g, n):
    s = SurfaceType(g, n)
    ours = enumerate_upsilon_bar(s)
    pairs = [pair_of(b.genus, b.labels, g, n) for b in ours]
    assert len(set(pairs)) == len(pairs)
    assert set(pairs) == brute_upsilon_bar(g, n)
    ext = [
        pair_of(0, {b.point}, g, n) if isinstance(b, PointClass) else pair_of(b.genus, b.labels, g, n)
        for b in enumerate_upsilon_bar_ext(s)
    ]
    assert set(ext) == brute_upsilon_bar_ext(g, n)


@pytest.mark.parametrize("g,n", STABLE)
def test_enumeration_order_and_exclusions(g, n):
    s = SurfaceType(g, n)
    found = enumerate_upsilon_bar(s)
    assert list(found) == sorted(found, key=lambda b: (b.genus, b.labels))
    for b in found:
        for half in (HalfIndex(b.genus, b.labels), HalfIndex(b.genus, b.labels).complement(s)):
            assert not (half.genus == 0 and len(half.labels) <= 1)


@pytest.mark.parametrize("g,n", STABLE)
def test_self_paired_classes(g, n):
    s = SurfaceType(g, n)
    for b in enumerate_upsilon_bar(s):
        h = HalfIndex(b.genus, b.labels)
        if h == h.complement(s):
            assert n == 0 and g % 2 == 0
    if n == 0 and g % 2 == 0 and g >= 2:
        assert split(g // 2) in enumerate_upsilon_bar(s)


@st.composite
def valid_halves(draw):
    g = draw(st.integers(0, 6))
    n = draw(st.integers(0, 7))
    if 2 * g - 2 + n <= 0:
        n = 3
    s = SurfaceType(g, n)
    i = draw(st.integers(0, g))
    labels = draw(st.frozensets(st.integers(1, n), max_size=n)) if n else frozenset()
    return s, HalfIndex(i, labels)


@given(valid_halves())
def test_canonicalize_involution(case):
    s, h = case
    c = h.complement(s)
    if not (h.is_valid(s) and c.is_valid(s)):
        with pytest.raises(InvalidHalf):
            canonicalize(h, s)
        return
    b = canonicalize(h, s)
    assert b == canonicalize(c, s)
    assert canonicalize((b.genus, b.labels), s) == b
    assert b.genus <= s.g - b.genus


@given(valid_halves())
def test_extended_class_matches_pairs(case):
    s, h = case
    pair = pair_of(h.genus, h.labels, s.g, s.n)
    if pair not in brute_upsilon_bar_ext(s.g, s.n):
        with pytest.raises(InvalidHalf):
            extended_class(h, s)
        return
    cls = extended_class(h, s)
    if isinstance(cls, PointClass):
        assert pair == pair_of(0, {cls.point}, s.g, s.n)
    else:
        assert pair == pair_of(cls.genus, cls.labels, s.g, s.n)


def test_encoding_round_trip():
    s = SurfaceType(2, 3)
    for b in enumerate_upsilon_bar_ext(s) + (IRR,):
        assert parse_index(b.encode(), s) == b
    assert split(1).encode() == "split:1:[]"
    assert split(0, 1, 2).encode() == "split:0:[1,2]"
    assert PointClass(3).encode() == "pt:3"


def test_parse_index_canonicalizes_and_validates():
    s = SurfaceType(3, 0)
    assert parse_index("split:2:[]", s) == split(1)
    with pytest.raises(InvalidSymbol):
        parse_index("split:0:[]", s)
    with pytest.raises(InvalidSymbol):
        parse_index("pt:1", s)
    with pytest.raises(MalformedInput):
        parse_index("bogus", s)

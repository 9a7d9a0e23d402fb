"""Boundary divisor index classes of the moduli space of pointed stable curves.

A *half* is a pair ``(i, I)`` with ``0 <= i <= g`` and ``I`` a subset of
``{1, ..., n}``; the halves ``(0, {})`` and ``(0, {t})`` are excluded because
the corresponding component would be unstable.  A boundary divisor of
``M_{g,n}-bar`` other than the irreducible one is labelled by an unordered
pair of complementary halves ``{(i, I), (g - i, [n] - I)}``.  We pick one
half of each pair as the canonical representative:

* the half of smaller genus;
* on a genus tie, the half whose sorted label tuple is lexicographically
  smaller.

    >>> S = SurfaceType(3, 0)
    >>> canonicalize((2, ()), S)
    BoundaryIndex(kind='split', genus=1, labels=())
    >>> [b.encode() for b in enumerate_upsilon_bar(SurfaceType(0, 4))]
    ['split:0:[1,2]', 'split:0:[1,3]', 'split:0:[1,4]']
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from .errors import InvalidHalf, InvalidSymbol, MalformedInput, UnstableSurface

MAX_POINTS = 62


@dataclass(frozen=True, order=True)
class SurfaceType:
    """The pair ``(g, n)``; construction fails unless ``2g - 2 + n > 0``."""

    g: int
    n: int

    def __post_init__(self):
        for name in ("g", "n"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise UnstableSurface(f"{name} must be a non-negative integer, got {value!r}")
        if 2 * self.g - 2 + self.n <= 0:
            raise UnstableSurface(
                f"(g, n) = ({self.g}, {self.n}) is not stable: need 2g-2+n > 0"
            )
        if self.n > MAX_POINTS:
            raise UnstableSurface(f"n = {self.n} exceeds the supported maximum {MAX_POINTS}")

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def __str__(self):
        return f"M_{{{self.g},{self.n}}}"


@dataclass(frozen=True)
class HalfIndex:
    """One side ``(i, I)`` of a splitting; not necessarily a valid member."""

    genus: int
    labels: frozenset

    def __init__(self, genus: int, labels: Iterable[int] = ()):
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "labels", frozenset(labels))

    def complement(self, surface: SurfaceType) -> "HalfIndex":
        return HalfIndex(surface.g - self.genus, set(surface.points) - self.labels)

    def is_valid(self, surface: SurfaceType) -> bool:
        """Membership in the set of valid halves of ``surface``."""
        if not 0 <= self.genus <= surface.g:
            return False
        if not all(isinstance(t, int) and 1 <= t <= surface.n for t in self.labels):
            return False
        return self.genus > 0 or len(self.labels) >= 2


@dataclass(frozen=True, order=True)
class BoundaryIndex:
    """Either the irreducible boundary class or a canonical splitting class ``[i, I]``."""

    kind: str
    genus: int = 0
    labels: tuple = ()

    @property
    def is_irr(self) -> bool:
        return self.kind == "irr"

    def encode(self) -> str:
        if self.is_irr:
            return "irr"
        return f"split:{self.genus}:{_encode_labels(self.labels)}"

    def __str__(self):
        if self.is_irr:
            return "δ_irr"
        return f"δ[{self.genus},{{{','.join(map(str, self.labels))}}}]"


IRR = BoundaryIndex("irr")


@dataclass(frozen=True, order=True)
class PointClass:
    """The formal class ``[0, {t}]``, identified with ``-psi_t``."""

    point: int

    def encode(self) -> str:
        return f"pt:{self.point}"

    def __str__(self):
        return f"δ[0,{{{self.point}}}]"


ExtendedBoundaryIndex = Union[BoundaryIndex, PointClass]


def _encode_labels(labels: Iterable[int]) -> str:
    return "[" + ",".join(str(t) for t in sorted(labels)) + "]"


def _as_half(half) -> HalfIndex:
    if isinstance(half, HalfIndex):
        return half
    genus, labels = half
    return HalfIndex(genus, labels)


def canonicalize(half, surface: SurfaceType) -> BoundaryIndex:
    """Canonical splitting class ``[i, I]`` of the half ``(i, I)``.

    ``half`` is a :class:`HalfIndex` or a plain ``(i, I)`` pair.  Raises
    :class:`InvalidHalf` when the half or its complement is excluded.
    """
    h = _as_half(half)
    c = h.complement(surface)
    if not h.is_valid(surface):
        raise InvalidHalf(f"({h.genus}, {sorted(h.labels)}) is not a valid half on {surface}")
    if not c.is_valid(surface):
        raise InvalidHalf(
            f"complement ({c.genus}, {sorted(c.labels)}) of ({h.genus}, {sorted(h.labels)}) "
            f"is not a valid half on {surface}"
        )
    key_h = (h.genus, tuple(sorted(h.labels)))
    key_c = (c.genus, tuple(sorted(c.labels)))
    genus, labels = min(key_h, key_c)
    return BoundaryIndex("split", genus, labels)


def extended_class(half, surface: SurfaceType) -> ExtendedBoundaryIndex:
    """Like :func:`canonicalize` but maps ``(0, {t})`` and its complement to ``pt:t``."""
    h = _as_half(half)
    for side in (h, h.complement(surface)):
        if side.genus == 0 and len(side.labels) == 1:
            (t,) = side.labels
            if 1 <= t <= surface.n and (side is h or h.is_valid(surface)):
                return PointClass(t)
    return canonicalize(h, surface)


def enumerate_upsilon_bar(surface: SurfaceType) -> tuple[BoundaryIndex, ...]:
    """All canonical splitting classes of ``surface``, ordered by (genus, labels)."""
    g, n = surface.g, surface.n
    points = surface.points
    result = []
    for i in range(g // 2 + 1):
        for size in range(n + 1):
            for labels in combinations(points, size):
                half = HalfIndex(i, labels)
                comp = half.complement(surface)
                if not (half.is_valid(surface) and comp.is_valid(surface)):
                    continue
                # on a genus tie keep only the lexicographically smaller side
                if 2 * i == g and tuple(sorted(comp.labels)) < labels:
                    continue
                result.append(BoundaryIndex("split", i, labels))
    result.sort()
    return tuple(result)


def enumerate_upsilon_bar_ext(surface: SurfaceType) -> tuple[ExtendedBoundaryIndex, ...]:
    return enumerate_upsilon_bar(surface) + tuple(PointClass(t) for t in surface.points)


def is_boundary_class(index, surface: SurfaceType) -> bool:
    """True when ``index`` is a canonical split class of ``surface`` (irr counts too)."""
    if not isinstance(index, BoundaryIndex):
        return False
    if index.is_irr:
        return True
    try:
        return canonicalize((index.genus, index.labels), surface) == index
    except InvalidHalf:
        return False


_SPLIT_RE = re.compile(r"^split:(\d+):\[([0-9,\s]*)\]$")
_POINT_RE = re.compile(r"^pt:(\d+)$")


def parse_index(text: str, surface: SurfaceType) -> ExtendedBoundaryIndex:
    """Parse ``"irr"``, ``"split:i:[...]"`` or ``"pt:t"``.

    A split label that is a valid half but not the canonical side is
    canonicalized; anything not naming a class of ``surface`` raises
    :class:`InvalidSymbol`.
    """
    text = text.strip()
    if text == "irr":
        return IRR
    m = _SPLIT_RE.match(text)
    if m:
        genus = int(m.group(1))
        body = m.group(2).strip()
        labels = tuple(int(t) for t in body.split(",")) if body else ()
        if len(set(labels)) != len(labels):
            raise InvalidSymbol(f"repeated label in {text!r}")
        try:
            return canonicalize((genus, labels), surface)
        except InvalidHalf as exc:
            raise InvalidSymbol(str(exc)) from None
    m = _POINT_RE.match(text)
    if m:
        t = int(m.group(1))
        if not 1 <= t <= surface.n:
            raise InvalidSymbol(f"point {t} out of range for {surface}")
        return PointClass(t)
    raise MalformedInput(f"cannot parse boundary index {text!r}")

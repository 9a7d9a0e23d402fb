"""Test curves: one-parameter families with known degrees on every generator.

Four families, each a rational curve in ``M_{g,n}-bar``:

=======  ===========  ==========  ====================================
family   parameters   deg δ_irr   boundary degrees
=======  ===========  ==========  ====================================
A        --           -1          0 everywhere
B        (i, I)       0           -1 on [i, I]
C        (i, I)       -2          +1 on [i, I]
D        (i, j, I, J) 0           +1 on [i+j, I∪J]; -1 on [i, I], [j, J]
=======  ===========  ==========  ====================================

All families have degree 0 on ``lambda``.  Degrees on ``psi_t`` come from the
identification of the point class ``[0,{t}]`` with ``-psi_t``.  Coinciding
classes in family D add up.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .boundary import (
    BoundaryIndex,
    HalfIndex,
    PointClass,
    SurfaceType,
    _encode_labels,
    extended_class,
    is_boundary_class,
)
from .divisors import Lambda, Psi, TautClass
from .errors import GenusZeroUnsupported, InvalidCurve, InvalidHalf, InvalidSymbol


def _class_or_none(genus, labels, surface):
    try:
        return extended_class(HalfIndex(genus, labels), surface)
    except InvalidHalf:
        return None


@dataclass(frozen=True)
class TestCurve:
    """A test curve of family A, B, C or D on ``surface``.

    ``i, I`` are the first parameter pair (B, C, D); ``j, J`` the second (D).
    """

    __test__ = False  # keep pytest from collecting this class

    surface: SurfaceType
    family: str
    i: int = 0
    I: tuple = ()
    j: int = 0
    J: tuple = ()
    _boundary: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _irr: int = field(default=0, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "I", tuple(sorted(self.I)))
        object.__setattr__(self, "J", tuple(sorted(self.J)))
        g = self.surface.g
        boundary = Counter()
        if self.family == "A":
            if g < 3:
                raise InvalidCurve("family A needs g >= 3")
            irr = -1
        elif self.family in ("B", "C"):
            if g < 2:
                raise InvalidCurve(f"family {self.family} needs g >= 2")
            lo, hi = (0, g - 2) if self.family == "B" else (1, g - 1)
            if not lo <= self.i <= hi:
                raise InvalidCurve(f"family {self.family} needs {lo} <= i <= {hi}, got {self.i}")
            cls = _class_or_none(self.i, self.I, self.surface)
            if cls is None:
                raise InvalidCurve(f"[{self.i}, {set(self.I) or '{}'}] is not a boundary class")
            irr = 0 if self.family == "B" else -2
            boundary[cls] += -1 if self.family == "B" else 1
        elif self.family == "D":
            if g < 1:
                raise InvalidCurve("family D needs g >= 1")
            if self.i < 0 or self.j < 0 or self.i + self.j > g - 1:
                raise InvalidCurve("family D needs i, j >= 0 and i + j <= g - 1")
            if set(self.I) & set(self.J):
                raise InvalidCurve("family D needs disjoint I and J")
            first = _class_or_none(self.i, self.I, self.surface)
            second = _class_or_none(self.j, self.J, self.surface)
            joined = _class_or_none(self.i + self.j, set(self.I) | set(self.J), self.surface)
            if first is None or second is None or joined is None:
                raise InvalidCurve("family D needs [i,I], [j,J] and [i+j, I∪J] all valid")
            irr = 0
            boundary[joined] += 1
            boundary[first] -= 1
            boundary[second] -= 1
        else:
            raise InvalidCurve(f"unknown family {self.family!r}")
        object.__setattr__(self, "_boundary", {k: v for k, v in boundary.items() if v})
        object.__setattr__(self, "_irr", irr)

    def encode(self) -> str:
        if self.family == "A":
            return "A"
        if self.family in ("B", "C"):
            return f"{self.family}:{self.i}:{_encode_labels(self.I)}"
        return f"D:{self.i}:{self.j}:{_encode_labels(self.I)}:{_encode_labels(self.J)}"

    def swapped(self) -> "TestCurve":
        """The D-curve with its two parameter pairs exchanged."""
        if self.family != "D":
            return self
        return TestCurve(self.surface, "D", self.j, self.J, self.i, self.I)

    def boundary_degrees(self) -> dict:
        """Nonzero degrees on extended boundary classes (point classes included)."""
        return dict(self._boundary)

    def degree(self, sym) -> int:
        """Degree of the pull-back of the generator or extended class ``sym``."""
        if isinstance(sym, Lambda):
            return 0
        if isinstance(sym, Psi):
            if not 1 <= sym.point <= self.surface.n:
                raise InvalidSymbol(f"{sym.encode()} is not a generator on {self.surface}")
            return -self._boundary.get(PointClass(sym.point), 0)
        if isinstance(sym, PointClass):
            if not 1 <= sym.point <= self.surface.n:
                raise InvalidSymbol(f"{sym.encode()} is not a class on {self.surface}")
            return self._boundary.get(sym, 0)
        if isinstance(sym, BoundaryIndex) and is_boundary_class(sym, self.surface):
            return self._irr if sym.is_irr else self._boundary.get(sym, 0)
        raise InvalidSymbol(f"{sym!r} is not a symbol on {self.surface}")

    def pair(self, cls: TautClass) -> Fraction:
        """Degree of a whole class, by linearity."""
        if cls.surface != self.surface:
            raise InvalidSymbol(f"class lives on {cls.surface}, curve on {self.surface}")
        return sum((c * self.degree(s) for s, c in cls.items()), Fraction(0))

    def __str__(self):
        return self.encode()


def _subsets(points):
    for size in range(len(points) + 1):
        yield from combinations(points, size)


def _try(surface, *args):
    try:
        return TestCurve(surface, *args)
    except InvalidCurve:
        return None


def generate_all(surface: SurfaceType) -> list[TestCurve]:
    """Every valid test curve on ``surface`` in a fixed order (A, B, C, D).

    D-curves related by swapping ``(i, I) <-> (j, J)`` appear once, with the
    smaller ``(i, I)`` first.
    """
    g = surface.g
    if g == 0:
        raise GenusZeroUnsupported("test curves are only generated for g >= 1")
    points = surface.points
    curves = []
    if g >= 3:
        curves.append(TestCurve(surface, "A"))
    if g >= 2:
        for family, lo, hi in (("B", 0, g - 2), ("C", 1, g - 1)):
            for i in range(lo, hi + 1):
                for I in _subsets(points):
                    c = _try(surface, family, i, I)
                    if c is not None:
                        curves.append(c)
    halves = [(i, I) for i in range(g) for I in _subsets(points)]
    for i, I in halves:
        rest = [t for t in points if t not in I]
        for j in range(g - i):
            for J in _subsets(rest):
                if (j, J) < (i, I):
                    continue
                c = _try(surface, "D", i, I, j, J)
                if c is not None:
                    curves.append(c)
    return curves

"""Exact rational combinations of tautological divisor classes.

Generators on ``M_{g,n}-bar`` are ``lambda``, ``psi_1 .. psi_n``,
``delta_irr`` and one ``delta_b`` per canonical splitting class ``b``.
:class:`TautClass` stores a sparse map from generator to
:class:`fractions.Fraction`; zero coefficients are never stored.

    >>> S = SurfaceType(2, 0)
    >>> reduce_to_basis(TautClass.delta_irr(S)).to_json()["coeffs"]
    {'lambda': '10', 'split:1:[]': '-2'}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .boundary import (
    IRR,
    BoundaryIndex,
    PointClass,
    SurfaceType,
    enumerate_upsilon_bar,
    is_boundary_class,
    parse_index,
)
from .errors import (
    GenusZeroUnsupported,
    InvalidSymbol,
    MalformedInput,
    SurfaceMismatch,
)


@dataclass(frozen=True, order=True)
class Lambda:
    def encode(self) -> str:
        return "lambda"

    def __str__(self):
        return "λ"


@dataclass(frozen=True, order=True)
class Psi:
    point: int

    def encode(self) -> str:
        return f"psi:{self.point}"

    def __str__(self):
        return f"ψ_{self.point}"


LAMBDA = Lambda()

# delta_irr and delta_b are represented by their BoundaryIndex directly
GeneratorSymbol = Union[Lambda, Psi, BoundaryIndex]


def symbol_order(sym) -> tuple:
    """Sort key: lambda, psi_1..psi_n, delta_irr, then split classes."""
    if isinstance(sym, Lambda):
        return (0,)
    if isinstance(sym, Psi):
        return (1, sym.point)
    if sym.is_irr:
        return (2,)
    return (3, sym.genus, sym.labels)


def check_symbol(sym, surface: SurfaceType) -> None:
    if isinstance(sym, Lambda):
        return
    if isinstance(sym, Psi):
        if not (isinstance(sym.point, int) and 1 <= sym.point <= surface.n):
            raise InvalidSymbol(f"{sym.encode()} is not a generator on {surface}")
        return
    if isinstance(sym, BoundaryIndex) and is_boundary_class(sym, surface):
        return
    raise InvalidSymbol(f"{sym!r} is not a generator on {surface}")


def parse_symbol(text: str, surface: SurfaceType):
    """Parse a generator key; ``pt:t`` is rejected here (use :func:`parse_class_key`)."""
    text = text.strip()
    if text == "lambda":
        return LAMBDA
    if text.startswith("psi:"):
        try:
            t = int(text[4:])
        except ValueError:
            raise MalformedInput(f"cannot parse symbol {text!r}") from None
        sym = Psi(t)
        check_symbol(sym, surface)
        return sym
    index = parse_index(text, surface)
    if isinstance(index, PointClass):
        raise InvalidSymbol(f"{text!r} is a point class, not a generator")
    return index


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise MalformedInput(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise MalformedInput(f"not a rational number: {value!r}") from None
    raise MalformedInput(f"not an exact rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class TautClass:
    """An element of ``Pic(M_{g,n}-bar) (x) Q`` written in the generators."""

    __slots__ = ("surface", "_coeffs", "_hash")

    def __init__(self, surface: SurfaceType, coeffs: Mapping | None = None):
        clean = {}
        for sym, c in (coeffs or {}).items():
            check_symbol(sym, surface)
            c = _to_fraction(c)
            if c:
                clean[sym] = clean.get(sym, 0) + c
        self.surface = surface
        self._coeffs = {s: clean[s] for s in sorted(clean, key=symbol_order) if clean[s]}
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, surface):
        return cls(surface)

    @classmethod
    def lam(cls, surface):
        return cls(surface, {LAMBDA: 1})

    @classmethod
    def psi(cls, surface, t):
        return cls(surface, {Psi(t): 1})

    @classmethod
    def delta_irr(cls, surface):
        return cls(surface, {IRR: 1})

    @classmethod
    def delta(cls, surface, index: BoundaryIndex):
        return cls(surface, {index: 1})

    # -- access -------------------------------------------------------
    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def coefficient(self, sym) -> Fraction:
        return self._coeffs.get(sym, Fraction(0))

    def support(self) -> tuple:
        return tuple(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def is_zero(self) -> bool:
        return not self._coeffs

    # -- arithmetic ---------------------------------------------------
    def _check_same(self, other):
        if not isinstance(other, TautClass):
            return NotImplemented
        if other.surface != self.surface:
            raise SurfaceMismatch(f"{self.surface} vs {other.surface}")
        return other

    def __add__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for s, c in other._coeffs.items():
            out[s] = out.get(s, 0) + c
        return TautClass(self.surface, out)

    def __neg__(self):
        return TautClass(self.surface, {s: -c for s, c in self._coeffs.items()})

    def __sub__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, TautClass):
            return NotImplemented
        c = _to_fraction(scalar)
        return TautClass(self.surface, {s: c * v for s, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TautClass):
            return NotImplemented
        return self.surface == other.surface and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.surface, tuple(self._coeffs.items())))
        return self._hash

    def __repr__(self):
        return f"TautClass({self.surface.g}, {self.surface.n}, {self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for s, c in self._coeffs.items():
            mag = abs(c)
            coef = "" if mag == 1 else format_rational(mag)
            parts.append(("-" if c < 0 else "+", f"{coef}{s}"))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    # -- serialization ------------------------------------------------
    def to_json(self) -> dict:
        return {
            "g": self.surface.g,
            "n": self.surface.n,
            "coeffs": {s.encode(): format_rational(c) for s, c in self._coeffs.items()},
        }

    @classmethod
    def from_json(cls, data) -> "TautClass":
        """Inverse of :meth:`to_json`; also accepts ``pt:t`` keys (meaning ``-psi_t``)."""
        if isinstance(data, (str, bytes)):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise MalformedInput(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict) or not {"g", "n", "coeffs"} <= data.keys():
            raise MalformedInput('expected an object with keys "g", "n", "coeffs"')
        g, n, coeffs = data["g"], data["n"], data["coeffs"]
        if not isinstance(g, int) or not isinstance(n, int) or not isinstance(coeffs, dict):
            raise MalformedInput('"g" and "n" must be integers and "coeffs" an object')
        surface = SurfaceType(g, n)
        total = cls.zero(surface)
        for key, value in coeffs.items():
            if not isinstance(key, str):
                raise MalformedInput(f"bad symbol key {key!r}")
            total = total + _to_fraction(value) * parse_class_key(key, surface)
        return total


def add(a: TautClass, b: TautClass) -> TautClass:
    return a + b


def scale(c, a: TautClass) -> TautClass:
    return _to_fraction(c) * a


def parse_class_key(text: str, surface: SurfaceType) -> TautClass:
    """The class named by a generator key or an extended boundary key."""
    if text.strip().startswith("pt:"):
        return expand_extended(parse_index(text, surface), surface)
    return TautClass(surface, {parse_symbol(text, surface): 1})


def expand_extended(sym, surface: SurfaceType) -> TautClass:
    """``delta_b`` for a split class ``b``; ``-psi_t`` for the point class ``[0,{t}]``."""
    if isinstance(sym, PointClass):
        if not 1 <= sym.point <= surface.n:
            raise InvalidSymbol(f"{sym.encode()} is not a class on {surface}")
        return -TautClass.psi(surface, sym.point)
    if isinstance(sym, BoundaryIndex) and not sym.is_irr and is_boundary_class(sym, surface):
        return TautClass.delta(surface, sym)
    raise InvalidSymbol(f"{sym!r} is not an extended boundary index on {surface}")


@dataclass(frozen=True)
class BasisDescriptor:
    surface: SurfaceType
    symbols: tuple

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, sym):
        return sym in self.symbols

    def labels(self) -> list[str]:
        return [s.encode() for s in self.symbols]


def basis(surface: SurfaceType) -> BasisDescriptor:
    """The canonical basis of the rational Picard group for ``g >= 1``."""
    g = surface.g
    if g == 0:
        raise GenusZeroUnsupported("basis is only available for g >= 1")
    splits = enumerate_upsilon_bar(surface)
    psis = tuple(Psi(t) for t in surface.points)
    if g >= 3:
        syms = (LAMBDA,) + psis + (IRR,) + splits
    elif g == 2:
        syms = (LAMBDA,) + psis + splits
    else:
        syms = (LAMBDA,) + splits
    return BasisDescriptor(surface, syms)


def substitution(sym, surface: SurfaceType) -> TautClass | None:
    """Replacement used by :func:`reduce_to_basis` for a non-basis generator, else None."""
    g = surface.g
    if g == 2 and sym == IRR:
        # pull-back of 10 lambda = delta_irr + 2 delta_1 to M_{2,n}
        out = 10 * TautClass.lam(surface)
        for b in enumerate_upsilon_bar(surface):
            if b.genus == 1:
                out = out - 2 * TautClass.delta(surface, b)
        return out
    if g == 1 and sym == IRR:
        return 12 * TautClass.lam(surface)
    if g == 1 and isinstance(sym, Psi):
        out = TautClass.lam(surface)
        for b in enumerate_upsilon_bar(surface):
            if sym.point in b.labels:
                out = out + TautClass.delta(surface, b)
        return out
    return None


def reduce_to_basis(a: TautClass) -> TautClass:
    """Rewrite ``a`` in the canonical basis using the low-genus relations.

    Identity for ``g >= 3``.  For ``g = 2`` eliminates ``delta_irr``; for
    ``g = 1`` eliminates ``delta_irr`` and every ``psi_t``.
    """
    surface = a.surface
    if surface.g == 0:
        raise GenusZeroUnsupported("reduction to a basis is not implemented for g = 0")
    if surface.g >= 3:
        return a
    out = TautClass.zero(surface)
    for sym, c in a.items():
        sub = substitution(sym, surface)
        out = out + c * (TautClass(surface, {sym: 1}) if sub is None else sub)
    return out


def relation_candidates(surface: SurfaceType) -> list[tuple[str, TautClass]]:
    """``generator - substitution`` for every relation :func:`reduce_to_basis` applies."""
    found = []
    for sym in (IRR,) + tuple(Psi(t) for t in surface.points):
        sub = substitution(sym, surface)
        if sub is not None:
            found.append((sym.encode(), TautClass(surface, {sym: 1}) - sub))
    return found

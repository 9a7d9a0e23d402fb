"""Pairing matrices between test curves and basis classes.

Rows are the degree functionals of every generated test curve, followed by
one formal row ``axiom:lambda`` (1 on ``lambda``, 0 elsewhere).  No test
curve has nonzero degree on ``lambda``, so its nondegeneracy enters as an
axiom; the row is always flagged as such.  Columns are the canonical basis.

    >>> from tautdiv.boundary import SurfaceType
    >>> m = build_matrix(SurfaceType(3, 0))
    >>> m.column_labels
    ['lambda', 'irr', 'split:1:[]']
    >>> rank(m), expected_picard_rank(SurfaceType(3, 0))
    (3, 3)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .boundary import SurfaceType, enumerate_upsilon_bar
from .curves import generate_all
from .divisors import (
    LAMBDA,
    TautClass,
    basis,
    format_rational,
    parse_symbol,
    reduce_to_basis,
)
from .errors import EmptySelection, GenusZeroUnsupported, InvalidSymbol

AXIOM_LABEL = "axiom:lambda"


class LambdaAxiom:
    """The formal functional taking the ``lambda`` coefficient in the basis."""

    def encode(self) -> str:
        return AXIOM_LABEL

    def evaluate(self, cls: TautClass) -> Fraction:
        return reduce_to_basis(cls).coefficient(LAMBDA)

    def __repr__(self):
        return "LambdaAxiom()"


LAMBDA_AXIOM = LambdaAxiom()


@dataclass(frozen=True)
class PairingMatrix:
    surface: SurfaceType
    rows: tuple  # TestCurve instances, then possibly LAMBDA_AXIOM
    columns: tuple  # basis symbols
    entries: tuple  # tuple of tuples of Fraction

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    @property
    def row_labels(self) -> list[str]:
        return [r.encode() for r in self.rows]

    @property
    def column_labels(self) -> list[str]:
        return [c.encode() for c in self.columns]

    @property
    def axiom_rows(self) -> list[int]:
        return [k for k, r in enumerate(self.rows) if r is LAMBDA_AXIOM]

    def without_axiom(self) -> "PairingMatrix":
        keep = [k for k, r in enumerate(self.rows) if r is not LAMBDA_AXIOM]
        return PairingMatrix(
            self.surface,
            tuple(self.rows[k] for k in keep),
            self.columns,
            tuple(self.entries[k] for k in keep),
        )

    def column_index(self, col) -> int:
        if isinstance(col, int) and not isinstance(col, bool):
            if not 0 <= col < len(self.columns):
                raise InvalidSymbol(f"column index {col} out of range")
            return col
        if isinstance(col, str):
            col = parse_symbol(col, self.surface)
        try:
            return self.columns.index(col)
        except ValueError:
            raise InvalidSymbol(f"{col!r} is not a basis column on {self.surface}") from None

    def to_json(self) -> dict:
        return {
            "g": self.surface.g,
            "n": self.surface.n,
            "rows": self.row_labels,
            "axiom_rows": self.axiom_rows,
            "columns": self.column_labels,
            "entries": [[_json_number(x) for x in row] for row in self.entries],
        }


def _json_number(q: Fraction):
    return q.numerator if q.denominator == 1 else format_rational(q)


def build_matrix(surface: SurfaceType, include_axiom: bool = True) -> PairingMatrix:
    """Degree matrix of all test curves (plus the lambda axiom) on the basis."""
    if surface.g == 0:
        raise GenusZeroUnsupported("pairing matrices need g >= 1")
    cols = basis(surface).symbols
    curves = generate_all(surface)
    entries = [tuple(Fraction(c.degree(s)) for s in cols) for c in curves]
    rows = list(curves)
    if include_axiom:
        rows.append(LAMBDA_AXIOM)
        entries.append(tuple(Fraction(s == LAMBDA) for s in cols))
    return PairingMatrix(surface, tuple(rows), cols, tuple(entries))


def rank(m: PairingMatrix | Sequence[Sequence]) -> int:
    """Exact rank over Q of a pairing matrix (or any rational matrix)."""
    entries = m.entries if isinstance(m, PairingMatrix) else m
    return linalg.rank(entries)


def expected_picard_rank(surface: SurfaceType) -> int:
    """Size of the canonical basis: the Picard number for ``g >= 1``."""
    g, n = surface.g, surface.n
    if g == 0:
        raise GenusZeroUnsupported("the Picard rank formula is only implemented for g >= 1")
    splits = len(enumerate_upsilon_bar(surface))
    if g >= 3:
        return 2 + n + splits
    if g == 2:
        return 1 + n + splits
    return 1 + splits


@dataclass(frozen=True)
class Certificate:
    """Either an independence witness or a kernel vector for selected columns.

    A witness lists row indices whose square minor on ``columns`` has
    determinant ``determinant != 0``.  A kernel vector is a primitive integer
    vector ``kernel`` (indexed like ``columns``) killed by every row.
    """

    surface: SurfaceType
    kind: str  # "witness" or "kernel"
    columns: tuple  # column indices into the matrix
    column_labels: tuple
    rows: tuple = ()
    row_labels: tuple = ()
    determinant: Fraction | None = None
    kernel: tuple = ()
    ncols: int = field(default=0, repr=False)

    @property
    def is_witness(self) -> bool:
        return self.kind == "witness"

    def full_kernel(self) -> list[Fraction]:
        """The kernel vector padded with zeros to all matrix columns."""
        v = [Fraction(0)] * self.ncols
        for c, x in zip(self.columns, self.kernel):
            v[c] = Fraction(x)
        return v

    def to_json(self) -> dict:
        out = {
            "g": self.surface.g,
            "n": self.surface.n,
            "kind": self.kind,
            "columns": list(self.column_labels),
        }
        if self.is_witness:
            out["rows"] = list(self.rows)
            out["row_labels"] = list(self.row_labels)
            out["determinant"] = format_rational(self.determinant)
        else:
            out["kernel"] = [format_rational(Fraction(x)) for x in self.kernel]
        return out


def independence_certificate(m: PairingMatrix, columns=None) -> Certificate:
    """Certify independence of the selected columns against the rows of ``m``.

    ``columns`` holds column indices, symbols or symbol encodings (default:
    all columns).  Empty or repeated selections raise :class:`EmptySelection`.
    """
    if columns is None:
        idx = list(range(len(m.columns)))
    else:
        idx = [m.column_index(c) for c in columns]
    if not idx:
        raise EmptySelection("no columns selected")
    if len(set(idx)) != len(idx):
        raise EmptySelection("column selection contains duplicates")
    sub = [[row[c] for c in idx] for row in m.entries]
    labels = tuple(m.columns[c].encode() for c in idx)
    chosen = linalg.independent_rows(sub)
    if len(chosen) == len(idx):
        det = linalg.bareiss_determinant([sub[r] for r in chosen])
        assert det != 0
        return Certificate(
            m.surface,
            "witness",
            tuple(idx),
            labels,
            rows=tuple(chosen),
            row_labels=tuple(m.rows[r].encode() for r in chosen),
            determinant=det,
            ncols=len(m.columns),
        )
    null = linalg.nullspace(sub, len(idx))
    vec = tuple(linalg.primitive_vector(null[0]))
    assert all(x == 0 for x in linalg.mat_vec(sub, vec))
    return Certificate(m.surface, "kernel", tuple(idx), labels, kernel=vec, ncols=len(m.columns))


@dataclass(frozen=True)
class RelationReport:
    """Per-curve degrees of a candidate relation.

    ``passed`` means every test curve gives degree 0.  ``is_relation`` also
    requires the lambda axiom to vanish on the reduced candidate.
    """

    candidate: TautClass
    values: tuple  # (curve label, Fraction) pairs
    axiom_value: Fraction

    @property
    def passed(self) -> bool:
        return all(v == 0 for _, v in self.values)

    @property
    def vacuous(self) -> bool:
        return not self.values

    @property
    def is_relation(self) -> bool:
        return self.passed and self.axiom_value == 0

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "candidate": self.candidate.to_json(),
            "curves": [{"curve": c, "degree": format_rational(v)} for c, v in self.values],
            "axiom": {"row": AXIOM_LABEL, "value": format_rational(self.axiom_value)},
            "passed": self.passed,
            "vacuous": self.vacuous,
            "is_relation": self.is_relation,
        }


def relation_check(candidate: TautClass) -> RelationReport:
    surface = candidate.surface
    if surface.g == 0:
        raise GenusZeroUnsupported("relation checks need g >= 1")
    values = tuple((c.encode(), c.pair(candidate)) for c in generate_all(surface))
    return RelationReport(candidate, values, LAMBDA_AXIOM.evaluate(candidate))


def rank_table(gmax: int, nmax: int, gmin: int = 1) -> list[dict]:
    """One row per stable ``(g, n)``: ``|Upsilon|``, matrix rank, expected rank, match."""
    rows = []
    for g in range(gmin, gmax + 1):
        for n in range(nmax + 1):
            if 2 * g - 2 + n <= 0:
                continue
            surface = SurfaceType(g, n)
            r = rank(build_matrix(surface))
            e = expected_picard_rank(surface)
            rows.append(
                {
                    "g": g,
                    "n": n,
                    "upsilon": len(enumerate_upsilon_bar(surface)),
                    "rank": r,
                    "expected": e,
                    "match": r == e,
                }
            )
    return rows

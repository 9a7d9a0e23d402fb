"""Intersection forms on the components of a degenerate fiber.

A :class:`FiberConfiguration` is a symmetric rational matrix ``Q`` (the
pairing ``Q(e_i, e_j)`` of fiber components) and positive multiplicities
``a`` with fiber class ``e = sum a_i e_i``.  Under the four hypotheses

(i)   ``a_i > 0``;
(ii)  ``Q(e_i, e) <= 0`` for every ``i``;
(iii) ``Q(e_i, e_j) >= 0`` for ``i != j``;
(iv)  the graph ``{(i, j) : i != j, Q(e_i, e_j) > 0}`` is connected,

the form is negative semidefinite, and when moreover ``Q(e_i, e) = 0`` for
all ``i`` (a genuine fiber) its kernel is exactly the line through ``e``.
Everything here is exact; semidefiniteness is decided by a congruence
diagonalization over Q, never by floating-point eigenvalues.

    >>> cycle = FiberConfiguration([1, 1, 1], [[-2, 1, 1], [1, -2, 1], [1, 1, -2]])
    >>> c = classify(cycle)
    >>> c.semidefinite, c.kernel_is_fiber_line
    (True, True)
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .divisors import _to_fraction, format_rational
from .errors import DimensionMismatch, HypothesesFailed, MalformedInput


@dataclass(frozen=True)
class FiberConfiguration:
    a: tuple
    q: tuple

    def __init__(self, a: Sequence, q: Sequence[Sequence]):
        a = tuple(_to_fraction(x) for x in a)
        q = tuple(tuple(_to_fraction(x) for x in row) for row in q)
        n = len(a)
        if len(q) != n or any(len(row) != n for row in q):
            raise DimensionMismatch(f"need a {n}x{n} matrix for {n} multiplicities")
        for i in range(n):
            for j in range(i + 1, n):
                if q[i][j] != q[j][i]:
                    raise MalformedInput(f"matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "q", q)

    @property
    def size(self) -> int:
        return len(self.a)

    @property
    def fiber(self) -> tuple:
        """Coordinates of ``e`` in the component basis."""
        return self.a

    def fiber_pairings(self) -> list[Fraction]:
        """``Q(e_i, e)`` for every component."""
        return [sum((qij * aj for qij, aj in zip(row, self.a)), Fraction(0)) for row in self.q]

    def rescaled(self) -> "FiberConfiguration":
        """Same form in the basis ``a_i e_i``: all multiplicities become 1."""
        a = self.a
        q = [[a[i] * a[j] * self.q[i][j] for j in range(self.size)] for i in range(self.size)]
        return FiberConfiguration([1] * self.size, q)

    def to_json(self) -> dict:
        return {
            "a": [format_rational(x) for x in self.a],
            "q": [[format_rational(x) for x in row] for row in self.q],
        }

    @classmethod
    def from_json(cls, data) -> "FiberConfiguration":
        if isinstance(data, (str, bytes)):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise MalformedInput(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict) or "a" not in data or "q" not in data:
            raise MalformedInput('expected an object with keys "a" and "q"')
        a, q = data["a"], data["q"]
        if not isinstance(a, list) or not isinstance(q, list) or not all(isinstance(r, list) for r in q):
            raise MalformedInput('"a" must be a list and "q" a list of lists')
        return cls(a, q)


@dataclass(frozen=True)
class HypothesisReport:
    positive_multiplicities: bool
    nonpositive_on_fiber: bool
    fiber_case: bool
    nonnegative_off_diagonal: bool
    connected: bool
    fiber_pairings: tuple

    @property
    def passed(self) -> bool:
        return (
            self.positive_multiplicities
            and self.nonpositive_on_fiber
            and self.nonnegative_off_diagonal
            and self.connected
        )

    def failures(self) -> list[str]:
        names = [
            ("(i) a_i > 0", self.positive_multiplicities),
            ("(ii) Q(e_i, e) <= 0", self.nonpositive_on_fiber),
            ("(iii) Q(e_i, e_j) >= 0 for i != j", self.nonnegative_off_diagonal),
            ("(iv) positive-intersection graph connected", self.connected),
        ]
        return [name for name, ok in names if not ok]

    def to_json(self) -> dict:
        return {
            "i_positive_multiplicities": self.positive_multiplicities,
            "ii_nonpositive_on_fiber": self.nonpositive_on_fiber,
            "fiber_case": self.fiber_case,
            "iii_nonnegative_off_diagonal": self.nonnegative_off_diagonal,
            "iv_connected": self.connected,
            "fiber_pairings": [format_rational(x) for x in self.fiber_pairings],
            "passed": self.passed,
        }


def _connected(q) -> bool:
    n = len(q)
    if n <= 1:
        return True
    seen = {0}
    todo = deque([0])
    while todo:
        i = todo.popleft()
        for j in range(n):
            if j != i and j not in seen and q[i][j] > 0:
                seen.add(j)
                todo.append(j)
    return len(seen) == n


def check_hypotheses(cfg: FiberConfiguration) -> HypothesisReport:
    n = cfg.size
    pairings = cfg.fiber_pairings()
    return HypothesisReport(
        positive_multiplicities=all(x > 0 for x in cfg.a),
        nonpositive_on_fiber=all(p <= 0 for p in pairings),
        fiber_case=all(p == 0 for p in pairings),
        nonnegative_off_diagonal=all(cfg.q[i][j] >= 0 for i in range(n) for j in range(n) if i != j),
        connected=_connected(cfg.q),
        fiber_pairings=tuple(pairings),
    )


def _check_dim(cfg, x):
    if len(x) != cfg.size:
        raise DimensionMismatch(f"vector of length {len(x)} for a form of size {cfg.size}")


def bilinear(cfg: FiberConfiguration, x: Sequence, y: Sequence) -> Fraction:
    _check_dim(cfg, x)
    _check_dim(cfg, y)
    x = [_to_fraction(v) for v in x]
    y = [_to_fraction(v) for v in y]
    return sum((xi * sum((qij * yj for qij, yj in zip(row, y)), Fraction(0))
                for xi, row in zip(x, cfg.q)), Fraction(0))


def quadratic_eval(cfg: FiberConfiguration, x: Sequence) -> Fraction:
    """``x^T Q x``."""
    return bilinear(cfg, x, x)


def sublemma_expansion_eval(cfg: FiberConfiguration, x: Sequence) -> Fraction:
    """Right-hand side of the fiber expansion of ``Q(x, x)``.

    After rescaling so that every multiplicity is 1 (``x_i -> x_i / a_i``),
    returns ``sum_i x_i^2 Q(e_i, e) - sum_{i<j} (x_i - x_j)^2 Q(e_i, e_j)``.
    """
    _check_dim(cfg, x)
    unit = cfg.rescaled()
    xs = [_to_fraction(v) / a for v, a in zip(x, cfg.a)]
    pair_e = unit.fiber_pairings()
    total = sum((xi * xi * p for xi, p in zip(xs, pair_e)), Fraction(0))
    n = cfg.size
    for i in range(n):
        for j in range(i + 1, n):
            d = xs[i] - xs[j]
            total -= d * d * unit.q[i][j]
    return total


def congruence_diagonalize(q: Sequence[Sequence]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Return ``(d, T)`` with ``T^T Q T = diag(d)``, exactly.

    ``T`` is returned as a list of its columns.  A zero diagonal pivot with a
    nonzero off-diagonal entry is repaired by replacing ``e_k`` with
    ``e_k +/- e_j``.
    """
    n = len(q)
    m = [[Fraction(x) for x in row] for row in q]
    cols = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]

    def combine(k, j, s):
        # basis change e_k <- e_k + s e_j, applied on both sides
        for r in range(n):
            m[r][k] += s * m[r][j]
        for c in range(n):
            m[k][c] += s * m[j][c]
        cols[k] = [a + s * b for a, b in zip(cols[k], cols[j])]

    for k in range(n):
        if m[k][k] == 0:
            j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
            if j is None:
                continue
            if m[j][j] != 0:
                # swap in the nonzero diagonal entry
                m[k], m[j] = m[j], m[k]
                for row in m:
                    row[k], row[j] = row[j], row[k]
                cols[k], cols[j] = cols[j], cols[k]
            else:
                combine(k, j, Fraction(1))
        p = m[k][k]
        for j in range(k + 1, n):
            if m[k][j] != 0:
                combine(j, k, -m[k][j] / p)
    return [m[k][k] for k in range(n)], cols


@dataclass(frozen=True)
class FormClassification:
    """Semidefiniteness and kernel of the form, with a checked witness.

    ``witness`` is a vector with ``Q(x, x) > 0`` when the form is not
    negative semidefinite, a kernel vector not proportional to ``e`` when the
    kernel is not the fiber line, and ``None`` otherwise.
    """

    semidefinite: bool
    kernel_is_fiber_line: bool
    witness: tuple | None
    signature: tuple  # (positive, negative, zero)
    kernel: tuple  # basis of the kernel, primitive integer vectors

    def to_json(self) -> dict:
        return {
            "negative_semidefinite": self.semidefinite,
            "kernel_is_fiber_line": self.kernel_is_fiber_line,
            "signature": {"positive": self.signature[0], "negative": self.signature[1], "zero": self.signature[2]},
            "kernel": [[format_rational(Fraction(x)) for x in v] for v in self.kernel],
            "witness": None if self.witness is None else [format_rational(Fraction(x)) for x in self.witness],
        }


def _proportional(u, v) -> bool:
    n = len(u)
    return all(u[i] * v[j] == u[j] * v[i] for i in range(n) for j in range(i + 1, n))


def classify(cfg: FiberConfiguration, strict: bool = True) -> FormClassification:
    """Decide negative semidefiniteness and whether the kernel is the line through ``e``.

    With ``strict`` (the default) the hypotheses must hold, otherwise
    :class:`HypothesesFailed` is raised.
    """
    if strict:
        report = check_hypotheses(cfg)
        if not report.passed:
            raise HypothesesFailed("hypotheses failed: " + "; ".join(report.failures()))
    d, cols = congruence_diagonalize(cfg.q)
    signature = (sum(x > 0 for x in d), sum(x < 0 for x in d), sum(x == 0 for x in d))
    kernel = tuple(tuple(linalg.primitive_vector(v)) for v in linalg.nullspace(cfg.q, cfg.size))
    # Sylvester: the number of zero diagonal entries is the nullity
    assert signature[2] == len(kernel)
    semidefinite = signature[0] == 0
    fiber_line = len(kernel) == 1 and _proportional(kernel[0], cfg.a)
    witness = None
    if not semidefinite:
        k = next(k for k, x in enumerate(d) if x > 0)
        witness = tuple(linalg.primitive_vector(cols[k]))
        if quadratic_eval(cfg, witness) <= 0:
            raise AssertionError("positive witness failed re-evaluation")
    elif not fiber_line and kernel:
        witness = next(v for v in kernel if not _proportional(v, cfg.a))
        if quadratic_eval(cfg, witness) != 0 or any(linalg.mat_vec(cfg.q, witness)):
            raise AssertionError("kernel witness failed re-evaluation")
    return FormClassification(semidefinite, fiber_line, witness, signature, kernel)


def cycle_configuration(n: int) -> FiberConfiguration:
    """The ``I_n`` cycle of rational curves: ``-2`` on the diagonal, neighbours meet once.

    ``n = 2`` gives two components meeting in two points.
    """
    if n < 2:
        raise DimensionMismatch("a cycle needs at least two components")
    q = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        q[i][i] = Fraction(-2)
        q[i][(i + 1) % n] += 1
        q[(i + 1) % n][i] += 1
    return FiberConfiguration([1] * n, q)

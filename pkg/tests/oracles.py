"""Brute-force reference computations, written without the package's helpers.

Boundary classes are modelled here as frozensets of two halves, each half a
``(genus, frozenset(labels))`` pair, so no canonical representative is ever
chosen.  Linear algebra uses plain Gaussian elimination over Fraction.
"""

from fractions import Fraction
from itertools import product


def all_subsets(n):
    for mask in range(1 << n):
        yield frozenset(t + 1 for t in range(n) if mask >> t & 1)


def valid_half(i, I, g, n):
    return 0 <= i <= g and not (i == 0 and len(I) <= 1)


def pair_of(i, I, g, n):
    I = frozenset(I)
    return frozenset({(i, I), (g - i, frozenset(range(1, n + 1)) - I)})


def brute_upsilon_bar(g, n):
    """Unordered pairs of complementary valid halves, by scanning all (g+1) 2^n halves."""
    found = set()
    for i, I in product(range(g + 1), all_subsets(n)):
        comp_i, comp_I = g - i, frozenset(range(1, n + 1)) - I
        if valid_half(i, I, g, n) and valid_half(comp_i, comp_I, g, n):
            found.add(pair_of(i, I, g, n))
    return found


def brute_upsilon_bar_ext(g, n):
    return brute_upsilon_bar(g, n) | {pair_of(0, {t}, g, n) for t in range(1, n + 1)}


def is_ext_class(i, I, g, n):
    return pair_of(i, I, g, n) in brute_upsilon_bar_ext(g, n)


def brute_curve_parameters(g, n):
    """Parameter tuples of every valid test curve, straight from the quantifiers.

    D-curves appear in both orders; callers deduplicate by functional.
    """
    out = []
    subsets = list(all_subsets(n))
    if g >= 3:
        out.append(("A",))
    if g >= 2:
        for i in range(0, g - 1):
            for I in subsets:
                if is_ext_class(i, I, g, n):
                    out.append(("B", i, I))
        for i in range(1, g):
            for I in subsets:
                if is_ext_class(i, I, g, n):
                    out.append(("C", i, I))
    if g >= 1:
        for i, j in product(range(g), repeat=2):
            if i + j > g - 1:
                continue
            for I, J in product(subsets, repeat=2):
                if I & J:
                    continue
                if all(is_ext_class(a, A, g, n) for a, A in ((i, I), (j, J), (i + j, I | J))):
                    out.append(("D", i, I, j, J))
    return out


def table_degree(params, symbol, g, n):
    """Degree from the four tables.

    ``symbol`` is ``"lambda"``, ``"irr"``, ``("psi", t)`` or a frozenset pair
    (an extended boundary class).
    """
    family = params[0]
    if symbol == "lambda":
        return 0
    if symbol == "irr":
        return {"A": -1, "B": 0, "C": -2, "D": 0}[family]
    if isinstance(symbol, tuple) and symbol[0] == "psi":
        return -table_degree(params, pair_of(0, {symbol[1]}, g, n), g, n)
    total = 0
    if family == "B" and symbol == pair_of(params[1], params[2], g, n):
        total -= 1
    if family == "C" and symbol == pair_of(params[1], params[2], g, n):
        total += 1
    if family == "D":
        _, i, I, j, J = params
        if symbol == pair_of(i + j, I | J, g, n):
            total += 1
        if symbol == pair_of(i, I, g, n):
            total -= 1
        if symbol == pair_of(j, J, g, n):
            total -= 1
    return total


def gauss_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    r = 0
    for c in range(len(m[0])):
        piv = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for k in range(r + 1, len(m)):
            f = m[k][c] / m[r][c]
            if f:
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        r += 1
    return r


def laplace_det(m):
    """Cofactor expansion; only for small matrices."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for c in range(n):
        if m[0][c] == 0:
            continue
        minor = [row[:c] + row[c + 1:] for row in m[1:]]
        total += (-1) ** c * Fraction(m[0][c]) * laplace_det(minor)
    return total


def gauss_det(m):
    m = [[Fraction(x) for x in r] for r in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((k for k in range(c, n) if m[k][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for k in range(c + 1, n):
            f = m[k][c] / m[c][c]
            if f:
                m[k] = [a - f * b for a, b in zip(m[k], m[c])]
    return det

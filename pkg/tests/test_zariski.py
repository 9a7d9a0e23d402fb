import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from random_configs import disconnected_configuration, fiber_configuration, rational_vector
from tautdiv.errors import DimensionMismatch, HypothesesFailed, MalformedInput
from tautdiv.linalg import mat_vec
from tautdiv.zariski import (
    FiberConfiguration,
    check_hypotheses,
    classify,
    congruence_diagonalize,
    cycle_configuration,
    quadratic_eval,
    sublemma_expansion_eval,
)

I3 = FiberConfiguration([1, 1, 1], [[-2, 1, 1], [1, -2, 1], [1, 1, -2]])


def test_hypotheses_cycle():
    r = check_hypotheses(I3)
    assert r.passed and r.fiber_case
    assert r.fiber_pairings == (0, 0, 0)


def test_hypotheses_single_component():
    r = check_hypotheses(FiberConfiguration([1], [[0]]))
    assert r.passed and r.connected


def test_hypotheses_disconnected():
    r = check_hypotheses(FiberConfiguration([1, 1], [[-1, 0], [0, -1]]))
    assert not r.connected and not r.passed
    assert r.failures() == ["(iv) positive-intersection graph connected"]


def test_hypotheses_each_failure_reported():
    r = check_hypotheses(FiberConfiguration([1, -1], [[-1, 1], [1, -1]]))
    assert not r.positive_multiplicities
    r = check_hypotheses(FiberConfiguration([1, 1, 1], [[-3, 2, -1], [2, -3, 1], [-1, 1, 0]]))
    assert not r.nonnegative_off_diagonal


def test_quadratic_eval_examples():
    assert quadratic_eval(I3, [1, 1, 1]) == 0
    assert quadratic_eval(I3, [1, 0, 0]) == -2
    assert quadratic_eval(I3, [0, 0, 0]) == 0
    with pytest.raises(DimensionMismatch):
        quadratic_eval(I3, [1, 2])


def test_expansion_examples():
    assert sublemma_expansion_eval(I3, [1, 0, 0]) == -2
    assert sublemma_expansion_eval(I3, [0, 0, 0]) == 0
    cfg = FiberConfiguration([2, 1], [[-1, 2], [2, -4]])
    assert sublemma_expansion_eval(cfg, cfg.fiber) == quadratic_eval(cfg, cfg.fiber)
    with pytest.raises(DimensionMismatch):
        sublemma_expansion_eval(I3, [1])


def test_classify_examples():
    for n in (2, 3, 7):
        c = classify(cycle_configuration(n))
        assert c.semidefinite and c.kernel_is_fiber_line and c.witness is None
        assert c.signature == (0, n - 1, 1)
    with pytest.raises(HypothesesFailed):
        classify(FiberConfiguration([1, 1], [[1, 0], [0, 1]]))
    c = classify(FiberConfiguration([1, 1], [[-1, 1], [1, -1]]))
    assert c.semidefinite and c.kernel_is_fiber_line
    assert c.kernel == ((1, 1),)


def test_classify_non_fiber_case_has_trivial_kernel():
    cfg = FiberConfiguration([1, 1], [[-2, 1], [1, -2]])
    r = check_hypotheses(cfg)
    assert r.passed and not r.fiber_case
    c = classify(cfg)
    assert c.semidefinite and not c.kernel_is_fiber_line and c.witness is None and c.kernel == ()


def test_non_strict_classify_finds_positive_witness():
    cfg = FiberConfiguration([1, 1], [[1, 0], [0, 1]])
    c = classify(cfg, strict=False)
    assert not c.semidefinite
    assert quadratic_eval(cfg, c.witness) > 0
    hyperbolic = FiberConfiguration([1, 1], [[0, 1], [1, 0]])
    c = classify(hyperbolic, strict=False)
    assert c.signature == (1, 1, 0) and quadratic_eval(hyperbolic, c.witness) > 0


def test_non_strict_classify_kernel_witness():
    cfg = FiberConfiguration([1, 1, 1], [[0, 0, 0], [0, 0, 0], [0, 0, -1]])
    c = classify(cfg, strict=False)
    assert c.semidefinite and not c.kernel_is_fiber_line
    assert quadratic_eval(cfg, c.witness) == 0
    assert not any(mat_vec(cfg.q, c.witness))


def test_configuration_validation():
    with pytest.raises(DimensionMismatch):
        FiberConfiguration([1, 1], [[1]])
    with pytest.raises(MalformedInput):
        FiberConfiguration([1, 1], [[1, 2], [3, 1]])
    with pytest.raises(MalformedInput):
        FiberConfiguration.from_json('{"a": [1]}')


def test_json_round_trip():
    cfg = FiberConfiguration(["1/2", 3], [["-6", "1/2"], ["1/2", "-1/12"]])
    assert FiberConfiguration.from_json(cfg.to_json()) == cfg
    assert cfg.to_json() == {"a": ["1/2", "3"], "q": [["-6", "1/2"], ["1/2", "-1/12"]]}


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 8))
def test_expansion_identity_property(seed, n):
    rng = random.Random(seed)
    a, q = fiber_configuration(rng, n)
    cfg = FiberConfiguration(a, q)
    for _ in range(5):
        x = rational_vector(rng, n)
        assert quadratic_eval(cfg, x) == sublemma_expansion_eval(cfg, x)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 7))
def test_semidefinite_and_kernel_soundness(seed, n):
    rng = random.Random(seed)
    a, q = fiber_configuration(rng, n)
    cfg = FiberConfiguration(a, q)
    report = check_hypotheses(cfg)
    assert report.passed
    c = classify(cfg)
    assert c.semidefinite
    for _ in range(20):
        assert quadratic_eval(cfg, rational_vector(rng, n)) <= 0
    if report.fiber_case:
        assert quadratic_eval(cfg, cfg.fiber) == 0
        assert c.kernel_is_fiber_line
    else:
        assert c.kernel == ()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 7))
def test_rescaling_invariance(seed, n):
    cfg = FiberConfiguration(*fiber_configuration(random.Random(seed), n))
    a, b = classify(cfg), classify(cfg.rescaled())
    assert (a.semidefinite, a.kernel_is_fiber_line) == (b.semidefinite, b.kernel_is_fiber_line)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 8))
def test_disconnected_always_rejected(seed, n):
    cfg = FiberConfiguration(*disconnected_configuration(random.Random(seed), n))
    assert not check_hypotheses(cfg).connected
    with pytest.raises(HypothesesFailed):
        classify(cfg)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=5, max_size=5), min_size=5, max_size=5))
def test_congruence_diagonalization(entries):
    n = 5
    q = [[Fraction(entries[min(i, j)][max(i, j)]) for j in range(n)] for i in range(n)]
    d, cols = congruence_diagonalize(q)
    for i in range(n):
        for j in range(n):
            qij = sum(cols[i][r] * q[r][s] * cols[j][s] for r in range(n) for s in range(n))
            assert qij == (d[i] if i == j else 0)
    assert sympy.Matrix(cols).T.det() != 0

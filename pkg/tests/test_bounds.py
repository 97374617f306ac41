import math

import numpy as np
import pytest

from fekete_bounds.bounds import (
    A3_BRANCHES,
    T1_BRANCHES,
    T2_BRANCHES,
    T3_BRANCHES,
    a2_bound,
    a3_bound,
    applicable_theorems,
    branch_values_t1,
    branch_values_t2,
    branch_values_t3,
    corollary_bound,
    fs_bound,
    fs_bound_t1,
    fs_bound_t2,
    fs_bound_t3,
    lemma_rhs,
    t1_L,
    t2_F,
    t3_quantities,
)
from fekete_bounds.class_operator import ClassParams
from fekete_bounds.errors import DomainError

P01 = ClassParams(0, 1)
P11 = ClassParams(1, 1)


def test_lemma_rhs_examples():
    assert lemma_rhs(1, 0.3) == 1
    assert lemma_rhs(0, 1) == 0
    assert lemma_rhs(3 + 4j, 0.5) == 2
    with pytest.raises(DomainError):
        lemma_rhs(1, 1.5)


def test_a2_bound_examples():
    assert a2_bound(P01, 2) == 2
    assert a2_bound(P11, 2) == 1
    assert a2_bound(ClassParams(0, 1j), 1) == 1


def test_a3_bound_examples():
    r = a3_bound(P01, 2, 2)
    assert r.value == 4 and r.branch == A3_BRANCHES[1]
    assert r.intermediates["s"] == -7 and r.intermediates["t"] == 1
    assert a3_bound(P11, 2, 2).value == pytest.approx(1, abs=1e-15)
    small = a3_bound(ClassParams(0, 0.1), 2, 0)
    assert small.branch == A3_BRANCHES[0]
    assert small.value == pytest.approx(0.1 * 2 / 2)


def test_t1_examples():
    r = fs_bound_t1(P01, 2, 2, 0)
    assert (r.value, r.intermediates["L"]) == (4, 8)
    r = fs_bound_t1(P01, 2, 2, 1)
    assert r.value == 1 and r.branch == T1_BRANCHES[0]
    r = fs_bound_t1(ClassParams(0.3, 0.7), 2, 1, 1)
    assert r.value == pytest.approx(2 * 0.7 / (2 * 1.6))
    r = fs_bound_t1(ClassParams(0, 1j), 2, 2, 0)
    assert r.value == pytest.approx((math.sqrt(65) + 1) / 2, abs=1e-14)
    assert "L_plus" in r.intermediates and r.notes


def test_t2_examples():
    assert fs_bound_t2(P01, 2, 2, 2).value == 5
    r = fs_bound_t2(P01, 2, 1, 1)
    assert r.value == 1 and r.branch == T2_BRANCHES[3]
    assert r.intermediates["F"] == pytest.approx(1 / 8)
    assert fs_bound_t2(P11, 2, 2, 1).value == pytest.approx(1 / 3)


def test_t2_domain():
    with pytest.raises(DomainError):
        fs_bound_t2(ClassParams(0, 1j), 2, 2, 1)
    with pytest.raises(DomainError):
        fs_bound_t2(ClassParams(0, -1), 2, 2, 1)
    with pytest.raises(DomainError):
        fs_bound_t2(P01, 2, 2, 1 + 1j)


def test_t3_examples():
    r = fs_bound_t3(ClassParams(0, 1j), 2, 2, 0)
    assert r.value == pytest.approx(5, abs=1e-14)
    assert r.intermediates["theta"] == pytest.approx(math.pi / 2)
    r = fs_bound_t3(P01, 2, 2, 1)
    assert r.branch == T3_BRANCHES[3] and r.value == 1
    assert r.intermediates["N"] == pytest.approx(-1 / 8)
    assert r.intermediates["k1"].real == pytest.approx(1 / 8)
    r = fs_bound_t3(P01, 2, 0, 1)
    assert r.branch == T3_BRANCHES[3] and r.value == 1
    with pytest.raises(DomainError):
        fs_bound_t3(P01, 2, 2, 1j)


def test_t3_orientation_irrelevant():
    g = 0.8 * np.exp(0.7j)
    a = fs_bound_t3(ClassParams(0.4, g), 1.5, 0.9, 0.3).value
    b = fs_bound_t3(ClassParams(0.4, np.conj(g)), 1.5, 0.9, 0.3).value
    assert a == b


def test_dispatch():
    assert applicable_theorems(1, 0.5) == ["T1", "T2", "T3"]
    assert applicable_theorems(1j, 0.5) == ["T1", "T3"]
    assert applicable_theorems(1, 0.5j) == ["T1"]
    with pytest.raises(DomainError):
        fs_bound("T2", ClassParams(0, 1j), 2, 2, 0)
    with pytest.raises(DomainError):
        fs_bound("T9", P01, 2, 2, 0)


def test_nonpositive_b1_rejected():
    with pytest.raises(DomainError):
        fs_bound_t1(P01, 0, 1, 0)


def _rand(rng):
    lam = rng.uniform(0, 1)
    gamma = complex(rng.normal(), rng.normal())
    B1 = rng.uniform(0.05, 3)
    B2 = rng.uniform(-3, 3)
    return ClassParams(lam, gamma), B1, B2


def test_positivity_random():
    rng = np.random.default_rng(20)
    for _ in range(2000):
        p, B1, B2 = _rand(rng)
        mu = rng.uniform(-5, 5)
        assert fs_bound_t1(p, B1, B2, complex(mu, rng.normal())).value > 0
        assert fs_bound_t3(p, B1, B2, mu).value > 0
        q = ClassParams(p.lam, abs(p.gamma))
        assert fs_bound_t2(q, B1, B2, mu).value > 0


def test_t1_continuous_across_l_equals_two():
    rng = np.random.default_rng(21)
    for _ in range(200):
        p, B1, B2 = _rand(rng)
        B2 = rng.uniform(-B1, B1)
        # along mu = 1 + x e^{i phi}, L(x) is continuous and L(0) = 2|B2|/B1 <= 2
        X = 4 * B1 * p.gamma * (1 + 2 * p.lam) / (1 + p.lam) ** 2
        direction = np.exp(1j * rng.uniform(0, 2 * np.pi))
        lo, hi = 0.0, 1.0
        while t1_L(p, B1, B2, 1 + hi * direction) <= 2:
            hi *= 2
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if t1_L(p, B1, B2, 1 + mid * direction) <= 2:
                lo = mid
            else:
                hi = mid
        v = branch_values_t1(p, B1, B2, 1 + lo * direction)
        assert abs(v[T1_BRANCHES[0]] - v[T1_BRANCHES[1]]) <= 1e-12 * max(1, abs(X))


def test_branch_formulas_meet_at_boundaries():
    rng = np.random.default_rng(22)
    for _ in range(200):
        p, B1, B2 = _rand(rng)
        q = ClassParams(p.lam, abs(p.gamma))
        F = t2_F(q, B1, B2)
        v = branch_values_t2(q, B1, B2, 1.0)
        assert abs(v[T2_BRANCHES[0]] - v[T2_BRANCHES[1]]) <= 1e-12
        if abs(B2) < B1:
            lo = branch_values_t2(q, B1, B2, 1 - F)
            hi = branch_values_t2(q, B1, B2, 1 + F)
            assert abs(lo[T2_BRANCHES[2]] - lo[T2_BRANCHES[3]]) <= 1e-12
            assert abs(hi[T2_BRANCHES[3]] - hi[T2_BRANCHES[4]]) <= 1e-12
        tq = t3_quantities(p, B1, B2)
        edge = 1 - tq["k1"].real
        v = branch_values_t3(p, B1, B2, edge)
        assert abs(v[T3_BRANCHES[0]] - v[T3_BRANCHES[1]]) <= 1e-12
        if tq["indicator"] < 1:
            lo = branch_values_t3(p, B1, B2, edge + tq["N"])
            hi = branch_values_t3(p, B1, B2, edge - tq["N"])
            assert abs(lo[T3_BRANCHES[2]] - lo[T3_BRANCHES[3]]) <= 1e-12
            assert abs(hi[T3_BRANCHES[3]] - hi[T3_BRANCHES[4]]) <= 1e-12


def test_t3_dominates_t1():
    rng = np.random.default_rng(23)
    for _ in range(1000):
        p, B1, B2 = _rand(rng)
        mu = rng.uniform(-4, 4)
        assert fs_bound_t3(p, B1, B2, mu).value >= fs_bound_t1(p, B1, B2, mu).value - 1e-12


def test_corollary_examples():
    assert corollary_bound("C1", "real_gamma", {"A": 1, "B": -1}, 2).value == 5
    r = corollary_bound("C4", "complex_mu", {"gamma": 1}, 1)
    assert r.value == pytest.approx(1 / 3)
    r = corollary_bound("C3", "complex_mu", {"gamma": 1}, 1)
    assert r.value == 1


def test_corollary_part_two_matches_theorem_two():
    """Only the real-gamma parts of all four corollaries agree with the theorem path literally."""
    from fekete_bounds.minda_catalog import MindaTarget

    rng = np.random.default_rng(24)
    for _ in range(300):
        mu = rng.uniform(-3, 4)
        B = rng.uniform(-1, 0.9)
        A = rng.uniform(B + 0.05, 1)
        jt = MindaTarget.janowski(A, B)
        for which, lam in (("C1", 0), ("C2", 1)):
            c = corollary_bound(which, "real_gamma", {"A": A, "B": B}, mu).value
            t = fs_bound_t2(ClassParams(lam, 1), jt.B1, jt.B2, mu).value
            assert abs(c - t) <= 1e-12
        g = rng.uniform(0.05, 3)
        for which, lam in (("C3", 0), ("C4", 1)):
            c = corollary_bound(which, "real_gamma", {"gamma": g}, mu).value
            t = fs_bound_t2(ClassParams(lam, g), 2, 2, mu).value
            assert abs(c - t) <= 1e-12 * max(1, t)


def test_corollary_argument_checks():
    with pytest.raises(DomainError):
        corollary_bound("C1", "real_gamma", {"A": 0, "B": 0.5}, 1)
    with pytest.raises(DomainError):
        corollary_bound("C3", "real_gamma", {"gamma": 1j}, 1)
    with pytest.raises(DomainError):
        corollary_bound("C5", "real_gamma", {}, 1)
    with pytest.raises(DomainError):
        corollary_bound("C3", "real_gamma", {"gamma": 1}, 1j)


def test_report_serializes():
    d = fs_bound_t3(ClassParams(0, 1j), 2, 2, 0).to_dict()
    assert isinstance(d["intermediates"]["k1"], list)
    assert d["value"] == 5

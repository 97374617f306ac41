import math

import numpy as np
import pytest

from fekete_bounds.bounds import a2_bound, a3_bound, fs_bound
from fekete_bounds.class_operator import ClassParams, forward_coefficients, is_feasible_pair
from fekete_bounds.errors import DomainError
from fekete_bounds.extremal_oracle import OracleConfig, oracle_max, verify_all, verify_config
from fekete_bounds.minda_catalog import MindaTarget

from _oracles import brute_force_fs, random_schwarz_pair

HALF = MindaTarget.half_plane()
COARSE = OracleConfig(radial_steps=24, angular_steps=32, refine_iterations=0)


def test_config_validation():
    with pytest.raises(DomainError):
        OracleConfig(radial_steps=4)
    with pytest.raises(DomainError):
        OracleConfig(refine_iterations=-1)
    with pytest.raises(DomainError):
        OracleConfig(feasibility_tolerance=0)


def test_unknown_functional():
    with pytest.raises(DomainError):
        oracle_max("abs_a4", ClassParams(0, 1), 2, 2)


def test_sharpness_witness_at_mu_one():
    res = oracle_max("fekete_szego", ClassParams(0, 1), 2, 2, mu=1)
    assert res.max_value / 1.0 >= 0.999
    w = res.witness
    assert abs(w.c1) <= 1e-9
    assert abs(abs(w.c2) - 1) <= 1e-9
    assert abs(res.induced_d2 + w.c2) <= 1e-9


def test_abs_a2_restricted_by_inverse_side():
    # |d2| <= 1 - |c1|^2 forces |c1|^2 <= 1/2 at lambda = 0, gamma = 1, half-plane
    res = oracle_max("abs_a2", ClassParams(0, 1), 2, 2)
    assert res.max_value <= a2_bound(ClassParams(0, 1), 2) + 1e-12
    assert res.max_value == pytest.approx(math.sqrt(2), abs=2e-2)
    assert abs(res.witness.c1) ** 2 <= 0.5 + 1e-6


def test_abs_a3_below_closed_form():
    p = ClassParams(0.5, 0.5 + 0.5j)
    res = oracle_max("abs_a3", p, 2, 2)
    assert res.max_value <= a3_bound(p, 2, 2).value + 1e-9


@pytest.mark.parametrize("lam, gamma, mu", [(0, 1, 0), (0.5, 1j, 0.5), (1, -0.5 + 0.5j, 2), (0.25, 2, -1)])
def test_coarse_grid_matches_plain_numpy(lam, gamma, mu):
    got = oracle_max("fekete_szego", ClassParams(lam, gamma), 2, 2, COARSE, mu=mu).max_value
    ref = brute_force_fs(lam, gamma, 2, 2, mu, COARSE.radial_steps, COARSE.angular_steps)
    assert got == pytest.approx(ref, rel=1e-12, abs=1e-12)


def test_refinement_never_decreases():
    p = ClassParams(0.3, 0.7 + 0.2j)
    values = [
        oracle_max("fekete_szego", p, 1.2, -0.4, OracleConfig(24, 32, r), mu=0.8).max_value for r in range(3)
    ]
    assert values[0] <= values[1] <= values[2]


def test_witness_is_feasible_and_consistent():
    p = ClassParams(0.75, 1 + 1j)
    res = oracle_max("fekete_szego", p, 1.0, 0.5, mu=1.5)
    w = res.witness
    assert is_feasible_pair(w.c1, w.c2, 0)
    a2, a3, d2 = forward_coefficients(w.c1, w.c2, p.lam, p.gamma, 1.0, 0.5)
    assert abs(a3 - 1.5 * a2 * a2) == pytest.approx(res.max_value, rel=1e-9)
    assert abs(d2 - res.induced_d2) <= 1e-15
    assert abs(d2) <= 1 - abs(w.c1) ** 2 + 1e-9
    assert 0 < res.feasible_fraction <= 1


def test_deterministic():
    p = ClassParams(0.5, -0.5 + 0.5j)
    a = oracle_max("fekete_szego", p, 2, 2, mu=3)
    b = oracle_max("fekete_szego", p, 2, 2, mu=3)
    assert a == b


def test_random_feasible_points_respect_bounds():
    rng = np.random.default_rng(30)
    checked = 0
    for _ in range(4000):
        lam = rng.uniform(0, 1)
        g = complex(rng.normal(), rng.normal())
        B1, B2 = rng.uniform(0.2, 2.5), rng.uniform(-2, 2)
        mu = rng.uniform(-3, 3)
        c1, c2 = random_schwarz_pair(rng)
        a2, a3, d2 = forward_coefficients(c1, c2, lam, g, B1, B2)
        if abs(d2) > 1 - abs(c1) ** 2:
            continue
        checked += 1
        p = ClassParams(lam, g)
        v = abs(a3 - mu * a2 * a2)
        for th in ("T1", "T3"):
            assert v <= fs_bound(th, p, B1, B2, mu).value + 1e-9
    assert checked > 200


def test_verify_config_and_negation():
    p = ClassParams(0, 1)
    rec = verify_config(p, HALF, 1, "T1", COARSE)
    assert rec.sound and rec.slack >= 0
    assert rec.row()[:3] == ["half-plane", "", 0.0]
    bad = verify_config(p, HALF, 1, "T1", COARSE, negate_bound=True)
    assert not bad.sound


def test_verify_config_rejects_inapplicable():
    with pytest.raises(DomainError):
        verify_config(ClassParams(0, 1j), HALF, 1, "T2", COARSE)


def test_verify_all_marks_minimum():
    recs = verify_all(ClassParams(0.5, 1), MindaTarget.janowski(0.5, -0.5), 0.5, COARSE)
    assert [r.theorem for r in recs] == ["T1", "T2", "T3", "auto"]
    auto = recs[-1]
    assert auto.bound.value == min(r.bound.value for r in recs[:-1])
    assert auto.extra["selected"] in ("T1", "T2", "T3")
    assert len({id(r.oracle) for r in recs}) == 1

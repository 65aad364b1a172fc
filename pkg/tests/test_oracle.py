import random
from fractions import Fraction as F

import pytest

from hcone.core import HVector
from hcone.diagram import check_hdiagram
from hcone.generators import Glued, Max, Tower, enumerate_ex
from hcone.oracle import (
    LinearSystem,
    MalformedSystem,
    cone_membership_via_ex,
    hdiagram_system,
    is_extremal_oracle,
    lp_feasible,
    membership_oracle,
)
from hcone.oracle import fourier_motzkin, simplex
from hcone.selftest import random_system

BACKENDS = ["fm", "simplex", "auto"]


@pytest.mark.parametrize("backend", BACKENDS)
def test_simple_feasible(backend):
    s = LinearSystem(2, nonneg=[0, 1])
    s.ge({0: 1, 1: 1}, 3)
    s.eq({0: 1, 1: -1}, F(1, 2))
    res = lp_feasible(s, backend=backend)
    assert res.feasible and s.check(res.witness)


@pytest.mark.parametrize("backend", BACKENDS)
def test_simple_infeasible(backend):
    s = LinearSystem(2, nonneg=[0, 1])
    s.ge([-1, -1], 1)
    assert not lp_feasible(s, backend=backend)


@pytest.mark.parametrize("backend", BACKENDS)
def test_free_variables(backend):
    s = LinearSystem(1)
    s.eq({0: 2}, -3)
    res = lp_feasible(s, backend=backend)
    assert list(res.witness) == [F(-3, 2)]


@pytest.mark.parametrize("backend", BACKENDS)
def test_empty_system(backend):
    assert lp_feasible(LinearSystem(0), backend=backend)
    s = LinearSystem(0)
    s.ge({}, 1)
    assert not lp_feasible(s, backend=backend)


def test_malformed():
    s = LinearSystem(2)
    with pytest.raises(MalformedSystem):
        s.add({5: 1}, ">=", 0)
    with pytest.raises(MalformedSystem):
        s.add({0: 1}, "<", 0)
    with pytest.raises(MalformedSystem):
        s.add([1], ">=", 0)
    with pytest.raises(ValueError):
        lp_feasible(s, backend="magic")


def test_degenerate_cycling_candidate():
    # Beale-style degenerate system; Bland's rule must terminate.
    s = LinearSystem(4, nonneg=range(4))
    s.ge([F(-1, 4), 8, 1, -9], 0)
    s.ge([F(-1, 2), 12, F(1, 2), -3], 0)
    s.ge([0, 0, -1, 0], -1)
    s.ge([F(3, 4), -20, F(1, 2), -6], F(1, 100))
    assert simplex.feasible(s).feasible == fourier_motzkin.feasible(s).feasible


def test_backends_agree_on_random_systems():
    rng = random.Random(7)
    for _ in range(150):
        s = random_system(rng)
        a, b = fourier_motzkin.feasible(s), simplex.feasible(s)
        assert a.feasible == b.feasible
        for res in (a, b):
            if res.feasible:
                assert s.check(res.witness)


def test_hdiagram_system_shape():
    system, index = hdiagram_system(2, HVector([1, 1, 2]))
    assert set(index) == {(1, 0), (1, 1), (1, 2), (2, 2)}
    assert system.nvars == 4


def test_membership_oracle_examples():
    assert membership_oracle(2, HVector([2, 1, 2, 0, 1])).member
    assert not membership_oracle(2, HVector([1, 0, 0, 0, 1])).member
    res = membership_oracle(3, HVector([3, 3, 2, 4, 2, 1, 2, 1]))
    assert check_hdiagram(res.diagram, (3, 3, 2, 4, 2, 1, 2, 1))


def test_combination_oracle_examples():
    assert cone_membership_via_ex(2, HVector([2, 1, 2, 0, 1])).member
    assert not cone_membership_via_ex(2, HVector([1, 0, 0, 0, 1])).member
    assert cone_membership_via_ex(2, HVector()).member


@pytest.mark.parametrize("n,d", [(2, 6), (3, 7)])
def test_catalogue_is_extremal(n, d):
    for p in enumerate_ex(n, d):
        assert is_extremal_oracle(n, d, p)


def test_non_extremal_candidates():
    # the all-ones vector is a combination of maximal vectors
    assert not is_extremal_oracle(2, 5, (1, 1, 1, 1, 1, 1))
    with pytest.raises(ValueError):
        is_extremal_oracle(2, 3, Tower(3))
    with pytest.raises(ValueError):
        is_extremal_oracle(2, 2, (1, 1, 1, 1))


def test_oracle_witness_kinds():
    res = cone_membership_via_ex(4, HVector([3, 3, 2, 2, 3, 3, 2, 0, 1, 1]))
    assert res.member and all(q > 0 for q in res.coefficients.values())
    assert set(res.coefficients) <= set(enumerate_ex(4, 9))
    assert Max(0) in enumerate_ex(4, 9) and Glued(9, Max(4)) in enumerate_ex(4, 9)

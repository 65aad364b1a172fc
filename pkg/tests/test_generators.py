from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hcone.core import HConeError, HVector
from hcone.generators import (
    Decomposition,
    Glued,
    Max,
    Tower,
    canonical,
    chain_order,
    decomposition_from_json,
    decomposition_to_json,
    enumerate_ex,
    expand,
    format_decomposition,
    point_from_json,
    point_label,
    point_to_json,
    s_vector,
    star,
    t_vector,
    tower_decomposition,
    validate_point,
)


def test_s_and_t_vectors():
    assert s_vector(2, 5) == HVector([1, 1, 2, 2, 3, 3])
    assert t_vector(2, 4) == HVector([1, 0, 1, 0, 1])
    assert t_vector(3, 7) == HVector([1, 1, 0, 1, 1, 0, 1, 1])
    assert s_vector(1, 3) == HVector([1, 2, 3, 4])


def test_star_golden():
    assert star(3, 7, (1, 1)) == HVector([1, 1, 1, 2, 1, 0, 1, 1])


def test_star_rejects_bad_input():
    with pytest.raises(HConeError):
        star(2, 5, (1,))  # r = n-1
    with pytest.raises(HConeError):
        star(3, 7, (1, 1, 1, 1))  # too long for the room


@pytest.mark.parametrize("n,counts", [(2, [1, 2, 4, 5, 9, 10, 17]), (1, [1, 2, 3, 4, 5, 6, 7])])
def test_catalogue_sizes(n, counts):
    assert [len(enumerate_ex(n, d)) for d in range(len(counts))] == counts


def test_catalogue_n1_only_max_vectors():
    assert all(isinstance(p, Max) for p in enumerate_ex(1, 8))


def test_tower_decomposition_small():
    dec = tower_decomposition(2, 3)
    assert dec.as_dict() == {Max(5): F(1, 3), Max(3): F(1, 6), Max(1): F(1, 2)}
    assert dec.reconstruct(2) == HVector([1] * 6)


def test_canonical_and_validate():
    assert canonical(3, Tower(2)) == Max(2)
    with pytest.raises(HConeError):
        validate_point(2, Tower(3))
    with pytest.raises(HConeError):
        validate_point(3, Glued(7, Max(3)))
    validate_point(3, Glued(7, Max(2)))


def test_labels():
    assert point_label(Glued(9, Glued(4, Max(0)))) == "t^9*t^4*s^0"


def test_decomposition_merges_and_drops_zero():
    dec = Decomposition([(F(1, 2), Max(1)), (F(1, 2), Max(1)), (0, Max(3))])
    assert dec.as_dict() == {Max(1): 1}
    with pytest.raises(HConeError):
        Decomposition([(-1, Max(0))])


def test_format_uses_chain_order_and_omits_unit_coefficient():
    dec = Decomposition([(1, Max(1)), (F(1, 3), Max(7)), (F(1, 2), Glued(6, Max(3))), (1, Max(3)), (F(1, 6), Max(6))])
    assert format_decomposition(3, dec) == "1/3*s^7 + 1/6*s^6 + 1/2*t^6*s^3 + s^3 + s^1"
    assert [p for _, p in chain_order(3, dec)][0] == Max(7)


def test_json_round_trip_of_decomposition():
    dec = Decomposition([(1, Glued(9, Max(4))), (F(1, 2), Max(5))])
    data = decomposition_to_json(4, dec)
    assert data[0]["point"] == {"kind": "glued", "d": 9, "inner": {"kind": "max", "d": 4}}
    assert data[0]["expansion"] == [1, 1, 1, 1, 2, 2, 2, 0, 1, 1]
    assert decomposition_from_json(data) == dec


@pytest.mark.parametrize("bad", [{}, {"kind": "max"}, {"kind": "cube", "d": 1}, {"kind": "glued", "d": 4}, {"kind": "max", "d": "1"}])
def test_point_from_json_errors(bad):
    with pytest.raises(HConeError):
        point_from_json(bad)


@given(st.integers(1, 4), st.integers(0, 10))
def test_catalogue_is_well_formed(n, d):
    points = enumerate_ex(n, d)
    assert len(set(points)) == len(points)
    for p in points:
        assert point_from_json(point_to_json(p)) == p
        v = expand(n, p)
        assert v.get(0) == 1 and v.degree == p.degree
        assert all(x <= y for x, y in zip(v, s_vector(n, p.degree)))
    assert len({expand(n, p) for p in points}) == len(points)


@given(st.integers(1, 5), st.integers(1, 8))
def test_tower_identity(n, m):
    dec = tower_decomposition(n, m)
    assert dec.reconstruct(n) == HVector([1] * (n * m))
    assert dec.as_dict()[Max(n * m - 1)] == F(1, m)
    assert all(q > 0 for q, _ in dec)

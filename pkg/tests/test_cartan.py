from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd

import pytest
from hypothesis import given, strategies as st

from qmcrystal.cartan import (
    CartanError,
    CartanType,
    Sign,
    Weight,
    cartan_matrix,
    from_root_coords,
    fundamental_weight,
    inner_product,
    pairing,
    positive_roots,
    reflect,
    simple_root,
    to_root_coords,
    weight_sign,
    weyl_dim,
    weyl_orbit,
)

from oracles import root_coords_sympy

ALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "D5",
             "E6", "E7", "E8", "F4", "G2"]
ROOT_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "B4": 16, "C2": 4,
               "C3": 9, "C4": 16, "D3": 6, "D4": 12, "D5": 20, "E6": 36, "E7": 63, "E8": 120,
               "F4": 24, "G2": 6}


@pytest.mark.parametrize("text", ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H2", "X"])
def test_invalid_types_rejected(text):
    with pytest.raises(CartanError):
        CartanType.parse(text)


def test_parse_variants():
    assert CartanType.parse("e8") == CartanType("E", 8)
    assert CartanType.parse("A_3") == CartanType("A", 3)
    assert str(CartanType("G", 2)) == "G2"


def test_a1_matrix():
    cm = cartan_matrix("A1")
    assert cm.entries == ((2,),)
    assert cm.symmetrizer == (1,)


def test_g2_matrix_pinned_by_varpi1():
    cm = cartan_matrix("G2")
    assert cm.entries == ((2, -3), (-1, 2))
    assert cm.symmetrizer == (1, 3)
    # varpi_1 = 2 alpha_1 + alpha_2 with <a1v, w1> = 1, <a2v, w1> = 0
    assert 2 * simple_root("G2", 1) + simple_root("G2", 2) == Weight((1, 0))


def test_f4_matrix():
    cm = cartan_matrix("F4")
    assert cm.entries == ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2))
    assert cm.symmetrizer == (2, 2, 1, 1)


def test_e8_branch_node():
    a = cartan_matrix("E8").entries
    assert [j + 1 for j in range(8) if a[3][j] == -1] == [2, 3, 5]
    assert [j + 1 for j in range(8) if a[1][j] == -1] == [4]


@pytest.mark.parametrize("t", ALL_TYPES)
def test_cartan_axioms_and_symmetrizer(t):
    cm = cartan_matrix(t)
    a, d = cm.entries, cm.symmetrizer
    n = len(a)
    for i, j in product(range(n), repeat=2):
        if i == j:
            assert a[i][i] == 2
        else:
            assert a[i][j] <= 0
            assert (a[i][j] == 0) == (a[j][i] == 0)
        assert d[i] * a[i][j] == d[j] * a[j][i]
    assert reduce(gcd, d) == 1


def test_fundamental_weight_and_errors():
    assert fundamental_weight("G2", 1) == Weight((1, 0))
    assert fundamental_weight("E8", 8) == Weight((0,) * 7 + (1,))
    assert fundamental_weight("A1", 1) == Weight((1,))
    for bad in (0, 3):
        with pytest.raises(CartanError):
            fundamental_weight("G2", bad)
    with pytest.raises(CartanError):
        simple_root("G2", 3)


def test_simple_roots_are_columns():
    assert simple_root("G2", 1) == Weight((2, -1))
    assert simple_root("G2", 2) == Weight((-3, 2))
    assert simple_root("A1", 1) == Weight((2,))


def test_to_root_coords_examples():
    assert to_root_coords("G2", (1, 0)) == (2, 1)
    assert to_root_coords("A2", (1, 0)) == (Fraction(2, 3), Fraction(1, 3))
    assert to_root_coords("E8", (0,) * 8) == (0,) * 8


@pytest.mark.parametrize("t", ["A3", "B3", "C3", "D4", "F4", "G2", "E6"])
def test_to_root_coords_matches_sympy(t):
    n = CartanType.parse(t).rank
    for i in range(1, n + 1):
        w = fundamental_weight(t, i)
        assert tuple(to_root_coords(t, w)) == root_coords_sympy(t, w)


@given(st.sampled_from(ALL_TYPES), st.data())
def test_root_coords_round_trip(t, data):
    n = CartanType.parse(t).rank
    coords = data.draw(st.lists(st.fractions(max_denominator=12), min_size=n, max_size=n))
    w = Weight(coords)
    assert from_root_coords(t, to_root_coords(t, w)) == w


def test_weight_sign_examples():
    b6 = Weight((1, -1))  # -(w1 - a1)
    assert b6 == -(fundamental_weight("G2", 1) - simple_root("G2", 1))
    assert weight_sign("G2", b6) is Sign.NEGATIVE
    assert weight_sign("G2", (0, 0)) is Sign.ZERO
    assert weight_sign("G2", simple_root("G2", 1) - simple_root("G2", 2)) is Sign.INCOMPARABLE
    assert weight_sign("G2", (1, 0)) is Sign.POSITIVE


def test_weyl_orbit_examples():
    assert weyl_orbit("A1", (1,)) == {Weight((1,)), Weight((-1,))}
    w1, a1, a2 = fundamental_weight("G2", 1), simple_root("G2", 1), simple_root("G2", 2)
    expected = {w1, w1 - a1, w1 - a1 - a2}
    expected |= {-w for w in expected}
    assert weyl_orbit("G2", w1) == expected
    with pytest.raises(CartanError):
        weyl_orbit("A1", (Fraction(1, 2),))


def test_e8_orbit_is_root_system():
    orbit = weyl_orbit("E8", fundamental_weight("E8", 8))
    assert len(orbit) == 240 == 248 - 8
    roots = {from_root_coords("E8", r) for r in positive_roots("E8").positive_roots}
    assert orbit == roots | {-r for r in roots}


@pytest.mark.parametrize("t", ALL_TYPES)
def test_orbit_closed_and_isometric(t):
    n = CartanType.parse(t).rank
    mu = fundamental_weight(t, 1) + fundamental_weight(t, n) if n <= 4 else fundamental_weight(t, n)
    orbit = weyl_orbit(t, mu)
    norm = inner_product(t, mu, mu)
    for nu in orbit:
        assert inner_product(t, nu, nu) == norm
        for i in range(1, n + 1):
            assert reflect(t, nu, i) in orbit


@pytest.mark.parametrize("t", ALL_TYPES)
def test_positive_root_counts(t):
    rs = positive_roots(t)
    assert len(rs.positive_roots) == ROOT_COUNTS[t]
    n = CartanType.parse(t).rank
    for j in range(n):
        assert tuple(int(k == j) for k in range(n)) in rs
    assert rs.half_sum == Weight((1,) * n)


def test_a2_and_g2_roots():
    assert set(positive_roots("A2").positive_roots) == {(1, 0), (0, 1), (1, 1)}
    g2 = positive_roots("G2").positive_roots
    assert set(g2) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    long_ = {r for r in g2 if pairing("G2", from_root_coords("G2", r), r) == 2
             and inner_product("G2", from_root_coords("G2", r), from_root_coords("G2", r)) == 6}
    assert long_ == {(0, 1), (3, 1), (3, 2)}


@pytest.mark.parametrize("t,lam,dim", [
    ("G2", (1, 0), 7), ("G2", (0, 1), 14), ("G2", (0, 0), 1), ("E8", (0,) * 7 + (1,), 248),
    ("F4", (0, 0, 0, 1), 26), ("F4", (1, 0, 0, 0), 52), ("F4", (0, 0, 0, 2), 324),
    ("F4", (0, 0, 1, 0), 273), ("E8", (1,) + (0,) * 7, 3875), ("E8", (0,) * 7 + (2,), 27000),
    ("E8", (0,) * 6 + (1, 0), 30380), ("A2", (1, 1), 8), ("B2", (1, 1), 16),
    ("E6", (1, 0, 0, 0, 0, 0), 27), ("E7", (0,) * 6 + (1,), 56),
])
def test_weyl_dim_classical_values(t, lam, dim):
    assert weyl_dim(t, lam) == dim


@pytest.mark.parametrize("t", ALL_TYPES)
def test_weyl_dim_of_fundamentals_is_positive_integer(t):
    n = CartanType.parse(t).rank
    for i in range(1, n + 1):
        assert weyl_dim(t, fundamental_weight(t, i)) >= 1


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(CartanError):
        weyl_dim("G2", (1, -1))
    with pytest.raises(CartanError):
        weyl_dim("A1", (Fraction(1, 2),))

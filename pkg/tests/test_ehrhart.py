from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from alcoved.ehrhart import (
    Polynomial,
    ehr_to_hstar,
    ehrhart_from_hstar,
    ehrhart_polynomial,
    eulerian_numbers,
    hstar,
    interpolate,
)
from alcoved.enumeration import count_dilate
from alcoved.errors import NotLatticeEhrhart
from alcoved.polytopes import (
    make_chain_simplex,
    make_cube,
    make_qd,
    make_sharp_distance_example,
    random_alcoved,
)


def binom_poly(d):
    """``C(t + d, d)`` as a polynomial in ``t``."""
    return interpolate(range(d + 1), [comb(t + d, d) for t in range(d + 1)])


def test_square_polynomial():
    assert ehrhart_polynomial(make_cube(2)).coeffs == (1, 2, 1)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_simplex_polynomial(d):
    assert ehrhart_polynomial(make_chain_simplex(d)) == binom_poly(d)


def test_q2_polynomial():
    p = ehrhart_polynomial(make_qd(2))
    assert p.coeffs == (1, 3, 3)
    assert str(p) == "3*t^2 + 3*t + 1"


def test_eulerian_rows():
    A = eulerian_numbers(4)
    assert A[0][:1] == [1]
    assert A[3][:4] == [0, 1, 4, 1]
    assert A[4] == [0, 1, 11, 11, 1]


def test_ehr_to_hstar_examples():
    assert ehr_to_hstar(Polynomial.from_coeffs([1, 3, 3, 1]), 3) == (1, 4, 1, 0)
    assert ehr_to_hstar(binom_poly(4), 4) == (1, 0, 0, 0, 0)
    assert ehr_to_hstar(Polynomial.from_coeffs([1, 3, 3]), 2) == (1, 4, 1)


def test_ehr_to_hstar_rejects():
    with pytest.raises(NotLatticeEhrhart):
        ehr_to_hstar(Polynomial.from_coeffs([1, Fraction(1, 3)]), 1)
    with pytest.raises(NotLatticeEhrhart):
        ehr_to_hstar(Polynomial.from_coeffs([2, 1]), 1)
    with pytest.raises(NotLatticeEhrhart):
        ehr_to_hstar(Polynomial.from_coeffs([1, 0, 1]), 1)


def test_hstar_examples():
    assert hstar(make_qd(3)) == (1, 11, 11, 1)
    for d in range(1, 6):
        assert hstar(make_chain_simplex(d)) == (1,) + (0,) * d
    for d in range(2, 5):
        h = hstar(make_sharp_distance_example(d, cut=False))
        assert h == h[::-1]


@given(st.integers(1, 6), st.data())
def test_round_trip(d, data):
    tail = data.draw(st.lists(st.integers(0, 50), min_size=d, max_size=d))
    h = (1,) + tuple(tail)
    assert ehr_to_hstar(ehrhart_from_hstar(h, d), d) == h


@given(st.integers(2, 3), st.integers(0, 2**64 - 1), st.integers(1, 3))
def test_interpolation_nodes_do_not_matter(d, seed, shift):
    P = random_alcoved(d, seed, small=True)
    base = ehrhart_polynomial(P)
    assert ehrhart_polynomial(P, nodes=range(shift, shift + d + 1)) == base
    assert base(d + 2) == count_dilate(P, d + 2)


def test_node_count_checked():
    with pytest.raises(ValueError):
        ehrhart_polynomial(make_qd(2), nodes=[0, 1])

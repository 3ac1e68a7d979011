import random

import pytest
from hypothesis import given, settings, strategies as st

from alcoved.analysis import (
    distance_report,
    facet_distance,
    facets,
    gorenstein_index,
    hibi_stanley_check,
    hstar_symmetry,
    is_facet,
    is_reflexive,
    is_unimodal,
    main_theorem_hypothesis,
    max_facet_distance,
    peak_location,
    symmetry_status,
)
from alcoved.errors import EmptyList, NoInteriorPoints, NotAFacet, NotUnimodal
from alcoved.lattice_core import Constraint
from alcoved.polytopes import (
    make_chain_simplex,
    make_cube,
    make_qd,
    make_sharp_distance_example,
    random_alcoved,
)

from oracles import facet_by_enumeration, unimodal_by_quantifiers

TABLE_D3 = (1, 98, 188, 22)
TABLE_D5 = (1, 356, 3216, 3965, 722, 6)


def test_unimodal_examples():
    r = is_unimodal(TABLE_D3)
    assert r.unimodal and r.peak_indices == (2,)
    r = is_unimodal((1, 0, 1))
    assert not r.unimodal and r.first_violation == 2
    assert is_unimodal((1, 1, 1)).peak_indices == (0, 1, 2)
    with pytest.raises(EmptyList):
        is_unimodal(())


def test_unimodal_matches_quantifier_oracle():
    rng = random.Random(7)
    for _ in range(10_000):
        v = [rng.randint(0, 4) for _ in range(rng.randint(1, 7))]
        assert is_unimodal(v).unimodal == unimodal_by_quantifiers(v), v


def test_facet_distances():
    for d in range(1, 5):
        Q = make_qd(d)
        assert all(facet_distance(Q, c) == 1 for c in facets(Q))
        assert max_facet_distance(Q).max_distance == 1
    for d in range(2, 6):
        S = make_sharp_distance_example(d)
        cut = Constraint(1, 0, d)
        assert facet_distance(S, cut) == d - 1
        assert max_facet_distance(S).max_distance == d - 1


def test_facet_distance_errors():
    with pytest.raises(NotAFacet):
        facet_distance(_with_redundant(), Constraint(1, 2, 5))
    with pytest.raises(NoInteriorPoints):
        facet_distance(make_cube(2), Constraint(1, 0, 1))
    assert distance_report(make_cube(2)).max_distance is None


def _with_redundant():
    from alcoved.polytopes import validate

    return validate([(1, 0, 1), (0, 1, 0), (2, 0, 1), (0, 2, 0), (1, 2, 5)], 2)


def test_redundant_constraint_not_a_facet():
    P = _with_redundant()
    assert not is_facet(P, Constraint(1, 2, 5))
    assert len(facets(P)) == 4


@settings(max_examples=12)
@given(st.integers(2, 3), st.integers(0, 2**64 - 1))
def test_facets_match_enumeration(d, seed):
    P = random_alcoved(d, seed, small=True)
    for c in P.constraints:
        assert is_facet(P, c) == facet_by_enumeration(P.hrep.triples(), d, list(c))


def test_reflexive_and_hypothesis():
    for d in range(1, 5):
        assert is_reflexive(make_qd(d))
        assert main_theorem_hypothesis(make_qd(d))
    for d in range(3, 6):
        assert not is_reflexive(make_sharp_distance_example(d))
        assert not main_theorem_hypothesis(make_sharp_distance_example(d))
    assert not is_reflexive(make_cube(3))
    assert not main_theorem_hypothesis(make_cube(3))


def test_gorenstein():
    for d in range(2, 5):
        assert gorenstein_index(make_chain_simplex(d), d + 1) == d + 1
        assert gorenstein_index(make_chain_simplex(d), d) is None
    assert gorenstein_index(make_qd(3), 3) == 1
    assert gorenstein_index(make_cube(2), 3) == 2
    with pytest.raises(ValueError):
        gorenstein_index(make_qd(2), 0)


def test_symmetry():
    assert hstar_symmetry((1, 4, 1))
    assert not hstar_symmetry((1, 1, 0))
    assert symmetry_status(True, False) == "violation"
    assert symmetry_status(False, True) == "inconclusive"
    assert symmetry_status(True, True) == "consistent"


def test_hibi_stanley():
    assert hibi_stanley_check((1, 11, 11, 1), 3).ok
    assert hibi_stanley_check(TABLE_D3, 3).ok
    rep = hibi_stanley_check((1, 0, 2), 2)
    assert not rep.ok and ("binomial", 2) in rep.violations


def test_peak_location():
    p = peak_location((1, 4, 1), 2)
    assert p.peak_indices == (1,) and p.at_lower_middle and p.at_middle
    p = peak_location(TABLE_D3, 3)
    assert p.peak_indices == (2,) and p.at_upper_middle and not p.at_lower_middle
    p = peak_location(TABLE_D5, 5)
    assert p.peak_indices == (3,) and p.upper_middle == 3 and p.at_middle
    with pytest.raises(NotUnimodal):
        peak_location((1, 0, 1), 2)

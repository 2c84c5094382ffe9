from fractions import Fraction

import pytest

from fwenum.families import FAMILIES, ring_dimension
from fwenum.homopoly import Mat2, TAU, act_matrix, sigma_q
from fwenum.matgroup import (
    GroupClosureError,
    RationalFunctionSeries,
    group_closure,
    molien_series,
    named_group,
)

EXPECTED = {
    "g1minus": (8, [2, 4]),
    "g4minus": (6, [2, 3]),
    "g43minus": (12, [2, 6]),
    "g43": (24, [2, 12]),
}

GROUP_FOR_FAMILY = {
    "type1": "g1minus",
    "type4": "g4minus",
    "q43-odd": "g43minus",
    "q43": "g43",
}


@pytest.fixture(scope="module")
def groups():
    return {name: named_group(name) for name in EXPECTED}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_printed_orders(groups, name):
    assert groups[name].order == EXPECTED[name][0]


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_molien_closed_forms(groups, name):
    series = molien_series(groups[name], 41)
    assert series == RationalFunctionSeries.one_over(EXPECTED[name][1])


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_group_axioms_on_closure(groups, name):
    g = groups[name]
    elements = list(g.elements)
    assert Mat2.identity() in g
    for m in elements:
        assert m.inverse() in g
    for m in elements:
        for k in elements:
            assert (m @ k) in g


def test_involution_generator():
    assert group_closure([TAU]).order == 2


def test_trivial_group_molien():
    series = molien_series(group_closure([Mat2.identity()]), 10)
    assert series == RationalFunctionSeries([1], [1, -2, 1])  # 1/(1-l)^2
    assert series.series(5) == [1, 2, 3, 4, 5]


def test_generators_fix_the_ring_generators(printed):
    # the q = 4/3 groups fix the degree-2 and degree-6/12 invariants
    w2 = printed["phi6"]  # reuse fixture access; proper polys below
    from fwenum.families import generator

    w2 = generator("w2", Fraction(4, 3))
    phi6 = generator("phi6")
    for m in named_group("g43minus").elements:
        assert act_matrix(w2, m) == w2
        assert act_matrix(phi6, m) == phi6
    sq = sigma_q(Fraction(4, 3))
    assert act_matrix(phi6 * phi6, sq) == phi6 * phi6


def test_noninvertible_generator_rejected():
    with pytest.raises(ValueError):
        group_closure([Mat2(1, 0, 0, 0)])


def test_closure_cap():
    shear = Mat2(1, 1, 0, 1)  # infinite order
    with pytest.raises(GroupClosureError):
        group_closure([shear], cap=64)


def test_series_prefix_of_g43():
    series = molien_series(named_group("g43"), 15)
    assert series.series(15) == [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2]


@pytest.mark.parametrize("fam_name", sorted(GROUP_FOR_FAMILY))
def test_molien_matches_ring_dimension_to_40(fam_name):
    fam = FAMILIES[fam_name]
    series = molien_series(named_group(GROUP_FOR_FAMILY[fam_name]), 41)
    coeffs = series.series(41)
    for n in range(41):
        assert coeffs[n] == ring_dimension(fam, n), (fam_name, n)

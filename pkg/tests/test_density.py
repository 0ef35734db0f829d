"""Census and density values, frozen from an independent brute-force pass
(groups realized as permutation/matrix groups, subgroups enumerated as raw
element sets), plus cross-route identities."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclicdensity import (
    FiniteGroup,
    alpha,
    alpha_via_totient,
    average_order,
    build_group,
    census_matches_orders,
    count_identity_holds,
    cyclic_subgroups,
    group_exponent,
    make_abelian,
    make_cyclic,
    subgroup_count_identity_check,
)


def test_census_d8(d8):
    census = cyclic_subgroups(d8)
    assert census.count == 7
    assert census.by_order == {1: 1, 2: 5, 4: 1}
    assert frozenset({0, 1, 2, 3}) in census.subgroups  # the rotation subgroup
    assert frozenset({0}) in census.subgroups


def test_census_q8(q8):
    census = cyclic_subgroups(q8)
    assert census.count == 5
    assert census.by_order == {1: 1, 2: 1, 4: 3}


def test_census_z12(z12):
    census = cyclic_subgroups(z12)
    # one cyclic subgroup per divisor of 12
    assert census.count == 6
    assert census.by_order == {1: 1, 2: 1, 3: 1, 4: 1, 6: 1, 12: 1}


def test_census_symmetric(s3, s4):
    assert cyclic_subgroups(s3).count == 5
    assert cyclic_subgroups(s4).count == 17


def test_census_is_cached(d8):
    assert cyclic_subgroups(d8) is cyclic_subgroups(d8)


def test_alpha_values(d8, q8, s3, z4, klein, d16, q16, heis3):
    assert alpha(d8) == Fraction(7, 8)
    assert alpha(q8) == Fraction(5, 8)
    assert alpha(s3) == Fraction(5, 6)
    assert alpha(z4) == Fraction(3, 4)
    assert alpha(klein) == Fraction(1)
    assert alpha(d16) == Fraction(3, 4)
    assert alpha(q16) == Fraction(1, 2)
    assert alpha(heis3) == Fraction(14, 27)


def test_alpha_totient_route_matches(d8, q8, s3, s4, pauli16, es32_plus,
                                     es32_minus, heis3, z12, klein):
    for g in (d8, q8, s3, s4, pauli16, es32_plus, es32_minus, heis3, z12, klein):
        assert alpha_via_totient(g) == alpha(g)
        assert count_identity_holds(g)
        assert census_matches_orders(g)


def test_alpha_extraspecial32(es32_plus, es32_minus):
    assert alpha(es32_plus) == Fraction(13, 16)
    assert alpha(es32_minus) == Fraction(11, 16)
    assert cyclic_subgroups(es32_plus).count == 26
    assert cyclic_subgroups(es32_minus).count == 22


def test_alpha_pauli16(pauli16):
    assert cyclic_subgroups(pauli16).count == 12
    assert alpha(pauli16) == Fraction(3, 4)


def test_average_orders(d8, q8, s3, s4, pauli16):
    assert average_order(d8) == Fraction(19, 8)
    assert average_order(q8) == Fraction(27, 8)
    assert average_order(s3) == Fraction(13, 6)
    assert average_order(s4) == Fraction(67, 24)
    assert average_order(pauli16) == Fraction(47, 16)


def test_alpha_of_trivial_group():
    g = make_cyclic(1)
    assert alpha(g) == Fraction(1)
    assert average_order(g) == Fraction(1)


def test_alpha_cyclic_closed_form():
    # for Z_n: |C| = number of divisors of n
    for n, divisors in ((2, 2), (6, 4), (12, 6), (30, 8), (36, 9)):
        g = make_cyclic(n)
        assert cyclic_subgroups(g).count == divisors


def test_klein_alpha_is_one(klein):
    # every element has order <= 2, so every cyclic subgroup has a unique generator
    assert alpha(klein) == 1
    assert alpha_via_totient(klein) == 1


def test_count_identity_report_agreement(d8):
    ok, message = subgroup_count_identity_check(d8)
    assert ok
    assert "7" in message


def test_count_identity_report_discrepancy(d8):
    bad_ord = d8.ord.copy()
    bad_ord[4] = 4  # reflection 4 really has order 2
    fake = FiniteGroup(d8.table, d8.inv, bad_ord, "tampered:dihedral:8")
    ok, message = subgroup_count_identity_check(fake)
    assert not ok
    assert "enumeration finds 7" in message
    assert "totient sum gives" in message


def test_alpha_range_and_exponent_two_characterization():
    # alpha lies in (0, 1]; it hits 1 exactly when every non-identity
    # element is an involution
    for spec in ("cyclic:1", "cyclic:2", "abelian:2,2", "abelian:2,2,2",
                 "cyclic:5", "cyclic:12", "dihedral:8", "quaternion:16",
                 "symmetric:4", "heisenberg:3"):
        g = build_group(spec)
        a = alpha(g)
        assert 0 < a <= 1, spec
        assert (a == 1) == (group_exponent(g) <= 2), spec


def test_average_order_lower_bound():
    # o(G) >= 1, with equality only for the one-element group
    for spec in ("cyclic:1", "cyclic:2", "dihedral:8", "heisenberg:3",
                 "symmetric:4"):
        g = build_group(spec)
        avg = average_order(g)
        assert avg >= 1, spec
        assert (avg == 1) == (g.n == 1), spec


corpus_specs_strategy = st.sampled_from([
    "cyclic:17", "cyclic:24", "abelian:2,2,2", "abelian:3,9", "abelian:4,4",
    "dihedral:12", "dihedral:20", "quaternion:8", "quaternion:20",
    "symmetric:4", "extraspecial:32:+", "extraspecial:32:-",
    "almost-extraspecial:16", "heisenberg:3", "heisenberg:5",
    "product:(cyclic:3)x(quaternion:8)", "product:(dihedral:8)x(cyclic:5)",
])


@settings(max_examples=17, deadline=None)
@given(corpus_specs_strategy)
def test_routes_agree_across_catalog(spec):
    g = build_group(spec)
    assert alpha(g) == alpha_via_totient(g)
    assert census_matches_orders(g)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), min_size=1, max_size=3))
def test_abelian_alpha_equals_center_alpha(orders):
    g = make_abelian(tuple(orders))
    # abelian: G = Z(G), so the density must equal itself under both routes
    assert alpha(g) == alpha_via_totient(g)
    assert count_identity_holds(g)

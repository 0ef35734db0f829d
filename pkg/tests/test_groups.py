"""Core table machinery: validation, centers, cosets, quotients, products."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclicdensity import (
    InvalidArgument,
    NoIdentityAtZero,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotCentral,
    NotClosed,
    SizeLimitExceeded,
    center,
    coset_partition,
    direct_product,
    group_exponent,
    make_abelian,
    make_cyclic,
    make_dihedral,
    make_heisenberg,
    make_quaternion,
    make_symmetric,
    quotient_by_central,
    relabeled_copy,
    subgroup_from_set,
    validate_table,
    validate_table_with_report,
    verify_group_invariants,
)
from cyclicdensity.groups import SIZE_CAP_ENV


def z3_table():
    return [[0, 1, 2], [1, 2, 0], [2, 0, 1]]


def test_validate_accepts_z3():
    g = validate_table(z3_table(), "z3")
    assert g.n == 3
    assert g.compose(1, 2) == 0
    assert g.inverse(1) == 2
    assert [g.element_order(a) for a in range(3)] == [1, 3, 3]


def test_validate_moves_identity_to_zero():
    # same Z3 but with the identity living at id 2
    raw = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    g, reindex = validate_table_with_report(raw, "z3-shifted")
    assert g.compose(0, 0) == 0 and g.element_order(0) == 1
    assert reindex[2] == 0 and len(reindex) == 3
    assert sorted(reindex) == [0, 1, 2]


def test_validate_rejects_nonsquare():
    with pytest.raises(NotClosed):
        validate_table([[0, 1], [1, 0], [0, 1]])


def test_validate_rejects_out_of_range_entry():
    with pytest.raises(NotClosed):
        validate_table([[0, 1], [1, 7]])


def test_validate_rejects_missing_identity():
    with pytest.raises(NoIdentityAtZero):
        validate_table([[1, 1], [1, 1]])


def test_validate_finds_identity_anywhere():
    # Z2 written with the identity at id 1
    g, reindex = validate_table_with_report([[1, 0], [0, 1]])
    assert g.n == 2 and g.compose(1, 1) == 0
    assert reindex == [1, 0]


def test_validate_rejects_nonassociative_with_witness():
    raw = [[0, 1, 2], [1, 2, 0], [2, 0, 2]]
    with pytest.raises(NotAssociative) as err:
        validate_table(raw)
    a, b, c = err.value.triple
    t = np.asarray(raw)
    assert t[t[a, b], c] != t[a, t[b, c]]


def test_validate_rejects_no_inverse():
    # identity present, associativity holds (idempotent monoid), but 1 has no inverse
    raw = [[0, 1], [1, 1]]
    with pytest.raises(NoInverse) as err:
        validate_table(raw)
    assert err.value.element == 1


def test_sampled_assoc_mode_accepts_good_table():
    g = validate_table(z3_table(), assoc="sampled")
    assert g.n == 3
    with pytest.raises(InvalidArgument):
        validate_table(z3_table(), assoc="sometimes")


def test_size_cap_env_override(monkeypatch):
    monkeypatch.setenv(SIZE_CAP_ENV, "5")
    with pytest.raises(SizeLimitExceeded):
        make_cyclic(6)
    assert make_cyclic(5).n == 5
    monkeypatch.setenv(SIZE_CAP_ENV, "banana")
    with pytest.raises(InvalidArgument):
        make_cyclic(2)


def test_explicit_max_size_beats_env():
    assert make_cyclic(10, max_size=10).n == 10
    with pytest.raises(SizeLimitExceeded):
        make_cyclic(11, max_size=10)


def test_center_of_dihedral8(d8):
    z = center(d8)
    assert sorted(int(x) for x in z.members) == [0, 2]
    assert d8.element_order(2) == 2


def test_center_of_abelian_is_everything(z12):
    assert len(center(z12)) == 12


def test_center_of_symmetric_is_trivial(s4):
    assert len(center(s4)) == 1


def test_subgroup_rejects_unclosed_set(d8):
    with pytest.raises(NotASubgroup) as err:
        subgroup_from_set(d8, [0, 1])  # 1 is a rotation of order 4
    assert err.value.witness is not None


def test_subgroup_requires_identity(d8):
    with pytest.raises(NotASubgroup):
        subgroup_from_set(d8, [2, 4])


def test_subgroup_as_group_roundtrip(d8):
    z = subgroup_from_set(d8, [0, 1, 2, 3])  # the rotation subgroup
    rot = z.as_group("rotations")
    assert rot.n == 4 and group_exponent(rot) == 4
    verify_group_invariants(rot)


def test_coset_partition_of_d8(d8):
    part = coset_partition(d8, center(d8))
    assert part.m == 4
    assert part.cosets[0] == (0, 2)
    assert all(len(c) == 2 for c in part.cosets)
    # minimal representative orders: center 1, rotation coset 4, reflections 2
    ks = sorted(rep.k for rep in part.reps)
    assert ks == [1, 2, 2, 4]
    assert part.reps[0].k == 1 and part.reps[0].y == 0


def test_coset_partition_requires_central(s4):
    sub = subgroup_from_set(s4, [0, 1])  # a transposition: not central
    with pytest.raises(NotCentral):
        coset_partition(s4, sub)


def test_quotient_of_d8_is_klein(d8):
    q = quotient_by_central(d8, center(d8))
    assert q.n == 4
    assert group_exponent(q) == 2
    assert q.is_abelian()
    verify_group_invariants(q)


def test_quotient_by_whole_group_is_trivial(z12):
    q = quotient_by_central(z12, center(z12))
    assert q.n == 1 and group_exponent(q) == 1


def test_quotient_of_pauli16_is_klein(pauli16):
    # center is Z4; the quotient has order 4 with every non-identity
    # element an involution
    q = quotient_by_central(pauli16, center(pauli16))
    assert q.n == 4
    assert group_exponent(q) == 2
    assert sorted(int(v) for v in q.ord) == [1, 2, 2, 2]
    verify_group_invariants(q)


def test_group_exponent_values(d8, q8, s4, z12):
    assert group_exponent(d8) == 4
    assert group_exponent(q8) == 4
    assert group_exponent(s4) == 12
    assert group_exponent(z12) == 12


def test_direct_product_orders():
    g = direct_product(make_cyclic(3), make_cyclic(4))
    assert g.n == 12
    assert group_exponent(g) == 12
    assert sorted(np.unique(g.ord)) == [1, 2, 3, 4, 6, 12]
    verify_group_invariants(g)


def test_direct_product_with_trivial_factor(q8):
    g = direct_product(make_cyclic(1), q8)
    assert g.n == 8
    assert np.array_equal(g.table, q8.table)


def test_direct_product_respects_cap():
    with pytest.raises(SizeLimitExceeded):
        direct_product(make_cyclic(70), make_cyclic(70), max_size=4000)


def test_relabeled_copy_is_a_group(d8):
    rng = np.random.default_rng(7)
    perm = rng.permutation(8)
    g = relabeled_copy(d8, perm)
    verify_group_invariants(g)
    assert sorted(np.unique(g.ord)) == sorted(np.unique(d8.ord))


def test_relabeled_copy_rejects_non_permutation(d8):
    with pytest.raises(InvalidArgument):
        relabeled_copy(d8, [0] * 8)


def test_invariants_audit_all_families():
    groups = [
        make_cyclic(1),
        make_cyclic(31),
        make_abelian((4, 9)),
        make_dihedral(30),
        make_quaternion(24),
        make_symmetric(4),
        make_heisenberg(3),
    ]
    for g in groups:
        verify_group_invariants(g)


def test_invariants_catch_tampered_orders(d8):
    from cyclicdensity.groups import FiniteGroup

    bad_ord = d8.ord.copy()
    bad_ord[4] = 4  # a reflection really has order 2
    fake = FiniteGroup(d8.table, d8.inv, bad_ord, "tampered")
    with pytest.raises(NotClosed):
        verify_group_invariants(fake)


small_orders = st.integers(min_value=1, max_value=24)


@settings(max_examples=30, deadline=None)
@given(small_orders, st.randoms(use_true_random=False))
def test_random_relabelings_stay_valid(n, rnd):
    g = make_cyclic(n)
    perm = list(range(n))
    rnd.shuffle(perm)
    h = relabeled_copy(g, perm)
    verify_group_invariants(h)
    assert group_exponent(h) == group_exponent(g)

"""Checks for the density inequality alpha(G) <= alpha(Z(G)), its equality
characterization, the per-coset decomposition behind it, and the corollaries.

Every boolean this module reports is recomputed from raw group data; nothing
is taken on faith from a constructor.  full_report() aggregates all checks
and collects human-readable findings for any that fail, so a clean group
always yields an empty findings tuple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .arith import euler_phi
from .density import (
    alpha,
    average_order,
    census_matches_orders,
    cyclic_subgroups,
    subgroup_count_identity_check,
)
from .errors import NotASubgroup
from .groups import (
    FiniteGroup,
    Subgroup,
    center,
    coset_partition,
    group_exponent,
    quotient_by_central,
)


@dataclass(frozen=True)
class CosetCheck:
    """Verified facts about one coset yZ: minimal order k, its totient sum,
    and the three per-coset proof obligations."""

    k: int
    coset_sum: Fraction
    order_identity: bool     # o(y x) == (k / gcd(k, o(x))) * o(x) for all x in Z
    divisibility: bool       # phi(o(x)) divides phi(o(y x)) for all x in Z
    coset_inequality: bool   # coset_sum <= center coset sum
    is_center: bool


@dataclass(frozen=True)
class PerCosetFindings:
    """Per-coset analysis for the partition of G by its center.

    per_coset entry 0 is the center coset; the rest are sorted by
    (k, coset_sum, flags) so the tuple is invariant under relabeling.
    """

    group_label: str
    center_sum: Fraction
    per_coset: tuple[CosetCheck, ...]
    total: Fraction
    all_hold: bool
    findings: tuple[str, ...]


@dataclass(frozen=True)
class StructuralResult:
    """Outcome of the internal equality criterion, with factors when it holds:
    (a) odd-order elements are central and form a subgroup O,
    (b) 2-power-order elements form a subgroup T meeting O trivially with
        |T| * |O| = |G|,
    (c) every coset of Z(T) in T contains an element of order at most 2."""

    holds: bool
    two_part: Optional[Subgroup]
    odd_part: Optional[Subgroup]
    witness: str = ""


@dataclass(frozen=True)
class AlphaReport:
    """Everything the verifier established about one group.

    Boolean fields are rechecked against the rational fields on
    construction, so a report can never carry an inconsistent verdict.
    """

    label: str
    order: int
    center_order: int
    cyclic_count: int
    alpha_g: Fraction
    alpha_z: Fraction
    inequality_holds: bool
    equality: bool
    structural: bool
    quotient_exponent: int
    two_central: bool
    four_abelian: bool
    avg_order_g: Fraction
    avg_order_z: Fraction
    avg_inequality_holds: bool
    count_identity: bool
    proof_steps: tuple[CosetCheck, ...]
    findings: tuple[str, ...]

    def __post_init__(self):
        if self.center_order < 1 or self.order % self.center_order != 0:
            raise ValueError("center order must divide the group order")
        if self.inequality_holds != (self.alpha_g <= self.alpha_z):
            raise ValueError("inequality flag contradicts the alpha values")
        if self.equality != (self.alpha_g == self.alpha_z):
            raise ValueError("equality flag contradicts the alpha values")
        if self.avg_inequality_holds != (self.avg_order_g >= self.avg_order_z):
            raise ValueError("average-order flag contradicts the averages")

    @property
    def clean(self) -> bool:
        return not self.findings


def verify_alpha_inequality(g: FiniteGroup) -> tuple[Fraction, Fraction, bool]:
    """alpha(G), alpha(Z(G)), and whether alpha(G) <= alpha(Z(G))."""
    a_g = alpha(g)
    a_z = alpha(center(g).as_group(f"center of {g.label}"))
    return a_g, a_z, a_g <= a_z


def verify_average_order_inequality(g: FiniteGroup) -> tuple[Fraction, Fraction, bool]:
    """o(G), o(Z(G)), and whether o(G) >= o(Z(G))."""
    avg_g = average_order(g)
    avg_z = average_order(center(g).as_group(f"center of {g.label}"))
    return avg_g, avg_z, avg_g >= avg_z


def equality_holds(g: FiniteGroup) -> bool:
    a_g, a_z, _ = verify_alpha_inequality(g)
    return a_g == a_z


def per_coset_analysis(g: FiniteGroup) -> PerCosetFindings:
    """Check the three proof obligations on every coset of the center.

    For each coset with minimal representative y of order k, and every
    central x: the product order identity, totient divisibility, and the
    per-coset sum bound against the center's own sum.
    """
    z = center(g)
    part = coset_partition(g, z)
    zmem = z.members
    zords = [int(v) for v in g.ord[zmem]]
    phi = {d: euler_phi(d) for d in set(int(v) for v in np.unique(g.ord))}
    center_sum = sum(Fraction(1, phi[o]) for o in zords)
    checks: list[CosetCheck] = []
    findings: list[str] = []
    total = Fraction(0)
    for rep, coset in zip(part.reps, part.cosets):
        y, k = rep.y, rep.k
        prod_orders = [int(v) for v in g.ord[g.table[y, zmem]]]
        coset_sum = sum(Fraction(1, phi[o]) for o in prod_orders)
        ok_identity = all(
            oyx == (k // math.gcd(k, ox)) * ox for ox, oyx in zip(zords, prod_orders)
        )
        ok_divides = all(
            phi[oyx] % phi[ox] == 0 for ox, oyx in zip(zords, prod_orders)
        )
        ok_bound = coset_sum <= center_sum
        if not ok_identity:
            findings.append(
                f"order-identity: coset of {y} (k = {k}) violates "
                f"o(y x) = (k / gcd(k, o(x))) o(x) for some central x"
            )
        if not ok_divides:
            findings.append(
                f"totient-divisibility: coset of {y} has some phi(o(x)) "
                f"not dividing phi(o(y x))"
            )
        if not ok_bound:
            findings.append(
                f"coset-inequality: coset of {y} sums to {coset_sum}, "
                f"over the center sum {center_sum}"
            )
        checks.append(CosetCheck(
            k=k, coset_sum=coset_sum, order_identity=ok_identity,
            divisibility=ok_divides, coset_inequality=ok_bound,
            is_center=(rep.coset_index == 0),
        ))
        total += coset_sum
    head, rest = checks[0], checks[1:]
    rest.sort(key=lambda c: (c.k, c.coset_sum, c.order_identity,
                             c.divisibility, c.coset_inequality))
    ordered = (head, *rest)
    return PerCosetFindings(
        group_label=g.label,
        center_sum=center_sum,
        per_coset=ordered,
        total=total,
        all_hold=not findings,
        findings=tuple(findings),
    )


def structural_condition(g: FiniteGroup) -> StructuralResult:
    """Decide the equality criterion from the table alone (no isomorphism
    search): central odd part, 2-power part, and involution coverage of
    the 2-part's central cosets."""
    zbit = center(g).bitmap
    ords = g.ord
    odd_mask = (ords % 2) == 1
    bad = np.nonzero(odd_mask & ~zbit)[0]
    if bad.size:
        x = int(bad[0])
        return StructuralResult(
            False, None, None,
            f"element {x} has odd order {int(ords[x])} but is not central",
        )
    try:
        odd_part = Subgroup(g, np.nonzero(odd_mask)[0])
    except NotASubgroup as exc:
        return StructuralResult(False, None, None,
                                f"odd-order elements do not form a subgroup: {exc}")
    two_mask = (ords & (ords - 1)) == 0
    try:
        two_part = Subgroup(g, np.nonzero(two_mask)[0])
    except NotASubgroup as exc:
        return StructuralResult(False, None, odd_part,
                                f"2-power-order elements do not form a subgroup: {exc}")
    overlap = int((two_mask & odd_mask).sum())
    if overlap != 1 or len(two_part) * len(odd_part) != g.n:
        return StructuralResult(
            False, two_part, odd_part,
            f"parts do not factor the group: |T| = {len(two_part)}, "
            f"|O| = {len(odd_part)}, |T meet O| = {overlap}, |G| = {g.n}",
        )
    tg = two_part.as_group(f"2-part of {g.label}")
    part = coset_partition(tg, center(tg))
    for rep in part.reps:
        if rep.k > 2:
            orig = int(two_part.members[rep.y])
            return StructuralResult(
                False, two_part, odd_part,
                f"coset of {orig} in the 2-part has minimal order {rep.k}, "
                f"no element of order <= 2",
            )
    return StructuralResult(True, two_part, odd_part, "")


def verify_equality_equivalence(g: FiniteGroup) -> tuple[bool, bool, bool]:
    """(equality, structural verdict, whether the two agree)."""
    eq = equality_holds(g)
    st = structural_condition(g)
    return eq, st.holds, eq == st.holds


def is_2_central(g: FiniteGroup) -> bool:
    """True when every square lies in the center."""
    ar = np.arange(g.n)
    squares = g.table[ar, ar]
    return bool(center(g).bitmap[squares].all())


def is_4_abelian_witness(g: FiniteGroup) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether (x y)^4 = x^4 y^4 for every pair; the first failing (x, y) otherwise."""
    ar = np.arange(g.n)
    sq = g.table[ar, ar]
    f4 = sq[sq]
    lhs = f4[g.table]
    rhs = g.table[np.ix_(f4, f4)]
    mismatch = np.argwhere(lhs != rhs)
    if mismatch.size:
        x, y = mismatch[0]
        return False, (int(x), int(y))
    return True, None


def is_4_abelian(g: FiniteGroup) -> bool:
    ok, _ = is_4_abelian_witness(g)
    return ok


def full_report(g: FiniteGroup, label: Optional[str] = None) -> AlphaReport:
    """Run every check on one group and fold the results into an AlphaReport."""
    census = cyclic_subgroups(g)
    a_g = alpha(g)
    count_ok, count_msg = subgroup_count_identity_check(g)
    zg = center(g).as_group(f"center of {g.label}")
    a_z = alpha(zg)
    avg_g = average_order(g)
    avg_z = average_order(zg)
    pc = per_coset_analysis(g)
    eq = a_g == a_z
    st = structural_condition(g)
    qexp = group_exponent(quotient_by_central(g, center(g)))
    two_c = is_2_central(g)
    four_ab, four_witness = is_4_abelian_witness(g)

    findings: list[str] = []
    if not count_ok:
        findings.append(f"count-identity: {count_msg}")
    if not census_matches_orders(g):
        findings.append(
            "census-orders: subgroup counts by order disagree with the "
            "phi(d)-generators-per-subgroup identity"
        )
    if pc.total != census.count:
        findings.append(
            f"coset-decomposition: per-coset sums total {pc.total}, "
            f"but the census counts {census.count}"
        )
    findings.extend(pc.findings)
    if a_g > a_z:
        findings.append(f"alpha-inequality: alpha(G) = {a_g} exceeds alpha(Z) = {a_z}")
    if eq != st.holds:
        detail = f" ({st.witness})" if st.witness else ""
        findings.append(
            f"equality-equivalence: equality is {eq} but the structural "
            f"condition is {st.holds}{detail}"
        )
    if eq:
        for c in pc.per_coset[1:]:
            if c.k != 2:
                findings.append(
                    f"equality-minimal-order: equality holds yet a non-center "
                    f"coset has minimal order {c.k}, expected 2"
                )
        if qexp > 2:
            findings.append(
                f"equality-quotient: equality holds yet exp(G/Z) = {qexp} > 2"
            )
        if not two_c:
            findings.append("2-central: equality holds yet some square is not central")
        if not four_ab:
            findings.append(
                f"4-abelian: equality holds yet (x y)^4 != x^4 y^4 for "
                f"(x, y) = {four_witness}"
            )
        if g.n % 2 == 1 and not g.is_abelian():
            findings.append("odd-order: equality holds for an odd-order non-abelian group")
    if avg_g < avg_z:
        findings.append(
            f"avg-order-inequality: o(G) = {avg_g} is below o(Z) = {avg_z}"
        )

    return AlphaReport(
        label=label or g.label,
        order=g.n,
        center_order=zg.n,
        cyclic_count=census.count,
        alpha_g=a_g,
        alpha_z=a_z,
        inequality_holds=a_g <= a_z,
        equality=eq,
        structural=st.holds,
        quotient_exponent=qexp,
        two_central=two_c,
        four_abelian=four_ab,
        avg_order_g=avg_g,
        avg_order_z=avg_z,
        avg_inequality_holds=avg_g >= avg_z,
        count_identity=count_ok,
        proof_steps=pc.per_coset,
        findings=tuple(findings),
    )


__all__ = [
    "CosetCheck",
    "PerCosetFindings",
    "StructuralResult",
    "AlphaReport",
    "verify_alpha_inequality",
    "verify_average_order_inequality",
    "equality_holds",
    "per_coset_analysis",
    "structural_condition",
    "verify_equality_equivalence",
    "is_2_central",
    "is_4_abelian",
    "is_4_abelian_witness",
    "full_report",
]

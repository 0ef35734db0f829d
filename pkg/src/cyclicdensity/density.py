"""Cyclic-subgroup census and the density invariants derived from it.

Two deliberately independent routes to the same quantity: alpha() counts
distinct cyclic subgroups by explicit enumeration, alpha_via_totient()
sums 1/phi(o(x)) over elements.  Their agreement is itself one of the
identities under test, so neither is implemented in terms of the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import euler_phi
from .groups import FiniteGroup


@dataclass(frozen=True)
class CyclicCensus:
    """All cyclic subgroups of a group, as frozensets of element ids."""

    group: FiniteGroup
    subgroups: frozenset[frozenset[int]]
    by_order: dict[int, int]  # subgroup order -> how many cyclic subgroups

    @property
    def count(self) -> int:
        return len(self.subgroups)


def cyclic_subgroups(g: FiniteGroup) -> CyclicCensus:
    """Enumerate <x> for every x and deduplicate by the underlying set.

    All n power walks advance in lockstep (cur[x] holds x^k), filling a
    membership matrix that is then deduplicated row-wise.
    """
    if g._census is not None:
        return g._census
    n = g.n
    ar = np.arange(n, dtype=np.int32)
    member = np.zeros((n, n), dtype=bool)  # member[x, y] <=> y lies in <x>
    member[:, 0] = True
    cur = ar.copy()
    while (cur != 0).any():
        member[ar, cur] = True
        cur = g.table[cur, ar]
    rows = np.unique(member, axis=0)
    seen = frozenset(
        frozenset(int(y) for y in np.nonzero(row)[0]) for row in rows
    )
    assert len(seen) == rows.shape[0]
    by_order: dict[int, int] = {}
    for s in seen:
        by_order[len(s)] = by_order.get(len(s), 0) + 1
    census = CyclicCensus(group=g, subgroups=frozenset(seen), by_order=by_order)
    g._census = census
    return census


def alpha(g: FiniteGroup) -> Fraction:
    """Cyclic-subgroup density |C(G)| / |G| by explicit enumeration."""
    return Fraction(cyclic_subgroups(g).count, g.n)


def alpha_via_totient(g: FiniteGroup) -> Fraction:
    """The same density via the identity |C(G)| = sum over x of 1/phi(o(x))."""
    orders, counts = np.unique(g.ord, return_counts=True)
    total = sum(
        Fraction(int(c), euler_phi(int(d))) for d, c in zip(orders, counts)
    )
    return total / g.n


def count_identity_holds(g: FiniteGroup) -> bool:
    """Check |C(G)| = sum of 1/phi(o(x)) with both sides computed independently."""
    return Fraction(cyclic_subgroups(g).count, 1) == alpha_via_totient(g) * g.n


def subgroup_count_identity_check(g: FiniteGroup) -> tuple[bool, str]:
    """count_identity_holds plus a report quoting both sides.

    The string spells out the enumerated count and the totient sum so a
    failure is self-describing; on agreement it records the common value.
    """
    enumerated = cyclic_subgroups(g).count
    via_totient = alpha_via_totient(g) * g.n
    if Fraction(enumerated) == via_totient:
        return True, f"both routes count {enumerated} cyclic subgroups"
    return False, (
        f"enumeration finds {enumerated} cyclic subgroups, "
        f"totient sum gives {via_totient}"
    )


def average_order(g: FiniteGroup) -> Fraction:
    """Mean element order o(G) = (1/|G|) * sum of o(x)."""
    return Fraction(int(g.ord.sum(dtype=np.int64)), g.n)


def census_matches_orders(g: FiniteGroup) -> bool:
    """Cross-check: each order-d cyclic subgroup owns phi(d) generators, so
    by_order[d] * phi(d) must equal the number of elements of order d."""
    census = cyclic_subgroups(g)
    orders, counts = np.unique(g.ord, return_counts=True)
    have = {int(d): int(c) for d, c in zip(orders, counts)}
    want = {d: k * euler_phi(d) for d, k in census.by_order.items()}
    return have == want


__all__ = [
    "CyclicCensus",
    "cyclic_subgroups",
    "alpha",
    "alpha_via_totient",
    "count_identity_holds",
    "subgroup_count_identity_check",
    "average_order",
    "census_matches_orders",
]

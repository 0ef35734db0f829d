"""Finite groups as dense Cayley tables, plus the structural operations
(center, central quotients, coset partitions, direct products) that the
density checks are built on.

Element ids are 0..n-1 with the identity always at 0.  Tables loaded from
external sources are re-indexed to honor that convention.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    InvalidArgument,
    NoIdentityAtZero,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotCentral,
    NotClosed,
    SizeLimitExceeded,
)

DEFAULT_SIZE_CAP = 4096
SIZE_CAP_ENV = "CYCLIC_DENSITY_MAX_ORDER"

# Element budget per temporary in the blocked associativity check (~32 MB).
_ASSOC_BLOCK_ELEMENTS = 1 << 23
_ASSOC_SAMPLE_TRIPLES = 200_000


def size_cap() -> int:
    """Effective size cap: the env override or the 4096 default."""
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidArgument(f"{SIZE_CAP_ENV} must be an integer, got {raw!r}")
    if cap < 1:
        raise InvalidArgument(f"{SIZE_CAP_ENV} must be >= 1, got {cap}")
    return cap


def _effective_cap(max_size: Optional[int]) -> int:
    if max_size is None:
        return size_cap()
    if max_size < 1:
        raise InvalidArgument(f"max_size must be >= 1, got {max_size}")
    return max_size


def _check_cap(n: int, max_size: Optional[int], what: str) -> None:
    cap = _effective_cap(max_size)
    if n > cap:
        raise SizeLimitExceeded(f"{what} has order {n}, over the cap {cap}")


class FiniteGroup:
    """Immutable finite group on ids 0..n-1, identity at 0.

    Construct via validate_table or the catalog builders; the constructor
    assumes its arguments are consistent and is not part of the public API.
    """

    __slots__ = ("n", "table", "inv", "ord", "label", "_center", "_census")

    def __init__(self, table: np.ndarray, inv: np.ndarray, ord_: np.ndarray, label: str):
        self.n = int(table.shape[0])
        self.table = table
        self.inv = inv
        self.ord = ord_
        self.label = label
        for arr in (table, inv, ord_):
            arr.setflags(write=False)
        self._center: Optional[Subgroup] = None
        self._census = None  # filled lazily by density.cyclic_subgroups

    def compose(self, a: int, b: int) -> int:
        if not (0 <= a < self.n and 0 <= b < self.n):
            raise InvalidArgument(f"element ids must lie in [0, {self.n}), got ({a}, {b})")
        return int(self.table[a, b])

    def element_order(self, a: int) -> int:
        if not (0 <= a < self.n):
            raise InvalidArgument(f"element id must lie in [0, {self.n}), got {a}")
        return int(self.ord[a])

    def inverse(self, a: int) -> int:
        if not (0 <= a < self.n):
            raise InvalidArgument(f"element id must lie in [0, {self.n}), got {a}")
        return int(self.inv[a])

    def elements(self) -> range:
        return range(self.n)

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, n={self.n})"


class Subgroup:
    """Sorted subset of a parent group, verified closed under product and inverse."""

    __slots__ = ("parent", "members", "bitmap")

    def __init__(self, parent: FiniteGroup, members: Iterable[int]):
        arr = np.unique(np.asarray(list(members), dtype=np.int32))
        if arr.size == 0 or arr[0] != 0:
            raise NotASubgroup("a subgroup must contain the identity 0")
        if arr[-1] >= parent.n or arr[0] < 0:
            raise NotASubgroup(f"member {int(arr[-1])} outside parent of order {parent.n}")
        bitmap = np.zeros(parent.n, dtype=bool)
        bitmap[arr] = True
        products = parent.table[np.ix_(arr, arr)]
        closed = bitmap[products]
        if not closed.all():
            i, j = np.argwhere(~closed)[0]
            a, b = int(arr[i]), int(arr[j])
            raise NotASubgroup(
                f"set is not closed: {a}*{b} = {int(parent.table[a, b])} is outside it",
                witness=(a, b),
            )
        # Closure of a finite set forces inverses, but check anyway: cheap.
        if not bitmap[parent.inv[arr]].all():
            a = int(arr[~bitmap[parent.inv[arr]]][0])
            raise NotASubgroup(f"inverse of {a} is outside the set", witness=(a, a))
        assert parent.n % arr.size == 0, "subgroup order must divide the group order"
        self.parent = parent
        self.members = arr
        self.bitmap = bitmap
        arr.setflags(write=False)
        bitmap.setflags(write=False)

    def __len__(self) -> int:
        return int(self.members.size)

    def __contains__(self, a: int) -> bool:
        return 0 <= a < self.parent.n and bool(self.bitmap[a])

    def as_group(self, label: Optional[str] = None) -> FiniteGroup:
        """Standalone group on re-indexed members (identity stays at 0)."""
        pos = np.full(self.parent.n, -1, dtype=np.int32)
        pos[self.members] = np.arange(len(self), dtype=np.int32)
        table = pos[self.parent.table[np.ix_(self.members, self.members)]]
        return _build(table, label or f"subgroup of {self.parent.label}")

    def __repr__(self) -> str:
        return f"Subgroup(order={len(self)} of {self.parent.label!r})"


@dataclass(frozen=True)
class MinimalRep:
    """Distinguished representative of one coset: minimal order k, smallest id y."""

    coset_index: int
    y: int
    k: int


@dataclass(frozen=True)
class CosetPartition:
    """Cosets of a central subgroup, ordered by smallest member; index 0 is the kernel."""

    parent: FiniteGroup
    kernel: Subgroup
    cosets: tuple[tuple[int, ...], ...]
    reps: tuple[MinimalRep, ...]

    @property
    def m(self) -> int:
        return len(self.cosets)


def _as_table(raw) -> np.ndarray:
    try:
        arr = np.asarray(raw, dtype=np.int64)
    except (ValueError, TypeError):
        raise NotClosed("table must be a square matrix of integers")
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NotClosed(f"table must be a nonempty square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        a, b = np.argwhere((arr < 0) | (arr >= n))[0]
        raise NotClosed(f"entry table[{a}][{b}] = {int(arr[a, b])} is outside [0, {n})")
    return np.ascontiguousarray(arr, dtype=np.int32)


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    ar = np.arange(n, dtype=np.int32)
    two_sided = (table == ar[None, :]).all(axis=1) & (table == ar[:, None]).all(axis=0)
    hits = np.nonzero(two_sided)[0]
    if hits.size == 0:
        raise NoIdentityAtZero("no element acts as a two-sided identity")
    return int(hits[0])


def _swap_to_zero(table: np.ndarray, e: int) -> tuple[np.ndarray, np.ndarray]:
    """Relabel so element e becomes 0; returns (new table, old->new map)."""
    n = table.shape[0]
    sigma = np.arange(n, dtype=np.int32)
    sigma[e], sigma[0] = 0, e
    return np.ascontiguousarray(sigma[table][np.ix_(sigma, sigma)]), sigma


def _compute_inverses(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    eq0 = table == 0
    both = eq0 & eq0.T
    inv = np.argmax(both, axis=1).astype(np.int32)
    ok = both[np.arange(n), inv]
    if not ok.all():
        a = int(np.nonzero(~ok)[0][0])
        raise NoInverse(f"element {a} has no two-sided inverse", element=a)
    return inv


def _check_associativity_full(table: np.ndarray) -> None:
    n = table.shape[0]
    block = max(1, _ASSOC_BLOCK_ELEMENTS // (n * n))
    for start in range(0, n, block):
        rows = table[start : start + block]
        lhs = table[rows]  # lhs[i,b,c] = (a_i * b) * c
        rhs = rows[:, table]  # rhs[i,b,c] = a_i * (b * c)
        if not np.array_equal(lhs, rhs):
            i, b, c = (int(v) for v in np.argwhere(lhs != rhs)[0])
            a = start + i
            raise NotAssociative(
                f"({a}*{b})*{c} = {int(lhs[i, b, c])} but {a}*({b}*{c}) = {int(rhs[i, b, c])}",
                triple=(a, b, c),
            )


def _check_associativity_sampled(table: np.ndarray, seed: int) -> None:
    n = table.shape[0]
    rng = np.random.default_rng(seed)
    k = min(_ASSOC_SAMPLE_TRIPLES, n * n * n)
    a, b, c = rng.integers(0, n, size=(3, k))
    lhs = table[table[a, b], c]
    rhs = table[a, table[b, c]]
    bad = np.nonzero(lhs != rhs)[0]
    if bad.size:
        i = int(bad[0])
        raise NotAssociative(
            f"({int(a[i])}*{int(b[i])})*{int(c[i])} = {int(lhs[i])} "
            f"but {int(a[i])}*({int(b[i])}*{int(c[i])}) = {int(rhs[i])}",
            triple=(int(a[i]), int(b[i]), int(c[i])),
        )


def _element_orders(table: np.ndarray) -> np.ndarray:
    """Orders of all elements at once via repeated right-multiplication."""
    n = table.shape[0]
    ar = np.arange(n, dtype=np.int32)
    ord_ = np.zeros(n, dtype=np.int32)
    ord_[0] = 1
    cur = ar.copy()
    k = 1
    while (ord_ == 0).any():
        if k > n:
            a = int(np.nonzero(ord_ == 0)[0][0])
            raise NotClosed(f"powers of element {a} never reach the identity")
        cur = table[cur, ar]
        k += 1
        newly = (cur == 0) & (ord_ == 0)
        ord_[newly] = k
    return ord_


def _build(table: np.ndarray, label: str) -> FiniteGroup:
    """Internal builder for tables that are associative by construction.

    Still performs the O(n^2) checks (identity at 0, two-sided inverses,
    orders terminate and divide n) so constructor bugs cannot slip through
    silently; the full O(n^3) associativity check is validate_table's job.
    """
    n = table.shape[0]
    ar = np.arange(n, dtype=np.int32)
    if not ((table[0] == ar).all() and (table[:, 0] == ar).all()):
        raise NoIdentityAtZero(f"constructed table for {label!r} lacks identity at 0")
    inv = _compute_inverses(table)
    ord_ = _element_orders(table)
    if (n % ord_ != 0).any():
        a = int(np.nonzero(n % ord_)[0][0])
        raise NotClosed(f"order {int(ord_[a])} of element {a} does not divide {n}")
    return FiniteGroup(np.ascontiguousarray(table), inv, ord_, label)


def validate_table(
    raw,
    label: str = "table",
    *,
    assoc: str = "full",
    max_size: Optional[int] = None,
) -> FiniteGroup:
    """Validate a raw Cayley table and wrap it as a group.

    assoc is "full" (exhaustive O(n^3)), "sampled" (deterministic random
    triples, for tables the caller already trusts), or "skip".
    """
    group, _ = validate_table_with_report(raw, label, assoc=assoc, max_size=max_size)
    return group


def validate_table_with_report(
    raw,
    label: str = "table",
    *,
    assoc: str = "full",
    max_size: Optional[int] = None,
) -> tuple[FiniteGroup, list[int]]:
    """Like validate_table but also returns the old->new re-index map
    applied to move the identity to id 0 (the identity map when it was
    already there)."""
    if assoc not in ("full", "sampled", "skip"):
        raise InvalidArgument(f"assoc must be full, sampled or skip, got {assoc!r}")
    table = _as_table(raw)
    n = table.shape[0]
    _check_cap(n, max_size, f"table {label!r}")
    e = _find_identity(table)
    sigma = np.arange(n, dtype=np.int32)
    if e != 0:
        table, sigma = _swap_to_zero(table, e)
    if assoc == "full":
        _check_associativity_full(table)
    elif assoc == "sampled":
        _check_associativity_sampled(table, seed=0xC0FFEE ^ n)
    group = _build(table, label)
    return group, [int(v) for v in sigma]


def center(g: FiniteGroup) -> Subgroup:
    """Subgroup of elements commuting with everything (cached per group)."""
    if g._center is None:
        mask = (g.table == g.table.T).all(axis=1)
        g._center = Subgroup(g, np.nonzero(mask)[0])
    return g._center


def subgroup_from_set(g: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """Wrap a member set as a Subgroup, raising NotASubgroup with a witness."""
    return Subgroup(g, members)


def _require_central(g: FiniteGroup, z: Subgroup) -> None:
    if z.parent is not g:
        raise InvalidArgument("subgroup does not belong to this group")
    rows = g.table[z.members]
    cols = g.table[:, z.members].T
    if not np.array_equal(rows, cols):
        i, b = np.argwhere(rows != cols)[0]
        raise NotCentral(
            f"element {int(z.members[i])} does not commute with {int(b)}"
        )


def coset_partition(g: FiniteGroup, z: Subgroup) -> CosetPartition:
    """Partition of g into cosets of the central subgroup z.

    Cosets are ordered by smallest member, so the kernel (which contains 0)
    comes first.  Each coset carries a minimal representative: the least
    element order k within the coset and the smallest id attaining it.
    """
    _require_central(g, z)
    cmin = g.table[:, z.members].min(axis=1)
    reps_min, coset_of = np.unique(cmin, return_inverse=True)
    m = reps_min.size
    assert m * len(z) == g.n
    order_key = np.lexsort((np.arange(g.n), coset_of))
    grouped = order_key.reshape(m, len(z))
    cosets = tuple(tuple(int(x) for x in row) for row in grouped)
    assert cosets[0] == tuple(int(x) for x in z.members)
    reps = []
    for i, row in enumerate(grouped):
        ords = g.ord[row]
        k = int(ords.min())
        y = int(row[np.nonzero(ords == k)[0][0]])
        reps.append(MinimalRep(coset_index=i, y=y, k=k))
    return CosetPartition(parent=g, kernel=z, cosets=cosets, reps=tuple(reps))


def quotient_by_central(g: FiniteGroup, z: Subgroup, label: Optional[str] = None) -> FiniteGroup:
    """Quotient group G/Z for central Z, on coset ids ordered by smallest member."""
    _require_central(g, z)
    cmin = g.table[:, z.members].min(axis=1)
    reps = np.unique(cmin)
    idx = np.full(g.n, -1, dtype=np.int32)
    idx[reps] = np.arange(reps.size, dtype=np.int32)
    coset_of = idx[cmin]
    qtable = coset_of[g.table[np.ix_(reps, reps)]]
    return _build(qtable, label or f"({g.label})/Z")


def group_exponent(g: FiniteGroup) -> int:
    """Least common multiple of all element orders."""
    return math.lcm(*(int(v) for v in np.unique(g.ord)))


def direct_product(g: FiniteGroup, h: FiniteGroup, *, max_size: Optional[int] = None,
                   label: Optional[str] = None) -> FiniteGroup:
    """Direct product with pairs (a, b) encoded as a * |H| + b."""
    n = g.n * h.n
    _check_cap(n, max_size, f"product of {g.label!r} and {h.label!r}")
    gt = g.table.astype(np.int64)
    table = gt[:, None, :, None] * h.n + h.table[None, :, None, :]
    table = table.reshape(n, n).astype(np.int32)
    return _build(table, label or f"product:({g.label})x({h.label})")


def relabeled_copy(g: FiniteGroup, perm: Sequence[int], label: Optional[str] = None) -> FiniteGroup:
    """Isomorphic copy under a permutation of ids (perm[old] = new)."""
    sigma = np.asarray(perm, dtype=np.int32)
    if sigma.shape != (g.n,) or not np.array_equal(np.sort(sigma), np.arange(g.n)):
        raise InvalidArgument(f"perm must be a permutation of 0..{g.n - 1}")
    inv_sigma = np.empty(g.n, dtype=np.int32)
    inv_sigma[sigma] = np.arange(g.n, dtype=np.int32)
    table = sigma[g.table][np.ix_(inv_sigma, inv_sigma)]
    return validate_table(table, label or f"{g.label} (relabeled)", assoc="skip")


def verify_group_invariants(g: FiniteGroup, *, assoc: str = "full") -> None:
    """Re-derive every structural invariant from the raw table; raises on failure.

    Exhaustive by default: Latin-square rows and columns, identity at 0,
    associativity, two-sided inverses, and an independent per-element order
    recomputation.  Meant for tests and post-import auditing.
    """
    n = g.n
    t = g.table
    ar = np.arange(n, dtype=np.int32)
    if not ((t[0] == ar).all() and (t[:, 0] == ar).all()):
        raise NoIdentityAtZero("identity is not at id 0")
    if not (np.array_equal(np.sort(t, axis=1), np.tile(ar, (n, 1)))
            and np.array_equal(np.sort(t, axis=0), np.tile(ar[:, None], (1, n)))):
        raise NotClosed("some row or column is not a permutation")
    if assoc == "full":
        _check_associativity_full(t)
    elif assoc == "sampled":
        _check_associativity_sampled(t, seed=0xC0FFEE ^ n)
    else:
        raise InvalidArgument(f"assoc must be full or sampled, got {assoc!r}")
    if not ((t[ar, g.inv] == 0).all() and (t[g.inv, ar] == 0).all()):
        raise NoInverse("stored inverses are wrong")
    for a in range(n):
        # scalar power walk, independent of the vectorized computation
        cur, k = a, 1
        while cur != 0:
            cur = int(t[cur, a])
            k += 1
            if k > n:
                raise NotClosed(f"element {a} has unbounded order")
        if int(g.ord[a]) != k or n % k:
            raise NotClosed(
                f"stored order {int(g.ord[a])} of element {a} disagrees with recomputed {k}"
            )


__all__ = [
    "DEFAULT_SIZE_CAP",
    "SIZE_CAP_ENV",
    "size_cap",
    "FiniteGroup",
    "Subgroup",
    "MinimalRep",
    "CosetPartition",
    "validate_table",
    "validate_table_with_report",
    "center",
    "subgroup_from_set",
    "coset_partition",
    "quotient_by_central",
    "group_exponent",
    "direct_product",
    "relabeled_copy",
    "verify_group_invariants",
]

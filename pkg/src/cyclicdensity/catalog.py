"""Catalog of built-in group families, the group-spec grammar, and
Cayley-table file import.

Spec strings follow
    cyclic:N | abelian:N1,N2,... | dihedral:N | quaternion:N | symmetric:K
    | extraspecial:ORDER:+|- | almost-extraspecial:ORDER | heisenberg:P
    | product:(SPEC)x(SPEC) | table:PATH
where N counts total elements in every family (dihedral:8 is the 8-element
dihedral group, quaternion:8 the quaternions).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .arith import is_power_of, is_prime
from .errors import (
    BadParameter,
    InvalidArgument,
    NotCentralInvolution,
    ParseError,
    SpecSyntaxError,
    UnknownFamily,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    _build,
    _check_cap,
    center,
    direct_product,
    quotient_by_central,
    validate_table_with_report,
)

FAMILY_NAMES = (
    "cyclic",
    "abelian",
    "dihedral",
    "quaternion",
    "symmetric",
    "extraspecial",
    "almost-extraspecial",
    "heisenberg",
    "product",
    "table",
)

_MAX_SYMMETRIC_DEGREE = 7  # 7! = 5040 is the largest table worth materializing


def make_cyclic(n: int, *, max_size: Optional[int] = None) -> FiniteGroup:
    """Cyclic group of order n; id i is the i-th power of the generator."""
    if n < 1:
        raise InvalidArgument(f"cyclic order must be >= 1, got {n}")
    _check_cap(n, max_size, f"cyclic:{n}")
    ar = np.arange(n, dtype=np.int32)
    return _build((ar[:, None] + ar[None, :]) % n, f"cyclic:{n}")


def _product_table(t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
    n2 = t2.shape[0]
    n = t1.shape[0] * n2
    out = t1.astype(np.int64)[:, None, :, None] * n2 + t2[None, :, None, :]
    return out.reshape(n, n).astype(np.int32)


def make_abelian(orders: tuple[int, ...], *, max_size: Optional[int] = None) -> FiniteGroup:
    """Direct sum of cyclic groups Z_n1 + Z_n2 + ... in the given order."""
    if not orders:
        raise InvalidArgument("abelian requires at least one cyclic order")
    if any(n < 1 for n in orders):
        raise InvalidArgument(f"cyclic orders must be >= 1, got {orders}")
    total = math.prod(orders)
    _check_cap(total, max_size, f"abelian:{','.join(map(str, orders))}")
    table = np.zeros((1, 1), dtype=np.int32)
    for n in orders:
        ar = np.arange(n, dtype=np.int32)
        table = _product_table(table, (ar[:, None] + ar[None, :]) % n)
    return _build(table, f"abelian:{','.join(map(str, orders))}")


def make_dihedral(order: int, *, max_size: Optional[int] = None) -> FiniteGroup:
    """Dihedral group with `order` elements: rotations at 0..n-1, reflections at n..2n-1."""
    if order < 4 or order % 2:
        raise InvalidArgument(f"dihedral order must be an even integer >= 4, got {order}")
    _check_cap(order, max_size, f"dihedral:{order}")
    n = order // 2
    i = np.arange(n, dtype=np.int32)
    a, b = i[:, None], i[None, :]
    t = np.empty((order, order), dtype=np.int32)
    t[:n, :n] = (a + b) % n          # r^a r^b
    t[:n, n:] = n + (b - a) % n      # r^a (s r^b) = s r^(b-a)
    t[n:, :n] = n + (a + b) % n      # (s r^a) r^b = s r^(a+b)
    t[n:, n:] = (b - a) % n          # (s r^a)(s r^b) = r^(b-a)
    return _build(t, f"dihedral:{order}")


def make_quaternion(order: int, *, max_size: Optional[int] = None) -> FiniteGroup:
    """Generalized quaternion (dicyclic) group of the given order (multiple of 4, >= 8).

    Presentation <a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1> with
    order = 4n; powers a^i at ids 0..2n-1 and a^i b at 2n..4n-1.
    """
    if order < 8 or order % 4:
        raise InvalidArgument(f"quaternion order must be a multiple of 4, >= 8, got {order}")
    _check_cap(order, max_size, f"quaternion:{order}")
    n = order // 4
    two_n = 2 * n
    i = np.arange(two_n, dtype=np.int32)
    a, b = i[:, None], i[None, :]
    t = np.empty((order, order), dtype=np.int32)
    t[:two_n, :two_n] = (a + b) % two_n                # a^i a^j
    t[:two_n, two_n:] = two_n + (a + b) % two_n        # a^i (a^j b) = a^(i+j) b
    t[two_n:, :two_n] = two_n + (a - b) % two_n        # (a^i b) a^j = a^(i-j) b
    t[two_n:, two_n:] = (a - b + n) % two_n            # (a^i b)(a^j b) = a^(i-j+n)
    return _build(t, f"quaternion:{order}")


# long-form name for the same constructor
make_generalized_quaternion = make_quaternion


def make_symmetric(degree: int, *, max_size: Optional[int] = None) -> FiniteGroup:
    """Symmetric group S_degree; ids enumerate permutations in lexicographic order."""
    if not 1 <= degree <= _MAX_SYMMETRIC_DEGREE:
        raise InvalidArgument(
            f"symmetric degree must be in 1..{_MAX_SYMMETRIC_DEGREE}, got {degree}"
        )
    n = math.factorial(degree)
    _check_cap(n, max_size, f"symmetric:{degree}")
    perms = np.array(list(itertools.permutations(range(degree))), dtype=np.int64)
    fact = [math.factorial(degree - 1 - j) for j in range(degree)]
    table = np.empty((n, n), dtype=np.int32)
    block = max(1, (1 << 22) // max(1, n * degree))
    for s in range(0, n, block):
        rows = perms[s : s + block]
        comp = rows[:, perms]  # comp[i, q, x] = rows[i][perms[q][x]], i.e. p then q applied inside-out
        rank = np.zeros(comp.shape[:2], dtype=np.int64)
        for j in range(degree):
            smaller_later = (comp[:, :, j + 1 :] < comp[:, :, j : j + 1]).sum(axis=2)
            rank += smaller_later * fact[j]
        table[s : s + block] = rank
    return _build(table, f"symmetric:{degree}")


def make_heisenberg(p: int, *, max_size: Optional[int] = None) -> FiniteGroup:
    """Heisenberg group of order p^3 for an odd prime p: upper unitriangular
    3x3 matrices over Z_p, encoded as (a, b, c) -> c*p^2 + a*p + b."""
    if p == 2 or not is_prime(p):
        raise InvalidArgument(f"heisenberg parameter must be an odd prime, got {p}")
    n = p ** 3
    _check_cap(n, max_size, f"heisenberg:{p}")
    idx = np.arange(n, dtype=np.int64)
    c, rem = np.divmod(idx, p * p)
    a, b = np.divmod(rem, p)
    a1, b1, c1 = a[:, None], b[:, None], c[:, None]
    a2, b2, c2 = a[None, :], b[None, :], c[None, :]
    # (a,b,c) * (a',b',c') = (a+a', b+b', c+c'+a*b')
    t = ((c1 + c2 + a1 * b2) % p) * p * p + ((a1 + a2) % p) * p + (b1 + b2) % p
    return _build(t.astype(np.int32), f"heisenberg:{p}")


def _unique_central_involution(g: FiniteGroup) -> int:
    z = center(g)
    invs = [int(x) for x in z.members if g.ord[x] == 2]
    if len(invs) != 1:
        raise NotCentralInvolution(
            f"{g.label!r} has {len(invs)} central involutions, need exactly one"
        )
    return invs[0]


def central_product_mod_involution(
    g: FiniteGroup,
    h: FiniteGroup,
    zg: int,
    zh: int,
    *,
    label: Optional[str] = None,
    max_size: Optional[int] = None,
) -> FiniteGroup:
    """Central product G o H: direct product modulo the diagonal <(zg, zh)>
    where zg, zh are central involutions of their factors."""
    for grp, z, side in ((g, zg, "left"), (h, zh, "right")):
        if not 0 <= z < grp.n:
            raise NotCentralInvolution(f"{side} element {z} outside group of order {grp.n}")
        if int(grp.ord[z]) != 2:
            raise NotCentralInvolution(
                f"{side} element {z} has order {int(grp.ord[z])}, not 2"
            )
        if not center(grp).bitmap[z]:
            raise NotCentralInvolution(f"{side} element {z} is not central")
    _check_cap(g.n * h.n // 2, max_size, f"central product of {g.label!r} and {h.label!r}")
    prod = direct_product(g, h, max_size=g.n * h.n)
    diag = Subgroup(prod, [0, zg * h.n + zh])
    out = quotient_by_central(prod, diag, label=label or f"({g.label})o({h.label})")
    return out


def _extraspecial_shape_ok(order: int) -> bool:
    # 2^(1+2m) with m >= 1: a power of two, at least 8, odd exponent
    return order >= 8 and is_power_of(order, 2) and (order.bit_length() - 1) % 2 == 1


def _almost_extraspecial_shape_ok(order: int) -> bool:
    # 2^(2m+2) with m >= 1: a power of two, at least 16, even exponent
    return order >= 16 and is_power_of(order, 2) and (order.bit_length() - 1) % 2 == 0


def make_extraspecial(order: int, sign: str, *, max_size: Optional[int] = None) -> FiniteGroup:
    """Extraspecial 2-group of the given order (2^(1+2m)) and type.

    Plus type is the iterated central product of dihedral:8 factors; minus
    type swaps exactly one factor for quaternion:8.
    """
    if sign not in ("+", "-"):
        raise InvalidArgument(f"extraspecial type must be '+' or '-', got {sign!r}")
    if not _extraspecial_shape_ok(order):
        raise InvalidArgument(
            f"extraspecial order must be 2^(1+2m) with m >= 1, got {order}"
        )
    _check_cap(order, max_size, f"extraspecial:{order}:{sign}")
    m = (order.bit_length() - 2) // 2
    g = make_quaternion(8, max_size=8) if sign == "-" else make_dihedral(8, max_size=8)
    for _ in range(m - 1):
        d8 = make_dihedral(8, max_size=8)
        g = central_product_mod_involution(
            g, d8, _unique_central_involution(g), _unique_central_involution(d8),
            max_size=order,
        )
    # same group object, catalog label; arrays are immutable so sharing is safe
    return FiniteGroup(g.table, g.inv, g.ord, f"extraspecial:{order}:{sign}")


def make_almost_extraspecial(order: int, *, max_size: Optional[int] = None) -> FiniteGroup:
    """Central product of an extraspecial 2-group with cyclic:4, order 2^(2m+2)."""
    if not _almost_extraspecial_shape_ok(order):
        raise InvalidArgument(
            f"almost-extraspecial order must be 2^(2m+2) with m >= 1, got {order}"
        )
    _check_cap(order, max_size, f"almost-extraspecial:{order}")
    e = make_extraspecial(order // 2, "+", max_size=order // 2)
    z4 = make_cyclic(4, max_size=4)
    return central_product_mod_involution(
        e, z4, _unique_central_involution(e), 2,
        label=f"almost-extraspecial:{order}", max_size=order,
    )


def load_table(path: Union[str, Path], *, assoc: str = "full",
               max_size: Optional[int] = None) -> FiniteGroup:
    group, _ = load_table_with_report(path, assoc=assoc, max_size=max_size)
    return group


def load_table_with_report(
    path: Union[str, Path], *, assoc: str = "full", max_size: Optional[int] = None
) -> tuple[FiniteGroup, list[int]]:
    """Read a Cayley-table text file and validate it.

    Format: first non-blank line is n; the next n non-blank lines hold n
    space-separated element ids each.  The identity may sit anywhere; the
    returned old->new map records the re-indexing that moved it to id 0.
    """
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {p}: {exc}") from exc
    rows: list[list[int]] = []
    n: Optional[int] = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise ParseError(
                    f"line {lineno}: expected the group order alone, got {len(tokens)} tokens",
                    line=lineno, column=1,
                )
            try:
                n = int(tokens[0])
            except ValueError:
                raise ParseError(f"line {lineno}: order {tokens[0]!r} is not an integer",
                                 line=lineno, column=1)
            if n < 1:
                raise ParseError(f"line {lineno}: order must be >= 1, got {n}",
                                 line=lineno, column=1)
            continue
        if len(rows) == n:
            raise ParseError(f"line {lineno}: extra content after {n} table rows",
                             line=lineno, column=1)
        row = []
        for col, tok in enumerate(tokens, start=1):
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"line {lineno}: token {tok!r} is not an integer",
                                 line=lineno, column=col)
            if not 0 <= v < n:
                raise ParseError(f"line {lineno}: entry {v} outside [0, {n})",
                                 line=lineno, column=col)
            row.append(v)
        if len(row) != n:
            raise ParseError(f"line {lineno}: expected {n} entries, got {len(row)}",
                             line=lineno, column=1)
        rows.append(row)
    if n is None:
        raise ParseError(f"{p}: empty file")
    if len(rows) != n:
        raise ParseError(f"{p}: expected {n} table rows, found {len(rows)}")
    return validate_table_with_report(rows, f"table:{p}", assoc=assoc, max_size=max_size)


ParamsType = Union[tuple[int, ...], tuple[int, str], tuple[str], tuple["GroupSpec", "GroupSpec"]]


@dataclass(frozen=True)
class GroupSpec:
    """Parsed group-spec string; canonical() round-trips through the grammar."""

    family: str
    params: ParamsType

    def canonical(self) -> str:
        f, p = self.family, self.params
        if f == "product":
            left, right = p
            return f"product:({left.canonical()})x({right.canonical()})"
        if f == "table":
            return f"table:{p[0]}"
        if f == "extraspecial":
            return f"extraspecial:{p[0]}:{p[1]}"
        return f"{f}:{','.join(str(v) for v in p)}"


def _parse_int(text: str, pos: int, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise SpecSyntaxError(f"expected an integer {what}, got {text!r}", position=pos)


def _split_product_body(body: str, pos: int) -> tuple[str, str]:
    # body looks like (SPEC)x(SPEC); parentheses may nest for inner products
    if not body.startswith("("):
        raise SpecSyntaxError("product spec must start with '('", position=pos)
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                rest = body[i + 1 :]
                if not rest.startswith("x(") or not rest.endswith(")"):
                    raise SpecSyntaxError(
                        "product spec must look like (SPEC)x(SPEC)", position=pos + i + 1
                    )
                return body[1:i], rest[2:-1]
            if depth < 0:
                break
    raise SpecSyntaxError("unbalanced parentheses in product spec", position=pos)


def parse_group_spec(text: str, _pos: int = 0) -> GroupSpec:
    """Parse a spec string into a GroupSpec, validating parameter shapes."""
    if not isinstance(text, str) or not text.strip():
        raise SpecSyntaxError("empty group spec", position=_pos)
    s = text.strip()
    head, sep, body = s.partition(":")
    if not sep:
        raise SpecSyntaxError(f"missing ':' after family name in {s!r}", position=_pos)
    family = head.strip()
    if family not in FAMILY_NAMES:
        raise UnknownFamily(f"unknown group family {family!r}")
    body_pos = _pos + len(head) + 1
    if family == "table":
        if not body:
            raise SpecSyntaxError("table spec needs a file path", position=body_pos)
        return GroupSpec("table", (body,))
    if family == "product":
        left, right = _split_product_body(body, body_pos)
        return GroupSpec(
            "product",
            (parse_group_spec(left, body_pos + 1),
             parse_group_spec(right, body_pos + len(left) + 4)),
        )
    if family == "extraspecial":
        order_text, sep2, sign = body.partition(":")
        if not sep2 or sign not in ("+", "-"):
            raise BadParameter(f"extraspecial spec must end with ':+' or ':-', got {s!r}")
        order = _parse_int(order_text, body_pos, "order")
        if not _extraspecial_shape_ok(order):
            raise BadParameter(
                f"extraspecial order must be 2^(1+2m) with m >= 1, got {order}"
            )
        return GroupSpec("extraspecial", (order, sign))
    if family == "abelian":
        parts = body.split(",")
        if any(not p.strip() for p in parts):
            raise SpecSyntaxError(f"malformed integer list in {s!r}", position=body_pos)
        orders = tuple(_parse_int(p.strip(), body_pos, "cyclic order") for p in parts)
        if any(v < 1 for v in orders):
            raise BadParameter(f"abelian cyclic orders must be >= 1, got {orders}")
        return GroupSpec("abelian", orders)
    # remaining families take a single integer
    value = _parse_int(body, body_pos, "parameter")
    if family == "cyclic" and value < 1:
        raise BadParameter(f"cyclic order must be >= 1, got {value}")
    if family == "dihedral" and (value < 4 or value % 2):
        raise BadParameter(f"dihedral order must be an even integer >= 4, got {value}")
    if family == "quaternion" and (value < 8 or value % 4):
        raise BadParameter(f"quaternion order must be a multiple of 4, >= 8, got {value}")
    if family == "symmetric" and not 1 <= value <= _MAX_SYMMETRIC_DEGREE:
        raise BadParameter(
            f"symmetric degree must be in 1..{_MAX_SYMMETRIC_DEGREE}, got {value}"
        )
    if family == "almost-extraspecial" and not _almost_extraspecial_shape_ok(value):
        raise BadParameter(
            f"almost-extraspecial order must be 2^(2m+2) with m >= 1, got {value}"
        )
    if family == "heisenberg" and (value == 2 or not is_prime(value)):
        raise BadParameter(f"heisenberg parameter must be an odd prime, got {value}")
    return GroupSpec(family, (value,))


def build_group(spec: Union[str, GroupSpec], *, max_size: Optional[int] = None,
                table_assoc: str = "full") -> FiniteGroup:
    """Build the group a spec describes; table_assoc controls import validation."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    f, p = spec.family, spec.params
    if f == "cyclic":
        return make_cyclic(p[0], max_size=max_size)
    if f == "abelian":
        return make_abelian(p, max_size=max_size)
    if f == "dihedral":
        return make_dihedral(p[0], max_size=max_size)
    if f == "quaternion":
        return make_quaternion(p[0], max_size=max_size)
    if f == "symmetric":
        return make_symmetric(p[0], max_size=max_size)
    if f == "extraspecial":
        return make_extraspecial(p[0], p[1], max_size=max_size)
    if f == "almost-extraspecial":
        return make_almost_extraspecial(p[0], max_size=max_size)
    if f == "heisenberg":
        return make_heisenberg(p[0], max_size=max_size)
    if f == "product":
        left = build_group(p[0], max_size=max_size, table_assoc=table_assoc)
        right = build_group(p[1], max_size=max_size, table_assoc=table_assoc)
        return direct_product(left, right, max_size=max_size,
                              label=spec.canonical())
    if f == "table":
        return load_table(p[0], assoc=table_assoc, max_size=max_size)
    raise UnknownFamily(f"unknown group family {f!r}")


__all__ = [
    "FAMILY_NAMES",
    "GroupSpec",
    "parse_group_spec",
    "build_group",
    "make_cyclic",
    "make_abelian",
    "make_dihedral",
    "make_quaternion",
    "make_generalized_quaternion",
    "make_symmetric",
    "make_heisenberg",
    "make_extraspecial",
    "make_almost_extraspecial",
    "central_product_mod_involution",
    "load_table",
    "load_table_with_report",
]

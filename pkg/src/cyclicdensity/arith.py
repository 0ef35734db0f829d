"""Number-theory helpers: trial-division factoring, Euler's totient."""

from __future__ import annotations

from .errors import InvalidArgument


def factorize(k: int) -> dict[int, int]:
    """Prime factorization of k >= 1 as {prime: exponent}."""
    if k < 1:
        raise InvalidArgument(f"factorize requires k >= 1, got {k}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= k:
        while k % d == 0:
            out[d] = out.get(d, 0) + 1
            k //= d
        d += 1 if d == 2 else 2
    if k > 1:
        out[k] = out.get(k, 0) + 1
    return out


def euler_phi(k: int) -> int:
    """Count of integers in [1, k] coprime to k."""
    if k < 1:
        raise InvalidArgument(f"euler_phi requires k >= 1, got {k}")
    result = k
    for p in factorize(k):
        result -= result // p
    return result


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def is_power_of(k: int, base: int) -> bool:
    """True when k is base**e for some e >= 0."""
    if k < 1:
        return False
    while k % base == 0:
        k //= base
    return k == 1


__all__ = ["factorize", "euler_phi", "is_prime", "is_power_of"]

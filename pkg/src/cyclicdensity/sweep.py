"""Exhaustive verification sweeps over the built-in catalog.

A sweep enumerates every catalog group up to a size bound (all cyclic and
abelian isomorphism types, dihedral, generalized quaternion, symmetric,
extraspecial of both types, almost extraspecial, Heisenberg), runs the
full checker on each, and aggregates counterexamples.  Results are sorted
by label so output is deterministic regardless of parallelism.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .arith import is_prime
from .catalog import build_group
from .errors import InvalidArgument, SizeLimitExceeded, UnknownFamily
from .groups import size_cap
from .verify import AlphaReport, full_report

SWEEP_FAMILIES = (
    "cyclic",
    "abelian",
    "dihedral",
    "quaternion",
    "symmetric",
    "extraspecial",
    "almost-extraspecial",
    "heisenberg",
)


@dataclass(frozen=True)
class SweepConfig:
    """What to sweep: bound, families, extra table files, execution knobs."""

    max_order: int = 256
    families: tuple[str, ...] = SWEEP_FAMILIES
    include_tables: tuple[str, ...] = ()
    fail_fast: bool = False
    parallelism: int = 1
    size_override: bool = False

    def __post_init__(self):
        if self.max_order < 1:
            raise InvalidArgument(f"max_order must be >= 1, got {self.max_order}")
        if self.parallelism < 1:
            raise InvalidArgument(f"parallelism must be >= 1, got {self.parallelism}")
        if not self.families:
            raise InvalidArgument("families must be nonempty")
        bad = sorted(set(self.families) - set(SWEEP_FAMILIES))
        if bad:
            raise UnknownFamily(f"cannot sweep families: {', '.join(bad)}")


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    reports: tuple[AlphaReport, ...]
    counterexamples: tuple[str, ...]
    equality_labels: tuple[str, ...]


def _prime_powers(limit: int) -> list[int]:
    out = []
    for p in range(2, limit + 1):
        if is_prime(p):
            q = p
            while q <= limit:
                out.append(q)
                q *= p
    return sorted(out)


def _abelian_param_lists(limit: int) -> list[tuple[int, ...]]:
    """Non-decreasing multisets of prime powers with product <= limit: one
    per isomorphism type of nontrivial abelian group."""
    pps = _prime_powers(limit)
    out: list[tuple[int, ...]] = []

    def rec(start: int, budget: int, acc: list[int]) -> None:
        for i in range(start, len(pps)):
            q = pps[i]
            if q > budget:
                break
            acc.append(q)
            out.append(tuple(acc))
            rec(i, budget // q, acc)
            acc.pop()

    rec(0, limit, [])
    return out


def corpus_specs(config: SweepConfig) -> tuple[str, ...]:
    """Sorted spec strings for every group the sweep will check."""
    lim = config.max_order
    fams = set(config.families)
    specs: list[str] = []
    if "cyclic" in fams:
        specs += [f"cyclic:{n}" for n in range(1, lim + 1)]
    if "abelian" in fams:
        specs += [
            f"abelian:{','.join(map(str, t))}" for t in _abelian_param_lists(lim)
        ]
    if "dihedral" in fams:
        specs += [f"dihedral:{n}" for n in range(4, lim + 1, 2)]
    if "quaternion" in fams:
        specs += [f"quaternion:{n}" for n in range(8, lim + 1, 4)]
    if "symmetric" in fams:
        k = 3  # degrees 1 and 2 duplicate cyclic:1 and cyclic:2
        while k <= 7 and math.factorial(k) <= lim:
            specs.append(f"symmetric:{k}")
            k += 1
    if "extraspecial" in fams:
        order = 8
        while order <= lim:
            specs += [f"extraspecial:{order}:+", f"extraspecial:{order}:-"]
            order *= 4
    if "almost-extraspecial" in fams:
        order = 16
        while order <= lim:
            specs.append(f"almost-extraspecial:{order}")
            order *= 4
    if "heisenberg" in fams:
        p = 3
        while p ** 3 <= lim:
            if is_prime(p):
                specs.append(f"heisenberg:{p}")
            p += 2
    specs += [f"table:{path}" for path in config.include_tables]
    return tuple(sorted(specs))


def _sweep_worker(args: tuple[str, Optional[int]]) -> AlphaReport:
    spec, max_size = args
    return full_report(build_group(spec, max_size=max_size))


def run_sweep(config: SweepConfig) -> SweepResult:
    """Check every corpus group; reports come back sorted by label."""
    cap = size_cap()
    if config.max_order > cap and not config.size_override:
        raise SizeLimitExceeded(
            f"max_order {config.max_order} exceeds the size cap {cap}; "
            f"pass size_override to permit it"
        )
    max_size = max(config.max_order, cap) if config.size_override else None
    specs = corpus_specs(config)
    jobs = [(s, max_size) for s in specs]
    reports: list[AlphaReport] = []
    if config.parallelism > 1:
        chunk = max(1, len(jobs) // (config.parallelism * 8))
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            for report in pool.map(_sweep_worker, jobs, chunksize=chunk):
                reports.append(report)
                if config.fail_fast and report.findings:
                    break
    else:
        for job in jobs:
            report = _sweep_worker(job)
            reports.append(report)
            if config.fail_fast and report.findings:
                break
    reports.sort(key=lambda r: r.label)
    return SweepResult(
        config=config,
        reports=tuple(reports),
        counterexamples=tuple(r.label for r in reports if r.findings),
        equality_labels=tuple(r.label for r in reports if r.equality),
    )


__all__ = [
    "SWEEP_FAMILIES",
    "SweepConfig",
    "SweepResult",
    "corpus_specs",
    "run_sweep",
]

"""Two-level parallel matching and the sequential/parallel cross-check.

:func:`to_sm_par` is the production path: slice the input, scan each
slice on a worker pool, then tree-reduce the matchers.  Its contract is
exact equality with the sequential :func:`~parmatch.matcher.to_sm` for
every plan, and :func:`verify_equivalence` runs that comparison as a
differential test with timings.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import Executor
from dataclasses import dataclass
from functools import partial

from .bytetext import ByteText
from .matcher import StringMatcher, matcher_ops, to_sm
from .monoid import pmap, pmconcat


@dataclass(frozen=True, slots=True)
class ChunkPlan:
    """Knobs of the parallel pipeline.

    ``chunk_size`` is the byte length of input slices handed to workers;
    ``branch`` is the fan-in of the reduction tree.
    """

    branch: int
    chunk_size: int

    def __post_init__(self) -> None:
        if self.branch < 1 or self.chunk_size < 1:
            raise ValueError(f"branch and chunk_size must be >= 1, got {self}")


def to_sm_par(
    plan: ChunkPlan,
    text: ByteText,
    target: ByteText,
    map_pool: Executor | None = None,
    reduce_pool: Executor | None = None,
) -> StringMatcher:
    """Chunked, parallel matching; result is identical to ``to_sm``.

    Chunking happens eagerly up front (it is cheap slicing); the map and
    reduce stages may use distinct pools so the scan stage can run in a
    process pool while the cheap merges stay on threads.
    """
    pieces = text.chunks(plan.chunk_size)
    matchers = pmap(partial(to_sm, target=target), pieces, pool=map_pool)
    return pmconcat(matcher_ops(target), plan.branch, matchers, pool=reduce_pool)


def default_plan_sweep(target_length: int) -> list[ChunkPlan]:
    """Verification sweep: fixed grid plus one boundary-splitting plan.

    The extra plan's chunk size is shorter than the target, forcing every
    occurrence to straddle a chunk seam.
    """
    plans = [
        ChunkPlan(branch, size) for branch in (2, 4, 8) for size in (1, 7, 64)
    ]
    plans.append(ChunkPlan(2, max(target_length - 1, 1)))
    return plans


@dataclass
class EquivalenceEntry:
    plan: ChunkPlan
    equal: bool
    first_divergence: dict | None
    sequential_ms: float
    parallel_ms: float

    @property
    def speedup(self) -> float:
        return self.sequential_ms / self.parallel_ms if self.parallel_ms > 0 else 0.0


@dataclass
class EquivalenceReport:
    entries: list[EquivalenceEntry]

    @property
    def ok(self) -> bool:
        return all(entry.equal for entry in self.entries)

    def to_text(self) -> str:
        header = f"{'branch':>6} {'chunk':>8} {'equal':>5} {'seq_ms':>10} {'par_ms':>10} {'speedup':>8}"
        lines = [header]
        for entry in self.entries:
            lines.append(
                f"{entry.plan.branch:>6} {entry.plan.chunk_size:>8} "
                f"{str(entry.equal).lower():>5} {entry.sequential_ms:>10.3f} "
                f"{entry.parallel_ms:>10.3f} {entry.speedup:>8.2f}"
            )
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            [
                {
                    "plan": {
                        "branch": entry.plan.branch,
                        "chunk_size": entry.plan.chunk_size,
                    },
                    "equal": entry.equal,
                    "first_divergence": entry.first_divergence,
                    "sequential_ms": entry.sequential_ms,
                    "parallel_ms": entry.parallel_ms,
                    "speedup": entry.speedup,
                }
                for entry in self.entries
            ],
            indent=2,
        )


def _first_divergence(seq: StringMatcher, par: StringMatcher) -> dict | None:
    if seq == par:
        return None
    for position, (a, b) in enumerate(zip(seq.indices, par.indices)):
        if a != b:
            return {"position": position, "sequential": a, "parallel": b}
    position = min(len(seq.indices), len(par.indices))
    return {
        "position": position,
        "sequential": seq.indices[position] if position < len(seq.indices) else None,
        "parallel": par.indices[position] if position < len(par.indices) else None,
    }


def verify_equivalence(
    text: ByteText,
    target: ByteText,
    plans: list[ChunkPlan] | None = None,
    map_pool: Executor | None = None,
    reduce_pool: Executor | None = None,
) -> EquivalenceReport:
    """Run both paths for every plan and report equality plus timings.

    Any inequality is reported data here, and a released-code bug there.
    The sequential result does not depend on the plan, so it is computed
    (and timed) once and compared against every parallel run.
    """
    if plans is None:
        plans = default_plan_sweep(len(target))
    started = time.perf_counter()
    sequential = to_sm(text, target)
    sequential_ms = (time.perf_counter() - started) * 1000.0

    entries = []
    for plan in plans:
        started = time.perf_counter()
        parallel = to_sm_par(plan, text, target, map_pool, reduce_pool)
        parallel_ms = (time.perf_counter() - started) * 1000.0
        entries.append(
            EquivalenceEntry(
                plan=plan,
                equal=parallel == sequential,
                first_divergence=_first_divergence(sequential, parallel),
                sequential_ms=sequential_ms,
                parallel_ms=parallel_ms,
            )
        )
    return EquivalenceReport(entries)

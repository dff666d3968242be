"""Monoid algebra: concatenation, chunking, parallel map and tree reduction.

Operation records (:class:`MonoidOps`, :class:`ChunkableOps`) bundle the
identity/combine/equality functions of a monoid as plain values, so the
same reduction and law-checking machinery runs over byte strings, string
matchers, integers, or anything else.

The two reduction paths are deliberately kept both:

* :func:`mconcat` is the sequential right fold and the semantic reference.
* :func:`pmconcat` chunks the operand list, reduces adjacent groups on a
  worker pool, and recurses; it must agree with ``mconcat`` exactly for
  any associative operation, and the test suite holds it to that.

Nothing here assumes commutativity; operands are never reordered.
"""

from __future__ import annotations

import json
import operator
import os
import random
from concurrent.futures import Executor, ThreadPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Callable, Generic, Sequence, TypeVar

T = TypeVar("T")
S = TypeVar("S")
R = TypeVar("R")


@dataclass(frozen=True)
class MonoidOps(Generic[T]):
    """A monoid presented as first-class operations.

    ``identity`` is a zero-argument constructor (a fresh identity element
    per call), ``combine`` the associative binary operation, and ``equal``
    the element comparison used by law checks.
    """

    identity: Callable[[], T]
    combine: Callable[[T, T], T]
    equal: Callable[[T, T], bool] = field(default=operator.eq, kw_only=True)


@dataclass(frozen=True)
class ChunkableOps(MonoidOps[T]):
    """A monoid whose elements can be measured, split, and reassembled.

    ``combine(take(i, x), drop(i, x))`` must reconstruct ``x`` for every
    ``i`` up to ``length(x)``.
    """

    length: Callable[[T], int]
    take: Callable[[int, T], T]
    drop: Callable[[int, T], T]


@dataclass(frozen=True)
class MorphismWitness(Generic[S, T]):
    """A claimed structure-preserving map between two monoids.

    ``map_fn`` should send the source identity to the target identity and
    distribute over ``combine``; :func:`check_morphism` probes both claims.
    """

    source: ChunkableOps[S]
    target: MonoidOps[T]
    map_fn: Callable[[S], T]


def mconcat(ops: MonoidOps[T], items: Sequence[T]) -> T:
    """Right fold of ``combine`` over ``items``, seeded with the identity."""
    acc = ops.identity()
    for item in reversed(items):
        acc = ops.combine(item, acc)
    return acc


def chunk(ops: ChunkableOps[T], size: int, value: T) -> list[T]:
    """Split ``value`` into pieces of ``size``; ``mconcat`` undoes it.

    A value of length <= ``size`` yields a single-element list, so even an
    empty value produces one (empty) chunk.
    """
    if size < 1:
        raise ValueError(f"chunk size must be >= 1, got {size}")
    parts: list[T] = []
    rest = value
    while ops.length(rest) > size:
        parts.append(ops.take(size, rest))
        rest = ops.drop(size, rest)
    parts.append(rest)
    return parts


# Shared default pool, sized to the hardware, created on first use.
_default_pool: Executor | None = None
_default_workers: int | None = None


def set_default_workers(count: int | None) -> None:
    """Override the size of the lazily created default worker pool."""
    global _default_pool, _default_workers
    _default_workers = count
    if _default_pool is not None:
        _default_pool.shutdown(wait=True)
        _default_pool = None


def default_pool() -> Executor:
    global _default_pool
    if _default_pool is None:
        workers = _default_workers or os.cpu_count() or 1
        _default_pool = ThreadPoolExecutor(max_workers=workers)
    return _default_pool


def pmap(fn: Callable[[S], R], items: Sequence[S], pool: Executor | None = None) -> list[R]:
    """Order-preserving parallel map, observationally equal to ``map``.

    All submitted applications run to completion before results are
    gathered; if any application raised, the failure from the earliest
    list position is re-raised.
    """
    items = list(items)
    executor = pool if pool is not None else default_pool()
    futures = [executor.submit(fn, item) for item in items]
    wait(futures)
    return [future.result() for future in futures]


def pmconcat(
    ops: MonoidOps[T],
    fanin: int,
    items: Sequence[T],
    pool: Executor | None = None,
) -> T:
    """Tree-structured reduction, exactly equal to :func:`mconcat`.

    Groups of ``fanin`` adjacent operands are folded concurrently, then
    the (strictly shorter) list of group results is reduced the same way.
    A ``fanin`` below 2, or a list no longer than ``fanin``, falls through
    to the sequential fold.
    """
    items = list(items)
    if fanin <= 1:
        return mconcat(ops, items)
    while len(items) > fanin:
        groups = [items[k : k + fanin] for k in range(0, len(items), fanin)]
        # Termination guard: each round must shrink the operand list.
        assert len(groups) < len(items)
        items = pmap(lambda group: mconcat(ops, group), groups, pool=pool)
    return mconcat(ops, items)


@dataclass
class LawResult:
    law: str
    trials: int
    passed: bool
    counterexample: tuple | None = None

    def to_line(self) -> str:
        line = f"law={self.law} trials={self.trials} result={'pass' if self.passed else 'fail'}"
        if self.counterexample is not None:
            line += f" counterexample={self.counterexample!r}"
        return line


@dataclass
class LawReport:
    results: list[LawResult]

    @property
    def ok(self) -> bool:
        return all(result.passed for result in self.results)

    def to_text(self) -> str:
        return "\n".join(result.to_line() for result in self.results)

    def to_json(self) -> str:
        return json.dumps(
            [
                {
                    "law": result.law,
                    "trials": result.trials,
                    "passed": result.passed,
                    "counterexample": (
                        None
                        if result.counterexample is None
                        else [repr(part) for part in result.counterexample]
                    ),
                }
                for result in self.results
            ],
            indent=2,
        )


def _shrink(
    ops: MonoidOps[T],
    witness: tuple,
    still_fails: Callable[[tuple], bool],
) -> tuple:
    """Shrink a failing tuple by repeatedly halving element lengths."""
    if not isinstance(ops, ChunkableOps):
        return witness
    current = list(witness)
    progress = True
    while progress:
        progress = False
        for position, element in enumerate(current):
            size = ops.length(element)
            if size == 0:
                continue
            candidate = current.copy()
            candidate[position] = ops.take(size // 2, element)
            if still_fails(tuple(candidate)):
                current = candidate
                progress = True
    return tuple(current)


def _run_law(
    ops: MonoidOps[T],
    name: str,
    arity: int,
    holds: Callable[..., bool],
    gen: Callable[[], T],
    trials: int,
) -> LawResult:
    for _ in range(trials):
        args = tuple(gen() for _ in range(arity))
        if not holds(*args):
            shrunk = _shrink(ops, args, lambda candidate: not holds(*candidate))
            return LawResult(name, trials, False, shrunk)
    return LawResult(name, trials, True)


def check_monoid_laws(
    ops: MonoidOps[T],
    gen: Callable[[], T],
    trials: int,
) -> LawReport:
    """Probe the identity and associativity laws with random elements.

    Failure is data, not an exception: the report carries a (shrunk)
    counterexample for every law that did not hold.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    eq = ops.equal

    def left_identity(x: T) -> bool:
        return eq(ops.combine(ops.identity(), x), x)

    def right_identity(x: T) -> bool:
        return eq(ops.combine(x, ops.identity()), x)

    def associativity(x: T, y: T, z: T) -> bool:
        return eq(
            ops.combine(ops.combine(x, y), z),
            ops.combine(x, ops.combine(y, z)),
        )

    return LawReport(
        [
            _run_law(ops, "left_identity", 1, left_identity, gen, trials),
            _run_law(ops, "right_identity", 1, right_identity, gen, trials),
            _run_law(ops, "associativity", 3, associativity, gen, trials),
        ]
    )


def check_morphism(
    witness: MorphismWitness[S, T],
    gen: Callable[[], S],
    trials: int,
) -> LawReport:
    """Probe identity preservation and distribution over ``combine``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    src, tgt, fn = witness.source, witness.target, witness.map_fn

    identity_ok = tgt.equal(fn(src.identity()), tgt.identity())
    identity_result = LawResult(
        "maps_identity", 1, identity_ok, None if identity_ok else ()
    )

    def distributes(x: S, y: S) -> bool:
        return tgt.equal(fn(src.combine(x, y)), tgt.combine(fn(x), fn(y)))

    distribution_result = _run_law(
        src, "distributes_over_combine", 2, distributes, gen, trials
    )
    return LawReport([identity_result, distribution_result])


def morphism_distribution_check(
    witness: MorphismWitness[S, T],
    value: S,
    size: int,
    pool: Executor | None = None,
) -> bool:
    """Does mapping the whole equal reducing the mapped chunks?"""
    if size < 1:
        raise ValueError(f"chunk size must be >= 1, got {size}")
    parts = chunk(witness.source, size, value)
    whole = witness.map_fn(value)
    rebuilt = mconcat(witness.target, pmap(witness.map_fn, parts, pool=pool))
    return witness.target.equal(whole, rebuilt)


def random_bytes_gen(
    rng: random.Random,
    alphabet_size: int = 256,
    max_length: int = 256,
) -> Callable[[], bytes]:
    """Generator of random byte strings for law suites.

    Small alphabets (2 or 4 symbols) make matches dense and stress
    index-merging arithmetic far harder than uniform bytes do.
    """

    def gen() -> bytes:
        length = rng.randrange(max_length + 1)
        return bytes(rng.randrange(alphabet_size) for _ in range(length))

    return gen

"""Brute-force ground truth for every counted object, at desk scale.

Each oracle enumerates permutations exhaustively and counts auxiliary
structures (block tuples, cycle colorings) by direct combinatorics on the
actual cycles of each product - no generating functions, no transition
matrices, nothing shared with the closed-form code paths.  The ``*_literal``
variants go further and enumerate even the auxiliary structures one by one;
they exist to validate the counting layer at tiny sizes.

Budgets are explicit: an oracle either finishes exactly or raises
BudgetExceededError.  Enumeration can be chunked over worker threads; counts
are combined by addition, so results are identical for any thread count.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import BudgetExceededError
from .partitions import (
    Composition,
    Partition,
    as_composition,
    as_partition,
    binomial,
    sorted_partition,
)
from .perms import (
    Permutation,
    fixed_point_free_involutions,
    permutations_of_type,
)
from .separation import (
    disjoint_block_tuples,
    is_separated,
    is_strongly_separated,
    unmarked_cycle_count,
)

OMEGA_FIRST = "omega-first"  # sigma = pi * omega (the full cycle acts first)
PI_FIRST = "pi-first"  # sigma = omega * pi


@dataclass(frozen=True)
class OracleBudget:
    """Hard limits for exhaustive enumeration.

    ``max_n`` caps the ground-set size, ``max_objects`` the number of
    enumerated items, ``max_seconds`` the wall-clock time.  Exceeding any
    limit raises BudgetExceededError before a partial count can escape.
    """

    max_n: int
    max_objects: int | None = None
    max_seconds: float | None = None

    def check_n(self, n: int) -> None:
        if n > self.max_n:
            raise BudgetExceededError(
                f"ground set of size {n} exceeds oracle budget max_n={self.max_n}"
            )

    def tracker(self) -> "_BudgetTracker":
        return _BudgetTracker(self)


class _BudgetTracker:
    def __init__(self, budget: OracleBudget):
        self.budget = budget
        self.count = 0
        self.start = time.monotonic()

    def tick(self, items: int = 1) -> None:
        self.count += items
        if (
            self.budget.max_objects is not None
            and self.count > self.budget.max_objects
        ):
            raise BudgetExceededError(
                f"enumerated {self.count} objects, budget max_objects="
                f"{self.budget.max_objects}"
            )
        if (
            self.budget.max_seconds is not None
            and time.monotonic() - self.start > self.budget.max_seconds
        ):
            raise BudgetExceededError(
                f"enumeration exceeded {self.budget.max_seconds} seconds"
            )


PAIR_BUDGET = OracleBudget(max_n=8)
COLORING_BUDGET = OracleBudget(max_n=6)
INVOLUTION_BUDGET = OracleBudget(max_n=10)
STRONG_BUDGET = OracleBudget(max_n=7)
CONNECTION_BUDGET = OracleBudget(max_n=7)


def _product(perm: Permutation, convention: str) -> Permutation:
    omega = Permutation.full_cycle(perm.degree)
    if convention == OMEGA_FIRST:
        return perm * omega
    if convention == PI_FIRST:
        return omega * perm
    raise ValueError(f"unknown convention {convention!r}")


def _chunked_counter(
    items: Sequence, fn: Callable, threads: int
) -> dict:
    """Apply ``fn`` (item -> key) and tally, chunking over threads.

    The reduction is plain addition over dicts merged in chunk order, so the
    result is independent of the thread count.
    """
    tally: dict = {}
    if threads <= 1 or len(items) < 64:
        for item in items:
            key = fn(item)
            tally[key] = tally.get(key, 0) + 1
        return tally
    chunk = (len(items) + threads - 1) // threads
    pieces = [items[i : i + chunk] for i in range(0, len(items), chunk)]

    def tally_piece(piece):
        local: dict = {}
        for item in piece:
            key = fn(item)
            local[key] = local.get(key, 0) + 1
        return local

    with ThreadPoolExecutor(max_workers=threads) as pool:
        for local in pool.map(tally_piece, pieces):
            for key, value in local.items():
                tally[key] = tally.get(key, 0) + value
    return tally


@lru_cache(maxsize=None)
def product_type_histogram(
    lam: Partition, convention: str = OMEGA_FIRST, threads: int = 1
) -> tuple[tuple[Partition, int], ...]:
    """Cycle-type tally of pi * full-cycle over the conjugacy class of ``lam``."""
    members = list(permutations_of_type(lam))
    tally = _chunked_counter(
        members, lambda p: _product(p, convention).cycle_type(), threads
    )
    return tuple(sorted(tally.items()))


@lru_cache(maxsize=None)
def involution_type_histogram(
    pairs: int, threads: int = 1
) -> tuple[tuple[Partition, int], ...]:
    """Cycle-type tally of the product over all fixed-point-free involutions."""
    members = list(fixed_point_free_involutions(pairs))
    tally = _chunked_counter(
        members, lambda p: _product(p, OMEGA_FIRST).cycle_type(), threads
    )
    return tuple(sorted(tally.items()))


@lru_cache(maxsize=None)
def joint_type_histogram(
    n: int, threads: int = 1
) -> tuple[tuple[tuple[Partition, Partition], int], ...]:
    """Tally of (cycle type of pi, cycle type of pi * full cycle) over all of S_n."""
    members = [
        Permutation(images) for images in itertools.permutations(range(n))
    ]
    tally = _chunked_counter(
        members,
        lambda p: (p.cycle_type(), _product(p, OMEGA_FIRST).cycle_type()),
        threads,
    )
    return tuple(sorted(tally.items()))


# ---------------------------------------------------------------------------
# Exact per-cycle-type counting of auxiliary structures


@lru_cache(maxsize=None)
def _separated_tuple_count(cycle_sizes: Partition, block_sizes: Partition) -> int:
    """Block tuples with the given sizes separated by a permutation whose
    cycles have the given sizes.

    Per cycle, either no block element lands there or one block contributes a
    nonempty subset; the count is the coefficient extraction of that product,
    done by dynamic programming over cycles.  Symmetric in the blocks.
    """
    k = len(block_sizes)
    states: dict[tuple[int, ...], int] = {(0,) * k: 1}
    for size in cycle_sizes:
        nxt: dict[tuple[int, ...], int] = {}
        for degrees, ways in states.items():
            nxt[degrees] = nxt.get(degrees, 0) + ways  # cycle untouched
            for i in range(k):
                room = block_sizes[i] - degrees[i]
                for take in range(1, min(size, room) + 1):
                    bumped = degrees[:i] + (degrees[i] + take,) + degrees[i + 1 :]
                    nxt[bumped] = nxt.get(bumped, 0) + ways * binomial(size, take)
        states = nxt
    return states.get(tuple(block_sizes), 0)


@lru_cache(maxsize=None)
def _separated_tuple_histogram(
    cycle_sizes: Partition, block_sizes: Partition
) -> tuple[tuple[int, int], ...]:
    """Like _separated_tuple_count but split by the number of untouched cycles."""
    k = len(block_sizes)
    states: dict[tuple[tuple[int, ...], int], int] = {((0,) * k, 0): 1}
    for size in cycle_sizes:
        nxt: dict[tuple[tuple[int, ...], int], int] = {}
        for (degrees, untouched), ways in states.items():
            key = (degrees, untouched + 1)
            nxt[key] = nxt.get(key, 0) + ways
            for i in range(k):
                room = block_sizes[i] - degrees[i]
                for take in range(1, min(size, room) + 1):
                    bumped = degrees[:i] + (degrees[i] + take,) + degrees[i + 1 :]
                    key = (bumped, untouched)
                    nxt[key] = nxt.get(key, 0) + ways * binomial(size, take)
        states = nxt
    target = tuple(block_sizes)
    out: dict[int, int] = {}
    for (degrees, untouched), ways in states.items():
        if degrees == target:
            out[untouched] = out.get(untouched, 0) + ways
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _strong_tuple_count(cycle_sizes: Partition, block_sizes: Partition) -> int:
    """Block tuples strongly separated: blocks injectively inside distinct cycles."""

    def place(i: int, used: int) -> int:
        if i == len(block_sizes):
            return 1
        total = 0
        for c, size in enumerate(cycle_sizes):
            if used >> c & 1:
                continue
            ways = binomial(size, block_sizes[i])
            if ways:
                total += ways * place(i + 1, used | 1 << c)
        return total

    return place(0, 0)


@lru_cache(maxsize=None)
def _color_size_distribution(
    cycle_sizes: Partition, colors: int
) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Distribution of per-color element totals over all cycle colorings.

    Keys are vectors (elements colored 1, ..., elements colored ``colors``);
    values count the colorings of the given cycles producing that vector.
    """
    states: dict[tuple[int, ...], int] = {(0,) * colors: 1}
    for size in cycle_sizes:
        nxt: dict[tuple[int, ...], int] = {}
        for vec, ways in states.items():
            for i in range(colors):
                bumped = vec[:i] + (vec[i] + size,) + vec[i + 1 :]
                nxt[bumped] = nxt.get(bumped, 0) + ways
        states = nxt
    return tuple(sorted(states.items()))


def _profile_coloring_count(cycle_sizes: Partition, profile: Composition) -> int:
    """Cycle colorings whose color-i class has exactly profile[i] elements."""
    dist = dict(_color_size_distribution(cycle_sizes, len(profile)))
    return dist.get(tuple(profile), 0)


def _marked_surjective_coloring_count(
    cycle_sizes: Partition, alpha: Composition, extra_colors: int
) -> int:
    """Surjective colorings in k + extra colors, weighted by the choices of a
    block tuple whose i-th block sits inside color class i (i <= k)."""
    k = len(alpha)
    total = 0
    for vec, ways in _color_size_distribution(cycle_sizes, k + extra_colors):
        if any(v == 0 for v in vec):
            continue
        weight = 1
        for a, v in zip(alpha, vec):
            weight *= binomial(v, a)
            if weight == 0:
                break
        total += ways * weight
    return total


# ---------------------------------------------------------------------------
# Public oracles


def oracle_separated_pair_count(
    lam: Iterable[int],
    alpha: Iterable[int],
    convention: str = OMEGA_FIRST,
    threads: int = 1,
    budget: OracleBudget | None = None,
) -> int:
    """Separated pairs (pi in the class of lam, block tuple of sizes alpha),
    by exhaustive enumeration of the class."""
    lam = as_partition(lam)
    alpha = as_composition(alpha, allow_empty=False)
    budget = budget or PAIR_BUDGET
    budget.check_n(sum(lam))
    if sum(alpha) > sum(lam):
        return 0
    hist = product_type_histogram(lam, convention, threads)
    blocks = sorted_partition(alpha)
    return sum(count * _separated_tuple_count(tau, blocks) for tau, count in hist)


def oracle_separated_pair_count_literal(
    lam: Iterable[int],
    alpha: Iterable[int],
    convention: str = OMEGA_FIRST,
    budget: OracleBudget | None = None,
) -> int:
    """Same count with both the class and the block tuples enumerated one by
    one and tested with the separation predicate."""
    lam = as_partition(lam)
    alpha = as_composition(alpha, allow_empty=False)
    budget = budget or OracleBudget(max_n=6)
    budget.check_n(sum(lam))
    n = sum(lam)
    tracker = budget.tracker()
    total = 0
    for pi in permutations_of_type(lam):
        sigma = _product(pi, convention)
        for blocks in disjoint_block_tuples(n, alpha):
            tracker.tick()
            if is_separated(sigma, blocks):
                total += 1
    return total


def oracle_colored_factorization_count(
    gamma: Iterable[int],
    delta: Iterable[int],
    threads: int = 1,
    budget: OracleBudget | None = None,
) -> int:
    """Triples (pi, left coloring with profile gamma, right coloring with
    profile delta) over all of S_n."""
    gamma = as_composition(gamma, allow_empty=False)
    delta = as_composition(delta, allow_empty=False)
    if sum(gamma) != sum(delta):
        raise ValueError("gamma and delta must have equal size")
    n = sum(gamma)
    budget = budget or COLORING_BUDGET
    budget.check_n(n)
    total = 0
    for (tau_left, tau_right), count in joint_type_histogram(n, threads):
        left = _profile_coloring_count(tau_left, gamma)
        if left:
            total += count * left * _profile_coloring_count(tau_right, delta)
    return total


def oracle_separated_colored_count(
    gamma: Iterable[int],
    alpha: Iterable[int],
    extra_colors: int,
    threads: int = 1,
    budget: OracleBudget | None = None,
) -> int:
    """Quadruples (pi, A, c1, c2): left coloring profile gamma, right coloring
    surjective in k + extra colors with block i inside color class i."""
    gamma = as_composition(gamma, allow_empty=False)
    alpha = as_composition(alpha, allow_empty=False)
    if extra_colors < 0:
        raise ValueError("extra color count must be nonnegative")
    n = sum(gamma)
    if sum(alpha) > n:
        raise ValueError("total block size exceeds n")
    budget = budget or COLORING_BUDGET
    budget.check_n(n)
    total = 0
    for (tau_left, tau_right), count in joint_type_histogram(n, threads):
        left = _profile_coloring_count(tau_left, gamma)
        if left:
            total += (
                count
                * left
                * _marked_surjective_coloring_count(tau_right, alpha, extra_colors)
            )
    return total


def oracle_separated_colored_count_literal(
    gamma: Iterable[int],
    alpha: Iterable[int],
    extra_colors: int,
    budget: OracleBudget | None = None,
) -> int:
    """Quadruple count with every component enumerated literally (tiny n only)."""
    gamma = as_composition(gamma, allow_empty=False)
    alpha = as_composition(alpha, allow_empty=False)
    n = sum(gamma)
    budget = budget or OracleBudget(max_n=4)
    budget.check_n(n)
    k = len(alpha)
    q = k + extra_colors
    tracker = budget.tracker()
    total = 0
    for images in itertools.permutations(range(n)):
        pi = Permutation(images)
        sigma = _product(pi, OMEGA_FIRST)
        left_cycles = pi.cycles()
        left_count = 0
        for assignment in itertools.product(
            range(len(gamma)), repeat=len(left_cycles)
        ):
            totals = [0] * len(gamma)
            for cycle, color in zip(left_cycles, assignment):
                totals[color] += len(cycle)
            if tuple(totals) == gamma:
                left_count += 1
        if left_count == 0:
            continue
        right_cycles = sigma.cycles()
        for blocks in disjoint_block_tuples(n, alpha):
            for assignment in itertools.product(range(q), repeat=len(right_cycles)):
                tracker.tick()
                if len(set(assignment)) != q:
                    continue
                color_of = {}
                for cycle, color in zip(right_cycles, assignment):
                    for x in cycle:
                        color_of[x] = color
                if all(
                    color_of[x] == i for i, block in enumerate(blocks) for x in block
                ):
                    total += left_count
    return total


def oracle_involution_series(
    pairs: int,
    alpha: Iterable[int],
    threads: int = 1,
    budget: OracleBudget | None = None,
) -> dict[int, int]:
    """Histogram {untouched cycle count: separated pairs} over all
    (fixed-point-free involution, block tuple) pairs."""
    alpha = as_composition(alpha)
    budget = budget or INVOLUTION_BUDGET
    budget.check_n(2 * pairs)
    if sum(alpha) > 2 * pairs:
        raise ValueError("total block size exceeds 2 * pairs")
    blocks = sorted_partition(alpha)
    out: dict[int, int] = {}
    for tau, count in involution_type_histogram(pairs, threads):
        if not blocks:
            j = len(tau)
            out[j] = out.get(j, 0) + count
            continue
        for j, ways in _separated_tuple_histogram(tau, blocks):
            out[j] = out.get(j, 0) + count * ways
    return out


def oracle_involution_series_literal(
    pairs: int, alpha: Iterable[int], budget: OracleBudget | None = None
) -> dict[int, int]:
    alpha = as_composition(alpha)
    budget = budget or OracleBudget(max_n=6)
    budget.check_n(2 * pairs)
    n = 2 * pairs
    tracker = budget.tracker()
    out: dict[int, int] = {}
    for pi in fixed_point_free_involutions(pairs):
        sigma = _product(pi, OMEGA_FIRST)
        if not alpha:
            j = sigma.cycle_count()
            out[j] = out.get(j, 0) + 1
            continue
        for blocks in disjoint_block_tuples(n, alpha):
            tracker.tick()
            if is_separated(sigma, blocks):
                j = unmarked_cycle_count(sigma, blocks)
                out[j] = out.get(j, 0) + 1
    return out


def oracle_colored_matching_count(
    pairs: int,
    gamma: Iterable[int],
    threads: int = 1,
    budget: OracleBudget | None = None,
) -> int:
    """Pairs (fixed-point-free involution, right coloring with profile gamma)."""
    gamma = as_composition(gamma, allow_empty=False)
    if sum(gamma) != 2 * pairs:
        raise ValueError("gamma must have size 2 * pairs")
    budget = budget or INVOLUTION_BUDGET
    budget.check_n(2 * pairs)
    return sum(
        count * _profile_coloring_count(tau, gamma)
        for tau, count in involution_type_histogram(pairs, threads)
    )


def oracle_strong_pair_count(
    lam: Iterable[int],
    alpha: Iterable[int],
    threads: int = 1,
    budget: OracleBudget | None = None,
) -> int:
    """Pairs (pi in the class of lam, block tuple) with the product strongly
    separated: each block inside its own cycle."""
    lam = as_partition(lam)
    alpha = as_composition(alpha, allow_empty=False)
    budget = budget or STRONG_BUDGET
    budget.check_n(sum(lam))
    if sum(alpha) > sum(lam):
        return 0
    hist = product_type_histogram(lam, OMEGA_FIRST, threads)
    blocks = sorted_partition(alpha)
    return sum(count * _strong_tuple_count(tau, blocks) for tau, count in hist)


def oracle_strong_pair_count_literal(
    lam: Iterable[int], alpha: Iterable[int], budget: OracleBudget | None = None
) -> int:
    lam = as_partition(lam)
    alpha = as_composition(alpha, allow_empty=False)
    budget = budget or OracleBudget(max_n=6)
    budget.check_n(sum(lam))
    n = sum(lam)
    tracker = budget.tracker()
    total = 0
    for pi in permutations_of_type(lam):
        sigma = _product(pi, OMEGA_FIRST)
        for blocks in disjoint_block_tuples(n, alpha):
            tracker.tick()
            if is_strongly_separated(sigma, blocks):
                total += 1
    return total


def canonical_type_representative(alpha: Iterable[int]) -> Permutation:
    """The permutation with cycles on consecutive blocks: (0 .. a1-1)(a1 ..) ..."""
    alpha = as_composition(alpha, allow_empty=False)
    n = sum(alpha)
    cycles = []
    start = 0
    for a in alpha:
        cycles.append(tuple(range(start, start + a)))
        start += a
    return Permutation.from_cycles(n, cycles)


def oracle_connection_coefficient(
    lam: Iterable[int],
    alpha: Iterable[int],
    representative: Permutation | None = None,
    budget: OracleBudget | None = None,
) -> int:
    """Factorizations of a fixed permutation of cycle type ``alpha`` as
    (class-of-lam element) * (full cycle), counted by enumerating full cycles.
    """
    lam = as_partition(lam)
    alpha = as_composition(alpha, allow_empty=False)
    n = sum(alpha)
    if sum(lam) != n:
        raise ValueError("lam and alpha must have equal size")
    budget = budget or CONNECTION_BUDGET
    budget.check_n(n)
    phi = representative if representative is not None else canonical_type_representative(alpha)
    if phi.cycle_type() != sorted_partition(alpha):
        raise ValueError("representative does not have cycle type alpha")
    tracker = budget.tracker()
    total = 0
    for rho in permutations_of_type((n,)):
        tracker.tick()
        if (phi * rho.inverse()).cycle_type() == lam:
            total += 1
    return total

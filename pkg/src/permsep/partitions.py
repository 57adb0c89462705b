"""Integer partitions, compositions, and exact elementary counts.

Conventions used throughout the package:

- A *partition* is a tuple of weakly decreasing positive ints, e.g. ``(3, 1, 1)``.
- A *composition* is a tuple of positive ints where the order matters.
- The empty tuple ``()`` is the unique partition (and composition) of 0.
- Counts are exact Python ints; ratios of counts are ``fractions.Fraction``.
  No floats appear in any computation path.

Every generator in this module has a fixed, documented enumeration order, so
streams can be re-created from (parameters, start index) and chunked
deterministically.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterable, Iterator

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and return ``parts`` as a partition tuple.

    Raises ValueError unless the parts are positive and weakly decreasing.
    """
    result = tuple(parts)
    for i, p in enumerate(result):
        if p < 1:
            raise ValueError(f"partition parts must be positive, got {result}")
        if i > 0 and result[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {result}")
    return result


def sorted_partition(parts: Iterable[int]) -> Partition:
    """Sort arbitrary positive parts into canonical (weakly decreasing) form."""
    return as_partition(sorted(parts, reverse=True))


def as_composition(parts: Iterable[int], allow_empty: bool = True) -> Composition:
    """Validate and return ``parts`` as a composition tuple (order preserved)."""
    result = tuple(parts)
    if any(p < 1 for p in result):
        raise ValueError(f"composition parts must be positive, got {result}")
    if not result and not allow_empty:
        raise ValueError("empty composition not allowed here")
    return result


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    The order starts at ``(n,)`` and ends at ``(1, ..., 1)``; it is a linear
    extension of dominance order (larger in dominance comes earlier).

    >>> list(partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    part = [n]
    while True:
        yield tuple(part)
        i = len(part) - 1
        while i >= 0 and part[i] == 1:
            i -= 1
        if i < 0:
            return
        part[i] -= 1
        rem = n - sum(part[: i + 1])
        del part[i + 1 :]
        while rem > 0:
            nxt = min(part[-1], rem)
            part.append(nxt)
            rem -= nxt


def partitions_with_length(n: int, length: int) -> Iterator[Partition]:
    """Partitions of ``n`` with exactly ``length`` parts, in `partitions` order."""
    return (p for p in partitions(n) if len(p) == length)


def compositions(total: int, length: int) -> Iterator[Composition]:
    """All compositions of ``total`` into exactly ``length`` positive parts.

    Lexicographic order: ``(1, 1, 2)`` before ``(1, 2, 1)`` before ``(2, 1, 1)``.
    """
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - length + 2):
        for rest in compositions(total - first, length - 1):
            yield (first,) + rest


def all_compositions(total: int) -> Iterator[Composition]:
    """All compositions of ``total``, by increasing length, lexicographic within."""
    if total == 0:
        yield ()
        return
    for length in range(1, total + 1):
        yield from compositions(total, length)


def multiplicities(parts: Iterable[int]) -> Counter:
    return Counter(parts)


def centralizer_order(partition: Iterable[int]) -> int:
    """Order of the centralizer of a permutation with the given cycle type.

    For a cycle type with n_i parts equal to i this is prod_i i^(n_i) * n_i!,
    so the conjugacy class size is n! divided by this value.
    """
    lam = sorted_partition(partition)
    result = 1
    for size, mult in multiplicities(lam).items():
        result *= size**mult * math.factorial(mult)
    return result


def conjugacy_class_size(partition: Iterable[int]) -> int:
    """Number of permutations of the given cycle type."""
    lam = sorted_partition(partition)
    return math.factorial(sum(lam)) // centralizer_order(lam)


def binomial(x: int, r: int) -> int:
    """Binomial coefficient with arbitrary integer upper argument.

    Equals x(x-1)...(x-r+1) / r!, so negative ``x`` is fine:

    >>> binomial(5, 2), binomial(-1, 3), binomial(-2, 3)
    (10, -1, -4)

    Returns 0 for r < 0. The value is always an exact int.
    """
    if r < 0:
        return 0
    if x >= 0:
        return math.comb(x, r)
    return (-1) ** r * math.comb(r - x - 1, r)


def multinomial(counts: Iterable[int]) -> int:
    """Multinomial coefficient (sum counts)! / prod(counts!)."""
    counts = list(counts)
    if any(c < 0 for c in counts):
        raise ValueError(f"multinomial needs nonnegative counts, got {counts}")
    result = math.factorial(sum(counts))
    for c in counts:
        result //= math.factorial(c)
    return result


_stirling_rows: dict[int, tuple[int, ...]] = {0: (1,)}


def stirling_first_unsigned(n: int, p: int) -> int:
    """Signless Stirling number of the first kind.

    Counts permutations of an n-set with exactly p cycles; equivalently the
    coefficient of x^p in x(x+1)...(x+n-1).  Zero outside 0 <= p <= n (except
    the empty case, which gives 1 at n = p = 0).
    """
    if n < 0 or p < 0:
        return 0
    if n not in _stirling_rows:
        top = max(n, *_stirling_rows)
        for m in range(max(_stirling_rows) + 1, top + 1):
            prev = _stirling_rows[m - 1]
            row = [0] * (m + 1)
            for j, v in enumerate(prev):
                row[j + 1] += v
                row[j] += (m - 1) * v
            _stirling_rows[m] = tuple(row)
    row = _stirling_rows[n]
    return row[p] if p < len(row) else 0


def perfect_matching_count(pairs: int) -> int:
    """(2N - 1)!! — the number of ways to pair up 2N points."""
    result = 1
    for odd in range(1, 2 * pairs, 2):
        result *= odd
    return result


def dominates(lam: Partition, mu: Partition) -> bool:
    """True if ``lam`` is greater than or equal to ``mu`` in dominance order.

    Both must be partitions of the same integer; comparison is by prefix sums.
    """
    if sum(lam) != sum(mu):
        raise ValueError("dominance compares partitions of the same integer")
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True

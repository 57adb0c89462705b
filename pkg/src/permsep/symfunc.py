"""Exact symmetric-function coefficients: power sums vs monomial basis.

Only the two bases needed here are implemented.  A degree-n symmetric
function is a finitely supported map from partitions of n to rationals,
tagged with its basis ("m" for monomial, "p" for power sum).  The transition
matrices between the bases are computed exactly: expanding each power sum
into monomials gives an integer matrix that is lower triangular in the
reverse-lexicographic partition order (a linear extension of dominance), and
its inverse is obtained by exact forward substitution over Fractions.

Matrices are cached in memory per degree, and optionally on disk: set the
``PERMSEP_CACHE_DIR`` environment variable (or pass ``cache_dir``) to persist
them in a versioned text format.  A corrupted or stale cache file is ignored
and rewritten.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InvariantError
from .partitions import (
    Partition,
    as_partition,
    binomial,
    partitions,
    sorted_partition,
    stirling_first_unsigned,
)

CACHE_ENV_VAR = "PERMSEP_CACHE_DIR"
_CACHE_FORMAT = "permsep-transition-matrices v1"


@dataclass(frozen=True)
class SymFuncVector:
    """A symmetric function of fixed degree in a fixed basis.

    ``coeffs`` maps partitions of ``degree`` to nonzero Fractions; absent
    partitions have coefficient zero.
    """

    degree: int
    basis: str
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("m", "p"):
            raise ValueError(f"basis must be 'm' or 'p', got {self.basis!r}")
        cleaned = {}
        for lam, value in self.coeffs.items():
            lam = as_partition(lam)
            if sum(lam) != self.degree:
                raise ValueError(f"index {lam} does not have size {self.degree}")
            value = Fraction(value)
            if value:
                cleaned[lam] = value
        object.__setattr__(self, "coeffs", cleaned)

    def coefficient(self, lam: Iterable[int]) -> Fraction:
        return self.coeffs.get(as_partition(lam), Fraction(0))


def multiply_by_power_sum(coeffs: Mapping[Partition, int], k: int) -> dict[Partition, int]:
    """Multiply a monomial-basis expansion by the degree-k power sum.

    Uses the part-merging rule: for each index partition, either append a new
    part k (weight: multiplicity of k in the result) or grow one existing
    part value b to b + k (weight: multiplicity of b + k in the result).
    """
    result: dict[Partition, int] = {}
    for mu, c in coeffs.items():
        nu = sorted_partition(mu + (k,))
        result[nu] = result.get(nu, 0) + c * nu.count(k)
        for b in sorted(set(mu)):
            grown = list(mu)
            grown.remove(b)
            nu = sorted_partition(grown + [b + k])
            result[nu] = result.get(nu, 0) + c * nu.count(b + k)
    return {nu: c for nu, c in result.items() if c}


def expand_power_sum_in_monomials(lam: Iterable[int]) -> dict[Partition, int]:
    """Monomial-basis expansion of the power sum indexed by ``lam``.

    >>> expand_power_sum_in_monomials((1, 1))
    {(2,): 1, (1, 1): 2}
    """
    coeffs: dict[Partition, int] = {(): 1}
    for k in as_partition(lam):
        coeffs = multiply_by_power_sum(coeffs, k)
    return coeffs


@dataclass(frozen=True)
class TransitionMatrices:
    """Exact transition matrices between power sums and monomials at one degree.

    Partitions are indexed in reverse-lexicographic order (`partitions`).
    Row i of ``power_to_monomial`` expands the power sum of the i-th partition
    over monomials (integer entries, lower triangular); row i of
    ``monomial_to_power`` expands the i-th monomial function over power sums
    (Fraction entries).  The two matrices are exact inverses.
    """

    degree: int
    index: tuple[Partition, ...]
    power_to_monomial: tuple[tuple[int, ...], ...]
    monomial_to_power: tuple[tuple[Fraction, ...], ...]

    def position(self, lam: Iterable[int]) -> int:
        return self.index.index(as_partition(lam))

    def power_coefficient_of_monomial(self, mu: Iterable[int], lam: Iterable[int]) -> Fraction:
        """The coefficient of the power sum ``lam`` in the monomial function ``mu``."""
        return self.monomial_to_power[self.position(mu)][self.position(lam)]


def _invert_lower_triangular(rows: tuple[tuple[int, ...], ...]) -> tuple[tuple[Fraction, ...], ...]:
    size = len(rows)
    inverse = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        inverse[i][i] = Fraction(1, rows[i][i])
        for j in range(i - 1, -1, -1):
            acc = Fraction(0)
            for k in range(j, i):
                acc += rows[i][k] * inverse[k][j]
            inverse[i][j] = -acc / rows[i][i]
    return tuple(tuple(row) for row in inverse)


_matrix_cache: dict[int, TransitionMatrices] = {}


def transition_matrices(n: int, cache_dir: str | None = None) -> TransitionMatrices:
    """The exact transition-matrix pair for degree ``n`` (cached)."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n in _matrix_cache:
        return _matrix_cache[n]
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV_VAR)
    if cache_dir:
        cached = _load_disk_cache(cache_dir, n)
        if cached is not None:
            _matrix_cache[n] = cached
            return cached

    index = tuple(partitions(n))
    position = {lam: i for i, lam in enumerate(index)}
    raw = []
    for lam in index:
        expansion = expand_power_sum_in_monomials(lam)
        row = [0] * len(index)
        for mu, c in expansion.items():
            row[position[mu]] = c
        raw.append(tuple(row))
    rows = tuple(raw)
    for i, row in enumerate(rows):
        if any(row[j] for j in range(i + 1, len(index))):
            raise InvariantError(f"power/monomial matrix not triangular at degree {n}")
    result = TransitionMatrices(
        degree=n,
        index=index,
        power_to_monomial=rows,
        monomial_to_power=_invert_lower_triangular(rows),
    )
    _matrix_cache[n] = result
    if cache_dir:
        _save_disk_cache(cache_dir, result)
    return result


def to_power_sum_basis(vec: SymFuncVector) -> SymFuncVector:
    """Convert a monomial-basis vector to the power-sum basis."""
    if vec.basis != "m":
        raise ValueError("expected a monomial-basis vector")
    tm = transition_matrices(vec.degree)
    out: dict[Partition, Fraction] = {}
    for mu, c in vec.coeffs.items():
        row = tm.monomial_to_power[tm.position(mu)]
        for j, s in enumerate(row):
            if s:
                lam = tm.index[j]
                out[lam] = out.get(lam, Fraction(0)) + c * s
    return SymFuncVector(vec.degree, "p", out)


def to_monomial_basis(vec: SymFuncVector) -> SymFuncVector:
    """Convert a power-sum-basis vector to the monomial basis."""
    if vec.basis != "p":
        raise ValueError("expected a power-sum-basis vector")
    tm = transition_matrices(vec.degree)
    out: dict[Partition, Fraction] = {}
    for lam, c in vec.coeffs.items():
        row = tm.power_to_monomial[tm.position(lam)]
        for j, r in enumerate(row):
            if r:
                mu = tm.index[j]
                out[mu] = out.get(mu, Fraction(0)) + c * r
    return SymFuncVector(vec.degree, "m", out)


def power_sum_coefficient(vec: SymFuncVector, lam: Iterable[int]) -> Fraction:
    """Extract the power-sum coefficient of ``lam`` from a monomial-basis vector."""
    lam = as_partition(lam)
    if vec.basis != "m":
        raise ValueError("expected a monomial-basis vector")
    if sum(lam) != vec.degree:
        raise ValueError(f"degree mismatch: vector {vec.degree}, index {sum(lam)}")
    tm = transition_matrices(vec.degree)
    col = tm.position(lam)
    total = Fraction(0)
    for mu, c in vec.coeffs.items():
        total += c * tm.monomial_to_power[tm.position(mu)][col]
    return total


def involution_length_power_coefficient(pairs: int, surplus: int) -> Fraction:
    """Coefficient of the all-twos power sum in the length-filtered monomial sum.

    For partitions of 2*pairs with exactly pairs + surplus parts, the sum of
    the monomial functions has all-twos power-sum coefficient
    (-1)^surplus / (2^surplus * surplus! * (pairs - surplus)!).  Both the
    matrix computation and the closed form are evaluated; a mismatch raises
    InvariantError.
    """
    if not 0 <= surplus <= pairs:
        raise ValueError("need 0 <= surplus <= pairs")
    n = 2 * pairs
    tm = transition_matrices(n)
    col = tm.position((2,) * pairs)
    computed = Fraction(0)
    for i, mu in enumerate(tm.index):
        if len(mu) == pairs + surplus:
            computed += tm.monomial_to_power[i][col]
    closed = Fraction(
        (-1) ** surplus,
        2**surplus * math.factorial(surplus) * math.factorial(pairs - surplus),
    )
    if computed != closed:
        raise InvariantError(
            f"involution coefficient mismatch at N={pairs}, s={surplus}: "
            f"{computed} vs {closed}"
        )
    return computed


def cycle_count_power_coefficient(n: int, cycle_count: int, length: int) -> Fraction:
    """Sum of power-sum coefficients over fixed cycle count, of a length-filtered monomial sum.

    Computes sum over partitions mu of n with ``cycle_count`` parts of the
    coefficient of p_mu in (sum of m_lam over partitions lam of n with
    ``length`` parts), and checks it against the closed form
    binomial(n-1, length-1) * (-1)^(length - cycle_count) * c(length, cycle_count) / length!.
    """
    if not (1 <= cycle_count <= n and 1 <= length <= n):
        raise ValueError("need 1 <= cycle_count, length <= n")
    tm = transition_matrices(n)
    computed = Fraction(0)
    for i, lam in enumerate(tm.index):
        if len(lam) != length:
            continue
        row = tm.monomial_to_power[i]
        for j, mu in enumerate(tm.index):
            if len(mu) == cycle_count:
                computed += row[j]
    sign = -1 if (length - cycle_count) % 2 else 1
    closed = (
        sign
        * binomial(n - 1, length - 1)
        * Fraction(
            stirling_first_unsigned(length, cycle_count), math.factorial(length)
        )
    )
    if computed != closed:
        raise InvariantError(
            f"cycle-count coefficient mismatch at n={n}, p={cycle_count}, "
            f"l={length}: {computed} vs {closed}"
        )
    return computed


def _cache_path(cache_dir: str, n: int) -> str:
    return os.path.join(cache_dir, f"transition_v1_degree{n}.txt")


def _fmt_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def _save_disk_cache(cache_dir: str, tm: TransitionMatrices) -> None:
    try:
        os.makedirs(cache_dir, exist_ok=True)
        lines = [f"{_CACHE_FORMAT} degree={tm.degree} partitions={len(tm.index)}"]
        for i, lam in enumerate(tm.index):
            for j, mu in enumerate(tm.index):
                if tm.power_to_monomial[i][j]:
                    lines.append(
                        f"P {_fmt_partition(lam)} {_fmt_partition(mu)} "
                        f"{tm.power_to_monomial[i][j]}"
                    )
                if tm.monomial_to_power[i][j]:
                    lines.append(
                        f"M {_fmt_partition(lam)} {_fmt_partition(mu)} "
                        f"{tm.monomial_to_power[i][j]}"
                    )
        with open(_cache_path(cache_dir, tm.degree), "w") as handle:
            handle.write("\n".join(lines) + "\n")
    except OSError:
        pass  # cache is best-effort only


def _load_disk_cache(cache_dir: str, n: int) -> TransitionMatrices | None:
    path = _cache_path(cache_dir, n)
    try:
        with open(path) as handle:
            lines = [line.strip() for line in handle if line.strip()]
    except OSError:
        return None
    index = tuple(partitions(n))
    position = {lam: i for i, lam in enumerate(index)}
    try:
        header, count = lines[0].rsplit(" ", 1)
        if header != f"{_CACHE_FORMAT} degree={n}" or int(count.split("=")[1]) != len(index):
            return None
        p2m = [[0] * len(index) for _ in index]
        m2p = [[Fraction(0)] * len(index) for _ in index]
        for line in lines[1:]:
            tag, lam_s, mu_s, value = line.split(" ")
            i = position[tuple(int(x) for x in lam_s.split(","))]
            j = position[tuple(int(x) for x in mu_s.split(","))]
            if tag == "P":
                p2m[i][j] = int(value)
            elif tag == "M":
                m2p[i][j] = Fraction(value)
            else:
                return None
        for i in range(len(index)):
            if p2m[i][i] == 0 or m2p[i][i] == 0:
                return None
        return TransitionMatrices(
            degree=n,
            index=index,
            power_to_monomial=tuple(tuple(row) for row in p2m),
            monomial_to_power=tuple(tuple(row) for row in m2p),
        )
    except (ValueError, KeyError, IndexError):
        return None

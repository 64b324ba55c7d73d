"""Subspace arrangements, their polymatroids, and equivariant Hilbert series.

The Hilbert series of a product ideal is computed from the polymatroid
rank function alone, through the truncated inclusion-exclusion recursion
for the correction polynomial P and the subset recursion it feeds.  Both
recursions are memoized by subset bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeCapError
from .linalg import Subspace, intersect
from .schur import SchurSeries, one, sigma, sigma_power

MAX_GROUND_SET = 16


@dataclass(frozen=True)
class Arrangement:
    """An ordered list of subspaces of a common ambient space.

    Duplicates are allowed (t copies of the origin is a legitimate and
    useful arrangement).
    """

    ambient_dim: int
    subspaces: tuple[Subspace, ...]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        for s in self.subspaces:
            if s.ambient_dim != self.ambient_dim:
                raise ValueError("subspace ambient dimension mismatch")
        if len(self.subspaces) > MAX_GROUND_SET:
            raise SizeCapError(
                f"arrangement has {len(self.subspaces)} subspaces; "
                f"the subset recursion is capped at {MAX_GROUND_SET}"
            )

    def __len__(self) -> int:
        return len(self.subspaces)

    def subarrangement(self, indices) -> "Arrangement":
        return Arrangement(
            self.ambient_dim, tuple(self.subspaces[i] for i in indices)
        )


class Polymatroid:
    """Rank function on the subsets of {0, .., t-1}, memoized by bitmask.

    Ranks are produced lazily from ``rank_source``; same-mask races in a
    threaded setting recompute the same pure value, so the cache stays
    consistent.
    """

    def __init__(self, ground_size: int, rank_source):
        if ground_size < 0:
            raise ValueError("ground size must be nonnegative")
        self.ground_size = ground_size
        self._source = rank_source
        self._ranks: dict[int, int] = {0: 0}
        self._p_cache: dict[tuple[int, int], SchurSeries] = {}

    def as_mask(self, subset) -> int:
        if isinstance(subset, int):
            mask = subset
        else:
            mask = 0
            for i in subset:
                mask |= 1 << i
        if not 0 <= mask < (1 << self.ground_size):
            raise ValueError(f"subset {subset!r} outside ground set of size {self.ground_size}")
        return mask

    def rank(self, subset) -> int:
        mask = self.as_mask(subset)
        if mask not in self._ranks:
            self._ranks[mask] = self._source(mask)
        return self._ranks[mask]

    def rank_table(self) -> list[tuple[tuple[int, ...], int]]:
        """All (subset, rank) pairs ordered by size then lexicographically."""
        out = []
        for mask in range(1 << self.ground_size):
            subset = tuple(i for i in range(self.ground_size) if mask >> i & 1)
            out.append((subset, self.rank(mask)))
        out.sort(key=lambda kv: (len(kv[0]), kv[0]))
        return out


def polymatroid_of(arr: Arrangement) -> Polymatroid:
    """Polymatroid of an arrangement: rank(B) = m - dim of the intersection
    over B, with rank of the empty set 0."""
    m = arr.ambient_dim
    inter_cache: dict[int, Subspace] = {0: Subspace.full(m)}

    def intersection(mask: int) -> Subspace:
        if mask not in inter_cache:
            low = mask & -mask
            i = low.bit_length() - 1
            inter_cache[mask] = intersect(
                [intersection(mask ^ low), arr.subspaces[i]]
            )
        return inter_cache[mask]

    return Polymatroid(len(arr.subspaces), lambda mask: m - intersection(mask).dim)


def p_polynomial(pm: Polymatroid, subset, truncation: int) -> SchurSeries:
    """Correction polynomial P(B) of the polymatroid, memoized by bitmask.

    P of the empty set is 1; otherwise P(B) is the degree <= |B|-1 part of
      - sum over proper subsets C of (-1)^(|B|-|C|) sigma^(rk B - rk C) P(C).
    """
    if truncation < pm.ground_size:
        raise ValueError(
            f"truncation degree {truncation} below ground-set size {pm.ground_size}"
        )
    mask = pm.as_mask(subset)
    return _p_recursive(pm, mask, truncation)


def _p_recursive(pm: Polymatroid, mask: int, D: int) -> SchurSeries:
    if mask == 0:
        return one(D)
    key = (mask, D)
    cached = pm._p_cache.get(key)
    if cached is not None:
        return cached
    size = mask.bit_count()
    rank_b = pm.rank(mask)
    total = SchurSeries({}, degree=D)
    sub = (mask - 1) & mask
    while True:
        term = sigma_power(D, rank_b - pm.rank(sub)) * _p_recursive(pm, sub, D)
        if (size - sub.bit_count()) % 2:
            total = total + term
        else:
            total = total - term
        if sub == 0:
            break
        sub = (sub - 1) & mask
    result = total.truncate(size - 1)
    pm._p_cache[key] = result
    return result


def hilbert_product(arr: Arrangement, truncation: int) -> SchurSeries:
    """Equivariant Hilbert series of the product ideal of the arrangement.

    Computed by the subset recursion rearranged from the identity
      sigma^(m - rk A) P(A) = sum over B of (-1)^|B| H(B),
    with base case H of the empty set sigma^m.  Truncated to ``truncation``,
    which must be at least the generation degree t.
    """
    t = len(arr.subspaces)
    if truncation < t:
        raise ValueError(
            f"truncation degree {truncation} below generation degree {t}"
        )
    D = truncation
    m = arr.ambient_dim
    pm = polymatroid_of(arr)
    memo: dict[int, SchurSeries] = {}

    def series(mask: int) -> SchurSeries:
        if mask == 0:
            return sigma_power(D, m)
        if mask in memo:
            return memo[mask]
        acc = sigma_power(D, m - pm.rank(mask)) * _p_recursive(pm, mask, D)
        sub = (mask - 1) & mask
        while True:
            if sub.bit_count() % 2:
                acc = acc + series(sub)
            else:
                acc = acc - series(sub)
            if sub == 0:
                break
            sub = (sub - 1) & mask
        result = acc if mask.bit_count() % 2 == 0 else -acc
        memo[mask] = result
        return result

    return series((1 << t) - 1)


def lines_first_disagreement(arr: Arrangement, truncation: int) -> int | None:
    """First degree >= t where H differs from sigma^m - t*sigma, or None.

    Only defined for arrangements of t distinct lines; the leading-term
    statement says the two agree above the low-degree correction.
    """
    t = len(arr.subspaces)
    if any(s.dim != 1 for s in arr.subspaces):
        raise ValueError("arrangement must consist of one-dimensional subspaces")
    if len(set(arr.subspaces)) != t:
        raise ValueError("lines must be pairwise distinct")
    D = truncation
    h = hilbert_product(arr, D)
    model = sigma_power(D, arr.ambient_dim) - t * sigma(D)
    for d in range(t, D + 1):
        if h.graded_part(d) != model.graded_part(d):
            return d
    return None


def check_lines_leading_terms(arr: Arrangement, truncation: int) -> bool:
    """True when H agrees with sigma^m - t*sigma in every degree from t up."""
    return lines_first_disagreement(arr, truncation) is None

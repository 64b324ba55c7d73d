"""Integer partitions and tableau combinatorics.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  This module provides the
combinatorial kernels everything else is built on: conjugation, ordered
enumeration, Littlewood-Richardson coefficients, Kostka numbers, and
dimensions of the corresponding irreducible GL_n representations.

All functions are pure.  The coefficient counters are memoized; concurrent
calls with the same arguments return identical values.
"""

from __future__ import annotations

from functools import cache

Partition = tuple[int, ...]


def is_partition(parts: tuple[int, ...]) -> bool:
    """True when ``parts`` is weakly decreasing with positive integer entries."""
    return all(
        isinstance(p, int) and p >= 1 and (i == 0 or parts[i - 1] >= p)
        for i, p in enumerate(parts)
    )


def check_partition(parts) -> Partition:
    """Coerce to a tuple and validate it as a partition."""
    lam = tuple(parts)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {parts!r}")
    return lam


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: column lengths become row lengths."""
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def contains(lam: Partition, mu: Partition) -> bool:
    """Containment of Young diagrams: mu fits inside lam."""
    return len(mu) <= len(lam) and all(mu[i] <= lam[i] for i in range(len(mu)))


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order: every prefix sum of lam is at least that of mu.

    Only meaningful for equal sizes; returns False otherwise.
    """
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return a == b


def partition_sort_key(lam: Partition):
    """Sort key for the canonical total order: graded, then reverse-lex.

    Within one degree, (d) comes first and (1,)*d last.  This is the order
    used for every serialized coefficient list.
    """
    return (sum(lam), tuple(-p for p in lam))


@cache
def _partitions(d: int, max_part: int, max_parts: int) -> tuple[Partition, ...]:
    if d == 0:
        return ((),)
    if max_part == 0 or max_parts == 0:
        return ()
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in _partitions(d - first, first, max_parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(d: int, max_parts: int | None = None) -> list[Partition]:
    """All partitions of ``d``, optionally with at most ``max_parts`` parts.

    Listed in the canonical within-degree order (reverse-lexicographic).
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    limit = d if max_parts is None else max(0, min(max_parts, d))
    return list(_partitions(d, d, limit))


@cache
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu,nu}.

    Counts semistandard skew tableaux of shape lam/mu and content nu whose
    reverse reading word (rows right to left, top to bottom) is a lattice
    word.  Returns 0 when mu does not fit in lam or the sizes do not add up.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    nu = check_partition(nu)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu):
        return 0
    if not nu:
        return 1
    # cells in reverse-reading-word order: rows top to bottom, right to left
    cells = []
    for r in range(len(lam)):
        lo = mu[r] if r < len(mu) else 0
        cells.extend((r, c) for c in range(lam[r] - 1, lo - 1, -1))
    counts = [0] * len(nu)
    grid: dict[tuple[int, int], int] = {}

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        above = grid.get((r - 1, c))
        right = grid.get((r, c + 1))
        total = 0
        for v in range(1, len(nu) + 1):
            if counts[v - 1] >= nu[v - 1]:
                continue
            if v > 1 and counts[v - 1] >= counts[v - 2]:
                continue  # would break the lattice-word property
            if above is not None and v <= above:
                continue
            if right is not None and v > right:
                continue
            counts[v - 1] += 1
            grid[(r, c)] = v
            total += fill(k + 1)
            counts[v - 1] -= 1
            del grid[(r, c)]
        return total

    return fill(0)


@cache
def kostka_number(lam: Partition, content: tuple[int, ...]) -> int:
    """Number of semistandard Young tableaux of shape lam and given content.

    ``content`` may be any vector of nonnegative integers; entry i is used
    content[i-1] times.  Returns 0 when the sizes disagree.
    """
    lam = check_partition(lam)
    content = tuple(content)
    if any(c < 0 for c in content):
        raise ValueError(f"negative content: {content!r}")
    if sum(lam) != sum(content):
        return 0
    if not lam:
        return 1
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    counts = [0] * len(content)
    grid: dict[tuple[int, int], int] = {}

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        above = grid.get((r - 1, c))
        left = grid.get((r, c - 1))
        lo = 1 if left is None else left
        if above is not None:
            lo = max(lo, above + 1)
        total = 0
        for v in range(lo, len(content) + 1):
            if counts[v - 1] >= content[v - 1]:
                continue
            counts[v - 1] += 1
            grid[(r, c)] = v
            total += fill(k + 1)
            counts[v - 1] -= 1
            del grid[(r, c)]
        return total

    return fill(0)


def weyl_dimension(lam: Partition, n: int) -> int:
    """Dimension of the irreducible polynomial GL_n representation for lam.

    Hook content formula: product over cells of (n + col - row) / hook.
    Zero when lam has more than n rows.
    """
    if n < 1:
        raise ValueError("n must be positive")
    lam = check_partition(lam)
    if len(lam) > n:
        return 0
    conj = conjugate(lam)
    num = 1
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
            den *= row - j + conj[j] - i - 1
    return num // den

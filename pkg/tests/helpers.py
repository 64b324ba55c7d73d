"""Shared fixtures and independent brute-force oracles for the test suite.

The oracles here deliberately avoid the library's own code paths: Schur
product coefficients are rederived from scratch by counting semistandard
fillings and peeling weight tables, so they can certify the tableau-based
Littlewood-Richardson implementation.
"""

from itertools import permutations

from equisyz.arrangements import Arrangement
from equisyz.linalg import Subspace


# -- arrangements used throughout ------------------------------------------


def origin_copies(t: int) -> Arrangement:
    """t copies of the zero subspace of K^1 (powers of the maximal ideal)."""
    return Arrangement(1, (Subspace.zero(1),) * t)


def axes(m: int, indices=None) -> Arrangement:
    """Coordinate axes of K^m (all of them unless indices are given)."""
    indices = range(m) if indices is None else indices
    subs = tuple(
        Subspace.from_vectors([[int(i == j) for j in range(m)]], m) for i in indices
    )
    return Arrangement(m, subs)


def plane_and_normal_line() -> Arrangement:
    plane = Subspace.from_vectors([[1, 0, 0], [0, 1, 0]], 3)
    line = Subspace.from_vectors([[0, 0, 1]], 3)
    return Arrangement(3, (plane, line))


def lines_in_plane(t: int) -> Arrangement:
    """t distinct lines in K^2."""
    spans = [[1, 0], [0, 1], [1, 1], [1, -1], [1, 2], [2, 1]][:t]
    subs = tuple(Subspace.from_vectors([v], 2) for v in spans)
    return Arrangement(2, subs)


def worked_product_arrangements():
    """The worked product-ideal examples: name, arrangement, generation degree."""
    return [
        ("origin t=1", origin_copies(1)),
        ("origin t=2", origin_copies(2)),
        ("origin t=3", origin_copies(3)),
        ("two axes in K^2", axes(2)),
        ("plane + normal line", plane_and_normal_line()),
        ("three axes in K^3", axes(3)),
    ]


# -- independent combinatorial oracles --------------------------------------


def ssyt_count(shape, content) -> int:
    """Count semistandard fillings by direct row-by-row enumeration.

    Independent reimplementation (different traversal and pruning) used to
    certify the library's Kostka numbers.
    """
    cells = sum(shape)
    if cells != sum(content):
        return 0
    rows = len(shape)

    def rec(r, c, remaining, grid):
        if r == rows:
            return 1
        if c == shape[r]:
            return rec(r + 1, 0, remaining, grid)
        total = 0
        for v in range(1, len(content) + 1):
            if remaining[v - 1] == 0:
                continue
            if c > 0 and grid[r][c - 1] > v:
                continue
            if r > 0 and grid[r - 1][c] >= v:
                continue
            remaining[v - 1] -= 1
            grid[r][c] = v
            total += rec(r, c + 1, remaining, grid)
            remaining[v - 1] += 1
        return total

    grid = [[0] * w for w in shape]
    return rec(0, 0, list(content), grid)


def weights_of_schur(lam, n) -> dict:
    """Weight table of s_lam in n variables via the independent SSYT counter."""
    d = sum(lam)
    table = {}
    for w in compositions(d, n):
        count = ssyt_count(lam, w)
        if count:
            table[w] = count
    return table


def compositions(total, parts):
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def peel_weight_table(table, d, n) -> dict:
    """Schur coefficients from a weight table, by greedy lex peeling.

    Standalone counterpart of the library routine, kept separate so the two
    can check each other.
    """
    residual = {w: m for w, m in table.items() if m}
    out = {}
    while residual:
        top = max(w for w in residual if tuple(sorted(w, reverse=True)) == w)
        mult = residual[top]
        assert mult > 0, f"negative multiplicity {mult} at {top}"
        lam = tuple(p for p in top if p)
        out[lam] = mult
        for w, count in weights_of_schur(lam, n).items():
            v = residual.get(w, 0) - mult * count
            if v:
                residual[w] = v
            else:
                residual.pop(w, None)
    return out


def schur_product_coefficients(mu, nu) -> dict:
    """Expansion of s_mu * s_nu derived purely from weight tables."""
    d = sum(mu) + sum(nu)
    n = max(d, 1)
    wmu = weights_of_schur(mu, n)
    wnu = weights_of_schur(nu, n)
    table = {}
    for a, ca in wmu.items():
        for b, cb in wnu.items():
            w = tuple(x + y for x, y in zip(a, b))
            table[w] = table.get(w, 0) + ca * cb
    return peel_weight_table(table, d, n)


def is_horizontal_strip(lam, mu, k) -> bool:
    """lam/mu is a horizontal strip of size k: no column gains two cells."""
    if sum(lam) != sum(mu) + k:
        return False
    if len(mu) > len(lam) or any(mu[i] > lam[i] for i in range(len(mu))):
        return False
    for i in range(1, len(lam)):
        upper = mu[i - 1] if i - 1 < len(mu) else 0
        if lam[i] > upper:
            return False
    return True


def orbit_sum_dimension(table) -> int:
    return sum(table.values())


def symmetric_orbit_ok(table, n) -> bool:
    """Every permutation of a weight carries the same multiplicity."""
    for w in table:
        canon = tuple(sorted(w, reverse=True))
        vals = {table.get(p, 0) for p in set(permutations(canon))}
        if len(vals) != 1:
            return False
    return True

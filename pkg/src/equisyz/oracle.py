"""Brute-force graded characters of arrangement ideals in explicit coordinates.

Given an arrangement in W = Q^m and a second space V of dimension n, the
polynomial ring on W tensor V has m*n variables z[j,i] (ordered (j,i)
lexicographically, j indexing W).  The degree-one part of the k-th linear
ideal is spanned by a tensor e_i for a running over the annihilator of the
k-th subspace - each such form has pure V-weight e_i, so every ideal in
sight is graded by V-weights and both the polynomial and the exterior side
can be row reduced one weight space at a time.

This module spans degree-d pieces of product, intersection and wedge
ideals by generator-times-monomial products and measures weight-space
dimensions by exact elimination.  It shares no code path with the
polymatroid recursion, which makes it an independent check on the series
formulas.
"""

from __future__ import annotations

import logging
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product as cartesian
from math import comb

from .arrangements import Arrangement
from .errors import SizeCapError
from .schur import SchurSeries, from_weight_multiplicities

log = logging.getLogger(__name__)

Weight = tuple[int, ...]


@dataclass(frozen=True)
class OracleCaps:
    """Size limits for the brute-force computations.

    The weight-space matrices grow combinatorially, so every entry point
    refuses inputs beyond these bounds instead of silently hanging.
    """

    ambient_dim: int = 4
    dim_v: int = 4
    degree: int = 4
    subspaces: int = 4


DEFAULT_CAPS = OracleCaps()


def _check_sizes(arr: Arrangement, n: int, d_max: int, caps: OracleCaps):
    if n < 1:
        raise ValueError("dim V must be positive")
    if d_max < 0:
        raise ValueError("maximum degree must be nonnegative")
    checks = (
        ("ambient dimension m", arr.ambient_dim, caps.ambient_dim),
        ("dim V", n, caps.dim_v),
        ("maximum degree", d_max, caps.degree),
        ("arrangement size t", len(arr.subspaces), caps.subspaces),
    )
    for label, value, cap in checks:
        if value > cap:
            raise SizeCapError(
                f"{label} = {value} exceeds the oracle cap {cap} "
                "(pass explicit OracleCaps, or set EQUISYZ_CAPS for the CLI)"
            )


@dataclass
class GradedCharacter:
    """Per-degree weight multiplicity tables of a graded GL(V) representation.

    ``weights[d]`` maps a V-weight (length-n composition of d) to the exact
    dimension of its weight space; zero dimensions are omitted.
    """

    n: int
    weights: dict[int, dict[Weight, int]]

    def dimension(self, d: int) -> int:
        return sum(self.weights.get(d, {}).values())

    def min_degree(self) -> int | None:
        nonzero = [d for d, table in self.weights.items() if table]
        return min(nonzero) if nonzero else None

    def schur(self, d: int) -> SchurSeries:
        return from_weight_multiplicities(self.weights.get(d, {}), d, self.n)


def character_to_schur(gc: GradedCharacter, d: int) -> SchurSeries:
    """Faithful Schur expansion of the degree-d piece (requires n >= d)."""
    return gc.schur(d)


class _Echelon:
    """Incremental reduced row echelon form over sparse Fraction rows.

    Rows are dicts keyed by basis labels (any totally ordered hashables);
    the pivot of a stored row is its smallest label and stored rows are
    fully reduced against each other, so free labels yield a nullspace
    basis directly.
    """

    def __init__(self):
        self.rows: dict = {}  # pivot label -> normalized row

    def add(self, row: dict) -> bool:
        """Reduce a row against the current basis; keep it if independent."""
        work = {k: v for k, v in row.items() if v}
        while work:
            lead = min(work)
            piv = self.rows.get(lead)
            if piv is None:
                c = work[lead]
                new = {k: v / c for k, v in work.items()}
                for other in self.rows.values():
                    f = other.get(lead)
                    if f:
                        for k, v in new.items():
                            o = other.get(k, 0) - f * v
                            if o:
                                other[k] = o
                            else:
                                other.pop(k, None)
                self.rows[lead] = new
                return True
            f = work[lead]
            for k, v in piv.items():
                w = work.get(k, 0) - f * v
                if w:
                    work[k] = w
                else:
                    work.pop(k, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)

    def nullspace(self, labels) -> list[dict]:
        out = []
        for free in labels:
            if free in self.rows:
                continue
            vec = {free: Fraction(1)}
            for pivot, prow in self.rows.items():
                c = prow.get(free)
                if c:
                    vec[pivot] = -c
            out.append(vec)
        return out


# -- coordinates -----------------------------------------------------------


@dataclass(frozen=True)
class CoordinateIdealBasis:
    """Degree-one generators of each linear ideal in explicit coordinates.

    Variable v = j*n + i stands for z[j,i] = w_j tensor v_i, in (j,i)-lex
    order.  Each form is a pair (i, {var: coeff}): the tensor of an
    annihilator vector of the k-th subspace with e_i, so it has pure
    V-weight e_i.  Factor k contributes (m - dim Y_k) * n forms.
    """

    m: int
    n: int
    forms_per_factor: tuple[tuple, ...]

    @staticmethod
    def of(arr: Arrangement, n: int) -> "CoordinateIdealBasis":
        out = []
        for sub in arr.subspaces:
            forms = []
            for a in sub.annihilator().basis:
                for i in range(n):
                    forms.append(
                        (i, {j * n + i: c for j, c in enumerate(a) if c})
                    )
            out.append(tuple(forms))
        return CoordinateIdealBasis(arr.ambient_dim, n, tuple(out))


def _linear_forms(arr: Arrangement, n: int):
    return [list(forms) for forms in CoordinateIdealBasis.of(arr, n).forms_per_factor]


def _compositions(total: int, parts: int):
    """All tuples of ``parts`` nonnegative integers summing to ``total``."""
    if total < 0:
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _weight_monomials(w: Weight, m: int, n: int):
    """Exponent tuples (length m*n) of the polynomial monomials of weight w."""
    per_column = [list(_compositions(wi, m)) for wi in w]
    for choice in cartesian(*per_column):
        exp = [0] * (m * n)
        for i, col in enumerate(choice):
            for j, e in enumerate(col):
                if e:
                    exp[j * n + i] = e
        yield tuple(exp)


def _exterior_weight_monomials(w: Weight, m: int, n: int):
    """Sorted variable-index tuples of the exterior monomials of weight w."""
    if any(wi > m for wi in w):
        return
    per_column = [list(combinations(range(m), wi)) for wi in w]
    for choice in cartesian(*per_column):
        vars_ = [j * n + i for i, col in enumerate(choice) for j in col]
        yield tuple(sorted(vars_))


def _poly_times_form(poly: dict, form: dict) -> dict:
    out: dict = {}
    for mono, c in poly.items():
        for v, a in form.items():
            key = list(mono)
            key[v] += 1
            key = tuple(key)
            val = out.get(key, 0) + c * a
            if val:
                out[key] = val
            else:
                del out[key]
    return out


def _ext_times_form(elem: dict, form: dict) -> dict:
    out: dict = {}
    for mono, c in elem.items():
        for v, a in form.items():
            pos = bisect_left(mono, v)
            if pos < len(mono) and mono[pos] == v:
                continue  # repeated factor wedges to zero
            sign = -1 if (len(mono) - pos) % 2 else 1
            key = mono[:pos] + (v,) + mono[pos:]
            val = out.get(key, 0) + sign * c * a
            if val:
                out[key] = val
            else:
                del out[key]
    return out


def _weight_of_combo(combo, n: int) -> list[int]:
    base = [0] * n
    for i, _ in combo:
        base[i] += 1
    return base


def _bucket_ranks(buckets: dict) -> dict[Weight, int]:
    table = {}
    for w in sorted(buckets):
        ech = _Echelon()
        for row in buckets[w]:
            ech.add(row)
        if ech.rank:
            table[w] = ech.rank
    return table


# -- characters --------------------------------------------------------------


def product_ideal_character(
    arr: Arrangement, n: int, d_max: int, caps: OracleCaps = DEFAULT_CAPS
) -> GradedCharacter:
    """Graded character of the product ideal J_1(V) ... J_t(V).

    Degree d is spanned by products of one basis form per factor times a
    monomial of degree d - t; spanning vectors have pure V-weight and each
    weight bucket is row reduced exactly.
    """
    _check_sizes(arr, n, d_max, caps)
    m = arr.ambient_dim
    t = len(arr.subspaces)
    forms = _linear_forms(arr, n)
    weights: dict[int, dict[Weight, int]] = {}
    for d in range(d_max + 1):
        log.info(
            "product oracle degree %d: monomial space dimension %d",
            d, comb(m * n + d - 1, d),
        )
        buckets: dict[Weight, list[dict]] = {}
        for combo in cartesian(*forms):
            base = _weight_of_combo(combo, n)
            for w_rest in _compositions(d - t, n):
                w = tuple(a + b for a, b in zip(base, w_rest))
                for mono in _weight_monomials(w_rest, m, n):
                    poly = {mono: Fraction(1)}
                    for _, form in combo:
                        poly = _poly_times_form(poly, form)
                    if poly:
                        buckets.setdefault(w, []).append(poly)
        weights[d] = _bucket_ranks(buckets)
    return GradedCharacter(n=n, weights=weights)


def intersection_ideal_character(
    arr: Arrangement, n: int, d_max: int, caps: OracleCaps = DEFAULT_CAPS
) -> GradedCharacter:
    """Graded character of the intersection ideal J_1(V) cap ... cap J_t(V).

    Each factor's degree-d piece is the span of its forms times degree d-1
    monomials; the intersection is computed weight space by weight space by
    stacking annihilators, which is exact and keeps the matrices small.
    """
    _check_sizes(arr, n, d_max, caps)
    m = arr.ambient_dim
    t = len(arr.subspaces)
    forms = _linear_forms(arr, n)
    weights: dict[int, dict[Weight, int]] = {}
    for d in range(d_max + 1):
        log.info(
            "intersection oracle degree %d: monomial space dimension %d",
            d, comb(m * n + d - 1, d),
        )
        table: dict[Weight, int] = {}
        for w in _compositions(d, n):
            labels = list(_weight_monomials(w, m, n))
            ambient = len(labels)
            stack = _Echelon()
            for k in range(t):
                factor = _Echelon()
                for i, form in forms[k]:
                    if w[i] == 0:
                        continue
                    w_minus = tuple(
                        wi - 1 if idx == i else wi for idx, wi in enumerate(w)
                    )
                    for mono in _weight_monomials(w_minus, m, n):
                        factor.add(_poly_times_form({mono: Fraction(1)}, form))
                for vec in factor.nullspace(labels):
                    stack.add(vec)
                if stack.rank == ambient:
                    break
            dim = ambient - stack.rank
            if dim:
                table[w] = dim
        weights[d] = table
    return GradedCharacter(n=n, weights=weights)


def wedge_ideal_character(
    arr: Arrangement, n: int, d_max: int, caps: OracleCaps = DEFAULT_CAPS
) -> GradedCharacter:
    """Graded character of the wedge ideal J_1(V) ^ ... ^ J_t(V) in the
    exterior algebra on W tensor V.

    Same spanning strategy as the product, inside the exterior algebra:
    exterior monomials are sorted variable tuples in the fixed (j,i)-lex
    variable order and every wedge tracks the sorting sign.
    """
    _check_sizes(arr, n, d_max, caps)
    m = arr.ambient_dim
    t = len(arr.subspaces)
    if d_max > m * n:
        raise ValueError(
            f"degree {d_max} exceeds the exterior top degree {m * n}"
        )
    forms = _linear_forms(arr, n)
    weights: dict[int, dict[Weight, int]] = {}
    for d in range(d_max + 1):
        log.info(
            "wedge oracle degree %d: exterior monomial space dimension %d",
            d, comb(m * n, d),
        )
        buckets: dict[Weight, list[dict]] = {}
        for combo in cartesian(*forms):
            base = _weight_of_combo(combo, n)
            for w_rest in _compositions(d - t, n):
                w = tuple(a + b for a, b in zip(base, w_rest))
                for emono in _exterior_weight_monomials(w_rest, m, n):
                    elem = {(): Fraction(1)}
                    for _, form in combo:
                        elem = _ext_times_form(elem, form)
                        if not elem:
                            break
                    for v in emono:
                        if not elem:
                            break
                        elem = _ext_times_form(elem, {v: 1})
                    if elem:
                        buckets.setdefault(w, []).append(elem)
        weights[d] = _bucket_ranks(buckets)
    return GradedCharacter(n=n, weights=weights)

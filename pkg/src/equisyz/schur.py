"""Degree-truncated symmetric functions in the Schur basis.

A :class:`SchurSeries` is a finite integer combination of Schur functions
``s_lam`` together with an explicit truncation degree D.  Every operation
truncates its result, so a series is always an honest window (all degrees
up to D are exact, nothing above D is stored).  Products are expanded with
the Littlewood-Richardson rule; ``omega`` conjugates every index, which is
the symmetric-to-exterior transpose at the level of characters.

Series are immutable after construction and all operations are pure, so
values can be shared freely across threads.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations

from .partitions import (
    Partition,
    check_partition,
    conjugate,
    contains,
    kostka_number,
    lr_coefficient,
    partition_sort_key,
    partitions_of,
    weyl_dimension,
)


@cache
def _pair_product(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    """Full Schur expansion of s_mu * s_nu (homogeneous of degree |mu|+|nu|)."""
    if not mu:
        return ((nu, 1),)
    if not nu:
        return ((mu, 1),)
    total = sum(mu) + sum(nu)
    out = []
    for lam in partitions_of(total, max_parts=len(mu) + len(nu)):
        if lam[0] > mu[0] + nu[0] or not contains(lam, mu):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((lam, c))
    return tuple(out)


class SchurSeries:
    """Truncated formal sum of Schur functions with exact integer coefficients."""

    __slots__ = ("coeffs", "degree")

    def __init__(self, coeffs=None, *, degree: int):
        if degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        clean: dict[Partition, int] = {}
        if coeffs:
            for lam, c in coeffs.items():
                lam = check_partition(lam)
                if c and sum(lam) <= degree:
                    clean[lam] = clean.get(lam, 0) + int(c)
        self.coeffs = clean
        self.degree = degree

    @classmethod
    def _make(cls, coeffs: dict, degree: int) -> "SchurSeries":
        # internal fast path: keys already canonical, zeros already dropped
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        obj.degree = degree
        return obj

    @classmethod
    def from_pairs(cls, pairs, *, degree: int) -> "SchurSeries":
        """Build a series from (partition, coefficient) pairs."""
        return cls({tuple(lam): c for lam, c in pairs}, degree=degree)

    # -- queries ---------------------------------------------------------

    def coefficient(self, lam) -> int:
        return self.coeffs.get(tuple(lam), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def min_degree(self) -> int | None:
        """Lowest degree with a nonzero coefficient, or None for the zero series."""
        if not self.coeffs:
            return None
        return min(sum(lam) for lam in self.coeffs)

    def items(self) -> list[tuple[Partition, int]]:
        """Coefficients in the canonical partition order."""
        return sorted(self.coeffs.items(), key=lambda kv: partition_sort_key(kv[0]))

    def to_pairs(self) -> list[list]:
        """JSON-ready [[partition-as-list, coefficient], ...] in canonical order."""
        return [[list(lam), c] for lam, c in self.items()]

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for lam, c in self.items():
            term = "1" if not lam else "s[" + ",".join(map(str, lam)) + "]"
            mag = abs(c)
            body = term if mag == 1 and lam else (str(mag) if not lam else f"{mag}*{term}")
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"<SchurSeries {self.pretty()} (deg <= {self.degree})>"

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        # equality of coefficient data; the truncation window is not compared
        if isinstance(other, int):
            return self.coeffs == ({(): other} if other else {})
        if isinstance(other, SchurSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None  # mutable dict inside; value semantics only

    # -- ring operations -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return SchurSeries._make({(): other} if other else {}, self.degree)
        if isinstance(other, SchurSeries):
            return other
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        degree = min(self.degree, rhs.degree)
        out = {k: c for k, c in self.coeffs.items() if sum(k) <= degree}
        for k, c in rhs.coeffs.items():
            if sum(k) > degree:
                continue
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return SchurSeries._make(out, degree)

    __radd__ = __add__

    def __neg__(self):
        return SchurSeries._make({k: -c for k, c in self.coeffs.items()}, self.degree)

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return SchurSeries._make({}, self.degree)
            return SchurSeries._make(
                {k: c * other for k, c in self.coeffs.items()}, self.degree
            )
        if not isinstance(other, SchurSeries):
            return NotImplemented
        degree = min(self.degree, other.degree)
        acc: dict[Partition, int] = {}
        for mu, a in self.coeffs.items():
            dmu = sum(mu)
            if dmu > degree:
                continue
            for nu, b in other.coeffs.items():
                if dmu + sum(nu) > degree:
                    continue
                ab = a * b
                for lam, c in _pair_product(mu, nu):
                    v = acc.get(lam, 0) + ab * c
                    if v:
                        acc[lam] = v
                    else:
                        del acc[lam]
        return SchurSeries._make(acc, degree)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.invert() ** (-k)
        out = SchurSeries._make({(): 1}, self.degree)
        for _ in range(k):
            out = out * self
        return out

    def invert(self) -> "SchurSeries":
        """Multiplicative inverse up to the truncation degree.

        Only defined when the constant term is +1 or -1 (the units of the
        integer coefficient ring); computed degree by degree.
        """
        c0 = self.coeffs.get((), 0)
        if c0 not in (1, -1):
            raise ValueError(
                "series is not invertible: constant term must be +1 or -1, "
                f"got {c0}"
            )
        D = self.degree
        f_parts = [self.graded_part(d) for d in range(D + 1)]
        g_parts = [SchurSeries._make({(): c0}, D)]
        for d in range(1, D + 1):
            s = SchurSeries._make({}, D)
            for e in range(1, d + 1):
                if f_parts[e]:
                    s = s + f_parts[e] * g_parts[d - e]
            g_parts.append((-c0) * s)
        total: dict[Partition, int] = {}
        for part in g_parts:
            total.update(part.coeffs)
        return SchurSeries._make(total, D)

    # -- structural operations ---------------------------------------------

    def omega(self) -> "SchurSeries":
        """The involution sending s_lam to s_{lam'} (conjugate every index)."""
        return SchurSeries._make(
            {conjugate(k): c for k, c in self.coeffs.items()}, self.degree
        )

    def truncate(self, k: int) -> "SchurSeries":
        """Sub-series of degree <= k; the truncation window stays at D."""
        if not 0 <= k <= self.degree:
            raise ValueError(f"truncation bound {k} outside 0..{self.degree}")
        return SchurSeries._make(
            {lam: c for lam, c in self.coeffs.items() if sum(lam) <= k}, self.degree
        )

    def graded_part(self, d: int) -> "SchurSeries":
        """Homogeneous degree-d component."""
        if not 0 <= d <= self.degree:
            raise ValueError(f"degree {d} outside 0..{self.degree}")
        return SchurSeries._make(
            {lam: c for lam, c in self.coeffs.items() if sum(lam) == d}, self.degree
        )

    def dimension(self, n: int, d: int) -> int:
        """Dimension of the degree-d part evaluated in n variables."""
        if not 0 <= d <= self.degree:
            raise ValueError(f"degree {d} outside 0..{self.degree}")
        return sum(
            c * weyl_dimension(lam, n)
            for lam, c in self.coeffs.items()
            if sum(lam) == d
        )


def zero(degree: int) -> SchurSeries:
    return SchurSeries({}, degree=degree)


def one(degree: int) -> SchurSeries:
    return SchurSeries({(): 1}, degree=degree)


def sigma(degree: int) -> SchurSeries:
    """The full symmetric-algebra character 1 + s_1 + s_2 + ... up to D."""
    return SchurSeries(
        {((i,) if i else ()): 1 for i in range(degree + 1)}, degree=degree
    )


@cache
def sigma_power(degree: int, k: int) -> SchurSeries:
    """Cached sigma(degree) ** k; negative k goes through the inverse."""
    if k == 0:
        return one(degree)
    if k == -1:
        return sigma(degree).invert()
    if k < 0:
        return sigma_power(degree, k + 1) * sigma_power(degree, -1)
    return sigma_power(degree, k - 1) * sigma(degree)


def from_weight_multiplicities(weights, d: int, n: int) -> SchurSeries:
    """Recover a degree-d Schur expansion from weight multiplicities in n variables.

    ``weights`` maps length-n compositions of d to weight-space dimensions
    (missing keys mean zero).  Repeatedly strips the lexicographically
    largest dominant weight and subtracts the corresponding Kostka row.
    Requires n >= d so all partitions of d are visible.  Raises ValueError
    when the input is not permutation-symmetric or some multiplicity comes
    out negative - i.e. when it is not a polynomial character.
    """
    if n < d:
        raise ValueError(f"need n >= d for a faithful expansion, got n={n}, d={d}")
    residual: dict[tuple[int, ...], int] = {}
    for w, mult in weights.items():
        w = tuple(w)
        if len(w) != n or any(x < 0 for x in w) or sum(w) != d:
            raise ValueError(f"weight {w!r} is not a composition of {d} into {n} parts")
        if mult:
            residual[w] = residual.get(w, 0) + int(mult)

    # symmetry check over whole permutation orbits
    for canon in {tuple(sorted(w, reverse=True)) for w in residual}:
        vals = {residual.get(w, 0) for w in set(permutations(canon))}
        if len(vals) != 1:
            raise ValueError(
                f"weight multiplicities are not symmetric on the orbit of {canon}"
            )

    out: dict[Partition, int] = {}
    while residual:
        dominant = [w for w in residual if all(w[i] >= w[i + 1] for i in range(n - 1))]
        if not dominant:
            raise ValueError("not a polynomial character: no dominant weight left")
        top = max(dominant)
        mult = residual[top]
        if mult < 0:
            raise ValueError(
                f"not a polynomial character: multiplicity {mult} at weight {top}"
            )
        lam = tuple(p for p in top if p)
        out[lam] = mult
        for mu in partitions_of(d, max_parts=n):
            k = kostka_number(lam, mu)
            if not k:
                continue
            sub = mult * k
            padded = mu + (0,) * (n - len(mu))
            for w in set(permutations(padded)):
                v = residual.get(w, 0) - sub
                if v:
                    residual[w] = v
                else:
                    residual.pop(w, None)
    return SchurSeries(out, degree=d)

"""Equivariant Betti tables of linear resolutions.

For a module generated in degree t with a linear resolution, the alternating
Schur expansion of sigma^-m times its Hilbert series carries one column of
Tor multiplicities per degree.  This module extracts those columns (and
validates the sign pattern that linearity forces), computes regularity, and
transposes tables to the exterior side by conjugating every index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .schur import SchurSeries, sigma_power


class LinearityError(ValueError):
    """The series is not consistent with a linear resolution."""

    def __init__(self, degree, partition, coefficient):
        self.degree = degree
        self.partition = partition
        self.coefficient = coefficient
        super().__init__(
            "series is not consistent with a linear resolution: "
            f"coefficient {coefficient} of s{list(partition)} in degree {degree} "
            "has the wrong sign"
        )


class GenerationDegreeError(ValueError):
    """sigma^-m times the series is nonzero below the stated generation degree."""


@dataclass(frozen=True)
class BettiTable:
    """Columns of Tor multiplicities for a t-linear resolution.

    ``columns[i]`` is the character of the i-th syzygy space, a nonnegative
    Schur series concentrated in degree i + t.
    """

    t: int
    columns: tuple[SchurSeries, ...]

    def __post_init__(self):
        for i, col in enumerate(self.columns):
            for lam, c in col.coeffs.items():
                if sum(lam) != i + self.t:
                    raise ValueError(
                        f"column {i} has a term of degree {sum(lam)}, expected {i + self.t}"
                    )
                if c < 0:
                    raise ValueError(f"column {i} has a negative multiplicity")

    @property
    def max_index(self) -> int:
        return len(self.columns) - 1

    @property
    def truncation(self) -> int:
        return self.t + self.max_index

    def column(self, i: int) -> SchurSeries:
        return self.columns[i]

    def to_dict(self) -> dict:
        """JSON-ready representation with columns in homological order."""
        return {
            "t": self.t,
            "columns": [
                {"i": i, "degree": i + self.t, "terms": col.to_pairs()}
                for i, col in enumerate(self.columns)
            ],
        }


def betti_from_series(series: SchurSeries, ambient_dim: int, t: int) -> BettiTable:
    """Extract the Betti table of a t-linear resolution from a Hilbert series.

    Multiplies by sigma^-ambient_dim, checks that nothing survives below
    degree t and that the degree-d coefficients all carry sign (-1)^(d-t),
    then stores column i as (-1)^i times the degree i+t part so every kept
    multiplicity is nonnegative.
    """
    if t < 0:
        raise ValueError("generation degree must be nonnegative")
    D = series.degree
    if D < t:
        raise ValueError(f"series truncation {D} below generation degree {t}")
    reduced = series * sigma_power(D, -ambient_dim)
    for d in range(t):
        part = reduced.graded_part(d)
        if part:
            raise GenerationDegreeError(
                f"generation degree mismatch: sigma^-{ambient_dim} * series has "
                f"nonzero terms in degree {d} < {t}"
            )
    columns = []
    for i in range(D - t + 1):
        d = i + t
        part = reduced.graded_part(d)
        sign = -1 if i % 2 else 1
        for lam, c in part.coeffs.items():
            if c * sign < 0:
                raise LinearityError(d, lam, c)
        columns.append(sign * part)
    return BettiTable(t, tuple(columns))


def regularity(table: BettiTable) -> int:
    """Largest internal degree minus homological index over nonzero columns."""
    degrees = [
        max(sum(lam) for lam in col.coeffs) - i
        for i, col in enumerate(table.columns)
        if col.coeffs
    ]
    if not degrees:
        raise ValueError("empty Betti table has no regularity")
    return max(degrees)


def transpose_table(table: BettiTable) -> BettiTable:
    """Conjugate every index: the table of the transposed (exterior) module."""
    return BettiTable(table.t, tuple(col.omega() for col in table.columns))


def series_from_betti(table: BettiTable, ambient_dim: int) -> SchurSeries:
    """Euler-characteristic reconstruction: alternating sum of sigma^m * column."""
    if not table.columns:
        raise ValueError("empty Betti table")
    D = table.columns[0].degree
    total = SchurSeries({}, degree=D)
    for i, col in enumerate(table.columns):
        term = sigma_power(D, ambient_dim) * col
        total = total - term if i % 2 else total + term
    return total

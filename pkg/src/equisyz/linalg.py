"""Exact rational linear algebra for subspaces of Q^m.

Everything runs on :class:`fractions.Fraction`, so rank decisions are
exact.  A subspace is stored as the reduced row echelon basis of its row
space; RREF is canonical, hence equality of subspaces is equality of
representations and subspaces can be used as dictionary keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Vector = tuple[Fraction, ...]


def row_reduce(rows) -> tuple[tuple[Vector, ...], int]:
    """Reduced row echelon form and rank, computed exactly.

    Returns a matrix of the same shape with unit pivots, zeros above and
    below every pivot, and zero rows collected at the bottom.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return (), 0
    ncols = len(mat[0])
    if any(len(r) != ncols for r in mat):
        raise ValueError("ragged matrix")
    pivot_row = 0
    for col in range(ncols):
        sel = next((r for r in range(pivot_row, len(mat)) if mat[r][col]), None)
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        inv = mat[pivot_row][col]
        mat[pivot_row] = [x / inv for x in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return tuple(tuple(row) for row in mat), pivot_row


def _pivot_columns(rref_rows) -> list[int]:
    pivots = []
    for row in rref_rows:
        lead = next((i for i, x in enumerate(row) if x), None)
        if lead is not None:
            pivots.append(lead)
    return pivots


def _nullspace(rref_rows, ncols: int) -> list[Vector]:
    """Basis of the right nullspace of a matrix already in RREF."""
    pivots = _pivot_columns(rref_rows)
    pivot_set = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -rref_rows[r][free]
        out.append(tuple(vec))
    return out


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^m in canonical form.

    ``basis`` holds the RREF rows spanning the subspace (no zero rows), so
    two Subspace values compare equal exactly when they are the same
    subspace.  Construct through :meth:`from_vectors`.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        for row in self.basis:
            if len(row) != self.ambient_dim:
                raise ValueError("basis vector length differs from ambient dimension")
        rref, rank = row_reduce(self.basis)
        if rank != len(self.basis) or rref[:rank] != self.basis:
            raise ValueError("basis is not in reduced row echelon form")

    @staticmethod
    def from_vectors(vectors, ambient_dim: int) -> "Subspace":
        """Canonical subspace spanned by the given vectors (possibly none)."""
        rows = []
        for v in vectors:
            row = tuple(Fraction(x) for x in v)
            if len(row) != ambient_dim:
                raise ValueError(
                    f"vector length {len(row)} differs from ambient dimension {ambient_dim}"
                )
            rows.append(row)
        rref, rank = row_reduce(rows)
        return Subspace(ambient_dim, rref[:rank])

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        rows = tuple(
            tuple(Fraction(int(i == j)) for j in range(ambient_dim))
            for i in range(ambient_dim)
        )
        return Subspace(ambient_dim, rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector) -> bool:
        vec = [Fraction(x) for x in vector]
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length differs from ambient dimension")
        for row in self.basis:
            lead = next(i for i, x in enumerate(row) if x)
            if vec[lead]:
                f = vec[lead]
                vec = [a - f * b for a, b in zip(vec, row)]
        return not any(vec)

    def annihilator(self) -> "Subspace":
        """Vectors orthogonal to the subspace; read as linear forms they
        vanish exactly on it.  Has dimension m - dim."""
        return Subspace.from_vectors(
            _nullspace(self.basis, self.ambient_dim), self.ambient_dim
        )


def subspace_from_vectors(vectors, ambient_dim: int) -> Subspace:
    return Subspace.from_vectors(vectors, ambient_dim)


def intersect(subspaces) -> Subspace:
    """Intersection of one or more subspaces of the same ambient space.

    Computed by stacking the annihilators and taking the annihilator of
    their span, which is exact and lands back in canonical form.
    """
    subs = list(subspaces)
    if not subs:
        raise ValueError("intersect needs at least one subspace")
    m = subs[0].ambient_dim
    if any(s.ambient_dim != m for s in subs):
        raise ValueError("ambient dimension mismatch between subspaces")
    if len(subs) == 1:
        return subs[0]
    normals = [row for s in subs for row in s.annihilator().basis]
    return Subspace.from_vectors(normals, m).annihilator()

"""Minimal kernel degree of a square pencil via the stacked block matrix.

For the pencil M0 + x*M1, the block matrix with M0 on the diagonal and M1 on
the first block subdiagonal (d+1 block columns, d+2 block rows) has linearly
dependent columns exactly when a nonzero vector polynomial f(x) of degree
<= d satisfies (M0 + x*M1) f(x) = 0. The smallest such d is the minimal
index; a singular n x n pencil always has one below n, so the search is
bounded. Inputs are general square pencils: the machinery does not need the
nonzero-coefficient hypothesis of the Toeplitz construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .linalg import Mat, Poly, PolyMat, ShapeError, poly_vec_apply
from .pencil import PencilInstance, build_M0, build_M1


@dataclass(frozen=True)
class BlockPencil:
    M0: Mat
    M1: Mat

    def __post_init__(self):
        if self.M0.rows != self.M0.cols or self.M1.rows != self.M1.cols:
            raise ShapeError("pencil matrices must be square")
        if self.M0.rows != self.M1.rows:
            raise ShapeError("pencil matrices must have equal size")

    @property
    def n(self) -> int:
        return self.M0.rows

    @classmethod
    def from_pencil(cls, p: PencilInstance) -> "BlockPencil":
        return cls(build_M0(p), build_M1(p))

    def as_polymat(self) -> PolyMat:
        f = self.M0.field
        return PolyMat(
            f,
            [
                [Poly(f, [self.M0[i, j], self.M1[i, j]]) for j in range(self.n)]
                for i in range(self.n)
            ],
        )


@dataclass(frozen=True)
class KroneckerResult:
    minimal_index_d: Optional[int]
    kernel_poly: Optional[List[Poly]]  # f with (M0 + x*M1) f(x) = 0, deg f = d


def build_C(bp: BlockPencil, d: int) -> Mat:
    """The ((d+2)*n) x ((d+1)*n) stacked matrix; block column j holds the
    coefficient slot of x^j in a candidate kernel polynomial."""
    if d < 0:
        raise ValueError("block depth must be nonnegative")
    n = bp.n
    field = bp.M0.field
    z = field.zero
    rows = []
    for bi in range(d + 2):
        for i in range(n):
            row = []
            for bj in range(d + 1):
                if bi == bj:
                    row.extend(bp.M0.data[i])
                elif bi == bj + 1:
                    row.extend(bp.M1.data[i])
                else:
                    row.extend([z] * n)
            rows.append(row)
    return Mat(field, rows)


def minimal_index(bp: BlockPencil) -> Optional[int]:
    """Smallest d with rank-deficient stacked matrix; None for a regular
    pencil. Independence of the first n*d columns is automatic: they form
    the full-column-rank stacked matrix of depth d-1 padded with zero rows."""
    n = bp.n
    for d in range(n):
        if build_C(bp, d).rank() < n * (d + 1):
            return d
    return None


def kernel_poly(bp: BlockPencil) -> Optional[List[Poly]]:
    """A minimal-degree nonzero f(x) with (M0 + x*M1) f(x) = 0, or None for a
    regular pencil. The identity is re-verified exactly before returning."""
    d = minimal_index(bp)
    if d is None:
        return None
    n = bp.n
    field = bp.M0.field
    vec = build_C(bp, d).kernel_basis()[0]
    f = [Poly(field, [vec[k * n + i] for k in range(d + 1)]) for i in range(n)]
    residual = poly_vec_apply(bp.as_polymat(), f)
    assert all(r.is_zero for r in residual), "kernel vector fails the pencil identity"
    degrees = [fi.degree for fi in f if not fi.is_zero]
    assert degrees and max(degrees) == d, "kernel vector degree disagrees with minimal index"
    return f


def analyze(bp: BlockPencil) -> KroneckerResult:
    f = kernel_poly(bp)
    if f is None:
        return KroneckerResult(minimal_index_d=None, kernel_poly=None)
    degrees = [fi.degree for fi in f if not fi.is_zero]
    return KroneckerResult(minimal_index_d=max(degrees), kernel_poly=f)

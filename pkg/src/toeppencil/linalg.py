"""Dense exact matrices and univariate polynomials over an exact field.

Determinants use fraction-free (Bareiss) elimination, which is exact over any
integral domain; this is what lets the same code compute determinants of
matrices whose entries are themselves polynomials, without interpolation.
Rank, kernel and inverse use Gauss-Jordan with exact field division.

All objects are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple


class ShapeError(ValueError):
    """Raised on dimension mismatches (non-square determinant, bad products)."""


class SingularMatrixError(ValueError):
    """Raised when inverting a singular matrix."""


class Mat:
    """Immutable dense matrix over one exact field."""

    __slots__ = ("field", "data", "rows", "cols")

    def __init__(self, field, rows: Sequence[Sequence]):
        self.field = field
        self.data = tuple(tuple(r) for r in rows)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        for r in self.data:
            if len(r) != self.cols:
                raise ShapeError("ragged rows")

    @classmethod
    def identity(cls, field, n: int) -> "Mat":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, r: int, c: int) -> "Mat":
        z = field.zero
        return cls(field, [[z] * c for _ in range(r)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.data[i][j] == other.data[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.data)
        return f"Mat[{body}]"

    def __add__(self, other: "Mat") -> "Mat":
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("addition shape mismatch")
        return Mat(
            self.field,
            [
                [self.data[i][j] + other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __neg__(self) -> "Mat":
        return Mat(self.field, [[-e for e in row] for row in self.data])

    def __mul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ShapeError("product shape mismatch")
        z = self.field.zero
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                s = z
                for k in range(self.cols):
                    s = s + self.data[i][k] * other.data[k][j]
                row.append(s)
            out.append(row)
        return Mat(self.field, out)

    def scale(self, c) -> "Mat":
        return Mat(self.field, [[c * e for e in row] for row in self.data])

    def transpose(self) -> "Mat":
        return Mat(
            self.field,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def leading(self, k: int) -> "Mat":
        """Leading principal k x k submatrix."""
        return Mat(self.field, [row[:k] for row in self.data[:k]])

    def drop_row_col(self, row: Optional[int], col: Optional[int]) -> "Mat":
        rows = [
            [e for j, e in enumerate(r) if j != col]
            for i, r in enumerate(self.data)
            if i != row
        ]
        return Mat(self.field, rows)

    def det(self):
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ShapeError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return self.field.one
        a = [list(row) for row in self.data]
        z, one = self.field.zero, self.field.one
        prev = one
        sign = 1
        for k in range(n - 1):
            if a[k][k] == z:
                for i in range(k + 1, n):
                    if a[i][k] != z:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return z
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev
                a[i][k] = z
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return d if sign == 1 else -d

    def _row_echelon(self):
        """Row echelon form with exact division; returns (rows, pivot cols)."""
        a = [list(row) for row in self.data]
        z = self.field.zero
        pivots: List[int] = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, self.rows):
                if a[i][c] != z:
                    pr = i
                    break
            if pr is None:
                continue
            a[r], a[pr] = a[pr], a[r]
            inv = self.field.inv(a[r][c])
            a[r] = [e * inv for e in a[r]]
            for i in range(self.rows):
                if i != r and a[i][c] != z:
                    f = a[i][c]
                    a[i] = [ei - f * er for ei, er in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return a, pivots

    def rank(self) -> int:
        _, pivots = self._row_echelon()
        return len(pivots)

    def kernel_basis(self) -> List[Tuple]:
        """Basis of the right null space, deterministic (free columns ascending,
        leftmost pivots first); empty list iff full column rank."""
        a, pivots = self._row_echelon()
        z, o = self.field.zero, self.field.one
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [z] * self.cols
            v[f] = o
            for r, c in enumerate(pivots):
                v[c] = -a[r][f]
            basis.append(tuple(v))
        return basis

    def inv(self) -> "Mat":
        if self.rows != self.cols:
            raise ShapeError("inverse of non-square matrix")
        n = self.rows
        z = self.field.zero
        aug = [
            list(self.data[i]) + list(Mat.identity(self.field, n).data[i])
            for i in range(n)
        ]
        for c in range(n):
            pr = None
            for i in range(c, n):
                if aug[i][c] != z:
                    pr = i
                    break
            if pr is None:
                raise SingularMatrixError("matrix is singular")
            aug[c], aug[pr] = aug[pr], aug[c]
            invp = self.field.inv(aug[c][c])
            aug[c] = [e * invp for e in aug[c]]
            for i in range(n):
                if i != c and aug[i][c] != z:
                    f = aug[i][c]
                    aug[i] = [ei - f * er for ei, er in zip(aug[i], aug[c])]
        return Mat(self.field, [row[n:] for row in aug])


def mat_vec(M: Mat, v: Sequence) -> Tuple:
    if M.cols != len(v):
        raise ShapeError("matrix-vector shape mismatch")
    z = M.field.zero
    out = []
    for i in range(M.rows):
        s = z
        for j in range(M.cols):
            s = s + M.data[i][j] * v[j]
        out.append(s)
    return tuple(out)


def vec_mat(w: Sequence, M: Mat) -> Tuple:
    if len(w) != M.rows:
        raise ShapeError("vector-matrix shape mismatch")
    z = M.field.zero
    out = []
    for j in range(M.cols):
        s = z
        for i in range(M.rows):
            s = s + w[i] * M.data[i][j]
        out.append(s)
    return tuple(out)


def dot(u: Sequence, v: Sequence, field) -> object:
    if len(u) != len(v):
        raise ShapeError("dot-product length mismatch")
    s = field.zero
    for a, b in zip(u, v):
        s = s + a * b
    return s


class Poly:
    """Univariate polynomial with exact field coefficients, canonical form.

    ``coeffs[k]`` is the coefficient of x^k; trailing zeros are stripped so
    the zero polynomial is the empty tuple. ``degree`` is ``None`` for the
    zero polynomial, deliberately not an integer.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Sequence):
        z = field.zero
        cs = list(coeffs)
        while cs and cs[-1] == z:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field) -> "Poly":
        return cls(field, [])

    @classmethod
    def const(cls, field, c) -> "Poly":
        return cls(field, [c])

    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, [field.zero, field.one])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, k: int):
        return self.coeffs[k] if k < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(k) + other.coeff(k) for k in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self.coeff(k) - other.coeff(k) for k in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        z = self.field.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == z:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    def scale(self, c) -> "Poly":
        return Poly(self.field, [c * a for a in self.coeffs])

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient self / other, required to be exact (zero remainder)."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return Poly.zero(self.field)
        z = self.field.zero
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            raise ValueError("inexact polynomial division")
        lead_inv = self.field.inv(other.coeffs[-1])
        quo = [z] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] * lead_inv
            quo[k] = c
            if c != z:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        if any(r != z for r in rem):
            raise ValueError("inexact polynomial division")
        return Poly(self.field, quo)

    def __call__(self, x0):
        s = self.field.zero
        for c in reversed(self.coeffs):
            s = s * x0 + c
        return s

    def __repr__(self):
        if self.is_zero:
            return "Poly[0]"
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c != self.field.zero]
        return "Poly[" + " + ".join(terms) + "]"

    def __str__(self):
        return repr(self)


class PolyMat:
    """Dense matrix of polynomials over one field."""

    __slots__ = ("field", "data", "rows", "cols")

    def __init__(self, field, rows: Sequence[Sequence[Poly]]):
        self.field = field
        self.data = tuple(tuple(r) for r in rows)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        for r in self.data:
            if len(r) != self.cols:
                raise ShapeError("ragged rows")

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def eval_at(self, x0) -> Mat:
        return Mat(self.field, [[e(x0) for e in row] for row in self.data])

    def det(self) -> Poly:
        """Determinant polynomial by fraction-free elimination over the
        polynomial ring; every interior division is exact (Bareiss identity)."""
        if self.rows != self.cols:
            raise ShapeError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return Poly.const(self.field, self.field.one)
        a = [list(row) for row in self.data]
        prev = Poly.const(self.field, self.field.one)
        sign = 1
        for k in range(n - 1):
            if a[k][k].is_zero:
                for i in range(k + 1, n):
                    if not a[i][k].is_zero:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return Poly.zero(self.field)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
                a[i][k] = Poly.zero(self.field)
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return d if sign == 1 else -d


def poly_vec_apply(T: PolyMat, f: Sequence[Poly]) -> List[Poly]:
    """T(x) * f(x) as a vector of polynomials."""
    if T.cols != len(f):
        raise ShapeError("polynomial matrix-vector shape mismatch")
    out = []
    for i in range(T.rows):
        s = Poly.zero(T.field)
        for j in range(T.cols):
            s = s + T.data[i][j] * f[j]
        out.append(s)
    return out

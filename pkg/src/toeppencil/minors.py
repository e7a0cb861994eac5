"""Principal minors of M0 and the closed forms built from them.

All formulas here assume the leading coefficient is normalized to 1; the
public entry points accept unnormalized instances and normalize internally.
m_r is the determinant of the leading r x r block of M0, with m_0 = 1.
The closed forms: the inverse of Q is again lower-triangular Toeplitz with
entries (-1)^(i+j) m_{i-j}; Q^{-1} v is the alternating minor vector; X is
Q^{-1} with its first row and last column deleted; y is the alternating
minor vector shifted by one; det X = (-1)^n c_{n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .linalg import Mat
from .pencil import PencilInstance, build_M0, normalize_c1


class DimensionError(ValueError):
    """Raised for minor-formula sizes that do not exist (e.g. det X at n < 3)."""


@dataclass(frozen=True)
class MinorVector:
    field: object
    n: int
    m: Tuple  # m[0] = m_0 = 1, ..., m[n] = m_n

    def __post_init__(self):
        if len(self.m) != self.n + 1:
            raise DimensionError("minor vector must have n+1 entries")


@dataclass(frozen=True)
class SMObjects:
    X: Mat
    y: Tuple
    P: Mat  # anti-diagonal exchange matrix, same size as X


def principal_minors(p: PencilInstance) -> MinorVector:
    pn = normalize_c1(p)
    M0 = build_M0(pn)
    ms = [p.field.one]
    for r in range(1, p.n + 1):
        ms.append(M0.leading(r).det())
    return MinorVector(field=p.field, n=p.n, m=tuple(ms))


def _signed_minor(mv: MinorVector, i: int, j: int):
    """(-1)^(i+j) m_{i-j}, zero when i < j (1-based indices)."""
    if i < j:
        return mv.field.zero
    m = mv.m[i - j]
    return m if (i + j) % 2 == 0 else -m


def q_inverse_closed_form(mv: MinorVector) -> Mat:
    """Closed-form inverse of Q: lower-triangular Toeplitz in the minors."""
    n = mv.n
    return Mat(
        mv.field,
        [[_signed_minor(mv, i, j) for j in range(1, n)] for i in range(1, n)],
    )


def q_inv_v_closed_form(mv: MinorVector) -> Tuple:
    """Q^{-1} v = (m_1, -m_2, m_3, ..., (-1)^(n-2) m_{n-1})."""
    n = mv.n
    out = []
    for i in range(1, n):
        m = mv.m[i]
        out.append(m if i % 2 == 1 else -m)
    return tuple(out)


def build_sm_objects(mv: MinorVector) -> SMObjects:
    n = mv.n
    size = n - 2
    X = Mat(
        mv.field,
        [[_signed_minor(mv, i + 1, j) for j in range(1, size + 1)] for i in range(1, size + 1)],
    )
    y = tuple(
        -mv.m[i + 1] if i % 2 == 1 else mv.m[i + 1] for i in range(1, size + 1)
    )
    z, o = mv.field.zero, mv.field.one
    P = Mat(
        mv.field,
        [[o if i + j == size - 1 else z for j in range(size)] for i in range(size)],
    )
    return SMObjects(X=X, y=y, P=P)


def det_X(mv: MinorVector):
    """det X; equals (-1)^n c_{n-1} of the normalized instance, nonzero."""
    if mv.n < 3:
        raise DimensionError("det X needs n >= 3")
    return build_sm_objects(mv).X.det()


def _leading_minor_of(field, c: List, r: int):
    """det of the leading r x r block of M0 built from c = [c1..c_{r+1}]."""
    z = field.zero
    rows = [
        [c[i - j + 1] if j <= i + 1 else z for j in range(1, r + 1)]
        for i in range(1, r + 1)
    ]
    return Mat(field, rows).det()


def recover_c_from_minors(ms: Sequence, field) -> List:
    """Invert the triangular relation m_r = (-1)^(r+1) c_{r+1} + p_r(c2..cr).

    Input is (m_1, ..., m_n) with the c1 = 1 convention; output is
    (c_2, ..., c_{n+1}), zeros permitted. p_r is obtained by evaluating the
    r-th leading minor with c_{r+1} set to zero, exploiting that the minor is
    linear in its bottom-left entry.
    """
    c = [field.one]
    for r, mr in enumerate(ms, start=1):
        pr = _leading_minor_of(field, c + [field.zero], r)
        diff = mr - pr
        c.append(diff if r % 2 == 1 else -diff)
    return c[1:]

import random
from fractions import Fraction

import pytest

from toeppencil.field import GF, QQ
from toeppencil.linalg import Mat, mat_vec
from toeppencil.minors import (
    DimensionError,
    MinorVector,
    build_sm_objects,
    det_X,
    principal_minors,
    q_inv_v_closed_form,
    q_inverse_closed_form,
    recover_c_from_minors,
)
from toeppencil.pencil import build_pencil, normalize_c1, partition
from oracles import solve_cramer

from conftest import geometric_pencil, random_rational, random_rational_pencil


def qp(*cs):
    return build_pencil([Fraction(c) for c in cs])


def test_minor_examples():
    mv = principal_minors(qp(1, 1, 1, 2))
    assert mv.m == (Fraction(1), Fraction(1), Fraction(0), Fraction(1))


def test_minor_formulas_m1_m2():
    rng = random.Random(43)
    for _ in range(20):
        p = normalize_c1(random_rational_pencil(rng, rng.randint(2, 6)))
        mv = principal_minors(p)
        assert mv.m[0] == 1
        assert mv.m[1] == p.coeff(2)
        assert mv.m[2] == p.coeff(2) ** 2 - p.coeff(3)


def test_geometric_minors_vanish():
    mv = principal_minors(qp(1, 2, 4, 8))
    assert mv.m[2] == 0 and mv.m[3] == 0


def test_q_inverse_closed_form_display_n4():
    mv = principal_minors(qp(1, 2, 3, 4, 5))
    m1, m2 = mv.m[1], mv.m[2]
    expect = Mat(
        QQ,
        [
            [Fraction(1), Fraction(0), Fraction(0)],
            [-m1, Fraction(1), Fraction(0)],
            [m2, -m1, Fraction(1)],
        ],
    )
    assert q_inverse_closed_form(mv) == expect


def test_q_inverse_closed_form_n2():
    mv = principal_minors(qp(1, 3, 2))
    assert q_inverse_closed_form(mv) == Mat(QQ, [[Fraction(1)]])


def test_q_inverse_matches_generic_inverse():
    rng = random.Random(47)
    for n in range(2, 13):
        for _ in range(10):
            p = normalize_c1(random_rational_pencil(rng, n))
            mv = principal_minors(p)
            Q = partition(p).Q
            closed = q_inverse_closed_form(mv)
            assert closed * Q == Mat.identity(QQ, n - 1)
            assert closed == Q.inv()


def test_q_inv_v_closed_form_matches_cramer_solve():
    rng = random.Random(53)
    for n in range(2, 8):
        for _ in range(8):
            p = normalize_c1(random_rational_pencil(rng, n))
            mv = principal_minors(p)
            part = partition(p)
            assert q_inv_v_closed_form(mv) == solve_cramer(part.Q, part.v)


def test_q_inv_v_example():
    p = qp(1, 2, 4, 8)
    mv = principal_minors(p)
    assert q_inv_v_closed_form(mv) == (Fraction(2), Fraction(0))


def test_b_shift_of_q_inv_v():
    rng = random.Random(59)
    for n in range(2, 9):
        p = normalize_c1(random_rational_pencil(rng, n))
        mv = principal_minors(p)
        part = partition(p)
        shifted = mat_vec(part.B, q_inv_v_closed_form(mv))
        closed = q_inv_v_closed_form(mv)[1:] + (QQ.zero,)
        assert shifted == closed


def test_sm_objects_n4():
    mv = principal_minors(qp(1, 2, 3, 4, 5))
    m1, m2, m3 = mv.m[1], mv.m[2], mv.m[3]
    sm = build_sm_objects(mv)
    assert sm.X == Mat(QQ, [[-m1, Fraction(1)], [m2, -m1]])
    assert sm.y == (-m2, m3)
    assert sm.P == Mat(QQ, [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]])


def test_sm_objects_n3_and_n2():
    mv = principal_minors(qp(1, 2, 3, 4))
    sm = build_sm_objects(mv)
    assert sm.X == Mat(QQ, [[-mv.m[1]]])
    assert sm.y == (-mv.m[2],)
    assert sm.P == Mat(QQ, [[Fraction(1)]])

    mv2 = principal_minors(qp(1, 3, 2))
    sm2 = build_sm_objects(mv2)
    assert sm2.X.rows == 0 and sm2.y == ()


def test_x_is_qinv_minus_first_row_last_col():
    rng = random.Random(61)
    for n in range(3, 10):
        p = normalize_c1(random_rational_pencil(rng, n))
        mv = principal_minors(p)
        qinv = q_inverse_closed_form(mv)
        assert build_sm_objects(mv).X == qinv.drop_row_col(0, n - 2)


def test_det_x_property():
    rng = random.Random(67)
    for n in range(3, 13):
        for _ in range(8):
            p = normalize_c1(random_rational_pencil(rng, n))
            mv = principal_minors(p)
            sign = 1 if n % 2 == 0 else -1
            assert det_X(mv) == sign * p.coeff(n - 1)
            assert det_X(mv) != 0


def test_det_x_n3_example():
    mv = principal_minors(qp(1, 2, 4, 8))
    assert det_X(mv) == Fraction(-2)


def test_det_x_dimension_error():
    mv = principal_minors(qp(1, 3, 2))
    with pytest.raises(DimensionError):
        det_X(mv)


def test_px_powers_symmetric():
    rng = random.Random(71)
    for n in range(3, 13):
        p = normalize_c1(random_rational_pencil(rng, n))
        sm = build_sm_objects(principal_minors(p))
        acc = sm.X
        for _ in range(3):
            prod = sm.P * acc
            assert prod == prod.transpose()
            acc = acc * sm.X


def test_recover_c_examples():
    got = recover_c_from_minors([Fraction(2), Fraction(0), Fraction(0)], QQ)
    assert got == [Fraction(2), Fraction(4), Fraction(8)]
    got = recover_c_from_minors([Fraction(1), Fraction(0)], QQ)
    assert got == [Fraction(1), Fraction(1)]


def test_recover_roundtrip_both_directions():
    rng = random.Random(73)
    for n in range(2, 9):
        for _ in range(10):
            ms = [random_rational(rng) for _ in range(n)]
            cs = recover_c_from_minors(ms, QQ)
            # forward check against the minor definition, zeros permitted in c
            from toeppencil.minors import _leading_minor_of

            full = [QQ.one] + cs
            for r in range(1, n + 1):
                assert _leading_minor_of(QQ, full[: r + 1], r) == ms[r - 1]
            # and when all c are nonzero, through the public pencil path
            if all(ci != 0 for ci in cs):
                p = build_pencil(full)
                assert principal_minors(p).m[1:] == tuple(ms)


def test_recover_over_gf():
    gf = GF(7)
    ms = [gf.of(3), gf.of(0), gf.of(0), gf.of(0)]
    cs = recover_c_from_minors(ms, gf)
    # all-later-minors-zero forces the geometric sequence c_k = c_2^(k-1)
    assert cs == [gf.of(3), gf.of(2), gf.of(6), gf.of(4)]


def test_geometric_iff_trailing_minors_vanish():
    for lam in (Fraction(2), Fraction(-1), Fraction(1, 2)):
        mv = principal_minors(geometric_pencil(lam, 6))
        assert all(mv.m[r] == 0 for r in range(2, 7))
    rng = random.Random(79)
    for _ in range(20):
        p = random_rational_pencil(rng, 5)
        mv = principal_minors(p)
        from toeppencil.pencil import is_geometric

        trailing_zero = all(mv.m[r] == 0 for r in range(2, 6))
        assert (is_geometric(p) is not None) == trailing_zero

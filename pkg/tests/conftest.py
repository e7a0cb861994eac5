import random
from fractions import Fraction

from toeppencil.field import PrimeField, QQ
from toeppencil.pencil import build_pencil


def random_rational(rng: random.Random, span: int = 4) -> Fraction:
    num = rng.randint(-span, span)
    den = rng.choice([1, 1, 2, 3])
    return Fraction(num, den)


def random_nonzero_rational(rng: random.Random, span: int = 4) -> Fraction:
    num = rng.choice([k for k in range(-span, span + 1) if k != 0])
    den = rng.choice([1, 1, 2, 3])
    return Fraction(num, den)


def random_rational_pencil(rng: random.Random, n: int):
    return build_pencil([random_nonzero_rational(rng) for _ in range(n + 1)])


def random_gf_pencil(rng: random.Random, n: int, p: int):
    gf = PrimeField(p)
    return build_pencil([gf.of(rng.randrange(1, p)) for _ in range(n + 1)], gf)


def geometric_pencil(lam: Fraction, n: int, c1: Fraction = Fraction(1)):
    c = [c1]
    for _ in range(n):
        c.append(c[-1] * lam)
    return build_pencil(c)

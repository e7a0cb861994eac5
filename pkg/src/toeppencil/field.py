"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields GF(p).

Rationals are plain ``fractions.Fraction`` values (always reduced, positive
denominator). Prime-field residues are ``GFElement`` instances kept in the
canonical range [0, p). Mixing elements of different fields is a hard error,
never a coercion; plain Python ints embed into either field. There is no
floating-point path anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class FieldMismatchError(TypeError):
    """Raised when an operation combines elements of different fields."""


class NotPrimeError(ValueError):
    """Raised when a prime-field modulus fails the primality check."""


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality test (moduli here are small)."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class GFElement:
    """A residue in GF(p), stored canonically in [0, p)."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise FieldMismatchError(
                    f"mixed moduli: GF({self.p}) vs GF({other.p})"
                )
            return other
        if isinstance(other, int):
            return GFElement(other, self.p)
        if isinstance(other, Fraction):
            raise FieldMismatchError("cannot mix rational and GF(p) elements")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.val + o.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.val - o.val, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(o.val - self.val, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GFElement(self.val * o.val, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElement(-self.val, self.p)

    def inverse(self) -> "GFElement":
        if self.val == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return GFElement(pow(self.val, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return GFElement(pow(self.val, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"GF({self.p})[{self.val}]"

    def __str__(self):
        return str(self.val)


class RationalField:
    """The field of rationals; elements are ``Fraction`` values."""

    kind = "rational"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def of(self, x) -> Fraction:
        return Fraction(x)

    def parse(self, s: str) -> Fraction:
        # accepts "p", "-p", "p/q"
        return Fraction(s.strip())

    def inv(self, a: Fraction) -> Fraction:
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime modulus p; elements are ``GFElement`` values."""

    kind = "prime-field"

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        self.p = p

    @property
    def zero(self):
        return GFElement(0, self.p)

    @property
    def one(self):
        return GFElement(1, self.p)

    def of(self, x: int) -> GFElement:
        return GFElement(x, self.p)

    def parse(self, s: str) -> GFElement:
        return GFElement(int(s.strip()), self.p)

    def inv(self, a: GFElement) -> GFElement:
        return a.inverse()

    def elements(self):
        for v in range(self.p):
            yield GFElement(v, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime-field", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def format_scalar(a) -> str:
    """Exact text form: 'p/q' or 'p' for rationals, decimal residue for GF(p)."""
    return str(a)

"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

Scalars are plain values (Fraction over the rationals, int in [0, p) over a
prime field); a field object supplies the operations.  The prime-field
minimum needed to run the exponential-series group action is recorded per
root system: the series divides by k! for k up to height(highest root)-1,
and we additionally insist the characteristic clears the highest root
height itself, giving p >= 13 for F4 and p >= 7 for G2.
"""

from __future__ import annotations

from fractions import Fraction

MIN_SERIES_CHAR = {"F4": 13, "G2": 7}


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Rationals:
    char = 0
    name = "Q"

    def normalize(self, v):
        return Fraction(v)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise FieldError("zero has no inverse")
        return 1 / Fraction(a)

    def div(self, a, b):
        return a * self.inv(b)

    def from_int(self, n):
        return Fraction(n)

    def is_zero(self, a):
        return a == 0

    def random_nonzero(self, rng):
        num = rng.randint(1, 50) * rng.choice((1, -1))
        return Fraction(num, rng.randint(1, 20))

    def random(self, rng):
        return Fraction(rng.randint(-50, 50), rng.randint(1, 20))

    def supports_series(self, kind: str) -> bool:
        return True

    def __repr__(self):
        return "Rationals()"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")


class PrimeField:
    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1

    def normalize(self, v):
        return int(v) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise FieldError("zero has no inverse")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, q: Fraction):
        if q.denominator % self.p == 0:
            raise FieldError(f"denominator divisible by {self.p}")
        return self.mul(q.numerator % self.p, self.inv(q.denominator % self.p))

    def is_zero(self, a):
        return a % self.p == 0

    def random_nonzero(self, rng):
        return rng.randint(1, self.p - 1)

    def random(self, rng):
        return rng.randint(0, self.p - 1)

    def supports_series(self, kind: str) -> bool:
        return self.p >= MIN_SERIES_CHAR[kind]

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


def field_make(spec):
    """Build a field from 'rational'/'q' or a prime given as int or str."""
    if isinstance(spec, str):
        low = spec.lower()
        if low in ("q", "rational", "rationals"):
            return Rationals()
        try:
            spec = int(spec)
        except ValueError:
            raise FieldError(f"unrecognised field spec {spec!r}") from None
    return PrimeField(spec)

"""Exact coefficient arithmetic: odd prime fields and arbitrary-precision rationals.

Field elements are plain Python objects (ints reduced mod p, or Fraction), and the
field object supplies the operations.  This keeps polynomial term maps lightweight.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import FieldError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for any modulus this package will ever see."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """GF(p) for an odd prime p >= 3; elements are ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 3 or p % 2 == 0 or not is_prime(p):
            raise FieldError(f"prime-field modulus must be an odd prime >= 3, got {p!r}")
        self.p = p

    # -- element constructors -------------------------------------------------
    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def of_int(self, n: int):
        return n % self.p

    def of_fraction(self, q: Fraction):
        return (q.numerator % self.p) * self.inv(q.denominator % self.p) % self.p

    # -- arithmetic -----------------------------------------------------------
    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    # -- sampling & text ------------------------------------------------------
    def random(self, rng):
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.p)

    def to_str(self, a) -> str:
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"F{self.p}"


class RationalField:
    """The rationals with arbitrary-precision integers (fractions.Fraction)."""

    __slots__ = ()

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def of_int(self, n: int):
        return Fraction(n)

    def of_fraction(self, q: Fraction):
        return q

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
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def random(self, rng):
        # Small integers; genericity over Q is achieved by retrying with a wider range.
        return Fraction(rng.randint(-20, 20))

    def random_nonzero(self, rng):
        n = 0
        while n == 0:
            n = rng.randint(-20, 20)
        return Fraction(n)

    def to_str(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "Q"


QQ = RationalField()

DEFAULT_PRIME = 32003

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_name(field) -> str:
    return repr(field)


def field_from_name(name: str):
    """Inverse of field_name: 'Q' or 'F<p>'."""
    if name == "Q":
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        return GF(int(name[1:]))
    raise FieldError(f"unknown field {name!r}")

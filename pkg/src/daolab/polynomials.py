"""Multivariate polynomials with exact coefficients.

A Polynomial stores a finite map {exponent tuple -> nonzero coefficient} and a
reference to its ring signature (variable names + coefficient field).  Values
are immutable after construction, so they may be shared freely.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import SignatureMismatch, ZeroPolynomialError
from .fields import field_name
from .monomials import DEGREVLEX, Monomial, mono_mul, mono_one

INHOMOGENEOUS = "inhomogeneous"
MINUS_INFINITY = "-infinity"


class PolyRing:
    """Ring signature: ordered variable names over a coefficient field."""

    __slots__ = ("names", "field", "nvars", "_gens", "_key")

    def __init__(self, names, field):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        self.field = field
        self.nvars = len(self.names)
        self._gens = None
        self._key = (self.names, field_name(field))

    # -- constructors ----------------------------------------------------------
    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return Polynomial(self, {mono_one(self.nvars): self.field.one})

    def const(self, c) -> "Polynomial":
        c = self.field.of_fraction(Fraction(c)) if not isinstance(c, Fraction) else self.field.of_fraction(c)
        if self.field.is_zero(c):
            return self.zero
        return Polynomial(self, {mono_one(self.nvars): c})

    def monomial(self, expo: Monomial, coeff=None) -> "Polynomial":
        c = self.field.one if coeff is None else coeff
        if self.field.is_zero(c):
            return self.zero
        return Polynomial(self, {tuple(expo): c})

    def var(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return self.monomial(tuple(e))

    @property
    def gens(self):
        if self._gens is None:
            self._gens = tuple(self.var(i) for i in range(self.nvars))
        return self._gens

    def from_terms(self, terms: dict) -> "Polynomial":
        clean = {tuple(m): c for m, c in terms.items() if not self.field.is_zero(c)}
        return Polynomial(self, clean)

    def linear_form(self, coeffs) -> "Polynomial":
        terms = {}
        for i, c in enumerate(coeffs):
            if not self.field.is_zero(c):
                e = [0] * self.nvars
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial(self, terms)

    def random_linear_form(self, rng) -> "Polynomial":
        """A form c_1 x_1 + ... + c_n x_n with independently drawn coefficients,
        not all zero; deterministic given the rng state."""
        if self.nvars < 1:
            raise ValueError("ring has no variables")
        while True:
            coeffs = [self.field.random(rng) for _ in range(self.nvars)]
            if any(not self.field.is_zero(c) for c in coeffs):
                return self.linear_form(coeffs)

    # -- identity ----------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, PolyRing) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"{field_name(self.field)}[{','.join(self.names)}]"


class Polynomial:
    __slots__ = ("ring", "terms", "_hashval")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hashval = None

    # -- predicates -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        if len(self.terms) != 1:
            return False
        (m, c), = self.terms.items()
        return sum(m) == 0 and c == self.ring.field.one

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    # -- degree bookkeeping -------------------------------------------------------
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def homogeneous_degree(self):
        """Common total degree of all terms, INHOMOGENEOUS, or MINUS_INFINITY for 0."""
        if not self.terms:
            return MINUS_INFINITY
        degs = {sum(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else INHOMOGENEOUS

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree() != INHOMOGENEOUS

    def constant_term(self):
        return self.terms.get(mono_one(self.ring.nvars), self.ring.field.zero)

    def linear_coefficients(self):
        """Coefficient vector of the degree-1 part."""
        out = [self.ring.field.zero] * self.ring.nvars
        for m, c in self.terms.items():
            if sum(m) == 1:
                out[m.index(1)] = c
        return out

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if sum(m) == d})

    # -- arithmetic ----------------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise SignatureMismatch(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        field = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = field.add(out.get(m, field.zero), c)
            if field.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        field = self.ring.field
        return Polynomial(self.ring, {m: field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        field = self.ring.field
        out: dict = {}
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                s = field.add(out.get(m, field.zero), field.mul(ca, cb))
                if field.is_zero(s):
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        if field.is_zero(c):
            return self.ring.zero
        return Polynomial(self.ring, {m: field.mul(v, c) for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, coeff) -> "Polynomial":
        field = self.ring.field
        if field.is_zero(coeff):
            return self.ring.zero
        return Polynomial(
            self.ring,
            {mono_mul(m, mono): field.mul(c, coeff) for m, c in self.terms.items()},
        )

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- leading data ----------------------------------------------------------------
    def leading_term(self, order=DEGREVLEX):
        """Order-maximal (monomial, coefficient); raises on the zero polynomial."""
        if not self.terms:
            raise ZeroPolynomialError("leading term of 0")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order=DEGREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order=DEGREVLEX) -> "Polynomial":
        _, c = self.leading_term(order)
        if c == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(c))

    # -- ring maps --------------------------------------------------------------------
    def substitute(self, target: PolyRing, images) -> "Polynomial":
        """Apply the ring map sending variable i to images[i] (targets share a field)."""
        images = list(images)
        out = target.zero
        pw_cache: dict = {}
        for m, c in self.terms.items():
            piece = target.one.scale(c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in pw_cache:
                        pw_cache[key] = images[i] ** e
                    piece = piece * pw_cache[key]
            out = out + piece
        return out

    # -- text --------------------------------------------------------------------------
    def to_str(self, order=DEGREVLEX) -> str:
        if not self.terms:
            return "0"
        field = self.ring.field
        names = self.ring.names
        parts = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[m]
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            cs = field.to_str(c)
            if factors:
                if cs == "1":
                    body = "*".join(factors)
                elif cs == "-1":
                    body = "-" + "*".join(factors)
                else:
                    body = cs + "*" + "*".join(factors)
            else:
                body = cs
            parts.append(body)
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    # -- identity ----------------------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        if self._hashval is None:
            self._hashval = hash((self.ring, frozenset(self.terms.items())))
        return self._hashval

    def sort_key(self, order=DEGREVLEX):
        """Canonical, deterministic key for sorting polynomial lists."""
        return sorted(((order.key(m), str(c)) for m, c in self.terms.items()), reverse=True)

    def __repr__(self):
        return self.to_str()


def poly_op(kind: str, a: Polynomial, b) -> Polynomial:
    """Dispatch add/mul/scale with signature checking."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "scale":
        return a.scale(b)
    raise ValueError(f"unknown poly_op kind {kind!r}")

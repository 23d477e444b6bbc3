"""Presented rings R = S/J in graded or local-at-origin mode, ideal handles,
and the ideal arithmetic the invariant computations are built from.

Local-mode strategy: no local standard bases are ever computed; everything is
done with global Groebner data in S, and equality/membership after localizing
at (x_1..x_n) is decided by unit-colon tests (a colon containing an element
with nonzero constant term contains a unit at the origin).
"""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from math import comb

from .errors import DepthHypothesisError, InputError, ModeError
from .groebner import (
    ReducedGB,
    buchberger,
    count_standard_monomials,
    eliminate,
    hilbert_numerator,
    kdim_component,
    normal_form,
)
from .linalg import echelon
from .localspace import TruncatedSpace
from .monomials import DEGREVLEX, mono_div, mono_divides, mono_gcd, mono_lcm
from .polynomials import INHOMOGENEOUS, Polynomial, PolyRing
from .syzygy import syzygy_basis, vec_component

GRADED = "graded"
LOCAL = "local"


class PresentedRing:
    """An algebra K[x_1..x_n]/J with a mode flag.

    graded: J homogeneous, R standard graded.
    local: R means (S/J) localized at the origin; J must sit inside (x_1..x_n).
    """

    def __init__(self, ambient: PolyRing, relations=(), mode: str = GRADED):
        if mode not in (GRADED, LOCAL):
            raise ModeError(f"mode must be graded or local, got {mode!r}")
        self.ambient = ambient
        self.mode = mode
        rels = [r for r in relations if not r.is_zero()]
        for r in rels:
            if r.ring != ambient:
                raise InputError("defining relation not in the ambient ring")
            if mode == GRADED and r.homogeneous_degree() == INHOMOGENEOUS:
                raise InputError(f"graded mode needs homogeneous relations, got {r}")
            if not ambient.field.is_zero(r.constant_term()):
                raise InputError(f"relation {r} has a unit term; the origin is not on the variety")
        self.relations = tuple(rels)
        self.defining_gb = buchberger(rels, DEGREVLEX, ambient) if rels else ReducedGB(ambient, DEGREVLEX, [])
        if self.defining_gb.is_unit_ideal():
            raise InputError("defining ideal is the unit ideal")
        self._cache: dict = {}
        self._key = (ambient._key, tuple(sorted(tuple(sorted(r.terms.items())) for r in self.defining_gb.basis)), mode)

    # -- constructors -------------------------------------------------------------
    @classmethod
    def polynomial_ring(cls, names, field, mode: str = GRADED) -> "PresentedRing":
        return cls(PolyRing(names, field), (), mode)

    # -- basics ---------------------------------------------------------------------
    @property
    def is_graded(self) -> bool:
        return self.mode == GRADED

    @property
    def nvars(self) -> int:
        return self.ambient.nvars

    @property
    def field(self):
        return self.ambient.field

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.defining_gb)

    def is_zero_elem(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def ideal(self, gens) -> "IdealHandle":
        return IdealHandle(self, gens)

    def max_ideal(self) -> "IdealHandle":
        return IdealHandle(self, list(self.ambient.gens))

    def zero_ideal(self) -> "IdealHandle":
        return IdealHandle(self, [])

    def unit_ideal(self) -> "IdealHandle":
        return IdealHandle(self, [self.ambient.one])

    def __eq__(self, other):
        return isinstance(other, PresentedRing) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        rel = "" if not self.relations else "/(" + ", ".join(map(str, self.relations)) + ")"
        return f"{self.ambient!r}{rel} {self.mode}"

    # -- linear data -------------------------------------------------------------
    def _linear_relation_rows(self):
        rows = [g.linear_coefficients() for g in self.defining_gb.basis]
        rows = [r for r in rows if any(not self.field.is_zero(c) for c in r)]
        return rows

    def embedding_dimension(self) -> int:
        """mu(m) = n - rank(linear parts of a reduced basis of J)."""
        if "embdim" not in self._cache:
            rows = self._linear_relation_rows()
            self._cache["embdim"] = self.nvars - (len(echelon(rows, self.field)) if rows else 0)
        return self._cache["embdim"]

    def minimal_variable_generators(self):
        """Variable images forming a minimal generating sequence of m."""
        rows = self._linear_relation_rows()
        pivots = set(echelon(rows, self.field)) if rows else set()
        return [self.ambient.var(i) for i in range(self.nvars) if i not in pivots]

    def form_outside_m2(self, rng) -> Polynomial:
        """A random linear form whose image avoids m^2 (linear part not in J's)."""
        rows = self._linear_relation_rows()
        base = len(echelon([list(r) for r in rows], self.field)) if rows else 0
        while True:
            f = self.ambient.random_linear_form(rng)
            stacked = [list(r) for r in rows] + [f.linear_coefficients()]
            if len(echelon(stacked, self.field)) > base:
                return f

    # -- numeric invariants ---------------------------------------------------------
    def hilbert_samuel(self, N: int) -> int:
        """dim_K S/(J + m^N)."""
        if N <= 0:
            return 0
        key = ("hs", N)
        if key not in self._cache:
            total = comb(N - 1 + self.nvars, self.nvars)
            space = TruncatedSpace.from_ideal_gens(self.ambient, self.defining_gb.basis, N)
            self._cache[key] = total - space.dim()
        return self._cache[key]

    def hilbert_function(self, d: int) -> int:
        """dim_K (S/J)_d in graded mode."""
        if not self.is_graded:
            raise ModeError("hilbert_function needs graded mode")
        return kdim_component(self.defining_gb, d)

    def dimension(self) -> int:
        return self.dimension_with_certificate()[0]

    def dimension_with_certificate(self, cap: int = 12, window: int = 3):
        key = ("dim", cap, window)
        if key not in self._cache:
            if self.is_graded:
                self._cache[key] = (self._graded_dimension(), "certified")
            else:
                self._cache[key] = self._local_dimension_fit(cap, window)
        return self._cache[key]

    def _graded_dimension(self) -> int:
        """Krull dimension via maximal independent variable sets mod lt(J)."""
        lts = self.defining_gb.lead_monomials
        n = self.nvars
        supports = [frozenset(i for i, e in enumerate(m) if e) for m in lts]
        for size in range(n, -1, -1):
            for sub in combinations(range(n), size):
                s = set(sub)
                if not any(supp <= s for supp in supports):
                    return size
        return 0

    def _local_dimension_fit(self, cap: int, window: int):
        """Degree of Hilbert-Samuel growth, accepted once `window` consecutive
        differences are polynomial-consistent; values are computed adaptively."""
        j_monomial = all(g.is_monomial() for g in self.defining_gb.basis)
        vals: list[int] = []
        for N in range(1, cap + 1):
            vals.append(self.hilbert_samuel(N))
            for k in range(0, self.nvars + 1):
                diffs = list(vals)
                for _ in range(k):
                    diffs = [b - a for a, b in zip(diffs, diffs[1:])]
                # demand a strictly positive stable difference (degree k growth)
                if (
                    len(diffs) >= window + 1
                    and len(set(diffs[-(window + 1):])) == 1
                    and (diffs[-1] > 0 or k == 0)
                ):
                    cert = "certified" if j_monomial else "high_confidence"
                    self._cache["hs_values"] = vals
                    return (k, cert)
        self._cache["hs_values"] = vals
        return (self.nvars, "uncertified")

    def multiplicity(self) -> int:
        if "mult" not in self._cache:
            if self.is_graded:
                hn = hilbert_numerator(self.defining_gb.lead_monomials, self.nvars)
                d = self._graded_dimension()
                for _ in range(self.nvars - d):
                    if sum(hn) != 0:
                        raise InputError("hilbert numerator not divisible; dimension mismatch")
                    out = []
                    acc = 0
                    for c in hn[:-1]:
                        acc += c
                        out.append(acc)
                    hn = out
                self._cache["mult"] = sum(hn)
            else:
                d, _ = self.dimension_with_certificate()
                vals = self._cache.get("hs_values") or [self.hilbert_samuel(N) for N in range(1, 9)]
                diffs = list(vals)
                for _ in range(d):
                    diffs = [b - a for a, b in zip(diffs, diffs[1:])]
                self._cache["mult"] = diffs[-1] if diffs else 0
        return self._cache["mult"]

    def has_minimal_multiplicity(self) -> bool:
        return self.multiplicity() == self.embedding_dimension() - self.dimension() + 1

    def is_regular(self) -> bool:
        return self.embedding_dimension() == self.dimension()

    def depth_positive(self) -> bool:
        """True iff m contains a non-zerodivisor on R, i.e. (J : m) = J.

        Associated primes localize, so the global colon test is exact in both
        modes."""
        if "depth_pos" not in self._cache:
            if self.defining_gb.is_zero_ideal():
                self._cache["depth_pos"] = self.nvars > 0
            else:
                colon = colon_gens(self.defining_gb, list(self.ambient.gens), self.ambient)
                cgb = buchberger(list(colon) + list(self.defining_gb.basis), DEGREVLEX, self.ambient)
                self._cache["depth_pos"] = cgb == self.defining_gb
        return self._cache["depth_pos"]

    def require_depth_positive(self):
        if not self.depth_positive():
            raise DepthHypothesisError(f"depth R = 0 for {self!r}; m consists of zerodivisors")


# --------------------------------------------------------------------------- #
# raw colon on ambient generator data
# --------------------------------------------------------------------------- #


def colon_gens(A_gb: ReducedGB, B_polys, ring: PolyRing):
    """Generators of (A : (B_polys)) in the ambient polynomial ring.

    Monomial inputs use the combinatorial colon; otherwise the colon is read
    off the first coordinates of the syzygies of the stacked column module.
    """
    B_polys = [b for b in B_polys if not b.is_zero()]
    if not B_polys:
        return [ring.one]
    if A_gb.is_zero_ideal():
        return []
    if A_gb.is_monomial_ideal() and all(b.is_monomial() for b in B_polys):
        result = None
        for b in B_polys:
            bm = b.leading_monomial(DEGREVLEX)
            cur = [mono_div(m, mono_gcd(m, bm)) for m in A_gb.lead_monomials]
            result = cur if result is None else _mono_intersect(result, cur)
        return [ring.monomial(m) for m in _mono_minimalize(result)]
    r = len(B_polys)
    columns = [list(B_polys)]
    zero = ring.zero
    for a in A_gb.basis:
        for i in range(r):
            col = [zero] * r
            col[i] = a
            columns.append(col)
    syz = syzygy_basis(columns, ring)
    out = []
    seen = set()
    for v in syz:
        p = vec_component(v, 0, ring)
        if not p.is_zero():
            p = p.monic(DEGREVLEX)
            if p not in seen:
                seen.add(p)
                out.append(p)
    out.sort(key=lambda p: p.sort_key())
    return out


def _mono_minimalize(monos):
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    kept = []
    for m in monos:
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    return kept


def _mono_intersect(A, B):
    return _mono_minimalize([mono_lcm(a, b) for a in A for b in B])


# --------------------------------------------------------------------------- #
# ideal handles
# --------------------------------------------------------------------------- #


class IdealHandle:
    """An ideal of a PresentedRing given by ambient generators; its canonical
    form is the reduced Groebner basis of (gens) + J under degrevlex."""

    def __init__(self, ring: PresentedRing, gens):
        self.ring = ring
        nf = []
        seen = set()
        for g in gens:
            if g.ring != ring.ambient:
                raise InputError("generator not in the ambient ring")
            if ring.is_graded and g.homogeneous_degree() == INHOMOGENEOUS:
                raise InputError(f"graded mode needs homogeneous generators, got {g}")
            h = ring.normal_form(g)
            if not h.is_zero():
                h = h.monic(DEGREVLEX)
                if h not in seen:
                    seen.add(h)
                    nf.append(h)
        if all(h.is_monomial() for h in nf):
            monos = _mono_minimalize([h.leading_monomial(DEGREVLEX) for h in nf])
            nf = [ring.ambient.monomial(m) for m in monos]
        nf.sort(key=lambda p: p.sort_key())
        self.gens = tuple(nf)
        self._gb = None
        self._min_gens = None

    @property
    def gb(self) -> ReducedGB:
        if self._gb is None:
            self._gb = buchberger(
                list(self.gens) + list(self.ring.defining_gb.basis), DEGREVLEX, self.ring.ambient
            )
        return self._gb

    # -- predicates -------------------------------------------------------------
    def is_zero_ideal(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        if any(not self.ring.field.is_zero(g.constant_term()) for g in self.gens):
            return True
        return self.gb.is_unit_ideal()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def contains(self, p: Polynomial) -> bool:
        """Global membership of the ambient polynomial p."""
        return self.gb.contains(p)

    def contains_locally(self, p: Polynomial) -> bool:
        """Membership after localizing at the origin (local mode)."""
        p = self.ring.normal_form(p)
        if p.is_zero() or self.gb.contains(p):
            return True
        colon = colon_gens(self.gb, [p], self.ring.ambient)
        return any(not self.ring.field.is_zero(g.constant_term()) for g in colon)

    def contains_handle(self, other: "IdealHandle") -> bool:
        return all(self.gb.contains(g) for g in other.gens)

    def equals(self, other: "IdealHandle") -> bool:
        """Mode-aware ideal equality."""
        if self.ring != other.ring:
            raise InputError("handles live in different rings")
        if self.ring.is_graded:
            return self.gb == other.gb
        return localized_equal(self, other)

    def min_gens(self):
        """A minimal generating set modulo J (graded Nakayama pruning)."""
        if self._min_gens is None:
            gens = sorted(self.gens, key=lambda p: (p.total_degree(), p.sort_key()))
            changed = True
            while changed:
                changed = False
                for i in range(len(gens)):
                    others = gens[:i] + gens[i + 1 :]
                    rest = buchberger(
                        others + list(self.ring.defining_gb.basis), DEGREVLEX, self.ring.ambient
                    )
                    inside = rest.contains(gens[i]) if self.ring.is_graded else _local_member(
                        rest, gens[i], self.ring
                    )
                    if inside:
                        gens.pop(i)
                        changed = True
                        break
            self._min_gens = tuple(gens)
        return self._min_gens

    def max_gen_degree(self) -> int:
        return max((g.total_degree() for g in self.gb.basis), default=0)

    def __repr__(self):
        return "(" + ", ".join(map(str, self.gens)) + f") in {self.ring!r}"


def _local_member(gb: ReducedGB, p: Polynomial, ring: PresentedRing) -> bool:
    if gb.contains(p):
        return True
    colon = colon_gens(gb, [p], ring.ambient)
    return any(not ring.field.is_zero(g.constant_term()) for g in colon)


# --------------------------------------------------------------------------- #
# the ideal calculus
# --------------------------------------------------------------------------- #


def max_ideal(R: PresentedRing) -> IdealHandle:
    return R.max_ideal()


def ideal_combine(kind: str, A: IdealHandle, B: IdealHandle) -> IdealHandle:
    if A.ring != B.ring:
        raise InputError("handles live in different rings")
    if kind == "sum":
        return IdealHandle(A.ring, list(A.gens) + list(B.gens))
    if kind == "product":
        gens = [a * b for a in A.gens for b in B.gens]
        return IdealHandle(A.ring, gens)
    raise InputError(f"unknown ideal_combine kind {kind!r}")


def ideal_power(A: IdealHandle, k: int) -> IdealHandle:
    """A^k, computed as (ambient gens)^k + J."""
    if k < 0:
        raise InputError("negative ideal power")
    if k == 0:
        return A.ring.unit_ideal()
    gens = [_prod(c) for c in combinations_with_replacement(A.gens, k)]
    return IdealHandle(A.ring, gens)


def _prod(polys):
    out = polys[0]
    for p in polys[1:]:
        out = out * p
    return out


def ideal_colon(A: IdealHandle, B: IdealHandle) -> IdealHandle:
    """(A : B) = {u : uB <= A}; J-part of B is absorbed since J <= A's lift."""
    if A.ring != B.ring:
        raise InputError("handles live in different rings")
    gens = colon_gens(A.gb, list(B.gens), A.ring.ambient)
    return IdealHandle(A.ring, gens)


def ideal_colon_elem(A: IdealHandle, f: Polynomial) -> IdealHandle:
    gens = colon_gens(A.gb, [f], A.ring.ambient)
    return IdealHandle(A.ring, gens)


def ideal_intersect(A: IdealHandle, B: IdealHandle) -> IdealHandle:
    """A ^ B via the one-variable elimination (t*A + (1-t)*B) ^ S."""
    if A.ring != B.ring:
        raise InputError("handles live in different rings")
    ring = A.ring.ambient
    if A.gb.is_monomial_ideal() and B.gb.is_monomial_ideal():
        monos = _mono_intersect(list(A.gb.lead_monomials), list(B.gb.lead_monomials))
        return IdealHandle(A.ring, [ring.monomial(m) for m in monos])
    tname = _fresh_name("t", ring.names)
    big = PolyRing((tname,) + ring.names, ring.field)
    t = big.var(0)
    up = [p.substitute(big, list(big.gens[1:])) for p in list(A.gb.basis)]
    down = [p.substitute(big, list(big.gens[1:])) for p in list(B.gb.basis)]
    gens = [t * p for p in up] + [(big.one - t) * p for p in down]
    elim, small = eliminate(gens, [0], big)
    back = [p.substitute(ring, list(ring.gens)) for p in elim]
    return IdealHandle(A.ring, back)


def _fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "_"
    return name


def localized_equal(A: IdealHandle, B: IdealHandle) -> bool:
    """Equality of A and B after localizing at (x_1..x_n).

    Certified via unit-colon tests: a generator a lies in B locally iff
    (B : a) contains an element with a unit constant term.
    """
    if A.ring != B.ring:
        raise InputError("handles live in different rings")
    if A.ring.is_graded:
        raise ModeError("localized_equal needs local mode")
    return _local_contains(B, A) and _local_contains(A, B)


def _local_contains(A: IdealHandle, B: IdealHandle) -> bool:
    """B <= A after localization."""
    for b in B.gens:
        if not A.contains(b) and not A.contains_locally(b):
            return False
    return True


# --------------------------------------------------------------------------- #
# ring-level predicates re-exported at module level
# --------------------------------------------------------------------------- #


def dimension(R: PresentedRing) -> int:
    return R.dimension()


def embedding_dimension(R: PresentedRing) -> int:
    return R.embedding_dimension()


def multiplicity(R: PresentedRing) -> int:
    return R.multiplicity()


def depth_positive(R: PresentedRing) -> bool:
    return R.depth_positive()


def is_d_sequence(R: PresentedRing, elems) -> bool:
    """Huneke's condition: no element lies in the ideal of the others, and
    ((e_1..e_i) : e_{i+1} e_j) = ((e_1..e_i) : e_j) for 0 <= i < m, j > i."""
    elems = [R.normal_form(e) for e in elems]
    if not elems or any(e.is_zero() for e in elems):
        return False
    m = len(elems)
    for i in range(m):
        others = IdealHandle(R, [e for j, e in enumerate(elems) if j != i])
        inside = others.contains(elems[i]) if R.is_graded else others.contains_locally(elems[i])
        if inside:
            return False
    for i in range(m):
        base = IdealHandle(R, elems[:i])
        nxt = elems[i]
        for j in range(i, m):
            ej = elems[j]
            lhs = ideal_colon_elem(base, nxt * ej)
            rhs = ideal_colon_elem(base, ej)
            if R.is_graded:
                if lhs.gb != rhs.gb:
                    return False
            else:
                if not (_local_contains(rhs, lhs) and _local_contains(lhs, rhs)):
                    return False
    return True

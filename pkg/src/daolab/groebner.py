"""Buchberger's algorithm, normal forms, reduced bases, elimination, and
vector-space dimension counts of graded/filtered quotients.

Design notes
------------
* Pair selection is the normal strategy (minimal lcm degree first) with the
  Gebauer-Moeller refinements of both Buchberger criteria.
* S-pairs of two monomials are identically zero and are skipped outright;
  this is what keeps the power-ideal computations cheap.
* A session-level cache maps canonical generator sets to reduced bases; it is
  observationally identical to recomputation because reduced bases are unique.
"""
from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .errors import InputError
from .monomials import (
    DEGREVLEX,
    BlockElim,
    Monomial,
    mono_coprime,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_one,
    monomials_of_degree,
)
from .polynomials import Polynomial, PolyRing


class ReducedGB:
    """A reduced Groebner basis: monic, self-reduced, sorted by leading term.

    Uniqueness: two reduced bases of the same ideal under the same order are
    term-for-term equal, so equality of ideals is equality of `basis` tuples.
    """

    __slots__ = ("ring", "order", "basis", "lead_monomials", "_is_monomial")

    def __init__(self, ring: PolyRing, order, basis: Sequence[Polynomial]):
        self.ring = ring
        self.order = order
        self.basis = tuple(basis)
        self.lead_monomials = tuple(g.leading_monomial(order) for g in self.basis)
        self._is_monomial = None

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_one()

    def is_monomial_ideal(self) -> bool:
        if self._is_monomial is None:
            self._is_monomial = all(g.is_monomial() for g in self.basis)
        return self._is_monomial

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, ReducedGB)
            and other.ring == self.ring
            and other.order == self.order
            and other.basis == self.basis
        )

    def __hash__(self):
        return hash((self.ring, self.order, self.basis))

    def __repr__(self):
        return "GB{" + ", ".join(g.to_str(self.order) for g in self.basis) + "}"


# --------------------------------------------------------------------------- #
# reduction
# --------------------------------------------------------------------------- #


def _reduce_terms(terms: dict, entries, order, field, quotients=None) -> dict:
    """Full normal form of a term map against monic reducers.

    entries: list of (lt_mono, lt_deg, tail_items) with tail_items the non-lead
    terms of a monic polynomial.  If `quotients` is a list, quotient term maps
    (same length as entries) are accumulated into it.
    """
    key = order.key
    fsub, fmul = field.sub, field.mul
    fzero, fis0 = field.zero, field.is_zero
    work = dict(terms)
    result: dict = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        dm = sum(m)
        hit = -1
        for idx, (lt, ltdeg, _tail) in enumerate(entries):
            if ltdeg <= dm and mono_divides(lt, m):
                hit = idx
                break
        if hit < 0:
            result[m] = c
            continue
        lt, _, tail = entries[hit]
        shift = mono_div(m, lt)
        if quotients is not None:
            q = quotients[hit]
            q[shift] = field.add(q.get(shift, fzero), c)
        for mt, ct in tail:
            mm = mono_mul(mt, shift)
            s = fsub(work.get(mm, fzero), fmul(c, ct))
            if fis0(s):
                work.pop(mm, None)
            else:
                work[mm] = s
    return result


def _entry_of(p: Polynomial, order):
    lt, lc = p.leading_term(order)
    field = p.ring.field
    inv = field.inv(lc)
    tail = [(m, field.mul(c, inv)) for m, c in p.terms.items() if m != lt]
    return (lt, sum(lt), tail)


def normal_form(p: Polynomial, G, order=None) -> Polynomial:
    """Normal form of p against a ReducedGB (or a list of polynomials).

    The result r satisfies: p - r lies in the ideal, and no term of r is
    divisible by a leading term of G.  NF is idempotent and K-linear.
    """
    if isinstance(G, ReducedGB):
        order = G.order
        basis = G.basis
    else:
        order = order or DEGREVLEX
        basis = [g for g in G if not g.is_zero()]
    if p.is_zero() or not basis:
        return p
    entries = [_entry_of(g, order) for g in basis]
    reduced = _reduce_terms(p.terms, entries, order, p.ring.field)
    return Polynomial(p.ring, reduced)


# --------------------------------------------------------------------------- #
# Buchberger
# --------------------------------------------------------------------------- #

_GB_CACHE: dict = {}


def clear_gb_cache():
    _GB_CACHE.clear()


def _poly_cache_key(p: Polynomial):
    return tuple(sorted(p.terms.items()))


def _interreduce(polys, order, field):
    """Minimalize + tail-reduce + normalize: the reduced basis of a GB."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    # minimalize: drop any element whose lead is divisible by another lead
    polys.sort(key=lambda g: order.key(g.leading_monomial(order)))
    kept = []
    for g in polys:
        lt = g.leading_monomial(order)
        if not any(mono_divides(h.leading_monomial(order), lt) for h in kept):
            kept.append(g)
    # tail-reduce each against the others
    out = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        entries = [_entry_of(h, order) for h in others]
        reduced = _reduce_terms(g.terms, entries, order, field)
        out.append(Polynomial(g.ring, reduced).monic(order))
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


def buchberger(gens: Iterable[Polynomial], order=DEGREVLEX, ring: PolyRing | None = None) -> ReducedGB:
    """Reduced Groebner basis of the ideal generated by gens.

    The unit ideal yields basis {1}; the zero ideal yields an empty basis.
    """
    gens = [g for g in gens if g is not None and not g.is_zero()]
    if ring is None:
        if not gens:
            raise InputError("buchberger needs a ring when all generators are zero")
        ring = gens[0].ring
    if not gens:
        return ReducedGB(ring, order, [])

    cache_key = (ring._key, hash(order), frozenset(_poly_cache_key(g) for g in gens))
    hit = _GB_CACHE.get(cache_key)
    if hit is not None:
        return hit

    field = ring.field
    key = order.key

    # working basis: parallel lists
    basis: list[Polynomial] = []
    lts: list[Monomial] = []
    ismono: list[bool] = []
    entries: list = []

    def gb_done(result_basis):
        gb = ReducedGB(ring, order, _interreduce(result_basis, order, field))
        _GB_CACHE[cache_key] = gb
        return gb

    pairs: list = []  # heap of (deg lcm, key lcm, i, j)
    pair_set: set = set()

    def push_pair(i, j):
        l = mono_lcm(lts[i], lts[j])
        heapq.heappush(pairs, (sum(l), key(l), i, j))
        pair_set.add((i, j))

    def add_element(h: Polynomial):
        """Gebauer-Moeller update of the pair set with the new element h."""
        t = len(basis)
        lt_new = h.leading_monomial(order)
        # drop old pairs strictly superseded by the newcomer (chain criterion)
        survivors = set()
        for (i, j) in pair_set:
            l = mono_lcm(lts[i], lts[j])
            if (
                mono_divides(lt_new, l)
                and mono_lcm(lts[i], lt_new) != l
                and mono_lcm(lts[j], lt_new) != l
            ):
                continue
            survivors.add((i, j))
        if len(survivors) != len(pair_set):
            pair_set.clear()
            pair_set.update(survivors)
            newheap = [(sum(l), key(l), i, j) for (i, j) in survivors for l in (mono_lcm(lts[i], lts[j]),)]
            heapq.heapify(newheap)
            pairs.clear()
            pairs.extend(newheap)
        # candidate new pairs, pruned: keep minimal lcms, one per lcm value,
        # and drop coprime pairs last
        lcms = {}
        for i in range(t):
            lcms.setdefault(mono_lcm(lts[i], lt_new), []).append(i)
        minimal = []
        for l in sorted(lcms, key=key):
            if not any(mono_divides(l2, l) for l2 in minimal):
                minimal.append(l)
        basis.append(h)
        lts.append(lt_new)
        ismono.append(h.is_monomial())
        entries.append(_entry_of(h, order))
        for l in minimal:
            i = min(lcms[l])
            if mono_coprime(lts[i], lt_new):
                continue
            push_pair(i, t)

    for g in sorted(gens, key=lambda p: p.sort_key(order)):
        red = _reduce_terms(g.terms, entries, order, field)
        h = Polynomial(ring, red)
        if h.is_zero():
            continue
        h = h.monic(order)
        if h.is_constant():
            return gb_done([ring.one])
        add_element(h)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if (i, j) not in pair_set:
            continue
        pair_set.discard((i, j))
        if ismono[i] and ismono[j]:
            continue  # S-polynomial of two monomials is identically zero
        l = mono_lcm(lts[i], lts[j])
        gi, gj = basis[i], basis[j]
        si = gi.mul_term(mono_div(l, lts[i]), field.one)
        sj = gj.mul_term(mono_div(l, lts[j]), field.one)
        s = si - sj
        if s.is_zero():
            continue
        red = _reduce_terms(s.terms, entries, order, field)
        h = Polynomial(ring, red)
        if h.is_zero():
            continue
        h = h.monic(order)
        if h.is_constant():
            return gb_done([ring.one])
        add_element(h)

    return gb_done(basis)


# --------------------------------------------------------------------------- #
# elimination
# --------------------------------------------------------------------------- #


def eliminate(gens: Sequence[Polynomial], block: Iterable[int], ring: PolyRing | None = None):
    """Generators of (gens) intersected with K[remaining variables].

    `block` holds the positions of the variables to eliminate.  The result
    lives in a fresh ring on the remaining variables (same order of names).
    """
    gens = [g for g in gens if not g.is_zero()]
    if ring is None:
        if not gens:
            raise InputError("eliminate needs a ring when all generators are zero")
        ring = gens[0].ring
    block = sorted(set(block))
    keep = [i for i in range(ring.nvars) if i not in block]
    order = BlockElim(block, ring.nvars)
    gb = buchberger(gens, order, ring)
    small = PolyRing(tuple(ring.names[i] for i in keep), ring.field)
    out = []
    for g in gb.basis:
        if all(all(m[i] == 0 for i in block) for m in g.terms):
            out.append(small.from_terms({tuple(m[i] for i in keep): c for m, c in g.terms.items()}))
    return out, small


# --------------------------------------------------------------------------- #
# standard-monomial counting
# --------------------------------------------------------------------------- #


def _minimalize_monomials(monos: Iterable[Monomial]):
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    kept: list = []
    for m in monos:
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    return kept


def count_standard_monomials(lead_monomials: Iterable[Monomial], nvars: int, degree: int, upto: bool = False) -> int:
    """Number of monomials of total degree == degree (or <= degree when upto)
    divisible by none of the given lead monomials."""
    gens = _minimalize_monomials(lead_monomials)
    if any(sum(g) == 0 for g in gens):
        return 0
    if nvars == 0:
        return 1 if (upto or degree == 0) else 0

    def rec(i: int, remaining: int, active: tuple) -> int:
        if i == nvars - 1:
            total = 0
            choices = range(remaining + 1) if upto else (remaining,)
            for e in choices:
                if not any(g[i] <= e for g in active):
                    total += 1
            return total
        total = 0
        for e in range(remaining + 1):
            nxt = tuple(g for g in active if g[i] <= e)
            if any(all(g[j] == 0 for j in range(i + 1, nvars)) for g in nxt):
                continue  # branch already inside the ideal
            total += rec(i + 1, remaining - e, nxt)
        return total

    return rec(0, degree, tuple(gens))


def kdim_component(G: ReducedGB, d: int) -> int:
    """dim_K of the degree-d component of S/(G) for homogeneous (G)."""
    return count_standard_monomials(G.lead_monomials, G.ring.nvars, d)


def kbasis_modulo_power(G: ReducedGB, N: int) -> int:
    """dim_K S/((G) + m^N) with m = (x_1..x_n); exact in graded or local use."""
    ring = G.ring
    if N <= 0:
        return 0
    gens = list(G.basis)
    entries = [_entry_of(g, G.order) for g in gens]
    extra = set()
    for expo in monomials_of_degree(ring.nvars, N):
        red = _reduce_terms({expo: ring.field.one}, entries, G.order, ring.field)
        p = Polynomial(ring, red)
        if not p.is_zero():
            extra.add(p.monic(G.order))
    gb = buchberger(gens + sorted(extra, key=lambda p: p.sort_key(G.order)), G.order, ring)
    if gb.is_unit_ideal():
        return 0
    return count_standard_monomials(gb.lead_monomials, ring.nvars, N - 1, upto=True)


# --------------------------------------------------------------------------- #
# Hilbert numerator of a monomial ideal
# --------------------------------------------------------------------------- #


def _poly_sub_shift(a: list, b: list, shift: int) -> list:
    """a(t) - t^shift * b(t) on integer coefficient lists."""
    out = list(a) + [0] * max(0, shift + len(b) - len(a))
    for i, c in enumerate(b):
        out[shift + i] -= c
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mul_int(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def hilbert_numerator(lead_monomials: Iterable[Monomial], nvars: int) -> list:
    """Numerator of the Hilbert series of S/(monomial ideal) over (1-t)^nvars,
    as an integer coefficient list."""
    memo: dict = {}

    def rec(gens: tuple) -> list:
        if not gens:
            return [1]
        if any(sum(g) == 0 for g in gens):
            return []
        key = gens
        got = memo.get(key)
        if got is not None:
            return got
        supports = [tuple(i for i, e in enumerate(g) if e) for g in gens]
        if all(len(s) == 1 for s in supports):
            # complete intersection of pure powers
            out = [1]
            for g in gens:
                out = _poly_mul_int(out, _poly_sub_shift([1], [1], sum(g)))
            memo[key] = out
            return out
        # split on the most frequent variable
        counts = [0] * nvars
        for s in supports:
            if len(s) > 1:
                for i in s:
                    counts[i] += 1
        v = counts.index(max(counts))
        plus = _minimalize_monomials(
            [g for g in gens if g[v] == 0] + [tuple(1 if i == v else 0 for i in range(nvars))]
        )
        colon = _minimalize_monomials(
            [tuple(e - 1 if i == v and e > 0 else e for i, e in enumerate(g)) for g in gens]
        )
        # 0 -> (S/(I:x_v))(-1) -> S/I -> S/(I + x_v) -> 0
        a = rec(tuple(sorted(plus)))
        b = rec(tuple(sorted(colon)))
        out = list(a) + [0] * max(0, len(b) + 1 - len(a))
        for i, c in enumerate(b):
            out[i + 1] += c
        while out and out[-1] == 0:
            out.pop()
        memo[key] = out
        return out

    gens = tuple(sorted(_minimalize_monomials(lead_monomials)))
    return rec(gens)

"""Module Groebner bases and Schreyer syzygies.

Vectors in a free module S^r are dicts {(component, monomial): coefficient}.
Free-module levels carry Schreyer data (each basis element remembers the lead
term of its image, pushed down to level 0), so the syzygies of one level are
already a Groebner basis for the next level without re-running Buchberger.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .errors import InputError
from .monomials import (
    DEGREVLEX,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_one,
)
from .polynomials import Polynomial, PolyRing

VecTerms = dict  # {(comp, mono): coeff}


@dataclass
class FreeLevel:
    """A free module S^rank with degree shifts and Schreyer order data.

    base_comp[c]/base_mono[c] describe where basis element c lands when its
    leading term is pushed down to the bottom free module; the induced order
    compares those images first (ties broken by smaller component).
    """

    ring: PolyRing
    rank: int
    shifts: tuple
    base_comp: tuple
    base_mono: tuple
    order: object = DEGREVLEX

    @classmethod
    def top(cls, ring: PolyRing, rank: int, shifts=None, order=DEGREVLEX):
        shifts = tuple(shifts) if shifts is not None else (0,) * rank
        one = mono_one(ring.nvars)
        return cls(ring, rank, shifts, tuple(range(rank)), (one,) * rank, order)

    def key(self, term):
        c, m = term
        return (self.order.key(mono_mul(m, self.base_mono[c])), -self.base_comp[c], -c)

    def term_degree(self, term) -> int:
        c, m = term
        return sum(m) + self.shifts[c]


# --------------------------------------------------------------------------- #
# vector arithmetic
# --------------------------------------------------------------------------- #


def vec_is_zero(v: VecTerms) -> bool:
    return not v


def vec_scale(v: VecTerms, c, field) -> VecTerms:
    if field.is_zero(c):
        return {}
    return {t: field.mul(x, c) for t, x in v.items()}


def vec_axpy(dst: VecTerms, coeff, shift, src: VecTerms, field) -> None:
    """dst -= coeff * x^shift * src, in place."""
    fzero = field.zero
    for (c, m), x in src.items():
        t = (c, mono_mul(m, shift))
        s = field.sub(dst.get(t, fzero), field.mul(x, coeff))
        if field.is_zero(s):
            dst.pop(t, None)
        else:
            dst[t] = s


def vec_add(a: VecTerms, b: VecTerms, field) -> VecTerms:
    out = dict(a)
    for t, x in b.items():
        s = field.add(out.get(t, field.zero), x)
        if field.is_zero(s):
            out.pop(t, None)
        else:
            out[t] = s
    return out


def vec_lead(v: VecTerms, level: FreeLevel):
    t = max(v, key=level.key)
    return t, v[t]


def vec_monic(v: VecTerms, level: FreeLevel, field) -> VecTerms:
    _, c = vec_lead(v, level)
    if c == field.one:
        return v
    return vec_scale(v, field.inv(c), field)


def vec_degree(v: VecTerms, level: FreeLevel):
    """Common degree of a homogeneous vector, or raise."""
    degs = {level.term_degree(t) for t in v}
    if len(degs) != 1:
        raise InputError("vector is not homogeneous for the declared shifts")
    return degs.pop()


def vec_from_poly_column(polys: Sequence[Polynomial]) -> VecTerms:
    """Column vector with component i equal to polys[i]."""
    out: VecTerms = {}
    for i, p in enumerate(polys):
        for m, c in p.terms.items():
            out[(i, m)] = c
    return out


def vec_component(v: VecTerms, i: int, ring: PolyRing) -> Polynomial:
    return ring.from_terms({m: c for (c0, m), c in v.items() if c0 == i})


# --------------------------------------------------------------------------- #
# module reduction / Buchberger
# --------------------------------------------------------------------------- #


def _vec_reduce(v: VecTerms, gb_entries, level: FreeLevel, quotients=None) -> VecTerms:
    """Full normal form of v against monic vector reducers.

    gb_entries: list of (lead_comp, lead_mono, tail_terms).  When `quotients`
    is a list of dicts, the quotient monomial maps are accumulated.
    """
    field = level.ring.field
    key = level.key
    work = dict(v)
    result: VecTerms = {}
    by_comp: dict = {}
    for idx, (lc, lm, _tail) in enumerate(gb_entries):
        by_comp.setdefault(lc, []).append((idx, lm, sum(lm)))
    while work:
        t = max(work, key=key)
        coeff = work.pop(t)
        comp, m = t
        dm = sum(m)
        hit = -1
        shift = None
        for idx, lm, ld in by_comp.get(comp, ()):
            if ld <= dm and mono_divides(lm, m):
                hit = idx
                shift = mono_div(m, lm)
                break
        if hit < 0:
            result[t] = coeff
            continue
        if quotients is not None:
            q = quotients[hit]
            q[shift] = field.add(q.get(shift, field.zero), coeff)
        tail = gb_entries[hit][2]
        fzero = field.zero
        for (c2, m2), x in tail.items():
            tt = (c2, mono_mul(m2, shift))
            s = field.sub(work.get(tt, fzero), field.mul(x, coeff))
            if field.is_zero(s):
                work.pop(tt, None)
            else:
                work[tt] = s
    return result


def module_normal_form(v: VecTerms, gb: Sequence[VecTerms], level: FreeLevel) -> VecTerms:
    field = level.ring.field
    entries = []
    for g in gb:
        (lc, lm), c = vec_lead(g, level)
        inv = field.inv(c)
        tail = {t: field.mul(x, inv) for t, x in g.items() if t != (lc, lm)}
        entries.append((lc, lm, tail))
    return _vec_reduce(v, entries, level)


def module_buchberger(vectors: Sequence[VecTerms], level: FreeLevel, track: bool = False):
    """Groebner basis of the submodule generated by `vectors`.

    Returns (gb, reps) where gb is the minimal interreduced monic basis and,
    when track is set, reps[i] expresses gb[i] as {(input_idx, mono): coeff}.
    """
    field = level.ring.field
    key = level.key

    basis: list[VecTerms] = []
    leads: list = []
    ismono: list[bool] = []
    entries: list = []
    reps: list[VecTerms] = []

    pairs: list = []
    pair_set: set = set()

    def entry_of(v: VecTerms):
        (lc, lm), c = vec_lead(v, level)
        inv = field.inv(c)
        tail = {t: field.mul(x, inv) for t, x in v.items() if t != (lc, lm)}
        return (lc, lm, tail)

    def push_pair(i, j):
        (ci, mi) = leads[i]
        (_, mj) = leads[j]
        l = mono_lcm(mi, mj)
        heapq.heappush(pairs, (sum(l), key((ci, l)), i, j))
        pair_set.add((i, j))

    def add_element(v: VecTerms, rep: VecTerms | None):
        t = len(basis)
        (lc_new, lm_new), _ = vec_lead(v, level)
        survivors = set()
        for (i, j) in pair_set:
            if leads[i][0] == lc_new:
                l = mono_lcm(leads[i][1], leads[j][1])
                if (
                    mono_divides(lm_new, l)
                    and mono_lcm(leads[i][1], lm_new) != l
                    and mono_lcm(leads[j][1], lm_new) != l
                ):
                    continue
            survivors.add((i, j))
        if len(survivors) != len(pair_set):
            pair_set.clear()
            pair_set.update(survivors)
            newheap = []
            for (i, j) in survivors:
                l = mono_lcm(leads[i][1], leads[j][1])
                newheap.append((sum(l), key((leads[i][0], l)), i, j))
            heapq.heapify(newheap)
            pairs.clear()
            pairs.extend(newheap)
        lcms: dict = {}
        for i in range(t):
            if leads[i][0] == lc_new:
                lcms.setdefault(mono_lcm(leads[i][1], lm_new), []).append(i)
        minimal: list = []
        for l in sorted(lcms, key=lambda mm: key((lc_new, mm))):
            if not any(mono_divides(l2, l) for l2 in minimal):
                minimal.append(l)
        basis.append(v)
        leads.append((lc_new, lm_new))
        ismono.append(len(v) == 1)
        entries.append(entry_of(v))
        reps.append(rep if rep is not None else {})
        for l in minimal:
            i = min(lcms[l])
            if mono_coprime(leads[i][1], lm_new):
                continue
            push_pair(i, t)

    for v_idx in sorted(range(len(vectors)), key=lambda k: _vec_sort_key(vectors[k], level)):
        w = dict(vectors[v_idx])
        if not w:
            continue
        quot = [dict() for _ in entries] if track else None
        red = _vec_reduce(w, entries, level, quot)
        rep = None
        if track:
            rep = {(v_idx, mono_one(level.ring.nvars)): field.one}
            for k, q in enumerate(quot or []):
                for shift, c in q.items():
                    vec_axpy(rep, c, shift, reps[k], field)
        if not red:
            continue
        (_, _), lcoef = vec_lead(red, level)
        inv = field.inv(lcoef)
        red = vec_scale(red, inv, field)
        if track:
            rep = vec_scale(rep, inv, field)
        add_element(red, rep)

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if (i, j) not in pair_set:
            continue
        pair_set.discard((i, j))
        if ismono[i] and ismono[j]:
            continue
        (ci, mi), (cj, mj) = leads[i], leads[j]
        l = mono_lcm(mi, mj)
        s: VecTerms = {}
        vec_axpy(s, field.neg(field.one), mono_div(l, mi), basis[i], field)
        vec_axpy(s, field.one, mono_div(l, mj), basis[j], field)
        if not s:
            continue
        quot = [dict() for _ in entries] if track else None
        red = _vec_reduce(s, entries, level, quot)
        rep = None
        if track:
            rep = {}
            vec_axpy(rep, field.neg(field.one), mono_div(l, mi), reps[i], field)
            vec_axpy(rep, field.one, mono_div(l, mj), reps[j], field)
            for k, q in enumerate(quot or []):
                for shift, c in q.items():
                    vec_axpy(rep, c, shift, reps[k], field)
        if not red:
            continue
        (_, _), lcoef = vec_lead(red, level)
        inv = field.inv(lcoef)
        red = vec_scale(red, inv, field)
        if track:
            rep = vec_scale(rep, inv, field)
        add_element(red, rep)

    return _module_interreduce(basis, reps, level, track)


def _vec_sort_key(v: VecTerms, level: FreeLevel):
    return sorted((level.key(t), str(c)) for t, c in v.items())


def _module_interreduce(basis, reps, level: FreeLevel, track: bool):
    """Minimalize and tail-reduce a module GB; keeps representations in sync."""
    field = level.ring.field
    items = [(basis[i], reps[i]) for i in range(len(basis)) if basis[i]]
    items.sort(key=lambda br: level.key(vec_lead(br[0], level)[0]))
    kept = []
    for v, r in items:
        (lc, lm), _ = vec_lead(v, level)
        if not any(klc == lc and mono_divides(klm, lm) for ((klc, klm), _, _) in kept):
            kept.append(((lc, lm), v, r))
    out_vecs, out_reps = [], []
    for idx, ((lc, lm), v, r) in enumerate(kept):
        others = [w for k, (_, w, _) in enumerate(kept) if k != idx]
        other_reps = [rr for k, (_, _, rr) in enumerate(kept) if k != idx]
        entries = []
        for w in others:
            (wc, wm), c = vec_lead(w, level)
            inv = field.inv(c)
            entries.append((wc, wm, {t: field.mul(x, inv) for t, x in w.items() if t != (wc, wm)}))
        quot = [dict() for _ in entries] if track else None
        red = _vec_reduce(dict(v), entries, level, quot)
        rep = dict(r) if track else {}
        if track:
            for k, q in enumerate(quot or []):
                for shift, c in q.items():
                    vec_axpy(rep, c, shift, other_reps[k], field)
        (rc, rm), lcoef = vec_lead(red, level)
        inv = field.inv(lcoef)
        red = vec_scale(red, inv, field)
        if track:
            rep = vec_scale(rep, inv, field)
        out_vecs.append(red)
        out_reps.append(rep)
    order_idx = sorted(range(len(out_vecs)), key=lambda k: level.key(vec_lead(out_vecs[k], level)[0]))
    out_vecs = [out_vecs[k] for k in order_idx]
    out_reps = [out_reps[k] for k in order_idx]
    return (out_vecs, out_reps) if track else (out_vecs, None)


# --------------------------------------------------------------------------- #
# Schreyer syzygies
# --------------------------------------------------------------------------- #


def schreyer_sort(gb: Sequence[VecTerms], level: FreeLevel):
    """Sort a module GB so syzygy lead terms drop the earliest variables first:
    by lead component, then lexicographically decreasing lead monomial."""
    def k(v):
        (c, m), _ = vec_lead(v, level)
        return (c, tuple(-e for e in m))

    return sorted(gb, key=k)


def schreyer_level(gb: Sequence[VecTerms], level: FreeLevel) -> FreeLevel:
    """Free module on the elements of gb, with the induced (Schreyer) order."""
    shifts, bcomp, bmono = [], [], []
    for v in gb:
        (c, m), _ = vec_lead(v, level)
        shifts.append(vec_degree(v, level))
        bcomp.append(level.base_comp[c])
        bmono.append(mono_mul(m, level.base_mono[c]))
    return FreeLevel(level.ring, len(gb), tuple(shifts), tuple(bcomp), tuple(bmono), level.order)


def schreyer_syzygies(gb: Sequence[VecTerms], level: FreeLevel):
    """Syzygy generators of a module GB (a GB themselves for the induced order).

    Every same-lead-component pair contributes sigma_ij; reductions use the
    full gb, which succeeds because gb is a Groebner basis.
    """
    field = level.ring.field
    entries = []
    leads = []
    for g in gb:
        (lc, lm), c = vec_lead(g, level)
        inv = field.inv(c)
        entries.append((lc, lm, {t: field.mul(x, inv) for t, x in g.items() if t != (lc, lm)}))
        leads.append((lc, lm))
    syz: list[VecTerms] = []
    n = len(gb)
    for i in range(n):
        ci, mi = leads[i]
        for j in range(i + 1, n):
            cj, mj = leads[j]
            if ci != cj:
                continue
            l = mono_lcm(mi, mj)
            ui, uj = mono_div(l, mi), mono_div(l, mj)
            s: VecTerms = {}
            vec_axpy(s, field.neg(field.one), ui, gb[i], field)
            vec_axpy(s, field.one, uj, gb[j], field)
            quot = [dict() for _ in entries]
            red = _vec_reduce(s, entries, level, quot)
            if red:
                raise InputError("schreyer_syzygies requires a Groebner basis")
            sigma: VecTerms = {(i, ui): field.one, (j, uj): field.neg(field.one)}
            for k, q in enumerate(quot):
                for shift, c in q.items():
                    t = (k, shift)
                    s2 = field.sub(sigma.get(t, field.zero), c)
                    if field.is_zero(s2):
                        sigma.pop(t, None)
                    else:
                        sigma[t] = s2
            if sigma:
                syz.append(sigma)
    return syz


# --------------------------------------------------------------------------- #
# syzygies of an input tuple
# --------------------------------------------------------------------------- #


def syzygy_basis(inputs, ring: PolyRing | None = None, order=DEGREVLEX):
    """Generators of the full syzygy module of a tuple of polynomials (or of
    vectors of polynomials given as equal-length lists).

    Built from the Groebner-basis trace: Schreyer generators for the basis are
    rewritten through the tracked representations, plus the rows of I - B*A
    that witness how the inputs reduce against the basis.
    """
    inputs = list(inputs)
    if not inputs:
        return []
    if isinstance(inputs[0], Polynomial):
        ring = ring or inputs[0].ring
        rank = 1
        vectors = [{(0, m): c for m, c in p.terms.items()} for p in inputs]
    else:
        first = inputs[0]
        ring = ring or next(p.ring for p in first if isinstance(p, Polynomial))
        rank = len(first)
        vectors = [vec_from_poly_column(col) for col in inputs]
    field = ring.field
    level = FreeLevel.top(ring, rank, None, order)
    # degree shifts are irrelevant for syzygy generation; use zeros

    nz = [(idx, v) for idx, v in enumerate(vectors) if v]
    syzygies: list[VecTerms] = []
    for idx, v in enumerate(vectors):
        if not v:
            unit: VecTerms = {(idx, mono_one(ring.nvars)): field.one}
            syzygies.append(unit)
    if not nz:
        return syzygies

    sub_index = [idx for idx, _ in nz]
    gb, reps = module_buchberger([v for _, v in nz], level, track=True)

    def lift(rep_vec: VecTerms) -> VecTerms:
        return {(sub_index[c], m): x for (c, m), x in rep_vec.items()}

    # sigma * A : Schreyer syzygies of the basis, rewritten over the inputs
    for sigma in schreyer_syzygies(gb, level):
        out: VecTerms = {}
        for (k, shift), c in sigma.items():
            vec_axpy(out, field.neg(c), shift, lift(reps[k]), field)
        if out:
            syzygies.append(out)

    # rows of I - B*A : inputs re-expressed through the basis
    gb_entries = []
    for g in gb:
        (lc, lm), c = vec_lead(g, level)
        inv = field.inv(c)
        gb_entries.append((lc, lm, {t: field.mul(x, inv) for t, x in g.items() if t != (lc, lm)}))
    for pos, (idx, v) in enumerate(nz):
        quot = [dict() for _ in gb_entries]
        red = _vec_reduce(dict(v), gb_entries, level, quot)
        if red:
            raise InputError("input does not reduce to zero against its own basis")
        row: VecTerms = {(idx, mono_one(ring.nvars)): field.one}
        for k, q in enumerate(quot):
            for shift, c in q.items():
                vec_axpy(row, c, shift, lift(reps[k]), field)
        if row:
            syzygies.append(row)

    return syzygies


def syzygy_components(syzygies, rank: int, ring: PolyRing):
    """Render syzygy vectors as tuples of Polynomials."""
    return [tuple(vec_component(v, i, ring) for i in range(rank)) for v in syzygies]

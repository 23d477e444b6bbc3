"""Rees-algebra and fiber-cone presentations, associated graded modules,
graded minimal free resolutions, Betti tables, and regularity.

The regularity of the extended-ideal module over the Rees algebra of m is
computed as the Betti-table regularity of the associated graded module
gr_m(I) over the polynomial ring K[y]:

  * gr_m(I) and the extended module share their regularity (the associated
    graded bridge), and
  * gr_m(I) is killed by m, so its structure factors through the fiber cone,
    whose irrelevant ideal is the image of (y); local cohomology is invariant
    under the surjection K[y] ->> fiber cone.

Resolutions are Schreyer towers (each level's syzygies are already a Groebner
basis for the induced order), minimalized by splitting off unit entries.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

from .errors import EngineInconsistency, InputError, ModeError
from .groebner import ReducedGB, buchberger, eliminate, kdim_component, normal_form
from .linalg import rank as mat_rank
from .monomials import DEGREVLEX, mono_mul, mono_one, monomials_of_degree
from .polynomials import Polynomial, PolyRing
from .rings import IdealHandle, PresentedRing, ideal_colon, ideal_combine, ideal_power, max_ideal
from .syzygy import (
    FreeLevel,
    module_buchberger,
    schreyer_level,
    schreyer_sort,
    schreyer_syzygies,
    syzygy_basis,
    vec_degree,
    vec_lead,
)


def _fresh_names(base_names, taken):
    out = []
    seen = set(taken)
    for nm in base_names:
        cand = nm + "_t"
        while cand in seen:
            cand += "_"
        seen.add(cand)
        out.append(cand)
    return out


# --------------------------------------------------------------------------- #
# Rees presentation and fiber cone
# --------------------------------------------------------------------------- #


@dataclass
class ReesPresentation:
    """K[x, y]/L presenting the Rees algebra of m, y-degree = Rees degree."""

    base: PresentedRing
    big_ring: PolyRing  # x-variables first, then their Rees companions
    rees_gb: ReducedGB  # reduced basis of L

    @property
    def nx(self) -> int:
        return self.base.nvars

    def substitution_defect(self):
        """Substitute y_i -> t*x_i into every generator of L; each coefficient
        of the result in t must fall into J.  Returns the first offender."""
        R = self.base
        n = self.nx
        tring = PolyRing(("t",) + R.ambient.names, R.field)
        t = tring.var(0)
        xs = [tring.var(i + 1) for i in range(n)]
        images = xs + [t * x for x in xs]
        jgb_t = buchberger([g.substitute(tring, xs) for g in R.defining_gb.basis], DEGREVLEX, tring) \
            if R.defining_gb.basis else None
        for g in self.rees_gb.basis:
            h = g.substitute(tring, images)
            if jgb_t is None:
                if not h.is_zero():
                    return g
            else:
                if not normal_form(h, jgb_t).is_zero():
                    return g
        return None


def rees_presentation(R: PresentedRing) -> ReesPresentation:
    """Defining ideal of the Rees algebra of m: eliminate t from
    (y_i - t*x_i : i) + J inside K[t, x, y]."""
    if not R.is_graded:
        raise ModeError("rees_presentation is a graded-mode operation")
    key = "rees_pres"
    if key in R._cache:
        return R._cache[key]
    n = R.nvars
    xnames = R.ambient.names
    ynames = tuple(_fresh_names(xnames, xnames))
    work = PolyRing(("t__",) + xnames + ynames, R.field)
    t = work.var(0)
    xs = [work.var(1 + i) for i in range(n)]
    ys = [work.var(1 + n + i) for i in range(n)]
    gens = [ys[i] - t * xs[i] for i in range(n)]
    gens += [g.substitute(work, xs) for g in R.defining_gb.basis]
    elim, small = eliminate(gens, [0], work)
    big = PolyRing(xnames + ynames, R.field)
    lifted = [p.substitute(big, list(big.gens)) for p in elim]
    gb = buchberger(lifted, DEGREVLEX, big) if lifted else ReducedGB(big, DEGREVLEX, [])
    pres = ReesPresentation(R, big, gb)
    R._cache[key] = pres
    return pres


def _specialize_to_y(p: Polynomial, yring: PolyRing, nx: int) -> Polynomial:
    """Image of p in K[y] under x -> 0 (x-variables occupy the first nx slots)."""
    terms = {}
    for m, c in p.terms.items():
        if any(m[:nx]):
            continue
        terms[m[nx:]] = c
    return yring.from_terms(terms)


def fiber_cone_presentation(R: PresentedRing):
    """(K[y], reduced basis of the fiber-cone ideal): image of L under x -> 0.

    In graded mode this presents gr_m(R), isomorphic to R via y_i -> x_i."""
    pres = rees_presentation(R)
    nx = pres.nx
    yring = PolyRing(pres.big_ring.names[nx:], R.field)
    gens = [_specialize_to_y(g, yring, nx) for g in pres.rees_gb.basis]
    gens = [g for g in gens if not g.is_zero()]
    gb = buchberger(gens, DEGREVLEX, yring) if gens else ReducedGB(yring, DEGREVLEX, [])
    return yring, gb


# --------------------------------------------------------------------------- #
# graded module presentations
# --------------------------------------------------------------------------- #


@dataclass
class GradedModulePresentation:
    """coker of a homogeneous relation matrix over a polynomial ring; the
    grading is the total degree of the ring (the Rees grading for gr modules)."""

    ring: PolyRing
    shifts: tuple
    relations: tuple  # vectors {(comp, mono): coeff}, each homogeneous

    def __post_init__(self):
        level = FreeLevel.top(self.ring, len(self.shifts), self.shifts)
        for v in self.relations:
            vec_degree(v, level)  # raises when inhomogeneous

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def component_dim(self, d: int) -> int:
        """dim_K of the degree-d component of the cokernel."""
        basis = []
        for c, s in enumerate(self.shifts):
            if d - s >= 0:
                for m in monomials_of_degree(self.ring.nvars, d - s):
                    basis.append((c, m))
        if not basis:
            return 0
        index = {t: i for i, t in enumerate(basis)}
        field = self.ring.field
        level = FreeLevel.top(self.ring, len(self.shifts), self.shifts)
        rows = []
        for v in self.relations:
            dv = vec_degree(v, level)
            if d - dv < 0:
                continue
            for mult in monomials_of_degree(self.ring.nvars, d - dv):
                row = [field.zero] * len(basis)
                for (c, m), coeff in v.items():
                    row[index[(c, mono_mul(m, mult))]] = coeff
                rows.append(row)
        return len(basis) - (mat_rank(rows, field) if rows else 0)


def assoc_module_presentation(R: PresentedRing, I: IdealHandle) -> GradedModulePresentation:
    """Finite presentation of gr_m(I) = direct sum of I*m^k/I*m^(k+1) as a
    K[y]-module in the Rees grading.

    Generators: minimal generators of I, placed in Rees degree 0 (the internal
    grading is deliberately forgotten).  Relations: syzygies of the generators
    over K[x,y]/L with the x-variables then specialized to 0, plus the
    specialized Rees relations acting on each generator slot.
    """
    if not R.is_graded:
        raise ModeError("assoc_module_presentation is a graded-mode operation")
    if I.ring != R:
        raise InputError("ideal does not belong to the ring")
    pres = rees_presentation(R)
    nx = pres.nx
    big = pres.big_ring
    yring = PolyRing(big.names[nx:], R.field)
    fiber_gens = [g for g in (_specialize_to_y(p, yring, nx) for p in pres.rees_gb.basis) if not g.is_zero()]

    if I.is_unit():
        shifts = (0,)
        rels = []
        for g in fiber_gens:
            rels.append({(0, m): c for m, c in g.terms.items()})
        return GradedModulePresentation(yring, shifts, tuple(rels))
    if I.is_zero_ideal():
        raise InputError("assoc module of the zero ideal is not defined here")

    fgens = list(I.min_gens())
    s = len(fgens)
    xs = [big.var(i) for i in range(nx)]
    f_big = [f.substitute(big, xs) for f in fgens]
    l_big = list(pres.rees_gb.basis)
    syz = syzygy_basis(f_big + l_big, big)
    relations = []
    seen = set()

    def push(vec):
        if vec:
            key = tuple(sorted(vec.items()))
            if key not in seen:
                seen.add(key)
                relations.append(vec)

    for v in syz:
        out = {}
        for (c, m), coeff in v.items():
            if c < s and not any(m[:nx]):
                out[(c, m[nx:])] = coeff
        push(out)
    for g in fiber_gens:
        for i in range(s):
            push({(i, m): c for m, c in g.terms.items()})
    return GradedModulePresentation(yring, (0,) * s, tuple(relations))


# --------------------------------------------------------------------------- #
# Betti tables and minimal free resolutions
# --------------------------------------------------------------------------- #


@dataclass
class BettiTable:
    """Graded Betti numbers of a minimal free resolution."""

    betti: dict  # (homological index i, internal degree j) -> multiplicity
    nvars: int

    @property
    def projective_dimension(self) -> int:
        return max((i for (i, _), b in self.betti.items() if b), default=0)

    @property
    def regularity(self):
        degs = [j - i for (i, j), b in self.betti.items() if b]
        return max(degs) if degs else "-infinity"

    def column(self, i: int) -> dict:
        return {j: b for (i0, j), b in self.betti.items() if i0 == i and b}

    def to_json(self) -> list:
        return [
            {"i": i, "j": j, "beta": b}
            for (i, j), b in sorted(self.betti.items())
            if b
        ]

    def to_text(self) -> str:
        """Triangular layout: row d column i holds beta_{i, i+d}."""
        if not self.betti:
            return "empty resolution (zero module)"
        pd = self.projective_dimension
        slopes = sorted({j - i for (i, j) in self.betti})
        header = ["      "] + [f"{i:>6}" for i in range(pd + 1)]
        lines = ["".join(header)]
        totals = [sum(b for (i0, _), b in self.betti.items() if i0 == i) for i in range(pd + 1)]
        lines.append("".join(["total:"] + [f"{t:>6}" for t in totals]))
        for d in range(min(slopes), max(slopes) + 1):
            row = [f"{d:>4}: "]
            for i in range(pd + 1):
                b = self.betti.get((i, i + d), 0)
                row.append(f"{b if b else '.':>6}")
            lines.append("".join(row))
        return "\n".join(lines)


def _columns_from_vectors(vectors):
    return [dict(v) for v in vectors]


def minimal_free_resolution(M: GradedModulePresentation, keep_matrices: bool = False):
    """Minimal graded Betti numbers of coker(M) via a Schreyer tower plus
    minimalization; terminates within nvars + 1 syzygy levels."""
    ring = M.ring
    n = ring.nvars
    shifts = [list(M.shifts)]
    mats = []
    rel = [dict(v) for v in M.relations if v]
    if rel:
        level = FreeLevel.top(ring, M.rank, M.shifts)
        gb, _ = module_buchberger(rel, level)
        gb = schreyer_sort(gb, level)
        cur_level = level
        while gb:
            if len(mats) > n + 2:
                raise EngineInconsistency("schreyer tower failed to terminate")
            mats.append(_columns_from_vectors(gb))
            nxt = schreyer_level(gb, cur_level)
            shifts.append(list(nxt.shifts))
            syz = schreyer_syzygies(gb, cur_level)
            syz = _minimalize_lead_terms(syz, nxt)
            syz = schreyer_sort(syz, nxt)
            gb = syz
            cur_level = nxt
    _minimalize_complex(mats, shifts, ring)
    betti: dict = {}
    for i, sh in enumerate(shifts):
        for s in sh:
            betti[(i, s)] = betti.get((i, s), 0) + 1
    table = BettiTable(betti, n)
    if keep_matrices:
        return table, mats, shifts
    return table


def _minimalize_lead_terms(vectors, level: FreeLevel):
    """Drop vectors whose lead term is divisible by another's (stays a GB)."""
    from .monomials import mono_divides

    items = sorted(vectors, key=lambda v: level.key(vec_lead(v, level)[0]))
    kept = []
    kept_leads = []
    for v in items:
        (c, m), _ = vec_lead(v, level)
        if not any(kc == c and mono_divides(km, m) for (kc, km) in kept_leads):
            kept.append(v)
            kept_leads.append((c, m))
    return kept


def _minimalize_complex(mats, shifts, ring: PolyRing):
    """Split off unit entries; pivots chosen in lexicographic (row, column)
    order for determinism.  mats[i] holds the columns of F_{i+1} -> F_i."""
    field = ring.field
    one_mono = mono_one(ring.nvars)

    def find_pivot(cols):
        best = None
        for cj, col in enumerate(cols):
            for (r, mono), c in col.items():
                if mono == one_mono:
                    if best is None or (r, cj) < best[:2]:
                        best = (r, cj, c)
        return best

    changed = True
    while changed:
        changed = False
        for li in range(len(mats)):
            piv = find_pivot(mats[li])
            if piv is None:
                continue
            r0, c0, u = piv
            uinv = field.inv(u)
            cols = mats[li]
            # column operations: clear the rest of row r0
            pivcol = cols[c0]
            for cj in range(len(cols)):
                if cj == c0:
                    continue
                lam = {m: field.mul(c, uinv) for (r, m), c in cols[cj].items() if r == r0}
                if not lam:
                    continue
                _col_axpy(cols[cj], lam, pivcol, field)
                if li + 1 < len(mats):
                    # basis change in F_{li+1}: fix rows of the next matrix
                    for w in mats[li + 1]:
                        _row_axpy(w, c0, cj, lam, field)
            # row operations: clear the rest of column c0
            for r1 in sorted({r for (r, m) in pivcol if r != r0}):
                mu = {m: field.mul(c, uinv) for (r, m), c in pivcol.items() if r == r1}
                if not mu:
                    continue
                for col in cols:
                    _row_axpy_rows(col, r1, r0, mu, field)
                if li >= 1:
                    _col_axpy_add(mats[li - 1][r0], mu, mats[li - 1][r1], field)
            # split off the trivial pair (F_li basis c0) <-> (F_{li-1} basis r0)
            if li + 1 < len(mats):
                for w in mats[li + 1]:
                    if any(r == c0 for (r, m) in w):
                        raise EngineInconsistency("minimalization left a nonzero row")
            if li >= 1 and mats[li - 1][r0]:
                raise EngineInconsistency("minimalization left a nonzero column")
            _delete_col(mats, shifts, li, c0)
            _delete_row(mats, shifts, li, r0)
            changed = True
            break
    # drop empty tail levels
    while mats and not mats[-1]:
        mats.pop()
        if len(shifts) > len(mats) + 1:
            shifts.pop()


def _col_axpy(dst: dict, lam: dict, src: dict, field):
    """dst -= lam * src for columns (terms keyed (row, mono))."""
    for (r, m), c in src.items():
        for mq, cq in lam.items():
            t = (r, mono_mul(m, mq))
            s = field.sub(dst.get(t, field.zero), field.mul(c, cq))
            if field.is_zero(s):
                dst.pop(t, None)
            else:
                dst[t] = s


def _row_axpy(col: dict, target_row: int, source_row: int, lam: dict, field):
    """col[target_row] += lam * col[source_row] inside one column."""
    adds = []
    for (r, m), c in list(col.items()):
        if r == source_row:
            for mq, cq in lam.items():
                adds.append(((target_row, mono_mul(m, mq)), field.mul(c, cq)))
    for t, c in adds:
        s = field.add(col.get(t, field.zero), c)
        if field.is_zero(s):
            col.pop(t, None)
        else:
            col[t] = s


def _row_axpy_rows(col: dict, r1: int, r0: int, mu: dict, field):
    """col[r1] -= mu * col[r0] (row operation applied within a column)."""
    subs = []
    for (r, m), c in list(col.items()):
        if r == r0:
            for mq, cq in mu.items():
                subs.append(((r1, mono_mul(m, mq)), field.mul(c, cq)))
    for t, c in subs:
        s = field.sub(col.get(t, field.zero), c)
        if field.is_zero(s):
            col.pop(t, None)
        else:
            col[t] = s


def _col_axpy_add(dst: dict, mu: dict, src: dict, field):
    """dst += mu * src for columns."""
    for (r, m), c in src.items():
        for mq, cq in mu.items():
            t = (r, mono_mul(m, mq))
            s = field.add(dst.get(t, field.zero), field.mul(c, cq))
            if field.is_zero(s):
                dst.pop(t, None)
            else:
                dst[t] = s


def _delete_col(mats, shifts, li, c0):
    mats[li].pop(c0)
    shifts[li + 1].pop(c0)
    if li + 1 < len(mats):
        out = []
        for w in mats[li + 1]:
            neww = {}
            for (r, m), c in w.items():
                neww[(r - 1 if r > c0 else r, m)] = c
            out.append(neww)
        mats[li + 1] = out


def _delete_row(mats, shifts, li, r0):
    shifts[li].pop(r0)
    out = []
    for col in mats[li]:
        newc = {}
        for (r, m), c in col.items():
            if r == r0:
                raise EngineInconsistency("deleting a nonzero row")
            newc[(r - 1 if r > r0 else r, m)] = c
        out.append(newc)
    mats[li] = out
    if li >= 1:
        mats[li - 1].pop(r0)


# --------------------------------------------------------------------------- #
# regularity
# --------------------------------------------------------------------------- #


def regularity(M: GradedModulePresentation):
    return minimal_free_resolution(M).regularity


def rees_regularity(R: PresentedRing, I: IdealHandle) -> int:
    """Regularity of the extended module of I over the Rees algebra of m,
    computed through gr_m(I) in the Rees grading."""
    if not R.is_graded:
        raise ModeError("rees_regularity is unavailable in local mode; use cap-based invariants")
    if I.is_zero_ideal():
        raise InputError("rees_regularity needs a nonzero ideal")
    reg = regularity(assoc_module_presentation(R, I))
    if reg == "-infinity":
        raise EngineInconsistency("gr module of a nonzero ideal vanished")
    return reg


def rees_ring_regularity(R: PresentedRing) -> int:
    """Regularity of the Rees algebra of m (through gr_m(R))."""
    key = "rees_ring_reg"
    if key not in R._cache:
        R._cache[key] = rees_regularity(R, R.unit_ideal())
    return R._cache[key]


# --------------------------------------------------------------------------- #
# component dimensions and checks
# --------------------------------------------------------------------------- #


def ideal_quotient_dim(A: IdealHandle, B: IdealHandle) -> int:
    """dim_K A/B for nested graded ideals B <= A with m*A <= B (finite length)."""
    bound = A.max_gen_degree()
    total = 0
    for d in range(bound + 1):
        sa = count_std(A, d)
        sb = count_std(B, d)
        total += sb - sa
    return total


def count_std(handle: IdealHandle, d: int) -> int:
    return kdim_component(handle.gb, d)


def pq_component_dims(R: PresentedRing, I: IdealHandle, k: int):
    """(dim gr_k, dim D_k, dim Q_k) for the degree-k strands of the associated
    graded module, the torsion module, and their extension."""
    if not R.is_graded:
        raise ModeError("pq_component_dims is a graded-mode operation")
    m = max_ideal(R)
    Imk = ideal_combine("product", I, ideal_power(m, k))
    Imk1 = ideal_combine("product", I, ideal_power(m, k + 1))
    P = ideal_colon(Imk1, m)
    gr_k = ideal_quotient_dim(Imk, Imk1)
    d_k = ideal_quotient_dim(P, Imk)
    q_k = ideal_quotient_dim(P, Imk1)
    return gr_k, d_k, q_k


def socle_containment_holds(R: PresentedRing, I: IdealHandle, k: int) -> bool:
    """(I*m^(k+1) : m) <= m^k, the graded-case containment behind the socle
    identification."""
    m = max_ideal(R)
    Imk1 = ideal_combine("product", I, ideal_power(m, k + 1))
    P = ideal_colon(Imk1, m)
    mk = ideal_power(m, k)
    return mk.contains_handle(P)


def hilbert_function_of_free(shifts, n: int, d: int) -> int:
    return sum(comb(d - s + n - 1, n - 1) for s in shifts if d >= s)


def verify_hilbert_identity(M: GradedModulePresentation, extra_degrees: int = 2) -> bool:
    """Alternating sum of the resolution's Hilbert functions equals the
    module's Hilbert function (checked through reg + nvars + extra degrees)."""
    table, mats, shifts = minimal_free_resolution(M, keep_matrices=True)
    n = M.ring.nvars
    reg = table.regularity
    top = (0 if reg == "-infinity" else reg) + n + extra_degrees
    lo = min([min(s) for s in shifts if s], default=0)
    for d in range(lo, top + 1):
        lhs = M.component_dim(d)
        rhs = 0
        sign = 1
        for sh in shifts:
            rhs += sign * hilbert_function_of_free(sh, n, d)
            sign = -sign
        if lhs != rhs:
            return False
    return True

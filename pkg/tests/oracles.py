"""Independent brute-force oracles used to validate the engine.

Everything here is deliberately naive linear algebra over explicit monomial
bases: no Groebner machinery, no normal forms, no Schreyer data.
"""
from __future__ import annotations

from itertools import combinations

from daolab.linalg import echelon, in_row_span, rank
from daolab.monomials import mono_mul, monomials_of_degree
from daolab.polynomials import Polynomial, PolyRing


def monomial_basis_upto(n: int, d: int):
    out = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(n, k))
    return out


def poly_to_vector(p: Polynomial, index: dict, field):
    v = [field.zero] * len(index)
    for m, c in p.terms.items():
        v[index[m]] = c
    return v


def membership_by_linear_algebra(f: Polynomial, gens, degree_bound: int) -> bool:
    """f in (gens), searching products x^a * g of total degree <= degree_bound.

    A hit at any bound certifies membership; a miss is decisive only when the
    bound is large enough (use membership_adaptive for two-sided tests)."""
    ring = f.ring
    field = ring.field
    basis = monomial_basis_upto(ring.nvars, degree_bound)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        gd = g.total_degree()
        for k in range(degree_bound - gd + 1):
            for m in monomials_of_degree(ring.nvars, k):
                prod = g.mul_term(m, field.one)
                if prod.total_degree() <= degree_bound:
                    rows.append(poly_to_vector(prod, index, field))
    if f.total_degree() > degree_bound:
        raise ValueError("f exceeds the oracle's degree bound")
    return in_row_span(rows, poly_to_vector(f, index, field), field)


def membership_adaptive(f: Polynomial, gens, slack: int = 6) -> bool:
    """Membership search with the multiplier bound raised until stable; exact
    on the small random inputs the test corpus uses."""
    d = max(f.total_degree(), max(g.total_degree() for g in gens if not g.is_zero()))
    for bound in range(d, d + slack + 1):
        if membership_by_linear_algebra(f, gens, bound):
            return True
    return False


def syzygies_by_linear_algebra(polys, degree_bound: int):
    """All homogeneous syzygy vectors (v_1..v_s) with deg(v_i f_i) <= bound,
    as lists of Polynomials; assumes homogeneous inputs."""
    ring = polys[0].ring
    field = ring.field
    degs = [p.total_degree() for p in polys]
    out = []
    for d in range(degree_bound + 1):
        # unknowns: coefficients of each v_i over monomials of degree d - deg f_i
        cols = []  # (i, multiplier monomial)
        for i, p in enumerate(polys):
            dd = d - degs[i]
            if dd < 0:
                continue
            for m in monomials_of_degree(ring.nvars, dd):
                cols.append((i, m))
        if not cols:
            continue
        target = list(monomials_of_degree(ring.nvars, d))
        tindex = {m: k for k, m in enumerate(target)}
        rows = [[field.zero] * len(cols) for _ in target]
        for j, (i, m) in enumerate(cols):
            prod = polys[i].mul_term(m, field.one)
            for mm, c in prod.terms.items():
                rows[tindex[mm]][j] = c
        from daolab.linalg import kernel_basis

        for v in kernel_basis(rows, field, len(cols)):
            vec = [ring.zero] * len(polys)
            for j, c in enumerate(v):
                if not field.is_zero(c):
                    i, m = cols[j]
                    vec[i] = vec[i] + ring.monomial(m, c)
            out.append(vec)
    return out


# --------------------------------------------------------------------------- #
# Koszul-homology Betti numbers
# --------------------------------------------------------------------------- #


class _GradedPieces:
    """Explicit components M_d of a graded module presentation, with the
    multiplication maps by the variables."""

    def __init__(self, pres, top_degree: int):
        self.pres = pres
        self.ring = pres.ring
        self.field = pres.ring.field
        self.top = top_degree
        self._data = {}
        for d in range(min(pres.shifts) if pres.shifts else 0, top_degree + 1):
            self._data[d] = self._component(d)

    def _free_basis(self, d):
        out = []
        for c, s in enumerate(self.pres.shifts):
            if d - s >= 0:
                for m in monomials_of_degree(self.ring.nvars, d - s):
                    out.append((c, m))
        return out

    def _component(self, d):
        from daolab.syzygy import FreeLevel, vec_degree

        field = self.field
        basis = self._free_basis(d)
        index = {t: i for i, t in enumerate(basis)}
        level = FreeLevel.top(self.ring, len(self.pres.shifts), self.pres.shifts)
        rows = []
        for v in self.pres.relations:
            dv = vec_degree(v, level)
            if d - dv < 0:
                continue
            for mult in monomials_of_degree(self.ring.nvars, d - dv):
                row = [field.zero] * len(basis)
                for (c, m), coeff in v.items():
                    row[index[(c, mono_mul(m, mult))]] = coeff
                rows.append(row)
        pivots = echelon(rows, field) if rows else []
        pivot_set = set(pivots)
        free_cols = [i for i in range(len(basis)) if i not in pivot_set]
        return {
            "basis": basis,
            "index": index,
            "rows": rows,  # echelonized
            "pivots": pivots,
            "free": free_cols,
        }

    def dim(self, d):
        if d not in self._data:
            return 0
        return len(self._data[d]["free"])

    def reduce(self, d, vec):
        """Reduce a raw F0_d coordinate vector modulo the relations; returns
        coordinates over the free columns."""
        data = self._data[d]
        field = self.field
        v = list(vec)
        for r, pc in enumerate(data["pivots"]):
            c = v[pc]
            if not field.is_zero(c):
                row = data["rows"][r]
                v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
        return [v[i] for i in data["free"]]

    def multiply(self, d, var_index, coords):
        """Coordinates of y_t * (class in M_d) inside M_{d+1}."""
        data = self._data[d]
        field = self.field
        up = self._data[d + 1]
        raw = [field.zero] * len(up["basis"])
        e = [0] * self.ring.nvars
        e[var_index] = 1
        sh = tuple(e)
        for coord, i in zip(coords, data["free"]):
            if field.is_zero(coord):
                continue
            (c, m) = data["basis"][i]
            raw[up["index"][(c, mono_mul(m, sh))]] = field.add(
                raw[up["index"][(c, mono_mul(m, sh))]], coord
            )
        return self.reduce(d + 1, raw)


def koszul_betti(pres, i: int, j: int, pieces: _GradedPieces | None = None) -> int:
    """beta_{i,j} = dim H_i of the Koszul complex on the variables tensored
    with the module, in internal degree j."""
    ring = pres.ring
    n = ring.nvars
    field = ring.field
    pieces = pieces or _GradedPieces(pres, j + 1)

    def space(ii, jj):
        subsets = list(combinations(range(n), ii))
        return subsets, pieces.dim(jj - ii)

    def differential(ii, jj):
        """Matrix of d: K_ii (x) M_{jj-ii} -> K_{ii-1} (x) M_{jj-ii+1}."""
        subs_src, mdim_src = space(ii, jj)
        subs_dst, mdim_dst = space(ii - 1, jj)
        dst_index = {s: k for k, s in enumerate(subs_dst)}
        rows = ncols = 0
        ncols = len(subs_src) * mdim_src
        nrows = len(subs_dst) * mdim_dst
        mat = [[field.zero] * ncols for _ in range(nrows)]
        col = 0
        for s in subs_src:
            for b in range(mdim_src):
                coords = [field.zero] * mdim_src
                coords[b] = field.one
                for pos, t in enumerate(s):
                    rest = tuple(v for v in s if v != t)
                    sign = field.of_int((-1) ** pos)
                    image = pieces.multiply(jj - ii, t, coords)
                    base = dst_index[rest] * mdim_dst
                    for k, c in enumerate(image):
                        mat[base + k][col] = field.add(mat[base + k][col], field.mul(sign, c))
                col += 1
        return mat, nrows, ncols

    _, mdim = space(i, j)
    total = len(list(combinations(range(n), i))) * mdim
    if total == 0:
        return 0
    if i >= 1:
        mat, _, _ = differential(i, j)
        rank_i = rank(mat, field)
    else:
        rank_i = 0
    if i + 1 <= n:
        mat2, _, _ = differential(i + 1, j)
        rank_next = rank(mat2, field)
    else:
        rank_next = 0
    return total - rank_i - rank_next


def full_koszul_betti_table(pres, reg_guess: int):
    """All beta_{i,j} for i <= nvars and j <= i + reg_guess + 1."""
    n = pres.ring.nvars
    top = reg_guess + n + 2
    pieces = _GradedPieces(pres, top + 1)
    out = {}
    for i in range(n + 1):
        for j in range(min(pres.shifts) if pres.shifts else 0, i + reg_guess + 2):
            b = koszul_betti(pres, i, j, pieces)
            if b:
                out[(i, j)] = b
    return out

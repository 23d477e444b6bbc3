"""Truncated-space linear algebra for local-at-origin ideal comparisons.

An ideal X of S with m^a contained in its localization at the origin is
faithfully represented, up to that localization, by the subspace
(X + m^D)/m^D of V = S/m^D for D <= a.  Two facts make the finite tests exact:

* Nakayama: A is locally contained in B iff A lies in B + m*A, and the
  truncated containment A <= B + m^D together with m^D <= B-local gives this.
* Ideals containing a power of m are supported only at the origin, so their
  local equality is plain global equality of subspaces.

Rows are sparse dicts {monomial: coefficient}; the echelon is fully reduced
with monic pivots, so a subspace has a unique representation.
"""
from __future__ import annotations

from .monomials import mono_mul, monomials_of_degree
from .polynomials import Polynomial, PolyRing


class TruncatedSpace:
    """The image of an ideal inside V = S/m^level, closed under multiplication
    by the variables (i.e. an ideal of V)."""

    __slots__ = ("ring", "level", "pivots")

    def __init__(self, ring: PolyRing, level: int):
        self.ring = ring
        self.level = level
        self.pivots: dict = {}  # pivot monomial -> reduced monic row

    # -- row reduction -------------------------------------------------------
    def _truncate_poly(self, p: Polynomial) -> dict:
        return {m: c for m, c in p.terms.items() if sum(m) < self.level}

    def reduce_row(self, row: dict) -> dict:
        # Pivots are the largest monomials of their rows, so substitution only
        # introduces smaller monomials; one descending sweep suffices.
        import heapq

        field = self.ring.field
        fzero = field.zero
        out = dict(row)
        heap = [(-sum(m), tuple(-e for e in m), m) for m in out]
        heapq.heapify(heap)
        while heap:
            _, _, m = heapq.heappop(heap)
            if m not in out:
                continue
            piv = self.pivots.get(m)
            if piv is None:
                continue
            c = out[m]
            for mm, cc in piv.items():
                s = field.sub(out.get(mm, fzero), field.mul(c, cc))
                if field.is_zero(s):
                    out.pop(mm, None)
                else:
                    if mm not in out and mm != m:
                        heapq.heappush(heap, (-sum(mm), tuple(-e for e in mm), mm))
                    out[mm] = s
            out.pop(m, None)
        return out

    def insert_row(self, row: dict) -> dict | None:
        """Reduce and adjoin a row; returns the new pivot row or None.

        The echelon is forward-reduced only (pivot monomials are the largest
        in their rows); comparisons go through mutual containment."""
        field = self.ring.field
        red = self.reduce_row(row)
        if not red:
            return None
        piv = max(red, key=lambda m: (sum(m), m))
        inv = field.inv(red[piv])
        red = {m: field.mul(c, inv) for m, c in red.items()}
        self.pivots[piv] = red
        return red

    # -- construction ----------------------------------------------------------
    @classmethod
    def from_ideal_gens(cls, ring: PolyRing, gens, level: int) -> "TruncatedSpace":
        """Span of all monomial multiples of gens inside S/m^level, via closure
        under multiplication by the variables."""
        space = cls(ring, level)
        queue = []
        for g in gens:
            row = space._truncate_poly(g)
            added = space.insert_row(row)
            if added is not None:
                queue.append(added)
        shifts = []
        for i in range(ring.nvars):
            e = [0] * ring.nvars
            e[i] = 1
            shifts.append(tuple(e))
        while queue:
            row = queue.pop()
            for sh in shifts:
                moved = {}
                for m, c in row.items():
                    mm = mono_mul(m, sh)
                    if sum(mm) < level:
                        moved[mm] = c
                if moved:
                    added = space.insert_row(moved)
                    if added is not None:
                        queue.append(added)
        return space

    # -- queries ------------------------------------------------------------------
    def dim(self) -> int:
        return len(self.pivots)

    def contains_poly(self, p: Polynomial) -> bool:
        """Membership of p modulo m^level."""
        return not self.reduce_row(self._truncate_poly(p))

    def contains_space(self, other: "TruncatedSpace") -> bool:
        return all(not self.reduce_row(dict(r)) for r in other.pivots.values())

    def equals(self, other: "TruncatedSpace") -> bool:
        if self.level != other.level:
            raise ValueError("comparing spaces at different truncation levels")
        if set(self.pivots) != set(other.pivots):
            return False
        return self.contains_space(other)

    def truncate_to(self, level: int) -> "TruncatedSpace":
        """Re-truncate to a smaller level (rows re-echeloned)."""
        if level > self.level:
            raise ValueError("can only truncate downward")
        out = TruncatedSpace(self.ring, level)
        for row in self.pivots.values():
            out.insert_row({m: c for m, c in row.items() if sum(m) < level})
        return out

    def lift_rows(self):
        """Pivot rows as honest polynomials (deterministic order)."""
        ring = self.ring
        rows = [ring.from_terms(dict(r)) for r in self.pivots.values()]
        rows.sort(key=lambda p: p.sort_key())
        return rows

    def contains_power(self, d: int) -> bool:
        """All monomials of degree d lie in the space (d < level required)."""
        if d >= self.level:
            raise ValueError("power test needs d < truncation level")
        one = self.ring.field.one
        return all(not self.reduce_row({m: one}) for m in monomials_of_degree(self.ring.nvars, d))

    # -- colon kernels -----------------------------------------------------------
    def colon_by_polys(self, multipliers) -> "TruncatedSpace":
        """{u in V : u*f in this space for every multiplier f}, an ideal of V.

        Exact for the colon of the represented local ideal by (multipliers)
        whenever m^level is locally contained in the represented ideal.
        """
        from .linalg import kernel_basis

        ring = self.ring
        field = self.ring.field
        vbasis = []
        for d in range(self.level):
            vbasis.extend(monomials_of_degree(ring.nvars, d))
        mult_terms = [
            {m: c for m, c in f.terms.items()} for f in multipliers if not f.is_zero()
        ]

        residual_cols = []
        residual_monos = []
        zero_monos = []
        for u in vbasis:
            images = []
            nonzero = False
            for ft in mult_terms:
                prod = {}
                for m, c in ft.items():
                    mm = mono_mul(m, u)
                    if sum(mm) < self.level:
                        prod[mm] = field.add(prod.get(mm, field.zero), c)
                nf = self.reduce_row(prod)
                images.append(nf)
                if nf:
                    nonzero = True
            if nonzero:
                residual_monos.append(u)
                residual_cols.append(images)
            else:
                zero_monos.append(u)

        out = TruncatedSpace(ring, self.level)
        for u in zero_monos:
            out.insert_row({u: field.one})
        if residual_monos:
            # coordinates of residual images: union of their support monomials
            support = sorted(
                {m for images in residual_cols for nf in images for m in nf},
                key=lambda m: (sum(m), m),
            )
            sindex = {m: i for i, m in enumerate(support)}
            k = len(mult_terms)
            rows_per_col = len(support) * k
            matrix_rows = [[field.zero] * len(residual_monos) for _ in range(rows_per_col)]
            for j, images in enumerate(residual_cols):
                for fi, nf in enumerate(images):
                    for m, c in nf.items():
                        matrix_rows[fi * len(support) + sindex[m]][j] = c
            matrix_rows = [r for r in matrix_rows if any(not field.is_zero(x) for x in r)]
            for v in kernel_basis(matrix_rows, field, len(residual_monos)):
                row = {}
                for j, c in enumerate(v):
                    if not field.is_zero(c):
                        row[residual_monos[j]] = c
                out.insert_row(row)
        return out

    def colon_by_max_ideal(self) -> "TruncatedSpace":
        return self.colon_by_polys(list(self.ring.gens))

import random

from daolab.fields import GF
from daolab.monomials import DEGREVLEX
from daolab.polynomials import PolyRing
from daolab.syzygy import (
    FreeLevel,
    module_buchberger,
    module_normal_form,
    syzygy_basis,
    syzygy_components,
    vec_from_poly_column,
)

from .oracles import syzygies_by_linear_algebra

F = GF(32003)
R2 = PolyRing(("x", "y"), F)


def _kills_tuple(vecs, polys):
    ring = polys[0].ring
    for v in vecs:
        total = ring.zero
        for comp in range(len(polys)):
            from daolab.syzygy import vec_component

            total = total + vec_component(v, comp, ring) * polys[comp]
        if not total.is_zero():
            return False
    return True


def _generates(syz_out, brute_vectors, rank, ring):
    """Every brute-force syzygy reduces to zero against the computed ones."""
    level = FreeLevel.top(ring, rank)
    gb, _ = module_buchberger(syz_out, level)
    for vec in brute_vectors:
        v = vec_from_poly_column(vec)
        if module_normal_form(v, gb, level):
            return False
    return True


def test_koszul_pairs():
    x, y = R2.gens
    out = syzygy_basis([x, y])
    assert _kills_tuple(out, [x, y])
    comps = syzygy_components(out, 2, R2)
    assert any({p.monic().to_str() for p in c if not p.is_zero()} == {"y", "x"} for c in comps)
    out2 = syzygy_basis([x * x, y * y])
    assert _kills_tuple(out2, [x * x, y * y])
    brute = syzygies_by_linear_algebra([x * x, y * y], 5)
    assert _generates(out2, brute, 2, R2)


def test_three_monomials():
    x, y = R2.gens
    polys = [x * x, x * y, y * y]
    out = syzygy_basis(polys)
    assert _kills_tuple(out, polys)
    brute = syzygies_by_linear_algebra(polys, 4)
    assert len(brute) > 0
    assert _generates(out, brute, 3, R2)


def test_inhomogeneous_tuple():
    x, y = R2.gens
    polys = [x * x - y, x * y - R2.one]
    out = syzygy_basis(polys)
    assert _kills_tuple(out, polys)


def test_zero_entries_give_unit_syzygies():
    x, y = R2.gens
    out = syzygy_basis([x, R2.zero, y])
    assert _kills_tuple(out, [x, R2.zero, y])
    comps = syzygy_components(out, 3, R2)
    assert any(c[1].is_one() and c[0].is_zero() and c[2].is_zero() for c in comps)


def test_random_tuples_kill_property():
    rng = random.Random(21)
    for _ in range(10):
        polys = []
        for _ in range(rng.randint(2, 4)):
            terms = {
                (rng.randint(0, 2), rng.randint(0, 2)): F.of_int(rng.randint(-5, 5))
                for _ in range(rng.randint(1, 3))
            }
            p = R2.from_terms(terms)
            polys.append(p)
        if all(p.is_zero() for p in polys):
            continue
        out = syzygy_basis(polys, R2)
        assert _kills_tuple(out, polys)


def test_module_buchberger_vectors():
    x, y = R2.gens
    level = FreeLevel.top(R2, 2)
    v1 = vec_from_poly_column([x, y])
    v2 = vec_from_poly_column([y, x])
    gb, _ = module_buchberger([v1, v2], level)
    # membership of combinations
    comb = {}
    for t, c in v1.items():
        comb[t] = c
    assert not module_normal_form(comb, gb, level)
    not_member = vec_from_poly_column([R2.one, R2.zero])
    assert module_normal_form(not_member, gb, level)

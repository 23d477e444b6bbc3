"""Monomials as dense exponent tuples, and global monomial orders.

A monomial in n variables is a tuple of n naturals.  Orders expose a `key`
function such that m1 < m2 in the order iff key(m1) < key(m2); all orders here
are global (1 is minimal) and multiplicative.
"""
from __future__ import annotations

from typing import Iterable

Monomial = tuple  # tuple[int, ...]


def mono_one(n: int) -> Monomial:
    return (0,) * n


def mono_deg(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """a | b, componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class MonomialOrder:
    """Base class; subclasses provide key(mono) and a stable identity."""

    name = "order"

    def key(self, m: Monomial):  # pragma: no cover - abstract
        raise NotImplementedError

    def max_term(self, terms: dict):
        return max(terms, key=self.key)

    def sorted_monomials(self, monos: Iterable[Monomial], reverse: bool = True):
        return sorted(monos, key=self.key, reverse=reverse)

    def __eq__(self, other):
        return type(self) is type(other) and self._ident() == other._ident()

    def __hash__(self):
        return hash((type(self).__name__, self._ident()))

    def _ident(self):
        return ()

    def __repr__(self):
        return self.name


class DegRevLex(MonomialOrder):
    """Degree reverse lexicographic: total degree first, ties by the last
    nonzero entry of the difference being negative."""

    name = "degrevlex"

    def key(self, m: Monomial):
        return (sum(m), tuple(-e for e in reversed(m)))


class Lex(MonomialOrder):
    """Pure lexicographic with the first variable largest."""

    name = "lex"

    def key(self, m: Monomial):
        return m


class BlockElim(MonomialOrder):
    """Block order eliminating a set of variable positions: degrevlex on the
    block, then degrevlex on the remaining variables.  Any monomial touching
    the block beats every block-free monomial."""

    name = "block"

    def __init__(self, block: Iterable[int], nvars: int):
        self.block = tuple(sorted(set(block)))
        self.nvars = nvars
        inblock = set(self.block)
        self._rest = tuple(i for i in range(nvars) if i not in inblock)

    def _ident(self):
        return (self.block, self.nvars)

    def key(self, m: Monomial):
        b = tuple(m[i] for i in self.block)
        r = tuple(m[i] for i in self._rest)
        return (
            sum(b),
            tuple(-e for e in reversed(b)),
            sum(r),
            tuple(-e for e in reversed(r)),
        )

    def __repr__(self):
        return f"block{list(self.block)}"


DEGREVLEX = DegRevLex()
LEX = Lex()


def monomials_of_degree(n: int, d: int):
    """Yield all exponent tuples of total degree d in n variables."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest

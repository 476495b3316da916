"""Buchberger engine over Q(i): normal forms, membership, elimination, dimension."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from .graded import IdealSpec, PreconditionError
from .poly import (
    Polynomial,
    PolyRing,
    grevlex_key,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)
from .scalar import ONE


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex, lex, or an elimination block order (first block greatest)."""

    kind: str = "grevlex"
    block_size: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "block" and self.block_size <= 0:
            raise ValueError("block order needs a positive block size")

    def key(self, exps):
        if self.kind == "grevlex":
            return grevlex_key(exps)
        if self.kind == "lex":
            return tuple(exps)
        bs = self.block_size
        return (grevlex_key(exps[:bs]), grevlex_key(exps[bs:]))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def leading_term(p: Polynomial, order: MonomialOrder):
    lm = max(p.terms, key=order.key)
    return lm, p.terms[lm]


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, auto-reduced, deterministic order."""

    ring: PolyRing
    order: MonomialOrder
    elements: tuple

    @property
    def leading_monomials(self) -> tuple:
        return tuple(leading_term(g, self.order)[0] for g in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def normal_form(p: Polynomial, basis: Union[GroebnerBasis, Sequence[Polynomial]],
                order: Optional[MonomialOrder] = None) -> Polynomial:
    """Remainder of p with no term divisible by any leading monomial."""
    if isinstance(basis, GroebnerBasis):
        order = basis.order
        elements = basis.elements
    else:
        order = order or GREVLEX
        elements = [g for g in basis if g]
    leads = [leading_term(g, order) for g in elements]
    work = dict(p.terms)
    remainder: dict = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        for g, (lm, lc) in zip(elements, leads):
            if monomial_divides(lm, m):
                shift = monomial_div(m, lm)
                factor = c / lc
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    key = monomial_mul(gm, shift)
                    sub = gc * factor
                    s = work.get(key)
                    if s is None:
                        work[key] = -sub
                    else:
                        s = s - sub
                        if s:
                            work[key] = s
                        else:
                            del work[key]
                break
        else:
            remainder[m] = c
    return Polynomial(p.ring, remainder)


def _spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lmf, lcf = leading_term(f, order)
    lmg, lcg = leading_term(g, order)
    lcm = monomial_lcm(lmf, lmg)
    a = f.mul_term(monomial_div(lcm, lmf), lcf.inverse())
    b = g.mul_term(monomial_div(lcm, lmg), lcg.inverse())
    return a - b


def _update_pairs(lms: list, pairs: set, new_index: int):
    """Gebauer-Moeller pair update for the element at new_index."""
    lmf = lms[new_index]
    # chain criterion against existing pairs
    kept = set()
    for i, j in pairs:
        old = monomial_lcm(lms[i], lms[j])
        if (not monomial_divides(lmf, old)
                or monomial_lcm(lms[i], lmf) == old
                or monomial_lcm(lms[j], lmf) == old):
            kept.add((i, j))
    pairs.clear()
    pairs.update(kept)
    # group new pairs by lcm, keep minimal lcms, apply coprime criterion
    by_lcm: dict = {}
    for i in range(new_index):
        by_lcm.setdefault(monomial_lcm(lms[i], lmf), []).append(i)
    minimal = []
    for lcm in sorted(by_lcm, key=grevlex_key):
        if all(not monomial_divides(other, lcm) for other in minimal):
            minimal.append(lcm)
    for lcm in minimal:
        coprime = any(
            monomial_lcm(lms[i], lmf) == monomial_mul(lms[i], lmf)
            for i in by_lcm[lcm]
        )
        if not coprime:
            pairs.add((min(by_lcm[lcm]), new_index))


def buchberger(gens: Iterable[Polynomial], order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis, normal pair selection, deterministic."""
    basis = [g for g in gens if g]
    if not basis:
        raise PreconditionError("need at least one nonzero generator")
    ring = basis[0].ring
    basis = [g.scale(leading_term(g, order)[1].inverse()) for g in basis]
    lms = [leading_term(g, order)[0] for g in basis]
    pairs: set = set()
    for k in range(len(basis)):
        _update_pairs(lms, pairs, k)
    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (
                sum(monomial_lcm(lms[p[0]], lms[p[1]])),
                order.key(monomial_lcm(lms[p[0]], lms[p[1]])),
                p,
            ),
        )
        pairs.discard((i, j))
        s = normal_form(_spoly(basis[i], basis[j], order), basis, order)
        if not s:
            continue
        s = s.scale(leading_term(s, order)[1].inverse())
        basis.append(s)
        lms.append(leading_term(s, order)[0])
        _update_pairs(lms, pairs, len(basis) - 1)
    # minimalize: drop elements whose lead is divisible by another lead
    order_index = sorted(range(len(basis)), key=lambda k: order.key(lms[k]))
    minimal: list = []
    for k in order_index:
        if all(not monomial_divides(leading_term(m, order)[0], lms[k]) for m in minimal):
            minimal.append(basis[k])
    # interreduce to the unique reduced basis
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        r = normal_form(g, others, order)
        reduced.append(r.scale(leading_term(r, order)[1].inverse()))
    reduced.sort(key=lambda g: order.key(leading_term(g, order)[0]))
    return GroebnerBasis(ring=ring, order=order, elements=tuple(reduced))


def ideal_membership(p: Polynomial, ideal: Union[IdealSpec, GroebnerBasis]) -> bool:
    """p in the ideal, decided by reduction to zero (grevlex by default)."""
    if isinstance(ideal, GroebnerBasis):
        gb = ideal
    else:
        if not ideal.generators:
            return not p
        gb = buchberger(ideal.generators, GREVLEX)
    return not normal_form(p, gb)


def krull_dimension(ideal: Union[IdealSpec, GroebnerBasis]) -> int:
    """Krull dimension of R/I (the affine cone), via the leading-term ideal.

    Equals the largest size of a variable subset S such that no leading
    monomial of the reduced grevlex basis involves only variables from S.
    """
    if isinstance(ideal, GroebnerBasis):
        gb = ideal
        ring = gb.ring
    else:
        ring = ideal.ring
        if not ideal.generators:
            return ring.arity
        gb = buchberger(ideal.generators, GREVLEX)
    n = ring.arity
    supports = []
    for lm in gb.leading_monomials:
        support = frozenset(k for k, e in enumerate(lm) if e)
        if not support:
            raise PreconditionError("unit ideal has no dimension")
        supports.append(support)
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if all(not support <= s for support in supports):
                return size
    return 0


def elimination_ideal(ideal: IdealSpec, eliminate) -> IdealSpec:
    """Generators of the ideal intersected with the ring without `eliminate`.

    Uses a block order with the eliminated variables greatest; the result
    lives in the ring of the remaining variables (original relative order)
    and may be the zero ideal.
    """
    ring = ideal.ring
    elim_indices = _variable_indices(ring, eliminate)
    if not elim_indices:
        return ideal
    keep_indices = [k for k in range(ring.arity) if k not in elim_indices]
    if not keep_indices:
        raise PreconditionError("cannot eliminate every variable")
    permutation = sorted(elim_indices) + keep_indices
    permuted_ring = PolyRing(tuple(ring.variables[k] for k in permutation))

    def permute(p: Polynomial) -> Polynomial:
        return Polynomial(
            permuted_ring,
            {tuple(m[k] for k in permutation): c for m, c in p.terms.items()},
        )

    order = MonomialOrder("block", block_size=len(elim_indices))
    gb = buchberger([permute(g) for g in ideal.generators], order)
    ne = len(elim_indices)
    kept_ring = PolyRing(tuple(ring.variables[k] for k in keep_indices))
    out = []
    for g in gb.elements:
        if all(all(e == 0 for e in m[:ne]) for m in g.terms):
            out.append(Polynomial(kept_ring, {m[ne:]: c for m, c in g.terms.items()}))
    return IdealSpec(kept_ring, tuple(out), asserted_prime=ideal.asserted_prime)


def _variable_indices(ring: PolyRing, variables) -> set:
    out = set()
    for v in variables:
        if isinstance(v, int):
            if not 0 <= v < ring.arity:
                raise PreconditionError(f"variable index {v} out of range")
            out.add(v)
        else:
            try:
                out.add(ring.index_of(v))
            except ValueError:
                raise PreconditionError(f"unknown variable {v!r}") from None
    return out

"""Graded components of a polynomial ideal: spanning sets and bases."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .linalg import RowReducer
from .poly import PolyRing, Polynomial, monomial_basis
from .scalar import ONE


class PreconditionError(ValueError):
    """Input violates a documented precondition (CLI exit code 2)."""


@dataclass(frozen=True)
class IdealSpec:
    """Generators of an ideal, in input order.

    Generator order is semantically relevant: basis selection scans it.
    An empty tuple denotes the zero ideal (elimination can produce it).
    `asserted_prime` is user metadata; primality is never verified here.
    """

    ring: PolyRing
    generators: tuple
    asserted_prime: bool = True

    def __post_init__(self):
        for g in self.generators:
            if not g:
                raise PreconditionError("zero generator not allowed")
            if g.ring != self.ring:
                raise PreconditionError("generator outside the declared ring")

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def require_homogeneous(self):
        for g in self.generators:
            if not g.is_homogeneous():
                raise PreconditionError(f"inhomogeneous generator: {g}")

    def generator_degrees(self) -> list:
        self.require_homogeneous()
        return [g.degree() for g in self.generators]

    def max_degree(self) -> int:
        if not self.generators:
            raise PreconditionError("empty generator list")
        return max(self.generator_degrees())


@dataclass(frozen=True)
class GradedBasis:
    """A chosen basis of the degree-d component, with its coordinate frame."""

    degree: int
    frame: tuple  # ascending grevlex monomials of degree d
    members: tuple  # linearly independent polynomials spanning [I]_d
    member_vectors: tuple  # sparse coordinate dicts of the members

    @property
    def rank(self) -> int:
        return len(self.members)


def spanning_set(ideal: IdealSpec, d: int) -> list:
    """All products m * p_i of degree d, generator-major, ascending monomials."""
    if d < 0:
        raise PreconditionError("degree must be nonnegative")
    ideal.require_homogeneous()
    out = []
    for gen in ideal.generators:
        gd = gen.degree()
        if gd > d:
            continue
        for mono in monomial_basis(ideal.ring, d - gd):
            out.append(gen.mul_term(mono, ONE))
    return out


def graded_basis(ideal: IdealSpec, d: int) -> GradedBasis:
    """Greedy left-to-right independent subset of the spanning set.

    Independence is decided by exact elimination over the degree-d frame;
    identical inputs always select identical members.
    """
    frame = monomial_basis(ideal.ring, d)
    position = {m: i for i, m in enumerate(frame)}
    reducer = RowReducer()
    members = []
    vectors = []
    for p in spanning_set(ideal, d):
        vec = {position[m]: c for m, c in p.terms.items()}
        if reducer.add(vec):
            members.append(p)
            vectors.append(vec)
    return GradedBasis(
        degree=d, frame=tuple(frame), members=tuple(members), member_vectors=tuple(vectors)
    )


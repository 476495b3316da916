"""Sparse multivariate polynomials over Q(i) with graded reverse lex orders.

Variable precedence is declaration order: the first variable of a ring is
the greatest.  The canonical term order is descending grevlex; coordinate
vectors are read against the ascending grevlex monomial list.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional, Union

from .scalar import ONE, ZERO, Q, Scalar

Exponents = tuple  # tuple[int, ...], one entry per ring variable

MINUS_INF = float("-inf")  # degree of the zero polynomial


class AnyDegree:
    """Marker: the zero polynomial is homogeneous of every degree."""

    _instance: Optional["AnyDegree"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "AnyDegree"


ANY_DEGREE = AnyDegree()


def grevlex_key(exps: Exponents):
    """Sort key; larger key = larger monomial in grevlex."""
    total = 0
    for e in exps:
        total += e
    return (total,) + tuple(-e for e in reversed(exps))


@dataclass(frozen=True)
class PolyRing:
    """An ordered tuple of distinct variable names; first name is greatest."""

    variables: tuple

    def __post_init__(self):
        if not self.variables:
            raise ValueError("ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("ring variables must be distinct")
        if "i" in self.variables:
            raise ValueError("'i' is the imaginary unit, not a variable")

    @staticmethod
    def of(*names: str) -> "PolyRing":
        return PolyRing(tuple(names))

    @property
    def arity(self) -> int:
        return len(self.variables)

    def variable(self, index: int) -> "Polynomial":
        exps = [0] * self.arity
        exps[index] = 1
        return Polynomial(self, {tuple(exps): ONE})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(ONE)

    def constant(self, c: Scalar) -> "Polynomial":
        if not c:
            return self.zero()
        return Polynomial(self, {(0,) * self.arity: c})

    def index_of(self, name: str) -> int:
        return self.variables.index(name)


def monomial_degree(exps: Exponents) -> int:
    return sum(exps)


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_count(n: int, d: int) -> int:
    return comb(n + d - 1, d)


def monomial_basis(ring: PolyRing, d: int) -> list:
    """All degree-d monomials in ascending grevlex order."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    n = ring.arity
    monos = []
    # stars and bars: dividers among d stars split into n blocks
    for dividers in combinations(range(d + n - 1), n - 1):
        exps = []
        prev = -1
        for pos in dividers:
            exps.append(pos - prev - 1)
            prev = pos
        exps.append(d + n - 2 - prev)
        monos.append(tuple(exps))
    monos.sort(key=grevlex_key)
    return monos


class Polynomial:
    """Sparse polynomial: map from exponent tuples to nonzero Scalars."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms  # invariant: no zero coefficients stored

    # -- basic queries -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> Union[int, float]:
        if not self.terms:
            return MINUS_INF
        return max(sum(m) for m in self.terms)

    def homogeneous_degree(self) -> Union[int, AnyDegree, bool]:
        """Common degree of all terms, ANY_DEGREE for zero, False if mixed."""
        if not self.terms:
            return ANY_DEGREE
        degrees = {sum(m) for m in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return False

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree() is not False

    def coefficient(self, exps: Exponents) -> Scalar:
        return self.terms.get(exps, ZERO)

    def term_count(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list:
        """(exponents, coefficient) pairs in descending grevlex order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_monomial(self, key=grevlex_key) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=key)

    # -- ring operations -------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials belong to different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = -c
            else:
                s = s - c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                c = c1 * c2
                s = out.get(m)
                if s is None:
                    out[m] = c
                else:
                    s = s + c
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return Polynomial(self.ring, out)

    def scale(self, c: Scalar) -> "Polynomial":
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: k * c for m, k in self.terms.items()})

    def mul_term(self, exps: Exponents, c: Scalar) -> "Polynomial":
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring, {monomial_mul(m, exps): k * c for m, k in self.terms.items()}
        )

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    # -- calculus and substitution ----------------------------------------

    def derivative(self, var_index: int) -> "Polynomial":
        """Exact formal partial derivative."""
        out = {}
        for m, c in self.terms.items():
            e = m[var_index]
            if e == 0:
                continue
            m2 = list(m)
            m2[var_index] = e - 1
            out[tuple(m2)] = c * Scalar(Q(e))
        return Polynomial(self.ring, out)

    def substitute(self, target: PolyRing, images: list) -> "Polynomial":
        """Map the r-th variable to images[r] (a polynomial over target)."""
        if len(images) != self.ring.arity:
            raise ValueError("need one image per ring variable")
        powers: list = [{} for _ in images]  # cache of images[r]**k
        out = target.zero()
        for m, c in self.terms.items():
            term = target.constant(c)
            for r, e in enumerate(m):
                if e == 0:
                    continue
                cache = powers[r]
                if e not in cache:
                    cache[e] = images[r] ** e
                term = term * cache[e]
            out = out + term
        return out

    def with_ring(self, target: PolyRing) -> "Polynomial":
        """Reinterpret over a ring of equal arity (positional renaming)."""
        if target.arity != self.ring.arity:
            raise ValueError("target ring has different arity")
        return Polynomial(target, dict(self.terms))

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        from .parser import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"<Polynomial {self} over {','.join(self.ring.variables)}>"


def is_homogeneous(p: Polynomial) -> Union[int, AnyDegree, bool]:
    """Common degree of p's terms, ANY_DEGREE for zero, False otherwise."""
    return p.homogeneous_degree()


def is_binomial_set(gens: Iterable[Polynomial]) -> bool:
    """True iff every generator has at most two terms."""
    return all(g.term_count() <= 2 for g in gens)


def partial_derivative(p: Polynomial, var_index: int) -> Polynomial:
    if not 0 <= var_index < p.ring.arity:
        raise IndexError("variable index out of range")
    return p.derivative(var_index)


def vectorize(p: Polynomial, d: int, frame: Optional[list] = None) -> list:
    """Coefficients of p against the ascending grevlex basis of degree d.

    The zero polynomial maps to the zero vector at every degree.
    """
    hd = p.homogeneous_degree()
    if hd is False:
        raise ValueError("cannot vectorize an inhomogeneous polynomial")
    if hd is not ANY_DEGREE and hd != d:
        raise ValueError(f"polynomial has degree {hd}, expected {d}")
    if frame is None:
        frame = monomial_basis(p.ring, d)
    return [p.terms.get(m, ZERO) for m in frame]


def change_variables(p: Polynomial, matrix) -> Polynomial:
    """Substitute the i-th variable by sum_j B[i][j] * x_j and expand."""
    from .linalg import ScalarMatrix

    B: ScalarMatrix = matrix
    n = p.ring.arity
    if B.n != n:
        raise ValueError("matrix size must equal ring arity")
    if not B.is_invertible():
        raise ValueError("change of variables requires an invertible matrix")
    images = []
    for i in range(n):
        row = {}
        for j in range(n):
            c = B.entry(i, j)
            if c:
                exps = [0] * n
                exps[j] = 1
                row[tuple(exps)] = c
        images.append(Polynomial(p.ring, row))
    return p.substitute(p.ring, images)


def random_polynomial(ring: PolyRing, rng, degree: int, terms: int,
                      homogeneous: bool = False, coeff_bound: int = 5) -> Polynomial:
    """Small random polynomial for property tests; exact integer coefficients."""
    out = ring.zero()
    n = ring.arity
    for _ in range(terms):
        if homogeneous:
            d = degree
        else:
            d = rng.randint(0, degree)
        exps = [0] * n
        for _ in range(d):
            exps[rng.randrange(n)] += 1
        c = 0
        while c == 0:
            c = rng.randint(-coeff_bound, coeff_bound)
        out = out + Polynomial(ring, {tuple(exps): Scalar(Q(c))})
    return out

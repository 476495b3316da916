import itertools

import pytest

from symlie import (
    GREVLEX,
    LEX,
    IdealSpec,
    MonomialOrder,
    PolyRing,
    PreconditionError,
    buchberger,
    elimination_ideal,
    ideal_membership,
    krull_dimension,
    normal_form,
    parse_polynomial,
)
from symlie.groebner import _spoly, leading_term
from symlie.poly import random_polynomial
from symlie.scalar import Scalar

R2 = PolyRing.of("x1", "x2")
R3 = PolyRing.of("x1", "x2", "x3")


def test_already_groebner_single_generator():
    p = parse_polynomial("2*x1^2 - 2*x2*x3", R3)
    gb = buchberger([p])
    assert len(gb) == 1
    assert gb.elements[0] == parse_polynomial("x1^2 - x2*x3", R3)  # monic


def test_lex_reduction_to_variables():
    gens = [parse_polynomial("x1 + x2", R2), parse_polynomial("x2", R2)]
    gb = buchberger(gens, LEX)
    assert set(map(str, gb.elements)) == {"x1", "x2"}


def test_generators_reduce_to_zero_and_idempotence(tree_ideal8):
    gb = buchberger(tree_ideal8.generators)
    for g in tree_ideal8.generators:
        assert not normal_form(g, gb)
    p = parse_polynomial("x1^2*x8 + x3*x7", tree_ideal8.ring)
    r = normal_form(p, gb)
    assert normal_form(r, gb) == r


def test_normal_form_is_compatible_with_addition(tree_ideal8, rng):
    gb = buchberger(tree_ideal8.generators)
    for _ in range(5):
        f = random_polynomial(tree_ideal8.ring, rng, 3, 4)
        g = random_polynomial(tree_ideal8.ring, rng, 3, 4)
        lhs = normal_form(f + g, gb)
        rhs = normal_form(normal_form(f, gb) + normal_form(g, gb), gb)
        assert lhs == rhs


def test_all_spolys_reduce_to_zero(tree_ideal8):
    gb = buchberger(tree_ideal8.generators)
    for f, g in itertools.combinations(gb.elements, 2):
        assert not normal_form(_spoly(f, g, gb.order), gb)


def test_reduced_property(tree_ideal8):
    gb = buchberger(tree_ideal8.generators)
    leads = gb.leading_monomials
    for k, g in enumerate(gb.elements):
        lm, lc = leading_term(g, gb.order)
        assert str(lc) == "1"
        for m in g.terms:
            for j, lead in enumerate(leads):
                if j == k:
                    continue
                assert not all(a >= b for a, b in zip(m, lead))


def test_membership_examples():
    ideal = IdealSpec(R2, (parse_polynomial("x1^2 + x2^2 + x1*x2", R2),))
    assert not ideal_membership(R2.variable(0), ideal)
    p = ideal.generators[0]
    assert ideal_membership(R2.variable(0) * p, ideal)
    gb = buchberger([R2.variable(0)])
    assert not normal_form(parse_polynomial("x1^2", R2), gb)


def test_krull_dimension_hypersurface():
    ideal = IdealSpec(R3, (parse_polynomial("x1^2 + x2^2 + x1*x2", R3),))
    assert krull_dimension(ideal) == 2


def test_krull_dimension_random_hypersurfaces(rng):
    for _ in range(10):
        n = rng.randint(2, 5)
        ring = PolyRing.of(*[f"x{k}" for k in range(1, n + 1)])
        p = ring.zero()
        while not p:
            p = random_polynomial(ring, rng, rng.randint(1, 3), 4, homogeneous=True)
        assert krull_dimension(IdealSpec(ring, (p,))) == n - 1


def test_krull_dimension_invariances(tree_ideal8):
    base = krull_dimension(tree_ideal8)
    permuted = IdealSpec(tree_ideal8.ring, tuple(reversed(tree_ideal8.generators)))
    scaled = IdealSpec(
        tree_ideal8.ring,
        tuple(g.scale(Scalar(k + 2)) for k, g in enumerate(tree_ideal8.generators)),
    )
    assert krull_dimension(permuted) == base
    assert krull_dimension(scaled) == base


def test_unit_ideal_rejected():
    ideal = IdealSpec(R2, (R2.one(),))
    with pytest.raises(PreconditionError, match="unit ideal"):
        krull_dimension(ideal)


def _elim(gens_text, ring, kill):
    gens = tuple(parse_polynomial(t, ring) for t in gens_text)
    return elimination_ideal(IdealSpec(ring, gens, asserted_prime=False), kill)


def test_elimination_parabola():
    ring = PolyRing.of("t", "x1", "x2")
    out = _elim(["x1 - t", "x2 - t^2"], ring, ["t"])
    assert {str(g) for g in out.generators} == {"x1^2 - x2"}


def test_elimination_segre():
    ring = PolyRing.of("s", "t", "x1", "x2", "x3")
    out = _elim(["x1 - s*t", "x2 - s", "x3 - t"], ring, ["s", "t"])
    assert {str(g) for g in out.generators} == {"x2*x3 - x1"}


def test_elimination_veronese_conic():
    ring = PolyRing.of("u", "v", "x1", "x2", "x3")
    out = _elim(["x1 - u^2", "x2 - u*v", "x3 - v^2"], ring, ["u", "v"])
    assert {str(g) for g in out.generators} == {"x2^2 - x1*x3"}
    # membership oracle: the output generators lie in the input ideal
    gens = tuple(
        parse_polynomial(t, ring) for t in ["x1 - u^2", "x2 - u*v", "x3 - v^2"]
    )
    gb = buchberger(gens)
    for g in out.generators:
        lifted = parse_polynomial(str(g), ring)
        assert not normal_form(lifted, gb)


def test_block_order_is_elimination_order():
    order = MonomialOrder("block", block_size=1)
    # any monomial containing the first variable beats any that does not
    assert order.key((1, 0, 0)) > order.key((0, 5, 5))


def test_order_validation():
    with pytest.raises(ValueError):
        MonomialOrder("weird")
    with pytest.raises(ValueError):
        MonomialOrder("block", 0)

import itertools
import random

import pytest

from grasskt.services.errors import (
    InvalidParameters,
    NotExpressible,
    NotExpressibleWithinCap,
    NotFinitelyGenerated,
    ResourceCapExceeded,
)
from grasskt.services.exactmath_service import FinAbGroup
from grasskt.services.ktheory_service import build_presentation, eliminate_mu
from grasskt.services.poly_service import Monomial, Polynomial, parse_polynomial
from grasskt.services.zgb_service import (
    GroebnerBudget,
    IdealPresentation,
    QuotientRing,
    StrongGB,
    express_in_subring,
    normal_form,
    q_dimension,
    quotient_group_structure,
    standard_monomials,
    strong_groebner,
)

x = Polynomial.variable("x")
y = Polynomial.variable("y")


def _ideal(*texts, variables=("x", "y"), domain="ZZ"):
    return IdealPresentation(variables, [parse_polynomial(t) for t in texts], "grevlex", domain)


def test_quotient_group_with_torsion():
    basis = strong_groebner(_ideal("x^2", "x*y", "y^2", "2*x"))
    quotient = quotient_group_structure(basis)
    assert quotient.group == FinAbGroup(2, (2,))
    assert set(quotient.monomial_generators) == {Monomial(), Monomial.of({"x": 1}), Monomial.of({"y": 1})}


def test_gcd_polynomial_collapses_coefficients():
    basis = strong_groebner(_ideal("3*x", "2*x"))
    assert basis.basis == (x,)


def test_membership():
    basis = strong_groebner(_ideal("x^2", "2*x"))
    assert basis.contains(4 * x)
    assert basis.contains(x ** 3 + 2 * x * y)
    assert not basis.contains(x)
    assert normal_form(3 * x + y, basis) == x + y


def test_normal_forms_are_canonical():
    rng = random.Random(11)
    budget = GroebnerBudget(max_steps=5000)
    monomials = [parse_polynomial(t) for t in ("1", "x", "y", "x^2", "x*y", "y^2")]

    def random_poly(max_terms):
        total = Polynomial()
        for m in rng.sample(monomials, rng.randint(1, max_terms)):
            total = total + rng.randint(-3, 3) * m
        return total

    for _ in range(15):
        generators = [g for g in (random_poly(3) for _ in range(rng.randint(1, 3))) if not g.is_zero()]
        if not generators:
            continue
        basis = strong_groebner(IdealPresentation(("x", "y"), generators), budget)
        for g in generators:
            assert basis.contains(g)
        for _ in range(5):
            f = random_poly(4)
            h = random_poly(2) * rng.choice(generators)
            assert normal_form(f + h, basis) == normal_form(f, basis)
            assert normal_form(normal_form(f, basis), basis) == normal_form(f, basis)


def test_field_case_dimension():
    assert q_dimension(_ideal("x^2 - 2", "y^2 - 3", domain="QQ")) == 4
    basis = strong_groebner(_ideal("x^2", "y^2", domain="QQ"))
    assert set(standard_monomials(basis)) == {
        Monomial(), Monomial.of({"x": 1}), Monomial.of({"y": 1}), Monomial.of({"x": 1, "y": 1})
    }


def test_unit_ideal_has_no_standard_monomials():
    basis = strong_groebner(_ideal("x", "x + 1"))
    assert standard_monomials(basis) == []
    assert quotient_group_structure(basis).group == FinAbGroup(0)


def test_not_finitely_generated():
    with pytest.raises(NotFinitelyGenerated):
        quotient_group_structure(strong_groebner(_ideal("x^2")))


def test_step_budget():
    with pytest.raises(ResourceCapExceeded):
        strong_groebner(_ideal("x^2 - 2", "y^2 - 3", "x*y - 1"), GroebnerBudget(max_steps=1))


def test_ideal_validation():
    with pytest.raises(InvalidParameters):
        IdealPresentation(("x",), [parse_polynomial("x*z")])
    with pytest.raises(InvalidParameters):
        IdealPresentation(("x",), [parse_polynomial("x^-1")])
    with pytest.raises(InvalidParameters):
        IdealPresentation(("x",), [x], order="lex-ish")


def test_quotient_ring_with_substitutions():
    basis = strong_groebner(_ideal("x^2 - 1", variables=("x",)))
    ring = QuotientRing(basis, {"y": x + 1})
    assert ring.reduce(y ** 2) == 2 * x + 2
    assert ring.is_zero(y ** 2 - 2 * y)
    assert ring.vector(y) == [1, 1]


def test_express_symmetric_function():
    gens = [x + y, x * y]
    expression = express_in_subring(x ** 2 + y ** 2, gens, 2)
    assert expression.expand(gens) == x ** 2 + y ** 2
    assert expression.coefficients == {(2, 0): 1, (0, 1): -2}


def test_express_detects_symmetry():
    with pytest.raises(NotExpressible) as excinfo:
        express_in_subring(x, [x + y, x * y], 2)
    assert type(excinfo.value) is NotExpressible


def test_express_within_cap():
    with pytest.raises(NotExpressibleWithinCap):
        express_in_subring(x ** 2 + y ** 2, [x + y, x * y], 1)


def test_express_rejects_fractional_solution():
    with pytest.raises(NotExpressible) as excinfo:
        express_in_subring(x, [2 * x], 1)
    assert type(excinfo.value) is NotExpressible
    assert express_in_subring(x, [2 * x], 1, integral=False).expand([2 * x]) == x


FINITE_IDEALS = [
    ("x^2", "x*y", "y^2", "2*x"),
    ("x^2 - 2", "y^2 - 3", "6*x*y"),
    ("x^3 - y", "y^2 + 2*x", "4*x*y"),
    ("x^2 + 3*y", "y^3 - x", "2*x*y - 4"),
]


@pytest.mark.parametrize("texts", FINITE_IDEALS)
def test_basis_ignores_generator_order(texts):
    reference = strong_groebner(_ideal(*texts)).basis
    for permuted in itertools.permutations(texts):
        assert strong_groebner(_ideal(*permuted)).basis == reference


def test_basis_ignores_generator_order_of_grassmannian_presentation():
    ideal = eliminate_mu(build_presentation(8, 3)).ideal()
    reference = strong_groebner(ideal).basis
    rng = random.Random(3)
    for _ in range(4):
        generators = list(ideal.generators)
        rng.shuffle(generators)
        shuffled = IdealPresentation(ideal.variables, generators, ideal.order, ideal.domain)
        assert strong_groebner(shuffled).basis == reference


@pytest.mark.parametrize("texts", FINITE_IDEALS)
def test_normal_forms_ignore_reduction_order(texts):
    basis = strong_groebner(_ideal(*texts))
    rng = random.Random(len(texts))
    monomials = [parse_polynomial(t) for t in ("1", "x", "y", "x^2", "x*y", "y^2", "x^3", "x^2*y", "y^3")]
    for _ in range(5):
        polys = list(basis.basis)
        rng.shuffle(polys)
        shuffled = StrongGB(basis.variables, tuple(polys), basis.order, basis.domain)
        for _ in range(10):
            f = sum((rng.randint(-5, 5) * m for m in rng.sample(monomials, 4)), Polynomial())
            assert normal_form(f, shuffled) == normal_form(f, basis)


@pytest.mark.parametrize("texts", FINITE_IDEALS)
def test_quotient_group_ignores_monomial_order(texts):
    generators = [parse_polynomial(t) for t in texts]
    grevlex = strong_groebner(IdealPresentation(("x", "y"), generators, "grevlex"))
    grlex = strong_groebner(IdealPresentation(("x", "y"), generators, "grlex"))
    assert quotient_group_structure(grevlex).group == quotient_group_structure(grlex).group
    assert all(grevlex.contains(g) for g in grlex.basis)
    assert all(grlex.contains(g) for g in grevlex.basis)

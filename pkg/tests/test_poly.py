import itertools
import random
from fractions import Fraction

import pytest

from grasskt.services.errors import InvalidParameters
from grasskt.services.poly_service import (
    Monomial,
    Partition,
    Polynomial,
    apply_hom,
    elementary_symmetric,
    format_polynomial,
    newton_convert,
    parse_polynomial,
    partitions_in_box,
    power_sum,
    schur_polynomial,
    substitute,
)


def _count_tableaux(shape, n):
    """Semistandard tableaux of the given shape with entries 1..n, by brute force."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    count = 0
    for filling in itertools.product(range(1, n + 1), repeat=len(cells)):
        T = dict(zip(cells, filling))
        rows_ok = all(T[(i, j)] <= T[(i, j + 1)] for (i, j) in cells if (i, j + 1) in T)
        cols_ok = all(T[(i, j)] < T[(i + 1, j)] for (i, j) in cells if (i + 1, j) in T)
        count += rows_ok and cols_ok
    return count


def test_format_and_parse():
    p = parse_polynomial("3*l1^2*m2 - 8*t")
    assert format_polynomial(p) == "3*l1^2*m2 - 8*t"
    assert parse_polynomial(format_polynomial(p)) == p
    assert format_polynomial(Polynomial()) == "0"


def test_natural_variable_order():
    p = Polynomial.variable("l10") * Polynomial.variable("l2")
    assert str(p) == "l2*l10"
    assert p.variables() == ("l2", "l10")


def test_laurent_polynomials():
    p = parse_polynomial("u1^-2 + u1^2")
    assert p.laurent
    q = Polynomial.variable("u1", 2) * Polynomial.variable("u1", -2)
    assert q == 1
    assert Polynomial.variable("u1") ** -3 == Polynomial.variable("u1", -3)


def test_rational_coefficients():
    half = Polynomial.variable("x") * Fraction(1, 2)
    assert half.domain == "QQ"
    assert (half * 2).is_integral()
    with pytest.raises(InvalidParameters):
        Polynomial.constant(Fraction(1, 2), "ZZ")


def test_parse_rejects_garbage():
    with pytest.raises(InvalidParameters):
        parse_polynomial("x +* y")


def test_arithmetic():
    x, y = Polynomial.variable("x"), Polynomial.variable("y")
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x - y) * (x + y) == x ** 2 - y ** 2
    assert (x + 1).evaluate({"x": 3}) == 4
    assert parse_polynomial("2*x*y + y").coefficient_of("x") == 2 * y


def test_apply_hom_needs_every_variable():
    x = Polynomial.variable("x")
    with pytest.raises(InvalidParameters):
        apply_hom(x + Polynomial.variable("y"), {"x": 1})
    assert apply_hom(x ** 2 + 1, {"x": Polynomial.variable("z") + 1}) == parse_polynomial("z^2 + 2*z + 2")
    assert substitute(x * Polynomial.variable("y"), {"x": 2}) == 2 * Polynomial.variable("y")


def test_elementary_symmetric():
    assert elementary_symmetric(["x", "y", "z"], 2) == parse_polynomial("x*y + x*z + y*z")
    assert elementary_symmetric(["x", "y"], 0) == 1
    with pytest.raises(InvalidParameters):
        elementary_symmetric(["x"], 2)
    assert power_sum(["x", "y"], 3) == parse_polynomial("x^3 + y^3")


def test_partitions():
    assert Partition.of([3, 1]).conjugate() == Partition((2, 1, 1))
    assert len(partitions_in_box(2, 3)) == 10
    assert all(lam.fits_in_box(2, 3) for lam in partitions_in_box(2, 3))
    with pytest.raises(InvalidParameters):
        Partition((1, 2))


@pytest.mark.parametrize("parts", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (2, 1, 1), (3, 2, 1), (4, 2)])
def test_schur_counts_tableaux(parts):
    variables = ["x1", "x2", "x3"]
    s = schur_polynomial(Partition(parts), variables)
    assert s.evaluate({v: 1 for v in variables}) == _count_tableaux(parts, 3)


@pytest.mark.parametrize("parts", [(2, 1), (3, 1), (2, 2)])
def test_schur_methods_agree(parts):
    variables = ["x1", "x2", "x3"]
    assert schur_polynomial(Partition(parts), variables) == \
        schur_polynomial(Partition(parts), variables, method="bialternant")


def test_schur_vanishes_on_long_partitions():
    assert schur_polynomial(Partition((1, 1, 1)), ["x", "y"]).is_zero()


def test_newton_round_trip():
    rng = random.Random(7)
    for _ in range(100):
        d = rng.randint(1, 6)
        e = [Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(d)]
        p = newton_convert("e_to_p", e)
        assert newton_convert("p_to_e", p) == e


def test_newton_matches_power_sums():
    variables = ["x", "y", "z"]
    e = [elementary_symmetric(variables, j) for j in range(1, 4)]
    p = newton_convert("e_to_p", e, 5)
    assert p[3] == power_sum(variables, 4)
    assert p[4] == power_sum(variables, 5)


def test_monomial_divides():
    assert Monomial.of({"x": 1}).divides(Monomial.of({"x": 2, "y": 1}))
    assert not Monomial.of({"y": 2}).divides(Monomial.of({"x": 2, "y": 1}))


def _random_polynomial(rng, laurent=False):
    low = -2 if laurent else 0
    p = Polynomial()
    for _ in range(rng.randint(0, 4)):
        exponents = {v: rng.randint(low, 2) for v in ("x", "y", "z")}
        p = p + Polynomial.monomial(exponents, Fraction(rng.randint(-9, 9), rng.randint(1, 3)))
    return p


@pytest.mark.parametrize("laurent", [False, True])
def test_ring_axioms(laurent):
    rng = random.Random(11 + laurent)
    for _ in range(60):
        a, b, c = (_random_polynomial(rng, laurent) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + 0 == a and a * 1 == a
        assert (a - a).is_zero()
        assert (a * 0).is_zero()


@pytest.mark.parametrize("count", range(1, 6))
def test_elementary_generating_function(count):
    variables = [f"v{i}" for i in range(1, count + 1)]
    T = Polynomial.variable("T")
    series = sum((elementary_symmetric(variables, j) * T ** j for j in range(count + 1)), Polynomial())
    product = Polynomial.constant(1)
    for v in variables:
        product = product * (1 + T * Polynomial.variable(v))
    assert series == product


SMALL_PARTITIONS = [lam for lam in partitions_in_box(6, 6) if lam.size <= 6]


@pytest.mark.parametrize("count", [1, 2, 3])
@pytest.mark.parametrize("lam", SMALL_PARTITIONS, ids=lambda lam: str(lam.parts or "empty"))
def test_schur_methods_agree_up_to_size_six(lam, count):
    variables = [f"x{i}" for i in range(1, count + 1)]
    assert schur_polynomial(lam, variables) == schur_polynomial(lam, variables, method="bialternant")

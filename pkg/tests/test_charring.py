import random

import pytest

from config import config
from grasskt.services import charring_service
from grasskt.services.charring_service import (
    GroupTag,
    RepElement,
    TorusCharacter,
    case_size,
    character_of,
    evaluate_at_z0,
    evaluate_restricted_at_z0,
    formal_dimension,
    identity_parameter_sets,
    identity_sides,
    is_weyl_invariant,
    judge_sides,
    mu_star,
    reduce_theta,
    splits_as_direct_product,
    verify_identity,
)
from grasskt.services.errors import InvalidParameters, ResourceCapExceeded
from grasskt.services.poly_service import Polynomial, parse_polynomial

FAST_CASES = [
    ("eq3", {"s": 1, "t": 1}),
    ("eq3", {"s": 2, "t": 1}),
    ("delta_product", {"m": 1}),
    ("delta_product", {"m": 2}),
    ("delta_product", {"m": 4}),
    ("odd_spin_square", {"s": 3}),
    ("hodge_quadratic", {"s": 1}),
    ("hodge_quadratic", {"s": 2}),
    ("hodge_quadratic", {"s": 4}),
    ("restriction", {"n": 8, "k": 3}),
    ("restriction", {"n": 12, "k": 3}),
    ("z_identities", {"s": 1, "t": 1}),
    ("z_identities", {"s": 2, "t": 2}),
    ("rh0_squares", {"n": 4, "k": 2}),
    ("rh0_squares", {"n": 6, "k": 3}),
    ("rh0_squares", {"n": 5, "k": 2}),
    ("delta_squared", {"m": 3}),
    ("z0_consistency", {"n": 8, "k": 3}),
    ("z0_consistency", {"n": 12, "k": 5}),
    ("dimensions", {"r": 3}),
]


@pytest.mark.parametrize("case,params", FAST_CASES)
def test_identity(case, params):
    result = verify_identity(case, params)
    assert result.passed, f"{case} {params}: witness {result.witness}"
    assert result.to_json()["pass"] is True


@pytest.mark.slow
@pytest.mark.parametrize("case", charring_service.IDENTITY_CASES)
def test_identity_grid(case):
    for params in identity_parameter_sets(case, 6, 3):
        result = verify_identity(case, params)
        assert result.passed, f"{case} {params}: witness {result.witness}"


def test_perturbed_identity_reports_witness():
    (lhs, rhs), = identity_sides("eq3", {"s": 1, "t": 1})
    bump = Polynomial.monomial({"u1": 2, "v1": 2})
    result = judge_sides("eq3", {"s": 1, "t": 1}, [(lhs + bump, rhs)])
    assert not result.passed
    assert result.witness == bump
    assert result.to_json()["witness"] == "u1^2*v1^2"


def test_unknown_case():
    with pytest.raises(InvalidParameters):
        verify_identity("eq99", {"s": 1})


@pytest.mark.parametrize("n,expected", [(8, 1), (12, -1), (16, 1)])
def test_product_of_coordinates_at_z0(n, expected):
    product = Polynomial.monomial({f"u{j}": 1 for j in range(1, n // 2 + 1)})
    value = evaluate_at_z0(product, n)
    assert (value.x, value.y) == (expected, 0)


def test_characters():
    Lambda1 = character_of("Lambda", GroupTag.SPIN_EVEN, 2, 1)
    assert Lambda1.character.value == parse_polynomial("u1^2 + u1^-2 + u2^2 + u2^-2")
    assert Lambda1.dimension == 4
    delta_plus = character_of("Delta+", GroupTag.SPIN_EVEN, 3)
    assert delta_plus.character.parity_class == "all-odd"
    assert delta_plus.dimension == formal_dimension("Delta+", GroupTag.SPIN_EVEN, 3) == 4
    theta = character_of("theta", GroupTag.H, (1, 2))
    assert theta.character.theta_part
    with pytest.raises(InvalidParameters):
        character_of("theta", GroupTag.H0, (1, 2))
    with pytest.raises(InvalidParameters):
        character_of("Lambda", GroupTag.SPIN_EVEN, 2, 5)


@pytest.mark.parametrize("symbol,group,rank", [
    ("Delta+", GroupTag.SPIN_EVEN, 3),
    ("Delta", GroupTag.SPIN_ODD, 2),
    ("lambda+", GroupTag.SO_EVEN, 2),
    ("Delta_st", GroupTag.H0, (1, 2)),
])
def test_weyl_invariance(symbol, group, rank):
    assert is_weyl_invariant(character_of(symbol, group, rank))


def test_weyl_invariance_detects_asymmetry():
    lopsided = RepElement(GroupTag.SPIN_ODD, "custom", 2, None,
                          TorusCharacter(Polynomial.variable("u1", 2), ("u1", "u2")))
    assert not is_weyl_invariant(lopsided)


def test_restriction_of_half_spin_representations():
    delta_plus = character_of("Delta+", GroupTag.SPIN_EVEN, 6).character
    delta_st = character_of("Delta_st", GroupTag.H0, (1, 4)).character.value
    theta = Polynomial.variable("t")
    assert mu_star(delta_plus, 12, 3) == theta * delta_st
    assert evaluate_restricted_at_z0(theta * delta_st) == -(2 ** 5)


def test_restriction_rejects_mixed_parity():
    with pytest.raises(InvalidParameters):
        mu_star(Polynomial.monomial({"u1": 1, "u2": 2}), 8, 3)
    with pytest.raises(InvalidParameters):
        mu_star(Polynomial.variable("u1", 2), 10, 3)


def test_reduce_theta():
    assert reduce_theta(parse_polynomial("t^3 + t^2")) == parse_polynomial("t + 1")


def test_splitting():
    assert splits_as_direct_product(8, 3)
    assert not splits_as_direct_product(10, 3)
    assert not splits_as_direct_product(8, 2)
    with pytest.raises(InvalidParameters):
        splits_as_direct_product(8, 5)


def _random_character(rng, m):
    """A sum of monomials in u1..um, each one all-even or all-odd."""
    total = Polynomial()
    for _ in range(rng.randint(1, 4)):
        if rng.random() < 0.5:
            exponents = {f"u{j}": rng.choice((-2, 0, 2)) for j in range(1, m + 1)}
        else:
            exponents = {f"u{j}": rng.choice((-3, -1, 1, 3)) for j in range(1, m + 1)}
        total = total + Polynomial.monomial(exponents, rng.randint(-3, 3))
    return total


@pytest.mark.parametrize("n,k", [(8, 3), (12, 3), (12, 5)])
def test_restriction_is_multiplicative(n, k):
    rng = random.Random(n * 100 + k)
    for _ in range(100):
        a, b = _random_character(rng, n // 2), _random_character(rng, n // 2)
        assert mu_star(a * b, n, k) == reduce_theta(mu_star(a, n, k) * mu_star(b, n, k))


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_half_exterior_powers(s):
    plus = character_of("lambda+", GroupTag.SO_EVEN, s).character.value
    minus = character_of("lambda-", GroupTag.SO_EVEN, s).character.value
    full = character_of("lambda", GroupTag.SO_EVEN, s, s).character.value
    assert plus.is_integral() and minus.is_integral()
    assert plus.domain == minus.domain == "ZZ"
    assert plus + minus == full
    product = Polynomial.constant(1)
    for j in range(1, s + 1):
        product = product * (Polynomial.variable(f"u{j}", 2) - Polynomial.variable(f"u{j}", -2))
    assert plus - minus == product


@pytest.mark.parametrize("case,params", [
    ("delta_product", {"m": 9}),
    ("eq3", {"s": 5, "t": 1}),
    ("eq3", {"s": 3, "t": 3}),
    ("odd_spin_square", {"s": 4}),
    ("rh0_squares", {"n": 14, "k": 7}),
    ("restriction", {"n": 16, "k": 3}),
    ("dimensions", {"r": 7}),
])
def test_identity_beyond_caps(case, params):
    with pytest.raises(ResourceCapExceeded):
        verify_identity(case, params)


def test_caps_follow_config(monkeypatch):
    monkeypatch.setattr(config, "CHARRING_MAX_M", 3)
    with pytest.raises(ResourceCapExceeded):
        verify_identity("delta_product", {"m": 4})
    assert verify_identity("delta_product", {"m": 3}).passed


def test_case_size():
    assert case_size("eq3", {"s": 2, "t": 1}) == (4, (2, 1))
    assert case_size("rh0_squares", {"n": 6, "k": 3}) == (3, (1, 1))
    assert case_size("restriction", {"n": 12, "k": 3}) == (6, ())
    with pytest.raises(InvalidParameters):
        case_size("eq3", {"s": 1})


@pytest.mark.parametrize("case", charring_service.IDENTITY_CASES)
def test_parameter_grid_respects_caps(case):
    for params in identity_parameter_sets(case, 6, 3):
        m, factors = case_size(case, params)
        assert m <= 6
        assert all(r <= 3 for r in factors)

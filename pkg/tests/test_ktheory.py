from math import comb

import pytest

from grasskt.services.errors import InvalidParameters
from grasskt.services.exactmath_service import FinAbGroup
from grasskt.services.ktheory_service import (
    GrassmannParams,
    build_presentation,
    compute_K0,
    compute_K1,
    compute_kgroups,
    eliminate_mu,
    hopf_class_order,
    hopf_order_bounds,
    k0_structure_constants,
    lam,
    mu,
    quotient_ring,
    schur_fast_path,
    verify_annihilator,
    verify_barB,
)
from grasskt.services.poly_service import Polynomial, parse_polynomial

# (n, k, rank K⁰, torsion of K⁰, r)
THEOREM_CASES = [
    pytest.param(8, 3, 3, (8,) * 3, 3),
    pytest.param(12, 3, 5, (32,) * 5, 5),
    pytest.param(12, 5, 10, (32,) * 10, 5, marks=pytest.mark.slow),
]


@pytest.fixture(scope="module")
def params_8_3():
    return GrassmannParams.of(8, 3)


def test_params():
    p = GrassmannParams.of(12, 5)
    assert (p.s, p.t, p.m, p.eps, p.l, p.j) == (2, 3, 6, 1, 3, 0)
    assert GrassmannParams.of(8, 3).eps == 0


@pytest.mark.parametrize("n,k", [(9, 3), (8, 2), (10, 3), (8, 5), (8, 1)])
def test_unsupported_parameters(n, k):
    with pytest.raises(InvalidParameters):
        GrassmannParams.of(n, k)


def test_unsupported_message_points_to_bounds():
    with pytest.raises(InvalidParameters, match="hopf-order"):
        build_presentation(9, 3)


def test_reflection_rules(params_8_3):
    assert lam(params_8_3, 2) == Polynomial.variable("l1")
    assert lam(params_8_3, 3) == 1
    assert lam(params_8_3, 4).is_zero()
    assert mu(params_8_3, 3) == Polynomial.variable("m2")
    assert mu(params_8_3, 5) == 1


def test_presentation_8_3():
    presentation = build_presentation(8, 3)
    assert presentation.variables == ("l1", "m1", "m2", "t")
    assert len(presentation.relations) == 3
    assert presentation.relations[0] == parse_polynomial("l1 + m1 - 8*t")
    images = presentation.augmentation()
    assert all(g.evaluate(images) == 0 for g in presentation.ideal_I)
    assert len(presentation.ideal_I) == len(presentation.ideal_Itilde) + 1


def test_presentation_12_5():
    presentation = build_presentation(12, 5)
    assert presentation.variables == ("l1", "l2", "m1", "m2", "m3", "t")
    assert len(presentation.relations) == 5


@pytest.mark.parametrize("n,k", [(8, 3), (12, 3), (12, 5)])
def test_elimination(n, k):
    reduced = eliminate_mu(build_presentation(n, k))
    params = reduced.params
    assert len(reduced.relations) == params.m - 1 - params.t == params.s
    assert set(reduced.substitutions) == {f"m{q}" for q in range(1, params.t + 1)}
    assert reduced.variables[-1] == "t"


def test_elimination_solves_first_relation():
    reduced = eliminate_mu(build_presentation(8, 3))
    assert reduced.substitutions["m1"] == parse_polynomial("8*t - l1")


@pytest.mark.parametrize("n,k,rank,torsion,r", THEOREM_CASES)
def test_k0(n, k, rank, torsion, r):
    params = GrassmannParams.of(n, k)
    result = compute_K0(params, "both")
    assert result.group == FinAbGroup(rank, torsion)
    assert result.engine == "both"
    assert result.engines_agree is True
    assert rank == comb(params.m - 1, params.s)


@pytest.mark.parametrize("n,k,rank,torsion,r", THEOREM_CASES)
def test_k1(n, k, rank, torsion, r):
    assert compute_K1(GrassmannParams.of(n, k)) == FinAbGroup(rank)


@pytest.mark.parametrize("n,k,rank,torsion", [
    pytest.param(8, 3, 3, (8,) * 3),
    pytest.param(12, 3, 5, (32,) * 5, marks=pytest.mark.slow),
])
def test_k0_under_grlex_order(n, k, rank, torsion):
    params = GrassmannParams.of(n, k)
    assert compute_K0(params, "gb", order="grlex").group == FinAbGroup(rank, torsion)
    assert compute_K1(params, order="grlex") == FinAbGroup(rank)


@pytest.mark.parametrize("n,k,rank,torsion,r", THEOREM_CASES)
def test_hopf_class_order(n, k, rank, torsion, r):
    params = GrassmannParams.of(n, k)
    assert hopf_class_order(params) == r
    quotient = quotient_ring(params)
    theta_minus_one = Polynomial.variable("t") - 1
    assert quotient.is_zero(2 ** r * theta_minus_one)
    assert not quotient.is_zero(2 ** (r - 1) * theta_minus_one)


@pytest.mark.parametrize("n,k", [(10, 3), (11, 4), (9, 2)])
def test_hopf_order_bounds(n, k):
    assert hopf_order_bounds(n, k) == (3, 5)


def test_hopf_order_bounds_rejects_exact_case():
    with pytest.raises(InvalidParameters):
        hopf_order_bounds(8, 3)


@pytest.mark.parametrize("n,k", [(8, 3), (12, 3)])
def test_schur_basis(n, k):
    params = GrassmannParams.of(n, k)
    result = schur_fast_path(params)
    assert len(result.basis) == comb(params.m - 1, params.s)
    assert result.basis[0] == 1


@pytest.mark.slow
def test_schur_basis_12_5():
    result = schur_fast_path(GrassmannParams.of(12, 5))
    assert len(result.basis) == 10
    assert result.group == FinAbGroup(10, (32,) * 10)


def test_barB_relations(params_8_3):
    checks = verify_barB(params_8_3)
    assert set(checks) == {"a", "b", "c", "remark", "tor_a", "tor_b", "tor_c", "tor_group"}
    assert all(checks.values()), checks


def test_annihilator(params_8_3):
    assert verify_annihilator(params_8_3)


def test_structure_constants(params_8_3):
    table = k0_structure_constants(params_8_3)
    size = len(table["generators"])
    assert table["generators"][0] == "1"
    assert len(table["products"]) == size
    for j, product in enumerate(table["products"][0]):
        assert product == [int(i == j) for i in range(size)]


def test_kgroups_report():
    report = compute_kgroups(8, 3, "both").to_json()
    assert report["K0"] == {"rank": 3, "invariant_factors": [8, 8, 8]}
    assert report["K1"] == {"rank": 3, "invariant_factors": []}
    assert report["hopf_order_exponent"] == 3
    assert report["engines_agree"] is True
    assert report["annihilator"] is True
    assert "structure_constants" in report

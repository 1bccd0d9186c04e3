# K⁰ and K¹ of the real Grassmannian G_{n,k} for n ≡ 0 mod 4 and odd k
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Tuple

# Logging module for tracking application events and debugging
import logging

from config import config
from grasskt.services.charring_service import THETA, reduce_theta
from grasskt.services.errors import EngineMismatch, InvalidParameters
from grasskt.services.exactmath_service import (
    FinAbGroup,
    IntMatrix,
    cokernel_group,
    element_order,
    left_kernel,
    same_row_lattice,
    smith_normal_form,
    subgroup_generated,
)
from grasskt.services.poly_service import Monomial, Polynomial, partitions_in_box, schur_from_elementary, substitute
from grasskt.services.zgb_service import (
    FgQuotientGroup,
    IdealPresentation,
    QuotientRing,
    StrongGB,
    quotient_group_structure,
    strong_groebner,
)

# Configure logger for this module
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

ENGINES = ("gb", "schur", "both")


@dataclass(frozen=True)
class GrassmannParams:
    n: int
    k: int
    s: int
    t: int
    m: int
    residue: int
    eps: int
    l: int
    j: int

    @classmethod
    def of(cls, n: int, k: int, theorem_case: bool = True) -> "GrassmannParams":
        """
        Derived parameters of G_{n,k}.

        Args:
            n, k: Grassmannian of k-planes in ℝⁿ, 2 ≤ k ≤ n/2.
            theorem_case: require n ≡ 0 mod 4 and odd k.
        """
        if not 2 <= k <= n // 2:
            raise InvalidParameters(f"need 2 ≤ k ≤ n/2, got n={n}, k={k}")
        if theorem_case and (n % 4 or k % 2 == 0):
            raise InvalidParameters(
                f"exact K-groups require n ≡ 0 mod 4, k odd; use hopf-order for bounds (got n={n}, k={k})"
            )
        return cls(n=n, k=k, s=k // 2, t=(n - k) // 2, m=n // 2, residue=n % 8,
                   eps=0 if n % 8 == 0 else 1, l=n // 4, j=n % 4)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k}


def lambda_name(p: int) -> str:
    return f"l{p}"


def mu_name(q: int) -> str:
    return f"m{q}"


def _reflected(index: int, top: int, half: int, name) -> Polynomial:
    if index < 0 or index > top:
        return Polynomial()
    if index == 0:
        return Polynomial.constant(1)
    if index > half:
        index = top - index
        if index == 0:
            return Polynomial.constant(1)
    return Polynomial.variable(name(index))


def lam(params: GrassmannParams, p: int) -> Polynomial:
    """λ_p with λ_{k−p} = λ_p and λ_p = 0 outside [0, k]."""
    return _reflected(p, params.k, params.s, lambda_name)


def mu(params: GrassmannParams, q: int) -> Polynomial:
    return _reflected(q, params.n - params.k, params.t, mu_name)


def theta_power(j: int) -> Polynomial:
    return Polynomial.variable(THETA) if j % 2 else Polynomial.constant(1)


def f_relation(params: GrassmannParams, j: int) -> Polynomial:
    """Σ_{p+q=j} λ_p μ_q − C(n,j)·θ^j."""
    total = Polynomial()
    for p in range(0, j + 1):
        total = total + lam(params, p) * mu(params, j - p)
    return total - comb(params.n, j) * theta_power(j)


def f_st(params: GrassmannParams) -> Polynomial:
    """(Σ_{p ≤ s} λ_p)(Σ_{q ≤ t} μ_q), the class of Δ_s²Δ'_t²."""
    left = sum((lam(params, p) for p in range(params.s + 1)), Polynomial())
    right = sum((mu(params, q) for q in range(params.t + 1)), Polynomial())
    return left * right


@dataclass(frozen=True)
class KPresentation:
    params: GrassmannParams
    variables: Tuple[str, ...]
    relations: Tuple[Polynomial, ...]
    ideal_I: Tuple[Polynomial, ...]
    ideal_Itilde: Tuple[Polynomial, ...]

    def augmentation(self) -> Dict[str, int]:
        p = self.params
        images = {lambda_name(i): comb(p.k, i) for i in range(1, p.s + 1)}
        images.update({mu_name(q): comb(p.n - p.k, q) for q in range(1, p.t + 1)})
        images[THETA] = 1
        return images


def _theta_relations(params: GrassmannParams, tilde: bool) -> List[Polynomial]:
    theta = Polynomial.variable(THETA)
    out = [theta ** 2 - 1]
    if not tilde:
        out.append(2 ** (params.m - 1) * (theta - 1))
    return out


def build_presentation(n: int, k: int) -> KPresentation:
    """
    The presentation K⁰(G_{n,k}) = S/𝓘 and its companion S/𝓘̃.

    Steps:
    - Build the m−1 relations f_j with the reflection rules for λ and μ.
    - Add θ² − 1 (and 2^{m−1}(θ−1) for 𝓘).
    - Check that the augmentation θ ↦ 1, λ_p ↦ C(k,p), μ_q ↦ C(n−k,q) kills every generator.
    """
    params = GrassmannParams.of(n, k)
    variables = tuple([lambda_name(p) for p in range(1, params.s + 1)]
                      + [mu_name(q) for q in range(1, params.t + 1)] + [THETA])
    relations = tuple(f_relation(params, j) for j in range(1, params.m))
    presentation = KPresentation(
        params=params,
        variables=variables,
        relations=relations,
        ideal_I=tuple(_theta_relations(params, tilde=False)) + relations,
        ideal_Itilde=tuple(_theta_relations(params, tilde=True)) + relations,
    )
    images = presentation.augmentation()
    for g in presentation.ideal_I:
        if g.evaluate(images) != 0:
            raise EngineMismatch(f"augmentation does not kill {g}")
    logger.info(f"Presentation for G({n},{k}): {len(relations)} relations in {', '.join(variables)}")
    return presentation


@dataclass(frozen=True)
class ReducedPresentation:
    """S/𝓘 after solving μ_1..μ_t from the first t relations."""

    params: GrassmannParams
    variables: Tuple[str, ...]
    substitutions: Dict[str, Polynomial]
    relations: Tuple[Polynomial, ...]

    def ideal(self, tilde: bool = False, order: Optional[str] = None) -> IdealPresentation:
        generators = _theta_relations(self.params, tilde) + list(self.relations)
        return IdealPresentation(self.variables, generators, order or config.DEFAULT_ORDER, "ZZ")


def eliminate_mu(presentation: KPresentation) -> ReducedPresentation:
    """
    Triangular elimination μ_j = C(n,j)θ^j − Σ_{p≥1} λ_p μ_{j−p} for j = 1..t.

    Both directions of the isomorphism are certified exactly: each original
    relation maps into the reduced ideal, and each reduced relation is written
    as an explicit combination of original relations (modulo θ² − 1).
    """
    params = presentation.params
    relations = presentation.relations
    subs: Dict[str, Polynomial] = {}
    # cofactors[q][i]: μ_q − sub_q = Σ_i cofactors[q][i]·f_{i+1}
    cofactors: Dict[int, List[Polynomial]] = {}
    zero_row = [Polynomial() for _ in relations]

    for q in range(1, params.t + 1):
        rest = Polynomial()
        row = list(zero_row)
        row[q - 1] = Polynomial.constant(1)
        for p in range(1, q + 1):
            coefficient = lam(params, p)
            if coefficient.is_zero():
                continue
            if q - p == 0:
                rest = rest + coefficient
                continue
            rest = rest + coefficient * subs[mu_name(q - p)]
            row = [a - coefficient * b for a, b in zip(row, cofactors[q - p])]
        subs[mu_name(q)] = reduce_theta(comb(params.n, q) * theta_power(q) - rest)
        cofactors[q] = row

    residual = tuple(reduce_theta(substitute(relations[j - 1], subs)) for j in range(params.t + 1, params.m))

    for j, f in enumerate(relations, 1):
        image = reduce_theta(substitute(f, subs))
        expected = residual[j - params.t - 1] if j > params.t else Polynomial()
        if not (image - expected).is_zero():
            raise EngineMismatch(f"relation f_{j} does not map into the reduced ideal")

    for g, j in zip(residual, range(params.t + 1, params.m)):
        f = relations[j - 1]
        combination = f
        for q in range(1, params.t + 1):
            a = f.coefficient_of(mu_name(q), 1)
            if a.is_zero():
                continue
            for i, c in enumerate(cofactors[q]):
                if not c.is_zero():
                    combination = combination - a * c * relations[i]
        if not reduce_theta(g - combination).is_zero():
            raise EngineMismatch(f"reduced relation g_{j} is not in the original ideal")

    variables = tuple([lambda_name(p) for p in range(1, params.s + 1)] + [THETA])
    logger.info(f"Eliminated μ_1..μ_{params.t}: {len(residual)} residual relations in {', '.join(variables)}")
    return ReducedPresentation(params, variables, subs, residual)


@lru_cache(maxsize=32)
def _reduced(n: int, k: int) -> ReducedPresentation:
    return eliminate_mu(build_presentation(n, k))


@lru_cache(maxsize=32)
def _groebner(n: int, k: int, tilde: bool, order: str) -> StrongGB:
    return strong_groebner(_reduced(n, k).ideal(tilde, order))


def quotient_ring(params: GrassmannParams, tilde: bool = False, order: Optional[str] = None) -> QuotientRing:
    """S/𝓘 (or S/𝓘̃) as a QuotientRing accepting polynomials in λ, μ and θ."""
    reduced = _reduced(params.n, params.k)
    return QuotientRing(_groebner(params.n, params.k, tilde, order or config.DEFAULT_ORDER), reduced.substitutions)


def _check_k0(params: GrassmannParams, group: FinAbGroup, engine: str):
    expected = comb(params.m - 1, params.s)
    if group.rank != expected:
        raise EngineMismatch(f"{engine} engine: rank {group.rank}, expected C(m−1,s) = {expected}")
    if (2 ** (params.m - 1)) % group.exponent:
        raise EngineMismatch(f"{engine} engine: torsion exponent {group.exponent} does not divide 2^{params.m - 1}")


@dataclass(frozen=True)
class SchurResult:
    group: FinAbGroup
    basis: Tuple[Polynomial, ...]
    coordinate_count: int


def _macaulay_monomials(params: GrassmannParams) -> List[Monomial]:
    """λ^α θ^e with Σ p·α_p ≤ s·t and e ∈ {0, 1}."""
    top = params.s * params.t
    out = [Monomial()]
    for p in range(1, params.s + 1):
        grown = []
        for mono in out:
            weight = sum(int(v[1:]) * e for v, e in mono.powers)
            a = 0
            while weight + p * a <= top:
                grown.append(mono * Monomial.of({lambda_name(p): a}))
                a += 1
        out = grown
    return out + [mono * Monomial.of({THETA: 1}) for mono in out]


def _weight(mono: Monomial) -> int:
    return sum(int(v[1:]) * e for v, e in mono.powers if v != THETA)


def _weight_of(p: Polynomial) -> int:
    return max((_weight(mono) for mono in p.terms), default=0)


def schur_fast_path(params: GrassmannParams) -> SchurResult:
    """
    Independent computation of K⁰ through the Schur basis.

    Steps:
    - Present S/𝓘̃ with μ eliminated as a ℤ-module by linear algebra on the
      monomials of weighted degree ≤ s·t (the top degree of the Grassmannian).
    - Check that the Schur polynomials in λ for partitions in the s × t box,
      together with their θ-multiples, form a ℤ-basis.
    - Add the relations 2^{m−1}(θ−1)·b and 2^{m−1}(θ−1)·θb and take the SNF.

    Raises:
        EngineMismatch: the basis has the wrong size or is not unimodular.
    """
    reduced = _reduced(params.n, params.k)
    columns = _macaulay_monomials(params)
    index = {mono: i for i, mono in enumerate(columns)}
    top = params.s * params.t
    lambda_monomials = [mono for mono in columns if mono.exponent(THETA) == 0]

    def coordinates(p: Polynomial) -> List[int]:
        vec = [0] * len(columns)
        for mono, c in reduce_theta(p).terms.items():
            if mono not in index:
                raise EngineMismatch(f"{mono} lies outside the truncated monomial set")
            vec[index[mono]] += int(c)
        return vec

    rows = []
    for g in reduced.relations:
        spare = top - _weight_of(g)
        for mono in lambda_monomials:
            if _weight(mono) <= spare:
                for shift in (Polynomial.constant(1), Polynomial.variable(THETA)):
                    row = coordinates(Polynomial({mono: 1}) * shift * g)
                    if any(row):
                        rows.append(row)

    if rows:
        decomposition = smith_normal_form(IntMatrix.from_rows(rows, len(columns)))
        if any(d != 1 for d in decomposition.invariant_factors):
            raise EngineMismatch("the truncated quotient has torsion; S/𝓘̃ should be free")
        r = len(decomposition.invariant_factors)
        V = decomposition.V.to_rows()
    else:
        r, V = 0, IntMatrix.identity(len(columns)).to_rows()

    def free_coordinates(p: Polynomial) -> List[int]:
        vec = coordinates(p)
        w = [sum(vec[i] * V[i][j] for i in range(len(vec)) if vec[i]) for j in range(len(columns))]
        return w[r:]

    def elementary(i: int) -> Polynomial:
        return Polynomial.variable(lambda_name(i)) if i <= params.s else Polynomial()

    basis = tuple(schur_from_elementary(shape, elementary) for shape in partitions_in_box(params.s, params.t))
    expected = comb(params.m - 1, params.s)
    if len(basis) != expected:
        raise EngineMismatch(f"Schur basis has {len(basis)} elements, expected {expected}")

    theta = Polynomial.variable(THETA)
    change = IntMatrix.from_rows([free_coordinates(b) for b in basis] + [free_coordinates(theta * b) for b in basis],
                                 len(columns) - r)
    if change.rows != change.cols or abs(change.det()) != 1:
        raise EngineMismatch(
            f"Schur basis is not a ℤ-basis of S/𝓘̃ ({change.rows} elements, {change.cols} free coordinates)"
        )

    torsion_rows = []
    for b in basis:
        for shift in (Polynomial.constant(1), theta):
            torsion_rows.append(free_coordinates(2 ** (params.m - 1) * (theta - 1) * shift * b))
    group = cokernel_group(IntMatrix.from_rows(torsion_rows, change.cols), change.cols)
    logger.info(f"Schur engine for G({params.n},{params.k}): |B0| = {len(basis)}, K0 = {group}")
    return SchurResult(group, basis, change.cols)


@dataclass
class K0Result:
    group: FinAbGroup
    engine: str
    engines_agree: Optional[bool] = None
    generators: Tuple[Monomial, ...] = ()
    quotient: Optional[FgQuotientGroup] = field(default=None, repr=False)


def compute_K0(params: GrassmannParams, engine: str = None, order: Optional[str] = None) -> K0Result:
    """
    K⁰(G_{n,k}) as a finitely generated abelian group.

    Args:
        params: a supported (n, k).
        engine: "gb" (strong Gröbner basis over ℤ), "schur" (structured basis) or "both".
        order: monomial order for the Gröbner engine.

    Raises:
        EngineMismatch: the engines disagree or an invariant check fails.
    """
    engine = engine or config.DEFAULT_ENGINE
    if engine not in ENGINES:
        raise InvalidParameters(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")
    result = None
    if engine in ("gb", "both"):
        fg = quotient_group_structure(_groebner(params.n, params.k, False, order or config.DEFAULT_ORDER))
        _check_k0(params, fg.group, "gb")
        result = K0Result(fg.group, "gb", generators=fg.monomial_generators, quotient=fg)
    if engine in ("schur", "both"):
        schur = schur_fast_path(params)
        _check_k0(params, schur.group, "schur")
        if result is None:
            result = K0Result(schur.group, "schur")
        elif schur.group != result.group:
            raise EngineMismatch(f"gb engine gives {result.group}, schur engine gives {schur.group}")
        else:
            result.engine, result.engines_agree = "both", True
    logger.info(f"K0(G({params.n},{params.k})) = {result.group} [{result.engine}]")
    return result


def _tilde_group(params: GrassmannParams, order: Optional[str]) -> FgQuotientGroup:
    return quotient_group_structure(_groebner(params.n, params.k, True, order or config.DEFAULT_ORDER))


def _multiplication_rows(fg: FgQuotientGroup, factor: Polynomial) -> IntMatrix:
    rows = [fg.vector(factor * Polynomial({g: 1})) for g in fg.monomial_generators]
    return IntMatrix.from_rows(rows, len(fg.monomial_generators))


def compute_K1(params: GrassmannParams, order: Optional[str] = None) -> FinAbGroup:
    """K¹(G_{n,k}) as the ideal (θ+1)·S/𝓘̃, presented with its induced relations."""
    fg = _tilde_group(params, order)
    images = _multiplication_rows(fg, Polynomial.variable(THETA) + 1)
    group = subgroup_generated(images, fg.relations)
    logger.info(f"K1(G({params.n},{params.k})) = {group}")
    return group


def hopf_class_order(params: GrassmannParams, order: Optional[str] = None) -> int:
    """
    The exponent r with 2^r the additive order of [θ] − 1 in K⁰.

    Raises:
        EngineMismatch: the order is infinite, not a power of 2, or the
            normal-form confirmation disagrees.
    """
    quotient = quotient_ring(params, False, order)
    theta_minus_one = Polynomial.variable(THETA) - 1
    fg = quotient.group_structure
    value = element_order(fg.vector(theta_minus_one), fg.relations)
    if not isinstance(value, int) or value & (value - 1):
        raise EngineMismatch(f"order of [θ]−1 is {value}, not a power of 2")
    r = value.bit_length() - 1
    if not quotient.is_zero(2 ** r * theta_minus_one) or (r and quotient.is_zero(2 ** (r - 1) * theta_minus_one)):
        raise EngineMismatch(f"normal forms do not confirm order 2^{r} for [θ]−1")
    if r > params.m - 1 or r < 2 * params.l - 1:
        raise EngineMismatch(f"r = {r} lies outside [{2 * params.l - 1}, {params.m - 1}]")
    return r


def hopf_order_bounds(n: int, k: int) -> Tuple[int, int]:
    """[2l−1, 2l+1] for n = 4l+j with 1 ≤ j ≤ 3."""
    params = GrassmannParams.of(n, k, theorem_case=False)
    if params.j == 0:
        raise InvalidParameters(f"n = {n} is divisible by 4; use the exact hopf_class_order instead")
    return 2 * params.l - 1, 2 * params.l + 1


def _tor_presentation(params: GrassmannParams, order: Optional[str]) -> Tuple[StrongGB, ReducedPresentation]:
    reduced = _reduced(params.n, params.k)
    theta = Polynomial.variable(THETA)
    D = Polynomial.variable("D")
    fst = reduce_theta(substitute(f_st(params), reduced.substitutions))
    generators = [theta ** 2 - 1, D ** 2 - fst]
    generators += [g for g, j in zip(reduced.relations, range(params.t + 1, params.m)) if j <= params.m - 2]
    generators += [theta ** params.eps * D - 2 ** (params.m - 1), (theta - 1) * D]
    ideal = IdealPresentation(("D",) + reduced.variables, generators, order or config.DEFAULT_ORDER, "ZZ")
    return strong_groebner(ideal), reduced


def verify_barB(params: GrassmannParams, order: Optional[str] = None) -> Dict[str, bool]:
    """
    The relations of B̄ in S/𝓘 and in the presentation through Δ_{s,t}.

    Returns:
        Pass flags for a, b, c, remark and the checks in the Δ presentation
        (tor_a, tor_b, tor_c, tor_group).
    """
    quotient = quotient_ring(params, False, order)
    theta = Polynomial.variable(THETA)
    checks = {
        "a": quotient.is_zero(2 ** (params.m - 1) * (theta - 1)),
        "b": all(quotient.is_zero(f_relation(params, j)) for j in range(1, params.m)),
        "c": quotient.is_zero(f_st(params) - 2 ** (2 * params.m - 2)),
        "remark": quotient.is_zero((1 + theta) ** params.n - 2 ** (2 * params.m)),
    }

    tor_gb, reduced = _tor_presentation(params, order)
    tor = QuotientRing(tor_gb, reduced.substitutions)
    D = Polynomial.variable("D")
    checks["tor_a"] = tor.is_zero(D - 2 ** (params.m - 1)) and tor.is_zero(2 ** (params.m - 1) * (theta - 1))
    checks["tor_b"] = all(tor.is_zero(f_relation(params, j)) for j in range(1, params.m))
    checks["tor_c"] = tor.is_zero(f_st(params) - 2 ** (2 * params.m - 2))
    checks["tor_group"] = tor.group_structure.group == quotient.group_structure.group
    logger.info(f"barB relations for G({params.n},{params.k}): {checks}")
    return checks


def verify_annihilator(params: GrassmannParams, order: Optional[str] = None) -> bool:
    """In S/𝓘̃ the kernel of multiplication by θ−1 equals the image of θ+1."""
    fg = _tilde_group(params, order)
    size = len(fg.monomial_generators)
    theta = Polynomial.variable(THETA)
    by_minus = _multiplication_rows(fg, theta - 1)
    by_plus = _multiplication_rows(fg, theta + 1)
    relations = fg.relations

    stacked = by_minus.vstack(relations) if relations.rows else by_minus
    kernel = IntMatrix.from_rows([row[:size] for row in left_kernel(stacked).to_rows()], size) \
        if stacked.rows else IntMatrix.zeros(0, size)
    if relations.rows:
        kernel, image = kernel.vstack(relations), by_plus.vstack(relations)
    else:
        image = by_plus
    return same_row_lattice(kernel, image)


def k0_structure_constants(params: GrassmannParams, order: Optional[str] = None) -> dict:
    """Multiplication table of K⁰ over its monomial generators."""
    fg = compute_K0(params, "gb", order).quotient
    gens = fg.monomial_generators
    table = [[fg.vector(Polynomial({a * b: 1})) for b in gens] for a in gens]
    return {"generators": [str(g) for g in gens], "products": table}


@dataclass
class KGroups:
    params: GrassmannParams
    K0: FinAbGroup
    K1: FinAbGroup
    hopf_order_exponent: int
    engine: str
    engines_agree: Optional[bool]
    barB: Dict[str, bool]
    annihilator: bool
    structure_constants: Optional[dict] = None

    def to_json(self) -> dict:
        out = {
            "n": self.params.n,
            "k": self.params.k,
            "K0": self.K0.to_json(),
            "K1": self.K1.to_json(),
            "hopf_order_exponent": self.hopf_order_exponent,
            "engine": self.engine,
            "engines_agree": self.engines_agree,
            "barB": dict(self.barB),
            "annihilator": self.annihilator,
        }
        if self.structure_constants is not None:
            out["structure_constants"] = self.structure_constants
        return out


def compute_kgroups(n: int, k: int, engine: str = None, order: Optional[str] = None,
                    structure_constants: Optional[bool] = None) -> KGroups:
    """Runs the whole K-theory pipeline for one (n, k)."""
    params = GrassmannParams.of(n, k)
    logger.info(f"Computing K-groups of G({n},{k})")
    k0 = compute_K0(params, engine, order)
    k1 = compute_K1(params, order)
    if k1.rank != k0.group.rank:
        raise EngineMismatch(f"rank K1 = {k1.rank} differs from rank K0 = {k0.group.rank}")
    if structure_constants is None:
        structure_constants = (n, k) in config.STRUCTURE_CONSTANT_CASES
    return KGroups(
        params=params,
        K0=k0.group,
        K1=k1,
        hopf_order_exponent=hopf_class_order(params, order),
        engine=k0.engine,
        engines_agree=k0.engines_agree,
        barB=verify_barB(params, order),
        annihilator=verify_annihilator(params, order),
        structure_constants=k0_structure_constants(params, order) if structure_constants else None,
    )

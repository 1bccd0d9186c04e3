# Strong Gröbner bases over ℤ, Gröbner bases over ℚ, normal forms and quotient groups
import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

# Logging module for tracking application events and debugging
import logging

# Sparse polynomial rings, monomial orders and the field-case Buchberger algorithm
from sympy import QQ, ZZ
from sympy.core.intfunc import igcdex
from sympy.polys.groebnertools import groebner as _field_groebner
from sympy.polys.orderings import monomial_key
from sympy.polys.rings import PolyRing

from config import config
from grasskt.services.errors import (
    InvalidParameters,
    NotExpressible,
    NotExpressibleWithinCap,
    NotFinitelyGenerated,
    ResourceCapExceeded,
)
from grasskt.services.exactmath_service import FinAbGroup, IntMatrix, cokernel_group, rational_rank, solve_rational
from grasskt.services.poly_service import Monomial, Polynomial, substitute

# Configure logger for this module
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

ORDERS = ("grevlex", "grlex")


@dataclass(frozen=True)
class GroebnerBudget:
    """Step and wall-clock limits for one Buchberger run."""

    max_steps: Optional[int] = None
    max_ms: Optional[int] = None

    @classmethod
    def default(cls) -> "GroebnerBudget":
        return cls(config.GB_MAX_STEPS, config.GB_BUDGET_MS)


@dataclass(frozen=True)
class IdealPresentation:
    variables: Tuple[str, ...]
    generators: Tuple[Polynomial, ...]
    order: str = "grevlex"
    domain: str = "ZZ"

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "generators", tuple(Polynomial.coerce(g) for g in self.generators))
        if self.order not in ORDERS:
            raise InvalidParameters(f"unknown monomial order {self.order!r}; use one of {ORDERS}")
        if self.domain not in ("ZZ", "QQ"):
            raise InvalidParameters(f"unknown coefficient ring {self.domain!r}")
        known = set(self.variables)
        for g in self.generators:
            if any(m.is_laurent for m in g.terms):
                raise InvalidParameters(f"ideal generator {g} has negative exponents")
            extra = set(g.variables()) - known
            if extra:
                raise InvalidParameters(f"ideal generator {g} uses undeclared variable(s) {sorted(extra)}")
            if self.domain == "ZZ" and not g.is_integral():
                raise InvalidParameters(f"ideal generator {g} is not integral")


class _Engine:
    """Conversion between Polynomial and sympy ring elements plus strong reduction."""

    def __init__(self, variables: Sequence[str], order: str, domain: str):
        self.variables = tuple(variables)
        self.domain = domain
        self.ring = PolyRing(self.variables, ZZ if domain == "ZZ" else QQ, monomial_key(order))
        self.key = self.ring.order
        self._index = {v: i for i, v in enumerate(self.variables)}

    def to_ring(self, p: Polynomial):
        terms = {}
        for m, c in p.terms.items():
            expv = [0] * len(self.variables)
            for v, e in m.powers:
                if v not in self._index:
                    raise InvalidParameters(f"variable {v} is not declared in {self.variables}")
                expv[self._index[v]] = e
            c = Fraction(c)
            terms[tuple(expv)] = (
                self.ring.domain(int(c)) if self.domain == "ZZ" else QQ(c.numerator, c.denominator)
            )
        return self.ring.from_dict(terms)

    def monomial(self, expv: Tuple[int, ...]) -> Monomial:
        return Monomial.of(dict(zip(self.variables, expv)))

    def to_polynomial(self, f) -> Polynomial:
        terms = {}
        for expv, c in f.items():
            if self.domain == "ZZ":
                terms[self.monomial(expv)] = int(c)
            else:
                terms[self.monomial(expv)] = Fraction(int(c.numerator), int(c.denominator))
        return Polynomial(terms, self.domain)

    def reduce(self, f, basis: Sequence):
        """
        Full strong reduction of f by basis.

        Over ℤ every term c·m is reduced modulo the smallest leading coefficient
        among basis elements whose leading monomial divides m; over ℚ terms are
        cancelled outright.
        """
        ring = self.ring
        field_case = self.domain == "QQ"
        remainder = {}
        p = f
        while p:
            m, c = p.LT
            divisor = None
            for g in basis:
                if ring.monomial_div(m, g.LM) is not None:
                    if divisor is None or (not field_case and g.LC < divisor.LC):
                        divisor = g
                    if field_case:
                        break
            if divisor is not None:
                q = ring.domain.quo(c, divisor.LC) if field_case else c // divisor.LC
                if q:
                    p = p - divisor.mul_term((ring.monomial_div(m, divisor.LM), q))
            if p and p.LM == m:
                remainder[m] = p.LC
                p = p - ring.term_new(m, p.LC)
        return ring.from_dict(remainder) if remainder else ring.zero


@dataclass(frozen=True)
class StrongGB:
    variables: Tuple[str, ...]
    basis: Tuple[Polynomial, ...]
    order: str = "grevlex"
    domain: str = "ZZ"
    steps: int = 0
    _engine: _Engine = field(default=None, repr=False, compare=False)
    _elements: tuple = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        engine = _Engine(self.variables, self.order, self.domain)
        object.__setattr__(self, "_engine", engine)
        object.__setattr__(self, "_elements", tuple(engine.to_ring(b) for b in self.basis))

    def leading_terms(self) -> List[Tuple[Monomial, int]]:
        return [(self._engine.monomial(g.LM), g.LC) for g in self._elements]

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "order": self.order,
            "ring": self.domain,
            "basis": [str(b) for b in self.basis],
        }


def strong_groebner(ideal: IdealPresentation, budget: Optional[GroebnerBudget] = None) -> StrongGB:
    """
    Computes a strong Gröbner basis of the ideal.

    Steps:
    - Over ℚ: sympy's Buchberger implementation on the same ring and order.
    - Over ℤ: Buchberger with S-polynomials and gcd-polynomials, pairs taken by
      smallest lcm in the monomial order, every new element fully reduced.
    - Inter-reduce the result and sort it by leading monomial.

    Args:
        ideal: variables, generators, order and coefficient ring.
        budget: optional step/time caps; exceeding them raises ResourceCapExceeded.

    Returns:
        StrongGB for the ideal.
    """
    budget = budget or GroebnerBudget.default()
    engine = _Engine(ideal.variables, ideal.order, ideal.domain)
    ring = engine.ring
    inputs = [engine.to_ring(g) for g in ideal.generators]

    if ideal.domain == "QQ":
        basis = _field_groebner([f for f in inputs if f], ring) if any(inputs) else []
        return StrongGB(ideal.variables, tuple(engine.to_polynomial(g) for g in basis), ideal.order, "QQ")

    started = time.monotonic()
    G: List = []
    pairs: List[Tuple[int, int]] = []

    def add(h):
        if h.LC < 0:
            h = -h
        G.append(h)
        new = len(G) - 1
        pairs.extend((i, new) for i in range(new))

    for f in inputs:
        h = engine.reduce(f, G)
        if h:
            add(h)

    steps = 0
    while pairs:
        steps += 1
        if budget.max_steps is not None and steps > budget.max_steps:
            raise ResourceCapExceeded(f"Gröbner step budget of {budget.max_steps} pair reductions exhausted")
        if budget.max_ms is not None and (time.monotonic() - started) * 1000 > budget.max_ms:
            raise ResourceCapExceeded(f"Gröbner time budget of {budget.max_ms} ms exhausted")

        best = min(range(len(pairs)),
                   key=lambda idx: (engine.key(ring.monomial_lcm(G[pairs[idx][0]].LM, G[pairs[idx][1]].LM)),
                                    pairs[idx]))
        i, j = pairs.pop(best)
        f, g = G[i], G[j]
        gamma = ring.monomial_lcm(f.LM, g.LM)
        a, b = f.LC, g.LC
        mf, mg = ring.monomial_div(gamma, f.LM), ring.monomial_div(gamma, g.LM)

        candidates = []
        coprime_monomials = ring.monomial_mul(f.LM, g.LM) == gamma
        if not (coprime_monomials and igcdex(int(a), int(b))[2] == 1):
            lcm = a * b // igcdex(int(a), int(b))[2]
            candidates.append(f.mul_term((mf, lcm // a)) - g.mul_term((mg, lcm // b)))
        if a % b and b % a:
            u, v, _ = igcdex(int(a), int(b))
            candidates.append(f.mul_term((mf, u)) + g.mul_term((mg, v)))

        for c in candidates:
            h = engine.reduce(c, G)
            if h:
                add(h)

    basis = _interreduce(engine, G)
    elapsed = (time.monotonic() - started) * 1000
    logger.info(f"Strong Gröbner basis over ZZ: {len(basis)} elements after {steps} pairs ({elapsed:.0f} ms)")
    return StrongGB(ideal.variables, tuple(engine.to_polynomial(g) for g in basis), ideal.order, "ZZ", steps)


def _interreduce(engine: _Engine, G: List) -> List:
    ring = engine.ring

    def lt_divides(h, g) -> bool:
        return ring.monomial_div(g.LM, h.LM) is not None and g.LC % h.LC == 0

    kept: List = []
    for idx, g in enumerate(G):
        redundant = any(
            lt_divides(h, g) and (not lt_divides(g, h) or jdx < idx)
            for jdx, h in enumerate(G) if jdx != idx
        )
        if not redundant:
            kept.append(g)

    reduced = []
    for g in kept:
        head = ring.term_new(g.LM, g.LC)
        reduced.append(head + engine.reduce(g - head, kept))
    return sorted(reduced, key=lambda g: (engine.key(g.LM), int(g.LC)))


def normal_form(f: Polynomial, G: StrongGB) -> Polynomial:
    """Fully reduced remainder of f; zero exactly when f lies in the ideal."""
    engine = G._engine
    return engine.to_polynomial(engine.reduce(engine.to_ring(f), G._elements))


def _standard_monomials(G: StrongGB, unit_only: bool) -> List[Monomial]:
    engine = G._engine
    ring = engine.ring
    nvars = len(G.variables)
    heads = [g.LM for g in G._elements if not unit_only or g.LC == 1]
    start = (0,) * nvars
    if start in heads:
        return []

    for i, v in enumerate(G.variables):
        if not any(h[i] > 0 and sum(h) == h[i] for h in heads):
            raise NotFinitelyGenerated(
                f"the quotient is not finitely generated as detected: no pure power of {v} is a leading monomial"
            )

    seen = {start}
    frontier = [start]
    while frontier:
        expv = frontier.pop()
        for i in range(nvars):
            nxt = tuple(e + (k == i) for k, e in enumerate(expv))
            if nxt in seen or any(ring.monomial_div(nxt, h) is not None for h in heads):
                continue
            seen.add(nxt)
            frontier.append(nxt)
    ordered = sorted(seen, key=engine.key)
    return [engine.monomial(e) for e in ordered]


def standard_monomials(G: StrongGB) -> List[Monomial]:
    """Monomials not divisible by any leading monomial (finite set, smallest first)."""
    return _standard_monomials(G, unit_only=False)


@dataclass(frozen=True)
class FgQuotientGroup:
    monomial_generators: Tuple[Monomial, ...]
    relations: IntMatrix
    group: FinAbGroup
    _gb: StrongGB = field(default=None, repr=False, compare=False)

    def vector(self, p: Polynomial) -> List[int]:
        """Coordinates of the normal form of p over the monomial generators."""
        reduced = normal_form(p, self._gb)
        index = {m: i for i, m in enumerate(self.monomial_generators)}
        vec = [0] * len(index)
        for m, c in reduced.terms.items():
            if m not in index:
                raise ArithmeticError(f"normal form term {m} lies outside the generator set")
            vec[index[m]] = int(c)
        return vec

    def polynomial(self, vec: Sequence[int]) -> Polynomial:
        return Polynomial({m: c for m, c in zip(self.monomial_generators, vec)})


def quotient_group_structure(G: StrongGB) -> FgQuotientGroup:
    """
    The additive group of ℤ[x]/I presented on monomial generators.

    Generators are the monomials outside every unit-leading-coefficient leading
    monomial; each basis element with leading coefficient c > 1 and each
    generator m divisible by its leading monomial contributes the row
    c·e_m − coordinates(NF(c·m)).
    """
    if G.domain != "ZZ":
        raise InvalidParameters("quotient_group_structure needs a basis over ZZ; use q_dimension over QQ")
    generators = _standard_monomials(G, unit_only=True)
    engine = G._engine
    ring = engine.ring
    index = {m: i for i, m in enumerate(generators)}
    rows = []
    for m in generators:
        expv = engine.to_ring(Polynomial({m: 1})).LM
        for g in G._elements:
            if g.LC == 1 or ring.monomial_div(expv, g.LM) is None:
                continue
            c = int(g.LC)
            row = [0] * len(generators)
            row[index[m]] += c
            reduced = normal_form(Polynomial({m: c}), G)
            for mono, coeff in reduced.terms.items():
                row[index[mono]] -= int(coeff)
            if any(row):
                rows.append(row)
    relations = IntMatrix.from_rows(rows, len(generators)) if rows else IntMatrix.zeros(0, len(generators))
    group = cokernel_group(relations, len(generators))
    logger.info(f"Quotient group on {len(generators)} monomial generators, {len(rows)} relations: {group}")
    return FgQuotientGroup(tuple(generators), relations, group, G)


def q_dimension(ideal: IdealPresentation) -> int:
    """Dimension over ℚ of the quotient by the ideal."""
    if ideal.domain != "QQ":
        ideal = IdealPresentation(ideal.variables, ideal.generators, ideal.order, "QQ")
    return len(standard_monomials(strong_groebner(ideal)))


class QuotientRing:
    """
    A quotient ring given by a Gröbner basis in a reduced variable set plus
    explicit substitutions for eliminated variables.
    """

    def __init__(self, gb: StrongGB, substitutions: Optional[Mapping[str, Polynomial]] = None):
        self.gb = gb
        self.substitutions = dict(substitutions or {})
        self._group: Optional[FgQuotientGroup] = None

    def reduce(self, p: Polynomial) -> Polynomial:
        if self.substitutions:
            p = substitute(p, self.substitutions)
        return normal_form(p, self.gb)

    def is_zero(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero()

    @property
    def group_structure(self) -> FgQuotientGroup:
        if self._group is None:
            self._group = quotient_group_structure(self.gb)
        return self._group

    def vector(self, p: Polynomial) -> List[int]:
        if self.substitutions:
            p = substitute(p, self.substitutions)
        return self.group_structure.vector(p)


@dataclass(frozen=True)
class SubringExpression:
    """target = Σ coefficients[α] · ∏ gens^α"""

    coefficients: Dict[Tuple[int, ...], Fraction]

    def expand(self, gens: Sequence[Polynomial]) -> Polynomial:
        total = Polynomial()
        for alpha, c in self.coefficients.items():
            term = Polynomial.constant(c)
            for g, e in zip(gens, alpha):
                if e:
                    term = term * (g ** e)
            total = total + term
        return total


def _exponent_vectors(count: int, cap: int):
    for degree in range(cap + 1):
        for combo in itertools.combinations_with_replacement(range(count), degree):
            alpha = [0] * count
            for i in combo:
                alpha[i] += 1
            yield tuple(alpha)


def _fixed_by_symmetry(target: Polynomial, gens: Sequence[Polynomial]) -> Optional[str]:
    """A coordinate symmetry fixing every generator but not the target, if one exists."""
    names = sorted({v for p in [target, *gens] for v in p.variables()})
    moves = [({a: Polynomial.variable(b), b: Polynomial.variable(a)}, f"{a}<->{b}")
             for a, b in itertools.combinations(names, 2)]
    if target.laurent or any(g.laurent for g in gens):
        moves += [({v: Polynomial.variable(v, -1)}, f"{v}->{v}^-1") for v in names]
    for images, label in moves:
        if all(substitute(g, images) == g for g in gens) and substitute(target, images) != target:
            return label
    return None


def express_in_subring(target: Polynomial, gens: Sequence[Polynomial], degree_cap: int,
                       integral: bool = True) -> SubringExpression:
    """
    Writes target as a polynomial in gens using monomials of degree ≤ degree_cap.

    Raises:
        NotExpressible: a coordinate symmetry fixes all gens but moves the target,
            or (integral mode) the unique rational solution is not integral.
        NotExpressibleWithinCap: no solution with the allowed monomials.
    """
    gens = [Polynomial.coerce(g) for g in gens]
    alphas = list(_exponent_vectors(len(gens), degree_cap))
    products: Dict[Tuple[int, ...], Polynomial] = {}
    for alpha in alphas:
        if not any(alpha):
            products[alpha] = Polynomial.constant(1)
            continue
        i = max(k for k, e in enumerate(alpha) if e)
        parent = tuple(e - (k == i) for k, e in enumerate(alpha))
        products[alpha] = products[parent] * gens[i]

    monomials = sorted({m for p in [target, *products.values()] for m in p.terms}, key=str)
    rows = [[products[alpha].coefficient(m) for alpha in alphas] for m in monomials]
    rhs = [target.coefficient(m) for m in monomials]
    solution = solve_rational(rows, rhs)

    if solution is None:
        symmetry = _fixed_by_symmetry(target, gens)
        if symmetry is not None:
            raise NotExpressible(f"target is moved by {symmetry}, which fixes every generator")
        raise NotExpressibleWithinCap(f"no expression with generator monomials of degree <= {degree_cap}")

    coefficients = {alpha: c for alpha, c in zip(alphas, solution) if c}
    if integral and any(c.denominator != 1 for c in coefficients.values()):
        if rational_rank(rows) == len(alphas):
            raise NotExpressible("the unique expression has non-integral coefficients")
        raise NotExpressibleWithinCap("no integral expression found within the cap")
    return SubringExpression(coefficients)

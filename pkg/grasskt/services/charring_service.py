# Torus characters of Spin/SO representation rings and the restriction map to H(n,k)
import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

# Logging module for tracking application events and debugging
import logging

# Exact Gaussian integers for evaluations at the order-4 element z0
from sympy.polys.domains import ZZ_I

from config import config
from grasskt.services.errors import InvalidParameters, NotExpressible, ResourceCapExceeded
from grasskt.services.poly_service import Monomial, Polynomial, elementary_symmetric_all, substitute
from grasskt.services.zgb_service import express_in_subring

# Configure logger for this module
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

# Variable carrying the sign character θ (θ² = 1)
THETA = "t"


class GroupTag(str, Enum):
    SPIN_EVEN = "Spin(2m)"
    SPIN_ODD = "Spin(2s+1)"
    SO_EVEN = "SO(2s)"
    SO_ODD = "SO(2s+1)"
    H0 = "H0(n,k)"
    H = "H(n,k)"


@dataclass(frozen=True)
class TorusCharacter:
    """Laurent polynomial in torus coordinates, possibly carrying powers of θ."""

    value: Polynomial
    coordinates: Tuple[str, ...]

    @property
    def parity_class(self) -> str:
        classes = {_monomial_parity(m, self.coordinates) for m in self.value.terms}
        if not classes:
            return "all-even"
        return classes.pop() if len(classes) == 1 else "mixed"

    @property
    def theta_part(self) -> bool:
        return THETA in self.value.variables()


@dataclass(frozen=True)
class RepElement:
    group: GroupTag
    symbol: str
    rank: Union[int, Tuple[int, int]]
    index: Optional[int]
    character: TorusCharacter

    @property
    def dimension(self) -> int:
        values = {v: 1 for v in self.character.value.variables()}
        return int(self.character.value.evaluate(values))


def _monomial_parity(m: Monomial, coordinates: Sequence[str]) -> str:
    parities = {m.exponent(v) % 2 for v in coordinates}
    if parities == {0}:
        return "all-even"
    if parities == {1}:
        return "all-odd"
    return "mixed"


def coordinates(var: str, r: int) -> List[str]:
    return [f"{var}{i}" for i in range(1, r + 1)]


def _squares(var: str, r: int) -> List[Polynomial]:
    out = []
    for v in coordinates(var, r):
        out += [Polynomial.variable(v, 2), Polynomial.variable(v, -2)]
    return out


def _sums_of_squares(var: str, r: int) -> List[Polynomial]:
    return [Polynomial.variable(v, 2) + Polynomial.variable(v, -2) for v in coordinates(var, r)]


def _sign_sum(var: str, r: int, parity: Optional[int]) -> Polynomial:
    """Σ u^ε over sign vectors ε; parity 0/1 keeps an even/odd number of −1's, None keeps all."""
    total = {}
    names = coordinates(var, r)
    for signs in itertools.product((1, -1), repeat=r):
        if parity is not None and signs.count(-1) % 2 != parity:
            continue
        total[Monomial.of(dict(zip(names, signs)))] = 1
    return Polynomial(total)


def reduce_theta(p: Polynomial) -> Polynomial:
    """Applies θ² = 1."""
    out: Dict[Monomial, int] = {}
    for m, c in p.terms.items():
        exps = m.as_dict()
        if THETA in exps:
            exps[THETA] %= 2
        key = Monomial.of(exps)
        out[key] = out.get(key, 0) + c
    return Polynomial(out, p.domain, p.laurent)


def _lambda_pm(var: str, s: int, sign: int) -> Polynomial:
    e_s = elementary_symmetric_all(_squares(var, s))[s]
    product = Polynomial.constant(1)
    for v in coordinates(var, s):
        product = product * (Polynomial.variable(v, 2) - Polynomial.variable(v, -2))
    half = (e_s + sign * product) * Fraction(1, 2)
    if not half.is_integral():
        raise ArithmeticError(f"half of e_{s} ± Π(u² − u⁻²) is not integral")
    return half.to_domain("ZZ")


def _indexed(values: List[Polynomial], index: Optional[int], symbol: str) -> Polynomial:
    if index is None or index < 0 or index >= len(values):
        raise InvalidParameters(f"{symbol} needs an index in [0, {len(values) - 1}], got {index}")
    return values[index]


def character_of(symbol: str, group: GroupTag, rank: Union[int, Tuple[int, int]],
                 index: Optional[int] = None, var: str = "u") -> RepElement:
    """
    The torus character of a generator of R Spin, R SO, R H⁰ or R H.

    Args:
        symbol: Lambda, lambda, lambda+, lambda-, mu, Delta, Delta+, Delta-, delta,
            Delta_st, theta, z, x, y (which ones apply depends on the group).
        group: the group tag.
        rank: m, s or (s, t) for the H groups.
        index: subscript for indexed symbols.
        var: coordinate prefix for the classical groups.

    Returns:
        RepElement carrying the exact Laurent character.
    """
    group = GroupTag(group)
    if group in (GroupTag.H0, GroupTag.H):
        s, t = rank
        value, coords = _h_character(symbol, group, s, t, index)
    else:
        r = int(rank)
        coords = tuple(coordinates(var, r))
        value = _classical_character(symbol, group, r, index, var)
    return RepElement(group, symbol, rank, index, TorusCharacter(value, tuple(coords)))


def _classical_character(symbol: str, group: GroupTag, r: int, index: Optional[int], var: str) -> Polynomial:
    if group == GroupTag.SPIN_EVEN:
        if symbol == "Lambda":
            return _indexed(elementary_symmetric_all(_squares(var, r)), index, symbol)
        if symbol == "Delta+":
            return _sign_sum(var, r, 0)
        if symbol == "Delta-":
            return _sign_sum(var, r, 1)
        if symbol == "delta":
            return _sign_sum(var, r, 0) - _sign_sum(var, r, 1)
        if symbol == "z":
            return _indexed(elementary_symmetric_all(_sums_of_squares(var, r)), index, symbol)
    elif group in (GroupTag.SPIN_ODD, GroupTag.SO_ODD):
        if symbol in ("Lambda", "lambda"):
            return _indexed(elementary_symmetric_all(_squares(var, r) + [Polynomial.constant(1)]), index, symbol)
        if symbol == "Delta" and group == GroupTag.SPIN_ODD:
            return _sign_sum(var, r, None)
        if symbol == "x":
            return _indexed(elementary_symmetric_all(_sums_of_squares(var, r)), index, symbol)
    elif group == GroupTag.SO_EVEN:
        if symbol == "lambda":
            return _indexed(elementary_symmetric_all(_squares(var, r)), index, symbol)
        if symbol == "lambda+":
            return _lambda_pm(var, r, 1)
        if symbol == "lambda-":
            return _lambda_pm(var, r, -1)
        if symbol == "x":
            return _indexed(elementary_symmetric_all(_sums_of_squares(var, r)), index, symbol)
    raise InvalidParameters(f"{symbol} is not a generator symbol of {group.value}")


def _h_character(symbol: str, group: GroupTag, s: int, t: int, index: Optional[int]):
    coords = tuple(coordinates("u", s) + coordinates("v", t))
    if symbol == "lambda":
        value = _classical_character("lambda", GroupTag.SO_ODD, s, index, "u")
    elif symbol == "mu":
        value = _classical_character("lambda", GroupTag.SO_ODD, t, index, "v")
    elif symbol == "x":
        value = _classical_character("x", GroupTag.SO_ODD, s, index, "u")
    elif symbol == "y":
        value = _classical_character("x", GroupTag.SO_ODD, t, index, "v")
    elif symbol == "Delta_st":
        value = _sign_sum("u", s, None) * _sign_sum("v", t, None)
    elif symbol == "theta" and group == GroupTag.H:
        value = Polynomial.variable(THETA)
    else:
        raise InvalidParameters(f"{symbol} is not a generator symbol of {group.value}")
    return value, coords


def formal_dimension(symbol: str, group: GroupTag, rank: Union[int, Tuple[int, int]],
                     index: Optional[int] = None) -> int:
    """Dimension of the representation named by symbol, from its definition."""
    group = GroupTag(group)
    if group in (GroupTag.H0, GroupTag.H):
        s, t = rank
        table = {
            "lambda": lambda: comb(2 * s + 1, index),
            "mu": lambda: comb(2 * t + 1, index),
            "x": lambda: comb(s, index) * 2 ** index,
            "y": lambda: comb(t, index) * 2 ** index,
            "Delta_st": lambda: 2 ** (s + t),
            "theta": lambda: 1,
        }
    else:
        r = int(rank)
        table = {
            "Lambda": lambda: comb(2 * r, index) if group == GroupTag.SPIN_EVEN else comb(2 * r + 1, index),
            "lambda": lambda: comb(2 * r, index) if group == GroupTag.SO_EVEN else comb(2 * r + 1, index),
            "lambda+": lambda: comb(2 * r, r) // 2,
            "lambda-": lambda: comb(2 * r, r) // 2,
            "Delta": lambda: 2 ** r,
            "Delta+": lambda: 2 ** (r - 1),
            "Delta-": lambda: 2 ** (r - 1),
            "delta": lambda: 0,
            "z": lambda: comb(r, index) * 2 ** index,
            "x": lambda: comb(r, index) * 2 ** index,
        }
    if symbol not in table:
        raise InvalidParameters(f"no formal dimension for {symbol} in {group.value}")
    return table[symbol]()


def generator_symbols(group: GroupTag, rank: Union[int, Tuple[int, int]]) -> List[Tuple[str, Optional[int]]]:
    """Every (symbol, index) pair character_of accepts for the group and rank."""
    group = GroupTag(group)
    if group in (GroupTag.H0, GroupTag.H):
        s, t = rank
        out = [("lambda", p) for p in range(2 * s + 2)] + [("mu", q) for q in range(2 * t + 2)]
        out += [("x", p) for p in range(s + 1)] + [("y", q) for q in range(t + 1)] + [("Delta_st", None)]
        return out + ([("theta", None)] if group == GroupTag.H else [])
    r = int(rank)
    if group == GroupTag.SPIN_EVEN:
        return [("Lambda", j) for j in range(2 * r + 1)] + [("Delta+", None), ("Delta-", None), ("delta", None)] \
            + [("z", j) for j in range(r + 1)]
    if group == GroupTag.SPIN_ODD:
        return [("Lambda", j) for j in range(2 * r + 2)] + [("Delta", None)]
    if group == GroupTag.SO_ODD:
        return [("lambda", p) for p in range(2 * r + 2)] + [("x", p) for p in range(r + 1)]
    return [("lambda", p) for p in range(2 * r + 1)] + [("lambda+", None), ("lambda-", None)] \
        + [("x", p) for p in range(r + 1)]


def is_weyl_invariant(element: RepElement) -> bool:
    """
    Checks invariance under generators of the Weyl group: adjacent transpositions
    of coordinates, plus a single sign flip (B type) or a simultaneous flip of
    two coordinates (D type). The H groups are checked factor by factor.
    """
    value = element.character.value
    if element.group in (GroupTag.H0, GroupTag.H):
        s, t = element.rank
        factors = [("u", s, "B"), ("v", t, "B")]
    else:
        kind = "D" if element.group in (GroupTag.SPIN_EVEN, GroupTag.SO_EVEN) else "B"
        var = element.character.coordinates[0].rstrip("0123456789") if element.character.coordinates else "u"
        factors = [(var, int(element.rank), kind)]
    for var, r, kind in factors:
        names = coordinates(var, r)
        moves = [{a: Polynomial.variable(b), b: Polynomial.variable(a)} for a, b in zip(names, names[1:])]
        if kind == "B" and r >= 1:
            moves.append({names[0]: Polynomial.variable(names[0], -1)})
        if kind == "D" and r >= 2:
            moves.append({names[0]: Polynomial.variable(names[0], -1), names[1]: Polynomial.variable(names[1], -1)})
        if any(substitute(value, move) != value for move in moves):
            return False
    return True


def _check_theorem_case(n: int, k: int):
    if n % 4 or k % 2 == 0 or not 2 <= k <= n // 2:
        raise InvalidParameters(f"the restriction map needs n ≡ 0 mod 4 and odd k ≤ n/2, got ({n},{k})")


def _restrict(x: Polynomial, s: int, t: int, all_odd_shift: int) -> Polynomial:
    m = s + t + 1
    coords = coordinates("u", m)
    out: Dict[Monomial, int] = {}
    for mono, c in x.terms.items():
        extra = set(mono.variables()) - set(coords)
        if extra:
            raise InvalidParameters(f"{mono} involves non-torus variables {sorted(extra)}")
        parity = _monomial_parity(mono, coords)
        if parity == "mixed":
            raise InvalidParameters(f"{mono} has mixed exponent parities and is not a character of the double cover")
        exps = [mono.exponent(v) for v in coords]
        theta = sum(a // 2 for a in exps) + (all_odd_shift if parity == "all-odd" else 0)
        image = {f"u{j}": exps[j - 1] for j in range(1, s + 1)}
        image.update({f"v{j}": exps[s + j] for j in range(1, t + 1)})
        image[THETA] = theta % 2
        key = Monomial.of(image)
        out[key] = out.get(key, 0) + c
    return Polynomial(out, x.domain, laurent=True)


def mu_star(x: Union[Polynomial, TorusCharacter], n: int, k: int) -> Polynomial:
    """
    Restriction from the maximal torus of Spin(n) to T̃₀ × ℤ₂, monomial by monomial.

    u_j^{±2} ↦ θ·u_j^{±2} (j ≤ s), u_{s+1}^{±2} ↦ θ, u_j^{±2} ↦ θ·v_{j−s−1}^{±2} (j > s+1);
    an all-odd monomial u^a maps to θ^c u^a|v^a with c = Σ⌊a_j/2⌋ plus 1 when n ≡ 4 mod 8.
    """
    _check_theorem_case(n, k)
    value = x.value if isinstance(x, TorusCharacter) else x
    s, t = (k - 1) // 2, (n - k - 1) // 2
    return _restrict(value, s, t, 0 if n % 8 == 0 else 1)


def rho0(x: Polynomial, s: int, t: int) -> Polynomial:
    """Restriction to T̃₀ with θ set to 1 (defined on all-even characters for any s, t)."""
    restricted = _restrict(x, s, t, 0)
    return substitute(restricted, {THETA: 1})


def evaluate_at_z0(x: Union[Polynomial, TorusCharacter], n: int):
    """Value at z0 = (¼, …, ¼): every u_j ↦ i and θ ↦ −1, as an exact Gaussian integer."""
    value = x.value if isinstance(x, TorusCharacter) else x
    powers = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    re = im = 0
    for mono, c in value.terms.items():
        quarter_turns = sum(e for v, e in mono.powers if v != THETA)
        sign = -1 if mono.exponent(THETA) % 2 else 1
        a, b = powers[quarter_turns % 4]
        re += int(c) * sign * a
        im += int(c) * sign * b
    return ZZ_I(re, im)


def evaluate_restricted_at_z0(y: Polynomial) -> int:
    """Value of a T̃₀ × ℤ₂ character at (1, z0): torus coordinates ↦ 1, θ ↦ −1."""
    values = {v: (-1 if v == THETA else 1) for v in y.variables()}
    return int(y.evaluate(values))


def splits_as_direct_product(n: int, k: int) -> bool:
    """H(n,k) ≅ H⁰(n,k) × ℤ₂ exactly when n ≡ 0 mod 4 and k is odd."""
    if not 2 <= k <= n // 2:
        raise InvalidParameters(f"need 2 ≤ k ≤ n/2, got ({n},{k})")
    return n % 4 == 0 and k % 2 == 1


@dataclass
class VerificationResult:
    case: str
    params: Dict[str, int]
    passed: bool
    witness: Optional[Polynomial] = None
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "params": dict(self.params),
            "pass": self.passed,
            "witness": None if self.witness is None else str(self.witness),
        }


def _spin_odd(var: str, r: int) -> Polynomial:
    return _sign_sum(var, r, None)


def _so_odd_lambdas(var: str, r: int) -> List[Polynomial]:
    return elementary_symmetric_all(_squares(var, r) + [Polynomial.constant(1)])


def identity_sides(case: str, params: Dict[str, int]) -> List[Tuple[Polynomial, Polynomial]]:
    """The (lhs, rhs) pairs whose equality the identity case asserts."""
    if case == "eq3":
        s, t = params["s"], params["t"]
        lhs = _spin_odd("u", s) ** 2 * _spin_odd("v", t) ** 2
        lam, mu = _so_odd_lambdas("u", s), _so_odd_lambdas("v", t)
        rhs = sum(lam[: s + 1], Polynomial()) * sum(mu[: t + 1], Polynomial())
        return [(lhs, rhs)]

    if case == "delta_product":
        m = params["m"]
        big = elementary_symmetric_all(_squares("u", m))
        rhs = sum((big[j] for j in range(m - 1, -1, -2)), Polynomial())
        return [(_sign_sum("u", m, 0) * _sign_sum("u", m, 1), rhs)]

    if case == "odd_spin_square":
        s = params["s"]
        return [(_spin_odd("u", s) ** 2, sum(_so_odd_lambdas("u", s)[: s + 1], Polynomial()))]

    if case == "hodge_quadratic":
        s = params["s"]
        lam = elementary_symmetric_all(_squares("u", s))
        odd = sum((lam[j] for j in range(s - 1, -1, -2)), Polynomial())
        even = sum((lam[j] for j in range(s - 2, -1, -2)), Polynomial())
        lhs = _lambda_pm("u", s, 1) * _lambda_pm("u", s, -1)
        return [(lhs, odd * odd - lam[s] * even - even * even)]

    if case == "restriction":
        n, k = params["n"], params["k"]
        _check_theorem_case(n, k)
        s, t, m = (k - 1) // 2, (n - k - 1) // 2, n // 2
        eps = 0 if n % 8 == 0 else 1
        big = elementary_symmetric_all(_squares("u", m))
        lam, mu = _so_odd_lambdas("u", s), _so_odd_lambdas("v", t)
        theta = Polynomial.variable(THETA)
        sides = []
        for j in range(1, m):
            rhs = sum((lam[p] * mu[j - p] for p in range(0, j + 1) if p < len(lam) and j - p < len(mu)),
                      Polynomial())
            sides.append((mu_star(big[j], n, k), reduce_theta(theta ** j * rhs)))
        delta_st = _spin_odd("u", s) * _spin_odd("v", t)
        sides.append((mu_star(_sign_sum("u", m, 0), n, k), reduce_theta(theta ** eps * delta_st)))
        sides.append((mu_star(_sign_sum("u", m, 1), n, k), reduce_theta(theta ** (1 + eps) * delta_st)))
        return sides

    if case == "z_identities":
        s, t = params["s"], params["t"]
        m = s + t + 1
        z = elementary_symmetric_all(_sums_of_squares("u", m))
        x = elementary_symmetric_all(_sums_of_squares("u", s))
        y = elementary_symmetric_all(_sums_of_squares("v", t))

        def convolution(j: int) -> Polynomial:
            return sum((x[p] * y[j - p] for p in range(0, j + 1) if p <= s and j - p <= t), Polynomial())

        sides = []
        for j in range(1, m):
            sides.append((rho0(z[j], s, t), convolution(j) + 2 * convolution(j - 1)))
        sides.append((rho0(z[m], s, t), 2 * x[s] * y[t]))
        z_prime = z[1] - 2
        sides.append((rho0(z_prime, s, t), convolution(1)))
        for r in range(2, m):
            z_prime = z[r] - 2 * z_prime
            sides.append((rho0(z_prime, s, t), convolution(r)))
        return sides

    if case == "z0_consistency":
        n, k = params["n"], params["k"]
        _check_theorem_case(n, k)
        m = n // 2
        monomials = [Polynomial.variable(f"u{j}", e) for j in range(1, m + 1) for e in (2, -2)]
        monomials += [Polynomial.monomial({f"u{j}": e for j, e in enumerate(signs, 1)})
                      for signs in itertools.product((1, -1), repeat=m)]
        return [(Polynomial.constant(int(evaluate_at_z0(x, n).x)),
                 Polynomial.constant(evaluate_restricted_at_z0(mu_star(x, n, k)))) for x in monomials]

    if case == "dimensions":
        r = params["r"]
        sides = []
        for group in (GroupTag.SPIN_EVEN, GroupTag.SPIN_ODD, GroupTag.SO_EVEN, GroupTag.SO_ODD):
            for symbol, index in generator_symbols(group, r):
                element = character_of(symbol, group, r, index)
                sides.append((Polynomial.constant(element.dimension),
                              Polynomial.constant(formal_dimension(symbol, group, r, index))))
        return sides

    raise InvalidParameters(f"unknown identity case {case!r}")


def judge_sides(case: str, params: Dict[str, int], sides: Sequence[Tuple[Polynomial, Polynomial]]) -> VerificationResult:
    for lhs, rhs in sides:
        difference = lhs - rhs
        if not difference.is_zero():
            return VerificationResult(case, params, False, difference)
    return VerificationResult(case, params, True)


def _factor_generators(var: str, k: int) -> Tuple[List[Polynomial], List[Polynomial]]:
    """(R SO(k) generators, spin-type generators whose products are squared) on one factor."""
    r = k // 2
    if k % 2:
        return _so_odd_lambdas(var, r)[1: r + 1], [_spin_odd(var, r)]
    ring_gens = elementary_symmetric_all(_squares(var, r))[1: r] + [_lambda_pm(var, r, 1), _lambda_pm(var, r, -1)]
    return ring_gens, [_sign_sum(var, r, 0), _sign_sum(var, r, 1)]


def _subring_case(case: str, params: Dict[str, int]) -> VerificationResult:
    cap = params.get("cap", config.SUBRING_DEGREE_CAP)
    if case == "rh0_squares":
        n, k = params["n"], params["k"]
        ring_u, spin_u = _factor_generators("u", k)
        ring_v, spin_v = _factor_generators("v", n - k)
        gens = ring_u + ring_v
        targets = [(a * b) ** 2 for a in spin_u for b in spin_v]
    else:
        m = params["m"]
        gens = elementary_symmetric_all(_sums_of_squares("u", m))[1:]
        targets = [(_sign_sum("u", m, 0) - _sign_sum("u", m, 1)) ** 2]
        cap = max(cap, 1)
    for target in targets:
        try:
            found = express_in_subring(target, gens, cap)
        except NotExpressible as e:
            return VerificationResult(case, params, False, target, str(e))
        residue = found.expand(gens) - target
        if not residue.is_zero():
            return VerificationResult(case, params, False, residue)
    return VerificationResult(case, params, True)


IDENTITY_CASES = (
    "eq3", "delta_product", "odd_spin_square", "hodge_quadratic", "restriction",
    "z_identities", "rh0_squares", "delta_squared", "z0_consistency", "dimensions",
)


def verify_identity(case: str, params: Dict[str, int]) -> VerificationResult:
    """
    Verifies one character identity as an exact Laurent-polynomial equality.

    Returns:
        VerificationResult whose witness is the first nonzero difference on failure.
    """
    _check_caps(case, params)
    if case in ("rh0_squares", "delta_squared"):
        result = _subring_case(case, params)
    else:
        result = judge_sides(case, params, identity_sides(case, params))
    logger.info(f"identity {case} {params}: {'pass' if result.passed else 'FAIL'}")
    return result


def case_size(case: str, params: Dict[str, int]) -> Tuple[int, Tuple[int, ...]]:
    """
    The rank m of an identity case and the ranks of its factors.

    Only cases parameterized by factor ranks report them; restriction and
    z0_consistency are fixed by (n, k) and are bounded through m alone.
    """
    try:
        if case in ("eq3", "z_identities"):
            s, t = params["s"], params["t"]
            return s + t + 1, (s, t)
        if case == "odd_spin_square":
            return params["s"], (params["s"],)
        if case == "hodge_quadratic":
            return params["s"], ()
        if case in ("delta_product", "delta_squared"):
            return params["m"], ()
        if case == "dimensions":
            return params["r"], ()
        n, k = params["n"], params["k"]
    except KeyError as e:
        raise InvalidParameters(f"{case} needs parameter {e.args[0]!r}, got {params}")
    if case == "rh0_squares":
        return n // 2, (k // 2, (n - k) // 2)
    return n // 2, ()


def _check_caps(case: str, params: Dict[str, int]):
    if case not in IDENTITY_CASES:
        raise InvalidParameters(f"unknown identity case {case!r}; choose from {', '.join(IDENTITY_CASES)}")
    m, factors = case_size(case, params)
    if m > config.CHARRING_MAX_M:
        raise ResourceCapExceeded(f"{case} {params} has rank {m} > CHARRING_MAX_M={config.CHARRING_MAX_M}")
    if any(r > config.CHARRING_MAX_ST for r in factors):
        raise ResourceCapExceeded(f"{case} {params} has a factor of rank > CHARRING_MAX_ST={config.CHARRING_MAX_ST}")


def identity_parameter_sets(case: str, max_m: int = None, max_st: int = None) -> List[Dict[str, int]]:
    """Every valid parameter set of a case with rank ≤ max_m and s, t ≤ max_st."""
    max_m = max_m or config.CHARRING_MAX_M
    max_st = max_st or config.CHARRING_MAX_ST
    st_pairs = [(s, t) for s in range(1, max_st + 1) for t in range(1, max_st + 1) if s + t + 1 <= max_m]
    theorem = [(2 * m, k) for m in range(2, max_m + 1) if (2 * m) % 4 == 0 for k in range(3, m + 1, 2)]
    if case in ("eq3", "z_identities"):
        return [{"s": s, "t": t} for s, t in st_pairs]
    if case in ("delta_product", "delta_squared"):
        return [{"m": m} for m in range(1, max_m + 1)]
    if case == "odd_spin_square":
        return [{"s": s} for s in range(1, max_st + 1)]
    if case == "hodge_quadratic":
        return [{"s": s} for s in range(1, max_m + 1)]
    if case in ("restriction", "z0_consistency"):
        return [{"n": n, "k": k} for n, k in theorem]
    if case == "rh0_squares":
        out = []
        for s in range(1, max_st + 1):
            for t in range(1, max_st + 1):
                for k in (2 * s, 2 * s + 1):
                    for rest in (2 * t, 2 * t + 1):
                        if k <= rest and (k + rest) // 2 <= max_m:
                            out.append({"n": k + rest, "k": k})
        return out
    if case == "dimensions":
        return [{"r": r} for r in range(1, max_m + 1)]
    raise InvalidParameters(f"unknown identity case {case!r}")

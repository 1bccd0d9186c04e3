# Exact multivariate (Laurent) polynomials and symmetric-function helpers
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

# Logging module for tracking application events and debugging
import logging

# Symbolic parsing, determinants and exact polynomial division
import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from grasskt.services.errors import InvalidParameters

# Configure logger for this module
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

Coefficient = Union[int, Fraction]

_NAME = re.compile(r"([A-Za-z_]*)(\d*)(.*)")
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def name_key(name: str):
    """Natural ordering on variable names: l2 before l10."""
    prefix, digits, rest = _NAME.fullmatch(name).groups()
    return (prefix, int(digits) if digits else -1, rest)


def _normalize(c, domain: str) -> Coefficient:
    if isinstance(c, sympy.Rational):
        c = Fraction(int(c.p), int(c.q))
    if domain == "ZZ":
        c = Fraction(c)
        if c.denominator != 1:
            raise InvalidParameters(f"non-integral coefficient {c} in a ℤ polynomial")
        return int(c)
    return Fraction(c)


@dataclass(frozen=True)
class Monomial:
    """Product of variable powers; zero exponents are never stored."""

    powers: Tuple[Tuple[str, int], ...] = ()

    @classmethod
    def of(cls, exponents: Mapping[str, int]) -> "Monomial":
        items = [(v, int(e)) for v, e in exponents.items() if e]
        return cls(tuple(sorted(items, key=lambda item: name_key(item[0]))))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.powers)

    @property
    def is_laurent(self) -> bool:
        return any(e < 0 for _, e in self.powers)

    def variables(self) -> Tuple[str, ...]:
        return tuple(v for v, _ in self.powers)

    def exponent(self, var: str) -> int:
        for v, e in self.powers:
            if v == var:
                return e
        return 0

    def as_dict(self) -> Dict[str, int]:
        return dict(self.powers)

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self.powers)
        for v, e in other.powers:
            merged[v] = merged.get(v, 0) + e
        return Monomial.of(merged)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial.of({v: e * k for v, e in self.powers})

    def divides(self, other: "Monomial") -> bool:
        return all(other.exponent(v) >= e for v, e in self.powers)

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self.powers)


ONE = Monomial()


class Polynomial:
    """
    Sparse exact polynomial over ℤ or ℚ keyed by Monomial.

    The laurent flag marks that negative exponents are allowed; it is set
    automatically when a negative exponent appears and propagates through
    arithmetic.
    """

    __slots__ = ("terms", "domain", "laurent")

    def __init__(self, terms: Optional[Mapping[Monomial, Coefficient]] = None,
                 domain: Optional[str] = None, laurent: bool = False):
        raw = {m: c for m, c in (terms or {}).items() if c}
        if domain is None:
            domain = "ZZ"
            for c in raw.values():
                if isinstance(c, Fraction) and c.denominator != 1:
                    domain = "QQ"
                    break
                if isinstance(c, sympy.Rational) and not c.is_Integer:
                    domain = "QQ"
                    break
        if domain not in ("ZZ", "QQ"):
            raise InvalidParameters(f"unknown coefficient ring {domain!r}")
        self.terms: Dict[Monomial, Coefficient] = {m: _normalize(c, domain) for m, c in raw.items()}
        self.domain = domain
        self.laurent = laurent or any(m.is_laurent for m in self.terms)

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, c: Coefficient, domain: Optional[str] = None) -> "Polynomial":
        return cls({ONE: c}, domain)

    @classmethod
    def variable(cls, name: str, exponent: int = 1) -> "Polynomial":
        return cls({Monomial.of({name: exponent}): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coefficient: Coefficient = 1) -> "Polynomial":
        return cls({Monomial.of(exponents): coefficient})

    @classmethod
    def coerce(cls, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, str):
            return cls.variable(value)
        return cls.constant(value)

    # -- inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == ONE for m in self.terms)

    def constant_term(self) -> Coefficient:
        return self.terms.get(ONE, 0)

    def variables(self) -> Tuple[str, ...]:
        names = {v for m in self.terms for v in m.variables()}
        return tuple(sorted(names, key=name_key))

    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def degree_in(self, var: str) -> int:
        return max((m.exponent(var) for m in self.terms), default=0)

    def coefficient(self, monomial: Monomial) -> Coefficient:
        return self.terms.get(monomial, 0)

    def coefficient_of(self, var: str, exponent: int = 1) -> "Polynomial":
        """The polynomial multiplying var^exponent (other powers of var dropped)."""
        out = {}
        for m, c in self.terms.items():
            if m.exponent(var) == exponent:
                rest = Monomial.of({v: e for v, e in m.powers if v != var})
                out[rest] = out.get(rest, 0) + c
        return Polynomial(out, self.domain, self.laurent)

    def sorted_terms(self) -> List[Tuple[Monomial, Coefficient]]:
        """Terms in graded-lexicographic order on natural variable names, largest first."""
        names = self.variables()

        def key(item):
            m = item[0]
            return (m.degree, tuple(m.exponent(v) for v in names))

        return sorted(self.terms.items(), key=key, reverse=True)

    def evaluate(self, values: Mapping[str, Coefficient]) -> Coefficient:
        total = Fraction(0)
        for m, c in self.terms.items():
            term = Fraction(c)
            for v, e in m.powers:
                term *= Fraction(values[v]) ** e
            total += term
        return int(total) if total.denominator == 1 else total

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.terms.values())

    def to_domain(self, domain: str) -> "Polynomial":
        return Polynomial(self.terms, domain, self.laurent)

    # -- arithmetic ---------------------------------------------------------
    def _join(self, other: "Polynomial") -> str:
        return "QQ" if "QQ" in (self.domain, other.domain) else "ZZ"

    def __add__(self, other) -> "Polynomial":
        other = Polynomial.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out, self._join(other), self.laurent or other.laurent)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()}, self.domain, self.laurent)

    def __sub__(self, other) -> "Polynomial":
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial.coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            domain = "QQ" if isinstance(other, Fraction) and other.denominator != 1 else self.domain
            return Polynomial({m: c * other for m, c in self.terms.items()}, domain, self.laurent)
        other = Polynomial.coerce(other)
        out: Dict[Monomial, Coefficient] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out, self._join(other), self.laurent or other.laurent)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            return self.inverse_monomial() ** (-k)
        result = Polynomial.constant(1, self.domain)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse_monomial(self) -> "Polynomial":
        if len(self.terms) != 1:
            raise InvalidParameters(f"{self} is not a monomial and cannot be inverted")
        (m, c), = self.terms.items()
        if c not in (1, -1):
            raise InvalidParameters(f"{self} has a non-unit coefficient and cannot be inverted")
        return Polynomial({m ** -1: c}, self.domain, laurent=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- conversions --------------------------------------------------------
    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"

    def to_sympy(self) -> sympy.Expr:
        total = sympy.Integer(0)
        for m, c in self.terms.items():
            c = Fraction(c)
            term = sympy.Rational(c.numerator, c.denominator)
            for v, e in m.powers:
                term *= sympy.Symbol(v) ** e
            total += term
        return total

    @classmethod
    def from_sympy(cls, expr, domain: Optional[str] = None) -> "Polynomial":
        expr = sympy.expand(sympy.sympify(expr))
        terms: Dict[Monomial, Coefficient] = {}
        for term in sympy.Add.make_args(expr):
            if term == 0:
                continue
            coeff, rest = term.as_coeff_Mul()
            if not coeff.is_Rational:
                raise InvalidParameters(f"non-rational coefficient {coeff}")
            exponents: Dict[str, int] = {}
            for factor in sympy.Mul.make_args(rest):
                if factor == 1:
                    continue
                base, exp = factor.as_base_exp()
                if not base.is_Symbol or not exp.is_Integer:
                    raise InvalidParameters(f"{factor} is not a power of a variable")
                exponents[base.name] = exponents.get(base.name, 0) + int(exp)
            m = Monomial.of(exponents)
            terms[m] = terms.get(m, 0) + Fraction(int(coeff.p), int(coeff.q))
        return cls(terms, domain)


def _format_coefficient(c: Coefficient) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Text form `3*l1^2*m2 - 8*t`; parse_polynomial reads it back."""
    if p.is_zero():
        return "0"
    pieces = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        magnitude = abs(Fraction(c))
        if m == ONE:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = str(m)
        else:
            body = f"{_format_coefficient(magnitude)}*{m}"
        if i == 0:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(pieces)


def parse_polynomial(text: str, domain: Optional[str] = None) -> Polynomial:
    """Parses the text format (`^` for powers, negative exponents for Laurent terms)."""
    names = {name: sympy.Symbol(name) for name in _IDENTIFIER.findall(text)}
    try:
        expr = parse_expr(text, local_dict=names,
                          transformations=standard_transformations + (convert_xor,),
                          evaluate=True)
    except (SyntaxError, TypeError, ValueError) as e:
        raise InvalidParameters(f"cannot parse polynomial {text!r}: {e}") from e
    return Polynomial.from_sympy(expr, domain)


def apply_hom(p: Polynomial, images: Mapping[str, object]) -> Polynomial:
    """
    Ring-homomorphic substitution; every variable of p needs an image.

    Args:
        p: source polynomial.
        images: variable name -> Polynomial (or int/Fraction constant).

    Returns:
        The exact image polynomial.
    """
    missing = [v for v in p.variables() if v not in images]
    if missing:
        raise InvalidParameters(f"no image given for variable(s) {', '.join(missing)}")
    return substitute(p, images)


def substitute(p: Polynomial, images: Mapping[str, object]) -> Polynomial:
    """Like apply_hom, but variables without an image map to themselves."""
    cache: Dict[Tuple[str, int], Polynomial] = {}

    def power(v: str, e: int) -> Polynomial:
        if (v, e) not in cache:
            cache[(v, e)] = Polynomial.coerce(images[v]) ** e
        return cache[(v, e)]

    total = Polynomial(domain=p.domain)
    for m, c in p.terms.items():
        term = Polynomial({Monomial.of({v: e for v, e in m.powers if v not in images}): c}, p.domain)
        for v, e in m.powers:
            if v in images:
                term = term * power(v, e)
        total = total + term
    return total


def elementary_symmetric(variables: Sequence, j: int) -> Polynomial:
    """e_j of the given variables (names or polynomials); e_0 = 1."""
    if j < 0 or j > len(variables):
        raise InvalidParameters(f"e_{j} is undefined for {len(variables)} variables")
    return elementary_symmetric_all(variables)[j]


def elementary_symmetric_all(variables: Sequence) -> List[Polynomial]:
    """[e_0, ..., e_N] from the expansion of ∏(1 + T·v)."""
    e = [Polynomial.constant(1)]
    for v in variables:
        v = Polynomial.coerce(v)
        e.append(Polynomial())
        for i in range(len(e) - 1, 0, -1):
            e[i] = e[i] + e[i - 1] * v
    return e


def power_sum(variables: Sequence, r: int) -> Polynomial:
    total = Polynomial()
    for v in variables:
        total = total + Polynomial.coerce(v) ** r
    return total


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidParameters(f"{parts} is not a partition")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(x for x in parts if x))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > i) for i in range(self.parts[0])))

    def fits_in_box(self, rows: int, cols: int) -> bool:
        return self.length <= rows and all(x <= cols for x in self.parts)


def partitions_in_box(rows: int, cols: int) -> List[Partition]:
    """All partitions inside a rows × cols box, smallest first; there are C(rows+cols, rows)."""
    shapes = itertools.combinations_with_replacement(range(cols, -1, -1), rows)
    found = [Partition.of(shape) for shape in shapes]
    return sorted(found, key=lambda lam: (lam.size, lam.parts))


def polynomial_determinant(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant of a square matrix of polynomials."""
    size = len(matrix)
    if size == 0:
        return Polynomial.constant(1)
    sym = sympy.Matrix(size, size, [Polynomial.coerce(x).to_sympy() for row in matrix for x in row])
    return Polynomial.from_sympy(sym.det(method="berkowitz"))


def schur_from_elementary(partition: Partition, e: Callable[[int], Polynomial]) -> Polynomial:
    """Dual Jacobi–Trudi determinant det(e_{λ'_i − i + j}) for an arbitrary family e."""
    conj = partition.conjugate().parts
    size = len(conj)

    def entry(i: int, j: int) -> Polynomial:
        index = conj[i] - i + j
        if index < 0:
            return Polynomial()
        if index == 0:
            return Polynomial.constant(1)
        return Polynomial.coerce(e(index))

    return polynomial_determinant([[entry(i, j) for j in range(size)] for i in range(size)])


def schur_polynomial(partition: Partition, variables: Sequence[str], method: str = "jacobi_trudi") -> Polynomial:
    """
    Schur polynomial s_λ in the given variables.

    Args:
        partition: the shape λ.
        variables: variable names x_1..x_N.
        method: "jacobi_trudi" (dual form in elementary symmetric polynomials)
            or "bialternant" (a_{λ+δ} / a_δ by exact division).
    """
    n = len(variables)
    if partition.length > n:
        return Polynomial()
    if method == "jacobi_trudi":
        e = elementary_symmetric_all(variables)
        return schur_from_elementary(partition, lambda i: e[i] if i <= n else Polynomial())
    if method == "bialternant":
        symbols = [sympy.Symbol(v) for v in variables]
        lam = list(partition.parts) + [0] * (n - partition.length)
        numerator = sympy.Matrix(n, n, lambda i, j: symbols[i] ** (lam[j] + n - 1 - j)).det()
        denominator = sympy.Matrix(n, n, lambda i, j: symbols[i] ** (n - 1 - j)).det()
        quotient, remainder = sympy.div(sympy.expand(numerator), sympy.expand(denominator), *symbols)
        if remainder != 0:
            raise ArithmeticError("bialternant division left a remainder")
        return Polynomial.from_sympy(quotient)
    raise InvalidParameters(f"unknown Schur method {method!r}")


def newton_convert(direction: str, values: Sequence, count: Optional[int] = None) -> list:
    """
    Newton's identities between elementary symmetric values and power sums.

    Works for any exact ring elements that support +, − and multiplication by
    int/Fraction (Fractions, Polynomials, cohomology classes).

    Args:
        direction: "e_to_p" (values are e_1..e_d) or "p_to_e" (values are p_1..p_d).
        values: the input list, starting at index 1.
        count: how many outputs to produce (defaults to len(values)).
    """
    values = list(values)
    count = len(values) if count is None else count
    zero = 0 * values[0] if values else Fraction(0)

    if direction == "e_to_p":
        def e(i):
            return values[i - 1] if i <= len(values) else None

        p: list = []
        for j in range(1, count + 1):
            total = zero
            for i in range(1, j):
                if e(i) is not None:
                    total = total + (-1) ** (i - 1) * (e(i) * p[j - i - 1])
            if e(j) is not None:
                total = total + ((-1) ** (j - 1) * j) * e(j)
            p.append(total)
        return p

    if direction == "p_to_e":
        if count > len(values):
            raise InvalidParameters(f"need {count} power sums, got {len(values)}")
        e: list = []
        for j in range(1, count + 1):
            total = (-1) ** (j - 1) * values[j - 1]
            for i in range(1, j):
                total = total + (-1) ** (i - 1) * (e[j - i - 1] * values[i - 1])
            e.append(Fraction(1, j) * total)
        return e

    raise InvalidParameters(f"unknown Newton direction {direction!r}")

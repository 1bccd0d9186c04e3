# Exact integer matrices, Smith normal form and finitely generated abelian groups
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

# Logging module for tracking the sizes of the matrices being reduced
import logging

# Exact rational linear algebra, Smith decomposition over ZZ and symbolic infinity
import sympy
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp as _smith_normal_decomp

from grasskt.services.errors import InvalidParameters

# Configure logger for this module
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)

Order = Union[int, type(sympy.oo)]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major; every entry is a Python int."""

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise InvalidParameters(
                f"IntMatrix expects {self.rows}x{self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise InvalidParameters("an empty row list needs an explicit column count")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise InvalidParameters("ragged rows in IntMatrix.from_rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)], size)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InvalidParameters("dimension mismatch in matrix product")
        theirs = other.to_rows()
        out = []
        for mine in self.to_rows():
            out.append([sum(a * theirs[k][j] for k, a in enumerate(mine) if a) for j in range(other.cols)])
        return IntMatrix.from_rows(out, other.cols)

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise InvalidParameters("dimension mismatch in vstack")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.rows, self.cols, list(self.entries))

    def det(self) -> int:
        if self.rows != self.cols:
            raise InvalidParameters("determinant of a non-square matrix")
        return int(self.to_sympy().det(method="bareiss"))

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return rational_rank(self.to_rows())


@dataclass(frozen=True)
class SmithDecomposition:
    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    invariant_factors: Tuple[int, ...]


@dataclass(frozen=True)
class FinAbGroup:
    """ℤ^rank ⊕ ⊕ ℤ/d_i with d_i ≥ 2 in divisibility order."""

    rank: int
    torsion: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def exponent(self) -> int:
        return self.torsion[-1] if self.torsion else 1

    def to_json(self) -> dict:
        return {"rank": self.rank, "invariant_factors": list(self.torsion)}

    def __str__(self) -> str:
        parts = [f"Z^{self.rank}"] if self.rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    """
    Diagonalizes an integer matrix by unimodular row and column operations.

    Steps:
    - Decompose over ZZ with sympy's smith_normal_decomp.
    - Make every diagonal entry nonnegative by negating rows of S and U.
    - Move zero diagonal entries behind the nonzero ones.

    Returns:
        SmithDecomposition with U·A·V = S.
    """
    if A.rows == 0 or A.cols == 0:
        raise InvalidParameters("smith_normal_form needs a nonempty matrix")
    m, n = A.rows, A.cols
    logger.debug(f"Smith normal form of a {m}x{n} matrix")
    dM = DomainMatrix([[ZZ(x) for x in row] for row in A.to_rows()], (m, n), ZZ)
    S, U, V = (
        [[int(x) for x in row] for row in part.to_list()]
        for part in _smith_normal_decomp(dM)
    )

    for i in range(min(m, n)):
        if S[i][i] < 0:
            S[i] = [-a for a in S[i]]
            U[i] = [-a for a in U[i]]

    diagonal = range(min(m, n))
    order = [i for i in diagonal if S[i][i]] + [i for i in diagonal if not S[i][i]]
    if order != list(diagonal):
        row_order = order + list(range(min(m, n), m))
        col_order = order + list(range(min(m, n), n))
        U = [U[i] for i in row_order]
        S = [[S[i][j] for j in col_order] for i in row_order]
        V = [[row[j] for j in col_order] for row in V]

    factors = tuple(S[i][i] for i in diagonal if S[i][i])
    if any(b % a for a, b in zip(factors, factors[1:])):
        raise ArithmeticError(f"diagonal {factors} is not a divisibility chain")
    return SmithDecomposition(
        U=IntMatrix.from_rows(U, m),
        S=IntMatrix.from_rows(S, n),
        V=IntMatrix.from_rows(V, n),
        invariant_factors=factors,
    )


def cokernel_group(relations: IntMatrix, generators: int) -> FinAbGroup:
    """The group ℤ^generators / rowspan(relations)."""
    if relations.cols != generators:
        raise InvalidParameters(
            f"relation matrix has {relations.cols} columns but {generators} generators were declared"
        )
    if relations.rows == 0 or generators == 0:
        return FinAbGroup(rank=generators)
    factors = smith_normal_form(relations).invariant_factors
    return FinAbGroup(rank=generators - len(factors), torsion=tuple(d for d in factors if d > 1))


def element_order(vec: Sequence[int], relations: IntMatrix) -> Order:
    """Least d ≥ 1 with d·vec in rowspan(relations); sympy.oo when no such d exists."""
    vec = [int(x) for x in vec]
    if len(vec) != relations.cols:
        raise InvalidParameters("vector length does not match the relation matrix")
    if not any(vec):
        return 1
    if relations.rows == 0:
        return sympy.oo
    with_vec = relations.vstack(IntMatrix.from_rows([vec]))
    if relations.rank() != with_vec.rank():
        return sympy.oo

    decomposition = smith_normal_form(relations)
    V = decomposition.V.to_rows()
    w = [sum(vec[k] * V[k][j] for k in range(len(vec))) for j in range(relations.cols)]
    order = 1
    for i, d in enumerate(decomposition.invariant_factors):
        order = math.lcm(order, d // math.gcd(d, w[i]))
    return order


def left_kernel(A: IntMatrix) -> IntMatrix:
    """A ℤ-basis (as rows) of the lattice {x : x·A = 0}."""
    if A.rows == 0:
        return IntMatrix.zeros(0, 0)
    if A.cols == 0:
        return IntMatrix.identity(A.rows)
    decomposition = smith_normal_form(A)
    r = len(decomposition.invariant_factors)
    return IntMatrix.from_rows(decomposition.U.to_rows()[r:], A.rows)


def subgroup_generated(images: IntMatrix, relations: IntMatrix) -> FinAbGroup:
    """
    The subgroup of ℤ^g / rowspan(relations) generated by the rows of images,
    presented on those rows with the relations they inherit.
    """
    if images.cols != relations.cols:
        raise InvalidParameters("image and relation matrices live in different lattices")
    a = images.rows
    if a == 0:
        return FinAbGroup(rank=0)
    stacked = images.vstack(relations) if relations.rows else images
    kernel = left_kernel(stacked)
    induced = IntMatrix.from_rows([row[:a] for row in kernel.to_rows()], a)
    return cokernel_group(induced, a)


def same_row_lattice(A: IntMatrix, B: IntMatrix) -> bool:
    """True iff the rows of A and B span the same sublattice of ℤ^cols."""
    if A.cols != B.cols:
        raise InvalidParameters("lattices of different ambient rank")

    def contained(X: IntMatrix, Y: IntMatrix) -> bool:
        if Y.rows == 0:
            return not any(X.entries)
        return all(element_order(X.row(i), Y) == 1 for i in range(X.rows))

    return contained(A, B) and contained(B, A)


def _to_qq(x):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _domain_matrix(rows: Sequence[Sequence]) -> DomainMatrix:
    cols = len(rows[0]) if rows else 0
    return DomainMatrix([[_to_qq(x) for x in r] for r in rows], (len(rows), cols), QQ)


def rational_rank(rows: Sequence[Sequence]) -> int:
    """Rank over ℚ of a list of rows with int or Fraction entries."""
    if not rows or not rows[0]:
        return 0
    return _domain_matrix(rows).rank()


def solve_rational(rows: Sequence[Sequence], rhs: Sequence) -> Optional[List[Fraction]]:
    """
    One exact solution x of rows·x = rhs (free unknowns set to zero),
    or None when the system is inconsistent.
    """
    if not rows:
        return None if any(rhs) else []
    unknowns = len(rows[0])
    augmented = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = _domain_matrix(augmented).rref()
    if unknowns in pivots:
        return None
    table = reduced.to_Matrix()
    solution = [Fraction(0)] * unknowns
    for i, col in enumerate(pivots):
        value = table[i, unknowns]
        solution[col] = Fraction(int(value.p), int(value.q))
    return solution

"""Matrix units, creation/annihilation generators and their triple relations.

The generators are the matrix units of the distinguished row and column:
raising is e(i,0), lowering is e(0,i).  The defining triple relations are
verified exhaustively in this realization; failures are recorded as data so
the verifier can double as an oracle for formula variants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .grading import AlgebraParams, Grade, GradedMatrix, graded_bracket
from .linalg import RationalRowSpace, rational_rank
from .reports import RelationFailure, RelationReport

__all__ = [
    "GeneratorId",
    "generator_ids",
    "matrix_unit",
    "generator_matrix",
    "rel2_terms",
    "rel3_terms",
    "verify_defining_relations",
    "sl_basis",
    "generator_closure_rank",
]

FAMILY_NAMES = ("b", "bt", "f", "ft")


@dataclass(frozen=True)
class GeneratorId:
    """One ladder generator: operator index 1..m+n and a sign."""

    index: int
    sign: str

    def __post_init__(self) -> None:
        if self.sign not in ("+", "-"):
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"generator index must be a positive integer, got {self.index!r}")

    def check(self, params: AlgebraParams) -> None:
        if self.index > params.m + params.n:
            raise ValueError(
                f"generator index {self.index} out of range 1..{params.m + params.n}"
            )

    def family(self, params: AlgebraParams) -> str:
        """Family letter: b, bt (even) or f, ft (odd), from the index block."""
        self.check(params)
        i = self.index
        if i <= params.m1:
            return "b"
        if i <= params.m:
            return "bt"
        if i <= params.m + params.n1:
            return "f"
        return "ft"

    def family_position(self, params: AlgebraParams) -> int:
        """0-based position within the generator's family."""
        fam = self.family(params)
        offsets = {"b": 0, "bt": params.m1, "f": params.m, "ft": params.m + params.n1}
        return self.index - offsets[fam] - 1

    def grade(self, params: AlgebraParams) -> Grade:
        self.check(params)
        return params.index_grade(self.index)

    def conjugate(self) -> "GeneratorId":
        return GeneratorId(self.index, "-" if self.sign == "+" else "+")

    def label(self, params: AlgebraParams) -> str:
        return f"{self.family(params)}{self.family_position(params) + 1}{self.sign}"

    def __str__(self) -> str:
        return f"a{self.index}{self.sign}"


def generator_ids(params: AlgebraParams) -> tuple[GeneratorId, ...]:
    """All 2(m+n) generators, index-major, raising before lowering."""
    out = []
    for i in params.operator_indices():
        out.append(GeneratorId(i, "+"))
        out.append(GeneratorId(i, "-"))
    return tuple(out)


def matrix_unit(i: int, j: int, params: AlgebraParams) -> GradedMatrix:
    """Matrix with 1 in row i, column j; homogeneous of grade d_i + d_j."""
    return GradedMatrix.unit(params, i, j)


def generator_matrix(gid: GeneratorId, params: AlgebraParams) -> GradedMatrix:
    """e(i,0) for raising, e(0,i) for lowering."""
    gid.check(params)
    if gid.sign == "+":
        return GradedMatrix.unit(params, gid.index, 0)
    return GradedMatrix.unit(params, 0, gid.index)


def rel2_terms(params: AlgebraParams, i: int, j: int, k: int) -> list[tuple[int, int]]:
    """Expected raising-side combination for [[a_i+, a_j-], a_k+].

    Returns (coefficient, operator index) pairs over the raising generators.
    """
    terms: list[tuple[int, int]] = []
    if j == k:
        terms.append((1, i))
    if i == j:
        d = params.index_grade(i)
        terms.append((1 if d.dot(d) == 0 else -1, k))
    return terms


def rel3_terms(params: AlgebraParams, i: int, j: int, k: int) -> list[tuple[int, int]]:
    """Expected lowering-side combination for [[a_i+, a_j-], a_k-]."""
    terms: list[tuple[int, int]] = []
    if i == k:
        s = (params.index_grade(i) + params.index_grade(j)).dot(params.index_grade(k))
        terms.append((-1 if s == 0 else 1, j))
    if i == j:
        d = params.index_grade(i)
        terms.append((-1 if d.dot(d) == 0 else 1, k))
    return terms


def verify_defining_relations(params: AlgebraParams) -> RelationReport:
    """Check all triple relations of the generators in the matrix realization.

    One pair check per (i, j) covers both signs of the vanishing bracket;
    the two triple families contribute (m+n)**3 checks each.
    """
    K = params.m + params.n
    idx = range(1, K + 1)
    plus = {i: generator_matrix(GeneratorId(i, "+"), params) for i in idx}
    minus = {i: generator_matrix(GeneratorId(i, "-"), params) for i in idx}

    failures: list[RelationFailure] = []
    checked = 0

    for i in idx:
        for j in idx:
            checked += 1
            for tag, ops in (("rel1+", plus), ("rel1-", minus)):
                res = graded_bracket(ops[i], ops[j])
                if not res.is_zero:
                    failures.append(RelationFailure(tag, (i, j), res.to_json()))

    pair_bracket = {
        (i, j): graded_bracket(plus[i], minus[j]) for i in idx for j in idx
    }

    for i in idx:
        for j in idx:
            bij = pair_bracket[(i, j)]
            for k in idx:
                checked += 1
                res = graded_bracket(bij, plus[k])
                for coeff, t in rel2_terms(params, i, j, k):
                    res = res - plus[t] * coeff
                if not res.is_zero:
                    failures.append(RelationFailure("rel2", (i, j, k), res.to_json()))

                checked += 1
                res = graded_bracket(bij, minus[k])
                for coeff, t in rel3_terms(params, i, j, k):
                    res = res - minus[t] * coeff
                if not res.is_zero:
                    failures.append(RelationFailure("rel3", (i, j, k), res.to_json()))

    return RelationReport(params.as_tuple(), "defining-relations", checked, failures)


def sl_basis(params: AlgebraParams) -> list[GradedMatrix]:
    """Basis of the supertraceless subalgebra: off-diagonal units plus
    e(0,0) - (-1)**(d_i.d_i) e(i,i) for i = 1..m+n.  Size is N**2 - 1.
    """
    mats: list[GradedMatrix] = []
    for i in params.indices():
        for j in params.indices():
            if i != j:
                mats.append(matrix_unit(i, j, params))
    e00 = matrix_unit(0, 0, params)
    for i in params.operator_indices():
        d = params.index_grade(i)
        coeff = 1 if d.dot(d) == 0 else -1
        mats.append(e00 - matrix_unit(i, i, params) * coeff)
    return mats


def _flatten(matrix: GradedMatrix) -> list[Fraction]:
    n = matrix.params.size
    vec = [Fraction(0)] * (n * n)
    for i, j, c in matrix.items():
        vec[i * n + j] = c.as_fraction()
    return vec


def sl_basis_rank(params: AlgebraParams) -> int:
    """Exact rank of the flattened sl basis over the rationals."""
    width = params.size ** 2
    return rational_rank((_flatten(m) for m in sl_basis(params)), width)


def generator_closure_rank(params: AlgebraParams) -> tuple[int, int]:
    """(rank of the bracket closure of the generators, rank of the sl basis).

    The closure is computed by repeatedly bracketing new elements against
    everything found so far until the exact rank stops growing.
    """
    width = params.size ** 2
    space = RationalRowSpace(width)
    pool: list[GradedMatrix] = []
    for gid in generator_ids(params):
        m = generator_matrix(gid, params)
        if space.add(_flatten(m)):
            pool.append(m)
    frontier = list(pool)
    while frontier:
        fresh: list[GradedMatrix] = []
        for a in frontier:
            for b in list(pool):
                for x, y in ((a, b), (b, a)):
                    c = graded_bracket(x, y)
                    if not c.is_zero and space.add(_flatten(c)):
                        fresh.append(c)
                        pool.append(c)
        frontier = fresh
    return space.rank, sl_basis_rank(params)

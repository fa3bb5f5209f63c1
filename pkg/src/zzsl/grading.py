"""Z2 x Z2 degree arithmetic, block-graded matrices and bracket axioms.

The bracket on homogeneous pieces is X*Y - (-1)**(a.b) * Y*X and is extended
bilinearly over the four-component decomposition, so commutators and
anticommutators are both special cases of one operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .radicals import Rational, RadicalSum
from .reports import AxiomReport, CheckFailure

__all__ = [
    "Grade",
    "GRADES",
    "AlgebraParams",
    "GradedMatrix",
    "graded_bracket",
    "supertrace",
    "jacobi_residual",
    "axiom_report",
]


@dataclass(frozen=True)
class Grade:
    """One of the four degrees (0,0), (1,1), (1,0), (0,1)."""

    a1: int
    a2: int

    def __post_init__(self) -> None:
        if self.a1 not in (0, 1) or self.a2 not in (0, 1):
            raise ValueError("grade components must be bits")

    def __add__(self, other: "Grade") -> "Grade":
        return Grade((self.a1 + other.a1) % 2, (self.a2 + other.a2) % 2)

    def dot(self, other: "Grade") -> int:
        return (self.a1 * other.a1 + self.a2 * other.a2) % 2

    def sign(self, other: "Grade") -> int:
        """(-1)**(self . other), the sign twisting bracket and symmetry."""
        return -1 if self.dot(other) else 1

    def as_tuple(self) -> tuple[int, int]:
        return (self.a1, self.a2)

    def __str__(self) -> str:
        return f"({self.a1},{self.a2})"


GRADES: tuple[Grade, ...] = (Grade(0, 0), Grade(1, 1), Grade(1, 0), Grade(0, 1))


@dataclass(frozen=True)
class AlgebraParams:
    """Block sizes (m1+1, m2 | n1, n2) of the matrix realization."""

    m1: int
    m2: int
    n1: int
    n2: int

    def __post_init__(self) -> None:
        for name in ("m1", "m2", "n1", "n2"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")

    @property
    def m(self) -> int:
        return self.m1 + self.m2

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def size(self) -> int:
        """Matrix size N = m + n + 1."""
        return self.m + self.n + 1

    def index_grade(self, i: int) -> Grade:
        """Degree d_i of row/column index i, following the block layout."""
        if not 0 <= i <= self.m + self.n:
            raise ValueError(f"index {i} out of range 0..{self.m + self.n}")
        if i <= self.m1:
            return Grade(0, 0)
        if i <= self.m:
            return Grade(1, 1)
        if i <= self.m + self.n1:
            return Grade(1, 0)
        return Grade(0, 1)

    def indices(self) -> range:
        return range(self.size)

    def operator_indices(self) -> range:
        """Generator indices 1..m+n (index 0 is the distinguished row/column)."""
        return range(1, self.m + self.n + 1)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.m1, self.m2, self.n1, self.n2)

    @classmethod
    def from_string(cls, text: str) -> "AlgebraParams":
        parts = [piece.strip() for piece in text.split(",")]
        if len(parts) != 4:
            raise ValueError("expected four comma-separated integers m1,m2,n1,n2")
        try:
            values = [int(piece) for piece in parts]
        except ValueError as exc:
            raise ValueError(f"invalid block sizes {text!r}") from exc
        return cls(*values)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.as_tuple())


def _coerce_coeff(value) -> RadicalSum:
    if isinstance(value, RadicalSum):
        return value
    if isinstance(value, (int, Fraction)):
        return RadicalSum(value)
    raise TypeError(f"matrix entries must be exact scalars, got {type(value).__name__}")


class GradedMatrix:
    """Square matrix over RadicalSum carrying the block grading of its algebra.

    Instances are immutable; only nonzero entries are stored.
    """

    __slots__ = ("params", "_entries", "_row_map", "_comps")

    def __init__(
        self,
        params: AlgebraParams,
        entries: Mapping[tuple[int, int], RadicalSum | Rational] | Iterable = (),
    ) -> None:
        self.params = params
        n = params.size
        items = entries.items() if isinstance(entries, Mapping) else entries
        clean: dict[tuple[int, int], RadicalSum] = {}
        for (i, j), value in items:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"entry ({i},{j}) outside {n}x{n} matrix")
            coeff = _coerce_coeff(value)
            if not coeff.is_zero:
                clean[(i, j)] = coeff
        self._entries = clean
        self._row_map: dict[int, list[tuple[int, RadicalSum]]] | None = None
        self._comps: list[tuple[Grade, dict]] | None = None

    # ------------------------------------------------------------------ build

    @classmethod
    def _raw(cls, params: AlgebraParams, entries: dict) -> "GradedMatrix":
        out = cls.__new__(cls)
        out.params = params
        out._entries = entries
        out._row_map = None
        out._comps = None
        return out

    @classmethod
    def zero(cls, params: AlgebraParams) -> "GradedMatrix":
        return cls._raw(params, {})

    @classmethod
    def identity(cls, params: AlgebraParams) -> "GradedMatrix":
        one = RadicalSum(1)
        return cls._raw(params, {(i, i): one for i in params.indices()})

    @classmethod
    def unit(cls, params: AlgebraParams, i: int, j: int) -> "GradedMatrix":
        """Matrix unit with a single 1 in row i, column j."""
        n = params.size
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"index out of range for size {n}: ({i},{j})")
        return cls._raw(params, {(i, j): RadicalSum(1)})

    # ------------------------------------------------------------ inspection

    def entry(self, i: int, j: int) -> RadicalSum:
        return self._entries.get((i, j), RadicalSum())

    def items(self) -> list[tuple[int, int, RadicalSum]]:
        """Nonzero entries in row-major order."""
        return [(i, j, c) for (i, j), c in sorted(self._entries.items())]

    @property
    def nnz(self) -> int:
        return len(self._entries)

    @property
    def is_zero(self) -> bool:
        return not self._entries

    def entry_grade(self, i: int, j: int) -> Grade:
        return self.params.index_grade(i) + self.params.index_grade(j)

    def _rows(self) -> dict[int, list[tuple[int, RadicalSum]]]:
        if self._row_map is None:
            rows: dict[int, list[tuple[int, RadicalSum]]] = {}
            for (i, j), c in self._entries.items():
                rows.setdefault(i, []).append((j, c))
            self._row_map = rows
        return self._row_map

    def _components(self) -> list[tuple[Grade, dict]]:
        """Nonzero homogeneous components as (grade, entry-dict) pairs."""
        if self._comps is None:
            buckets: dict[Grade, dict] = {}
            for (i, j), c in self._entries.items():
                buckets.setdefault(self.entry_grade(i, j), {})[(i, j)] = c
            self._comps = sorted(buckets.items(), key=lambda kv: kv[0].as_tuple())
        return self._comps

    def decompose(self) -> dict[Grade, "GradedMatrix"]:
        """Split into the four block-homogeneous components (zeros included)."""
        parts = {g: {} for g in GRADES}
        for grade, entries in self._components():
            parts[grade] = entries
        return {g: GradedMatrix._raw(self.params, dict(e)) for g, e in parts.items()}

    @property
    def is_homogeneous(self) -> bool:
        return len(self._components()) <= 1

    def homogeneous_grade(self) -> Grade | None:
        """Grade of a homogeneous matrix; None for zero (which has every grade)."""
        comps = self._components()
        if not comps:
            return None
        if len(comps) > 1:
            raise ValueError("matrix is not homogeneous")
        return comps[0][0]

    # ------------------------------------------------------------ arithmetic

    def _check_same(self, other: "GradedMatrix") -> None:
        if not isinstance(other, GradedMatrix):
            raise TypeError("expected a GradedMatrix")
        if self.params != other.params:
            raise ValueError("dimension mismatch: matrices live in different algebras")

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check_same(other)
        acc = dict(self._entries)
        for key, c in other._entries.items():
            cur = acc.get(key)
            new = c if cur is None else cur + c
            if new.is_zero:
                acc.pop(key, None)
            else:
                acc[key] = new
        return GradedMatrix._raw(self.params, acc)

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        return self + (-other)

    def __neg__(self) -> "GradedMatrix":
        return GradedMatrix._raw(self.params, {k: -c for k, c in self._entries.items()})

    def __mul__(self, scalar) -> "GradedMatrix":
        if isinstance(scalar, (int, Fraction)):
            scalar = RadicalSum(scalar)
        if not isinstance(scalar, RadicalSum):
            return NotImplemented
        if scalar.is_zero:
            return GradedMatrix.zero(self.params)
        return GradedMatrix._raw(
            self.params, {k: c * scalar for k, c in self._entries.items()}
        )

    __rmul__ = __mul__

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check_same(other)
        acc: dict[tuple[int, int], RadicalSum] = {}
        rows = other._rows()
        for (i, k), x in self._entries.items():
            row = rows.get(k)
            if not row:
                continue
            for j, y in row:
                key = (i, j)
                v = x * y
                cur = acc.get(key)
                new = v if cur is None else cur + v
                if new.is_zero:
                    acc.pop(key, None)
                else:
                    acc[key] = new
        return GradedMatrix._raw(self.params, acc)

    def transpose(self) -> "GradedMatrix":
        return GradedMatrix._raw(
            self.params, {(j, i): c for (i, j), c in self._entries.items()}
        )

    def supertrace(self) -> RadicalSum:
        """Signed trace: +1 on rows 0..m, -1 on rows m+1..m+n."""
        m = self.params.m
        total = RadicalSum()
        for i in self.params.indices():
            c = self._entries.get((i, i))
            if c is not None:
                total = total + c if i <= m else total - c
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.params == other.params and self._entries == other._entries

    def to_json(self) -> dict:
        return {
            "params": list(self.params.as_tuple()),
            "entries": [
                {"row": i, "col": j, "coeff": c.to_json()} for i, j, c in self.items()
            ],
        }

    def __repr__(self) -> str:
        return f"GradedMatrix(params={self.params}, nnz={self.nnz})"


def _accumulate_product(acc: dict, a: dict, b: dict, negate: bool) -> None:
    """acc += (or -=) the product of two entry dicts."""
    rows: dict[int, list[tuple[int, RadicalSum]]] = {}
    for (k, j), y in b.items():
        rows.setdefault(k, []).append((j, y))
    for (i, k), x in a.items():
        row = rows.get(k)
        if not row:
            continue
        for j, y in row:
            key = (i, j)
            v = x * y
            if negate:
                v = -v
            cur = acc.get(key)
            new = v if cur is None else cur + v
            if new.is_zero:
                acc.pop(key, None)
            else:
                acc[key] = new


def graded_bracket(x: GradedMatrix, y: GradedMatrix) -> GradedMatrix:
    """Graded bracket, extended bilinearly over the component decomposition."""
    if x.params != y.params:
        raise ValueError("dimension mismatch: matrices live in different algebras")
    acc: dict[tuple[int, int], RadicalSum] = {}
    ycomps = y._components()
    for a, xa in x._components():
        for b, yb in ycomps:
            _accumulate_product(acc, xa, yb, negate=False)
            # subtract (-1)**(a.b) * Y_b X_a
            _accumulate_product(acc, yb, xa, negate=a.dot(b) == 0)
    return GradedMatrix._raw(x.params, acc)


def supertrace(matrix: GradedMatrix) -> RadicalSum:
    return matrix.supertrace()


def jacobi_residual(x: GradedMatrix, y: GradedMatrix, z: GradedMatrix) -> GradedMatrix:
    """[[x,[y,z]]] - [[[x,y],z]] - (-1)**(a.b) [[y,[x,z]]] for homogeneous inputs.

    The identity holds iff the result is the zero matrix.  Zero inputs are
    accepted with any grade, which leaves the residual zero regardless of
    the sign chosen.
    """
    a = x.homogeneous_grade()
    b = y.homogeneous_grade()
    z.homogeneous_grade()  # enforce the precondition on z as well
    sign = a.sign(b) if a is not None and b is not None else 1
    term1 = graded_bracket(x, graded_bracket(y, z))
    term2 = graded_bracket(graded_bracket(x, y), z)
    term3 = graded_bracket(y, graded_bracket(x, z))
    result = term1 - term2
    return result - term3 if sign == 1 else result + term3


def axiom_report(params: AlgebraParams) -> AxiomReport:
    """Exhaustive bracket-axiom sweep over all matrix units of the algebra.

    Checks, on every homogeneous basis pair, the symmetry identity, the
    grading of the bracket and the vanishing of the supertrace of brackets;
    and the Jacobi identity on every basis triple.
    """
    n = params.size
    units: list[tuple[int, int, GradedMatrix, Grade]] = []
    for i in params.indices():
        for j in params.indices():
            m = GradedMatrix.unit(params, i, j)
            units.append((i, j, m, m.entry_grade(i, j)))

    failures: list[CheckFailure] = []
    table = [
        [graded_bracket(mx, my) for (_, _, my, _) in units]
        for (_, _, mx, _) in units
    ]

    pairs_checked = 0
    for xi, (i1, j1, mx, a) in enumerate(units):
        for yi, (i2, j2, my, b) in enumerate(units):
            pairs_checked += 1
            bxy = table[xi][yi]
            byx = table[yi][xi]
            sym = bxy + byx * RadicalSum(a.sign(b))
            if not sym.is_zero:
                failures.append(
                    CheckFailure("symmetry", (i1, j1, i2, j2), sym.to_json())
                )
            if not bxy.is_zero:
                try:
                    grade = bxy.homogeneous_grade()
                except ValueError:
                    grade = None
                if grade != a + b:
                    failures.append(CheckFailure("grading", (i1, j1, i2, j2), bxy.to_json()))
            st = bxy.supertrace()
            if not st.is_zero:
                failures.append(
                    CheckFailure("supertrace", (i1, j1, i2, j2), st.to_json())
                )

    triples_checked = 0
    for xi, (i1, j1, mx, a) in enumerate(units):
        row_x = table[xi]
        for yi, (i2, j2, my, b) in enumerate(units):
            sign = a.sign(b)
            bxy = row_x[yi]
            for zi, (i3, j3, mz, c) in enumerate(units):
                triples_checked += 1
                res = (
                    graded_bracket(mx, table[yi][zi])
                    - graded_bracket(bxy, mz)
                    - graded_bracket(my, row_x[zi]) * RadicalSum(sign)
                )
                if not res.is_zero:
                    failures.append(
                        CheckFailure("jacobi", (i1, j1, i2, j2, i3, j3), res.to_json())
                    )

    return AxiomReport(params.as_tuple(), pairs_checked, triples_checked, failures)

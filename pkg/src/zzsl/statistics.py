"""Statistics families, the Hamiltonian, ladder relations, spectra, occupancy.

The even operators (indices 1..m) obey the commutator triple relations of
A-statistics; the odd ones split into two families with the anticommutator
relations of A-superstatistics plus mixed relations between them.  All
suites evaluate the identities on the Fock operator matrices exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .fock import (
    SparseOperator,
    dimension,
    enumerate_basis,
    ladder_operators,
)
from .grading import AlgebraParams, Grade
from .radicals import RadicalSum, Rational
from .reports import OccupancyReport, RelationFailure, RelationReport

__all__ = [
    "FAMILIES",
    "HAMILTONIAN_READINGS",
    "EnergyAssignment",
    "relation_suite",
    "hamiltonian",
    "ladder_residual",
    "spectrum",
    "occupancy_report",
]

FAMILIES = ("A-stat", "A1-f", "A1-ft", "MixA1", "MixA2")
HAMILTONIAN_READINGS = ("graded", "literal")


@dataclass(frozen=True)
class EnergyAssignment:
    """Orbital energies; operator i and its odd partner i+m share epsilon_i."""

    epsilons: tuple[Fraction, ...]

    @classmethod
    def from_values(cls, values: Sequence[Rational]) -> "EnergyAssignment":
        eps = []
        for v in values:
            if isinstance(v, float):
                raise TypeError("energies must be exact rationals")
            eps.append(Fraction(v))
        return cls(tuple(eps))

    def __len__(self) -> int:
        return len(self.epsilons)

    def check(self, params: AlgebraParams) -> None:
        if params.m != params.n:
            raise ValueError(
                f"energy pairing requires m = n, got m={params.m}, n={params.n}"
            )
        if len(self.epsilons) != params.m:
            raise ValueError(
                f"expected {params.m} energies, got {len(self.epsilons)}"
            )


def _zero_residual(report: RelationReport, residual: SparseOperator, tag: str, idx) -> None:
    if not residual.is_zero:
        report.failures.append(RelationFailure(tag, tuple(idx), residual.to_json()))


def relation_suite(
    family: str,
    params: AlgebraParams,
    p: int,
    basis_kind: str = "orthonormal",
) -> RelationReport:
    """Evaluate one family of (anti)commutator identities on the Fock matrices.

    Empty index ranges give a vacuous pass with zero checks.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    plus, minus = ladder_operators(params, p, basis_kind)
    m, n1, n = params.m, params.n1, params.n
    b_range = range(1, m + 1)
    f_range = range(m + 1, m + n1 + 1)
    ft_range = range(m + n1 + 1, m + n + 1)

    report = RelationReport(params.as_tuple(), family, 0, [])

    def P(i: int) -> SparseOperator:
        return plus[i - 1]

    def M(i: int) -> SparseOperator:
        return minus[i - 1]

    if family == "A-stat":
        for i in b_range:
            for j in b_range:
                report.checked += 1
                _zero_residual(report, P(i).commutator(P(j)), "pair+", (i, j))
                _zero_residual(report, M(i).commutator(M(j)), "pair-", (i, j))
        for i in b_range:
            for j in b_range:
                inner = P(i).commutator(M(j))
                for k in b_range:
                    report.checked += 1
                    res = inner.commutator(P(k))
                    if j == k:
                        res = res - P(i)
                    if i == j:
                        res = res - P(k)
                    _zero_residual(report, res, "triple+", (i, j, k))
                    report.checked += 1
                    res = inner.commutator(M(k))
                    if i == k:
                        res = res + M(j)
                    if i == j:
                        res = res + M(k)
                    _zero_residual(report, res, "triple-", (i, j, k))
        return report

    if family in ("A1-f", "A1-ft"):
        rng = f_range if family == "A1-f" else ft_range
        for i in rng:
            for j in rng:
                report.checked += 1
                _zero_residual(report, P(i).anticommutator(P(j)), "pair+", (i, j))
                _zero_residual(report, M(i).anticommutator(M(j)), "pair-", (i, j))
        for i in rng:
            for j in rng:
                inner = P(i).anticommutator(M(j))
                for k in rng:
                    report.checked += 1
                    res = inner.commutator(P(k))
                    if j == k:
                        res = res - P(i)
                    if i == j:
                        res = res + P(k)
                    _zero_residual(report, res, "triple+", (i, j, k))
                    report.checked += 1
                    res = inner.commutator(M(k))
                    if i == k:
                        res = res + M(j)
                    if i == j:
                        res = res - M(k)
                    _zero_residual(report, res, "triple-", (i, j, k))
        return report

    if family == "MixA1":
        both = list(f_range) + list(ft_range)
        for first, second in ((f_range, ft_range), (ft_range, f_range)):
            for i in first:
                for j in second:
                    report.checked += 1
                    _zero_residual(report, P(i).commutator(P(j)), "pair+", (i, j))
                    _zero_residual(report, M(i).commutator(M(j)), "pair-", (i, j))
                    inner = P(i).commutator(M(j))
                    for k in both:
                        report.checked += 1
                        res = inner.anticommutator(P(k))
                        if j == k:
                            res = res - P(i)
                        _zero_residual(report, res, "triple+", (i, j, k))
                        report.checked += 1
                        res = inner.anticommutator(M(k))
                        if i == k:
                            res = res - M(j)
                        _zero_residual(report, res, "triple-", (i, j, k))
        return report

    # MixA2: both inner indices in one odd family, the outer one in the other
    for same, other in ((f_range, ft_range), (ft_range, f_range)):
        for i in same:
            for j in same:
                report.checked += 1
                _zero_residual(report, P(i).anticommutator(P(j)), "pair+", (i, j))
                _zero_residual(report, M(i).anticommutator(M(j)), "pair-", (i, j))
                inner = P(i).anticommutator(M(j))
                for k in other:
                    report.checked += 1
                    res = inner.commutator(P(k))
                    if i == j:
                        res = res + P(k)
                    _zero_residual(report, res, "triple+", (i, j, k))
                    report.checked += 1
                    res = inner.commutator(M(k))
                    if i == j:
                        res = res - M(k)
                    _zero_residual(report, res, "triple-", (i, j, k))
    return report


def hamiltonian(
    params: AlgebraParams,
    p: int,
    energies: EnergyAssignment | Sequence[Rational],
    reading: str = "graded",
) -> SparseOperator:
    """Energy operator pairing operator i with its odd partner i+m.

    The graded reading takes the graded bracket of each pair of ladder
    operators (commutator on the even half, anticommutator on the odd half),
    which makes the ladder relations hold exactly.  The literal reading sums
    commutator plus anticommutator of the first m operators only; it is kept
    so its broken ladder relations can be demonstrated.
    """
    if reading not in HAMILTONIAN_READINGS:
        raise ValueError(f"reading must be one of {HAMILTONIAN_READINGS}")
    if not isinstance(energies, EnergyAssignment):
        energies = EnergyAssignment.from_values(energies)
    energies.check(params)

    basis = enumerate_basis(params, p)
    plus, minus = ladder_operators(params, p, "orthonormal")
    total = SparseOperator.zero(basis, Grade(0, 0))
    m = params.m
    for pos in range(m):
        eps = energies.epsilons[pos]
        if reading == "graded":
            term = plus[pos].graded_bracket(minus[pos]) + plus[pos + m].graded_bracket(
                minus[pos + m]
            )
        else:
            term = plus[pos].commutator(minus[pos]) + plus[pos].anticommutator(minus[pos])
        total = total + term * eps
    return total


def ladder_residual(
    params: AlgebraParams,
    p: int,
    energies: EnergyAssignment | Sequence[Rational],
    index: int,
    sign: str = "+",
    reading: str = "graded",
) -> SparseOperator:
    """[H, a_i^sign] -/+ eps * a_i^sign; the ladder relation holds iff zero.

    The energy of index i is eps_i for i <= m and eps_(i-m) for the odd
    partners.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if not isinstance(energies, EnergyAssignment):
        energies = EnergyAssignment.from_values(energies)
    energies.check(params)
    m = params.m
    if not 1 <= index <= 2 * m:
        raise ValueError(f"generator index {index} out of range 1..{2 * m}")
    ham = hamiltonian(params, p, energies, reading)
    plus, minus = ladder_operators(params, p, "orthonormal")
    op = plus[index - 1] if sign == "+" else minus[index - 1]
    eps = energies.epsilons[index - 1 if index <= m else index - m - 1]
    scale = eps if sign == "+" else -eps
    return ham.commutator(op) - op * scale


def spectrum(
    params: AlgebraParams,
    p: int,
    energies: EnergyAssignment | Sequence[Rational],
    reading: str = "graded",
) -> list[tuple[RadicalSum, int]]:
    """Eigenvalues of the (diagonal) Hamiltonian with multiplicities, ascending."""
    ham = hamiltonian(params, p, energies, reading)
    if not ham.is_diagonal:
        raise ValueError("hamiltonian is not diagonal in the Fock basis")
    counts: dict[Fraction, int] = {}
    for value in ham.diagonal():
        key = value.as_fraction()
        counts[key] = counts.get(key, 0) + 1
    return [(RadicalSum(v), c) for v, c in sorted(counts.items())]


def occupancy_report(params: AlgebraParams, p: int) -> OccupancyReport:
    """Per-orbital and global occupation maxima over the order-p basis."""
    basis = enumerate_basis(params, p)
    max_r = [0] * params.m1
    max_l = [0] * params.m2
    max_theta = [0] * params.n1
    max_lam = [0] * params.n2
    max_total = 0
    for state in basis:
        for pos, occ in enumerate(state.r):
            max_r[pos] = max(max_r[pos], occ)
        for pos, occ in enumerate(state.l):
            max_l[pos] = max(max_l[pos], occ)
        for pos, occ in enumerate(state.theta):
            max_theta[pos] = max(max_theta[pos], occ)
        for pos, occ in enumerate(state.lam):
            max_lam[pos] = max(max_lam[pos], occ)
        max_total = max(max_total, state.total)
    return OccupancyReport(
        params.as_tuple(),
        p,
        dimension(params, p),
        max_r,
        max_l,
        max_theta,
        max_lam,
        max_total,
    )

"""Statistics families, Hamiltonian, ladder relations, spectra, occupancy."""

from fractions import Fraction

import pytest

from zzsl import (
    FAMILIES,
    AlgebraParams,
    EnergyAssignment,
    FockState,
    Grade,
    dimension,
    enumerate_basis,
    hamiltonian,
    ladder_operators,
    ladder_residual,
    occupancy_report,
    relation_suite,
    spectrum,
    verify_representation,
)


def test_families_pass_when_representation_passes():
    P = AlgebraParams(1, 1, 1, 1)
    assert verify_representation(P, 2).passed
    for family in FAMILIES:
        report = relation_suite(family, P, 2)
        assert report.passed, family
        assert not report.vacuous


def test_family_a_stat_restricted_to_even_indices():
    report = relation_suite("A-stat", AlgebraParams(1, 1, 1, 1), 2)
    # 4 pair checks + 2 * 8 triple checks over i,j,k <= 2
    assert report.checked == 4 + 16
    assert report.passed


def test_mix_a2_spot_identity():
    P = AlgebraParams(0, 0, 1, 1)
    plus, minus = ladder_operators(P, 1)
    lhs = plus[0].anticommutator(minus[0]).commutator(plus[1])
    assert lhs == -plus[1]


def test_vacuous_suite():
    report = relation_suite("A1-f", AlgebraParams(1, 1, 0, 1), 1)
    assert report.vacuous
    assert report.passed
    with pytest.raises(ValueError):
        relation_suite("nope", AlgebraParams(1, 1, 1, 1), 1)


def test_hamiltonian_small_case():
    P = AlgebraParams(1, 0, 1, 0)
    basis = enumerate_basis(P, 1)
    H = hamiltonian(P, 1, [1])
    assert H.grade == Grade(0, 0)
    assert H.is_diagonal
    diag = H.diagonal()
    assert diag[basis.index_of(FockState.vacuum(P))].is_zero
    assert diag[basis.index_of(FockState((1,), (), (0,), ()))] == 1
    assert diag[basis.index_of(FockState((0,), (), (1,), ()))] == 1


def test_hamiltonian_eigenvalue_two_states():
    P = AlgebraParams(1, 0, 1, 0)
    basis = enumerate_basis(P, 2)
    H = hamiltonian(P, 2, [1])
    diag = H.diagonal()
    assert diag[basis.index_of(FockState((2,), (), (0,), ()))] == 2
    assert diag[basis.index_of(FockState((1,), (), (1,), ()))] == 2


def test_hamiltonian_validation():
    with pytest.raises(ValueError):
        hamiltonian(AlgebraParams(1, 0, 0, 0), 1, [1])  # m != n
    with pytest.raises(ValueError):
        hamiltonian(AlgebraParams(1, 0, 1, 0), 1, [1, 2])  # wrong length
    with pytest.raises(TypeError):
        EnergyAssignment.from_values([0.5])
    with pytest.raises(ValueError):
        hamiltonian(AlgebraParams(1, 0, 1, 0), 1, [1], reading="weird")


def test_hamiltonian_diagonal_matches_occupation_sums():
    P = AlgebraParams(1, 1, 1, 1)
    eps = [Fraction(1), Fraction(3, 2)]
    for p in (1, 2, 3):
        basis = enumerate_basis(P, p)
        H = hamiltonian(P, p, eps)
        assert H.is_diagonal
        for pos, state in enumerate(basis):
            expected = sum(
                e * (state.occupation(i + 1, P) + state.occupation(i + 1 + P.m, P))
                for i, e in enumerate(eps)
            )
            assert H.entry(pos, pos) == expected


def test_ladder_residuals_zero_under_graded_reading():
    P = AlgebraParams(1, 0, 1, 0)
    for p in (1, 2, 3):
        for sign in "+-":
            for index in (1, 2):
                assert ladder_residual(P, p, [1], index, sign).is_zero


def test_fermionic_partner_shares_energy():
    P = AlgebraParams(1, 0, 0, 1)
    eps = [Fraction(5, 3)]
    assert ladder_residual(P, 2, eps, 2, "+").is_zero
    assert ladder_residual(P, 2, eps, 2, "-").is_zero


def test_literal_reading_breaks_fermionic_ladder():
    P = AlgebraParams(1, 0, 1, 0)
    residual = ladder_residual(P, 2, [1], 2, "+", reading="literal")
    assert not residual.is_zero


def test_ladder_residual_validation():
    P = AlgebraParams(1, 0, 1, 0)
    with pytest.raises(ValueError):
        ladder_residual(P, 1, [1], 3)
    with pytest.raises(ValueError):
        ladder_residual(P, 1, [1], 1, "x")


def test_spectrum_example():
    pairs = spectrum(AlgebraParams(1, 0, 1, 0), 1, [1])
    assert [(v.as_fraction(), m) for v, m in pairs] == [(0, 1), (1, 2)]


def test_spectrum_total_multiplicity_and_zero_energy():
    P = AlgebraParams(1, 1, 1, 1)
    for p in (1, 2):
        pairs = spectrum(P, p, [Fraction(1), Fraction(3, 2)])
        assert sum(m for _, m in pairs) == dimension(P, p)
        values = [v.as_fraction() for v, _ in pairs]
        assert values == sorted(values)
    flat = spectrum(P, 2, [0, 0])
    assert flat == [(flat[0][0], dimension(P, 2))]
    assert flat[0][0].is_zero


def test_occupancy_report():
    report = occupancy_report(AlgebraParams(1, 1, 1, 1), 3)
    assert report.max_r == [3]
    assert report.max_l == [3]
    assert report.max_theta == [1]
    assert report.max_lam == [1]
    assert report.max_total == 3
    assert report.dimension == dimension(AlgebraParams(1, 1, 1, 1), 3)


def test_occupancy_limited_by_orbitals():
    report = occupancy_report(AlgebraParams(0, 0, 2, 0), 5)
    assert report.max_total == 2
    assert report.max_theta == [1, 1]


def test_occupancy_order_one():
    report = occupancy_report(AlgebraParams(2, 1, 1, 1), 1)
    assert report.max_r == [1, 1]
    assert report.max_l == [1]
    assert report.max_total == 1


def test_occupancy_json_keys():
    data = occupancy_report(AlgebraParams(1, 0, 1, 0), 2).to_json()
    assert set(data) == {
        "params", "p", "dimension", "max_r", "max_l", "max_theta", "max_lambda", "max_total",
    }

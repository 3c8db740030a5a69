import pytest

from kschur import DomainError
from kschur.algebra import LinearCombination, pairing
from kschur.bases import (
    build_kschur_system,
    build_schur_system,
    kostka,
    kostka_chains,
    monomial_to_M,
    negativity_search,
    order_convention_report,
    ssyt_count,
    stabilization_check,
    verify_decomposition,
    verify_duality,
    verify_omega,
    verify_projection,
)
from kschur.compositions import enumerate_compositions, sort_to_partition
from kschur.partitions import dominance_lt, partitions_of


def test_kostka_worked_example():
    assert kostka((1, 3, 1, 1), (1, 1, 2, 1, 1), 3, "composition", "paper") == 2
    chains = kostka_chains((1, 3, 1, 1), (1, 1, 2, 1, 1), 3, "composition", "paper")
    assert set(chains) == {
        ((), (1,), (1, 1), (2, 1, 1), (3, 1, 1), (1, 3, 1, 1)),
        ((), (1,), (1, 1), (2, 1, 1), (1, 2, 1, 1), (1, 3, 1, 1)),
    }


def test_kostka_partition_example():
    assert kostka((2, 1, 1), (1, 1, 1, 1), 3, "partition", "paper") == 2
    assert kostka((2, 1, 1), (1, 1, 1, 1), 3, "partition", "pieri") == 2


def test_kostka_composition_pieri_example():
    assert kostka((2, 2), (1, 1, 1, 1), 3, "composition", "pieri") == 2


def test_kostka_diagonal_is_one_in_pieri_order():
    for k in (2, 3, None):
        for n in range(6):
            for alpha in enumerate_compositions(n, k):
                assert kostka(alpha, alpha, k, "composition", "pieri") == 1


def test_kostka_validations():
    with pytest.raises(ValueError):
        kostka((2,), (1,), None)
    with pytest.raises(ValueError):
        kostka((2,), (2,), None, family="poset")
    with pytest.raises(ValueError):
        kostka((2,), (2,), None, order="sideways")
    with pytest.raises(DomainError):
        kostka((3,), (3,), 2)
    assert kostka((), (), 3) == 1


def test_kostka_count_matches_chain_listing():
    for k in (2, 3):
        for n in range(6):
            for alpha in enumerate_compositions(n, k):
                for beta in enumerate_compositions(n, k):
                    count = kostka(alpha, beta, k, "composition", "pieri")
                    chains = kostka_chains(alpha, beta, k, "composition", "pieri")
                    assert count == len(chains)


def test_partition_kostka_content_rearrangement_invariance():
    for k in (2, 3):
        for n in range(7):
            for lam in partitions_of(n, k):
                for beta in enumerate_compositions(n, k):
                    mu = sort_to_partition(beta)
                    assert kostka(lam, beta, k, "partition", "paper") == kostka(
                        lam, mu, k, "partition", "paper"
                    )
                    assert kostka(lam, beta, k, "partition", "paper") == kostka(
                        lam, beta, k, "partition", "pieri"
                    )


def test_system_inverse_round_trip():
    for k in (2, 3, None):
        for n in range(6):
            system = build_schur_system(n, k)
            product = system.S_to_H.matmul(system.H_to_S)
            size = len(system.labels)
            assert product == tuple(
                tuple(int(i == j) for j in range(size)) for i in range(size)
            )


def test_unit_diagonal_and_dominance_support():
    for k in (2, 3):
        for n in range(7):
            system = build_schur_system(n, k)
            for beta, row in zip(system.labels, system.H_to_S.rows):
                for alpha, value in zip(system.labels, row):
                    if alpha == beta:
                        assert value == 1
                    elif value:
                        assert dominance_lt(
                            sort_to_partition(beta), sort_to_partition(alpha)
                        )


def test_h_to_s_corollary_round_trip():
    # Substituting the S expansion back into H_beta recovers H_beta.
    for k in (2, 3):
        for n in range(6):
            system = build_schur_system(n, k)
            for beta in system.labels:
                acc = LinearCombination.zero("H", k)
                for alpha, coeff in system.H_in_S(beta).terms():
                    acc = acc + coeff * system.S_in_H(alpha)
                assert acc == LinearCombination.single("H", beta, k)


def test_dual_expansion_matches_pieri_kostka():
    for k in (2, 3, None):
        for n in range(6):
            system = build_schur_system(n, k)
            for alpha in system.labels:
                for beta in system.labels:
                    assert system.QS_to_M.entry(alpha, beta) == kostka(
                        alpha, beta, k, "composition", "pieri"
                    )


def test_dual_kschur_expansion_matches_partition_kostka():
    for k in (2, 3):
        for n in range(6):
            system = build_kschur_system(n, k)
            for lam in system.labels:
                for mu in system.labels:
                    assert system.dual_to_m.entry(lam, mu) == kostka(
                        lam, mu, k, "partition", "pieri"
                    )


def test_classical_partition_system_matches_ssyt_oracle():
    # At unbounded k the h-to-Schur entries are classical Kostka numbers.
    for n in range(7):
        system = build_kschur_system(n, None)
        for mu in system.labels:
            for lam in system.labels:
                assert system.h_to_s.entry(mu, lam) == ssyt_count(lam, mu)


def test_kschur_degree_two_example():
    for k in (2, 3, 5):
        system = build_kschur_system(2, k)
        assert system.s_in_h((1, 1)) == LinearCombination(
            "h", k, {(1, 1): 1, (2,): -1}
        )


def test_dual_kschur_monomial_coefficient_example():
    system = build_kschur_system(4, 3)
    assert system.dual_in_m((2, 1, 1)).coefficient((1, 1, 1, 1)) == 2


def test_duality_projection_decomposition_reports():
    for k in (2, 3):
        for n in range(6):
            assert verify_duality(n, k).passed
            assert verify_projection(n, k).passed
            assert verify_decomposition(n, k).passed


def test_pairing_of_dual_bases_is_kronecker():
    for k in (2, 4):
        for n in range(6):
            system = build_schur_system(n, k)
            for alpha in system.labels:
                qs = system.QS_in_M(alpha)
                for beta in system.labels:
                    assert pairing(qs, system.S_in_H(beta)) == (1 if alpha == beta else 0)


def test_monomial_to_M_identification():
    combo = LinearCombination("m", None, {(2, 1): 1})
    assert monomial_to_M(combo) == LinearCombination(
        "M", None, {(2, 1): 1, (1, 2): 1}
    )


def test_ssyt_counts():
    assert ssyt_count((2, 1), (1, 1, 1)) == 2
    assert ssyt_count((2, 1), (2, 1)) == 1
    assert ssyt_count((3, 1), (2, 2)) == 1
    assert ssyt_count((2, 2), (1, 1, 1, 1)) == 2
    assert ssyt_count((1, 1, 1), (2, 1)) == 0
    assert ssyt_count((), ()) == 1


def test_classical_limit_kostka_against_ssyt():
    for n in range(6):
        system = build_schur_system(n, None)
        for lam in partitions_of(n):
            for beta in system.labels:
                class_sum = sum(
                    kostka(alpha, beta, None, "composition", "pieri")
                    for alpha in system.labels
                    if sort_to_partition(alpha) == lam
                )
                assert class_sum == ssyt_count(lam, sort_to_partition(beta))


def test_stabilization():
    for n in range(6):
        assert stabilization_check(n).passed


def test_omega_report_small():
    assert verify_omega(8, 4, oracle_max_n=6).passed


def test_order_convention_report():
    report = order_convention_report(5, (2, 3))
    assert report["palindromic_ok"]
    # The two reading orders genuinely differ on non-palindromic contents.
    assert any(content != content[::-1] for _, _, content, _, _ in report["divergences"])
    for _, _, content, paper_count, pieri_count in report["divergences"]:
        assert content != content[::-1]
        assert paper_count != pieri_count


def test_negativity_search_finds_witnesses():
    for k in (2, 3):
        found = negativity_search(6, k)
        assert found["product"], f"no negative structure constants at k={k}"
    # Degenerate products against the unit stay nonnegative.
    found = negativity_search(3, 2)
    for alpha, beta, gamma, value in found["product"]:
        assert alpha != () and beta != ()


def test_negativity_witness_is_reproducible():
    # S[1,1] * S[1] at k=2 has a negative coefficient at S[2,1]:
    # (H[1,1] - H[2]) H[1] = H[1,1,1] - H[2,1] = S[1,2] + S[1,1,1] - S[2,1].
    found = negativity_search(3, 2)
    assert ((1, 1), (1,), (2, 1), -1) in found["product"]

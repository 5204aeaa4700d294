import pytest
from hypothesis import given, strategies as st

from equigrass.derham import (LnElement, NotDecomposable, alpha_count, alpha_identity_check,
                              alpha_ie, appendix_report, decomposability_witness, eta,
                              eta_inverse, eta_of_monomial, eta_series_check,
                              exterior_invariants_check, in3_check, indecomposable_basis_Ln,
                              is_decomposable, jtilde_quotient_ranks, ln_mul,
                              predicted_quotient_ranks, render_kn_monomial, restriction_check,
                              sigma_a, sigma_b)
from equigrass.partitions import enumerate_partitions, make_partition


def test_bound_times_free():
    # [a_I b_I^d] * [a_J] = [a_I a_J b_I^d] plus classes with a repeated a, which vanish
    n = 4
    x = LnElement.basis(make_partition([3], n))
    y = LnElement.basis(make_partition([1], n))
    assert make_partition([1, 3], n) in ln_mul(x, y).terms


def test_exterior_product_rule():
    assert ln_mul(sigma_a(1, 3), sigma_a(2, 3)) == sigma_a(3, 3)
    for n in range(2, 6):
        assert not ln_mul(sigma_a(2, n), sigma_a(2, n))
        assert not ln_mul(sigma_a(1, n), sigma_a(1, n))
    x = ln_mul(ln_mul(sigma_a(1, 3), sigma_a(2, 3)), LnElement.basis((1, 1, 1)))
    assert not x


def test_alpha_classes():
    for e in range(5):
        assert alpha_ie(0, e, 3).degrees() == {2 * e + 1}
    assert alpha_ie(1, 0, 4) == sigma_a(2, 4)
    with pytest.raises(ValueError):
        alpha_ie(2, 0, 3)
    # exactly one alpha_{i,e} per positive degree
    for r in range(1, 200):
        hits = [(i, e) for i in range(9) for e in range(100) if 2 ** i * (2 * e + 1) == r]
        assert len(hits) == 1


def test_generator_counts():
    for n in range(1, 9):
        assert len(indecomposable_basis_Ln(n)) == 3 * n - bin(n).count("1")
    assert len(indecomposable_basis_Ln(4)) == 11
    assert sorted(g.name for g in indecomposable_basis_Ln(1)) == ["alpha_0,0", "sigma_1(b)"]


def test_jtilde_n2():
    # degree 5 would need alpha_{0,2}, but e <= n - 1 = 1
    assert jtilde_quotient_ranks(2, 6) == {1: 1, 2: 2, 3: 1, 4: 1}


def test_jtilde_matches_prediction():
    for n in range(1, 6):
        assert jtilde_quotient_ranks(n, 14) == predicted_quotient_ranks(n, 14)
    assert sum(jtilde_quotient_ranks(5, 14).values()) == 13


def test_beyond_range_is_decomposable():
    assert is_decomposable((5,))
    cert = decomposability_witness((5,))
    assert cert and cert.rule == "beyond-range"


def test_witnesses():
    cert = decomposability_witness((0, 1, 3))
    assert cert and cert.rule == "bound+free" and cert.validated
    assert isinstance(decomposability_witness((0, 0, 3, 3)), NotDecomposable)
    for n in (2, 4):
        for e in range(n // 2):
            assert not decomposability_witness(make_partition([2 * e + 1] * 2, n), n)
    assert decomposability_witness((1, 1, 1)).rule == "odd-binomial"


def test_witnesses_agree_with_linear_algebra():
    for n in range(1, 5):
        for d in range(1, 11):
            for p in enumerate_partitions(d, n):
                cert = decomposability_witness(p, n)
                if cert:
                    assert is_decomposable(p, 10), p


def test_alpha_count():
    assert alpha_count(5) == 3
    assert alpha_count(0) == 0
    for k in range(12):
        assert alpha_count(2 ** k) == 2 ** k - 1
    assert alpha_identity_check(5000) is None


def test_eta_examples():
    m = ((1, 1, 1, 1, 0), (4, 1, 0, 1, 2))
    assert eta_of_monomial(*m) == (1, 3, 3, 4, 9)
    eps, d = eta_inverse((1, 1, 1, 2, 2, 3, 3, 6, 10))
    assert render_kn_monomial(eps, d) == "a1 a2 a3 b4 b5 a6 b6 a7 b7 b8^3 b9^5"
    with pytest.raises(ValueError):
        eta_inverse((0, 1))


def test_eta_series():
    assert eta_series_check(12, 12).ok
    with pytest.raises(ValueError):
        eta_series_check(12, 5)


def test_exterior_and_in3():
    for n in range(1, 6):
        assert exterior_invariants_check(n).ok
        assert in3_check(n, 14).ok


def test_restriction():
    assert restriction_check(4, 8).ok


def test_appendix_report_small():
    rep = appendix_report(3, 10, alpha_max=1000)
    assert rep.ok, rep.failures()


@given(st.lists(st.integers(1, 12), min_size=1, max_size=6))
def test_eta_roundtrip(v):
    eps, d = eta_inverse(v)
    assert eta_of_monomial(eps, d) == tuple(sorted(v))
    assert eta(tuple(e + 2 * x for e, x in zip(eps, d))) == tuple(sorted(v))


@given(st.integers(1, 5), st.integers(0, 4), st.integers(0, 4))
def test_sigma_b_products_commute(n, r, s):
    r, s = min(r, n), min(s, n)
    assert ln_mul(sigma_b(r, n), sigma_b(s, n)) == ln_mul(sigma_b(s, n), sigma_b(r, n))

"""Coefficient tables, recurrences, eta powers, bridges, and scaling congruences."""

import pytest

from regulus import coefficients as co
from regulus.series import ZZ, euler_E


def naive_e1_power(r, order):
    """Dense repeated multiplication by the literal Euler factors, no shortcuts."""
    c = [1] + [0] * order
    for _ in range(r):
        for m in range(1, order + 1):
            for n in range(order, m - 1, -1):
                c[n] -= c[n - m]
    return c


# --- E_1^r tables ---


def test_a_r_zero_is_one():
    for r in (1, 2, 12, 24):
        assert co.e1_power_coeffs(r, 4)[0] == 1


def test_a24_small_values_match_naive():
    expected = naive_e1_power(24, 6)
    got = co.e1_power_coeffs(24, 6)
    assert list(got.values) == expected
    assert got[4] == 4830


def test_a1_is_pentagonal():
    got = co.e1_power_coeffs(1, 40)
    assert list(got.values) == list(euler_E(1, 40, ZZ).coeffs)


def test_a12_matches_naive():
    assert list(co.e1_power_coeffs(12, 8).values) == naive_e1_power(12, 8)


def test_invalid_r():
    with pytest.raises(ValueError):
        co.e1_power_coeffs(0, 4)


# --- Newman recurrence ---


def test_newman_params_validation():
    assert co.NewmanParams(24, 5).delta == 4
    assert co.NewmanParams(12, 13).delta == 6
    with pytest.raises(ValueError):
        co.NewmanParams(13, 5)  # odd r
    with pytest.raises(ValueError):
        co.NewmanParams(26, 5)  # r too large
    with pytest.raises(ValueError):
        co.NewmanParams(2, 5)  # 24 does not divide 2*4


def test_newman_trivial_instance():
    # r=24, p=5, n=0: the divisibility guard kills the third term
    a = co.e1_power_coeffs(24, 4)
    assert a[4] == a[4] * a[0] - 5**11 * 0


def test_newman_r24_p5():
    report = co.newman_check(co.NewmanParams(24, 5), 1504)
    assert report.status == "pass"
    assert report.indices_checked >= 300


def test_newman_r12_p13():
    report = co.newman_check(co.NewmanParams(12, 13), 1306)
    assert report.status == "pass"
    assert report.indices_checked >= 100


def test_newman_recurrence_against_direct_recomputation():
    # independent re-derivation of the relation at a handful of points
    params = co.NewmanParams(24, 2)
    a = co.e1_power_coeffs(24, 200)
    delta = params.delta
    for n in range(50):
        third = a[(n - delta) // 2] if (n - delta) >= 0 and (n - delta) % 2 == 0 else 0
        assert a[2 * n + delta] == a[delta] * a[n] - 2**11 * third


def test_admissible_newman_pairs():
    pairs = {(q.r, q.p) for q in co.admissible_newman_pairs(13)}
    assert (24, 2) in pairs and (12, 13) in pairs and (2, 13) in pairs
    assert (12, 2) not in pairs  # 12*1 not divisible by 24
    for r, p in pairs:
        assert r * (p - 1) % 24 == 0


def test_four_step_r24_p2():
    report = co.newman_four_step(24, 2, 976)
    assert report.status == "pass"
    assert report.indices_checked >= 60


def test_four_step_r12_p3():
    report = co.newman_four_step(12, 3, 1660)
    assert report.status == "pass"
    assert report.indices_checked >= 20


def test_four_step_out_of_budget_is_skipped():
    report = co.newman_four_step(24, 5, 100)  # delta4 = 624 > 100
    assert report.status == "skipped"


# --- eta power tables ---


def test_eta8_leading_coefficients():
    a = co.eta_power_coeffs(co.ETA8_3Z, 8)
    assert a[1] == 1
    assert a[0] == 0 and a[2] == 0 and a[3] == 0
    assert a[4] == -8


def test_eta10_leading_coefficients():
    a = co.eta_power_coeffs(co.ETA10_12Z, 20)
    assert all(a[n] == 0 for n in range(5))
    assert a[5] == 1
    assert a[17] == -10


def test_eta6_support():
    a = co.eta_power_coeffs(co.ETA6_4Z, 200)
    for n in range(201):
        if n % 4 != 1:
            assert a[n] == 0


def test_eta_table_matches_naive_expansion():
    # q * E_3^8 expanded by dense multiplication
    order = 30
    c = [1] + [0] * order
    for _ in range(8):
        m = 3
        while m <= order:
            for n in range(order, m - 1, -1):
                c[n] -= c[n - m]
            m += 3
    a = co.eta_power_coeffs(co.ETA8_3Z, order)
    assert list(a.values) == [0] + c[:order]


@pytest.mark.parametrize("form", [co.ETA8_3Z, co.ETA6_4Z, co.ETA10_12Z])
def test_support_checks(form):
    report = co.support_check(form, 500)
    assert report.status == "pass"


# --- Hecke eigen relations ---


def test_hecke_eta8_p2_direct():
    # a(2) = 0, so the relation collapses to a(2n) = -8 a(n/2)
    a = co.eta_power_coeffs(co.ETA8_3Z, 1000)
    assert a[2] == 0
    for n in range(1, 500):
        lower = a[n // 2] if n % 2 == 0 else 0
        assert a[2 * n] == -8 * lower


def test_hecke_eta8_p7_trivial_at_one():
    a = co.eta_power_coeffs(co.ETA8_3Z, 8)
    assert a[7] == a[7] * a[1]


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
@pytest.mark.parametrize("form", [co.ETA8_3Z, co.ETA6_4Z])
def test_hecke_eigen_checks(form, p):
    report = co.hecke_eigen_check(form, p, 600)
    assert report.status == "pass", report.violations[:1]


def test_hecke_weight5_combination_out_of_scope():
    with pytest.raises(ValueError):
        co.hecke_eigen_check(co.ETA10_12Z, 5, 100)


def test_chi_values():
    assert co.ETA8_3Z.chi(3) == 0  # ramified
    assert co.ETA8_3Z.chi(5) == 1  # trivial character
    assert co.ETA6_4Z.chi(2) == 0  # ramified
    assert co.ETA6_4Z.chi(5) == 1 and co.ETA6_4Z.chi(7) == -1


# --- vanishing consequences ---


def test_admissible_vanishing_primes():
    assert co.admissible_vanishing_primes(co.ETA8_3Z, 3) == [2, 5, 11]
    assert co.admissible_vanishing_primes(co.ETA6_4Z, 3) == [3, 7, 11]
    assert co.admissible_vanishing_primes(co.ETA10_12Z, 3) == [7, 11, 19]


def test_vanishing_eta8_p5():
    report = co.vanishing_consequence_check(co.ETA8_3Z, 5, 600)
    assert report.status == "pass"


def test_vanishing_eta10_p7():
    report = co.vanishing_consequence_check(co.ETA10_12Z, 7, 600)
    assert report.status == "pass"


def test_vanishing_eta6_p3_direct():
    a = co.eta_power_coeffs(co.ETA6_4Z, 600)
    for n in range(1, 200):
        if n % 3:
            assert a[3 * n] == 0


def test_vanishing_precondition_errors():
    with pytest.raises(ValueError):
        co.vanishing_consequence_check(co.ETA8_3Z, 7, 100)  # 7 = 1 mod 3
    with pytest.raises(ValueError):
        co.vanishing_consequence_check(co.ETA10_12Z, 3, 100)  # excluded prime


# --- bridges ---


def test_bridge_constant_terms():
    # B(0) = 1 on the multipartition side, a(1) = 1 on the eta side
    report = co.bridge_congruence_check("b312_eta8", 40)
    assert report.status == "pass"


@pytest.mark.parametrize("bridge", co.BRIDGE_IDS)
def test_bridges_small(bridge):
    report = co.bridge_congruence_check(bridge, 40)
    assert report.status == "pass", report.violations[:1]
    assert report.indices_checked == 41


def test_unknown_bridge():
    with pytest.raises(KeyError):
        co.bridge_congruence_check("nope", 10)


# --- scaling congruences ---


def test_scaling_b312_p2():
    report = co.scaling_congruence_check("eq_b312_scale", 2, 100)
    assert report.status == "pass"


def test_scaling_b315_p7():
    report = co.scaling_congruence_check("eq_b315_scale", 7, 10)
    assert report.status == "pass"


def test_scaling_b77_p3_includes_multiplier():
    # the right side carries the factor p^2 = 9 = 2 mod 7
    report = co.scaling_congruence_check("eq_b77_scale", 3, 40)
    assert report.status == "pass"
    assert 9 % 7 == 2


def test_scaling_precondition_errors():
    with pytest.raises(ValueError):
        co.scaling_congruence_check("eq_b312_scale", 3, 10)
    with pytest.raises(ValueError):
        co.scaling_congruence_check("eq_b315_scale", 3, 10)
    with pytest.raises(ValueError):
        co.scaling_congruence_check("eq_b77_scale", 7, 10)
    with pytest.raises(KeyError):
        co.scaling_congruence_check("bogus", 3, 10)


# --- primality helpers ---


def test_primes_upto():
    assert co.primes_upto(13) == [2, 3, 5, 7, 11, 13]
    assert not co._is_prime(1) and not co._is_prime(91)

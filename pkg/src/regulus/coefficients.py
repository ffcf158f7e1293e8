"""Coefficient tables of E_1^r and eta powers, with their recurrences.

Covers Newman's three-term recurrence for the coefficients of E_1^r, the
composed four-step version of it, the three fixed eta powers (q E_3^8,
q E_4^6, q^5 E_12^10) with their Hecke eigen-relations and support classes,
the congruence bridges linking multipartition counts to these tables, and
the p^2-scaling congruences along extracted progressions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

from .oracle import CoefficientTable
from .report import VerificationReport
from .series import ZZ, EtaQuotientSpec, eta_quotient, euler_E, power, regular_quotient


@dataclass(frozen=True)
class EtaPowerForm:
    id: str
    scale: int  # eta(scale * z)
    exponent: int  # eta power
    weight: int
    level: int
    character: str  # "trivial" or "odd" (chi(p) = (-1)^((p-1)/2))
    support_mod: int
    support_residue: int

    def chi(self, p: int) -> int:
        if self.level % p == 0:
            return 0
        if self.character == "trivial":
            return 1
        return -1 if (p - 1) // 2 % 2 else 1


ETA8_3Z = EtaPowerForm("eta8_3z", 3, 8, 4, 9, "trivial", 3, 1)
ETA6_4Z = EtaPowerForm("eta6_4z", 4, 6, 3, 16, "odd", 4, 1)
ETA10_12Z = EtaPowerForm("eta10_12z", 12, 10, 5, 144, "odd", 12, 5)

FORMS = {f.id: f for f in (ETA8_3Z, ETA6_4Z, ETA10_12Z)}


@dataclass(frozen=True)
class NewmanParams:
    r: int
    p: int

    def __post_init__(self) -> None:
        if self.r % 2 or not 0 < self.r <= 24:
            raise ValueError(f"r={self.r} must be even and in (0, 24]")
        if self.r * (self.p - 1) % 24:
            raise ValueError(f"24 must divide r(p-1) = {self.r * (self.p - 1)}")

    @property
    def delta(self) -> int:
        return self.r * (self.p - 1) // 24


@lru_cache(maxsize=None)
def _e1_power(r: int, n_max: int) -> tuple[int, ...]:
    return power(euler_E(1, n_max, ZZ), r).coeffs


def e1_power_coeffs(r: int, n_max: int) -> CoefficientTable:
    """Coefficients of E_1^r, exact over Z."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return CoefficientTable(f"a_{r}", list(_e1_power(r, n_max)), provenance="series")


@lru_cache(maxsize=None)
def _eta_table(form_id: str, n_max: int) -> tuple[int, ...]:
    form = FORMS[form_id]
    spec = EtaQuotientSpec(((form.scale, form.exponent),), form="eta")
    ser, shift = eta_quotient(spec, max(n_max - shift_of(form), 0), ZZ)
    assert shift == shift_of(form)
    table = [0] * (n_max + 1)
    for i, c in enumerate(ser.coeffs):
        if shift + i > n_max:
            break
        table[shift + i] = c
    return tuple(table)


def shift_of(form: EtaPowerForm) -> int:
    return form.scale * form.exponent // 24


def eta_power_coeffs(form: EtaPowerForm, n_max: int) -> CoefficientTable:
    """a(n) of the full eta power, q-shift included."""
    return CoefficientTable(form.id, list(_eta_table(form.id, n_max)), provenance="series")


def newman_check(params: NewmanParams, n_max: int) -> VerificationReport:
    """a_r(pn + d) = a_r(d) a_r(n) - p^(r/2-1) a_r((n-d)/p), d = r(p-1)/24."""
    r, p, delta = params.r, params.p, params.delta
    start = time.perf_counter()
    a = _e1_power(r, n_max)
    ad = a[delta]
    weight = p ** (r // 2 - 1)
    report = VerificationReport(
        id=f"newman.r{r}.p{p}", params_swept={"r": r, "p": p, "delta": delta}
    )
    n = 0
    while p * n + delta <= n_max:
        third = 0
        if (n - delta) >= 0 and (n - delta) % p == 0:
            third = a[(n - delta) // p]
        expected = ad * a[n] - weight * third
        if a[p * n + delta] != expected:
            report.record(p * n + delta, a[p * n + delta], n=n, expected=expected)
        report.indices_checked += 1
        n += 1
    report.ms = (time.perf_counter() - start) * 1000.0
    return report.finish()


def newman_four_step(r: int, p: int, n_max_index: int) -> VerificationReport:
    """Composed recurrence expressing a_r(p^4 n + d4) via a_r(pn + d) and a_r(n)."""
    params = NewmanParams(r, p)
    delta = params.delta
    delta4 = r * (p**4 - 1) // 24
    start = time.perf_counter()
    a = _e1_power(r, n_max_index)
    A = a[delta]
    s = p ** (r // 2 - 1)
    report = VerificationReport(
        id=f"newman4.r{r}.p{p}",
        params_swept={"r": r, "p": p, "delta4": delta4},
    )
    n = 0
    while p**4 * n + delta4 <= n_max_index:
        lhs = a[p**4 * n + delta4]
        rhs = A * (A * A - 2 * s) * a[p * n + delta] - s * (A * A - s) * a[n]
        if lhs != rhs:
            report.record(p**4 * n + delta4, lhs, n=n, expected=rhs)
        report.indices_checked += 1
        n += 1
    if report.indices_checked == 0:
        report.status = "skipped"
        report.notes.append("smallest index exceeds the coefficient budget")
    report.ms = (time.perf_counter() - start) * 1000.0
    return report.finish()


def support_check(form: EtaPowerForm, n_max: int) -> VerificationReport:
    """All coefficients outside the form's residue class vanish."""
    start = time.perf_counter()
    a = _eta_table(form.id, n_max)
    report = VerificationReport(
        id=f"support.{form.id}",
        params_swept={"mod": form.support_mod, "residue": form.support_residue},
        indices_checked=n_max + 1,
    )
    for n, c in enumerate(a):
        if c and n % form.support_mod != form.support_residue:
            report.record(n, c)
    report.ms = (time.perf_counter() - start) * 1000.0
    return report.finish()


def hecke_eigen_check(form: EtaPowerForm, p: int, n_max: int) -> VerificationReport:
    """a(pn) + chi(p) p^(w-1) a(n/p) = a(p) a(n) for 1 <= n <= n_max/p."""
    if form.id == ETA10_12Z.id:
        raise ValueError("the eigen relation for the weight-5 combination is out of scope")
    start = time.perf_counter()
    a = _eta_table(form.id, n_max)
    ap = a[p] if p <= n_max else 0
    weight = form.chi(p) * p ** (form.weight - 1)
    report = VerificationReport(id=f"hecke.{form.id}.p{p}", params_swept={"p": p})
    for n in range(1, n_max // p + 1):
        lower = a[n // p] if n % p == 0 else 0
        lhs = a[p * n] + weight * lower
        rhs = ap * a[n]
        if lhs != rhs:
            report.record(p * n, {"lhs": lhs, "rhs": rhs}, n=n)
        report.indices_checked += 1
    report.ms = (time.perf_counter() - start) * 1000.0
    return report.finish()


def admissible_vanishing_primes(form: EtaPowerForm, count: int) -> list[int]:
    """Smallest primes meeting the form's vanishing condition."""
    out = []
    p = 2
    while len(out) < count:
        if _is_prime(p):
            if form.id == ETA8_3Z.id and p % 3 == 2:
                out.append(p)
            elif form.id == ETA6_4Z.id and p % 4 == 3:
                out.append(p)
            elif form.id == ETA10_12Z.id and p % 4 == 3 and p != 3:
                out.append(p)
        p += 1
    return out


def vanishing_consequence_check(form: EtaPowerForm, p: int, n_max: int) -> VerificationReport:
    """Two-term relation a(pn) = -chi-signed p-power * a(n/p) along inert primes."""
    if form.id == ETA8_3Z.id:
        if p % 3 != 2:
            raise ValueError("requires p = 2 mod 3")
        coeff = p**3  # a(pn) + p^3 a(n/p) = 0
    elif form.id == ETA6_4Z.id:
        if p % 4 != 3:
            raise ValueError("requires p = 3 mod 4")
        coeff = -(p**2)  # a(pn) - p^2 a(n/p) = 0
    else:
        if p % 4 != 3 or p == 3:
            raise ValueError("requires p = 3 mod 4, p != 3")
        coeff = -(p**4)  # a(pn) - p^4 a(n/p) = 0
    start = time.perf_counter()
    a = _eta_table(form.id, n_max)
    report = VerificationReport(id=f"vanishing.{form.id}.p{p}", params_swept={"p": p})
    if form.id in (ETA8_3Z.id, ETA6_4Z.id) and p <= n_max and a[p] != 0:
        report.record(p, a[p], reason="a(p) expected to vanish")
    for n in range(1, n_max // p + 1):
        lower = a[n // p] if n % p == 0 else 0
        if a[p * n] + coeff * lower != 0:
            report.record(p * n, a[p * n], n=n)
        report.indices_checked += 1
    report.ms = (time.perf_counter() - start) * 1000.0
    return report.finish()


BRIDGE_IDS = (
    "b56_a24",
    "b76_a12",
    "b312_eta8",
    "b315_eta10",
    "b510_eta8",
    "b77_eta6",
    "b1111_eta10",
)


def bridge_congruence_check(bridge: str, n_max: int) -> VerificationReport:
    """Congruence between a multipartition series and a coefficient table."""
    start = time.perf_counter()
    report = VerificationReport(id=f"bridge.{bridge}", params_swept={"n_max": n_max})

    def sweep(pairs) -> None:
        for index, lhs, rhs in pairs:
            if lhs != rhs:
                report.record(index, {"series": lhs, "table": rhs})
            report.indices_checked += 1

    if bridge == "b56_a24":
        s = regular_quotient(5, 6, n_max, 5)
        a = _e1_power(24, n_max)
        sweep((n, s[n], a[n] % 5) for n in range(n_max + 1))
    elif bridge == "b76_a12":
        s = regular_quotient(7, 6, 7 * n_max + 2, 7)
        a = _e1_power(12, n_max)
        sweep((7 * n + 2, s[7 * n + 2], 6 * a[n] % 7) for n in range(n_max + 1))
    elif bridge == "b312_eta8":
        s = regular_quotient(3, 12, 3 * n_max, 3)
        a = _eta_table(ETA8_3Z.id, 3 * n_max + 1)
        sweep((3 * n, s[3 * n], a[3 * n + 1] % 3) for n in range(n_max + 1))
    elif bridge == "b315_eta10":
        s = regular_quotient(3, 15, 3 * n_max, 3)
        a = _eta_table(ETA10_12Z.id, 12 * n_max + 5)
        sweep((3 * n, s[3 * n], a[12 * n + 5] % 3) for n in range(n_max + 1))
    elif bridge == "b510_eta8":
        s = regular_quotient(5, 10, 5 * n_max, 5)
        a = _eta_table(ETA8_3Z.id, 3 * n_max + 1)
        sweep((5 * n, s[5 * n], a[3 * n + 1] % 5) for n in range(n_max + 1))
    elif bridge == "b77_eta6":
        s = regular_quotient(7, 7, 7 * n_max, 7)
        a = _eta_table(ETA6_4Z.id, 4 * n_max + 1)
        sweep((7 * n, s[7 * n], a[4 * n + 1] % 7) for n in range(n_max + 1))
    elif bridge == "b1111_eta10":
        s = regular_quotient(11, 11, 11 * n_max, 11)
        a = _eta_table(ETA10_12Z.id, 12 * n_max + 5)
        sweep((11 * n, s[11 * n], a[12 * n + 5] % 11) for n in range(n_max + 1))
    else:
        raise KeyError(f"unknown bridge {bridge!r}")
    report.ms = (time.perf_counter() - start) * 1000.0
    return report.finish()


SCALING_IDS = ("eq_b312_scale", "eq_b315_scale", "eq_b77_scale")


def scaling_congruence_check(which: str, p: int, n_max: int) -> VerificationReport:
    """p^2-scaling of extracted progressions of the multipartition series."""
    start = time.perf_counter()
    if which == "eq_b312_scale":
        if p % 3 != 2:
            raise ValueError("requires p = 2 mod 3")
        shift = (p * p - 1) // 3
        order = 3 * (p * p * n_max + shift)
        s = regular_quotient(3, 12, order, 3)
        pairs = [
            (3 * (p * p * n + shift), s[3 * (p * p * n + shift)], s[3 * n])
            for n in range(n_max + 1)
        ]
    elif which == "eq_b315_scale":
        if p % 4 != 3 or p == 3:
            raise ValueError("requires p = 3 mod 4, p != 3")
        shift = 5 * (p * p - 1) // 12
        order = 3 * (p * p * n_max + shift)
        s = regular_quotient(3, 15, order, 3)
        pairs = [
            (3 * (p * p * n + shift), s[3 * (p * p * n + shift)], s[3 * n])
            for n in range(n_max + 1)
        ]
    elif which == "eq_b77_scale":
        if p % 4 != 3 or p == 7:
            raise ValueError("requires p = 3 mod 4, p != 7")
        shift = (p * p - 1) // 4
        order = 7 * (p * p * n_max + shift)
        s = regular_quotient(7, 7, order, 7)
        pairs = [
            (7 * (p * p * n + shift), s[7 * (p * p * n + shift)], p * p * s[7 * n] % 7)
            for n in range(n_max + 1)
        ]
    else:
        raise KeyError(f"unknown scaling congruence {which!r}")
    report = VerificationReport(
        id=f"scaling.{which}.p{p}", params_swept={"p": p, "n_max": n_max}
    )
    for index, lhs, rhs in pairs:
        if lhs != rhs:
            report.record(index, {"lhs": lhs, "rhs": rhs})
        report.indices_checked += 1
    report.ms = (time.perf_counter() - start) * 1000.0
    return report.finish()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_upto(limit: int) -> list[int]:
    return [p for p in range(2, limit + 1) if _is_prime(p)]


def admissible_newman_pairs(p_max: int = 13) -> list[NewmanParams]:
    """Every (r, p) with r even <= 24, p <= p_max prime, 24 | r(p-1)."""
    out = []
    for r in range(2, 25, 2):
        for p in primes_upto(p_max):
            if r * (p - 1) % 24 == 0:
                out.append(NewmanParams(r, p))
    return out

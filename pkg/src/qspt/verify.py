"""Top-level verification drivers: one function per theorem/corollary check,
each returning a VerificationReport."""

from __future__ import annotations

import time
from fractions import Fraction

from . import forms, jbasis, partitions
from .partitions import StatTables
from .report import VerificationReport
from .series import LaurentSeries


def _qpow(e: int, prec: int) -> LaurentSeries:
    """The monomial q^e known below prec."""
    return LaurentSeries(1, 0, e, prec, [Fraction(1)])


def verify_thm1_2(tables: StatTables, max_n: int = 20) -> VerificationReport:
    """c(n) from the h1/h2 partition formula against the j-expansion."""
    t0 = time.monotonic()
    rep = VerificationReport(check="thm1_2", parameters={"max_n": max_n},
                             window=(1, max_n + 1))
    j = forms.j_series(max_n + 1)
    for n in range(1, max_n + 1):
        rep.record(n, partitions.c_formula(n, tables), j.coeff(n))
    rep.runtime_ms = int((time.monotonic() - t0) * 1000)
    return rep


def verify_thm1_3(max_n: int = 40, tables: StatTables | None = None) -> VerificationReport:
    """Signed-triangular-weight enumeration against the A(q) series coefficients."""
    t0 = time.monotonic()
    rep = VerificationReport(check="thm1_3", parameters={"max_n": max_n},
                             window=(1, max_n + 1))
    a = tables.a if tables and tables.limit >= max_n else partitions.a_table(max_n)
    for n in range(1, max_n + 1):
        rep.record(n, partitions.ts_sum_bruteforce(n), a[n])
    rep.runtime_ms = int((time.monotonic() - t0) * 1000)
    return rep


def verify_eq17(max_n: int = 30, tables: StatTables | None = None) -> VerificationReport:
    """u* from strongly unimodal enumeration against -spt + 2a."""
    t0 = time.monotonic()
    rep = VerificationReport(check="eq17", parameters={"max_n": max_n},
                             window=(1, max_n + 1))
    if tables is None or tables.limit < max_n:
        tables = StatTables.build(max_n)
    for n in range(1, max_n + 1):
        rep.record(n, partitions.ustar_bruteforce(n), tables.ustar[n])
    rep.runtime_ms = int((time.monotonic() - t0) * 1000)
    return rep


def verify_cor1_5(tables: StatTables, max_n: int = 20) -> VerificationReport:
    """The u*/a coefficient formula: equals both the h-formula and c(n),
    with the displayed c(1), c(2) decompositions itemized."""
    t0 = time.monotonic()
    rep = VerificationReport(check="cor1_5", parameters={"max_n": max_n},
                             window=(1, max_n + 1))
    j = forms.j_series(max_n + 1)
    for n in range(1, max_n + 1):
        cg = partitions.c_formula_g(n, tables)
        rep.record(n, cg, j.coeff(n))
        rep.record(n, cg, partitions.c_formula(n, tables))
    rep.details.extend(partitions.c1_c2_decompositions(tables))
    rep.runtime_ms = int((time.monotonic() - t0) * 1000)
    return rep


def verify_internal_identities(ncoeffs: int = 500, poly_max: int = 30) -> VerificationReport:
    """Cross-checks among the classical series and the polynomial bases."""
    t0 = time.monotonic()
    rep = VerificationReport(check="internal_identities",
                             parameters={"coefficients": ncoeffs, "poly_max": poly_max},
                             window=(-poly_max, ncoeffs))
    P = ncoeffs + poly_max + 2
    e4 = forms.eisenstein_e4(P)
    e6 = forms.eisenstein_e6(P)
    delta = forms.delta_series(P)
    euler = forms.euler_series(P)
    j = forms.j_series(P)
    jp = forms.jprime_neg_series(P)
    alpha = forms.alpha_series(P)

    def check(tag, lhs, rhs, lo=None, hi=ncoeffs):
        a = {e: c for e, c in lhs.terms() if (lo is None or e >= lo) and e < hi}
        b = {e: c for e, c in rhs.terms() if (lo is None or e >= lo) and e < hi}
        before = len(rep.mismatches)
        for e in sorted(set(a) | set(b)):
            rep.record(e, a.get(e, Fraction(0)), b.get(e, Fraction(0)))
        rep.details.append(f"{tag}: {'ok' if len(rep.mismatches) == before else 'MISMATCH'}")

    check("delta = eta^24", delta, euler.pow(24).shift(1))
    check("delta = (E4^3 - E6^2)/1728", delta,
          (e4.pow(3) - e6.pow(2)).scale(Fraction(1, 1728)))
    check("-q dj/dq = E4^2 E6/Delta", jp, -j.q_derive())
    check("j * Delta = E4^3", j * delta, e4.pow(3))
    rep.record(1, alpha.coeff(0), 0)
    rep.record(1, alpha.coeff(1), 1)
    rep.details.append("alpha = q + O(q^2): checked")

    # Shared powers of j make every polynomial evaluation a linear combination.
    jpow = [LaurentSeries(1, 0, 0, P, [Fraction(1)])]
    for _ in range(poly_max):
        jpow.append(jpow[-1] * j)

    def evalpoly(poly):
        acc = None
        for k, c in enumerate(poly.coefficients):
            if c:
                term = jpow[k].scale(Fraction(c))
                acc = term if acc is None else acc + term
        return acc

    bs = jbasis.b_polynomials(poly_max)
    js = jbasis.faber_polynomials(poly_max)
    for n in range(1, poly_max + 1):
        bj = evalpoly(bs[n - 1])
        jn = evalpoly(js[n])
        # The chain alpha J_n(j) = B_n(j) = alpha q^-n + O(q) holds modulo
        # O(q); exact equality of the first pair is impossible on weight
        # grounds, so every comparison stops below exponent 1.
        check(f"B_{n}(j) = alpha q^-{n} + O(q)", bj, alpha.shift(-n), hi=1)
        check(f"alpha J_{n}(j) = B_{n}(j) + O(q)", alpha * jn, bj, hi=1)
        check(f"J_{n}(j) = q^-{n} + O(q)", jn, _qpow(-n, ncoeffs), hi=1)
    rep.runtime_ms = int((time.monotonic() - t0) * 1000)
    return rep

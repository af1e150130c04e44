"""Named verification sweeps behind the CLI `verify` command and the
acceptance tests. Each suite returns {"suite": ..., "rows": [...], "ok": bool}
with deterministic row ordering.
"""

from __future__ import annotations

from fractions import Fraction

from .complexity import census, quota, verify_thm2, verify_thm3
from .dynamics import max_period, orbit_algebraic
from .errors import ResourceLimitError
from .ffield import FieldSpec
from .groupalg import delta_operator
from .intfactor import is_prime
from .seqgen import arnold_log_seq


def _primes_upto(limit: int) -> list[int]:
    return [n for n in range(2, limit + 1) if is_prime(n)]


def thm1_census_suite(q_values=(2, 3, 4, 5), n_values=(3, 5, 7, 11, 13),
                      state_cap: int = 2**21) -> dict:
    """Exhaustive census equals the quota formula, exactly, on the whole grid."""
    rows = []
    ok = True
    for q in q_values:
        spec = FieldSpec.of_order(q)
        for n in n_values:
            if n == spec.p or q**n > state_cap:
                continue
            try:
                rep = census(spec, n, cap=state_cap)
                row_ok = rep.census_quota == rep.quota_formula
                rows.append({
                    "n": n, "q": q, "d": rep.d,
                    "quotaFormula": str(rep.quota_formula),
                    "censusCount": rep.census_count,
                    "stateCount": rep.state_count,
                    "ok": row_ok,
                })
            except RuntimeError as exc:  # census mismatch is a hard failure
                rows.append({"n": n, "q": q, "error": str(exc), "ok": False})
                row_ok = False
            ok = ok and row_ok
    return {"suite": "thm1", "rows": rows, "ok": ok}


def quota_trend_suite(n_max: int = 2000, q_values=(2, 3),
                      threshold_range=(100, 2000)) -> dict:
    """Exact-rational quota bounds across primes.

    Checks (1 - q^-d)^((n-1)/d) >= (1 - 1/(n+1))^(n-1) for every prime, and
    quota > 9/10 for q = 2 on the threshold range.
    """
    rows = []
    ok = True
    lo, hi = threshold_range
    for q in q_values:
        spec = FieldSpec.of_order(q)
        for n in _primes_upto(n_max):
            if n == spec.p:
                continue
            rep = quota(spec, n)
            bound = Fraction(n, n + 1) ** (n - 1)
            bound_ok = rep.quota_formula >= bound
            row = {"n": n, "q": q, "d": rep.d, "boundOk": bound_ok}
            row_ok = bound_ok
            if q == 2 and lo <= n <= hi:
                above = rep.quota_formula > Fraction(9, 10)
                row["above0.9"] = above
                row_ok = row_ok and above
            row["ok"] = row_ok
            ok = ok and row_ok
            if not row_ok:
                row["quota"] = str(rep.quota_formula)
            rows.append(row)
    return {"suite": "quota-trend", "rows": rows, "ok": ok}


def thm2_suite(q_values=(2, 3, 5, 7), n_max_default: int = 50,
               n_max_binary: int = 200) -> dict:
    """Legendre-sequence criterion: closed form and the mod-8 corollary."""
    rows = []
    ok = True
    for q in q_values:
        spec = FieldSpec.of_order(q)
        n_max = n_max_binary if q == 2 else n_max_default
        report = verify_thm2(spec, [n for n in _primes_upto(n_max) if n % 2 == 1])
        rows.extend(report["rows"])
        ok = ok and report["ok"]
    return {"suite": "thm2", "rows": rows, "ok": ok}


def thm3_suite(q_values=(2, 3, 4, 5, 7, 8, 9), n_max: int = 31) -> dict:
    """Every multiplicative function is D-complicated; family sizes match."""
    rows = []
    ok = True
    for q in q_values:
        spec = FieldSpec.of_order(q)
        for n in _primes_upto(n_max):
            if n == spec.p:
                continue
            report = verify_thm3(spec, n)
            rows.append({
                "n": n, "q": q,
                "familySize": report["familySize"],
                "expectedSize": report["expectedSize"],
                "allDComplicated": all(r["isDComplicated"] for r in report["rows"]),
                "ok": report["ok"],
            })
            ok = ok and report["ok"]
    return {"suite": "thm3", "rows": rows, "ok": ok}


def arnold_delta2_suite(n_limit: int = 64, q: int = 2) -> dict:
    """The logarithmic sequence reaches a maximal-period cycle for every
    n < n_limit with n + 1 prime. Resource caps produce SKIP, not failure."""
    spec = FieldSpec.of_order(q)
    rows = []
    ok = True
    for n in range(1, n_limit):
        if not is_prime(n + 1):
            continue
        row = {"n": n, "q": q}
        try:
            f = arnold_log_seq(spec, n)
            D = delta_operator(spec, n)
            s = orbit_algebraic(D, f)
            mp = max_period(D)
            row.update({
                "period": s.period, "maxPeriod": mp,
                "preperiod": s.preperiod,
                "status": "PASS" if s.period == mp else "FAIL",
            })
            if s.period != mp:
                ok = False
        except ResourceLimitError as exc:
            row.update({"status": "SKIP", "reason": str(exc)})
        rows.append(row)
    return {"suite": "arnold-delta2", "rows": rows, "ok": ok}


SUITES = {
    "thm1": thm1_census_suite,
    "thm2": thm2_suite,
    "thm3": thm3_suite,
    "arnold-delta2": arnold_delta2_suite,
    "quota-trend": quota_trend_suite,
}

"""Invariant suites run by ``helixspan check``.

Each suite returns a plain dict with at least ``check`` and ``passed`` keys so
the whole run serializes to JSON.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Iterable

from .diagram import bfs_distance
from .limitlaw import (
    convergence_check,
    growth_rate_check,
    m1,
    m2,
    q_series,
    singular_residual_check,
    tail_ratio_check,
)
from .oracle import enumerate_structures, enumerate_tableaux, histogram
from .series import canonical_series
from .tableaux import beta, beta_inv, gamma, gamma_star, is_irreducible, tableau_distance
from .tables import distance_table, direct_table

log = logging.getLogger(__name__)

__all__ = ["run_suites"]


def _bijection(n_max: int) -> dict:
    failures = 0
    for n in range(1, min(n_max, 12) + 1):
        failures += sum(beta_inv(beta(s)) != s for s in enumerate_structures(n))
        failures += sum(beta(beta_inv(t)) != t for t in enumerate_tableaux(n))
    return {"check": "bijection", "n_max": min(n_max, 12), "failures": failures, "passed": failures == 0}


def _distance_formula(n_max: int) -> dict:
    failures = checked = 0
    for n in range(1, n_max + 1):
        for s in enumerate_structures(n):
            checked += 1
            failures += tableau_distance(beta(s)) != bfs_distance(s)
    return {"check": "distance_formula", "n_max": n_max, "structures": checked, "failures": failures, "passed": failures == 0}


def _gamma(n_max: int) -> dict:
    failures = 0
    for n in range(3, n_max + 1):
        failures += sum(gamma_star(gamma(s)) != s for s in enumerate_structures(n) if is_irreducible(s))
    return {"check": "gamma_roundtrip", "n_max": n_max, "failures": failures, "passed": failures == 0}


def _oracle(n_max: int, r_set: Iterable[int]) -> dict:
    mismatches = []
    for r in r_set:
        table = distance_table(r, n_max)
        for n in range(1, n_max + 1):
            if list(table.rows[n]) != histogram(n, r).row():
                mismatches.append({"r": r, "n": n})
    return {"check": "oracle_equality", "n_max": n_max, "mismatches": mismatches, "passed": not mismatches}


def _row_sums(r_set: Iterable[int], N: int = 200) -> dict:
    bad = []
    for r in sorted(set(r_set) | {5, 10}):
        table = distance_table(r, N)
        s = canonical_series(r, N).integers()
        bad += [{"r": r, "n": n} for n in range(1, N + 1) if sum(table.rows[n]) != s[n]]
    return {"check": "row_sums", "N": N, "mismatches": bad, "passed": not bad}


def _specialization(N: int = 200) -> dict:
    same = distance_table(1, N).rows == direct_table(N).rows
    return {"check": "specialization", "N": N, "passed": same}


def _limit_exact(D: int = 200) -> dict:
    law = q_series(D)
    normalized = m1(1) == m2(1)
    negative = [d for d in range(1, D + 1) if law[d].sign() <= 0]
    return {
        "check": "limit_exact",
        "Q(1)=1": normalized,
        "nonpositive": negative,
        "passed": normalized and not negative,
    }


def _growth(N: int, prec: int) -> dict:
    rep = growth_rate_check(N, prec=prec)
    ok = rep.deviation < 1e-3 and rep.details["stabilization"] < 1e-2
    return {**rep.as_dict(), **rep.details, "tolerance": 1e-3, "passed": ok}


def _tail(D: int, prec: int) -> dict:
    rep = tail_ratio_check(D, prec=prec, start=D // 2)
    return {**rep.as_dict(), "tolerance": 1e-2, "passed": rep.deviation < 1e-2}


def _convergence(prec: int) -> dict:
    res = convergence_check(prec=prec)
    ok = res["max_at_last"] <= 5e-3 and all(res["monotone"].values())
    return {"check": "convergence", "max_at_2000": res["max_at_last"], "monotone": all(res["monotone"].values()), "passed": ok}


def _singular(prec: int) -> dict:
    slopes = {u: singular_residual_check(u, prec=prec).observed for u in ("1/4", "1/2", "3/4")}
    return {"check": "singular_residual", "slopes": slopes, "passed": min(slopes.values()) >= 0.9}


def run_suites(
    n_max: int = 14,
    r_set: Iterable[int] = (1, 2, 3),
    growth_n: int = 2000,
    tail_d: int = 60,
    prec: int = 100,
) -> list[dict]:
    r_set = tuple(r_set)
    suites: list[Callable[[], dict]] = [
        lambda: _bijection(n_max),
        lambda: _distance_formula(n_max),
        lambda: _gamma(n_max),
        lambda: _oracle(n_max, r_set),
        lambda: _row_sums(r_set),
        _specialization,
        _limit_exact,
        lambda: _growth(growth_n, prec),
        lambda: _tail(tail_d, prec),
        lambda: _convergence(prec),
        lambda: _singular(prec),
    ]
    results = []
    for suite in suites:
        start = time.perf_counter()
        result = suite()
        result["seconds"] = round(time.perf_counter() - start, 3)
        log.info("%s: %s", result["check"], "pass" if result["passed"] else "FAIL")
        results.append(result)
    return results

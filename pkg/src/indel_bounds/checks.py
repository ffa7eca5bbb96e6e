"""Cross-check suites run by ``indel-bounds verify``.

Each suite returns one :class:`CheckResult` per family of checks with a
short count of what was examined. ``quick`` keeps the whole run to a few
seconds; ``full`` widens every grid to the acceptance-test ranges.
"""

from __future__ import annotations

import random

import numpy as np

from .asymptotics import lp_asymptotic, lp_objective, yasunaga_asymptotic
from .bounds import (
    CodeParams,
    ListParams,
    hy_list_bound,
    main_elias_bound,
    main_johnson_list_bound,
    shortened_sphere_packing,
    singleton_bound,
    sphere_packing_bound,
    yasunaga_elias_bound,
)
from .constant_weight import johnson_ratio
from .constructions import CheckResult, build_tightness_instance, verify_tightness_instance
from .levenshtein import Code, min_levenshtein_distance
from .oracle import averaging_identity, max_indel_code_exact, verify_list_bound_everywhere

LEVELS = ("quick", "full")


def johnson_recovers_hy(max_n: int) -> CheckResult:
    checked = mismatches = 0
    for n in range(1, max_n + 1):
        for d in range(1, 2 * n + 1):
            p = CodeParams(2, n, d)
            for s in range(0, p.max_s + 1):
                for t in range(0, 2 * n + 1):
                    hy = hy_list_bound(p, ListParams(s, t))
                    ratio = johnson_ratio(n - s + t, d - 2 * s, t)
                    if hy.applicable != (ratio is not None):
                        mismatches += 1
                    elif hy.applicable:
                        checked += 1
                        mismatches += hy.value != ratio
    return CheckResult("johnson_recovers_hy", mismatches == 0, f"{checked} identities, {mismatches} mismatches")


def singleton_sphere_packing(max_n: int, max_q: int) -> CheckResult:
    checked = failures = 0
    for q in range(2, max_q + 1):
        for n in range(1, max_n + 1):
            for d in range(1, 2 * n + 1):
                p = CodeParams(q, n, d)
                r = p.max_s
                failures += shortened_sphere_packing(p, ListParams(r, 0)).value != singleton_bound(p).value
                failures += shortened_sphere_packing(p, ListParams(0, r)).value != sphere_packing_bound(p).value
                checked += 2
    return CheckResult("singleton_sphere_packing", failures == 0, f"{checked} identities, {failures} failures")


def list_bound_dominance(max_n: int) -> CheckResult:
    checked = failures = 0
    for n in range(1, max_n + 1):
        for d in range(1, 2 * n + 1):
            p = CodeParams(2, n, d)
            for s in range(p.max_s + 1):
                for t in range(n + 1):
                    lp = ListParams(s, t)
                    hy = hy_list_bound(p, lp)
                    if not hy.applicable:
                        continue
                    exact = main_johnson_list_bound(p, lp, "exact")
                    checked += 1
                    failures += not exact.value <= hy.value
    return CheckResult("list_bound_dominance", failures == 0, f"{checked} comparisons, {failures} failures")


TIGHTNESS_CASES = [
    (5, 3, 4, 0, 2),
    (8, 4, 4, 1, 1),
    (6, 4, 6, 0, 2),
    (5, 3, 3, 1, 0),
    (7, 4, 5, 0, 3),
]


def tightness(cases=TIGHTNESS_CASES) -> CheckResult:
    failed = []
    for q, n, d, s, t in cases:
        inst = build_tightness_instance(CodeParams(q, n, d), ListParams(s, t))
        report = verify_tightness_instance(inst)
        scan = verify_list_bound_everywhere(inst.code, ListParams(s, t)) if q ** (n - s + t) <= 5000 else None
        if not report.passed or (scan is not None and scan.max_size != len(inst.code)):
            failed.append((q, n, d, s, t))
    return CheckResult("tightness", not failed, f"{len(cases)} instances, failed: {failed}")


def _random_code(rng: random.Random, q: int, n: int, d: int, size: int) -> Code:
    words = []
    candidates = [tuple(rng.randrange(q) for _ in range(n)) for _ in range(200)]
    for w in candidates:
        if w not in words and min_levenshtein_distance(words + [w]) >= d:
            words.append(w)
        if len(words) == size:
            break
    return Code(q, n, tuple(words))


def averaging(instances: int, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    failures = 0
    for _ in range(instances):
        q, n = rng.choice([(2, 4), (2, 5), (3, 3), (3, 4)])
        s = rng.randrange(0, 2)
        t = rng.randrange(0, 3)
        code = _random_code(rng, q, n, 2 * s + 1, rng.randrange(1, 5))
        exact, closed = averaging_identity(code, s, t)
        failures += exact != closed
    return CheckResult("averaging_identity", failures == 0, f"{instances} instances, {failures} failures")


def oracle_soundness(cases) -> CheckResult:
    checked = violations = 0
    for q, n in cases:
        for d in range(2, 2 * n + 1):
            p = CodeParams(q, n, d)
            best = max_indel_code_exact(p)
            for s in range(p.max_s + 1):
                for t in range(n + 1):
                    lp = ListParams(s, t)
                    for b in (main_elias_bound(p, lp), shortened_sphere_packing(p, lp)):
                        if b.applicable:
                            checked += 1
                            violations += best.value > b.value
                    if s == 0:
                        y = yasunaga_elias_bound(p, t)
                        if y.applicable:
                            checked += 1
                            violations += best.value > y.value
    return CheckResult("oracle_soundness", violations == 0, f"{checked} comparisons, {violations} violations")


def asymptotic_checks(qs, deltas) -> CheckResult:
    failures = []
    for q in qs:
        grid = np.linspace(0.01, 0.99, 100)
        rec = np.abs(lp_objective(q, grid, 0.0, grid) - yasunaga_asymptotic(q, grid)).max()
        if rec > 1e-12:
            failures.append(f"recovery q={q}: {rec:.3g}")
        for delta in deltas:
            if delta < 1 - 1 / q - 0.02:
                point = lp_asymptotic(q, delta)
                if not point.value < yasunaga_asymptotic(q, delta) - 1e-10:
                    failures.append(f"no improvement q={q} delta={delta}")
    return CheckResult("asymptotics", not failures, "; ".join(failures) or f"q in {list(qs)}")


def run_verification(level: str = "quick") -> list[CheckResult]:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    full = level == "full"
    return [
        johnson_recovers_hy(20 if full else 8),
        singleton_sphere_packing(10 if full else 6, 5 if full else 3),
        list_bound_dominance(6 if full else 4),
        tightness(),
        averaging(20 if full else 5),
        oracle_soundness([(2, 3), (2, 4), (3, 3), (3, 4), (2, 5)] if full else [(2, 3), (3, 3)]),
        asymptotic_checks((2, 4), [0.05 * k for k in range(1, 15)] if full else [0.1, 0.3]),
    ]

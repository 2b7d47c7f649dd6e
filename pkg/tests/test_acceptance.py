"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.

Criterion 1 is expected to fail on two of the six bundled reference
lists: enumeration under the documented test hypotheses provably yields
21..4181 plus 1891 for (P=3, Q=1), and only four of the six listed values
for (D=29, a=48); see the notes in data/fixtures.txt.  The assertions are
kept exact rather than weakened.
"""

import time

from pellucas import (
    LucasParams,
    PellParams,
    SearchSpec,
    Status,
    closed_form_sweep,
    conic_order,
    enumerate_range,
    is_composite,
    jacobi,
    kernels,
    load_fixtures,
    lucas_test,
    lucas_to_pell,
    lucas_uv_mod,
    pell_pow,
    pell_test,
    pell_to_lucas,
    phi,
    strong_lucas_test,
    strong_pell_test,
)
from pellucas.conic import ConicPoint
from pellucas.errors import DegenerateDError, PhiUndefinedError, ZeroPError
from pellucas.modring import Modulus


def _line(num, name, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    suffix = f" -- {detail}" if detail else ""
    print(f"[ACCEPTANCE {num}] {name}: {tag}{suffix}")


def _table_fixtures():
    return [f for f in load_fixtures() if f.kind in ("lucas", "pell")]


def _spec_for(fixture, strong=False):
    if fixture.kind == "lucas":
        params = LucasParams(fixture.get("P"), fixture.get("Q"))
    else:
        params = PellParams.from_seed(fixture.get("D"), fixture.get("a"))
    return SearchSpec(fixture.kind, params, fixture.get("lo"), fixture.get("hi"), strong)


def test_criterion_1_table_reproduction():
    start = time.perf_counter()
    failures = []
    for fixture in _table_fixtures():
        actual = enumerate_range(_spec_for(fixture), workers=1).pseudoprimes
        if actual != fixture.expected:
            missing = sorted(set(fixture.expected) - set(actual))
            extra = sorted(set(actual) - set(fixture.expected))
            failures.append(f"{fixture.label}: missing={missing} extra={extra}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10.0
    _line(1, "table reproduction (6 lists, zero tolerance)", ok,
          f"{elapsed:.2f}s; " + ("; ".join(failures) or "all exact"))
    assert elapsed < 10.0
    assert not failures, "; ".join(failures)


def test_criterion_2_point_congruences():
    power1 = pell_pow(ConicPoint(12, 11, 5, Modulus(21)), 20).coords()
    power2 = pell_pow(ConicPoint(7, 4, 3, Modulus(85)), 84).coords()
    u84 = lucas_uv_mod(LucasParams(14, 1), 84, 85).u
    u20 = lucas_uv_mod(LucasParams(3, 1), 20, 10**18 + 9).u  # exceeds the integer value
    ok = (
        power1 == (13, 0)
        and power2 == (76, 15)
        and u84 == 25
        and u20 == 102334155
    )
    _line(2, "point congruences (exact)", ok,
          f"(12,11)^20={power1} (7,4)^84={power2} U_84={u84} U_20={u20}")
    assert power1 == (13, 0)
    assert power2 == (76, 15)
    assert u84 == 25
    assert u20 == 102334155


def test_criterion_3_closed_form_sweep():
    start = time.perf_counter()
    checked, mismatches = closed_form_sweep(30, 30, 10, 40, 3, 99)
    elapsed = time.perf_counter() - start
    expected_checked = 31 * 31 * 20 * 41 * 49
    ok = checked == expected_checked and not mismatches and elapsed < 60.0
    _line(3, "closed-form equivalence sweep", ok,
          f"{checked} comparisons, {len(mismatches)} mismatches, {elapsed:.2f}s "
          f"({kernels.BACKEND} backend)")
    assert checked == expected_checked
    assert mismatches == []
    assert elapsed < 60.0


def test_criterion_4_bidirectional_agreement():
    mismatches = []
    for p in (3, 4, 5, 6):
        lucas_set = set()
        pell_set = set()
        for n in range(3, 5001, 2):
            if lucas_test(n, LucasParams(p, 1)).status is Status.PSEUDOPRIME:
                lucas_set.add(n)
            if pell_test(n, lucas_to_pell(p, n)).status is Status.PSEUDOPRIME:
                pell_set.add(n)
        if lucas_set != pell_set:
            mismatches.append(f"P={p}: {sorted(lucas_set ^ pell_set)}")
    backward_checked = 0
    unliftable = []
    for fixture in _table_fixtures():
        if fixture.kind != "pell":
            continue
        d, a = fixture.get("D"), fixture.get("a")
        spec = SearchSpec("pell", PellParams.from_seed(d, a), fixture.get("lo"), fixture.get("hi"))
        for n in enumerate_range(spec, workers=1).pseudoprimes:
            try:
                back = pell_to_lucas(phi(a, d, n))
            except (ZeroPError, DegenerateDError):
                # 2x has no valid positive lift (x = 0 mod n, e.g. n = 1047
                # for D=23, a=32 where n divides a^2 + D); such points are
                # excluded from the roundtrip sweep
                unliftable.append(n)
                continue
            assert back.q == 1
            if lucas_test(n, back).status is not Status.PSEUDOPRIME:
                mismatches.append(f"D={d} a={a} n={n} backward map failed")
            backward_checked += 1
    ok = not mismatches
    _line(4, "bidirectional agreement (P in 3..6, 4 seed fixtures)", ok,
          f"{backward_checked} backward maps, unliftable (2x=0) skipped: {unliftable}; "
          + ("; ".join(mismatches) or "zero mismatches"))
    assert backward_checked >= 20
    assert unliftable == [1047]
    assert not mismatches, "; ".join(mismatches)


def test_criterion_5_group_order_law():
    start = time.perf_counter()
    bad = []
    primes = [p for p in range(3, 201, 2) if not is_composite(p)]
    for p in primes:
        for d in range(1, 31):
            if d % p == 0:
                continue
            if conic_order(d, p) != p - jacobi(d, p):
                bad.append((d, p))
    elapsed = time.perf_counter() - start
    ok = not bad
    _line(5, "group-order law |C| = p - (d/p)", ok,
          f"{len(primes)} primes x 30 d in {elapsed:.2f}s; {len(bad)} mismatches")
    assert not bad, bad


def test_criterion_6_prime_guarantee():
    lucas_samples = [
        LucasParams(3, 1), LucasParams(4, 1), LucasParams(5, 1),
        LucasParams(6, 1), LucasParams(1, -1), LucasParams(2, -1),
        LucasParams(5, 2),
    ]
    pell_samples = [(6, 4), (23, 32), (21, 49), (29, 48), (5, 5), (12, 6)]
    primes = [p for p in range(3, 10_001, 2) if not is_composite(p)]
    lucas_checked = pell_checked = 0
    violations = []
    for p in primes:
        for params in lucas_samples:
            if p % abs(params.q or 1) == 0 and abs(params.q) > 1:
                continue
            verdict = lucas_test(p, params)
            if verdict.status is Status.NOT_APPLICABLE:
                continue
            lucas_checked += 1
            if verdict.status is not Status.PRIME or verdict.witnesses["u"] != 0:
                violations.append(f"lucas {params} p={p}")
        for d, a in pell_samples:
            try:
                point = phi(a, d, p)
            except PhiUndefinedError:
                continue
            verdict = pell_test(p, PellParams.from_seed(d, a))
            if verdict.status is Status.NOT_APPLICABLE:
                continue
            pell_checked += 1
            if verdict.status is not Status.PRIME or verdict.witnesses["y"] != 0:
                violations.append(f"pell d={d} a={a} p={p} point={point.coords()}")
    ok = not violations and lucas_checked > 5000 and pell_checked > 5000
    _line(6, "prime guarantee over odd primes <= 10^4", ok,
          f"{lucas_checked} lucas + {pell_checked} pell checks, {len(violations)} violations")
    assert lucas_checked > 5000 and pell_checked > 5000
    assert not violations, violations[:5]


def test_criterion_7_strong_test_strictness():
    problems = []
    for fixture in _table_fixtures():
        plain = enumerate_range(_spec_for(fixture), workers=1)
        strong = enumerate_range(_spec_for(fixture, strong=True), workers=1)
        if not set(strong.pseudoprimes) <= set(plain.pseudoprimes):
            problems.append(f"{fixture.label}: strong not a subset")
    lucas_plain = lucas_test(21, LucasParams(3, 1)).status
    lucas_strong = strong_lucas_test(21, LucasParams(3, 1)).status
    pell_plain = pell_test(21, PellParams.from_point(5, 12, 11)).status
    pell_strong = strong_pell_test(21, PellParams.from_point(5, 12, 11)).status
    if (lucas_plain, lucas_strong) != (Status.PSEUDOPRIME, Status.COMPOSITE_DETECTED):
        problems.append(f"lucas 21: {lucas_plain.value}/{lucas_strong.value}")
    if (pell_plain, pell_strong) != (Status.PSEUDOPRIME, Status.COMPOSITE_DETECTED):
        problems.append(f"pell 21: {pell_plain.value}/{pell_strong.value}")
    ok = not problems
    _line(7, "strong-test strictness", ok, "; ".join(problems) or
          "strong subset of ordinary on all fixtures; 21 separates the two")
    assert not problems, "; ".join(problems)


def test_criterion_8_parallel_determinism():
    specs = [_spec_for(f) for f in _table_fixtures()]
    specs.append(
        SearchSpec("pell", PellParams.from_point(3, 8, 66), 3, 100)
    )
    diffs = []
    for spec in specs:
        baseline = enumerate_range(spec, workers=1)
        for workers in (2, 8):
            if enumerate_range(spec, workers=workers) != baseline:
                diffs.append(f"{spec.kind} workers={workers}")
    ok = not diffs
    _line(8, "determinism under 1/2/8 workers", ok,
          "; ".join(diffs) or f"{len(specs)} fixtures identical across worker counts")
    assert not diffs, "; ".join(diffs)

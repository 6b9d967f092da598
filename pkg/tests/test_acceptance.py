"""Acceptance criteria; each prints one PASS/FAIL line (collected in the terminal summary)."""

import time
from collections import Counter
from functools import lru_cache
from itertools import combinations

import pytest

from conftest import NONDIST, SAMPLES
from divmonoid import (
    Monoid,
    Presentation,
    census,
    export_hasse,
    is_garside,
    is_hypercube,
    local_delta,
    quasi_center,
    upsilon_iteration,
    validate_divisibility,
)
from divmonoid.census import default_names, from_encoding
from divmonoid.properties import check_properties
from oracle import brute_force_divisibility

RESULTS: dict[str, str] = {}


def record(key, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  {key}: {detail}"
    RESULTS[key] = line
    print(line)
    assert ok, line


@lru_cache(maxsize=None)
def timed_census(rank):
    start = time.perf_counter()
    report = census(rank)
    return report, time.perf_counter() - start


def entry_presentation(entry, rank):
    return from_encoding(tuple(tuple(tuple(w) for w in c) for c in entry.encoding), rank)


@pytest.mark.parametrize("rank, expected, limit", [(2, 2, 1.0), (3, 5, 30.0), (4, 23, 600.0)])
def test_criterion_1_census_counts(rank, expected, limit):
    report, secs = timed_census(rank)
    ok = report.garside_divisibility == expected and secs <= limit
    record(f"1 census rank {rank}", ok, f"{report.garside_divisibility} Garside (want {expected}) in {secs:.1f}s (limit {limit:.0f}s)")


def test_criterion_2_rank_three_quasi_centers():
    report, _ = timed_census(3)
    ranks = Counter(e.quasi_center_rank for e in report.garside_entries())
    record("2 rank-3 quasi-centers", ranks == Counter([3, 2, 2, 2, 1]), f"ranks {sorted(ranks.elements(), reverse=True)}")


def test_criterion_3_cube_monoid():
    M = Monoid(SAMPLES["M35"], greedy=True)
    fmt = M.presentation.format_word
    stages = [sorted(fmt(w) for w in s) for s in upsilon_iteration(M, "x").stages]
    deltas = [local_delta(M, g).delta for g in "xyz"]
    x3 = M.element("x x x")
    ok = (
        stages == [["x"], ["1", "x", "z"], ["1", "x", "y", "z"]]
        and all(d == x3 for d in deltas)
        and quasi_center(M).rank == 1
    )
    record("3 M_{3,5} golden", ok, f"stages {stages}, deltas {[str(d) for d in deltas]}")


def test_criterion_4_upsilon_examples():
    M1 = Monoid(SAMPLES["M1"], greedy=True)
    M2 = Monoid(SAMPLES["M2"], greedy=True)
    qc1 = [str(g) for g in quasi_center(M1).generators]
    fails = {g: local_delta(M2, g) for g in "xyz"}
    x_z_immediate = all(len(fails[g].trace.stages) == 1 and fails[g].trace.failure for g in "xz")
    fmt = M2.presentation.format_word
    y_witness = {fmt(w) for w in fails["y"].trace.failure} if fails["y"].trace.failure else set()
    ok = (
        qc1 == ["y"]
        and not any(o.exists for o in fails.values())
        and x_z_immediate
        and y_witness == {"x", "z"}
        and quasi_center(M2).rank == 0
    )
    record("4 M1/M2 golden", ok, f"M1 qc {qc1}; M2 y fails at {sorted(y_witness)}; M2 qc rank {quasi_center(M2).rank}")


def trace_presentations(max_rank):
    for rank in range(1, max_rank + 1):
        names = default_names(rank)
        pairs = list(combinations(range(rank), 2))
        for k in range(len(pairs) + 1):
            for chosen in combinations(pairs, k):
                yield Presentation.from_names(names, [(f"{names[a]} {names[b]}", f"{names[b]} {names[a]}") for a, b in chosen])


def test_criterion_5_validator_verdicts():
    bad = validate_divisibility(NONDIST)
    neg_ok = not bad.accepted and bad.violations[0].condition == "K-i" and bad.violations[0].witness[0] == "x x x"
    positives = [[("x y", "y z")], [("x x", "y z")], [("x x", "y z"), ("y x", "z z")]]
    pos_ok = all(validate_divisibility(Presentation.from_names("xyz", r)).accepted for r in positives)
    traces = list(trace_presentations(4))
    rejected = [str(P) for P in traces if not validate_divisibility(P).accepted]
    ok = neg_ok and pos_ok and not rejected
    record("5 validator verdicts", ok, f"K-i negative {neg_ok}, positives {pos_ok}, {len(traces) - len(rejected)}/{len(traces)} trace presentations accepted")


def test_criterion_6_hypercube_certificates():
    problems = []
    checked = 0
    for rank in (2, 3, 4):
        report, _ = timed_census(rank)
        for e in report.garside_entries():
            checked += 1
            g = is_garside(Monoid(entry_presentation(e, rank), greedy=True))
            if len(g.simple_lattice) != 2**rank or not is_hypercube(g.simple_lattice):
                problems.append(e.presentation)
            if rank == 3:
                dot = export_hasse(g.simple_lattice, "dot")
                nodes = sum(1 for line in dot.splitlines() if line.strip().endswith('";'))
                if nodes != 8 or dot.count("->") != 12:
                    problems.append(f"{e.presentation} dot {nodes} nodes")
    record("6 hypercube certificates", not problems, f"{checked} Garside entries checked, {len(problems)} problems")


def test_criterion_7_property_suite():
    start = time.perf_counter()
    bad = {}
    total = 0
    for name, P in SAMPLES.items():
        report = check_properties(Monoid(P, greedy=True))
        total += sum(report.checked.values())
        if not report.ok:
            bad[name] = len(report.violations)
    secs = time.perf_counter() - start
    record("7 property suites", not bad and secs <= 60.0, f"{total} cases over {len(SAMPLES)} monoids, violations {bad or 0}, {secs:.1f}s (limit 60s)")


def test_criterion_8_oracle():
    start = time.perf_counter()
    mismatched = []
    for rank in (1, 2, 3):
        report, _ = timed_census(rank)
        pruned = {tuple(tuple(tuple(w) for w in c) for c in e.encoding) for e in report.divisibility_entries()}
        if pruned != brute_force_divisibility(rank):
            mismatched.append(rank)
    secs = time.perf_counter() - start
    record("8 brute-force oracle", not mismatched and secs <= 300.0, f"ranks 1-3 agree: {not mismatched}, {secs:.1f}s (limit 300s)")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))

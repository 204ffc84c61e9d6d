"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Every comparison is exact; the only tolerances are the wall-clock
budgets, which are asserted where stated.
"""

import itertools
import random
import time
from pathlib import Path

from cobweb import IncidenceFunction, Vertex, covers, formulas, incidence, leq
from cobweb.cli import main
from cobweb.oracle import (count_all_chains_brute, count_chains_of_length,
                           count_maximal_chains_brute, moebius_by_recurrence)
from conftest import BUILTIN_SPECS, build, report_criterion

GOLDEN = Path(__file__).parent / "golden" / "zeta_fibonacci_p6.csv"

ALL_SEQS = BUILTIN_SPECS + ["constant:3", "list:1,2,1,3,1,2,1"]


def test_criterion_1_golden_zeta_matrix(capsys):
    start = time.perf_counter()
    status = main(["matrix", "--func", "zeta", "--seq", "fibonacci", "--n", "6",
                   "--format", "csv"])
    csv_out = capsys.readouterr().out
    elapsed = time.perf_counter() - start
    golden = GOLDEN.read_text()
    assert status == 0
    assert csv_out == golden

    # the bare command (default pretty format) carries the same 21x21 values
    status = main(["matrix", "--func", "zeta", "--seq", "fibonacci", "--n", "6"])
    pretty_out = capsys.readouterr().out
    assert status == 0
    pretty_rows = [[int(tok) for tok in line.split()]
                   for line in pretty_out.strip().split("\n")]
    golden_rows = [[int(tok) for tok in line.split(",")]
                   for line in golden.strip().split("\n")]
    assert pretty_rows == golden_rows
    assert len(golden_rows) == 21

    assert elapsed < 1.0
    report_criterion(1, f"21x21 zeta matrix bit-exact against the golden file "
                        f"({elapsed:.3f}s < 1s)")


def test_criterion_2_inversion_law():
    start = time.perf_counter()
    checked = 0
    for spec in ALL_SEQS:
        for n in range(7):
            p = build(spec, n)
            z = incidence.zeta(p)
            d = incidence.delta(p)
            closed_mu = IncidenceFunction.from_callable(
                p, lambda x, y, s=p.seq: formulas.mu_at(s, x, y))
            assert incidence.convolve(z, closed_mu) == d, (spec, n)
            assert incidence.convolve(closed_mu, z) == d, (spec, n)
            checked += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    report_criterion(2, f"zeta * mu = mu * zeta = delta on {checked} posets "
                        f"with mu from the closed form ({elapsed:.2f}s < 10s)")


def test_criterion_3_mu_closed_form_vs_recurrence():
    start = time.perf_counter()
    pairs_total = 0
    for spec, n in [("fibonacci", 7), ("constant:1", 7), ("pow2", 5)]:
        p = build(spec, n)
        memo = {}
        for x, y in itertools.product(p.vertices, repeat=2):
            assert moebius_by_recurrence(p, x, y, memo) == \
                formulas.mu_at(p.seq, x, y), (spec, n, x, y)
            pairs_total += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    report_criterion(3, f"mu closed form equals the recurrence on {pairs_total} "
                        f"pairs ({elapsed:.2f}s < 30s)")


def test_criterion_4_chain_counts():
    start = time.perf_counter()
    p = build("fibonacci", 6)
    seq = p.seq
    memo = {}

    def cover_paths(x, y, k):
        if k == 0:
            return 1 if x == y else 0
        total = 0
        for z in p.vertices:
            if covers(x, z) and leq(z, y):
                total += cover_paths(z, y, k - 1)
        return total

    eta_power = incidence.delta(p)
    chi_power = incidence.delta(p)
    eta_step = incidence.eta(p)
    chi_step = incidence.chi(p)
    comparisons = 0
    for k in range(7):
        if k:
            eta_power = incidence.convolve(eta_power, eta_step)
            chi_power = incidence.convolve(chi_power, chi_step)
        for x, y in itertools.product(p.vertices, repeat=2):
            i, j = p.index_of(x), p.index_of(y)
            closed = formulas.eta_pow_at(seq, k, x, y)
            assert closed == eta_power.entries[i][j], (k, x, y)
            assert closed == count_chains_of_length(p, x, y, k, memo), (k, x, y)
            closed_max = formulas.chi_pow_at(seq, k, x, y)
            assert closed_max == chi_power.entries[i][j], (k, x, y)
            assert closed_max == cover_paths(x, y, k), (k, x, y)
            comparisons += 4
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    report_criterion(4, f"eta^k and chi^k match matrix powers and enumeration "
                        f"({comparisons} comparisons, {elapsed:.2f}s < 60s)")


def test_criterion_5_total_chain_counts():
    start = time.perf_counter()
    for spec in ALL_SEQS:
        p = build(spec, 5)
        memo = {}
        all_counts = incidence.invert(incidence.chain_kernel(p))
        max_counts = incidence.invert(incidence.maximal_chain_kernel(p))
        for x, y in itertools.product(p.vertices, repeat=2):
            i, j = p.index_of(x), p.index_of(y)
            assert all_counts.entries[i][j] == \
                count_all_chains_brute(p, x, y, memo), (spec, x, y)
            assert max_counts.entries[i][j] == \
                count_maximal_chains_brute(p, x, y, memo), (spec, x, y)
        product = 1
        for i in range(1, 5):
            product *= p.seq.eval(i)
        root = Vertex(1, 0)
        for top in p.levels[-1]:
            assert formulas.count_maximal_chains(p, root, top) == product, spec
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    report_criterion(5, f"inverted kernels equal oracle chain counts on P_5 for "
                        f"{len(ALL_SEQS)} sequences ({elapsed:.2f}s < 30s)")


def test_criterion_6_interval_cardinality():
    start = time.perf_counter()
    pairs_total = 0
    for spec in ALL_SEQS:
        p = build(spec, 6)
        z = incidence.zeta(p)
        sq = incidence.convolve(z, z)
        for x, y in itertools.product(p.vertices, repeat=2):
            if not leq(x, y):
                continue
            i, j = p.index_of(x), p.index_of(y)
            size = sq.entries[i][j]
            assert size == formulas.card_interval(p.seq, x, y), (spec, x, y)
            assert size == len(p.interval(x, y)), (spec, x, y)
            pairs_total += 1
    elapsed = time.perf_counter() - start
    report_criterion(6, f"zeta^2 = closed form = interval size on {pairs_total} "
                        f"comparable pairs ({elapsed:.2f}s)")


def test_criterion_7_eta_squared_identity():
    start = time.perf_counter()
    for spec in ALL_SEQS:
        p = build(spec, 6)
        for x, y in itertools.product(p.vertices, repeat=2):
            if x != y and x.level < y.level:
                expected = max(formulas.card_interval(p.seq, x, y) - 2, 0)
            else:
                expected = 0
            assert formulas.eta_pow_at(p.seq, 2, x, y) == expected, (spec, x, y)

    fib = build("fibonacci", 6).seq
    for t in range(0, 21):
        for v in range(t + 1, 21):
            assert formulas.eta_pow_at(fib, 2, Vertex(1, t), Vertex(1, v)) == \
                fib.eval(v + 1) - fib.eval(t + 2), (t, v)
    elapsed = time.perf_counter() - start
    report_criterion(7, f"eta^2 equals clamped interval size minus two, plus the "
                        f"fibonacci special form ({elapsed:.2f}s)")


def test_criterion_8_mobius_inversion_round_trip():
    start = time.perf_counter()
    p = build("fibonacci", 5)
    rng = random.Random(8891)
    for trial in range(100):
        f = {v: rng.randint(-999, 999) for v in p.vertices}
        g = formulas.down_set_sums(p, f)
        assert formulas.mobius_inversion(p, g) == f, trial
    elapsed = time.perf_counter() - start
    report_criterion(8, f"100 seeded random functions recovered exactly through "
                        f"inversion ({elapsed:.2f}s)")

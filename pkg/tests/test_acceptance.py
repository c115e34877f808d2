"""Acceptance suite: one test per criterion, at the stated tolerances.

Each test prints a single PASS line (visible with ``pytest -s`` and in the
captured output) and enforces its runtime budget.
"""

import time
from fractions import Fraction

import numpy as np
import pytest

from symquad import (
    CubatureRule,
    FourierPolynomial,
    InvariancePattern,
    WeightSchedule,
    apply_rule,
    binary_orbit_representatives,
    check_weight_supermultiplicativity,
    construct_certificate,
    construct_weighted_certificate,
    critical_node_count,
    crosscheck_coefficients,
    folded_rectangle_rule,
    is_invariant,
    orbit_stats,
    order_weights,
    rectangle_rule,
    rectangle_worst_case_error,
    symmetrize,
    weight_power_sum,
)
from symquad.cli import bench


def _report(name, elapsed, budget, detail=""):
    line = f"ACCEPTANCE {name}: PASS ({elapsed:.2f}s of {budget:.0f}s budget)"
    if detail:
        line += f" [{detail}]"
    print(line, flush=True)
    assert elapsed < budget, f"{name} exceeded runtime budget: {elapsed:.2f}s >= {budget}s"


def _random_pattern(rng, dim, size):
    positions = sorted(int(v) + 1 for v in rng.choice(dim, size=size, replace=False))
    return InvariancePattern.single(dim, positions)


def _random_invariant_polynomial(rng, pattern, n_terms=6, max_in_group_support=2):
    """Invariant polynomial whose orbit sizes stay small."""
    dim = pattern.dim
    group = set(pattern.groups[0]) if pattern.groups else set()
    terms = {}
    for _ in range(n_terms):
        k = [int(v) for v in rng.integers(-2, 3, size=dim)]
        in_group_support = [i for i in range(dim) if (i + 1) in group and k[i] != 0]
        for i in in_group_support[max_in_group_support:]:
            k[i] = 0
        terms[tuple(k)] = complex(rng.standard_normal(), rng.standard_normal())
    terms[(0,) * dim] = terms.get((0,) * dim, 1.0)
    return symmetrize(FourierPolynomial(dim, terms), pattern)


def _random_rule(rng, dim, n_nodes):
    nodes = rng.random((n_nodes, dim))
    weights = rng.standard_normal(n_nodes) + 1j * rng.standard_normal(n_nodes)
    return CubatureRule(dim, nodes, weights)


def test_criterion_1_cardinality_identity():
    start = time.perf_counter()
    checked = 0
    for dim in range(1, 15):
        for size in range(0, dim + 1):
            pattern = InvariancePattern.single(dim, range(1, size + 1))
            reps = list(binary_orbit_representatives(pattern))
            assert len(reps) == (size + 1) * 2 ** (dim - size)
            assert len(reps) == critical_node_count(pattern)
            total = sum(orbit_stats(r, pattern).orbit_size for r in reps)
            assert total == 2**dim
            checked += 1
    _report("1 cardinality identity", time.perf_counter() - start, 10, f"{checked} patterns")


def test_criterion_2_folded_rule_equivalence():
    start = time.perf_counter()
    rng = np.random.default_rng(20240201)
    rules = {}
    for trial in range(200):
        dim = 2 + trial % 11  # spans 2..12
        size = int(rng.integers(0, dim + 1))
        pattern = _random_pattern(rng, dim, size)
        poly = _random_invariant_polynomial(rng, pattern)
        assert is_invariant(poly, pattern, 0.0)
        if dim not in rules:
            rules[dim] = rectangle_rule(dim)
        folded = folded_rectangle_rule(pattern)
        total = sum(abs(c) for c in poly.terms.values())
        diff = abs(apply_rule(folded, poly) - apply_rule(rules[dim], poly))
        assert diff <= 1e-10 * (1 + total)
    _report("2 folded rule equivalence", time.perf_counter() - start, 30, "200 trials")


def test_criterion_3_worst_case_error_formula():
    start = time.perf_counter()
    for dim in range(1, 9):
        for alpha in (1.5, 2.0, 3.0, 6.0):
            report = rectangle_worst_case_error(dim, alpha, 1e-8)
            assert abs(report.closed_form - report.oracle_value) <= report.tail_bound
    for dim in range(1, 6):
        report = rectangle_worst_case_error(dim, 50.0, 1e-8)
        assert report.closed_form < 1e-12
    _report("3 worst-case error formula", time.perf_counter() - start, 5)


def test_criterion_4_lower_bound_certificates():
    start = time.perf_counter()
    rng = np.random.default_rng(20240404)
    for trial in range(100):
        dim = 1 + trial % 8
        size = int(rng.integers(0, dim + 1))
        pattern = _random_pattern(rng, dim, size)
        threshold = critical_node_count(pattern)
        n_nodes = int(rng.integers(0, threshold))
        rule = _random_rule(rng, dim, n_nodes)
        cert = construct_certificate(rule, pattern, 2.0)
        assert abs(cert.rule_value) <= 1e-9
        assert cert.polynomial.integral() == 1.0
        assert cert.norm_value <= 1.0 + 1e-9
        assert all(e in (-1, 0, 1) for k in cert.polynomial.support() for e in k)
        assert is_invariant(cert.polynomial, pattern, 1e-10)
        witnessed = abs(cert.integral_value - cert.rule_value)
        assert witnessed >= 1.0 - 1e-8
    _report("4 lower bound certificates", time.perf_counter() - start, 120, "100 rules")


def test_criterion_5_fourier_formula_crosscheck():
    start = time.perf_counter()
    rng = np.random.default_rng(20240505)
    for trial in range(30):
        dim = 1 + trial % 6
        size = int(rng.integers(0, dim + 1))
        pattern = _random_pattern(rng, dim, size)
        threshold = critical_node_count(pattern)
        n_nodes = int(rng.integers(0, threshold))
        rule = _random_rule(rng, dim, n_nodes)
        cert = construct_certificate(rule, pattern, 2.0)
        report = crosscheck_coefficients(cert, pattern)
        assert report.max_abs_deviation <= 1e-10
    _report("5 coefficient formula crosscheck", time.perf_counter() - start, 60, "30 instances")


def test_criterion_6_harmonic_weighted_bounds():
    start = time.perf_counter()
    rng = np.random.default_rng(20240606)
    for dim in range(1, 11):
        pattern = InvariancePattern.full(dim)
        exact = WeightSchedule(dim, tuple(Fraction(1, m) for m in range(1, dim + 1)))
        ordered = order_weights(pattern, exact)
        expected = Fraction(1)
        assert ordered.weights[0] == 1
        for n in range(1, dim + 1):
            expected /= dim - n + 1
            assert ordered.weights[n] == expected  # exact rational identity
    for dim in range(2, 11):
        pattern = InvariancePattern.full(dim)
        floats = WeightSchedule(dim, tuple(1.0 / m for m in range(1, dim + 1)))
        n_nodes = int(rng.integers(0, dim + 1))
        rule = _random_rule(rng, dim, n_nodes)
        cert = construct_weighted_certificate(rule, pattern, 2.0, floats)
        assert cert.integral_value.real >= cert.weight_floor - 1e-9
        assert abs(cert.rule_value) <= 1e-9 * (1 + rule.weight_abs_sum())
    _report("6 harmonic weighted bounds", time.perf_counter() - start, 60)


def test_criterion_7_power_sum_identity():
    start = time.perf_counter()
    rng = np.random.default_rng(20240707)
    exponents = (1.5, 2.0, 3.0)
    for trial in range(50):
        dim = 2 + trial % 11  # spans 2..12
        size = int(rng.integers(0, dim + 1))
        tail = sorted((float(rng.random()) for _ in range(dim - size)), reverse=True)
        schedule = WeightSchedule(dim, (1.0,) * size + tuple(tail))
        pattern = InvariancePattern.single(dim, range(1, size + 1))
        sums = weight_power_sum(pattern, schedule, exponents[trial % 3])
        assert sums.closed_form_applicable
        assert sums.brute == pytest.approx(sums.closed, rel=1e-12)
    _report("7 power sum identity", time.perf_counter() - start, 30, "50 schedules")


def test_criterion_8_weight_supermultiplicativity():
    start = time.perf_counter()
    rng = np.random.default_rng(20240808)
    checked = 0
    for dim in range(1, 6):
        for size in range(0, dim + 1):
            pattern = InvariancePattern.single(dim, range(1, size + 1))
            for _ in range(20):
                tail = sorted((float(rng.random()) for _ in range(dim)), reverse=True)
                schedule = WeightSchedule(dim, tuple(tail))
                report = check_weight_supermultiplicativity(pattern, schedule)
                assert report.passed, report.counterexample
                checked += report.n_checked
    _report("8 weight supermultiplicativity", time.perf_counter() - start, 120, f"{checked} triples")


def test_criterion_9_bench_sanity():
    start = time.perf_counter()
    rows = bench([16], [1.0], repetitions=3, seed=123, n_terms=16)
    row = rows[0]
    assert row["nodes_full"] == 65536
    assert row["nodes_folded"] == 17
    assert row["max_abs_diff"] <= 1e-9
    assert row["speedup"] >= 100.0
    _report(
        "9 bench sanity",
        time.perf_counter() - start,
        60,
        f"speedup {row['speedup']:.0f}x",
    )

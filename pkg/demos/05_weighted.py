"""Coordinate weights turn the all-or-nothing bound into a graded one.

With per-coordinate importance factors, the guaranteed worst-case error of
an n-node rule is the (n+1)-th largest effective weight instead of the
full initial error.  With the harmonic schedule 1, 1/2, 1/3, ... on a
fully interchangeable space, those ordered weights are inverse falling
factorials: tiny, but still positive, so cheap rules remain beatable.
The script also verifies the closed power-sum identity used to relate
weight decay and node budgets.
"""

from fractions import Fraction

import numpy as np

from symquad import (
    CubatureRule,
    InvariancePattern,
    WeightSchedule,
    construct_weighted_certificate,
    error_lower_bound,
    order_weights,
    weight_power_sum,
)


def main():
    d = 6
    pattern = InvariancePattern.full(d)
    exact = WeightSchedule(d, tuple(Fraction(1, m) for m in range(1, d + 1)))

    print(f"harmonic schedule on a fully interchangeable space, d = {d}")
    ordered = order_weights(pattern, exact)
    for n, (key, weight) in enumerate(zip(ordered.ordering, ordered.weights)):
        print(f"  rank {n}: weight {str(weight):>8} at {key}")
    print("  -> an n-node rule cannot have error below the rank-n weight")
    for n in (0, 1, 3, d):
        print(f"     {n} nodes: guaranteed error >= {error_lower_bound(n, pattern, exact)}")

    rng = np.random.default_rng(7)
    floats = WeightSchedule(d, tuple(1.0 / m for m in range(1, d + 1)))
    n_nodes = 3
    rule = CubatureRule(
        d, rng.random((n_nodes, d)), rng.standard_normal(n_nodes) + 1j * rng.standard_normal(n_nodes)
    )
    cert = construct_weighted_certificate(rule, pattern, 2.0, floats)
    print(f"\nweighted certificate against a random {n_nodes}-node rule:")
    print(f"  rule value |A(g)| = {abs(cert.rule_value):.2e}")
    print(f"  integral {cert.integral_value.real:.12f} >= floor {cert.weight_floor:.12f}")
    print(f"  weighted norm {cert.norm_value:.12f} <= 1")

    print("\npower-sum identity (in-group factors all 1):")
    pattern2 = InvariancePattern.single(5, (1, 2))
    schedule2 = WeightSchedule(5, (1.0, 1.0, 0.8, 0.5, 0.25))
    sums = weight_power_sum(pattern2, schedule2, 2.0)
    print(f"  brute sum  {sums.brute:.12f}")
    print(f"  closed form {sums.closed:.12f}")


if __name__ == "__main__":
    main()

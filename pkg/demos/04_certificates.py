"""Defeating an undersized cubature rule with an explicit fooling function.

Draw a rule with random nodes and weights but one node too few.  The
certifier produces an invariant polynomial in the unit ball that the rule
evaluates to (numerically) zero although its true integral is 1: the rule
cannot beat the trivial zero algorithm.  One node more and the certifier
refuses, quoting the error the folded rule guarantees instead.
"""

import numpy as np

from symquad import (
    CubatureRule,
    InvariancePattern,
    RefusalError,
    construct_certificate,
    critical_node_count,
    crosscheck_coefficients,
    is_invariant,
)


def main():
    rng = np.random.default_rng(2024)
    dim = 5
    pattern = InvariancePattern.single(dim, (1, 2, 3))
    threshold = critical_node_count(pattern)
    print(f"dimension {dim}, interchangeable block (1,2,3): critical count {threshold}")

    n_nodes = threshold - 1
    rule = CubatureRule(
        dim,
        rng.random((n_nodes, dim)),
        rng.standard_normal(n_nodes) + 1j * rng.standard_normal(n_nodes),
    )
    print(f"\nrule with {n_nodes} random nodes and random complex weights")

    cert = construct_certificate(rule, pattern, alpha=2.0)
    print(f"fooling polynomial: {len(cert.polynomial)} terms, "
          f"support inside {{-1,0,1}}^{dim}")
    print(f"  rule applied to it : |{abs(cert.rule_value):.2e}|  (vanishes)")
    print(f"  its true integral  : {cert.integral_value.real:.15f}")
    print(f"  unit-ball norm     : {cert.norm_value:.15f}")
    print(f"  invariant          : {is_invariant(cert.polynomial, pattern, 1e-12)}")
    witnessed = abs(cert.integral_value - cert.rule_value)
    print(f"  witnessed error    : {witnessed:.12f}  (>= 1 - 1e-8)")

    check = crosscheck_coefficients(cert, pattern)
    print(f"  independent coefficient route agrees to {check.max_abs_deviation:.2e}")

    print(f"\nsame pattern, {threshold} nodes:")
    big_rule = CubatureRule(dim, rng.random((threshold, dim)), np.ones(threshold) / threshold)
    try:
        construct_certificate(big_rule, pattern, alpha=2.0)
    except RefusalError as err:
        print(f"  refused: {err}")


if __name__ == "__main__":
    main()

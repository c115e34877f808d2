"""Lower-bound certificates: fooling functions for undersized cubature rules.

Any rule whose node count ``n`` is below the critical count for an
invariance pattern can be defeated: there is an invariant polynomial in
the unit ball that vanishes at every node yet has integral 1, so the rule
cannot distinguish it from zero and its worst-case error is at least the
initial error.  This module makes that argument executable.

The construction works with the first ``n + 1`` canonical 0/1 frequency
vectors in a fixed enumeration order.  Averaging each corresponding
exponential over its orbit and scaling by the inverse stabilizer count
yields ``n + 1`` invariant basis functions; a nontrivial combination of
them vanishing at all nodes is read off a homogeneous ``n x (n+1)``
system.  Multiplying that combination by the reflected orbit average of a
pivot mode produces the certificate polynomial.  Its coefficients are
assembled directly from a closed formula (orbit convolution counts with
exact rational multiplicities), which pins the coefficient at frequency
zero to exactly 1 and confines the support to ``{-1,0,1}^d``.

``crosscheck_coefficients`` recomputes the same coefficients through the
literal product of the two factors (a sparse convolution) and reports the
largest deviation, providing an independent route through the algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice

import numpy as np

from .cubature import CubatureRule, apply_rule, rectangle_worst_case_error
from .errors import (
    CapExceededError,
    CertificateError,
    DimensionMismatchError,
    NullspaceError,
    RefusalError,
    UnsupportedPatternError,
)
from .fourier import FourierPolynomial, MultiIndex
from .korobov import korobov_norm, require_alpha
from .symmetry import (
    InvariancePattern,
    binary_orbit_representatives,
    canonicalize,
    critical_node_count,
    group_order,
    orbit,
    orbit_stats,
    symmetrize,
)

#: Default tolerance for certificate checks and the nullspace residual.
DEFAULT_CHECK_TOL = 1e-9


@dataclass(frozen=True)
class NullspaceSolution:
    """Nontrivial solution of the homogeneous node system.

    ``coefficients[pivot_index] == 1`` and every modulus is at most 1;
    ``residual`` is the infinity norm of the matrix applied to the vector.
    """

    coefficients: np.ndarray
    pivot_index: int
    residual: float


def constraint_matrix(rule: CubatureRule, pattern: InvariancePattern, psi) -> np.ndarray:
    """Node-evaluation matrix of the invariant basis functions.

    Entry ``(i, n)`` is the orbit sum of ``exp(2*pi*i*v.t_i)`` over the
    orbit of ``psi[n]``, divided by the group order; equivalently the orbit
    average of the exponential divided by the stabilizer count.  All
    moduli are at most 1.  ``psi`` must list ``rule.n_nodes + 1`` distinct
    canonical 0/1 vectors.
    """
    if rule.dim != pattern.dim:
        raise DimensionMismatchError("rule and pattern dimensions differ")
    n_nodes = rule.n_nodes
    threshold = critical_node_count(pattern)
    if n_nodes >= threshold:
        raise RefusalError(n_nodes, threshold)
    psi = [tuple(int(v) for v in k) for k in psi]
    _validate_mode_order(psi, pattern, n_nodes)
    order = group_order(pattern)
    matrix = np.zeros((n_nodes, n_nodes + 1), dtype=np.complex128)
    if n_nodes == 0:
        return matrix
    for col, key in enumerate(psi):
        members = np.array(list(orbit(key, pattern)), dtype=np.float64)
        phases = rule.nodes @ members.T
        matrix[:, col] = np.exp(2j * np.pi * phases).sum(axis=1) / float(order)
    return matrix


def _validate_mode_order(psi, pattern, n_nodes):
    if len(psi) != n_nodes + 1:
        raise ValueError(f"mode order must list {n_nodes + 1} vectors, got {len(psi)}")
    seen = set()
    for k in psi:
        if len(k) != pattern.dim:
            raise DimensionMismatchError("mode order entry has wrong dimension")
        if any(e not in (0, 1) for e in k):
            raise ValueError(f"mode order entry {k} is not a 0/1 vector")
        if canonicalize(k, pattern) != k:
            raise ValueError(f"mode order entry {k} is not canonical under the pattern")
        if k in seen:
            raise ValueError(f"duplicate mode order entry {k}")
        seen.add(k)


def nullspace_solution(matrix, residual_tol=DEFAULT_CHECK_TOL) -> NullspaceSolution:
    """Nontrivial nullspace vector of an ``n x (n+1)`` complex matrix.

    Gaussian elimination with partial pivoting by maximal modulus; columns
    whose remaining entries are numerically zero become free.  The first
    free column is set to 1, pivots are back-substituted, and the vector is
    rescaled by its first entry of maximal modulus, whose position becomes
    ``pivot_index``.  Raises ``NullspaceError`` when the residual exceeds
    ``residual_tol`` (the caller may retry with a different mode order).
    """
    a_mat = np.array(matrix, dtype=np.complex128)
    if a_mat.ndim != 2 or a_mat.shape[1] != a_mat.shape[0] + 1:
        raise ValueError(f"expected an n x (n+1) matrix, got shape {a_mat.shape}")
    n_rows, n_cols = a_mat.shape
    if n_rows == 0:
        return NullspaceSolution(np.ones(1, dtype=np.complex128), 0, 0.0)

    upper = a_mat.copy()
    scale = max(1.0, float(np.max(np.abs(upper))))
    pivot_eps = 8.0 * n_rows * np.finfo(np.float64).eps * scale
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        sub = np.abs(upper[row:, col])
        best = int(np.argmax(sub))
        if sub[best] <= pivot_eps:
            continue
        if best:
            upper[[row, row + best]] = upper[[row + best, row]]
        factors = upper[row + 1 :, col] / upper[row, col]
        upper[row + 1 :] -= np.outer(factors, upper[row])
        upper[row + 1 :, col] = 0.0
        pivots.append((row, col))
        row += 1

    pivot_cols = {c for _, c in pivots}
    free_col = next(c for c in range(n_cols) if c not in pivot_cols)
    vec = np.zeros(n_cols, dtype=np.complex128)
    vec[free_col] = 1.0
    for prow, pcol in reversed(pivots):
        vec[pcol] = -(np.dot(upper[prow], vec)) / upper[prow, pcol]

    pivot_index = int(np.argmax(np.abs(vec)))
    vec = vec / vec[pivot_index]
    vec[pivot_index] = 1.0
    moduli = np.abs(vec)
    oversized = moduli > 1.0
    if np.any(oversized):
        vec[oversized] /= moduli[oversized]
    residual = float(np.max(np.abs(a_mat @ vec)))
    if residual > residual_tol:
        raise NullspaceError(
            f"nullspace residual {residual:.3e} exceeds tolerance {residual_tol:.3e}",
            residual,
        )
    return NullspaceSolution(vec, pivot_index, residual)


@dataclass(frozen=True)
class FoolingCertificate:
    """A verified fooling function for a specific rule.

    ``polynomial`` vanishes at every rule node (up to the recorded
    residual), integrates to ``integral_value``, and lies in the unit ball
    witnessed by ``norm_value``.  ``mode_order`` and ``solution`` record
    the enumeration and combination used, making the certificate
    reproducible.  Weighted certificates carry the scaling factor and the
    guaranteed integral floor.
    """

    pattern: InvariancePattern
    alpha: float
    polynomial: FourierPolynomial
    mode_order: tuple[MultiIndex, ...]
    solution: NullspaceSolution
    rule_value: complex
    integral_value: complex
    norm_value: float
    residuals: dict[str, float]
    weight_scale: float | None = None
    weight_floor: float | None = None
    gammas: tuple | None = None

    @property
    def weighted(self) -> bool:
        return self.weight_scale is not None

    def to_json_dict(self) -> dict:
        data = {
            "schema_version": 1,
            "kind": "fooling-certificate",
            "dim": self.pattern.dim,
            "pattern": self.pattern.to_json_dict(),
            "alpha": self.alpha,
            "polynomial": self.polynomial.to_json_dict(),
            "mode_order": [list(k) for k in self.mode_order],
            "combination": [
                {"re": z.real, "im": z.imag} for z in self.solution.coefficients
            ],
            "pivot_index": self.solution.pivot_index,
            "rule_value": {"re": self.rule_value.real, "im": self.rule_value.imag},
            "integral_value": {
                "re": self.integral_value.real,
                "im": self.integral_value.imag,
            },
            "norm_value": self.norm_value,
            "residuals": dict(sorted(self.residuals.items())),
        }
        if self.weighted:
            data["weight_scale"] = self.weight_scale
            data["weight_floor"] = self.weight_floor
            data["gammas"] = [float(g) for g in self.gammas]
        return data


def construct_certificate(
    rule: CubatureRule,
    pattern: InvariancePattern,
    alpha,
    *,
    mode_order=None,
    check_tol=DEFAULT_CHECK_TOL,
) -> FoolingCertificate:
    """Build and verify a fooling function for a rule below the threshold.

    Parameters
    ----------
    rule : CubatureRule
        Any rule with fewer nodes than ``critical_node_count(pattern)``.
    pattern : InvariancePattern
        At most one coordinate group (the multi-block construction is not
        supported; its counting results remain available in ``symmetry``).
    alpha : float, > 1
    mode_order : sequence of 0/1 vectors, optional
        The ``n+1`` canonical vectors to combine; defaults to the
        lexicographic stream.  Weighted certificates pass a reordered
        prefix here.
    check_tol : float
        Tolerance for the vanishing, integral, and norm checks.

    Raises
    ------
    RefusalError
        If ``rule.n_nodes >= critical_node_count(pattern)``; the error
        carries the folded-rule worst-case error at that size.
    CertificateError
        If a verification check fails; residuals are attached.
    """
    a_smooth = require_alpha(alpha)
    if rule.dim != pattern.dim:
        raise DimensionMismatchError("rule and pattern dimensions differ")
    if len(pattern.groups) > 1:
        raise UnsupportedPatternError(
            "certificates support at most one coordinate group"
        )
    n_nodes = rule.n_nodes
    threshold = critical_node_count(pattern)
    if n_nodes >= threshold:
        upper = rectangle_worst_case_error(pattern.dim, a_smooth).closed_form
        raise RefusalError(n_nodes, threshold, upper_bound_error=upper)

    if mode_order is None:
        psi = list(islice(binary_orbit_representatives(pattern, cap=None), n_nodes + 1))
    else:
        psi = [tuple(int(v) for v in k) for k in mode_order]
        _validate_mode_order(psi, pattern, n_nodes)

    matrix = constraint_matrix(rule, pattern, psi)
    solution = nullspace_solution(matrix, residual_tol=check_tol)
    coeffs_a = solution.coefficients
    pivot = solution.pivot_index

    order = group_order(pattern)
    orbits = [list(orbit(key, pattern)) for key in psi]
    stab_pivot = orbit_stats(psi[pivot], pattern).stabilizer_size

    # counts[k][n] = number of (v, h) pairs with v in the pivot orbit,
    # h in the orbit of psi[n], and h - v = k.
    counts: dict[MultiIndex, dict[int, int]] = {}
    for v in orbits[pivot]:
        for n, orb in enumerate(orbits):
            for h in orb:
                key = tuple(hm - vm for hm, vm in zip(h, v))
                per_mode = counts.setdefault(key, {})
                per_mode[n] = per_mode.get(n, 0) + 1

    terms: dict[MultiIndex, complex] = {}
    for key in sorted(counts):
        acc = 0j
        for n in sorted(counts[key]):
            ratio = Fraction(counts[key][n] * stab_pivot, order)
            acc += float(ratio) * coeffs_a[n]
        if acc != 0:
            terms[key] = acc
    poly = FourierPolynomial(pattern.dim, terms)

    rule_value = apply_rule(rule, poly)
    integral_value = poly.integral()
    norm_value = korobov_norm(poly, a_smooth)
    residuals = {
        "nullspace": solution.residual,
        "rule_value": abs(rule_value),
        "integral_deviation": abs(integral_value - 1.0),
        "norm_excess": max(0.0, norm_value - 1.0),
    }
    rule_tol = check_tol * (1.0 + rule.weight_abs_sum())
    if (
        residuals["rule_value"] > rule_tol
        or residuals["integral_deviation"] > 1e-12
        or residuals["norm_excess"] > check_tol
    ):
        raise CertificateError("certificate verification failed", residuals)

    return FoolingCertificate(
        pattern=pattern,
        alpha=a_smooth,
        polynomial=poly,
        mode_order=tuple(psi),
        solution=solution,
        rule_value=rule_value,
        integral_value=integral_value,
        norm_value=norm_value,
        residuals=residuals,
    )


def canonical_mode_rank(h, pattern: InvariancePattern, rank_of) -> int | None:
    """Position of a 0/1 vector's canonical form in a mode-order prefix.

    ``rank_of`` maps canonical vectors to their index.  Returns ``None``
    when the canonical form lies beyond the prefix, exactly the terms the
    certificate formula discards.
    """
    return rank_of.get(canonicalize(h, pattern))


@dataclass(frozen=True)
class CrosscheckReport:
    """Outcome of recomputing certificate coefficients by convolution."""

    max_abs_deviation: float
    n_terms_compared: int


def crosscheck_coefficients(
    cert: FoolingCertificate,
    pattern: InvariancePattern,
    *,
    dim_cap=8,
    group_order_cap=math.factorial(10),
) -> CrosscheckReport:
    """Recompute the certificate polynomial as a literal two-factor product.

    The first factor is the group order times the orbit average of the
    reflected pivot exponential; the second is the nullspace combination of
    stabilizer-scaled orbit averages.  Their sparse convolution must match
    the closed-formula coefficients stored in the certificate; the report
    carries the largest absolute deviation over the union of supports.
    """
    if pattern.dim > dim_cap:
        raise CapExceededError(f"crosscheck limited to dimension <= {dim_cap}")
    order = group_order(pattern)
    if order > group_order_cap:
        raise CapExceededError(f"crosscheck limited to group order <= {group_order_cap}")

    dim = pattern.dim
    psi = cert.mode_order
    coeffs_a = cert.solution.coefficients
    pivot_key = psi[cert.solution.pivot_index]
    reflected = tuple(-e for e in pivot_key)

    factor_one = float(order) * symmetrize(FourierPolynomial(dim, {reflected: 1.0}), pattern)
    factor_two = FourierPolynomial(dim, {})
    for n, key in enumerate(psi):
        stab = orbit_stats(key, pattern).stabilizer_size
        factor_two = factor_two + (coeffs_a[n] / stab) * symmetrize(
            FourierPolynomial(dim, {key: 1.0}), pattern
        )
    product = factor_one * factor_two
    if cert.weight_scale is not None:
        product = cert.weight_scale * product

    support = set(product.support()) | set(cert.polynomial.support())
    worst = 0.0
    for key in sorted(support):
        worst = max(worst, abs(product.coefficient(key) - cert.polynomial.coefficient(key)))
    return CrosscheckReport(max_abs_deviation=worst, n_terms_compared=len(support))

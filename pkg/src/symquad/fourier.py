"""Sparse trigonometric polynomials with exact integer frequencies.

A polynomial is a finite map from frequency vectors ``k`` in ``Z^d`` to
complex coefficients and represents ``x -> sum_k c_k exp(2*pi*i*k.x)`` on
``[0,1)^d``.  The representation is kept canonical: coefficients that are
exactly zero are dropped and terms are stored in lexicographic key order,
so every reduction over the terms has a fixed, reproducible summation
order.
"""

from __future__ import annotations

import cmath
import json
from typing import Mapping

import numpy as np

from .errors import DimensionMismatchError

MultiIndex = tuple[int, ...]

#: Largest allowed |k_m|; keeps frequency vectors interchangeable with
#: 32-bit consumers of the JSON form.
MAX_INDEX_MAGNITUDE = 2**31 - 1


def validate_multi_index(k, dim=None) -> MultiIndex:
    """Coerce ``k`` to a tuple of ints and check dimension and magnitude."""
    key = tuple(int(e) for e in k)
    if len(key) == 0:
        raise ValueError("frequency vector must have dimension >= 1")
    if dim is not None and len(key) != dim:
        raise DimensionMismatchError(
            f"frequency vector has dimension {len(key)}, expected {dim}"
        )
    for e in key:
        if abs(e) > MAX_INDEX_MAGNITUDE:
            raise ValueError(f"frequency entry {e} exceeds magnitude cap {MAX_INDEX_MAGNITUDE}")
    return key


class FourierPolynomial:
    """Finitely supported Fourier series ``sum_k c_k exp(2*pi*i*k.x)``.

    Parameters
    ----------
    dim : int
        Coordinate dimension ``d >= 1``.
    terms : mapping or iterable of pairs
        Frequency vector -> complex coefficient.  Zero coefficients are
        dropped; duplicate keys are rejected.
    """

    __slots__ = ("_dim", "_terms", "_arrays")

    def __init__(self, dim, terms=()):
        dim = int(dim)
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        items = terms.items() if isinstance(terms, Mapping) else terms
        cleaned = {}
        for k, c in items:
            key = validate_multi_index(k, dim)
            if key in cleaned:
                raise ValueError(f"duplicate frequency vector {key}")
            c = complex(c)
            if c != 0:
                cleaned[key] = c
        self._dim = dim
        self._terms = {k: cleaned[k] for k in sorted(cleaned)}
        self._arrays = None

    def _term_arrays(self):
        """Cached (frequencies, coefficients) arrays in key order."""
        if self._arrays is None:
            n = len(self._terms)
            keys = np.array(list(self._terms), dtype=np.float64).reshape(n, self._dim)
            coeffs = np.fromiter(self._terms.values(), dtype=np.complex128, count=n)
            self._arrays = (keys, coeffs)
        return self._arrays

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def terms(self) -> dict[MultiIndex, complex]:
        """Copy of the term map, in lexicographic key order."""
        return dict(self._terms)

    def support(self) -> tuple[MultiIndex, ...]:
        """Frequency vectors with nonzero coefficient, lexicographically."""
        return tuple(self._terms)

    def coefficient(self, k) -> complex:
        """Coefficient at ``k`` (zero when ``k`` is outside the support)."""
        return self._terms.get(validate_multi_index(k, self._dim), 0j)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FourierPolynomial):
            return NotImplemented
        return self._dim == other._dim and self._terms == other._terms

    def __hash__(self):
        return hash((self._dim, tuple(self._terms.items())))

    def __repr__(self):
        return f"FourierPolynomial(dim={self._dim}, n_terms={len(self._terms)})"

    def __call__(self, x) -> complex:
        """Evaluate at a point of ``[0,1)^d``.

        Terms are summed in lexicographic key order, so repeated calls give
        bit-identical results.
        """
        point = tuple(float(v) for v in x)
        if len(point) != self._dim:
            raise DimensionMismatchError(
                f"point has dimension {len(point)}, expected {self._dim}"
            )
        acc = 0j
        for k, c in self._terms.items():
            phase = 0.0
            for km, xm in zip(k, point):
                phase += km * xm
            acc += c * cmath.exp(2j * cmath.pi * phase)
        return acc

    def integral(self) -> complex:
        """Integral over the unit cube: the coefficient at frequency zero."""
        return self._terms.get((0,) * self._dim, 0j)

    def __add__(self, other):
        if not isinstance(other, FourierPolynomial):
            return NotImplemented
        if other._dim != self._dim:
            raise DimensionMismatchError("cannot add polynomials of different dimension")
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0j) + c
        return FourierPolynomial(self._dim, out)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __mul__(self, other):
        if isinstance(other, FourierPolynomial):
            if other._dim != self._dim:
                raise DimensionMismatchError("cannot multiply polynomials of different dimension")
            out: dict[MultiIndex, complex] = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    key = tuple(a + b for a, b in zip(k1, k2))
                    out[key] = out.get(key, 0j) + c1 * c2
            return FourierPolynomial(self._dim, out)
        return FourierPolynomial(
            self._dim, {k: complex(other) * c for k, c in self._terms.items()}
        )

    __rmul__ = __mul__

    def to_json_dict(self) -> dict:
        return {
            "dim": self._dim,
            "terms": [
                {"k": list(k), "re": c.real, "im": c.imag}
                for k, c in self._terms.items()
            ],
        }

    @classmethod
    def from_json_dict(cls, data) -> "FourierPolynomial":
        if not isinstance(data, Mapping) or "dim" not in data or "terms" not in data:
            raise ValueError("polynomial JSON must carry 'dim' and 'terms'")
        dim = int(data["dim"])
        pairs = []
        for entry in data["terms"]:
            pairs.append((tuple(entry["k"]), complex(float(entry["re"]), float(entry["im"]))))
        seen = set()
        for k, _ in pairs:
            if k in seen:
                raise ValueError(f"duplicate frequency vector {k} in JSON terms")
            seen.add(k)
        return cls(dim, pairs)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text) -> "FourierPolynomial":
        return cls.from_json_dict(json.loads(text))


def evaluate_at_points(f: FourierPolynomial, points) -> np.ndarray:
    """Evaluate ``f`` at many points at once.

    Parameters
    ----------
    f : FourierPolynomial
    points : array_like, shape (n, d)

    Returns
    -------
    numpy.ndarray, shape (n,), complex
        Vectorized evaluation; the per-term reduction may be reassociated
        relative to ``f(x)``, which changes results by at most about
        ``1e-12 * sum_k |c_k|``.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != f.dim:
        raise DimensionMismatchError(f"points must have shape (n, {f.dim})")
    n = pts.shape[0]
    if n == 0 or len(f) == 0:
        return np.zeros(n, dtype=np.complex128)
    keys, coeffs = f._term_arrays()                          # (t, d), (t,)
    out = np.empty(n, dtype=np.complex128)
    # Chunk the (nodes x terms) phase matrix to bound peak memory.
    chunk = max(1, (1 << 22) // max(1, len(f)))
    for lo in range(0, n, chunk):
        hi = min(n, lo + chunk)
        phases = pts[lo:hi] @ keys.T
        out[lo:hi] = np.exp(2j * np.pi * phases) @ coeffs
    return out


def random_polynomial(dim, n_terms, rng, max_magnitude=2) -> FourierPolynomial:
    """Random sparse polynomial with integer frequencies in a box.

    ``rng`` is a ``numpy.random.Generator``; coefficients are complex
    standard normal.  Collisions between sampled frequency vectors reduce
    the term count, so ``len(result) <= n_terms``.
    """
    terms: dict[MultiIndex, complex] = {}
    for _ in range(int(n_terms)):
        k = tuple(int(v) for v in rng.integers(-max_magnitude, max_magnitude + 1, size=dim))
        terms[k] = complex(rng.standard_normal(), rng.standard_normal())
    return FourierPolynomial(dim, terms)

"""Coordinate-permutation groups, orbits, and the folded index set.

An invariance pattern names disjoint blocks of coordinates; the associated
group permutes coordinates freely within each block and fixes the rest.
This module provides the orbit combinatorics of that action on frequency
vectors: canonical orbit representatives, stabilizer and orbit sizes (kept
as exact big integers), the lexicographic enumeration of the canonical 0/1
vectors that index the folded rectangle rule, and the orbit-averaging
projection onto invariant polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CapExceededError, DimensionMismatchError
from .fourier import FourierPolynomial, MultiIndex, validate_multi_index

#: Default ceiling on the size of materialized enumerations.
DEFAULT_ENUMERATION_CAP = 1 << 26


@dataclass(frozen=True)
class InvariancePattern:
    """Disjoint blocks of 1-based coordinates that may be permuted freely.

    ``groups`` is a tuple of sorted tuples.  The empty tuple encodes the
    pattern with no interchangeable coordinates (the trivial group).
    """

    dim: int
    groups: tuple[tuple[int, ...], ...]

    def __init__(self, dim, groups=()):
        dim = int(dim)
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        norm = []
        seen: set[int] = set()
        for g in groups:
            members = sorted(int(i) for i in g)
            if not members:
                raise ValueError("empty coordinate groups are not allowed")
            for i in members:
                if not 1 <= i <= dim:
                    raise ValueError(f"coordinate {i} outside 1..{dim}")
                if i in seen:
                    raise ValueError(f"coordinate {i} appears in more than one group")
                seen.add(i)
            norm.append(tuple(members))
        norm.sort(key=lambda g: g[0])
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "groups", tuple(norm))

    @classmethod
    def trivial(cls, dim) -> "InvariancePattern":
        """No interchangeable coordinates."""
        return cls(dim, ())

    @classmethod
    def full(cls, dim) -> "InvariancePattern":
        """All coordinates in a single interchangeable block."""
        return cls(dim, (tuple(range(1, int(dim) + 1)),))

    @classmethod
    def single(cls, dim, members) -> "InvariancePattern":
        """One block given by an iterable of 1-based coordinates."""
        members = tuple(members)
        return cls(dim, (members,) if members else ())

    @property
    def invariant_count(self) -> int:
        return sum(len(g) for g in self.groups)

    @property
    def free_positions(self) -> tuple[int, ...]:
        grouped = {i for g in self.groups for i in g}
        return tuple(i for i in range(1, self.dim + 1) if i not in grouped)

    def to_json_dict(self) -> dict:
        return {"dim": self.dim, "groups": [list(g) for g in self.groups]}

    @classmethod
    def from_json_dict(cls, data) -> "InvariancePattern":
        return cls(int(data["dim"]), [tuple(g) for g in data.get("groups", [])])


def parse_coordinate_set(spec: str) -> tuple[int, ...]:
    """Parse ``"1-3,5"`` into the coordinate tuple ``(1, 2, 3, 5)``."""
    members: list[int] = []
    spec = spec.strip()
    if not spec:
        return ()
    for part in spec.split(","):
        part = part.strip()
        if "-" in part:
            lo_s, hi_s = part.split("-", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise ValueError(f"bad coordinate range {part!r}")
            members.extend(range(lo, hi + 1))
        elif part:
            members.append(int(part))
    return tuple(members)


def parse_groups(spec: str) -> tuple[tuple[int, ...], ...]:
    """Parse ``"1-3;4,7"`` into coordinate groups, one per ';'-separated part."""
    groups = []
    for part in spec.split(";"):
        members = parse_coordinate_set(part)
        if members:
            groups.append(members)
    return tuple(groups)


def group_order(pattern: InvariancePattern) -> int:
    """Number of coordinate permutations in the pattern's group (exact int)."""
    order = 1
    for g in pattern.groups:
        order *= math.factorial(len(g))
    return order


def canonicalize(k, pattern: InvariancePattern) -> MultiIndex:
    """Canonical orbit representative: each block's entries sorted ascending.

    Within every group the entries are rearranged non-decreasingly, which is
    the lexicographically smallest element of the orbit; coordinates outside
    all groups are untouched.  Idempotent.
    """
    key = validate_multi_index(k, pattern.dim)
    out = list(key)
    for g in pattern.groups:
        values = sorted(out[i - 1] for i in g)
        for i, v in zip(g, values):
            out[i - 1] = v
    return tuple(out)


@dataclass(frozen=True)
class OrbitStats:
    """Orbit data of a frequency vector under a pattern's group."""

    canonical: MultiIndex
    stabilizer_size: int
    orbit_size: int


def orbit_stats(k, pattern: InvariancePattern) -> OrbitStats:
    """Canonical representative plus exact stabilizer and orbit cardinalities.

    The stabilizer size is the product over groups of the factorials of the
    value multiplicities inside the group; orbit size follows by dividing
    the group order.
    """
    key = validate_multi_index(k, pattern.dim)
    stab = 1
    for g in pattern.groups:
        counts: dict[int, int] = {}
        for i in g:
            v = key[i - 1]
            counts[v] = counts.get(v, 0) + 1
        for c in counts.values():
            stab *= math.factorial(c)
    total = group_order(pattern)
    return OrbitStats(canonicalize(key, pattern), stab, total // stab)


def _distinct_arrangements(values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All distinct arrangements of a multiset, in lexicographic order."""
    pool = sorted(values)
    n = len(pool)
    out: list[int] = []
    remaining: dict[int, int] = {}
    for v in pool:
        remaining[v] = remaining.get(v, 0) + 1
    distinct = sorted(remaining)

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for v in distinct:
            if remaining[v]:
                remaining[v] -= 1
                out.append(v)
                yield from rec()
                out.pop()
                remaining[v] += 1

    yield from rec()


def orbit(k, pattern: InvariancePattern) -> Iterator[MultiIndex]:
    """Iterate the orbit of ``k``: all within-group rearrangements.

    Cost is proportional to the orbit size (distinct arrangements only),
    never to the group order.  Deterministic order: arrangements advance
    lexicographically, later groups fastest.
    """
    key = validate_multi_index(k, pattern.dim)
    groups = pattern.groups
    if not groups:
        yield key
        return

    def rec(idx: int, current: list[int]) -> Iterator[MultiIndex]:
        if idx == len(groups):
            yield tuple(current)
            return
        g = groups[idx]
        for arrangement in _distinct_arrangements([key[i - 1] for i in g]):
            for i, v in zip(g, arrangement):
                current[i - 1] = v
            yield from rec(idx + 1, current)

    yield from rec(0, list(key))


def critical_node_count(pattern: InvariancePattern) -> int:
    """Exact count of canonical 0/1 vectors under the pattern.

    Equals ``prod_r (size_r + 1) * 2**(d - sum_r size_r)``: one choice of
    ones-count per group, free coordinates binary.  Any cubature rule with
    fewer nodes cannot improve on the zero algorithm, and the folded
    rectangle rule shows this many suffice to do better.
    """
    count = 1 << (pattern.dim - pattern.invariant_count)
    for g in pattern.groups:
        count *= len(g) + 1
    return count


def binary_orbit_representatives(
    pattern: InvariancePattern, cap: int | None = DEFAULT_ENUMERATION_CAP
) -> Iterator[MultiIndex]:
    """Stream the canonical 0/1 vectors in lexicographic order.

    Within each group a canonical vector has its zeros before its ones, so
    the stream walks coordinates left to right and, once a group member is
    set to 1, forces the group's remaining members to 1.  The stream has
    exactly ``critical_node_count(pattern)`` elements; a ``cap`` (when not
    None) rejects patterns whose full enumeration would exceed it.
    """
    if cap is not None and critical_node_count(pattern) > cap:
        raise CapExceededError(
            f"enumeration of {critical_node_count(pattern)} representatives exceeds cap {cap}"
        )
    dim = pattern.dim
    group_of = {}
    for gi, g in enumerate(pattern.groups):
        for i in g:
            group_of[i - 1] = gi

    entries = [0] * dim
    forced = [False] * len(pattern.groups)

    def rec(pos: int) -> Iterator[MultiIndex]:
        if pos == dim:
            yield tuple(entries)
            return
        gi = group_of.get(pos)
        if gi is not None and forced[gi]:
            entries[pos] = 1
            yield from rec(pos + 1)
            return
        entries[pos] = 0
        yield from rec(pos + 1)
        entries[pos] = 1
        if gi is not None:
            forced[gi] = True
        yield from rec(pos + 1)
        if gi is not None:
            forced[gi] = False

    yield from rec(0)


def symmetrize(f: FourierPolynomial, pattern: InvariancePattern) -> FourierPolynomial:
    """Project onto the invariant polynomials by orbit averaging.

    The coefficient of every frequency in an orbit becomes the plain average
    of the input coefficients over that orbit.  Work is proportional to the
    support size times the orbit sizes met, never to the group order.  The
    coefficient at frequency zero is a fixed point, so the integral is
    preserved exactly.
    """
    if f.dim != pattern.dim:
        raise DimensionMismatchError("polynomial and pattern dimensions differ")
    buckets: dict[MultiIndex, complex] = {}
    for k, c in f.terms.items():
        canon = canonicalize(k, pattern)
        buckets[canon] = buckets.get(canon, 0j) + c
    out: dict[MultiIndex, complex] = {}
    for canon in sorted(buckets):
        stats = orbit_stats(canon, pattern)
        avg = buckets[canon] / stats.orbit_size
        if avg == 0:
            continue
        for member in orbit(canon, pattern):
            out[member] = avg
    return FourierPolynomial(f.dim, out)


def is_invariant(f: FourierPolynomial, pattern: InvariancePattern, tol=0.0) -> bool:
    """Whether every coefficient matches the one at its canonical frequency.

    Equivalent to invariance of the function itself: a polynomial is
    unchanged under the pattern's coordinate permutations exactly when its
    coefficient map is constant on orbits.
    """
    if f.dim != pattern.dim:
        raise DimensionMismatchError("polynomial and pattern dimensions differ")
    if tol < 0:
        raise ValueError("tolerance must be >= 0")
    for k, c in f.terms.items():
        if abs(c - f.coefficient(canonicalize(k, pattern))) > tol:
            return False
    return True

"""Counting, enumeration, and generating functions for L1 shells and balls.

The shell S_n(d) is the set of points of Z^n at L1 distance exactly d from
the origin; the ball B_n(d) collects shells 0 through d. Everything here is
exact integer arithmetic: shell sizes come from a binomial sum, generating
function coefficients from formal power series division over Z, and the
shell <-> box bijection from an explicit tuple encoding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

LatticePoint = tuple[int, ...]

DEFAULT_ENUMERATION_CAP = 10**7

GENFUNC_KINDS = (
    "B_bivariate",
    "S_bivariate",
    "B_fixed_d",
    "B_fixed_n",
    "S_fixed_d",
    "S_fixed_n",
)


class EnumerationCapExceeded(RuntimeError):
    """Raised when an enumeration would produce more points than allowed."""


def shell_size(n: int, d: int) -> int:
    """Number of points of Z^n at L1 distance exactly d from the origin.

    Counts points by the number i of coordinates that are zero: choose the
    zero positions, sign the rest, and compose d into the nonzero magnitudes.
    """
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if d < 0:
        raise ValueError("distance must be nonnegative")
    if d == 0:
        return 1
    if n == 0:
        return 0
    return sum(
        math.comb(n, i) * 2 ** (n - i) * math.comb(d - 1, n - i - 1)
        for i in range(n)
    )


def ball_size(n: int, d: int) -> int:
    """Number of points of Z^n at L1 distance at most d from the origin."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if d < 0:
        raise ValueError("distance must be nonnegative")
    return sum(shell_size(n, k) for k in range(d + 1))


def delannoy(m: int, k: int) -> int:
    """Delannoy number D(m, k): lattice paths with steps east, north, northeast.

    Satisfies the same recursion as ball sizes, D(m, k) = D(m-1, k)
    + D(m, k-1) + D(m-1, k-1), so ball_size(n, d) == delannoy(n, d).
    Computed by iterating rows of the table.
    """
    if m < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    row = [1] * (k + 1)
    for _ in range(m):
        new = [1] * (k + 1)
        for j in range(1, k + 1):
            new[j] = new[j - 1] + row[j] + row[j - 1]
        row = new
    return row[k]


def _shell_points(n: int, d: int) -> Iterator[LatticePoint]:
    # First coordinate ascending, rest recursive: yields points in
    # lexicographic order.
    if n == 0:
        if d == 0:
            yield ()
        return
    for x in range(-d, d + 1):
        rest = d - abs(x)
        for tail in _shell_points(n - 1, rest):
            yield (x, *tail)


def shell_enumerate(
    n: int, d: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[LatticePoint]:
    """All points of Z^n at L1 distance exactly d, in lexicographic order.

    Refuses up front when the enclosing ball holds more than cap points.
    """
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if d < 0:
        raise ValueError("distance must be nonnegative")
    size = ball_size(n, d)
    if size > cap:
        raise EnumerationCapExceeded(
            f"ball ({n}, {d}) has {size} points, above the cap of {cap}"
        )
    return list(_shell_points(n, d))


def _binomial_poly(k: int, sign: int) -> list[int]:
    # Coefficients of (1 + sign*x)^k, constant term first.
    return [math.comb(k, i) * sign**i for i in range(k + 1)]


def _series_quotient(num: Sequence[int], den: Sequence[int], count: int) -> list[int]:
    # Formal power series division over Z. den[0] must be a unit in Z.
    lead = den[0]
    if lead not in (1, -1):
        raise ValueError("denominator must have constant term 1 or -1")
    out: list[int] = []
    for i in range(count):
        acc = num[i] if i < len(num) else 0
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out.append(acc * lead)
    return out


_BIVARIATE_DEN = {(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): -1}


def _bivariate_quotient(
    num: dict[tuple[int, int], int], max_index: int
) -> list[list[int]]:
    # Division by 1 - x - y - xy, the denominator shared by both bivariate
    # series. Returns the full coefficient square [0..max_index]^2.
    table = [[0] * (max_index + 1) for _ in range(max_index + 1)]
    for i in range(max_index + 1):
        for j in range(max_index + 1):
            acc = num.get((i, j), 0)
            for (a, b), c in _BIVARIATE_DEN.items():
                if a == 0 and b == 0:
                    continue
                if i >= a and j >= b:
                    acc -= c * table[i - a][j - b]
            table[i][j] = acc
    return table


def genfunc_coefficients(
    kind: str, max_index: int, fixed: int | None = None
) -> list[int] | list[list[int]]:
    """Coefficients of a shell or ball generating function.

    Bivariate kinds return the square table with entry (i, j) holding the
    count for dimension i and distance j, both running 0..max_index:

    * ``B_bivariate``: sum over n, d of ball_size(n, d) x^n y^d,
      equal to 1 / (1 - x - y - xy).
    * ``S_bivariate``: same with shell sizes, (1 - y) / (1 - x - y - xy).

    Univariate kinds need ``fixed`` and return coefficients 0..max_index:

    * ``B_fixed_d``: coefficient k is ball_size(k, d) with d = fixed,
      from (1 + x)^d / (1 - x)^(d+1).
    * ``S_fixed_d``: coefficient k is shell_size(k, d), from
      2x (1 + x)^(d-1) / (1 - x)^(d+1) for d >= 1 and 1 / (1 - x) for d = 0.
    * ``B_fixed_n``: coefficient k is ball_size(n, k) with n = fixed,
      from (1 + x)^n / (1 - x)^(n+1).
    * ``S_fixed_n``: coefficient k is shell_size(n, k), from
      (1 + x)^n / (1 - x)^n.
    """
    if kind not in GENFUNC_KINDS:
        raise ValueError(f"unknown generating function kind: {kind!r}")
    if max_index < 0:
        raise ValueError("max_index must be nonnegative")

    if kind in ("B_bivariate", "S_bivariate"):
        if fixed is not None:
            raise ValueError(f"{kind} takes no fixed parameter")
        num = {(0, 0): 1}
        if kind == "S_bivariate":
            num[(0, 1)] = -1
        return _bivariate_quotient(num, max_index)

    if fixed is None:
        raise ValueError(f"{kind} requires a fixed parameter")
    if fixed < 0:
        raise ValueError("fixed parameter must be nonnegative")
    count = max_index + 1

    if kind == "B_fixed_d":
        num = _binomial_poly(fixed, 1)
        den = _poly_power([1, -1], fixed + 1)
    elif kind == "S_fixed_d":
        if fixed == 0:
            num, den = [1], [1, -1]
        else:
            num = [0] + [2 * c for c in _binomial_poly(fixed - 1, 1)]
            den = _poly_power([1, -1], fixed + 1)
    elif kind == "B_fixed_n":
        num = _binomial_poly(fixed, 1)
        den = _poly_power([1, -1], fixed + 1)
    else:  # S_fixed_n
        num = _binomial_poly(fixed, 1)
        den = _poly_power([1, -1], fixed)
    return _series_quotient(num, den, count)


def _poly_power(base: Sequence[int], k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        nxt = [0] * (len(out) + len(base) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(base):
                nxt[i + j] += a * b
        out = nxt
    return out


@dataclass(frozen=True)
class SignedTuple:
    """One nonzero coordinate of a lattice point in encoded form.

    sign is +1 or -1, gap is the index distance from the previous nonzero
    coordinate (from position 0 for the first), magnitude is the absolute
    value. Both gap and magnitude are at least 1.
    """

    sign: int
    gap: int
    magnitude: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.gap < 1:
            raise ValueError("gap must be at least 1")
        if self.magnitude < 1:
            raise ValueError("magnitude must be at least 1")

    def flipped(self) -> "SignedTuple":
        """Same sign with gap and magnitude exchanged."""
        return SignedTuple(self.sign, self.magnitude, self.gap)


@dataclass(frozen=True)
class TupleSequence:
    """Encoded form of a lattice point: one SignedTuple per nonzero coordinate."""

    tuples: tuple[SignedTuple, ...]

    @property
    def dimension_sum(self) -> int:
        """Sum of gaps: the index of the last nonzero coordinate (1-based)."""
        return sum(s.gap for s in self.tuples)

    @property
    def distance_sum(self) -> int:
        """Sum of magnitudes: the L1 norm of the decoded point."""
        return sum(s.magnitude for s in self.tuples)


def tuple_encode(point: LatticePoint) -> TupleSequence:
    """Encode a lattice point as its sequence of signed (gap, magnitude) pairs."""
    tuples = []
    prev = 0
    for pos, value in enumerate(point, start=1):
        if value == 0:
            continue
        sign = 1 if value > 0 else -1
        tuples.append(SignedTuple(sign, pos - prev, abs(value)))
        prev = pos
    return TupleSequence(tuple(tuples))


def tuple_decode(seq: TupleSequence, n: int) -> LatticePoint:
    """Rebuild the point of Z^n encoded by seq.

    The gaps must fit: their sum cannot exceed n.
    """
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if seq.dimension_sum > n:
        raise ValueError(
            f"encoded gaps need dimension {seq.dimension_sum}, got {n}"
        )
    coords = [0] * n
    pos = 0
    for s in seq.tuples:
        pos += s.gap
        coords[pos - 1] = s.sign * s.magnitude
    return tuple(coords)


def ball_bijection(point: LatticePoint, n: int, d: int) -> LatticePoint:
    """Image of a point of B_n(d) under the bijection onto B_d(n).

    Encodes the point, swaps each pair's gap with its magnitude, and decodes
    in dimension d. Applying the map with n and d exchanged inverts it, so
    it is an involution between the two balls.
    """
    if len(point) != n:
        raise ValueError(f"point has {len(point)} coordinates, expected {n}")
    norm = sum(abs(x) for x in point)
    if norm > d:
        raise ValueError(f"point has L1 norm {norm}, outside the ball of radius {d}")
    seq = tuple_encode(point)
    swapped = TupleSequence(tuple(s.flipped() for s in seq.tuples))
    return tuple_decode(swapped, d)

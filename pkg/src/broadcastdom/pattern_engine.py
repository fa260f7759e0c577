"""Periodic broadcast patterns on the integer lattice.

A pattern places a broadcast at every point of a full-rank sublattice of Z^n
and is judged by whether every lattice point still accumulates reception r.
Two-dimensional patterns of the form {(m*d + k*e, k)} are towers: one
broadcast per row, shifted e per row, period d. Density is 1 broadcast per
d cells, so the search for a dominating tower walks d downward from the
coverage bound and returns the sparsest hit.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .coverage_bounds import Params, max_potential_d
from .lattice_geometry import LatticePoint, shell_enumerate

DEFAULT_INDEX_CAP = 10**6


class IndexCapExceeded(RuntimeError):
    """Raised when a sublattice has more cosets than the caller allowed."""


@dataclass(frozen=True)
class TowerPattern:
    """Broadcasts at {(m*d + k*e, k) : m, k integers}, with 0 <= e < d."""

    d: int
    e: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("period d must be at least 1")
        if not 0 <= self.e < self.d:
            raise ValueError("shift e must satisfy 0 <= e < d")

    def __str__(self) -> str:
        return f"T({self.d},{self.e})"


@dataclass(frozen=True)
class ReceptionProfile:
    """Reception of one period of columns, optionally split by source row.

    rows holds (y, contributions) pairs with y descending; receptions is the
    column-wise total over all rows.
    """

    pattern: str
    receptions: tuple[int, ...]
    rows: Optional[tuple[tuple[int, tuple[int, ...]], ...]] = None


def _row_contribution(reach: int, d: int, m: int) -> int:
    # m is the horizontal offset from column i back to the nearest broadcast
    # at or left of it; the row's broadcasts sit every d columns. Reach can
    # cover several of them when d is small, so walk both directions.
    total = 0
    delta = m
    while delta < reach:
        total += reach - delta
        delta += d
    delta = d - m
    while delta < reach:
        total += reach - delta
        delta += d
    return total


def tower_reception(params: Params, pattern: TowerPattern, i: int) -> int:
    """Total reception at column i of row 0, one value per residue class.

    Row y contributes through its broadcasts at x = y*e (mod d); each one
    within horizontal reach t - |y| adds its remaining strength.
    """
    if not 0 <= i < pattern.d:
        raise ValueError(f"column must satisfy 0 <= i < {pattern.d}")
    t = params.t
    total = 0
    for y in range(-(t - 1), t):
        reach = t - abs(y)
        m = (i - y * pattern.e) % pattern.d
        total += _row_contribution(reach, pattern.d, m)
    return total


def reception_table(params: Params, pattern: TowerPattern) -> ReceptionProfile:
    """Per-row reception breakdown across one period of columns.

    Rows are listed with y descending from t-1 to -(t-1); summing the rows
    column-wise gives the receptions field.
    """
    t = params.t
    d = pattern.d
    rows = []
    for y in range(t - 1, -t, -1):
        reach = t - abs(y)
        vec = tuple(
            _row_contribution(reach, d, (i - y * pattern.e) % d) for i in range(d)
        )
        rows.append((y, vec))
    totals = tuple(sum(vec[i] for _, vec in rows) for i in range(d))
    return ReceptionProfile(str(pattern), totals, tuple(rows))


def is_dominating_tower(params: Params, pattern: TowerPattern) -> bool:
    """Whether every lattice point receives at least r from the tower."""
    return all(
        tower_reception(params, pattern, i) >= params.r for i in range(pattern.d)
    )


def min_density_search(params: Params) -> TowerPattern:
    """Sparsest dominating tower: largest d, then smallest e.

    d starts at the coverage bound, the provable ceiling on the cells one
    broadcast can support, and walks down; d = 1 always dominates, so the
    search terminates.
    """
    for d in range(max_potential_d(2, params), 0, -1):
        for e in range(d):
            pattern = TowerPattern(d, e)
            if is_dominating_tower(params, pattern):
                return pattern
    raise AssertionError("unreachable: T(1,0) always dominates")


def hermite_normal_form(
    columns: Sequence[Sequence[int]],
) -> tuple[tuple[int, ...], ...]:
    """Column Hermite normal form of a square integer basis.

    Returns the unique basis of the same lattice that is upper triangular
    with positive diagonal and, in each row, off-diagonal entries reduced
    into [0, diagonal). Raises ValueError when the columns are dependent.
    """
    cols = [list(c) for c in columns]
    n = len(cols)
    if n == 0:
        raise ValueError("basis must have at least one column")
    if any(len(c) != n for c in cols):
        raise ValueError("basis must be square")
    for i in range(n - 1, -1, -1):
        # Euclidean elimination of row i across columns 0..i, pivot to col i.
        while True:
            nonzero = [j for j in range(i + 1) if cols[j][i] != 0]
            if not nonzero:
                raise ValueError("basis is singular")
            pivot = min(nonzero, key=lambda j: abs(cols[j][i]))
            if pivot != i:
                cols[pivot], cols[i] = cols[i], cols[pivot]
            done = True
            for j in range(i):
                if cols[j][i] != 0:
                    q = cols[j][i] // cols[i][i]
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[i])]
                    if cols[j][i] != 0:
                        done = False
            if done:
                break
        if cols[i][i] < 0:
            cols[i] = [-a for a in cols[i]]
        for j in range(i + 1, n):
            q = cols[j][i] // cols[i][i]
            if q:
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[i])]
    return tuple(tuple(c) for c in cols)


@dataclass(frozen=True)
class SublatticePattern:
    """Broadcasts at every point of a full-rank sublattice of Z^n.

    The basis is stored as columns and normalized to Hermite form on
    construction, so two descriptions of the same lattice compare equal.
    """

    basis: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "basis", hermite_normal_form(self.basis))

    @property
    def n(self) -> int:
        return len(self.basis)

    @property
    def index(self) -> int:
        """Number of cosets: the determinant of the basis."""
        return math.prod(self.basis[i][i] for i in range(self.n))

    def contains(self, point: LatticePoint) -> bool:
        """Whether the point lies on the sublattice."""
        if len(point) != self.n:
            raise ValueError(f"point must have {self.n} coordinates")
        residue = list(point)
        for i in range(self.n - 1, -1, -1):
            q, rem = divmod(residue[i], self.basis[i][i])
            if rem:
                return False
            for k in range(i + 1):
                residue[k] -= q * self.basis[i][k]
        return True

    def coset_representatives(self) -> tuple[LatticePoint, ...]:
        """One point per coset: the box spanned by the basis diagonals."""
        ranges = [range(self.basis[i][i]) for i in range(self.n)]
        return tuple(itertools.product(*ranges))

    def __str__(self) -> str:
        if self.n == 2 and self.basis[1][1] == 1:
            return f"T({self.basis[0][0]},{self.basis[1][0]})"
        return "L(" + "; ".join(",".join(map(str, col)) for col in self.basis) + ")"


def lattice_receptions(
    params: Params, pattern: SublatticePattern
) -> dict[LatticePoint, int]:
    """Reception at one representative of every coset of the pattern.

    Reception is constant on cosets, so this is the complete profile.
    """
    t = params.t
    shells = [(t - d, shell_enumerate(pattern.n, d)) for d in range(t)]
    out: dict[LatticePoint, int] = {}
    for rep in pattern.coset_representatives():
        total = 0
        for weight, offsets in shells:
            for off in offsets:
                if pattern.contains(tuple(a + b for a, b in zip(rep, off))):
                    total += weight
        out[rep] = total
    return out


def is_dominating_lattice(
    params: Params,
    pattern: SublatticePattern,
    index_cap: int = DEFAULT_INDEX_CAP,
) -> bool:
    """Whether every point of Z^n receives at least r from the pattern.

    Checks one representative per coset and stops counting a representative
    as soon as it reaches r. Refuses patterns with more than index_cap
    cosets.
    """
    if pattern.index > index_cap:
        raise IndexCapExceeded(
            f"pattern has {pattern.index} cosets, above the cap of {index_cap}"
        )
    t, r = params.t, params.r
    shells = [(t - d, shell_enumerate(pattern.n, d)) for d in range(t)]
    for rep in pattern.coset_representatives():
        total = 0
        for weight, offsets in shells:
            for off in offsets:
                if pattern.contains(tuple(a + b for a, b in zip(rep, off))):
                    total += weight
                    if total >= r:
                        break
            if total >= r:
                break
        if total < r:
            return False
    return True


def lattice_reception_table(
    params: Params, pattern: SublatticePattern
) -> ReceptionProfile:
    """Row breakdown for a two-dimensional pattern with one broadcast per row.

    Such a pattern is exactly a tower, so this delegates to the tower table.
    """
    if pattern.n != 2:
        raise ValueError("reception tables are only defined in dimension 2")
    if pattern.basis[1][1] != 1:
        raise ValueError(
            "pattern skips rows; only one-broadcast-per-row patterns have a table"
        )
    tower = TowerPattern(pattern.basis[0][0], pattern.basis[1][0])
    return reception_table(params, tower)


def lattice_search_3d(
    params: Params, index_cap: int = DEFAULT_INDEX_CAP
) -> SublatticePattern:
    """Sparsest dominating pattern of tower form in Z^3.

    Bases searched are ((d,0,0), (e1,1,0), (e2,0,1)): one broadcast per line
    of the last two coordinates, so the index is d. Largest d wins, with
    (e1, e2) in ascending order breaking ties; d = 1 always dominates.
    """
    if index_cap < 1:
        raise ValueError("index_cap must be at least 1")
    top = min(index_cap, max_potential_d(3, params))
    for d in range(top, 0, -1):
        for e1 in range(d):
            for e2 in range(d):
                pattern = SublatticePattern(((d, 0, 0), (e1, 1, 0), (e2, 0, 1)))
                if is_dominating_lattice(params, pattern, index_cap):
                    return pattern
    raise AssertionError("unreachable: the identity basis always dominates")

"""Coverage of a single broadcast and the resulting grid lower bounds.

A broadcast of strength t at a point of Z^n delivers reception t - d to every
point at L1 distance d < t, but any one receiver only counts up to r of it.
The coverage C_{t,r}(Z^n) is the total capped reception a single broadcast
can deliver; dividing it into the demand r * |V| of a finite grid gives a
lower bound on how many broadcasts a dominating set needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lattice_geometry import shell_size


@dataclass(frozen=True)
class Params:
    """Broadcast strength t and reception demand r, with t >= r >= 1."""

    t: int
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("r must be at least 1")
        if self.t < self.r:
            raise ValueError("t must be at least r")


@dataclass(frozen=True)
class GridDims:
    """Side lengths of a finite grid graph, each at least 1."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.dims:
            raise ValueError("grid needs at least one dimension")
        if any(m < 1 for m in self.dims):
            raise ValueError("grid dimensions must be at least 1")

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def volume(self) -> int:
        return math.prod(self.dims)


def coverage(n: int, params: Params) -> int:
    """Capped reception a single broadcast delivers over all of Z^n.

    Shells at distance d <= t - r receive the full cap r each; closer to the
    boundary the reception t - d itself is below r. The center always counts
    r, which is why the final term is r and not t.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    t, r = params.t, params.r
    boundary = sum((t - d) * shell_size(n, d) for d in range(t - r + 1, t))
    interior = r * sum(shell_size(n, d) for d in range(1, t - r + 1))
    return boundary + interior + r


# Closed forms of coverage(n, (t, r)) for small n, as polynomials in t and r.
# Keyed by n; each entry maps (t_power, r_power) to a Fraction coefficient.
_CLOSED_FORMS: dict[int, dict[tuple[int, int], Fraction]] = {
    1: {
        (1, 1): Fraction(2),
        (0, 2): Fraction(-1),
    },
    2: {
        (0, 3): Fraction(2, 3),
        (1, 2): Fraction(-2),
        (2, 1): Fraction(2),
        (0, 1): Fraction(1, 3),
    },
    3: {
        (0, 4): Fraction(-1, 3),
        (1, 3): Fraction(4, 3),
        (2, 2): Fraction(-2),
        (0, 2): Fraction(-2, 3),
        (3, 1): Fraction(4, 3),
        (1, 1): Fraction(4, 3),
    },
    4: {
        (0, 5): Fraction(2, 15),
        (1, 4): Fraction(-2, 3),
        (2, 3): Fraction(4, 3),
        (0, 3): Fraction(2, 3),
        (3, 2): Fraction(-4, 3),
        (1, 2): Fraction(-2),
        (4, 1): Fraction(2, 3),
        (2, 1): Fraction(2),
        (0, 1): Fraction(1, 5),
    },
}


def coverage_closed_form(n: int, params: Params) -> int:
    """Coverage via the closed-form polynomial, available for n in 1..4.

    Agrees with coverage(n, params) on every valid input; the polynomial is
    exact, so the Fraction total is always an integer.
    """
    if n not in _CLOSED_FORMS:
        raise ValueError(f"no closed form for dimension {n}; use coverage()")
    t, r = params.t, params.r
    total = Fraction(0)
    for (tp, rp), coeff in _CLOSED_FORMS[n].items():
        total += coeff * t**tp * r**rp
    assert total.denominator == 1
    return int(total)


def domination_lower_bound(grid: GridDims, params: Params) -> int:
    """Least possible size of a dominating broadcast set on the grid.

    Every vertex needs reception r and one broadcast supplies at most the
    full-lattice coverage, so ceil(r * volume / coverage) broadcasts are
    required. Grid boundary effects only make the true need larger.
    """
    c = coverage(grid.n, params)
    demand = params.r * grid.volume
    return -((-demand) // c)


def max_potential_d(n: int, params: Params) -> int:
    """Largest plausible period d for a pattern with one broadcast per d cells.

    A pattern placing one broadcast in every d lattice cells delivers average
    reception coverage / d, which must reach r; hence d <= coverage / r.
    """
    return coverage(n, params) // params.r

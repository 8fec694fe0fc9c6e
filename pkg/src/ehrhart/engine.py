"""Delta-vector computation and Ehrhart counting.

Two independent routes are provided on purpose:

* ``delta_from_box`` enumerates the integer points of the half-open
  fundamental parallelepiped of the lifted simplex, via Smith normal form of
  the lifted vertex matrix.  It scales with the normalized volume, not the
  dimension, so it handles the large-d constructed simplices.
* ``count_points`` scans the bounding box of a dilate and tests membership
  exactly; with ``delta_from_counts`` it forms the slow oracle used for
  cross-checking at desk scale.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BudgetExceededError, InconsistentCountsError, InternalInconsistencyError
from .intlinalg import IntegerMatrix, determinant, inverse_unimodular, smith_normal_form, solve_rational
from .simplex import LatticeSimplex

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class DeltaVector:
    """The sequence (delta_0, ..., delta_d); always starts with 1, never negative."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise InconsistentCountsError("empty delta vector")
        if self.entries[0] != 1:
            raise InconsistentCountsError(f"delta_0 = {self.entries[0]}, must be 1")
        if any(e < 0 for e in self.entries):
            raise InconsistentCountsError(f"negative entry in {self.entries}")

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    @property
    def top_index(self) -> int:
        """s = max{i : delta_i != 0}."""
        return max(i for i, e in enumerate(self.entries) if e != 0)

    @property
    def normalized_volume(self) -> int:
        return sum(self.entries)

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class BoxPoint:
    """Integer point of the half-open parallelepiped over the lifted simplex.

    ``coefficients`` are the barycentric weights in [0, 1); ``degree`` is the
    last coordinate of the point, equal to the integer sum of the weights.
    """

    point: tuple[int, ...]
    degree: int
    coefficients: tuple[Fraction, ...]


def box_points(s: LatticeSimplex) -> list[BoxPoint]:
    """All integer points of the fundamental parallelepiped, graded by degree.

    Enumerates coset representatives of Z^(d+1) modulo the row lattice of the
    lifted vertex matrix through its Smith normal form, then reduces each
    representative's barycentric coordinates into [0, 1).
    """
    m = s.lifted_matrix()
    snf = smith_normal_form(m)
    v_inv = inverse_unimodular(snf.right)
    mt = m.transpose()
    k = s.dim + 1
    seen: dict[tuple[Fraction, ...], BoxPoint] = {}
    for w in itertools.product(*(range(di) for di in snf.diag)):
        # Pull the representative back from SNF coordinates.
        z = tuple(sum(w[i] * v_inv[i, j] for i in range(k)) for j in range(k))
        r = solve_rational(mt, z)
        frac = tuple(x - math.floor(x) for x in r)
        if frac in seen:
            continue
        point = tuple(
            sum(f * m[i, j] for i, f in enumerate(frac)) for j in range(k)
        )
        assert all(c.denominator == 1 for c in point)
        point_int = tuple(int(c) for c in point)
        degree = point_int[-1]
        seen[frac] = BoxPoint(point=point_int, degree=degree, coefficients=frac)
    pts = sorted(seen.values(), key=lambda b: (b.degree, b.point))
    assert len(pts) == abs(determinant(m))
    return pts


def delta_from_box(s: LatticeSimplex) -> DeltaVector:
    """delta_i = number of parallelepiped points of degree i."""
    entries = [0] * (s.dim + 1)
    for bp in box_points(s):
        entries[bp.degree] += 1
    return DeltaVector(tuple(entries))


def interior_box_degrees(s: LatticeSimplex) -> list[int]:
    """Degrees of the dual point set with coefficients in (0, 1].

    Each weight r maps to 1 - r, except zeros map to 1; the origin therefore
    becomes the all-ones point of degree d + 1.
    """
    degrees = []
    for bp in box_points(s):
        comp = [Fraction(1) - r if r > 0 else Fraction(1) for r in bp.coefficients]
        deg = sum(comp)
        assert deg.denominator == 1
        degrees.append(int(deg))
    return sorted(degrees)


def count_points(
    s: LatticeSimplex, n: int, strict: bool = False, budget: int = DEFAULT_BUDGET
) -> int:
    """|nP ∩ Z^N| by bounding-box scan; strict counts the interior dilate.

    Refuses (rather than truncates) when the bounding box exceeds the budget.
    """
    if n < 0:
        raise ValueError("dilation factor must be nonnegative")
    lo = [min(n * v[j] for v in s.vertices) for j in range(s.ambient_dim)]
    hi = [max(n * v[j] for v in s.vertices) for j in range(s.ambient_dim)]
    total = 1
    for a, b in zip(lo, hi):
        total *= b - a + 1
    if total > budget:
        raise BudgetExceededError(total, budget)
    count = 0
    for p in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if s.contains(p, n, strict=strict):
            count += 1
    return count


def delta_from_counts(counts: Sequence[int], d: int) -> DeltaVector:
    """Invert the generating-function relation from i(P, 1..d) to delta.

    delta_i = sum_{j=0..i} (-1)^j C(d+1, j) i(P, i-j), with i(P, 0) = 1.
    A negative entry means the input was not the counting sequence of an
    integral polytope.
    """
    if len(counts) != d:
        raise InconsistentCountsError(f"need {d} counts i(P,1..d), got {len(counts)}")
    ivals = [1] + [int(c) for c in counts]
    entries = []
    for i in range(d + 1):
        e = sum((-1) ** j * math.comb(d + 1, j) * ivals[i - j] for j in range(i + 1))
        if e < 0:
            raise InconsistentCountsError(f"delta_{i} = {e} < 0 for counts {list(counts)}")
        entries.append(e)
    return DeltaVector(tuple(entries))


def binomial_poly(a: int, d: int) -> int:
    """C(a, d) by the polynomial a(a-1)...(a-d+1)/d!, valid for negative a."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    num = 1
    for j in range(d):
        num *= a - j
    return num // math.factorial(d)


def evaluate_ehrhart(delta: DeltaVector, n: int) -> int:
    """i(P, n) = sum_i delta_i * C(n + d - i, d), for any integer n."""
    d = delta.d
    return sum(e * binomial_poly(n + d - i, d) for i, e in enumerate(delta.entries))


def evaluate_interior(delta: DeltaVector, n: int) -> int:
    """i*(P, n) = (-1)^d i(P, -n) via reciprocity; n must be positive."""
    if n < 1:
        raise ValueError("interior evaluation needs n >= 1")
    val = (-1) ** delta.d * evaluate_ehrhart(delta, -n)
    if val < 0:
        raise InternalInconsistencyError(f"negative interior count {val} for {delta.entries}")
    return val


def ehrhart_coefficients(delta: DeltaVector) -> list[Fraction]:
    """Coefficients of i(P, n) as a polynomial in n, constant term first."""
    d = delta.d
    # Interpolate from d+1 exact evaluations (Newton forward differences).
    values = [Fraction(evaluate_ehrhart(delta, n)) for n in range(d + 1)]
    coeffs = [Fraction(0)] * (d + 1)
    # Divided differences on the nodes 0..d give the Newton form; expand it.
    dd = list(values)
    for level in range(1, d + 1):
        for i in range(d, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / level
    # Newton basis products (n)(n-1)...(n-k+1), expanded incrementally.
    basis = [Fraction(1)]
    for k in range(d + 1):
        for j, b in enumerate(basis):
            coeffs[j] += dd[k] * b
        new_basis = [Fraction(0)] * (len(basis) + 1)
        for j, b in enumerate(basis):
            new_basis[j] -= k * b
            new_basis[j + 1] += b
        basis = new_basis
    return coeffs

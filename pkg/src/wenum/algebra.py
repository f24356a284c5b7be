"""Algebra of weight enumerators: MacWilliams transform, divisibility,
formal self-duality, and the at-most-two-distinct-roots classification.

Everything here is exact integer/rational arithmetic.  The three special
shapes (x^n, (x+(q-1))^n, (x^2+(q-1))^(n/2)) are recognized by direct
coefficient comparison against binomial expansions, and the distinct-root
count of the general case comes from the degree of gcd(W, W') over Q.
Floating point lives only in the roots/stabilizer modules.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import polyx
from .codes import (
    WeightEnumerator,
    full_space_enumerator,
    pair_sum_enumerator,
    zero_code_enumerator,
)
from .errors import DomainError, NotACodeEnumeratorError


def substitute_linear(coeffs, a, b, c, d):
    """Coefficients of W(a*x + b*y, c*x + d*y) for W given by `coeffs`.

    Ring-generic binomial convolution: exact over ints/fractions, numeric
    over complex.  Index i of the result holds the x^i y^(n-i) coefficient.
    """
    n = len(coeffs) - 1
    out = [0] * (n + 1)
    for i, w in enumerate(coeffs):
        if not w:
            continue
        # (a x + b y)^i as a coefficient list over s = x-degree
        first = [math.comb(i, s) * a**s * b ** (i - s) for s in range(i + 1)]
        second = [
            math.comb(n - i, t) * c**t * d ** (n - i - t) for t in range(n - i + 1)
        ]
        for s, fs in enumerate(first):
            if not fs:
                continue
            for t, sc in enumerate(second):
                out[s + t] += w * fs * sc
    return out


def macwilliams(w: WeightEnumerator, q: int, code_size: int) -> WeightEnumerator:
    """Weight enumerator of the dual code: W(x+(q-1)y, x-y) / code_size.

    Exact; raises if the division is not exact (then the input was not the
    enumerator of a code of the stated size).
    """
    if code_size < 1:
        raise DomainError("code size must be >= 1")
    raw = substitute_linear(w.coeffs, 1, q - 1, 1, -1)
    out = []
    for i, v in enumerate(raw):
        quo, rem = divmod(v, code_size)
        if rem:
            raise NotACodeEnumeratorError(
                f"MacWilliams transform coefficient of x^{i} is {v}, "
                f"not divisible by #C = {code_size}"
            )
        if quo < 0:
            raise NotACodeEnumeratorError(
                f"MacWilliams transform gives negative coefficient at x^{i}"
            )
        out.append(quo)
    return WeightEnumerator(out)


def divisibility(w: WeightEnumerator) -> int:
    """Largest Delta dividing every weight that occurs.

    Delta > 1 exactly when D_Delta stabilizes the homogeneous enumerator.
    Returns 0 for x^n (only the zero weight occurs, so every Delta works
    and no largest one exists).
    """
    if w.coeffs[-1] != 1:
        raise NotACodeEnumeratorError("a_n != 1: not derived from a code")
    g = 0
    n = w.n
    for i, a in enumerate(w.coeffs):
        if a and n - i:
            g = math.gcd(g, n - i)
    return g


def is_formally_self_dual(w: WeightEnumerator, q: int, code_size: int) -> bool:
    """True iff the MacWilliams transform fixes w and code_size^2 = q^n."""
    if code_size**2 != q**w.n:
        return False
    try:
        return macwilliams(w, q, code_size) == w
    except NotACodeEnumeratorError:
        return False


class Shape(Enum):
    ZERO_CODE = "ZeroCode"
    FULL_SPACE = "FullSpace"
    PAIR_SUM = "PairSum"
    THREE_PLUS_ROOTS = "ThreePlusRoots"


@dataclass(frozen=True)
class ClassificationResult:
    shape: Shape
    n: int
    q: int
    distinct_roots: int | None = None  # ThreePlusRoots only
    stabilizer_bound: int | None = None  # d! * n, finite-case cap

    @property
    def infinite_stabilizer(self) -> bool:
        return self.shape is not Shape.THREE_PLUS_ROOTS


def distinct_root_count(w: WeightEnumerator) -> int:
    """Number of distinct complex roots of W(x, 1): n - deg gcd(W, W')."""
    p = tuple(w.coeffs)
    g = polyx.monic_gcd(p, polyx.derivative(p))
    return w.n - polyx.degree(g)


def classify(w: WeightEnumerator, q: int) -> ClassificationResult:
    """Sort a code enumerator into the two-roots shapes or ThreePlusRoots.

    The first three shapes force an infinite stabilizer; otherwise the
    stabilizer is finite of order at most d! * n for d distinct roots.
    """
    if w.coeffs[-1] != 1:
        raise NotACodeEnumeratorError("a_n != 1: not derived from a code")
    n = w.n
    if w == zero_code_enumerator(n):
        return ClassificationResult(Shape.ZERO_CODE, n, q)
    if w == full_space_enumerator(n, q):
        return ClassificationResult(Shape.FULL_SPACE, n, q)
    if n % 2 == 0 and w == pair_sum_enumerator(n, q):
        return ClassificationResult(Shape.PAIR_SUM, n, q)
    d = distinct_root_count(w)
    if d < 3:
        # a genuine code enumerator with <= 2 distinct roots must match one
        # of the shapes above for its own q
        raise NotACodeEnumeratorError(
            f"{d} distinct roots but no admissible two-root shape for q={q}"
        )
    return ClassificationResult(
        Shape.THREE_PLUS_ROOTS, n, q,
        distinct_roots=d,
        stabilizer_bound=math.factorial(d) * n,
    )


@dataclass(frozen=True)
class InvariantMatrix:
    """2x2 invariant with exact symbolic content.

    `rational` holds the entries before scaling, as Fractions; the actual
    matrix is scale * rational with the (1,1) entry multiplied by a
    primitive zeta_order-th root of unity when zeta_order > 1, and
    scale = q^(-1/2) when inv_sqrt_q is set.
    """

    label: str
    rational: tuple
    zeta_order: int = 1
    inv_sqrt_q: int | None = None

    def as_complex(self):
        m = [[complex(Fraction(v)) for v in row] for row in self.rational]
        if self.zeta_order > 1:
            m[1][1] *= cmath.exp(2j * cmath.pi / self.zeta_order)
        if self.inv_sqrt_q is not None:
            s = 1.0 / math.sqrt(self.inv_sqrt_q)
            m = [[s * v for v in row] for row in m]
        return ((m[0][0], m[0][1]), (m[1][0], m[1][1]))


def d_delta_matrix(delta: int) -> InvariantMatrix:
    """diag(1, zeta_Delta), the divisibility invariant."""
    if delta < 1:
        raise DomainError("Delta must be >= 1")
    return InvariantMatrix(
        label=f"D_{delta}",
        rational=((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))),
        zeta_order=delta,
    )


def self_dual_matrix(q: int) -> InvariantMatrix:
    """q^(-1/2) [[1, q-1], [1, -1]], the formal self-duality invariant."""
    if q < 2:
        raise DomainError("q must be >= 2")
    return InvariantMatrix(
        label=f"S_{q}",
        rational=((Fraction(1), Fraction(q - 1)), (Fraction(1), Fraction(-1))),
        inv_sqrt_q=q,
    )

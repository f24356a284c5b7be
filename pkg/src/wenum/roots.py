"""Certified complex roots of W(x, 1).

Pipeline: exact Yun square-free decomposition over Q, simultaneous
Weierstrass (Durand-Kerner) iteration on the square-free part, then an
a-posteriori certificate computed in exact rational arithmetic from the
integer coefficients.  For monic p of degree d and pairwise-distinct
approximations z_1..z_d, every root of p lies in the union of the disks

    D(z_j, d * |p(z_j)| / prod_{k != j} |z_j - z_k|),

and if the disks are pairwise disjoint each one contains exactly one
root.  Radii are evaluated as exact fractions (float centers convert to
rationals exactly) with outward-rounded square roots, so a reported disk
is a proof, not an estimate.

If the target radius is unreachable in double precision the iteration
escalates to mpmath working precision; certification always happens at
the final double-precision centers with exact coefficients.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import polyx
from .codes import WeightEnumerator
from .errors import (
    ClusterUnresolvedError,
    DomainError,
    PrecisionFailureError,
)

_SWEEP_CAP = 1000
_MPMATH_DPS = (50, 100)  # escalation levels after plain doubles


@dataclass(frozen=True)
class SquareFreeData:
    """Square-free part of a weight enumerator with factor multiplicities.

    `squarefree` is the primitive integer polynomial whose roots are the
    distinct roots of W; `factors` lists Yun factors (poly, multiplicity)
    whose product with multiplicities rebuilds W up to a positive constant.
    """

    squarefree: tuple
    factors: tuple

    @property
    def degree(self) -> int:
        return polyx.degree(self.squarefree)


def square_free(w: WeightEnumerator) -> SquareFreeData:
    """Exact repeated-gcd (Yun) decomposition of W(x, 1)."""
    p = tuple(w.coeffs)
    if polyx.degree(p) < 0:
        raise DomainError("zero polynomial has no square-free part")
    factors = polyx.yun_squarefree(p)
    sf = (1,)
    for f, _ in factors:
        sf = polyx.mul(sf, f)
    sf = polyx.primitive_int(sf) if factors else ()
    return SquareFreeData(squarefree=sf, factors=tuple(factors))


@dataclass(frozen=True)
class Root:
    center: complex
    radius: float
    multiplicity: int


@dataclass(frozen=True)
class RootSet:
    """Certified, pairwise-disjoint root disks of the square-free part."""

    roots: tuple
    eps: float  # max radius
    N: float  # upper bound on the modulus of every true root

    def centers(self):
        return [r.center for r in self.roots]

    def __len__(self):
        return len(self.roots)


# --- exact certification helpers -------------------------------------------


def _sqrt_upper(fr: Fraction) -> Fraction:
    """An upper bound on sqrt(fr) as a fraction (exact outward rounding)."""
    if fr < 0:
        raise ValueError("negative radicand")
    if fr == 0:
        return Fraction(0)
    num, den = fr.numerator, fr.denominator
    s = math.isqrt(num * den)
    if s * s < num * den:
        s += 1
    return Fraction(s, den)


def _float_up(fr: Fraction) -> float:
    x = float(fr)
    while Fraction(x) < fr:
        x = math.nextafter(x, math.inf)
    return x


def _eval_exact(poly, zre: Fraction, zim: Fraction):
    """Horner evaluation of an integer polynomial at an exact complex point."""
    are, aim = Fraction(0), Fraction(0)
    for c in reversed(poly):
        are, aim = are * zre - aim * zim + c, are * zim + aim * zre
    return are, aim


def _abs2(fr_re: Fraction, fr_im: Fraction) -> Fraction:
    return fr_re * fr_re + fr_im * fr_im


def certified_radii(poly, centers):
    """Exact per-center inclusion radii (as Fractions) for `poly`.

    poly must have integer coefficients; centers are complex doubles.
    """
    d = polyx.degree(poly)
    lc = poly[-1]
    exact = [(Fraction(z.real), Fraction(z.imag)) for z in centers]
    radii = []
    for j, (re, im) in enumerate(exact):
        pre, pim = _eval_exact(poly, re, im)
        num2 = _abs2(pre, pim) * d * d
        den2 = Fraction(lc * lc)
        for k, (re2, im2) in enumerate(exact):
            if k != j:
                den2 *= _abs2(re - re2, im - im2)
        radii.append(_sqrt_upper(num2 / den2))
    return radii


def _disks_disjoint(centers, radii):
    exact = [(Fraction(z.real), Fraction(z.imag)) for z in centers]
    for j in range(len(centers)):
        for k in range(j + 1, len(centers)):
            sep2 = _abs2(
                exact[j][0] - exact[k][0], exact[j][1] - exact[k][1]
            )
            lim = radii[j] + radii[k]
            if sep2 <= lim * lim:
                return False
    return True


# --- iteration --------------------------------------------------------------


def _cauchy_bound(poly) -> float:
    d = polyx.degree(poly)
    lc = abs(poly[-1])
    top = max(abs(c) for c in poly[:-1]) if d else 0
    return 1.0 + _float_up(Fraction(top, lc))


def _fujiwara_bound(poly) -> float:
    """2 * max_i (|a_(d-i)|/|a_d|)^(1/i), another all-roots enclosure.

    Far tighter than the Cauchy bound when the middle coefficients are
    huge (MacWilliams duals reach ~q^n scale); starting the iteration on
    the Cauchy circle would overflow doubles there, since |z|^d can pass
    1e308 already at degree ~30.
    """
    d = polyx.degree(poly)
    lc = abs(poly[-1])
    best = 0.0
    for i in range(1, d + 1):
        c = abs(poly[d - i])
        if not c:
            continue
        # log via bit lengths stays safe for arbitrarily big ints
        lg = (c.bit_length() - lc.bit_length() + 1) * math.log(2)
        best = max(best, math.exp(lg / i))
    return 2.0 * best if best else 1.0


def _weierstrass(poly, z, cap, tol):
    """In-place simultaneous iteration; returns final max correction.

    Stops at the correction tolerance or once no sweep in a 40-sweep
    window beat the running best by a factor 1.5 (precision exhausted at
    the current working precision; geometric convergence from the start
    circle improves faster than that even at degree ~60).
    """
    d = len(z)
    lc = poly[-1]
    corr_max = math.inf
    best = math.inf
    since_best = 0
    for _ in range(cap):
        corr_max = 0.0
        for j in range(d):
            num = polyx.evaluate(poly, z[j])
            den = lc
            for k in range(d):
                if k != j:
                    diff = z[j] - z[k]
                    if diff == 0:
                        diff = (abs(z[j]) + 1e-6) * 1e-9
                    den = den * diff
            if den == 0:
                continue
            c = num / den
            z[j] = z[j] - c
            mag = abs(c)
            if mag > corr_max:
                corr_max = mag
        if corr_max <= tol:
            break
        if corr_max * 1.5 <= best:
            best = corr_max
            since_best = 0
        else:
            since_best += 1
            if since_best >= 40:
                break
    return corr_max


def _assign_multiplicities(sf: SquareFreeData, centers, radii):
    """Which Yun factor owns each certified disk.

    With one factor this is immediate.  Otherwise each factor claims the
    deg(f) disks with smallest exact |f(center)|, and the claim is certified
    by checking that the factor's own inclusion radius at those centers fits
    inside the already-disjoint global disk (so the disk's unique root is a
    root of that factor).
    """
    if len(sf.factors) == 1:
        m = sf.factors[0][1]
        return [m] * len(centers)
    mult = [0] * len(centers)
    claimed = set()
    for f, m in sf.factors:
        deg_f = polyx.degree(f)
        scores = []
        for idx, z in enumerate(centers):
            re, im = Fraction(z.real), Fraction(z.imag)
            scores.append((_abs2(*_eval_exact(f, re, im)), idx))
        scores.sort()
        mine = [idx for _, idx in scores[:deg_f]]
        if claimed & set(mine):
            return None
        sub_centers = [centers[i] for i in mine]
        sub_radii = certified_radii(f, sub_centers)
        for r_f, idx in zip(sub_radii, mine):
            if r_f > radii[idx]:
                return None
        for idx in mine:
            claimed.add(idx)
            mult[idx] = m
    if len(claimed) != len(centers):
        return None
    return mult


def find_roots(sf: SquareFreeData, target_eps: float) -> RootSet:
    """Certified disks for the distinct roots of the square-free part.

    Iterates until every exact radius is <= target_eps and the disks are
    pairwise disjoint, escalating working precision when doubles stall.
    """
    if target_eps <= 0:
        raise DomainError("target_eps must be positive")
    poly = sf.squarefree
    d = polyx.degree(poly)
    if d < 1:
        return RootSet(roots=(), eps=0.0, N=0.0)
    cauchy = _cauchy_bound(poly)
    start_radius = min(cauchy, _fujiwara_bound(poly))

    def _circle():
        return [
            start_radius * complex(math.cos(2 * math.pi * j / d + 0.4),
                                   math.sin(2 * math.pi * j / d + 0.4))
            for j in range(d)
        ]

    z = _circle()
    eps_frac = Fraction(target_eps)
    tol = 0.25 * target_eps / d
    last_failure = "did not converge"
    for level in range(1 + len(_MPMATH_DPS)):
        if not all(cmath.isfinite(v) for v in z):
            z = _circle()
        if level == 0:
            _weierstrass(poly, z, _SWEEP_CAP, tol)
            centers = list(z)
        else:
            with mpmath.workdps(_MPMATH_DPS[level - 1]):
                zm = [mpmath.mpc(v) for v in z]
                _weierstrass([mpmath.mpf(c) for c in poly], zm, _SWEEP_CAP, tol)
                centers = [complex(v) for v in zm]
                z = centers
        if not all(cmath.isfinite(v) for v in centers):
            last_failure = "iteration diverged"
            continue
        centers.sort(key=lambda v: (v.real, v.imag))
        radii = certified_radii(poly, centers)
        if all(r <= eps_frac for r in radii):
            if not _disks_disjoint(centers, radii):
                last_failure = "overlap"
                continue
            mult = _assign_multiplicities(sf, centers, radii)
            if mult is None:
                last_failure = "multiplicity assignment uncertified"
                continue
            return _build_rootset(poly, centers, radii, mult, cauchy)
        last_failure = "radius above target"
    if last_failure == "overlap":
        raise ClusterUnresolvedError(
            f"certified disks overlap at eps={target_eps}"
        )
    raise PrecisionFailureError(
        f"could not certify roots at eps={target_eps}: {last_failure}"
    )


def _build_rootset(poly, centers, radii, mult, cauchy):
    roots = []
    n_bound = Fraction(0)
    for zc, r, m in zip(centers, radii, mult):
        zabs = _sqrt_upper(_abs2(Fraction(zc.real), Fraction(zc.imag)))
        n_bound = max(n_bound, zabs + r)
        roots.append(Root(center=zc, radius=_float_up(r), multiplicity=m))
    eps = max((r.radius for r in roots), default=0.0)
    n_val = _float_up(n_bound)
    # every certified disk must sit inside the Cauchy bound
    if n_val > cauchy + 2 * eps:
        raise PrecisionFailureError(
            "certified root bound exceeds the Cauchy bound"
        )
    return RootSet(roots=tuple(roots), eps=eps, N=n_val)


def roots_of(w: WeightEnumerator, target_eps: float) -> RootSet:
    """Square-free decomposition and certified roots in one step."""
    return find_roots(square_free(w), target_eps)

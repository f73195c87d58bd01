"""Numerical check of the explicit formula: a truncated sum over zeta
zeros against a sum over prime powers plus an archimedean integral,
both applied to smooth bump functions supported in R^{>0}.

Phi(alpha) = integral of e^{t alpha} phi(t) dt over the support, by
Gauss-Legendre quadrature with node doubling; an adaptive-Simpson
integrator is included as the independent cross-check. Truncation is
raw: K zeros, primes up to the bound, no smoothing factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

import numpy as np
from scipy.special import roots_legendre

from .ntheory import primes_upto
from .util import kahan_sum

QUAD_START_NODES = 32
QUAD_MAX_NODES = 2**16
QUAD_REL_TOL = 1e-12


@dataclass(frozen=True)
class TestFunction:
    """Bump exp(-1/(1 - ((t-c)/r)^2)) on (c-r, c+r), zero outside."""

    __test__ = False  # keep pytest from collecting despite the Test prefix

    c: float
    r: float

    def __post_init__(self):
        if self.r <= 0:
            raise ValueError("radius must be positive")
        if self.c - self.r <= 0:
            raise ValueError("support must lie inside the positive reals")

    @property
    def support(self) -> tuple[float, float]:
        return (self.c - self.r, self.c + self.r)

    def values(self, t: np.ndarray) -> np.ndarray:
        u = (np.asarray(t, dtype=np.float64) - self.c) / self.r
        inside = np.abs(u) < 1
        safe = np.where(inside, 1.0 - u * u, 1.0)
        return np.where(inside, np.exp(-1.0 / safe), 0.0)

    def __call__(self, t: float) -> float:
        u = (t - self.c) / self.r
        if abs(u) >= 1:
            return 0.0
        return math.exp(-1.0 / (1.0 - u * u))


@dataclass(frozen=True)
class ZeroTable:
    gammas: tuple[float, ...]

    def __len__(self):
        return len(self.gammas)


def load_zeros(path) -> ZeroTable:
    """Read a one-zero-per-line table; '#' starts a comment.

    Validates strict monotonicity (error names the line) and that the
    first zero looks like the first zero of zeta (in [14, 14.2])."""
    gammas: list[float] = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                value = float(text)
            except ValueError:
                raise ValueError(f"non-numeric value at line {lineno}") from None
            if not math.isfinite(value) or value <= 0:
                raise ValueError(f"nonpositive zero at line {lineno}")
            if gammas and value <= gammas[-1]:
                raise ValueError(f"non-monotone at line {lineno}")
            gammas.append(value)
    if not gammas:
        raise ValueError("no zeros")
    if not 14.0 <= gammas[0] <= 14.2:
        raise ValueError(
            f"first zero {gammas[0]} outside [14, 14.2]; wrong or truncated table?"
        )
    return ZeroTable(tuple(gammas))


def bundled_zeros_path():
    """Path of the zero table shipped with the package."""
    return resources.files("wittkit").joinpath("data/zeta_zeros_1000.txt")


def load_bundled_zeros() -> ZeroTable:
    return load_zeros(bundled_zeros_path())


_gl_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n not in _gl_cache:
        _gl_cache[n] = roots_legendre(n)
    return _gl_cache[n]


def _quad_doubling(vec_f, a: float, b: float):
    """Gauss-Legendre on [a, b], doubling nodes until successive values
    agree to 1e-12 relative (absolute for values below 1)."""
    mid, half = (a + b) / 2, (b - a) / 2
    prev = None
    n = QUAD_START_NODES
    while n <= QUAD_MAX_NODES:
        x, w = _gl_nodes(n)
        val = half * np.sum(w * vec_f(mid + half * x))
        if prev is not None and abs(val - prev) < QUAD_REL_TOL * max(1.0, abs(val)):
            return complex(val) if np.iscomplexobj(val) else float(val)
        prev = val
        n *= 2
    raise RuntimeError(f"quadrature did not converge within {QUAD_MAX_NODES} nodes")


_transform_cache: dict[tuple[float, float, complex], complex] = {}


def transform(phi: TestFunction, alpha: complex) -> complex:
    """Phi(alpha) = integral e^{t alpha} phi(t) dt over the support."""
    key = (phi.c, phi.r, complex(alpha))
    if key not in _transform_cache:
        a, b = phi.support
        alpha_c = complex(alpha)

        def integrand(t: np.ndarray) -> np.ndarray:
            return np.exp(t * alpha_c) * phi.values(t)

        _transform_cache[key] = complex(_quad_doubling(integrand, a, b))
    return _transform_cache[key]


def _adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, depth):
    m = (a + b) / 2
    lm, rm = (a + m) / 2, (m + b) / 2
    flm, frm = f(lm), f(rm)
    left = (m - a) / 6 * (fa + 4 * flm + fm)
    right = (b - m) / 6 * (fm + 4 * frm + fb)
    if depth <= 0:
        return left + right
    if abs(left + right - whole) < 15 * tol:
        return left + right + (left + right - whole) / 15
    return _adaptive_simpson(
        f, a, m, fa, flm, fm, left, tol / 2, depth - 1
    ) + _adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1)


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-12, depth: int = 48):
    """Second integrator, for cross-checking the quadrature."""
    fa, fm, fb = f(a), f((a + b) / 2), f(b)
    whole = (b - a) / 6 * (fa + 4 * fm + fb)
    return _adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, depth)


def transform_simpson(phi: TestFunction, alpha: complex, tol: float = 1e-12) -> complex:
    """Phi(alpha) by adaptive Simpson; independent of transform."""
    a, b = phi.support
    alpha_c = complex(alpha)
    return complex(
        adaptive_simpson(lambda t: math.exp(t * alpha_c.real) * phi(t)
                         * complex(math.cos(t * alpha_c.imag), math.sin(t * alpha_c.imag)),
                         a, b, tol=tol)
    )


def zero_side(phi: TestFunction, zeros: ZeroTable, K: int) -> float:
    """Phi(0) + Phi(1) - sum over the first K zeros of Phi at 1/2 +- i gamma.

    Both members of each conjugate pair are integrated independently;
    the imaginary residue must stay below 1e-10 and is then dropped."""
    if K < 0 or K > len(zeros):
        raise ValueError(f"K must be between 0 and the table size {len(zeros)}")
    total = transform(phi, 0.0) + transform(phi, 1.0)
    re_terms, im_terms = [total.real], [total.imag]
    for gamma in zeros.gammas[:K]:
        term = transform(phi, 0.5 + 1j * gamma) + transform(phi, 0.5 - 1j * gamma)
        re_terms.append(-term.real)
        im_terms.append(-term.imag)
    re, im = kahan_sum(re_terms), kahan_sum(im_terms)
    if abs(im) >= 1e-10:
        raise AssertionError(f"zero side imaginary residue {im} above 1e-10")
    return re


def prime_side(phi: TestFunction, prime_bound: int) -> float:
    """sum over p <= bound and k >= 1 of log p * phi(k log p), plus the
    archimedean integral of phi(t)/(1 - e^{-2t}) over the support."""
    lo, hi = phi.support
    if math.log(prime_bound) < hi:
        raise ValueError(
            f"prime bound too small: support reaches {hi:.6f}, log bound is"
            f" {math.log(prime_bound):.6f}"
        )
    terms = []
    for p in primes_upto(prime_bound):
        lp = math.log(p)
        k = max(1, math.floor(lo / lp) + 1)
        while k * lp < hi:
            terms.append(lp * phi(k * lp))
            k += 1
    prime_sum = kahan_sum(terms)

    def integrand(t: np.ndarray) -> np.ndarray:
        return phi.values(t) / (1.0 - np.exp(-2.0 * t))

    archimedean = float(_quad_doubling(integrand, lo, hi))
    return prime_sum + archimedean


def explicit_formula_defect(
    phi: TestFunction, zeros: ZeroTable, K: int, prime_bound: int
) -> dict:
    """Report both sides, their absolute difference, and how the defect
    moves along K in {10, 100, 1000} where the table has enough zeros."""
    zs = zero_side(phi, zeros, K)
    ps = prime_side(phi, prime_bound)
    report = {
        "bump": {"c": phi.c, "r": phi.r},
        "K": K,
        "prime_bound": prime_bound,
        "zero_side": zs,
        "prime_side": ps,
        "defect": abs(zs - ps),
        "convergence": [],
    }
    for k in (10, 100, 1000):
        if k <= len(zeros):
            report["convergence"].append(
                {"K": k, "defect": abs(zero_side(phi, zeros, k) - ps)}
            )
    return report

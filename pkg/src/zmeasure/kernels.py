"""Correlation kernels on the half-integer lattice and their continuum limit.

The determinantal process attached to the grand ensemble is generated by a
block-antidiagonal operator L built from the positive weights psi(+/-, k) and
the Cauchy-type matrix W(k, l) = 1/(k+l+1).  Its correlation kernel
K = L(1+L)^(-1) has closed-form blocks assembled from two families of
hypergeometric functions (R, S and their normalized versions P, Q).

Index convention, fixed once: the positive point k + 1/2 corresponds to row or
column k of the '++' block, the negative point -(k + 1/2) to index k of the
'--' block.

Diagonal entries of the '++' and '--' blocks are defined by a removable
singularity; the load-bearing route here is the convergent series coming from
the product form of the block (K++ = CD, K-- = DC), with a derivative-based
route kept as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .measures import AdmissibilityError, GrandParams, ZParams
from .specfun import (
    ConvergenceError,
    DomainError,
    PoleError,
    gauss_2f1_w,
    gauss_2f1_w_dc,
    loggamma,
    meixner_leading_coefficient,
    meixner_norm,
    meixner_polynomial,
    meixner_weight,
    realize,
    whittaker_w,
)

BLOCKS = ("++", "+-", "-+", "--")

DECAY_CERTIFICATE_RATIO = 1e-16
WHITTAKER_DIAGONAL_TOL = 1e-6


def _sign(sign) -> int:
    if sign in (1, +1, "+", "++"):
        return 1
    if sign in (-1, "-", "--"):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def half_integer_index(x) -> tuple[int, int]:
    """Map a half-integer point +-(k + 1/2) to (sign, k)."""
    f = Fraction(x) if not isinstance(x, float) else Fraction(x).limit_denominator(2)
    if isinstance(x, float) and abs(float(f) - x) > 1e-9:
        raise DomainError(f"{x!r} is not a half-integer")
    if f.denominator != 2 or f == 0:
        raise DomainError(f"{x!r} is not a half-integer")
    s = 1 if f > 0 else -1
    k = (abs(f.numerator) - 1) // 2
    return s, int(k)


def _check_pole_args(*values: complex) -> None:
    for v in values:
        v = complex(v)
        if v.imag == 0.0:
            r = round(v.real)
            if r <= 0 and abs(v.real - r) < 1e-12:
                raise PoleError(f"gamma argument {v.real} is a nonpositive integer")


@lru_cache(maxsize=200_000)
def _psi_cached(sign: int, u: float, gp: GrandParams) -> float:
    zp = gp.zp
    z, z_prime, xi = zp.z, zp.z_prime, gp.xi
    s = sign
    if zp.meixner_mode and s < 0:
        # (1 - z')_k hits zero at integer z'; use the finite product, which is
        # the continuous extension (identically zero beyond k = z').
        if u < 0 or u != int(u):
            raise DomainError("meixner-mode psi(-) is defined on nonnegative integers only")
        k = int(u)
        prod = complex(1.0)
        for j in range(k):
            prod *= (1 - z + j) * (1 - z_prime + j) / ((j + 1) * (j + 1))
        scale = math.sqrt(zp.t) * xi ** (k + 0.5) * (1.0 - xi) ** (-zp.z_sum)
        return realize(scale * prod)
    _check_pole_args(u + 1 + s * z, u + 1 + s * z_prime, u + 1)
    log_psi = (
        0.5 * math.log(zp.t)
        + (u + 0.5) * math.log(xi)
        + s * zp.z_sum * math.log1p(-xi)
        + loggamma(u + 1 + s * z)
        + loggamma(u + 1 + s * z_prime)
        - loggamma(1 + s * z)
        - loggamma(1 + s * z_prime)
        - 2.0 * loggamma(u + 1.0)
    )
    return realize(np.exp(log_psi))


def psi(sign, u: float, gp: GrandParams) -> float:
    """Weight psi(+/-, u) = t^(1/2) xi^(u+1/2) (1-xi)^(+-(z+z')) * Gamma ratios.

    Strictly positive at u >= 0 for admissible parameters; meromorphic in u.
    """
    return _psi_cached(_sign(sign), float(u), gp)


@lru_cache(maxsize=200_000)
def _rs_cached(sign: int, u: float, gp: GrandParams) -> tuple[float, float]:
    zp = gp.zp
    xi = gp.xi
    s = sign
    p = psi(s, u, gp)
    if p == 0.0:
        return 0.0, 0.0
    f1 = gauss_2f1_w(-s * zp.z, -s * zp.z_prime, u + 1.0, xi)
    f2 = gauss_2f1_w(1 - s * zp.z, 1 - s * zp.z_prime, u + 2.0, xi)
    r = p * realize(f1)
    s_val = math.sqrt(zp.t * xi) * p / (1.0 - xi) * realize(f2) / (u + 1.0)
    return r, s_val


def rs(sign, u: float, gp: GrandParams) -> tuple[float, float]:
    """The pair (R, S) at u: psi times bounded hypergeometric factors.

    Both decay exponentially as u grows, at the geometric rate xi.
    """
    return _rs_cached(_sign(sign), float(u), gp)


def pq(sign, u: float, gp: GrandParams) -> tuple[float, float]:
    """Normalized pair (P, Q) = (R, S) / sqrt(psi); needs psi > 0."""
    s = _sign(sign)
    p = psi(s, u, gp)
    if p <= 0.0:
        raise DomainError(f"psi({'+' if s > 0 else '-'}, {u}) = {p} is not positive")
    r, s_val = rs(s, u, gp)
    root = math.sqrt(p)
    return r / root, s_val / root


def decay_certificate(gp: GrandParams, ratio: float = DECAY_CERTIFICATE_RATIO,
                      cap: int = 200_000) -> int:
    """Smallest index m with psi(+,m) and psi(-,m) below ratio * psi(.,0).

    Uses the exact one-step recurrence of psi, so no Gamma evaluations are
    needed; beyond this index matrix truncation tails are negligible.
    """
    zp = gp.zp
    z, z_prime, xi = zp.z, zp.z_prime, gp.xi
    rel_plus = rel_minus = 1.0
    for k in range(cap):
        if rel_plus < ratio and rel_minus < ratio:
            return k
        denom = (k + 1.0) * (k + 1.0)
        rel_plus *= abs(xi * (k + 1 + z) * (k + 1 + z_prime)) / denom
        rel_minus *= abs(xi * (k + 1 - z) * (k + 1 - z_prime)) / denom
    raise ConvergenceError(f"psi decay certificate not reached within {cap} indices")


@dataclass(frozen=True)
class FunctionTable:
    """Batch of psi, R, S, P, Q values at k = 0..size-1 for both signs."""

    gp: GrandParams
    size: int
    psi_plus: np.ndarray
    psi_minus: np.ndarray
    r_plus: np.ndarray
    r_minus: np.ndarray
    s_plus: np.ndarray
    s_minus: np.ndarray
    p_plus: np.ndarray
    p_minus: np.ndarray
    q_plus: np.ndarray
    q_minus: np.ndarray
    decay_index: int

    @classmethod
    def build(cls, gp: GrandParams, size: int | None = None) -> "FunctionTable":
        if gp.zp.meixner_mode:
            raise AdmissibilityError("function tables need admissible (non-degenerate) parameters")
        cert = decay_certificate(gp)
        n = max(size or 0, cert + 40)
        cols = {}
        for label, s in (("plus", 1), ("minus", -1)):
            psi_arr = np.array([psi(s, k, gp) for k in range(n)])
            if not (psi_arr > 0.0).all() or not np.isfinite(psi_arr).all():
                raise ArithmeticError("psi table must be positive and finite")
            r_arr = np.empty(n)
            s_arr = np.empty(n)
            for k in range(n):
                r_arr[k], s_arr[k] = rs(s, k, gp)
            if not (np.isfinite(r_arr).all() and np.isfinite(s_arr).all()):
                raise ArithmeticError("R/S table must be finite")
            root = np.sqrt(psi_arr)
            cols[label] = (psi_arr, r_arr, s_arr, r_arr / root, s_arr / root)
        pp, rp, sp, pp_n, qp_n = cols["plus"]
        pm, rm, sm, pm_n, qm_n = cols["minus"]
        return cls(gp, n, pp, pm, rp, rm, sp, sm, pp_n, pm_n, qp_n, qm_n, cert)


@lru_cache(maxsize=16)
def function_table(gp: GrandParams, size: int | None = None) -> FunctionTable:
    return FunctionTable.build(gp, size)


# ---------------------------------------------------------------------------
# The L operator


def l_entry(x, y, gp: GrandParams) -> float:
    """Entry of the block-antidiagonal operator L at half-integer points x, y.

    Zero on same-sign pairs; sqrt(psi+ psi-)/(k+l+1) on the '+-' block and its
    negative transpose on the '-+' block, making L real and J-symmetric.
    """
    sx, k = half_integer_index(x)
    sy, l = half_integer_index(y)
    if sx == sy:
        return 0.0
    if sx > 0:
        return math.sqrt(psi(1, k, gp) * psi(-1, l, gp)) / (k + l + 1.0)
    return -math.sqrt(psi(-1, k, gp) * psi(1, l, gp)) / (k + l + 1.0)


def l_matrix(gp: GrandParams, trunc: int) -> np.ndarray:
    """Truncated L as a 2N x 2N array: rows/cols 0..N-1 positive, N..2N-1 negative."""
    tbl = function_table(gp, trunc)
    root_p = np.sqrt(tbl.psi_plus[:trunc])
    root_m = np.sqrt(tbl.psi_minus[:trunc])
    k = np.arange(trunc)
    w = 1.0 / (k[:, None] + k[None, :] + 1.0)
    a = root_p[:, None] * w * root_m[None, :]
    out = np.zeros((2 * trunc, 2 * trunc))
    out[:trunc, trunc:] = a
    out[trunc:, :trunc] = -a.T
    return out


def d_matrix(gp: GrandParams, trunc: int, cols: int | None = None) -> np.ndarray:
    """The operator D = -L(-+) with entries sqrt(psi-(k) psi+(l))/(k+l+1)."""
    cols = cols if cols is not None else trunc
    tbl = function_table(gp, max(trunc, cols))
    root_m = np.sqrt(tbl.psi_minus[:trunc])
    root_p = np.sqrt(tbl.psi_plus[:cols])
    k = np.arange(trunc)
    l = np.arange(cols)
    return root_m[:, None] * (1.0 / (k[:, None] + l[None, :] + 1.0)) * root_p[None, :]


# ---------------------------------------------------------------------------
# The hypergeometric kernel


def _diag_series(sign: int, k: int, gp: GrandParams) -> float:
    """Diagonal entry of the '++' or '--' block by the convergent product series.

    Equals sum_j [R_s(k) R_(-s)(j) + S_s(k) S_(-s)(j)] / (k+j+1)^2; the tail is
    controlled by the exponential decay certificate of psi.
    """
    rk, sk = rs(sign, k, gp)
    if gp.zp.meixner_mode:
        # psi(-) vanishes identically beyond z', so the series is a finite sum.
        j_max = int(gp.zp.z_prime.real)
        total = 0.0
        for j in range(j_max):
            rj, sj = rs(-sign, j, gp)
            total += (rk * rj + sk * sj) / (k + j + 1.0) ** 2
        return total
    tbl = function_table(gp)
    j = np.arange(tbl.size)
    weights = 1.0 / (k + j + 1.0) ** 2
    r_other = tbl.r_minus if sign > 0 else tbl.r_plus
    s_other = tbl.s_minus if sign > 0 else tbl.s_plus
    return float(rk * np.dot(weights, r_other) + sk * np.dot(weights, s_other))


def hyper_kernel_diag_derivative(sign, k: int, gp: GrandParams) -> float:
    """Diagonal entry by the removable-singularity (derivative) route.

    Writing P = sqrt(psi) H and Q = sqrt(psi) G, the sqrt(psi) derivatives
    cancel and the limit is psi * (G H' - H G'), where the primes are
    derivatives of the hypergeometric factors in their lower parameter.
    Used as an independent cross-check of the series route.
    """
    s = _sign(sign)
    zp = gp.zp
    xi = gp.xi
    a1, b1 = -s * zp.z, -s * zp.z_prime
    a2, b2 = 1 - s * zp.z, 1 - s * zp.z_prime
    c = math.sqrt(zp.t * xi) / (1.0 - xi)
    h = realize(gauss_2f1_w(a1, b1, k + 1.0, xi))
    dh = realize(gauss_2f1_w_dc(a1, b1, k + 1.0, xi))
    f2 = realize(gauss_2f1_w(a2, b2, k + 2.0, xi))
    df2 = realize(gauss_2f1_w_dc(a2, b2, k + 2.0, xi))
    g = c * f2 / (k + 1.0)
    dg = c * (df2 / (k + 1.0) - f2 / (k + 1.0) ** 2)
    return psi(s, k, gp) * (g * dh - h * dg)


def hyper_kernel(x, y, gp: GrandParams) -> float:
    """The correlation kernel K(x, y) at half-integer points.

    Off-diagonal entries come from the closed block forms; same-index
    diagonal entries of the '++' and '--' blocks from the product series.
    """
    sx, k = half_integer_index(x)
    sy, l = half_integer_index(y)
    if gp.zp.meixner_mode and not (sx > 0 and sy > 0):
        raise AdmissibilityError("meixner-mode parameters expose only the '++' block")
    if sx > 0 and sy > 0:
        if k == l:
            return _diag_series(1, k, gp)
        pk, qk = pq(1, k, gp)
        pl, ql = pq(1, l, gp)
        return (pk * ql - qk * pl) / (k - l)
    if sx > 0 and sy < 0:
        pk, qk = pq(1, k, gp)
        pl, ql = pq(-1, l, gp)
        return (pk * pl + qk * ql) / (k + l + 1.0)
    if sx < 0 and sy > 0:
        pk, qk = pq(-1, k, gp)
        pl, ql = pq(1, l, gp)
        return -(pk * pl + qk * ql) / (k + l + 1.0)
    if k == l:
        return _diag_series(-1, k, gp)
    pk, qk = pq(-1, k, gp)
    pl, ql = pq(-1, l, gp)
    return (pk * ql - qk * pl) / (k - l)


@dataclass(frozen=True)
class KernelBlock:
    """A truncated kernel block with its sign pair and parameters."""

    block: str
    trunc: int
    params: GrandParams
    entries: np.ndarray

    def __post_init__(self) -> None:
        if self.block not in BLOCKS:
            raise ValueError(f"block must be one of {BLOCKS}")
        if self.block in ("++", "--"):
            sym = np.max(np.abs(self.entries - self.entries.T))
            if sym > 1e-12:
                raise ArithmeticError(f"{self.block} block not symmetric: {sym}")

    def to_json(self) -> dict:
        zp = self.params.zp
        return {
            "schema": "zmeasure.kernel/1",
            "block": self.block,
            "trunc": self.trunc,
            "z": [zp.z.real, zp.z.imag],
            "z_prime": [zp.z_prime.real, zp.z_prime.imag],
            "xi": self.params.xi,
            "entries": self.entries.tolist(),
        }


def kernel_block_matrix(gp: GrandParams, block: str, trunc: int) -> KernelBlock:
    """Assemble a truncated kernel block as a dense matrix."""
    if block not in BLOCKS:
        raise ValueError(f"block must be one of {BLOCKS}")
    if gp.zp.meixner_mode:
        if block != "++":
            raise AdmissibilityError("meixner-mode parameters expose only the '++' block")
        entries = np.empty((trunc, trunc))
        for k in range(trunc):
            for l in range(trunc):
                entries[k, l] = hyper_kernel(Fraction(2 * k + 1, 2), Fraction(2 * l + 1, 2), gp)
        return KernelBlock(block, trunc, gp, entries)
    tbl = function_table(gp, trunc)
    k = np.arange(trunc)
    if block in ("++", "--"):
        p = tbl.p_plus[:trunc] if block == "++" else tbl.p_minus[:trunc]
        q = tbl.q_plus[:trunc] if block == "++" else tbl.q_minus[:trunc]
        diff = k[:, None] - k[None, :]
        np.fill_diagonal(diff, 1)  # placeholder, diagonal replaced below
        entries = (np.outer(p, q) - np.outer(q, p)) / diff
        sign = 1 if block == "++" else -1
        for i in range(trunc):
            entries[i, i] = _diag_series(sign, i, gp)
        return KernelBlock(block, trunc, gp, entries)
    denom = k[:, None] + k[None, :] + 1.0
    if block == "+-":
        entries = (
            np.outer(tbl.p_plus[:trunc], tbl.p_minus[:trunc])
            + np.outer(tbl.q_plus[:trunc], tbl.q_minus[:trunc])
        ) / denom
    else:
        entries = -(
            np.outer(tbl.p_minus[:trunc], tbl.p_plus[:trunc])
            + np.outer(tbl.q_minus[:trunc], tbl.q_plus[:trunc])
        ) / denom
    return KernelBlock(block, trunc, gp, entries)


def kernel_matrix(gp: GrandParams, trunc: int) -> np.ndarray:
    """Full 2N x 2N kernel in the same index layout as :func:`l_matrix`."""
    out = np.zeros((2 * trunc, 2 * trunc))
    out[:trunc, :trunc] = kernel_block_matrix(gp, "++", trunc).entries
    out[:trunc, trunc:] = kernel_block_matrix(gp, "+-", trunc).entries
    out[trunc:, :trunc] = kernel_block_matrix(gp, "-+", trunc).entries
    out[trunc:, trunc:] = kernel_block_matrix(gp, "--", trunc).entries
    return out


# ---------------------------------------------------------------------------
# Series transforms


def rhat_shat(sign, u: float, gp: GrandParams, tol: float = 1e-15) -> tuple[float, float]:
    """The sums Rhat(u) = sum_k R(k)/(u+k+1) and likewise Shat(u).

    The terms decay at the geometric rate xi; u must stay away from the poles
    at the negative integers -1, -2, ...
    """
    s = _sign(sign)
    if u <= -0.5 and abs(u - round(u)) < 1e-8:
        raise PoleError(f"u = {u} is within 1e-8 of a pole of the transform")
    tbl = function_table(gp)
    k = np.arange(tbl.size)
    denom = u + k + 1.0
    if np.any(np.abs(denom) < 1e-8):
        raise PoleError(f"u = {u} is within 1e-8 of a pole of the transform")
    r_arr = tbl.r_plus if s > 0 else tbl.r_minus
    s_arr = tbl.s_plus if s > 0 else tbl.s_minus
    rhat = float(np.sum(r_arr / denom))
    shat = float(np.sum(s_arr / denom))
    last = max(abs(r_arr[-1] / denom[-1]), abs(s_arr[-1] / denom[-1]))
    if last > tol * max(abs(rhat), abs(shat), 1e-300):
        raise ConvergenceError(f"transform tail above {tol} after {tbl.size} terms")
    return rhat, shat


# ---------------------------------------------------------------------------
# Meixner kernel


def meixner_kernel(big_n: int, alpha: float, xi: float, k: int, l: int) -> float:
    """Christoffel-Darboux projection kernel for Meixner polynomials on l^2.

    Both the rank-N sum and the two-term Christoffel-Darboux form are
    evaluated and must agree (the latter off-diagonal only); the sum form is
    returned.
    """
    if big_n < 1:
        raise ValueError("the projection rank must be positive")
    root = math.sqrt(meixner_weight(k, alpha, xi) * meixner_weight(l, alpha, xi))
    total = 0.0
    for n in range(big_n):
        total += (
            meixner_polynomial(n, k, alpha, xi)
            * meixner_polynomial(n, l, alpha, xi)
            / meixner_norm(n, alpha, xi)
        )
    total *= root
    if k != l:
        const = meixner_leading_coefficient(big_n - 1, alpha, xi) / (
            meixner_leading_coefficient(big_n, alpha, xi) * meixner_norm(big_n - 1, alpha, xi)
        )
        cd = (
            const
            * root
            * (
                meixner_polynomial(big_n, k, alpha, xi) * meixner_polynomial(big_n - 1, l, alpha, xi)
                - meixner_polynomial(big_n - 1, k, alpha, xi) * meixner_polynomial(big_n, l, alpha, xi)
            )
            / (k - l)
        )
        if abs(total - cd) > 1e-10 * max(abs(total), abs(cd), 1e-300):
            raise ArithmeticError(
                f"Meixner kernel routes disagree at ({k},{l}): {total} vs {cd}"
            )
    return total


def meixner_kernel_matrix(big_n: int, alpha: float, xi: float, size: int) -> np.ndarray:
    """Truncated Meixner kernel as phi phi^T with phi[k, n] = M_n(k) sqrt(f(k)/h_n)."""
    phi = np.empty((size, big_n))
    for k in range(size):
        fk = meixner_weight(k, alpha, xi)
        for n in range(big_n):
            phi[k, n] = meixner_polynomial(n, k, alpha, xi) * math.sqrt(
                fk / meixner_norm(n, alpha, xi)
            )
    return phi @ phi.T


# ---------------------------------------------------------------------------
# Whittaker kernel (continuum limit)


def _whittaker_prefactor(sign: int, x: float, zp: ZParams) -> float:
    g = realize(np.exp(loggamma(1 + sign * zp.z) + loggamma(1 + sign * zp.z_prime)))
    if g <= 0:
        raise ArithmeticError("Gamma product must be positive")
    return 1.0 / math.sqrt(g * x)


def whittaker_p(sign, x: float, zp: ZParams) -> float:
    """First Whittaker-function component of the continuum kernel."""
    s = _sign(sign)
    if x <= 0:
        raise DomainError("x must be positive")
    kappa = (s * zp.z_sum + 1.0) / 2.0
    mu = (zp.z - zp.z_prime) / 2.0
    return zp.t**0.25 * _whittaker_prefactor(s, x, zp) * whittaker_w(kappa, mu, x)


def whittaker_q(sign, x: float, zp: ZParams) -> float:
    """Second Whittaker-function component of the continuum kernel."""
    s = _sign(sign)
    if x <= 0:
        raise DomainError("x must be positive")
    kappa = (s * zp.z_sum - 1.0) / 2.0
    mu = (zp.z - zp.z_prime) / 2.0
    return zp.t**0.75 * _whittaker_prefactor(s, x, zp) * whittaker_w(kappa, mu, x)


def _whittaker_diag(sign: int, x: float, zp: ZParams) -> float:
    # No closed form is available on the diagonal; take the symmetric
    # difference limit with one Richardson step (even in h, so O(h^4)).
    def g(h: float) -> float:
        pp = whittaker_p(sign, x + h, zp)
        pm = whittaker_p(sign, x - h, zp)
        qp = whittaker_q(sign, x + h, zp)
        qm = whittaker_q(sign, x - h, zp)
        return (pp * qm - qp * pm) / (2.0 * h)

    h = 1e-3 * x
    return (4.0 * g(h / 2.0) - g(h)) / 3.0


def whittaker_kernel(u: float, v: float, zp: ZParams) -> float:
    """The continuum correlation kernel on the punctured real line.

    Blocks are dispatched by the signs of u and v; same-sign blocks use the
    difference form (numerical limit on the diagonal, tolerance about 1e-6),
    opposite-sign blocks the sum form with the J-antisymmetry minus sign.
    """
    if u == 0.0 or v == 0.0:
        raise DomainError("the kernel is defined on nonzero reals")
    if u > 0 and v > 0:
        if u == v:
            return _whittaker_diag(1, u, zp)
        return (
            whittaker_p(1, u, zp) * whittaker_q(1, v, zp)
            - whittaker_q(1, u, zp) * whittaker_p(1, v, zp)
        ) / (u - v)
    if u > 0 and v < 0:
        x, y = u, -v
        return (
            whittaker_p(1, x, zp) * whittaker_p(-1, y, zp)
            + whittaker_q(1, x, zp) * whittaker_q(-1, y, zp)
        ) / (x + y)
    if u < 0 and v > 0:
        x, y = -u, v
        return -(
            whittaker_p(-1, x, zp) * whittaker_p(1, y, zp)
            + whittaker_q(-1, x, zp) * whittaker_q(1, y, zp)
        ) / (x + y)
    x, y = -u, -v
    if x == y:
        return _whittaker_diag(-1, x, zp)
    return (
        whittaker_p(-1, x, zp) * whittaker_q(-1, y, zp)
        - whittaker_q(-1, x, zp) * whittaker_p(-1, y, zp)
    ) / (x - y)

"""The generalized Dickman function rho_a on a uniform grid.

rho_a(u) = 1 for 0 <= u <= 1, and for u > 1 satisfies

    rho_a(u) = 1 - int_0^{(u-1)/(1+a)} rho_a(v) * omega((u-v)/(1+a v)) dv/(1+a v),

where omega is Buchstab's function.  The recurrence only consumes values
rho_a(v) with v <= u-1, so a left-to-right sweep over the grid is exact.
a = 0 reduces to Dickman's rho.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError, ResourceLimitError
from .specfun import buchstab_omega

DEFAULT_STEP = Fraction(1, 128)
DEFAULT_U_MAX = 60


@dataclass(frozen=True)
class RhoTable:
    """Values of rho_a on the uniform grid u_j = j*step, 0 <= u_j <= u_max."""

    a: Fraction
    step: Fraction
    us: np.ndarray
    values: np.ndarray
    accuracy: float  # estimated absolute error per grid point

    @property
    def u_max(self) -> float:
        return float(self.us[-1])

    def __call__(self, u) -> float | np.ndarray:
        """rho_a(u) by cubic interpolation of the grid (1 for u <= 1, 0 for u < 0)."""
        arr = np.asarray(u, dtype=float)
        if np.any(arr > self.u_max + 1e-12):
            raise DomainError(f"u beyond table range {self.u_max}")
        out = np.ones_like(arr)
        out[arr < 0.0] = 0.0
        m = arr > 1.0
        if np.any(m):
            out[m] = _interp_cubic(self.us, self.values, float(self.step), arr[m])
        if np.isscalar(u) or arr.ndim == 0:
            return float(out)
        return out

    def export_csv(self, path, cert=None) -> None:
        """Write (u, rho, model, ratio) rows; model/ratio need a certificate."""
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["u", "rho", "model", "ratio"])
            for u, r in zip(self.us, self.values):
                if cert is not None:
                    model = rho_asymptotic(self.a, float(u), cert)
                    w.writerow([f"{u:.8g}", f"{r:.12g}", f"{model:.12g}", f"{r / model:.8g}"])
                else:
                    w.writerow([f"{u:.8g}", f"{r:.12g}", "", ""])


def _interp_cubic(us: np.ndarray, vals: np.ndarray, h: float, x: np.ndarray) -> np.ndarray:
    # 4-point Lagrange; stencils never straddle the kink at u=1
    j = (x / h).astype(np.int64)
    k1 = int(round(1.0 / h))
    j0 = np.maximum(j - 1, np.where(j >= k1, k1, 0))
    j0 = np.minimum(j0, len(us) - 4)
    t = (x - us[j0]) / h
    f0, f1, f2, f3 = vals[j0], vals[j0 + 1], vals[j0 + 2], vals[j0 + 3]
    L0 = -(t - 1) * (t - 2) * (t - 3) / 6
    L1 = t * (t - 2) * (t - 3) / 2
    L2 = -t * (t - 1) * (t - 3) / 2
    L3 = t * (t - 1) * (t - 2) / 6
    return L0 * f0 + L1 * f1 + L2 * f2 + L3 * f3


def build_rho_table(
    a: Fraction | int | float,
    u_max: float = DEFAULT_U_MAX,
    step: Fraction | float = DEFAULT_STEP,
) -> RhoTable:
    """Tabulate rho_a on [0, u_max] with the given grid step.

    Composite Simpson in v, with the integration range split at every point
    where the integrand loses smoothness: v = 1 (kink of rho_a) and the
    points where omega's argument crosses an integer.  Estimated absolute
    error is ~1e-8 per point for u <= 50 at the default step.
    """
    a = Fraction(a).limit_denominator(10**12) if isinstance(a, float) else Fraction(a)
    if a < 0:
        raise DomainError("a must be >= 0")
    step = Fraction(step)
    if step > Fraction(1, 128):
        raise DomainError("step must be <= 1/128")
    if u_max > 500:
        raise ResourceLimitError("u_max beyond configured budget (500)")
    af = float(a)
    h = float(step)
    n = int(math.ceil(u_max / h - 1e-9))
    us = h * np.arange(n + 1)
    vals = np.ones(n + 1)

    for jj in range(n + 1):
        u = us[jj]
        if u <= 1.0 + 1e-15:
            continue
        V = (u - 1.0) / (1.0 + af)
        bps = {0.0, V}
        if 1.0 < V:
            bps.add(1.0)
        m = 2
        while m < u:
            vm = (u - m) / (1.0 + af * m)
            if 0.0 < vm < V:
                bps.add(vm)
            m += 1
        pts = sorted(bps)
        total = 0.0
        for lo, hi in zip(pts[:-1], pts[1:]):
            if hi - lo < 1e-14:
                continue
            nsub = max(4, int(math.ceil((hi - lo) / h)))
            if nsub % 2:
                nsub += 1
            vnodes = np.linspace(lo, hi, nsub + 1)
            arg = np.maximum((u - vnodes) / (1.0 + af * vnodes), 1.0)
            rv = np.ones(nsub + 1)
            inner = vnodes > 1.0
            if np.any(inner):
                rv[inner] = _interp_cubic(us, vals, h, vnodes[inner])
            f = rv * buchstab_omega(arg) / (1.0 + af * vnodes)
            wts = np.ones(nsub + 1)
            wts[1:-1:2] = 4.0
            wts[2:-1:2] = 2.0
            total += (hi - lo) / nsub / 3.0 * float(wts @ f)
        vals[jj] = 1.0 - total

    us.setflags(write=False)
    vals.setflags(write=False)
    return RhoTable(a=a, step=step, us=us, values=vals, accuracy=1e-8)


@lru_cache(maxsize=64)
def cached_rho_table(a: Fraction, u_max: float = 30.0, step: Fraction = DEFAULT_STEP) -> RhoTable:
    """Process-wide cache of tables keyed by exact parameters."""
    return build_rho_table(a, u_max=u_max, step=step)


def rho_closed_form_12(a: Fraction | float, u: float) -> float:
    """Closed form on 1 <= u <= 2: rho_a(u) = 1 + log((1+a u)/(u (1+a)))."""
    if not 1.0 <= u <= 2.0:
        raise DomainError("closed form valid on [1, 2] only")
    af = float(a)
    return 1.0 + math.log((1.0 + af * u) / (u * (1.0 + af)))


def rho_asymptotic(a: Fraction | float, u: float, cert) -> float:
    """Model value C_a / (1 + a u)^{lambda_a} from a zero certificate."""
    if Fraction(cert.a) != Fraction(a):
        raise DomainError(f"certificate is for a={cert.a}, not a={a}")
    return cert.C / (1.0 + float(a) * u) ** cert.lam

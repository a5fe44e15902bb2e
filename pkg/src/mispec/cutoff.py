"""Construction and certification of the auxiliary cut-off family.

The convex increasing function chi_t on ]-inf, 0] is built from its second
derivative

    chi''(tau) = delta/(2 pi (1+delta^2 tau^2)) * beta(tau - t)
               + (1-eps)/4 * xi(tau - t),       support in [t-1, 0],

where beta is a smooth monotone step rising on [-s, 0] (s <= eps/4, which
forces int beta < eps/2) and xi(x) = beta(x) beta(1-x).  Integration
constants: chi'(t-1) = 0 and chi(0) = 0.  The certified properties are the
boundary/positivity/budget facts (a)-(e), the pointwise coefficient bound
that makes the twisted curvature R_t dominate (delta chi''/2) i d'psi^d''psi,
the eta+lambda budget with constant 4.21 (optimal (sqrt 5 + 2)/4 + pi), and
the scalar audit 4.21*8*(1+eps)^2/(1-eps) < 34.

chi, chi', chi'' are evaluated through exact piecewise antiderivatives
(arctan family) plus fixed-order Gauss-Legendre panels on the two narrow
beta layers; the uniform grid (plus midpoints) is only the *check* set.
Uniform-grid Simpson cannot resolve the width-s layers at the default
resolution, so it is not used for construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy import optimize

from mispec import fiber
from mispec._smooth import smoothstep, smoothstep_deriv

TWO_PI = 2.0 * math.pi
BUDGET_CONST = 4.21


def gamma(x: float) -> float:
    """Weight profile: exp(-x/2) for x >= 0, 1/(1+x^2) for x <= 0 (both 1 at 0)."""
    x = float(x)
    if x >= 0.0:
        return math.exp(-x / 2.0)
    return 1.0 / (1.0 + x * x)


def check_34(eps: float) -> bool:
    """Scalar audit: 4.21 * 8 * (1+eps)^2 / (1-eps) < 34 (true for eps <~ 3.1e-3)."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return BUDGET_CONST * 8.0 * (1.0 + eps) ** 2 / (1.0 - eps) < 34.0


def psi_A(psi_val: float, A: float) -> tuple[float, float]:
    """Regularized weight: psi_A = psi - psi_plus_A < 0 with
    psi_plus_A = (1/A) log(1 + e^(A psi)) evaluated in overflow-safe form.

    Sandwich: max(psi, 0) < psi_plus_A <= max(psi, 0) + log(2)/A.
    Returns (psi_A, psi_plus_A).
    """
    if A <= 0:
        raise ValueError("A must be positive")
    x = A * psi_val
    # log(1+e^x) = max(x,0) + log1p(e^-|x|); the second term computed directly
    # keeps psi_A = -log1p(e^-|x|)/A - max(-psi,0) strictly negative without
    # catastrophic cancellation (clamped at the smallest subnormal if e^-|x|
    # underflows outright)
    gap = math.log1p(math.exp(-abs(x))) / A
    if gap == 0.0:
        gap = 5e-324
    psi_plus = max(psi_val, 0.0) + gap
    psi_a = min(psi_val, 0.0) - gap
    return psi_a, psi_plus


# --------------------------------------------------------------------------- #
# smooth-step building blocks
# --------------------------------------------------------------------------- #

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(48)


def _gl_panels(f: Callable[[np.ndarray], np.ndarray], lo: float, hi: float,
               panels: int = 8) -> float:
    """Composite Gauss-Legendre on [lo, hi]; the integrand is smooth per panel."""
    if hi <= lo:
        return 0.0
    edges = np.linspace(lo, hi, panels + 1)
    total = 0.0
    for a, b in zip(edges, edges[1:]):
        mid, half = (a + b) / 2.0, (b - a) / 2.0
        total += half * float(np.sum(_GL_WEIGHTS * f(mid + half * _GL_NODES)))
    return total


@dataclass(frozen=True)
class SmoothHandle:
    """Value/derivative evaluators for a constructed smooth function."""

    value: Callable[[np.ndarray], np.ndarray]
    deriv: Callable[[np.ndarray], np.ndarray]
    support: tuple[float, float]


def build_beta(eps: float, s: float | None = None) -> SmoothHandle:
    """Monotone smooth step: 0 on (-inf, -s], 1 on [0, inf), rise on [-s, 0].

    s <= eps/4 makes int_{-1}^0 beta = s/2 <= eps/8 < eps/2 automatically.
    """
    if s is None:
        s = eps / 4.0
    if not (0.0 < s <= eps / 4.0):
        raise ValueError(f"rise width must lie in (0, eps/4], got {s}")

    def value(x):
        return smoothstep((np.asarray(x, dtype=float) + s) / s)

    def deriv(x):
        return smoothstep_deriv((np.asarray(x, dtype=float) + s) / s) / s

    return SmoothHandle(value, deriv, (-s, math.inf))


def build_xi(eps: float, s: float | None = None) -> SmoothHandle:
    """xi(x) = beta(x) * beta(1-x): a plateau equal to 1 on [0, 1],
    supported in [-s, 1+s] (inside the generic envelope [-1, 2])."""
    beta = build_beta(eps, s)

    def value(x):
        x = np.asarray(x, dtype=float)
        return beta.value(x) * beta.value(1.0 - x)

    def deriv(x):
        x = np.asarray(x, dtype=float)
        return beta.deriv(x) * beta.value(1.0 - x) - beta.value(x) * beta.deriv(1.0 - x)

    lo = beta.support[0]
    return SmoothHandle(value, deriv, (lo, 1.0 - lo))


# --------------------------------------------------------------------------- #
# the chi family
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class CutoffParams:
    t: float
    delta: float
    eps: float = 0.002
    grid: int = 2048
    beta_rise_width: float | None = None

    def __post_init__(self) -> None:
        if not self.t < -1.0:
            raise ValueError(f"t must be < -1, got {self.t}")
        if not (0.0 < self.delta <= 1.0):
            raise ValueError(f"delta must lie in (0, 1], got {self.delta}")
        if not (0.0 < self.eps <= 0.01):
            raise ValueError(f"eps must lie in (0, 0.01], got {self.eps}")
        if self.grid < 64:
            raise ValueError("grid must be >= 64 points per unit interval")
        s = self.beta_rise_width
        if s is not None and not (0.0 < s <= self.eps / 4.0):
            raise ValueError(f"beta rise width must lie in (0, eps/4], got {s}")

    @property
    def s(self) -> float:
        return self.beta_rise_width if self.beta_rise_width is not None else self.eps / 4.0


class ChiFamily:
    """Exact evaluators for chi, chi', chi'' of one (t, delta, eps, s) member."""

    def __init__(self, params: CutoffParams) -> None:
        self.params = params
        t, delta, eps, s = params.t, params.delta, params.eps, params.s
        self.t, self.delta, self.eps, self.s = t, delta, eps, s
        self.Q = (1.0 - eps) / 4.0
        self.beta = build_beta(eps, s)
        self.r3_hi = min(t + 1.0 + s, 0.0)  # end of the xi fall-off layer

        self._arc = lambda tau: math.atan(delta * tau) / TWO_PI
        self._iarc = lambda tau: (tau * math.atan(delta * tau)
                                  - math.log1p((delta * tau) ** 2) / (2.0 * delta)) / TWO_PI

        # chi' at the region boundaries (rise integral by GL panels)
        self.a_rise = _gl_panels(lambda x: self._chi2_arr(x), t - s, t)
        self.chi1_t1 = self.a_rise + self._arc(t + 1.0) - self._arc(t) + self.Q * 1.0
        self._fall_total = _gl_panels(lambda x: self.beta.value(1.0 + t - x), t + 1.0, self.r3_hi)
        self.chi1_r3 = (self.chi1_t1 + self._arc(self.r3_hi) - self._arc(t + 1.0)
                        + self.Q * self._fall_total)
        self.chi1_at_zero = self.chi1_r3 + self._arc(0.0) - self._arc(self.r3_hi)

        # D(tau) = int_tau^0 chi' at the region boundaries (chi = -D)
        self._C4 = self.chi1_r3 - self._arc(self.r3_hi)
        self._C3 = self.chi1_t1 - self._arc(t + 1.0)
        self._C2 = self.a_rise - self._arc(t)
        self.D_r3 = -self._C4 * self.r3_hi - self._iarc(self.r3_hi)  # IArc(0) = 0
        self._J_fall_full = _gl_panels(
            lambda x: self.beta.value(1.0 + t - x) * (self.r3_hi - x), t + 1.0, self.r3_hi)
        self.D_t1 = (self.D_r3 + self._C3 * (self.r3_hi - (t + 1.0))
                     + self._iarc(self.r3_hi) - self._iarc(t + 1.0) + self.Q * self._J_fall_full)
        self.D_t = (self.D_t1 + self._C2 * 1.0 + self._iarc(t + 1.0) - self._iarc(t)
                    + self.Q * 0.5)
        self._rise_weighted = _gl_panels(
            lambda x: self._chi2_arr(x) * (t - x), t - s, t)
        self.D_rise_start = self.D_t + self._rise_weighted
        self.M_t = self.D_rise_start  # -inf chi = chi(t-1) = chi(t-s)

    # -- chi'' ---------------------------------------------------------------
    def _P(self, tau):
        tau = np.asarray(tau, dtype=float)
        return self.delta / (TWO_PI * (1.0 + (self.delta * tau) ** 2))

    def _chi2_arr(self, tau):
        tau = np.asarray(tau, dtype=float)
        x = tau - self.t
        val = (self._P(tau) * self.beta.value(x)
               + self.Q * self.beta.value(x) * self.beta.value(1.0 - x))
        return np.where((tau >= self.t - self.s) & (tau <= 0.0), val, 0.0)

    def chi2(self, tau):
        out = self._chi2_arr(tau)
        return float(out) if np.ndim(tau) == 0 else out

    # -- chi' ----------------------------------------------------------------
    def _chi1_scalar(self, tau: float) -> float:
        t, s, Q = self.t, self.s, self.Q
        if tau <= t - s:
            return 0.0
        if tau <= t:
            return _gl_panels(lambda x: self._chi2_arr(x), t - s, tau)
        if tau <= t + 1.0:
            return self.a_rise + self._arc(tau) - self._arc(t) + Q * (tau - t)
        if tau <= self.r3_hi:
            fall = _gl_panels(lambda x: self.beta.value(1.0 + t - x), t + 1.0, tau)
            return self.chi1_t1 + self._arc(tau) - self._arc(t + 1.0) + Q * fall
        if tau <= 0.0:
            return self.chi1_r3 + self._arc(tau) - self._arc(self.r3_hi)
        raise ValueError(f"chi is defined on tau <= 0, got {tau}")

    def chi1(self, tau):
        if np.ndim(tau) == 0:
            return self._chi1_scalar(float(tau))
        return np.array([self._chi1_scalar(float(x)) for x in np.asarray(tau, dtype=float)])

    # -- chi -----------------------------------------------------------------
    def _D_scalar(self, tau: float) -> float:
        t, s, Q = self.t, self.s, self.Q
        if tau > 0.0:
            raise ValueError(f"chi is defined on tau <= 0, got {tau}")
        if tau >= self.r3_hi:
            return -self._C4 * tau - self._iarc(tau)
        if tau >= t + 1.0:
            j_fall = _gl_panels(
                lambda x: self.beta.value(1.0 + t - x) * (self.r3_hi - np.maximum(x, tau)),
                t + 1.0, self.r3_hi)
            return (self.D_r3 + self._C3 * (self.r3_hi - tau)
                    + self._iarc(self.r3_hi) - self._iarc(tau) + Q * j_fall)
        if tau >= t:
            return (self.D_t1 + self._C2 * (t + 1.0 - tau)
                    + self._iarc(t + 1.0) - self._iarc(tau)
                    + Q * (1.0 - (tau - t) ** 2) / 2.0)
        if tau >= t - s:
            weighted = _gl_panels(
                lambda x: self._chi2_arr(x) * (t - np.maximum(x, tau)), t - s, t)
            return self.D_t + weighted
        return self.M_t

    def chi(self, tau):
        if np.ndim(tau) == 0:
            return -self._D_scalar(float(tau))
        return np.array([-self._D_scalar(float(x)) for x in np.asarray(tau, dtype=float)])

    # -- eta / lambda ----------------------------------------------------------
    def eta(self, psi_val: float) -> float:
        if psi_val > 0:
            raise ValueError(f"psi must be <= 0, got {psi_val}")
        return 1.0 - self.delta * self.chi(psi_val)

    def lam(self, psi_val: float) -> float:
        return math.pi * (1.0 + (self.delta * psi_val) ** 2)


# --------------------------------------------------------------------------- #
# certification
# --------------------------------------------------------------------------- #

PROPERTY_IDS = ("5.8a", "5.8b", "5.8c", "5.8d", "5.8e", "5.13coef", "5.16", "const34")


@dataclass(frozen=True)
class PropertyCheck:
    passed: bool
    worst_margin: float
    worst_location: float
    details: dict = field(default_factory=dict)


@dataclass
class CutoffCertificate:
    params: CutoffParams
    family: ChiFamily
    tau: np.ndarray
    chi: np.ndarray
    chi1: np.ndarray
    chi2: np.ndarray
    eta: np.ndarray
    lam: np.ndarray
    M_t: float
    per_property: dict[str, PropertyCheck]

    MARGIN_TOL = 1e-9

    @property
    def analytic_pass(self) -> bool:
        """All grid/boundary properties; the scalar const34 audit is reported
        separately (it legitimately fails for eps above ~3.1e-3)."""
        return all(v.passed for k, v in self.per_property.items() if k != "const34")

    @property
    def all_pass(self) -> bool:
        return all(v.passed for v in self.per_property.values())

    def summary_rows(self) -> list[tuple[str, bool, float, float]]:
        return [(k, v.passed, v.worst_margin, v.worst_location)
                for k, v in self.per_property.items()]


def _check(margin_values: np.ndarray, locations: np.ndarray, scale: float = 1.0,
           details: dict | None = None) -> PropertyCheck:
    i = int(np.argmin(margin_values))
    worst = float(margin_values[i])
    return PropertyCheck(worst >= -CutoffCertificate.MARGIN_TOL * scale, worst,
                         float(locations[i]), details or {})


def build_chi(params: CutoffParams) -> CutoffCertificate:
    """Construct the family member and certify (5.8 a-e), the R_t coefficient
    bound, the eta+lambda budget and the scalar constant audit on the uniform
    grid plus midpoints."""
    fam = ChiFamily(params)
    t, delta, eps, s, Q = fam.t, fam.delta, fam.eps, fam.s, fam.Q

    n_pts = int(round(params.grid * (0.0 - (t - 1.0)))) * 2 + 1  # grid plus midpoints
    tau = np.linspace(t - 1.0, 0.0, n_pts)
    chi_v = fam.chi(tau)
    chi1_v = fam.chi1(tau)
    chi2_v = fam.chi2(tau)
    lam_v = np.pi * (1.0 + (delta * tau) ** 2)
    eta_v = 1.0 - delta * chi_v

    checks: dict[str, PropertyCheck] = {}

    # (a) chi(0) = 0 and a finite infimum -M_t
    chi_at_zero = float(fam.chi(0.0))
    checks["5.8a"] = PropertyCheck(
        abs(chi_at_zero) <= CutoffCertificate.MARGIN_TOL and math.isfinite(fam.M_t),
        -abs(chi_at_zero), 0.0, {"M_t": fam.M_t})

    # (b) 0 <= chi' <= 1/2, with the integral budget recorded
    margin_b = np.minimum(chi1_v, 0.5 - chi1_v)
    budget_paper = (1.0 - eps) / 4.0 * (1.0 + eps) + 0.25
    checks["5.8b"] = _check(margin_b, tau, details={
        "total_integral": fam.chi1_at_zero,
        "analytic_budget_bound": budget_paper,
        "budget_margin": 0.5 - fam.chi1_at_zero})

    # (c) chi' = 0 below t-1; chi' >= 0 above; chi' > 0 from the rise onward.
    below = np.linspace(t - 2.0, t - 1.0, 257)
    below_margin = -np.abs(fam.chi1(below))
    inside_margin = chi1_v.copy()
    strict = tau >= t
    strict_margin = np.where(strict, chi1_v, np.inf)
    margins = np.concatenate([below_margin, inside_margin, strict_margin])
    locs = np.concatenate([below, tau, tau])
    checks["5.8c"] = _check(margins, locs, details={
        "support_start": t - s, "min_on_[t,0]": float(np.min(chi1_v[strict]))})

    # (d) chi'' >= (1-eps)/4 on [t, t+1]
    mask_d = (tau >= t) & (tau <= t + 1.0)
    checks["5.8d"] = _check(chi2_v[mask_d] - Q, tau[mask_d])

    # (e) chi''/chi'^2 >= 2 delta / (pi (1 + delta^2 tau^2)) where chi' > 0
    pos = chi1_v > 0.0
    quot = chi2_v[pos] / chi1_v[pos] ** 2
    bound_e = 2.0 * delta / (np.pi * (1.0 + (delta * tau[pos]) ** 2))
    checks["5.8e"] = _check(quot - bound_e, tau[pos],
                            scale=max(1.0, float(np.max(bound_e))))

    # R_t coefficient bound: delta chi'' - delta^2 chi'^2/lambda >= delta chi''/2,
    # i.e. delta chi''/2 - delta^2 chi'^2/lambda >= 0 (clamp-safe form of (e))
    margin_13 = delta * chi2_v / 2.0 - (delta * chi1_v) ** 2 / lam_v
    checks["5.13coef"] = _check(margin_13, tau)

    # eta + lambda <= 4.21 (1 + delta^2 psi^2), including the frozen region below t-1
    deep = np.linspace(t - 6.0, t - 1.0, 1025)
    eta_deep = 1.0 - delta * fam.chi(deep)
    lam_deep = np.pi * (1.0 + (delta * deep) ** 2)
    all_tau = np.concatenate([deep, tau])
    all_eta = np.concatenate([eta_deep, eta_v])
    all_lam = np.concatenate([lam_deep, lam_v])
    rhs = BUDGET_CONST * (1.0 + (delta * all_tau) ** 2)
    checks["5.16"] = _check(rhs - (all_eta + all_lam), all_tau,
                            scale=max(1.0, float(np.max(rhs))))

    # scalar constant audit at this eps (fails for eps >~ 3.1e-3 by design)
    audit = BUDGET_CONST * 8.0 * (1.0 + eps) ** 2 / (1.0 - eps)
    checks["const34"] = PropertyCheck(audit < 34.0, 34.0 - audit, eps, {"value": audit})

    return CutoffCertificate(params, fam, tau, chi_v, chi1_v, chi2_v, eta_v, lam_v,
                             fam.M_t, checks)


def eta_lambda(psi_val: float, params: CutoffParams, cert: CutoffCertificate
               ) -> tuple[float, float]:
    """eta = 1 - delta*chi(psi) >= 1 and lambda = pi (1 + delta^2 psi^2)."""
    if psi_val > 0:
        raise ValueError(f"psi must be <= 0 (normalized weight), got {psi_val}")
    fam = cert.family
    return fam.eta(psi_val), fam.lam(psi_val)


@dataclass(frozen=True)
class BudgetReport:
    worst_margin: float
    worst_location: float
    optimum_value: float
    optimum_location: float
    optimum_target: float


def verify_budget(params: CutoffParams, cert: CutoffCertificate | None = None) -> BudgetReport:
    """Grid margin of 4.21(1+delta^2 psi^2) - (eta+lambda) plus the 1-D
    maximization sup_{x>=0} (1 + x/2 + pi(1+x^2))/(1+x^2) = (sqrt 5 + 2)/4 + pi."""
    cert = cert if cert is not None else build_chi(params)
    entry = cert.per_property["5.16"]
    res = optimize.minimize_scalar(
        lambda x: -(1.0 + x / 2.0 + math.pi * (1.0 + x * x)) / (1.0 + x * x),
        bounds=(0.0, 10.0), method="bounded", options={"xatol": 1e-12})
    return BudgetReport(entry.worst_margin, entry.worst_location,
                        -float(res.fun), float(res.x),
                        (math.sqrt(5.0) + 2.0) / 4.0 + math.pi)


# --------------------------------------------------------------------------- #
# the theta cutoff
# --------------------------------------------------------------------------- #

class ThetaFamily:
    """Smooth non-increasing cutoff: 1 on (-inf, -1+eps/3], 0 on [-eps/3, inf),
    |theta'| <= 1 + eps.

    The transition occupies the width-(1 - 2 eps/3) window between the two
    plateaus; the derivative is a plateau profile of height
    1/(w (1 - eps/4)) < 1 + eps with smooth shoulders of relative width eps/4.
    """

    def __init__(self, eps: float) -> None:
        if not (0.0 < eps <= 0.1):
            raise ValueError(f"eps must lie in (0, 0.1], got {eps}")
        self.eps = eps
        self.a = -1.0 + eps / 3.0
        self.b = -eps / 3.0
        self.w = self.b - self.a
        self.rho = eps / 4.0
        self.lay = self.rho * self.w
        self.height = 1.0 / (self.w * (1.0 - self.rho))

    def deriv(self, tau):
        tau_arr = np.asarray(tau, dtype=float)
        a, b, lay, A = self.a, self.b, self.lay, self.height
        rise = smoothstep((tau_arr - a) / lay)
        fall = smoothstep((b - tau_arr) / lay)
        out = np.where((tau_arr <= a) | (tau_arr >= b), 0.0, -A * rise * fall)
        return float(out) if np.ndim(tau) == 0 else out

    def _layer_integral(self, x: float) -> float:
        """int_0^x smoothstep, x in [0, 1]."""
        return _gl_panels(lambda y: smoothstep(y), 0.0, x)

    def _value_scalar(self, tau: float) -> float:
        a, b, lay, A = self.a, self.b, self.lay, self.height
        if tau <= a:
            return 1.0
        if tau >= b:
            return 0.0
        if tau <= a + lay:
            return 1.0 - A * lay * self._layer_integral((tau - a) / lay)
        if tau <= b - lay:
            return 1.0 - A * (lay / 2.0 + (tau - a - lay))
        return A * lay * self._layer_integral((b - tau) / lay)

    def value(self, tau):
        if np.ndim(tau) == 0:
            return self._value_scalar(float(tau))
        return np.array([self._value_scalar(float(x)) for x in np.asarray(tau, dtype=float)])


def theta_cutoff(tau, eps: float) -> tuple[float, float]:
    """(theta(tau), theta'(tau)) of the transition family at this eps."""
    fam = ThetaFamily(eps)
    return fam.value(tau), fam.deriv(tau)


# --------------------------------------------------------------------------- #
# the R_t chain
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class RtSample:
    """One curvature sample satisfying the endpoint hypothesis: theta + alpha*ddpsi
    is Nakano semipositive for alpha in [1, 1+delta] (convexity: endpoints suffice)."""

    theta: fiber.CurvatureTensor
    ddpsi: fiber.CurvatureTensor
    dpsi: fiber.Covector10


def sample_rt_instances(n: int, r: int, delta: float, count: int, seed: int,
                        ridge: float = 0.05, zero_dpsi_every: int = 10) -> list[RtSample]:
    """Random instances built so that theta + ddpsi and theta + (1+delta) ddpsi
    are PSD by construction (sums of Wishart tensors)."""
    rng = np.random.default_rng(seed)
    samples = []
    for i in range(count):
        A0 = fiber.random_psd_matrix(rng, n, ridge)
        B0 = fiber.random_psd_matrix(rng, n, ridge)
        theta0 = fiber.random_nakano_semipositive(rng, n, r).plus(
            fiber.identity_tensor(n, r, ridge))
        ddpsi = fiber.hermitian_scalar_tensor(n, r, (B0 - A0) / delta)
        theta = fiber.hermitian_scalar_tensor(n, r, A0).plus(theta0).minus(ddpsi)
        dpsi = (fiber.Covector10(n, (0.0,) * n) if i % zero_dpsi_every == zero_dpsi_every - 1
                else fiber.random_covector(rng, n))
        samples.append(RtSample(theta, ddpsi, dpsi))
    return samples


@dataclass
class RtChainReport:
    n_samples: int
    n_psi_points: int
    coef_margin_min: float
    endpoint_margin_min: float
    tube_psd_margin_min: float
    quotient_ratio_max: float
    quotient_checked: int
    singular_skipped: int
    failures: dict[str, int]
    passed: bool


def verify_Rt_chain(params: CutoffParams, samples: Sequence[RtSample],
                    cert: CutoffCertificate | None = None, q: int = 1,
                    u_trials: int = 2, seed: int = 424242,
                    n_tube_points: int = 5, n_domain_points: int = 5) -> RtChainReport:
    """Check, per sample and per psi value, that the assembled twisted curvature

        R_t = eta (theta + (1 + delta chi'/eta) ddpsi)
            + (delta chi'' - delta^2 chi'^2/lambda) i d'psi wedge d''psi

    (i) carries a rank-one coefficient >= delta chi''/2, (ii) dominates
    ((1-eps) delta/8) i d'psi wedge d''psi in the Nakano order on the tube
    {t < psi < t+1}, and (iii) admits the quotient bound
    <B^-1(d''psi wedge u), d''psi wedge u> <= 8(1+eps)^2/((1-eps) delta) |u|^2
    for B = [i R_t, Lambda] on (n, q)-forms whenever B is positive definite.
    """
    cert = cert if cert is not None else build_chi(params)
    fam = cert.family
    t, delta, eps = params.t, params.delta, params.eps
    rng = np.random.default_rng(seed)

    tube_psi = np.linspace(t + 0.05, t + 0.95, n_tube_points)
    wide_psi = np.linspace(t - 0.999, -1e-3, n_domain_points)
    psi_points = np.concatenate([tube_psi, wide_psi])

    bound_515 = 8.0 * (1.0 + eps) ** 2 / ((1.0 - eps) * delta)
    coef_min = math.inf
    endpoint_min = math.inf
    tube_min = math.inf
    quot_max = 0.0
    quot_checked = 0
    skipped = 0
    failures = {"coef": 0, "endpoint": 0, "tube_psd": 0, "quotient": 0}

    for sample in samples:
        n, r = sample.theta.n, sample.theta.r
        for alpha in (1.0, 1.0 + delta):
            m = fiber.nakano_min_eigenvalue(sample.theta.plus(sample.ddpsi.scaled(alpha)))
            endpoint_min = min(endpoint_min, m)
            if m < -1e-10 * max(1.0, float(np.abs(sample.theta.c).max())):
                failures["endpoint"] += 1
        for psi in psi_points:
            chi1 = fam.chi1(psi)
            chi2 = fam.chi2(psi)
            eta = fam.eta(psi)
            lam = fam.lam(psi)
            coef = delta * chi2 - delta ** 2 * chi1 ** 2 / lam
            margin_i = coef - delta * chi2 / 2.0
            coef_min = min(coef_min, margin_i)
            if margin_i < -CutoffCertificate.MARGIN_TOL:
                failures["coef"] += 1

            Rt = fiber.assemble_Rt(sample.theta, sample.ddpsi, sample.dpsi,
                                   eta, chi1, chi2, delta, lam)
            in_tube = t < psi < t + 1.0
            if in_tube:
                probe = Rt.minus(fiber.rank_one_curvature(sample.dpsi, r)
                                 .scaled((1.0 - eps) * delta / 8.0))
                scale = max(1.0, float(np.abs(probe.c).max()))
                eig = fiber.nakano_min_eigenvalue(probe)
                tube_min = min(tube_min, eig / scale)
                if eig < -1e-10 * scale:
                    failures["tube_psd"] += 1

                B = fiber.bkn_operator_B(Rt, q)
                eigvals = np.linalg.eigvalsh(B)
                scale_B = max(1.0, float(np.abs(B).max()))
                if float(eigvals.min()) <= 1e-8 * scale_B:
                    skipped += 1
                    continue
                Binv = np.linalg.inv(B)
                basis_v = fiber._basis(n, n, q, r)
                for _ in range(u_trials):
                    u = fiber.random_form(rng, n, n, 0, r)
                    v = fiber.wedge_covector01(
                        fiber.Covector10(n, tuple(x.conjugate() for x in sample.dpsi.a)), u)
                    vv = fiber._to_vector(v, basis_v)
                    if not np.any(vv):
                        continue
                    wv = Binv @ vv
                    w_form = fiber._from_vector(wv, basis_v, n, n, q, r)
                    quot = float(fiber.inner(w_form, v).real) / fiber.norm_sq(u)
                    quot_checked += 1
                    ratio = quot / bound_515
                    quot_max = max(quot_max, ratio)
                    if ratio > 1.0 + 1e-9:
                        failures["quotient"] += 1

    passed = all(v == 0 for v in failures.values())
    return RtChainReport(len(samples), len(psi_points), coef_min, endpoint_min,
                         tube_min, quot_max, quot_checked, skipped, failures, passed)


def rt_sharpness_probe(params: CutoffParams, cert: CutoffCertificate | None = None,
                       n_points: int = 64) -> int:
    """Adversarial check that the tube constant (1-eps) delta/8 is sharp up to
    its epsilon hedging: with the inflated constant (1+eps) delta/4 the pure
    rank-one sample (theta = ddpsi = 0) must violate Nakano domination at some
    tube points near psi = t.  Returns the number of violating points."""
    cert = cert if cert is not None else build_chi(params)
    fam = cert.family
    t, delta, eps = params.t, params.delta, params.eps
    violated = 0
    for psi in np.linspace(t + 1e-4, t + 0.5, n_points):
        chi1, chi2, lam = fam.chi1(psi), fam.chi2(psi), fam.lam(psi)
        coef = delta * chi2 - delta ** 2 * chi1 ** 2 / lam
        if coef < (1.0 + eps) * delta / 4.0 - 1e-12:
            violated += 1
    return violated

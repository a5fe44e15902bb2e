"""Verification suites wired into `mispec verify {fiber,cutoff,integrals,tube,all}`.

Each suite returns a list of check records; every record states the formula
or inequality it verifies, the measured margin, and enough detail to re-run.
The acceptance test module drives the same functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from mispec import cutoff, fiber, oracle, snc
from mispec.documents import CheckRecord, check

TOL_LINALG = 1e-12
TOL_ANALYSIS = 1e-10


@dataclass(frozen=True)
class VerifyOptions:
    seed: int = 2024
    grid: int = 2048
    rel_tol: float = 1e-3
    nakano_trials: int = 1000
    identity_trials: int = 200
    rt_samples: int = 100


# --------------------------------------------------------------------------- #
# fiber suite
# --------------------------------------------------------------------------- #

# Griffiths-positive but Nakano-indefinite witness (n = r = 2): the quadratic
# form sum |tau|^2 - 3 Re(tau_11 conj(tau_22)) is >= (x-y)^2 + xy >= 0 on
# decomposable tensors (where |tau_11 tau_22| = |tau_12 tau_21|) but takes the
# value -1 at the non-decomposable direction tau = e1 (x) e1 + e2 (x) e2.
def griffiths_not_nakano_witness() -> fiber.CurvatureTensor:
    c = np.zeros((2, 2, 2, 2), dtype=complex)
    for j in range(2):
        for lam in range(2):
            c[j, j, lam, lam] = 1.0
    c[0, 1, 0, 1] = -1.5
    c[1, 0, 1, 0] = -1.5
    return fiber.CurvatureTensor(2, 2, c)


def run_fiber_suite(opts: VerifyOptions) -> list[CheckRecord]:
    rng = np.random.default_rng(opts.seed)
    checks: list[CheckRecord] = []

    worst = 0.0
    for _ in range(opts.identity_trials):
        n = int(rng.integers(1, 4)); r = int(rng.integers(1, 3))
        p = int(rng.integers(0, n)); q = int(rng.integers(0, n))
        u = fiber.random_form(rng, n, p, q, r)
        v = fiber.random_form(rng, n, p + 1, q + 1, r)
        lhs, rhs = fiber.inner(fiber.lefschetz_L(u), v), fiber.inner(u, fiber.lambda_adj(v))
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)))
    checks.append(check("fiber.adjointness", "<L u, v> = <u, Lambda v>",
                        worst <= TOL_LINALG, worst,
                        trials=opts.identity_trials))

    worst = 0.0
    scalars = {}
    for n in (1, 2, 3):
        for p in range(n + 1):
            for q in range(n + 1):
                mat = fiber.operator_block_matrix(
                    lambda u: fiber.lefschetz_L(fiber.lambda_adj(u)).minus(
                        fiber.lambda_adj(fiber.lefschetz_L(u))), n, 1, p, q, 0, 0)
                expect = p + q - n
                scalars[f"n{n}p{p}q{q}"] = expect
                worst = max(worst, float(np.abs(mat - expect * np.eye(mat.shape[0])).max()))
    checks.append(check("fiber.lefschetz_commutator", "[L, Lambda] = (p+q-n) id",
                        worst <= TOL_LINALG, worst))

    worst = 0.0
    for _ in range(opts.identity_trials):
        n = int(rng.integers(1, 4)); r = int(rng.integers(1, 3))
        a = fiber.random_covector(rng, n)
        u = fiber.random_form(rng, n, int(rng.integers(0, n + 1)), int(rng.integers(0, n + 1)), r)
        lhs, rhs = fiber.adjoint_bracket_identity(a, u)
        worst = max(worst, lhs.minus(rhs).sup_norm() / max(1.0, lhs.sup_norm(), rhs.sup_norm()))
    checks.append(check("fiber.adjoint_bracket", "a* = i [abar, Lambda]",
                        worst <= TOL_LINALG, worst, trials=opts.identity_trials))

    worst = 0.0
    for _ in range(opts.identity_trials):
        n = int(rng.integers(1, 4)); r = int(rng.integers(1, 3))
        a = fiber.random_covector(rng, n)
        v = fiber.random_form(rng, n, n, 1, r)
        lhs, rhs = fiber.dpsi_contraction_identity(a, v)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)))
    checks.append(check("fiber.dpsi_contraction",
                        "<[i d'psi wedge d''psi, Lambda] v, v> = |(d''psi)* v|^2 on (n,1)",
                        worst <= TOL_ANALYSIS, worst, trials=opts.identity_trials))

    worst = 0.0
    for _ in range(opts.identity_trials):
        dims = int(rng.integers(4, 33))
        degrees = tuple(int(d) for d in rng.integers(0, 4, size=dims))
        ops = []
        for deg in (1, 1, -1):
            m = np.zeros((dims, dims), dtype=complex)
            for i in range(dims):
                for j in range(dims):
                    if degrees[i] == degrees[j] + deg:
                        m[i, j] = rng.standard_normal() + 1j * rng.standard_normal()
            ops.append(fiber.GradedOperator(deg, m, degrees))
        res = fiber.graded_jacobi_check(*ops)
        scale = max(1.0, float(np.prod([np.linalg.norm(o.matrix, 2) for o in ops])))
        worst = max(worst, res / scale)
    checks.append(check("fiber.jacobi_random",
                        "(-1)^ca [A,[B,C]] + (-1)^ab [B,[C,A]] + (-1)^bc [C,[A,B]] = 0",
                        worst <= TOL_LINALG, worst, trials=opts.identity_trials))

    n, r = 2, 2
    Lop = fiber.full_fiber_operator(fiber.lefschetz_L, n, r, +2)
    Lam = fiber.full_fiber_operator(fiber.lambda_adj, n, r, -2)
    P = fiber.rank_one_curvature(fiber.random_covector(rng, n), r)
    Wop = fiber.full_fiber_operator(lambda u: fiber.wedge_curvature(P, u), n, r, +2)
    res = fiber.graded_jacobi_check(Lop, Lam, Wop)
    scale = max(1.0, float(np.prod([np.linalg.norm(o.matrix, 2) for o in (Lop, Lam, Wop)])))
    checks.append(check("fiber.jacobi_own_operators",
                        "Jacobi identity instantiated with L, Lambda, rank-one wedge",
                        res / scale <= TOL_LINALG, res / scale))

    worst = 0.0
    violations = 0
    for _ in range(opts.nakano_trials):
        n = int(rng.integers(1, 4)); r = int(rng.integers(1, 4))
        theta = fiber.random_nakano_semipositive(rng, n, r)
        for q in range(1, n + 1):
            mat = fiber.curvature_commutator(theta, q)
            scale = max(1.0, float(np.abs(mat).max()))
            rel = float(np.linalg.eigvalsh(mat).min()) / scale
            worst = min(worst, rel) if rel < worst else worst
            if rel < -TOL_ANALYSIS:
                violations += 1
    checks.append(check("fiber.nakano_transfer",
                        "Theta Nakano-semipositive => [i Theta, Lambda] >= 0 on (n,q)",
                        violations == 0, worst,
                        trials=opts.nakano_trials, violations=violations))

    bad = 0
    for _ in range(100):
        a = fiber.random_covector(rng, int(rng.integers(1, 5)))
        if not fiber.is_nakano_semipositive(fiber.rank_one_curvature(a)):
            bad += 1
    checks.append(check("fiber.rank_one_psd", "i d'psi wedge d''psi is Nakano semipositive",
                        bad == 0, float(-bad), trials=100))

    witness = griffiths_not_nakano_witness()
    griffiths_ok = fiber.is_griffiths_semipositive_sampled(witness, 1000, opts.seed)
    eig_min = fiber.nakano_min_eigenvalue(witness)
    checks.append(check("fiber.griffiths_not_nakano",
                        "Griffiths positivity (sampled) does not imply Nakano positivity",
                        griffiths_ok and eig_min < -0.1, -eig_min - 0.1,
                        nakano_min_eigenvalue=eig_min))

    return checks


# --------------------------------------------------------------------------- #
# cutoff suite
# --------------------------------------------------------------------------- #

CUTOFF_MATRIX = tuple((d, e, t) for d in (0.1, 0.5, 1.0)
                      for e in (0.002, 0.005) for t in (-5.0, -20.0))


def run_cutoff_suite(opts: VerifyOptions) -> list[CheckRecord]:
    checks: list[CheckRecord] = []
    worst_over_matrix = math.inf
    certs = {}
    for (d, e, t) in CUTOFF_MATRIX:
        params = cutoff.CutoffParams(t=t, delta=d, eps=e, grid=opts.grid)
        cert = cutoff.build_chi(params)
        certs[(d, e, t)] = cert
        tag = f"d{d}_e{e}_t{t}"
        for prop_id, entry in cert.per_property.items():
            if prop_id == "const34":
                continue
            worst_over_matrix = min(worst_over_matrix, entry.worst_margin)
            checks.append(check(
                f"cutoff.{prop_id}[{tag}]", _CUTOFF_REFS[prop_id], entry.passed,
                entry.worst_margin, worst_location=entry.worst_location,
                **{k: v for k, v in entry.details.items()}))

    checks.append(check("cutoff.matrix_worst_margin",
                        "all chi-family properties across the delta/eps/t matrix",
                        worst_over_matrix >= -cutoff.CutoffCertificate.MARGIN_TOL,
                        worst_over_matrix, combos=len(CUTOFF_MATRIX)))

    rep = cutoff.verify_budget(cutoff.CutoffParams(t=-5.0, delta=1.0, eps=0.002),
                               certs[(1.0, 0.002, -5.0)])
    gap = abs(rep.optimum_value - rep.optimum_target)
    checks.append(check("cutoff.budget_optimum",
                        "sup (1 + x/2 + pi(1+x^2))/(1+x^2) = (sqrt5+2)/4 + pi",
                        gap <= 1e-6, gap, optimum=rep.optimum_value,
                        location=rep.optimum_location))

    checks.append(check("cutoff.const34_small_eps", "4.21*8*(1+eps)^2/(1-eps) < 34 at eps=0.002",
                        cutoff.check_34(0.002), 34.0 - 4.21 * 8 * 1.002 ** 2 / 0.998))
    checks.append(check("cutoff.const34_large_eps", "audit fails at eps=0.01 (threshold ~3.1e-3)",
                        not cutoff.check_34(0.01), 4.21 * 8 * 1.01 ** 2 / 0.99 - 34.0))

    for e in (0.002, 0.005):
        th = cutoff.ThetaFamily(e)
        taus = np.linspace(-2.0, 0.5, 40001)
        vals = th.value(taus)
        ders = th.deriv(taus)
        slope_margin = (1.0 + e) - float(np.max(np.abs(ders)))
        mono = bool(np.all(np.diff(vals) <= 1e-14))
        ends_ok = th.value(-2.0) == 1.0 and th.value(0.0) == 0.0
        checks.append(check(f"cutoff.theta[e{e}]",
                            "theta smooth non-increasing, 1 left / 0 right, |theta'| <= 1+eps",
                            slope_margin >= 0 and mono and ends_ok, slope_margin,
                            max_slope=float(np.max(np.abs(ders))), monotone=mono))

    sandwich_ok = True
    worst_gap = 0.0
    for A in (1.0, 10.0, 100.0):
        for psi in (-50.0, -3.0, -0.5, 0.0, 1.5):
            psi_a, psi_plus = cutoff.psi_A(psi, A)
            gap = psi_plus - max(psi, 0.0)
            sandwich_ok &= psi_a < 0.0 and 0.0 <= gap <= math.log(2.0) / A + 1e-15
            worst_gap = max(worst_gap, gap * A / math.log(2.0))
    checks.append(check("cutoff.psi_A_sandwich",
                        "psi_A < 0 and max(psi,0) < psi_A^+ <= max(psi,0) + log2/A",
                        sandwich_ok, 1.0 - worst_gap))

    xs = np.linspace(-30.0, 30.0, 10001)
    gvals = np.array([cutoff.gamma(float(x)) for x in xs])
    neg = xs <= 0
    gamma_ok = (abs(cutoff.gamma(0.0) - 1.0) < 1e-15
                and np.all(gvals > 0) and np.all(gvals <= 1.0)
                and np.all(np.diff(gvals[neg]) >= -1e-16)
                and np.all(np.diff(gvals[~neg]) <= 1e-16)
                and abs(cutoff.gamma(2.0) - math.exp(-1.0)) < 1e-15
                and abs(cutoff.gamma(-3.0) - 0.1) < 1e-15)
    checks.append(check("cutoff.gamma_profile",
                        "gamma = exp(-x/2) on x>=0, 1/(1+x^2) on x<=0; continuous, unimodal",
                        bool(gamma_ok), None))

    eps = 0.002
    beta = cutoff.build_beta(eps)
    xs = np.linspace(-1.0, 0.0, 4097)
    integral_beta = float(np.trapezoid(beta.value(xs), xs))
    xi = cutoff.build_xi(eps)
    xs2 = np.linspace(-1.0, 2.0, 12289)
    integral_xi = float(np.trapezoid(xi.value(xs2), xs2))
    beta_ok = (beta.value(-1.0) == 0.0 and beta.value(0.0) == 1.0
               and bool(np.all(np.diff(beta.value(xs)) >= -1e-15))
               and integral_beta <= eps / 4.0 and beta.value(-2 * (eps / 4)) == 0.0)
    xi_ok = (xi.value(-1.0) == 0.0 and xi.value(2.0) == 0.0 and xi.value(0.5) == 1.0
             and integral_xi < 1.0 + eps)
    checks.append(check("cutoff.beta_xi",
                        "beta: monotone step with int_{-1}^0 beta < eps/2; "
                        "xi = beta(.)beta(1-.) with int xi < 1+eps",
                        beta_ok and xi_ok, eps / 4.0 - integral_beta,
                        integral_beta=integral_beta, integral_xi=integral_xi))

    params = cutoff.CutoffParams(t=-5.0, delta=1.0, eps=0.002, grid=opts.grid)
    cert = certs[(1.0, 0.002, -5.0)]
    tau = cert.tau
    eta_bound = 1.0 - params.delta * tau / 2.0
    eta_margin = float(np.min(eta_bound - cert.eta))
    eta_mt = float(np.min(1.0 + params.delta * cert.M_t - cert.eta))
    checks.append(check("cutoff.eta_bounds",
                        "1 <= eta = 1 - delta chi(psi) <= min(1 + delta M_t, 1 - delta psi/2)",
                        eta_margin >= -1e-12 and eta_mt >= -1e-12
                        and float(np.min(cert.eta)) >= 1.0 - 1e-12,
                        min(eta_margin, eta_mt)))

    samples = cutoff.sample_rt_instances(n=2, r=1, delta=1.0, count=opts.rt_samples,
                                         seed=opts.seed)
    rep_rt = cutoff.verify_Rt_chain(params, samples, cert=cert, seed=opts.seed)
    checks.append(check("cutoff.rt_chain",
                        "R_t >= (delta chi''/2) i d'psi wedge d''psi; on the tube "
                        "R_t >= ((1-eps) delta/8) i d'psi wedge d''psi and "
                        "<B^-1 v, v> <= 8(1+eps)^2/((1-eps) delta) |u|^2",
                        rep_rt.passed, rep_rt.tube_psd_margin_min,
                        coef_margin_min=rep_rt.coef_margin_min,
                        quotient_ratio_max=rep_rt.quotient_ratio_max,
                        quotient_checked=rep_rt.quotient_checked,
                        singular_skipped=rep_rt.singular_skipped,
                        samples=rep_rt.n_samples))

    probe_hits = sum(cutoff.rt_sharpness_probe(cutoff.CutoffParams(t=t, delta=d, eps=e))
                     for (d, e, t) in CUTOFF_MATRIX)
    checks.append(check("cutoff.rt_sharpness_probe",
                        "inflating the tube constant to (1+eps) delta/4 must fail somewhere",
                        probe_hits > 0, float(probe_hits)))

    return checks


_CUTOFF_REFS = {
    "5.8a": "chi(0) = 0 and inf chi = -M_t finite",
    "5.8b": "0 <= chi' <= 1/2 (total integral of chi'' below 1/2)",
    "5.8c": "chi' = 0 below t-1, chi' >= 0 above, chi' > 0 from the rise on",
    "5.8d": "chi'' >= (1-eps)/4 on [t, t+1]",
    "5.8e": "chi''/chi'^2 >= 2 delta / (pi (1 + delta^2 tau^2)) where chi' > 0",
    "5.13coef": "delta chi'' - delta^2 chi'^2/lambda >= delta chi''/2",
    "5.16": "eta + lambda <= 4.21 (1 + delta^2 psi^2)",
}


# --------------------------------------------------------------------------- #
# integrals suite
# --------------------------------------------------------------------------- #

I1_EXACT = math.pi / (2.0 * math.log(2.0))


def run_integrals_suite(opts: VerifyOptions) -> list[CheckRecord]:
    cfg = oracle.QuadratureConfig(rel_tol=opts.rel_tol, seed=opts.seed)
    checks: list[CheckRecord] = []

    est1 = oracle.singular_integral_Ik(1, cfg)
    err1 = abs(est1.value - I1_EXACT)
    checks.append(check("integrals.I1", "I_1 = pi/(2 log 2) = 2.26618007...",
                        est1.converged and err1 <= 1e-6, 1e-6 - err1,
                        value=est1.value, expected=I1_EXACT))

    est2 = oracle.singular_integral_Ik(2, cfg)
    margin = 2.0 * math.pi * est1.value - est2.value
    checks.append(check("integrals.I2_recursion", "I_2 <= (4 pi / 2) I_1",
                        est2.converged and margin >= 3.0 * est2.stderr, margin,
                        value=est2.value, stderr=est2.stderr))

    quad2 = oracle.singular_integral_Ik_quad_oracle(2)
    dev = abs(est2.value - quad2)
    tol = 4.0 * est2.stderr + 1e-9
    checks.append(check("integrals.I2_vs_quadrature",
                        "Monte Carlo I_2 agrees with the independent 1-D reduction",
                        dev <= tol, tol - dev, monte_carlo=est2.value,
                        quadrature=quad2, stderr=est2.stderr))

    loc1 = oracle.local_integrability_with_log([1], [0], 1, cfg)
    loc2 = oracle.local_integrability_with_log([1, 1], [0, 0], 1, cfg)
    loc0 = oracle.local_integrability_with_log([1], [3], 0, cfg)
    checks.append(check("integrals.log_damped_local",
                        "(1+|psi|)^-(n+1) |f|^2 e^(-m_p psi) locally integrable "
                        "for f one jump earlier",
                        loc1 and loc2 and loc0, None,
                        cases=["n=1 m=1", "n=2 m=1", "m=0"]))

    return checks


# --------------------------------------------------------------------------- #
# tube suite
# --------------------------------------------------------------------------- #

def run_tube_suite(opts: VerifyOptions) -> list[CheckRecord]:
    cfg = oracle.QuadratureConfig(rel_tol=opts.rel_tol, seed=opts.seed)
    checks: list[CheckRecord] = []
    t_seq = (-5.0, -8.0, -11.0, -14.0)

    # r = 1 on C^1 and C^2: numeric tube limit vs closed form, ratio recorded
    for n in (1, 2):
        spec = oracle.TubeSpec(oracle.DivisorialPsi(1), 1, (0,) * n)
        est = oracle.residual_measure_limit(spec, t_seq, cfg)
        area = (2.0 * math.pi * spec.domain_radius ** 2) ** (n - 1)
        predicted = oracle.closed_form_density(1, oracle.flat_section_gram(1)) * area
        ratio = est.value / predicted
        checks.append(check(f"tube.codim1_C{n}",
                            "tube limit of e^-psi dV = 2^(r+1) pi^r/(r-1)! / |L^r d sigma|^2 "
                            "(r=1, sigma = z_1)",
                            est.converged and abs(ratio - 1.0) <= 0.01, 0.01 - abs(ratio - 1.0),
                            numeric=est.value, closed_form=predicted, ratio=ratio))

    # ratio stability across tube parameters
    spec = oracle.TubeSpec(oracle.DivisorialPsi(1), 1, (0, 0))
    vals = [oracle.tube_mass(spec, t, cfg).value for t in (-4.0, -7.0, -10.0, -13.0, -16.0)]
    spread = (max(vals) - min(vals)) / max(vals)
    checks.append(check("tube.ratio_stability", "tube masses t-independent to 1%",
                        spread <= 0.01, 0.01 - spread, values=vals))

    # r = 2 on C^2
    spec2 = oracle.TubeSpec(oracle.DivisorialPsi(2), 1, (0, 0))
    est2 = oracle.residual_measure_limit(spec2, t_seq, cfg)
    pred2 = oracle.closed_form_density(2, oracle.flat_section_gram(2))
    ratio2 = est2.value / pred2
    checks.append(check("tube.codim2_C2", "codimension-2 tube limit matches closed form",
                        est2.converged and abs(ratio2 - 1.0) <= 3 * cfg.rel_tol,
                        3 * cfg.rel_tol - abs(ratio2 - 1.0),
                        numeric=est2.value, closed_form=pred2, ratio=ratio2))

    # scaled section sigma = 2 z_1: weight shifts by log 4, gram picks up |2|^2
    spec_s = oracle.TubeSpec(oracle.MonomialPsi((Fraction(1),), offset=math.log(4.0)), 1, (0,))
    est_s = oracle.residual_measure_limit(spec_s, t_seq, cfg)
    pred_s = oracle.closed_form_density(1, oracle.flat_section_gram(1, 2.0))
    checks.append(check("tube.scaled_section",
                        "sigma -> 2 sigma: limit scales like 1/|d sigma|^2",
                        est_s.converged and abs(est_s.value / pred_s - 1.0) <= 3 * cfg.rel_tol,
                        3 * cfg.rel_tol - abs(est_s.value / pred_s - 1.0),
                        numeric=est_s.value, closed_form=pred_s))

    # divergent case: psi = log|w1 w2|^2, m = 1: affine growth in |t|
    spec_d = oracle.TubeSpec(oracle.MonomialPsi((Fraction(1), Fraction(1))), 1, (0, 0))
    ts = np.array([-5.0, -10.0, -15.0, -20.0])
    masses = np.array([oracle.tube_mass(spec_d, float(t), cfg).value for t in ts])
    slope, intercept = np.polyfit(-ts, masses, 1)
    expected_slope = 4.0 * math.pi ** 2
    est_div = oracle.residual_measure_limit(spec_d, tuple(ts), cfg)
    checks.append(check("tube.divergent_affine_growth",
                        "non-integrable tube mass grows affinely in |t| "
                        "(slope 2^n pi^n per unit), limit flagged non-convergent",
                        slope > 0 and abs(slope / expected_slope - 1.0) <= 1e-6
                        and not est_div.converged,
                        slope - 0.0, slope=float(slope), expected_slope=expected_slope,
                        intercept=float(intercept)))

    # jet-density extension independence
    dev = oracle.jet_density_extension_independence(
        [1, 1], 1, {(0, 0): 1.0}, {(0, 0): 1.0, (1, 1): 1.0}, cfg)
    checks.append(check("tube.jet_extension_independence",
                        "jet tube limit independent of the extension mod the ideal "
                        "(deviation <= 3 rel_tol)",
                        dev <= 3.0 * cfg.rel_tol, 3.0 * cfg.rel_tol - dev, deviation=dev))

    # combinatorial vs analytic membership on randomized monomial instances
    rng = np.random.default_rng(opts.seed)
    disagreements = 0
    boundary_cases = 0
    for _ in range(500):
        n = int(rng.integers(1, 4))
        alpha = [Fraction(int(rng.integers(0, 6)), int(rng.integers(1, 4))) for _ in range(n)]
        if all(x == 0 for x in alpha):
            alpha[int(rng.integers(0, n))] = Fraction(1, 2)
        beta = [int(rng.integers(0, 7)) for _ in range(n)]
        k = int(rng.integers(0, n))
        if alpha[k] > 0 and rng.integers(0, 2):
            m = Fraction(beta[k] + 1) / alpha[k]  # exact boundary
            boundary_cases += 1
        else:
            m = Fraction(int(rng.integers(0, 12)), int(rng.integers(1, 5)))
        member = snc.monomial_membership(snc.MonomialModel(tuple(alpha)), beta, m)
        integrable = oracle.monomial_integrability(alpha, beta, m)
        if member != integrable:
            disagreements += 1
    checks.append(check("tube.membership_equivalence",
                        "floor-formula membership == closed-form integrability "
                        "(boundary cases classify as non-integrable)",
                        disagreements == 0, float(-disagreements),
                        instances=500, boundary_cases=boundary_cases))

    # Monte Carlo determinism: same seed, bit-identical estimates
    mc1 = oracle.singular_integral_Ik(2, oracle.QuadratureConfig(seed=opts.seed))
    mc2 = oracle.singular_integral_Ik(2, oracle.QuadratureConfig(seed=opts.seed))
    checks.append(check("tube.mc_determinism", "fixed seed gives bit-identical Monte Carlo",
                        mc1.value == mc2.value and mc1.stderr == mc2.stderr, None,
                        value=mc1.value))

    return checks


SUITES = {
    "fiber": run_fiber_suite,
    "cutoff": run_cutoff_suite,
    "integrals": run_integrals_suite,
    "tube": run_tube_suite,
}


def run_suites(names: list[str], opts: VerifyOptions) -> list[CheckRecord]:
    checks: list[CheckRecord] = []
    for name in names:
        checks.extend(SUITES[name](opts))
    return checks

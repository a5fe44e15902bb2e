"""Single-fiber Hermitian multilinear algebra: (p,q)-forms with bundle values,
the Lefschetz pair, curvature commutators, Nakano/Griffiths positivity.

Conventions (one flat metric, used consistently so the classical identities
hold to machine precision):

* basis covectors dz_I wedge dzbar_J on strictly increasing multi-indices,
  inner product extended multiplicatively from |dz_j|^2 = 2 (so the Gram
  factor of a (p,q) basis covector is 2^(p+q)), ell^2 over fiber indices;
* the Lefschetz operator wedges with the fundamental form of that metric,
  omega = (i/2) sum dz_j wedge dzbar_j, and Lambda is its true adjoint.

Under this pairing [L, Lambda] = (p+q-n) id, a* = i[abar, Lambda],
|omega|^2 = n.  Sign bookkeeping is insertion-sort parity throughout, and
operator matrices are produced by applying the wedge/adjoint primitives to
basis forms, never hand-coded.

Curvature brackets are taken curvature-first, [i Theta, Lambda], the order
that is positive semidefinite on (n,q)-forms for Nakano-semipositive Theta.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

Key = tuple[tuple[int, ...], tuple[int, ...], int]

GRAM_STEP = 2.0  # |dz_j|^2


def _insert(idx: int, multi: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """Sign and sorted result of inserting idx into a strictly increasing tuple."""
    if idx in multi:
        return None
    pos = sum(1 for i in multi if i < idx)
    sign = -1 if pos % 2 else 1
    return sign, tuple(sorted(multi + (idx,)))


def _remove_sign(idx: int, multi: tuple[int, ...]) -> int:
    pos = multi.index(idx)
    return -1 if pos % 2 else 1


@dataclass
class FiberForm:
    """(p,q)-form with values in a rank-r bundle at one point of C^n.

    coeffs maps (I, J, lam) -> complex with I, J strictly increasing tuples of
    1-based coordinate indices and lam a 0-based fiber index; absent keys are 0.
    """

    n: int
    p: int
    q: int
    r: int
    coeffs: dict[Key, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not (0 <= self.p <= self.n and 0 <= self.q <= self.n):
            raise ValueError(f"bidegree ({self.p},{self.q}) out of range for n={self.n}")
        if self.r < 1:
            raise ValueError("bundle rank must be >= 1")
        for (I, J, lam) in self.coeffs:
            ok = (len(I) == self.p and len(J) == self.q
                  and all(1 <= i <= self.n for i in I + J)
                  and tuple(sorted(set(I))) == I and tuple(sorted(set(J))) == J
                  and 0 <= lam < self.r)
            if not ok:
                raise ValueError(f"bad key {(I, J, lam)} for bidegree ({self.p},{self.q})")

    @property
    def gram(self) -> float:
        return GRAM_STEP ** (self.p + self.q)

    def scaled(self, z: complex) -> "FiberForm":
        return FiberForm(self.n, self.p, self.q, self.r,
                         {k: z * v for k, v in self.coeffs.items()})

    def minus(self, other: "FiberForm") -> "FiberForm":
        # identically-zero forms may carry a clipped bidegree (wedge of a
        # top-degree form); adopt the other operand's bidegree in that case
        if (self.p, self.q) != (other.p, other.q):
            if not other.coeffs:
                return FiberForm(self.n, self.p, self.q, self.r, dict(self.coeffs))
            if not self.coeffs:
                return other.scaled(-1.0)
            raise ValueError(f"bidegree mismatch ({self.p},{self.q}) vs ({other.p},{other.q})")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0.0) - v
        return FiberForm(self.n, self.p, self.q, self.r, out)

    def sup_norm(self) -> float:
        return max((abs(v) for v in self.coeffs.values()), default=0.0)


def zero_form(n: int, p: int, q: int, r: int = 1) -> FiberForm:
    return FiberForm(n, p, q, r, {})


def inner(u: FiberForm, v: FiberForm) -> complex:
    """<u, v> with the multiplicative Gram weight, conjugate-linear in v."""
    if (u.n, u.p, u.q, u.r) != (v.n, v.p, v.q, v.r):
        raise ValueError("inner product needs matching shape and bidegree")
    small, big = (u.coeffs, v.coeffs) if len(u.coeffs) <= len(v.coeffs) else (v.coeffs, u.coeffs)
    acc = 0.0 + 0.0j
    for k, a in u.coeffs.items():
        b = v.coeffs.get(k)
        if b is not None:
            acc += a * b.conjugate()
    return acc * u.gram


def norm_sq(u: FiberForm) -> float:
    return float(inner(u, u).real)


# --------------------------------------------------------------------------- #
# curvature tensors
# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class CurvatureTensor:
    """Hermitian tensor c[j,k,lam,mu] of i sum c dz_j wedge dzbar_k (x) e*_lam (x) e_mu."""

    n: int
    r: int
    c: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.c, dtype=complex)
        if c.shape != (self.n, self.n, self.r, self.r):
            raise ValueError(f"curvature array must have shape (n,n,r,r), got {c.shape}")
        herm = np.conj(np.transpose(c, (1, 0, 3, 2)))
        scale = max(1.0, float(np.abs(c).max()))
        if np.abs(c - herm).max() > 1e-10 * scale:
            raise ValueError("curvature tensor violates Hermitian symmetry c_jk^lm = conj(c_kj^ml)")
        object.__setattr__(self, "c", c)

    def plus(self, other: "CurvatureTensor") -> "CurvatureTensor":
        return CurvatureTensor(self.n, self.r, self.c + other.c)

    def minus(self, other: "CurvatureTensor") -> "CurvatureTensor":
        return CurvatureTensor(self.n, self.r, self.c - other.c)

    def scaled(self, x: float) -> "CurvatureTensor":
        return CurvatureTensor(self.n, self.r, x * self.c)


def identity_tensor(n: int, r: int, scale: float = 1.0) -> CurvatureTensor:
    c = np.zeros((n, n, r, r), dtype=complex)
    for j in range(n):
        for lam in range(r):
            c[j, j, lam, lam] = scale
    return CurvatureTensor(n, r, c)


@dataclass(frozen=True)
class Covector10:
    """(1,0)-form a = sum a_j dz_j."""

    n: int
    a: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(complex(x) for x in self.a))
        if len(self.a) != self.n:
            raise ValueError("coefficient count must equal n")
        if not all(math.isfinite(x.real) and math.isfinite(x.imag) for x in self.a):
            raise ValueError("coefficients must be finite")


def rank_one_curvature(a: Covector10, r: int = 1) -> CurvatureTensor:
    """i d'psi wedge d''psi for d'psi = a: c_jk = a_j conj(a_k), identity on the fiber."""
    vec = np.array(a.a, dtype=complex)
    c = np.einsum("j,k->jk", vec, vec.conj())
    full = np.zeros((a.n, a.n, r, r), dtype=complex)
    for lam in range(r):
        full[:, :, lam, lam] = c
    return CurvatureTensor(a.n, r, full)


def matricize(theta: CurvatureTensor) -> np.ndarray:
    """(n r) x (n r) Hermitian matrix of the quadratic form H_Theta."""
    return theta.c.transpose(0, 2, 1, 3).reshape(theta.n * theta.r, theta.n * theta.r)


def nakano_form(theta: CurvatureTensor, tau: np.ndarray) -> float:
    """H_Theta(tau) = sum c_jk^lm tau_(j,lam) conj(tau_(k,mu)); real by Hermitian symmetry."""
    tau = np.asarray(tau, dtype=complex)
    if tau.shape != (theta.n, theta.r):
        raise ValueError(f"tau must have shape (n, r) = {(theta.n, theta.r)}, got {tau.shape}")
    val = np.einsum("jklm,jl,km->", theta.c, tau, tau.conj())
    return float(val.real)


def is_nakano_semipositive(theta: CurvatureTensor, tol_factor: float = 1e-10) -> bool:
    m = matricize(theta)
    scale = max(1.0, float(np.abs(m).max()))
    return float(np.linalg.eigvalsh(m).min()) >= -tol_factor * scale


def nakano_min_eigenvalue(theta: CurvatureTensor) -> float:
    return float(np.linalg.eigvalsh(matricize(theta)).min())


def is_griffiths_semipositive_sampled(theta: CurvatureTensor, trials: int, seed: int,
                                      tol_factor: float = 1e-10) -> bool:
    """Necessary-condition sampling on decomposable tensors zeta (x) v only:
    a pass certifies nothing beyond the sampled directions (one-sided check)."""
    rng = np.random.default_rng(seed)
    scale = max(1.0, float(np.abs(theta.c).max()))
    for _ in range(trials):
        zeta = rng.standard_normal(theta.n) + 1j * rng.standard_normal(theta.n)
        v = rng.standard_normal(theta.r) + 1j * rng.standard_normal(theta.r)
        tau = np.einsum("j,l->jl", zeta, v)
        bound = float(np.einsum("jl,jl->", np.abs(tau) ** 2, np.ones_like(np.abs(tau))))
        if nakano_form(theta, tau) < -tol_factor * scale * max(bound, 1.0):
            return False
    return True


# --------------------------------------------------------------------------- #
# wedge primitives
# --------------------------------------------------------------------------- #

def wedge_covector10(a: Covector10, u: FiberForm) -> FiberForm:
    """a wedge u for a (1,0)-covector: dz_j enters the front of the dz-block."""
    if u.p + 1 > u.n:
        return zero_form(u.n, u.n, u.q, u.r)
    out: dict[Key, complex] = {}
    for (I, J, lam), val in u.coeffs.items():
        for j in range(1, u.n + 1):
            if a.a[j - 1] == 0:
                continue
            ins = _insert(j, I)
            if ins is None:
                continue
            sign, I2 = ins
            key = (I2, J, lam)
            out[key] = out.get(key, 0.0) + sign * a.a[j - 1] * val
    return FiberForm(u.n, u.p + 1, u.q, u.r, out)


def wedge_covector01(abar: Covector10, u: FiberForm) -> FiberForm:
    """abar wedge u for the (0,1)-covector sum abar_k dzbar_k: crossing the
    dz-block contributes (-1)^p."""
    if u.q + 1 > u.n:
        return zero_form(u.n, u.p, u.n, u.r)
    out: dict[Key, complex] = {}
    psign = -1 if u.p % 2 else 1
    for (I, J, lam), val in u.coeffs.items():
        for k in range(1, u.n + 1):
            if abar.a[k - 1] == 0:
                continue
            ins = _insert(k, J)
            if ins is None:
                continue
            sign, J2 = ins
            key = (I, J2, lam)
            out[key] = out.get(key, 0.0) + psign * sign * abar.a[k - 1] * val
    return FiberForm(u.n, u.p, u.q + 1, u.r, out)


def wedge_curvature(theta: CurvatureTensor, u: FiberForm) -> FiberForm:
    """(i Theta) wedge u: i sum c_jk^lm dz_j wedge dzbar_k, e_lam -> e_mu."""
    if theta.n != u.n or theta.r != u.r:
        raise ValueError("shape mismatch between curvature tensor and form")
    if u.p + 1 > u.n or u.q + 1 > u.n:
        return zero_form(u.n, min(u.p + 1, u.n), min(u.q + 1, u.n), u.r)
    out: dict[Key, complex] = {}
    psign = -1 if u.p % 2 else 1
    for (I, J, lam), val in u.coeffs.items():
        for j in range(1, u.n + 1):
            insI = _insert(j, I)
            if insI is None:
                continue
            sI, I2 = insI
            for k in range(1, u.n + 1):
                insJ = _insert(k, J)
                if insJ is None:
                    continue
                sJ, J2 = insJ
                base = 1j * psign * sI * sJ * val
                for mu in range(u.r):
                    coef = theta.c[j - 1, k - 1, lam, mu]
                    if coef != 0:
                        key = (I2, J2, mu)
                        out[key] = out.get(key, 0.0) + base * coef
    return FiberForm(u.n, u.p + 1, u.q + 1, u.r, out)


def lefschetz_L(u: FiberForm) -> FiberForm:
    """L u = omega wedge u with omega = (i/2) sum dz_j wedge dzbar_j.

    Wedging a top-bidegree form gives the zero form of the clipped target
    bidegree (the mathematically correct value, not an error).
    """
    if u.p + 1 > u.n or u.q + 1 > u.n:
        return zero_form(u.n, min(u.p + 1, u.n), min(u.q + 1, u.n), u.r)
    return wedge_curvature(identity_tensor(u.n, u.r, 0.5), u)


# --------------------------------------------------------------------------- #
# adjoints (Gram-weighted conjugate transposes of the primitives above)
# --------------------------------------------------------------------------- #

@lru_cache(maxsize=None)
def _basis(n: int, p: int, q: int, r: int) -> tuple[Key, ...]:
    idx = range(1, n + 1)
    return tuple((I, J, lam)
                 for I in itertools.combinations(idx, p)
                 for J in itertools.combinations(idx, q)
                 for lam in range(r))


def _to_vector(u: FiberForm, basis: Sequence[Key]) -> np.ndarray:
    vec = np.zeros(len(basis), dtype=complex)
    pos = {k: i for i, k in enumerate(basis)}
    for k, v in u.coeffs.items():
        vec[pos[k]] = v
    return vec


def _from_vector(vec: np.ndarray, basis: Sequence[Key], n: int, p: int, q: int, r: int) -> FiberForm:
    coeffs = {k: complex(v) for k, v in zip(basis, vec) if v != 0}
    return FiberForm(n, p, q, r, coeffs)


def operator_block_matrix(op: Callable[[FiberForm], FiberForm], n: int, r: int,
                          p: int, q: int, dp: int, dq: int) -> np.ndarray:
    """Matrix of op restricted to the (p,q) block, columns = images of basis forms."""
    src = _basis(n, p, q, r)
    tgt = _basis(n, p + dp, q + dq, r)
    mat = np.zeros((len(tgt), len(src)), dtype=complex)
    for col, key in enumerate(src):
        image = op(FiberForm(n, p, q, r, {key: 1.0}))
        mat[:, col] = _to_vector(image, tgt)
    return mat


@lru_cache(maxsize=None)
def _lambda_matrix(n: int, p: int, q: int, r: int) -> np.ndarray:
    """Matrix of Lambda = L* on the (p,q) block, from the L primitive:
    adjoint = (gram ratio) * conjugate transpose."""
    mat_L = operator_block_matrix(lefschetz_L, n, r, p - 1, q - 1, 1, 1)
    ratio = GRAM_STEP ** 2  # gram(p,q) / gram(p-1,q-1)
    return ratio * mat_L.conj().T


def lambda_adj(u: FiberForm) -> FiberForm:
    """Lambda u, the inner-product adjoint of the Lefschetz operator."""
    if u.p < 1 or u.q < 1:
        return zero_form(u.n, max(u.p - 1, 0), max(u.q - 1, 0), u.r)
    mat = _lambda_matrix(u.n, u.p, u.q, u.r)
    src = _basis(u.n, u.p, u.q, u.r)
    tgt = _basis(u.n, u.p - 1, u.q - 1, u.r)
    return _from_vector(mat @ _to_vector(u, src), tgt, u.n, u.p - 1, u.q - 1, u.r)


def adjoint_wedge_covector10(a: Covector10, u: FiberForm) -> FiberForm:
    """a* u, adjoint of wedging by the (1,0)-covector a."""
    if u.p < 1:
        return zero_form(u.n, 0, u.q, u.r)
    out: dict[Key, complex] = {}
    for (I, J, lam), val in u.coeffs.items():
        for j in I:
            coef = a.a[j - 1].conjugate()
            if coef == 0:
                continue
            sign = _remove_sign(j, I)
            I2 = tuple(i for i in I if i != j)
            key = (I2, J, lam)
            out[key] = out.get(key, 0.0) + GRAM_STEP * sign * coef * val
    return FiberForm(u.n, u.p - 1, u.q, u.r, out)


def adjoint_wedge_covector01(abar: Covector10, u: FiberForm) -> FiberForm:
    """(abar wedge .)^* u for the (0,1)-covector abar = sum abar_k dzbar_k."""
    if u.q < 1:
        return zero_form(u.n, u.p, 0, u.r)
    out: dict[Key, complex] = {}
    psign = -1 if u.p % 2 else 1
    for (I, J, lam), val in u.coeffs.items():
        for k in J:
            coef = abar.a[k - 1].conjugate()
            if coef == 0:
                continue
            sign = _remove_sign(k, J)
            J2 = tuple(i for i in J if i != k)
            key = (I, J2, lam)
            out[key] = out.get(key, 0.0) + GRAM_STEP * psign * sign * coef * val
    return FiberForm(u.n, u.p, u.q - 1, u.r, out)


def dbar_psi_contraction(a: Covector10, v: FiberForm) -> FiberForm:
    """(d''psi)* v where d''psi = conj(d'psi) and d'psi = a."""
    abar = Covector10(a.n, tuple(x.conjugate() for x in a.a))
    return adjoint_wedge_covector01(abar, v)


# --------------------------------------------------------------------------- #
# brackets and identities
# --------------------------------------------------------------------------- #

def curvature_commutator(theta: CurvatureTensor, q: int) -> np.ndarray:
    """Matrix of [i Theta, Lambda] u = i Theta wedge (Lambda u) - Lambda(i Theta wedge u)
    on the (n, q) block with bundle values; verified Hermitian.

    For Nakano-semipositive Theta this operator is positive semidefinite —
    the curvature term of the Bochner-Kodaira-Nakano identity.
    """
    n, r = theta.n, theta.r
    if not (1 <= q <= n):
        raise ValueError(f"q must lie in [1, n], got {q}")

    def op(u: FiberForm) -> FiberForm:
        first = wedge_curvature(theta, lambda_adj(u))
        second = lambda_adj(wedge_curvature(theta, u))
        return first.minus(second)

    mat = operator_block_matrix(op, n, r, n, q, 0, 0)
    scale = max(1.0, float(np.abs(mat).max()))
    if float(np.abs(mat - mat.conj().T).max()) > 1e-12 * scale:
        raise AssertionError("curvature commutator failed the Hermitian check (bug)")
    return mat


def dpsi_contraction_identity(a: Covector10, v: FiberForm) -> tuple[float, float]:
    """lhs = <[i d'psi wedge d''psi, Lambda] v, v>, rhs = |(d''psi)* v|^2 for an
    (n,1)-form v; the two must agree to 1e-10 * scale."""
    if not (v.p == v.n and v.q == 1):
        raise ValueError(f"v must be an (n,1)-form, got ({v.p},{v.q}) with n={v.n}")
    P = rank_one_curvature(a, v.r)
    bracket = wedge_curvature(P, lambda_adj(v)).minus(lambda_adj(wedge_curvature(P, v)))
    lhs = float(inner(bracket, v).real)
    rhs = norm_sq(dbar_psi_contraction(a, v))
    return lhs, rhs


def adjoint_bracket_identity(a: Covector10, u: FiberForm) -> tuple[FiberForm, FiberForm]:
    """lhs = a* u; rhs = i(abar wedge (Lambda u) - Lambda(abar wedge u)).

    The graded bracket i[abar, Lambda] reproduces the metric adjoint of
    wedging by a; componentwise agreement to 1e-12 * scale.
    """
    abar = Covector10(a.n, tuple(x.conjugate() for x in a.a))
    lhs = adjoint_wedge_covector10(a, u)
    rhs = wedge_covector01(abar, lambda_adj(u)).minus(lambda_adj(wedge_covector01(abar, u))).scaled(1j)
    return lhs, rhs


@dataclass(frozen=True)
class GradedOperator:
    """Square matrix on a graded space; must map degree d into degree d + degree."""

    degree: int
    matrix: np.ndarray
    space_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        dim = len(self.space_degrees)
        if m.shape != (dim, dim):
            raise ValueError(f"matrix must be {dim}x{dim}, got {m.shape}")
        scale = max(1.0, float(np.abs(m).max()))
        for i, di in enumerate(self.space_degrees):
            for j, dj in enumerate(self.space_degrees):
                if di != dj + self.degree and abs(m[i, j]) > 1e-13 * scale:
                    raise ValueError(
                        f"degree bookkeeping violation at block ({di},{dj}): "
                        f"entry {m[i, j]} with operator degree {self.degree}")
        object.__setattr__(self, "matrix", m)


def graded_commutator(A: GradedOperator, B: GradedOperator) -> GradedOperator:
    """[A, B] = A B - (-1)^(deg A * deg B) B A."""
    if A.space_degrees != B.space_degrees:
        raise ValueError("operators act on different graded spaces")
    sign = -1.0 if (A.degree * B.degree) % 2 else 1.0
    return GradedOperator(A.degree + B.degree,
                          A.matrix @ B.matrix - sign * B.matrix @ A.matrix,
                          A.space_degrees)


def graded_jacobi_check(A: GradedOperator, B: GradedOperator, C: GradedOperator) -> float:
    """Operator norm of (-1)^(ca)[A,[B,C]] + (-1)^(ab)[B,[C,A]] + (-1)^(bc)[C,[A,B]]."""
    a, b, c = A.degree, B.degree, C.degree
    s1 = -1.0 if (c * a) % 2 else 1.0
    s2 = -1.0 if (a * b) % 2 else 1.0
    s3 = -1.0 if (b * c) % 2 else 1.0
    total = (s1 * graded_commutator(A, graded_commutator(B, C)).matrix
             + s2 * graded_commutator(B, graded_commutator(C, A)).matrix
             + s3 * graded_commutator(C, graded_commutator(A, B)).matrix)
    return float(np.linalg.norm(total, 2))


def full_fiber_operator(op: Callable[[FiberForm], FiberForm], n: int, r: int,
                        degree: int) -> GradedOperator:
    """Assemble op as one graded matrix on the full exterior fiber (all (p,q))."""
    blocks = [(p, q) for p in range(n + 1) for q in range(n + 1)]
    keys: list[tuple[int, int, Key]] = []
    degrees: list[int] = []
    for (p, q) in blocks:
        for key in _basis(n, p, q, r):
            keys.append((p, q, key))
            degrees.append(p + q)
    pos = {entry: i for i, entry in enumerate(keys)}
    dim = len(keys)
    mat = np.zeros((dim, dim), dtype=complex)
    for col, (p, q, key) in enumerate(keys):
        image = op(FiberForm(n, p, q, r, {key: 1.0}))
        for k2, v in image.coeffs.items():
            entry = (image.p, image.q, k2)
            if entry in pos:
                mat[pos[entry], col] = v
    return GradedOperator(degree, mat, tuple(degrees))


# --------------------------------------------------------------------------- #
# the twisted curvature form R_t and the operator B
# --------------------------------------------------------------------------- #

def assemble_Rt(theta: CurvatureTensor, ddpsi: CurvatureTensor, dpsi: Covector10,
                eta: float, chi1: float, chi2: float, delta: float, lam: float,
                ) -> CurvatureTensor:
    """eta*(theta + (1 + delta*chi1/eta) ddpsi) + (delta*chi2 - delta^2 chi1^2/lam) * i d'psi wedge d''psi."""
    if not (eta >= 1.0):
        raise ValueError(f"eta must be >= 1, got {eta}")
    if not (0.0 <= chi1 <= 0.5):
        raise ValueError(f"chi1 must lie in [0, 1/2], got {chi1}")
    if lam <= 0 or delta <= 0:
        raise ValueError("delta and lambda must be positive")
    main = theta.plus(ddpsi.scaled(1.0 + delta * chi1 / eta)).scaled(eta)
    rank_one_coef = delta * chi2 - delta ** 2 * chi1 ** 2 / lam
    return main.plus(rank_one_curvature(dpsi, theta.r).scaled(rank_one_coef))


def bkn_operator_B(theta_eff: CurvatureTensor, q: int) -> np.ndarray:
    """The curvature operator of the twisted a priori inequality on (n,q)-forms:
    B = [i R, Lambda] for the already-assembled bracket argument R."""
    return curvature_commutator(theta_eff, q)


# --------------------------------------------------------------------------- #
# random instances for the property suites
# --------------------------------------------------------------------------- #

def random_form(rng: np.random.Generator, n: int, p: int, q: int, r: int = 1) -> FiberForm:
    basis = _basis(n, p, q, r)
    coeffs = {k: complex(rng.standard_normal(), rng.standard_normal()) for k in basis}
    return FiberForm(n, p, q, r, coeffs)


def random_covector(rng: np.random.Generator, n: int) -> Covector10:
    return Covector10(n, tuple(rng.standard_normal(n) + 1j * rng.standard_normal(n)))


def random_hermitian_tensor(rng: np.random.Generator, n: int, r: int) -> CurvatureTensor:
    m = rng.standard_normal((n * r, n * r)) + 1j * rng.standard_normal((n * r, n * r))
    herm = (m + m.conj().T) / 2.0
    c = herm.reshape(n, r, n, r).transpose(0, 2, 1, 3)
    return CurvatureTensor(n, r, c)


def random_nakano_semipositive(rng: np.random.Generator, n: int, r: int,
                               rank: int | None = None) -> CurvatureTensor:
    """Wishart-type tensor: the matricization is G G^H, hence PSD."""
    k = rank if rank is not None else n * r
    g = rng.standard_normal((n * r, k)) + 1j * rng.standard_normal((n * r, k))
    m = g @ g.conj().T / k
    c = m.reshape(n, r, n, r).transpose(0, 2, 1, 3)
    return CurvatureTensor(n, r, c)


def random_psd_matrix(rng: np.random.Generator, n: int, ridge: float = 0.0) -> np.ndarray:
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return g @ g.conj().T / n + ridge * np.eye(n)


def hermitian_scalar_tensor(n: int, r: int, h: np.ndarray) -> CurvatureTensor:
    """n x n Hermitian matrix h tensored with the identity on the fiber."""
    c = np.zeros((n, n, r, r), dtype=complex)
    for lam in range(r):
        c[:, :, lam, lam] = h
    return CurvatureTensor(n, r, c)

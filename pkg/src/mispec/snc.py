"""Exact combinatorics of multiplier ideals on SNC resolution models.

A weight with divisorial singularities resolved over a simple normal
crossing divisor is described by per-component data: the order ``a_k`` of
the pulled-back ideal along the component, the Jacobian order ``b_k``, and
a global pole coefficient ``c``.  The ideal at weight multiple ``m`` is the
coefficient vector

    s_k(m) = max(floor(m*c*a_k - b_k), 0),

all arithmetic exact (``fractions.Fraction``); jumping numbers are the
values of m where the vector changes, which can only happen at
(b_k + N)/(c*a_k) with integer N >= 1.

Everything here works "upstairs" on the resolution: an ideal is its
coefficient vector (plus, for restricted ideals, a set of component pairs);
coincidences of direct images downstairs are not detected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]


def _frac(x: RationalLike) -> Fraction:
    """Coerce to Fraction; floats are rejected (boundary cases m*c*a_k - b_k
    being an exact integer decide jumps, so no binary rounding may enter)."""
    if isinstance(x, float):
        raise TypeError(f"exact rational required, got float {x!r}")
    return Fraction(x)


class ModelError(ValueError):
    """Invalid model data (violated invariant)."""


@dataclass(frozen=True)
class DivisorComponent:
    """One SNC component: pullback order ``a`` >= 1, Jacobian order ``b`` >= 0."""

    name: str
    a: int
    b: int = 0

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and self.a >= 1):
            raise ModelError(f"component {self.name!r}: a must be an integer >= 1, got {self.a!r}")
        if not (isinstance(self.b, int) and self.b >= 0):
            raise ModelError(f"component {self.name!r}: b must be an integer >= 0, got {self.b!r}")


@dataclass(frozen=True)
class SncModel:
    """SNC resolution record: pole coefficient ``c`` > 0, ordered components,
    and declared pairwise intersections (pairs of 0-based component indices).

    Intersection incidence is user-supplied input, not computed: the pair
    scheme of the restricted ideal needs geometric data the combinatorial
    model cannot derive.
    """

    c: Fraction
    components: tuple[DivisorComponent, ...]
    intersections: frozenset[frozenset[int]] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", _frac(self.c))
        object.__setattr__(self, "components", tuple(self.components))
        if self.c <= 0:
            raise ModelError(f"pole coefficient c must be positive, got {self.c}")
        if not self.components:
            raise ModelError("model needs at least one component")
        names = [comp.name for comp in self.components]
        if len(set(names)) != len(names):
            raise ModelError(f"duplicate component names: {names}")
        pairs = set()
        for pair in self.intersections:
            pair = frozenset(pair)
            if len(pair) != 2:
                raise ModelError(f"intersection pair must have two distinct members: {set(pair)}")
            if not all(isinstance(i, int) and 0 <= i < len(self.components) for i in pair):
                raise ModelError(f"intersection pair out of range: {set(pair)}")
            pairs.add(pair)
        object.__setattr__(self, "intersections", frozenset(pairs))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(comp.name for comp in self.components)


def snc_model(c: RationalLike, a: Sequence[int], b: Sequence[int] | None = None,
              intersections: Iterable[tuple[int, int]] = (),
              names: Sequence[str] | None = None) -> SncModel:
    """Convenience constructor from parallel a/b sequences."""
    if b is None:
        b = [0] * len(a)
    if len(a) != len(b):
        raise ModelError("a and b must have equal length")
    if names is None:
        names = [f"D{k + 1}" for k in range(len(a))]
    comps = tuple(DivisorComponent(str(n), int(ak), int(bk)) for n, ak, bk in zip(names, a, b))
    return SncModel(_frac(c), comps, frozenset(frozenset(p) for p in intersections))


@dataclass(frozen=True)
class MonomialModel:
    """Monomial weight sum_k alpha_k log|z_k|^2 near 0; alpha_k >= 0, not all zero."""

    alpha: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(_frac(x) for x in self.alpha))
        if any(x < 0 for x in self.alpha):
            raise ModelError(f"alpha entries must be >= 0: {self.alpha}")
        if all(x == 0 for x in self.alpha):
            raise ModelError("alpha must have at least one positive entry")

    def to_snc(self) -> tuple[SncModel, tuple[int, ...]]:
        """Identity-resolution SNC model: a_k = num(alpha_k*L), c = 1/L, b = 0,
        keeping only coordinates with alpha_k > 0.  Returns (model, kept axes)."""
        kept = tuple(k for k, x in enumerate(self.alpha) if x > 0)
        L = math.lcm(*(self.alpha[k].denominator for k in kept))
        a = [int(self.alpha[k] * L) for k in kept]
        return snc_model(Fraction(1, L), a, names=[f"z{k + 1}" for k in kept]), kept


@dataclass(frozen=True)
class JumpingSpectrum:
    """Strictly increasing positive jumps up to ``cap``; m_0 = 0 is implicit."""

    values: tuple[Fraction, ...]
    cap: Fraction

    def __post_init__(self) -> None:
        if any(v <= 0 or v > self.cap for v in self.values):
            raise ModelError("spectrum values must satisfy 0 < m <= cap")
        if any(x >= y for x, y in zip(self.values, self.values[1:])):
            raise ModelError("spectrum values must be strictly increasing")

    def __len__(self) -> int:
        return len(self.values)

    def jump(self, p: int) -> Fraction:
        """m_p with the convention m_0 = 0."""
        if p == 0:
            return Fraction(0)
        return self.values[p - 1]


@dataclass(frozen=True)
class RestrictedIdealData:
    """Coefficient vector at m_{p-1} plus the pair scheme of simultaneous jumpers."""

    base: tuple[int, ...]
    pairs: frozenset[frozenset[int]]
    jump_index: int


def multiplier_coeffs(model: SncModel, m: RationalLike) -> tuple[int, ...]:
    """Coefficient vector s_k = floor(m*c*a_k - b_k) clamped at 0, exact."""
    m = _frac(m)
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return tuple(max(math.floor(m * model.c * comp.a - comp.b), 0) for comp in model.components)


def jump_candidates(model: SncModel, cap: RationalLike) -> list[Fraction]:
    """All values (b_k + N)/(c*a_k), N >= 1 integer, in (0, cap], sorted, deduped."""
    cap = _frac(cap)
    values: set[Fraction] = set()
    for comp in model.components:
        den = model.c * comp.a
        N = 1
        while (cand := Fraction(comp.b + N) / den) <= cap:
            values.add(cand)
            N += 1
    return sorted(values)


def jumping_spectrum(model: SncModel, cap: RationalLike) -> JumpingSpectrum:
    """All jumps in (0, cap]: candidates at which the coefficient vector changes."""
    cap = _frac(cap)
    if cap <= 0:
        raise ValueError(f"cap must be positive, got {cap}")
    jumps: list[Fraction] = []
    current = multiplier_coeffs(model, 0)
    for cand in jump_candidates(model, cap):
        vec = multiplier_coeffs(model, cand)
        if vec != current:
            jumps.append(cand)
            current = vec
    return JumpingSpectrum(tuple(jumps), cap)


def lct(model: SncModel) -> Fraction:
    """Log canonical threshold: the first jump, min_k (b_k + 1)/(c*a_k)."""
    return min(Fraction(comp.b + 1) / (model.c * comp.a) for comp in model.components)


def _jump_achievers(model: SncModel, m_p: Fraction) -> frozenset[int]:
    """Indices k whose coefficient jumps at m_p, i.e. m_p*c*a_k - b_k in Z_{>=1}."""
    out = set()
    for k, comp in enumerate(model.components):
        x = m_p * model.c * comp.a - comp.b
        if x.denominator == 1 and x >= 1:
            out.add(k)
    return frozenset(out)


def restricted_multiplier_ideal(model: SncModel, p: int, cap: RationalLike) -> RestrictedIdealData:
    """Restricted-ideal data at jump index p: vector at m_{p-1} twisted by the
    ideal of pairwise intersections of components jumping simultaneously at m_p."""
    if p < 1:
        raise ValueError(f"jump index p must be >= 1, got {p}")
    spectrum = jumping_spectrum(model, cap)
    if len(spectrum) < p:
        raise ValueError(f"only {len(spectrum)} jumps below cap={_frac(cap)}, need p={p}")
    m_p = spectrum.jump(p)
    base = multiplier_coeffs(model, spectrum.jump(p - 1))
    K = _jump_achievers(model, m_p)
    pairs = frozenset(pair for pair in model.intersections if pair <= K)
    return RestrictedIdealData(base, pairs, p)


def inclusion_chain(model: SncModel, p: int, cap: RationalLike) -> tuple[bool, bool]:
    """Strictness flags of I(m_p psi) <= I'(m_{p-1} psi) <= I(m_{p-1} psi).

    Both inclusions are asserted (a failure is an implementation bug); the
    right one is strict exactly when the pair scheme is nonempty, the left
    one whenever some component jumps (always, at a jump).
    """
    spectrum = jumping_spectrum(model, cap)
    if len(spectrum) < p:
        raise ValueError(f"only {len(spectrum)} jumps below cap={_frac(cap)}, need p={p}")
    restricted = restricted_multiplier_ideal(model, p, cap)
    upper = multiplier_coeffs(model, spectrum.jump(p))
    K = _jump_achievers(model, spectrum.jump(p))
    if any(u < b for u, b in zip(upper, restricted.base)):
        raise AssertionError("inclusion I(m_p psi) <= I'(m_{p-1} psi) violated (bug)")
    if any((u - b != 1) for k, (u, b) in enumerate(zip(upper, restricted.base)) if k in K):
        raise AssertionError("jump achievers must increment their coefficient by exactly 1 (bug)")
    strict_left = bool(K)
    strict_right = bool(restricted.pairs)
    return strict_left, strict_right


def monomial_membership(model: MonomialModel, beta: Sequence[int], m: RationalLike) -> bool:
    """Whether z^beta lies in the ideal at weight multiple m, decided through
    the floor-formula coefficient vector of the associated SNC model.

    (The analytic route — the strict inequality beta_k + 1 > m*alpha_k from
    the radial integral — lives in :func:`mispec.oracle.monomial_integrability`;
    the two must agree on every instance.)
    """
    beta = tuple(int(x) for x in beta)
    if len(beta) != len(model.alpha):
        raise ValueError(f"beta has length {len(beta)}, alpha has {len(model.alpha)}")
    if any(x < 0 for x in beta):
        raise ValueError(f"beta entries must be >= 0: {beta}")
    snc, kept = model.to_snc()
    coeffs = multiplier_coeffs(snc, m)
    return all(beta[axis] >= s for axis, s in zip(kept, coeffs))


def jumps_with_vectors(model: SncModel, cap: RationalLike
                       ) -> list[tuple[Fraction, tuple[int, ...], tuple[int, ...]]]:
    """(m_p, vector just below, vector at m_p) rows for presentation."""
    rows = []
    prev = multiplier_coeffs(model, 0)
    for m_p in jumping_spectrum(model, cap).values:
        vec = multiplier_coeffs(model, m_p)
        rows.append((m_p, prev, vec))
        prev = vec
    return rows

"""Exact-rational combinatorics: worked examples and invariants."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mispec import oracle, snc
from mispec.snc import ModelError, MonomialModel, snc_model


def model_45b(with_intersection=True):
    inter = [(0, 1)] if with_intersection else []
    return snc_model(1, [1, 1], [0, 0], intersections=inter)


class TestMultiplierCoeffs:
    def test_worked_example_integer_multiples(self):
        model = model_45b()
        for p in range(1, 8):
            assert snc.multiplier_coeffs(model, p) == (p, p)

    def test_zero_weight_gives_unit_ideal(self):
        for model in (model_45b(), snc_model(3, [2, 5], [1, 4])):
            assert snc.multiplier_coeffs(model, 0) == (0, 0)

    def test_floor_with_jacobian_shift(self):
        # cross-checked against the analytic oracle below (b folded into the
        # numerator exponents)
        model = snc_model(1, [2, 3], [1, 0])
        assert snc.multiplier_coeffs(model, F(1, 2)) == (0, 1)
        assert not oracle.monomial_integrability([2], [0], F(1, 2), extra_jacobian=[0])
        assert oracle.monomial_integrability([3], [0], F(1, 2), extra_jacobian=[0])

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            snc.multiplier_coeffs(model_45b(), 0.5)


class TestJumpingSpectrum:
    def test_worked_example_spectrum(self):
        assert snc.jumping_spectrum(model_45b(), 3).values == (F(1), F(2), F(3))

    def test_single_smooth_divisor(self):
        model = snc_model(1, [1], [0])
        assert snc.jumping_spectrum(model, 2).values == (F(1), F(2))

    def test_two_multiplicities(self):
        model = snc_model(1, [2, 3], [0, 0])
        assert snc.jumping_spectrum(model, 1).values == (F(1, 3), F(1, 2), F(2, 3), F(1))

    def test_cap_below_first_candidate(self):
        assert snc.jumping_spectrum(model_45b(), F(1, 2)).values == ()

    def test_every_value_is_a_candidate(self):
        model = snc_model(2, [3, 5], [2, 1])
        spectrum = snc.jumping_spectrum(model, 4)
        candidates = set(snc.jump_candidates(model, 4))
        assert set(spectrum.values) <= candidates


class TestLct:
    def test_worked_example(self):
        assert snc.lct(model_45b()) == 1

    def test_single_divisor(self):
        assert snc.lct(snc_model(1, [1], [0])) == 1

    def test_mixed_orders(self):
        assert snc.lct(snc_model(2, [3, 5], [2, 0])) == F(1, 10)

    def test_lct_is_first_jump(self):
        model = snc_model(2, [3, 5], [2, 0])
        assert snc.jumping_spectrum(model, 2).values[0] == snc.lct(model)


class TestRestrictedIdeal:
    def test_worked_example_pair(self):
        data = snc.restricted_multiplier_ideal(model_45b(), 1, 3)
        assert data.base == (0, 0)
        assert data.pairs == frozenset({frozenset({0, 1})})

    def test_disjoint_components_no_pairs(self):
        data = snc.restricted_multiplier_ideal(model_45b(False), 1, 3)
        assert data.base == (0, 0)
        assert data.pairs == frozenset()

    def test_singleton_jumper_no_pairs(self):
        model = snc_model(1, [1, 2], [0, 0], intersections=[(0, 1)])
        data = snc.restricted_multiplier_ideal(model, 1, 3)
        assert data.base == (0, 0)
        assert data.pairs == frozenset()

    def test_error_when_not_enough_jumps(self):
        with pytest.raises(ValueError, match="jumps below cap"):
            snc.restricted_multiplier_ideal(model_45b(), 5, 3)


class TestInclusionChain:
    def test_worked_example_strict_strict(self):
        assert snc.inclusion_chain(model_45b(), 1, 3) == (True, True)

    def test_disjoint_right_equality(self):
        assert snc.inclusion_chain(model_45b(False), 1, 3) == (True, False)

    def test_singleton_jumper(self):
        model = snc_model(1, [1, 2], [0, 0])
        assert snc.inclusion_chain(model, 1, 3) == (True, False)


class TestMonomialMembership:
    def test_constants_excluded_at_first_jump(self):
        assert not snc.monomial_membership(MonomialModel((F(1), F(1))), (0, 0), 1)

    def test_zero_weight_everything_member(self):
        assert snc.monomial_membership(MonomialModel((F(2), F(3))), (0, 0), 0)

    def test_radial_criterion_example(self):
        assert snc.monomial_membership(MonomialModel((F(2), F(3))), (1, 2), F(5, 6))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            snc.monomial_membership(MonomialModel((F(1),)), (0, 0), 1)


# --------------------------------------------------------------------------- #
# invariants (property-based)
# --------------------------------------------------------------------------- #

rationals = st.fractions(min_value=0, max_value=8).filter(lambda x: x.denominator <= 12)
pos_rationals = st.fractions(min_value=F(1, 6), max_value=4).filter(lambda x: x.denominator <= 6)


@st.composite
def snc_models(draw, max_components=3):
    k = draw(st.integers(1, max_components))
    a = [draw(st.integers(1, 5)) for _ in range(k)]
    b = [draw(st.integers(0, 4)) for _ in range(k)]
    c = draw(pos_rationals)
    pairs = []
    if k >= 2:
        pairs = draw(st.lists(
            st.tuples(st.integers(0, k - 1), st.integers(0, k - 1)).filter(lambda p: p[0] != p[1]),
            max_size=3))
    return snc_model(c, a, b, intersections=pairs)


@given(snc_models(), rationals, rationals)
def test_monotonicity(model, m1, m2):
    lo, hi = min(m1, m2), max(m1, m2)
    v_lo = snc.multiplier_coeffs(model, lo)
    v_hi = snc.multiplier_coeffs(model, hi)
    assert all(x <= y for x, y in zip(v_lo, v_hi))


@given(snc_models(), rationals)
def test_right_continuity(model, m):
    """The vector is constant on [m, next candidate): openness of the ideal."""
    above = [x for x in snc.jump_candidates(model, m + 2) if x > m]
    probe = (m + above[0]) / 2 if above else m + 1
    assert snc.multiplier_coeffs(model, probe) == snc.multiplier_coeffs(model, m)


@given(snc_models())
def test_candidate_soundness(model):
    spectrum = snc.jumping_spectrum(model, 3)
    for value in spectrum.values:
        assert any(
            (value * model.c * comp.a - comp.b).denominator == 1
            and value * model.c * comp.a - comp.b >= 1
            for comp in model.components)


@given(snc_models(), st.fractions(min_value=F(1, 4), max_value=4).filter(lambda x: x.denominator <= 4))
def test_scaling_invariance(model, s):
    """Only the product m*c enters the floor formula."""
    scaled = snc.SncModel(model.c / s, model.components, model.intersections)
    for m in (F(1, 3), F(1), F(7, 5)):
        assert snc.multiplier_coeffs(model, m) == snc.multiplier_coeffs(scaled, m * s)


@given(snc_models())
@settings(max_examples=50)
def test_sandwich(model):
    spectrum = snc.jumping_spectrum(model, 3)
    for p in range(1, len(spectrum) + 1):
        data = snc.restricted_multiplier_ideal(model, p, 3)
        upper = snc.multiplier_coeffs(model, spectrum.jump(p))
        lower = snc.multiplier_coeffs(model, spectrum.jump(p - 1))
        assert data.base == lower
        assert all(u >= b for u, b in zip(upper, data.base))
        for pair in data.pairs:
            assert pair in model.intersections


@st.composite
def monomial_instances(draw):
    n = draw(st.integers(1, 3))
    alpha = [draw(st.fractions(min_value=0, max_value=5).filter(lambda x: x.denominator <= 3))
             for _ in range(n)]
    if all(x == 0 for x in alpha):
        alpha[0] = F(1, 2)
    beta = [draw(st.integers(0, 6)) for _ in range(n)]
    boundary = draw(st.booleans())
    k = draw(st.integers(0, n - 1))
    if boundary and alpha[k] > 0:
        m = F(beta[k] + 1) / alpha[k]
    else:
        m = draw(rationals)
    return MonomialModel(tuple(alpha)), tuple(beta), m


@given(monomial_instances())
@settings(max_examples=200)
def test_membership_matches_integrability_oracle(instance):
    model, beta, m = instance
    assert snc.monomial_membership(model, beta, m) == \
        oracle.monomial_integrability(model.alpha, beta, m)


def test_model_validation():
    with pytest.raises(ModelError):
        snc_model(0, [1])
    with pytest.raises(ModelError):
        snc_model(1, [1], [-1])
    with pytest.raises(ModelError):
        snc_model(1, [1, 1], intersections=[(0, 0)])
    with pytest.raises(ModelError):
        snc_model(1, [1, 1], intersections=[(0, 5)])
    with pytest.raises(ModelError):
        MonomialModel((F(0), F(0)))

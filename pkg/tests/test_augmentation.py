import random
from fractions import Fraction

import pytest

from hrlab.augmentation import (
    CONSISTENT,
    NOT_APPLICABLE,
    AugmentedSpace,
    FormFamily,
    check_property_a,
    check_property_b,
    derivative_inequality_defect,
    intersection_form,
    intersection_form_by_product,
    rank_drop_family,
    twist_family,
    verify_augmentation1,
    verify_augmentation2,
    verify_recursion,
)
from hrlab.bilinear import Signature, SymBilinearForm, gram, is_hr_wrt, signature
from hrlab.exterior import Form, HermitianMatrix, hermitian_to_form, identity_form
from hrlab.sampling import random_positive_form
from hrlab.symfunc import Partition, derived_schur, schur


def make_space(d, e, seed, random_h=False):
    rng = random.Random(seed)
    h = random_positive_form(rng, d) if random_h else None
    omegas = [random_positive_form(rng, d) for _ in range(e)]
    return AugmentedSpace(omegas, h)


# -- space validation -----------------------------------------------------------


def test_space_rejects_bad_data():
    d = 3
    with pytest.raises(ValueError):
        AugmentedSpace([])
    with pytest.raises(ValueError):
        AugmentedSpace([hermitian_to_form(HermitianMatrix.diagonal([1, -1, 1]))])
    with pytest.raises(ValueError):
        AugmentedSpace([identity_form(3), identity_form(4)])
    with pytest.raises(ValueError):
        AugmentedSpace([identity_form(3)], h=identity_form(2))


def test_space_layout():
    sp = make_space(3, 2, 1)
    assert sp.dim_v == 10
    assert sp.zeta_index == 9
    assert sp.h_coords[-1] == 0
    assert sp.zeta_coords[-1] == 1
    assert len(sp.w_basis) == 9


def test_weight_mismatch_rejected():
    sp = make_space(3, 1, 2)
    with pytest.raises(ValueError):
        intersection_form(sp, (2,), 1)
    with pytest.raises(ValueError):
        twist_family(sp, (), 1)


# -- the forms Q_i -----------------------------------------------------------------


def test_qi_zero_outside_range():
    sp = make_space(3, 1, 3)
    lam = Partition((1,))
    assert intersection_form(sp, lam, -1).is_zero()
    assert intersection_form(sp, lam, 4).is_zero()
    assert intersection_form_by_product(sp, lam, -2).is_zero()


def test_qi_at_top_index_restricts_to_gram():
    for d, e, lam in [(3, 1, (1,)), (4, 2, (2,))]:
        sp = make_space(d, e, d * 10 + e)
        q = intersection_form(sp, lam, d)
        block = q.restrict_indices(range(d * d), f"w11(d={d})")
        assert block == gram(schur(lam, sp.omegas))
        # zeta row and column vanish at i = d
        assert all(x == 0 for x in q.pairing_vector(sp.zeta_coords))


def test_q_top_minkowski_case():
    sp = make_space(2, 1, 5)
    q = intersection_form(sp, Partition(()), 2)
    block = q.restrict_indices(range(4))
    assert signature(block) == Signature(1, 3, 0)


@pytest.mark.parametrize("d,e,lam", [(3, 1, (1,)), (3, 2, (1,)), (4, 2, (2,)), (4, 2, (1, 1))])
def test_product_route_equals_derived_route(d, e, lam):
    sp = make_space(d, e, 100 + d + e)
    for i in range(-1, d + 2):
        assert intersection_form(sp, lam, i) == intersection_form_by_product(sp, lam, i), i


def test_zeta_degree_overflow_integrates_to_zero():
    # any slice beyond zeta power d never reaches the integral: the form at
    # power d+1 would need negative complementary degree, so both routes give
    # exactly zero matrices outside 0..d
    sp = make_space(3, 1, 6)
    lam = Partition((1,))
    shat = sp.schur_shifted(lam)
    assert shat.degree() <= lam.weight
    assert intersection_form_by_product(sp, lam, 3 + 1).is_zero()


def test_index_shift_identity():
    # Q_i(b, zeta) = Q_{i+1}(b, h) for every i and basis vector
    for d, e, lam in [(3, 1, (1,)), (4, 2, (1, 1))]:
        sp = make_space(d, e, 200 + d)
        for i in range(-1, d + 1):
            qi = intersection_form(sp, lam, i)
            qi1 = intersection_form(sp, lam, i + 1)
            assert qi.pairing_vector(sp.zeta_coords) == qi1.pairing_vector(sp.h_coords)


def test_linear_and_square_identities():
    d, e, lam = 4, 2, (2,)
    sp = make_space(d, e, 321)
    rng = random.Random(99)
    qs = {i: intersection_form(sp, lam, i) for i in range(-1, d + 3)}
    basis = [tuple(Fraction(r == k) for r in range(sp.dim_v)) for k in range(sp.dim_w)]
    for _ in range(5):
        s = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        for i in range(0, d + 1):
            qi, qi1, qi2 = qs[i], qs[i + 1], qs[i + 2]
            for alpha in basis[:5]:
                shifted = tuple(a + s * z for a, z in zip(alpha, sp.zeta_coords))
                assert qi.value(shifted, sp.h_coords) == qi.value(alpha, sp.h_coords) + s * qi1.quad(sp.h_coords)
                assert qi.quad(shifted) == qi.quad(alpha) + 2 * s * qi1.value(alpha, sp.h_coords) + s * s * qi2.quad(sp.h_coords)


# -- families ------------------------------------------------------------------------


def test_family_base_cases():
    sp = make_space(3, 1, 7)
    lam = Partition((1,))
    r0 = twist_family(sp, lam, 0)
    assert len(r0.coeffs) == 1
    assert r0.at(0) == intersection_form(sp, lam, 0)
    assert r0.derivative().at(Fraction(1, 3)).is_zero()
    out = twist_family(sp, lam, -1)
    assert out.at(5).is_zero()


def test_family_linear_coefficient():
    d, e, lam = 4, 1, (1, 1)
    sp = make_space(d, e, 8)
    for i in range(0, d + 1):
        fam = twist_family(sp, lam, i)
        assert fam.coeffs[0] == intersection_form(sp, lam, i)
        if i >= 1:
            assert fam.coeffs[1] == (d - i + 1) * intersection_form(sp, lam, i - 1)


@pytest.mark.parametrize("d,e,lam", [(3, 1, (1,)), (4, 2, (2,))])
def test_family_derivative_identity(d, e, lam):
    sp = make_space(d, e, 9 + d)
    for i in range(0, d + 1):
        assert twist_family(sp, lam, i).derivative() == (d - i + 1) * twist_family(sp, lam, i - 1)


def test_family_second_derivative_identity():
    d, e, lam = 4, 2, (1, 1)
    sp = make_space(d, e, 10)
    for i in range(0, d + 1):
        lhs = twist_family(sp, lam, i).derivative().derivative()
        rhs = (d - i + 2) * (d - i + 1) * twist_family(sp, lam, i - 2)
        assert lhs == rhs


def test_family_eval_horner():
    tag = "t"
    c0 = SymBilinearForm([[1]], tag)
    c1 = SymBilinearForm([[2]], tag)
    c2 = SymBilinearForm([[3]], tag)
    fam = FormFamily((c0, c1, c2))
    t = Fraction(1, 2)
    assert fam.at(t).matrix[0][0] == 1 + 2 * t + 3 * t * t
    assert fam.at(0) == c0
    assert fam.derivative().coeffs == (c1, 2 * c2)
    assert FormFamily((c0,)) == FormFamily((c0, SymBilinearForm.zero(1, tag)))


# -- property checks -------------------------------------------------------------------


def test_property_a_passes_in_mid_range():
    d, e, lam = 4, 1, (1, 1)
    sp = make_space(d, e, 11)
    for i in range(3, d):
        rep = check_property_a(twist_family(sp, lam, i), sp.h_coords, sp.zeta_coords)
        assert rep.passed, (i, rep.checks)
        assert rep.constant == d - i + 1


def test_property_a_partial_failures():
    d, e, lam = 4, 2, (2,)
    sp = make_space(d, e, 12)
    rep2 = check_property_a(twist_family(sp, lam, 2), sp.h_coords, sp.zeta_coords)
    assert not rep2.a1 and rep2.r0p_h == 0
    assert rep2.a2 and rep2.a3 and rep2.a4 and rep2.a5
    repd = check_property_a(twist_family(sp, lam, d), sp.h_coords, sp.zeta_coords)
    assert repd.checks == {"A1": True, "A2": True, "A3": True, "A4": True, "A5": False}
    assert repd.constant == 1


def test_property_a_zero_family():
    zero = FormFamily((SymBilinearForm.zero(3, "z"),))
    h = (Fraction(1), Fraction(0), Fraction(0))
    zeta = (Fraction(0), Fraction(0), Fraction(1))
    rep = check_property_a(zero, h, zeta)
    assert not rep.a1
    assert not rep.passed
    assert rep.constant is None
    assert rep.a4  # vacuous: both pairings vanish identically


def test_property_a_report_json():
    d, e, lam = 4, 1, (1, 1)
    sp = make_space(d, e, 13)
    rep = check_property_a(twist_family(sp, lam, 3), sp.h_coords, sp.zeta_coords)
    obj = rep.to_json()
    assert obj["label"] == "A"
    assert obj["checks"]["A1"] is True
    assert obj["constant"] == "2/1"
    assert len(obj["per_t"]) == len(obj["t_samples"])
    assert obj["max_passing_radius"] == "1/10"


def test_property_b_at_top_index():
    for d, e, lam in [(3, 1, (1,)), (4, 2, (2,)), (2, 1, ())]:
        sp = make_space(d, e, 14 + d)
        rep = check_property_b(twist_family(sp, lam, d), sp.h_coords, sp.zeta_coords)
        assert rep.passed, (d, rep.checks)


def test_property_b_zero_family():
    zero = FormFamily((SymBilinearForm.zero(3, "z"),))
    h = (Fraction(1), Fraction(0), Fraction(0))
    zeta = (Fraction(0), Fraction(0), Fraction(1))
    rep = check_property_b(zero, h, zeta)
    assert not rep.b1
    assert not rep.passed


def test_property_b_reduction_to_shift_identity():
    # the zeta-zeta second derivative identity is the index shift in disguise
    d, e, lam = 4, 2, (1, 1)
    sp = make_space(d, e, 15)
    qd = intersection_form(sp, lam, d)
    qdm1 = intersection_form(sp, lam, d - 1)
    assert qdm1.value(sp.zeta_coords, sp.h_coords) == qd.quad(sp.h_coords)


def test_custom_t_samples_respected():
    d, e, lam = 3, 1, (1,)
    sp = make_space(d, e, 16)
    rep = check_property_a(
        twist_family(sp, lam, 2), sp.h_coords, sp.zeta_coords, [Fraction(1, 7)]
    )
    assert rep.t_samples == (Fraction(0), Fraction(1, 7))


# -- theorem verdicts ---------------------------------------------------------------------


def test_augmentation1_consistent():
    d, e, lam = 4, 2, (1, 1)
    sp = make_space(d, e, 17)
    verdict = verify_augmentation1(
        twist_family(sp, lam, 3), sp.h_coords, sp.zeta_coords
    )
    assert verdict.status == CONSISTENT
    assert verdict.conclusion
    assert all(verdict.hypotheses.values())


def test_augmentation1_not_applicable_for_zero_family():
    zero = FormFamily((SymBilinearForm.zero(3, "z"),))
    h = (Fraction(1), Fraction(0), Fraction(0))
    zeta = (Fraction(0), Fraction(0), Fraction(1))
    verdict = verify_augmentation1(zero, h, zeta)
    assert verdict.status == NOT_APPLICABLE
    assert not verdict.conclusion


def test_augmentation1_on_rank_drop_embedding():
    fam = rank_drop_family(3)
    h = (Fraction(1), Fraction(0), Fraction(0))
    zeta = (Fraction(0), Fraction(0), Fraction(1))
    verdict = verify_augmentation1(fam, h, zeta)
    assert verdict.status == NOT_APPLICABLE
    assert not verdict.hypotheses["property_A"]


def test_recursion_consistent():
    for d, e, lam in [(3, 1, (1,)), (4, 2, (1, 1))]:
        sp = make_space(d, e, 18 + d)
        verdict = verify_recursion(sp, lam, d - 1)
        assert verdict.status == CONSISTENT, verdict.hypotheses
        assert verdict.conclusion


def test_recursion_hypothesis_details():
    d, e, lam = 4, 2, (2,)
    sp = make_space(d, e, 19)
    verdict = verify_recursion(sp, lam, 3)
    assert verdict.hypotheses["r1_vanishes_on_w"]
    assert verdict.hypotheses["r2_hr_on_w"]
    assert verdict.details["constants"]["2"] == "3/1"
    # positive scalar times the classical power form
    scalar = derived_schur(lam, sp.omegas, d - 2)
    assert scalar.homogeneous_bidegree() == (0, 0)
    value = scalar.coefficient([], [])
    assert value.is_real() and value.re > 0
    q2_block = intersection_form(sp, lam, 2).restrict_indices(range(d * d), f"w11(d={d})")
    power = sp.h_power(d - 2)
    assert q2_block == value.re * gram(power)


def test_recursion_rejects_bad_depth():
    sp = make_space(3, 1, 20)
    with pytest.raises(ValueError):
        verify_recursion(sp, (1,), 3)
    with pytest.raises(ValueError):
        verify_recursion(sp, (1,), 1)


def test_augmentation2_consistent_for_d_at_least_4():
    d, e, lam = 4, 2, (2,)
    sp = make_space(d, e, 21)
    verdict = verify_augmentation2(sp, lam)
    assert verdict.status == CONSISTENT
    assert verdict.conclusion
    assert verdict.details["restricted_signature"] == [1, d * d - 1, 0]


def test_augmentation2_small_d_pattern():
    # for d = 2, 3 the second derivative is degenerate, so the hypotheses
    # cannot hold, but the conclusion (the signature statement) still does
    for d, e, lam in [(2, 1, ()), (3, 2, (1,))]:
        sp = make_space(d, e, 22 + d)
        verdict = verify_augmentation2(sp, lam)
        assert verdict.status == NOT_APPLICABLE
        assert verdict.conclusion
        assert verdict.hypotheses["property_B"]
        assert verdict.hypotheses["second_derivative_identity"]
        assert not verdict.hypotheses["second_derivative_hr_wrt_h"]


def test_random_h_still_consistent():
    d, e, lam = 4, 1, (1, 1)
    sp = make_space(d, e, 23, random_h=True)
    verdict = verify_recursion(sp, lam, d - 1, t_samples=[Fraction(1, 100), Fraction(-1, 100)])
    assert verdict.status == CONSISTENT
    assert verdict.conclusion


def test_verdict_status_mapping():
    from hrlab.augmentation import _verdict

    assert _verdict("x", {"a": True}, True, {}).status == CONSISTENT
    assert _verdict("x", {"a": True}, False, {}).status == "INCONSISTENT"
    assert _verdict("x", {"a": False}, True, {}).status == NOT_APPLICABLE
    v = _verdict("x", {"a": True, "b": False}, False, {"k": 1})
    assert v.status == NOT_APPLICABLE
    assert v.to_json() == {
        "name": "x",
        "hypotheses": {"a": True, "b": False},
        "conclusion": False,
        "status": NOT_APPLICABLE,
        "details": {"k": 1},
    }


# -- derivative inequality helper -------------------------------------------------------


def test_derivative_inequality_defect_matches_pointwise():
    rng = random.Random(24)
    n = 4
    from hrlab.sampling import random_symmetric_rows

    q = SymBilinearForm(random_symmetric_rows(rng, n))
    qp = SymBilinearForm(random_symmetric_rows(rng, n))
    h = tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))
    S = derivative_inequality_defect(q, qp, h)
    for _ in range(20):
        v = tuple(Fraction(rng.randint(-4, 4)) for _ in range(n))
        want = 2 * qp.value(v, h) * q.value(v, h) - qp.quad(v) * q.quad(h)
        assert S.quad(v) == want


# -- the rank drop example ---------------------------------------------------------------


def test_rank_drop_family_battery():
    fam = rank_drop_family(3)
    h = (Fraction(1), Fraction(0), Fraction(0))
    q0 = fam.at(0)
    assert signature(q0) == Signature(1, 1, 1)
    assert q0.quad(h) > 0
    for t in (Fraction(1, 10), Fraction(-1, 10)):
        assert signature(fam.at(t)) == Signature(1, 2, 0)
    deriv = fam.derivative()
    assert len(deriv.coeffs) == 1
    assert signature(deriv.at(0)) == Signature(1, 2, 0)
    assert is_hr_wrt(deriv.at(0), h)


def test_rank_drop_dimension_scaling():
    fam = rank_drop_family(5)
    assert signature(fam.at(0)) == Signature(1, 3, 1)
    assert signature(fam.at(Fraction(1, 10))) == Signature(1, 4, 0)
    with pytest.raises(ValueError):
        rank_drop_family(1)

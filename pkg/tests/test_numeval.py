"""Numerics: corrected nested sums against closed-form oracles."""

import math
import random

import pytest

from mzvkit.indexes import indices_up_to, star_expand
from mzvkit.numeval import (
    EvalConfig,
    NumericSeries,
    NumericValue,
    mzv_num,
    raw_partial_sum,
    verify_csf,
    z_num,
    z_reg_num,
    zeta_hat_num,
    zeta_reg,
)
from mzvkit.words import NcPoly, harmonic, random_word, shuffle

FAST = EvalConfig(cutoff=20000)
Z3 = 1.2020569031595943  # literature value, used only as a sanity anchor


def test_numeric_value_arithmetic():
    a = NumericValue(2.0, 0.1)
    b = NumericValue(3.0, 0.2)
    assert (a + b).value == 5.0 and (a + b).err == pytest.approx(0.3)
    assert (a - b).err == pytest.approx(0.3)
    m = a * b
    assert m.value == 6.0
    assert m.err == pytest.approx(2.0 * 0.2 + 3.0 * 0.1 + 0.02)
    assert a.scaled(-2).value == -4.0 and a.scaled(-2).err == pytest.approx(0.2)


def test_eval_config_validation():
    with pytest.raises(ValueError):
        EvalConfig(cutoff=1)
    with pytest.raises(ValueError):
        EvalConfig(tol=-1.0)


def test_single_zeta_oracles():
    v = mzv_num((2,))
    assert abs(v.value - math.pi**2 / 6) < 1e-8
    assert v.err < 1e-9
    assert abs(mzv_num((4,)).value - math.pi**4 / 90) < 1e-10
    assert abs(mzv_num((3,)).value - Z3) < 1e-10


def test_depth_two_oracles():
    assert abs(mzv_num((1, 2)).value - mzv_num((3,)).value) < 1e-8
    assert abs(mzv_num((1, 2), star=True).value - 2 * mzv_num((3,)).value) < 1e-8
    # zeta(2,2) = pi^4/120, zeta(1,1,2) = zeta(4)
    assert abs(mzv_num((2, 2)).value - math.pi**4 / 120) < 1e-10
    assert abs(mzv_num((1, 1, 2)).value - math.pi**4 / 90) < 1e-10


def test_empty_and_divergent():
    assert mzv_num(()).value == 1.0
    with pytest.raises(ValueError):
        mzv_num((2, 1))
    with pytest.raises(ValueError):
        mzv_num((1,))


def test_star_is_contraction_sum():
    # independent route: star value = sum of plain values over contractions
    for k in [(2,), (1, 2), (2, 2), (1, 1, 2), (2, 1, 2)]:
        direct = mzv_num(k, star=True, cfg=FAST)
        via = sum(
            c * mzv_num(idx, cfg=FAST).value for idx, c in star_expand(k).terms.items()
        )
        assert abs(direct.value - via) < 1e-9, k


def test_zig_zag_integral_equals_star_sum():
    # third route: the linear-extension word of the zig-zag poset evaluates
    # to the same number as the weak-inequality summation, within the
    # reported error estimates of the fast cutoff
    from mzvkit.tseries import w_star

    for k in indices_up_to(5):
        if k[-1] < 2:
            continue
        lhs = z_num(w_star(k), FAST)
        rhs = mzv_num(k, star=True, cfg=FAST)
        assert abs(lhs.value - rhs.value) < 1e-6, k
        assert abs(lhs.value - rhs.value) <= lhs.err + rhs.err + 1e-9, k


def test_monotone_cutoff_consistency():
    # |S(N) - S(2N)| must shrink at least like 2^(k_r - 1) up to slack 10
    for k in [(2,), (3,), (1, 2), (2, 2)]:
        d1 = abs(raw_partial_sum(k, N=4000) - raw_partial_sum(k, N=8000))
        d2 = abs(raw_partial_sum(k, N=8000) - raw_partial_sum(k, N=16000))
        assert d1 / d2 > 2 ** (k[-1] - 1) / 10, k


def test_corrected_beats_raw():
    exact = math.pi**2 / 6
    raw = raw_partial_sum((2,), N=FAST.cutoff)
    corrected = mzv_num((2,), cfg=FAST).value
    assert abs(raw - exact) > 1e-6  # the plain cutoff alone is far off
    assert abs(corrected - exact) < 1e-10


def test_z_num_examples():
    assert z_num(NcPoly.from_str("yx"), FAST).value == mzv_num((2,), cfg=FAST).value
    p = 2 * NcPoly.from_str("yxyx") + 4 * NcPoly.from_str("yyxx")
    assert abs(z_num(p, FAST).value - mzv_num((2,), cfg=FAST).value ** 2) < 1e-6
    assert z_num(NcPoly.one(), FAST).value == 1.0
    with pytest.raises(ValueError):
        z_num(NcPoly.from_str("yy"), FAST)


def test_product_compatibility_random():
    rng = random.Random(41)
    for _ in range(15):
        a = NcPoly.from_word(random_word(rng, 5, h0=True))
        b = NcPoly.from_word(random_word(rng, 5, h0=True))
        va = z_num(a, FAST).value
        vb = z_num(b, FAST).value
        assert abs(z_num(harmonic(a, b), FAST).value - va * vb) < 1e-6
        assert abs(z_num(shuffle(a, b), FAST).value - va * vb) < 1e-6


def test_z_reg_num_examples():
    assert abs(z_reg_num(NcPoly.from_str("y"), "sh", 0.0, FAST).value) < 1e-15
    v = z_reg_num(NcPoly.from_index((2, 1)), "ast", 0.0, FAST)
    assert abs(v.value + 2 * mzv_num((3,), cfg=FAST).value) < 1e-8
    adm = NcPoly.from_index((3,))
    assert z_reg_num(adm, "sh", 0.0, FAST).value == z_num(adm, FAST).value


def test_reg_known_value():
    # harmonic-regularised zeta(1,1) at T=0 is -zeta(2)/2... T^2/2 - zeta(2)/2
    v = zeta_reg((1, 1), "ast", FAST)
    assert abs(v.value + math.pi**2 / 12) < 1e-8


def test_zeta_hat_examples():
    s = zeta_hat_num((2,), "star_KY", 1, FAST)
    assert abs(s.coefficient(0).value - 2 * mzv_num((2,), cfg=FAST).value) < 1e-8
    for variant in ("ast", "sh", "star_ast", "star_sh", "star_KY", "KY_inv"):
        s = zeta_hat_num((), variant, 2, FAST)
        assert s.coefficient(0).value == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        zeta_hat_num((2,), "nope", 1, FAST)


def test_depth_one_star_equals_plain():
    a = zeta_hat_num((1,), "sh", 2, FAST)
    b = zeta_hat_num((1,), "star_sh", 2, FAST)
    for e in range(3):
        assert abs(a.coefficient(e).value - b.coefficient(e).value) < 1e-10


def test_contraction_identity_for_hat_series():
    # star series = contraction sum of plain series, coefficientwise
    for k in indices_up_to(4):
        star = zeta_hat_num(k, "star_sh", 2, FAST)
        acc = NumericSeries(2)
        for idx, c in star_expand(k).terms.items():
            acc = acc + zeta_hat_num(idx, "sh", 2, FAST).scaled(float(c))
        for e in range(3):
            assert abs(star.coefficient(e).value - acc.coefficient(e).value) < 1e-6, (
                k,
                e,
            )


def test_star_ky_inversion_pair():
    # KY_inv is defined so that its contraction sum gives back star_KY
    for k in [(2,), (1, 2), (1, 1)]:
        star = zeta_hat_num(k, "star_KY", 1, FAST)
        acc = NumericSeries(1)
        for idx, c in star_expand(k).terms.items():
            acc = acc + zeta_hat_num(idx, "KY_inv", 1, FAST).scaled(float(c))
        for e in range(2):
            assert abs(star.coefficient(e).value - acc.coefficient(e).value) < 1e-9


def test_verify_csf_mzsv_examples():
    rep = verify_csf("mzsv", (2,), cfg=FAST)
    assert rep.passed and rep.residuals[0] < 1e-6
    rep = verify_csf("mzsv", (1,), cfg=FAST)  # all-ones correction case
    assert rep.passed
    rep = verify_csf("mzsv", (1, 2), cfg=FAST)
    assert rep.passed


def test_verify_csf_tsmzsv_small():
    for k in [(1,), (2,), (1, 1)]:
        rep = verify_csf("tsmzsv", k, order=2, cfg=FAST)
        assert rep.passed, (k, rep.residuals)
        assert len(rep.residuals) == 3


def test_verify_csf_tsmzv_exact_small():
    for k in [(1,), (2,), (1, 1), (1, 2)]:
        rep = verify_csf("tsmzv_exact", k, order=2, cfg=FAST)
        assert rep.passed, (k, rep.residuals)


def test_verify_csf_rejects():
    with pytest.raises(ValueError):
        verify_csf("nope", (2,))
    with pytest.raises(ValueError):
        verify_csf("mzsv", ())


def test_reported_errors_are_honest():
    # the error estimate should bound the actual deviation on known values
    v = mzv_num((2,), cfg=FAST)
    assert abs(v.value - math.pi**2 / 6) <= v.err + 1e-12
    v = mzv_num((2, 2), cfg=FAST)
    assert abs(v.value - math.pi**4 / 120) <= v.err + 1e-12

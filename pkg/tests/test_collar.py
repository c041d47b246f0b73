import math

import pytest

from skinning_bounds.collar import collar_half_width, collar_profile, injectivity_floor
from skinning_bounds.constants import universal_constants
from skinning_bounds.errors import OffsetExceedsWidth, ParameterOutOfRange

K = universal_constants()
EPS0 = K.eps0


def test_half_width_at_threshold():
    assert collar_half_width(2.0 * EPS0) == pytest.approx(EPS0, abs=1e-15)


def test_half_width_at_two():
    # 50-digit reference
    assert collar_half_width(2.0) == pytest.approx(0.77193683290530472507, abs=1e-15)


@pytest.mark.parametrize("ell", [1e-3, 1e-6, 1e-9, 1e-12, 1e-300])
def test_half_width_small_length_asymptotic(ell):
    assert abs(collar_half_width(ell) - math.log(4.0 / ell)) < max(ell, 1e-15) * 10


def test_half_width_exp_identity():
    for i in range(1, 200):
        ell = 2.0 * EPS0 * i / 199
        w = collar_half_width(ell)
        assert math.exp(w) == pytest.approx(1.0 / math.tanh(ell / 4.0), rel=1e-12)


def test_half_width_strictly_decreasing():
    ells = [10 ** (-8 + 8.3 * i / 4000) for i in range(4001)]
    ws = [collar_half_width(ell) for ell in ells]
    assert all(b < a for a, b in zip(ws, ws[1:]))


def test_half_width_large_and_bad_input():
    assert collar_half_width(2000.0) == pytest.approx(2.0 * math.exp(-1000.0), rel=1e-12)
    with pytest.raises(ParameterOutOfRange):
        collar_half_width(0.0)


def test_profile_examples():
    p = collar_profile(2.0, 0.5)
    assert p.area_plus_length == pytest.approx(2.6250081832446205918, rel=1e-14)
    assert p.identity_residual < 1e-10
    q = collar_profile(2.0, 0.0)
    assert q.band_area == pytest.approx(1.7018362564786430903, rel=1e-14)
    assert q.boundary_length == pytest.approx(2.6260705709986626073, rel=1e-14)
    r = collar_profile(2.0 * EPS0, EPS0)
    assert r.band_area == pytest.approx(0.0, abs=1e-15)
    assert r.boundary_length == pytest.approx(2.0 * EPS0, rel=1e-15)


def test_profile_offset_checks():
    with pytest.raises(OffsetExceedsWidth):
        collar_profile(1.0, 5.0)
    with pytest.raises(ParameterOutOfRange):
        collar_profile(1.0, -0.1)


def test_profile_monotone_in_length():
    ells = [2.0 * EPS0 * i / 500 for i in range(1, 501)]
    for s_rule in (lambda w: 0.0, lambda w: 0.2, lambda w: 0.5 * w):
        vals = []
        for ell in ells:
            s = s_rule(collar_half_width(2.0 * EPS0))
            vals.append(math.exp(-s) * ell / math.tanh(ell / 4.0))
            # the profile agrees whenever the offset fits
            if s <= collar_half_width(ell):
                assert collar_profile(ell, s).area_plus_length == pytest.approx(vals[-1], rel=1e-15)
        assert all(b > a for a, b in zip(vals, vals[1:]))


def test_profile_identity_grid():
    worst = 0.0
    for i in range(1, 101):
        ell = 2.0 * EPS0 * i / 100
        w = collar_half_width(ell)
        for j in range(100):
            worst = max(worst, collar_profile(ell, w * j / 99).identity_residual)
    assert worst < 1e-10


def test_injectivity_floor():
    assert injectivity_floor(1.0) == pytest.approx(K.c2, abs=1e-15)
    v2 = injectivity_floor(2.0)
    assert v2 == pytest.approx(0.12764201127976828494, abs=1e-15)
    assert v2 >= K.c2 / 2.0
    assert injectivity_floor(10.0) >= K.c2 / 10.0
    with pytest.raises(ParameterOutOfRange):
        injectivity_floor(0.5)

import math

import pytest

from skinning_bounds.constants import universal_constants
from skinning_bounds.contraction import (
    OneMinus, asymptotic_rhs, contraction_constant, contraction_prefactor, ln_C_difference,
    loglog_ell_over_C, optimize_t, render_one_minus, skinning_factor, split_one_plus,
)
from skinning_bounds.errors import KappaZero, ParameterOutOfRange, SystoleOutOfRange
from skinning_bounds.oracles import gap_integral_quadrature
from skinning_bounds.surface import make_geometry, make_topology
from skinning_bounds.towerreal import TowerReal, exp_of, render

K = universal_constants()
EPS0 = K.eps0
SURFACES = [(1, 1), (0, 4), (2, 0)]


def geo(g, n, ell, eps=None):
    return make_geometry(make_topology(g, n), ell, eps)


def test_prefactor():
    assert contraction_prefactor() == pytest.approx(0.0019944522615350098, rel=1e-14)
    k = math.e * math.pi ** 2 * K.c4 / (288.0 * K.c57)
    assert contraction_prefactor() == k


@pytest.mark.parametrize("g,n,ref", [(1, 1, -283987.37645438378403),
                                     (0, 4, -232410866394.32540518),
                                     (2, 0, -54131155008699.460339)])
def test_ln_C_reference(g, n, ref):
    rep = contraction_constant(geo(g, n, 0.5))
    assert rep.ln_C.level == 0 and rep.ln_C.sign == -1
    assert float(rep.ln_C) == pytest.approx(ref, rel=1e-13)


def test_ln_C_renders_base_ten():
    rep = contraction_constant(geo(1, 1, 0.5))
    text = render(rep.C)
    p = -283987.37645438378403 / math.log(10.0)
    assert text.endswith(f"10^({p:.1f})")
    assert str(rep.norm_bound).startswith("1 - exp(-283987.37")


def test_report_invariants():
    for g, n in SURFACES + [(3, 2), (10, 0)]:
        rep = contraction_constant(geo(g, n, 0.5))
        assert rep.C.sign == 1 and rep.gap.sign == 1
        assert rep.gap <= rep.C
        assert rep.ln_a2 == math.log(math.log(math.e * K.c4)) + rep.a1 + 2.0 * (1.0 + K.c3)
        # at these magnitudes the gap equals C to machine precision
        assert rep.gap.mag == pytest.approx(rep.C.mag, rel=1e-15)


def test_norm_bound_below_one():
    for g in range(0, 8):
        for n in range(0, 8):
            if 2 * g - 2 + n <= 0 or 3 * g - 3 + n <= 0:
                continue
            rep = contraction_constant(geo(g, n, 2 * EPS0))
            assert rep.norm_bound < 1.0
            assert float(rep.norm_bound) <= 1.0


def test_split_one_plus_moderate_C():
    gap, nb = split_one_plus(TowerReal.from_real(0.25))
    assert float(gap) == pytest.approx(0.2, rel=1e-15)
    assert float(nb) == pytest.approx(0.8, rel=1e-15)
    gap, nb = split_one_plus(TowerReal.from_real(1e-10))
    assert float(gap) == pytest.approx(1e-10 / (1 + 1e-10), rel=1e-15)


def test_one_minus_ordering_and_render():
    a = OneMinus(TowerReal.from_real(1e-5))
    b = OneMinus(TowerReal.from_real(1e-3))
    assert b < a and a > b and a < 1.0 and a > 0.5
    assert render_one_minus(a) == "1 - 1/99999.99999999999 ≈ 1 - 1e-05"
    assert render_one_minus(a, approx=False) == "1 - 1/99999.99999999999"
    tiny = OneMinus(exp_of(TowerReal.from_real(-1e6)))
    assert str(tiny) == f"1 - exp(-1000000) ≈ 1 - 10^({-1e6 / math.log(10):.1f})"


@pytest.mark.parametrize("g,n", SURFACES)
@pytest.mark.parametrize("alpha", [0.5, 2.0, 10.0])
def test_ell_linearity(g, n, alpha):
    base = contraction_constant(geo(g, n, 0.1))
    other = contraction_constant(geo(g, n, alpha * 0.1))
    assert abs(ln_C_difference(other, base) - math.log(alpha)) < 1e-12
    # the collapsed doubles agree only to the resolution of |ln C|
    diff = float(other.ln_C) - float(base.ln_C)
    assert diff == pytest.approx(math.log(alpha), abs=4 * math.ulp(abs(float(base.ln_C))))


def test_ln_C_difference_across_topologies():
    a = contraction_constant(geo(1, 1, 0.5))
    b = contraction_constant(geo(0, 4, 0.5))
    expected = float(a.ln_C) - float(b.ln_C)
    assert ln_C_difference(a, b) == pytest.approx(expected, rel=1e-12)
    huge = contraction_constant(geo(50, 0, 0.5))
    assert ln_C_difference(huge, a) == -math.inf
    assert ln_C_difference(a, huge) == math.inf


def test_ell_linearity_in_finite_part():
    top = make_topology(1, 1)
    fin = lambda ell: math.log(contraction_prefactor() * ell / (top.kappa * top.abs_chi))
    assert fin(1.0) - fin(0.5) == pytest.approx(math.log(2.0), abs=1e-15)


def finite_part_by_quadrature(top, ell):
    """``ln(e c4 l/(16|chi|) * int_0^r* area defect dr)`` at ``t = 1``."""
    return math.log(math.e * K.c4 * ell / (16.0 * top.abs_chi)
                    * gap_integral_quadrature(top.kappa, 1.0))


@pytest.mark.parametrize("g,n", SURFACES)
@pytest.mark.parametrize("ell", [0.1, 0.5, 2 * EPS0])
def test_closed_form_vs_quadrature(g, n, ell):
    top = make_topology(g, n)
    closed = math.log(contraction_prefactor() * ell / (top.kappa * top.abs_chi))
    quad = finite_part_by_quadrature(top, ell)
    assert abs(quad - closed) / abs(closed) < 1e-10
    # and the assembled ln C carries exactly that finite part
    rep = contraction_constant(geo(g, n, ell))
    a2 = math.exp(rep.ln_a2)
    assert float(rep.ln_C) == pytest.approx(closed - a2, rel=1e-15)


def test_monotone_in_topology():
    ell = 0.5
    ln_cs = [contraction_constant(geo(g, 0, ell)).ln_C for g in range(2, 40)]
    assert all(b < a for a, b in zip(ln_cs, ln_cs[1:]))
    ln_cs = [contraction_constant(geo(1, n, ell)).ln_C for n in range(1, 40)]
    assert all(b < a for a, b in zip(ln_cs, ln_cs[1:]))
    big = contraction_constant(geo(30, 0, ell)).C
    assert big.level == 2 and big.recip
    assert big < contraction_constant(geo(29, 0, ell)).C


def test_t_optimality():
    grid = [1.0 + 0.01 * i for i in range(201)]
    for g, n in [(1, 1), (2, 0)]:
        g0 = geo(g, n, 0.5)
        t_best, rep = optimize_t(g0, grid)
        assert t_best == 1.0 and rep.t_used == 1.0
        ln_gaps = [float(contraction_constant(g0, t).ln_C) for t in grid]
        assert all(b < a for a, b in zip(ln_gaps, ln_gaps[1:]))
        assert contraction_constant(g0, 2.0).gap < contraction_constant(g0, 1.0).gap


def test_optimize_t_rejects_bad_grid():
    with pytest.raises(ParameterOutOfRange):
        optimize_t(geo(1, 1, 0.5), [0.5, 1.0])
    with pytest.raises(ParameterOutOfRange):
        optimize_t(geo(1, 1, 0.5), [])


def test_asymptotic_rhs_values():
    assert asymptotic_rhs(make_topology(1, 1)) == pytest.approx(8.8438461160108475443, rel=1e-14)
    assert asymptotic_rhs(make_topology(50, 0)) == pytest.approx(44027.993554086234149, rel=1e-14)
    assert math.pi * math.sinh(K.c2 / 2) == pytest.approx(K.c3 * K.c2, rel=1e-14)


@pytest.mark.parametrize("g,n,ref", [(1, 1, 12.556682626280614843), (50, 0, 43992.427868423571806),
                                     (100, 0, 178736.99784954213783), (20, 0, 6714.0439126424539791)])
def test_loglog_reference(g, n, ref):
    assert loglog_ell_over_C(geo(g, n, 0.5)) == pytest.approx(ref, rel=1e-14)


def test_loglog_independent_of_ell():
    for g, n in SURFACES + [(50, 0)]:
        vals = {loglog_ell_over_C(geo(g, n, ell)) for ell in (0.1, 1.0, 2 * EPS0)}
        assert len(vals) == 1


def test_asymptotic_ratio():
    ratios = {g: contraction_constant(geo(g, 0, 0.5)).asymptotic_ratio for g in (20, 50, 100)}
    devs = [abs(ratios[g] - 1.0) for g in (20, 50, 100)]
    assert all(d <= 0.05 for d in devs)
    assert devs[0] > devs[1] > devs[2]
    assert 0.995 <= ratios[100] <= 1.005
    lead = loglog_ell_over_C(geo(50, 0, 0.5)) / (4.0 * 98 ** 2 / EPS0)
    assert 1.0 <= lead <= 1.03


def test_asymptotic_not_monotone_from_g10():
    # recorded finding: the deviation at g=10 is smaller than at g=20
    d10 = abs(contraction_constant(geo(10, 0, 0.5)).asymptotic_ratio - 1.0)
    d20 = abs(contraction_constant(geo(20, 0, 0.5)).asymptotic_ratio - 1.0)
    assert d10 < d20


def test_kappa_zero_rejected():
    with pytest.raises(KappaZero, match="kappa=0"):
        contraction_constant(geo(0, 3, 0.5))
    with pytest.raises(KappaZero):
        loglog_ell_over_C(geo(0, 3, 0.5))


def test_t_below_one_rejected():
    with pytest.raises(ParameterOutOfRange):
        contraction_constant(geo(1, 1, 0.5), t=0.5)


def test_skinning_factor_examples():
    nb, reps, idx = skinning_factor([(1, 1, 0.5)])
    assert idx == 0 and nb == reps[0].norm_bound
    nb, reps, idx = skinning_factor([(1, 1, 0.5), (2, 0, 0.5)])
    assert idx == 1 and nb == reps[1].norm_bound and nb > reps[0].norm_bound
    nb, reps, idx = skinning_factor([(1, 1, 0.5), (1, 1, 1.0)])
    assert idx == 0


def test_skinning_factor_errors_name_component():
    with pytest.raises(SystoleOutOfRange, match="component 2"):
        skinning_factor([(1, 1, 0.5), (2, 0, 3.0)])
    with pytest.raises(KappaZero, match="component 1"):
        skinning_factor([(0, 3, 0.5)])
    with pytest.raises(ParameterOutOfRange):
        skinning_factor([])


def test_regime_holds_exhaustively_small():
    for g in range(0, 30):
        for n in range(0, 30):
            if 2 * g - 2 + n > 0 and 3 * g - 3 + n > 0:
                contraction_constant(geo(g, n, 0.5), t=10.0)

import math

import pytest

import bergmanlab as bl


@pytest.fixture(scope="module")
def grid():
    return bl.DiscGrid(levels=8, angular_base=32, radial_subdiv=8, inner_levels=8)


@pytest.fixture(scope="module")
def leb():
    return bl.weight("lebesgue")


def test_mobius_involution():
    a, z = 0.5 + 0.2j, -0.3 + 0.4j
    w = bl.mobius(a, z)
    assert abs(w) < 1.0
    assert abs(bl.mobius(a, w) - z) < 1e-12


def test_pseudo_dist():
    assert bl.pseudo_dist(0.5, -0.5) == pytest.approx(0.8)


def test_carleson_square_area():
    s = bl.carleson_square(0.5)
    assert s.area == pytest.approx(0.5 * 0.75 / (2 * math.pi))
    assert s.contains(0.75) and not s.contains(0.25)


def test_weight_tails(leb):
    assert leb.tail(0.25) == pytest.approx(0.75)
    assert leb.moment(3.0) == pytest.approx(0.25)
    with pytest.raises(ValueError):
        bl.weight("nope")


def test_grid_mass(grid, leb):
    total = bl.integrate(lambda z: 1.0, leb, grid)
    assert total == pytest.approx(1.0, abs=1e-9)


def test_ap_norm(grid, leb):
    f = bl.AnalyticFunction(poly=[0.0, 1.0])
    assert bl.ap_norm(f, 2.0, leb, grid) == pytest.approx(math.sqrt(0.5), abs=1e-4)


def test_kernel_closed_form(leb):
    k = bl.KernelEvaluator(leb)
    z, zeta = 0.5, 0.25 + 0.25j
    w = z * zeta  # conj(z) zeta with real z
    assert k(z, zeta) == pytest.approx(1.0 / (1.0 - w) ** 2, abs=1e-10)
    assert k.norm_sq(0.5) == pytest.approx(1.0 / 0.75**2)


def test_zero_set_functions():
    assert bl.k_Z([(0.5, 1)], 0.5) == pytest.approx(0.125)
    assert bl.W_Z([(0.5, 1)], 0.0) == 1.0
    assert abs(bl.psi_Z([(0.5, 1)], 0.5)) == 0.0


def test_factorize(grid, leb):
    f = bl.AnalyticFunction(zeros=[(0.3, 1), (-0.4j, 1)])
    r = bl.split_factorize(f, 1.0, 2.0, 2.0, leb, 16, 7, grid)
    assert r.max_residual < 1e-8
    assert r.chain.product_of_norms_p <= r.chain.young_combination * (1 + 1e-9)
    assert r.chain.f_norm_p <= r.chain.product_of_norms_p * (1 + 1e-9)


def test_class_report(grid, leb):
    rep = bl.class_report(leb, [2.0], 8, grid)
    assert rep.dhat.constant == pytest.approx(2.0, abs=1e-9)
    assert not rep.dhat.growing


def test_sampling_pipeline(grid, leb):
    mu = bl.DiscMeasure.from_weight(leb, grid)
    rep = bl.sampling_pipeline(mu, leb, 2.0, 0.4, 0.5,
                               [bl.AnalyticFunction(), bl.AnalyticFunction(poly=[0.0, 1.0])],
                               grid)
    lo, hi = rep.sampling_bounds
    assert lo == pytest.approx(1.0, abs=1e-2)
    assert hi == pytest.approx(1.0, abs=1e-2)

#include "bergman/kernels.hpp"

#include <random>

#include "corpus.hpp"
#include "doctest.h"

using namespace bergman;

namespace {

KernelEvaluator& leb_kernel() {
  static KernelEvaluator k(weights::catalog("lebesgue"));
  return k;
}

}  // namespace

TEST_CASE("series kernel vs closed form for the lebesgue weight") {
  // B_z(zeta) = (1 - conj(z) zeta)^{-2}
  auto& k = leb_kernel();
  CHECK(std::abs(k(cplx(0.0), cplx(0.7)) - cplx(1.0)) < 1e-12);
  CHECK(k.norm_sq(cplx(0.5)) == doctest::Approx(1.0 / (0.75 * 0.75)).epsilon(1e-10));

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ur(0.0, 0.9), ut(0.0, kTwoPi);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    cplx z = std::polar(ur(rng), ut(rng));
    cplx zeta = std::polar(ur(rng), ut(rng));
    cplx w = std::conj(z) * zeta;
    cplx exact = 1.0 / ((1.0 - w) * (1.0 - w));
    worst = std::max(worst, std::abs(k(z, zeta) - exact));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("kernel hermitian symmetry and recorded tail bound") {
  Weight st = weights::catalog("standard:1");
  KernelEvaluator k(st, 2048);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ur(0.0, 0.95), ut(0.0, kTwoPi);
  for (int i = 0; i < 200; ++i) {
    cplx z = std::polar(ur(rng), ut(rng)), zeta = std::polar(ur(rng), ut(rng));
    cplx a = k(z, zeta), b = k(zeta, z);
    CHECK(std::abs(a - std::conj(b)) < 1e-12 * std::max(1.0, std::abs(a)));
  }
  auto detail = k.eval_detail(cplx(0.5), cplx(0.6));
  CHECK(detail.tail_bound <= 1e-10 * std::max(1.0, std::abs(detail.value)) * 1.01);
  CHECK(detail.terms > 4);
}

TEST_CASE("diagonal guard refuses near-boundary products") {
  KernelEvaluator k(weights::catalog("lebesgue"), 512, 1e-10, 1e-2);
  CHECK_THROWS_AS(k(cplx(0.999), cplx(0.9995)), numeric_guard_error);
}

TEST_CASE("moments table positive and nonincreasing") {
  for (const char* name : {"lebesgue", "standard:0.5", "exp-decay"}) {
    KernelEvaluator k(weights::catalog(name), 256);
    double prev = k.moment_odd(0);
    CHECK(prev > 0.0);
    for (int n = 1; n <= 256; ++n) {
      CHECK(k.moment_odd(n) > 0.0);
      CHECK(k.moment_odd(n) <= prev * (1.0 + 1e-12));
      prev = k.moment_odd(n);
    }
  }
}

TEST_CASE("reproducing identity on polynomials") {
  const DiscGrid& g = corpus::norm_grid();
  for (const char* name : {"lebesgue", "standard:1"}) {
    Weight w = weights::catalog(name);
    KernelEvaluator k(w);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ur(0.0, 0.8), ut(0.0, kTwoPi);
    std::vector<cplx> coeffs{cplx(0.4, 0.2), cplx(1.0), cplx(0.0, -0.5),
                             cplx(0.3),      cplx(0.2), cplx(-0.1, 0.1),
                             cplx(0.05)};  // degree 6
    AnalyticFunction f = AnalyticFunction::from_poly(coeffs);
    for (int i = 0; i < 3; ++i) {
      cplx z = std::polar(ur(rng), ut(rng));
      cplx repr = integrate_c(
          [&](cplx zeta) { return f(zeta) * std::conj(k(z, zeta)); }, w, WholeDisc{}, g);
      CHECK(std::abs(repr - f(z)) < 1e-3 * std::max(1.0, std::abs(f(z))));
    }
  }
}

TEST_CASE("kernel norm by quadrature matches the diagonal value") {
  const DiscGrid& g = corpus::norm_grid();
  Weight w = weights::catalog("standard:0.5");
  KernelEvaluator k(w);
  for (double r : {0.0, 0.4, 0.8}) {
    cplx z(r, 0.0);
    double quad = integrate([&](cplx zeta) { return std::norm(k(z, zeta)); }, w, WholeDisc{}, g);
    CHECK(quad == doctest::Approx(k.norm_sq(z)).epsilon(0.01));
  }
}

TEST_CASE("normalized kernel integrates to one") {
  const DiscGrid& g = corpus::norm_grid();
  Weight leb = weights::catalog("lebesgue");
  auto& k = leb_kernel();
  CHECK(normalized_kernel(k, cplx(0.0), cplx(0.3)) == doctest::Approx(1.0).epsilon(1e-9));
  for (double r : {0.0, 0.5}) {
    cplx z(r, 0.0);
    double total =
        integrate([&](cplx zeta) { return normalized_kernel(k, z, zeta); }, leb, WholeDisc{}, g);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("comparison ratio stays in a factor-10 band for lebesgue") {
  auto& k = leb_kernel();
  // closed form: (1-|z|^2)^{-2} (1-|z|)^2 = (1+|z|)^{-2} in [1/4, 1]
  for (double r = 0.0; r <= 0.951; r += 0.05) {
    double c = k.comparison_ratio(cplx(r));
    CHECK(c <= 1.0 + 1e-9);
    CHECK(c >= 0.1);
  }
}

TEST_CASE("apply_R: probability kernel") {
  const DiscGrid& g = corpus::norm_grid();
  auto one = [](cplx) { return 1.0; };
  CHECK(apply_R(one, cplx(0.0), g) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(apply_R(one, cplx(0.5), g) == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(apply_R([](cplx w) { return std::norm(w); }, cplx(0.0), g) ==
        doctest::Approx(0.5).epsilon(1e-4));
  // positivity
  CHECK(apply_R([](cplx w) { return std::abs(w.real()); }, cplx(0.3, 0.2), g) >= 0.0);
}

TEST_CASE("apply_Pplus values") {
  const DiscGrid& g = corpus::norm_grid();
  auto one = [](cplx) { return 1.0; };
  CHECK(apply_Pplus(0.0, one, cplx(0.0), g) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(apply_Pplus(2.0, one, cplx(0.0), g) == doctest::Approx(1.0 / 3.0).epsilon(3e-4));
  CHECK(apply_Pplus(1.0, [](cplx w) { return std::abs(w); }, cplx(0.4, -0.2), g) >= 0.0);
  CHECK_THROWS_AS(apply_Pplus(-1.0, one, cplx(0.0), g), parameter_error);
}

TEST_CASE("step radial ratio") {
  const DiscGrid& g = corpus::coarse_grid();
  Weight leb = weights::catalog("lebesgue");
  AnalyticFunction one;
  double r = step_radial_ratio(leb, one, 2.0, 2.0000001, g);
  CHECK(r == doctest::Approx(1.0).epsilon(5e-2));

  AnalyticFunction id = AnalyticFunction::from_poly({cplx(0.0), cplx(1.0)});
  double v1 = step_radial_ratio(leb, id, 2.0, 4.0, g);
  GridSpec finer;
  finer.levels = 7;
  finer.angular_base = 32;
  finer.radial_subdiv = 8;
  finer.inner_levels = 12;
  double v2 = step_radial_ratio(leb, id, 2.0, 4.0, make_grid(finer));
  CHECK(std::isfinite(v1));
  CHECK(v1 == doctest::Approx(v2).epsilon(0.10));

  CHECK_THROWS_AS(step_radial_ratio(leb, id, 2.0, 1.5, g), parameter_error);
}

TEST_CASE("pointwise estimate ratio") {
  const DiscGrid& g = corpus::norm_grid();
  Weight leb = weights::catalog("lebesgue");
  auto& k = leb_kernel();
  AnalyticFunction one;
  for (cplx z : {cplx(0.0), cplx(0.4, 0.3), cplx(-0.6, 0.0)})
    CHECK(pointwise_estimate_ratio(k, one, 2.0, z, g) == doctest::Approx(1.0).epsilon(1e-3));

  AnalyticFunction id = AnalyticFunction::from_poly({cplx(0.0), cplx(1.0)});
  CHECK(pointwise_estimate_ratio(k, id, 2.0, cplx(0.0), g) == 0.0);
  // q >= 1: provable with C = 1
  CHECK(pointwise_estimate_ratio(k, id, 2.0, cplx(0.5), g) <= 1.0 + 1e-3);
}

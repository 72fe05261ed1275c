#include "bergman/factorization.hpp"

#include <random>

#include "corpus.hpp"
#include "doctest.h"

using namespace bergman;

TEST_CASE("horowitz g closed values") {
  AnalyticFunction zf = AnalyticFunction{}.with_exp({cplx(0.2), cplx(0.5)});
  for (cplx z : {cplx(0.0), cplx(0.3, -0.2)})
    CHECK(horowitz_g(zf, 1.5, 3.0, z) ==
          doctest::Approx(std::pow(zf.abs_at(z), 1.5)).epsilon(1e-12));

  // single factor arithmetic at z = 0 with |phi_{0.5}(0)| = 0.5
  AnalyticFunction f = AnalyticFunction::from_zeros({{cplx(0.5), 1}});
  CHECK(horowitz_g(f, 1.0, 2.0, cplx(0.0)) == doctest::Approx(0.625).epsilon(1e-12));

  // g >= |f|^p at grid nodes
  const DiscGrid& g = corpus::coarse_grid();
  for (std::size_t i = 0; i < g.size(); i += 17) {
    cplx z = g.position(i);
    CHECK(horowitz_g(f, 1.0, 2.0, z) >= std::pow(f.abs_at(z), 1.0) - 1e-12);
  }
}

TEST_CASE("g dominance") {
  const DiscGrid& g = corpus::norm_grid();
  Weight leb = weights::catalog("lebesgue");

  AnalyticFunction zf = AnalyticFunction{}.with_exp({cplx(0.0), cplx(0.4)});
  GDominance rep0 = g_dominance_check(zf, 1.0, 2.0, leb, g);
  CHECK(rep0.max_g_over_hp == doctest::Approx(1.0).epsilon(1e-12));

  AnalyticFunction f = AnalyticFunction::from_zeros({{cplx(0.5), 1}, {cplx(0.0, -0.3), 1}});
  GDominance rep = g_dominance_check(f, 1.0, 2.0, leb, g);
  CHECK(rep.max_g_over_hp <= 1.0 + 1e-6);
  CHECK(std::isfinite(rep.g_mass_ratio));

  // corpus stability of ||g|| / ||f||^p
  double lo = 1e300, hi = 0.0;
  for (const auto& fc : corpus::factorization_corpus()) {
    GDominance r = g_dominance_check(fc, 1.0, 2.0, leb, g);
    CHECK(r.max_g_over_hp <= 1.0 + 1e-6);
    lo = std::min(lo, r.g_mass_ratio);
    hi = std::max(hi, r.g_mass_ratio);
  }
  CHECK(hi / lo < 3.0);
}

TEST_CASE("zero-free factorization is deterministic") {
  const DiscGrid& g = corpus::coarse_grid();
  Weight leb = weights::catalog("lebesgue");
  AnalyticFunction f = AnalyticFunction{}.with_exp({cplx(0.1), cplx(0.5)});
  FactorizationResult r1 = split_factorize(f, 1.0, 2.0, 2.0, leb, 16, 42, g);
  FactorizationResult r2 = split_factorize(f, 1.0, 2.0, 2.0, leb, 16, 43, g);
  CHECK(r1.max_residual <= 1e-12);
  CHECK(r1.trials_used == 1);
  CHECK(r1.chain.young_combination == doctest::Approx(r2.chain.young_combination).epsilon(1e-15));
  // equal split: f1 = f2 = f^{1/2}
  CHECK(r1.norm_f1 == doctest::Approx(r1.norm_f2).epsilon(1e-12));
  CHECK(r1.chain.measured_c ==
        doctest::Approx(r1.chain.young_combination / r1.chain.f_norm_p).epsilon(1e-12));
}

TEST_CASE("random splits reconstruct f and obey the chain") {
  const DiscGrid& g = corpus::coarse_grid();
  Weight leb = weights::catalog("lebesgue");
  for (const auto& f : corpus::factorization_corpus()) {
    FactorizationResult r = split_factorize(f, 1.0, 2.0, 2.0, leb, 32, 2024, g);
    CHECK(r.max_residual <= 1e-8);
    // Young end
    CHECK(r.chain.product_of_norms_p <= r.chain.young_combination * (1.0 + 1e-9));
    // Hoelder end
    CHECK(r.chain.f_norm_p <= r.chain.product_of_norms_p * (1.0 + 1e-9));
    CHECK(r.chain.measured_c >= 1.0 - 1e-9);

    ChainQuantities again = chain_check(f, r.f1, r.f2, 1.0, 2.0, 2.0, leb, g);
    CHECK(again.young_combination ==
          doctest::Approx(r.chain.young_combination).epsilon(1e-12));
  }
}

TEST_CASE("fractional exponents p < 1") {
  const DiscGrid& g = corpus::coarse_grid();
  Weight leb = weights::catalog("lebesgue");
  AnalyticFunction f = AnalyticFunction::from_zeros({{cplx(0.3), 1}, {cplx(-0.4, 0.1), 1}});
  double p = 2.0 / 3.0, p1 = 1.0, p2 = 2.0;
  FactorizationResult r = split_factorize(f, p, p1, p2, leb, 24, 7, g);
  CHECK(r.max_residual <= 1e-8);
  CHECK(r.chain.product_of_norms_p <= r.chain.young_combination * (1.0 + 1e-9));
  CHECK(r.chain.f_norm_p <= r.chain.product_of_norms_p * (1.0 + 1e-9));
}

TEST_CASE("seeded reproducibility") {
  const DiscGrid& g = corpus::coarse_grid();
  Weight leb = weights::catalog("lebesgue");
  AnalyticFunction f = AnalyticFunction::from_zeros(
      {{cplx(0.3), 1}, {cplx(0.0, -0.4), 1}, {cplx(-0.5, 0.1), 1}});
  FactorizationResult a = split_factorize(f, 1.0, 2.0, 2.0, leb, 64, 99, g);
  FactorizationResult b = split_factorize(f, 1.0, 2.0, 2.0, leb, 64, 99, g);
  CHECK(a.chain.young_combination == b.chain.young_combination);
  CHECK(a.norm_f1 == b.norm_f1);
  CHECK(a.norm_f2 == b.norm_f2);
  FactorizationResult c = split_factorize(f, 1.0, 2.0, 2.0, leb, 64, 100, g);
  CHECK(std::isfinite(c.chain.young_combination));
}

TEST_CASE("parameter validation") {
  const DiscGrid& g = corpus::coarse_grid();
  Weight leb = weights::catalog("lebesgue");
  AnalyticFunction f = AnalyticFunction::from_zeros({{cplx(0.3), 1}});
  CHECK_THROWS_AS(split_factorize(f, 1.0, 2.0, 3.0, leb, 8, 1, g), parameter_error);

  // mismatched pair rejected by chain_check
  AnalyticFunction f1 = AnalyticFunction::from_zeros({{cplx(0.3), 1}});
  AnalyticFunction f2 = AnalyticFunction::from_zeros({{cplx(0.6), 1}});
  CHECK_THROWS_AS(chain_check(f, f1, f2, 1.0, 2.0, 2.0, leb, g), precondition_error);

  // in-disc polynomial zero not in the Blaschke list
  AnalyticFunction bad = AnalyticFunction::from_poly({cplx(-0.3), cplx(1.0)});
  CHECK_THROWS_AS(split_factorize(bad, 1.0, 2.0, 2.0, leb, 8, 1, g), precondition_error);
}

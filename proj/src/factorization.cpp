#include "bergman/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bergman/geometry.hpp"

namespace bergman {

namespace {

void check_exponents(double p, double p1, double p2) {
  if (!(p > 0.0 && p1 > 0.0 && p2 > 0.0))
    throw parameter_error("factorization: exponents must be positive");
  if (std::abs(1.0 / p - 1.0 / p1 - 1.0 / p2) > 1e-12)
    throw parameter_error("factorization: 1/p = 1/p1 + 1/p2 is violated");
}

// Zeros carried by the Blaschke list; errors out when the polynomial factor
// hides further zeros in the disc (the zero-free part u would be wrong).
ZeroSequence carried_zeros(const AnalyticFunction& f) {
  if (f.poly_degree() > 0 && f.poly_power == 1.0) {
    for (cplx r : poly_roots(f.poly))
      if (std::norm(r) < 1.0)
        throw precondition_error(
            "factorization: in-disc polynomial zero not carried by the Blaschke list");
  }
  return f.blaschke;
}

ZeroSequence flat_zeros(const ZeroSequence& zs) {
  // one entry per multiplicity unit
  ZeroSequence flat;
  for (const auto& e : zs)
    for (int m = 0; m < e.mult; ++m) flat.push_back({e.a, 1});
  return flat;
}

std::function<double(cplx)> make_g(const AnalyticFunction& f, double p, double q) {
  ZeroSequence zeros = carried_zeros(f);
  AnalyticFunction rem = f.without_blaschke(zeros);
  double t = p / q;
  return [rem, zeros, t, p, q](cplx z) {
    double v = std::pow(std::abs(rem(z)), p);
    for (const auto& e : zeros) {
      double x = std::abs(mobius(e.a, z));
      double factor = 1.0 - t + t * std::pow(x, q);
      v *= std::pow(factor, e.mult);
    }
    return v;
  };
}

}  // namespace

double horowitz_g(const AnalyticFunction& f, double p, double q, cplx z) {
  if (!(p > 0.0 && q > p)) throw parameter_error("horowitz_g: need 0 < p < q");
  return make_g(f, p, q)(z);
}

GDominance g_dominance_check(const AnalyticFunction& f, double p, double q, const Weight& w,
                             const DiscGrid& grid) {
  if (!(p > 0.0 && q > p)) throw parameter_error("g_dominance_check: need 0 < p < q");
  ZeroSequence zeros = carried_zeros(f);
  double t = p / q;

  GDominance rep;
  int excluded = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    cplx z = grid.position(i);
    bool near = false;
    for (const auto& e : zeros)
      if (pseudo_dist(e.a, z) < 1e-6) near = true;
    if (near) {
      ++excluded;
      continue;
    }
    // g / h^p through the cancelled forms: the |f_rem|^p factors drop out
    double ratio = 1.0;
    for (const auto& e : zeros) {
      double x = std::abs(mobius(e.a, z));
      double factor = (1.0 - t + t * std::pow(x, q)) * std::exp(p * 0.5 * (1.0 - x * x));
      ratio *= std::pow(factor, e.mult);
    }
    worst = std::max(worst, ratio);
  }
  rep.max_g_over_hp = worst;
  rep.excluded_nodes = excluded;

  double g_mass = integrate(make_g(f, p, q), w, WholeDisc{}, grid);
  double fn = std::pow(ap_norm(f, p, w, grid), p);
  rep.g_mass_ratio = g_mass / fn;
  return rep;
}

ChainQuantities chain_check(const AnalyticFunction& f, const AnalyticFunction& f1,
                            const AnalyticFunction& f2, double p, double p1, double p2,
                            const Weight& w, const DiscGrid& g) {
  check_exponents(p, p1, p2);
  double residual = 0.0;
  for (std::size_t i = 0; i < g.size(); i += 7) {  // sampled residual check
    cplx z = g.position(i);
    residual = std::max(residual, std::abs(f1(z) * f2(z) - f(z)));
  }
  if (residual > 1e-8)
    throw precondition_error("chain_check: f1 f2 differs from f on the grid (residual " +
                             std::to_string(residual) + ")");
  ChainQuantities c;
  double n1 = ap_norm(f1, p1, w, g);
  double n2 = ap_norm(f2, p2, w, g);
  double nf = ap_norm(f, p, w, g);
  c.product_of_norms_p = std::pow(n1, p) * std::pow(n2, p);
  c.young_combination = (p / p1) * std::pow(n1, p1) + (p / p2) * std::pow(n2, p2);
  c.f_norm_p = std::pow(nf, p);
  c.measured_c = c.young_combination / c.f_norm_p;
  return c;
}

FactorizationResult split_factorize(const AnalyticFunction& f, double p, double p1, double p2,
                                    const Weight& w, int trials, std::uint64_t seed,
                                    const DiscGrid& g) {
  check_exponents(p, p1, p2);
  if (trials < 1) throw parameter_error("split_factorize: trials must be >= 1");

  ZeroSequence flat = flat_zeros(carried_zeros(f));
  AnalyticFunction u = f.without_blaschke(f.blaschke);
  AnalyticFunction u1 = u.power(p / p1);
  AnalyticFunction u2 = u.power(p / p2);

  const double take_prob = p / p1;
  const bool deterministic = flat.empty();
  int n_trials = deterministic ? 1 : trials;

  struct Trial {
    double young = 0.0;
    double n1 = 0.0, n2 = 0.0;
    std::vector<bool> to_first;
  };
  std::vector<Trial> results(n_trials);

  parallel_chunks(static_cast<std::size_t>(n_trials), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) {
      // independent deterministic stream per trial
      std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (t + 1)));
      std::bernoulli_distribution coin(take_prob);
      Trial& tr = results[t];
      tr.to_first.resize(flat.size());
      AnalyticFunction c1 = u1, c2 = u2;
      for (std::size_t i = 0; i < flat.size(); ++i) {
        bool first = deterministic ? false : coin(rng);
        tr.to_first[i] = first;
        (first ? c1 : c2).blaschke.push_back(flat[i]);
      }
      tr.n1 = ap_norm(c1, p1, w, g);
      tr.n2 = ap_norm(c2, p2, w, g);
      tr.young = (p / p1) * std::pow(tr.n1, p1) + (p / p2) * std::pow(tr.n2, p2);
    }
  }, 1);

  std::size_t best = 0;
  for (std::size_t t = 1; t < results.size(); ++t)
    if (results[t].young < results[best].young) best = t;

  FactorizationResult out;
  out.f1 = u1;
  out.f2 = u2;
  for (std::size_t i = 0; i < flat.size(); ++i)
    (results[best].to_first[i] ? out.f1 : out.f2).blaschke.push_back(flat[i]);
  out.norm_f1 = results[best].n1;
  out.norm_f2 = results[best].n2;
  out.norm_f = ap_norm(f, p, w, g);
  out.trials_used = n_trials;
  out.seed = seed;

  double residual = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    cplx z = g.position(i);
    residual = std::max(residual, std::abs(out.f1(z) * out.f2(z) - f(z)));
  }
  out.max_residual = residual;

  out.chain.product_of_norms_p = std::pow(out.norm_f1, p) * std::pow(out.norm_f2, p);
  out.chain.young_combination = results[best].young;
  out.chain.f_norm_p = std::pow(out.norm_f, p);
  out.chain.measured_c = out.chain.young_combination / out.chain.f_norm_p;

  // both analytic ends of the chain must hold on every trial, not only the
  // best one: Young on the computed norms, and the quadrature-level Hoelder
  // inequality ||f||_p <= ||f1||_{p1} ||f2||_{p2}
  for (const auto& tr : results) {
    double prod = std::pow(tr.n1, p) * std::pow(tr.n2, p);
    if (prod > tr.young * (1.0 + 1e-9))
      throw numeric_guard_error("split_factorize: Young end of the chain violated");
    if (out.chain.f_norm_p > prod * (1.0 + 1e-9))
      throw numeric_guard_error("split_factorize: Hoelder end of the chain violated");
  }
  return out;
}

}  // namespace bergman

#pragma once

#include "bergman/analytic.hpp"
#include "bergman/zero_sets.hpp"

namespace bergman {

// g(z) = |f(z)|^p prod_k (1 - p/q + (p/q)|phi_{z_k}(z)|^q) / |phi_{z_k}(z)|^p
// over the in-disc zeros of f, evaluated through the cancelled form
// |f_rem|^p prod_k (...)^{m_k} which is finite at the zeros.
double horowitz_g(const AnalyticFunction& f, double p, double q, cplx z);

struct GDominance {
  double max_g_over_hp = 0.0;  // expected <= 1 + tolerance
  double g_mass_ratio = 0.0;   // ||g||_{L^1_w} / ||f||_{A^p_w}^p
  int excluded_nodes = 0;      // nodes within 1e-6 pseudo-distance of a zero
};

GDominance g_dominance_check(const AnalyticFunction& f, double p, double q, const Weight& w,
                             const DiscGrid& g);

struct ChainQuantities {
  double product_of_norms_p = 0.0;   // ||f1||_{p1}^p ||f2||_{p2}^p
  double young_combination = 0.0;    // (p/p1)||f1||^{p1} + (p/p2)||f2||^{p2}
  double f_norm_p = 0.0;             // ||f||_p^p
  double measured_c = 0.0;           // young_combination / f_norm_p
};

struct FactorizationResult {
  AnalyticFunction f1, f2;
  double norm_f1 = 0.0, norm_f2 = 0.0, norm_f = 0.0;
  ChainQuantities chain;
  double max_residual = 0.0;  // max node |f1 f2 - f|
  int trials_used = 0;
  std::uint64_t seed = 0;
};

// Horowitz-style random splitter: each zero of f goes to f1 with probability
// p/p1 (independently per multiplicity unit), the zero-free part u is split
// as u^{p/p1} u^{p/p2}. Returns the trial minimizing the Young combination.
// Requires 1/p = 1/p1 + 1/p2 and that all in-disc zeros of f are carried by
// its Blaschke list (the u-representation is unavailable otherwise). For
// zero-free f the construction is deterministic and trials are ignored.
FactorizationResult split_factorize(const AnalyticFunction& f, double p, double p1, double p2,
                                    const Weight& w, int trials, std::uint64_t seed,
                                    const DiscGrid& g);

// Recomputes the chain for a given pair, checking f1 f2 = f on the grid first.
ChainQuantities chain_check(const AnalyticFunction& f, const AnalyticFunction& f1,
                            const AnalyticFunction& f2, double p, double p1, double p2,
                            const Weight& w, const DiscGrid& g);

}  // namespace bergman

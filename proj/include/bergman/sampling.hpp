#pragma once

#include <optional>

#include "bergman/dominating.hpp"

namespace bergman {

// Finite positive measure: point atoms plus a density sampled on a grid
// (stored as per-node masses). A measure built from a weight shares the
// weight's cell masses, so measure-vs-weight ratios are exactly 1 for
// mu = w dA at any digitization.
struct DiscMeasure {
  struct Atom {
    cplx pos;
    double mass = 0.0;
  };
  std::vector<Atom> atoms;
  const DiscGrid* grid = nullptr;
  std::vector<double> node_mass;

  static DiscMeasure from_weight(const Weight& w, const DiscGrid& g);
  // restriction of w dA to a clipping region (cells cut exactly)
  static DiscMeasure from_weight_on_region(const Weight& w, const Region& r, const DiscGrid& g);
  static DiscMeasure from_density(const std::function<double(cplx)>& density, const DiscGrid& g);
  static DiscMeasure from_atoms(std::vector<Atom> atoms);

  double total() const;
  double on_region(const Region& r) const;  // node membership + atom membership
  DiscMeasure scaled(double c) const;

  // integral of a scalar field against the measure
  double integral(const std::function<double(cplx)>& f) const;
};

DiscMeasure measure_from_csv(const std::string& atoms_csv, const DiscGrid* g = nullptr,
                             const std::string& density_csv = "");

struct CarlesonReport {
  double carleson_norm = 0.0;
  CarlesonSquare argmax_square;
  std::vector<double> k_r_field;  // optional, empty unless requested
  int k_r_indeterminate = 0;
  std::optional<std::pair<double, double>> sampling_bounds;  // (inf, sup) over the family
  double sampling_constant = 0.0;  // max(upper, 1/lower)
  double empirical_delta = 0.0;    // square_lower_bound of the pipeline's G
  double domination_min = 0.0;     // min domination ratio of G over the family
};

// sup over dyadic squares containing z (plus the root square) of mu(S)/w(S).
double maximal_fn(const DiscMeasure& mu, const Weight& w, cplx z, int depth,
                  int angular_base = 64);

// sup over the full dyadic family; lower bound of the true Carleson norm.
CarlesonReport carleson_norm(const DiscMeasure& mu, const Weight& w, int depth,
                             int angular_base = 64);

// k_r(z) = mu(Delta(z,r)) / w(Delta(z,r)) per node; with star = true the
// denominator is w(S(z)) instead (the variant for weights vanishing on sets
// of positive measure). Indeterminate nodes carry NaN.
std::vector<double> k_r_field(const DiscMeasure& mu, const Weight& w, double r, const DiscGrid& g,
                              bool star = false, int* n_indeterminate = nullptr);

struct SamplingOptions {
  bool star_variant = false;       // k*_r
  bool pseudo_disc_checks = false; // C_infty branch: pseudo-disc domination checks
  int depth = 8;
  int angular_base = 64;
};

// Sampling pipeline: build G = { k_r > eps ||M_w(mu)|| }, measure its
// square lower bound and per-family domination, then the family's sampling
// bounds inf/sup of mu-integral over norm^p.
CarlesonReport sampling_pipeline(const DiscMeasure& mu, const Weight& w, double p, double r,
                                 double eps, const std::vector<AnalyticFunction>& family,
                                 const DiscGrid& g, const SamplingOptions& opt = {});

// LHS(r) / (r^p ||f||^p) for the difference estimate
//   int ( int_{Delta(zeta, r)} |f(z)-f(zeta)|^p dnu(z) ) dmu(zeta)
//       / w(Delta(zeta, r)),
// the form the sampling-sufficiency argument consumes; its normalized value
// is stable across r, which is the testable signature. square_variant = true
// restricts the inner region to S(zeta) (intersected with Delta(zeta, r),
// where the pointwise difference bound holds) and normalizes by w(S(zeta)).
double difference_estimate(const DiscMeasure& mu, const DiscMeasure& nu, const Weight& w,
                           const AnalyticFunction& f, double p, double r, double big_r,
                           const DiscGrid& g, bool square_variant = false);

struct WeakLimitReport {
  std::vector<double> discrepancy;          // |int |f|^p dmu_n - int |f|^p dmu| per n
  bool eventually_decreasing = false;
  std::vector<double> embedding_constants;  // per-measure sup over family of ratio
  double limit_embedding_constant = 0.0;
  double sup_maximal_norm = 0.0;
};

// Finite demonstration of weak-limit behavior. The candidate limit is the
// cell-wise average over the tail half of the sequence unless an explicit
// reference limit is supplied (calibrated sequences know their limit).
WeakLimitReport weak_limit_demo(const std::vector<DiscMeasure>& mu_seq, const Weight& w, double p,
                                const AnalyticFunction& f, const DiscGrid& g,
                                const std::optional<DiscMeasure>& reference = std::nullopt,
                                const std::vector<AnalyticFunction>& family = {});

}  // namespace bergman

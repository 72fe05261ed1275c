#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>

#include "bergman/common.hpp"
#include "bergman/geometry.hpp"

namespace bergman {

class DiscGrid;

// A weight on the disc: either a radial profile of s = |z| on [0,1) or a
// general density of z. Radial weights carry tail integrals
//
//   tail(r)      = \int_r^1 w(s) ds            (the paper's \hat{w})
//   mass_tail(r) = \int_r^1 w(s) s ds
//   moment(x)    = \int_0^1 s^x w(s) ds         (the paper's w_x)
//
// computed from closed forms when the catalog provides them and otherwise by
// composite Gauss-Legendre panels clustered geometrically toward s = 1, so
// integrable boundary singularities like (1-s)^a with a in (-1,0) are handled
// to near machine precision. log_tail(r) stays usable where tail(r)
// underflows (needed for doubling diagnostics of very fast decaying weights).
class Weight {
 public:
  struct RadialClosedForms {
    std::optional<std::function<double(double)>> tail;
    std::optional<std::function<double(double)>> mass_tail;
    std::optional<std::function<double(double)>> log_tail;
    std::optional<std::function<double(double)>> moment;
  };

  static Weight radial(std::string name, std::function<double(double)> profile,
                       RadialClosedForms cf = {});
  static Weight general(std::string name, std::function<double(cplx)> density);

  bool is_radial() const;
  const std::string& name() const;

  double density(cplx z) const;
  double profile(double s) const;  // radial only

  double tail(double r) const;       // radial only
  double mass_tail(double r) const;  // radial only
  double log_tail(double r) const;   // radial only
  double moment(double x) const;     // radial only, x > -1

  // \int_S w dA over a Carleson square; exact 1-D reduction for radial
  // weights, grid quadrature otherwise (grid required in that case).
  double on_square(const CarlesonSquare& s, const DiscGrid* grid = nullptr) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Composite Gauss-Legendre integration of f over [a,b] on the weight module's
// geometric panel layout (panels shrink dyadically toward 1).
double radial_panel_integral(const std::function<double(double)>& f, double a, double b);

namespace weights {

// Built-in catalog: "lebesgue", "standard:<alpha>" = (1-s^2)^alpha,
// "log-power:<beta>" = (1-s)^{-1} log(e/(1-s))^{-beta},
// "exp-decay" = exp(-1/(1-s)), "vanishing-annuli" (unit density on every
// second dyadic band, zero on the others).
Weight catalog(const std::string& name);

// (1-s)^alpha with closed-form tail; used by tests and perturbation studies.
Weight power(double alpha);

// Piecewise-linear radial weight through the given (r, w) samples.
Weight from_table(std::vector<std::pair<double, double>> samples, std::string name = "user-table");
Weight from_table_csv(const std::string& path);

}  // namespace weights

struct TrendSeries {
  std::vector<int> levels;
  std::vector<double> values;      // per-level estimate (exp-saturated at 1e300)
  std::vector<double> log_values;  // authoritative for growth decisions
  double constant = 0.0;           // max over levels
  bool growing = false;            // factor >= 1.5 over the last three levels
  bool applicable = true;          // false when a negative-power integrand hit a zero of w
};

// Numerical membership diagnostics for the weight classes. Suprema run over
// the dyadic square family {S(r_k e^{2 pi i j / n_k})}, r_k = 1 - 2^{-k},
// n_k = angular_base 2^k, k <= depth. They are lower bounds of the true
// suprema; class membership is reported as (constant, trend), never as a hard
// boolean. Negative-power integrands (B_q, C_q) are truncated radially at
// 1 - 2^{-(k+6)} per level, so a divergent integral shows up as a growing
// trend instead of an infinity.
struct WeightClassReport {
  TrendSeries dhat;  // ratios tail(r_k)/tail(r_{k+1}); the D-hat doubling diagnostic
  std::optional<std::pair<double, double>> dcheck_witness;  // (K, C) with C > 1 if found
  std::map<double, TrendSeries> bq;                         // q -> B_q estimates
  std::map<double, double> cq;                              // q -> C_q estimate at r = cq_radius
  double cq_radius = 0.5;
  double dhatD_constant = 0.0;  // sup of w(S(a)) / w(S((1+|a|)/2 e^{i arg a}))
  struct {
    double beta = 0.0, c_beta = 0.0, gamma = 0.0, c_gamma = 0.0;
  } tail_envelope;  // fitted power-envelope witnesses of the tail
};

WeightClassReport class_report(const Weight& w, const std::vector<double>& qs, int depth,
                               const DiscGrid& grid, int angular_base = 64);

// Per-square B_q value (the quantity whose supremum defines B_q(w)), with the
// level's truncation radius. Exposed for the Kerman-Torchinsky and nesting
// property tests.
double bq_on_square(const Weight& w, double q, const CarlesonSquare& s, double r_cut,
                    const DiscGrid* grid = nullptr);

// W_{q,w}(z) = (w(z)^{1/q} (1-|z|^2)^2)^{-q'}; satisfies
// W_{q,w}(z) (1-|z|^2)^{2q'} = w(z)^{-1/(q-1)}.
Weight dual_weight(const Weight& w, double q);

struct DhatDRatio {
  cplx a;
  double ratio = 0.0;
  bool ok = false;
};

// For each anchor a: \int_D w(z) |1 - conj(a) z|^{-eta} dA(z) * (1-|a|)^eta / w(S(a)).
std::vector<DhatDRatio> dhatD_integral_check(const Weight& w, double eta,
                                             const std::vector<cplx>& anchors,
                                             const DiscGrid& grid);

}  // namespace bergman

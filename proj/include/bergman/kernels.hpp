#pragma once

#include "bergman/analytic.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/weights.hpp"

namespace bergman {

// Reproducing kernel of A^2_w for a radial weight,
//
//   B_z(zeta) = sum_n (conj(z) zeta)^n / (2 w_{2n+1}),
//
// summed adaptively with a recorded geometric tail bound. The moment table is
// precomputed at construction and immutable afterwards. Evaluations with
// |z||zeta| > 1 - delta_guard are refused (no finite truncation meets the
// tolerance there); the error carries an estimate of the terms needed.
class KernelEvaluator {
 public:
  explicit KernelEvaluator(const Weight& w, int n_max = 4096, double tail_tol = 1e-10,
                           double delta_guard = 1e-3);

  struct Eval {
    cplx value;
    double tail_bound;
    int terms;
  };

  Eval eval_detail(cplx z, cplx zeta) const;
  cplx operator()(cplx z, cplx zeta) const { return eval_detail(z, zeta).value; }

  // B_z(z) (= ||B_z||^2 by the reproducing identity), real and positive.
  double norm_sq(cplx z) const;

  // B_z(z) * tail(|z|) * (1-|z|): the kernel-norm comparison ratio (the paper
  // estimates ||B_z||^2 against 1/(tail(|z|)(1-|z|)) within constants).
  double comparison_ratio(cplx z) const;

  // |series(w)|^2 for w = conj(z) zeta; used by the pairwise field engine.
  double abs2(cplx w) const;
  double series_real(double x) const;  // series at a real argument in [0, 1)

  const Weight& weight() const { return weight_; }
  double delta_guard() const { return delta_guard_; }
  double moment_odd(int n) const { return moments_[n]; }  // w_{2n+1}

 private:
  Eval sum_series(cplx w) const;

  Weight weight_;
  std::vector<double> moments_;  // w_{2n+1}
  std::vector<double> coeff_;    // 1/(2 w_{2n+1})
  double tail_tol_;
  double delta_guard_;
};

// K_z(zeta) = |B_z(zeta)|^2 / B_z(z), nonnegative; integrates to 1 against
// w dA by the reproducing identity.
double normalized_kernel(const KernelEvaluator& k, cplx z, cplx zeta);

// R(f)(z) = int f(w) (1-|z|^2)^2 / |1 - conj(z) w|^4 dA(w); R(1) = 1.
double apply_R(const std::function<double(cplx)>& f, cplx z, const DiscGrid& g);

// P^+_a(f)(z) = int f(w) (1-|w|^2)^a / |1 - z conj(w)|^{2+a} dA(w), a > -1.
double apply_Pplus(double alpha, const std::function<double(cplx)>& f, cplx z, const DiscGrid& g);

// LHS of the radial-case step estimate over ||f||_{A^p_w}^p:
// int ( int |f|^{p/q} (1-|z|^2)^2 / |1 - conj(z) zeta|^4 dA(zeta) )^q w dA(z).
double step_radial_ratio(const Weight& w, const AnalyticFunction& f, double p, double q,
                         const DiscGrid& g);

// |f(z)|^q / int |f|^q K_z w dA (the point-evaluation estimate ratio).
double pointwise_estimate_ratio(const KernelEvaluator& k, const AnalyticFunction& f, double q,
                                cplx z, const DiscGrid& g);

}  // namespace bergman

#pragma once

#include "bergman/common.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

struct ZeroEntry {
  cplx a;
  int mult = 1;
};
using ZeroSequence = std::vector<ZeroEntry>;

int total_multiplicity(const ZeroSequence& z);

// Closed-form analytic function
//
//   f(z) = poly(z)^{poly_power} * prod_a phi_a(z)^{m_a} * exp(P(z)),
//
// with poly and P given by coefficient lists. The declared zero set is the
// Blaschke list plus the polynomial's roots inside the disc. poly_power is a
// real exponent used by the factorization machinery; it requires the
// polynomial to be zero-free in the disc (the principal branch of log poly is
// then single-valued up to the pointwise convention, and |f| and products of
// complementary powers are branch independent).
class AnalyticFunction {
 public:
  std::vector<cplx> poly{cplx(1.0)};
  double poly_power = 1.0;
  ZeroSequence blaschke;
  std::vector<cplx> exp_poly;  // coefficients of P; empty means no factor

  cplx operator()(cplx z) const;
  double abs_at(cplx z) const { return std::abs((*this)(z)); }

  static AnalyticFunction from_poly(std::vector<cplx> coeffs);
  static AnalyticFunction from_zeros(ZeroSequence zeros);

  AnalyticFunction with_zero(cplx a, int mult = 1) const;
  AnalyticFunction with_exp(std::vector<cplx> p_coeffs) const;
  AnalyticFunction scaled(cplx c) const;

  // In-disc zeros: Blaschke entries plus polynomial roots with |root| < 1.
  ZeroSequence zeros_in_disc() const;

  // Removes matching Blaschke factors (used for the stable evaluation of
  // Horowitz-type quotients). Throws precondition_error when Z is not a
  // sub-multiset of the Blaschke list.
  AnalyticFunction without_blaschke(const ZeroSequence& z) const;

  // f^t for zero-free f (no in-disc zeros); requires blaschke empty.
  AnalyticFunction power(double t) const;

  int poly_degree() const;
};

// Roots of a complex polynomial (ascending coefficients) by the
// Durand-Kerner iteration; degree capped at 64.
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs);

// A^p_w norm by quadrature.
double ap_norm(const AnalyticFunction& f, double p, const Weight& w, const DiscGrid& g);

// M_p(r, f) by the angular rectangle rule; p = infinity gives the max.
double integral_mean(const AnalyticFunction& f, double p, double r, int n_angles);

// n(r, f) and the integrated counting function
// N(r, f) = sum_{0<|a|<r} log(r/|a|) + n(0, f) log r.
std::pair<int, double> zero_counts(const AnalyticFunction& f, double r);

// | log|f(0)| + sum_{|a|<r} log(r/|a|) - (2 pi)^{-1} int log|f(r e^{it})| dt |
double jensen_residual(const AnalyticFunction& f, double r, int n_angles);

// max |f| over grid nodes in the non-tangential region with the given vertex.
double nontangential_max(const AnalyticFunction& f, cplx vertex, const DiscGrid& g);

// Truncated binomial series of (1 - conj(a) z)^{-s} as polynomial
// coefficients; the tail is below tol at |z| <= radius.
std::vector<cplx> binomial_series(cplx a, double s, double radius, double tol = 1e-8,
                                  int max_degree = 1 << 15);

}  // namespace bergman

#pragma once

#include "bergman/analytic.hpp"

namespace bergman {

// Cached scalars of a finite zero sequence. Origin zeros are tracked
// separately: the premultiplier factor a-bar phi_a e^{1 - a-bar phi_a}
// degenerates at a = 0, so psi_Z carries them as a z^m prefactor, while k_Z
// keeps their (1-|a|^2)^2 terms with a = 0.
struct ZeroSetAux {
  ZeroSequence z;
  double blaschke2_sum = 0.0;    // sum m (1-|a|)^2
  double blaschke2sq_sum = 0.0;  // sum m (1-|a|^2)^2
  double separation = 0.0;       // inf of pairwise pseudohyperbolic distances
  int origin_multiplicity = 0;

  static ZeroSetAux from(ZeroSequence z);
};

// k_Z(z) = (|z|^2/2) sum_a m (1-|a|^2)^2 / |1 - a-bar z|^2
double k_Z(const ZeroSetAux& aux, cplx z);

// W_Z = e^{k_Z}
double W_Z(const ZeroSetAux& aux, cplx z);

// psi_Z(z) = z^{m_0} prod_{a != 0} [ a-bar phi_a(z) e^{1 - a-bar phi_a(z)} ]^m
cplx psi_Z(const ZeroSetAux& aux, cplx z);

// h(z) = |f(z)| / prod_{a in Z} { |phi_a(z)| e^{(1 - |phi_a(z)|^2)/2} }^m,
// evaluated through the cancelled form |f / prod phi_a| * e^{-sum ...}, which
// is stable across the removable singularities at the zeros. Z must be a
// sub-multiset of f's Blaschke zeros.
double h_compare(const AnalyticFunction& f, const ZeroSequence& z, cplx zz);

// (||f||^p / ||h||^p, ||h||^p / ||f||^p)
std::pair<double, double> h_norm_ratio(const AnalyticFunction& f, const ZeroSequence& z, double p,
                                      const Weight& w, const DiscGrid& g);

// Minimizes int exp(p k_Z - h) w dA over harmonic polynomials
// h = sum_{m<=M} Re((c_m + i d_m) z^m) (normalized by h(0) = 0; a free
// constant would scale the integral to zero for any zero set) by coordinate
// descent from h == 0. A small value is membership evidence, never a
// certificate of non-membership.
struct MajorantSearchResult {
  double best_value = 0.0;
  std::vector<double> coeffs;  // c_1, d_1, c_2, d_2, ...
  int sweeps = 0;
};

MajorantSearchResult harmonic_majorant_search(const ZeroSequence& z, double p, const Weight& w,
                                   int max_degree, const DiscGrid& g);

// Verifies the perturbation hypotheses 1-|s(a)|^2 = gamma (1-|a|^2) (exact to
// 1e-12) and reports max rho(a, s(a)); the correspondence is by index.
struct PerturbReport {
  bool radii_condition = true;
  double max_radii_defect = 0.0;
  double max_pseudo_dist = 0.0;
  double separation_of_z = 0.0;
  double target_exponent = 0.0;  // p / gamma
};

PerturbReport perturb_check(const ZeroSequence& z, double gamma, const ZeroSequence& z_prime,
                            double p = 2.0);

}  // namespace bergman

#pragma once

#include "bergman/analytic.hpp"
#include "bergman/kernels.hpp"

namespace bergman {

// Node-sum masses over Carleson squares with O(rings) queries; numerator and
// denominator of set ratios share this digitization so that exact identities
// (G = disc gives ratio 1) hold exactly at grid level.
class SquareMassIndex {
 public:
  SquareMassIndex(const DiscGrid& g, std::vector<double> node_mass);

  double total() const { return total_; }
  double on_square(const CarlesonSquare& s) const;
  const DiscGrid& grid() const { return *grid_; }
  const std::vector<double>& node_mass() const { return mass_; }

 private:
  const DiscGrid* grid_;
  std::vector<double> mass_;
  std::vector<std::vector<double>> prefix_;  // per ring: prefix sums over angular index
  std::vector<double> ring_radius_;
  double total_ = 0.0;
};

std::vector<double> weight_node_masses(const DiscGrid& g, const Weight& w);

GridSet gridset_from_region(const DiscGrid& g, const Region& r);
GridSet gridset_complement(const GridSet& s);

// Threshold field of the kernel bad set: T(z) = int |f|^q K_z w dA per node,
// computed in one ring-pair pass. Nodes whose kernel evaluation would exceed
// the diagonal guard are flagged indeterminate (NaN in the field).
struct ThresholdField {
  std::vector<double> value;
  std::vector<std::uint8_t> indeterminate;
  int n_indeterminate = 0;
};

ThresholdField kernel_threshold_field(const AnalyticFunction& f, double q, const Weight& w,
                                      const KernelEvaluator& k, const DiscGrid& g);

// E(eps, q, f) = { z : |f(z)|^q <= eps T(z) }. Indeterminate nodes belong to
// neither E nor its complement.
GridSet bad_set_kernel(const AnalyticFunction& f, double p, double q, double eps, const Weight& w,
                       const KernelEvaluator& k, const DiscGrid& g,
                       const ThresholdField* field = nullptr);

// Local-average threshold per node: Q(f)(z) = average of |f|^p over
// E(z) = Delta(z, r * half) against nu; E = { z : |f(z)|^p <= eps Q(f)(z) }.
struct LocalField {
  std::vector<double> q_value;
  std::vector<std::uint8_t> indeterminate;
  int n_indeterminate = 0;
};

LocalField local_average_field(const AnalyticFunction& f, double p,
                               const std::vector<double>& nu_node_mass, double r,
                               const DiscGrid& g, double half = 0.5);

GridSet bad_set_local(const AnalyticFunction& f, double p, const std::vector<double>& nu_node_mass,
                      double r, double eps, const DiscGrid& g, double half = 0.5,
                      const LocalField* field = nullptr);

struct DominationReport {
  double ratio = 0.0;
  double epsilon_used = 0.0;
  double bad_mass_bound = 0.0;
};

DominationReport domination_ratio(const GridSet& set, const AnalyticFunction& f, double p,
                                  const Weight& w, const DiscGrid& g);

// min over the dyadic family (depth levels) of w(G cap S) / w(S), both sides
// at grid digitization. Squares with denominator below the noise floor are
// excluded.
double square_lower_bound(const GridSet& set, const Weight& w, int depth, int angular_base = 64);

// Test function f_a(z) = ((1-|a|)/(1 - conj(a) z))^{m/p} / w(S(a))^{1/p},
// normalized to unit A^p_w norm on the grid; pre-normalization norm reported.
AnalyticFunction square_test_function(cplx a, double m, double p, const Weight& w,
                                        const DiscGrid& g, double* prenorm = nullptr);

}  // namespace bergman

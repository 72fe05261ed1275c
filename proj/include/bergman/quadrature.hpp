#pragma once

#include <variant>

#include "bergman/common.hpp"
#include "bergman/geometry.hpp"
#include "bergman/weights.hpp"

namespace bergman {

// Polar grid over the disc. Radial bands follow the dyadic breakpoints
// r_k = 1 - 2^{-k}, k = 0..levels, with angular_base * 2^k cells per band, so
// every dyadic Carleson square is resolved by whole cells at its own scale.
//
// Two optional refinements exist for accuracy-sensitive work:
//   radial_subdiv  splits band k into max(1, radial_subdiv >> k) equal-measure
//                  sub-rings (only the fat inner bands get split),
//   inner_levels   replaces band 0 by geometric rings [2^{-j-1}, 2^{-j}) so
//                  the neighborhood of the origin is resolved dyadically too.
//
// A node sits at the measure midpoint of its cell: r = sqrt((r_lo^2+r_hi^2)/2),
// theta = the angular midpoint. With cell masses taken as exact cell measures
// this makes the rule exact for functions linear in |z|^2, in particular the
// total mass is 1 and \int |z|^2 dA = 1/2 up to rounding.
struct GridSpec {
  int levels = 12;
  int angular_base = 64;
  int radial_subdiv = 1;
  int inner_levels = 0;
  std::size_t node_cap = 8u << 20;
};

class DiscGrid {
 public:
  struct Ring {
    double r_lo, r_hi;  // radial span
    double u_lo, u_hi;  // same span in u = r^2
    int n_angles;
    std::size_t first;  // index of the ring's node 0
    double dtheta() const { return kTwoPi / n_angles; }
  };

  explicit DiscGrid(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  std::size_t size() const { return pos_.size(); }
  const std::vector<Ring>& rings() const { return rings_; }
  cplx position(std::size_t i) const { return pos_[i]; }
  double cell_area(std::size_t i) const { return area_[i]; }  // normalized measure
  int ring_of(std::size_t i) const { return ring_of_[i]; }
  double max_radius() const { return max_radius_; }

  // Cell bounds of node i.
  double cell_r_lo(std::size_t i) const { return rings_[ring_of_[i]].r_lo; }
  double cell_r_hi(std::size_t i) const { return rings_[ring_of_[i]].r_hi; }
  double cell_theta_lo(std::size_t i) const;
  double cell_theta_hi(std::size_t i) const;

 private:
  GridSpec spec_;
  std::vector<Ring> rings_;
  std::vector<cplx> pos_;
  std::vector<double> area_;
  std::vector<int> ring_of_;
  double max_radius_ = 0.0;
};

DiscGrid make_grid(int levels, int angular_base);
DiscGrid make_grid(const GridSpec& spec);

// Boolean mask over a grid's nodes; represents a measurable set such as a
// dominating set G at grid resolution.
struct GridSet {
  const DiscGrid* grid = nullptr;
  std::vector<std::uint8_t> mask;

  std::size_t count() const;
};

struct WholeDisc {};
struct Annulus {
  double r_lo = 0.0, r_hi = 1.0;
};

// Integration domain. Carleson squares and annuli are polar rectangles and
// get exact cell clipping; pseudohyperbolic discs and grid sets use node
// membership.
class Region {
 public:
  Region() : v_(WholeDisc{}) {}
  Region(WholeDisc w) : v_(w) {}                       // NOLINT
  Region(const CarlesonSquare& s) : v_(s) {}           // NOLINT
  Region(const PseudoDisc& d) : v_(d) {}               // NOLINT
  Region(const Annulus& a) : v_(a) {}                  // NOLINT
  Region(const GridSet* g) : v_(g) {}                  // NOLINT

  bool contains(cplx z) const;
  bool clips_exactly() const;

  // For clipping regions: overlap of the polar rectangle
  // [r_lo,r_hi] x [t_lo,t_hi] with the region, returned as (r_lo', r_hi',
  // angular_fraction in [0,1] of the cell's angular span).
  struct Clip {
    double r_lo, r_hi, ang_frac;
  };
  Clip clip(double r_lo, double r_hi, double t_lo, double t_hi) const;

  const std::variant<WholeDisc, CarlesonSquare, PseudoDisc, Annulus, const GridSet*>& raw() const {
    return v_;
  }

 private:
  std::variant<WholeDisc, CarlesonSquare, PseudoDisc, Annulus, const GridSet*> v_;
};

// Mass of the weight on the cell of node i (normalized measure). Radial
// weights use exact mass-tail differences over the cell's radial span.
double weight_cell_mass(const DiscGrid& g, const Weight& w, std::size_t i);

// Sum over nodes in the region of f(node) * (weight mass of the clipped
// cell). Throws numeric_guard_error when f or the weight is non-finite at a
// node. Monotone in the region for nonnegative f.
double integrate(const std::function<double(cplx)>& f, const Weight& w, const Region& region,
                 const DiscGrid& g);
cplx integrate_c(const std::function<cplx(cplx)>& f, const Weight& w, const Region& region,
                 const DiscGrid& g);

// integrate(|f|^p, w, disc)^{1/p}, p > 0.
double lp_norm(const std::function<double(cplx)>& f, double p, const Weight& w, const DiscGrid& g);

// out[i] = pre(rho_i) * sum_j coeff[j] * sym(rho_i, rho_j, dtheta_ij), where
// sym is even in the angle difference. Cost is O(#ring pairs * max ring size)
// kernel evaluations plus O(N^2) multiply-adds: the angular lattices of any
// two rings are nested, so each ring pair needs one kernel table.
std::vector<double> pairwise_field(const DiscGrid& g, const std::vector<double>& coeff,
                                   const std::function<double(double, double, double)>& sym,
                                   const std::function<double(double)>& pre);

}  // namespace bergman

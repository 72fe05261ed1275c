#include "bergman/dominating.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bergman {

SquareMassIndex::SquareMassIndex(const DiscGrid& g, std::vector<double> node_mass)
    : grid_(&g), mass_(std::move(node_mass)) {
  if (mass_.size() != g.size()) throw parameter_error("SquareMassIndex: mass size mismatch");
  const auto& rings = g.rings();
  prefix_.resize(rings.size());
  ring_radius_.resize(rings.size());
  for (std::size_t r = 0; r < rings.size(); ++r) {
    const auto& ring = rings[r];
    ring_radius_[r] = std::abs(g.position(ring.first));
    auto& p = prefix_[r];
    p.assign(ring.n_angles + 1, 0.0);
    for (int j = 0; j < ring.n_angles; ++j) p[j + 1] = p[j] + mass_[ring.first + j];
    total_ += p.back();
  }
}

double SquareMassIndex::on_square(const CarlesonSquare& s) const {
  if (s.is_root) return total_;
  double sum = 0.0;
  const auto& rings = grid_->rings();
  double phi = s.anchor_angle();
  for (std::size_t r = 0; r < rings.size(); ++r) {
    if (!(ring_radius_[r] > s.r_lo)) continue;  // node membership: |a| < rho < 1
    const auto& ring = rings[r];
    double dth = ring.dtheta();
    // nodes with |angle_diff((j+0.5) dth, phi)| < half_angle
    double lo = (phi - s.half_angle) / dth - 0.5;
    double hi = (phi + s.half_angle) / dth - 0.5;
    long jlo = static_cast<long>(std::ceil(lo));
    long jhi = static_cast<long>(std::floor(hi));
    if (hi - std::floor(hi) == 0.0) --jhi;  // strict upper edge
    if (jhi < jlo) continue;
    if (jhi - jlo + 1 >= ring.n_angles) {
      sum += prefix_[r].back();
      continue;
    }
    long a = ((jlo % ring.n_angles) + ring.n_angles) % ring.n_angles;
    long b = ((jhi % ring.n_angles) + ring.n_angles) % ring.n_angles;
    if (a <= b) {
      sum += prefix_[r][b + 1] - prefix_[r][a];
    } else {
      sum += (prefix_[r].back() - prefix_[r][a]) + prefix_[r][b + 1];
    }
  }
  return sum;
}

std::vector<double> weight_node_masses(const DiscGrid& g, const Weight& w) {
  std::vector<double> m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m[i] = weight_cell_mass(g, w, i);
  return m;
}

GridSet gridset_from_region(const DiscGrid& g, const Region& r) {
  GridSet s;
  s.grid = &g;
  s.mask.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) s.mask[i] = r.contains(g.position(i)) ? 1 : 0;
  return s;
}

GridSet gridset_complement(const GridSet& s) {
  GridSet c;
  c.grid = s.grid;
  c.mask.resize(s.mask.size());
  for (std::size_t i = 0; i < s.mask.size(); ++i) c.mask[i] = s.mask[i] ? 0 : 1;
  return c;
}

ThresholdField kernel_threshold_field(const AnalyticFunction& f, double q, const Weight& w,
                                      const KernelEvaluator& k, const DiscGrid& g) {
  if (!(q > 0.0)) throw parameter_error("kernel_threshold_field: q must be positive");
  ThresholdField out;
  out.value.assign(g.size(), 0.0);
  out.indeterminate.assign(g.size(), 0);

  double guard = 1.0 - k.delta_guard();
  double rho_max = g.max_radius();

  std::vector<double> coeff(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    coeff[i] = std::pow(f.abs_at(g.position(i)), q) * weight_cell_mass(g, w, i);

  auto sym = [&](double ra, double rb, double dth) {
    double x = ra * rb;
    if (x > guard) return 0.0;  // masked below via the indeterminate flags
    return k.abs2(std::polar(x, dth));
  };
  auto pre = [](double) { return 1.0; };
  std::vector<double> raw = pairwise_field(g, coeff, sym, pre);

  int bad = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    double rho = std::abs(g.position(i));
    if (rho * rho_max > guard) {
      out.indeterminate[i] = 1;
      out.value[i] = std::numeric_limits<double>::quiet_NaN();
      ++bad;
      continue;
    }
    out.value[i] = raw[i] / k.series_real(rho * rho);
  }
  out.n_indeterminate = bad;
  return out;
}

GridSet bad_set_kernel(const AnalyticFunction& f, double p, double q, double eps, const Weight& w,
                       const KernelEvaluator& k, const DiscGrid& g, const ThresholdField* field) {
  if (!(q > 0.0 && q < p)) throw parameter_error("bad_set_kernel: need 0 < q < p");
  if (!(eps >= 0.0)) throw parameter_error("bad_set_kernel: eps must be nonnegative");
  ThresholdField local;
  if (!field) {
    local = kernel_threshold_field(f, q, w, k, g);
    field = &local;
  }
  GridSet e;
  e.grid = &g;
  e.mask.assign(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (field->indeterminate[i]) continue;
    double lhs = std::pow(f.abs_at(g.position(i)), q);
    e.mask[i] = lhs <= eps * field->value[i] ? 1 : 0;
  }
  return e;
}

LocalField local_average_field(const AnalyticFunction& f, double p,
                               const std::vector<double>& nu_node_mass, double r,
                               const DiscGrid& g, double half) {
  if (!(r > 0.0 && r < 1.0)) throw parameter_error("local_average_field: r must be in (0,1)");
  if (nu_node_mass.size() != g.size())
    throw parameter_error("local_average_field: measure size mismatch");
  LocalField out;
  out.q_value.assign(g.size(), 0.0);
  out.indeterminate.assign(g.size(), 0);

  std::vector<double> fp(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) fp[i] = std::pow(f.abs_at(g.position(i)), p);

  int bad = 0;
  const auto& rings = g.rings();
  std::vector<double> num_part(g.size()), den_part(g.size());
  parallel_chunks(g.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      PseudoDisc d = pseudo_disc(g.position(i), r * half);
      double c_lo = std::abs(d.euclidean_center) - d.euclidean_radius;
      double c_hi = std::abs(d.euclidean_center) + d.euclidean_radius;
      double num = 0.0, den = 0.0;
      for (const auto& ring : rings) {
        double rho = std::abs(g.position(ring.first));
        if (rho < c_lo || rho > c_hi) continue;
        for (int j = 0; j < ring.n_angles; ++j) {
          std::size_t idx = ring.first + j;
          if (d.contains(g.position(idx))) {
            num += fp[idx] * nu_node_mass[idx];
            den += nu_node_mass[idx];
          }
        }
      }
      num_part[i] = num;
      den_part[i] = den;
    }
  });
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(den_part[i] > 0.0)) {
      out.indeterminate[i] = 1;
      out.q_value[i] = std::numeric_limits<double>::quiet_NaN();
      ++bad;
      continue;
    }
    out.q_value[i] = num_part[i] / den_part[i];
  }
  out.n_indeterminate = bad;
  return out;
}

GridSet bad_set_local(const AnalyticFunction& f, double p, const std::vector<double>& nu_node_mass,
                      double r, double eps, const DiscGrid& g, double half,
                      const LocalField* field) {
  if (!(p > 0.0)) throw parameter_error("bad_set_local: p must be positive");
  if (!(eps >= 0.0)) throw parameter_error("bad_set_local: eps must be nonnegative");
  LocalField local;
  if (!field) {
    local = local_average_field(f, p, nu_node_mass, r, g, half);
    field = &local;
  }
  GridSet e;
  e.grid = &g;
  e.mask.assign(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (field->indeterminate[i]) continue;
    e.mask[i] = std::pow(f.abs_at(g.position(i)), p) <= eps * field->q_value[i] ? 1 : 0;
  }
  return e;
}

DominationReport domination_ratio(const GridSet& set, const AnalyticFunction& f, double p,
                                  const Weight& w, const DiscGrid& g) {
  if (set.grid != &g) throw precondition_error("domination_ratio: mask belongs to another grid");
  DominationReport rep;
  double num = integrate([&](cplx z) { return std::pow(f.abs_at(z), p); }, w, &set, g);
  double den = integrate([&](cplx z) { return std::pow(f.abs_at(z), p); }, w, WholeDisc{}, g);
  if (!(den > 0.0)) throw precondition_error("domination_ratio: f has zero norm");
  rep.ratio = num / den;
  return rep;
}

double square_lower_bound(const GridSet& set, const Weight& w, int depth, int angular_base) {
  if (!set.grid) throw parameter_error("square_lower_bound: empty grid set");
  const DiscGrid& g = *set.grid;
  std::vector<double> wm = weight_node_masses(g, w);
  std::vector<double> gm(wm);
  for (std::size_t i = 0; i < gm.size(); ++i)
    if (!set.mask[i]) gm[i] = 0.0;
  SquareMassIndex base(g, std::move(wm));
  SquareMassIndex inter(g, std::move(gm));

  double noise = 1e-14 * std::max(base.total(), 1.0);
  double best = inter.total() / base.total();  // root square
  for (int k = 1; k <= depth; ++k) {
    double r = 1.0 - std::ldexp(1.0, -k);
    int n = angular_base << std::min(k, 24);
    for (int j = 0; j < n; ++j) {
      CarlesonSquare s = carleson_square(std::polar(r, kTwoPi * j / n));
      double den = base.on_square(s);
      if (den <= noise) continue;
      best = std::min(best, inter.on_square(s) / den);
    }
  }
  return best;
}

AnalyticFunction square_test_function(cplx a, double m, double p, const Weight& w,
                                        const DiscGrid& g, double* prenorm) {
  if (std::abs(a) == 0.0) throw parameter_error("square_test_function: a must be nonzero");
  if (!(std::abs(a) < 1.0)) throw parameter_error("square_test_function: a must be in the disc");
  if (!(m > 0.0 && p > 0.0)) throw parameter_error("square_test_function: m, p must be positive");
  double ws = w.on_square(carleson_square(a), &g);
  if (!(ws > 0.0))
    throw numeric_guard_error("square_test_function: w(S(a)) vanishes");

  // ((1-|a|)/(1 - conj(a) z))^{m/p} as an exact rational power of the
  // zero-free linear factor, then the w(S(a))^{-1/p} scale
  AnalyticFunction f;
  f.poly = {cplx(1.0), -std::conj(a)};
  f.poly_power = -m / p;
  double scale = std::pow(1.0 - std::abs(a), m / p) * std::pow(ws, -1.0 / p);
  f = f.scaled(scale);
  double n0 = ap_norm(f, p, w, g);
  if (prenorm) *prenorm = n0;
  return f.scaled(1.0 / n0);
}

}  // namespace bergman

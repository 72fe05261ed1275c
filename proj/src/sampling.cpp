#include "bergman/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace bergman {

DiscMeasure DiscMeasure::from_weight(const Weight& w, const DiscGrid& g) {
  DiscMeasure m;
  m.grid = &g;
  m.node_mass = weight_node_masses(g, w);
  return m;
}

DiscMeasure DiscMeasure::from_weight_on_region(const Weight& w, const Region& r,
                                               const DiscGrid& g) {
  if (!r.clips_exactly())
    throw parameter_error("from_weight_on_region: region must clip exactly");
  DiscMeasure m;
  m.grid = &g;
  m.node_mass.assign(g.size(), 0.0);
  const auto& rings = g.rings();
  const bool radial = w.is_radial();
  for (const auto& ring : rings) {
    for (int j = 0; j < ring.n_angles; ++j) {
      std::size_t i = ring.first + j;
      auto c = r.clip(ring.r_lo, ring.r_hi, j * ring.dtheta(), (j + 1) * ring.dtheta());
      if (c.ang_frac <= 0.0) continue;
      if (radial) {
        m.node_mass[i] =
            (w.mass_tail(c.r_lo) - w.mass_tail(c.r_hi)) * ring.dtheta() * c.ang_frac / kPi;
      } else {
        double cell = (c.r_hi * c.r_hi - c.r_lo * c.r_lo) * ring.dtheta() * c.ang_frac / kTwoPi;
        m.node_mass[i] = w.density(g.position(i)) * cell;
      }
    }
  }
  return m;
}

DiscMeasure DiscMeasure::from_density(const std::function<double(cplx)>& density,
                                      const DiscGrid& g) {
  DiscMeasure m;
  m.grid = &g;
  m.node_mass.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    double v = density(g.position(i));
    if (!(v >= 0.0)) throw parameter_error("DiscMeasure: density must be nonnegative");
    m.node_mass[i] = v * g.cell_area(i);
  }
  return m;
}

DiscMeasure DiscMeasure::from_atoms(std::vector<Atom> atoms) {
  DiscMeasure m;
  for (const auto& a : atoms) {
    if (!(std::norm(a.pos) < 1.0)) throw parameter_error("DiscMeasure: atom outside the disc");
    if (!(a.mass >= 0.0)) throw parameter_error("DiscMeasure: negative atom mass");
  }
  m.atoms = std::move(atoms);
  return m;
}

double DiscMeasure::total() const {
  double t = 0.0;
  for (const auto& a : atoms) t += a.mass;
  for (double v : node_mass) t += v;
  return t;
}

double DiscMeasure::on_region(const Region& r) const {
  double t = 0.0;
  for (const auto& a : atoms)
    if (r.contains(a.pos)) t += a.mass;
  if (grid)
    for (std::size_t i = 0; i < node_mass.size(); ++i)
      if (node_mass[i] != 0.0 && r.contains(grid->position(i))) t += node_mass[i];
  return t;
}

DiscMeasure DiscMeasure::scaled(double c) const {
  if (!(c >= 0.0)) throw parameter_error("DiscMeasure::scaled: negative factor");
  DiscMeasure m = *this;
  for (auto& a : m.atoms) a.mass *= c;
  for (auto& v : m.node_mass) v *= c;
  return m;
}

double DiscMeasure::integral(const std::function<double(cplx)>& f) const {
  double t = 0.0;
  for (const auto& a : atoms) t += a.mass * f(a.pos);
  if (grid)
    for (std::size_t i = 0; i < node_mass.size(); ++i)
      if (node_mass[i] != 0.0) t += node_mass[i] * f(grid->position(i));
  return t;
}

DiscMeasure measure_from_csv(const std::string& atoms_csv, const DiscGrid* g,
                             const std::string& density_csv) {
  std::vector<DiscMeasure::Atom> atoms;
  if (!atoms_csv.empty()) {
    std::ifstream in(atoms_csv);
    if (!in) throw parameter_error("measure_from_csv: cannot open " + atoms_csv);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("re,", 0) == 0) continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ls(line);
      double re, im, mass;
      if (ls >> re >> im >> mass) atoms.push_back({cplx(re, im), mass});
    }
  }
  DiscMeasure m = DiscMeasure::from_atoms(std::move(atoms));
  if (!density_csv.empty()) {
    if (!g) throw parameter_error("measure_from_csv: density table requires a grid");
    std::ifstream in(density_csv);
    if (!in) throw parameter_error("measure_from_csv: cannot open " + density_csv);
    // rows (re, im, value) are nearest-node samples
    std::vector<double> density(g->size(), 0.0);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("re,", 0) == 0) continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ls(line);
      double re, im, v;
      if (!(ls >> re >> im >> v)) continue;
      cplx z(re, im);
      std::size_t best = 0;
      double bd = 1e300;
      for (std::size_t i = 0; i < g->size(); ++i) {
        double d = std::norm(g->position(i) - z);
        if (d < bd) {
          bd = d;
          best = i;
        }
      }
      density[best] = v;
    }
    m.grid = g;
    m.node_mass.resize(g->size());
    for (std::size_t i = 0; i < g->size(); ++i) m.node_mass[i] = density[i] * g->cell_area(i);
  }
  return m;
}

namespace {

// mass queries for mu and w over squares at matched digitization
struct SquarePair {
  SquareMassIndex mu_idx;
  std::vector<DiscMeasure::Atom> atoms;
  SquareMassIndex w_idx;

  SquarePair(const DiscMeasure& mu, const Weight& w, const DiscGrid& g)
      : mu_idx(g, mu.grid ? mu.node_mass : std::vector<double>(g.size(), 0.0)),
        atoms(mu.atoms),
        w_idx(g, weight_node_masses(g, w)) {
    if (mu.grid && mu.grid != &g)
      throw precondition_error("sampling: measure lives on another grid");
  }

  double mu_on(const CarlesonSquare& s) const {
    double m = mu_idx.on_square(s);
    for (const auto& a : atoms)
      if (s.contains(a.pos)) m += a.mass;
    return m;
  }
  double w_on(const CarlesonSquare& s) const { return w_idx.on_square(s); }
};

}  // namespace

double maximal_fn(const DiscMeasure& mu, const Weight& w, cplx z, int depth, int angular_base) {
  if (!(std::norm(z) < 1.0)) throw parameter_error("maximal_fn: z outside the disc");
  const DiscGrid* g = mu.grid;
  if (!g) throw precondition_error("maximal_fn: measure carries no grid");
  SquarePair idx(mu, w, *g);
  double best = idx.mu_on(carleson_square(cplx(0.0))) / idx.w_on(carleson_square(cplx(0.0)));
  double absz = std::abs(z);
  double argz = (z == cplx(0.0)) ? 0.0 : std::arg(z);
  for (int k = 1; k <= depth; ++k) {
    double r = 1.0 - std::ldexp(1.0, -k);
    if (!(r < absz)) break;  // z must lie inside the square
    int n = angular_base << std::min(k, 24);
    double half = 0.5 * (1.0 - r);
    for (int j = 0; j < n; ++j) {
      double phi = kTwoPi * j / n;
      if (std::abs(angle_diff(phi, argz)) >= half) continue;
      CarlesonSquare s = carleson_square(std::polar(r, phi));
      double den = idx.w_on(s);
      if (den > 0.0) best = std::max(best, idx.mu_on(s) / den);
    }
  }
  return best;
}

CarlesonReport carleson_norm(const DiscMeasure& mu, const Weight& w, int depth,
                             int angular_base) {
  const DiscGrid* g = mu.grid;
  if (!g) throw precondition_error("carleson_norm: measure carries no grid");
  SquarePair idx(mu, w, *g);
  CarlesonReport rep;
  rep.argmax_square = carleson_square(cplx(0.0));
  rep.carleson_norm = idx.mu_on(rep.argmax_square) / idx.w_on(rep.argmax_square);
  for (int k = 1; k <= depth; ++k) {
    double r = 1.0 - std::ldexp(1.0, -k);
    int n = angular_base << std::min(k, 24);
    for (int j = 0; j < n; ++j) {
      CarlesonSquare s = carleson_square(std::polar(r, kTwoPi * j / n));
      double den = idx.w_on(s);
      if (!(den > 1e-300)) continue;
      double v = idx.mu_on(s) / den;
      if (v > rep.carleson_norm) {
        rep.carleson_norm = v;
        rep.argmax_square = s;
      }
    }
  }
  return rep;
}

std::vector<double> k_r_field(const DiscMeasure& mu, const Weight& w, double r, const DiscGrid& g,
                              bool star, int* n_indeterminate) {
  if (!(r > 0.0 && r < 1.0)) throw parameter_error("k_r_field: r must be in (0,1)");
  if (mu.grid && mu.grid != &g) throw precondition_error("k_r_field: measure on another grid");
  std::vector<double> wm = weight_node_masses(g, w);
  std::vector<double> out(g.size());
  int bad = 0;
  const auto& rings = g.rings();
  std::vector<std::uint8_t> flag(g.size(), 0);
  parallel_chunks(g.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
     PseudoDisc d = pseudo_disc(g.position(i), r);
      double c_lo = std::abs(d.euclidean_center) - d.euclidean_radius;
      double c_hi = std::abs(d.euclidean_center) + d.euclidean_radius;
      double num = 0.0, den = 0.0;
      for (const auto& ring : rings) {
        double rho = std::abs(g.position(ring.first));
        if (rho < c_lo || rho > c_hi) continue;
        for (int j = 0; j < ring.n_angles; ++j) {
          std::size_t idx = ring.first + j;
          if (!d.contains(g.position(idx))) continue;
          if (mu.grid) num += mu.node_mass[idx];
          if (!star) den += wm[idx];
        }
      }
      for (const auto& a : mu.atoms)
        if (d.contains(a.pos)) num += a.mass;
      if (star) {
        CarlesonSquare s = carleson_square(g.position(i));
        den = w.on_square(s, &g);
      }
      if (!(den > 0.0)) {
        out[i] = std::numeric_limits<double>::quiet_NaN();
        flag[i] = 1;
      } else {
        out[i] = num / den;
      }
    }
  });
  for (auto f : flag) bad += f;
  if (n_indeterminate) *n_indeterminate = bad;
  return out;
}

CarlesonReport sampling_pipeline(const DiscMeasure& mu, const Weight& w, double p, double r,
                                 double eps, const std::vector<AnalyticFunction>& family,
                                 const DiscGrid& g, const SamplingOptions& opt) {
  if (!(p > 0.0)) throw parameter_error("sampling_pipeline: p must be positive");
  if (!(eps > 0.0)) throw parameter_error("sampling_pipeline: eps must be positive");
  CarlesonReport rep = carleson_norm(mu, w, opt.depth, opt.angular_base);
  if (!std::isfinite(rep.carleson_norm))
    throw precondition_error("sampling_pipeline: Carleson norm is not finite");

  int bad = 0;
  rep.k_r_field = k_r_field(mu, w, r, g, opt.star_variant, &bad);
  rep.k_r_indeterminate = bad;

  GridSet gset;
  gset.grid = &g;
  gset.mask.assign(g.size(), 0);
  double threshold = eps * rep.carleson_norm;
  for (std::size_t i = 0; i < g.size(); ++i)
    gset.mask[i] = (std::isfinite(rep.k_r_field[i]) && rep.k_r_field[i] > threshold) ? 1 : 0;

  if (opt.pseudo_disc_checks) {
    // C_infty branch: Lebesgue-measure density of G in pseudo-discs around
    // dyadic anchors
    static const Weight lebesgue = weights::catalog("lebesgue");
    double worst = 1.0;
    for (int k = 1; k <= opt.depth && k + 2 <= g.spec().levels; ++k) {
      cplx z = std::polar(1.0 - std::ldexp(1.0, -k), 0.0);
      PseudoDisc d = pseudo_disc(z, std::max(r, 0.25));
      double den = integrate([](cplx) { return 1.0; }, lebesgue, d, g);
      double num = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (gset.mask[i] && d.contains(g.position(i))) num += g.cell_area(i);
      if (den > 0.0) worst = std::min(worst, num / den);
    }
    rep.empirical_delta = worst;
  } else {
    rep.empirical_delta = square_lower_bound(gset, w, opt.depth, opt.angular_base);
  }

  double dom_min = 1.0;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& f : family) {
    double norm_p = std::pow(ap_norm(f, p, w, g), p);
    if (!(norm_p > 1e-280)) continue;  // near-zero-norm member excluded
    DominationReport dr = domination_ratio(gset, f, p, w, g);
    dom_min = std::min(dom_min, dr.ratio);
    double ratio = mu.integral([&](cplx z) { return std::pow(f.abs_at(z), p); }) / norm_p;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  rep.domination_min = dom_min;
  if (hi > 0.0) {
    rep.sampling_bounds = std::make_pair(lo, hi);
    rep.sampling_constant = std::max(hi, lo > 0.0 ? 1.0 / lo : std::numeric_limits<double>::infinity());
  }
  return rep;
}

double difference_estimate(const DiscMeasure& mu, const DiscMeasure& nu, const Weight& w,
                           const AnalyticFunction& f, double p, double r, double big_r,
                           const DiscGrid& g, bool square_variant) {
  if (!(r > 0.0 && r < big_r / 2.0 && big_r / 2.0 <= 0.25))
    throw parameter_error("difference_estimate: need 0 < r < R/2 <= 1/4");
  if (g.size() > (1u << 15))
    throw resource_cap_error("difference_estimate: grid too large for the double integral");
  if (!nu.grid || nu.grid != &g)
    throw precondition_error("difference_estimate: nu must be a grid measure on this grid");

  // carleson-type hypothesis check on nu (reported as a precondition); the
  // square form matches either inner-region variant up to constants
  {
    SquarePair idx(nu, w, g);
    double worst = 0.0;
    for (int k = 1; k <= 6; ++k) {
      CarlesonSquare s = carleson_square(std::polar(1.0 - std::ldexp(1.0, -k), 0.0));
      double den = idx.w_on(s);
      if (den > 0.0) worst = std::max(worst, idx.mu_on(s) / den);
    }
    if (!(worst < 1e6))
      throw precondition_error("difference_estimate: nu(S) <~ w(S) hypothesis fails badly");
  }

  std::vector<cplx> fc(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) fc[i] = f(g.position(i));

  auto inner = [&](cplx zeta, cplx f_zeta) {
    PseudoDisc d = pseudo_disc(zeta, r);
    CarlesonSquare s =
        std::abs(zeta) > 0.0 ? carleson_square(zeta) : carleson_square(cplx(1e-12, 0.0));
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (nu.node_mass[i] == 0.0) continue;
      cplx z = g.position(i);
      if (!d.contains(z)) continue;
      if (square_variant && !s.contains(z)) continue;
      acc += std::pow(std::abs(fc[i] - f_zeta), p) * nu.node_mass[i];
    }
    double den = square_variant
                     ? w.on_square(s, &g)
                     : integrate([](cplx) { return 1.0; }, w, d, g);
    if (!(den > 0.0)) return 0.0;
    return acc / den;
  };

  // outer integral against mu
  double lhs = 0.0;
  if (mu.grid) {
    if (mu.grid != &g) throw precondition_error("difference_estimate: mu on another grid");
    std::vector<double> part(g.size(), 0.0);
    parallel_chunks(g.size(), [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        if (mu.node_mass[i] == 0.0) continue;
        part[i] = inner(g.position(i), fc[i]) * mu.node_mass[i];
      }
    });
    for (double v : part) lhs += v;
  }
  for (const auto& a : mu.atoms) lhs += inner(a.pos, f(a.pos)) * a.mass;

  double fn = std::pow(ap_norm(f, p, w, g), p);
  return lhs / (std::pow(r, p) * fn);
}

WeakLimitReport weak_limit_demo(const std::vector<DiscMeasure>& mu_seq, const Weight& w, double p,
                                const AnalyticFunction& f, const DiscGrid& g,
                                const std::optional<DiscMeasure>& reference,
                                const std::vector<AnalyticFunction>& family) {
  if (mu_seq.size() < 2) throw parameter_error("weak_limit_demo: need at least two measures");
  WeakLimitReport rep;

  // uniform Carleson-norm hypothesis
  double sup_norm = 0.0;
  for (const auto& mu : mu_seq) {
    CarlesonReport cr = carleson_norm(mu, w, 6, 32);
    sup_norm = std::max(sup_norm, cr.carleson_norm);
  }
  if (!std::isfinite(sup_norm))
    throw precondition_error("weak_limit_demo: Carleson norms are not uniformly finite");
  rep.sup_maximal_norm = sup_norm;

  // candidate limit
  DiscMeasure limit;
  if (reference) {
    limit = *reference;
  } else {
    limit.grid = &g;
    limit.node_mass.assign(g.size(), 0.0);
    std::size_t half = mu_seq.size() / 2;
    for (std::size_t n = half; n < mu_seq.size(); ++n) {
      if (!mu_seq[n].grid || mu_seq[n].grid != &g)
        throw precondition_error("weak_limit_demo: tail averaging needs grid measures");
      for (std::size_t i = 0; i < g.size(); ++i) limit.node_mass[i] += mu_seq[n].node_mass[i];
    }
    for (auto& v : limit.node_mass) v /= static_cast<double>(mu_seq.size() - half);
  }

  auto fp = [&](cplx z) { return std::pow(f.abs_at(z), p); };
  double limit_integral = limit.integral(fp);
  for (const auto& mu : mu_seq)
    rep.discrepancy.push_back(std::abs(mu.integral(fp) - limit_integral));

  // monotone decreasing from some index in the first half of the sequence
  std::size_t from = rep.discrepancy.size();
  for (std::size_t start = 0; start < rep.discrepancy.size(); ++start) {
    bool ok = true;
    for (std::size_t n = start; n + 1 < rep.discrepancy.size(); ++n)
      if (rep.discrepancy[n + 1] > rep.discrepancy[n] * (1.0 + 1e-9)) {
        ok = false;
        break;
      }
    if (ok) {
      from = start;
      break;
    }
  }
  rep.eventually_decreasing = from <= rep.discrepancy.size() / 2;

  if (!family.empty()) {
    double lim_const = 0.0;
    for (const auto& fam : family) {
      double norm_p = std::pow(ap_norm(fam, p, w, g), p);
      if (!(norm_p > 1e-280)) continue;
      lim_const = std::max(lim_const, limit.integral([&](cplx z) {
        return std::pow(fam.abs_at(z), p);
      }) / norm_p);
    }
    rep.limit_embedding_constant = lim_const;
    for (const auto& mu : mu_seq) {
      double c = 0.0;
      for (const auto& fam : family) {
        double norm_p = std::pow(ap_norm(fam, p, w, g), p);
        if (!(norm_p > 1e-280)) continue;
        c = std::max(c, mu.integral([&](cplx z) { return std::pow(fam.abs_at(z), p); }) / norm_p);
      }
      rep.embedding_constants.push_back(c);
    }
  }
  return rep;
}

}  // namespace bergman

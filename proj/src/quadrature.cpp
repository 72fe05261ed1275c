#include "bergman/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace bergman {

DiscGrid::DiscGrid(const GridSpec& spec) : spec_(spec) {
  if (spec.levels < 1) throw parameter_error("make_grid: levels must be >= 1");
  if (spec.angular_base < 8) throw parameter_error("make_grid: angular_base must be >= 8");
  if (spec.radial_subdiv < 1) throw parameter_error("make_grid: radial_subdiv must be >= 1");
  if (spec.inner_levels < 0) throw parameter_error("make_grid: inner_levels must be >= 0");

  auto push_ring = [&](double r_lo, double r_hi, int n_angles) {
    Ring ring;
    ring.r_lo = r_lo;
    ring.r_hi = r_hi;
    ring.u_lo = r_lo * r_lo;
    ring.u_hi = r_hi * r_hi;
    ring.n_angles = n_angles;
    ring.first = pos_.size();
    if (pos_.size() + n_angles > spec_.node_cap)
      throw resource_cap_error("make_grid: node cap exceeded");
    rings_.push_back(ring);
    double u_mid = 0.5 * (ring.u_lo + ring.u_hi);
    double r_node = std::sqrt(u_mid);
    double cell = (ring.u_hi - ring.u_lo) / n_angles;  // normalized cell measure
    double dth = kTwoPi / n_angles;
    int ring_idx = static_cast<int>(rings_.size()) - 1;
    for (int j = 0; j < n_angles; ++j) {
      double th = (j + 0.5) * dth;
      pos_.push_back(std::polar(r_node, th));
      area_.push_back(cell);
      ring_of_.push_back(ring_idx);
    }
    max_radius_ = std::max(max_radius_, r_node);
  };

  for (int k = 0; k <= spec.levels; ++k) {
    double lo = 1.0 - std::ldexp(1.0, -k);
    double hi = (k == spec.levels) ? 1.0 : 1.0 - std::ldexp(1.0, -(k + 1));
    int n_angles = spec.angular_base << std::min(k, 24);
    if (k == 0 && spec.inner_levels > 0) {
      // geometric rings toward the origin mirror the boundary refinement;
      // the fat outer ones get the same measure-uniform splitting as bands
      double prev = 0.0;
      for (int j = spec.inner_levels; j >= 1; --j) {
        double edge = std::ldexp(1.0, -j);
        int subdiv = std::max(1, spec.radial_subdiv >> (j - 1));
        double u_lo = prev * prev, u_hi = edge * edge;
        for (int s = 0; s < subdiv; ++s) {
          double a = u_lo + (u_hi - u_lo) * s / subdiv;
          double b = (s + 1 == subdiv) ? u_hi : u_lo + (u_hi - u_lo) * (s + 1) / subdiv;
          push_ring(std::sqrt(a), std::sqrt(b), n_angles);
        }
        prev = edge;
      }
    } else {
      int subdiv = std::max(1, spec.radial_subdiv >> k);
      double u_lo = lo * lo, u_hi = hi * hi;
      for (int s = 0; s < subdiv; ++s) {
        double a = u_lo + (u_hi - u_lo) * s / subdiv;
        double b = (s + 1 == subdiv) ? u_hi : u_lo + (u_hi - u_lo) * (s + 1) / subdiv;
        push_ring(std::sqrt(a), std::sqrt(b), n_angles);
      }
    }
  }
}

double DiscGrid::cell_theta_lo(std::size_t i) const {
  const Ring& r = rings_[ring_of_[i]];
  return (i - r.first) * r.dtheta();
}

double DiscGrid::cell_theta_hi(std::size_t i) const {
  const Ring& r = rings_[ring_of_[i]];
  return (i - r.first + 1) * r.dtheta();
}

DiscGrid make_grid(int levels, int angular_base) {
  GridSpec spec;
  spec.levels = levels;
  spec.angular_base = angular_base;
  return DiscGrid(spec);
}

DiscGrid make_grid(const GridSpec& spec) { return DiscGrid(spec); }

std::size_t GridSet::count() const {
  std::size_t c = 0;
  for (auto m : mask) c += (m != 0);
  return c;
}

bool Region::contains(cplx z) const {
  return std::visit(
      [&](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, WholeDisc>) {
          return std::norm(z) < 1.0;
        } else if constexpr (std::is_same_v<T, CarlesonSquare>) {
          return r.contains(z);
        } else if constexpr (std::is_same_v<T, PseudoDisc>) {
          return r.contains(z);
        } else if constexpr (std::is_same_v<T, Annulus>) {
          double s = std::abs(z);
          return s >= r.r_lo && s < r.r_hi;
        } else {
          throw precondition_error("Region::contains: grid-set regions are node masks");
        }
      },
      v_);
}

bool Region::clips_exactly() const {
  return std::holds_alternative<WholeDisc>(v_) || std::holds_alternative<Annulus>(v_) ||
         std::holds_alternative<CarlesonSquare>(v_);
}

Region::Clip Region::clip(double r_lo, double r_hi, double t_lo, double t_hi) const {
  Clip c{r_lo, r_hi, 1.0};
  if (std::holds_alternative<WholeDisc>(v_)) return c;
  if (const auto* a = std::get_if<Annulus>(&v_)) {
    c.r_lo = std::max(r_lo, a->r_lo);
    c.r_hi = std::min(r_hi, a->r_hi);
    if (!(c.r_lo < c.r_hi)) c.ang_frac = 0.0;
    return c;
  }
  const auto& s = std::get<CarlesonSquare>(v_);
  if (s.is_root) return c;
  c.r_lo = std::max(r_lo, s.r_lo);
  if (!(c.r_lo < c.r_hi)) {
    c.ang_frac = 0.0;
    return c;
  }
  // angular overlap of [t_lo, t_hi] with the square's window, on the circle
  double span = t_hi - t_lo;
  double center = 0.5 * (t_lo + t_hi);
  double d = angle_diff(center, s.anchor_angle());
  double lo = std::max(d - 0.5 * span, -s.half_angle);
  double hi = std::min(d + 0.5 * span, s.half_angle);
  c.ang_frac = hi > lo ? (hi - lo) / span : 0.0;
  return c;
}

double weight_cell_mass(const DiscGrid& g, const Weight& w, std::size_t i) {
  const auto& ring = g.rings()[g.ring_of(i)];
  if (w.is_radial())
    return (w.mass_tail(ring.r_lo) - w.mass_tail(ring.r_hi)) * ring.dtheta() / kPi;
  return w.density(g.position(i)) * g.cell_area(i);
}

namespace {

template <class Acc, class F>
Acc integrate_impl(const F& f, const Weight& w, const Region& region, const DiscGrid& g) {
  const bool radial = w.is_radial();
  const bool clip = region.clips_exactly();
  const GridSet* gs = nullptr;
  if (const auto* p = std::get_if<const GridSet*>(&region.raw())) {
    gs = *p;
    if (gs->grid != &g) throw precondition_error("integrate: grid-set belongs to another grid");
    if (gs->mask.size() != g.size()) throw precondition_error("integrate: mask size mismatch");
  }

  const auto& rings = g.rings();
  std::vector<Acc> ring_partial(rings.size(), Acc{});

  parallel_chunks(
      rings.size(),
      [&](std::size_t rb, std::size_t re) {
        for (std::size_t ri = rb; ri < re; ++ri) {
          const auto& ring = rings[ri];
          double mass_full = 0.0;  // weight mass of a full cell (radial case)
          if (radial)
            mass_full = (w.mass_tail(ring.r_lo) - w.mass_tail(ring.r_hi)) * ring.dtheta() / kPi;
          Acc acc{};
          for (int j = 0; j < ring.n_angles; ++j) {
            std::size_t i = ring.first + j;
            cplx z = g.position(i);
            double mass;
            if (clip) {
              auto c =
                  region.clip(ring.r_lo, ring.r_hi, j * ring.dtheta(), (j + 1) * ring.dtheta());
              if (c.ang_frac <= 0.0) continue;
              if (radial) {
                mass = (w.mass_tail(c.r_lo) - w.mass_tail(c.r_hi)) * ring.dtheta() * c.ang_frac /
                       kPi;
              } else {
                double cell =
                    (c.r_hi * c.r_hi - c.r_lo * c.r_lo) * ring.dtheta() * c.ang_frac / kTwoPi;
                mass = w.density(z) * cell;
              }
            } else {
              bool in = gs ? (gs->mask[i] != 0) : region.contains(z);
              if (!in) continue;
              mass = radial ? mass_full : w.density(z) * g.cell_area(i);
            }
            if (!std::isfinite(mass))
              throw numeric_guard_error("integrate: weight not finite near |z|=" +
                                        std::to_string(std::abs(z)));
            if (mass == 0.0) continue;
            Acc fv = f(z);
            bool finite;
            if constexpr (std::is_same_v<Acc, double>) {
              finite = std::isfinite(fv);
            } else {
              finite = std::isfinite(fv.real()) && std::isfinite(fv.imag());
            }
            if (!finite)
              throw numeric_guard_error("integrate: integrand not finite at node (" +
                                        std::to_string(z.real()) + ", " +
                                        std::to_string(z.imag()) + ")");
            acc += fv * mass;
          }
          ring_partial[ri] = acc;
        }
      },
      1);

  Acc total{};
  for (const Acc& p : ring_partial) total += p;
  return total;
}

}  // namespace

double integrate(const std::function<double(cplx)>& f, const Weight& w, const Region& region,
                 const DiscGrid& g) {
  return integrate_impl<double>(f, w, region, g);
}

cplx integrate_c(const std::function<cplx(cplx)>& f, const Weight& w, const Region& region,
                 const DiscGrid& g) {
  return integrate_impl<cplx>(f, w, region, g);
}

double lp_norm(const std::function<double(cplx)>& f, double p, const Weight& w,
               const DiscGrid& g) {
  if (!(p > 0.0)) throw parameter_error("lp_norm: p must be positive");
  double v = integrate([&](cplx z) { return std::pow(std::abs(f(z)), p); }, w, WholeDisc{}, g);
  return std::pow(v, 1.0 / p);
}

std::vector<double> pairwise_field(const DiscGrid& g, const std::vector<double>& coeff,
                                   const std::function<double(double, double, double)>& sym,
                                   const std::function<double(double)>& pre) {
  if (coeff.size() != g.size()) throw parameter_error("pairwise_field: coefficient size mismatch");
  if (g.size() > (1u << 16))
    throw resource_cap_error("pairwise_field: grid too large for an O(N^2) pass");
  const auto& rings = g.rings();
  std::size_t n_rings = rings.size();

  std::vector<double> rho(n_rings);
  for (std::size_t r = 0; r < n_rings; ++r) rho[r] = std::abs(g.position(rings[r].first));

  // Ordered ring pairs (a <= b); the kernel table of a pair serves both
  // directions because sym is even in the angle difference.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n_rings; ++a)
    for (std::size_t b = a; b < n_rings; ++b) pairs.emplace_back(a, b);

  // partial[p] = (contribution to ring a, contribution to ring b)
  std::vector<std::pair<std::vector<double>, std::vector<double>>> partial(pairs.size());

  parallel_chunks(
      pairs.size(),
      [&](std::size_t pb, std::size_t pe) {
        for (std::size_t pi = pb; pi < pe; ++pi) {
          auto [ra, rb] = pairs[pi];
          const auto& A = rings[ra];
          const auto& B = rings[rb];
          int na = A.n_angles, nb = B.n_angles;
          int n = std::max(na, nb);
          if (n % na != 0 || n % nb != 0)
            throw precondition_error("pairwise_field: ring lattices are not nested");
          int ma = n / na, mb = n / nb;
          double h = kTwoPi / n;
          double off = 0.5 * (static_cast<double>(mb) - static_cast<double>(ma));
          std::vector<double> tab(n);
          for (int t = 0; t < n; ++t) tab[t] = sym(rho[ra], rho[rb], (t + off) * h);

          std::vector<double> accA(na, 0.0);
          if (ra == rb) {
            for (int i = 0; i < na; ++i) {
              double s = 0.0;
              for (int j = 0; j < nb; ++j) {
                int t = (j - i) % n;
                if (t < 0) t += n;
                s += coeff[B.first + j] * tab[t];
              }
              accA[i] = s;
            }
            partial[pi].first = std::move(accA);
          } else {
            std::vector<double> accB(nb, 0.0);
            for (int i = 0; i < na; ++i) {
              double ci = coeff[A.first + i];
              double s = 0.0;
              int base_i = i * ma;
              for (int j = 0; j < nb; ++j) {
                int t = (j * mb - base_i) % n;
                if (t < 0) t += n;
                double k = tab[t];
                s += coeff[B.first + j] * k;
                accB[j] += ci * k;
              }
              accA[i] = s;
            }
            partial[pi].first = std::move(accA);
            partial[pi].second = std::move(accB);
          }
        }
      },
      1);

  // deterministic reduction in pair order
  std::vector<double> out(g.size(), 0.0);
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    auto [ra, rb] = pairs[pi];
    const auto& A = rings[ra];
    const auto& B = rings[rb];
    for (int i = 0; i < A.n_angles; ++i) out[A.first + i] += partial[pi].first[i];
    if (ra != rb)
      for (int j = 0; j < B.n_angles; ++j) out[B.first + j] += partial[pi].second[j];
  }
  for (std::size_t r = 0; r < n_rings; ++r) {
    double p = pre(rho[r]);
    for (int j = 0; j < rings[r].n_angles; ++j) out[rings[r].first + j] *= p;
  }
  return out;
}

}  // namespace bergman

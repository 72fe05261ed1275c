#include "bergman/weights.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>

#include "bergman/quadrature.hpp"

namespace bergman {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1].
constexpr double kGLx[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605, 0.4580167776572273863424194,
    0.6178762444026437484466718, 0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double kGLw[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637, 0.1691565193950025381893121,
    0.1495959888165767320815017, 0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

template <class F>
double gl16(const F& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 8; ++i) s += kGLw[i] * (f(c - h * kGLx[i]) + f(c + h * kGLx[i]));
  return s * h;
}

// Panel layout shared by all radial weights: [0, 1/2] in 8 equal panels, then
// each dyadic octave [1-2^{-j}, 1-2^{-j-1}] split in two, down to j = 40
// (deeper octaves approach ulp width, where evaluation points round across
// cell boundaries). Mass beyond the last edge is recovered by geometric
// extrapolation from the last two octaves.
const std::vector<double>& panel_edges() {
  static const std::vector<double> edges = [] {
    std::vector<double> e;
    for (int i = 0; i <= 8; ++i) e.push_back(0.5 * i / 8.0);
    for (int j = 1; j <= 40; ++j) {
      double lo = 1.0 - std::ldexp(1.0, -j);
      double hi = 1.0 - std::ldexp(1.0, -(j + 1));
      e.push_back(0.5 * (lo + hi));
      e.push_back(hi);
    }
    return e;
  }();
  return edges;
}

template <class F>
double geometric_remainder(const F& f) {
  // integral of f over (last_edge, 1), assuming dyadic-octave decay
  const auto& e = panel_edges();
  std::size_t n = e.size();
  double o2 = gl16(f, e[n - 3], e[n - 2]) + gl16(f, e[n - 2], e[n - 1]);
  double o1 = gl16(f, e[n - 5], e[n - 4]) + gl16(f, e[n - 4], e[n - 3]);
  if (!(o2 > 0.0) || !(o1 > 0.0)) return 0.0;
  double rho = o2 / o1;
  if (rho >= 0.9)
    throw numeric_guard_error("radial integrand does not appear integrable near the boundary");
  return o2 * rho / (1.0 - rho);
}

}  // namespace

double radial_panel_integral(const std::function<double(double)>& f, double a, double b) {
  const auto& e = panel_edges();
  bool to_one = b >= 1.0;
  double hi = to_one ? e.back() : std::min(b, e.back());
  double lo = std::max(0.0, a);
  double total = 0.0;
  if (hi > lo) {
    auto it = std::upper_bound(e.begin(), e.end(), lo);
    double left = lo;
    for (; it != e.end() && *it < hi; ++it) {
      total += gl16(f, left, *it);
      left = *it;
    }
    total += gl16(f, left, hi);
  }
  if (to_one) total += geometric_remainder(f);
  return total;
}

struct Weight::Impl {
  std::string name;
  bool radial = true;
  std::function<double(double)> profile;
  std::function<double(cplx)> density_fn;
  RadialClosedForms cf;
  // panel caches, built on first use so that pointwise-only densities (for
  // example the non-integrable dual weights) never require them
  mutable std::once_flag panels_once;
  mutable std::vector<double> w_suffix, ws_suffix;  // suffix sums of per-panel integrals
  mutable double w_rem = 0.0, ws_rem = 0.0;

  void ensure_panels() const {
    std::call_once(panels_once, [&] {
      const auto& e = panel_edges();
      std::size_t np = e.size() - 1;
      std::vector<double> wi(np), wsi(np);
      for (std::size_t p = 0; p < np; ++p) {
        wi[p] = gl16(profile, e[p], e[p + 1]);
        wsi[p] = gl16([&](double s) { return profile(s) * s; }, e[p], e[p + 1]);
      }
      w_suffix.assign(np + 1, 0.0);
      ws_suffix.assign(np + 1, 0.0);
      for (std::size_t p = np; p-- > 0;) {
        w_suffix[p] = w_suffix[p + 1] + wi[p];
        ws_suffix[p] = ws_suffix[p + 1] + wsi[p];
      }
      w_rem = geometric_remainder(profile);
      ws_rem = geometric_remainder([&](double s) { return profile(s) * s; });
    });
  }

  double tail(double r) const {
    if (cf.tail) return (*cf.tail)(r);
    ensure_panels();
    return panel_tail(r, profile, w_suffix, w_rem);
  }
  double mass_tail(double r) const {
    if (cf.mass_tail) return (*cf.mass_tail)(r);
    ensure_panels();
    auto sf = [this](double s) { return profile(s) * s; };
    return panel_tail(r, sf, ws_suffix, ws_rem);
  }

  template <class F>
  double panel_tail(double r, const F& f, const std::vector<double>& suffix, double rem) const {
    const auto& e = panel_edges();
    if (r >= e.back()) {
      double frac = (1.0 - r) / (1.0 - e.back());
      return rem * std::min(1.0, std::max(0.0, frac));
    }
    if (r <= 0.0) return suffix.front() + rem;
    auto it = std::upper_bound(e.begin(), e.end(), r);
    std::size_t pi = static_cast<std::size_t>(it - e.begin());  // r < e[pi]
    return gl16(f, r, e[pi]) + suffix[pi] + rem;
  }
};

Weight Weight::radial(std::string name, std::function<double(double)> profile,
                      RadialClosedForms cf) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->radial = true;
  impl->profile = std::move(profile);
  impl->cf = std::move(cf);
  for (int i = 0; i < 64; ++i) {
    double s = (i + 0.5) / 64.0;
    if (impl->profile(s) < 0.0)
      throw parameter_error("Weight: radial profile is negative at s=" + std::to_string(s));
  }
  Weight w;
  w.impl_ = std::move(impl);
  return w;
}

Weight Weight::general(std::string name, std::function<double(cplx)> density) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->radial = false;
  impl->density_fn = std::move(density);
  Weight w;
  w.impl_ = std::move(impl);
  return w;
}

bool Weight::is_radial() const { return impl_->radial; }
const std::string& Weight::name() const { return impl_->name; }

double Weight::density(cplx z) const {
  return impl_->radial ? impl_->profile(std::abs(z)) : impl_->density_fn(z);
}

double Weight::profile(double s) const {
  if (!impl_->radial) throw precondition_error("Weight::profile: weight is not radial");
  return impl_->profile(s);
}

double Weight::tail(double r) const {
  if (!impl_->radial) throw precondition_error("Weight::tail: weight is not radial");
  if (!(r >= 0.0 && r < 1.0)) throw parameter_error("Weight::tail: r must be in [0,1)");
  return impl_->tail(r);
}

double Weight::mass_tail(double r) const {
  if (!impl_->radial) throw precondition_error("Weight::mass_tail: weight is not radial");
  if (r >= 1.0) return 0.0;
  return impl_->mass_tail(std::max(0.0, r));
}

double Weight::log_tail(double r) const {
  if (!impl_->radial) throw precondition_error("Weight::log_tail: weight is not radial");
  if (impl_->cf.log_tail) return (*impl_->cf.log_tail)(r);
  double t = tail(r);
  if (!(t > 0.0))
    throw numeric_guard_error("Weight::log_tail: tail underflowed and no closed form is known");
  return std::log(t);
}

double Weight::moment(double x) const {
  if (!impl_->radial) throw precondition_error("Weight::moment: weight is not radial");
  if (!(x > -1.0)) throw parameter_error("Weight::moment: requires x > -1");
  if (impl_->cf.moment) return (*impl_->cf.moment)(x);
  const auto& prof = impl_->profile;
  return radial_panel_integral([&](double s) { return std::pow(s, x) * prof(s); }, 0.0, 1.0);
}

double Weight::on_square(const CarlesonSquare& s, const DiscGrid* grid) const {
  if (impl_->radial) {
    double ang = s.is_root ? kTwoPi : 2.0 * s.half_angle;
    return ang * mass_tail(s.r_lo) / kPi;
  }
  if (!grid)
    throw precondition_error("Weight::on_square: general weights need a grid for square masses");
  return integrate([](cplx) { return 1.0; }, *this, s, *grid);
}

namespace weights {

Weight catalog(const std::string& name) {
  auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
  if (name == "lebesgue") {
    Weight::RadialClosedForms cf;
    cf.tail = [](double r) { return 1.0 - r; };
    cf.mass_tail = [](double r) { return 0.5 * (1.0 - r * r); };
    cf.log_tail = [](double r) { return std::log1p(-r); };
    cf.moment = [](double x) { return 1.0 / (x + 1.0); };
    return Weight::radial("lebesgue", [](double) { return 1.0; }, std::move(cf));
  }
  if (starts("standard:")) {
    double a = std::stod(name.substr(9));
    if (!(a > -1.0)) throw parameter_error("standard weight needs alpha > -1");
    Weight::RadialClosedForms cf;
    cf.mass_tail = [a](double r) {
      return std::pow(1.0 - r * r, a + 1.0) / (2.0 * (a + 1.0));
    };
    return Weight::radial(
        name, [a](double s) { return std::pow(1.0 - s * s, a); }, std::move(cf));
  }
  if (starts("log-power:")) {
    double b = std::stod(name.substr(10));
    if (!(b > 1.0)) throw parameter_error("log-power weight needs beta > 1");
    Weight::RadialClosedForms cf;
    cf.tail = [b](double r) {
      return std::pow(1.0 - std::log1p(-r), 1.0 - b) / (b - 1.0);
    };
    cf.log_tail = [b](double r) {
      return (1.0 - b) * std::log(1.0 - std::log1p(-r)) - std::log(b - 1.0);
    };
    return Weight::radial(
        name,
        [b](double s) {
          return 1.0 / ((1.0 - s) * std::pow(1.0 - std::log1p(-s), b));
        },
        std::move(cf));
  }
  if (name == "exp-decay") {
    Weight::RadialClosedForms cf;
    // tail(r) = int_0^{1-r} exp(-1/v) dv; asymptotics exp(-1/x) x^2 (1 - 2x + 6x^2 - ...)
    auto log_tail = [](double r) {
      double x = 1.0 - r;
      if (x > 0.02) {
        double t = radial_panel_integral([](double s) { return std::exp(-1.0 / (1.0 - s)); }, r,
                                         1.0);
        return std::log(t);
      }
      double series = 0.0, term = 1.0;
      for (int k = 0; k < 40; ++k) {
        series += term;
        double next = term * (-(k + 2.0)) * x;
        if (std::abs(next) < 1e-18 || std::abs(next) >= std::abs(term)) break;
        term = next;
      }
      return -1.0 / x + 2.0 * std::log(x) + std::log(series);
    };
    cf.log_tail = log_tail;
    cf.tail = [log_tail](double r) { return std::exp(std::max(log_tail(r), -745.0)); };
    return Weight::radial(
        "exp-decay", [](double s) { return std::exp(-1.0 / (1.0 - s)); }, std::move(cf));
  }
  if (name == "vanishing-annuli") {
    // unit density on bands [1-2^{-k}, 1-2^{-k-1}) with even k, zero on odd bands
    auto band_of = [](double s) {
      if (s <= 0.0) return 0;
      return std::min(900, static_cast<int>(std::floor(-std::log2(1.0 - s))));
    };
    auto prof = [band_of](double s) { return band_of(s) % 2 == 0 ? 1.0 : 0.0; };
    Weight::RadialClosedForms cf;
    cf.tail = [band_of](double r) {
      int k = band_of(r);
      double total = 0.0;
      if (k % 2 == 0) total += std::max(0.0, (1.0 - std::ldexp(1.0, -(k + 1))) - r);
      for (int j = k % 2 == 0 ? k + 2 : k + 1; j <= 900; j += 2) {
        double width = std::ldexp(1.0, -(j + 1));
        if (width < 1e-300) break;
        total += width;
      }
      return total;
    };
    cf.mass_tail = [band_of](double r) {
      int k = band_of(r);
      double total = 0.0;
      auto seg = [](double a, double b) { return 0.5 * (b * b - a * a); };
      if (k % 2 == 0) {
        double hi = 1.0 - std::ldexp(1.0, -(k + 1));
        if (hi > r) total += seg(r, hi);
      }
      for (int j = k % 2 == 0 ? k + 2 : k + 1; j <= 900; j += 2) {
        double a = 1.0 - std::ldexp(1.0, -j), b = 1.0 - std::ldexp(1.0, -(j + 1));
        if (b - a < 1e-300) break;
        total += seg(a, b);
      }
      return total;
    };
    cf.moment = [](double x) {
      double total = 0.0;
      for (int j = 0; j <= 200; j += 2) {
        double a = 1.0 - std::ldexp(1.0, -j), b = 1.0 - std::ldexp(1.0, -(j + 1));
        double seg = (std::pow(b, x + 1.0) - std::pow(a, x + 1.0)) / (x + 1.0);
        total += seg;
        if (seg < 1e-18 * total && j > 4) break;
      }
      return total;
    };
    return Weight::radial("vanishing-annuli", prof, std::move(cf));
  }
  throw parameter_error(
      "unknown weight '" + name +
      "'; expected lebesgue, standard:<alpha>, log-power:<beta>, exp-decay, vanishing-annuli");
}

Weight power(double alpha) {
  if (!(alpha > -1.0)) throw parameter_error("power weight needs alpha > -1");
  Weight::RadialClosedForms cf;
  cf.tail = [alpha](double r) { return std::pow(1.0 - r, alpha + 1.0) / (alpha + 1.0); };
  cf.log_tail = [alpha](double r) {
    return (alpha + 1.0) * std::log1p(-r) - std::log(alpha + 1.0);
  };
  return Weight::radial("power:" + std::to_string(alpha),
                        [alpha](double s) { return std::pow(1.0 - s, alpha); }, std::move(cf));
}

Weight from_table(std::vector<std::pair<double, double>> samples, std::string name) {
  if (samples.size() < 2) throw parameter_error("user-table weight needs at least two samples");
  std::sort(samples.begin(), samples.end());
  for (auto& [r, v] : samples) {
    if (!(r >= 0.0 && r <= 1.0)) throw parameter_error("user-table: r out of [0,1]");
    if (!(v >= 0.0)) throw parameter_error("user-table: negative weight value");
  }
  // piecewise linear, constant extension on both ends
  auto eval = [samples](double s) {
    if (s <= samples.front().first) return samples.front().second;
    if (s >= samples.back().first) return samples.back().second;
    auto it = std::upper_bound(samples.begin(), samples.end(), std::make_pair(s, 1e300));
    auto [r1, v1] = *it;
    auto [r0, v0] = *(it - 1);
    double t = (s - r0) / (r1 - r0);
    return v0 + t * (v1 - v0);
  };
  // breakpoints 0, r_i, 1 with linear pieces; closed-form integrals
  auto pieces = [samples]() {
    std::vector<std::array<double, 4>> ps;  // a, b, c, d with w(s) = c + d s on [a,b]
    std::vector<std::pair<double, double>> pts = samples;
    if (pts.front().first > 0.0) pts.insert(pts.begin(), {0.0, pts.front().second});
    if (pts.back().first < 1.0) pts.push_back({1.0, pts.back().second});
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      auto [a, va] = pts[i];
      auto [b, vb] = pts[i + 1];
      if (b <= a) continue;
      double d = (vb - va) / (b - a);
      double c = va - d * a;
      ps.push_back({a, b, c, d});
    }
    return ps;
  }();
  Weight::RadialClosedForms cf;
  cf.tail = [pieces](double r) {
    double t = 0.0;
    for (const auto& [a, b, c, d] : pieces) {
      double lo = std::max(a, r);
      if (lo >= b) continue;
      t += c * (b - lo) + 0.5 * d * (b * b - lo * lo);
    }
    return t;
  };
  cf.mass_tail = [pieces](double r) {
    double t = 0.0;
    for (const auto& [a, b, c, d] : pieces) {
      double lo = std::max(a, r);
      if (lo >= b) continue;
      t += 0.5 * c * (b * b - lo * lo) + d * (b * b * b - lo * lo * lo) / 3.0;
    }
    return t;
  };
  cf.moment = [pieces](double x) {
    double t = 0.0;
    for (const auto& [a, b, c, d] : pieces) {
      t += c * (std::pow(b, x + 1.0) - std::pow(a, x + 1.0)) / (x + 1.0) +
           d * (std::pow(b, x + 2.0) - std::pow(a, x + 2.0)) / (x + 2.0);
    }
    return t;
  };
  return Weight::radial(std::move(name), eval, std::move(cf));
}

Weight from_table_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parameter_error("user-table: cannot open " + path);
  std::vector<std::pair<double, double>> samples;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double r, v;
    if (ls >> r >> v) samples.emplace_back(r, v);
  }
  return from_table(std::move(samples), "user-table");
}

}  // namespace weights

}  // namespace bergman

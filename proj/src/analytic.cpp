#include "bergman/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "bergman/geometry.hpp"

namespace bergman {

int total_multiplicity(const ZeroSequence& z) {
  int n = 0;
  for (const auto& e : z) n += e.mult;
  return n;
}

namespace {

cplx horner(const std::vector<cplx>& c, cplx z) {
  if (c.empty()) return cplx(0.0);
  cplx v = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) v = v * z + c[i];
  return v;
}

}  // namespace

cplx AnalyticFunction::operator()(cplx z) const {
  cplx v = horner(poly, z);
  if (poly_power != 1.0) {
    if (v == cplx(0.0)) {
      if (poly_power > 0.0) return cplx(0.0);
      throw numeric_guard_error("AnalyticFunction: negative power at a polynomial zero");
    }
    v = std::exp(poly_power * std::log(v));
  }
  for (const auto& e : blaschke) {
    cplx b = mobius(e.a, z);
    for (int m = 0; m < e.mult; ++m) v *= b;
  }
  if (!exp_poly.empty()) {
    cplx p = horner(exp_poly, z);
    if (std::abs(p.real()) > 700.0)
      throw numeric_guard_error("AnalyticFunction: exponential factor overflow");
    v *= std::exp(p);
  }
  return v;
}

AnalyticFunction AnalyticFunction::from_poly(std::vector<cplx> coeffs) {
  AnalyticFunction f;
  if (!coeffs.empty()) f.poly = std::move(coeffs);
  return f;
}

AnalyticFunction AnalyticFunction::from_zeros(ZeroSequence zeros) {
  AnalyticFunction f;
  f.blaschke = std::move(zeros);
  return f;
}

AnalyticFunction AnalyticFunction::with_zero(cplx a, int mult) const {
  AnalyticFunction f = *this;
  f.blaschke.push_back({a, mult});
  return f;
}

AnalyticFunction AnalyticFunction::with_exp(std::vector<cplx> p_coeffs) const {
  AnalyticFunction f = *this;
  f.exp_poly = std::move(p_coeffs);
  return f;
}

AnalyticFunction AnalyticFunction::scaled(cplx c) const {
  if (c == cplx(0.0)) throw parameter_error("scaled: zero scale");
  AnalyticFunction f = *this;
  if (f.exp_poly.empty()) f.exp_poly.push_back(cplx(0.0));
  f.exp_poly[0] += std::log(c);  // scale through the zero-free factor
  return f;
}

int AnalyticFunction::poly_degree() const {
  int d = static_cast<int>(poly.size()) - 1;
  while (d > 0 && poly[d] == cplx(0.0)) --d;
  return d;
}

ZeroSequence AnalyticFunction::zeros_in_disc() const {
  ZeroSequence z = blaschke;
  if (poly_degree() > 0) {
    if (poly_power != 1.0)
      throw precondition_error("zeros_in_disc: fractional polynomial powers must be zero-free");
    for (cplx r : poly_roots(poly))
      if (std::norm(r) < 1.0) z.push_back({r, 1});
  }
  return z;
}

AnalyticFunction AnalyticFunction::without_blaschke(const ZeroSequence& z) const {
  AnalyticFunction f = *this;
  for (const auto& e : z) {
    int remaining = e.mult;
    for (auto& own : f.blaschke) {
      if (std::abs(own.a - e.a) < 1e-12 && own.mult > 0) {
        int take = std::min(own.mult, remaining);
        own.mult -= take;
        remaining -= take;
        if (remaining == 0) break;
      }
    }
    if (remaining > 0)
      throw precondition_error("without_blaschke: zero sequence is not part of the function");
  }
  f.blaschke.erase(
      std::remove_if(f.blaschke.begin(), f.blaschke.end(), [](const ZeroEntry& e) { return e.mult == 0; }),
      f.blaschke.end());
  return f;
}

AnalyticFunction AnalyticFunction::power(double t) const {
  if (!blaschke.empty())
    throw precondition_error("AnalyticFunction::power: function must be zero-free");
  if (poly_degree() > 0) {
    for (cplx r : poly_roots(poly))
      if (std::norm(r) < 1.0)
        throw precondition_error("AnalyticFunction::power: polynomial has a zero in the disc");
  }
  AnalyticFunction f = *this;
  f.poly_power = poly_power * t;
  for (auto& c : f.exp_poly) c *= t;
  return f;
}

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
  std::vector<cplx> c = coeffs;
  while (c.size() > 1 && c.back() == cplx(0.0)) c.pop_back();
  int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return {};
  if (n > 64) throw resource_cap_error("poly_roots: degree cap (64) exceeded");
  cplx lead = c.back();
  for (auto& v : c) v /= lead;
  // Durand-Kerner from a slightly irrational spiral start
  std::vector<cplx> r(n);
  double radius = 1.0;
  for (int i = 0; i <= n; ++i) radius = std::max(radius, std::abs(c[i]));
  radius = 1.0 + radius;
  for (int i = 0; i < n; ++i) r[i] = std::polar(std::pow(radius, (i + 1.0) / n) * 0.5,
                                                0.4 + kTwoPi * i / n);
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx num = horner(c, r[i]);
      cplx den(1.0);
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (r[i] - r[j]);
      cplx d = num / den;
      r[i] -= d;
      shift = std::max(shift, std::abs(d));
    }
    if (shift < 1e-14) break;
  }
  return r;
}

double ap_norm(const AnalyticFunction& f, double p, const Weight& w, const DiscGrid& g) {
  return lp_norm([&](cplx z) { return f.abs_at(z); }, p, w, g);
}

double integral_mean(const AnalyticFunction& f, double p, double r, int n_angles) {
  if (!(r > 0.0 && r < 1.0)) throw parameter_error("integral_mean: r must be in (0,1)");
  if (n_angles < 1) throw parameter_error("integral_mean: need at least one angle");
  if (std::isinf(p)) {
    double m = 0.0;
    for (int j = 0; j < n_angles; ++j)
      m = std::max(m, f.abs_at(std::polar(r, kTwoPi * (j + 0.5) / n_angles)));
    return m;
  }
  if (!(p > 0.0)) throw parameter_error("integral_mean: p must be positive");
  double s = 0.0;
  for (int j = 0; j < n_angles; ++j)
    s += std::pow(f.abs_at(std::polar(r, kTwoPi * (j + 0.5) / n_angles)), p);
  return std::pow(s / n_angles, 1.0 / p);
}

std::pair<int, double> zero_counts(const AnalyticFunction& f, double r) {
  if (!(r > 0.0 && r < 1.0)) throw parameter_error("zero_counts: r must be in (0,1)");
  int n = 0;
  double big_n = 0.0;
  for (const auto& e : f.zeros_in_disc()) {
    double m = std::abs(e.a);
    if (m < r) {
      n += e.mult;
      big_n += (m == 0.0) ? e.mult * std::log(r) : e.mult * std::log(r / m);
    }
  }
  return {n, big_n};
}

double jensen_residual(const AnalyticFunction& f, double r, int n_angles) {
  if (!(r > 0.0 && r < 1.0)) throw parameter_error("jensen_residual: r must be in (0,1)");
  cplx f0 = f(cplx(0.0));
  if (f0 == cplx(0.0)) throw precondition_error("jensen_residual: f(0) must be nonzero");
  double lhs = std::log(std::abs(f0));
  for (const auto& e : f.zeros_in_disc()) {
    double m = std::abs(e.a);
    if (m < r) {
      if (m == 0.0) throw precondition_error("jensen_residual: f(0) must be nonzero");
      lhs += e.mult * std::log(r / m);
    }
    if (std::abs(m - r) < 1e-9)
      throw precondition_error("jensen_residual: zero on the integration circle");
  }
  double mean = 0.0;
  for (int j = 0; j < n_angles; ++j)
    mean += std::log(f.abs_at(std::polar(r, kTwoPi * (j + 0.5) / n_angles)));
  mean /= n_angles;
  return std::abs(lhs - mean);
}

double nontangential_max(const AnalyticFunction& f, cplx vertex, const DiscGrid& g) {
  double best = -1.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    cplx z = g.position(i);
    if (in_nontangential(vertex, z)) best = std::max(best, f.abs_at(z));
  }
  if (best < 0.0)
    throw numeric_guard_error("nontangential_max: no grid node in the region (grid too coarse)");
  return best;
}

std::vector<cplx> binomial_series(cplx a, double s, double radius, double tol, int max_degree) {
  if (!(std::abs(a) < 1.0)) throw parameter_error("binomial_series: |a| must be below 1");
  if (!(radius > 0.0 && radius < 1.0)) throw parameter_error("binomial_series: bad radius");
  double x = std::abs(a) * radius;
  std::vector<cplx> coeffs{cplx(1.0)};
  cplx ac = std::conj(a);
  cplx c(1.0);
  double mag = 1.0;
  for (int k = 1; k <= max_degree; ++k) {
    c *= ac * ((s + k - 1.0) / k);
    coeffs.push_back(c);
    mag = std::abs(c) * std::pow(radius, k);
    // crude geometric tail control once terms decay
    if (x < 1.0 && mag * x / (1.0 - x) < tol && k > 8) return coeffs;
  }
  throw resource_cap_error("binomial_series: tail did not reach tolerance within degree cap");
}

}  // namespace bergman

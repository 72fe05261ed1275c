#include "bergman/zero_sets.hpp"

#include <algorithm>
#include <cmath>

#include "bergman/geometry.hpp"

namespace bergman {

ZeroSetAux ZeroSetAux::from(ZeroSequence z) {
  ZeroSetAux aux;
  aux.z = std::move(z);
  aux.separation = 1.0;
  for (const auto& e : aux.z) {
    if (!(std::norm(e.a) < 1.0)) throw parameter_error("ZeroSetAux: zero outside the disc");
    if (e.mult < 1) throw parameter_error("ZeroSetAux: multiplicity must be positive");
    double m = std::abs(e.a);
    aux.blaschke2_sum += e.mult * (1.0 - m) * (1.0 - m);
    double t = 1.0 - m * m;
    aux.blaschke2sq_sum += e.mult * t * t;
    if (e.a == cplx(0.0)) aux.origin_multiplicity += e.mult;
  }
  for (std::size_t i = 0; i < aux.z.size(); ++i) {
    if (aux.z[i].mult > 1) aux.separation = 0.0;  // a repeated point is unseparated
    for (std::size_t j = i + 1; j < aux.z.size(); ++j)
      aux.separation = std::min(aux.separation, pseudo_dist(aux.z[i].a, aux.z[j].a));
  }
  return aux;
}

double k_Z(const ZeroSetAux& aux, cplx z) {
  double s = 0.0;
  for (const auto& e : aux.z) {
    double t = 1.0 - std::norm(e.a);
    s += e.mult * t * t / std::norm(1.0 - std::conj(e.a) * z);
  }
  return 0.5 * std::norm(z) * s;
}

double W_Z(const ZeroSetAux& aux, cplx z) {
  double k = k_Z(aux, z);
  if (k > 700.0) throw numeric_guard_error("W_Z: exponent overflow (k_Z > 700)");
  return std::exp(k);
}

cplx psi_Z(const ZeroSetAux& aux, cplx z) {
  cplx v(1.0);
  for (int m = 0; m < aux.origin_multiplicity; ++m) v *= z;
  for (const auto& e : aux.z) {
    if (e.a == cplx(0.0)) continue;
    cplx b = std::conj(e.a) * mobius(e.a, z);
    cplx factor = b * std::exp(1.0 - b);
    for (int m = 0; m < e.mult; ++m) v *= factor;
  }
  return v;
}

namespace {

std::function<double(cplx)> make_h(const AnalyticFunction& f, const ZeroSequence& z) {
  AnalyticFunction rem = f.without_blaschke(z);  // validates Z subset of Z(f)
  return [rem, z](cplx zz) {
    double expo = 0.0;
    for (const auto& e : z) {
      double t = 1.0 - std::norm(mobius(e.a, zz));
      expo += e.mult * 0.5 * t;
    }
    return std::abs(rem(zz)) * std::exp(-expo);
  };
}

}  // namespace

double h_compare(const AnalyticFunction& f, const ZeroSequence& z, cplx zz) {
  return make_h(f, z)(zz);
}

std::pair<double, double> h_norm_ratio(const AnalyticFunction& f, const ZeroSequence& z, double p,
                                      const Weight& w, const DiscGrid& g) {
  if (!(p > 0.0)) throw parameter_error("h_norm_ratio: p must be positive");
  auto h = make_h(f, z);
  double fn = std::pow(ap_norm(f, p, w, g), p);
  double hn = std::pow(lp_norm(h, p, w, g), p);
  return {fn / hn, hn / fn};
}

MajorantSearchResult harmonic_majorant_search(const ZeroSequence& z, double p, const Weight& w,
                                   int max_degree, const DiscGrid& g) {
  if (!(p > 0.0)) throw parameter_error("harmonic_majorant_search: p must be positive");
  if (max_degree < 0) throw parameter_error("harmonic_majorant_search: max_degree must be >= 0");
  ZeroSetAux aux = ZeroSetAux::from(z);

  // Candidates h = sum_{m=1..M} Re((c_m + i d_m) z^m), normalized by
  // h(0) = 0. A free constant would be a degenerate direction: e^{-c_0}
  // scales the integral to zero for any zero set, which would empty the
  // diagnostic of content.
  std::size_t n = g.size();
  std::vector<double> pk(n);
  std::vector<double> basis;  // node-major: Re z^m, Im z^m for m = 1..M
  int m_deg = max_degree;
  basis.resize(n * 2 * std::max(m_deg, 0));
  std::vector<double> mass(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx zz = g.position(i);
    pk[i] = p * k_Z(aux, zz);
    mass[i] = weight_cell_mass(g, w, i);
    cplx zp(1.0);
    for (int m = 1; m <= m_deg; ++m) {
      zp *= zz;
      basis[i * 2 * m_deg + 2 * (m - 1)] = zp.real();
      basis[i * 2 * m_deg + 2 * (m - 1) + 1] = -zp.imag();  // Re(i z^m) = -Im z^m
    }
  }

  int n_coeff = 2 * m_deg;
  std::vector<double> c(n_coeff, 0.0);
  auto objective = [&](const std::vector<double>& cc) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mass[i] == 0.0) continue;
      double h = 0.0;
      for (int t = 0; t < 2 * m_deg; ++t) h += cc[t] * basis[i * 2 * m_deg + t];
      double e = pk[i] - h;
      if (e > 700.0)
        throw numeric_guard_error("harmonic_majorant_search: integrand exceeds overflow threshold e^700");
      total += std::exp(e) * mass[i];
    }
    return total;
  };

  MajorantSearchResult res;
  double best = objective(c);
  std::vector<double> step(n_coeff, 0.25);
  int sweep = 0;
  for (; sweep < 200; ++sweep) {
    bool improved = false;
    for (int j = 0; j < n_coeff; ++j) {
      for (double sgn : {+1.0, -1.0}) {
        std::vector<double> trial = c;
        trial[j] += sgn * step[j];
        double v = objective(trial);
        if (v < best * (1.0 - 1e-12)) {
          best = v;
          c = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      bool any = false;
      for (auto& s : step) {
        s *= 0.5;
        if (s > 1e-6) any = true;
      }
      if (!any) break;
    }
  }
  res.best_value = best;
  res.coeffs = c;
  res.sweeps = sweep;
  return res;
}

PerturbReport perturb_check(const ZeroSequence& z, double gamma, const ZeroSequence& z_prime,
                            double p) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw parameter_error("perturb_check: gamma must be in (0,1)");
  if (z.size() != z_prime.size())
    throw parameter_error("perturb_check: sequences must have equal length");
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i].mult != z_prime[i].mult)
      throw parameter_error("perturb_check: multiplicity mismatch at index " + std::to_string(i));
  PerturbReport rep;
  for (std::size_t i = 0; i < z.size(); ++i) {
    double lhs = 1.0 - std::norm(z_prime[i].a);
    double rhs = gamma * (1.0 - std::norm(z[i].a));
    rep.max_radii_defect = std::max(rep.max_radii_defect, std::abs(lhs - rhs));
    rep.max_pseudo_dist = std::max(rep.max_pseudo_dist, pseudo_dist(z[i].a, z_prime[i].a));
  }
  rep.radii_condition = rep.max_radii_defect <= 1e-12;
  rep.separation_of_z = ZeroSetAux::from(z).separation;
  rep.target_exponent = p / gamma;
  return rep;
}

}  // namespace bergman

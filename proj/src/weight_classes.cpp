#include <algorithm>
#include <cmath>
#include <limits>

#include "bergman/quadrature.hpp"
#include "bergman/weights.hpp"

namespace bergman {

namespace {

double dyadic_r(int k) { return 1.0 - std::ldexp(1.0, -k); }

void finish_trend(TrendSeries& t) {
  t.constant = 0.0;
  for (double v : t.values)
    if (std::isfinite(v)) t.constant = std::max(t.constant, v);
  t.growing = false;
  std::size_t n = t.log_values.size();
  if (n >= 4) {
    double last = t.log_values[n - 1];
    double ref = t.log_values[n - 4];
    if (std::isfinite(last) && std::isfinite(ref)) t.growing = last - ref >= std::log(1.5);
  }
}

double saturate_exp(double lg) { return std::exp(std::min(lg, 690.0)); }

const Weight& lebesgue_measure() {
  static const Weight w = weights::catalog("lebesgue");
  return w;
}

}  // namespace

double bq_on_square(const Weight& w, double q, const CarlesonSquare& s, double r_cut,
                    const DiscGrid* grid) {
  if (!(q > 1.0)) throw parameter_error("bq_on_square: q must exceed 1");
  double qp = -1.0 / (q - 1.0);
  double area_e = kPi * s.area;  // Euclidean |S|
  double i1, i2;
  if (w.is_radial()) {
    double ang = (s.is_root ? kTwoPi : 2.0 * s.half_angle) / kPi;
    i1 = ang * radial_panel_integral(
                   [&](double t) { return w.profile(t) * std::pow(1.0 - t * t, 2.0 * q) * t; },
                   s.r_lo, 1.0);
    i2 = ang * radial_panel_integral([&](double t) { return std::pow(w.profile(t), qp) * t; },
                                     s.r_lo, r_cut);
  } else {
    if (!grid) throw precondition_error("bq_on_square: general weights require a grid");
    try {
      i1 = integrate([&](cplx z) { return std::pow(1.0 - std::norm(z), 2.0 * q); }, w, s, *grid);
      i2 = integrate(
          [&](cplx z) {
            if (std::abs(z) > r_cut) return 0.0;
            return std::pow(w.density(z), qp);
          },
          lebesgue_measure(), s, *grid);
    } catch (const numeric_guard_error&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  }
  if (!std::isfinite(i1) || !std::isfinite(i2)) return std::numeric_limits<double>::quiet_NaN();
  return (i1 / (area_e * area_e)) * std::pow(i2 / (area_e * area_e), q - 1.0);
}

WeightClassReport class_report(const Weight& w, const std::vector<double>& qs, int depth,
                               const DiscGrid& grid, int angular_base) {
  if (depth < 4) throw parameter_error("class_report: depth must be >= 4");
  WeightClassReport rep;

  const bool radial = w.is_radial();

  // D-hat doubling: on the dyadic lattice (1 + r_k)/2 = r_{k+1}, so the
  // doubling ratios are consecutive tail ratios. The depth-k entry is the
  // running maximum (the constant estimate at that resolution); oscillating
  // but bounded ratios then read as bounded.
  if (radial) {
    double run = -1e300;
    for (int k = 0; k <= depth; ++k) {
      double lg = w.log_tail(dyadic_r(k)) - w.log_tail(dyadic_r(k + 1));
      run = std::max(run, lg);
      rep.dhat.levels.push_back(k);
      rep.dhat.log_values.push_back(run);
      rep.dhat.values.push_back(saturate_exp(run));
    }
    finish_trend(rep.dhat);
  } else {
    rep.dhat.applicable = false;
  }

  // Reverse doubling witness (the D-check class): look for K with
  // tail(r) >= C tail(1 - (1-r)/K), C > 1, on the lattice.
  if (radial) {
    for (double K : {2.0, 4.0, 8.0, 16.0, 32.0}) {
      double c = 1e300;
      for (int k = 0; k <= depth; ++k) {
        double r = dyadic_r(k);
        double lg = w.log_tail(r) - w.log_tail(1.0 - (1.0 - r) / K);
        c = std::min(c, std::exp(std::min(lg, 690.0)));
      }
      if (c > 1.02) {
        rep.dcheck_witness = std::make_pair(K, c);
        break;
      }
    }
  }

  // B_q over the dyadic square family. The depth-d entry is the running
  // supremum over squares at levels k <= d with negative-power integrands
  // truncated at the depth's resolution radius 1 - 2^{-(d+6)}: a divergent
  // dual integral then shows up as growth across depths, a convergent one
  // stabilizes. For radial weights every level-k square carries the same
  // value; general weights sample a capped number of anchor angles.
  for (double q : qs) {
    TrendSeries t;
    for (int d = 2; d <= depth; ++d) {
      double r_cut = 1.0 - std::ldexp(1.0, -(d + 6));
      double best = 0.0;
      bool bad = false;
      for (int k = 2; k <= d && !bad; ++k) {
        int n_angles = radial ? 1 : std::min(angular_base << k, 4 * angular_base);
        for (int j = 0; j < n_angles; ++j) {
          cplx a = std::polar(dyadic_r(k), kTwoPi * j / n_angles);
          double v = bq_on_square(w, q, carleson_square(a), r_cut, &grid);
          if (std::isnan(v)) {
            bad = true;
            break;
          }
          best = std::max(best, v);
        }
      }
      if (bad || !(best > 0.0)) {
        t.applicable = false;
        break;
      }
      t.levels.push_back(d);
      t.values.push_back(best);
      t.log_values.push_back(std::log(best));
    }
    if (t.applicable) finish_trend(t);
    rep.bq.emplace(q, std::move(t));
  }

  // C_q at r = cq_radius via grid quadrature over pseudohyperbolic discs.
  int cq_depth = std::min(depth, grid.spec().levels - 2);
  for (double q : qs) {
    double qp = q / (q - 1.0);
    double best = 0.0;
    bool bad = false;
    for (int k = 1; k <= cq_depth && !bad; ++k) {
      cplx z = std::polar(dyadic_r(k), 0.0);
      PseudoDisc d = pseudo_disc(z, rep.cq_radius);
      double m1, m2;
      try {
        m1 = integrate([](cplx) { return 1.0; }, w, d, grid);
        m2 = integrate([&](cplx zz) { return std::pow(w.density(zz), -qp / q - 1.0); }, w, d,
                       grid);
      } catch (const numeric_guard_error&) {
        bad = true;
        break;
      }
      if (!std::isfinite(m1) || !std::isfinite(m2) || !(m1 > 0.0)) {
        bad = true;
        break;
      }
      double euc = kPi * d.euclidean_radius * d.euclidean_radius;  // |Delta| Euclidean
      double v = std::pow(m1, 1.0 / q) * std::pow(m2, 1.0 / qp) / euc;
      best = std::max(best, v);
    }
    rep.cq.emplace(q, bad ? std::numeric_limits<double>::quiet_NaN() : best);
  }

  // Non-radial doubling over squares (D-hat(D)).
  {
    double best = 0.0;
    for (int k = 1; k <= depth; ++k) {
      int n_angles = radial ? 1 : std::min(angular_base << k, 4 * angular_base);
      for (int j = 0; j < n_angles; ++j) {
        double th = kTwoPi * j / n_angles;
        cplx a = std::polar(dyadic_r(k), th);
        cplx a2 = std::polar(dyadic_r(k + 1), th);
        double num, den;
        if (radial) {
          num = 2.0 * w.mass_tail(dyadic_r(k));
          den = w.mass_tail(dyadic_r(k + 1));
        } else {
          num = w.on_square(carleson_square(a), &grid);
          den = w.on_square(carleson_square(a2), &grid);
        }
        if (den > 0.0) best = std::max(best, num / den);
      }
    }
    rep.dhatD_constant = best;
  }

  // Tail-envelope witnesses: beta from a log-log fit of the tail, C_beta as the
  // exact lattice maximum, gamma = beta + 1 with its lattice constant.
  if (radial) {
    std::vector<double> xs, ys;
    for (int k = 2; k <= depth; ++k) {
      double r = dyadic_r(k);
      xs.push_back(std::log1p(-r));
      ys.push_back(w.log_tail(r));
    }
    double n = xs.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    double beta = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    beta = std::max(beta, 1e-6);
    rep.tail_envelope.beta = beta;
    double c_beta = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i; j < xs.size(); ++j) {
        // r_i <= r_j: tail(r_i) <= C ((1-r_i)/(1-r_j))^beta tail(r_j)
        double lg = ys[i] - ys[j] - beta * (xs[i] - xs[j]);
        c_beta = std::max(c_beta, saturate_exp(lg));
      }
    rep.tail_envelope.c_beta = c_beta;
    double gamma = beta + 1.0;
    rep.tail_envelope.gamma = gamma;
    double c_gamma = 0.0;
    for (int k = 2; k <= depth; ++k) {
      double t = dyadic_r(k);
      double lt = w.log_tail(t);
      if (lt < -640.0) break;  // deeper levels underflow the ratio
      double num = radial_panel_integral(
          [&](double s) { return w.profile(s) * std::pow((1.0 - t) / (1.0 - s), gamma); }, 0.0,
          t);
      c_gamma = std::max(c_gamma, num / std::exp(lt));
    }
    rep.tail_envelope.c_gamma = c_gamma;
  }

  return rep;
}

Weight dual_weight(const Weight& w, double q) {
  if (!(q > 1.0)) throw parameter_error("dual_weight: q must exceed 1");
  double qp = q / (q - 1.0);
  if (w.is_radial()) {
    Weight base = w;
    return Weight::radial(
        "dual[" + w.name() + ",q=" + std::to_string(q) + "]", [base, q, qp](double s) {
          double v = base.profile(s);
          if (!(v > 0.0)) throw numeric_guard_error("dual_weight: weight vanishes at s=" +
                                                    std::to_string(s));
          double u = 1.0 - s * s;
          return std::pow(std::pow(v, 1.0 / q) * u * u, -qp);
        });
  }
  Weight base = w;
  return Weight::general("dual[" + w.name() + "]", [base, q, qp](cplx z) {
    double v = base.density(z);
    if (!(v > 0.0)) throw numeric_guard_error("dual_weight: weight vanishes at a node");
    double u = 1.0 - std::norm(z);
    return std::pow(std::pow(v, 1.0 / q) * u * u, -qp);
  });
}

std::vector<DhatDRatio> dhatD_integral_check(const Weight& w, double eta,
                                             const std::vector<cplx>& anchors,
                                             const DiscGrid& grid) {
  if (!(eta > 0.0)) throw parameter_error("dhatD_integral_check: eta must be positive");
  std::vector<DhatDRatio> out;
  for (cplx a : anchors) {
    DhatDRatio r;
    r.a = a;
    if (std::abs(a) == 0.0 || !(std::abs(a) < 1.0)) {
      out.push_back(r);
      continue;
    }
    double den = w.on_square(carleson_square(a), &grid);
    if (!(den > 0.0)) {
      out.push_back(r);
      continue;
    }
    cplx ac = std::conj(a);
    double lhs = integrate(
        [&](cplx z) { return std::pow(std::abs(1.0 - ac * z), -eta); }, w, WholeDisc{}, grid);
    r.ratio = lhs * std::pow(1.0 - std::abs(a), eta) / den;
    r.ok = true;
    out.push_back(r);
  }
  return out;
}

}  // namespace bergman

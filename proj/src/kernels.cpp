#include "bergman/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace bergman {

KernelEvaluator::KernelEvaluator(const Weight& w, int n_max, double tail_tol, double delta_guard)
    : weight_(w), tail_tol_(tail_tol), delta_guard_(delta_guard) {
  if (!w.is_radial()) throw precondition_error("KernelEvaluator: weight must be radial");
  if (n_max < 8) throw parameter_error("KernelEvaluator: n_max too small");
  if (!(delta_guard > 0.0 && delta_guard < 1.0))
    throw parameter_error("KernelEvaluator: delta_guard must be in (0,1)");
  moments_.resize(n_max + 1);
  coeff_.resize(n_max + 1);
  parallel_chunks(static_cast<std::size_t>(n_max) + 1, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t n = lo; n < hi; ++n) moments_[n] = weight_.moment(2.0 * n + 1.0);
  });
  for (int n = 0; n <= n_max; ++n) {
    if (!(moments_[n] > 0.0))
      throw numeric_guard_error("KernelEvaluator: vanishing odd moment at n=" + std::to_string(n));
    if (n > 0 && moments_[n] > moments_[n - 1] * (1.0 + 1e-12))
      throw numeric_guard_error("KernelEvaluator: moment table is not nonincreasing");
    coeff_[n] = 0.5 / moments_[n];
  }
}

KernelEvaluator::Eval KernelEvaluator::sum_series(cplx w) const {
  double x = std::abs(w);
  if (x > 1.0 - delta_guard_) {
    int need = static_cast<int>(std::log(tail_tol_ * (1.0 - x) / coeff_.back()) / std::log(x));
    throw numeric_guard_error(
        "kernel: |z||zeta| = " + std::to_string(x) + " exceeds the diagonal guard " +
        std::to_string(1.0 - delta_guard_) + "; roughly " + std::to_string(std::max(need, 0)) +
        " terms would be needed");
  }
  cplx sum(0.0);
  cplx wp(1.0);
  int n = 0;
  int n_max = static_cast<int>(coeff_.size()) - 1;
  double tail = 0.0;
  for (;; ++n) {
    double t = coeff_[n] * std::abs(wp);
    sum += coeff_[n] * wp;
    if (n >= 8) {
      // local growth rate of the coefficients bounds the remaining tail
      int lb = std::max(0, n - 8);
      double rho = 0.0;
      for (int k = lb; k < n; ++k) rho = std::max(rho, coeff_[k + 1] / coeff_[k]);
      double q = rho * x;
      if (q < 1.0) {
        tail = t * q / (1.0 - q);
        double scale = std::max(1.0, std::abs(sum));
        if (tail <= tail_tol_ * scale) {
          ++n;
          break;
        }
      }
    }
    if (n == n_max) {
      throw numeric_guard_error("kernel: series cap " + std::to_string(n_max) +
                                " reached before the tail bound met the tolerance");
    }
    wp *= w;
  }
  return {sum, tail, n};
}

KernelEvaluator::Eval KernelEvaluator::eval_detail(cplx z, cplx zeta) const {
  return sum_series(std::conj(z) * zeta);
}

double KernelEvaluator::norm_sq(cplx z) const { return sum_series(std::norm(z)).value.real(); }

double KernelEvaluator::comparison_ratio(cplx z) const {
  double r = std::abs(z);
  return norm_sq(z) * weight_.tail(r) * (1.0 - r);
}

double KernelEvaluator::abs2(cplx w) const { return std::norm(sum_series(w).value); }

double KernelEvaluator::series_real(double x) const { return sum_series(cplx(x)).value.real(); }

double normalized_kernel(const KernelEvaluator& k, cplx z, cplx zeta) {
  return std::norm(k(z, zeta)) / k.norm_sq(z);
}

double apply_R(const std::function<double(cplx)>& f, cplx z, const DiscGrid& g) {
  double pre = 1.0 - std::norm(z);
  pre *= pre;
  cplx zc = std::conj(z);
  static const Weight lebesgue = weights::catalog("lebesgue");
  return integrate(
      [&](cplx w) {
        double d = std::norm(1.0 - zc * w);
        return f(w) * pre / (d * d);
      },
      lebesgue, WholeDisc{}, g);
}

double apply_Pplus(double alpha, const std::function<double(cplx)>& f, cplx z,
                   const DiscGrid& g) {
  if (!(alpha > -1.0)) throw parameter_error("apply_Pplus: alpha must exceed -1");
  static const Weight lebesgue = weights::catalog("lebesgue");
  return integrate(
      [&](cplx w) {
        double m = std::abs(1.0 - z * std::conj(w));
        return f(w) * std::pow(1.0 - std::norm(w), alpha) / std::pow(m, 2.0 + alpha);
      },
      lebesgue, WholeDisc{}, g);
}

double step_radial_ratio(const Weight& w, const AnalyticFunction& f, double p, double q,
                         const DiscGrid& g) {
  if (!(q > std::max(p, 1.0))) throw parameter_error("step_radial_ratio: need q > max(p, 1)");
  if (g.size() > (1u << 16))
    throw resource_cap_error("step_radial_ratio: grid too large for the double integral");

  // inner integral R(|f|^{p/q})(z) via the ring-pair engine, then the outer
  // w-integral of its q-th power
  std::vector<double> coeff(g.size());
  double s = p / q;
  static const Weight lebesgue = weights::catalog("lebesgue");
  for (std::size_t i = 0; i < g.size(); ++i)
    coeff[i] = std::pow(f.abs_at(g.position(i)), s) * weight_cell_mass(g, lebesgue, i);
  auto sym = [](double ra, double rb, double dth) {
    double d = 1.0 + ra * ra * rb * rb - 2.0 * ra * rb * std::cos(dth);
    return 1.0 / (d * d);
  };
  auto pre = [](double r) {
    double t = 1.0 - r * r;
    return t * t;
  };
  std::vector<double> inner = pairwise_field(g, coeff, sym, pre);

  double lhs = 0.0;
  {
    std::vector<double> ring_partial(g.rings().size(), 0.0);
    const auto& rings = g.rings();
    for (std::size_t ri = 0; ri < rings.size(); ++ri) {
      double acc = 0.0;
      for (int j = 0; j < rings[ri].n_angles; ++j) {
        std::size_t i = rings[ri].first + j;
        acc += std::pow(inner[i], q) * weight_cell_mass(g, w, i);
      }
      ring_partial[ri] = acc;
    }
    for (double v : ring_partial) lhs += v;
  }
  double fnorm = ap_norm(f, p, w, g);
  return lhs / std::pow(fnorm, p);
}

double pointwise_estimate_ratio(const KernelEvaluator& k, const AnalyticFunction& f, double q,
                                cplx z, const DiscGrid& g) {
  if (!(q > 0.0)) throw parameter_error("pointwise_estimate_ratio: q must be positive");
  double bzz = k.norm_sq(z);
  double denom = integrate(
      [&](cplx zeta) {
        return std::pow(f.abs_at(zeta), q) * std::norm(k(z, zeta));
      },
      k.weight(), WholeDisc{}, g);
  denom /= bzz;
  double num = std::pow(f.abs_at(z), q);
  if (num == 0.0) return 0.0;
  if (denom < 1e-280)
    throw numeric_guard_error("pointwise_estimate_ratio: denominator below the noise floor");
  return num / denom;
}

}  // namespace bergman

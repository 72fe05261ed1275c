#pragma once

#include "bergman/analytic.hpp"

namespace bergman::corpus {

inline DiscGrid& norm_grid() {
  static DiscGrid g = [] {
    GridSpec s;
    s.levels = 12;
    s.angular_base = 64;
    s.radial_subdiv = 32;
    s.inner_levels = 12;
    return make_grid(s);
  }();
  return g;
}

inline DiscGrid& coarse_grid() {
  static DiscGrid g = [] {
    GridSpec s;
    s.levels = 6;
    s.angular_base = 32;
    s.radial_subdiv = 8;
    s.inner_levels = 12;
    return make_grid(s);
  }();
  return g;
}

// ten functions, each with one designated zero of modest modulus; the extras
// (zero-free polynomial and exponential factors, or further zeros outside
// the designated set) vary across the corpus
struct Entry {
  AnalyticFunction f;
  ZeroSequence designated;
};

inline std::vector<Entry> comparison_corpus() {
  using C = cplx;
  std::vector<Entry> out;
  auto zf = [](C a) { return AnalyticFunction::from_zeros({{a, 1}}); };
  out.push_back({zf(C(0.5)), {{C(0.5), 1}}});
  out.push_back({zf(C(0.3)), {{C(0.3), 1}}});
  out.push_back({zf(C(0.0, -0.4)), {{C(0.0, -0.4), 1}}});
  out.push_back({zf(C(0.2, 0.3)), {{C(0.2, 0.3), 1}}});
  out.push_back({zf(C(0.0)), {{C(0.0), 1}}});  // f = phi_0 = -z
  {
    AnalyticFunction f = zf(C(0.6));
    f.poly = {C(1.0), C(0.3)};
    out.push_back({f, {{C(0.6), 1}}});
  }
  {
    AnalyticFunction f = zf(C(0.35));
    f.exp_poly = {C(0.0), C(0.4)};
    out.push_back({f, {{C(0.35), 1}}});
  }
  {
    AnalyticFunction f = AnalyticFunction::from_zeros({{C(0.5), 1}, {C(-0.5), 1}});
    out.push_back({f, {{C(0.5), 1}}});  // designated sub-sequence
  }
  {
    AnalyticFunction f = zf(C(0.0, 0.25));
    f.poly = {C(1.0), C(-0.2), C(0.1)};
    out.push_back({f, {{C(0.0, 0.25), 1}}});
  }
  {
    AnalyticFunction f = zf(C(0.45));
    f.exp_poly = {C(0.0), C(-0.3), C(0.2)};
    out.push_back({f, {{C(0.45), 1}}});
  }
  return out;
}

// functions with <= 6 zeros for the factorization studies
inline std::vector<AnalyticFunction> factorization_corpus() {
  using C = cplx;
  std::vector<AnalyticFunction> out;
  out.push_back(AnalyticFunction{}.with_exp({C(0.0), C(0.5)}));  // zero-free
  out.push_back(AnalyticFunction::from_zeros({{C(0.5), 1}}));
  out.push_back(AnalyticFunction::from_zeros({{C(0.3), 1}, {C(0.0, -0.4), 1}}));
  out.push_back(AnalyticFunction::from_zeros({{C(0.2), 1}, {C(0.0, 0.4), 1}, {C(-0.3), 1}}));
  out.push_back(AnalyticFunction::from_zeros({{C(0.3), 2}, {C(-0.2, 0.2), 1}}));
  {
    AnalyticFunction f = AnalyticFunction::from_zeros(
        {{C(0.4), 1}, {C(-0.35), 1}, {C(0.0, 0.3), 2}, {C(0.25, -0.25), 2}});
    f.poly = {C(1.0), C(0.2)};
    f.exp_poly = {C(0.1), C(-0.2)};
    out.push_back(f);
  }
  return out;
}

}  // namespace bergman::corpus

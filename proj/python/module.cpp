// Python bindings for the main operations of the laboratory.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bergman/dominating.hpp"
#include "bergman/factorization.hpp"
#include "bergman/kernels.hpp"
#include "bergman/sampling.hpp"
#include "bergman/zero_sets.hpp"

namespace py = pybind11;
using namespace bergman;

namespace {

ZeroSequence to_zeros(const std::vector<std::pair<cplx, int>>& zs) {
  ZeroSequence out;
  for (auto& [a, m] : zs) out.push_back({a, m});
  return out;
}

AnalyticFunction build_function(const std::vector<cplx>& poly,
                                const std::vector<std::pair<cplx, int>>& zeros,
                                const std::vector<cplx>& exp_poly) {
  AnalyticFunction f;
  if (!poly.empty()) f.poly = poly;
  f.blaschke = to_zeros(zeros);
  f.exp_poly = exp_poly;
  return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "numerical laboratory for weighted Bergman spaces on the unit disc";

  py::register_exception<parameter_error>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<numeric_guard_error>(m, "NumericGuardError", PyExc_ArithmeticError);
  py::register_exception<resource_cap_error>(m, "ResourceCapError", PyExc_RuntimeError);

  // geometry
  m.def("mobius", &mobius, py::arg("a"), py::arg("z"));
  m.def("pseudo_dist", &pseudo_dist, py::arg("z"), py::arg("w"));
  m.def("in_nontangential", &in_nontangential, py::arg("vertex"), py::arg("z"));

  py::class_<CarlesonSquare>(m, "CarlesonSquare")
      .def_readonly("anchor", &CarlesonSquare::anchor)
      .def_readonly("r_lo", &CarlesonSquare::r_lo)
      .def_readonly("half_angle", &CarlesonSquare::half_angle)
      .def_readonly("area", &CarlesonSquare::area)
      .def_readonly("is_root", &CarlesonSquare::is_root)
      .def("contains", &CarlesonSquare::contains);
  m.def("carleson_square", &carleson_square, py::arg("a"));

  py::class_<PseudoDisc>(m, "PseudoDisc")
      .def_readonly("hyperbolic_center", &PseudoDisc::hyperbolic_center)
      .def_readonly("radius", &PseudoDisc::radius)
      .def_readonly("euclidean_center", &PseudoDisc::euclidean_center)
      .def_readonly("euclidean_radius", &PseudoDisc::euclidean_radius)
      .def("contains", &PseudoDisc::contains);
  m.def("pseudo_disc", &pseudo_disc, py::arg("z"), py::arg("r"));

  // quadrature
  py::class_<DiscGrid, std::shared_ptr<DiscGrid>>(m, "DiscGrid")
      .def(py::init([](int levels, int angular_base, int radial_subdiv, int inner_levels) {
             GridSpec s;
             s.levels = levels;
             s.angular_base = angular_base;
             s.radial_subdiv = radial_subdiv;
             s.inner_levels = inner_levels;
             return std::make_shared<DiscGrid>(s);
           }),
           py::arg("levels") = 12, py::arg("angular_base") = 64, py::arg("radial_subdiv") = 16,
           py::arg("inner_levels") = 12)
      .def("__len__", &DiscGrid::size)
      .def("position", &DiscGrid::position)
      .def("cell_area", &DiscGrid::cell_area)
      .def_property_readonly("max_radius", &DiscGrid::max_radius);

  // weights
  py::class_<Weight>(m, "Weight")
      .def_property_readonly("name", &Weight::name)
      .def_property_readonly("is_radial", &Weight::is_radial)
      .def("density", &Weight::density)
      .def("tail", &Weight::tail)
      .def("mass_tail", &Weight::mass_tail)
      .def("log_tail", &Weight::log_tail)
      .def("moment", &Weight::moment);
  m.def("weight", &weights::catalog, py::arg("name"));
  m.def("power_weight", &weights::power, py::arg("alpha"));
  m.def("table_weight", [](std::vector<std::pair<double, double>> samples) {
    return weights::from_table(std::move(samples));
  });
  m.def("dual_weight", &dual_weight, py::arg("w"), py::arg("q"));

  m.def(
      "integrate",
      [](const std::function<double(cplx)>& f, const Weight& w, const DiscGrid& g) {
        return integrate(f, w, WholeDisc{}, g);
      },
      py::arg("f"), py::arg("weight"), py::arg("grid"));
  m.def(
      "lp_norm",
      [](const std::function<double(cplx)>& f, double p, const Weight& w, const DiscGrid& g) {
        return lp_norm(f, p, w, g);
      },
      py::arg("f"), py::arg("p"), py::arg("weight"), py::arg("grid"));

  py::class_<TrendSeries>(m, "TrendSeries")
      .def_readonly("levels", &TrendSeries::levels)
      .def_readonly("values", &TrendSeries::values)
      .def_readonly("log_values", &TrendSeries::log_values)
      .def_readonly("constant", &TrendSeries::constant)
      .def_readonly("growing", &TrendSeries::growing)
      .def_readonly("applicable", &TrendSeries::applicable);
  py::class_<WeightClassReport>(m, "WeightClassReport")
      .def_readonly("dhat", &WeightClassReport::dhat)
      .def_readonly("bq", &WeightClassReport::bq)
      .def_readonly("cq", &WeightClassReport::cq)
      .def_readonly("dhatD_constant", &WeightClassReport::dhatD_constant)
      .def_property_readonly("tail_envelope", [](const WeightClassReport& r) {
        return py::make_tuple(r.tail_envelope.beta, r.tail_envelope.c_beta, r.tail_envelope.gamma, r.tail_envelope.c_gamma);
      });
  m.def("class_report", &class_report, py::arg("weight"), py::arg("qs"), py::arg("depth"),
        py::arg("grid"), py::arg("angular_base") = 64);

  // analytic functions
  py::class_<AnalyticFunction>(m, "AnalyticFunction")
      .def(py::init(&build_function), py::arg("poly") = std::vector<cplx>{cplx(1.0)},
           py::arg("zeros") = std::vector<std::pair<cplx, int>>{},
           py::arg("exp_poly") = std::vector<cplx>{})
      .def("__call__", [](const AnalyticFunction& f, cplx z) { return f(z); })
      .def("zeros_in_disc",
           [](const AnalyticFunction& f) {
             std::vector<std::pair<cplx, int>> out;
             for (const auto& e : f.zeros_in_disc()) out.emplace_back(e.a, e.mult);
             return out;
           })
      .def_readonly("poly", &AnalyticFunction::poly)
      .def_readonly("poly_power", &AnalyticFunction::poly_power)
      .def_readonly("exp_poly", &AnalyticFunction::exp_poly);

  m.def("ap_norm", &ap_norm, py::arg("f"), py::arg("p"), py::arg("weight"), py::arg("grid"));
  m.def("integral_mean", &integral_mean, py::arg("f"), py::arg("p"), py::arg("r"),
        py::arg("n_angles"));
  m.def("zero_counts", &zero_counts, py::arg("f"), py::arg("r"));
  m.def("jensen_residual", &jensen_residual, py::arg("f"), py::arg("r"), py::arg("n_angles"));
  m.def("nontangential_max", &nontangential_max, py::arg("f"), py::arg("vertex"), py::arg("grid"));

  // kernels
  py::class_<KernelEvaluator>(m, "KernelEvaluator")
      .def(py::init<const Weight&, int, double, double>(), py::arg("weight"),
           py::arg("n_max") = 4096, py::arg("tail_tol") = 1e-10, py::arg("delta_guard") = 1e-3)
      .def("__call__", [](const KernelEvaluator& k, cplx z, cplx zeta) { return k(z, zeta); })
      .def("norm_sq", &KernelEvaluator::norm_sq)
      .def("comparison_ratio", &KernelEvaluator::comparison_ratio);
  m.def("normalized_kernel", &normalized_kernel, py::arg("kernel"), py::arg("z"), py::arg("zeta"));
  m.def(
      "apply_R",
      [](const std::function<double(cplx)>& f, cplx z, const DiscGrid& g) {
        return apply_R(f, z, g);
      },
      py::arg("f"), py::arg("z"), py::arg("grid"));
  m.def(
      "apply_Pplus",
      [](double alpha, const std::function<double(cplx)>& f, cplx z, const DiscGrid& g) {
        return apply_Pplus(alpha, f, z, g);
      },
      py::arg("alpha"), py::arg("f"), py::arg("z"), py::arg("grid"));
  m.def("pointwise_estimate_ratio", &pointwise_estimate_ratio, py::arg("kernel"), py::arg("f"),
        py::arg("q"), py::arg("z"), py::arg("grid"));

  // zero sets
  m.def(
      "k_Z",
      [](const std::vector<std::pair<cplx, int>>& zs, cplx z) {
        return k_Z(ZeroSetAux::from(to_zeros(zs)), z);
      },
      py::arg("zeros"), py::arg("z"));
  m.def(
      "W_Z",
      [](const std::vector<std::pair<cplx, int>>& zs, cplx z) {
        return W_Z(ZeroSetAux::from(to_zeros(zs)), z);
      },
      py::arg("zeros"), py::arg("z"));
  m.def(
      "psi_Z",
      [](const std::vector<std::pair<cplx, int>>& zs, cplx z) {
        return psi_Z(ZeroSetAux::from(to_zeros(zs)), z);
      },
      py::arg("zeros"), py::arg("z"));
  m.def(
      "h_compare",
      [](const AnalyticFunction& f, const std::vector<std::pair<cplx, int>>& zs, cplx z) {
        return h_compare(f, to_zeros(zs), z);
      },
      py::arg("f"), py::arg("zeros"), py::arg("z"));
  m.def(
      "h_norm_ratio",
      [](const AnalyticFunction& f, const std::vector<std::pair<cplx, int>>& zs, double p,
         const Weight& w, const DiscGrid& g) { return h_norm_ratio(f, to_zeros(zs), p, w, g); },
      py::arg("f"), py::arg("zeros"), py::arg("p"), py::arg("weight"), py::arg("grid"));
  m.def(
      "harmonic_majorant_search",
      [](const std::vector<std::pair<cplx, int>>& zs, double p, const Weight& w, int max_degree,
         const DiscGrid& g) {
        auto res = harmonic_majorant_search(to_zeros(zs), p, w, max_degree, g);
        return py::make_tuple(res.best_value, res.coeffs, res.sweeps);
      },
      py::arg("zeros"), py::arg("p"), py::arg("weight"), py::arg("max_degree"), py::arg("grid"));

  // factorization
  m.def("horowitz_g", &horowitz_g, py::arg("f"), py::arg("p"), py::arg("q"), py::arg("z"));
  py::class_<ChainQuantities>(m, "ChainQuantities")
      .def_readonly("product_of_norms_p", &ChainQuantities::product_of_norms_p)
      .def_readonly("young_combination", &ChainQuantities::young_combination)
      .def_readonly("f_norm_p", &ChainQuantities::f_norm_p)
      .def_readonly("measured_c", &ChainQuantities::measured_c);
  py::class_<FactorizationResult>(m, "FactorizationResult")
      .def_readonly("f1", &FactorizationResult::f1)
      .def_readonly("f2", &FactorizationResult::f2)
      .def_readonly("norm_f1", &FactorizationResult::norm_f1)
      .def_readonly("norm_f2", &FactorizationResult::norm_f2)
      .def_readonly("norm_f", &FactorizationResult::norm_f)
      .def_readonly("chain", &FactorizationResult::chain)
      .def_readonly("max_residual", &FactorizationResult::max_residual)
      .def_readonly("trials_used", &FactorizationResult::trials_used);
  m.def("split_factorize", &split_factorize, py::arg("f"), py::arg("p"), py::arg("p1"),
        py::arg("p2"), py::arg("weight"), py::arg("trials"), py::arg("seed"), py::arg("grid"));

  // dominating sets / sampling
  py::class_<GridSet>(m, "GridSet").def("count", &GridSet::count);
  py::class_<DominationReport>(m, "DominationReport")
      .def_readonly("ratio", &DominationReport::ratio);
  m.def(
      "bad_set_kernel",
      [](const AnalyticFunction& f, double p, double q, double eps, const Weight& w,
         const KernelEvaluator& k, const DiscGrid& g) {
        return bad_set_kernel(f, p, q, eps, w, k, g);
      },
      py::arg("f"), py::arg("p"), py::arg("q"), py::arg("eps"), py::arg("weight"),
      py::arg("kernel"), py::arg("grid"));
  m.def("gridset_complement", &gridset_complement);
  m.def("domination_ratio", &domination_ratio, py::arg("set"), py::arg("f"), py::arg("p"),
        py::arg("weight"), py::arg("grid"));
  m.def("square_lower_bound", &square_lower_bound, py::arg("set"), py::arg("weight"),
        py::arg("depth"), py::arg("angular_base") = 64);
  m.def(
      "square_test_function",
      [](cplx a, double mm, double p, const Weight& w, const DiscGrid& g) {
        double pre = 0.0;
        AnalyticFunction f = square_test_function(a, mm, p, w, g, &pre);
        return py::make_tuple(f, pre);
      },
      py::arg("a"), py::arg("m"), py::arg("p"), py::arg("weight"), py::arg("grid"));

  py::class_<DiscMeasure>(m, "DiscMeasure")
      .def_static("from_weight", &DiscMeasure::from_weight, py::arg("weight"), py::arg("grid"),
                  py::keep_alive<0, 2>())
      .def_static(
          "from_density",
          [](const std::function<double(cplx)>& d, const DiscGrid& g) {
            return DiscMeasure::from_density(d, g);
          },
          py::arg("density"), py::arg("grid"), py::keep_alive<0, 2>())
      .def_static(
          "from_atoms",
          [](const std::vector<std::pair<cplx, double>>& atoms) {
            std::vector<DiscMeasure::Atom> as;
            for (auto& [z, mass] : atoms) as.push_back({z, mass});
            return DiscMeasure::from_atoms(std::move(as));
          },
          py::arg("atoms"))
      .def("total", &DiscMeasure::total)
      .def("scaled", &DiscMeasure::scaled);

  py::class_<CarlesonReport>(m, "CarlesonReport")
      .def_readonly("carleson_norm", &CarlesonReport::carleson_norm)
      .def_readonly("argmax_square", &CarlesonReport::argmax_square)
      .def_readonly("k_r_field", &CarlesonReport::k_r_field)
      .def_readonly("sampling_bounds", &CarlesonReport::sampling_bounds)
      .def_readonly("empirical_delta", &CarlesonReport::empirical_delta)
      .def_readonly("domination_min", &CarlesonReport::domination_min);
  m.def("maximal_fn", &maximal_fn, py::arg("mu"), py::arg("weight"), py::arg("z"),
        py::arg("depth"), py::arg("angular_base") = 64);
  m.def("carleson_norm", &carleson_norm, py::arg("mu"), py::arg("weight"), py::arg("depth"),
        py::arg("angular_base") = 64);
  m.def(
      "k_r_field",
      [](const DiscMeasure& mu, const Weight& w, double r, const DiscGrid& g, bool star) {
        return k_r_field(mu, w, r, g, star);
      },
      py::arg("mu"), py::arg("weight"), py::arg("r"), py::arg("grid"), py::arg("star") = false);
  m.def(
      "sampling_pipeline",
      [](const DiscMeasure& mu, const Weight& w, double p, double r, double eps,
         const std::vector<AnalyticFunction>& family, const DiscGrid& g) {
        return sampling_pipeline(mu, w, p, r, eps, family, g);
      },
      py::arg("mu"), py::arg("weight"), py::arg("p"), py::arg("r"), py::arg("eps"),
      py::arg("family"), py::arg("grid"));
  m.def("difference_estimate", &difference_estimate, py::arg("mu"), py::arg("nu"),
        py::arg("weight"), py::arg("f"), py::arg("p"), py::arg("r"), py::arg("R"),
        py::arg("grid"), py::arg("square_variant") = true);
}

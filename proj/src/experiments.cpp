#include "bergman/experiments.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "bergman/dominating.hpp"
#include "bergman/factorization.hpp"
#include "bergman/kernels.hpp"
#include "bergman/sampling.hpp"
#include "bergman/zero_sets.hpp"
#include "json.hpp"

namespace bergman::experiments {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::uint64_t config_hash(const std::string& canonical) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

const char* kCommands[] = {"weight-report", "zero-test", "factorize",
                           "dominate",      "sample",    "kernel-check"};

bool known_command(const std::string& c) {
  for (const char* k : kCommands)
    if (c == k) return true;
  return false;
}

cplx cplx_from(const ordered_json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) return cplx(j[0].get<double>(), j[1].get<double>());
  throw parameter_error("expected a number or [re, im] pair");
}

std::vector<cplx> cplx_list(const ordered_json& j) {
  std::vector<cplx> out;
  for (const auto& e : j) out.push_back(cplx_from(e));
  return out;
}

ZeroSequence zeros_from(const ordered_json& j) {
  ZeroSequence out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() < 2) throw parameter_error("zero rows are [re, im, mult?]");
    int mult = e.size() > 2 ? e[2].get<int>() : 1;
    out.push_back({cplx(e[0].get<double>(), e[1].get<double>()), mult});
  }
  return out;
}

AnalyticFunction function_from(const ordered_json& j) {
  AnalyticFunction f;
  if (j.contains("poly")) f.poly = cplx_list(j.at("poly"));
  if (f.poly.empty()) f.poly = {cplx(1.0)};
  if (j.contains("zeros")) f.blaschke = zeros_from(j.at("zeros"));
  if (j.contains("exp_poly")) f.exp_poly = cplx_list(j.at("exp_poly"));
  if (j.contains("poly_power")) f.poly_power = j.at("poly_power").get<double>();
  return f;
}

Weight load_weight(const std::string& name) {
  if (fs::exists(name)) return weights::from_table_csv(name);
  return weights::catalog(name);
}

ordered_json grid_meta(const GridSpec& s, const DiscGrid& g) {
  ordered_json j;
  j["levels"] = s.levels;
  j["angular_base"] = s.angular_base;
  j["radial_subdiv"] = s.radial_subdiv;
  j["inner_levels"] = s.inner_levels;
  j["nodes"] = g.size();
  return j;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw resource_cap_error("cannot open output file " + p.string());
  out << text;
}

struct Ctx {
  const ExperimentConfig& cfg;
  ordered_json params;
  DiscGrid grid;
  Weight weight;
  fs::path dir;
  ordered_json report;

  Ctx(const ExperimentConfig& c)
      : cfg(c),
        params(ordered_json::parse(c.params_json)),
        grid(c.grid),
        weight(load_weight(c.weight)),
        dir(c.output_dir) {
    fs::create_directories(dir);
    report["command"] = c.command;
    report["config_hash"] = fmt17_hash(config_hash(c.raw));
    report["seed"] = c.seed;
    report["weight"] = weight.name();
    report["grid"] = grid_meta(c.grid, grid);
  }

  static std::string fmt17_hash(std::uint64_t h) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  double param(const std::string& key, double fallback) const {
    return params.contains(key) ? params.at(key).get<double>() : fallback;
  }
  int parami(const std::string& key, int fallback) const {
    return params.contains(key) ? params.at(key).get<int>() : fallback;
  }

  void finish() { write_text(dir / "report.json", report.dump(2) + "\n"); }
};

void run_weight_report(Ctx& ctx) {
  std::vector<double> qs{1.5, 2.0};
  if (ctx.params.contains("qs")) qs = ctx.params.at("qs").get<std::vector<double>>();
  int depth = ctx.parami("depth", 10);
  WeightClassReport rep = class_report(ctx.weight, qs, depth, ctx.grid);

  ordered_json j;
  auto trend_json = [](const TrendSeries& t) {
    ordered_json out;
    out["applicable"] = t.applicable;
    out["constant"] = t.constant;
    out["growing"] = t.growing;
    out["levels"] = t.levels;
    out["log_values"] = t.log_values;
    return out;
  };
  j["dhat"] = trend_json(rep.dhat);
  if (rep.dcheck_witness) {
    j["dcheck"]["K"] = rep.dcheck_witness->first;
    j["dcheck"]["C"] = rep.dcheck_witness->second;
  }
  for (auto& [q, t] : rep.bq) j["bq"][fmt17(q)] = trend_json(t);
  for (auto& [q, v] : rep.cq) j["cq"][fmt17(q)] = v;
  j["cq_radius"] = rep.cq_radius;
  j["dhatD_constant"] = rep.dhatD_constant;
  j["tail_envelope"] = {{"beta", rep.tail_envelope.beta},
                 {"c_beta", rep.tail_envelope.c_beta},
                 {"gamma", rep.tail_envelope.gamma},
                 {"c_gamma", rep.tail_envelope.c_gamma}};
  ctx.report["weight_report"] = j;

  if (ctx.params.contains("eta")) {
    double eta = ctx.params.at("eta").get<double>();
    std::vector<cplx> anchors;
    if (ctx.params.contains("anchors")) {
      anchors = cplx_list(ctx.params.at("anchors"));
    } else {
      for (int k = 2; k <= 8; ++k) anchors.push_back(cplx(1.0 - std::ldexp(1.0, -k)));
    }
    auto ratios = dhatD_integral_check(ctx.weight, eta, anchors, ctx.grid);
    ordered_json arr = ordered_json::array();
    for (const auto& r : ratios)
      arr.push_back({{"re", r.a.real()}, {"im", r.a.imag()}, {"ok", r.ok}, {"ratio", r.ratio}});
    ctx.report["dhatD_integral_check"] = arr;
  }

  // plot-ready per-level table; series are looked up by level index
  auto level_value = [](const TrendSeries& t, int level) -> std::string {
    for (std::size_t i = 0; i < t.levels.size(); ++i)
      if (t.levels[i] == level) return fmt17(t.log_values[i]);
    return "nan";
  };
  std::string csv = "level,dhat_log";
  for (double q : qs) csv += ",bq_log_q" + fmt17(q);
  csv += "\n";
  for (int k = 0; k <= depth; ++k) {
    csv += std::to_string(k) + "," + level_value(rep.dhat, k);
    for (double q : qs) csv += "," + level_value(rep.bq.at(q), k);
    csv += "\n";
  }
  write_text(ctx.dir / "weight_report.csv", csv);
}

void run_zero_test(Ctx& ctx) {
  ZeroSequence zs;
  if (ctx.params.contains("zeros_csv")) {
    std::ifstream in(ctx.params.at("zeros_csv").get<std::string>());
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("re,", 0) == 0) continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ls(line);
      double re, im;
      int mult = 1;
      if (ls >> re >> im) {
        ls >> mult;
        zs.push_back({cplx(re, im), mult});
      }
    }
  } else if (ctx.params.contains("zeros")) {
    zs = zeros_from(ctx.params.at("zeros"));
  }
  double p = ctx.param("p", 2.0);
  ZeroSetAux aux = ZeroSetAux::from(zs);
  ordered_json j;
  j["count"] = total_multiplicity(zs);
  j["blaschke2_sum"] = aux.blaschke2_sum;
  j["blaschke2sq_sum"] = aux.blaschke2sq_sum;
  j["separation"] = aux.separation;
  j["origin_multiplicity"] = aux.origin_multiplicity;

  MajorantSearchResult c1 = harmonic_majorant_search(zs, p, ctx.weight, ctx.parami("max_degree", 2),
                                          ctx.grid);
  j["majorant_search"] = {{"best_value", c1.best_value}, {"sweeps", c1.sweeps},
                     {"coeffs", c1.coeffs}};

  if (ctx.params.contains("function")) {
    AnalyticFunction f = function_from(ctx.params.at("function"));
    auto [lower, upper] = h_norm_ratio(f, zs, p, ctx.weight, ctx.grid);
    j["comparison_ratios"] = {{"lower", lower}, {"upper", upper}};
  }
  ctx.report["zero_test"] = j;
}

void run_factorize(Ctx& ctx) {
  if (!ctx.params.contains("function"))
    throw parameter_error("factorize: params.function is required");
  AnalyticFunction f = function_from(ctx.params.at("function"));
  double p = ctx.param("p", 1.0), p1 = ctx.param("p1", 2.0), p2 = ctx.param("p2", 2.0);
  int trials = ctx.parami("trials", 64);
  FactorizationResult r = split_factorize(f, p, p1, p2, ctx.weight, trials, ctx.cfg.seed,
                                          ctx.grid);
  ordered_json j;
  j["p"] = p;
  j["p1"] = p1;
  j["p2"] = p2;
  j["trials"] = r.trials_used;
  j["max_residual"] = r.max_residual;
  j["norm_f"] = r.norm_f;
  j["norm_f1"] = r.norm_f1;
  j["norm_f2"] = r.norm_f2;
  j["chain"] = {{"product_of_norms_p", r.chain.product_of_norms_p},
                {"young_combination", r.chain.young_combination},
                {"f_norm_p", r.chain.f_norm_p},
                {"measured_c", r.chain.measured_c}};
  auto zeros_json = [](const ZeroSequence& z) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : z) arr.push_back({e.a.real(), e.a.imag(), e.mult});
    return arr;
  };
  j["f1_zeros"] = zeros_json(r.f1.blaschke);
  j["f2_zeros"] = zeros_json(r.f2.blaschke);
  ctx.report["factorization"] = j;
}

void run_dominate(Ctx& ctx) {
  if (!ctx.params.contains("function"))
    throw parameter_error("dominate: params.function is required");
  AnalyticFunction f = function_from(ctx.params.at("function"));
  double p = ctx.param("p", 2.0);
  std::string mode = ctx.params.contains("mode") ? ctx.params.at("mode").get<std::string>()
                                                 : std::string("kernel");
  int eps_pows = ctx.parami("eps_pows", 8);
  int depth = ctx.parami("depth", 8);

  double norm_p = std::pow(ap_norm(f, p, ctx.weight, ctx.grid), p);
  ordered_json sweep = ordered_json::array();
  GridSet last_complement;

  if (mode == "kernel") {
    double q = ctx.param("q", 1.0);
    KernelEvaluator kernel(ctx.weight, ctx.parami("n_max", 4096), ctx.param("tail_tol", 1e-10),
                           ctx.param("delta_guard", 1e-3));
    ThresholdField field = kernel_threshold_field(f, q, ctx.weight, kernel, ctx.grid);
    ctx.report["indeterminate_nodes"] = field.n_indeterminate;
    for (int k = 1; k <= eps_pows; ++k) {
      double eps = std::ldexp(1.0, -k);
      GridSet e = bad_set_kernel(f, p, q, eps, ctx.weight, kernel, ctx.grid, &field);
      double mass =
          integrate([&](cplx z) { return std::pow(f.abs_at(z), p); }, ctx.weight, &e, ctx.grid);
      GridSet comp = gridset_complement(e);
      DominationReport dom = domination_ratio(comp, f, p, ctx.weight, ctx.grid);
      sweep.push_back({{"eps", eps},
                       {"bad_mass_ratio", mass / norm_p},
                       {"complement_ratio", dom.ratio}});
      if (k == eps_pows) last_complement = comp;
    }
  } else if (mode == "local") {
    double r = ctx.param("r", 0.5);
    std::vector<double> nu = weight_node_masses(ctx.grid, ctx.weight);
    LocalField field = local_average_field(f, p, nu, r, ctx.grid);
    ctx.report["indeterminate_nodes"] = field.n_indeterminate;
    for (int k = 1; k <= eps_pows; ++k) {
      double eps = std::ldexp(1.0, -k);
      GridSet e = bad_set_local(f, p, nu, r, eps, ctx.grid, 0.5, &field);
      double mass =
          integrate([&](cplx z) { return std::pow(f.abs_at(z), p); }, ctx.weight, &e, ctx.grid);
      GridSet comp = gridset_complement(e);
      DominationReport dom = domination_ratio(comp, f, p, ctx.weight, ctx.grid);
      sweep.push_back({{"eps", eps},
                       {"bad_mass_ratio", mass / norm_p},
                       {"complement_ratio", dom.ratio}});
      if (k == eps_pows) last_complement = comp;
    }
  } else {
    throw parameter_error("dominate: mode must be kernel or local");
  }

  // log-log slope over the sweep (zero masses excluded)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& row : sweep) {
    double eps = row.at("eps").get<double>();
    double mass = row.at("bad_mass_ratio").get<double>();
    if (!(mass > 0.0)) continue;
    double x = std::log2(eps), y = std::log2(mass);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  ctx.report["sweep"] = sweep;
  ctx.report["slope"] = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx)
                               : std::numeric_limits<double>::quiet_NaN();
  ctx.report["square_lower_bound"] =
      last_complement.grid ? square_lower_bound(last_complement, ctx.weight, depth)
                           : std::numeric_limits<double>::quiet_NaN();

  // mask table for external plotting
  std::string csv = "node,re,im,in_set\n";
  for (std::size_t i = 0; i < ctx.grid.size(); ++i) {
    cplx z = ctx.grid.position(i);
    csv += std::to_string(i) + "," + fmt17(z.real()) + "," + fmt17(z.imag()) + "," +
           (last_complement.grid && last_complement.mask[i] ? "1" : "0") + "\n";
  }
  write_text(ctx.dir / "dominating_set.csv", csv);
}

void run_sample(Ctx& ctx) {
  DiscMeasure mu;
  if (ctx.params.contains("atoms_csv")) {
    mu = measure_from_csv(ctx.params.at("atoms_csv").get<std::string>(), &ctx.grid,
                          ctx.params.contains("density_csv")
                              ? ctx.params.at("density_csv").get<std::string>()
                              : "");
  } else if (ctx.params.contains("atoms")) {
    std::vector<DiscMeasure::Atom> atoms;
    for (const auto& row : ctx.params.at("atoms"))
      atoms.push_back({cplx(row[0].get<double>(), row[1].get<double>()), row[2].get<double>()});
    mu = DiscMeasure::from_atoms(std::move(atoms));
  }
  if (!mu.grid) {
    double scale = ctx.param("density_scale", 1.0);
    DiscMeasure base = DiscMeasure::from_weight(ctx.weight, ctx.grid).scaled(scale);
    base.atoms = mu.atoms;
    mu = std::move(base);
  }

  double p = ctx.param("p", 2.0);
  double r = ctx.param("r", 0.4);
  double eps = ctx.param("eps", 0.5);
  SamplingOptions opt;
  opt.depth = ctx.parami("depth", 8);
  opt.star_variant = ctx.params.contains("star") && ctx.params.at("star").get<bool>();
  opt.pseudo_disc_checks =
      ctx.params.contains("pseudo_disc") && ctx.params.at("pseudo_disc").get<bool>();

  std::vector<AnalyticFunction> family;
  if (ctx.params.contains("family"))
    for (const auto& jf : ctx.params.at("family")) family.push_back(function_from(jf));
  if (family.empty()) {
    family.push_back(AnalyticFunction{});
    family.push_back(AnalyticFunction::from_poly({cplx(0.0), cplx(1.0)}));
    family.push_back(AnalyticFunction::from_poly({cplx(0.0), cplx(0.0), cplx(1.0)}));
    family.push_back(AnalyticFunction::from_zeros({{cplx(0.5), 1}}));
  }

  CarlesonReport rep = sampling_pipeline(mu, ctx.weight, p, r, eps, family, ctx.grid, opt);
  ordered_json j;
  j["carleson_norm"] = rep.carleson_norm;
  j["argmax_anchor"] = {rep.argmax_square.anchor.real(), rep.argmax_square.anchor.imag()};
  j["k_r_indeterminate"] = rep.k_r_indeterminate;
  j["empirical_delta"] = rep.empirical_delta;
  j["domination_min"] = rep.domination_min;
  if (rep.sampling_bounds) {
    j["sampling_lower"] = rep.sampling_bounds->first;
    j["sampling_upper"] = rep.sampling_bounds->second;
    j["sampling_constant"] = rep.sampling_constant;
  }
  ctx.report["sampling"] = j;

  std::string csv = "node,re,im,k_r\n";
  for (std::size_t i = 0; i < ctx.grid.size(); ++i) {
    cplx z = ctx.grid.position(i);
    csv += std::to_string(i) + "," + fmt17(z.real()) + "," + fmt17(z.imag()) + "," +
           fmt17(rep.k_r_field[i]) + "\n";
  }
  write_text(ctx.dir / "k_r_field.csv", csv);
}

void run_kernel_check(Ctx& ctx) {
  KernelEvaluator kernel(ctx.weight, ctx.parami("n_max", 4096), ctx.param("tail_tol", 1e-10),
                         ctx.param("delta_guard", 1e-3));
  std::mt19937_64 rng(ctx.cfg.seed);
  double max_r = ctx.param("max_r", 0.9);
  std::uniform_real_distribution<double> ur(0.0, max_r), ut(0.0, kTwoPi);

  ordered_json j;
  if (ctx.weight.name() == "lebesgue") {
    double worst = 0.0;
    for (int i = 0; i < ctx.parami("samples", 1000); ++i) {
      cplx z = std::polar(ur(rng), ut(rng)), zeta = std::polar(ur(rng), ut(rng));
      cplx w = std::conj(z) * zeta;
      cplx exact = 1.0 / ((1.0 - w) * (1.0 - w));
      worst = std::max(worst, std::abs(kernel(z, zeta) - exact));
    }
    j["closed_form_max_error"] = worst;
  }

  // reproducing residuals on monomials up to the configured degree
  int degree = ctx.parami("degree", 6);
  ordered_json res = ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    cplx z = std::polar(0.8 * ur(rng) / max_r, ut(rng));
    std::vector<cplx> coeffs(degree + 1, cplx(0.0));
    for (int d = 0; d <= degree; ++d) coeffs[d] = cplx(1.0 / (d + 1.0), 0.1 * d);
    AnalyticFunction f = AnalyticFunction::from_poly(coeffs);
    cplx repr = integrate_c(
        [&](cplx zeta) { return f(zeta) * std::conj(kernel(z, zeta)); }, ctx.weight, WholeDisc{},
        ctx.grid);
    res.push_back({{"z", {z.real(), z.imag()}},
                   {"residual", std::abs(repr - f(z)) / std::max(1.0, std::abs(f(z)))}});
  }
  j["reproducing_residuals"] = res;

  // kernel-norm comparison band against 1/(tail (1-r))
  ordered_json band = ordered_json::array();
  for (double rr = 0.0; rr <= 0.951; rr += 0.05)
    band.push_back({{"r", rr}, {"ratio", kernel.comparison_ratio(cplx(rr))}});
  j["comparison_band"] = band;
  ctx.report["kernel_check"] = j;
}

}  // namespace

AnalyticFunction function_from_json(const std::string& json_text) {
  return function_from(ordered_json::parse(json_text));
}

std::vector<ConfigIssue> parse_config(const std::string& text, ExperimentConfig& out) {
  std::vector<ConfigIssue> issues;
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    issues.push_back({"bad-json", "", e.what()});
    return issues;
  }
  if (!j.is_object()) {
    issues.push_back({"bad-json", "", "config must be a JSON object"});
    return issues;
  }

  if (!j.contains("command")) {
    issues.push_back({"missing-command", "/command", "command is required"});
  } else if (!j.at("command").is_string() || !known_command(j.at("command").get<std::string>())) {
    issues.push_back({"unknown-command", "/command",
                      "expected one of weight-report, zero-test, factorize, dominate, sample, "
                      "kernel-check"});
  } else {
    out.command = j.at("command").get<std::string>();
  }

  if (j.contains("weight")) {
    if (!j.at("weight").is_string()) {
      issues.push_back({"bad-type", "/weight", "weight must be a catalog name or CSV path"});
    } else {
      out.weight = j.at("weight").get<std::string>();
      if (!fs::exists(out.weight)) {
        try {
          weights::catalog(out.weight);
        } catch (const std::exception& e) {
          issues.push_back({"missing-file", "/weight", e.what()});
        }
      }
    }
  }

  out.grid.radial_subdiv = 32;
  out.grid.inner_levels = 12;
  if (j.contains("grid")) {
    const auto& gj = j.at("grid");
    if (!gj.is_object()) {
      issues.push_back({"bad-grid", "/grid", "grid must be an object"});
    } else {
      auto geti = [&](const char* key, int fallback) {
        return gj.contains(key) ? gj.at(key).get<int>() : fallback;
      };
      try {
        out.grid.levels = geti("levels", 12);
        out.grid.angular_base = geti("angular_base", 64);
        out.grid.radial_subdiv = geti("radial_subdiv", 32);
        out.grid.inner_levels = geti("inner_levels", 12);
        if (gj.contains("node_cap")) out.grid.node_cap = gj.at("node_cap").get<std::size_t>();
        if (out.grid.levels < 1 || out.grid.angular_base < 8 || out.grid.radial_subdiv < 1 ||
            out.grid.inner_levels < 0)
          issues.push_back({"out-of-range", "/grid", "grid parameters out of range"});
      } catch (const std::exception& e) {
        issues.push_back({"bad-grid", "/grid", e.what()});
      }
    }
  }

  if (j.contains("seed")) {
    if (!j.at("seed").is_number_integer())
      issues.push_back({"bad-type", "/seed", "seed must be an integer"});
    else
      out.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("output_dir")) {
    if (!j.at("output_dir").is_string())
      issues.push_back({"bad-type", "/output_dir", "output_dir must be a string"});
    else
      out.output_dir = j.at("output_dir").get<std::string>();
  }

  if (j.contains("params")) {
    if (!j.at("params").is_object()) {
      issues.push_back({"bad-type", "/params", "params must be an object"});
    } else {
      out.params_json = j.at("params").dump();
      const auto& pj = j.at("params");
      auto positive = [&](const char* key) {
        if (pj.contains(key) && pj.at(key).is_number() && !(pj.at(key).get<double>() > 0.0))
          issues.push_back({"out-of-range", std::string("/params/") + key,
                            std::string(key) + " must be positive"});
      };
      positive("p");
      positive("p1");
      positive("p2");
      positive("q");
      positive("eps");
      positive("epsilon");
      positive("r");
      for (const char* key : {"zeros_csv", "atoms_csv", "density_csv"})
        if (pj.contains(key) && pj.at(key).is_string() &&
            !fs::exists(pj.at(key).get<std::string>()))
          issues.push_back({"missing-file", std::string("/params/") + key,
                            "file not found: " + pj.at(key).get<std::string>()});
    }
  }

  // canonical serialized form for hashing and reproducibility
  out.raw = j.dump();
  return issues;
}

int run(const ExperimentConfig& config) {
  try {
    Ctx ctx(config);
    if (config.command == "weight-report")
      run_weight_report(ctx);
    else if (config.command == "zero-test")
      run_zero_test(ctx);
    else if (config.command == "factorize")
      run_factorize(ctx);
    else if (config.command == "dominate")
      run_dominate(ctx);
    else if (config.command == "sample")
      run_sample(ctx);
    else if (config.command == "kernel-check")
      run_kernel_check(ctx);
    else
      return kExitConfig;
    ctx.finish();
    return kExitOk;
  } catch (const parameter_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const precondition_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const resource_cap_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const numeric_guard_error& e) {
    std::cerr << "numeric guard: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace bergman::experiments

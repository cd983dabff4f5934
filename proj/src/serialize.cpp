#include "rindler/serialize.hpp"

#include <set>

#include "rindler/error.hpp"

namespace rindler {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorCode::Config, (path.empty() ? "/" : path) + ": " + what);
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
}

void only_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items()) {
    if (!ok.count(k)) bad(path + "/" + k, "unknown key");
  }
}

double number(const Json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) bad(path + "/" + key, "missing required number");
  const auto& v = j.at(key);
  if (!v.is_number()) bad(path + "/" + key, "expected a number");
  return v.get<double>();
}

double number_or(const Json& j, const std::string& path, const char* key, double fallback) {
  return j.contains(key) ? number(j, path, key) : fallback;
}

std::uint64_t count_or(const Json& j, const std::string& path, const char* key, std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    bad(path + "/" + key, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::string string_or(const Json& j, const std::string& path, const char* key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) bad(path + "/" + key, "expected a string");
  return j.at(key).get<std::string>();
}

Axis axis(const Json& j, const std::string& path, Axis fallback) {
  if (j.is_null()) return fallback;
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number_integer()) {
    bad(path, "expected [min, max, n]");
  }
  Axis a{j[0].get<double>(), j[1].get<double>(), j[2].get<std::size_t>()};
  try {
    a.validate(path.c_str());
  } catch (const Error& e) {
    bad(path, "axis requires min < max and n >= 1");
  }
  return a;
}

template <class F>
auto wrap(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Config) throw;
    bad(path, e.what());
  }
}

}  // namespace

Json to_json(const TrajectorySpec& spec) {
  return std::visit(
      overloaded{
          [](const traj::Stationary& s) {
            return Json{{"kind", "stationary"}, {"position", {s.position.x, s.position.y, s.position.z}}};
          },
          [](const traj::Inertial& s) { return Json{{"kind", "inertial"}, {"v", s.velocity}}; },
          [](const traj::Rindler& s) { return Json{{"kind", "rindler"}, {"xi", s.xi}}; },
          [](const traj::ObliqueRindler& s) {
            return Json{{"kind", "oblique_rindler"}, {"xi", s.xi}, {"xi0", s.xi0}, {"alpha", s.alpha}};
          },
          [](const traj::Circular& s) { return Json{{"kind", "circular"}, {"gamma", s.gamma}, {"p", s.p}}; },
          [](const traj::HelicoidConstant& s) {
            return Json{{"kind", "helicoid_constant"}, {"gamma", s.gamma}, {"p", s.p}, {"mix", s.mix}};
          },
          [](const traj::HelicoidAccelerated& s) {
            return Json{{"kind", "helicoid_accelerated"}, {"A", s.A}, {"xi", s.xi}, {"p", s.p}};
          },
          [](const traj::TestQuadratic& s) { return Json{{"kind", "test_quadratic"}, {"beta", s.beta}}; },
      },
      spec);
}

TrajectorySpec trajectory_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  const auto kind = string_or(j, path, "kind", "");
  if (kind.empty()) bad(path + "/kind", "missing trajectory kind");
  if (kind == "stationary") {
    only_keys(j, path, {"kind", "position"});
    Vec3 p;
    if (j.contains("position")) {
      const auto& v = j.at("position");
      if (!v.is_array() || v.size() != 3) bad(path + "/position", "expected [x, y, z]");
      for (int k = 0; k < 3; ++k) {
        if (!v[k].is_number()) bad(path + "/position/" + std::to_string(k), "expected a number");
      }
      p = {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
    }
    return traj::Stationary{p};
  }
  if (kind == "inertial") {
    only_keys(j, path, {"kind", "v"});
    return traj::Inertial{number(j, path, "v")};
  }
  if (kind == "rindler") {
    only_keys(j, path, {"kind", "xi"});
    return traj::Rindler{number(j, path, "xi")};
  }
  if (kind == "oblique_rindler") {
    only_keys(j, path, {"kind", "xi", "xi0", "alpha"});
    return traj::ObliqueRindler{number(j, path, "xi"), number(j, path, "xi0"), number(j, path, "alpha")};
  }
  if (kind == "circular") {
    only_keys(j, path, {"kind", "gamma", "p"});
    return traj::Circular{number(j, path, "gamma"), number(j, path, "p")};
  }
  if (kind == "helicoid_constant") {
    only_keys(j, path, {"kind", "gamma", "p", "mix"});
    return traj::HelicoidConstant{number(j, path, "gamma"), number(j, path, "p"), number(j, path, "mix")};
  }
  if (kind == "helicoid_accelerated") {
    only_keys(j, path, {"kind", "A", "xi", "p"});
    return traj::HelicoidAccelerated{number(j, path, "A"), number(j, path, "xi"), number(j, path, "p")};
  }
  if (kind == "test_quadratic") {
    only_keys(j, path, {"kind", "beta"});
    return traj::TestQuadratic{number(j, path, "beta")};
  }
  bad(path + "/kind", "unknown trajectory kind '" + kind + "'");
}

Json to_json(const MirrorScene& s) {
  return Json{{"xi", s.xi}, {"xi0", s.xi0}, {"alpha", s.alpha}, {"c0", s.c0}};
}

MirrorScene scene_from_json(const Json& j, const std::string& path, double default_c0) {
  require_object(j, path);
  only_keys(j, path, {"xi", "xi0", "alpha", "c0"});
  MirrorScene s{number_or(j, path, "xi", 1.0), number(j, path, "xi0"), number(j, path, "alpha"),
                number_or(j, path, "c0", default_c0)};
  wrap(path, [&] {
    s.validate();
    return 0;
  });
  return s;
}

Json to_json(const SourceSpectrum& s) {
  Json j{{"f0", s.f0}, {"f1", s.f1}, {"eps", s.eps}};
  if (s.omega_min > 0.0) j["omega_min"] = s.omega_min;
  return j;
}

SourceSpectrum spectrum_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  only_keys(j, path, {"f0", "f1", "eps", "omega_min"});
  SourceSpectrum s{number_or(j, path, "f0", 1.0), number_or(j, path, "f1", 0.0), number_or(j, path, "eps", 0.0),
                   number_or(j, path, "omega_min", 0.0)};
  wrap(path, [&] {
    s.validate();
    return 0;
  });
  return s;
}

Json to_json(const LocalizationResult& r) {
  Json trace = Json::array();
  for (const auto& t : r.trace) trace.push_back({t.alpha, t.alpha0, t.objective});
  return Json{{"alpha", r.alpha},
              {"alpha0", r.alpha0},
              {"residual", r.residual},
              {"evaluations", r.evaluations},
              {"budget_exhausted", r.budget_exhausted},
              {"no_obstacle", r.no_obstacle},
              {"sign_ambiguous", r.sign_ambiguous},
              {"note", "R is even in alpha; -alpha fits equally well"},
              {"trace", trace}};
}

Json to_json(const DistanceFit& r) {
  return Json{{"distance", r.distance},
              {"residual", r.residual},
              {"at_boundary", r.at_boundary},
              {"evaluations", r.evaluations}};
}

RunConfig config_from_json(const Json& j) {
  RunConfig cfg;
  require_object(j, "");
  only_keys(j, "", {"units", "spectrum", "trajectory", "scene", "grids", "estimator", "fit", "output"});
  if (j.contains("units")) {
    const auto& u = j.at("units");
    require_object(u, "/units");
    only_keys(u, "/units", {"c0"});
    cfg.c0 = number_or(u, "/units", "c0", 1.0);
    if (!(cfg.c0 > 0.0)) bad("/units/c0", "must be positive");
  }
  if (j.contains("spectrum")) cfg.spectrum = spectrum_from_json(j.at("spectrum"), "/spectrum");
  if (j.contains("trajectory")) {
    cfg.trajectory = trajectory_from_json(j.at("trajectory"), "/trajectory");
    wrap("/trajectory", [&] {
      validate(*cfg.trajectory, cfg.c0);
      return 0;
    });
  }
  if (j.contains("scene")) cfg.scene = scene_from_json(j.at("scene"), "/scene", cfg.c0);
  if (j.contains("grids")) {
    const auto& g = j.at("grids");
    require_object(g, "/grids");
    only_keys(g, "/grids", {"eta", "nu", "tau_prime"});
    if (g.contains("eta")) cfg.eta = axis(g.at("eta"), "/grids/eta", cfg.eta);
    if (g.contains("nu")) cfg.nu = axis(g.at("nu"), "/grids/nu", cfg.nu);
    if (g.contains("tau_prime")) cfg.lag = axis(g.at("tau_prime"), "/grids/tau_prime", cfg.lag);
  }
  if (j.contains("estimator")) {
    const auto& e = j.at("estimator");
    require_object(e, "/estimator");
    only_keys(e, "/estimator", {"N", "M", "seed", "window", "Tc"});
    cfg.estimator.waves = count_or(e, "/estimator", "N", cfg.estimator.waves);
    cfg.estimator.realizations = count_or(e, "/estimator", "M", cfg.estimator.realizations);
    cfg.estimator.seed = count_or(e, "/estimator", "seed", cfg.estimator.seed);
    const auto wname = string_or(e, "/estimator", "window", "gaussian");
    cfg.estimator.window.kind = wrap("/estimator/window", [&] { return window_kind_from_string(wname); });
    cfg.estimator.window.Tc = number_or(e, "/estimator", "Tc", cfg.estimator.window.Tc);
    if (!(cfg.estimator.window.Tc > 0.0)) bad("/estimator/Tc", "must be positive");
    if (cfg.estimator.waves == 0) bad("/estimator/N", "must be positive");
    if (cfg.estimator.realizations == 0) bad("/estimator/M", "must be positive");
  }
  if (j.contains("fit")) {
    const auto& f = j.at("fit");
    require_object(f, "/fit");
    only_keys(f, "/fit", {"alpha_points", "alpha0_points", "alpha0_max", "tolerance", "max_evaluations", "starts",
                          "weights", "no_obstacle_rms"});
    auto& c = cfg.fit;
    c.alpha_points = count_or(f, "/fit", "alpha_points", c.alpha_points);
    c.alpha0_points = count_or(f, "/fit", "alpha0_points", c.alpha0_points);
    c.alpha0_max = number_or(f, "/fit", "alpha0_max", c.alpha0_max);
    c.tolerance = number_or(f, "/fit", "tolerance", c.tolerance);
    c.max_evaluations = count_or(f, "/fit", "max_evaluations", c.max_evaluations);
    c.starts = count_or(f, "/fit", "starts", c.starts);
    c.no_obstacle_rms = number_or(f, "/fit", "no_obstacle_rms", c.no_obstacle_rms);
    const auto w = string_or(f, "/fit", "weights", "uniform");
    if (w == "uniform") {
      c.weights = WeightMode::Uniform;
    } else if (w == "inverse-variance") {
      c.weights = WeightMode::InverseVariance;
    } else {
      bad("/fit/weights", "expected 'uniform' or 'inverse-variance'");
    }
    wrap("/fit", [&] {
      c.validate();
      return 0;
    });
  }
  if (j.contains("output")) {
    const auto& o = j.at("output");
    require_object(o, "/output");
    only_keys(o, "/output", {"directory", "prefix"});
    cfg.out_dir = string_or(o, "/output", "directory", cfg.out_dir);
    cfg.prefix = string_or(o, "/output", "prefix", cfg.prefix);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::string text;
  try {
    text = read_text(path);
  } catch (const Error& e) {
    fail(ErrorCode::Config, e.what());
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::Config, path + ": " + e.what());
  }
  return config_from_json(j);
}

Json to_json(const RunConfig& cfg) {
  Json j;
  j["units"] = {{"c0", cfg.c0}};
  j["spectrum"] = to_json(cfg.spectrum);
  if (cfg.trajectory) j["trajectory"] = to_json(*cfg.trajectory);
  if (cfg.scene) j["scene"] = to_json(*cfg.scene);
  j["grids"] = {{"eta", {cfg.eta.min, cfg.eta.max, cfg.eta.n}},
                {"nu", {cfg.nu.min, cfg.nu.max, cfg.nu.n}},
                {"tau_prime", {cfg.lag.min, cfg.lag.max, cfg.lag.n}}};
  j["estimator"] = {{"N", cfg.estimator.waves},
                    {"M", cfg.estimator.realizations},
                    {"seed", cfg.estimator.seed},
                    {"window", to_string(cfg.estimator.window.kind)},
                    {"Tc", cfg.estimator.window.Tc}};
  j["fit"] = {{"alpha_points", cfg.fit.alpha_points},
              {"alpha0_points", cfg.fit.alpha0_points},
              {"alpha0_max", cfg.fit.alpha0_max},
              {"tolerance", cfg.fit.tolerance},
              {"max_evaluations", cfg.fit.max_evaluations},
              {"starts", cfg.fit.starts},
              {"weights", cfg.fit.weights == WeightMode::Uniform ? "uniform" : "inverse-variance"},
              {"no_obstacle_rms", cfg.fit.no_obstacle_rms}};
  j["output"] = {{"directory", cfg.out_dir}, {"prefix", cfg.prefix}};
  return j;
}

}  // namespace rindler

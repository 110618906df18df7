#include "nlslab/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace nlslab {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& block,
                  const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError("unknown key '" + it.key() + "' in block '" + block +
                        "'");
}

double get_num(const json& obj, const std::string& block,
               const std::string& key, double fallback,
               bool required = false) {
  if (!obj.contains(key)) {
    if (required)
      throw ConfigError("missing required field '" + block + "." + key + "'");
    return fallback;
  }
  if (!obj[key].is_number())
    throw ConfigError("field '" + block + "." + key + "' must be a number");
  return obj[key].get<double>();
}

int get_int(const json& obj, const std::string& block, const std::string& key,
            int fallback) {
  const double v = get_num(obj, block, key, fallback);
  if (v != std::floor(v))
    throw ConfigError("field '" + block + "." + key + "' must be an integer");
  return static_cast<int>(v);
}

std::vector<double> get_list(const json& obj, const std::string& block,
                             const std::string& key,
                             std::vector<double> fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_array() || obj[key].empty())
    throw ConfigError("field '" + block + "." + key +
                      "' must be a nonempty array");
  std::vector<double> out;
  for (const auto& v : obj[key]) {
    if (!v.is_number())
      throw ConfigError("field '" + block + "." + key +
                        "' must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

CoefficientSpec parse_h(const json& obj) {
  require_keys(obj, "model.h", {"kind", "constant", "table"});
  const std::string kind = obj.value("kind", "constant");
  if (kind == "constant")
    return CoefficientSpec::constant_coeff(get_num(obj, "model.h", "constant", 1.0));
  if (kind == "one_plus_cos") return CoefficientSpec::one_plus_cos();
  if (kind == "table") {
    if (!obj.contains("table") || !obj["table"].is_array())
      throw ConfigError("field 'model.h.table' must be an array of samples");
    RVec t(obj["table"].size());
    for (size_t i = 0; i < obj["table"].size(); ++i)
      t[static_cast<int>(i)] = obj["table"][i].get<double>();
    return CoefficientSpec::from_table(std::move(t));
  }
  throw ConfigError("field 'model.h.kind' must be one of constant, "
                    "one_plus_cos, table");
}

ModelSpec parse_model(const json& obj) {
  require_keys(obj, "model",
               {"variant", "lambda", "alpha", "D", "K", "N_cut", "h", "n"});
  const std::string variant = obj.value("variant", "quintic");
  try {
    if (variant == "free") return ModelSpec::free();
    if (variant == "quintic")
      return ModelSpec::quintic(get_num(obj, "model", "lambda", 1.0));
    if (variant == "alpha_truncated")
      return ModelSpec::alpha_truncated(get_num(obj, "model", "alpha", 1.0));
    if (variant == "d_truncated")
      return ModelSpec::d_truncated(get_num(obj, "model", "D", 2.0));
    if (variant == "rescaled_truncated")
      return ModelSpec::rescaled_truncated(get_num(obj, "model", "D", 2.0),
                                           get_num(obj, "model", "K", 1.0));
    if (variant == "torus_truncated") {
      const double D = get_num(obj, "model", "D", 2.0);
      const double K = get_num(obj, "model", "K", 1.0);
      const double Ncut = get_num(obj, "model", "N_cut", 2.0 * D * K);
      return ModelSpec::torus_truncated(Ncut, D, K);
    }
    if (variant == "inhomogeneous") {
      CoefficientSpec h = obj.contains("h") ? parse_h(obj["h"])
                                            : CoefficientSpec::one_plus_cos();
      return ModelSpec::inhomogeneous(h, get_int(obj, "model", "n", 1),
                                      get_num(obj, "model", "lambda", 1.0));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
  throw ConfigError("field 'model.variant' has unknown value '" + variant +
                    "'");
}

InitSpec parse_init_like(const json& obj, const std::string& block,
                         std::string* file, bool* from_file) {
  require_keys(obj, block,
               {"kind", "amplitude", "width", "center", "mode", "path"});
  InitSpec init;
  const std::string kind = obj.value("kind", "sech");
  if (kind == "gaussian") init.kind = InitSpec::Kind::Gaussian;
  else if (kind == "sech") init.kind = InitSpec::Kind::Sech;
  else if (kind == "plane_wave") init.kind = InitSpec::Kind::PlaneWave;
  else if (kind == "zero") init.kind = InitSpec::Kind::Zero;
  else if (kind == "file") {
    if (!file)
      throw ConfigError("field '" + block + ".kind' cannot be 'file' here");
    if (!obj.contains("path"))
      throw ConfigError("field '" + block + ".path' required for kind=file");
    *file = obj["path"].get<std::string>();
    *from_file = true;
  } else {
    throw ConfigError("field '" + block + ".kind' has unknown value '" + kind +
                      "'");
  }
  init.amplitude = get_num(obj, block, "amplitude", 1.0);
  init.width = get_num(obj, block, "width", 1.0);
  if (!(init.width > 0.0))
    throw ConfigError("field '" + block + ".width' must be positive");
  init.center = get_num(obj, block, "center", 0.0);
  init.mode = get_int(obj, block, "mode", 0);
  return init;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config syntax error at byte " + std::to_string(e.byte) +
                      ": " + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  require_keys(root, "<top>",
               {"model", "grid", "time", "init", "seed", "output",
                "experiment"});

  RunConfig cfg;
  cfg.raw = text;

  if (root.contains("model")) cfg.model = parse_model(root["model"]);

  if (root.contains("grid")) {
    const json& g = root["grid"];
    require_keys(g, "grid", {"length", "points"});
    cfg.length = get_num(g, "grid", "length", cfg.length);
    if (!(cfg.length > 0.0))
      throw ConfigError("field 'grid.length' must be positive");
    cfg.points = get_int(g, "grid", "points", cfg.points);
    if (!is_power_of_two(cfg.points) || cfg.points < 8)
      throw ConfigError(
          "field 'grid.points' must be a power of two >= 8, got " +
          std::to_string(cfg.points));
  }

  if (root.contains("time")) {
    const json& t = root["time"];
    require_keys(t, "time", {"T", "dt", "sample_stride"});
    cfg.T = get_num(t, "time", "T", cfg.T);
    if (!(cfg.T > 0.0)) throw ConfigError("field 'time.T' must be positive");
    cfg.dt = get_num(t, "time", "dt", 0.0);
    if (cfg.dt < 0.0) throw ConfigError("field 'time.dt' must be >= 0");
    cfg.sample_stride = get_int(t, "time", "sample_stride", cfg.sample_stride);
    if (cfg.sample_stride < 1)
      throw ConfigError("field 'time.sample_stride' must be >= 1");
  }

  if (root.contains("init"))
    cfg.init = parse_init_like(root["init"], "init", &cfg.init_file,
                               &cfg.init_from_file);

  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned() && !root["seed"].is_number_integer())
      throw ConfigError("field 'seed' must be an integer");
    cfg.seed = root["seed"].get<std::uint64_t>();
  }

  if (root.contains("output")) {
    const json& o = root["output"];
    require_keys(o, "output", {"trajectory", "csv", "json"});
    const auto rel = [&](const std::string& key, std::string fallback) {
      if (!o.contains(key)) return fallback;
      const std::string v = o[key].get<std::string>();
      if (v.empty() || v.front() == '/' || v.find("..") != std::string::npos)
        throw ConfigError("field 'output." + key +
                          "' must be a plain relative file name");
      return v;
    };
    cfg.out_trajectory = rel("trajectory", cfg.out_trajectory);
    cfg.out_csv = rel("csv", cfg.out_csv);
    cfg.out_json = rel("json", cfg.out_json);
  }

  if (root.contains("experiment")) {
    const json& e = root["experiment"];
    if (!e.contains("kind"))
      throw ConfigError("field 'experiment.kind' is required");
    const std::string kind = e["kind"].get<std::string>();
    try {
      if (kind == "homogenization") {
        require_keys(e, "experiment", {"kind", "n_list", "sample_stride"});
        HomogenizationSpec s;
        if (cfg.model.variant != Variant::Inhomogeneous)
          throw ConfigError(
              "homogenization requires model.variant = inhomogeneous");
        s.h = cfg.model.h;
        s.lambda = cfg.model.lambda;
        s.init = cfg.init;
        s.T = cfg.T;
        s.length = cfg.length;
        s.points = cfg.points;
        s.dt = cfg.dt;
        s.seed = cfg.seed;
        s.sample_stride = get_int(e, "experiment", "sample_stride", 256);
        const auto nl = get_list(e, "experiment", "n_list", {1, 2, 4, 8, 16});
        s.n_list.clear();
        for (double v : nl) {
          if (v < 1 || v != std::floor(v))
            throw ConfigError("field 'experiment.n_list' must hold positive "
                              "integers");
          s.n_list.push_back(static_cast<int>(v));
        }
        cfg.homogenization = s;
      } else if (kind == "torus_approx") {
        require_keys(e, "experiment",
                     {"kind", "D", "K_list", "eps_list", "line_factor",
                      "samples"});
        TorusApproxSpec s;
        s.D = get_num(e, "experiment", "D", 2.0);
        s.K_list = get_list(e, "experiment", "K_list", s.K_list);
        s.eps_list = get_list(e, "experiment", "eps_list", s.eps_list);
        s.line_factor = get_int(e, "experiment", "line_factor", 2);
        s.samples = get_int(e, "experiment", "samples", 16);
        s.T = cfg.T;
        s.torus_length = cfg.length;
        s.torus_points = cfg.points;
        s.init = cfg.init;
        s.dt = cfg.dt;
        s.seed = cfg.seed;
        cfg.torus_approx = s;
      } else if (kind == "weak_convergence") {
        require_keys(e, "experiment",
                     {"kind", "x_shift_list", "M_list", "t_list",
                      "functional_count", "D", "bump"});
        WeakConvergenceSpec s;
        s.core = cfg.init;
        if (e.contains("bump"))
          s.bump = parse_init_like(e["bump"], "experiment.bump", nullptr,
                                   nullptr);
        s.x_shift_list =
            get_list(e, "experiment", "x_shift_list", s.x_shift_list);
        s.M_list = get_list(e, "experiment", "M_list", s.M_list);
        s.t_list = get_list(e, "experiment", "t_list", s.t_list);
        s.functional_count = get_int(e, "experiment", "functional_count", 3);
        s.D = get_num(e, "experiment", "D", 2.0);
        s.length = cfg.length;
        s.points = cfg.points;
        s.dt = cfg.dt;
        s.seed = cfg.seed;
        cfg.weak_convergence = s;
      } else if (kind == "nonsqueezing") {
        require_keys(e, "experiment",
                     {"kind", "ell", "alpha_re", "alpha_im", "r",
                      "sample_count", "direction_band"});
        NonsqueezingSpec s;
        s.z_star = cfg.init;
        if (e.contains("ell"))
          s.ell = parse_init_like(e["ell"], "experiment.ell", nullptr, nullptr);
        s.alpha = Complex(get_num(e, "experiment", "alpha_re", 0.0),
                          get_num(e, "experiment", "alpha_im", 0.0));
        s.r = get_num(e, "experiment", "r", 0.1);
        if (!(s.r > 0.0))
          throw ConfigError("field 'experiment.r' must be positive");
        s.sample_count = get_int(e, "experiment", "sample_count", 64);
        s.direction_band = get_num(e, "experiment", "direction_band", 2.0);
        s.T = cfg.T;
        s.model = cfg.model;
        s.length = cfg.length;
        s.points = cfg.points;
        s.dt = cfg.dt;
        s.seed = cfg.seed;
        cfg.nonsqueezing = s;
      } else if (kind == "stability") {
        require_keys(e, "experiment", {"kind", "eps_list", "perturb_data"});
        StabilitySpec s;
        s.model = cfg.model;
        s.init = cfg.init;
        s.eps_list = get_list(e, "experiment", "eps_list", s.eps_list);
        s.perturb_data = e.value("perturb_data", false);
        s.T = cfg.T;
        s.length = cfg.length;
        s.points = cfg.points;
        s.dt = cfg.dt;
        s.seed = cfg.seed;
        cfg.stability = s;
      } else if (kind == "kernel") {
        require_keys(e, "experiment",
                     {"kind", "L", "N", "T", "t_min", "x_samples", "t_samples",
                      "stability_tol"});
        RunConfig::KernelBlock k;
        k.L = get_num(e, "experiment", "L", k.L);
        k.N = get_num(e, "experiment", "N", k.N);
        k.T = get_num(e, "experiment", "T", k.T);
        k.t_min = get_num(e, "experiment", "t_min", 0.05 * k.T);
        if (!(k.t_min > 0.0 && k.t_min < k.T))
          throw ConfigError("field 'experiment.t_min' must lie in (0, T)");
        k.x_samples = get_int(e, "experiment", "x_samples", k.x_samples);
        k.t_samples = get_int(e, "experiment", "t_samples", k.t_samples);
        k.stability_tol = get_num(e, "experiment", "stability_tol", 0.10);
        cfg.kernel = k;
      } else {
        throw ConfigError("field 'experiment.kind' has unknown value '" +
                          kind + "'");
      }
    } catch (const std::invalid_argument& ex) {
      throw ConfigError(std::string("experiment: ") + ex.what());
    }
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace nlslab

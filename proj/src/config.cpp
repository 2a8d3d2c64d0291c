#include "sfwm/config.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "sfwm/io.hpp"

namespace sfwm {

using ojson = nlohmann::ordered_json;

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::SteadyState: return "steady-state";
    case Mode::ValidityCurve: return "validity-curve";
    case Mode::CoefficientScan: return "coefficient-scan";
    case Mode::DriveSweep: return "drive-sweep";
    case Mode::G2: return "g2";
    case Mode::FullReport: return "full-report";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  for (Mode m : {Mode::SteadyState, Mode::ValidityCurve, Mode::CoefficientScan,
                 Mode::DriveSweep, Mode::G2, Mode::FullReport})
    if (s == mode_name(m)) return m;
  throw SimError(ErrKind::ValidationError, "mode: unknown value '" + s + "'");
}

void RunConfig::validate() const {
  params.validate();
  auto check_grid = [](const GridSpec& g, const char* name) {
    if (!(g.min < g.max))
      throw SimError(ErrKind::ValidationError,
                     std::string("grids.") + name + ": min must be < max");
    if (g.count < 2)
      throw SimError(ErrKind::ValidationError,
                     std::string("grids.") + name + ": count must be >= 2");
  };
  check_grid(omega, "omega");
  check_grid(omega_d, "omega_d");
  check_grid(tau, "tau");
  if (threads < 0)
    throw SimError(ErrKind::ValidationError, "threads: must be >= 0");
  if (nz < 2) throw SimError(ErrKind::ValidationError, "nz: must be >= 2");
  if (output_dir.empty())
    throw SimError(ErrKind::ValidationError, "output_dir: must be non-empty");
}

// ---------------------------------------------------------------- presets

RunConfig preset(const std::string& name) {
  RunConfig cfg;  // SystemParams defaults are already the base parameter set
  cfg.preset_name = name;
  if (name == "figA") {
    cfg.mode = Mode::ValidityCurve;
    cfg.omega_d = {1.0, 17.0, 65};
  } else if (name == "figB") {
    cfg.mode = Mode::CoefficientScan;
    cfg.scan = ScanVariable::Omega;
    cfg.omega = {-8.0, 8.0, 2048};
  } else if (name == "figC") {
    cfg.mode = Mode::CoefficientScan;
    cfg.scan = ScanVariable::OmegaD;
    cfg.omega_d = {0.0, 40.0, 161};  // 0.25 step
    cfg.scan_omega_at = 0.0;
  } else if (name == "figD") {
    cfg.mode = Mode::G2;
    cfg.params.omega_d = C(0.0, 0.0);  // strongest-correlation curve
    cfg.omega = {-16.0, 16.0, 4096};
  } else if (name == "figF_a") {
    cfg.mode = Mode::DriveSweep;
    cfg.params.gamma21 = 0.1;
    cfg.params.density = 1e12;
    cfg.omega_d = {0.0, 12.0, 13};
    // the broad ground dephasing widens the Raman line; the rate window
    // must stay wide enough for the edge-density precondition
    cfg.omega = {-32.0, 32.0, 4096};
  } else if (name == "figF_b") {
    cfg.mode = Mode::DriveSweep;
    cfg.params.gamma21 = 1e-3;
    cfg.params.density = 0.5e12;
    cfg.omega_d = {0.0, 12.0, 13};
    cfg.omega = {-32.0, 32.0, 4096};
  } else {
    throw SimError(ErrKind::UnknownPreset, "unknown preset '" + name + "'");
  }
  return cfg;
}

// ------------------------------------------------------------- json intake

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& why) {
  throw SimError(ErrKind::ValidationError, path + ": " + why);
}

double num_at(const ojson& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  return j.get<double>();
}

C rabi_at(const ojson& j, const std::string& path) {
  if (j.is_number()) return C(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return C(j[0].get<double>(), j[1].get<double>());
  bad(path, "expected a number or [re, im]");
}

void parse_params(const ojson& j, SystemParams& p, const std::string& base) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string k = it.key();
    const std::string path = base + "." + k;
    const ojson& v = it.value();
    if (k == "gamma31") p.gamma31 = num_at(v, path);
    else if (k == "Gamma41") p.Gamma41 = num_at(v, path);
    else if (k == "Gamma42") p.Gamma42 = num_at(v, path);
    else if (k == "Gamma31") p.Gamma31 = num_at(v, path);
    else if (k == "Gamma32") p.Gamma32 = num_at(v, path);
    else if (k == "Gamma53") p.Gamma53 = num_at(v, path);
    else if (k == "Gamma54") p.Gamma54 = num_at(v, path);
    else if (k == "gamma21") p.gamma21 = num_at(v, path);
    else if (k == "omega_p") p.omega_p = rabi_at(v, path);
    else if (k == "omega_c") p.omega_c = rabi_at(v, path);
    else if (k == "omega_d") p.omega_d = rabi_at(v, path);
    else if (k == "delta_p") p.delta_p = num_at(v, path);
    else if (k == "delta_c") p.delta_c = num_at(v, path);
    else if (k == "delta_d") p.delta_d = num_at(v, path);
    else if (k == "delta_15") p.delta_15 = num_at(v, path);
    else if (k == "density") p.density = num_at(v, path);
    else if (k == "cross_section") p.cross_section = num_at(v, path);
    else if (k == "length") p.length = num_at(v, path);
    else if (k == "c6") p.c6 = num_at(v, path);
    else if (k == "light_speed_cm_s") p.light_speed_cm_s = num_at(v, path);
    else if (k == "gamma31_hz") p.gamma31_hz = num_at(v, path);
    else if (k == "gamma24_override") p.gamma24_override = num_at(v, path);
    else if (k == "gamma25_override") p.gamma25_override = num_at(v, path);
    else if (k == "gamma35_override") p.gamma35_override = num_at(v, path);
    else if (k == "gamma51_override") p.gamma51_override = num_at(v, path);
    else bad(path, "unknown key");
  }
}

GridSpec parse_grid(const ojson& j, const std::string& base) {
  GridSpec g;
  bool has_min = false, has_max = false, has_count = false;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string path = base + "." + it.key();
    if (it.key() == "min") { g.min = num_at(it.value(), path); has_min = true; }
    else if (it.key() == "max") { g.max = num_at(it.value(), path); has_max = true; }
    else if (it.key() == "count") {
      if (!it.value().is_number_integer()) bad(path, "expected an integer");
      g.count = it.value().get<int>();
      has_count = true;
    } else bad(path, "unknown key");
  }
  if (!has_min || !has_max || !has_count)
    bad(base, "grid needs min, max and count");
  return g;
}

}  // namespace

RunConfig config_from_json_text(const std::string& text,
                                const std::string& source_name) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SimError(ErrKind::ParseError, source_name + ": " + e.what());
  }
  if (!j.is_object())
    throw SimError(ErrKind::ParseError, source_name + ": top level must be an object");

  RunConfig cfg;
  bool have_preset = j.contains("preset");
  if (have_preset) {
    if (!j["preset"].is_string()) bad("preset", "expected a string");
    cfg = preset(j["preset"].get<std::string>());
    // presets never get silently overridden: physics keys conflict
    for (const char* k : {"params", "grids", "scan", "scan_omega_at"})
      if (j.contains(k))
        bad(k, "conflicts with preset '" + cfg.preset_name + "'");
  }

  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string k = it.key();
    const ojson& v = it.value();
    if (k == "preset") continue;
    else if (k == "preset_origin") {
      if (!v.is_string()) bad("preset_origin", "expected a string");
      cfg.preset_name = v.get<std::string>();
    } else if (k == "mode") {
      if (!v.is_string()) bad("mode", "expected a string");
      cfg.mode = parse_mode(v.get<std::string>());
    } else if (k == "params") {
      if (!v.is_object()) bad("params", "expected an object");
      parse_params(v, cfg.params, "params");
    } else if (k == "grids") {
      if (!v.is_object()) bad("grids", "expected an object");
      for (auto g = v.begin(); g != v.end(); ++g) {
        const std::string path = "grids." + g.key();
        if (g.key() == "omega") cfg.omega = parse_grid(g.value(), path);
        else if (g.key() == "omega_d") cfg.omega_d = parse_grid(g.value(), path);
        else if (g.key() == "tau") cfg.tau = parse_grid(g.value(), path);
        else bad(path, "unknown key");
      }
    } else if (k == "scan") {
      if (!v.is_string()) bad("scan", "expected a string");
      std::string s = v.get<std::string>();
      if (s == "omega") cfg.scan = ScanVariable::Omega;
      else if (s == "omega_d") cfg.scan = ScanVariable::OmegaD;
      else bad("scan", "must be 'omega' or 'omega_d'");
    } else if (k == "scan_omega_at") {
      cfg.scan_omega_at = num_at(v, "scan_omega_at");
    } else if (k == "output_dir") {
      if (!v.is_string()) bad("output_dir", "expected a string");
      cfg.output_dir = v.get<std::string>();
    } else if (k == "emit") {
      if (!v.is_object()) bad("emit", "expected an object");
      for (auto e = v.begin(); e != v.end(); ++e) {
        const std::string path = "emit." + e.key();
        if (!e.value().is_boolean()) bad(path, "expected a boolean");
        if (e.key() == "csv") cfg.emit_csv = e.value().get<bool>();
        else if (e.key() == "json") cfg.emit_json = e.value().get<bool>();
        else if (e.key() == "gnuplot_script")
          cfg.emit_gnuplot = e.value().get<bool>();
        else bad(path, "unknown key");
      }
    } else if (k == "threads") {
      if (!v.is_number_integer()) bad("threads", "expected an integer");
      cfg.threads = v.get<int>();
    } else if (k == "nz") {
      if (!v.is_number_integer()) bad("nz", "expected an integer");
      cfg.nz = v.get<int>();
    } else {
      bad(k, "unknown key");
    }
  }
  cfg.validate();
  return cfg;
}

// ------------------------------------------------------------- toml subset

namespace {

// Minimal TOML reader covering flat `key = value` lines, dotted [sections],
// strings, numbers, booleans and numeric arrays. That is all the configs
// here need; anything else is rejected loudly.
ojson toml_to_json(const std::string& text, const std::string& source_name) {
  ojson root = ojson::object();
  ojson* cur = &root;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) -> void {
    throw SimError(ErrKind::ParseError, source_name + ":" +
                                            std::to_string(lineno) + ": " + why);
  };
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  std::function<ojson(std::string)> parse_value = [&](std::string v) -> ojson {
    v = trim(v);
    if (v.empty()) fail("empty value");
    if (v.front() == '"') {
      if (v.size() < 2 || v.back() != '"') fail("unterminated string");
      return v.substr(1, v.size() - 2);
    }
    if (v == "true") return true;
    if (v == "false") return false;
    if (v.front() == '[') {
      if (v.back() != ']') fail("unterminated array");
      ojson arr = ojson::array();
      std::string body = v.substr(1, v.size() - 2);
      std::string item;
      int depth = 0;
      for (char c : body) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
          arr.push_back(parse_value(item));
          item.clear();
        } else {
          item += c;
        }
      }
      if (!trim(item).empty()) arr.push_back(parse_value(item));
      return arr;
    }
    try {
      size_t pos = 0;
      if (v.find_first_of(".eE") != std::string::npos ||
          v.find("inf") != std::string::npos) {
        double d = std::stod(v, &pos);
        if (pos != v.size()) fail("bad number '" + v + "'");
        return d;
      }
      long long i = std::stoll(v, &pos);
      if (pos != v.size()) fail("bad number '" + v + "'");
      return i;
    } catch (const std::exception&) {
      fail("cannot parse value '" + v + "'");
    }
    return nullptr;  // unreachable
  };

  while (std::getline(in, line)) {
    ++lineno;
    // strip comments outside strings
    bool in_str = false;
    std::string clean;
    for (char c : line) {
      if (c == '"') in_str = !in_str;
      if (c == '#' && !in_str) break;
      clean += c;
    }
    clean = trim(clean);
    if (clean.empty()) continue;
    if (clean.front() == '[') {
      if (clean.back() != ']') fail("unterminated section header");
      std::string sec = trim(clean.substr(1, clean.size() - 2));
      if (sec.empty()) fail("empty section name");
      cur = &root;
      std::istringstream ss(sec);
      std::string part;
      while (std::getline(ss, part, '.')) {
        part = trim(part);
        if (part.empty()) fail("empty section component");
        cur = &(*cur)[part];
        if (!cur->is_object() && !cur->is_null()) fail("section clashes with value");
        if (cur->is_null()) *cur = ojson::object();
      }
      continue;
    }
    size_t eq = clean.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    std::string key = trim(clean.substr(0, eq));
    if (key.empty()) fail("empty key");
    (*cur)[key] = parse_value(clean.substr(eq + 1));
  }
  return root;
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw SimError(ErrKind::ParseError, "cannot read config: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string text = ss.str();
  bool toml = path.size() > 5 && path.substr(path.size() - 5) == ".toml";
  if (toml) {
    ojson j = toml_to_json(text, path);
    return config_from_json_text(j.dump(), path);
  }
  return config_from_json_text(text, path);
}

// --------------------------------------------------------- canonical form

std::string canonical_config_json(const RunConfig& cfg) {
  ojson j;
  j["mode"] = mode_name(cfg.mode);
  if (!cfg.preset_name.empty()) j["preset_origin"] = cfg.preset_name;
  ojson p;
  const SystemParams& sp = cfg.params;
  auto put = [](ojson& o, const char* k, double v) {
    o[k] = ojson::parse(format_g17(v));
  };
  put(p, "gamma31", sp.gamma31);
  put(p, "Gamma41", sp.Gamma41);
  put(p, "Gamma42", sp.Gamma42);
  put(p, "Gamma31", sp.Gamma31);
  put(p, "Gamma32", sp.Gamma32);
  put(p, "Gamma53", sp.Gamma53);
  put(p, "Gamma54", sp.Gamma54);
  put(p, "gamma21", sp.gamma21);
  p["omega_p"] = {sp.omega_p.real(), sp.omega_p.imag()};
  p["omega_c"] = {sp.omega_c.real(), sp.omega_c.imag()};
  p["omega_d"] = {sp.omega_d.real(), sp.omega_d.imag()};
  put(p, "delta_p", sp.delta_p);
  put(p, "delta_c", sp.delta_c);
  put(p, "delta_d", sp.delta_d);
  put(p, "delta_15", sp.delta_15);
  put(p, "density", sp.density);
  put(p, "cross_section", sp.cross_section);
  put(p, "length", sp.length);
  put(p, "c6", sp.c6);
  put(p, "light_speed_cm_s", sp.light_speed_cm_s);
  put(p, "gamma31_hz", sp.gamma31_hz);
  put(p, "gamma24_override", sp.gamma24_override);
  put(p, "gamma25_override", sp.gamma25_override);
  put(p, "gamma35_override", sp.gamma35_override);
  put(p, "gamma51_override", sp.gamma51_override);
  j["params"] = p;
  auto grid = [&](const GridSpec& g) {
    ojson o;
    o["min"] = ojson::parse(format_g17(g.min));
    o["max"] = ojson::parse(format_g17(g.max));
    o["count"] = g.count;
    return o;
  };
  j["grids"] = {{"omega", grid(cfg.omega)},
                {"omega_d", grid(cfg.omega_d)},
                {"tau", grid(cfg.tau)}};
  j["scan"] = cfg.scan == ScanVariable::Omega ? "omega" : "omega_d";
  j["scan_omega_at"] = ojson::parse(format_g17(cfg.scan_omega_at));
  j["output_dir"] = cfg.output_dir;
  j["emit"] = {{"csv", cfg.emit_csv},
               {"json", cfg.emit_json},
               {"gnuplot_script", cfg.emit_gnuplot}};
  j["threads"] = cfg.threads;
  j["nz"] = cfg.nz;
  return j.dump(2) + "\n";
}

}  // namespace sfwm

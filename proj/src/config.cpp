#include "beqt/config.hpp"

#include <fstream>
#include <sstream>

namespace beqt {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
  std::size_t pos = 0;
  double out;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) + ": bad number '" + v + "'");
  }
  if (pos != v.size())
    throw ConfigError("line " + std::to_string(line) + ": bad number '" + v + "'");
  return out;
}

long long parse_int(const std::string& v, int line) {
  std::size_t pos = 0;
  long long out;
  try {
    out = std::stoll(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) + ": bad integer '" + v + "'");
  }
  if (pos != v.size())
    throw ConfigError("line " + std::to_string(line) + ": bad integer '" + v + "'");
  return out;
}

std::uint64_t parse_u64(const std::string& v, int line) {
  std::size_t pos = 0;
  unsigned long long out;
  try {
    out = std::stoull(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) + ": bad seed '" + v + "'");
  }
  if (pos != v.size())
    throw ConfigError("line " + std::to_string(line) + ": bad seed '" + v + "'");
  return out;
}

}  // namespace

void RunConfig::validate() const {
  params.validate();
  if (!seed_set) throw ConfigError("initial.seed is mandatory");
  if (!(T >= 0.0)) throw ConfigError("run.T must be >= 0");
  if (cadence < 1) throw ConfigError("run.cadence must be >= 1");
  if (!(stepper.dt > 0.0)) throw ConfigError("stepper.dt must be > 0");
  if (galerkin_n < 0) throw ConfigError("galerkin.n must be >= 0");
  if (generator != "random-band" && generator != "uniaxial-winding" &&
      generator != "taylor-green")
    throw ConfigError("unknown initial.generator '" + generator + "'");
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");

    if (key == "grid.N") cfg.N = static_cast<int>(parse_int(val, lineno));
    else if (key == "grid.dealias") {
      if (val == "two-thirds") cfg.dealias = DealiasRule::TwoThirds;
      else if (val == "half") cfg.dealias = DealiasRule::Half;
      else throw ConfigError("line " + std::to_string(lineno) +
                             ": grid.dealias must be 'two-thirds' or 'half'");
    }
    else if (key == "params.a") cfg.params.a = parse_double(val, lineno);
    else if (key == "params.b") cfg.params.b = parse_double(val, lineno);
    else if (key == "params.c") cfg.params.c = parse_double(val, lineno);
    else if (key == "params.L") cfg.params.L = parse_double(val, lineno);
    else if (key == "params.Gamma") cfg.params.Gamma = parse_double(val, lineno);
    else if (key == "params.nu") cfg.params.nu = parse_double(val, lineno);
    else if (key == "params.xi") cfg.params.xi = parse_double(val, lineno);
    else if (key == "stepper.dt") cfg.stepper.dt = parse_double(val, lineno);
    else if (key == "stepper.scheme") {
      if (val == "imex-euler") cfg.stepper.scheme = Scheme::ImexEuler;
      else if (val == "imex-sbdf2") cfg.stepper.scheme = Scheme::ImexSbdf2;
      else throw ConfigError("line " + std::to_string(lineno) +
                             ": stepper.scheme must be 'imex-euler' or 'imex-sbdf2'");
    }
    else if (key == "stepper.cfl_max") cfg.stepper.cfl_max = parse_double(val, lineno);
    else if (key == "galerkin.n") cfg.galerkin_n = static_cast<int>(parse_int(val, lineno));
    else if (key == "initial.generator") cfg.generator = val;
    else if (key == "initial.seed") { cfg.seed = parse_u64(val, lineno); cfg.seed_set = true; }
    else if (key == "initial.kmax") cfg.kmax = static_cast<int>(parse_int(val, lineno));
    else if (key == "initial.u_l2") cfg.u_l2 = parse_double(val, lineno);
    else if (key == "initial.q_h1") cfg.q_h1 = parse_double(val, lineno);
    else if (key == "initial.winding_s") cfg.winding_s = parse_double(val, lineno);
    else if (key == "initial.winding_w1") cfg.winding_w1 = static_cast<int>(parse_int(val, lineno));
    else if (key == "initial.winding_w2") cfg.winding_w2 = static_cast<int>(parse_int(val, lineno));
    else if (key == "initial.u_amplitude") cfg.u_amplitude = parse_double(val, lineno);
    else if (key == "run.T") cfg.T = parse_double(val, lineno);
    else if (key == "run.cadence") cfg.cadence = static_cast<int>(parse_int(val, lineno));
    else if (key == "output.dir") cfg.out_dir = val;
    else
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_config_text(buf.str());
}

SimState build_initial_state(const RunConfig& cfg) {
  auto g = SpectralGrid::make(cfg.N, cfg.dealias);
  SimState s;
  s.params = cfg.params;
  s.galerkin_n = cfg.galerkin_n;
  if (cfg.generator == "random-band") {
    InitialDataSpec spec;
    spec.seed = cfg.seed;
    spec.kmax = cfg.kmax;
    spec.u_l2 = cfg.u_l2;
    spec.q_h1 = cfg.q_h1;
    SimState rs = make_random_band_state(g, cfg.params, spec);
    s.Q = std::move(rs.Q);
    s.u = std::move(rs.u);
  } else if (cfg.generator == "uniaxial-winding") {
    s.Q = uniaxial_winding(g, cfg.winding_s, cfg.winding_w1, cfg.winding_w2);
    s.u = taylor_green(g, cfg.u_amplitude);
  } else {  // taylor-green: quiescent Q, classical vortex lattice u
    s.Q = random_band_qtensor(g, cfg.seed, cfg.kmax, cfg.q_h1);
    s.u = taylor_green(g, cfg.u_amplitude);
  }
  return s;
}

}  // namespace beqt

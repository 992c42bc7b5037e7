#include "config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace lowmach {

namespace {

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: '" + v + "'");
  }
}

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": not an integer: '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key + ": not a boolean: '" + v + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

} // namespace

void apply_option(CaseConfig& cfg, const std::string& key,
                  const std::string& value) {
  RunConfig& r = cfg.run;
  if (key == "case") cfg.case_name = value;
  else if (key == "mach") r.mach = to_double(key, value);
  else if (key == "gamma") r.gamma = to_double(key, value);
  else if (key == "cfl") r.cfl = to_double(key, value);
  else if (key == "order") r.order = to_int(key, value);
  else if (key == "t_end") r.t_end = to_double(key, value);
  else if (key == "a_safety") r.a_safety = to_double(key, value);
  else if (key == "lin_tol") r.lin_tol = to_double(key, value);
  else if (key == "lin_maxiter") r.lin_maxiter = to_int(key, value);
  else if (key == "output_every") r.output_every = to_int(key, value);
  else if (key == "output_dir") r.output_dir = value;
  else if (key == "format") r.format = value;
  else if (key == "variable_stage_steps")
    r.variable_stage_steps = to_bool(key, value);
  else if (key == "dimensional_output")
    r.dimensional_output = to_bool(key, value);
  else if (key == "nx") r.nx = to_int(key, value);
  else if (key == "ny") r.ny = to_int(key, value);
  else throw ConfigError("unknown option '" + key + "'");
}

CaseConfig parse_config(std::istream& is) {
  CaseConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    apply_option(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

CaseConfig parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open config file '" + path + "'");
  return parse_config(f);
}

std::string serialize_config(const CaseConfig& cfg) {
  const RunConfig& r = cfg.run;
  std::ostringstream os;
  os << "case = " << cfg.case_name << "\n"
     << "mach = " << fmt(r.mach) << "\n"
     << "gamma = " << fmt(r.gamma) << "\n"
     << "cfl = " << fmt(r.cfl) << "\n"
     << "order = " << r.order << "\n"
     << "t_end = " << fmt(r.t_end) << "\n"
     << "a_safety = " << fmt(r.a_safety) << "\n"
     << "lin_tol = " << fmt(r.lin_tol) << "\n"
     << "lin_maxiter = " << r.lin_maxiter << "\n"
     << "output_every = " << r.output_every << "\n"
     << "output_dir = " << r.output_dir << "\n"
     << "format = " << r.format << "\n"
     << "variable_stage_steps = " << (r.variable_stage_steps ? "true" : "false")
     << "\n"
     << "dimensional_output = " << (r.dimensional_output ? "true" : "false")
     << "\n"
     << "nx = " << r.nx << "\n"
     << "ny = " << r.ny << "\n";
  return os.str();
}

Session make_session(const CaseConfig& cfg) {
  // catch bad user values (e.g. mach = 0) even when the case overrides them
  cfg.run.validate(1);
  Session s;
  s.spec = cfg.case_name == "uniform"
               ? init_uniform(cfg.run.mach, cfg.run.gamma)
               : make_case(cfg.case_name, cfg.run.mach);
  s.run = cfg.run;
  s.run.gamma = s.spec.gamma;
  s.run.mach = s.spec.mach;
  if (!(s.run.t_end > 0.0)) s.run.t_end = s.spec.t_end;
  int ny = s.run.ny;
  if (s.spec.dim == 2 && ny <= 1) ny = s.run.nx;
  s.run.ny = s.spec.dim == 2 ? ny : 1;
  s.run.validate(s.spec.dim);
  s.state = initialize(s.spec, s.run.nx, s.run.ny);
  return s;
}

} // namespace lowmach

#ifndef LOWMACH_CORE_CONFIG_HPP
#define LOWMACH_CORE_CONFIG_HPP

#include <iosfwd>
#include <string>

#include "cases.hpp"
#include "integrator.hpp"

namespace lowmach {

// Everything needed to set up and run a case; "case" picks the initial data
// (sod, mach_shock, gresho, smooth_gresho, uniform).
struct CaseConfig {
  std::string case_name = "sod";
  RunConfig run;
};

// Assign one key=value option. Throws ConfigError naming the key for unknown
// keys or unparsable values.
void apply_option(CaseConfig& cfg, const std::string& key,
                  const std::string& value);

// Line-oriented "key = value" format, '#' starts a comment.
CaseConfig parse_config(std::istream& is);
CaseConfig parse_config_file(const std::string& path);

// Emits the full option set in the same format; parse(serialize(c)) == c.
std::string serialize_config(const CaseConfig& cfg);

// A resolved run: case defaults applied (gamma always comes from the case;
// t_end does too unless the config sets a positive one) and the initial
// state built on the requested grid.
struct Session {
  CaseSpec spec;
  RunConfig run;
  State state;
};

Session make_session(const CaseConfig& cfg);

} // namespace lowmach

#endif

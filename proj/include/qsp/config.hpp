// Run configuration for the command-line front end.
//
// A config file is key=value lines with '#' comments.  QSP_CONFIG names the
// file; command-line flags override whatever it sets.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qsp/field.hpp"
#include "qsp/macdonald.hpp"

namespace qsp {

enum class OutputFormat { Json, Csv, Text };
OutputFormat parse_output_format(const std::string& s);

struct RunConfig {
  OutputFormat format = OutputFormat::Json;
  int order = 12;
  Rational q_value = Rational(1, 2);
  std::size_t weyl_cap = kDefaultSolverCap;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::optional<long> lambda_height;
  std::optional<std::string> out;
};

// Keys: format, order, q_value, weyl_cap, workers, seed, lambda_height, out.
// ParseError names the line on a malformed entry or an unknown key.
void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& origin = "config");
void apply_config_file(RunConfig& cfg, const std::string& path);

// The path in QSP_CONFIG, if set and non-empty.
std::optional<std::string> config_path_from_env();

// "1/2", "0.5" or "3".
Rational parse_rational(const std::string& s);

}  // namespace qsp

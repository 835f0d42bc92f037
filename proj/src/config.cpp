#include "qsp/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qsp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

long parse_long(const std::string& s, const std::string& key, long lo) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || v < lo)
    throw ParseError(key + " expects an integer >= " + std::to_string(lo) + ", got '" + s + "'");
  return v;
}

}  // namespace

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw ParseError("format must be json, csv or text, got '" + s + "'");
}

Rational parse_rational(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty rational");
  const auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      if (digits.empty() || digits.find_first_not_of("+-0123456789") != std::string::npos) throw ParseError("");
      mpz_class den = 1;
      for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      Rational r(mpz_class(digits == "-" || digits == "+" ? "0" : digits, 10), den);
      r.canonicalize();
      return r;
    }
    if (s.find_first_not_of("+-0123456789/") != std::string::npos) throw ParseError("");
    Rational r(s[0] == '+' ? s.substr(1) : s, 10);
    if (r.get_den() == 0) throw ParseError("");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
  } catch (const ParseError&) {
  }
  throw ParseError("not a rational number: '" + text + "'");
}

void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ParseError(where + ": expected key=value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    try {
      if (key == "format") {
        cfg.format = parse_output_format(value);
      } else if (key == "order") {
        cfg.order = static_cast<int>(parse_long(value, key, 1));
      } else if (key == "q_value") {
        cfg.q_value = parse_rational(value);
      } else if (key == "weyl_cap") {
        cfg.weyl_cap = static_cast<std::size_t>(parse_long(value, key, 1));
      } else if (key == "workers") {
        cfg.workers = static_cast<unsigned>(parse_long(value, key, 1));
      } else if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(parse_long(value, key, 0));
      } else if (key == "lambda_height") {
        cfg.lambda_height = parse_long(value, key, 0);
      } else if (key == "out") {
        cfg.out = value;
      } else {
        throw ParseError("unknown key '" + key + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str(), path);
}

std::optional<std::string> config_path_from_env() {
  const char* p = std::getenv("QSP_CONFIG");
  if (p == nullptr || *p == '\0') return std::nullopt;
  return std::string(p);
}

}  // namespace qsp

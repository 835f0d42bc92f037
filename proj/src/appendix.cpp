#include "qsp/appendix.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "qsp/detail/expr.hpp"

namespace qsp {

namespace embedded {
extern const std::string_view appendix_text;
}

using detail::ExprEnv;
using detail::split_top;
using detail::trim;

std::string SymmetricPairSpec::label() const {
  if (case_id == "CaseI") return "CaseI(" + std::string(1, type) + "," + std::to_string(n) + ")";
  if (n == 0) return case_id;
  if (r != 0) return case_id + "(" + std::to_string(n) + "," + std::to_string(r) + ")";
  return case_id + "(" + std::to_string(n) + ")";
}

SymmetricPairSpec parse_pair_label(const std::string& text) {
  SymmetricPairSpec s;
  std::string t = trim(text);
  std::size_t open = t.find('(');
  if (open == std::string::npos) {
    s.case_id = t;
    return s;
  }
  if (t.back() != ')') throw InvalidSpec("bad pair label '" + text + "'");
  s.case_id = t.substr(0, open);
  std::vector<std::string> args = split_top(t.substr(open + 1, t.size() - open - 2), ',');
  try {
    std::size_t k = 0;
    if (s.case_id == "CaseI") {
      if (args.empty() || args[0].size() != 1) throw InvalidSpec("bad pair label '" + text + "'");
      s.type = args[0][0];
      k = 1;
    }
    if (k < args.size()) s.n = std::stol(args[k++]);
    if (k < args.size()) s.r = std::stol(args[k++]);
    if (k != args.size()) throw InvalidSpec("bad pair label '" + text + "'");
  } catch (const std::logic_error&) {
    throw InvalidSpec("bad pair label '" + text + "'");
  }
  return s;
}

AppendixData AppendixData::parse(std::string_view text) {
  AppendixData d;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  AppendixRecord* cur = nullptr;
  static const std::set<std::string> keys = {"case_id", "params",   "ambient",  "constraints", "theta",
                                             "sigma_type", "a_values", "g_values", "minuscule"};
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    std::size_t colon = t.find(':');
    if (colon == std::string::npos) throw ParseError("appendix line " + std::to_string(lineno) + ": expected key: value");
    std::string key = trim(t.substr(0, colon)), value = trim(t.substr(colon + 1));
    if (!keys.count(key)) throw ParseError("appendix line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (key == "case_id") {
      d.records_.emplace_back();
      cur = &d.records_.back();
      cur->case_id = value;
      cur->line = lineno;
      continue;
    }
    if (!cur) throw ParseError("appendix line " + std::to_string(lineno) + ": field before case_id");
    if (key == "params") {
      std::istringstream ps(value);
      std::string p;
      while (ps >> p) cur->params.push_back(p);
    } else if (key == "ambient") {
      cur->ambient = value;
    } else if (key == "constraints") {
      cur->constraints = value;
    } else if (key == "theta") {
      cur->theta = value;
    } else if (key == "sigma_type") {
      cur->sigma_type = value;
    } else if (key == "a_values") {
      cur->a_values = value;
    } else if (key == "g_values") {
      cur->g_values = value;
    } else {
      cur->minuscule = value;
    }
  }
  std::set<std::string> seen;
  for (const auto& r : d.records_) {
    if (!seen.insert(r.case_id).second) throw ParseError("appendix: duplicate case " + r.case_id);
    if (r.ambient.empty() || r.theta.empty() || r.sigma_type.empty() || r.a_values.empty() || r.g_values.empty() ||
        r.minuscule.empty())
      throw ParseError("appendix: case " + r.case_id + " is missing a field");
  }
  return d;
}

AppendixData AppendixData::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidSpec("cannot open appendix file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

const AppendixData& AppendixData::builtin() {
  static const AppendixData data = parse(embedded::appendix_text);
  return data;
}

std::vector<std::string> AppendixData::case_ids() const {
  std::vector<std::string> ids;
  for (const auto& r : records_) ids.push_back(r.case_id);
  return ids;
}

const AppendixRecord& AppendixData::record(const std::string& case_id) const {
  for (const auto& r : records_)
    if (r.case_id == case_id) return r;
  std::string valid;
  for (const auto& r : records_) valid += (valid.empty() ? "" : ", ") + r.case_id;
  throw InvalidSpec("unknown case '" + case_id + "'; valid cases: " + valid);
}

namespace {

std::string substitute_type(std::string s, char type) {
  std::size_t at;
  while ((at = s.find("$T")) != std::string::npos) {
    if (!type) throw InvalidSpec("case needs a Cartan type");
    s.replace(at, 2, std::string(1, type));
  }
  return s;
}

// "B{n}", "F4", "A{n-1}"
CartanType resolve_type(const std::string& text, const ExprEnv& env) {
  std::string t = trim(text);
  if (t.empty() || !std::isupper(static_cast<unsigned char>(t[0]))) throw ParseError("bad type '" + text + "'");
  CartanType c;
  c.letter = t[0];
  std::string rest = t.substr(1);
  if (!rest.empty() && rest.front() == '{' && rest.back() == '}')
    c.rank = static_cast<int>(detail::eval_int(rest.substr(1, rest.size() - 2), env));
  else
    c.rank = static_cast<int>(detail::eval_int(rest, env));
  return c;
}

// "a[lo..hi]" -> the bracket contents
std::string bracket_body(const std::string& s, std::size_t* pos) {
  std::size_t open = s.find('[', *pos);
  if (open == std::string::npos) throw ParseError("expected [ in '" + s + "'");
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']' && --depth == 0) {
      *pos = i + 1;
      return s.substr(open + 1, i - open - 1);
    }
  }
  throw ParseError("unbalanced [ in '" + s + "'");
}

// Signed combination of simple roots, e.g. "-a[i-1]-2a[r+1..n]".
RatVec eval_combination(const std::string& s, const ExprEnv& env, std::size_t rank) {
  RatVec v(rank, 0);
  std::string t = trim(s);
  if (t == "0") return v;
  std::size_t pos = 0;
  while (true) {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos >= t.size()) break;
    Rational sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      if (t[pos] == '-') sign = -1;
      ++pos;
      while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    }
    Rational coef = 1;
    if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
      std::size_t start = pos;
      while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
      coef = Rational(mpz_class(t.substr(start, pos - start)));
    }
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos >= t.size() || t[pos] != 'a') throw ParseError("bad root combination '" + s + "'");
    std::string body = bracket_body(t, &pos);
    for (long j : detail::eval_index_list(body, env)) {
      if (j < 1 || j > static_cast<long>(rank)) throw ParseError("root index out of range in '" + s + "'");
      v[j - 1] += sign * coef;
    }
  }
  return v;
}

FieldElem eval_q_expr(const std::string& text, const ExprEnv& env) {
  std::string t = trim(text);
  if (t == "q") return FieldElem::q_power(1);
  if (t.size() < 3 || t[0] != 'q' || t[1] != '^') {
    if (t == "1") return FieldElem(1L);
    throw ParseError("bad q-power '" + text + "'");
  }
  std::string e = t.substr(2);
  if (!e.empty() && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
  return FieldElem::q_power(detail::eval_expr(e, env));
}

std::map<long, FieldElem> eval_values(const std::string& text, const BoundRecord& b, const RootDatum& datum) {
  ExprEnv env;
  env.vars = b.vars;
  env.call = [&datum](const std::string& name, const Rational& arg) -> Rational {
    if (name != "len") throw ParseError("unknown function " + name);
    long i = arg.get_num().get_si();
    if (arg.get_den() != 1 || i < 1 || i > datum.rank()) throw ParseError("len() index out of range");
    return datum.gram()[i - 1][i - 1];
  };
  std::map<long, FieldElem> out;
  for (const std::string& clause : split_top(text, ';')) {
    if (clause.empty()) continue;
    std::size_t eq = clause.find('=');
    if (eq == std::string::npos) throw ParseError("bad value clause '" + clause + "'");
    std::string lhs = trim(clause.substr(0, eq));
    std::size_t pos = 0;
    std::string body = bracket_body(lhs, &pos);
    for (long i : detail::eval_index_list(body, env)) {
      env.vars["i"] = i;
      out[i] = eval_q_expr(clause.substr(eq + 1), env);
    }
  }
  return out;
}

}  // namespace

std::map<long, FieldElem> BoundRecord::a_values(const RootDatum& d) const { return eval_values(record->a_values, *this, d); }
std::map<long, FieldElem> BoundRecord::g_values(const RootDatum& d) const { return eval_values(record->g_values, *this, d); }

BoundRecord AppendixData::bind(const SymmetricPairSpec& spec) const {
  const AppendixRecord& rec = record(spec.case_id);
  BoundRecord b;
  b.record = &rec;
  b.spec = spec;
  ExprEnv env;
  for (const std::string& p : rec.params) {
    if (p == "n") {
      env.vars["n"] = spec.n;
    } else if (p == "r") {
      env.vars["r"] = spec.r;
    } else if (p == "type") {
      if (!spec.type) throw InvalidSpec(rec.case_id + " needs a Cartan type");
    } else {
      throw ParseError("appendix: unknown parameter '" + p + "' in " + rec.case_id);
    }
  }
  auto has = [&rec](const char* p) {
    for (const auto& x : rec.params)
      if (x == p) return true;
    return false;
  };
  if (!has("n") && spec.n != 0) throw InvalidSpec(rec.case_id + " takes no rank parameter");
  if (!has("r") && spec.r != 0) throw InvalidSpec(rec.case_id + " takes no r parameter");
  if (!has("type") && spec.type) throw InvalidSpec(rec.case_id + " takes no type parameter");
  for (const std::string& c : split_top(rec.constraints, ';')) {
    if (c.empty()) continue;
    if (c.rfind("let ", 0) == 0) {
      std::size_t eq = c.find('=');
      if (eq == std::string::npos) throw ParseError("bad let in " + rec.case_id);
      std::string name = trim(c.substr(4, eq - 4));
      env.vars[name] = detail::eval_expr(c.substr(eq + 1), env);
      continue;
    }
    if (!detail::eval_condition(c, env))
      throw InvalidSpec(spec.label() + " violates the constraint " + c);
  }
  b.vars = env.vars;

  std::string amb = substitute_type(rec.ambient, spec.type);
  std::size_t start = 0;
  while (true) {
    std::size_t at = amb.find(" x ", start);
    b.ambient.push_back(resolve_type(amb.substr(start, at == std::string::npos ? std::string::npos : at - start), env));
    if (at == std::string::npos) break;
    start = at + 3;
  }
  std::size_t rank = 0;
  for (const auto& c : b.ambient) rank += static_cast<std::size_t>(c.rank);

  b.theta_literal.assign(rank, RatVec(rank, 0));
  std::vector<bool> assigned(rank, false);
  for (const std::string& clause : split_top(rec.theta, ';')) {
    if (clause.empty()) continue;
    std::size_t arrow = clause.find("->");
    if (arrow == std::string::npos) throw ParseError("bad theta clause '" + clause + "'");
    std::string lhs = trim(clause.substr(0, arrow));
    std::size_t pos = 0;
    for (long i : detail::eval_index_list(bracket_body(lhs, &pos), env)) {
      if (i < 1 || i > static_cast<long>(rank)) throw ParseError("theta index out of range in " + rec.case_id);
      if (assigned[i - 1]) throw ParseError("theta assigns alpha_" + std::to_string(i) + " twice in " + rec.case_id);
      ExprEnv local = env;
      local.vars["i"] = i;
      RatVec img = eval_combination(clause.substr(arrow + 2), local, rank);
      for (std::size_t k = 0; k < rank; ++k) b.theta_literal[k][i - 1] = img[k];
      assigned[i - 1] = true;
    }
  }
  for (std::size_t i = 0; i < rank; ++i)
    if (!assigned[i]) throw ParseError("theta leaves alpha_" + std::to_string(i + 1) + " unassigned in " + rec.case_id);

  std::string st = substitute_type(rec.sigma_type, spec.type);
  std::size_t br = st.find('[');
  std::string label = trim(st.substr(0, br));
  if (label != "?") b.sigma_label = resolve_type(label, env).label();
  if (br != std::string::npos) {
    std::size_t pos = 0;
    b.sigma_indices = detail::eval_index_list(bracket_body(st, &pos), env);
  }

  std::string m = trim(rec.minuscule);
  if (m == "none") {
    b.special_mode = BoundRecord::Special::None;
  } else if (m == "from-type") {
    b.special_mode = BoundRecord::Special::FromType;
  } else {
    b.special_mode = BoundRecord::Special::Listed;
    for (const std::string& entry : split_top(m, ';')) {
      std::istringstream es(entry);
      MinusculeEntry e;
      std::string tok;
      es >> e.kind;
      if (e.kind != "minuscule" && e.kind != "pseudo") throw ParseError("bad minuscule kind in " + rec.case_id);
      while (es >> tok) {
        std::size_t pos = 0;
        if (tok.rfind("restricted=", 0) == 0) {
          e.restricted = detail::eval_int(bracket_body(tok, &pos), env);
        } else if (tok == "lift=none") {
          e.lift.reset();
        } else if (tok.rfind("lift=", 0) == 0) {
          e.lift = detail::eval_int(bracket_body(tok, &pos), env);
        } else {
          throw ParseError("bad minuscule token '" + tok + "' in " + rec.case_id);
        }
      }
      b.special.push_back(e);
    }
  }
  return b;
}

}  // namespace qsp

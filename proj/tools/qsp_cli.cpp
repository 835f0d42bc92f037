// qsp: pair data, Macdonald polynomials and verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 computational refusal (Weyl cap or eigenvalue collision).
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsp/config.hpp"
#include "qsp/suites.hpp"

using nlohmann::json;
using namespace qsp;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2, kRefused = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string case_pos, case_opt, type_letter;
  long n = 0, r = 0;
  std::string lambda, sigma, a, g, suite;
  int order = 12;
  std::string q, format, out;
  std::size_t weyl_cap = 0;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  long lambda_height = 0;
  std::map<std::string, CLI::Option*> given;
  bool has(const std::string& k) const { return given.count(k) && given.at(k)->count() > 0; }
};

void add_common(CLI::App* cmd, Flags& f, bool with_case) {
  if (with_case) {
    cmd->add_option("case_id", f.case_pos, "Case id (AI, BI, CaseI, EII, ...) or a label such as BI(4,2)");
    f.given["case"] = cmd->add_option("--case", f.case_opt, "Case id or label");
    f.given["n"] = cmd->add_option("--n", f.n, "Rank parameter n");
    f.given["r"] = cmd->add_option("--r", f.r, "Rank parameter r");
    f.given["type"] = cmd->add_option("--type", f.type_letter, "Cartan letter for Case I");
  }
  f.given["order"] = cmd->add_option("--order", f.order, "Truncation order")->check(CLI::PositiveNumber);
  f.given["q"] = cmd->add_option("--q", f.q, "Numeric q for the inner product, e.g. 1/2");
  f.given["format"] = cmd->add_option("--format", f.format, "json, csv or text");
  f.given["out"] = cmd->add_option("--out", f.out, "Write the report here instead of stdout");
  f.given["weyl_cap"] = cmd->add_option("--weyl-cap", f.weyl_cap, "Largest |W| the solver enumerates")->check(CLI::PositiveNumber);
  f.given["workers"] = cmd->add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
  f.given["seed"] = cmd->add_option("--seed", f.seed, "Shuffle seed for the Weyl-group enumeration (0 keeps it)");
}

RunConfig resolve_config(const Flags& f) {
  RunConfig cfg;
  if (auto path = config_path_from_env()) apply_config_file(cfg, *path);
  if (f.has("order")) cfg.order = f.order;
  if (f.has("q")) cfg.q_value = parse_rational(f.q);
  if (f.has("format")) cfg.format = parse_output_format(f.format);
  if (f.has("out")) cfg.out = f.out;
  if (f.has("weyl_cap")) cfg.weyl_cap = f.weyl_cap;
  if (f.has("workers")) cfg.workers = f.workers;
  if (f.has("seed")) cfg.seed = f.seed;
  if (f.has("lambda_height")) cfg.lambda_height = f.lambda_height;
  return cfg;
}

std::optional<SymmetricPairSpec> resolve_case(const Flags& f) {
  if (!f.case_pos.empty() && f.has("case") && f.case_pos != f.case_opt)
    throw UsageError("the case is given twice: '" + f.case_pos + "' and '" + f.case_opt + "'");
  const std::string id = f.case_pos.empty() ? f.case_opt : f.case_pos;
  if (id.empty()) return std::nullopt;
  SymmetricPairSpec s;
  if (id.find('(') != std::string::npos) {
    s = parse_pair_label(id);
  } else {
    s.case_id = id;
    s.n = f.n;
    s.r = f.r;
    if (!f.type_letter.empty()) s.type = f.type_letter[0];
  }
  const auto ids = AppendixData::builtin().case_ids();
  if (std::find(ids.begin(), ids.end(), s.case_id) == ids.end()) {
    std::string list;
    for (const auto& c : ids) list += (list.empty() ? "" : ", ") + c;
    throw UsageError("unknown case '" + s.case_id + "'; valid cases: " + list);
  }
  return s;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out) {
    std::ofstream o(*cfg.out);
    if (!o) throw UsageError("cannot write " + *cfg.out);
    o << text;
  } else {
    std::cout << text;
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string weight_strings(const Weight& w) {
  std::string s;
  for (const auto& v : w) s += (s.empty() ? "" : " ") + v.get_str();
  return s;
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& v : w) a.push_back(v.get_str());
  return a;
}

// ---------------------------------------------------------------- pair-info

int cmd_pair_info(const Flags& f) {
  const RunConfig cfg = resolve_config(f);
  auto spec = resolve_case(f);
  if (!spec) throw UsageError("pair-info needs a case");
  const SymmetricPair p = build_pair(*spec);
  const auto& S = p.sigma;

  json theta = json::array();
  for (const auto& row : p.theta) theta.push_back(weight_json(row));
  json simple = json::array(), mult = json::object(), a = json::object(), g = json::object();
  for (int i = 0; i < S.rank(); ++i) {
    const std::string key = std::to_string(S.labels[i]);
    simple.push_back({{"label", S.labels[i]}, {"ambient", weight_json(S.simple_restricted[i])}});
    mult[key] = S.mult[i];
    a[key] = S.a[i].to_string();
    g[key] = S.g[i].to_string();
  }
  json positive = json::array();
  for (std::size_t k = 0; k < S.datum.positive_roots().size(); ++k)
    positive.push_back({{"root", S.datum.positive_roots()[k]},
                        {"mult", S.mult_positive[k]},
                        {"a", S.a_positive[k].to_string()},
                        {"g", S.g_positive[k].to_string()}});
  json special = json::array();
  for (const auto& w : special_weights(p))
    special.push_back({{"kind", special_kind_name(w.kind)},
                       {"sigma_index", w.sigma_index},
                       {"label", w.label},
                       {"lift", w.lift ? json(*w.lift) : json(nullptr)}});
  json j = {{"pair", spec->label()},
            {"ambient", p.ambient.type_label()},
            {"normalization", normalization_name(p.normalization)},
            {"theta", theta},
            {"theta_corrected", p.theta_corrected},
            {"correction", p.correction},
            {"pi_theta", p.pi_theta},
            {"pi_star", p.pi_star},
            {"sigma_type", S.type_label},
            {"simple_restricted", simple},
            {"mult", mult},
            {"a", a},
            {"g", g},
            {"positive_roots", positive},
            {"special_weights", special}};

  std::ostringstream o;
  switch (cfg.format) {
    case OutputFormat::Json:
      o << j.dump(2) << "\n";
      break;
    case OutputFormat::Csv:
      o << "label,mult,a,g\n";
      for (int i = 0; i < S.rank(); ++i)
        o << S.labels[i] << "," << S.mult[i] << "," << csv_field(S.a[i].to_string()) << ","
          << csv_field(S.g[i].to_string()) << "\n";
      break;
    case OutputFormat::Text:
      o << "pair " << spec->label() << " in " << p.ambient.type_label() << " ("
        << normalization_name(p.normalization) << ")\n";
      o << "sigma " << S.type_label << ", pi_star";
      for (int l : p.pi_star) o << " " << l;
      o << ", pi_theta";
      for (int l : p.pi_theta) o << " " << l;
      o << "\n";
      if (p.theta_corrected) o << "theta corrected: " << p.correction << "\n";
      for (int i = 0; i < S.rank(); ++i)
        o << "alpha~" << S.labels[i] << " = (" << weight_strings(S.simple_restricted[i]) << ")  mult " << S.mult[i]
          << "  a " << S.a[i].to_string() << "  g " << S.g[i].to_string() << "\n";
      for (const auto& w : special_weights(p))
        o << special_kind_name(w.kind) << " omega'" << w.sigma_index + 1 << " (label " << w.label << ")\n";
      break;
  }
  emit(cfg, o.str());
  return kOk;
}

// ---------------------------------------------------------------- poly

std::vector<FieldElem> parse_field_list(const std::string& s) {
  std::vector<FieldElem> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_field_elem(item));
  if (v.empty()) throw UsageError("empty parameter list");
  return v;
}

std::vector<long> parse_coords(const std::string& s) {
  std::vector<long> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      v.push_back(std::stol(item, &used));
    } catch (const std::logic_error&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw UsageError("bad lambda coordinate '" + item + "'");
  }
  if (v.empty()) throw UsageError("lambda has no coordinates");
  return v;
}

int cmd_poly(const Flags& f) {
  const RunConfig cfg = resolve_config(f);
  auto spec = resolve_case(f);
  if (!f.has("lambda")) throw UsageError("poly needs --lambda");
  MacdonaldParams params;
  if (!f.sigma.empty()) {
    if (spec) throw UsageError("give either a case or --sigma, not both");
    if (f.a.empty() || f.g.empty()) throw UsageError("--sigma needs --a and --g");
    params = MacdonaldParams::explicit_params(f.sigma, parse_field_list(f.a), parse_field_list(f.g));
  } else {
    if (!spec) throw UsageError("poly needs a case or --sigma/--a/--g");
    if (!f.a.empty() || !f.g.empty()) throw UsageError("--a and --g go with --sigma");
    params = MacdonaldParams::from_pair(build_pair(*spec));
  }
  MacdonaldSystem sys(params, cfg.weyl_cap);
  const LatticePoint lambda = sys.lattice()->from_vector(parse_coords(f.lambda));
  PolyOptions po;
  po.apply = {cfg.workers, cfg.seed};
  const PolyResult r = sys.macdonald_poly(lambda, po);

  std::ostringstream o;
  switch (cfg.format) {
    case OutputFormat::Json:
      o << poly_json(r).dump(2) << "\n";
      break;
    case OutputFormat::Csv:
      o << "kind,weight,value\n";
      for (const auto& [mu, c] : r.coefficients)
        o << "coefficient," << csv_field(sys.lattice()->to_string(mu)) << "," << csv_field(c.to_string()) << "\n";
      for (const auto& [beta, d] : r.eigenvalues)
        o << "eigenvalue," << csv_field(sys.lattice()->to_string(beta)) << "," << csv_field(d.to_string()) << "\n";
      break;
    case OutputFormat::Text:
      o << "P" << sys.lattice()->to_string(r.lambda) << " =\n";
      for (const auto& [mu, c] : r.coefficients) o << "  + (" << c.to_string() << ") m" << sys.lattice()->to_string(mu) << "\n";
      for (const auto& [beta, d] : r.eigenvalues)
        o << "eigenvalue for beta = " << sys.lattice()->to_string(beta) << ": " << d.to_string() << "\n";
      break;
  }
  emit(cfg, o.str());
  return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Flags& f) {
  const RunConfig cfg = resolve_config(f);
  const auto& names = suite_names();
  if (f.suite != "all" && std::find(names.begin(), names.end(), f.suite) == names.end()) {
    std::string list;
    for (const auto& n : names) list += n + ", ";
    throw UsageError("unknown suite '" + f.suite + "'; expected one of " + list + "all");
  }
  SuiteOptions so;
  so.order = cfg.order;
  so.q_value = cfg.q_value;
  so.weyl_cap = cfg.weyl_cap;
  so.workers = cfg.workers;
  so.shuffle_seed = cfg.seed;
  so.lambda_height = cfg.lambda_height;
  if (auto spec = resolve_case(f)) {
    build_pair(*spec);  // reject an invalid instantiation before running
    so.pairs.push_back(*spec);
  }
  const SuiteResult r = run_suite(f.suite, so);

  std::ostringstream o;
  switch (cfg.format) {
    case OutputFormat::Json:
      o << r.report().dump(2) << "\n";
      break;
    case OutputFormat::Csv:
      o << "check,pass\n";
      for (const auto& c : r.checks) o << csv_field(c.id) << "," << (c.pass ? "true" : "false") << "\n";
      break;
    case OutputFormat::Text:
      for (const auto& c : r.checks) o << (c.pass ? "pass " : c.refused ? "refused " : "FAIL ") << c.id << "\n";
      o << r.suite << ": " << suite_status_name(r.status);
      if (!r.first_failure.empty()) o << " (first: " << r.first_failure << ")";
      o << "\n";
      break;
  }
  emit(cfg, o.str());
  if (r.status == SuiteStatus::Fail) {
    std::cerr << "verification failed: " << r.first_failure << "\n";
    return kFailed;
  }
  if (r.status == SuiteStatus::Refused) {
    std::cerr << "refused: " << r.first_failure << "\n";
    return kRefused;
  }
  return kOk;
}

int refusal(const char* kind, const std::exception& e) {
  json j = {{"error", {{"kind", kind}, {"message", e.what()}}}};
  std::cout << j.dump(2) << "\n";
  return kRefused;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum symmetric pairs and Macdonald polynomials"};
  app.require_subcommand(1);
  Flags fi, fp, fv;

  auto* pair_info = app.add_subcommand("pair-info", "Theta, Sigma, multiplicities and (a, g) for a pair");
  add_common(pair_info, fi, true);

  auto* poly = app.add_subcommand("poly", "P_lambda(a, g) in the monomial basis");
  add_common(poly, fp, true);
  fp.given["lambda"] = poly->add_option("--lambda", fp.lambda, "Coordinates c1,c2,... in the basis 2 omega'_i");
  poly->add_option("--sigma", fp.sigma, "Restricted root system type, e.g. A1");
  poly->add_option("--a", fp.a, "a on the short simple roots, or one value per simple root");
  poly->add_option("--g", fp.g, "g for every root, or one value per simple root");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", fv.suite, "involution, reconcile, identities, eigen, degenerations, ortho, joint or all")
      ->required();
  add_common(verify, fv, true);
  fv.given["lambda_height"] = verify->add_option("--lambda-height", fv.lambda_height, "Largest height of lambda")
                                  ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (pair_info->parsed()) return cmd_pair_info(fi);
    if (poly->parsed()) return cmd_poly(fp);
    return cmd_verify(fv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    return refusal("cap", e);
  } catch (const CollisionError& e) {
    return refusal("collision", e);
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFailed;
  }
}

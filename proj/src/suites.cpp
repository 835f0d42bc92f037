#include "qsp/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <thread>

namespace qsp {

using nlohmann::json;

namespace {

using Task = std::function<std::vector<Check>()>;

std::vector<Check> refused_check(const std::string& id, const std::string& what) {
  Check c;
  c.id = id;
  c.refused = true;
  c.detail = {{"refused", what}};
  return {c};
}

std::vector<Check> failed_check(const std::string& id, const std::string& what) {
  Check c;
  c.id = id;
  c.detail = {{"error", what}};
  return {c};
}

// Runs every task, turning exceptions into checks; results keep task order.
std::vector<Check> run_tasks(const std::vector<std::pair<std::string, Task>>& tasks, unsigned workers) {
  std::vector<std::vector<Check>> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& [id, task] = tasks[i];
      try {
        out[i] = task();
      } catch (const CapExceeded& e) {
        out[i] = refused_check(id, e.what());
      } catch (const CollisionError& e) {
        out[i] = refused_check(id, e.what());
      } catch (const std::exception& e) {
        out[i] = failed_check(id, e.what());
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size()))));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<Check> all;
  for (auto& v : out)
    for (auto& c : v) all.push_back(std::move(c));
  return all;
}

SuiteResult finish(const std::string& name, std::vector<Check> checks) {
  std::sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  SuiteResult r;
  r.suite = name;
  r.checks = std::move(checks);
  bool failed = false, refused = false;
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    if (c.refused) {
      refused = true;
    } else if (!failed) {
      failed = true;
      r.first_failure = c.id;
    }
  }
  if (!failed && refused)
    for (const auto& c : r.checks)
      if (c.refused) {
        r.first_failure = c.id;
        break;
      }
  r.status = failed ? SuiteStatus::Fail : (refused ? SuiteStatus::Refused : SuiteStatus::Pass);
  return r;
}

std::vector<SymmetricPairSpec> labels_to_specs(std::initializer_list<const char*> labels) {
  std::vector<SymmetricPairSpec> v;
  for (const char* l : labels) v.push_back(parse_pair_label(l));
  return v;
}

std::vector<SymmetricPairSpec> pairs_or(const SuiteOptions& opt, std::vector<SymmetricPairSpec> fallback) {
  return opt.pairs.empty() ? fallback : opt.pairs;
}

ApplyOptions apply_options(const SuiteOptions& opt) { return {opt.workers, opt.shuffle_seed}; }

std::string fmt_sci(long double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", static_cast<double>(v));
  return buf;
}

Weight mat_vec(const RatMatrix& m, const Weight& x) {
  Weight y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

Weight negated(Weight x) {
  for (auto& v : x) v = -v;
  return x;
}

// ---------------------------------------------------------------- involution

std::vector<Check> involution_checks(const SymmetricPairSpec& spec) {
  const SymmetricPair p = build_pair(spec);
  const RootDatum& amb = p.ambient;
  const int n = amb.rank();
  const RatMatrix& T = p.theta;

  bool square = true, isometry = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s = 0, g = 0;
      for (int k = 0; k < n; ++k) s += T[i][k] * T[k][j];
      if (s != (i == j ? 1 : 0)) square = false;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) g += T[k][i] * amb.gram()[k][l] * T[l][j];
      if (g != amb.gram()[i][j]) isometry = false;
    }

  bool preserves = true;
  std::set<Weight> restricted;
  for (std::size_t k = 0; k < amb.positive_roots().size(); ++k) {
    Weight img = mat_vec(T, amb.root(static_cast<int>(k)));
    std::vector<int> coords;
    for (const auto& v : img) {
      if (v.get_den() != 1) preserves = false;
      coords.push_back(static_cast<int>(v.get_num().get_si()));
    }
    if (preserves && !amb.is_root(coords)) preserves = false;
    Weight r = p.restrict_weight(amb.root(static_cast<int>(k)));
    if (std::any_of(r.begin(), r.end(), [](const Rational& v) { return v != 0; })) {
      restricted.insert(r);
      restricted.insert(negated(r));
    }
  }

  bool reduced = true;
  for (const auto& r : restricted) {
    Weight twice = r;
    for (auto& v : twice) v *= 2;
    if (restricted.count(twice)) reduced = false;
  }

  // Sigma's own roots, carried to the ambient space, are exactly the restrictions.
  const RootDatum& sd = p.sigma.datum;
  std::set<Weight> from_sigma;
  for (std::size_t k = 0; k < sd.positive_roots().size(); ++k) {
    Weight x = p.sigma.to_ambient(sd.root(static_cast<int>(k)));
    from_sigma.insert(x);
    from_sigma.insert(negated(x));
  }
  const bool type_ok = !p.sigma.type_label.empty() && p.sigma.type_label == sd.type_label() && from_sigma == restricted;

  bool mult_ok = true;
  json mult = json::array();
  for (int i = 0; i < p.sigma.rank(); ++i) {
    const Weight& ai = p.sigma.simple_restricted[i];
    long counted = 0;
    for (std::size_t k = 0; k < amb.positive_roots().size(); ++k) {
      Weight r = p.restrict_weight(amb.root(static_cast<int>(k)));
      if (r == ai || negated(r) == ai) ++counted;
    }
    Rational formula = 2 * amb.inner(amb.rho(), ai) / amb.inner(ai, ai);
    if (formula != counted || counted != p.sigma.mult[i]) mult_ok = false;
    mult.push_back({{"label", p.sigma.labels[i]}, {"counted", counted}, {"formula", formula.get_str()}});
  }

  Check c;
  c.id = spec.label();
  c.pass = square && isometry && preserves && reduced && type_ok && mult_ok;
  c.detail = {{"theta_squared_identity", square}, {"theta_isometry", isometry}, {"theta_preserves_roots", preserves},
              {"sigma_reduced", reduced},         {"sigma_type", p.sigma.type_label}, {"sigma_type_identified", type_ok},
              {"multiplicity_formula", mult_ok},  {"multiplicities", mult},
              {"normalization", normalization_name(p.normalization)}};
  return {c};
}

SuiteResult involution_suite(const SuiteOptions& opt) {
  std::vector<std::pair<std::string, Task>> tasks;
  for (const auto& s : pairs_or(opt, desk_pairs())) tasks.emplace_back(s.label(), [s] { return involution_checks(s); });
  return finish("involution", run_tasks(tasks, opt.workers));
}

// ---------------------------------------------------------------- reconcile

SuiteResult reconcile_suite(const SuiteOptions& opt) {
  std::map<std::string, std::set<std::string>> expected;
  for (const auto& line : builtin_reconcile_fixture()) {
    auto sp = line.find(' ');
    expected[line.substr(0, sp)].insert(line.substr(sp + 1));
  }
  std::vector<std::pair<std::string, Task>> tasks;
  for (const auto& s : pairs_or(opt, reconcile_pairs())) {
    const std::set<std::string> want = expected.count(s.label()) ? expected.at(s.label()) : std::set<std::string>{};
    tasks.emplace_back(s.label(), [s, want] {
      DiscrepancyReport rep = reconcile_appendix(build_pair(s));
      std::set<std::string> got;
      json fields = json::object();
      for (const auto& f : rep.fields) {
        fields[f.field] = {{"status", field_status_name(f.status)}, {"computed", f.computed},
                           {"tabulated", f.tabulated}, {"note", f.note}};
        if (f.status == FieldStatus::Mismatch) got.insert(f.field);
      }
      json unexpected = json::array(), missing = json::array();
      for (const auto& f : got)
        if (!want.count(f)) unexpected.push_back(f);
      for (const auto& f : want)
        if (!got.count(f)) missing.push_back(f);
      Check c;
      c.id = s.label();
      c.pass = unexpected.empty() && missing.empty();
      c.detail = {{"normalization", rep.normalization}, {"fields", fields}, {"unexpected", unexpected},
                  {"missing", missing}, {"expected_mismatches", json(std::vector<std::string>(want.begin(), want.end()))}};
      return std::vector<Check>{c};
    });
  }
  // Fixture lines naming pairs outside the run are reported when the run covers the full list.
  std::vector<Check> checks = run_tasks(tasks, opt.workers);
  if (opt.pairs.empty()) {
    std::set<std::string> covered;
    for (const auto& s : reconcile_pairs()) covered.insert(s.label());
    for (const auto& [label, fields] : expected)
      if (!covered.count(label)) {
        Check c;
        c.id = label;
        c.detail = {{"error", "fixture names a pair that is not in the reconciliation list"}};
        checks.push_back(c);
      }
  }
  return finish("reconcile", std::move(checks));
}

// ---------------------------------------------------------------- identities

Check identity_check(const std::string& label, const IdentityReport& r) {
  Check c;
  c.id = label + " " + r.identity + (r.subject.empty() ? "" : " " + r.subject);
  c.pass = r.pass;
  c.detail = identity_json(r);
  return c;
}

SuiteResult identities_suite(const SuiteOptions& opt) {
  const auto rank_one = labels_to_specs({"AI(1)", "CaseI(A,1)", "AII(3)", "BII(2)", "BII(3)", "BII(4)", "DII(4)"});
  std::vector<std::pair<std::string, Task>> tasks;
  auto add_rank_one = [&](const SymmetricPairSpec& s) {
    tasks.emplace_back(s.label() + " rank-one", [s, opt] {
      MacdonaldParams params = MacdonaldParams::from_pair(build_pair(s));
      std::vector<Check> out;
      for (const auto& r : verify_rank_one_identities(params, opt.order)) out.push_back(identity_check(s.label(), r));
      MacdonaldSystem sys(params, opt.weyl_cap);
      for (const auto& op : sys.operator_set())
        for (const auto& r : verify_operator_form(sys, op.beta, opt.order)) out.push_back(identity_check(s.label(), r));
      return out;
    });
  };
  auto add_bridge = [&](const SymmetricPairSpec& s) {
    tasks.emplace_back(s.label() + " bridge", [s, opt] {
      return std::vector<Check>{identity_check(s.label(), verify_bridge(MacdonaldParams::from_pair(build_pair(s)), opt.order))};
    });
  };
  if (opt.pairs.empty()) {
    for (const auto& s : rank_one) add_rank_one(s);
    for (const auto& s : desk_pairs())
      if (build_pair(s).sigma.rank() <= 3) add_bridge(s);
  } else {
    for (const auto& s : opt.pairs) {
      if (build_pair(s).sigma.rank() == 1) add_rank_one(s);
      add_bridge(s);
    }
  }
  return finish("identities", run_tasks(tasks, opt.workers));
}

// ---------------------------------------------------------------- solver suites

std::string lambda_id(const std::string& prefix, const MacdonaldSystem& sys, const LatticePoint& l) {
  return prefix + " " + sys.lattice()->to_string(l);
}

// One task per dominant lambda up to the height; `expect` returns the oracle
// or nothing when only the eigen and triangularity checks apply.
using Oracle = std::function<std::optional<CharElem>(const MacdonaldSystem&, const LatticePoint&)>;

void add_solver_tasks(std::vector<std::pair<std::string, Task>>& tasks, const std::string& prefix,
                      std::shared_ptr<const MacdonaldSystem> sys, long height, const SuiteOptions& opt,
                      Oracle expect) {
  for (const auto& l : sys->lattice()->dominant_up_to_height(height)) {
    const std::string id = lambda_id(prefix, *sys, l);
    tasks.emplace_back(id, [=] {
      PolyOptions po;
      po.apply = apply_options(opt);
      po.check_eigen = false;
      PolyResult r = sys->macdonald_poly(l, po);
      Check c;
      c.id = id;
      bool pass = false;
      c.detail = verify_poly(*sys, r, po.apply, pass);
      if (expect) {
        std::optional<CharElem> want = expect(*sys, l);
        const bool match = want && sys->expand(r) == *want;
        c.detail["matches_oracle"] = match;
        pass = pass && match;
      }
      c.pass = pass;
      return std::vector<Check>{c};
    });
  }
}

SuiteResult eigen_suite(const SuiteOptions& opt) {
  const long h = opt.lambda_height.value_or(4);
  std::vector<std::pair<std::string, Task>> tasks;
  for (const auto& s : pairs_or(opt, labels_to_specs({"AI(1)", "AI(2)", "BII(2)", "BI(3,2)", "CII2(4)", "EIV"}))) {
    auto sys = std::make_shared<const MacdonaldSystem>(MacdonaldParams::from_pair(build_pair(s)), opt.weyl_cap);
    add_solver_tasks(tasks, s.label(), sys, h, opt, nullptr);
  }
  return finish("eigen", run_tasks(tasks, opt.workers));
}

SuiteResult degenerations_suite(const SuiteOptions& opt) {
  std::vector<std::pair<std::string, Task>> tasks;
  const Oracle monomial = [](const MacdonaldSystem& sys, const LatticePoint& l) {
    return std::optional<CharElem>(m_lambda(sys.lattice(), l));
  };
  const Oracle character = [](const MacdonaldSystem& sys, const LatticePoint& l) {
    return std::optional<CharElem>(sys.weyl_character(l));
  };
  std::vector<SymmetricPairSpec> pairs = opt.pairs;
  if (pairs.empty())
    for (const auto& s : desk_pairs())
      if (build_pair(s).sigma.rank() <= 3) pairs.push_back(s);
  for (const auto& s : pairs) {
    MacdonaldParams params = MacdonaldParams::from_pair(build_pair(s));
    auto sys = std::make_shared<const MacdonaldSystem>(params.with_g_one(), opt.weyl_cap);
    add_solver_tasks(tasks, "g=1 " + s.label(), sys, opt.lambda_height.value_or(6), opt, monomial);
  }
  std::vector<std::pair<std::string, MacdonaldParams>> ga;
  if (opt.pairs.empty()) {
    for (const char* t : {"A1", "A2", "B2", "G2"})
      ga.emplace_back(t, MacdonaldParams::explicit_params(t, {FieldElem::q_power(2)}, {FieldElem(1L)}));
  } else {
    for (const auto& s : opt.pairs) ga.emplace_back(s.label(), MacdonaldParams::from_pair(build_pair(s)));
  }
  for (const auto& [label, params] : ga) {
    auto sys = std::make_shared<const MacdonaldSystem>(params.with_g_equal_a(), opt.weyl_cap);
    add_solver_tasks(tasks, "g=a " + label, sys, opt.lambda_height.value_or(4), opt, character);
  }
  return finish("degenerations", run_tasks(tasks, opt.workers));
}

SuiteResult ortho_suite(const SuiteOptions& opt) {
  const long h = opt.lambda_height.value_or(4);
  const long double q = static_cast<long double>(opt.q_value.get_d());
  std::vector<SymmetricPairSpec> pairs = opt.pairs;
  if (pairs.empty())
    for (const auto& s : desk_pairs())
      if (build_pair(s).sigma.rank() <= 2) pairs.push_back(s);
  std::vector<std::pair<std::string, Task>> tasks;
  for (const auto& s : pairs) {
    tasks.emplace_back(s.label(), [s, h, q, opt] {
      MacdonaldSystem sys(MacdonaldParams::from_pair(build_pair(s)), opt.weyl_cap);
      PolyOptions po;
      po.apply = apply_options(opt);
      po.check_eigen = false;
      std::vector<LatticePoint> lams = sys.lattice()->dominant_up_to_height(h);
      std::vector<CharElem> fs;
      for (const auto& l : lams) fs.push_back(sys.expand(sys.macdonald_poly(l, po)));
      auto G = sys.gram_numeric(fs, q);
      long double worst = 0, min_norm = -1;
      json worst_pair = nullptr;
      bool positive = true;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!(G[i][i] > 0)) positive = false;
        min_norm = min_norm < 0 ? G[i][i] : std::min(min_norm, G[i][i]);
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
          long double ratio = std::fabs(G[i][j]) / std::sqrt(std::fabs(G[i][i] * G[j][j]));
          if (ratio > worst) {
            worst = ratio;
            worst_pair = {sys.lattice()->to_string(lams[i]), sys.lattice()->to_string(lams[j])};
          }
        }
      }
      constexpr long double kTolerance = 1e-6L;
      Check c;
      c.id = s.label();
      c.pass = positive && worst <= kTolerance;
      c.detail = {{"q", opt.q_value.get_str()}, {"count", fs.size()}, {"worst_ratio", fmt_sci(worst)},
                  {"worst_pair", worst_pair}, {"min_norm", fmt_sci(min_norm)}, {"norms_positive", positive}};
      return std::vector<Check>{c};
    });
  }
  return finish("ortho", run_tasks(tasks, opt.workers));
}

// Joint D_n operators: the pair must separate the spectrum, each one alone must not.
SuiteResult joint_suite(const SuiteOptions& opt) {
  const long h = opt.lambda_height.value_or(3);
  struct PairState {
    std::string label;
    std::vector<std::string> betas;
    // collides[b][i]: operator b alone cannot separate lambda_i.
    std::vector<std::vector<char>> collides;
  };
  std::vector<std::shared_ptr<PairState>> states;
  std::vector<std::pair<std::string, Task>> tasks;
  for (const auto& s : pairs_or(opt, labels_to_specs({"DI3(4)"}))) {
    auto sys = std::make_shared<const MacdonaldSystem>(MacdonaldParams::from_pair(build_pair(s)), opt.weyl_cap);
    std::vector<LatticePoint> betas;
    auto st = std::make_shared<PairState>();
    st->label = s.label();
    for (const auto& op : sys->operator_set()) {
      betas.push_back(op.beta);
      st->betas.push_back(sys->lattice()->to_string(op.beta));
    }
    auto lams = sys->lattice()->dominant_up_to_height(h);
    st->collides.assign(betas.size(), std::vector<char>(lams.size(), 0));
    states.push_back(st);
    for (std::size_t li = 0; li < lams.size(); ++li) {
      const LatticePoint l = lams[li];
      const std::string id = lambda_id(s.label(), *sys, l);
      tasks.emplace_back(id, [=] {
        PolyOptions po;
        po.apply = apply_options(opt);
        po.check_eigen = false;
        po.spectral_separation = true;
        Check c;
        c.id = id;
        bool pass = false;
        try {
          PolyResult r = sys->macdonald_poly(l, po);
          c.detail = verify_poly(*sys, r, po.apply, pass);
          c.detail["joint_separation"] = true;
        } catch (const CollisionError& e) {
          c.detail = {{"joint_separation", false}, {"error", e.what()}};
        }
        json single = json::object();
        if (betas.size() > 1)
          for (std::size_t b = 0; b < betas.size(); ++b) {
            PolyOptions one = po;
            one.operators = std::vector<LatticePoint>{betas[b]};
            try {
              sys->macdonald_poly(l, one);
              single[st->betas[b]] = "separated";
            } catch (const CollisionError&) {
              single[st->betas[b]] = "collision";
              st->collides[b][li] = 1;
            }
          }
        c.detail["single_operator"] = single;
        c.pass = pass;
        return std::vector<Check>{c};
      });
    }
  }
  std::vector<Check> checks = run_tasks(tasks, opt.workers);
  for (const auto& st : states) {
    Check c;
    c.id = st->label + " single operators";
    json per = json::object();
    bool all_collide = st->betas.size() > 1;
    for (std::size_t b = 0; b < st->betas.size(); ++b) {
      std::size_t n = std::count(st->collides[b].begin(), st->collides[b].end(), 1);
      per[st->betas[b]] = n;
      if (n == 0) all_collide = false;
    }
    c.pass = all_collide;
    c.detail = {{"collisions_per_operator", per}, {"operators", st->betas}};
    if (st->betas.size() < 2) c.detail["error"] = "the operator set has a single operator";
    checks.push_back(c);
  }
  return finish("joint", std::move(checks));
}

}  // namespace

const char* suite_status_name(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass:
      return "pass";
    case SuiteStatus::Fail:
      return "fail";
    case SuiteStatus::Refused:
      return "refused";
  }
  return "?";
}

json SuiteResult::report() const {
  json checks_json = json::object();
  std::size_t failed = 0, refused = 0;
  for (const auto& c : checks) {
    json d = c.detail;
    d["pass"] = c.pass;
    if (c.refused) d["refused_flag"] = true;
    checks_json[c.id] = d;
    if (!c.pass) ++(c.refused ? refused : failed);
  }
  return {{"suite", suite},
          {"status", suite_status_name(status)},
          {"pass", status == SuiteStatus::Pass},
          {"first_failure", first_failure.empty() ? json(nullptr) : json(first_failure)},
          {"counts", {{"total", checks.size()}, {"failed", failed}, {"refused", refused}}},
          {"checks", checks_json}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"involution", "reconcile", "identities", "eigen",
                                                 "degenerations", "ortho", "joint"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "involution") return involution_suite(opt);
  if (name == "reconcile") return reconcile_suite(opt);
  if (name == "identities") return identities_suite(opt);
  if (name == "eigen") return eigen_suite(opt);
  if (name == "degenerations") return degenerations_suite(opt);
  if (name == "ortho") return ortho_suite(opt);
  if (name == "joint") return joint_suite(opt);
  if (name == "all") {
    std::vector<Check> checks;
    for (const auto& n : suite_names()) {
      SuiteResult r = run_suite(n, opt);
      for (auto& c : r.checks) {
        c.id = n + ": " + c.id;
        checks.push_back(std::move(c));
      }
    }
    return finish("all", std::move(checks));
  }
  std::string known;
  for (const auto& n : suite_names()) known += n + ", ";
  throw InvalidSpec("unknown suite '" + name + "'; expected one of " + known + "all");
}

json point_json(const LatticePoint& p, int rank) {
  json a = json::array();
  for (int i = 0; i < rank; ++i) a.push_back(p[i]);
  return a;
}

json poly_json(const PolyResult& r) {
  json coeffs = json::array(), eig = json::array();
  for (const auto& [mu, c] : r.coefficients) coeffs.push_back({{"mu", point_json(mu, r.rank)}, {"value", c.to_string()}});
  for (const auto& [beta, d] : r.eigenvalues) eig.push_back({{"beta", point_json(beta, r.rank)}, {"value", d.to_string()}});
  return {{"lambda", point_json(r.lambda, r.rank)},
          {"basis", "monomial-symmetric"},
          {"coefficients", coeffs},
          {"eigenvalues", eig}};
}

json identity_json(const IdentityReport& r) {
  json mm = nullptr;
  if (r.first_mismatch)
    mm = {{"exponent", r.first_mismatch->exponent}, {"lhs", r.first_mismatch->lhs}, {"rhs", r.first_mismatch->rhs}};
  json j = {{"identity", r.identity}, {"order", r.order}, {"pass", r.pass}, {"first_mismatch", mm}};
  if (!r.subject.empty()) j["subject"] = r.subject;
  return j;
}

json verify_poly(const MacdonaldSystem& sys, const PolyResult& r, const ApplyOptions& apply, bool& pass) {
  const auto& L = *sys.lattice();
  bool triangular = r.coefficient(r.lambda).is_one();
  for (const auto& [mu, c] : r.coefficients)
    if (!L.is_dominant(mu) || !L.leq(mu, r.lambda)) triangular = false;
  const CharElem P = sys.expand(r);
  const bool invariant = is_invariant(P);
  bool eigen = true;
  for (const auto& [beta, d] : r.eigenvalues) {
    CharElem lhs = sys.apply_operator_F(sys.make_operator(beta), P, apply);
    if (lhs != P.scaled(d)) eigen = false;
  }
  pass = triangular && invariant && eigen;
  return {{"poly", poly_json(r)}, {"triangular", triangular}, {"invariant", invariant}, {"eigen", eigen}};
}

}  // namespace qsp

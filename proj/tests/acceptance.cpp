// Acceptance run: one PASS/FAIL line per criterion.  Each suite runs twice,
// once with the breadth-first Weyl order on one worker and once shuffled on
// three workers; the first run feeds criteria 1-8, the pair feeds 9.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "qsp/suites.hpp"

using namespace qsp;

namespace {

constexpr int kOrder = 12;
constexpr double kOrthoTolerance = 1e-6;
const Rational kQ(1, 2);

struct Line {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

Line whole_suite(const SuiteResult& r) {
  Line l;
  if (r.status != SuiteStatus::Pass) l.fail(r.suite + " " + suite_status_name(r.status) + " at " + r.first_failure);
  l.note = l.pass ? std::to_string(r.checks.size()) + " checks" : l.note;
  return l;
}

Line prefixed(const SuiteResult& r, const std::string& prefix) {
  Line l;
  std::size_t n = 0;
  for (const auto& c : r.checks) {
    if (!starts_with(c.id, prefix)) continue;
    ++n;
    if (!c.pass || !c.detail.value("matches_oracle", false)) l.fail(c.id);
  }
  if (n == 0) l.fail("no checks with prefix " + prefix);
  if (l.pass) l.note = std::to_string(n) + " exact comparisons";
  return l;
}

}  // namespace

int main() {
  SuiteOptions base;
  base.order = kOrder;
  base.q_value = kQ;
  SuiteOptions other = base;
  other.workers = 3;
  other.shuffle_seed = 0x9e3779b97f4a7c15ULL;

  std::map<std::string, SuiteResult> first;
  Line determinism;
  for (const auto& name : suite_names()) {
    std::cerr << "running " << name << "\n";
    first.emplace(name, run_suite(name, base));
    const SuiteResult again = run_suite(name, other);
    if (first.at(name).report().dump() != again.report().dump()) determinism.fail(name + " report differs");
  }
  if (determinism.pass) determinism.note = std::to_string(suite_names().size()) + " suites byte-identical";

  Line eigen = whole_suite(first.at("eigen"));
  for (const auto& c : first.at("degenerations").checks)
    if (!c.detail.value("eigen", false) || !c.detail.value("triangular", false)) eigen.fail(c.id);
  if (eigen.pass) eigen.note += " plus " + std::to_string(first.at("degenerations").checks.size()) + " degeneration outputs";

  Line ortho = whole_suite(first.at("ortho"));
  for (const auto& c : first.at("ortho").checks) {
    const double worst = std::strtod(c.detail.value("worst_ratio", std::string("inf")).c_str(), nullptr);
    if (!(worst <= kOrthoTolerance) || !c.detail.value("norms_positive", false)) ortho.fail(c.id);
  }

  const std::pair<const char*, Line> lines[] = {
      {"structural invariants", whole_suite(first.at("involution"))},
      {"appendix reconciliation", whole_suite(first.at("reconcile"))},
      {"degeneration g=1", prefixed(first.at("degenerations"), "g=1 ")},
      {"degeneration g=a", prefixed(first.at("degenerations"), "g=a ")},
      {"eigenvector and triangularity", eigen},
      {"series identities at order 12", whole_suite(first.at("identities"))},
      {"orthogonality at q=1/2, tol 1e-6", ortho},
      {"D4 joint operators", whole_suite(first.at("joint"))},
      {"determinism", determinism},
  };
  bool all = true;
  int i = 1;
  for (const auto& [name, l] : lines) {
    std::printf("%d %s: %s (%s)\n", i++, name, l.pass ? "PASS" : "FAIL", l.note.c_str());
    all = all && l.pass;
  }
  return all ? 0 : 1;
}

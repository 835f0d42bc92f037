// Verification suites behind `qsp verify`, and the JSON forms of results.
//
// A suite is a list of checks keyed by a stable id.  Checks run on a small
// worker pool; the report is assembled from the id-sorted list, so its bytes
// do not depend on the worker count or on the order of W.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsp/macdonald.hpp"

namespace qsp {

struct SuiteOptions {
  int order = 12;
  Rational q_value = Rational(1, 2);
  std::size_t weyl_cap = kDefaultSolverCap;
  unsigned workers = 1;
  std::uint64_t shuffle_seed = 0;
  std::optional<long> lambda_height;     // replaces the suite's default
  std::vector<SymmetricPairSpec> pairs;  // empty: the suite's own list
};

struct Check {
  std::string id;
  bool pass = false;
  bool refused = false;  // cap or collision
  nlohmann::json detail;
};

enum class SuiteStatus { Pass, Fail, Refused };
const char* suite_status_name(SuiteStatus s);

struct SuiteResult {
  std::string suite;
  SuiteStatus status = SuiteStatus::Pass;
  std::vector<Check> checks;  // sorted by id
  std::string first_failure;

  nlohmann::json report() const;
};

// involution, reconcile, identities, eigen, degenerations, ortho, joint.
const std::vector<std::string>& suite_names();
// Also accepts "all".
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

nlohmann::json point_json(const LatticePoint& p, int rank);
nlohmann::json poly_json(const PolyResult& r);
nlohmann::json identity_json(const IdentityReport& r);

// Support below lambda, unit leading coefficient, F P = d P for each operator.
nlohmann::json verify_poly(const MacdonaldSystem& sys, const PolyResult& r, const ApplyOptions& apply, bool& pass);

}  // namespace qsp

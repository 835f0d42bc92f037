// The appendix table of symmetric pairs as a data file.
//
// Records are blocks of "key: value" lines separated by blank lines; '#'
// starts a comment.  The grammar is documented in data/appendix.txt.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsp/field.hpp"
#include "qsp/rootsys.hpp"

namespace qsp {

struct SymmetricPairSpec {
  std::string case_id;  // "AI", "BI", "CaseI", "EII", ...
  long n = 0;
  long r = 0;
  char type = 0;  // Case I only

  // "AI(2)", "BI(4,2)", "CaseI(B,2)", "EII"
  std::string label() const;
};

// Accepts the label forms above.
SymmetricPairSpec parse_pair_label(const std::string& text);

struct AppendixRecord {
  std::string case_id;
  std::vector<std::string> params;
  std::string ambient;
  std::string constraints;
  std::string theta;
  std::string sigma_type;
  std::string a_values;
  std::string g_values;
  std::string minuscule;
  int line = 0;
};

struct MinusculeEntry {
  std::string kind;  // "minuscule" or "pseudo"
  long restricted = 0;
  std::optional<long> lift;
};

// A record with concrete rank parameters substituted in.
struct BoundRecord {
  const AppendixRecord* record = nullptr;
  SymmetricPairSpec spec;
  std::vector<CartanType> ambient;
  RatMatrix theta_literal;  // column j-1 is the tabulated image of alpha_j
  std::string sigma_label;  // empty when the table gives none
  std::vector<long> sigma_indices;
  enum class Special { Listed, None, FromType } special_mode = Special::None;
  std::vector<MinusculeEntry> special;

  // Tabulated a and g values keyed by 1-based simple index; len(i) is the
  // squared length of alpha_i in `ambient_datum`.
  std::map<long, FieldElem> a_values(const RootDatum& ambient_datum) const;
  std::map<long, FieldElem> g_values(const RootDatum& ambient_datum) const;

  std::map<std::string, Rational> vars;
};

class AppendixData {
 public:
  static AppendixData parse(std::string_view text);
  static AppendixData load_file(const std::string& path);
  // The transcription compiled into the library.
  static const AppendixData& builtin();

  std::vector<std::string> case_ids() const;
  const AppendixRecord& record(const std::string& case_id) const;
  // Validates constraints and resolves every index expression.
  BoundRecord bind(const SymmetricPairSpec& spec) const;

 private:
  std::vector<AppendixRecord> records_;
};

}  // namespace qsp

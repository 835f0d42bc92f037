// Small exact-arithmetic expression language used by the appendix data file.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/' | '%') unary)*
//   unary := '-' unary | atom
//   atom  := integer | name | name '(' expr ')' | '(' expr ')'
//   cond  := expr ('==' | '!=' | '<=' | '>=' | '<' | '>') expr
#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsp/field.hpp"

namespace qsp::detail {

struct ExprEnv {
  std::map<std::string, Rational> vars;
  std::function<Rational(const std::string&, const Rational&)> call;
};

Rational eval_expr(std::string_view text, const ExprEnv& env);
bool eval_condition(std::string_view text, const ExprEnv& env);
long eval_int(std::string_view text, const ExprEnv& env);

// "1..n:2", "r", "1,3" style index lists; ranges with lo > hi are empty.
std::vector<long> eval_index_list(std::string_view text, const ExprEnv& env);

std::string trim(std::string_view s);
// Splits on `sep` outside parentheses, brackets and braces.
std::vector<std::string> split_top(std::string_view s, char sep);

}  // namespace qsp::detail

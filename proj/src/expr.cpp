#include "qsp/detail/expr.hpp"

#include <cctype>

namespace qsp::detail {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const ExprEnv& env) : s_(s), env_(env) {}

  Rational parse_all() {
    Rational v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

  Rational expr() {
    Rational v = term();
    while (true) {
      skip();
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + std::string(s_) + "': " + what);
  }

 private:
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  Rational term() {
    Rational v = unary();
    while (true) {
      skip();
      if (peek('*')) {
        ++pos_;
        v *= unary();
      } else if (peek('/')) {
        ++pos_;
        Rational d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else if (peek('%')) {
        ++pos_;
        Rational d = unary();
        if (v.get_den() != 1 || d.get_den() != 1 || d == 0) fail("% needs nonzero integers");
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_num_mpz_t(), d.get_num_mpz_t());
        v = Rational(r);
      } else {
        return v;
      }
    }
  }

  Rational unary() {
    skip();
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    return atom();
  }

  Rational atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Rational v = expr();
      skip();
      if (!peek(')')) fail("missing )");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Rational(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      skip();
      if (peek('(')) {
        ++pos_;
        Rational arg = expr();
        skip();
        if (!peek(')')) fail("missing ) after argument");
        ++pos_;
        if (!env_.call) fail("no function '" + name + "'");
        return env_.call(name, arg);
      }
      auto it = env_.vars.find(name);
      if (it == env_.vars.end()) fail("unknown variable '" + name + "'");
      return it->second;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const ExprEnv& env_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational eval_expr(std::string_view text, const ExprEnv& env) { return Parser(text, env).parse_all(); }

long eval_int(std::string_view text, const ExprEnv& env) {
  Rational v = eval_expr(text, env);
  if (v.get_den() != 1) throw ParseError("expression '" + std::string(text) + "' is not an integer");
  return v.get_num().get_si();
}

bool eval_condition(std::string_view text, const ExprEnv& env) {
  static const char* ops[] = {"==", "!=", "<=", ">=", "<", ">"};
  for (const char* op : ops) {
    std::size_t at = text.find(op);
    if (at == std::string_view::npos) continue;
    std::string_view opv(op);
    Rational l = eval_expr(text.substr(0, at), env);
    Rational r = eval_expr(text.substr(at + opv.size()), env);
    if (opv == "==") return l == r;
    if (opv == "!=") return l != r;
    if (opv == "<=") return l <= r;
    if (opv == ">=") return l >= r;
    if (opv == "<") return l < r;
    return l > r;
  }
  throw ParseError("condition '" + std::string(text) + "' has no comparison");
}

std::vector<long> eval_index_list(std::string_view text, const ExprEnv& env) {
  std::vector<long> out;
  for (const std::string& item : split_top(text, ',')) {
    std::size_t dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(eval_int(item, env));
      continue;
    }
    std::string lo = item.substr(0, dots), rest = item.substr(dots + 2);
    long step = 1;
    std::size_t colon = rest.find(':');
    if (colon != std::string::npos) {
      step = eval_int(rest.substr(colon + 1), env);
      rest = rest.substr(0, colon);
    }
    if (step <= 0) throw ParseError("index step must be positive in '" + item + "'");
    long a = eval_int(lo, env), b = eval_int(rest, env);
    for (long v = a; v <= b; v += step) out.push_back(v);
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  std::string last = trim(s.substr(start));
  if (!last.empty() || !parts.empty()) parts.push_back(last);
  return parts;
}

}  // namespace qsp::detail

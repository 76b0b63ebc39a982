#include "eqloc/expression.hpp"

#include <cctype>
#include <sstream>

namespace eqloc {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Variables& vars, int line, int column_offset = 0)
      : text_(text), vars_(vars), line_(line), offset_(column_offset) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  // Product of factors, each raised to a power; constants collected.
  std::vector<std::pair<LinearForm, int>> parse_factors(Rational& constant) {
    std::vector<std::pair<LinearForm, int>> out;
    constant = 1;
    skip();
    if (pos_ == text_.size()) return out;
    while (true) {
      std::size_t start = pos_;
      Polynomial base = primary();
      int exponent = 1;
      skip();
      if (peek('^')) {
        ++pos_;
        exponent = integer();
      }
      if (base.is_constant()) {
        if (base.is_zero()) fail("zero factor in denominator", start);
        constant *= pow(base.constant_term(), static_cast<unsigned long>(exponent));
      } else {
        if (!base.is_homogeneous(1)) fail("denominator factor is not a homogeneous linear form", start);
        std::vector<Rational> c(vars_.count());
        for (const auto& [e, v] : base.terms())
          for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j]) c[j] = v;
        out.emplace_back(LinearForm(std::move(c)), exponent);
      }
      skip();
      if (pos_ == text_.size()) break;
      if (!peek('*')) fail("expected '*' between denominator factors");
      ++pos_;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, line_, offset_ + static_cast<int>(at) + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc(vars_.count());
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc += sign < 0 ? -t : t;
      first = false;
      skip();
      if (!(peek('+') || peek('-'))) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= power();
      } else if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants", at);
        acc *= Rational(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      base = base.pow(static_cast<unsigned>(integer()));
    }
    return base;
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(vars_.count(), Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = vars_.index_of(name);
      if (!idx) fail("unknown variable '" + name + "'", start);
      return Polynomial::variable(vars_.count(), *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Variables& vars_;
  int line_, offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Variables& vars, int line) {
  return Parser(text, vars, line).parse_all();
}

std::vector<std::pair<LinearForm, int>> parse_denominator(std::string_view text, const Variables& vars,
                                                          Rational& constant, int line) {
  return Parser(text, vars, line).parse_factors(constant);
}

ResidueProblem parse_residue_problem(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::optional<Variables> vars;
  std::string var_name, num_text, den_text;
  int num_line = 0, den_line = 0, var_line = 0;
  int num_col = 0, den_col = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", line_no, static_cast<int>(first) + 1);
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    std::string value = line.substr(colon + 1);
    if (key == "variables") {
      std::istringstream vs(value);
      std::vector<std::string> names;
      std::string tok;
      while (vs >> tok) {
        while (!tok.empty() && tok.back() == ',') tok.pop_back();
        if (!tok.empty()) names.push_back(tok);
      }
      try {
        vars = Variables(names);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), line_no, static_cast<int>(colon) + 2);
      }
    } else if (key == "variable") {
      std::istringstream vs(value);
      vs >> var_name;
      var_line = line_no;
    } else if (key == "numerator") {
      num_text = value;
      num_line = line_no;
      num_col = static_cast<int>(colon) + 1;
    } else if (key == "denominator") {
      den_text = value;
      den_line = line_no;
      den_col = static_cast<int>(colon) + 1;
    } else {
      throw ParseError("unknown key '" + key + "'", line_no, static_cast<int>(first) + 1);
    }
  }
  if (!vars) throw ParseError("missing 'variables' line", line_no + 1, 1);
  if (num_line == 0) throw ParseError("missing 'numerator' line", line_no + 1, 1);
  ResidueProblem problem{*vars, 0, Fraction(vars->count()), num_text, den_text};
  if (!var_name.empty()) {
    auto idx = vars->index_of(var_name);
    if (!idx) throw ParseError("unknown residue variable '" + var_name + "'", var_line, 1);
    problem.residue_variable = *idx;
  }
  Polynomial num = Parser(num_text, *vars, num_line, num_col).parse_all();
  Rational constant = 1;
  std::vector<std::pair<LinearForm, int>> factors;
  if (den_line) factors = Parser(den_text, *vars, den_line, den_col).parse_factors(constant);
  problem.expression = Fraction(num * Rational(1 / constant), factors);
  return problem;
}

}  // namespace eqloc

#include "hyperfn/sequence_expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "hyperfn/error.hpp"

namespace hyperfn {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat(const std::string& word) {
    if (text_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  bool at_number() const {
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
  }
  double number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || !std::isfinite(v)) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "sequence expression \"" + text_ + "\": " + what + " at offset " + std::to_string(pos_));
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

SequenceExpr SequenceExpr::parse(const std::string& text) {
  SequenceExpr e;
  e.text_ = text;
  Parser p(text);
  do {
    Term t;
    if (p.at_number()) {
      t.coefficient = p.number();
      if (!p.eat('*')) p.fail("expected '*' after coefficient");
    }
    if (p.eat("const:")) {
      t.atom = Atom::Const;
      t.parameter = p.number();
    } else if (p.eat("exp:")) {
      t.atom = Atom::Exp;
      t.parameter = p.number();
    } else if (p.eat("pow:")) {
      t.atom = Atom::Pow;
      t.parameter = p.number();
    } else if (p.eat("sqrt")) {
      t.atom = Atom::Pow;
      t.parameter = 0.5;
    } else {
      p.fail("expected const:, exp:, pow: or sqrt");
    }
    e.terms_.push_back(t);
  } while (p.eat('+'));
  if (!p.done()) p.fail("unexpected trailing text");
  return e;
}

double SequenceExpr::term_value(const Term& t, int n) const {
  switch (t.atom) {
    case Atom::Const: return t.coefficient * t.parameter;
    case Atom::Exp: return t.coefficient * std::exp(t.parameter * n);
    case Atom::Pow: return t.coefficient * std::pow(static_cast<double>(n), t.parameter);
  }
  return 0.0;
}

double SequenceExpr::value(int n) const {
  double sum = 0.0;
  for (const Term& t : terms_) sum += term_value(t, n);
  return sum;
}

double SequenceExpr::log_value(int n) const {
  std::vector<double> logs;
  for (const Term& t : terms_) {
    const double base = t.atom == Atom::Const ? t.parameter : 1.0;
    if (!(t.coefficient * base > 0.0)) return std::log(value(n));
    double lg = std::log(t.coefficient * base);
    if (t.atom == Atom::Exp) lg += t.parameter * n;
    if (t.atom == Atom::Pow) lg += t.parameter * std::log(static_cast<double>(n));
    logs.push_back(lg);
  }
  const double top = *std::max_element(logs.begin(), logs.end());
  if (!std::isfinite(top)) return top;
  double sum = 0.0;
  for (double lg : logs) sum += std::exp(lg - top);
  return top + std::log(sum);
}

}  // namespace hyperfn

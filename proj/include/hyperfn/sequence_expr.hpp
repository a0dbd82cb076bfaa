#pragma once

// Small expressions for parametric sequences indexed by n:
//   const:c   c
//   exp:r     e^{r n}
//   pow:p     n^p
//   sqrt      n^{1/2}
// Terms may carry a coefficient ("2*exp:-1") and be summed with '+'.

#include <string>
#include <vector>

namespace hyperfn {

class SequenceExpr {
 public:
  /// Throws ParseError.
  static SequenceExpr parse(const std::string& text);

  double value(int n) const;

  /// log(value(n)), evaluated without leaving log space when every term is
  /// positive so that e.g. exp:-10000 stays representable.
  double log_value(int n) const;

  const std::string& text() const noexcept { return text_; }

 private:
  enum class Atom { Const, Exp, Pow };
  struct Term {
    double coefficient = 1.0;
    Atom atom = Atom::Const;
    double parameter = 0.0;
  };

  double term_value(const Term& t, int n) const;

  std::string text_;
  std::vector<Term> terms_;
};

}  // namespace hyperfn

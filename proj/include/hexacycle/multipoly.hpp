#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hexacycle/rational.hpp"

namespace hexacycle {

// Multivariate polynomial over Q with dense exponent vectors over a fixed,
// ordered variable list. Terms are kept in graded lexicographic order and
// zero coefficients are never stored, so structural equality is equality of
// polynomials.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Rational, GradedLex>;

  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& value);
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);
  // One polynomial per variable, in order.
  static std::vector<MultiPoly> variables(const std::vector<std::string>& names);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;
  std::size_t index_of(const std::string& name) const;

  void add_term(const Exponents& exps, const Rational& coeff);

  // Positional evaluation; values.size() must equal vars().size().
  Rational eval(std::span<const Rational> values) const;
  // Named evaluation; throws Error(MissingVariable) if a variable is unassigned.
  Rational eval(const std::map<std::string, Rational>& assignment) const;

  // Substitutes every variable and expands. All substituted polynomials must
  // share one variable list, which becomes the result's.
  MultiPoly compose(const std::map<std::string, MultiPoly>& subst) const;
  MultiPoly derivative(const std::string& name) const;

  // Human-readable form, highest terms first, e.g. "W^2*X - 3*Y + 1".
  std::string str() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& rhs);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& b) { return a *= b; }
  friend MultiPoly operator*(const Rational& a, MultiPoly b) { return b *= a; }
  friend MultiPoly operator+(MultiPoly a, const Rational& b) {
    return a += constant(a.vars_, b);
  }
  friend MultiPoly operator+(const Rational& a, MultiPoly b) { return b + a; }
  friend MultiPoly operator-(MultiPoly a, const Rational& b) {
    return a -= constant(a.vars_, b);
  }
  friend MultiPoly operator-(const Rational& a, const MultiPoly& b) {
    return constant(b.vars_, a) - b;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_ring(const MultiPoly& other) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

}  // namespace hexacycle

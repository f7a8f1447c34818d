#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "knotadj/error.hpp"

namespace knotadj {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial with exact integer coefficients in one variable.
// The variable tag ('A' for bracket work, 't' for Jones/Alexander) travels
// with the value; arithmetic between different variables is a logic error.
// No zero coefficients are ever stored, so equality is map equality.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(char var) : var_(var) {}

  static Laurent constant(const BigInt& value, char var);
  static Laurent monomial(const BigInt& coef, int exp, char var);
  static Laurent one(char var) { return constant(1, var); }

  char var() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;

  // Both require a nonzero polynomial.
  int min_exp() const;
  int max_exp() const;
  int span() const { return max_exp() - min_exp(); }

  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coeff(int exp) const;
  void add_term(int exp, const BigInt& c);

  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
  friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
  Laurent operator*(const Laurent& rhs) const;
  Laurent operator-() const;
  Laurent scaled(const BigInt& c) const;
  Laurent shifted(int dexp) const;  // multiply by var^dexp

  // var -> var^{-1}
  Laurent inverted_variable() const;
  Laurent retagged(char var) const;

  // Exact evaluation; negative exponents are only meaningful for x = +-1.
  BigInt evaluate(const BigInt& x) const;

  bool operator==(const Laurent& rhs) const {
    return var_ == rhs.var_ && terms_ == rhs.terms_;
  }

  // Human-readable form, highest exponent first: "-t^4+t^3+t".
  std::string str() const;
  // Serialized term list sorted by exponent: {"1*t^1","1*t^3","-1*t^4"}.
  std::vector<std::string> term_list() const;
  static Laurent from_term_list(const std::vector<std::string>& terms, char var);

 private:
  char var_ = 't';
  std::map<int, BigInt> terms_;
};

// Exact division for fraction-free elimination; throws if not divisible.
Laurent divide_exact(const Laurent& num, const Laurent& den);

}  // namespace knotadj

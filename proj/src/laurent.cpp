#include "knotadj/laurent.hpp"

#include <sstream>

namespace knotadj {

Laurent Laurent::constant(const BigInt& value, char var) {
  Laurent p(var);
  p.add_term(0, value);
  return p;
}

Laurent Laurent::monomial(const BigInt& coef, int exp, char var) {
  Laurent p(var);
  p.add_term(exp, coef);
  return p;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

bool Laurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int Laurent::min_exp() const {
  if (terms_.empty()) throw Error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int Laurent::max_exp() const {
  if (terms_.empty()) throw Error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

BigInt Laurent::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Laurent::add_term(int exp, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator*(const Laurent& rhs) const {
  Laurent out(var_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

Laurent Laurent::operator-() const {
  Laurent out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Laurent Laurent::scaled(const BigInt& c) const {
  Laurent out(var_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

Laurent Laurent::shifted(int dexp) const {
  Laurent out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + dexp, c);
  return out;
}

Laurent Laurent::inverted_variable() const {
  Laurent out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

Laurent Laurent::retagged(char var) const {
  Laurent out = *this;
  out.var_ = var;
  return out;
}

BigInt Laurent::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (const auto& [e, c] : terms_) {
    if (e >= 0) {
      BigInt pw = 1;
      for (int i = 0; i < e; ++i) pw *= x;
      acc += c * pw;
    } else {
      if (x != 1 && x != -1)
        throw Error("negative exponent requires evaluation at +-1");
      acc += (e % 2 == 0 || x == 1) ? c : -c;
    }
  }
  return acc;
}

namespace {

void append_power(std::ostringstream& os, char var, int exp) {
  if (exp == 0) return;
  os << var;
  if (exp != 1) os << '^' << exp;
}

}  // namespace

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? '-' : '+');
    }
    if (mag != 1 || e == 0) os << mag.str();
    append_power(os, var_, e);
  }
  return os.str();
}

std::vector<std::string> Laurent::term_list() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    std::ostringstream os;
    os << c.str() << '*' << var_ << '^' << e;
    out.push_back(os.str());
  }
  return out;
}

Laurent Laurent::from_term_list(const std::vector<std::string>& terms,
                                char var) {
  Laurent out(var);
  for (const auto& s : terms) {
    auto star = s.find('*');
    auto caret = s.find('^', star == std::string::npos ? 0 : star);
    if (star == std::string::npos || caret == std::string::npos)
      throw Error("malformed polynomial term: " + s);
    if (s.substr(star + 1, caret - star - 1) != std::string(1, var))
      throw Error("polynomial variable mismatch in term: " + s);
    BigInt c;
    long e = 0;
    try {
      c = BigInt(s.substr(0, star));
      e = std::stol(s.substr(caret + 1));
    } catch (const std::exception&) {
      throw Error("malformed polynomial term: " + s);
    }
    out.add_term(static_cast<int>(e), c);
  }
  return out;
}

Laurent divide_exact(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw Error("division by zero polynomial");
  if (num.is_zero()) return Laurent(num.var());
  // Work with ordinary polynomials; the exponent offset is restored after.
  Laurent n = num.shifted(-num.min_exp());
  Laurent d = den.shifted(-den.min_exp());
  int offset = num.min_exp() - den.min_exp();
  Laurent q(num.var());
  while (!n.is_zero()) {
    int de = n.max_exp() - d.max_exp();
    if (de < 0) throw Error("inexact polynomial division");
    BigInt lead_n = n.coeff(n.max_exp());
    BigInt lead_d = d.coeff(d.max_exp());
    if (lead_n % lead_d != 0) throw Error("inexact polynomial division");
    Laurent term = Laurent::monomial(lead_n / lead_d, de, num.var());
    q += term;
    n -= term * d;
  }
  return q.shifted(offset);
}

}  // namespace knotadj

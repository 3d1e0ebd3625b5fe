#pragma once

#include <algorithm>
#include <sstream>

#include "thinpoly/integer.hpp"

namespace thinpoly {

// Univariate polynomial over Int, coefficients stored by ascending exponent
// with no trailing zeros.  The zero polynomial has an empty coefficient vector
// and degree 0 by convention.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(IntVector coefficients) : c_(std::move(coefficients)) { trim(); }

  static IntPolynomial constant(Int v) { return IntPolynomial(IntVector{std::move(v)}); }
  static IntPolynomial one() { return constant(1); }
  static IntPolynomial monomial(int exponent, Int v = 1) {
    IntVector c(exponent + 1);
    c[exponent] = std::move(v);
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }

  // Least exponent with a nonzero coefficient; 0 for the zero polynomial.
  int subdegree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return 0;
  }

  Int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0);
  }
  const IntVector& coefficients() const { return c_; }

  Int evaluate(const Int& x) const {
    Int s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
  }
  Int at_one() const {
    Int s = 0;
    for (const Int& v : c_) s += v;
    return s;
  }

  bool nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v >= 0; });
  }

  // coeff(i) == coeff(reflection_degree - i) for all i.
  bool palindromic(int reflection_degree) const {
    if (degree() > reflection_degree && !is_zero()) return false;
    for (int i = 0; 2 * i <= reflection_degree; ++i)
      if (coeff(i) != coeff(reflection_degree - i)) return false;
    return true;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntVector c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    IntVector c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    IntVector c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
  }
  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
  IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  // Coefficientwise comparison: every coefficient of a is <= the matching one of b.
  friend bool leq_coefficientwise(const IntPolynomial& a, const IntPolynomial& b) {
    int top = std::max(a.degree(), b.degree());
    for (int i = 0; i <= top; ++i)
      if (a.coeff(i) > b.coeff(i)) return false;
    return true;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << (c_[i] > 0 ? " + " : " - ");
      else if (c_[i] < 0) os << "-";
      Int a = abs_int(c_[i]);
      if (a != 1 || i == 0) os << a.str();
      if (i == 1) os << "t";
      if (i > 1) os << "t^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  IntVector c_;
};

// (t - 1)^k expanded by the binomial theorem.
inline IntPolynomial pow_t_minus_one(int k) {
  IntPolynomial p = IntPolynomial::one();
  IntPolynomial base(IntVector{Int(-1), Int(1)});
  for (int i = 0; i < k; ++i) p = p * base;
  return p;
}

// Row n of Pascal's triangle: C(n, 0..n).
inline IntVector binomial_row(int n) {
  IntVector row{Int(1)};
  for (int i = 1; i <= n; ++i) {
    IntVector next(i + 1, Int(1));
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row;
}

}  // namespace thinpoly

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace thinpoly {

// All lattice arithmetic is exact. Int is an arbitrary-precision integer,
// Rat an arbitrary-precision rational with positive canonical denominator.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// gcd of absolute values; gcd(0, 0) == 0.
inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Quotient rounded toward negative infinity; b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// Quotient rounded toward positive infinity; b must be nonzero.
inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

inline Int to_int(const Rat& r) {
  if (!is_integral(r)) throw std::logic_error("to_int: rational " + r.str() + " is not integral");
  return numerator(r);
}

inline Int rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

inline bool all_integral(const RatVector& v) {
  for (const Rat& x : v)
    if (!is_integral(x)) return false;
  return true;
}

inline IntVector to_int_vector(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const Rat& x : v) out.push_back(to_int(x));
  return out;
}

inline Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace thinpoly

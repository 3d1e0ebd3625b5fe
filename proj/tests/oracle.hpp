#pragma once

// Independent reference implementations used only to cross-check the library.
// Everything here is deliberately naive and self-contained: plain int64
// polynomial arithmetic, an unmemoized poset recursion, rational barycentric
// membership with its own elimination, and a brute-force box enumeration.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>;  // ascending coefficients

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

inline Poly t_minus_one_pow(int k) {
  Poly p{1};
  for (int i = 0; i < k; ++i) p = mul(p, Poly{-1, 1});
  return p;
}

inline long long coeff(const Poly& p, int i) {
  return (i >= 0 && i < static_cast<int>(p.size())) ? p[i] : 0;
}

struct FGH {
  Poly f, g, h;
};

// Literal textbook recursion for the toric f/g/h of a lower Eulerian poset
// given by an explicit relation: no caching, ranks recomputed by longest
// chains on every call, exponential subposet recursion.
class FghOracle {
 public:
  FghOracle(int n, std::function<bool(int, int)> leq) : n_(n), leq_(std::move(leq)) {}

  FGH compute() const {
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    return compute_on(all);
  }

 private:
  int rank_in(const std::vector<int>& elems, int x) const {
    int best = 0;
    for (int y : elems) {
      if (y == x || !leq_(y, x)) continue;
      best = std::max(best, rank_in(elems, y) + 1);
    }
    return best;
  }

  FGH compute_on(const std::vector<int>& elems) const {
    if (elems.empty()) return {{1}, {1}, {1}};
    int d = 0;
    for (int x : elems) d = std::max(d, rank_in(elems, x));
    Poly f;
    for (int x : elems) {
      std::vector<int> below;
      for (int y : elems)
        if (y != x && leq_(y, x)) below.push_back(y);
      Poly g_below = compute_on(below).g;
      f = add(f, mul(t_minus_one_pow(d - rank_in(elems, x)), g_below));
    }
    Poly g(d / 2 + 1, 0);
    for (int i = 0; 2 * i <= d; ++i) g[i] = coeff(f, i) - coeff(f, i - 1);
    trim(g);
    Poly h(d + 1, 0);
    for (int i = 0; i <= d; ++i) h[i] = coeff(f, d - i);
    trim(h);
    return {f, g, h};
  }

  int n_;
  std::function<bool(int, int)> leq_;
};

// ---------------------------------------------------------------------------
// Exact simplex point counting by barycentric coordinates, with a private
// Gaussian elimination over boost rationals.

using BigRat = boost::multiprecision::cpp_rational;

// Solves the square system m x = rhs; returns false if singular.
inline bool solve_square(std::vector<std::vector<BigRat>> m, std::vector<BigRat> rhs,
                         std::vector<BigRat>& x) {
  const int n = static_cast<int>(m.size());
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(m[piv], m[c]);
    std::swap(rhs[piv], rhs[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      BigRat fac = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= fac * m[c][k];
      rhs[r] -= fac * rhs[c];
    }
  }
  x.assign(n, 0);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return true;
}

// Counts lattice points of the n-th dilate of the simplex with the given
// d+1 vertices by scanning the bounding box and testing barycentric
// coordinates lambda >= 0 (or > 0), sum lambda = n.
inline long long simplex_dilate_count(const std::vector<std::vector<long long>>& verts, long long n,
                                      bool interior) {
  const int d = static_cast<int>(verts[0].size());
  if (static_cast<int>(verts.size()) != d + 1) throw std::invalid_argument("oracle: not a simplex");
  std::vector<long long> lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    long long mn = verts[0][j], mx = verts[0][j];
    for (const auto& v : verts) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = std::min(n * mn, n * mx);
    hi[j] = std::max(n * mn, n * mx);
  }
  // homogeneous system: columns (v_i, 1), rhs (x, n)
  std::vector<std::vector<BigRat>> m(d + 1, std::vector<BigRat>(d + 1));
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j < d; ++j) m[j][i] = verts[i][j];
  for (int i = 0; i <= d; ++i) m[d][i] = 1;

  long long count = 0;
  std::vector<long long> x(d, 0);
  for (int j = 0; j < d; ++j) x[j] = lo[j];
  while (true) {
    std::vector<BigRat> rhs(d + 1);
    for (int j = 0; j < d; ++j) rhs[j] = x[j];
    rhs[d] = n;
    std::vector<BigRat> lambda;
    if (!solve_square(m, rhs, lambda)) throw std::invalid_argument("oracle: degenerate simplex");
    bool ok = true;
    for (const BigRat& l : lambda)
      if (interior ? (l <= 0) : (l < 0)) {
        ok = false;
        break;
      }
    if (ok) ++count;
    int j = d - 1;
    while (j >= 0 && x[j] == hi[j]) x[j--] = lo[j];
    if (j < 0) break;
    ++x[j];
  }
  return count;
}

// All lattice triangles with one vertex at the origin and the others in
// [0, bound]^2, bucketed by |det|; the caller dedups by equivalence.
inline std::vector<std::array<std::array<long long, 2>, 2>> triangles_in_box(long long bound,
                                                                             long long max_vol) {
  std::vector<std::array<std::array<long long, 2>, 2>> out;
  for (long long a = 0; a <= bound; ++a)
    for (long long b = 0; b <= bound; ++b)
      for (long long c = 0; c <= bound; ++c)
        for (long long d = 0; d <= bound; ++d) {
          long long det = a * d - b * c;
          if (det < 1 || det > max_vol) continue;  // orientation fixes (a,b),(c,d) order
          out.push_back({{{a, b}, {c, d}}});
        }
  return out;
}

}  // namespace oracle

#pragma once

#include <random>

#include "thinpoly/thinpoly.hpp"

namespace helpers {

using namespace thinpoly;

inline LatticePolytope P(std::vector<std::vector<long long>> pts) {
  std::vector<IntVector> out;
  for (auto& p : pts) out.emplace_back(p.begin(), p.end());
  return LatticePolytope::build(std::move(out));
}

inline IntPolynomial poly(std::vector<long long> coeffs) {
  return IntPolynomial(IntVector(coeffs.begin(), coeffs.end()));
}

inline IntVector vec(std::vector<long long> v) { return IntVector(v.begin(), v.end()); }

inline IntMatrix mat(std::vector<std::vector<long long>> rows) {
  std::vector<IntVector> r;
  for (auto& row : rows) r.emplace_back(row.begin(), row.end());
  return IntMatrix::from_rows(r);
}

inline LatticePolytope cube(int d, long long lo, long long hi) {
  std::vector<IntVector> pts;
  for (int m = 0; m < (1 << d); ++m) {
    IntVector v(d);
    for (int j = 0; j < d; ++j) v[j] = (m >> j & 1) ? hi : lo;
    pts.push_back(std::move(v));
  }
  return LatticePolytope::build(std::move(pts));
}

inline LatticePolytope unit_simplex(int d) {
  std::vector<IntVector> pts{IntVector(d, Int(0))};
  for (int i = 0; i < d; ++i) {
    IntVector v(d, Int(0));
    v[i] = 1;
    pts.push_back(std::move(v));
  }
  return LatticePolytope::build(std::move(pts));
}

inline LatticePolytope cross_polytope(int d) {
  std::vector<IntVector> pts;
  for (int i = 0; i < d; ++i)
    for (int s : {1, -1}) {
      IntVector v(d, Int(0));
      v[i] = s;
      pts.push_back(std::move(v));
    }
  return LatticePolytope::build(std::move(pts));
}

// Named examples reused across the suite.
inline LatticePolytope nonspanning_4d() {
  return P({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 2, 4, 0}, {2, 1, 0, 4}});
}
inline LatticePolytope gap_5d() {
  return P({{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 1, 1, 2, 0}, {5, 3, 3, 2, 6}});
}
inline LatticePolytope small_lead_5d() {
  return P({{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {1, 1, 2, 0, 0}, {3, 5, 6, 8, 0}, {1, 1, 0, 0, 2}});
}
inline LatticePolytope cayley_tetrahedron() {
  return P({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, 1}});
}
inline LatticePolytope reflexive_triangle() { return P({{1, 0}, {0, 1}, {-1, -1}}); }
inline LatticePolytope double_triangle() { return P({{0, 0}, {2, 0}, {0, 2}}); }
inline LatticePolytope pyramid_over_square() {
  return P({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
}
inline LatticePolytope lawrence_prism(long long k0, long long k1, long long k2) {
  return P({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, k0}, {1, 0, k1}, {0, 1, k2}});
}

// ---------------------------------------------------------------------------
// Deterministic fuzz

using Rng = std::mt19937_64;

inline long long rand_in(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// Hull of a few random points, retried until full-dimensional.
inline LatticePolytope random_polytope(Rng& rng, int dim, int npts, long long lo, long long hi) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<IntVector> pts;
    for (int i = 0; i < npts; ++i) {
      IntVector v(dim);
      for (int j = 0; j < dim; ++j) v[j] = rand_in(rng, lo, hi);
      pts.push_back(std::move(v));
    }
    try {
      LatticePolytope p = LatticePolytope::build(std::move(pts));
      if (p.dim() == dim) return p;
    } catch (const std::exception&) {
      // degenerate sample; retry
    }
  }
  throw std::runtime_error("random_polytope: failed to sample a full-dimensional hull");
}

inline LatticePolytope random_simplex(Rng& rng, int dim, long long lo, long long hi) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::vector<IntVector> pts;
    for (int i = 0; i <= dim; ++i) {
      IntVector v(dim);
      for (int j = 0; j < dim; ++j) v[j] = rand_in(rng, lo, hi);
      pts.push_back(std::move(v));
    }
    try {
      LatticePolytope p = LatticePolytope::build(std::move(pts));
      if (p.dim() == dim && p.is_simplex()) return p;
    } catch (const std::exception&) {
    }
  }
  throw std::runtime_error("random_simplex: failed to sample");
}

// Product of random elementary shears, swaps and sign flips: unimodular.
inline IntMatrix random_unimodular(Rng& rng, int d) {
  IntMatrix m = IntMatrix::identity(d);
  for (int step = 0; step < 3 * d; ++step) {
    int op = static_cast<int>(rng() % 3);
    int i = static_cast<int>(rng() % d);
    int j = static_cast<int>(rng() % d);
    if (op == 0 && i != j) {
      Int c = rand_in(rng, -2, 2);
      for (int k = 0; k < d; ++k) m.at(i, k) += c * m.at(j, k);
    } else if (op == 1 && i != j) {
      for (int k = 0; k < d; ++k) std::swap(m.at(i, k), m.at(j, k));
    } else if (op == 2) {
      for (int k = 0; k < d; ++k) m.at(i, k) = -m.at(i, k);
    }
  }
  return m;
}

inline LatticePolytope apply_affine(const LatticePolytope& p, const IntMatrix& a, const IntVector& shift) {
  std::vector<IntVector> pts;
  for (const IntVector& v : p.vertices()) {
    IntVector y = a.apply(v);
    for (int j = 0; j < p.dim(); ++j) y[j] += shift[j];
    pts.push_back(std::move(y));
  }
  return LatticePolytope::build(std::move(pts));
}

inline IntVector random_shift(Rng& rng, int d, long long bound = 3) {
  IntVector v(d);
  for (int j = 0; j < d; ++j) v[j] = rand_in(rng, -bound, bound);
  return v;
}

}  // namespace helpers

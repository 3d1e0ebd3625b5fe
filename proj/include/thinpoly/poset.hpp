#pragma once

#include "thinpoly/polynomial.hpp"
#include "thinpoly/polytope.hpp"

namespace thinpoly {

// Finite poset graded by longest chains; construction validates that every
// cover step raises the rank by exactly one.
class RankedPoset {
 public:
  static RankedPoset build(int n, const std::function<bool(int, int)>& leq) {
    RankedPoset p;
    p.n_ = n;
    p.leq_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p.leq_[i][j] = (i == j) || leq(i, j);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && p.leq_[i][j] && p.leq_[j][i])
          throw std::invalid_argument("poset: relation not antisymmetric");
    p.rank_.assign(n, -1);
    for (int i = 0; i < n; ++i) p.compute_rank(i);
    for (int i = 0; i < n; ++i) p.top_rank_ = std::max(p.top_rank_, p.rank_[i]);
    // graded check: covers rise by exactly one
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || !p.leq_[i][j]) continue;
        bool cover = true;
        for (int k = 0; k < n && cover; ++k)
          if (k != i && k != j && p.leq_[i][k] && p.leq_[k][j]) cover = false;
        if (cover && p.rank_[j] != p.rank_[i] + 1)
          throw std::invalid_argument("poset: not graded by longest chains");
      }
    return p;
  }

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  bool leq(int i, int j) const { return leq_[i][j]; }
  int rank(int i) const { return rank_[i]; }
  int top_rank() const { return top_rank_; }

  RankedPoset dual() const {
    RankedPoset p;
    int n = n_;
    return build(n, [this](int i, int j) { return leq_[j][i]; });
  }

  RankedPoset induced(const std::vector<int>& elements) const {
    return build(static_cast<int>(elements.size()),
                 [this, &elements](int i, int j) { return leq_[elements[i]][elements[j]]; });
  }

 private:
  void compute_rank(int i) {
    if (rank_[i] >= 0) return;
    rank_[i] = 0;  // temporarily marks in-progress; relations are acyclic by antisymmetry
    int r = 0;
    for (int j = 0; j < n_; ++j) {
      if (j == i || !leq_[j][i]) continue;
      compute_rank(j);
      r = std::max(r, rank_[j] + 1);
    }
    rank_[i] = r;
  }

  int n_ = 0;
  std::vector<std::vector<char>> leq_;
  std::vector<int> rank_;
  int top_rank_ = -1;
};

struct ToricFGH {
  IntPolynomial f, g, h;
};

namespace detail {

// g from f at rank d: g_i = f_i - f_{i-1} for 0 <= i <= floor(d/2).
inline IntPolynomial toric_g_from_f(const IntPolynomial& f, int d) {
  IntVector g(d / 2 + 1);
  for (int i = 0; 2 * i <= d; ++i) g[i] = f.coeff(i) - f.coeff(i - 1);
  return IntPolynomial(std::move(g));
}

}  // namespace detail

// Toric f/g/h of a lower Eulerian poset: f is the sum over elements x of
// (t-1)^{d - rho(x)} g(lower ideal below x), h reverses f, g truncates the
// differences of f at half the rank.  The empty poset has f = g = h = 1.
inline ToricFGH toric_fgh(const RankedPoset& p) {
  if (p.empty()) return {IntPolynomial::one(), IntPolynomial::one(), IntPolynomial::one()};
  const int n = p.size();
  int bottom = -1;
  for (int i = 0; i < n && bottom < 0; ++i) {
    bool min = true;
    for (int j = 0; j < n && min; ++j)
      if (!p.leq(i, j)) min = false;
    if (min) bottom = i;
  }
  if (bottom < 0) throw std::invalid_argument("toric_fgh: poset has no unique minimum");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p.rank(a) < p.rank(b); });

  // g of the strict lower ideal of each element, filled in rank order
  std::vector<IntPolynomial> g_low(n);
  for (int x : order) {
    if (x == bottom) {
      g_low[x] = IntPolynomial::one();
      continue;
    }
    int d = p.rank(x) - 1;
    IntPolynomial f;
    for (int y = 0; y < n; ++y) {
      if (y == x || !p.leq(y, x)) continue;
      f += pow_t_minus_one(d - p.rank(y)) * g_low[y];
    }
    g_low[x] = detail::toric_g_from_f(f, d);
  }

  const int d = p.top_rank();
  IntPolynomial f;
  for (int x = 0; x < n; ++x) f += pow_t_minus_one(d - p.rank(x)) * g_low[x];
  if (f.degree() > d) throw std::logic_error("toric_fgh: f exceeds poset rank");
  IntVector h(d + 1);
  for (int i = 0; i <= d; ++i) h[i] = f.coeff(d - i);
  ToricFGH out{f, detail::toric_g_from_f(f, d), IntPolynomial(std::move(h))};
  if (out.h.coeff(0) != 1)
    throw std::invalid_argument("toric_fgh: h_0 != 1, poset is not lower Eulerian");
  return out;
}

// ---------------------------------------------------------------------------
// Face poset adapters

namespace detail {

// Induced subposet of the face lattice on the given face indices, ordered by
// inclusion, or by reverse inclusion when dualize is set.
inline RankedPoset face_subposet(const FaceLattice& l, const std::vector<int>& faces, bool dualize) {
  return RankedPoset::build(static_cast<int>(faces.size()), [&](int i, int j) {
    return dualize ? l.leq(faces[j], faces[i]) : l.leq(faces[i], faces[j]);
  });
}

inline std::vector<int> interval_faces(const FaceLattice& l, int lo, int hi, bool open_lo, bool open_hi) {
  std::vector<int> out;
  for (int i = 0; i < l.size(); ++i) {
    if (!l.leq(lo, i) || !l.leq(i, hi)) continue;
    if (open_lo && i == lo) continue;
    if (open_hi && i == hi) continue;
    out.push_back(i);
  }
  return out;
}

}  // namespace detail

// g of the half-open interval [F, P) in the face lattice; [P, P) is empty
// with g = 1.
inline IntPolynomial g_interval_up(const LatticePolytope& p, int face) {
  const FaceLattice& l = p.face_lattice();
  auto faces = detail::interval_faces(l, face, l.top_index(), false, true);
  return toric_fgh(detail::face_subposet(l, faces, false)).g;
}

// g of the order-dual of the open-bottom interval (F, P].
inline IntPolynomial g_dual_interval(const LatticePolytope& p, int face) {
  const FaceLattice& l = p.face_lattice();
  auto faces = detail::interval_faces(l, face, l.top_index(), true, false);
  return toric_fgh(detail::face_subposet(l, faces, true)).g;
}

// Toric f/g/h of the proper part [empty, P) of the face lattice: the
// combinatorial invariant of the boundary complex.
inline ToricFGH toric_fgh_of_polytope(const LatticePolytope& p) {
  const FaceLattice& l = p.face_lattice();
  auto faces = detail::interval_faces(l, l.empty_index(), l.top_index(), false, true);
  return toric_fgh(detail::face_subposet(l, faces, false));
}

inline IntPolynomial g_polynomial(const LatticePolytope& p) { return toric_fgh_of_polytope(p).g; }

// Memoizes the interval g-polynomials of one polytope across many queries.
class GPolynomialCache {
 public:
  explicit GPolynomialCache(const LatticePolytope& p) : p_(&p) {}
  const IntPolynomial& dual_upper(int face) {
    auto it = dual_.find(face);
    if (it == dual_.end()) it = dual_.emplace(face, g_dual_interval(*p_, face)).first;
    return it->second;
  }
  const IntPolynomial& upper(int face) {
    auto it = upper_.find(face);
    if (it == upper_.end()) it = upper_.emplace(face, g_interval_up(*p_, face)).first;
    return it->second;
  }

 private:
  const LatticePolytope* p_;
  std::map<int, IntPolynomial> dual_, upper_;
};

}  // namespace thinpoly

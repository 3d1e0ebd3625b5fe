#pragma once

#include "thinpoly/counting.hpp"
#include "thinpoly/poset.hpp"

namespace thinpoly {

// l*_P(t) = sum over faces F (including the empty face, h* = 1, dim -1) of
// (-1)^{dim P - dim F} h*_F(t) g(dual of (F, P]) (t).
inline IntPolynomial local_hstar_polynomial(const LatticePolytope& p) {
  const FaceLattice& l = p.face_lattice();
  const int d = p.dim();
  GPolynomialCache cache(p);
  IntPolynomial sum;
  for (int i = 0; i < l.size(); ++i) {
    const Face& face = l[i];
    IntPolynomial h = face.dim < 0 ? IntPolynomial::one() : hstar_polynomial(p.face_polytope(i));
    IntPolynomial term = h * cache.dual_upper(i);
    if ((d - face.dim) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

struct LocalHStarReport {
  IntPolynomial lstar;
  IntPolynomial hstar;
  bool thin = false;             // l* == 0
  bool trivially_thin = false;   // dim >= 2 deg h*
  int degree = 0;                // deg l* (0 when l* == 0)
  int subdegree = 0;
  Int interior_points;           // |int(P) cap Z^d|
  int hstar_degree = 0;
  int codegree = 1;
  Int volume;
};

inline bool is_trivially_thin(const LatticePolytope& p) {
  return p.dim() >= 2 * ehrhart_data(p).degree;
}

// Computes l* and audits it against the structure theory: palindromy
// l*_i = l*_{d+1-i}, nonnegativity, vanishing ends, boundary coefficients
// equal to the interior count, the lower bound l*_1 <= l*_i for 2 <= i <= d,
// deg l* <= deg h*, and subdeg l* >= codegree.  Violations throw logic_error.
inline LocalHStarReport local_hstar(const LatticePolytope& p) {
  const int d = p.dim();
  LocalHStarReport r;
  r.lstar = local_hstar_polynomial(p);
  EhrhartData e = ehrhart_data(p);
  r.hstar = e.hstar;
  r.hstar_degree = e.degree;
  r.codegree = e.codegree;
  r.volume = e.volume;
  r.thin = r.lstar.is_zero();
  r.trivially_thin = d >= 2 * e.degree;
  r.degree = r.lstar.degree();
  r.subdegree = r.lstar.subdegree();
  r.interior_points = count_lattice_points(p, 1, true);

  auto fail = [&](const std::string& what) {
    throw std::logic_error("local_hstar audit (" + what + ") failed: l* = " + r.lstar.str());
  };
  if (!r.lstar.palindromic(d + 1)) fail("palindromy");
  if (!r.lstar.nonnegative()) fail("nonnegativity");
  if (r.lstar.coeff(0) != 0 || r.lstar.coeff(d + 1) != 0) fail("vanishing ends");
  if (d >= 1 && (r.lstar.coeff(1) != r.interior_points || r.lstar.coeff(d) != r.interior_points))
    fail("boundary coefficient");
  for (int i = 2; i <= d; ++i)
    if (r.lstar.coeff(1) > r.lstar.coeff(i)) fail("lower bound");
  if (!r.lstar.is_zero()) {
    if (r.degree > e.degree) fail("degree bound");
    if (r.subdegree < e.codegree) fail("subdegree bound");
  }
  return r;
}

inline bool is_thin(const LatticePolytope& p) { return local_hstar_polynomial(p).is_zero(); }

struct DecompositionCheck {
  IntPolynomial hstar;
  IntPolynomial face_sum;     // sum over faces F of l*_F g[F, P)
  bool equal = false;
  bool corollary_leq = false;  // l*_P + g_P <= h*_P coefficientwise
};

// h*_P = sum over faces F (the empty face carries l* = 1) of l*_F g([F, P)),
// plus the consequence l* + g <= h* coefficientwise.
inline DecompositionCheck decomposition_check(const LatticePolytope& p) {
  const FaceLattice& l = p.face_lattice();
  GPolynomialCache cache(p);
  DecompositionCheck out;
  out.hstar = hstar_polynomial(p);
  for (int i = 0; i < l.size(); ++i) {
    IntPolynomial lf = l[i].dim < 0 ? IntPolynomial::one() : local_hstar_polynomial(p.face_polytope(i));
    out.face_sum += lf * cache.upper(i);
  }
  out.equal = out.hstar == out.face_sum;
  out.corollary_leq = leq_coefficientwise(local_hstar_polynomial(p) + g_polynomial(p), out.hstar);
  return out;
}

struct MultiplicativityCheck {
  IntPolynomial join_hstar, join_lstar;
  bool hstar_ok = false;  // h*(P join Q) == h*_P h*_Q
  bool lstar_ok = false;  // l*(P join Q) == l*_P l*_Q
};

// Free joins multiply both h* and l*.
inline MultiplicativityCheck multiplicativity_check(const LatticePolytope& p, const LatticePolytope& q) {
  LatticePolytope j = free_join(p, q);
  MultiplicativityCheck out;
  out.join_hstar = hstar_polynomial(j);
  out.join_lstar = local_hstar_polynomial(j);
  out.hstar_ok = out.join_hstar == hstar_polynomial(p) * hstar_polynomial(q);
  out.lstar_ok = out.join_lstar == local_hstar_polynomial(p) * local_hstar_polynomial(q);
  return out;
}

// Coarsening the lattice can only shrink l* and h*, coefficientwise.
inline bool refinement_monotonicity_check(const LatticePolytope& p, const IntMatrix& basis) {
  LatticePolytope coarse = sublattice_view(p, basis);
  return leq_coefficientwise(local_hstar_polynomial(coarse), local_hstar_polynomial(p)) &&
         leq_coefficientwise(hstar_polynomial(coarse), hstar_polynomial(p));
}

}  // namespace thinpoly

#pragma once

#include "thinpoly/polynomial.hpp"
#include "thinpoly/polytope.hpp"

namespace thinpoly {

namespace detail {

// Scans the coordinate box of n*P line by line along the last coordinate,
// intersecting the facet inequalities exactly.  With interior=true the
// inequalities are tightened to normal . x >= n*offset + 1, which is exact
// strictness for integer data.
template <typename Visitor>
void scan_dilate(const LatticePolytope& p, const Int& n, bool interior, Visitor&& visit) {
  const int d = p.dim();
  IntVector lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    Int mn = p.vertex(0)[j], mx = mn;
    for (int i = 1; i < p.vertex_count(); ++i) {
      mn = std::min(mn, p.vertex(i)[j]);
      mx = std::max(mx, p.vertex(i)[j]);
    }
    lo[j] = n * mn;
    hi[j] = n * mx;
  }
  const Int tighten = interior ? 1 : 0;
  IntVector x(d);
  for (int j = 0; j + 1 < d; ++j) x[j] = lo[j];
  while (true) {
    Int zlo = lo[d - 1], zhi = hi[d - 1];
    bool feasible = true;
    for (const FacetInequality& f : p.facets()) {
      Int c = n * f.offset + tighten;
      for (int j = 0; j + 1 < d; ++j) c -= f.normal[j] * x[j];
      const Int& a = f.normal[d - 1];
      if (a > 0) {
        zlo = std::max(zlo, ceil_div(c, a));
      } else if (a < 0) {
        zhi = std::min(zhi, floor_div(c, a));
      } else if (c > 0) {
        feasible = false;
        break;
      }
      if (zlo > zhi) {
        feasible = false;
        break;
      }
    }
    if (feasible) visit(x, zlo, zhi);
    int j = d - 2;
    while (j >= 0 && x[j] == hi[j]) x[j--] = lo[j];
    if (j < 0) break;
    ++x[j];
  }
}

}  // namespace detail

// |nP intersect Z^d|, or the strict-interior count with interior=true.
inline Int count_lattice_points(const LatticePolytope& p, const Int& n, bool interior = false) {
  if (n < 0) throw std::invalid_argument("count_lattice_points: negative dilate");
  if (p.dim() == 0) return 1;  // a point is its own relative interior
  Int total = 0;
  detail::scan_dilate(p, n, interior,
                      [&](const IntVector&, const Int& zlo, const Int& zhi) { total += zhi - zlo + 1; });
  return total;
}

inline std::vector<IntVector> lattice_points(const LatticePolytope& p, const Int& n, bool interior = false) {
  if (n < 0) throw std::invalid_argument("lattice_points: negative dilate");
  std::vector<IntVector> out;
  if (p.dim() == 0) {
    out.push_back(IntVector{});
    return out;
  }
  detail::scan_dilate(p, n, interior, [&](const IntVector& x, const Int& zlo, const Int& zhi) {
    for (Int z = zlo; z <= zhi; ++z) {
      IntVector pt = x;
      pt[p.dim() - 1] = z;
      out.push_back(std::move(pt));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

struct EhrhartData {
  IntVector dilate_counts;  // |nP| for n = 0..dim
  IntPolynomial hstar;
  int degree = 0;    // deg h*
  int codegree = 1;  // dim + 1 - degree == least k with interior points in kP
  Int volume;        // normalized volume h*(1)
};

// h* from the first dim+1 dilate counts via the finite-difference formula
// h*_k = sum_j (-1)^j C(d+1, j) ehr(k - j).  Cross-checks the codegree
// against direct interior counts and the nonnegativity of the coefficients.
inline EhrhartData ehrhart_data(const LatticePolytope& p) {
  const int d = p.dim();
  EhrhartData out;
  out.dilate_counts.resize(d + 1);
  for (int k = 0; k <= d; ++k) out.dilate_counts[k] = count_lattice_points(p, k);
  IntVector binom = binomial_row(d + 1);
  IntVector h(d + 1);
  for (int k = 0; k <= d; ++k) {
    Int s = 0;
    for (int j = 0; j <= k; ++j) {
      Int term = binom[j] * out.dilate_counts[k - j];
      s += (j % 2 == 0) ? term : -term;
    }
    h[k] = s;
  }
  out.hstar = IntPolynomial(std::move(h));
  if (out.hstar.coeff(0) != 1 || !out.hstar.nonnegative())
    throw std::logic_error("ehrhart_data: h* failed positivity audit for " + out.hstar.str());
  out.degree = out.hstar.degree();
  out.codegree = d + 1 - out.degree;
  for (int k = 1; k <= d + 1; ++k) {
    bool has_interior = count_lattice_points(p, k, true) > 0;
    if (has_interior != (k >= out.codegree))
      throw std::logic_error("ehrhart_data: codegree cross-check failed");
    if (has_interior) break;
  }
  out.volume = out.hstar.at_one();
  return out;
}

inline IntPolynomial hstar_polynomial(const LatticePolytope& p) { return ehrhart_data(p).hstar; }

// Normalized volume: determinant shortcut for simplices, h*(1) otherwise.
inline Int lattice_volume(const LatticePolytope& p) {
  const int d = p.dim();
  if (d == 0) return 1;
  if (p.is_simplex()) {
    std::vector<IntVector> cols;
    for (int i = 1; i <= d; ++i) {
      IntVector e(d);
      for (int j = 0; j < d; ++j) e[j] = p.vertex(i)[j] - p.vertex(0)[j];
      cols.push_back(std::move(e));
    }
    return abs_int(determinant(IntMatrix::from_columns(cols)));
  }
  return ehrhart_data(p).volume;
}

struct ParallelepipedData {
  IntPolynomial hstar;  // height-graded count of half-open box points
  IntPolynomial box;    // height-graded count of open box points: the simplex l*
};

namespace detail {

inline IntMatrix homogenized_vertex_columns(const LatticePolytope& s) {
  std::vector<IntVector> cols;
  for (const IntVector& v : s.vertices()) {
    IntVector c = v;
    c.push_back(1);
    cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(cols);
}

}  // namespace detail

// Direct scan of the bounding box of the half-open parallelepiped spanned by
// the homogenized vertex columns; classifies each lattice point by its height
// (the sum of its barycentric coordinates) and by openness.
inline ParallelepipedData parallelepiped_data(const LatticePolytope& s) {
  if (!s.is_simplex()) throw std::invalid_argument("parallelepiped_data: not a simplex");
  const int d = s.dim();
  IntMatrix w = detail::homogenized_vertex_columns(s);
  auto winv_opt = rational_inverse(w);
  if (!winv_opt) throw std::logic_error("parallelepiped_data: degenerate simplex");
  const auto& winv = *winv_opt;
  IntVector lo(d + 1), hi(d + 1);
  for (int j = 0; j <= d; ++j) {
    Int a = 0, b = 0;
    for (int i = 0; i <= d; ++i) {
      const Int& x = w.at(j, i);
      if (x < 0) a += x;
      if (x > 0) b += x;
    }
    lo[j] = a;
    hi[j] = b;
  }
  IntVector hcount(d + 2), bcount(d + 2);
  IntVector x = lo;
  while (true) {
    bool inside = true, open = true;
    Rat height = 0;
    for (int i = 0; i <= d && inside; ++i) {
      Rat lam = 0;
      for (int j = 0; j <= d; ++j) lam += Rat(winv[i][j]) * Rat(x[j]);
      if (lam < 0 || lam >= 1) inside = false;
      if (lam == 0) open = false;
      height += lam;
    }
    if (inside) {
      int h = static_cast<int>(to_int(height));
      ++hcount[h];
      if (open) ++bcount[h];
    }
    int j = d;
    while (j >= 0 && x[j] == hi[j]) x[j--] = lo[j];
    if (j < 0) break;
    ++x[j];
  }
  return {IntPolynomial(std::move(hcount)), IntPolynomial(std::move(bcount))};
}

// Same classification via the quotient Z^{d+1} / (column lattice): the coset
// representatives u^{-1} c for c in prod [0, diag_i) enumerate the box points
// directly, costing O(vol * d^2) instead of a bounding-box scan.
inline ParallelepipedData parallelepiped_data_by_cosets(const LatticePolytope& s) {
  if (!s.is_simplex()) throw std::invalid_argument("parallelepiped_data_by_cosets: not a simplex");
  const int d = s.dim();
  IntMatrix w = detail::homogenized_vertex_columns(s);
  SmithForm sf = smith_normal_form(w);
  auto uinv_opt = rational_inverse(sf.u);
  auto winv_opt = rational_inverse(w);
  if (!uinv_opt || !winv_opt) throw std::logic_error("parallelepiped_data_by_cosets: degenerate simplex");
  IntMatrix uinv(d + 1, d + 1);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) uinv.at(i, j) = to_int((*uinv_opt)[i][j]);
  const auto& winv = *winv_opt;

  IntVector hcount(d + 2), bcount(d + 2);
  IntVector c(d + 1, Int(0));
  while (true) {
    IntVector z = uinv.apply(c);
    Rat height = 0;
    bool open = true;
    for (int i = 0; i <= d; ++i) {
      Rat lam = 0;
      for (int j = 0; j <= d; ++j) lam += Rat(winv[i][j]) * Rat(z[j]);
      Rat frac = lam - Rat(rat_floor(lam));
      if (frac == 0) open = false;
      height += frac;
    }
    int h = static_cast<int>(to_int(height));
    ++hcount[h];
    if (open) ++bcount[h];
    int j = d;
    while (j >= 0 && c[j] == sf.diagonal[j] - 1) c[j--] = 0;
    if (j < 0) break;
    ++c[j];
  }
  return {IntPolynomial(std::move(hcount)), IntPolynomial(std::move(bcount))};
}

// Height-graded open-box count of a simplex (its local h*).
inline IntPolynomial box_polynomial(const LatticePolytope& s) { return parallelepiped_data(s).box; }

struct NewtonNumberResult {
  Int value;
  bool simplex;  // the combinatorial-geometric meaning below needs a simplex
};

// Alternating sum of normalized face volumes over all faces including the
// empty one (volume 1).  On simplices this equals the open-box count l*(1).
inline NewtonNumberResult newton_number(const LatticePolytope& p) {
  const FaceLattice& l = p.face_lattice();
  const int d = p.dim();
  Int sum = 0;
  for (int i = 0; i < l.size(); ++i) {
    const Face& f = l[i];
    Int vol = f.dim < 0 ? Int(1) : lattice_volume(p.face_polytope(i));
    sum += ((d - f.dim) % 2 == 0) ? vol : -vol;
  }
  return {sum, p.is_simplex()};
}

struct SpanningData {
  bool spanning = false;
  Int index;               // of the affine lattice spanned by P's lattice points
  IntVector invariant_factors;
  IntMatrix basis_columns;  // columns span the sublattice, for sublattice_view
};

// The affine lattice generated by the lattice points of P, relative to Z^d.
inline SpanningData spanning_data(const LatticePolytope& p) {
  const int d = p.dim();
  SpanningData out;
  if (d == 0) {
    out.spanning = true;
    out.index = 1;
    out.basis_columns = IntMatrix(0, 0);
    return out;
  }
  std::vector<IntVector> pts = lattice_points(p, 1);
  std::vector<IntVector> gens;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    IntVector g(d);
    for (int j = 0; j < d; ++j) g[j] = pts[i][j] - pts[0][j];
    gens.push_back(std::move(g));
  }
  IntMatrix basis = row_lattice_basis(IntMatrix::from_rows(gens));
  if (basis.rows() != d) throw std::logic_error("spanning_data: lattice points do not affinely span");
  out.index = abs_int(determinant(basis));
  out.invariant_factors = smith_normal_form(basis).diagonal;
  out.spanning = out.index == 1;
  out.basis_columns = basis.transposed();
  return out;
}

inline bool is_spanning(const LatticePolytope& p) { return spanning_data(p).spanning; }

}  // namespace thinpoly

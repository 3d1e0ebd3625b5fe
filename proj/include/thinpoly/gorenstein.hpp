#pragma once

#include "thinpoly/local_hstar.hpp"

namespace thinpoly {

struct GorensteinData {
  bool gorenstein = false;  // h* palindromic with respect to its own degree
  int codegree = 1;
  IntVector center;  // the unique interior lattice point of codegree * P
  // Facet-aligned primitive generators of the dual cone, one per facet of P,
  // expressed in the coordinates of the contact hyperplane; their hull is the
  // dual Gorenstein polytope.
  std::vector<IntVector> dual_vertices;
};

// Recognizes Gorenstein polytopes and constructs the dual: with r = codegree
// and p the unique interior point of rP, every facet normal (a, b) of P must
// satisfy a . p - b r = 1 (h*-palindromy certificate); the dual polytope is
// the hull of the cone normals (a, -b) written in a lattice basis of the
// hyperplane <(p, r), .> = 1.
inline GorensteinData gorenstein_data(const LatticePolytope& p) {
  const int d = p.dim();
  GorensteinData out;
  EhrhartData e = ehrhart_data(p);
  if (!e.hstar.palindromic(e.degree)) return out;
  out.gorenstein = true;
  out.codegree = e.codegree;

  if (d == 0) {
    out.center = IntVector{};
    out.dual_vertices = {};
    return out;
  }

  std::vector<IntVector> interior = lattice_points(p, e.codegree, true);
  if (interior.size() != 1)
    throw std::logic_error("gorenstein_data: interior point of codegree dilate not unique");
  out.center = interior[0];

  IntVector m = out.center;
  m.push_back(e.codegree);
  for (const FacetInequality& f : p.facets()) {
    Int pairing = dot(f.normal, out.center) - f.offset * Int(e.codegree);
    if (pairing != 1)
      throw std::logic_error("gorenstein_data: reflexivity certificate failed on a facet");
  }

  // Lattice basis of m^perp and a vector w0 with <m, w0> = 1, from the Smith
  // form of the single row m.
  IntMatrix mrow(1, d + 1);
  for (int j = 0; j <= d; ++j) mrow.at(0, j) = m[j];
  SmithForm sf = smith_normal_form(mrow);
  if (sf.diagonal[0] != 1)
    throw std::logic_error("gorenstein_data: center vector not primitive");
  IntVector w0 = sf.v.column(0);
  if (dot(m, w0) == -1)
    for (Int& x : w0) x = -x;
  IntMatrix kernel(d + 1, d);  // columns 1..d of v span m^perp
  for (int j = 1; j <= d; ++j)
    for (int i = 0; i <= d; ++i) kernel.at(i, j - 1) = sf.v.at(i, j);

  for (const FacetInequality& f : p.facets()) {
    IntVector y = f.normal;
    y.push_back(-f.offset);
    IntVector rhs(d + 1);
    for (int i = 0; i <= d; ++i) rhs[i] = y[i] - w0[i];
    auto c = solve_rational(kernel, rhs);
    if (!c || !all_integral(*c))
      throw std::logic_error("gorenstein_data: cone normal escapes the contact lattice");
    out.dual_vertices.push_back(to_int_vector(*c));
  }
  return out;
}

inline bool is_gorenstein(const LatticePolytope& p) { return gorenstein_data(p).gorenstein; }

inline LatticePolytope gorenstein_dual(const LatticePolytope& p) {
  GorensteinData g = gorenstein_data(p);
  if (!g.gorenstein) throw std::invalid_argument("gorenstein_dual: polytope is not Gorenstein");
  if (p.dim() == 0) return p;
  LatticePolytope dual = LatticePolytope::build(g.dual_vertices);
  if (dual.dim() != p.dim() || dual.vertex_count() != static_cast<int>(p.facets().size()))
    throw std::logic_error("gorenstein_dual: dual shape mismatch");
  return dual;
}

// Hull of the dual-cone generators attached to the facets containing F: the
// face of the dual polytope corresponding to F under the inclusion-reversing
// correspondence.
inline LatticePolytope dual_face_polytope(const LatticePolytope& p, const GorensteinData& g,
                                          VertexMask face_vertices) {
  if (!g.gorenstein || p.dim() == 0) throw std::invalid_argument("dual_face_polytope: need a positive-dimensional Gorenstein polytope");
  std::vector<IntVector> pts;
  const auto& facets = p.facets();
  for (std::size_t i = 0; i < facets.size(); ++i)
    if ((face_vertices & ~facets[i].tight) == 0) pts.push_back(g.dual_vertices[i]);
  if (pts.empty()) throw std::invalid_argument("dual_face_polytope: face lies in no facet");
  return LatticePolytope::build(std::move(pts));
}

struct DualLstarComparison {
  IntPolynomial lstar, dual_lstar;
  bool thin_match = false;    // P thin iff dual thin
  bool degree_match = false;  // deg l* == deg l* of the dual
};

inline DualLstarComparison dual_lstar_check(const LatticePolytope& p) {
  DualLstarComparison out;
  out.lstar = local_hstar_polynomial(p);
  out.dual_lstar = local_hstar_polynomial(gorenstein_dual(p));
  out.thin_match = out.lstar.is_zero() == out.dual_lstar.is_zero();
  out.degree_match = out.lstar.degree() == out.dual_lstar.degree();
  return out;
}

// deg g([empty, P)) == deg h*_P; for Gorenstein polytopes this is one of the
// two equivalent thinness certificates of the structure theorem.
inline bool is_g_thin(const LatticePolytope& p) {
  return g_polynomial(p).degree() == ehrhart_data(p).degree;
}

// Cayley join: P is the join of faces F and G and some integral affine
// functional is constant 0 on F and constant 1 on G.
inline bool is_cayley_join(const LatticePolytope& p, int f, int g) {
  if (!is_join(p, f, g)) return false;
  const int d = p.dim();
  const FaceLattice& l = p.face_lattice();
  std::vector<IntVector> rows;
  IntVector rhs;
  for (int i = 0; i < p.vertex_count(); ++i) {
    VertexMask bit = VertexMask(1) << i;
    IntVector row = p.vertex(i);
    row.push_back(-1);  // unknowns (u, c): u . v - c = level
    rows.push_back(std::move(row));
    rhs.push_back((l[f].vertices & bit) ? 0 : 1);
  }
  auto sol = solve_rational(IntMatrix::from_rows(rows), rhs);
  return sol && all_integral(*sol);
}

// Gorenstein join: a Cayley join of a Gorenstein polytope whose codegree is
// the sum of the codegrees of the two factors.
inline bool is_gorenstein_join(const LatticePolytope& p, int f, int g) {
  if (!is_gorenstein(p)) throw std::invalid_argument("is_gorenstein_join: polytope is not Gorenstein");
  if (!is_cayley_join(p, f, g)) throw std::invalid_argument("is_gorenstein_join: faces do not form a Cayley join");
  int cf = ehrhart_data(p.face_polytope(f)).codegree;
  int cg = ehrhart_data(p.face_polytope(g)).codegree;
  return ehrhart_data(p).codegree == cf + cg;
}

struct JoinScan {
  std::vector<std::pair<int, int>> joins;             // all join face pairs
  std::vector<std::pair<int, int>> cayley_joins;      // subset with a 0/1 functional
  std::vector<std::pair<int, int>> gorenstein_joins;  // subset with additive codegrees
};

inline JoinScan scan_joins(const LatticePolytope& p) {
  JoinScan out;
  out.joins = join_decompositions(p);
  bool gor = is_gorenstein(p);
  for (auto [f, g] : out.joins) {
    if (!is_cayley_join(p, f, g)) continue;
    out.cayley_joins.emplace_back(f, g);
    if (gor && is_gorenstein_join(p, f, g)) out.gorenstein_joins.emplace_back(f, g);
  }
  return out;
}

struct StructureTheoremVerdict {
  bool thin = false;
  bool condition_join = false;    // trivially thin, or Gorenstein join with a trivially thin factor
  bool condition_degree = false;  // g-thin, or Gorenstein join with deg l*_F = deg h*_F and G g-thin
  bool degree_law = false;        // thin or deg l* = deg h*
  bool consistent = false;
  std::string detail;
};

// The three equivalent characterizations of thin Gorenstein polytopes, plus
// the degree dichotomy for the non-thin case.
inline StructureTheoremVerdict structure_theorem_check(const LatticePolytope& p) {
  if (!is_gorenstein(p)) throw std::invalid_argument("structure_theorem_check: polytope is not Gorenstein");
  StructureTheoremVerdict v;
  IntPolynomial lstar = local_hstar_polynomial(p);
  EhrhartData e = ehrhart_data(p);
  v.thin = lstar.is_zero();
  v.degree_law = v.thin || lstar.degree() == e.degree;

  JoinScan scan = scan_joins(p);
  v.condition_join = is_trivially_thin(p);
  v.condition_degree = is_g_thin(p);
  std::string why_join = v.condition_join ? "trivially thin" : "";
  std::string why_degree = v.condition_degree ? "g-thin" : "";
  for (auto [f, g] : scan.gorenstein_joins) {
    LatticePolytope fp = p.face_polytope(f);
    LatticePolytope gp = p.face_polytope(g);
    if (!v.condition_join && (is_trivially_thin(fp) || is_trivially_thin(gp))) {
      v.condition_join = true;
      why_join = "gorenstein join with trivially thin factor";
    }
    for (int swap = 0; swap < 2 && !v.condition_degree; ++swap) {
      const LatticePolytope& a = swap ? gp : fp;
      const LatticePolytope& b = swap ? fp : gp;
      if (local_hstar_polynomial(a).degree() == ehrhart_data(a).degree && is_g_thin(b)) {
        v.condition_degree = true;
        why_degree = "gorenstein join with full-degree l* factor and g-thin cofactor";
      }
    }
  }
  v.consistent = (v.thin == v.condition_join) && (v.thin == v.condition_degree) && v.degree_law;
  v.detail = v.thin ? ("thin via: " + why_join + " / " + why_degree)
                    : "not thin; join and degree conditions must both fail";
  return v;
}

struct SubdegreeLawVerdict {
  bool thin = false;
  int subdegree = 0, codegree = 1, lstar_degree = 0, hstar_degree = 0;
  Int first_coeff, leading_coeff;
  bool ok = false;  // thin, or l* starts exactly at t^codegree and ends at deg h*, both with coefficient 1
};

// For Gorenstein P: either l* = 0 or l* has subdegree = codegree and degree
// = deg h* with both extreme coefficients equal to one.
inline SubdegreeLawVerdict subdegree_law_check(const LatticePolytope& p) {
  if (!is_gorenstein(p)) throw std::invalid_argument("subdegree_law_check: polytope is not Gorenstein");
  SubdegreeLawVerdict v;
  IntPolynomial lstar = local_hstar_polynomial(p);
  EhrhartData e = ehrhart_data(p);
  v.thin = lstar.is_zero();
  v.subdegree = lstar.subdegree();
  v.codegree = e.codegree;
  v.lstar_degree = lstar.degree();
  v.hstar_degree = e.degree;
  v.first_coeff = lstar.coeff(v.subdegree);
  v.leading_coeff = lstar.coeff(v.lstar_degree);
  v.ok = v.thin || (v.subdegree == v.codegree && v.lstar_degree == v.hstar_degree &&
                    v.first_coeff == 1 && v.leading_coeff == 1);
  return v;
}

// A Gorenstein simplex is thin exactly when it is a lattice pyramid (trivial
// in dimension zero).
inline bool gorenstein_simplex_check(const LatticePolytope& s) {
  if (!s.is_simplex()) throw std::invalid_argument("gorenstein_simplex_check: not a simplex");
  if (!is_gorenstein(s)) throw std::invalid_argument("gorenstein_simplex_check: simplex is not Gorenstein");
  if (s.dim() == 0) return true;
  return is_thin(s) == is_lattice_pyramid(s);
}

}  // namespace thinpoly

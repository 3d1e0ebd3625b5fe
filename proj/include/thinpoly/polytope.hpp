#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "thinpoly/matrix.hpp"

namespace thinpoly {

// Vertex subsets are bitmasks over the (at most 64) vertices in stored order.
using VertexMask = std::uint64_t;

inline int mask_size(VertexMask m) { return std::popcount(m); }

struct FacetInequality {
  IntVector normal;      // primitive inner normal: normal . x >= offset on the polytope
  Int offset;
  VertexMask tight = 0;  // vertices satisfying equality
};

struct Face {
  VertexMask vertices = 0;
  int dim = -1;  // -1 for the empty face
};

// All faces of a polytope ordered by (dim, vertex mask); index 0 is the empty
// face and the last index is the polytope itself.
class FaceLattice {
 public:
  int size() const { return static_cast<int>(faces_.size()); }
  const Face& operator[](int i) const { return faces_[i]; }
  int dim() const { return dim_; }
  int empty_index() const { return 0; }
  int top_index() const { return size() - 1; }
  int index_of(VertexMask m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }
  bool leq(int i, int j) const { return (faces_[i].vertices & ~faces_[j].vertices) == 0; }
  std::vector<int> of_dim(int k) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (faces_[i].dim == k) out.push_back(i);
    return out;
  }
  std::vector<int> f_vector() const {  // counts for dim 0..dim()
    std::vector<int> f(dim_ + 1, 0);
    for (const Face& face : faces_)
      if (face.dim >= 0 && face.dim <= dim_) ++f[face.dim];
    return f;
  }

 private:
  friend class LatticePolytope;
  std::vector<Face> faces_;
  std::map<VertexMask, int> index_;
  int dim_ = -1;
};

// A full-dimensional lattice polytope: build() re-coordinatizes input points
// whose affine hull is lower-dimensional onto a lattice basis of that hull, so
// dim() always equals the ambient dimension of vertices().
class LatticePolytope {
 public:
  static LatticePolytope build(std::vector<IntVector> points);

  int dim() const { return dim_; }
  int vertex_count() const { return static_cast<int>(verts_.size()); }
  const std::vector<IntVector>& vertices() const { return verts_; }
  const IntVector& vertex(int i) const { return verts_[i]; }
  const std::vector<FacetInequality>& facets() const { return facets_; }
  const FaceLattice& face_lattice() const { return lattice_; }
  bool is_simplex() const { return vertex_count() == dim_ + 1; }

  LatticePolytope face_polytope(VertexMask mask) const {
    if (mask == 0) throw std::invalid_argument("face_polytope: empty face has no polytope");
    std::vector<IntVector> pts;
    for (int i = 0; i < vertex_count(); ++i)
      if (mask & (VertexMask(1) << i)) pts.push_back(verts_[i]);
    return build(std::move(pts));
  }
  LatticePolytope face_polytope(int face_index) const {
    return face_polytope(lattice_[face_index].vertices);
  }

 private:
  LatticePolytope() = default;
  int dim_ = 0;
  std::vector<IntVector> verts_;         // lexicographically sorted
  std::vector<FacetInequality> facets_;  // sorted by (normal, offset)
  FaceLattice lattice_;
};

namespace detail {

inline int affine_rank(const std::vector<IntVector>& pts, VertexMask mask, int ambient) {
  std::vector<IntVector> diffs;
  const IntVector* base = nullptr;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!(mask & (VertexMask(1) << i))) continue;
    if (!base) {
      base = &pts[i];
      continue;
    }
    IntVector d(ambient);
    for (int j = 0; j < ambient; ++j) d[j] = pts[i][j] - (*base)[j];
    diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return 0;
  return rank_rational(IntMatrix::from_rows(diffs));
}

inline IntVector clear_denominators(const RatVector& v) {
  Int l = 1;
  for (const Rat& x : v) l = l / gcd_int(l, denominator(x)) * denominator(x);
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = numerator(v[i]) * (l / denominator(v[i]));
  return out;
}

}  // namespace detail

inline LatticePolytope LatticePolytope::build(std::vector<IntVector> points) {
  if (points.empty()) throw std::invalid_argument("polytope: no points");
  const std::size_t ambient = points[0].size();
  for (const IntVector& p : points)
    if (p.size() != ambient) throw std::invalid_argument("polytope: inconsistent point dimensions");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  LatticePolytope poly;

  // Re-coordinatize onto a lattice basis of the affine hull when needed.
  int n = static_cast<int>(ambient);
  if (points.size() == 1) {
    n = 0;
    points = {IntVector{}};
  } else {
    std::vector<IntVector> gens;
    for (std::size_t i = 1; i < points.size(); ++i) {
      IntVector d(n);
      for (int j = 0; j < n; ++j) d[j] = points[i][j] - points[0][j];
      gens.push_back(std::move(d));
    }
    IntMatrix gmat = IntMatrix::from_rows(gens);
    int r = rank_rational(gmat);
    if (r < n) {
      IntMatrix basis_t = saturation_row_basis(gmat).transposed();  // n x r
      std::vector<IntVector> mapped;
      for (const IntVector& p : points) {
        IntVector rhs(n);
        for (int j = 0; j < n; ++j) rhs[j] = p[j] - points[0][j];
        auto c = solve_rational(basis_t, rhs);
        if (!c || !all_integral(*c))
          throw std::logic_error("polytope: point escapes the saturated hull lattice");
        mapped.push_back(to_int_vector(*c));
      }
      points = std::move(mapped);
      std::sort(points.begin(), points.end());
      n = r;
    }
  }
  poly.dim_ = n;

  if (n == 0) {
    poly.verts_ = {IntVector{}};
    poly.lattice_.dim_ = 0;
    poly.lattice_.faces_ = {Face{0, -1}, Face{1, 0}};
    poly.lattice_.index_[0] = 0;
    poly.lattice_.index_[1] = 1;
    return poly;
  }

  // Supporting hyperplanes from n-point subsets with a one-dimensional
  // orthogonal complement.
  const int m = static_cast<int>(points.size());
  std::set<std::pair<IntVector, Int>> halfspaces;
  std::vector<int> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<IntVector> diffs;
    for (int k = 1; k < n; ++k) {
      IntVector d(n);
      for (int j = 0; j < n; ++j) d[j] = points[pick[k]][j] - points[pick[0]][j];
      diffs.push_back(std::move(d));
    }
    IntMatrix dm = diffs.empty() ? IntMatrix(0, n) : IntMatrix::from_rows(diffs);
    auto kern = kernel_basis_rational(dm);
    if (kern.size() == 1) {
      IntVector normal = primitive(detail::clear_denominators(kern[0]));
      Int b = dot(normal, points[pick[0]]);
      Int lo = b, hi = b;
      for (const IntVector& p : points) {
        Int v = dot(normal, p);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      if (lo == b && hi > b) {
        halfspaces.emplace(normal, b);
      } else if (hi == b && lo < b) {
        for (Int& x : normal) x = -x;
        halfspaces.emplace(normal, -b);
      }
    }
    // next n-combination of {0..m-1}
    int i = n - 1;
    while (i >= 0 && pick[i] == m - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
  if (halfspaces.empty()) throw std::logic_error("polytope: no supporting hyperplanes found");

  // Vertices are the points whose tight normals span rationally.
  std::vector<IntVector> verts;
  for (const IntVector& p : points) {
    std::vector<IntVector> tight;
    for (const auto& [normal, b] : halfspaces)
      if (dot(normal, p) == b) tight.push_back(normal);
    if (!tight.empty() && rank_rational(IntMatrix::from_rows(tight)) == n) verts.push_back(p);
  }
  if (verts.size() > 64) throw std::invalid_argument("polytope: more than 64 vertices unsupported");
  if (static_cast<int>(verts.size()) < n + 1) throw std::logic_error("polytope: fewer vertices than dim+1");
  poly.verts_ = std::move(verts);

  for (const auto& [normal, b] : halfspaces) {
    FacetInequality f;
    f.normal = normal;
    f.offset = b;
    for (int i = 0; i < poly.vertex_count(); ++i)
      if (dot(normal, poly.verts_[i]) == b) f.tight |= VertexMask(1) << i;
    if (mask_size(f.tight) < n) throw std::logic_error("polytope: facet with too few vertices");
    poly.facets_.push_back(std::move(f));
  }

  // Face lattice: close the facet masks under intersection.
  const VertexMask full = poly.vertex_count() == 64 ? ~VertexMask(0)
                                                    : (VertexMask(1) << poly.vertex_count()) - 1;
  std::set<VertexMask> masks{full};
  std::vector<VertexMask> work{full};
  while (!work.empty()) {
    VertexMask cur = work.back();
    work.pop_back();
    for (const FacetInequality& f : poly.facets_) {
      VertexMask inter = cur & f.tight;
      if (inter != 0 && masks.insert(inter).second) work.push_back(inter);
    }
  }
  std::vector<Face> faces{Face{0, -1}};
  for (VertexMask mk : masks) faces.push_back(Face{mk, detail::affine_rank(poly.verts_, mk, n)});
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
  });
  poly.lattice_.dim_ = n;
  poly.lattice_.faces_ = std::move(faces);
  for (int i = 0; i < poly.lattice_.size(); ++i) poly.lattice_.index_[poly.lattice_.faces_[i].vertices] = i;
  if (poly.lattice_.faces_.back().dim != n) throw std::logic_error("polytope: face lattice top has wrong dim");
  return poly;
}

// ---------------------------------------------------------------------------
// Width and Cayley structure

struct WidthResult {
  Int width;
  IntVector direction;  // first minimizer in scan order
  int bound;            // per-coordinate search bound used
};

// Minimal width over primitive directions in [-bound, bound]^d.  The true
// lattice width can exceed the reported value only if every minimizing
// direction escapes the box; for the small polytopes in scope bound 3 is ample.
inline WidthResult lattice_width(const LatticePolytope& p, int bound = 3) {
  const int d = p.dim();
  if (d == 0) return {Int(0), IntVector{}, bound};
  WidthResult best{Int(-1), IntVector{}, bound};
  IntVector u(d, -bound);
  while (true) {
    bool zero = std::all_of(u.begin(), u.end(), [](const Int& x) { return x == 0; });
    // canonical sign: first nonzero entry positive
    bool canonical = false;
    if (!zero) {
      for (const Int& x : u)
        if (x != 0) {
          canonical = x > 0;
          break;
        }
    }
    if (canonical) {
      Int g = 0;
      for (const Int& x : u) g = gcd_int(g, x);
      if (g == 1) {
        Int lo = dot(u, p.vertex(0)), hi = lo;
        for (int i = 1; i < p.vertex_count(); ++i) {
          Int v = dot(u, p.vertex(i));
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        if (best.width < 0 || hi - lo < best.width) {
          best.width = hi - lo;
          best.direction = u;
        }
      }
    }
    int i = d - 1;
    while (i >= 0 && u[i] == bound) u[i--] = -bound;
    if (i < 0) break;
    ++u[i];
  }
  return best;
}

struct CayleyResult {
  bool cayley = false;
  IntVector direction;
  VertexMask level0 = 0, level1 = 0;  // vertices at the two lattice heights
};

// Cayley polytopes are exactly those of lattice width one.
inline CayleyResult is_cayley(const LatticePolytope& p, int bound = 3) {
  CayleyResult out;
  if (p.dim() == 0) return out;
  WidthResult w = lattice_width(p, bound);
  if (w.width != 1) return out;
  out.cayley = true;
  out.direction = w.direction;
  Int lo = dot(w.direction, p.vertex(0));
  for (int i = 1; i < p.vertex_count(); ++i) lo = std::min(lo, dot(w.direction, p.vertex(i)));
  for (int i = 0; i < p.vertex_count(); ++i) {
    Int v = dot(w.direction, p.vertex(i)) - lo;
    (v == 0 ? out.level0 : out.level1) |= VertexMask(1) << i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pyramids

struct PyramidResult {
  bool pyramid = false;
  int apex = -1;        // vertex index
  VertexMask base = 0;  // tight mask of the base facet
};

// A lattice pyramid has a facet whose complement is a single vertex at
// lattice height one over the facet hyperplane.
inline PyramidResult lattice_pyramid_witness(const LatticePolytope& p) {
  PyramidResult out;
  if (p.dim() == 0) return out;
  const VertexMask full = p.vertex_count() == 64 ? ~VertexMask(0)
                                                 : (VertexMask(1) << p.vertex_count()) - 1;
  for (const FacetInequality& f : p.facets()) {
    VertexMask off = full & ~f.tight;
    if (mask_size(off) != 1) continue;
    int apex = std::countr_zero(off);
    if (dot(f.normal, p.vertex(apex)) - f.offset == 1) {
      out.pyramid = true;
      out.apex = apex;
      out.base = f.tight;
      return out;
    }
  }
  return out;
}

inline bool is_lattice_pyramid(const LatticePolytope& p) { return lattice_pyramid_witness(p).pyramid; }

// ---------------------------------------------------------------------------
// Joins

// P is the join of faces F and G when their vertex sets partition the
// vertices of P and dim F + dim G + 1 == dim P.
inline bool is_join(const LatticePolytope& p, int f, int g) {
  const FaceLattice& l = p.face_lattice();
  const Face& a = l[f];
  const Face& b = l[g];
  if (a.dim < 0 || b.dim < 0) return false;
  if (a.vertices & b.vertices) return false;
  const VertexMask full = l[l.top_index()].vertices;
  if ((a.vertices | b.vertices) != full) return false;
  return a.dim + b.dim + 1 == p.dim();
}

// All unordered face pairs {F, G} realizing P as their join.
inline std::vector<std::pair<int, int>> join_decompositions(const LatticePolytope& p) {
  const FaceLattice& l = p.face_lattice();
  std::vector<std::pair<int, int>> out;
  for (int f = 1; f < l.size() - 1; ++f)
    for (int g = f + 1; g < l.size() - 1; ++g)
      if (is_join(p, f, g)) out.emplace_back(f, g);
  return out;
}

// Free join: embed P at height 0 and Q at height 1 in complementary
// coordinate blocks of R^{dim P + dim Q + 1}.
inline LatticePolytope free_join(const LatticePolytope& p, const LatticePolytope& q) {
  const int dp = p.dim(), dq = q.dim();
  std::vector<IntVector> pts;
  for (const IntVector& v : p.vertices()) {
    IntVector x(dp + dq + 1, Int(0));
    for (int j = 0; j < dp; ++j) x[j] = v[j];
    pts.push_back(std::move(x));
  }
  for (const IntVector& w : q.vertices()) {
    IntVector x(dp + dq + 1, Int(0));
    for (int j = 0; j < dq; ++j) x[dp + j] = w[j];
    x[dp + dq] = 1;
    pts.push_back(std::move(x));
  }
  return LatticePolytope::build(std::move(pts));
}

// ---------------------------------------------------------------------------
// Unimodular equivalence

// Lexicographically least flattening of hermite_normal_form over all choices
// of base vertex and edge order; a complete invariant for simplices under
// affine unimodular equivalence.
inline IntVector simplex_canonical_form(const LatticePolytope& s) {
  if (!s.is_simplex()) throw std::invalid_argument("simplex_canonical_form: not a simplex");
  const int d = s.dim();
  IntVector best;
  for (int base = 0; base <= d; ++base) {
    std::vector<IntVector> edges;
    for (int i = 0; i <= d; ++i) {
      if (i == base) continue;
      IntVector e(d);
      for (int j = 0; j < d; ++j) e[j] = s.vertex(i)[j] - s.vertex(base)[j];
      edges.push_back(std::move(e));
    }
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<IntVector> cols;
      for (int k : perm) cols.push_back(edges[k]);
      IntMatrix h = hermite_normal_form(IntMatrix::from_columns(cols)).h;
      IntVector flat;
      flat.reserve(static_cast<std::size_t>(d) * d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) flat.push_back(h.at(i, j));
      if (best.empty() || flat < best) best = std::move(flat);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

namespace detail {

inline std::vector<int> facet_degrees(const LatticePolytope& p) {
  std::vector<int> deg(p.vertex_count(), 0);
  for (const FacetInequality& f : p.facets())
    for (int i = 0; i < p.vertex_count(); ++i)
      if (f.tight & (VertexMask(1) << i)) ++deg[i];
  return deg;
}

// Greedy affinely independent frame: d+1 vertex indices spanning the hull.
inline std::vector<int> affine_frame(const LatticePolytope& p) {
  const int d = p.dim();
  std::vector<int> frame{0};
  std::vector<IntVector> diffs;
  for (int i = 1; i < p.vertex_count() && static_cast<int>(frame.size()) <= d; ++i) {
    IntVector e(d);
    for (int j = 0; j < d; ++j) e[j] = p.vertex(i)[j] - p.vertex(0)[j];
    diffs.push_back(e);
    if (rank_rational(IntMatrix::from_rows(diffs)) == static_cast<int>(diffs.size()))
      frame.push_back(i);
    else
      diffs.pop_back();
  }
  if (static_cast<int>(frame.size()) != d + 1) throw std::logic_error("affine_frame: span failure");
  return frame;
}

inline Int diff_gcd(const IntVector& a, const IntVector& b) {
  Int g = 0;
  for (std::size_t j = 0; j < a.size(); ++j) g = gcd_int(g, a[j] - b[j]);
  return g;
}

}  // namespace detail

// Decides whether an affine unimodular map x -> A x + t carries a onto b.
inline bool is_unimodularly_equivalent(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim()) return false;
  const int d = a.dim();
  if (d == 0) return true;
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.is_simplex() && b.is_simplex()) return simplex_canonical_form(a) == simplex_canonical_form(b);
  if (a.face_lattice().f_vector() != b.face_lattice().f_vector()) return false;

  std::vector<int> deg_a = detail::facet_degrees(a);
  std::vector<int> deg_b = detail::facet_degrees(b);
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::vector<int> frame = detail::affine_frame(a);
  std::vector<IntVector> vcols;
  for (int k = 1; k <= d; ++k) {
    IntVector e(d);
    for (int j = 0; j < d; ++j) e[j] = a.vertex(frame[k])[j] - a.vertex(frame[0])[j];
    vcols.push_back(std::move(e));
  }
  auto vinv = rational_inverse(IntMatrix::from_columns(vcols));
  if (!vinv) throw std::logic_error("equivalence: frame matrix not invertible");

  std::set<IntVector> b_verts(b.vertices().begin(), b.vertices().end());
  std::vector<int> image(d + 1, -1);
  std::vector<bool> used(b.vertex_count(), false);

  // DFS over candidate images of the frame, pruning on facet degree, edge gcd
  // and affine independence.
  std::vector<std::vector<Rat>> reduced;  // row-reduced difference rows
  std::function<bool(int)> descend = [&](int k) -> bool {
    if (k == d + 1) {
      std::vector<IntVector> wcols;
      for (int t = 1; t <= d; ++t) {
        IntVector e(d);
        for (int j = 0; j < d; ++j) e[j] = b.vertex(image[t])[j] - b.vertex(image[0])[j];
        wcols.push_back(std::move(e));
      }
      IntMatrix w = IntMatrix::from_columns(wcols);
      IntMatrix amap(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Rat s = 0;
          for (int t = 0; t < d; ++t) s += Rat(w.at(i, t)) * (*vinv)[t][j];
          if (!is_integral(s)) return false;
          amap.at(i, j) = numerator(s);
        }
      Int det = determinant(amap);
      if (det != 1 && det != -1) return false;
      for (const IntVector& x : a.vertices()) {
        IntVector e(d);
        for (int j = 0; j < d; ++j) e[j] = x[j] - a.vertex(frame[0])[j];
        IntVector y = amap.apply(e);
        for (int j = 0; j < d; ++j) y[j] += b.vertex(image[0])[j];
        if (!b_verts.count(y)) return false;
      }
      return true;
    }
    for (int cand = 0; cand < b.vertex_count(); ++cand) {
      if (used[cand] || deg_b[cand] != deg_a[frame[k]]) continue;
      if (k > 0 &&
          detail::diff_gcd(b.vertex(cand), b.vertex(image[0])) !=
              detail::diff_gcd(a.vertex(frame[k]), a.vertex(frame[0])))
        continue;
      RatVector row;
      if (k > 0) {
        row.resize(d);
        for (int j = 0; j < d; ++j) row[j] = b.vertex(cand)[j] - b.vertex(image[0])[j];
        for (const auto& r : reduced) {
          int lead = -1;
          for (int j = 0; j < d; ++j)
            if (r[j] != 0) {
              lead = j;
              break;
            }
          if (lead >= 0 && row[lead] != 0) {
            Rat f = row[lead] / r[lead];
            for (int j = 0; j < d; ++j) row[j] -= f * r[j];
          }
        }
        if (std::all_of(row.begin(), row.end(), [](const Rat& x) { return x == 0; })) continue;
      }
      image[k] = cand;
      used[cand] = true;
      if (k > 0) reduced.push_back(row);
      if (descend(k + 1)) return true;
      if (k > 0) reduced.pop_back();
      used[cand] = false;
      image[k] = -1;
    }
    return false;
  };
  return descend(0);
}

// P is the free join of faces F and G when it is their join and additionally
// unimodularly equivalent to the abstract free join of the two face polytopes.
inline bool is_free_join(const LatticePolytope& p, int f, int g) {
  if (!is_join(p, f, g)) return false;
  LatticePolytope fp = p.face_polytope(f);
  LatticePolytope gp = p.face_polytope(g);
  return is_unimodularly_equivalent(p, free_join(fp, gp));
}

// ---------------------------------------------------------------------------
// Lattice changes

// The same point set read in the coordinates of the sublattice spanned by the
// given basis columns.  Every vertex must lie in that sublattice.
inline LatticePolytope sublattice_view(const LatticePolytope& p, const IntMatrix& basis) {
  const int d = p.dim();
  if (basis.rows() != d || basis.cols() != d) throw std::invalid_argument("sublattice_view: basis must be dim x dim");
  if (determinant(basis) == 0) throw std::invalid_argument("sublattice_view: basis is singular");
  std::vector<IntVector> pts;
  for (const IntVector& v : p.vertices()) {
    auto c = solve_rational(basis, v);
    if (!c || !all_integral(*c)) throw std::invalid_argument("sublattice_view: vertex outside sublattice");
    pts.push_back(to_int_vector(*c));
  }
  return LatticePolytope::build(std::move(pts));
}

struct QuotientGroup {
  IntVector invariant_factors;  // of Z^{d+1} modulo the homogenized vertex columns
  bool cyclic = false;
};

// Z^{d+1} modulo the subgroup generated by the vertices of S placed at height
// one; simplices only, where the quotient is finite of order vol_Z(S).
inline QuotientGroup quotient_group(const LatticePolytope& s) {
  if (!s.is_simplex()) throw std::invalid_argument("quotient_group: not a simplex");
  const int d = s.dim();
  std::vector<IntVector> cols;
  for (const IntVector& v : s.vertices()) {
    IntVector c = v;
    c.push_back(1);
    cols.push_back(std::move(c));
  }
  SmithForm sf = smith_normal_form(IntMatrix::from_columns(cols));
  QuotientGroup out;
  out.invariant_factors = sf.diagonal;
  int nontrivial = 0;
  for (const Int& x : out.invariant_factors) {
    if (x == 0) throw std::logic_error("quotient_group: degenerate simplex");
    if (x > 1) ++nontrivial;
  }
  out.cyclic = nontrivial <= 1;
  return out;
}

}  // namespace thinpoly

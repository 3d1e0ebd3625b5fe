#pragma once

#include <array>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "thinpoly/gorenstein.hpp"

namespace thinpoly {

// ---------------------------------------------------------------------------
// Dimension three

namespace detail {

inline void require_dim3(const LatticePolytope& p, const char* who) {
  if (p.dim() != 3) throw std::invalid_argument(std::string(who) + ": expects a three-dimensional polytope");
}

inline Int facet_interior_sum(const LatticePolytope& p) {
  Int sum = 0;
  for (const FacetInequality& f : p.facets()) sum += count_lattice_points(p.face_polytope(f.tight), 1, true);
  return sum;
}

}  // namespace detail

// Closed form in dimension three:
// l* = i(P)(t + t^3) + (i(2P) - 4 i(P) - sum of facet interior counts) t^2.
inline IntPolynomial local_hstar_3d(const LatticePolytope& p) {
  detail::require_dim3(p, "local_hstar_3d");
  Int i1 = count_lattice_points(p, 1, true);
  Int i2 = count_lattice_points(p, 2, true);
  Int mid = i2 - 4 * i1 - detail::facet_interior_sum(p);
  return IntPolynomial(IntVector{Int(0), i1, mid, i1});
}

struct InteriorInequality {
  Int lhs;  // i(2P)
  Int rhs;  // 5 i(P) + sum of facet interior counts
  bool holds = false;
};

inline InteriorInequality interior_inequality_check(const LatticePolytope& p) {
  detail::require_dim3(p, "interior_inequality_check");
  InteriorInequality out;
  out.lhs = count_lattice_points(p, 2, true);
  out.rhs = 5 * count_lattice_points(p, 1, true) + detail::facet_interior_sum(p);
  out.holds = out.lhs >= out.rhs;
  return out;
}

// Three-dimensional thinness without computing l*: hollow and i(2P) equals
// the facet interior sum.
inline bool thin_criterion_3d(const LatticePolytope& p) {
  detail::require_dim3(p, "thin_criterion_3d");
  if (count_lattice_points(p, 1, true) != 0) return false;
  return count_lattice_points(p, 2, true) == detail::facet_interior_sum(p);
}

struct LawrencePrismWitness {
  std::array<Int, 3> heights;  // nondecreasing, at least one positive
};

// A Lawrence prism over the unit triangle: hull of (0,0,0), e1, e2 raised by
// heights k0, k1, k2 along e3.  Degenerate heights (some zero) give pyramids
// over quadrilaterals or the triangle itself.
inline std::optional<LawrencePrismWitness> lawrence_prism_witness(const LatticePolytope& p) {
  detail::require_dim3(p, "lawrence_prism_witness");
  Int vol = lattice_volume(p);
  for (Int k0 = 0; 3 * k0 <= vol; ++k0)
    for (Int k1 = k0; k0 + 2 * k1 <= vol; ++k1) {
      Int k2 = vol - k0 - k1;
      std::vector<IntVector> pts = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, k0}, {1, 0, k1}, {0, 1, k2}};
      if (is_unimodularly_equivalent(p, LatticePolytope::build(std::move(pts))))
        return LawrencePrismWitness{{k0, k1, k2}};
    }
  return std::nullopt;
}

inline bool is_lawrence_prism(const LatticePolytope& p) { return lawrence_prism_witness(p).has_value(); }

enum class ThinClass3D { NotThin, PyramidOverPolygon, LawrencePrism };

struct Classification3D {
  ThinClass3D verdict = ThinClass3D::NotThin;
  Int interior_p, interior_2p, facet_interior_sum;
  PyramidResult pyramid;
  std::optional<LawrencePrismWitness> prism;
};

// Every thin 3-polytope is a pyramid over a polygon or a Lawrence prism;
// cross-validates the counting criterion against the face-sum l*.
inline Classification3D classify_thin_3d(const LatticePolytope& p) {
  detail::require_dim3(p, "classify_thin_3d");
  Classification3D out;
  out.interior_p = count_lattice_points(p, 1, true);
  out.interior_2p = count_lattice_points(p, 2, true);
  out.facet_interior_sum = detail::facet_interior_sum(p);
  bool thin = out.interior_p == 0 && out.interior_2p == out.facet_interior_sum;
  if (thin != is_thin(p)) throw std::logic_error("classify_thin_3d: counting criterion disagrees with l*");
  if (!thin) return out;
  out.pyramid = lattice_pyramid_witness(p);
  if (out.pyramid.pyramid) {
    out.verdict = ThinClass3D::PyramidOverPolygon;
    return out;
  }
  out.prism = lawrence_prism_witness(p);
  if (!out.prism) throw std::logic_error("classify_thin_3d: thin 3-polytope is neither pyramid nor Lawrence prism");
  out.verdict = ThinClass3D::LawrencePrism;
  return out;
}

// ---------------------------------------------------------------------------
// Simplex enumeration in Hermite normal form

struct EnumRecord {
  int dim = 0;
  Int volume;
  IntMatrix hnf;  // lower-triangular; vertices are the origin and the columns
  IntPolynomial hstar, lstar;
  bool thin = false;
  bool trivially_thin = false;
  bool pyramid = false;
  bool free_join = false;       // splits as a free join of two proper faces
  bool cyclic_quotient = false;
  bool spanning = false;
};

inline LatticePolytope polytope_from_hnf(const IntMatrix& h) {
  std::vector<IntVector> pts = h.column_vectors();
  pts.push_back(IntVector(h.rows(), Int(0)));
  return LatticePolytope::build(std::move(pts));
}

namespace detail {

// Free-join detection specialized to simplices: try every bipartition of the
// vertex set, filtering by volume multiplicativity, then compare canonical
// forms.
inline bool simplex_splits_as_free_join(const LatticePolytope& s) {
  if (!s.is_simplex() || s.dim() < 1) return false;
  const int nv = s.vertex_count();
  const Int vol = lattice_volume(s);
  IntVector canon = simplex_canonical_form(s);
  const VertexMask full = (VertexMask(1) << nv) - 1;
  for (VertexMask a = 1; a < full; ++a) {
    if (!(a & 1)) continue;  // unordered pairs: keep vertex 0 on side a
    VertexMask b = full & ~a;
    if (b == 0) continue;
    LatticePolytope fa = s.face_polytope(a);
    LatticePolytope fb = s.face_polytope(b);
    if (lattice_volume(fa) * lattice_volume(fb) != vol) continue;
    if (simplex_canonical_form(free_join(fa, fb)) == canon) return true;
  }
  return false;
}

}  // namespace detail

inline EnumRecord classify_hnf_simplex(const IntMatrix& h) {
  LatticePolytope s = polytope_from_hnf(h);
  EnumRecord r;
  r.dim = s.dim();
  r.hnf = h;
  ParallelepipedData box = parallelepiped_data_by_cosets(s);
  r.hstar = box.hstar;
  r.lstar = box.box;
  r.volume = r.hstar.at_one();
  r.thin = r.lstar.is_zero();
  r.trivially_thin = r.dim >= 2 * r.hstar.degree();
  r.pyramid = is_lattice_pyramid(s);
  r.free_join = detail::simplex_splits_as_free_join(s);
  r.cyclic_quotient = quotient_group(s).cyclic;
  r.spanning = is_spanning(s);
  return r;
}

// All full-dimensional lattice simplices of the given dimension with volume
// in [min_volume, max_volume], one Hermite normal form per unimodular class
// of the homogenized vertex lattice.  Every emitted matrix is a fixed point
// of hermite_normal_form; records arrive in deterministic order regardless
// of the number of worker threads.
inline void enumerate_simplices(int dim, const Int& max_volume,
                                const std::function<void(EnumRecord&&)>& sink, int jobs = 1,
                                const Int& min_volume = 1) {
  if (dim < 1 || dim > 12) throw std::invalid_argument("enumerate_simplices: dimension out of range");
  if (min_volume < 1 || max_volume < min_volume) throw std::invalid_argument("enumerate_simplices: bad volume range");
  std::vector<IntMatrix> forms;
  IntVector diag(dim);
  std::function<void(int, Int)> diagonals = [&](int i, Int remaining) {
    if (i == dim) {
      IntMatrix h(dim, dim);
      for (int k = 0; k < dim; ++k) h.at(k, k) = diag[k];
      std::function<void(int, int)> fill = [&](int col, int row) {
        if (col == dim) {
          forms.push_back(h);
          return;
        }
        if (row == dim) {
          fill(col + 1, col + 2);
          return;
        }
        for (Int v = 0; v < diag[col]; ++v) {
          h.at(row, col) = v;
          fill(col, row + 1);
        }
        h.at(row, col) = 0;
      };
      fill(0, 1);
      return;
    }
    for (Int v = 1; v <= remaining; ++v) {
      diag[i] = v;
      Int rest = remaining / v;
      if (i + 1 == dim) {
        Int prod = 1;
        for (const Int& x : diag) prod *= x;
        if (prod >= min_volume && prod <= max_volume) diagonals(i + 1, rest);
      } else {
        diagonals(i + 1, rest);
      }
    }
  };
  diagonals(0, max_volume);

  if (jobs <= 1) {
    for (IntMatrix& h : forms) sink(classify_hnf_simplex(h));
    return;
  }
  std::vector<EnumRecord> results(forms.size());
  std::vector<char> done(forms.size(), 0);
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next = 0;
  auto worker = [&] {
    while (true) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next == forms.size()) return;
        i = next++;
      }
      EnumRecord r = classify_hnf_simplex(forms[i]);
      {
        std::lock_guard lock(mu);
        results[i] = std::move(r);
        done[i] = 1;
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return done[i] == 1; });
    EnumRecord r = std::move(results[i]);
    lock.unlock();
    sink(std::move(r));
  }
  for (std::thread& t : pool) t.join();
}

inline std::vector<EnumRecord> enumerate_simplices_collect(int dim, const Int& max_volume, int jobs = 1,
                                                           bool dedup_iso = false,
                                                           const Int& min_volume = 1) {
  std::vector<EnumRecord> out;
  std::set<IntVector> seen;
  enumerate_simplices(
      dim, max_volume,
      [&](EnumRecord&& r) {
        if (dedup_iso && !seen.insert(simplex_canonical_form(polytope_from_hnf(r.hnf))).second) return;
        out.push_back(std::move(r));
      },
      jobs, min_volume);
  return out;
}

// ---------------------------------------------------------------------------
// The small-volume search: is every thin simplex trivially thin, a pyramid,
// a free join, or (after passing to the lattice its points span) one of these?

enum class ScanResolution {
  NotThin,
  TriviallyThin,
  Pyramid,
  FreeJoin,
  CoarseTriviallyThin,
  CoarsePyramid,
  CoarseFreeJoin,
  Unresolved,
};

inline const char* to_string(ScanResolution r) {
  switch (r) {
    case ScanResolution::NotThin: return "not-thin";
    case ScanResolution::TriviallyThin: return "trivially-thin";
    case ScanResolution::Pyramid: return "pyramid";
    case ScanResolution::FreeJoin: return "free-join";
    case ScanResolution::CoarseTriviallyThin: return "coarse-trivially-thin";
    case ScanResolution::CoarsePyramid: return "coarse-pyramid";
    case ScanResolution::CoarseFreeJoin: return "coarse-free-join";
    case ScanResolution::Unresolved: return "unresolved";
  }
  return "?";
}

inline ScanResolution resolve_thin_record(const EnumRecord& r) {
  if (!r.thin) return ScanResolution::NotThin;
  if (r.trivially_thin) return ScanResolution::TriviallyThin;
  if (r.pyramid) return ScanResolution::Pyramid;
  if (r.free_join) return ScanResolution::FreeJoin;
  if (!r.spanning) {
    LatticePolytope s = polytope_from_hnf(r.hnf);
    LatticePolytope coarse = sublattice_view(s, spanning_data(s).basis_columns);
    if (is_trivially_thin(coarse)) return ScanResolution::CoarseTriviallyThin;
    if (is_lattice_pyramid(coarse)) return ScanResolution::CoarsePyramid;
    if (detail::simplex_splits_as_free_join(coarse)) return ScanResolution::CoarseFreeJoin;
  }
  return ScanResolution::Unresolved;
}

struct Question1Report {
  long long total = 0;
  long long thin = 0;
  std::map<std::string, long long> resolution_counts;
  std::vector<EnumRecord> unresolved;
};

inline Question1Report question1_scan(const std::vector<EnumRecord>& records) {
  Question1Report rep;
  for (const EnumRecord& r : records) {
    ++rep.total;
    ScanResolution res = resolve_thin_record(r);
    if (res == ScanResolution::NotThin) continue;
    ++rep.thin;
    ++rep.resolution_counts[to_string(res)];
    if (res == ScanResolution::Unresolved) rep.unresolved.push_back(r);
  }
  return rep;
}

}  // namespace thinpoly

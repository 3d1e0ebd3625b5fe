#include <catch2/catch_amalgamated.hpp>
#include <vector>

#include "helpers.hpp"
#include "thinpoly/thinpoly.hpp"

using namespace thinpoly;
using helpers::cube;
using helpers::P;
using helpers::poly;
using helpers::unit_simplex;

TEST_CASE("local h* of stock polytopes") {
  CHECK(local_hstar_polynomial(P({{0}, {1}})).is_zero());
  CHECK(local_hstar_polynomial(P({{-1}, {1}})) == poly({0, 1}));
  CHECK(local_hstar_polynomial(P({{5, 5, 5}})).is_zero());  // a point spans no interior
  CHECK(local_hstar_polynomial(cube(2, 0, 1)).is_zero());
  CHECK(local_hstar_polynomial(cube(2, -1, 1)) == poly({0, 1, 1}));
  CHECK(local_hstar_polynomial(helpers::reflexive_triangle()) == poly({0, 1, 1}));
  CHECK(local_hstar_polynomial(cube(3, 0, 1)) == poly({0, 0, 1}));
  CHECK(local_hstar_polynomial(cube(3, -1, 1)) == poly({0, 1, 17, 1}));
  CHECK(local_hstar_polynomial(helpers::cayley_tetrahedron()) == poly({0, 0, 1}));
  CHECK(local_hstar_polynomial(helpers::gap_5d()) == poly({0, 0, 0, 4}));
  CHECK(local_hstar_polynomial(helpers::small_lead_5d()) == poly({0, 0, 0, 1}));
  CHECK(local_hstar_polynomial(helpers::nonspanning_4d()).is_zero());
}

TEST_CASE("in low dimensions l* is determined by the interior point count") {
  helpers::Rng rng(9091);
  for (int iter = 0; iter < 15; ++iter) {
    LatticePolytope seg = helpers::random_polytope(rng, 1, 2, -4, 4);
    Int i = count_lattice_points(seg, 1, true);
    CHECK(local_hstar_polynomial(seg) == IntPolynomial::monomial(1, i));
  }
  for (int iter = 0; iter < 15; ++iter) {
    LatticePolytope poly2 = helpers::random_polytope(rng, 2, 5, -3, 3);
    Int i = count_lattice_points(poly2, 1, true);
    IntPolynomial expected = IntPolynomial::monomial(1, i) + IntPolynomial::monomial(2, i);
    CHECK(local_hstar_polynomial(poly2) == expected);
  }
}

TEST_CASE("the structural audits of local_hstar hold on a mixed corpus") {
  helpers::Rng rng(777);
  std::vector<LatticePolytope> corpus = {
      P({{4}}),
      P({{0}, {3}}),
      cube(2, 0, 1),
      cube(3, -1, 1),
      helpers::double_triangle(),
      helpers::reflexive_triangle(),
      helpers::cross_polytope(3),
      helpers::pyramid_over_square(),
      helpers::cayley_tetrahedron(),
      helpers::nonspanning_4d(),
      helpers::gap_5d(),
      helpers::small_lead_5d()};
  for (int iter = 0; iter < 10; ++iter)
    corpus.push_back(helpers::random_polytope(rng, 2 + static_cast<int>(rng() % 2), 6, -2, 2));
  for (const LatticePolytope& p : corpus) {
    LocalHStarReport r = local_hstar(p);  // throws on any internal audit failure
    const int d = p.dim();
    CHECK(r.lstar.nonnegative());
    CHECK(r.lstar.palindromic(d + 1));
    CHECK(r.lstar.coeff(0) == 0);
    if (d >= 1) CHECK(r.lstar.coeff(1) == r.interior_points);
    CHECK(r.thin == r.lstar.is_zero());
    CHECK(r.hstar == hstar_polynomial(p));
    if (!r.lstar.is_zero()) {
      CHECK(r.degree <= r.hstar_degree);
      CHECK(r.subdegree >= r.codegree);
    }
  }
}

TEST_CASE("in dimension at most two thin is the same as hollow") {
  helpers::Rng rng(31415);
  for (int iter = 0; iter < 25; ++iter) {
    int d = 1 + static_cast<int>(rng() % 2);
    LatticePolytope p = helpers::random_polytope(rng, d, d + 3, -3, 3);
    bool hollow = count_lattice_points(p, 1, true) == 0;
    CHECK(is_thin(p) == hollow);
  }
}

TEST_CASE("thin three-dimensional polytopes are hollow") {
  helpers::Rng rng(2718);
  int thin_seen = 0;
  for (int iter = 0; iter < 30; ++iter) {
    LatticePolytope p = helpers::random_polytope(rng, 3, 5, -2, 2);
    if (!is_thin(p)) continue;
    ++thin_seen;
    CHECK(count_lattice_points(p, 1, true) == 0);
  }
  CHECK(is_thin(unit_simplex(3)));
  CHECK_FALSE(is_thin(cube(3, -1, 1)));
}

TEST_CASE("trivially thin polytopes and the inclusion into thin") {
  CHECK(is_trivially_thin(unit_simplex(4)));
  CHECK(is_trivially_thin(cube(2, 0, 1)));
  CHECK_FALSE(is_trivially_thin(cube(3, 0, 1)));       // dim 3 < 2 deg h* = 4
  CHECK_FALSE(is_trivially_thin(helpers::reflexive_triangle()));

  // join of the reflexive triangle with twice a triangle: thin but not trivially so
  LatticePolytope j = free_join(helpers::reflexive_triangle(), helpers::double_triangle());
  CHECK(hstar_polynomial(j) == poly({1, 4, 4, 3}));
  CHECK(is_thin(j));
  CHECK_FALSE(is_trivially_thin(j));

  // join with a reflexive segment instead stays flat enough to be trivially thin
  LatticePolytope f = free_join(P({{-1}, {1}}), helpers::double_triangle());
  CHECK(hstar_polynomial(f) == poly({1, 4, 3}));
  CHECK(is_trivially_thin(f));

  helpers::Rng rng(555);
  for (int iter = 0; iter < 20; ++iter) {
    int d = 1 + static_cast<int>(rng() % 3);
    LatticePolytope p = helpers::random_polytope(rng, d, d + 3, -2, 2);
    if (is_trivially_thin(p)) CHECK(is_thin(p));
  }
}

TEST_CASE("h* decomposes over faces as sum of l* times upper g") {
  helpers::Rng rng(8888);
  std::vector<LatticePolytope> corpus = {
      P({{0}, {2}}),       cube(2, 0, 1),      cube(3, 0, 1),
      cube(3, -1, 1),      helpers::reflexive_triangle(), helpers::cross_polytope(3),
      helpers::cayley_tetrahedron(), helpers::pyramid_over_square(), helpers::nonspanning_4d()};
  for (int iter = 0; iter < 8; ++iter)
    corpus.push_back(helpers::random_polytope(rng, 2 + static_cast<int>(rng() % 2), 5, -2, 2));
  for (const LatticePolytope& p : corpus) {
    DecompositionCheck c = decomposition_check(p);
    CHECK(c.equal);
    CHECK(c.face_sum == c.hstar);
    CHECK(c.corollary_leq);
  }
}

TEST_CASE("h* and l* are multiplicative under free joins") {
  helpers::Rng rng(4321);
  std::vector<std::pair<LatticePolytope, LatticePolytope>> pairs = {
      {P({{0}, {1}}), P({{0}, {1}})},
      {P({{-1}, {1}}), helpers::double_triangle()},
      {P({{-1}, {1}}), P({{-1}, {1}})},
      {helpers::reflexive_triangle(), P({{0}, {1}})},
      {cube(2, 0, 1), helpers::double_triangle()},
  };
  for (int iter = 0; iter < 12; ++iter) {
    int d1 = 1 + static_cast<int>(rng() % 2), d2 = 1 + static_cast<int>(rng() % 2);
    pairs.emplace_back(helpers::random_polytope(rng, d1, d1 + 2, -2, 2),
                       helpers::random_polytope(rng, d2, d2 + 2, -2, 2));
  }
  for (const auto& [a, b] : pairs) {
    MultiplicativityCheck m = multiplicativity_check(a, b);
    CHECK(m.hstar_ok);
    CHECK(m.lstar_ok);
  }
}

TEST_CASE("coarsening the lattice shrinks h* and l* coefficientwise") {
  using helpers::mat;
  CHECK(refinement_monotonicity_check(cube(2, 0, 2), mat({{2, 0}, {0, 2}})));
  CHECK(refinement_monotonicity_check(cube(2, 0, 2), mat({{1, 0}, {0, 2}})));
  CHECK(refinement_monotonicity_check(cube(3, 0, 2), mat({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})));
  CHECK(refinement_monotonicity_check(helpers::nonspanning_4d(),
                                      spanning_data(helpers::nonspanning_4d()).basis_columns));

  helpers::Rng rng(13579);
  for (int iter = 0; iter < 12; ++iter) {
    int d = 2 + static_cast<int>(rng() % 2);
    // build P inside the sublattice spanned by B so the coarse view exists
    IntMatrix b = IntMatrix::identity(d);
    b.at(0, 0) = 1 + static_cast<int>(rng() % 3);
    b.at(d - 1, d - 1) = 1 + static_cast<int>(rng() % 2);
    LatticePolytope small = helpers::random_polytope(rng, d, d + 2, -2, 2);
    std::vector<IntVector> pts;
    for (const IntVector& v : small.vertices()) pts.push_back(b.apply(v));
    LatticePolytope p = LatticePolytope::build(std::move(pts));
    if (p.dim() != d) continue;
    CHECK(refinement_monotonicity_check(p, b));
  }
}

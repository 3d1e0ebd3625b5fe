#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <vector>

#include "helpers.hpp"
#include "oracle.hpp"
#include "thinpoly/thinpoly.hpp"

using namespace thinpoly;
using helpers::cube;
using helpers::poly;
using helpers::unit_simplex;

namespace {

// toric f/g/h of the half-open face poset via the independent slow oracle
oracle::FGH oracle_fgh(const LatticePolytope& p) {
  const FaceLattice& l = p.face_lattice();
  int n = l.size() - 1;  // everything below the top face
  oracle::FghOracle o(n, [&l](int i, int j) { return l.leq(i, j); });
  return o.compute();
}

IntPolynomial lift(const oracle::Poly& p) {
  return helpers::poly(p);
}

}  // namespace

TEST_CASE("poset construction rejects invalid relations") {
  CHECK_THROWS_AS(RankedPoset::build(2, [](int, int) { return true; }), std::invalid_argument);
  // cover 3 -> 2 jumps two rank levels
  auto bad = [](int i, int j) {
    if (i == 0) return j == 1 || j == 2;
    if (i == 1) return j == 2;
    if (i == 3) return j == 2;
    return false;
  };
  CHECK_THROWS_AS(RankedPoset::build(4, bad), std::invalid_argument);
}

TEST_CASE("ranks are longest chains and dualize correctly") {
  auto chain = RankedPoset::build(4, [](int i, int j) { return i < j; });
  CHECK(chain.top_rank() == 3);
  CHECK(chain.rank(0) == 0);
  CHECK(chain.rank(3) == 3);
  RankedPoset d = chain.dual();
  CHECK(d.rank(3) == 0);
  CHECK(d.rank(0) == 3);
  RankedPoset sub = chain.induced({0, 2, 3});
  CHECK(sub.top_rank() == 2);
  CHECK(sub.rank(1) == 1);  // element 2 of the chain
}

TEST_CASE("toric polynomials of degenerate posets") {
  RankedPoset empty = RankedPoset::build(0, [](int, int) { return false; });
  ToricFGH e = toric_fgh(empty);
  CHECK(e.f == IntPolynomial::one());
  CHECK(e.g == IntPolynomial::one());
  CHECK(e.h == IntPolynomial::one());

  RankedPoset single = RankedPoset::build(1, [](int, int) { return false; });
  CHECK(toric_fgh(single).h == IntPolynomial::one());

  RankedPoset antichain = RankedPoset::build(2, [](int, int) { return false; });
  CHECK_THROWS_AS(toric_fgh(antichain), std::invalid_argument);
}

TEST_CASE("boolean face posets of simplices have trivial g") {
  for (int d = 1; d <= 4; ++d) {
    ToricFGH s = toric_fgh_of_polytope(unit_simplex(d));
    CHECK(s.g == IntPolynomial::one());
    IntVector ones(d + 1, Int(1));
    CHECK(s.h == IntPolynomial(ones));
  }
}

TEST_CASE("toric f/g/h of the square") {
  ToricFGH s = toric_fgh_of_polytope(cube(2, 0, 1));
  CHECK(s.f == poly({1, 2, 1}));
  CHECK(s.h == poly({1, 2, 1}));
  CHECK(s.g == poly({1, 1}));
}

TEST_CASE("toric f/g/h of the cube and the octahedron") {
  ToricFGH c = toric_fgh_of_polytope(cube(3, 0, 1));
  CHECK(c.h == poly({1, 5, 5, 1}));
  CHECK(c.g == poly({1, 4}));
  oracle::FGH co = oracle_fgh(cube(3, 0, 1));
  CHECK(c.f == lift(co.f));
  CHECK(c.g == lift(co.g));
  CHECK(c.h == lift(co.h));

  ToricFGH o = toric_fgh_of_polytope(helpers::cross_polytope(3));
  CHECK(o.h == poly({1, 3, 3, 1}));
  CHECK(o.g == poly({1, 2}));
  oracle::FGH oo = oracle_fgh(helpers::cross_polytope(3));
  CHECK(o.h == lift(oo.h));
  CHECK(o.g == lift(oo.g));
}

TEST_CASE("toric polynomials agree with the unmemoized oracle on random polytopes") {
  helpers::Rng rng(112233);
  for (int iter = 0; iter < 6; ++iter) {
    int d = 2 + static_cast<int>(rng() % 2);
    LatticePolytope p = helpers::random_polytope(rng, d, d + 3, -2, 2);
    ToricFGH got = toric_fgh_of_polytope(p);
    oracle::FGH want = oracle_fgh(p);
    CHECK(got.f == lift(want.f));
    CHECK(got.g == lift(want.g));
    CHECK(got.h == lift(want.h));
  }
}

TEST_CASE("the closed face poset of a polytope has vanishing g and h equal to g of the boundary") {
  LatticePolytope sq = cube(2, 0, 1);
  const FaceLattice& l = sq.face_lattice();
  std::vector<int> all(l.size());
  std::iota(all.begin(), all.end(), 0);
  RankedPoset closed = RankedPoset::build(
      static_cast<int>(all.size()), [&l](int i, int j) { return l.leq(i, j); });
  ToricFGH t = toric_fgh(closed);
  CHECK(t.f == poly({0, 0, 1, 1}));
  CHECK(t.g.is_zero());
  CHECK(t.h == toric_fgh_of_polytope(sq).g);

  LatticePolytope c3 = cube(3, 0, 1);
  const FaceLattice& lc = c3.face_lattice();
  std::vector<int> allc(lc.size());
  std::iota(allc.begin(), allc.end(), 0);
  RankedPoset closed3 = RankedPoset::build(
      static_cast<int>(allc.size()), [&lc](int i, int j) { return lc.leq(i, j); });
  ToricFGH t3 = toric_fgh(closed3);
  CHECK(t3.g.is_zero());
  CHECK(t3.h == toric_fgh_of_polytope(c3).g);
}

TEST_CASE("interval g-polynomials on the cube's face lattice") {
  LatticePolytope c = cube(3, 0, 1);
  const FaceLattice& l = c.face_lattice();
  CHECK(g_interval_up(c, l.empty_index()) == poly({1, 4}));  // [empty, P) is the whole poset
  for (int v : l.of_dim(0)) CHECK(g_interval_up(c, v) == IntPolynomial::one());
  for (int f : l.of_dim(2)) CHECK(g_interval_up(c, f) == IntPolynomial::one());
  // dual intervals: (empty, P] reversed is the face poset of the octahedron
  CHECK(g_dual_interval(c, l.empty_index()) == poly({1, 2}));
  for (int v : l.of_dim(0)) CHECK(g_dual_interval(c, v) == IntPolynomial::one());
  for (int f : l.of_dim(2)) CHECK(g_dual_interval(c, f) == IntPolynomial::one());
}

TEST_CASE("toric h is palindromic and unimodal, g nonnegative, on polytope face posets") {
  helpers::Rng rng(445566);
  std::vector<LatticePolytope> corpus = {cube(2, 0, 1),    cube(3, 0, 1),
                                         cube(4, 0, 1),    helpers::cross_polytope(3),
                                         helpers::cross_polytope(4), helpers::pyramid_over_square(),
                                         helpers::nonspanning_4d()};
  for (int iter = 0; iter < 8; ++iter)
    corpus.push_back(helpers::random_polytope(rng, 3, 6, -2, 2));
  for (const LatticePolytope& p : corpus) {
    ToricFGH t = toric_fgh_of_polytope(p);
    int d = p.dim();
    CHECK(t.h.coeff(0) == 1);
    CHECK(t.h.palindromic(d));
    CHECK(t.g.nonnegative());
    for (int i = 0; 2 * (i + 1) <= d; ++i) CHECK(t.h.coeff(i) <= t.h.coeff(i + 1));
    CHECK(t.g.degree() <= d / 2);
  }
}

TEST_CASE("g-degrees of a polytope and of its combinatorial dual agree") {
  helpers::Rng rng(778899);
  std::vector<LatticePolytope> corpus = {cube(3, 0, 1), helpers::cross_polytope(3),
                                         unit_simplex(4), helpers::pyramid_over_square()};
  for (int iter = 0; iter < 6; ++iter)
    corpus.push_back(helpers::random_polytope(rng, 3, 6, -2, 2));
  for (const LatticePolytope& p : corpus) {
    IntPolynomial g = g_polynomial(p);
    IntPolynomial g_dual = g_dual_interval(p, p.face_lattice().empty_index());
    CHECK(g.degree() == g_dual.degree());
  }
}

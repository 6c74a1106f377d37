#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <random>

#include "oracles.hpp"
#include "sdcat/corpus.hpp"
#include "sdcat/homology.hpp"

using namespace sdcat;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int spread) {
  std::uniform_int_distribution<int> value(-spread, spread);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = value(rng);
  return m;
}

bool unimodular(const IntMatrix& m) {
  const mpz_class det = oracle::determinant(m);
  return det == 1 || det == -1;
}

HomologyGroup group(int betti, std::vector<long> torsion = {}) {
  HomologyGroup g;
  g.betti = betti;
  for (long t : torsion) g.torsion.push_back(t);
  return g;
}

}  // namespace

TEST_CASE("Smith normal form of a small matrix") {
  const SmithResult r = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(r.invariants == std::vector<mpz_class>{2, 4});
  CHECK(r.rank == 2);
}

TEST_CASE("Smith normal form on random matrices") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + trial % 6;
    const int cols = 1 + (trial / 6) % 6;
    const IntMatrix m = random_matrix(rng, rows, cols, trial % 3 == 0 ? 1 : 9);
    const SmithResult r = smith_normal_form(m);
    REQUIRE(r.u.has_value());
    CHECK(*r.u * m * *r.v == *r.d);
    CHECK(unimodular(*r.u));
    CHECK(unimodular(*r.v));
    CHECK(r.rank == oracle::rank(m));
    for (std::size_t i = 0; i + 1 < r.invariants.size(); ++i) CHECK(r.invariants[i + 1] % r.invariants[i] == 0);
    if (rows == cols) {
      mpz_class product = 1;
      for (const auto& v : r.invariants) product *= v;
      if (r.rank < rows) product = 0;
      CHECK(product == abs(oracle::determinant(m)));
    }
    // without certificates the invariants are the same
    CHECK(smith_normal_form(m, false).invariants == r.invariants);
  }
}

TEST_CASE("homology of standard complexes") {
  const auto boundary = SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(complex_homology(boundary).degree(0) == group(1));
  CHECK(complex_homology(boundary).degree(1) == group(1));

  // six-vertex projective plane
  const auto rp2 = SimplicialComplex::from_facets(
      {"1", "2", "3", "4", "5", "6"},
      {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
  const HomologyResult h = complex_homology(rp2);
  CHECK(h.degree(0) == group(1));
  CHECK(h.degree(1) == group(0, {2}));
  CHECK(h.degree(2) == group(0));

  // seven-vertex torus
  std::vector<std::vector<int>> torus;
  for (int i = 0; i < 7; ++i) {
    torus.push_back({i, (i + 1) % 7, (i + 3) % 7});
    torus.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  const HomologyResult t =
      complex_homology(SimplicialComplex::from_facets({"0", "1", "2", "3", "4", "5", "6"}, torus));
  CHECK(t.degree(1) == group(2));
  CHECK(t.degree(2) == group(1));
}

TEST_CASE("Euler characteristic matches the face counts") {
  for (const auto& [name, k] : corpus_complexes()) {
    CAPTURE(name);
    const HomologyResult h = complex_homology(k);
    long chi = 0;
    for (std::size_t d = 0; d < h.groups.size(); ++d) chi += (d % 2 ? -1L : 1L) * h.groups[d].betti;
    CHECK(chi == oracle::euler_characteristic(k.f_vector()));
  }
}

TEST_CASE("boundaries square to zero") {
  for (const auto& [name, c] : corpus_categories()) {
    CAPTURE(name);
    CHECK_NOTHROW(check_boundary_squared_zero(normalized_chains_of_nerve(*c, 4)));
  }
}

TEST_CASE("homology of nerves") {
  // B(Z/2) = RP^infinity: Z, Z/2, 0, Z/2, ... within the valid range
  const HomologyResult z2 = nerve_homology(*corpus_category("z2"), 5);
  CHECK(z2.valid_up_to == 3);
  CHECK(z2.degree(1) == group(0, {2}));
  CHECK(z2.degree(2) == group(0));
  CHECK(z2.degree(3) == group(0, {2}));
  CHECK(!z2.valid(4));

  // a category with a terminal object is contractible
  const HomologyResult square = nerve_homology(*corpus_category("commutative_square"), 2);
  CHECK(!square.valid_up_to.has_value());
  CHECK(square.degree(0) == group(1));
  CHECK(square.degree(1) == group(0));

  // idempotent: retract of a point
  const HomologyResult e = nerve_homology(*corpus_category("idempotent"), 4);
  for (int k = 1; k <= 2; ++k) CHECK(e.degree(k) == group(0));

  CHECK(nerve_homology(*corpus_category("parallel_pair"), 3).degree(1) == group(1));
  CHECK(nerve_homology(*corpus_category("discrete2"), 2).degree(0) == group(2));
}

TEST_CASE("comparison in range") {
  const HomologyResult a = nerve_homology(*corpus_category("z2"), 4);
  const HomologyResult b = nerve_homology(*corpus_category("z2"), 6);
  const RangeComparison r = homology_equal_in_range(a, b);
  CHECK(r.equal);
  CHECK(r.up_to == 2);
  CHECK_KIND(homology_equal_in_range(nerve_homology(*corpus_category("z2"), 1), b), ErrorKind::EmptyRange);
  CHECK(to_string(group(2, {2, 4})) == "Z^2 + Z/2 + Z/4");
}

TEST_CASE("the simply connected groupoid is acyclic in range") {
  for (int n = 2; n <= 5; ++n) {
    const HomologyResult h = nerve_homology(*corpus_category("groupoid"), n);
    CHECK(h.valid_up_to == n - 2);
    CHECK(h.degree(0) == group(1));
    for (int k = 1; k <= n - 2; ++k) CHECK(h.degree(k) == group(0));
  }
}

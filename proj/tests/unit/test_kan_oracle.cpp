#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "oracles.hpp"
#include "sdcat/corpus.hpp"
#include "sdcat/kan_oracle.hpp"
#include "sdcat/subdivision.hpp"

using namespace sdcat;

TEST_CASE("nerves are simplicial sets with the right sizes") {
  for (const auto& [name, c] : corpus_categories()) {
    CAPTURE(name);
    const TruncatedSimplicialSet n = nerve_sset(*c, 3);
    CHECK_NOTHROW(check_simplicial_identities(n));
    for (int q = 0; q <= 3; ++q) {
      CHECK(mpz_class(n.size(q)) == oracle::chain_count(*c, q, true));
      CHECK(mpz_class(n.nondegenerate_count(q)) == oracle::chain_count(*c, q, false));
    }
  }
}

TEST_CASE("Kan subdivision of a simplex") {
  // sd Δ[n] is the nerve of the poset of faces of [n]: 2^(n+1) - 1 vertices
  const CategoryPtr chain3 = corpus_category("chain3");
  const KanSubdivision sd = kan_sd(nerve_sset(*chain3, 2), 2);
  CHECK_NOTHROW(check_simplicial_identities(sd.sset));
  CHECK(sd.sset.size(0) == 7);
  // edges of the face poset of the 2-simplex: 12 strict inclusions
  CHECK(sd.sset.nondegenerate_count(1) == 12);
  // maximal chains: 3! = 6 triangles
  CHECK(sd.sset.nondegenerate_count(2) == 6);
}

TEST_CASE("the fundamental category of a nerve is the category") {
  for (const char* name : {"parallel_pair", "chain3", "commutative_square", "span", "groupoid", "z2", "idempotent"}) {
    CAPTURE(name);
    const CategoryPtr c = corpus_category(name);
    const auto back = std::make_shared<const FinCategory>(fundamental_category(nerve_sset(*c, 2)));
    CHECK(find_isomorphism(c, back).has_value());
  }
}

TEST_CASE("a cyclic 1-skeleton with missing fillers is refused") {
  // z2 truncated at level 1 has no 2-simplices, so g∘g is unknown
  CHECK_KIND(fundamental_category(nerve_sset(*corpus_category("z2"), 1)), ErrorKind::Ungraded);
}

TEST_CASE("oracle agrees with the intrinsic subdivision") {
  for (const auto& [name, c] : corpus_categories()) {
    CAPTURE(name);
    const OracleReport r = oracle_compare(c, 2, 2);
    CHECK(r.verdict == Verdict::Match);
    for (const auto& [key, sizes] : r.census) CHECK(sizes.first == sizes.second);
  }
  CHECK(oracle_compare(corpus_category("groupoid"), 3, 1).verdict == Verdict::Match);
}

TEST_CASE("cap 2 needs no slack") {
  for (const char* name : {"z2", "groupoid", "idempotent", "parallel_pair"}) {
    CAPTURE(name);
    for (int slack = 0; slack <= 2; ++slack) CHECK(oracle_compare(corpus_category(name), 2, slack).verdict == Verdict::Match);
  }
}

TEST_CASE("sd N of the parallel pair is a 4-cycle") {
  const KanSubdivision sd = kan_sd(nerve_sset(*corpus_category("parallel_pair"), 2), 1);
  CHECK(sd.sset.nondegenerate_count(0) == 4);
  CHECK(sd.sset.nondegenerate_count(1) == 4);
  std::vector<int> degree(4, 0);
  for (int e = 0; e < sd.sset.size(1); ++e) {
    if (!sd.sset.nondegenerate(1, e)) continue;
    ++degree[sd.sset.face(1, e, 0)];
    ++degree[sd.sset.face(1, e, 1)];
  }
  CHECK(degree == std::vector<int>{2, 2, 2, 2});
}

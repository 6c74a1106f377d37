#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <random>

#include "oracles.hpp"
#include "sdcat/corpus.hpp"
#include "sdcat/nerve.hpp"

using namespace sdcat;

TEST_CASE("order maps") {
  CHECK(all_order_maps(1, 2).size() == 6);  // C(4,2)
  CHECK(all_order_maps(2, 1).size() == 4);
  CHECK(OrderMap::coface(2, 1).values == std::vector<int>{0, 2});
  CHECK(OrderMap::codegeneracy(1, 0).values == std::vector<int>{0, 0, 1});
  CHECK_KIND(OrderMap::make(1, 1, {1, 0}), ErrorKind::IndexOutOfRange);
  // cosimplicial identity d_j d_i = d_i d_{j-1} for i < j
  for (int q = 2; q <= 4; ++q)
    for (int j = 0; j <= q; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose(OrderMap::coface(q, j), OrderMap::coface(q - 1, i)) ==
              compose(OrderMap::coface(q, i), OrderMap::coface(q - 1, j - 1)));
  // s_j d_j = id
  for (int q = 1; q <= 3; ++q)
    for (int j = 0; j < q; ++j)
      CHECK(compose(OrderMap::codegeneracy(q - 1, j), OrderMap::coface(q, j)) == OrderMap::identity(q - 1));
}

TEST_CASE("the order map table agrees with direct composition") {
  const OrderMapTable t(3);
  for (int a = 0; a < t.size(); ++a) {
    for (int b = 0; b < t.size(); ++b) {
      if (t.map(b).target_dim != t.map(a).source_dim) continue;
      CHECK(t.map(t.compose(a, b)) == compose(t.map(a), t.map(b)));
    }
  }
}

TEST_CASE("simplex counts match walks in the arrow graph") {
  std::vector<CategoryPtr> inputs;
  for (const auto& entry : corpus_categories()) inputs.push_back(entry.category);
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) inputs.push_back(std::make_shared<const FinCategory>(random_category(rng)));
  for (const auto& c : inputs) {
    const NerveEnumeration n = enumerate_simplices(*c, 3);
    for (int q = 0; q <= 3; ++q) {
      CHECK(mpz_class(n.simplices[q].size()) == oracle::chain_count(*c, q, true));
      CHECK(mpz_class(n.nondegenerate_counts[q]) == oracle::chain_count(*c, q, false));
    }
  }
}

TEST_CASE("finite and infinite nerves") {
  CHECK(top_nondegenerate_dim(*corpus_category("chain3")) == 2);
  CHECK(top_nondegenerate_dim(*corpus_category("parallel_pair")) == 1);
  CHECK(top_nondegenerate_dim(*corpus_category("terminal")) == 0);
  CHECK(!top_nondegenerate_dim(*corpus_category("z2")).has_value());
  CHECK(!top_nondegenerate_dim(*corpus_category("idempotent")).has_value());
  CHECK_KIND(enumerate_simplices(*corpus_category("z2"), std::nullopt), ErrorKind::CapExceeded);
  // Z/2 has exactly one nondegenerate simplex (g,...,g) in each dimension
  const NerveEnumeration z2 = enumerate_simplices(*corpus_category("z2"), 6);
  for (int q = 0; q <= 6; ++q) CHECK(z2.nondegenerate_counts[q] == 1);
  CHECK_KIND(enumerate_simplices(*corpus_category("groupoid"), 20, 1000), ErrorKind::CapExceeded);
}

TEST_CASE("faces and degeneracies obey the simplicial identities") {
  const CategoryPtr c = corpus_category("commutative_square");
  const NerveEnumeration n = enumerate_simplices(*c, 3);
  for (int q = 2; q <= 3; ++q) {
    for (const Simplex& x : n.simplices[q]) {
      for (int j = 0; j <= q; ++j)
        for (int i = 0; i < j; ++i) CHECK(face(*c, face(*c, x, j), i) == face(*c, face(*c, x, i), j - 1));
      for (int i = 0; i <= q; ++i) {
        CHECK(face(*c, degenerate(*c, x, i), i) == x);
        CHECK(face(*c, degenerate(*c, x, i), i + 1) == x);
        CHECK(!is_nondegenerate(*c, degenerate(*c, x, i)));
      }
    }
  }
}

TEST_CASE("hom-sets of the simplex category match a direct count") {
  for (const char* name : {"parallel_pair", "z2", "commutative_square", "idempotent"}) {
    CAPTURE(name);
    const CategoryPtr c = corpus_category(name);
    const DeltaCategory d(c, 2);
    for (int x = 0; x < d.object_count(); ++x) {
      for (int y = 0; y < d.object_count(); ++y) {
        const int expected = oracle::hom_delta_count(*c, d.simplex(x), d.simplex(y));
        CHECK(static_cast<int>(d.hom(x, y).size()) == expected);
        CHECK(static_cast<int>(hom_delta(*c, d.simplex(x), d.simplex(y)).size()) == expected);
      }
    }
  }
}

TEST_CASE("simplex names") {
  const CategoryPtr c = corpus_category("parallel_pair");
  CHECK(simplex_name(*c, vertex_simplex(0)) == "0");
  CHECK(simplex_name(*c, make_simplex(*c, {c->arrow_index("a")})) == "(a)");
  CHECK_KIND(make_simplex(*c, {c->arrow_index("a"), c->arrow_index("b")}), ErrorKind::IllTypedComposite);
}

TEST_CASE("nondegenerate counts of the worked examples") {
  using Counts = std::vector<std::size_t>;
  CHECK(enumerate_simplices(*corpus_category("parallel_pair"), 2).nondegenerate_counts == Counts{2, 2, 0});
  CHECK(enumerate_simplices(*corpus_category("groupoid"), 3).nondegenerate_counts == Counts{2, 2, 2, 2});
  CHECK(enumerate_simplices(*corpus_category("chain3"), 3).nondegenerate_counts == Counts{3, 3, 1, 0});
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <random>

#include "sdcat/corpus.hpp"
#include "sdcat/fincat.hpp"

using namespace sdcat;

namespace {

// Exhaustive axiom check written against the public accessors only.
void check_axioms(const FinCategory& c) {
  for (int f = 0; f < c.arrow_count(); ++f) {
    REQUIRE(c.compose(c.identity(c.dst(f)), f) == f);
    REQUIRE(c.compose(f, c.identity(c.src(f))) == f);
    for (int g : c.out_arrows(c.dst(f))) {
      const int gf = c.compose(g, f);
      REQUIRE(c.src(gf) == c.src(f));
      REQUIRE(c.dst(gf) == c.dst(g));
      for (int h : c.out_arrows(c.dst(g))) REQUIRE(c.compose(h, gf) == c.compose(c.compose(h, g), f));
    }
  }
}

}  // namespace

TEST_CASE("builder rejects malformed tables") {
  SUBCASE("missing composite") {
    CategoryBuilder b;
    const int x = b.add_object("x");
    const int y = b.add_object("y");
    const int z = b.add_object("z");
    b.add_arrow("f", x, y);
    b.add_arrow("g", y, z);
    CHECK_KIND(b.build(), ErrorKind::MissingComposite);
  }
  SUBCASE("ill-typed composite") {
    CategoryBuilder b;
    const int x = b.add_object("x");
    const int y = b.add_object("y");
    const int f = b.add_arrow("f", x, y);
    const int g = b.add_arrow("g", x, y);
    b.set_composite(g, f, f);  // recorded, rejected at build time
    CHECK_KIND(b.build(), ErrorKind::IllTypedComposite);
  }
  SUBCASE("conflicting composite") {
    CategoryBuilder b;
    const int x = b.add_object("x");
    const int e = b.add_arrow("e", x, x);
    b.set_composite(e, e, e);
    CHECK_KIND(b.set_composite(e, e, b.identity(x)), ErrorKind::ConflictingComposite);
  }
  SUBCASE("non-associative endomorphisms") {
    // a∘a = b, b∘a = a, a∘b = b: (a∘a)∘a = b∘a = a but a∘(a∘a) = a∘b = b
    CategoryBuilder b;
    const int x = b.add_object("x");
    const int a = b.add_arrow("a", x, x);
    const int bb = b.add_arrow("b", x, x);
    b.set_composite(a, a, bb);
    b.set_composite(bb, a, a);
    b.set_composite(a, bb, bb);
    b.set_composite(bb, bb, bb);
    CHECK_KIND(b.build(), ErrorKind::NonAssociative);
  }
}

TEST_CASE("corpus categories satisfy the axioms") {
  for (const auto& [name, c] : corpus_categories()) {
    CAPTURE(name);
    check_axioms(*c);
  }
  CHECK(corpus_category("parallel_pair")->non_identity_arrow_count() == 2);
  CHECK(corpus_category("groupoid")->arrow_count() == 4);
  CHECK(corpus_category("z2")->arrow_count() == 2);
  CHECK(corpus_category("empty")->object_count() == 0);
  CHECK_KIND(corpus_category("nothing"), ErrorKind::UnknownObject);
}

TEST_CASE("random categories are valid and within bounds") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const FinCategory c = random_category(rng, 4, 8);
    CHECK(c.object_count() >= 1);
    CHECK(c.object_count() <= 4);
    CHECK(c.non_identity_arrow_count() <= 8);
    check_axioms(c);
  }
}

TEST_CASE("posets: closure, validation, j and p") {
  const Poset p = Poset::from_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.leq(0, 2));
  CHECK(!p.leq(2, 0));
  CHECK_KIND(Poset::from_pairs({"a", "b"}, {{"a", "b"}, {"b", "a"}}), ErrorKind::NotAPartialOrder);
  const FinCategory j = poset_to_category(p);
  CHECK(j.non_identity_arrow_count() == 3);
  CHECK(j.find_arrow("a<c").has_value());
  CHECK(preorder_collapse(j).poset == p);

  // the groupoid collapses to a point, the parallel pair to a chain
  CHECK(preorder_collapse(*corpus_category("groupoid")).poset.size() == 1);
  const Poset pair = preorder_collapse(*corpus_category("parallel_pair")).poset;
  CHECK(pair.size() == 2);
  CHECK(pair.less(0, 1));
}

TEST_CASE("functors: checking, composition, enumeration") {
  const CategoryPtr pair = corpus_category("parallel_pair");
  const CategoryPtr chain = corpus_category("chain2");
  CHECK(enumerate_functors(pair, chain).size() == 3);  // a, b ↦ (0<1), or both objects to one point
  CHECK(enumerate_functors(chain, pair).size() == 4);  // 0<1 ↦ a or b, or constant at 0 or 1
  CHECK_KIND(functor_from_names(pair, chain, {{"0", "1"}, {"1", "0"}}, {}), ErrorKind::NotAFunctor);

  for (const auto& f : corpus_functors()) {
    CAPTURE(f.name);
    CHECK_NOTHROW(check_functor(f.functor));
    CHECK(same_functor(compose(identity_functor(f.functor.target), f.functor), f.functor));
  }
  CHECK(find_isomorphism(pair, pair).has_value());
  CHECK(!find_isomorphism(pair, chain).has_value());
}

TEST_CASE("natural transformations") {
  const CategoryPtr chain = corpus_category("chain2");
  const CategoryPtr z2 = corpus_category("z2");
  const FunctorData id = identity_functor(chain);
  const int f = chain->arrow_index("0<1");
  const FunctorData to_top = functor_from_names(chain, chain, {{"0", "1"}, {"1", "1"}}, {{"0<1", "id_1"}});
  CHECK_NOTHROW(make_nat_trans(id, to_top, {f, chain->identity(1)}));
  CHECK_KIND(make_nat_trans(to_top, id, {f, chain->identity(1)}), ErrorKind::NotNatural);
  // in Z/2, conjugation by g is trivial, so g is a component id ⇒ id
  const FunctorData idz = identity_functor(z2);
  CHECK_NOTHROW(make_nat_trans(idz, idz, {z2->arrow_index("g")}));
}

TEST_CASE("fibers of the collapse of the parallel pair") {
  const CategoryPtr pair = corpus_category("parallel_pair");
  const CategoryPtr chain = corpus_category("chain2");
  const FunctorData f = functor_from_names(pair, chain, {{"0", "0"}, {"1", "1"}}, {{"a", "0<1"}, {"b", "0<1"}});
  const FiberData left = left_fiber(f, 1);
  CHECK(left.category->object_count() == 2);
  CHECK(left.category->non_identity_arrow_count() == 2);
  CHECK(fiber(f, 1).category->object_count() == 1);
  CHECK(right_fiber(f, 0).category->object_count() == 2);
}

TEST_CASE("cocartesian arrows by brute force") {
  // Against the definition, with the unique-factorization search done here.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const auto c = std::make_shared<const FinCategory>(random_category(rng, 3, 6));
    const FunctorData p = terminal_functor(c);
    for (int u = 0; u < c->arrow_count(); ++u) {
      bool expected = true;
      for (int v : c->out_arrows(c->src(u))) {
        int factorizations = 0;
        for (int w : c->out_arrows(c->dst(u))) {
          if (c->compose(w, u) == v) ++factorizations;
        }
        if (factorizations != 1) expected = false;
      }
      CHECK(is_cocartesian(p, u) == expected);
    }
  }
}

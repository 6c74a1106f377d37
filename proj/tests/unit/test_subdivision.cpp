#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <random>
#include <set>

#include "oracles.hpp"
#include "sdcat/acceptance.hpp"
#include "sdcat/corpus.hpp"
#include "sdcat/finspace.hpp"
#include "sdcat/subdivision.hpp"

using namespace sdcat;

namespace {

SdCategory make_sd(const std::string& name, int cap, int slack) {
  return sd_category(corpus_category(name), SdOptions{cap, slack, {}});
}

std::set<std::string> object_names(const FinCategory& c) {
  std::set<std::string> out;
  for (int x = 0; x < c.object_count(); ++x) out.insert(c.object_name(x));
  return out;
}

}  // namespace

TEST_CASE("worklist congruence equals the naive fixpoint") {
  std::vector<std::pair<CategoryPtr, int>> inputs;
  for (const char* name : {"parallel_pair", "z2", "idempotent", "groupoid", "commutative_square", "span"}) {
    inputs.emplace_back(corpus_category(name), 3);
  }
  std::mt19937 rng(5);
  for (int i = 0; i < 6; ++i) inputs.emplace_back(std::make_shared<const FinCategory>(random_category(rng, 3, 5)), 2);
  for (const auto& [c, cap] : inputs) {
    auto d = std::make_shared<const DeltaCategory>(c, cap);
    const Congruence fast = congruence_closure(d);
    const std::vector<int> slow = oracle::naive_congruence(*d);
    for (int a = 0; a < d->arrow_count(); ++a) REQUIRE(fast.representative(a) == slow[a]);
  }
}

TEST_CASE("congruence classes stay inside hom-sets") {
  auto d = std::make_shared<const DeltaCategory>(corpus_category("z2"), 3);
  const Congruence cong = congruence_closure(d);
  for (int a = 0; a < d->arrow_count(); ++a) {
    const int r = cong.representative(a);
    CHECK(d->source(r) == d->source(a));
    CHECK(d->target(r) == d->target(a));
    CHECK(r <= a);
  }
}

TEST_CASE("parallel pair: Sd has four objects and four arrows") {
  const SdCategory sd = make_sd("parallel_pair", 2, 2);
  CHECK(object_names(sd.category()) == std::set<std::string>{"0", "1", "(a)", "(b)"});
  CHECK(sd.category().non_identity_arrow_count() == 4);
  const HomologyResult h = sd_homology(sd);
  CHECK(h.degree(0).betti == 1);
  CHECK(h.degree(1).betti == 1);
  CHECK(h.degree(2) == HomologyGroup{});
}

TEST_CASE("parallel pair: Sd^2 is the subdivided circle") {
  // four vertices of Sd and four edges; the edges 0->(a), 0->(b), 1->(a),
  // 1->(b) are the only nondegenerate 1-simplices and there are no 2-chains
  const Sd2Result r = sd2_poset(corpus_category("parallel_pair"), SdOptions{2, 2, {}});
  CHECK(r.poset.size() == 8);
  CHECK(mpz_class(r.poset.size()) == oracle::chain_count(r.first.category(), 0, false) +
                                         oracle::chain_count(r.first.category(), 1, false));
  CHECK(complex_homology(order_complex(r.poset)).degree(1).betti == 1);
}

TEST_CASE("simply connected groupoid: Sd up to n is a poset with two objects per dimension") {
  for (int n = 1; n <= 3; ++n) {
    const SdCategory sd = make_sd("groupoid", n, 1);
    CHECK(sd.category().object_count() == 2 * (n + 1));
    for (int x = 0; x < sd.category().object_count(); ++x)
      for (int y = 0; y < sd.category().object_count(); ++y) CHECK(sd.category().hom(x, y).size() <= 1);
  }
  // every object of dimension k sits below both objects of dimension k+1
  const SdCategory sd = make_sd("groupoid", 3, 1);
  for (int x = 0; x < sd.category().object_count(); ++x)
    for (int y = 0; y < sd.category().object_count(); ++y)
      CHECK(sd.category().hom(x, y).size() == (sd.dim(y) > sd.dim(x) || x == y ? 1u : 0u));
}

TEST_CASE("objects of Sd are the nondegenerate simplices up to the cap") {
  for (const auto& [name, c] : corpus_categories()) {
    CAPTURE(name);
    const SdCategory sd = sd_category(c, SdOptions{2, 1, {}});
    mpz_class expected = 0;
    for (int q = 0; q <= 2; ++q) expected += oracle::chain_count(*c, q, false);
    CHECK(mpz_class(sd.category().object_count()) == expected);
    CHECK(direct_category_violation(sd).empty());
  }
}

TEST_CASE("Sd of a poset is the face poset of its order complex") {
  // the nerve of a poset is its order complex, whose simplices have no
  // identifications, so Sd(P) has an arrow X -> Y iff X is a face of Y
  for (const auto& [name, p] : corpus_posets()) {
    CAPTURE(name);
    const auto c = std::make_shared<const FinCategory>(poset_to_category(p));
    const int top = top_nondegenerate_dim(*c).value_or(0);
    const SdCategory sd = sd_category(c, SdOptions{top, 1, {}});
    const Poset faces = face_poset(order_complex(p));
    REQUIRE(sd.category().object_count() == faces.size());
    auto vertex_set = [&](int x) {
      std::set<int> out(sd.simplex(x).vertices.begin(), sd.simplex(x).vertices.end());
      return out;
    };
    for (int x = 0; x < sd.category().object_count(); ++x) {
      for (int y = 0; y < sd.category().object_count(); ++y) {
        const auto vx = vertex_set(x);
        const auto vy = vertex_set(y);
        const bool face = std::includes(vy.begin(), vy.end(), vx.begin(), vx.end());
        CHECK(sd.category().hom(x, y).size() == (face ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("reduction and least sections") {
  const CategoryPtr c = corpus_category("chain3");
  const int f = c->arrow_index("0<1");
  const Simplex x = make_simplex(*c, {c->identity(0), f, c->identity(1)});
  const ReductionData r = reduce(*c, x);
  CHECK(r.reduced == make_simplex(*c, {f}));
  CHECK(r.alpha.values == std::vector<int>{0, 0, 1, 1});
  CHECK(apply(*c, r.reduced, r.alpha) == x);
  CHECK(least_section(r.alpha).values == std::vector<int>{0, 2});
  CHECK(compose(r.alpha, least_section(r.alpha)) == OrderMap::identity(1));
}

TEST_CASE("epsilon and sup") {
  const SdCategory sd = make_sd("commutative_square", 2, 2);
  const FunctorData eps = epsilon(sd);
  CHECK_NOTHROW(check_functor(eps));
  // every simplex goes to its last vertex
  for (int x = 0; x < sd.category().object_count(); ++x) CHECK(eps.object_map[x] == sd.simplex(x).last());
  const FinCategory& c = sd.base();
  const Simplex y = make_simplex(c, {c.arrow_index("f"), c.arrow_index("h")});
  CHECK(sup_arrow(c, y, OrderMap::coface(2, 2)) == c.arrow_index("h"));
  CHECK(sup_arrow(c, y, OrderMap::coface(2, 0)) == c.identity(y.last()));
}

TEST_CASE("Sd on functors") {
  for (const auto& f : corpus_functors()) {
    CAPTURE(f.name);
    const SdCategory s = sd_category(f.functor.source, SdOptions{2, 2, {}});
    const SdCategory d = sd_category(f.functor.target, SdOptions{2, 2, {}});
    const FunctorData image = sd_functor(f.functor, s, d);
    CHECK_NOTHROW(check_functor(image));
    CHECK(same_functor(compose(f.functor, epsilon(s)), compose(epsilon(d), image)));
  }
}

TEST_CASE("r on a degenerate arrow") {
  const SdCategory sd = make_sd("chain2", 2, 2);
  const FinCategory& c = sd.base();
  const int f = c.arrow_index("0<1");
  // (0<1) -> (0<1, id_1) by d_2 reduces to the identity of (0<1)
  const Simplex x = make_simplex(c, {f});
  const Simplex y = make_simplex(c, {f, c.identity(1)});
  const int arrow = r_on_arrow(sd, x, y, OrderMap::coface(2, 2));
  CHECK(sd.category().is_identity(arrow));
}

TEST_CASE("stabilization and the second subdivision") {
  const StabilizationReport r = stabilization_check(corpus_category("z2"), 2, {0, 1, 2});
  CHECK(r.stable);
  CHECK(r.census.size() == 3);
  const Sd2Result s2 = sd2_poset(corpus_category("z2"), SdOptions{2, 1, {}});
  CHECK(direct_category_violation(s2.second).empty());
}

TEST_CASE("cocartesian arrows of the simplex category") {
  const CategoryPtr c = corpus_category("chain2");
  auto d = std::make_shared<const DeltaCategory>(c, 2);
  const TruncatedSimplexCategory plain = delta_as_category(d);
  CHECK_NOTHROW(check_functor(plain.sup));
  // identities are always cocartesian
  for (int x = 0; x < plain.category->object_count(); ++x) CHECK(is_cocartesian(plain.sup, plain.category->identity(x)));
  auto wide = std::make_shared<const DeltaCategory>(c, 4);
  const TruncatedSimplexCategory quotient = quotient_as_category(congruence_closure(wide), 2);
  CHECK_NOTHROW(check_functor(quotient.sup));
  CHECK(quotient.category->object_count() == plain.category->object_count());
  CHECK(quotient.category->arrow_count() < plain.category->arrow_count());
  CHECK_KIND(quotient_as_category(congruence_closure(d), 3), ErrorKind::OutOfTruncation);
}

TEST_CASE("groupoid: the arrows from a vertex into a 2-simplex form one class") {
  const CategoryPtr c = corpus_category("groupoid");
  auto d = std::make_shared<const DeltaCategory>(c, 3);
  const Congruence cong = congruence_closure(d);
  const int f = c->arrow_index("f");
  const int g = c->arrow_index("g");
  const int x = *d->find(vertex_simplex(c->src(f)));
  const int y = *d->find(make_simplex(*c, {f, g}));
  const std::vector<int> arrows = d->hom(x, y);
  REQUIRE(arrows.size() == 2);  // the first and the last vertex
  CHECK(cong.equivalent(arrows[0], arrows[1]));
}

TEST_CASE("parallel pair: no two parallel arrows between nondegenerate simplices are identified") {
  auto d = std::make_shared<const DeltaCategory>(corpus_category("parallel_pair"), 3);
  const Congruence cong = congruence_closure(d);
  for (int x = 0; x < d->object_count(); ++x) {
    for (int y = 0; y < d->object_count(); ++y) {
      if (!d->nondegenerate(x) || !d->nondegenerate(y)) continue;
      const std::vector<int> arrows = d->hom(x, y);
      for (std::size_t i = 0; i < arrows.size(); ++i)
        for (std::size_t j = i + 1; j < arrows.size(); ++j) CHECK(!cong.equivalent(arrows[i], arrows[j]));
    }
  }
}

TEST_CASE("degeneracies are invertible modulo the congruence") {
  // [s_i] ∘ [d_{i+1}] is the identity class and [d_{i+1}] ∘ [s_i] too
  auto d = std::make_shared<const DeltaCategory>(corpus_category("z2"), 3);
  const Congruence cong = congruence_closure(d);
  const FinCategory& c = d->base();
  for (int x = 0; x < d->object_count(); ++x) {
    const int q = d->dim(x);
    if (q + 1 > 2) continue;
    for (int i = 0; i <= q; ++i) {
      const int y = *d->find(degenerate(c, d->simplex(x), i));
      const int up = d->arrow(y, d->maps().id_of(OrderMap::coface(q + 1, i + 1)));
      const int down = d->arrow(x, d->maps().id_of(OrderMap::codegeneracy(q, i)));
      REQUIRE(d->source(up) == x);
      REQUIRE(d->source(down) == y);
      CHECK(cong.equivalent(d->compose(down, up), d->identity(x)));
      CHECK(cong.equivalent(d->compose(up, down), d->identity(y)));
    }
  }
}

TEST_CASE("reduction deletes identities") {
  const CategoryPtr c = corpus_category("commutative_square");
  const int f = c->arrow_index("f");
  const int h = c->arrow_index("h");
  const Simplex x = make_simplex(*c, {f, c->identity(c->dst(f)), h});
  const ReductionData r = reduce(*c, x);
  CHECK(r.reduced == make_simplex(*c, {f, h}));
  CHECK(r.alpha == OrderMap::codegeneracy(2, 1));
}

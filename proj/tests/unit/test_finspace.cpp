#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "oracles.hpp"
#include "sdcat/corpus.hpp"
#include "sdcat/finspace.hpp"

using namespace sdcat;

TEST_CASE("a and s are inverse on posets and T0 spaces") {
  for (const auto& [name, p] : corpus_posets()) {
    CAPTURE(name);
    const FiniteSpace x = a(p);
    CHECK(x.is_t0());
    CHECK(s(x) == p);
    CHECK(a(s(x)) == x);
  }
}

TEST_CASE("space validation") {
  CHECK_KIND(FiniteSpace({"x", "y"}, {{1}, {1}}), ErrorKind::InvalidTopology);       // x ∉ U_x
  // z ∈ U_y and y ∈ U_x but z ∉ U_x
  CHECK_KIND(FiniteSpace({"x", "y", "z"}, {{0, 1}, {1, 2}, {2}}), ErrorKind::InvalidTopology);
  CHECK_NOTHROW(FiniteSpace({"x", "y"}, {{0, 1}, {1}}));
  const FiniteSpace indiscrete({"x", "y"}, {{0, 1}, {0, 1}});
  CHECK(!indiscrete.is_t0());
  CHECK_KIND(s(indiscrete), ErrorKind::NotT0);
}

TEST_CASE("order complexes") {
  const Poset circle = [] {
    for (const auto& p : corpus_posets())
      if (p.name == "circle4") return p.poset;
    return Poset{};
  }();
  const SimplicialComplex k = order_complex(circle);
  CHECK(k.f_vector() == std::vector<std::size_t>{4, 4});
  const HomologyResult h = complex_homology(k);
  CHECK(h.degree(1).betti == 1);
}

TEST_CASE("face posets and barycentric subdivision") {
  for (const auto& [name, k] : corpus_complexes()) {
    CAPTURE(name);
    const Poset faces = face_poset(k);
    CHECK(static_cast<int>(faces.size()) == k.face_count());
    const SimplicialComplex sub = barycentric(k);
    CHECK(same_complex_by_names(order_complex(face_space(k)), sub));
    // barycentric subdivision keeps the Euler characteristic
    CHECK(oracle::euler_characteristic(sub.f_vector()) == oracle::euler_characteristic(k.f_vector()));
  }
  // the subdivided triangle: 7 vertices, 12 edges, 6 triangles
  const auto tri = SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1, 2}});
  CHECK(barycentric(tri).f_vector() == std::vector<std::size_t>{7, 12, 6});
}

TEST_CASE("nerve of a poset against its order complex") {
  for (const auto& [name, p] : corpus_posets()) {
    CAPTURE(name);
    const NerveComparison r = nerve_vs_order_complex(p);
    CHECK(r.bijection);
    CHECK(r.faces_compatible);
    CHECK(r.homology_equal);
  }
}

TEST_CASE("McCord point map") {
  const Poset chain = Poset::from_pairs({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
  const FiniteSpace x = a(chain);
  CHECK(mccord_point(x, {{0, 2}, {mpq_class(1, 2), mpq_class(1, 2)}}) == 0);
  CHECK(mccord_point(x, {{1, 2}, {mpq_class(1, 3), mpq_class(2, 3)}}) == 1);
  CHECK(mccord_point(x, {{2}, {mpq_class(1)}}) == 2);
  CHECK_KIND(mccord_point(x, {{0, 1}, {mpq_class(0), mpq_class(1)}}), ErrorKind::ZeroWeight);
  CHECK_KIND(mccord_point(x, {{0, 1}, {mpq_class(1, 3), mpq_class(1, 3)}}), ErrorKind::InvalidPoint);
  const FiniteSpace anti = a(Poset::from_pairs({"x", "y"}, {}));
  CHECK_KIND(mccord_point(anti, {{0, 1}, {mpq_class(1, 2), mpq_class(1, 2)}}), ErrorKind::InvalidPoint);
}

#include "sdcat/corpus.hpp"

#include <map>

namespace sdcat {

namespace {

CategoryPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

FinCategory parallel_pair() {
  CategoryBuilder b;
  const int x = b.add_object("0");
  const int y = b.add_object("1");
  b.add_arrow("a", x, y);
  b.add_arrow("b", x, y);
  return b.build();
}

// Two objects, mutually inverse f and g.
FinCategory groupoid() {
  CategoryBuilder b;
  const int x = b.add_object("0");
  const int y = b.add_object("1");
  const int f = b.add_arrow("f", x, y);
  const int g = b.add_arrow("g", y, x);
  b.set_composite(g, f, b.identity(x));
  b.set_composite(f, g, b.identity(y));
  return b.build();
}

FinCategory monoid(const char* arrow, bool idempotent) {
  CategoryBuilder b;
  const int x = b.add_object("*");
  const int g = b.add_arrow(arrow, x, x);
  b.set_composite(g, g, idempotent ? g : b.identity(x));
  return b.build();
}

FinCategory chain(int n) {
  std::vector<std::string> elements;
  for (int i = 0; i < n; ++i) elements.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(elements[i], elements[i + 1]);
  return poset_to_category(Poset::from_pairs(elements, pairs));
}

// 0 -> 1 <- 2
FinCategory span() {
  CategoryBuilder b;
  const int x = b.add_object("0");
  const int y = b.add_object("1");
  const int z = b.add_object("2");
  b.add_arrow("u", x, y);
  b.add_arrow("v", z, y);
  return b.build();
}

FinCategory commutative_square() {
  CategoryBuilder b;
  const int a = b.add_object("a");
  const int bb = b.add_object("b");
  const int c = b.add_object("c");
  const int d = b.add_object("d");
  const int f = b.add_arrow("f", a, bb);
  const int g = b.add_arrow("g", a, c);
  const int h = b.add_arrow("h", bb, d);
  const int k = b.add_arrow("k", c, d);
  const int diagonal = b.add_arrow("t", a, d);
  b.set_composite(h, f, diagonal);
  b.set_composite(k, g, diagonal);
  return b.build();
}

FinCategory terminal() {
  CategoryBuilder b;
  b.add_object("*");
  return b.build();
}

FinCategory discrete2() {
  CategoryBuilder b;
  b.add_object("x");
  b.add_object("y");
  return b.build();
}

Poset named_poset(std::vector<std::string> elements, std::vector<std::pair<std::string, std::string>> pairs) {
  return Poset::from_pairs(std::move(elements), pairs);
}

FunctorData by_names(const std::string& source, const std::string& target,
                     const std::map<std::string, std::string>& objects,
                     const std::map<std::string, std::string>& arrows) {
  return functor_from_names(corpus_category(source), corpus_category(target), objects, arrows);
}

}  // namespace

const std::vector<NamedCategory>& corpus_categories() {
  static const std::vector<NamedCategory> corpus = {
      {"parallel_pair", share(parallel_pair())},
      {"groupoid", share(groupoid())},
      {"z2", share(monoid("g", false))},
      {"idempotent", share(monoid("e", true))},
      {"chain2", share(chain(2))},
      {"chain3", share(chain(3))},
      {"span", share(span())},
      {"commutative_square", share(commutative_square())},
      {"terminal", share(terminal())},
      {"discrete2", share(discrete2())},
      {"empty", share(CategoryBuilder().build())},
  };
  return corpus;
}

CategoryPtr corpus_category(const std::string& name) {
  for (const auto& entry : corpus_categories()) {
    if (entry.name == name) return entry.category;
  }
  throw Error(ErrorKind::UnknownObject, "no corpus category named " + name);
}

const std::vector<NamedPoset>& corpus_posets() {
  static const std::vector<NamedPoset> corpus = {
      {"point", named_poset({"*"}, {})},
      {"empty", named_poset({}, {})},
      {"chain2", named_poset({"0", "1"}, {{"0", "1"}})},
      {"chain3", named_poset({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}})},
      {"antichain3", named_poset({"x", "y", "z"}, {})},
      // two minimal points below two maximal ones: a finite model of the circle
      {"circle4", named_poset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}})},
      {"triangle_faces",
       named_poset({"0", "1", "2", "01", "02", "12"},
                   {{"0", "01"}, {"1", "01"}, {"0", "02"}, {"2", "02"}, {"1", "12"}, {"2", "12"}})},
      {"diamond", named_poset({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}})},
  };
  return corpus;
}

const std::vector<NamedComplex>& corpus_complexes() {
  static const std::vector<NamedComplex> corpus = {
      {"vertex", SimplicialComplex::from_facets({"v"}, {{0}})},
      {"edge", SimplicialComplex::from_facets({"a", "b"}, {{0, 1}})},
      {"two_points", SimplicialComplex::from_facets({"a", "b"}, {})},
      {"triangle_boundary", SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}})},
      {"triangle", SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1, 2}})},
      {"octahedron", SimplicialComplex::from_facets(
                         {"x+", "x-", "y+", "y-", "z+", "z-"},
                         {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}})},
  };
  return corpus;
}

const std::vector<NamedFunctor>& corpus_functors() {
  static const std::vector<NamedFunctor> corpus = [] {
    std::vector<NamedFunctor> out;
    auto add = [&](std::string name, std::string source, std::string target,
                   std::map<std::string, std::string> objects, std::map<std::string, std::string> arrows) {
      FunctorData f = by_names(source, target, objects, arrows);
      out.push_back({std::move(name), std::move(source), std::move(target), std::move(f)});
    };
    for (const char* c : {"parallel_pair", "groupoid", "z2", "chain3", "commutative_square"}) {
      out.push_back({std::string("id_") + c, c, c, identity_functor(corpus_category(c))});
    }
    add("swap", "parallel_pair", "parallel_pair", {{"0", "0"}, {"1", "1"}}, {{"a", "b"}, {"b", "a"}});
    add("collapse_ab", "parallel_pair", "parallel_pair", {{"0", "0"}, {"1", "1"}}, {{"a", "b"}, {"b", "b"}});
    add("pair_to_chain", "parallel_pair", "chain2", {{"0", "0"}, {"1", "1"}}, {{"a", "0<1"}, {"b", "0<1"}});
    add("chain_to_pair", "chain2", "parallel_pair", {{"0", "0"}, {"1", "1"}}, {{"0<1", "a"}});
    add("chain3_to_chain2", "chain3", "chain2", {{"0", "0"}, {"1", "0"}, {"2", "1"}},
        {{"0<1", "id_0"}, {"1<2", "0<1"}, {"0<2", "0<1"}});
    add("chain2_to_chain3", "chain2", "chain3", {{"0", "0"}, {"1", "2"}}, {{"0<1", "0<2"}});
    add("square_to_chain3", "commutative_square", "chain3", {{"a", "0"}, {"b", "1"}, {"c", "1"}, {"d", "2"}},
        {{"f", "0<1"}, {"g", "0<1"}, {"h", "1<2"}, {"k", "1<2"}, {"t", "0<2"}});
    add("chain2_to_square", "chain2", "commutative_square", {{"0", "a"}, {"1", "d"}}, {{"0<1", "t"}});
    add("groupoid_to_z2", "groupoid", "z2", {{"0", "*"}, {"1", "*"}}, {{"f", "g"}, {"g", "g"}});
    add("groupoid_to_terminal", "groupoid", "terminal", {{"0", "*"}, {"1", "*"}}, {{"f", "id_*"}, {"g", "id_*"}});
    add("z2_to_terminal", "z2", "terminal", {{"*", "*"}}, {{"g", "id_*"}});
    add("terminal_to_z2", "terminal", "z2", {{"*", "*"}}, {});
    add("idempotent_to_terminal", "idempotent", "terminal", {{"*", "*"}}, {{"e", "id_*"}});
    add("terminal_to_idempotent", "terminal", "idempotent", {{"*", "*"}}, {});
    add("span_to_pair", "span", "parallel_pair", {{"0", "0"}, {"1", "1"}, {"2", "0"}}, {{"u", "a"}, {"v", "b"}});
    add("discrete_to_pair", "discrete2", "parallel_pair", {{"x", "0"}, {"y", "1"}}, {});
    add("empty_to_z2", "empty", "z2", {}, {});
    return out;
  }();
  return corpus;
}

FinCategory random_category(std::mt19937& rng, int max_objects, int max_arrows) {
  using Map = std::vector<int>;
  for (;;) {
    const int n = std::uniform_int_distribution<int>(1, max_objects)(rng);
    std::vector<int> sizes(n);
    for (int& s : sizes) s = std::uniform_int_distribution<int>(1, 3)(rng);
    // arrows keyed by (src, dst, function); identities first
    std::map<std::tuple<int, int, Map>, int> index;
    std::vector<std::tuple<int, int, Map>> arrows;
    auto insert = [&](int s, int t, Map m) {
      auto key = std::make_tuple(s, t, m);
      if (index.count(key)) return false;
      index.emplace(key, static_cast<int>(arrows.size()));
      arrows.push_back(std::move(key));
      return true;
    };
    for (int x = 0; x < n; ++x) {
      Map id(sizes[x]);
      for (int i = 0; i < sizes[x]; ++i) id[i] = i;
      insert(x, x, id);
    }
    const int generators = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int k = 0; k < generators; ++k) {
      const int s = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const int t = std::uniform_int_distribution<int>(0, n - 1)(rng);
      Map m(sizes[s]);
      for (int& v : m) v = std::uniform_int_distribution<int>(0, sizes[t] - 1)(rng);
      insert(s, t, m);
    }
    bool too_big = false;
    for (bool grew = true; grew && !too_big;) {
      grew = false;
      const std::size_t count = arrows.size();
      for (std::size_t f = 0; f < count && !too_big; ++f) {
        for (std::size_t g = 0; g < count && !too_big; ++g) {
          // copies: insert may reallocate
          const auto [fs, ft, fm] = arrows[f];
          const auto [gs, gt, gm] = arrows[g];
          if (ft != gs) continue;
          Map h(fm.size());
          for (std::size_t i = 0; i < fm.size(); ++i) h[i] = gm[fm[i]];
          if (insert(fs, gt, std::move(h))) grew = true;
          too_big = static_cast<int>(arrows.size()) - n > max_arrows;
        }
      }
    }
    if (too_big) continue;

    CategoryBuilder b;
    for (int x = 0; x < n; ++x) b.add_object("o" + std::to_string(x));
    std::vector<int> id_of(arrows.size());
    int named = 0;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      const auto& [s, t, m] = arrows[a];
      id_of[a] = static_cast<int>(a) < n ? b.identity(s) : b.add_arrow("m" + std::to_string(named++), s, t);
    }
    for (std::size_t f = 0; f < arrows.size(); ++f) {
      for (std::size_t g = 0; g < arrows.size(); ++g) {
        const auto& [fs, ft, fm] = arrows[f];
        const auto& [gs, gt, gm] = arrows[g];
        if (ft != gs) continue;
        Map h(fm.size());
        for (std::size_t i = 0; i < fm.size(); ++i) h[i] = gm[fm[i]];
        b.set_composite(id_of[g], id_of[f], id_of[index.at(std::make_tuple(fs, gt, h))]);
      }
    }
    return b.build();
  }
}

}  // namespace sdcat

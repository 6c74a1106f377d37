#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "sdcat/corpus.hpp"
#include "sdcat/finspace.hpp"
#include "sdcat/io.hpp"
#include "sdcat/subdivision.hpp"

using namespace sdcat;

TEST_CASE("categories round-trip through JSON") {
  for (const auto& [name, c] : corpus_categories()) {
    CAPTURE(name);
    const Json j = category_to_json(*c);
    CHECK(category_from_json(j) == *c);
    CHECK(category_from_json(parse_json(j.dump())) == *c);
  }
  const SdCategory sd = sd_category(corpus_category("z2"), SdOptions{2, 2, {}});
  CHECK(category_from_json(category_to_json(sd.category())) == sd.category());
}

TEST_CASE("posets, complexes and spaces round-trip") {
  for (const auto& [name, p] : corpus_posets()) CHECK(poset_from_json(poset_to_json(p)) == p);
  for (const auto& [name, k] : corpus_complexes()) {
    CHECK(same_complex_by_names(complex_from_json(complex_to_json(k)), k));
    CHECK(space_from_json(space_to_json(face_space(k))) == face_space(k));
  }
}

TEST_CASE("malformed inputs") {
  CHECK_KIND(parse_json("{\"objects\": ["), ErrorKind::ParseError);
  CHECK_KIND(category_from_json(parse_json(R"({"arrows": []})")), ErrorKind::ParseError);
  CHECK_KIND(category_from_json(parse_json(R"({"objects": ["x", "x"]})")), ErrorKind::DuplicateId);
  CHECK_KIND(category_from_json(parse_json(R"({"objects": ["x"], "arrows": [{"name": "f", "src": "x", "dst": "y"}]})")),
             ErrorKind::DanglingReference);
  CHECK_KIND(category_from_json(parse_json(
                 R"({"objects": ["x"], "arrows": [{"name": "e", "src": "x", "dst": "x"}]})")),
             ErrorKind::MissingComposite);
  CHECK_KIND(complex_from_json(parse_json(R"({"vertices": ["a"], "faces": [["a"], ["b"]]})")),
             ErrorKind::DanglingReference);
  CHECK_KIND(space_from_json(parse_json(R"({"points": ["x"], "open": {"y": []}})")), ErrorKind::DanglingReference);
  CHECK_KIND(read_json_file("/nonexistent/file.json"), ErrorKind::ParseError);
}

TEST_CASE("functors by name") {
  const CategoryPtr pair = corpus_category("parallel_pair");
  const FunctorData swap = functor_from_json(parse_json(R"({"objects": {"0": "0", "1": "1"}, "arrows": {"a": "b", "b": "a"}})"),
                                             pair, pair);
  CHECK(same_functor(functor_from_json(functor_to_json(swap), pair, pair), swap));
}

TEST_CASE("DOT output") {
  const std::string dot = category_to_dot(*corpus_category("parallel_pair"), "C");
  CHECK(dot.find("\"0\" -> \"1\" [label=\"a\"]") != std::string::npos);
  CHECK(dot.find("id_0") == std::string::npos);
  const std::string hasse = poset_to_dot(Poset::from_pairs({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}}), "P");
  CHECK(hasse.find("\"0\" -> \"2\"") == std::string::npos);
  CHECK(complex_to_dot(corpus_complexes().front().complex, "K").rfind("graph", 0) == 0);
}

#pragma once

// JSON and DOT for categories, posets, complexes, spaces and functors.
//
// Category files look like
//   {"objects": ["0", "1"],
//    "arrows": [{"name": "a", "src": "0", "dst": "1"}],
//    "compose": [{"g": "b", "f": "a", "gf": "c"}]}
// with identities implicit and referable as `id_<object>`.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sdcat/complex.hpp"
#include "sdcat/finspace.hpp"
#include "sdcat/fincat.hpp"

namespace sdcat {

using Json = nlohmann::json;

/// Parses a file; ParseError on unreadable or malformed input.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

FinCategory category_from_json(const Json& j);
/// Lists every composite of two non-identity arrows, so the output reads back.
Json category_to_json(const FinCategory& c);

/// {"elements": [...], "leq": [["x", "y"], ...]}; the pairs are closed
/// reflexively and transitively.
Poset poset_from_json(const Json& j);
/// Writes the covering pairs.
Json poset_to_json(const Poset& p);

/// {"vertices": [...], "faces": [[...], ...]} with faces downward closed, or
/// "facets" instead of "faces" for the closure of the given simplices.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& k);

/// {"points": [...], "open": {"x": ["x", ...], ...}}
FiniteSpace space_from_json(const Json& j);
Json space_to_json(const FiniteSpace& x);

/// {"objects": {"x": "y"}, "arrows": {"f": "g"}}; identities may be omitted.
FunctorData functor_from_json(const Json& j, CategoryPtr source, CategoryPtr target);
Json functor_to_json(const FunctorData& f);

/// Objects as nodes, non-identity arrows as labelled edges, input order.
std::string category_to_dot(const FinCategory& c, const std::string& name = "C");
/// Hasse diagram.
std::string poset_to_dot(const Poset& p, const std::string& name = "P");
/// 1-skeleton.
std::string complex_to_dot(const SimplicialComplex& k, const std::string& name = "K");

}  // namespace sdcat

#pragma once

// Finite abstract simplicial complexes.

#include <optional>
#include <string>
#include <vector>

#include "sdcat/error.hpp"

namespace sdcat {

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Faces are vertex index lists. Each face is sorted; the set must be
  /// downward closed and contain every singleton (InvalidComplex).
  SimplicialComplex(std::vector<std::string> vertices, std::vector<std::vector<int>> faces);
  /// Downward closure of the given faces, vertices named by the caller.
  static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                       const std::vector<std::vector<int>>& facets);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::string& vertex(int v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  std::optional<int> find_vertex(const std::string& name) const;

  /// Faces ordered by dimension, then lexicographically.
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  std::optional<int> find_face(const std::vector<int>& face) const;
  int dimension() const;  // -1 for the empty complex
  /// Number of faces of each dimension.
  std::vector<std::size_t> f_vector() const;
  /// `{a,b,c}` from vertex names.
  std::string face_name(const std::vector<int>& face) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> faces_;
};

/// Equal as complexes after identifying vertices by name.
bool same_complex_by_names(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace sdcat

#include "sdcat/complex.hpp"

#include <algorithm>
#include <set>

namespace sdcat {

namespace {

bool face_order(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     std::vector<std::vector<int>> faces)
    : vertices_(std::move(vertices)) {
  const int n = static_cast<int>(vertices_.size());
  if (std::set<std::string>(vertices_.begin(), vertices_.end()).size() != vertices_.size()) {
    throw Error(ErrorKind::DuplicateId, "repeated vertex name");
  }
  std::set<std::vector<int>> seen;
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    if (f.empty()) throw Error(ErrorKind::InvalidComplex, "empty face");
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw Error(ErrorKind::InvalidComplex, "face with a repeated vertex");
    }
    if (f.front() < 0 || f.back() >= n) throw Error(ErrorKind::DanglingReference, "face vertex out of range");
    if (!seen.insert(f).second) throw Error(ErrorKind::DuplicateId, "repeated face");
  }
  for (int v = 0; v < n; ++v) {
    if (!seen.count({v})) throw Error(ErrorKind::InvalidComplex, "vertex " + vertices_[v] + " is not a face");
  }
  for (const auto& f : seen) {
    for (std::size_t i = 0; f.size() > 1 && i < f.size(); ++i) {
      std::vector<int> g = f;
      g.erase(g.begin() + static_cast<long>(i));
      if (!seen.count(g)) {
        throw Error(ErrorKind::InvalidComplex, "face " + face_name(f) + " lacks its face " + face_name(g));
      }
    }
  }
  faces_.assign(seen.begin(), seen.end());
  std::sort(faces_.begin(), faces_.end(), face_order);
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices,
                                                 const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> closed;
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v) closed.insert({v});
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) continue;
    if (f.size() > 30) throw Error(ErrorKind::CapExceeded, "facet too large");
    const std::uint32_t count = 1u << f.size();
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      std::vector<int> g;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (mask >> i & 1u) g.push_back(f[i]);
      }
      closed.insert(std::move(g));
    }
  }
  return SimplicialComplex(std::move(vertices), {closed.begin(), closed.end()});
}

std::optional<int> SimplicialComplex::find_vertex(const std::string& name) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::optional<int> SimplicialComplex::find_face(const std::vector<int>& face) const {
  const auto it = std::lower_bound(faces_.begin(), faces_.end(), face, face_order);
  if (it == faces_.end() || *it != face) return std::nullopt;
  return static_cast<int>(it - faces_.begin());
}

int SimplicialComplex::dimension() const {
  return faces_.empty() ? -1 : static_cast<int>(faces_.back().size()) - 1;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out(dimension() + 1, 0);
  for (const auto& f : faces_) ++out[f.size() - 1];
  return out;
}

std::string SimplicialComplex::face_name(const std::vector<int>& face) const {
  std::string out = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ",";
    out += vertices_.at(face[i]);
  }
  return out + "}";
}

bool same_complex_by_names(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto named = [](const SimplicialComplex& k) {
    std::set<std::set<std::string>> out;
    for (const auto& f : k.faces()) {
      std::set<std::string> names;
      for (int v : f) names.insert(k.vertex(v));
      out.insert(std::move(names));
    }
    return out;
  };
  return std::set<std::string>(a.vertices().begin(), a.vertices().end()) ==
             std::set<std::string>(b.vertices().begin(), b.vertices().end()) &&
         named(a) == named(b);
}

}  // namespace sdcat

#include "sdcat/finspace.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sdcat/nerve.hpp"

namespace sdcat {

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<std::vector<int>> minimal_open)
    : points_(std::move(points)), open_(std::move(minimal_open)) {
  const int n = size();
  if (static_cast<int>(open_.size()) != n) {
    throw Error(ErrorKind::InvalidTopology, "one minimal open set per point is required");
  }
  if (std::set<std::string>(points_.begin(), points_.end()).size() != points_.size()) {
    throw Error(ErrorKind::DuplicateId, "repeated point name");
  }
  for (auto& u : open_) {
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    for (int y : u) {
      if (y < 0 || y >= n) throw Error(ErrorKind::DanglingReference, "open set names an unknown point");
    }
  }
  for (int x = 0; x < n; ++x) {
    if (!in_minimal_open(x, x)) throw Error(ErrorKind::InvalidTopology, points_[x] + " is not in U_" + points_[x]);
    for (int y : open_[x]) {
      if (!std::includes(open_[x].begin(), open_[x].end(), open_[y].begin(), open_[y].end())) {
        throw Error(ErrorKind::InvalidTopology,
                    points_[y] + " lies in U_" + points_[x] + " but U_" + points_[y] + " does not");
      }
    }
  }
}

std::optional<int> FiniteSpace::find(const std::string& name) const {
  const auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) return std::nullopt;
  return static_cast<int>(it - points_.begin());
}

bool FiniteSpace::in_minimal_open(int y, int x) const {
  return std::binary_search(open_[x].begin(), open_[x].end(), y);
}

bool FiniteSpace::is_t0() const {
  return std::set<std::vector<int>>(open_.begin(), open_.end()).size() == open_.size();
}

FiniteSpace a(const Poset& p) {
  std::vector<std::vector<int>> open(p.size());
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (p.leq(y, x)) open[x].push_back(y);
    }
  }
  return FiniteSpace(p.elements(), std::move(open));
}

Poset s(const FiniteSpace& x) {
  if (!x.is_t0()) throw Error(ErrorKind::NotT0, "two points have the same minimal open set");
  const int n = x.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) leq[i][j] = x.in_minimal_open(i, j);
  }
  return Poset(x.points(), std::move(leq));
}

SimplicialComplex order_complex(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> faces;
  // extend chains by elements later in the index order that are comparable
  // with every member; each chain is produced once, sorted by index
  std::vector<int> chain;
  auto grow = [&](auto&& self, int from) -> void {
    for (int v = from; v < n; ++v) {
      const bool comparable = std::all_of(chain.begin(), chain.end(),
                                          [&](int w) { return p.leq(v, w) || p.leq(w, v); });
      if (!comparable) continue;
      chain.push_back(v);
      faces.push_back(chain);
      self(self, v + 1);
      chain.pop_back();
    }
  };
  grow(grow, 0);
  return SimplicialComplex(p.elements(), std::move(faces));
}

SimplicialComplex order_complex(const FiniteSpace& x) { return order_complex(s(x)); }

Poset face_poset(const SimplicialComplex& k) {
  const auto& faces = k.faces();
  const int n = k.face_count();
  std::vector<std::string> names;
  for (const auto& f : faces) names.push_back(k.face_name(f));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      leq[i][j] = std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end());
    }
  }
  return Poset(std::move(names), std::move(leq));
}

FiniteSpace face_space(const SimplicialComplex& k) { return a(face_poset(k)); }

SimplicialComplex barycentric(const SimplicialComplex& k) {
  const auto& faces = k.faces();
  const int n = k.face_count();
  std::vector<std::string> names;
  for (const auto& f : faces) names.push_back(k.face_name(f));
  auto proper_subset = [&](int i, int j) {
    return faces[i].size() < faces[j].size() &&
           std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end());
  };
  // faces are sorted by dimension, so a flag lists its members in index order
  std::vector<std::vector<int>> flags;
  std::vector<int> flag;
  auto grow = [&](auto&& self) -> void {
    const int from = flag.empty() ? 0 : flag.back() + 1;
    for (int j = from; j < n; ++j) {
      if (!flag.empty() && !proper_subset(flag.back(), j)) continue;
      flag.push_back(j);
      flags.push_back(flag);
      self(self);
      flag.pop_back();
    }
  };
  grow(grow);
  return SimplicialComplex(std::move(names), std::move(flags));
}

int mccord_point(const FiniteSpace& x, const BarycentricPoint& u) {
  if (u.carrier.empty()) throw Error(ErrorKind::InvalidPoint, "empty carrier");
  if (u.carrier.size() != u.weights.size()) throw Error(ErrorKind::InvalidPoint, "one weight per carrier point");
  mpq_class total = 0;
  for (const auto& w : u.weights) {
    if (w <= 0) throw Error(ErrorKind::ZeroWeight, "carrier weights must be positive");
    total += w;
  }
  if (total != 1) throw Error(ErrorKind::InvalidPoint, "weights sum to " + total.get_str());
  for (int p : u.carrier) {
    if (p < 0 || p >= x.size()) throw Error(ErrorKind::InvalidPoint, "carrier point out of range");
  }
  if (std::set<int>(u.carrier.begin(), u.carrier.end()).size() != u.carrier.size()) {
    throw Error(ErrorKind::InvalidPoint, "repeated carrier point");
  }
  int least = u.carrier[0];
  for (int p : u.carrier) {
    for (int q : u.carrier) {
      if (!x.in_minimal_open(p, q) && !x.in_minimal_open(q, p)) {
        throw Error(ErrorKind::InvalidPoint, "carrier is not a chain");
      }
    }
    if (x.in_minimal_open(p, least)) least = p;
  }
  return least;
}

NerveComparison nerve_vs_order_complex(const Poset& p) {
  NerveComparison out;
  const FinCategory j = poset_to_category(p);
  const SimplicialComplex k = order_complex(a(p));
  const int top = top_nondegenerate_dim(j).value_or(0);
  const NerveEnumeration nerve = enumerate_simplices(j, top, 1'000'000);

  // a nondegenerate simplex x0 < ... < xq goes to the face {x0, ..., xq}
  std::set<std::vector<int>> images;
  bool injective = true;
  bool compatible = true;
  for (int d = 0; d <= top; ++d) {
    for (const Simplex& x : nerve.simplices[d]) {
      if (!is_nondegenerate(j, x)) continue;
      std::vector<int> f = x.vertices;
      std::sort(f.begin(), f.end());
      injective = injective && images.insert(f).second;
      if (!k.find_face(f)) compatible = false;
      for (int i = 0; d > 0 && i <= d; ++i) {
        std::vector<int> g = face(j, x, i).vertices;
        std::vector<int> h = x.vertices;
        h.erase(h.begin() + i);
        std::sort(g.begin(), g.end());
        std::sort(h.begin(), h.end());
        compatible = compatible && g == h;
      }
    }
  }
  out.bijection = injective && static_cast<int>(images.size()) == k.face_count() &&
                  std::all_of(k.faces().begin(), k.faces().end(),
                              [&](const std::vector<int>& f) { return images.count(f) > 0; });
  out.faces_compatible = compatible;
  out.nerve = nerve_homology(j, top);
  out.complex = complex_homology(k);
  out.homology_equal = homology_equal_in_range(out.nerve, out.complex).equal;
  return out;
}

}  // namespace sdcat

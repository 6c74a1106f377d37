#pragma once

// Finite spaces and posets: a, s, the order complex k, the face poset S,
// x = a S, barycentric subdivision and the McCord point map.
//
// Convention: the minimal open set of x is U_x = {y : y ≤ x}, so down-sets
// are open.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "sdcat/complex.hpp"
#include "sdcat/fincat.hpp"
#include "sdcat/homology.hpp"

namespace sdcat {

/// A finite (hence Alexandroff) space given by its minimal open sets.
class FiniteSpace {
 public:
  FiniteSpace() = default;
  /// minimal_open[x] lists the points of U_x. Requires x ∈ U_x and
  /// y ∈ U_x ⇒ U_y ⊆ U_x (InvalidTopology). T₀ is not required here.
  FiniteSpace(std::vector<std::string> points, std::vector<std::vector<int>> minimal_open);

  int size() const { return static_cast<int>(points_.size()); }
  const std::string& point(int x) const { return points_.at(x); }
  const std::vector<std::string>& points() const { return points_; }
  std::optional<int> find(const std::string& name) const;
  /// Sorted point indices of U_x.
  const std::vector<int>& minimal_open(int x) const { return open_.at(x); }
  bool in_minimal_open(int y, int x) const;
  bool is_t0() const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<std::string> points_;
  std::vector<std::vector<int>> open_;
};

/// a(P): U_x = {y : y ≤ x}.
FiniteSpace a(const Poset& p);
/// s(X): x ≤ y iff x ∈ U_y. NotT0 when two points share a minimal open set.
Poset s(const FiniteSpace& x);

/// k(X): the nonempty chains of s(X).
SimplicialComplex order_complex(const FiniteSpace& x);
SimplicialComplex order_complex(const Poset& p);
/// S(K): faces ordered by inclusion, named `{v,...}`.
Poset face_poset(const SimplicialComplex& k);
/// x(K) = a(S(K)).
FiniteSpace face_space(const SimplicialComplex& k);
/// Chains of faces under inclusion, computed by subset tests alone.
SimplicialComplex barycentric(const SimplicialComplex& k);

/// A point of |k(X)|: a chain of points with positive rational weights.
struct BarycentricPoint {
  std::vector<int> carrier;
  std::vector<mpq_class> weights;
};

/// f_X(u) = min(carrier(u)). ZeroWeight for a non-positive weight;
/// InvalidPoint when the carrier is not a chain or the weights do not sum to 1.
int mccord_point(const FiniteSpace& x, const BarycentricPoint& u);

struct NerveComparison {
  bool bijection = false;       // nondegenerate simplices of N j(P) vs faces of k a(P)
  bool faces_compatible = false;
  HomologyResult nerve;
  HomologyResult complex;
  bool homology_equal = false;
};

NerveComparison nerve_vs_order_complex(const Poset& p);

}  // namespace sdcat

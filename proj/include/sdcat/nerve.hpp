#pragma once

// Simplices of the nerve NC and the truncated simplex category Δ/C.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sdcat/fincat.hpp"

namespace sdcat {

/// An order preserving map [source_dim] → [target_dim].
struct OrderMap {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<int> values;

  /// Validates monotonicity and range (IndexOutOfRange).
  static OrderMap make(int source_dim, int target_dim, std::vector<int> values);
  static OrderMap identity(int q);
  /// d_i : [q-1] → [q], the injection missing i.
  static OrderMap coface(int q, int i);
  /// s_i : [q+1] → [q], the surjection hitting i twice.
  static OrderMap codegeneracy(int q, int i);

  bool injective() const;
  bool surjective() const;
  int operator()(int i) const { return values[i]; }

  friend bool operator==(const OrderMap&, const OrderMap&) = default;
  friend auto operator<=>(const OrderMap&, const OrderMap&) = default;
};

/// outer ∘ inner.
OrderMap compose(const OrderMap& outer, const OrderMap& inner);
/// All order maps [q] → [p] in lexicographic order of their values.
std::vector<OrderMap> all_order_maps(int q, int p);
std::string to_string(const OrderMap& map);

/// A chain X0 → X1 → ... → Xq of composable arrows of a fixed category.
struct Simplex {
  std::vector<int> vertices;  // q + 1 objects
  std::vector<int> arrows;    // q arrows

  int dim() const { return static_cast<int>(arrows.size()); }
  int last() const { return vertices.back(); }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

Simplex vertex_simplex(int object);
/// Chain from a list of arrows; throws IllTypedComposite if not composable.
Simplex make_simplex(const FinCategory& c, const std::vector<int>& arrows);
bool is_nondegenerate(const FinCategory& c, const Simplex& x);
/// Vertex object name for dim 0, `(f;g;...)` otherwise.
std::string simplex_name(const FinCategory& c, const Simplex& x);

/// The arrow X(from → to), identity when from == to.
int composite_between(const FinCategory& c, const Simplex& x, int from, int to);
/// Y ∘ ξ as a simplex.
Simplex apply(const FinCategory& c, const Simplex& y, const OrderMap& xi);
Simplex face(const FinCategory& c, const Simplex& x, int i);
Simplex degenerate(const FinCategory& c, const Simplex& x, int i);

/// Length of the longest chain of non-identity arrows; nullopt when the
/// non-identity arrows contain a cycle (the nerve is then infinite-dimensional).
std::optional<int> top_nondegenerate_dim(const FinCategory& c);

struct NerveEnumeration {
  int cap = 0;
  std::vector<std::vector<Simplex>> simplices;  // by dimension, deterministic order
  std::vector<std::size_t> nondegenerate_counts;
  std::optional<int> top_nondegenerate_dim;
};

/// All simplices of dimension ≤ cap. Without a cap the nerve must be finite
/// (CapExceeded otherwise) and is enumerated up to its top dimension.
NerveEnumeration enumerate_simplices(const FinCategory& c, std::optional<int> cap,
                                     std::size_t budget = 20000);

struct DeltaArrow {
  Simplex source;
  Simplex target;
  OrderMap map;
};

/// Brute force over all order maps [q_X] → [q_Y].
std::vector<DeltaArrow> hom_delta(const FinCategory& c, const Simplex& x, const Simplex& y);

struct Budget {
  std::size_t max_objects = 20000;
  std::size_t max_arrows = 6'000'000;
};

/// Every order map into [p] for p ≤ cap, grouped by target then source
/// dimension, lexicographic inside a group.
class OrderMapTable {
 public:
  explicit OrderMapTable(int cap);

  int cap() const { return cap_; }
  int size() const { return static_cast<int>(maps_.size()); }
  const OrderMap& map(int id) const { return maps_[id]; }
  /// First id of maps into [p]; ids base(p) .. base(p+1)-1.
  int base(int p) const { return base_[p]; }
  int count_into(int p) const { return base_[p + 1] - base_[p]; }
  int id_of(const OrderMap& m) const;
  int compose(int outer, int inner) const;
  int identity(int q) const { return identity_[q]; }

 private:
  static std::uint64_t key(const OrderMap& m);

  int cap_;
  std::vector<OrderMap> maps_;
  std::vector<int> base_;
  std::vector<int> identity_;
  std::unordered_map<std::uint64_t, int> index_;
};

/// Δ/C truncated at dimension `cap`: every simplex of dimension ≤ cap and
/// every order map between them. Arrows are numbered target-major: the arrows
/// into Y are offset(Y) + (local id of ξ among maps into [q_Y]).
class DeltaCategory {
 public:
  DeltaCategory(CategoryPtr base, int cap, Budget budget = {});

  const FinCategory& base() const { return *base_; }
  CategoryPtr base_ptr() const { return base_; }
  int cap() const { return cap_; }
  const OrderMapTable& maps() const { return maps_; }

  int object_count() const { return static_cast<int>(objects_.size()); }
  const Simplex& simplex(int x) const { return objects_[x]; }
  int dim(int x) const { return objects_[x].dim(); }
  std::optional<int> find(const Simplex& s) const;
  bool nondegenerate(int x) const { return nondegenerate_[x]; }

  int arrow_count() const { return static_cast<int>(source_.size()); }
  int source(int a) const { return source_[a]; }
  int target(int a) const { return target_[a]; }
  /// Global id of the order map underlying arrow a.
  int map_id(int a) const { return maps_.base(dim(target_[a])) + (a - offset_[target_[a]]); }
  const OrderMap& order_map(int a) const { return maps_.map(map_id(a)); }
  int arrow(int target, int map_id) const {
    return offset_[target] + (map_id - maps_.base(dim(target)));
  }
  int identity(int x) const { return arrow(x, maps_.identity(dim(x))); }
  int compose(int g, int f) const { return arrow(target_[g], maps_.compose(map_id(g), map_id(f))); }

  /// Arrows into x form the contiguous id range [in_begin(x), in_end(x)).
  int in_begin(int x) const { return offset_[x]; }
  int in_end(int x) const { return offset_[x] + maps_.count_into(dim(x)); }
  const std::vector<int>& out_arrows(int x) const { return out_[x]; }
  std::vector<int> hom(int x, int y) const;
  DeltaArrow delta_arrow(int a) const;

 private:
  CategoryPtr base_;
  int cap_;
  OrderMapTable maps_;
  std::vector<Simplex> objects_;
  std::vector<bool> nondegenerate_;
  std::unordered_map<Simplex, int, SimplexHash> index_;
  std::vector<int> offset_;
  std::vector<int> source_;
  std::vector<int> target_;
  std::vector<std::vector<int>> out_;
};

}  // namespace sdcat

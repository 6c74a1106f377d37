#pragma once

// Finite categories, functors, natural transformations, fibers and the
// reflection onto posets.
//
// Every FinCategory is immutable once built. Objects and arrows are indexed
// by dense integers in a deterministic order (insertion order); names are the
// external identifiers used in files.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sdcat/error.hpp"

namespace sdcat {

struct Arrow {
  std::string name;
  int src = 0;
  int dst = 0;
};

/// Name used for the identity of an object, e.g. `id_0`.
std::string identity_name(std::string_view object);

class FinCategory {
 public:
  FinCategory() = default;

  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  const std::string& object_name(int x) const { return objects_.at(x); }
  const Arrow& arrow(int f) const { return arrows_.at(f); }
  const std::string& arrow_name(int f) const { return arrows_.at(f).name; }
  int src(int f) const { return arrows_[f].src; }
  int dst(int f) const { return arrows_[f].dst; }

  int identity(int x) const { return identities_.at(x); }
  bool is_identity(int f) const { return identities_[arrows_[f].src] == f; }

  /// g ∘ f. Requires dst(f) == src(g).
  int compose(int g, int f) const;

  std::optional<int> find_object(std::string_view name) const;
  std::optional<int> find_arrow(std::string_view name) const;
  /// Throws UnknownObject / UnknownArrow.
  int object_index(std::string_view name) const;
  int arrow_index(std::string_view name) const;

  std::span<const int> out_arrows(int x) const { return out_[x]; }
  std::span<const int> in_arrows(int x) const { return in_[x]; }
  std::vector<int> hom(int x, int y) const;

  int non_identity_arrow_count() const { return arrow_count() - object_count(); }

  /// Structural equality: same names in the same order, same composition.
  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  friend class CategoryBuilder;

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> identities_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> out_pos_;               // position of arrow g inside out_[src g]
  std::vector<std::vector<int>> after_;    // after_[f][out_pos_[g]] = g ∘ f
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> arrow_index_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

/// Accumulates objects, arrows and composites; `build` validates all the
/// category axioms exhaustively.
class CategoryBuilder {
 public:
  /// Adds the object and its identity arrow `id_<name>`.
  int add_object(std::string name);
  int add_arrow(std::string name, int src, int dst);
  /// Records g ∘ f = gf. Conflicting records throw ConflictingComposite.
  void set_composite(int g, int f, int gf);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  int identity(int x) const { return identities_.at(x); }
  std::optional<int> find_object(std::string_view name) const;
  std::optional<int> find_arrow(std::string_view name) const;
  const Arrow& arrow(int f) const { return arrows_.at(f); }

  /// Checks closure, identity laws and associativity.
  FinCategory build() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> identities_;
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> arrow_index_;
  std::unordered_map<std::uint64_t, int> composites_;
};

// ---------------------------------------------------------------------------
// Posets

class Poset {
 public:
  Poset() = default;
  /// `leq[i][j]` is i ≤ j. Reflexivity, transitivity and antisymmetry are
  /// checked exhaustively (NotAPartialOrder).
  Poset(std::vector<std::string> elements, std::vector<std::vector<bool>> leq);

  /// Reflexive-transitive closure of the given pairs, then validated.
  static Poset from_pairs(std::vector<std::string> elements,
                          const std::vector<std::pair<std::string, std::string>>& pairs);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::string& element(int i) const { return elements_.at(i); }
  const std::vector<std::string>& elements() const { return elements_; }
  bool leq(int i, int j) const { return leq_[i][j]; }
  bool less(int i, int j) const { return i != j && leq_[i][j]; }
  std::optional<int> find(std::string_view name) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.elements_ == b.elements_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> leq_;
};

/// The functor j: one arrow x → y (named `x<y`) for each strict pair.
FinCategory poset_to_category(const Poset& poset);

struct PosetReflection {
  Poset poset;
  std::vector<int> class_of;  // object of C -> element of the poset
};

/// The functor p: collapse the existence preorder of C to its poset of
/// strongly connected components. Singleton classes keep the object name;
/// larger classes are named `{x,y,...}`. Classes are ordered by their first
/// member.
PosetReflection preorder_collapse(const FinCategory& category);

// ---------------------------------------------------------------------------
// Functors and natural transformations

struct FunctorData {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<int> object_map;
  std::vector<int> arrow_map;
};

/// Checks that the data preserves endpoints, identities and composition
/// (exhaustively). Throws NotAFunctor naming the first violation.
void check_functor(const FunctorData& functor);
FunctorData make_functor(CategoryPtr source, CategoryPtr target, std::vector<int> object_map,
                         std::vector<int> arrow_map);
/// Maps given by names; identities may be omitted.
FunctorData functor_from_names(CategoryPtr source, CategoryPtr target,
                               const std::map<std::string, std::string>& objects,
                               const std::map<std::string, std::string>& arrows);
FunctorData identity_functor(CategoryPtr category);
/// The unique functor to a one-arrow category with object `*`.
FunctorData terminal_functor(CategoryPtr category);
/// g ∘ f; requires f.target to be g.source (same pointer or equal categories).
FunctorData compose(const FunctorData& g, const FunctorData& f);
/// Equal object and arrow maps between equal categories.
bool same_functor(const FunctorData& a, const FunctorData& b);

/// All functors source → target, stopping after `limit` results.
std::vector<FunctorData> enumerate_functors(CategoryPtr source, CategoryPtr target,
                                            std::size_t limit = 10000);
/// Backtracking search for an isomorphism of categories.
std::optional<FunctorData> find_isomorphism(CategoryPtr source, CategoryPtr target);

struct NatTransData {
  FunctorData from;
  FunctorData to;
  std::vector<int> components;  // object of the source -> arrow of the target
};

/// Throws NotNatural when a component has the wrong type or a naturality
/// square fails to commute.
NatTransData make_nat_trans(FunctorData from, FunctorData to, std::vector<int> components);

// ---------------------------------------------------------------------------
// Fibers

struct FiberData {
  CategoryPtr category;
  std::vector<int> base_object;      // object -> X in the source of f
  std::vector<int> base_arrow;       // arrow  -> v in the source of f
  std::vector<int> structure_arrow;  // object -> u in the target (-1 for f⁻¹T)
};

/// f/T: pairs (X, u : fX → T); arrows v with u'∘f(v) = u.
FiberData left_fiber(const FunctorData& f, int target_object);
/// T/f: pairs (X, u : T → fX); arrows v with f(v)∘u = u'.
FiberData right_fiber(const FunctorData& f, int target_object);
/// f⁻¹T: objects over T and arrows over id_T.
FiberData fiber(const FunctorData& f, int target_object);
/// The inclusion f⁻¹T → f/T, X ↦ (X, id_T).
FunctorData fiber_inclusion(const FiberData& fiber, const FiberData& left_fiber,
                            const FunctorData& f, int target_object);

/// True iff every v out of src(u) with f(v) = f(u) factors uniquely as ṽ∘u
/// with f(ṽ) an identity.
bool is_cocartesian(const FunctorData& f, int arrow);

}  // namespace sdcat

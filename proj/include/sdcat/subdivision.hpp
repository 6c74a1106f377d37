#pragma once

// The congruence on Δ/C, the subdivision Sd(C), the reduction r and the
// comparison functor ε_C : Sd(C) → C.
//
// Δ/C is infinite, so everything here is computed on a truncation: the
// congruence is generated inside Δ/C restricted to simplices of dimension
// ≤ cap + slack, and Sd(C) is read off on the nondegenerate simplices of
// dimension ≤ cap. Identifications found this way are always valid; the
// stabilization check and the Kan-subdivision oracle guard against missing
// ones.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sdcat/fincat.hpp"
#include "sdcat/nerve.hpp"

namespace sdcat {

/// The smallest equivalence on the arrows of a truncated Δ/C that is
/// compatible with composition and identifies every elementary pair
/// d_i, d_{i+1} : X → X s_i.
class Congruence {
 public:
  Congruence(std::shared_ptr<const DeltaCategory> delta, std::vector<int> representative);

  const DeltaCategory& delta() const { return *delta_; }
  std::shared_ptr<const DeltaCategory> delta_ptr() const { return delta_; }
  /// Smallest arrow id in the class; lexicographically least order map
  /// inside a hom-set.
  int representative(int arrow) const { return representative_[arrow]; }
  bool equivalent(int a, int b) const { return representative_[a] == representative_[b]; }
  std::size_t class_count() const;

 private:
  std::shared_ptr<const DeltaCategory> delta_;
  std::vector<int> representative_;
};

/// Worklist closure: seed the elementary pairs, then push every pre- and
/// post-composite of each newly merged pair until nothing changes.
Congruence congruence_closure(std::shared_ptr<const DeltaCategory> delta);

/// X = r(X) ∘ α_X with r(X) nondegenerate and α_X surjective.
struct ReductionData {
  Simplex reduced;
  OrderMap alpha;
};

ReductionData reduce(const FinCategory& c, const Simplex& x);
/// The section of a surjection picking the least preimage of each value.
OrderMap least_section(const OrderMap& surjection);

struct SdOptions {
  int cap = 2;
  int slack = 2;
  Budget budget;
};

/// Sd(C) restricted to nondegenerate simplices of dimension ≤ cap.
class SdCategory {
 public:
  const FinCategory& category() const { return *category_; }
  CategoryPtr category_ptr() const { return category_; }
  const FinCategory& base() const { return congruence_->delta().base(); }
  CategoryPtr base_ptr() const { return congruence_->delta().base_ptr(); }
  const Congruence& congruence() const { return *congruence_; }
  const DeltaCategory& delta() const { return congruence_->delta(); }
  int cap() const { return cap_; }
  int slack() const { return slack_; }

  const Simplex& simplex(int object) const { return simplices_[object]; }
  int dim(int object) const { return simplices_[object].dim(); }
  std::optional<int> object_of(const Simplex& s) const;
  /// Δ/C id of the nondegenerate simplex behind an object.
  int delta_object(int object) const { return delta_object_[object]; }

  /// Representative Δ/C arrow of an Sd arrow (the identity for identities).
  int representative(int arrow) const { return representative_[arrow]; }
  const OrderMap& representative_map(int arrow) const {
    return delta().order_map(representative_[arrow]);
  }
  /// Every Δ/C arrow in the class of an Sd arrow.
  const std::vector<int>& members(int arrow) const { return members_[arrow]; }
  /// Sd arrow for a Δ/C arrow between objects of Sd; -1 when either end is
  /// not an object of Sd.
  int arrow_of_delta(int delta_arrow) const;

 private:
  friend SdCategory sd_category(CategoryPtr, const SdOptions&);

  CategoryPtr category_;
  std::shared_ptr<const Congruence> congruence_;
  int cap_ = 0;
  int slack_ = 0;
  std::vector<Simplex> simplices_;
  std::vector<int> delta_object_;
  std::vector<int> object_of_delta_;
  std::vector<int> representative_;
  std::vector<std::vector<int>> members_;
  std::unordered_map<int, int> arrow_of_representative_;
};

/// Objects are named by their simplex; a non-identity arrow [ξ] : X → Y is
/// named `X>Y@ξ` after its least representative. Throws TheoremViolation if
/// a constructed category is not direct.
SdCategory sd_category(CategoryPtr c, const SdOptions& options);

/// The class r(ξ_*) = [α_Y][ξ_*][α_X]⁻¹ : r(X) → r(Y) as an Sd arrow.
/// OutOfTruncation when r(Y) is not an object of sd.
int r_on_arrow(const SdCategory& sd, const Simplex& x, const Simplex& y, const OrderMap& xi);

/// sup(ξ_*) = Y(ξ(q_X) → q_Y).
int sup_arrow(const FinCategory& c, const Simplex& y, const OrderMap& xi);

/// ε_C = [sup] ∘ i_C. Checks that every representative of a class has the
/// same image (TheoremViolation otherwise).
FunctorData epsilon(const SdCategory& sd);

/// Sd(f) = r_D [f_*] i_C. `source` must be built over f.source and `target`
/// over f.target with the same cap.
FunctorData sd_functor(const FunctorData& f, const SdCategory& source, const SdCategory& target);

struct Sd2Result {
  Poset poset;
  SdCategory first;
  SdCategory second;
};

/// Sd(Sd(C)_{≤cap}) as a poset. The first subdivision is a direct category,
/// so its nerve is finite and the second needs no cap. Throws NotAPoset if a
/// hom-set has two elements or two objects are mutually reachable.
Sd2Result sd2_poset(CategoryPtr c, const SdOptions& options);

struct StabilizationReport {
  int cap = 0;
  std::vector<int> slacks;
  /// One census per slack: (source, target) -> number of arrows.
  std::vector<std::map<std::pair<std::string, std::string>, int>> census;
  bool stable = false;  // the last two slacks agree
};

StabilizationReport stabilization_check(CategoryPtr c, int cap, const std::vector<int>& slacks,
                                        Budget budget = {});

/// A truncation of Δ/C or of [Δ/C] packaged as a finite category together
/// with its last-vertex functor to C.
struct TruncatedSimplexCategory {
  CategoryPtr category;
  FunctorData sup;
  std::vector<int> delta_object;  // object -> Δ/C object id
  std::vector<int> delta_arrow;   // arrow -> representative Δ/C arrow id
};

/// Δ/C restricted to dimension ≤ cap.
TruncatedSimplexCategory delta_as_category(std::shared_ptr<const DeltaCategory> delta);
/// [Δ/C] restricted to dimension ≤ cap, with classes taken from `congruence`
/// (whose truncation may be larger).
TruncatedSimplexCategory quotient_as_category(const Congruence& congruence, int cap);

}  // namespace sdcat

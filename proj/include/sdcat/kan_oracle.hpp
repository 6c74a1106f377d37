#pragma once

// An independent route to Sd(C): Kan's subdivision of the nerve followed by
// the fundamental category. Nothing here uses the congruence on Δ/C.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdcat/fincat.hpp"
#include "sdcat/nerve.hpp"

namespace sdcat {

/// Levels 0..top of a simplicial set, with face and degeneracy tables.
struct TruncatedSimplicialSet {
  std::vector<std::vector<std::string>> names;          // names[n][k]
  std::vector<std::vector<std::vector<int>>> faces;     // faces[n][k][i], n ≥ 1
  std::vector<std::vector<std::vector<int>>> degeneracies;  // degeneracies[n][k][i], n < top

  int top() const { return static_cast<int>(names.size()) - 1; }
  int size(int n) const { return static_cast<int>(names[n].size()); }
  int face(int n, int k, int i) const { return faces[n][k][i]; }
  int degeneracy(int n, int k, int i) const { return degeneracies[n][k][i]; }
  /// Not in the image of any degeneracy from level n-1.
  bool nondegenerate(int n, int k) const;
  std::size_t nondegenerate_count(int n) const;
};

/// Exhaustive check of d_i d_j = d_{j-1} d_i (i < j), s_i s_j = s_{j+1} s_i
/// (i ≤ j) and the mixed identities. Throws TheoremViolation.
void check_simplicial_identities(const TruncatedSimplicialSet& k);

/// N C truncated at `top`. Vertices carry object names, edges arrow names.
TruncatedSimplicialSet nerve_sset(const FinCategory& c, int top);

/// sd K up to level `levels`. An m-simplex is stored canonically as a
/// nondegenerate τ of K together with a chain S_0 ⊆ ... ⊆ S_m = [dim τ] of
/// vertex sets; vertices are named after τ.
struct KanSubdivision {
  struct Key {
    int dim = 0;    // dim τ
    int simplex = 0;  // index of τ in K_dim
    std::vector<std::uint32_t> chain;

    friend bool operator==(const Key&, const Key&) = default;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  TruncatedSimplicialSet sset;
  std::vector<std::vector<Key>> keys;  // keys[m][k]
  std::vector<std::map<Key, int>> index;
};

KanSubdivision kan_sd(const TruncatedSimplicialSet& k, int levels = 2);

/// c(K) from the 2-skeleton. When the nondegenerate edges form an acyclic
/// graph the path category is finite and is quotiented by the 2-simplex
/// relations. Otherwise every composable pair of edges must be filled by a
/// 2-simplex, and the composition table is closed under associativity.
/// Anything else is refused with Ungraded. `max_paths` bounds the first mode.
/// When `edge_arrows` is given it receives the arrow of each level-1 simplex.
FinCategory fundamental_category(const TruncatedSimplicialSet& k, std::size_t max_paths = 2'000'000,
                                 std::vector<int>* edge_arrows = nullptr);

enum class Verdict { Match, Mismatch, Inconclusive };
std::string_view to_string(Verdict v);

struct OracleReport {
  Verdict verdict = Verdict::Inconclusive;
  int cap = 0;
  int slack = 0;
  /// The map [i] ↦ (edge of sd N C given by the image of i) is an isomorphism.
  bool canonical = false;
  std::string note;
  /// (source, target) -> (intrinsic hom size, oracle hom size), nonzero pairs only.
  std::map<std::pair<std::string, std::string>, std::pair<int, int>> census;
  /// Smallest differing hom-set on a mismatch.
  std::optional<std::pair<std::string, std::string>> witness;
};

OracleReport oracle_compare(CategoryPtr c, int cap, int slack, Budget budget = {});

}  // namespace sdcat

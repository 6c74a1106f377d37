#pragma once

// Integral homology through the Smith normal form. All arithmetic is exact
// (GMP integers).

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "sdcat/complex.hpp"
#include "sdcat/fincat.hpp"

namespace sdcat {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const mpz_class& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithResult {
  /// Nonzero diagonal entries, positive, each dividing the next.
  std::vector<mpz_class> invariants;
  int rank = 0;
  /// With certificates: u · m · v = d, u and v unimodular.
  std::optional<IntMatrix> u, v, d;
};

/// Smallest-absolute-value pivoting. Certificates are recomputed by exact
/// multiplication and checked (TheoremViolation on failure).
SmithResult smith_normal_form(const IntMatrix& m, bool certificates = true);

/// boundary[k] : C_k → C_{k-1} with rows indexed by basis[k-1]; boundary[0]
/// has zero rows.
struct ChainComplex {
  std::vector<std::vector<std::string>> basis;
  std::vector<IntMatrix> boundary;

  int top() const { return static_cast<int>(basis.size()) - 1; }
};

/// Throws TheoremViolation when some ∂_k ∘ ∂_{k+1} is nonzero.
void check_boundary_squared_zero(const ChainComplex& c);

struct HomologyGroup {
  int betti = 0;
  std::vector<mpz_class> torsion;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};
/// `0`, `Z`, `Z^2 + Z/2` and so on.
std::string to_string(const HomologyGroup& g);

struct HomologyResult {
  std::vector<HomologyGroup> groups;  // degrees 0..top of the chain complex
  /// Last degree unaffected by truncation; nullopt when every degree is
  /// exact (degrees above the top vanish).
  std::optional<int> valid_up_to;

  /// The group in degree k, zero above the computed top.
  HomologyGroup degree(int k) const;
  bool valid(int k) const { return !valid_up_to || k <= *valid_up_to; }
};

HomologyResult homology(const ChainComplex& c, std::optional<int> valid_up_to = std::nullopt);

/// Oriented chains, orientation from the global vertex order.
ChainComplex chains_of_complex(const SimplicialComplex& k);

/// Normalized chains of N C up to dimension cap: nondegenerate simplices,
/// degenerate faces dropped.
ChainComplex normalized_chains_of_nerve(const FinCategory& c, int cap);

/// H_* of N C truncated at cap. Valid up to cap - 2, or in every degree when
/// the nerve is finite and cap reaches its top dimension.
HomologyResult nerve_homology(const FinCategory& c, int cap);

HomologyResult complex_homology(const SimplicialComplex& k);

struct RangeComparison {
  bool equal = true;
  int up_to = 0;  // compared degrees 0..up_to
  std::vector<int> differing;
};

/// Compares the degrees valid on both sides. EmptyRange when there are none.
RangeComparison homology_equal_in_range(const HomologyResult& a, const HomologyResult& b);

std::string to_string(const HomologyResult& h);

}  // namespace sdcat

#include "sdcat/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "sdcat/nerve.hpp"

namespace sdcat {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error(ErrorKind::ParseError, "ragged matrix");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::IndexOutOfRange, "matrix shapes do not match");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.at(k, j) != 0) out.at(i, j) += x * b.at(k, j);
      }
    }
  }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

class Smith {
 public:
  Smith(const IntMatrix& m, bool certificates)
      : a_(m), rows_(m.rows()), cols_(m.cols()), certificates_(certificates) {
    if (certificates_) {
      u_ = IntMatrix::identity(rows_);
      v_ = IntMatrix::identity(cols_);
    }
  }

  SmithResult run() {
    int t = 0;
    for (; t < std::min(rows_, cols_); ++t) {
      if (!bring_smallest(t, t, rows_, t, cols_)) break;
      settle(t);
      if (a_.at(t, t) < 0) negate_row(t);
    }
    SmithResult out;
    out.rank = t;
    for (int i = 0; i < t; ++i) out.invariants.push_back(a_.at(i, i));
    if (certificates_) {
      out.u = std::move(u_);
      out.v = std::move(v_);
      out.d = std::move(a_);
    }
    return out;
  }

 private:
  // Moves the nonzero entry of least absolute value in the block to (t, t).
  bool bring_smallest(int t, int r0, int r1, int c0, int c1) {
    int bi = -1, bj = -1;
    mpz_class best;
    for (int i = r0; i < r1; ++i) {
      for (int j = c0; j < c1; ++j) {
        const mpz_class& x = a_.at(i, j);
        if (x == 0) continue;
        if (bi < 0 || abs(x) < best) {
          best = abs(x);
          bi = i;
          bj = j;
          if (best == 1) break;
        }
      }
      if (best == 1) break;
    }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Clears row and column t, keeping the pivot dividing the rest of the block.
  void settle(int t) {
    for (;;) {
      bool clean = true;
      const mpz_class pivot = a_.at(t, t);
      for (int i = t + 1; i < rows_; ++i) {
        if (a_.at(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_.at(i, t).get_mpz_t(), pivot.get_mpz_t());
        add_row(i, t, -q);
        clean = clean && a_.at(i, t) == 0;
      }
      for (int j = t + 1; j < cols_; ++j) {
        if (a_.at(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_.at(t, j).get_mpz_t(), pivot.get_mpz_t());
        add_col(j, t, -q);
        clean = clean && a_.at(t, j) == 0;
      }
      if (!clean) {
        // a smaller remainder sits in row or column t
        int bi = t, bj = t;
        mpz_class best = abs(a_.at(t, t));
        for (int i = t + 1; i < rows_; ++i) {
          if (a_.at(i, t) != 0 && abs(a_.at(i, t)) < best) best = abs(a_.at(i, t)), bi = i, bj = t;
        }
        for (int j = t + 1; j < cols_; ++j) {
          if (a_.at(t, j) != 0 && abs(a_.at(t, j)) < best) best = abs(a_.at(t, j)), bi = t, bj = j;
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      bool divides = true;
      for (int i = t + 1; i < rows_ && divides; ++i) {
        for (int j = t + 1; j < cols_; ++j) {
          if (a_.at(i, j) != 0 && !mpz_divisible_p(a_.at(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) return;
    }
  }

  void swap_rows(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < cols_; ++j) std::swap(a_.at(i, j), a_.at(k, j));
    if (certificates_) {
      for (int j = 0; j < rows_; ++j) std::swap(u_.at(i, j), u_.at(k, j));
    }
  }

  void swap_cols(int j, int k) {
    if (j == k) return;
    for (int i = 0; i < rows_; ++i) std::swap(a_.at(i, j), a_.at(i, k));
    if (certificates_) {
      for (int i = 0; i < cols_; ++i) std::swap(v_.at(i, j), v_.at(i, k));
    }
  }

  // row_i += q * row_k
  void add_row(int i, int k, const mpz_class& q) {
    for (int j = 0; j < cols_; ++j) {
      if (a_.at(k, j) != 0) a_.at(i, j) += q * a_.at(k, j);
    }
    if (certificates_) {
      for (int j = 0; j < rows_; ++j) {
        if (u_.at(k, j) != 0) u_.at(i, j) += q * u_.at(k, j);
      }
    }
  }

  // col_j += q * col_k
  void add_col(int j, int k, const mpz_class& q) {
    for (int i = 0; i < rows_; ++i) {
      if (a_.at(i, k) != 0) a_.at(i, j) += q * a_.at(i, k);
    }
    if (certificates_) {
      for (int i = 0; i < cols_; ++i) {
        if (v_.at(i, k) != 0) v_.at(i, j) += q * v_.at(i, k);
      }
    }
  }

  void negate_row(int i) {
    for (int j = 0; j < cols_; ++j) a_.at(i, j) = -a_.at(i, j);
    if (certificates_) {
      for (int j = 0; j < rows_; ++j) u_.at(i, j) = -u_.at(i, j);
    }
  }

  IntMatrix a_;
  int rows_;
  int cols_;
  bool certificates_;
  IntMatrix u_, v_;
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m, bool certificates) {
  SmithResult out = Smith(m, certificates).run();
  for (std::size_t i = 0; i + 1 < out.invariants.size(); ++i) {
    if (!mpz_divisible_p(out.invariants[i + 1].get_mpz_t(), out.invariants[i].get_mpz_t())) {
      throw Error(ErrorKind::TheoremViolation, "invariant factors do not form a divisibility chain");
    }
  }
  if (certificates) {
    if (!(*out.u * m * *out.v == *out.d)) {
      throw Error(ErrorKind::TheoremViolation, "Smith certificate U M V = D fails");
    }
    for (int i = 0; i < out.d->rows(); ++i) {
      for (int j = 0; j < out.d->cols(); ++j) {
        if (i != j && out.d->at(i, j) != 0) throw Error(ErrorKind::TheoremViolation, "D is not diagonal");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chain complexes

void check_boundary_squared_zero(const ChainComplex& c) {
  for (int k = 1; k < c.top(); ++k) {
    if (c.boundary[k].cols() == 0 || c.boundary[k + 1].cols() == 0) continue;
    if (!(c.boundary[k] * c.boundary[k + 1]).is_zero()) {
      throw Error(ErrorKind::TheoremViolation, "boundary squared is nonzero in degree " + std::to_string(k + 1));
    }
  }
}

std::string to_string(const HomologyGroup& g) {
  std::vector<std::string> parts;
  if (g.betti == 1) parts.push_back("Z");
  if (g.betti > 1) parts.push_back("Z^" + std::to_string(g.betti));
  for (const auto& t : g.torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

HomologyGroup HomologyResult::degree(int k) const {
  if (k < 0 || k >= static_cast<int>(groups.size())) return {};
  return groups[k];
}

HomologyResult homology(const ChainComplex& c, std::optional<int> valid_up_to) {
  HomologyResult out;
  out.valid_up_to = valid_up_to;
  const int top = c.top();
  std::vector<int> rank(top + 2, 0);
  std::vector<std::vector<mpz_class>> invariants(top + 2);
  for (int k = 1; k <= top; ++k) {
    SmithResult s = smith_normal_form(c.boundary[k], false);
    rank[k] = s.rank;
    invariants[k] = std::move(s.invariants);
  }
  for (int k = 0; k <= top; ++k) {
    HomologyGroup g;
    g.betti = static_cast<int>(c.basis[k].size()) - rank[k] - rank[k + 1];
    for (const auto& d : invariants[k + 1]) {
      if (d > 1) g.torsion.push_back(d);
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

ChainComplex chains_of_complex(const SimplicialComplex& k) {
  ChainComplex out;
  const int top = k.dimension();
  out.basis.resize(std::max(top + 1, 1));
  std::vector<std::unordered_map<std::string, int>> index(out.basis.size());
  std::vector<std::vector<const std::vector<int>*>> faces(out.basis.size());
  for (const auto& f : k.faces()) {
    const int d = static_cast<int>(f.size()) - 1;
    index[d].emplace(k.face_name(f), static_cast<int>(out.basis[d].size()));
    out.basis[d].push_back(k.face_name(f));
    faces[d].push_back(&f);
  }
  out.boundary.emplace_back(0, static_cast<int>(out.basis[0].size()));
  for (int d = 1; d <= top; ++d) {
    IntMatrix m(static_cast<int>(out.basis[d - 1].size()), static_cast<int>(out.basis[d].size()));
    for (int j = 0; j < static_cast<int>(faces[d].size()); ++j) {
      const auto& f = *faces[d][j];
      for (int i = 0; i <= d; ++i) {
        std::vector<int> g = f;
        g.erase(g.begin() + i);
        m.at(index[d - 1].at(k.face_name(g)), j) += (i % 2 ? -1 : 1);
      }
    }
    out.boundary.push_back(std::move(m));
  }
  return out;
}

ChainComplex normalized_chains_of_nerve(const FinCategory& c, int cap) {
  if (cap < 0) throw Error(ErrorKind::IndexOutOfRange, "cap must be non-negative");
  const NerveEnumeration nerve = enumerate_simplices(c, cap);
  ChainComplex out;
  out.basis.resize(cap + 1);
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> index(cap + 1);
  std::vector<std::vector<const Simplex*>> cells(cap + 1);
  for (int d = 0; d <= cap; ++d) {
    for (const Simplex& s : nerve.simplices[d]) {
      if (!is_nondegenerate(c, s)) continue;
      index[d].emplace(s, static_cast<int>(cells[d].size()));
      cells[d].push_back(&s);
      out.basis[d].push_back(simplex_name(c, s));
    }
  }
  out.boundary.emplace_back(0, static_cast<int>(cells[0].size()));
  for (int d = 1; d <= cap; ++d) {
    IntMatrix m(static_cast<int>(cells[d - 1].size()), static_cast<int>(cells[d].size()));
    for (int j = 0; j < static_cast<int>(cells[d].size()); ++j) {
      for (int i = 0; i <= d; ++i) {
        const auto it = index[d - 1].find(face(c, *cells[d][j], i));
        if (it != index[d - 1].end()) m.at(it->second, j) += (i % 2 ? -1 : 1);
      }
    }
    out.boundary.push_back(std::move(m));
  }
  return out;
}

HomologyResult nerve_homology(const FinCategory& c, int cap) {
  const auto top = top_nondegenerate_dim(c);
  const bool complete = top && cap >= *top;
  return homology(normalized_chains_of_nerve(c, cap),
                  complete ? std::nullopt : std::optional<int>(cap - 2));
}

HomologyResult complex_homology(const SimplicialComplex& k) { return homology(chains_of_complex(k)); }

RangeComparison homology_equal_in_range(const HomologyResult& a, const HomologyResult& b) {
  RangeComparison out;
  if (a.valid_up_to && b.valid_up_to) {
    out.up_to = std::min(*a.valid_up_to, *b.valid_up_to);
  } else if (a.valid_up_to || b.valid_up_to) {
    out.up_to = a.valid_up_to ? *a.valid_up_to : *b.valid_up_to;
  } else {
    out.up_to = static_cast<int>(std::max(a.groups.size(), b.groups.size())) - 1;
    out.up_to = std::max(out.up_to, 0);
  }
  if (out.up_to < 0) throw Error(ErrorKind::EmptyRange, "no degree is valid on both sides");
  for (int k = 0; k <= out.up_to; ++k) {
    if (!(a.degree(k) == b.degree(k))) {
      out.equal = false;
      out.differing.push_back(k);
    }
  }
  return out;
}

std::string to_string(const HomologyResult& h) {
  std::string out;
  for (std::size_t k = 0; k < h.groups.size(); ++k) {
    out += "H_" + std::to_string(k) + " = " + to_string(h.groups[k]);
    if (!h.valid(static_cast<int>(k))) out += "  (beyond the valid range)";
    out += "\n";
  }
  return out;
}

}  // namespace sdcat

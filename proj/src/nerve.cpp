#include "sdcat/nerve.hpp"

#include <algorithm>
#include <functional>

namespace sdcat {

// ---------------------------------------------------------------------------
// OrderMap

OrderMap OrderMap::make(int source_dim, int target_dim, std::vector<int> values) {
  if (source_dim < 0 || target_dim < 0 || static_cast<int>(values.size()) != source_dim + 1) {
    throw Error(ErrorKind::IndexOutOfRange, "order map has the wrong length");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] > target_dim || (i > 0 && values[i] < values[i - 1])) {
      throw Error(ErrorKind::IndexOutOfRange, "values are not an order map");
    }
  }
  return OrderMap{source_dim, target_dim, std::move(values)};
}

OrderMap OrderMap::identity(int q) {
  OrderMap m{q, q, std::vector<int>(q + 1)};
  for (int i = 0; i <= q; ++i) m.values[i] = i;
  return m;
}

OrderMap OrderMap::coface(int q, int i) {
  if (q < 1 || i < 0 || i > q) throw Error(ErrorKind::IndexOutOfRange, "coface index");
  OrderMap m{q - 1, q, {}};
  for (int j = 0; j < q; ++j) m.values.push_back(j < i ? j : j + 1);
  return m;
}

OrderMap OrderMap::codegeneracy(int q, int i) {
  if (q < 0 || i < 0 || i > q) throw Error(ErrorKind::IndexOutOfRange, "codegeneracy index");
  OrderMap m{q + 1, q, {}};
  for (int j = 0; j <= q + 1; ++j) m.values.push_back(j <= i ? j : j - 1);
  return m;
}

bool OrderMap::injective() const {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == values[i - 1]) return false;
  }
  return true;
}

bool OrderMap::surjective() const {
  if (values.front() != 0 || values.back() != target_dim) return false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1] + 1) return false;
  }
  return true;
}

OrderMap compose(const OrderMap& outer, const OrderMap& inner) {
  if (inner.target_dim != outer.source_dim) {
    throw Error(ErrorKind::IndexOutOfRange, "order maps are not composable");
  }
  OrderMap m{inner.source_dim, outer.target_dim, std::vector<int>(inner.values.size())};
  for (std::size_t i = 0; i < inner.values.size(); ++i) m.values[i] = outer.values[inner.values[i]];
  return m;
}

std::vector<OrderMap> all_order_maps(int q, int p) {
  std::vector<OrderMap> out;
  std::vector<int> values(q + 1, 0);
  std::function<void(int, int)> fill = [&](int i, int lo) {
    if (i == q + 1) {
      out.push_back(OrderMap{q, p, values});
      return;
    }
    for (int v = lo; v <= p; ++v) {
      values[i] = v;
      fill(i + 1, v);
    }
  };
  fill(0, 0);
  return out;
}

std::string to_string(const OrderMap& map) {
  std::string s;
  for (std::size_t i = 0; i < map.values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(map.values[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Simplices

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ s.vertices.front();
  for (int a : s.arrows) h = (h ^ static_cast<std::size_t>(a)) * 0x100000001b3ull + (h >> 29);
  return h;
}

Simplex vertex_simplex(int object) { return Simplex{{object}, {}}; }

Simplex make_simplex(const FinCategory& c, const std::vector<int>& arrows) {
  if (arrows.empty()) throw Error(ErrorKind::IndexOutOfRange, "use vertex_simplex for dimension 0");
  Simplex s{{c.src(arrows.front())}, arrows};
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i > 0 && c.src(arrows[i]) != c.dst(arrows[i - 1])) {
      throw Error(ErrorKind::IllTypedComposite, "chain breaks at " + c.arrow_name(arrows[i]));
    }
    s.vertices.push_back(c.dst(arrows[i]));
  }
  return s;
}

bool is_nondegenerate(const FinCategory& c, const Simplex& x) {
  return std::none_of(x.arrows.begin(), x.arrows.end(), [&](int f) { return c.is_identity(f); });
}

std::string simplex_name(const FinCategory& c, const Simplex& x) {
  if (x.dim() == 0) return c.object_name(x.vertices.front());
  std::string s = "(";
  for (int i = 0; i < x.dim(); ++i) {
    if (i) s += ";";
    s += c.arrow_name(x.arrows[i]);
  }
  return s + ")";
}

int composite_between(const FinCategory& c, const Simplex& x, int from, int to) {
  int f = c.identity(x.vertices[from]);
  for (int k = from; k < to; ++k) f = c.compose(x.arrows[k], f);
  return f;
}

Simplex apply(const FinCategory& c, const Simplex& y, const OrderMap& xi) {
  if (xi.target_dim != y.dim()) throw Error(ErrorKind::IndexOutOfRange, "order map codomain");
  Simplex x;
  x.vertices.reserve(xi.values.size());
  for (int v : xi.values) x.vertices.push_back(y.vertices[v]);
  for (std::size_t i = 1; i < xi.values.size(); ++i) {
    x.arrows.push_back(composite_between(c, y, xi.values[i - 1], xi.values[i]));
  }
  return x;
}

Simplex face(const FinCategory& c, const Simplex& x, int i) {
  if (x.dim() < 1 || i < 0 || i > x.dim()) {
    throw Error(ErrorKind::IndexOutOfRange, "face " + std::to_string(i) + " of a " +
                                                std::to_string(x.dim()) + "-simplex");
  }
  return apply(c, x, OrderMap::coface(x.dim(), i));
}

Simplex degenerate(const FinCategory& c, const Simplex& x, int i) {
  if (i < 0 || i > x.dim()) {
    throw Error(ErrorKind::IndexOutOfRange, "degeneracy " + std::to_string(i) + " of a " +
                                                std::to_string(x.dim()) + "-simplex");
  }
  return apply(c, x, OrderMap::codegeneracy(x.dim(), i));
}

std::optional<int> top_nondegenerate_dim(const FinCategory& c) {
  const int n = c.object_count();
  // Longest path in the graph of non-identity arrows, by memoised DFS with
  // cycle detection (0 = unvisited, 1 = on stack, 2 = done).
  std::vector<int> state(n, 0);
  std::vector<int> longest(n, 0);
  bool cycle = false;
  std::function<void(int)> visit = [&](int x) {
    state[x] = 1;
    for (int f : c.out_arrows(x)) {
      if (c.is_identity(f)) continue;
      const int y = c.dst(f);
      if (state[y] == 1) {
        cycle = true;
        continue;
      }
      if (state[y] == 0) visit(y);
      longest[x] = std::max(longest[x], longest[y] + 1);
    }
    state[x] = 2;
  };
  for (int x = 0; x < n && !cycle; ++x) {
    if (state[x] == 0) visit(x);
  }
  if (cycle) return std::nullopt;
  int top = 0;
  for (int x = 0; x < n; ++x) top = std::max(top, longest[x]);
  return top;
}

NerveEnumeration enumerate_simplices(const FinCategory& c, std::optional<int> cap,
                                     std::size_t budget) {
  NerveEnumeration out;
  out.top_nondegenerate_dim = top_nondegenerate_dim(c);
  if (!cap) {
    if (!out.top_nondegenerate_dim) {
      throw Error(ErrorKind::CapExceeded,
                  "the nerve has nondegenerate simplices in every dimension; a cap is required");
    }
    cap = *out.top_nondegenerate_dim;
  }
  if (*cap < 0) throw Error(ErrorKind::IndexOutOfRange, "negative cap");
  out.cap = *cap;
  std::size_t total = 0;
  out.simplices.resize(*cap + 1);
  for (int x = 0; x < c.object_count(); ++x) out.simplices[0].push_back(vertex_simplex(x));
  total = out.simplices[0].size();
  for (int d = 1; d <= *cap; ++d) {
    for (const Simplex& s : out.simplices[d - 1]) {
      for (int f : c.out_arrows(s.last())) {
        Simplex t = s;
        t.arrows.push_back(f);
        t.vertices.push_back(c.dst(f));
        out.simplices[d].push_back(std::move(t));
        if (++total > budget) {
          throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(budget) +
                                                  " simplices up to dimension " +
                                                  std::to_string(*cap));
        }
      }
    }
  }
  for (const auto& level : out.simplices) {
    out.nondegenerate_counts.push_back(static_cast<std::size_t>(
        std::count_if(level.begin(), level.end(),
                      [&](const Simplex& s) { return is_nondegenerate(c, s); })));
  }
  return out;
}

std::vector<DeltaArrow> hom_delta(const FinCategory& c, const Simplex& x, const Simplex& y) {
  std::vector<DeltaArrow> out;
  for (OrderMap& xi : all_order_maps(x.dim(), y.dim())) {
    if (apply(c, y, xi) == x) out.push_back(DeltaArrow{x, y, std::move(xi)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// OrderMapTable

OrderMapTable::OrderMapTable(int cap) : cap_(cap) {
  if (cap < 0 || cap > 12) {
    throw Error(ErrorKind::CapExceeded, "truncation dimension must lie in [0, 12]");
  }
  for (int p = 0; p <= cap; ++p) {
    base_.push_back(static_cast<int>(maps_.size()));
    for (int q = 0; q <= cap; ++q) {
      for (OrderMap& m : all_order_maps(q, p)) maps_.push_back(std::move(m));
    }
  }
  base_.push_back(static_cast<int>(maps_.size()));
  index_.reserve(maps_.size() * 2);
  for (int id = 0; id < size(); ++id) index_.emplace(key(maps_[id]), id);
  for (int q = 0; q <= cap; ++q) identity_.push_back(id_of(OrderMap::identity(q)));
}

std::uint64_t OrderMapTable::key(const OrderMap& m) {
  std::uint64_t k = static_cast<std::uint64_t>(m.source_dim) |
                    (static_cast<std::uint64_t>(m.target_dim) << 4);
  int shift = 8;
  for (int v : m.values) {
    k |= static_cast<std::uint64_t>(v) << shift;
    shift += 4;
  }
  return k;
}

int OrderMapTable::id_of(const OrderMap& m) const {
  auto it = index_.find(key(m));
  if (it == index_.end()) throw Error(ErrorKind::OutOfTruncation, "order map " + to_string(m));
  return it->second;
}

int OrderMapTable::compose(int outer, int inner) const {
  const OrderMap& o = maps_[outer];
  const OrderMap& i = maps_[inner];
  std::uint64_t k = static_cast<std::uint64_t>(i.source_dim) |
                    (static_cast<std::uint64_t>(o.target_dim) << 4);
  int shift = 8;
  for (int v : i.values) {
    k |= static_cast<std::uint64_t>(o.values[v]) << shift;
    shift += 4;
  }
  return index_.at(k);
}

// ---------------------------------------------------------------------------
// DeltaCategory

DeltaCategory::DeltaCategory(CategoryPtr base, int cap, Budget budget)
    : base_(std::move(base)), cap_(cap), maps_(cap) {
  const FinCategory& c = *base_;
  NerveEnumeration nerve = enumerate_simplices(c, cap, budget.max_objects);
  for (auto& level : nerve.simplices) {
    for (Simplex& s : level) objects_.push_back(std::move(s));
  }
  index_.reserve(objects_.size() * 2);
  std::size_t total = 0;
  for (int x = 0; x < object_count(); ++x) {
    index_.emplace(objects_[x], x);
    nondegenerate_.push_back(is_nondegenerate(c, objects_[x]));
    offset_.push_back(static_cast<int>(total));
    total += maps_.count_into(dim(x));
    if (total > budget.max_arrows) {
      throw Error(ErrorKind::BudgetExceeded, "Δ/C truncated at " + std::to_string(cap) +
                                                 " has more than " +
                                                 std::to_string(budget.max_arrows) + " arrows");
    }
  }
  source_.resize(total);
  target_.resize(total);
  out_.assign(objects_.size(), {});
  for (int y = 0; y < object_count(); ++y) {
    const int p = dim(y);
    for (int local = 0; local < maps_.count_into(p); ++local) {
      const int a = offset_[y] + local;
      const Simplex x = apply(c, objects_[y], maps_.map(maps_.base(p) + local));
      source_[a] = index_.at(x);
      target_[a] = y;
    }
  }
  for (int a = 0; a < arrow_count(); ++a) out_[source_[a]].push_back(a);
}

std::optional<int> DeltaCategory::find(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> DeltaCategory::hom(int x, int y) const {
  std::vector<int> out;
  for (int a = in_begin(y); a < in_end(y); ++a) {
    if (source_[a] == x) out.push_back(a);
  }
  return out;
}

DeltaArrow DeltaCategory::delta_arrow(int a) const {
  return DeltaArrow{objects_[source_[a]], objects_[target_[a]], order_map(a)};
}

}  // namespace sdcat

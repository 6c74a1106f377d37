#include "sdcat/fincat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace sdcat {

namespace {

std::uint64_t pair_key(int g, int f) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
         static_cast<std::uint32_t>(f);
}

}  // namespace

std::string identity_name(std::string_view object) { return "id_" + std::string(object); }

// ---------------------------------------------------------------------------
// FinCategory

int FinCategory::compose(int g, int f) const {
  if (arrows_[f].dst != arrows_[g].src) {
    throw Error(ErrorKind::IllTypedComposite,
                "cannot compose " + arrows_[g].name + " after " + arrows_[f].name);
  }
  return after_[f][out_pos_[g]];
}

std::optional<int> FinCategory::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCategory::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

int FinCategory::object_index(std::string_view name) const {
  if (auto x = find_object(name)) return *x;
  throw Error(ErrorKind::UnknownObject, std::string(name));
}

int FinCategory::arrow_index(std::string_view name) const {
  if (auto f = find_arrow(name)) return *f;
  throw Error(ErrorKind::UnknownArrow, std::string(name));
}

std::vector<int> FinCategory::hom(int x, int y) const {
  std::vector<int> result;
  for (int f : out_[x]) {
    if (arrows_[f].dst == y) result.push_back(f);
  }
  return result;
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  if (a.objects_ != b.objects_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t f = 0; f < a.arrows_.size(); ++f) {
    const Arrow& x = a.arrows_[f];
    const Arrow& y = b.arrows_[f];
    if (x.name != y.name || x.src != y.src || x.dst != y.dst) return false;
  }
  return a.after_ == b.after_ && a.out_pos_ == b.out_pos_;
}

// ---------------------------------------------------------------------------
// CategoryBuilder

int CategoryBuilder::add_object(std::string name) {
  if (object_index_.count(name)) throw Error(ErrorKind::DuplicateId, "object " + name);
  const int x = static_cast<int>(objects_.size());
  std::string id = identity_name(name);
  if (arrow_index_.count(id)) throw Error(ErrorKind::DuplicateId, "arrow " + id);
  object_index_.emplace(name, x);
  objects_.push_back(std::move(name));
  identities_.push_back(static_cast<int>(arrows_.size()));
  arrow_index_.emplace(id, static_cast<int>(arrows_.size()));
  arrows_.push_back(Arrow{std::move(id), x, x});
  return x;
}

int CategoryBuilder::add_arrow(std::string name, int src, int dst) {
  if (src < 0 || dst < 0 || src >= object_count() || dst >= object_count()) {
    throw Error(ErrorKind::DanglingReference, "arrow " + name + " has an unknown endpoint");
  }
  if (arrow_index_.count(name)) throw Error(ErrorKind::DuplicateId, "arrow " + name);
  const int f = static_cast<int>(arrows_.size());
  arrow_index_.emplace(name, f);
  arrows_.push_back(Arrow{std::move(name), src, dst});
  return f;
}

void CategoryBuilder::set_composite(int g, int f, int gf) {
  const auto [it, inserted] = composites_.emplace(pair_key(g, f), gf);
  if (!inserted && it->second != gf) {
    throw Error(ErrorKind::ConflictingComposite, arrows_[g].name + " . " + arrows_[f].name +
                                                     " given as both " + arrows_[it->second].name +
                                                     " and " + arrows_[gf].name);
  }
}

std::optional<int> CategoryBuilder::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> CategoryBuilder::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

FinCategory CategoryBuilder::build() const {
  FinCategory c;
  c.objects_ = objects_;
  c.arrows_ = arrows_;
  c.identities_ = identities_;
  c.object_index_ = object_index_;
  c.arrow_index_ = arrow_index_;
  const int n = object_count();
  const int m = arrow_count();
  c.out_.assign(n, {});
  c.in_.assign(n, {});
  c.out_pos_.assign(m, 0);
  for (int f = 0; f < m; ++f) {
    c.out_pos_[f] = static_cast<int>(c.out_[arrows_[f].src].size());
    c.out_[arrows_[f].src].push_back(f);
    c.in_[arrows_[f].dst].push_back(f);
  }
  auto name = [&](int f) { return arrows_[f].name; };

  for (const auto& [key, gf] : composites_) {
    const int g = static_cast<int>(key >> 32);
    const int f = static_cast<int>(key & 0xffffffffu);
    if (arrows_[f].dst != arrows_[g].src) {
      throw Error(ErrorKind::IllTypedComposite, name(g) + " . " + name(f) + " is not composable");
    }
    if (arrows_[gf].src != arrows_[f].src || arrows_[gf].dst != arrows_[g].dst) {
      throw Error(ErrorKind::IllTypedComposite,
                  name(g) + " . " + name(f) + " = " + name(gf) + " has the wrong endpoints");
    }
  }

  c.after_.assign(m, {});
  for (int f = 0; f < m; ++f) {
    const auto& outs = c.out_[arrows_[f].dst];
    auto& row = c.after_[f];
    row.resize(outs.size());
    for (std::size_t k = 0; k < outs.size(); ++k) {
      const int g = outs[k];
      auto it = composites_.find(pair_key(g, f));
      const bool f_id = identities_[arrows_[f].src] == f;
      const bool g_id = identities_[arrows_[g].src] == g;
      int value = -1;
      if (f_id || g_id) {
        value = f_id ? g : f;
        if (it != composites_.end() && it->second != value) {
          throw Error(ErrorKind::IdentityLaw,
                      name(g) + " . " + name(f) + " must be " + name(value));
        }
      } else if (it == composites_.end()) {
        throw Error(ErrorKind::MissingComposite, name(g) + " . " + name(f));
      } else {
        value = it->second;
      }
      row[k] = value;
    }
  }

  for (int f = 0; f < m; ++f) {
    for (int g : c.out_[arrows_[f].dst]) {
      const int gf = c.compose(g, f);
      for (int h : c.out_[arrows_[g].dst]) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
          throw Error(ErrorKind::NonAssociative,
                      "(" + name(h) + " . " + name(g) + ") . " + name(f));
        }
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Posets

Poset::Poset(std::vector<std::string> elements, std::vector<std::vector<bool>> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
  const int n = size();
  if (static_cast<int>(leq_.size()) != n) {
    throw Error(ErrorKind::NotAPartialOrder, "relation size does not match element count");
  }
  for (const auto& row : leq_) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorKind::NotAPartialOrder, "relation is not square");
    }
  }
  std::unordered_map<std::string, int> seen;
  for (int i = 0; i < n; ++i) {
    if (!seen.emplace(elements_[i], i).second) {
      throw Error(ErrorKind::DuplicateId, "poset element " + elements_[i]);
    }
    if (!leq_[i][i]) throw Error(ErrorKind::NotAPartialOrder, "not reflexive at " + elements_[i]);
  }
  // Bit rows make the transitivity check O(n^3 / 64).
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(n, std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (leq_[i][j]) bits[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!leq_[i][j]) continue;
      if (i != j && leq_[j][i]) {
        throw Error(ErrorKind::NotAPartialOrder,
                    "not antisymmetric: " + elements_[i] + ", " + elements_[j]);
      }
      for (std::size_t w = 0; w < words; ++w) {
        if ((bits[j][w] & ~bits[i][w]) != 0) {
          throw Error(ErrorKind::NotAPartialOrder, "not transitive through " + elements_[j]);
        }
      }
    }
  }
}

Poset Poset::from_pairs(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& pairs) {
  const int n = static_cast<int>(elements.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(elements[i], i);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw Error(ErrorKind::DanglingReference, "order pair " + a + " <= " + b);
    }
    leq[ia->second][ib->second] = true;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return Poset(std::move(elements), std::move(leq));
}

std::optional<int> Poset::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (elements_[i] == name) return i;
  }
  return std::nullopt;
}

FinCategory poset_to_category(const Poset& poset) {
  CategoryBuilder b;
  const int n = poset.size();
  for (int i = 0; i < n; ++i) b.add_object(poset.element(i));
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    arrow[i][i] = b.identity(i);
    for (int j = 0; j < n; ++j) {
      if (poset.less(i, j)) {
        arrow[i][j] = b.add_arrow(poset.element(i) + "<" + poset.element(j), i, j);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!poset.less(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (poset.less(j, k)) b.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
      }
    }
  }
  return b.build();
}

PosetReflection preorder_collapse(const FinCategory& c) {
  const int n = c.object_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    reach[x][x] = true;
    for (int f : c.out_arrows(x)) reach[x][c.dst(f)] = true;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  PosetReflection result;
  result.class_of.assign(n, -1);
  std::vector<std::vector<int>> members;
  for (int x = 0; x < n; ++x) {
    if (result.class_of[x] >= 0) continue;
    const int cls = static_cast<int>(members.size());
    members.emplace_back();
    for (int y = x; y < n; ++y) {
      if (reach[x][y] && reach[y][x]) {
        result.class_of[y] = cls;
        members.back().push_back(y);
      }
    }
  }
  const int k = static_cast<int>(members.size());
  std::vector<std::string> names;
  for (const auto& m : members) {
    if (m.size() == 1) {
      names.push_back(c.object_name(m.front()));
      continue;
    }
    std::string name = "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) name += ",";
      name += c.object_name(m[i]);
    }
    names.push_back(name + "}");
  }
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (int a = 0; a < k; ++a) {
    for (int b2 = 0; b2 < k; ++b2) leq[a][b2] = reach[members[a].front()][members[b2].front()];
  }
  result.poset = Poset(std::move(names), std::move(leq));
  return result;
}

// ---------------------------------------------------------------------------
// Functors

void check_functor(const FunctorData& fn) {
  const FinCategory& s = *fn.source;
  const FinCategory& t = *fn.target;
  auto fail = [](const std::string& what) { throw Error(ErrorKind::NotAFunctor, what); };
  if (static_cast<int>(fn.object_map.size()) != s.object_count() ||
      static_cast<int>(fn.arrow_map.size()) != s.arrow_count()) {
    fail("map sizes do not match the source category");
  }
  for (int x = 0; x < s.object_count(); ++x) {
    const int y = fn.object_map[x];
    if (y < 0 || y >= t.object_count()) fail("object " + s.object_name(x) + " unmapped");
    if (fn.arrow_map[s.identity(x)] != t.identity(y)) {
      fail("identity of " + s.object_name(x) + " not preserved");
    }
  }
  for (int f = 0; f < s.arrow_count(); ++f) {
    const int g = fn.arrow_map[f];
    if (g < 0 || g >= t.arrow_count()) fail("arrow " + s.arrow_name(f) + " unmapped");
    if (t.src(g) != fn.object_map[s.src(f)] || t.dst(g) != fn.object_map[s.dst(f)]) {
      fail("arrow " + s.arrow_name(f) + " sent to " + t.arrow_name(g) + " with wrong endpoints");
    }
  }
  for (int f = 0; f < s.arrow_count(); ++f) {
    for (int g : s.out_arrows(s.dst(f))) {
      if (fn.arrow_map[s.compose(g, f)] != t.compose(fn.arrow_map[g], fn.arrow_map[f])) {
        fail("composite " + s.arrow_name(g) + " . " + s.arrow_name(f) + " not preserved");
      }
    }
  }
}

FunctorData make_functor(CategoryPtr source, CategoryPtr target, std::vector<int> object_map,
                         std::vector<int> arrow_map) {
  FunctorData fn{std::move(source), std::move(target), std::move(object_map),
                 std::move(arrow_map)};
  check_functor(fn);
  return fn;
}

FunctorData functor_from_names(CategoryPtr source, CategoryPtr target,
                               const std::map<std::string, std::string>& objects,
                               const std::map<std::string, std::string>& arrows) {
  const FinCategory& s = *source;
  const FinCategory& t = *target;
  std::vector<int> om(s.object_count(), -1);
  std::vector<int> am(s.arrow_count(), -1);
  for (const auto& [from, to] : objects) om[s.object_index(from)] = t.object_index(to);
  for (int x = 0; x < s.object_count(); ++x) {
    if (om[x] < 0) throw Error(ErrorKind::NotAFunctor, "object " + s.object_name(x) + " unmapped");
    am[s.identity(x)] = t.identity(om[x]);
  }
  for (const auto& [from, to] : arrows) am[s.arrow_index(from)] = t.arrow_index(to);
  return make_functor(std::move(source), std::move(target), std::move(om), std::move(am));
}

FunctorData identity_functor(CategoryPtr category) {
  std::vector<int> om(category->object_count());
  std::vector<int> am(category->arrow_count());
  std::iota(om.begin(), om.end(), 0);
  std::iota(am.begin(), am.end(), 0);
  return FunctorData{category, category, std::move(om), std::move(am)};
}

FunctorData terminal_functor(CategoryPtr category) {
  CategoryBuilder b;
  b.add_object("*");
  auto point = std::make_shared<const FinCategory>(b.build());
  return FunctorData{category, point, std::vector<int>(category->object_count(), 0),
                     std::vector<int>(category->arrow_count(), 0)};
}

FunctorData compose(const FunctorData& g, const FunctorData& f) {
  if (f.target != g.source && !(*f.target == *g.source)) {
    throw Error(ErrorKind::NotAFunctor, "functors are not composable");
  }
  FunctorData out{f.source, g.target, {}, {}};
  out.object_map.reserve(f.object_map.size());
  for (int y : f.object_map) out.object_map.push_back(g.object_map[y]);
  out.arrow_map.reserve(f.arrow_map.size());
  for (int a : f.arrow_map) out.arrow_map.push_back(g.arrow_map[a]);
  return out;
}

bool same_functor(const FunctorData& a, const FunctorData& b) {
  if (a.source != b.source && !(*a.source == *b.source)) return false;
  if (a.target != b.target && !(*a.target == *b.target)) return false;
  return a.object_map == b.object_map && a.arrow_map == b.arrow_map;
}

namespace {

// Backtracking assignment of arrows once an object map is fixed. Arrows are
// assigned in index order; each new assignment is checked against every
// already-assigned composable pair.
class ArrowSearch {
 public:
  ArrowSearch(const FinCategory& s, const FinCategory& t, const std::vector<int>& om, bool bijective)
      : s_(s), t_(t), om_(om), bijective_(bijective), am_(s.arrow_count(), -1),
        used_(t.arrow_count(), false), factorizations_(s.arrow_count()) {
    for (int f = 0; f < s.arrow_count(); ++f) {
      for (int g : s.out_arrows(s.dst(f))) factorizations_[s.compose(g, f)].emplace_back(g, f);
    }
  }

  bool run(const std::function<bool(const std::vector<int>&)>& visit) { return step(0, visit); }

 private:
  bool consistent(int c) const {
    auto ok = [&](int g, int f) {
      const int gf = s_.compose(g, f);
      if (am_[g] < 0 || am_[f] < 0 || am_[gf] < 0) return true;
      return t_.compose(am_[g], am_[f]) == am_[gf];
    };
    for (int f : s_.in_arrows(s_.src(c))) {
      if (!ok(c, f)) return false;
    }
    for (int g : s_.out_arrows(s_.dst(c))) {
      if (!ok(g, c)) return false;
    }
    for (const auto& [g, f] : factorizations_[c]) {
      if (!ok(g, f)) return false;
    }
    return true;
  }

  bool step(int f, const std::function<bool(const std::vector<int>&)>& visit) {
    if (f == s_.arrow_count()) return visit(am_);
    const int x = om_[s_.src(f)];
    const int y = om_[s_.dst(f)];
    std::vector<int> candidates;
    if (s_.is_identity(f)) {
      candidates.push_back(t_.identity(x));
    } else {
      for (int g : t_.out_arrows(x)) {
        if (t_.dst(g) == y) candidates.push_back(g);
      }
    }
    for (int g : candidates) {
      if (bijective_ && used_[g]) continue;
      am_[f] = g;
      used_[g] = true;
      if (consistent(f) && step(f + 1, visit)) return true;
      used_[g] = false;
      am_[f] = -1;
    }
    return false;
  }

  const FinCategory& s_;
  const FinCategory& t_;
  const std::vector<int>& om_;
  bool bijective_;
  std::vector<int> am_;
  std::vector<bool> used_;
  std::vector<std::vector<std::pair<int, int>>> factorizations_;
};

}  // namespace

std::vector<FunctorData> enumerate_functors(CategoryPtr source, CategoryPtr target,
                                            std::size_t limit) {
  std::vector<FunctorData> out;
  const FinCategory& s = *source;
  const FinCategory& t = *target;
  std::vector<int> om(s.object_count(), 0);
  if (t.object_count() == 0 && s.object_count() > 0) return out;
  std::function<bool(int)> objects = [&](int x) -> bool {
    if (x == s.object_count()) {
      ArrowSearch search(s, t, om, false);
      search.run([&](const std::vector<int>& am) {
        out.push_back(FunctorData{source, target, om, am});
        return out.size() >= limit;
      });
      return out.size() >= limit;
    }
    for (int y = 0; y < t.object_count(); ++y) {
      om[x] = y;
      if (objects(x + 1)) return true;
    }
    return false;
  };
  objects(0);
  return out;
}

std::optional<FunctorData> find_isomorphism(CategoryPtr source, CategoryPtr target) {
  const FinCategory& s = *source;
  const FinCategory& t = *target;
  if (s.object_count() != t.object_count() || s.arrow_count() != t.arrow_count()) {
    return std::nullopt;
  }
  const int n = s.object_count();
  auto hom_size = [](const FinCategory& c, int x, int y) {
    int k = 0;
    for (int f : c.out_arrows(x)) k += c.dst(f) == y;
    return k;
  };
  std::vector<int> om(n, -1);
  std::vector<bool> used(n, false);
  std::optional<FunctorData> found;
  std::function<bool(int)> objects = [&](int x) -> bool {
    if (x == n) {
      ArrowSearch search(s, t, om, true);
      return search.run([&](const std::vector<int>& am) {
        found = FunctorData{source, target, om, am};
        return true;
      });
    }
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      if (s.out_arrows(x).size() != t.out_arrows(y).size() ||
          s.in_arrows(x).size() != t.in_arrows(y).size() ||
          hom_size(s, x, x) != hom_size(t, y, y)) {
        continue;
      }
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) {
        ok = hom_size(s, x, z) == hom_size(t, y, om[z]) && hom_size(s, z, x) == hom_size(t, om[z], y);
      }
      if (!ok) continue;
      om[x] = y;
      used[y] = true;
      if (objects(x + 1)) return true;
      used[y] = false;
      om[x] = -1;
    }
    return false;
  };
  objects(0);
  return found;
}

NatTransData make_nat_trans(FunctorData from, FunctorData to, std::vector<int> components) {
  const FinCategory& s = *from.source;
  const FinCategory& t = *from.target;
  if (!(*from.source == *to.source) || !(*from.target == *to.target)) {
    throw Error(ErrorKind::NotNatural, "functors have different source or target");
  }
  if (static_cast<int>(components.size()) != s.object_count()) {
    throw Error(ErrorKind::NotNatural, "one component per object is required");
  }
  for (int x = 0; x < s.object_count(); ++x) {
    const int eta = components[x];
    if (eta < 0 || eta >= t.arrow_count() || t.src(eta) != from.object_map[x] ||
        t.dst(eta) != to.object_map[x]) {
      throw Error(ErrorKind::NotNatural, "component at " + s.object_name(x) + " has the wrong type");
    }
  }
  for (int f = 0; f < s.arrow_count(); ++f) {
    const int lhs = t.compose(to.arrow_map[f], components[s.src(f)]);
    const int rhs = t.compose(components[s.dst(f)], from.arrow_map[f]);
    if (lhs != rhs) {
      throw Error(ErrorKind::NotNatural, "square at " + s.arrow_name(f) + " does not commute");
    }
  }
  return NatTransData{std::move(from), std::move(to), std::move(components)};
}

// ---------------------------------------------------------------------------
// Fibers

namespace {

enum class FiberKind { Left, Right, Strict };

FiberData build_fiber(const FunctorData& fn, int T, FiberKind kind) {
  const FinCategory& c = *fn.source;
  const FinCategory& d = *fn.target;
  if (T < 0 || T >= d.object_count()) {
    throw Error(ErrorKind::UnknownObject, "fiber over object index " + std::to_string(T));
  }
  FiberData out;
  CategoryBuilder b;
  std::vector<std::string> names;
  for (int x = 0; x < c.object_count(); ++x) {
    const int fx = fn.object_map[x];
    if (kind == FiberKind::Strict) {
      if (fx != T) continue;
      names.push_back(c.object_name(x));
      b.add_object(names.back());
      out.base_object.push_back(x);
      out.structure_arrow.push_back(-1);
      continue;
    }
    const auto candidates = kind == FiberKind::Left ? d.hom(fx, T) : d.hom(T, fx);
    for (int u : candidates) {
      names.push_back("(" + c.object_name(x) + "," + d.arrow_name(u) + ")");
      b.add_object(names.back());
      out.base_object.push_back(x);
      out.structure_arrow.push_back(u);
    }
  }
  const int n = b.object_count();
  // arrow_of[(source object, base arrow, target object)]
  std::map<std::tuple<int, int, int>, int> arrow_of;
  out.base_arrow.assign(n, -1);
  for (int a = 0; a < n; ++a) out.base_arrow[a] = c.identity(out.base_object[a]);
  for (int a = 0; a < n; ++a) {
    const int x = out.base_object[a];
    const int u = out.structure_arrow[a];
    arrow_of[{a, c.identity(x), a}] = b.identity(a);
    for (int a2 = 0; a2 < n; ++a2) {
      const int x2 = out.base_object[a2];
      const int u2 = out.structure_arrow[a2];
      for (int v : c.hom(x, x2)) {
        const int fv = fn.arrow_map[v];
        bool ok = false;
        switch (kind) {
          case FiberKind::Left: ok = d.compose(u2, fv) == u; break;
          case FiberKind::Right: ok = d.compose(fv, u) == u2; break;
          case FiberKind::Strict: ok = fv == d.identity(T); break;
        }
        if (!ok || (a == a2 && v == c.identity(x))) continue;
        std::string name = kind == FiberKind::Strict
                               ? c.arrow_name(v)
                               : c.arrow_name(v) + ":" + names[a] + "->" + names[a2];
        const int arrow = b.add_arrow(std::move(name), a, a2);
        arrow_of[{a, v, a2}] = arrow;
        out.base_arrow.push_back(v);
      }
    }
  }
  for (const auto& [k1, f1] : arrow_of) {
    const auto& [a, v, a2] = k1;
    for (const auto& [k2, f2] : arrow_of) {
      const auto& [b1, w, b2] = k2;
      if (b1 != a2) continue;
      b.set_composite(f2, f1, arrow_of.at({a, c.compose(w, v), b2}));
    }
  }
  out.category = std::make_shared<const FinCategory>(b.build());
  return out;
}

}  // namespace

FiberData left_fiber(const FunctorData& f, int T) { return build_fiber(f, T, FiberKind::Left); }
FiberData right_fiber(const FunctorData& f, int T) { return build_fiber(f, T, FiberKind::Right); }
FiberData fiber(const FunctorData& f, int T) { return build_fiber(f, T, FiberKind::Strict); }

FunctorData fiber_inclusion(const FiberData& strict, const FiberData& left, const FunctorData& f,
                            int T) {
  const FinCategory& s = *strict.category;
  const FinCategory& t = *left.category;
  const int idT = f.target->identity(T);
  std::vector<int> om(s.object_count(), -1);
  for (int a = 0; a < s.object_count(); ++a) {
    for (int b = 0; b < t.object_count(); ++b) {
      if (left.base_object[b] == strict.base_object[a] && left.structure_arrow[b] == idT) om[a] = b;
    }
  }
  std::vector<int> am(s.arrow_count(), -1);
  for (int e = 0; e < s.arrow_count(); ++e) {
    for (int g : t.hom(om[s.src(e)], om[s.dst(e)])) {
      if (left.base_arrow[g] == strict.base_arrow[e]) am[e] = g;
    }
  }
  return make_functor(strict.category, left.category, std::move(om), std::move(am));
}

bool is_cocartesian(const FunctorData& f, int u) {
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  if (u < 0 || u >= c.arrow_count()) {
    throw Error(ErrorKind::UnknownArrow, "arrow index " + std::to_string(u));
  }
  const int x = c.src(u);
  const int y = c.dst(u);
  const int fu = f.arrow_map[u];
  const int id_fy = d.identity(f.object_map[y]);
  for (int v : c.out_arrows(x)) {
    if (f.arrow_map[v] != fu) continue;
    int factorizations = 0;
    for (int w : c.hom(y, c.dst(v))) {
      if (f.arrow_map[w] == id_fy && c.compose(w, u) == v) ++factorizations;
    }
    if (factorizations != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::MissingComposite: return "MissingComposite";
    case ErrorKind::ConflictingComposite: return "ConflictingComposite";
    case ErrorKind::IllTypedComposite: return "IllTypedComposite";
    case ErrorKind::IdentityLaw: return "IdentityLaw";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::UnknownObject: return "UnknownObject";
    case ErrorKind::UnknownArrow: return "UnknownArrow";
    case ErrorKind::NotAFunctor: return "NotAFunctor";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotT0: return "NotT0";
    case ErrorKind::InvalidTopology: return "InvalidTopology";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OutOfTruncation: return "OutOfTruncation";
    case ErrorKind::Ungraded: return "Ungraded";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

bool is_theorem_violation(ErrorKind kind) {
  return kind == ErrorKind::NotAPoset || kind == ErrorKind::TheoremViolation;
}

}  // namespace sdcat

#include "sdcat/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace sdcat {

// ---------------------------------------------------------------------------
// Congruence

Congruence::Congruence(std::shared_ptr<const DeltaCategory> delta, std::vector<int> representative)
    : delta_(std::move(delta)), representative_(std::move(representative)) {}

std::size_t Congruence::class_count() const {
  std::size_t n = 0;
  for (std::size_t a = 0; a < representative_.size(); ++a) {
    n += representative_[a] == static_cast<int>(a);
  }
  return n;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  /// Links the larger root under the smaller one, so roots are class minima.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Memoised rows of the order-map composition table, filled on first use.
class ComposeCache {
 public:
  explicit ComposeCache(const OrderMapTable& table) : table_(table), rows_(table.size()) {}

  int operator()(int outer, int inner) {
    const int p = table_.map(outer).source_dim;
    auto& row = rows_[outer];
    if (row.empty()) {
      row.resize(table_.count_into(p));
      for (int k = 0; k < table_.count_into(p); ++k) {
        row[k] = table_.compose(outer, table_.base(p) + k);
      }
    }
    return row[inner - table_.base(p)];
  }

 private:
  const OrderMapTable& table_;
  std::vector<std::vector<int>> rows_;
};

}  // namespace

Congruence congruence_closure(std::shared_ptr<const DeltaCategory> delta_ptr) {
  const DeltaCategory& delta = *delta_ptr;
  const FinCategory& c = delta.base();
  const OrderMapTable& table = delta.maps();
  UnionFind uf(delta.arrow_count());
  ComposeCache cache(table);
  auto compose = [&](int g, int f) {
    return delta.arrow(delta.target(g), cache(delta.map_id(g), delta.map_id(f)));
  };

  // Every arrow of the truncation is a composite of cofaces and
  // codegeneracies inside it, so compatibility only has to be propagated
  // along these elementary arrows.
  std::vector<std::vector<int>> elementary_out(delta.object_count());
  std::vector<std::vector<int>> elementary_in(delta.object_count());
  auto add_elementary = [&](int e) {
    elementary_out[delta.source(e)].push_back(e);
    elementary_in[delta.target(e)].push_back(e);
  };
  std::vector<std::pair<int, int>> work;
  for (int y = 0; y < delta.object_count(); ++y) {
    const int p = delta.dim(y);
    for (int i = 0; p > 0 && i <= p; ++i) add_elementary(delta.arrow(y, table.id_of(OrderMap::coface(p, i))));
    if (p + 1 > delta.cap()) continue;
    for (int i = 0; i <= p; ++i) {
      const int x = *delta.find(degenerate(c, delta.simplex(y), i));
      add_elementary(delta.arrow(y, table.id_of(OrderMap::codegeneracy(p, i))));
      work.emplace_back(delta.arrow(x, table.id_of(OrderMap::coface(p + 1, i))),
                        delta.arrow(x, table.id_of(OrderMap::coface(p + 1, i + 1))));
    }
  }

  while (!work.empty()) {
    const auto [a, b] = work.back();
    work.pop_back();
    if (!uf.unite(a, b)) continue;
    for (int g : elementary_out[delta.target(a)]) {
      const int ga = compose(g, a);
      const int gb = compose(g, b);
      if (ga != gb) work.emplace_back(ga, gb);
    }
    for (int h : elementary_in[delta.source(a)]) {
      const int ah = compose(a, h);
      const int bh = compose(b, h);
      if (ah != bh) work.emplace_back(ah, bh);
    }
  }

  std::vector<int> rep(delta.arrow_count());
  for (int a = 0; a < delta.arrow_count(); ++a) rep[a] = uf.find(a);
  return Congruence(std::move(delta_ptr), std::move(rep));
}

// ---------------------------------------------------------------------------
// Reduction

ReductionData reduce(const FinCategory& c, const Simplex& x) {
  ReductionData out;
  out.reduced.vertices.push_back(x.vertices.front());
  out.alpha.source_dim = x.dim();
  out.alpha.values.push_back(0);
  for (int i = 0; i < x.dim(); ++i) {
    const int f = x.arrows[i];
    if (!c.is_identity(f)) {
      out.reduced.arrows.push_back(f);
      out.reduced.vertices.push_back(c.dst(f));
    }
    out.alpha.values.push_back(out.reduced.dim());
  }
  out.alpha.target_dim = out.reduced.dim();
  return out;
}

OrderMap least_section(const OrderMap& s) {
  OrderMap d{s.target_dim, s.source_dim, std::vector<int>(s.target_dim + 1, -1)};
  for (int i = s.source_dim; i >= 0; --i) d.values[s.values[i]] = i;
  return d;
}

// ---------------------------------------------------------------------------
// SdCategory

std::optional<int> SdCategory::object_of(const Simplex& s) const {
  auto x = delta().find(s);
  if (!x || object_of_delta_[*x] < 0) return std::nullopt;
  return object_of_delta_[*x];
}

int SdCategory::arrow_of_delta(int a) const {
  const DeltaCategory& d = delta();
  if (object_of_delta_[d.source(a)] < 0 || object_of_delta_[d.target(a)] < 0) return -1;
  return arrow_of_representative_.at(congruence_->representative(a));
}

SdCategory sd_category(CategoryPtr c, const SdOptions& options) {
  if (options.cap < 0 || options.slack < 0) {
    throw Error(ErrorKind::IndexOutOfRange, "cap and slack must be non-negative");
  }
  auto delta =
      std::make_shared<const DeltaCategory>(c, options.cap + options.slack, options.budget);
  SdCategory sd;
  sd.cap_ = options.cap;
  sd.slack_ = options.slack;
  sd.congruence_ = std::make_shared<const Congruence>(congruence_closure(delta));
  const Congruence& cong = *sd.congruence_;
  const DeltaCategory& d = *delta;

  CategoryBuilder b;
  sd.object_of_delta_.assign(d.object_count(), -1);
  for (int x = 0; x < d.object_count(); ++x) {
    if (!d.nondegenerate(x) || d.dim(x) > options.cap) continue;
    sd.object_of_delta_[x] = static_cast<int>(sd.simplices_.size());
    sd.simplices_.push_back(d.simplex(x));
    sd.delta_object_.push_back(x);
    b.add_object(simplex_name(*c, d.simplex(x)));
  }
  const int n = static_cast<int>(sd.simplices_.size());
  sd.representative_.resize(n);
  sd.members_.resize(n);
  for (int x = 0; x < n; ++x) {
    const int id = d.identity(sd.delta_object_[x]);
    sd.representative_[x] = id;
    sd.members_[x] = {id};
    sd.arrow_of_representative_[cong.representative(id)] = b.identity(x);
  }

  // (source, target, representative) -> members
  std::map<std::tuple<int, int, int>, std::vector<int>> classes;
  for (int y = 0; y < n; ++y) {
    const int dy = sd.delta_object_[y];
    for (int a = d.in_begin(dy); a < d.in_end(dy); ++a) {
      const int x = sd.object_of_delta_[d.source(a)];
      if (x < 0) continue;
      if (x == y) {
        if (a != d.identity(dy)) {
          throw Error(ErrorKind::TheoremViolation,
                      "non-identity endomorphism of the nondegenerate simplex " + b.arrow(b.identity(y)).name);
        }
        continue;
      }
      classes[{x, y, cong.representative(a)}].push_back(a);
    }
  }
  for (auto& [key, members] : classes) {
    const auto& [x, y, rep] = key;
    if (sd.simplices_[x].dim() >= sd.simplices_[y].dim()) {
      throw Error(ErrorKind::TheoremViolation, "an arrow of Sd does not raise dimension");
    }
    std::string name = simplex_name(*c, sd.simplices_[x]) + ">" +
                       simplex_name(*c, sd.simplices_[y]) + "@" + to_string(d.order_map(rep));
    const int arrow = b.add_arrow(std::move(name), x, y);
    sd.representative_.push_back(rep);
    sd.members_.push_back(std::move(members));
    sd.arrow_of_representative_[rep] = arrow;
  }

  for (int f = 0; f < b.arrow_count(); ++f) {
    const int y = b.arrow(f).dst;
    for (int g = 0; g < b.arrow_count(); ++g) {
      if (b.arrow(g).src != y) continue;
      const int composite = cong.representative(d.compose(sd.representative_[g], sd.representative_[f]));
      const int gf = sd.arrow_of_representative_.at(composite);
      for (int mf : sd.members_[f]) {
        for (int mg : sd.members_[g]) {
          if (cong.representative(d.compose(mg, mf)) != composite) {
            throw Error(ErrorKind::TheoremViolation, "composition in Sd depends on representatives");
          }
        }
      }
      b.set_composite(g, f, gf);
    }
  }
  sd.category_ = std::make_shared<const FinCategory>(b.build());
  return sd;
}

// ---------------------------------------------------------------------------
// r, sup, ε

int r_on_arrow(const SdCategory& sd, const Simplex& x, const Simplex& y, const OrderMap& xi) {
  const FinCategory& c = sd.base();
  const ReductionData rx = reduce(c, x);
  const ReductionData ry = reduce(c, y);
  const auto ox = sd.object_of(rx.reduced);
  const auto oy = sd.object_of(ry.reduced);
  if (!ox || !oy) {
    throw Error(ErrorKind::OutOfTruncation,
                "r of " + simplex_name(c, y) + " lies above the cap " + std::to_string(sd.cap()));
  }
  const OrderMap rep = compose(ry.alpha, compose(xi, least_section(rx.alpha)));
  const DeltaCategory& d = sd.delta();
  const int a = d.arrow(sd.delta_object(*oy), d.maps().id_of(rep));
  if (d.source(a) != sd.delta_object(*ox)) {
    throw Error(ErrorKind::TheoremViolation, "r does not preserve the source simplex");
  }
  return sd.arrow_of_delta(a);
}

int sup_arrow(const FinCategory& c, const Simplex& y, const OrderMap& xi) {
  return composite_between(c, y, xi.values.back(), y.dim());
}

FunctorData epsilon(const SdCategory& sd) {
  const FinCategory& s = sd.category();
  const FinCategory& c = sd.base();
  const DeltaCategory& d = sd.delta();
  std::vector<int> om(s.object_count());
  std::vector<int> am(s.arrow_count());
  for (int x = 0; x < s.object_count(); ++x) om[x] = sd.simplex(x).last();
  for (int f = 0; f < s.arrow_count(); ++f) {
    const Simplex& y = sd.simplex(s.dst(f));
    am[f] = sup_arrow(c, y, sd.representative_map(f));
    for (int m : sd.members(f)) {
      if (sup_arrow(c, y, d.order_map(m)) != am[f]) {
        throw Error(ErrorKind::TheoremViolation, "sup is not constant on the class " + s.arrow_name(f));
      }
    }
  }
  return make_functor(sd.category_ptr(), sd.base_ptr(), std::move(om), std::move(am));
}

namespace {

Simplex push_forward(const FunctorData& f, const Simplex& x) {
  Simplex out;
  for (int v : x.vertices) out.vertices.push_back(f.object_map[v]);
  for (int a : x.arrows) out.arrows.push_back(f.arrow_map[a]);
  return out;
}

}  // namespace

FunctorData sd_functor(const FunctorData& f, const SdCategory& source, const SdCategory& target) {
  if (!(source.base() == *f.source) || !(target.base() == *f.target)) {
    throw Error(ErrorKind::NotAFunctor, "subdivisions are not built over the functor's categories");
  }
  const FinCategory& s = source.category();
  const FinCategory& t = target.category();
  const FinCategory& d = *f.target;
  const DeltaCategory& delta = source.delta();
  std::vector<int> om(s.object_count());
  std::vector<int> am(s.arrow_count());
  for (int x = 0; x < s.object_count(); ++x) {
    const Simplex reduced = reduce(d, push_forward(f, source.simplex(x))).reduced;
    const auto y = target.object_of(reduced);
    if (!y) throw Error(ErrorKind::OutOfTruncation, "r(f X) for X = " + s.object_name(x));
    om[x] = *y;
  }
  for (int a = 0; a < s.arrow_count(); ++a) {
    const Simplex fx = push_forward(f, source.simplex(s.src(a)));
    const Simplex fy = push_forward(f, source.simplex(s.dst(a)));
    am[a] = -1;
    for (int m : source.members(a)) {
      const int image = r_on_arrow(target, fx, fy, delta.order_map(m));
      if (am[a] >= 0 && am[a] != image) {
        throw Error(ErrorKind::TheoremViolation, "Sd(f) depends on the representative of " + s.arrow_name(a));
      }
      am[a] = image;
    }
  }
  try {
    return make_functor(source.category_ptr(), target.category_ptr(), std::move(om), std::move(am));
  } catch (const Error& e) {
    throw Error(ErrorKind::TheoremViolation, std::string("Sd(f) is not a functor: ") + e.what());
  }
  (void)t;
}

// ---------------------------------------------------------------------------
// Sd²

Sd2Result sd2_poset(CategoryPtr c, const SdOptions& options) {
  SdCategory first = sd_category(c, options);
  const auto top = top_nondegenerate_dim(first.category());
  if (!top) throw Error(ErrorKind::TheoremViolation, "Sd(C) has a cycle of non-identity arrows");
  // Hom-sets between nondegenerate simplices of N(Sd C) already have at most
  // one element before the quotient, so no slack is needed here.
  SdOptions second_options{*top, 0, options.budget};
  SdCategory second = sd_category(first.category_ptr(), second_options);
  const FinCategory& s2 = second.category();
  const int n = s2.object_count();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto hom = s2.hom(x, y);
      if (hom.size() > 1) {
        throw Error(ErrorKind::NotAPoset, "two arrows " + s2.object_name(x) + " -> " + s2.object_name(y));
      }
      leq[x][y] = !hom.empty();
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (leq[x][y] && leq[y][x]) {
        throw Error(ErrorKind::NotAPoset, s2.object_name(x) + " and " + s2.object_name(y) +
                                              " are isomorphic");
      }
    }
  }
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) names.push_back(s2.object_name(x));
  Poset poset;
  try {
    poset = Poset(std::move(names), std::move(leq));
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAPoset, e.what());
  }
  return Sd2Result{std::move(poset), std::move(first), std::move(second)};
}

StabilizationReport stabilization_check(CategoryPtr c, int cap, const std::vector<int>& slacks,
                                        Budget budget) {
  StabilizationReport report;
  report.cap = cap;
  report.slacks = slacks;
  for (int slack : slacks) {
    const SdCategory sd = sd_category(c, SdOptions{cap, slack, budget});
    const FinCategory& s = sd.category();
    std::map<std::pair<std::string, std::string>, int> census;
    for (int f = 0; f < s.arrow_count(); ++f) {
      ++census[{s.object_name(s.src(f)), s.object_name(s.dst(f))}];
    }
    report.census.push_back(std::move(census));
  }
  const std::size_t k = report.census.size();
  report.stable = k >= 2 && report.census[k - 1] == report.census[k - 2];
  return report;
}

// ---------------------------------------------------------------------------
// Truncations as finite categories

namespace {

TruncatedSimplexCategory package(const DeltaCategory& d, int cap,
                                 const std::function<int(int)>& representative) {
  const FinCategory& c = d.base();
  TruncatedSimplexCategory out;
  CategoryBuilder b;
  std::vector<int> object_of(d.object_count(), -1);
  for (int x = 0; x < d.object_count(); ++x) {
    if (d.dim(x) > cap) continue;
    object_of[x] = b.add_object(simplex_name(c, d.simplex(x)));
    out.delta_object.push_back(x);
  }
  std::unordered_map<int, int> arrow_of;  // representative -> arrow
  for (std::size_t k = 0; k < out.delta_object.size(); ++k) {
    const int x = out.delta_object[k];
    arrow_of[representative(d.identity(x))] = b.identity(static_cast<int>(k));
    out.delta_arrow.push_back(d.identity(x));
  }
  std::vector<int> rep_arrows;
  for (int y : out.delta_object) {
    for (int a = d.in_begin(y); a < d.in_end(y); ++a) {
      if (object_of[d.source(a)] < 0) continue;
      const int r = representative(a);
      if (r != a || arrow_of.count(r)) continue;
      const Simplex& xs = d.simplex(d.source(a));
      const int arrow = b.add_arrow(simplex_name(c, xs) + ">" + simplex_name(c, d.simplex(y)) + "@" +
                                        to_string(d.order_map(a)),
                                    object_of[d.source(a)], object_of[y]);
      arrow_of[r] = arrow;
      out.delta_arrow.push_back(a);
    }
  }
  for (int f = 0; f < b.arrow_count(); ++f) {
    for (int g = 0; g < b.arrow_count(); ++g) {
      if (b.arrow(g).src != b.arrow(f).dst) continue;
      b.set_composite(g, f, arrow_of.at(representative(d.compose(out.delta_arrow[g], out.delta_arrow[f]))));
    }
  }
  out.category = std::make_shared<const FinCategory>(b.build());
  const FinCategory& cat = *out.category;
  std::vector<int> om(cat.object_count());
  std::vector<int> am(cat.arrow_count());
  for (int x = 0; x < cat.object_count(); ++x) om[x] = d.simplex(out.delta_object[x]).last();
  for (int f = 0; f < cat.arrow_count(); ++f) {
    const int a = out.delta_arrow[f];
    am[f] = sup_arrow(c, d.simplex(d.target(a)), d.order_map(a));
  }
  out.sup = make_functor(out.category, d.base_ptr(), std::move(om), std::move(am));
  return out;
}

}  // namespace

TruncatedSimplexCategory delta_as_category(std::shared_ptr<const DeltaCategory> delta) {
  return package(*delta, delta->cap(), [](int a) { return a; });
}

TruncatedSimplexCategory quotient_as_category(const Congruence& congruence, int cap) {
  const DeltaCategory& d = congruence.delta();
  if (cap > d.cap()) throw Error(ErrorKind::OutOfTruncation, "cap exceeds the congruence window");
  // sup must be constant on every class of arrows inside the window.
  for (int a = 0; a < d.arrow_count(); ++a) {
    if (d.dim(d.target(a)) > cap || d.dim(d.source(a)) > cap) continue;
    const int r = congruence.representative(a);
    if (sup_arrow(d.base(), d.simplex(d.target(a)), d.order_map(a)) !=
        sup_arrow(d.base(), d.simplex(d.target(r)), d.order_map(r))) {
      throw Error(ErrorKind::TheoremViolation, "sup is not constant on a congruence class");
    }
  }
  return package(d, cap, [&](int a) { return congruence.representative(a); });
}

}  // namespace sdcat

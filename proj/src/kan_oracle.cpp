#include "sdcat/kan_oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "sdcat/subdivision.hpp"

namespace sdcat {

bool TruncatedSimplicialSet::nondegenerate(int n, int k) const {
  if (n == 0) return true;
  for (int x = 0; x < size(n - 1); ++x) {
    for (int d : degeneracies[n - 1][x]) {
      if (d == k) return false;
    }
  }
  return true;
}

std::size_t TruncatedSimplicialSet::nondegenerate_count(int n) const {
  std::vector<bool> hit(size(n), false);
  if (n > 0) {
    for (const auto& ds : degeneracies[n - 1]) {
      for (int d : ds) hit[d] = true;
    }
  }
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), false));
}

void check_simplicial_identities(const TruncatedSimplicialSet& k) {
  auto fail = [](const std::string& what, int n, int x) {
    throw Error(ErrorKind::TheoremViolation,
                what + " fails on simplex " + std::to_string(x) + " of level " + std::to_string(n));
  };
  const int top = k.top();
  for (int n = 0; n <= top; ++n) {
    for (int x = 0; x < k.size(n); ++x) {
      for (int j = 0; j <= n && n >= 2; ++j) {
        for (int i = 0; i < j; ++i) {
          if (k.face(n - 1, k.face(n, x, j), i) != k.face(n - 1, k.face(n, x, i), j - 1)) {
            fail("d_i d_j = d_{j-1} d_i", n, x);
          }
        }
      }
      if (n + 2 <= top) {
        for (int j = 0; j <= n; ++j) {
          for (int i = 0; i <= j; ++i) {
            if (k.degeneracy(n + 1, k.degeneracy(n, x, j), i) !=
                k.degeneracy(n + 1, k.degeneracy(n, x, i), j + 1)) {
              fail("s_i s_j = s_{j+1} s_i", n, x);
            }
          }
        }
      }
      if (n + 1 <= top) {
        for (int j = 0; j <= n; ++j) {
          const int s = k.degeneracy(n, x, j);
          for (int i = 0; i <= n + 1; ++i) {
            const int lhs = k.face(n + 1, s, i);
            int rhs;
            if (i == j || i == j + 1) {
              rhs = x;
            } else if (i < j) {
              rhs = k.degeneracy(n - 1, k.face(n, x, i), j - 1);
            } else {
              rhs = k.degeneracy(n - 1, k.face(n, x, i - 1), j);
            }
            if (lhs != rhs) fail("d_i s_j", n, x);
          }
        }
      }
    }
  }
}

TruncatedSimplicialSet nerve_sset(const FinCategory& c, int top) {
  const NerveEnumeration nerve = enumerate_simplices(c, top, 1'000'000);
  TruncatedSimplicialSet k;
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> index(top + 1);
  k.names.resize(top + 1);
  k.faces.resize(top + 1);
  k.degeneracies.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    for (const Simplex& s : nerve.simplices[n]) {
      index[n].emplace(s, k.size(n));
      k.names[n].push_back(simplex_name(c, s));
    }
  }
  for (int n = 0; n <= top; ++n) {
    for (const Simplex& s : nerve.simplices[n]) {
      std::vector<int> fs;
      std::vector<int> ds;
      for (int i = 0; n > 0 && i <= n; ++i) fs.push_back(index[n - 1].at(face(c, s, i)));
      for (int i = 0; n < top && i <= n; ++i) ds.push_back(index[n + 1].at(degenerate(c, s, i)));
      k.faces[n].push_back(std::move(fs));
      k.degeneracies[n].push_back(std::move(ds));
    }
  }
  return k;
}

// ---------------------------------------------------------------------------
// Kan subdivision

namespace {

std::string mask_name(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!(mask >> i & 1u)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

/// Positions of `mask` relative to the elements of `within`.
std::uint32_t relative(std::uint32_t mask, std::uint32_t within) {
  std::uint32_t out = 0;
  int rank = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(within >> i & 1u)) continue;
    if (mask >> i & 1u) out |= 1u << rank;
    ++rank;
  }
  return out;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const TruncatedSimplicialSet& k) : k_(k) {}

  /// The canonical form of (σ ∈ K_n, chain): restrict σ to the top set,
  /// then split off the degenerate part and push the chain through it.
  KanSubdivision::Key operator()(int n, int sigma, std::vector<std::uint32_t> chain) const {
    const std::uint32_t top = chain.back();
    int cur = n;
    for (int j = n; j >= 0; --j) {
      if (!(top >> j & 1u)) {
        sigma = k_.face(cur, sigma, j);
        --cur;
      }
    }
    for (auto& s : chain) s = relative(s, top);
    std::vector<int> eta(cur + 1);
    std::iota(eta.begin(), eta.end(), 0);
    for (bool found = true; found && cur > 0;) {
      found = false;
      for (int i = 0; i < cur; ++i) {
        const int rho = k_.face(cur, sigma, i);
        if (k_.degeneracy(cur - 1, rho, i) == sigma) {
          sigma = rho;
          for (int& v : eta) v -= v > i;
          --cur;
          found = true;
          break;
        }
      }
    }
    for (auto& s : chain) {
      std::uint32_t image = 0;
      for (int i = 0; i < static_cast<int>(eta.size()); ++i) {
        if (s >> i & 1u) image |= 1u << eta[i];
      }
      s = image;
    }
    return {cur, sigma, std::move(chain)};
  }

 private:
  const TruncatedSimplicialSet& k_;
};

void chains_below(std::uint32_t top, int remaining, std::vector<std::uint32_t>& suffix,
                  std::vector<std::vector<std::uint32_t>>& out) {
  if (remaining == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  // nonempty submasks of top, in increasing order
  std::vector<std::uint32_t> subs;
  for (std::uint32_t s = top; s; s = (s - 1) & top) subs.push_back(s);
  std::reverse(subs.begin(), subs.end());
  for (std::uint32_t s : subs) {
    suffix.push_back(s);
    chains_below(s, remaining - 1, suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

KanSubdivision kan_sd(const TruncatedSimplicialSet& k, int levels) {
  if (k.top() > 30) throw Error(ErrorKind::CapExceeded, "simplicial set too high for bitmask chains");
  KanSubdivision sd;
  TruncatedSimplicialSet& out = sd.sset;
  out.names.resize(levels + 1);
  out.faces.resize(levels + 1);
  out.degeneracies.resize(levels + 1);
  sd.keys.resize(levels + 1);
  sd.index.resize(levels + 1);
  for (int m = 0; m <= levels; ++m) {
    for (int n = 0; n <= k.top(); ++n) {
      const std::uint32_t full = (n == 31) ? ~0u : ((1u << (n + 1)) - 1);
      for (int tau = 0; tau < k.size(n); ++tau) {
        if (!k.nondegenerate(n, tau)) continue;
        std::vector<std::vector<std::uint32_t>> chains;
        std::vector<std::uint32_t> suffix{full};
        chains_below(full, m, suffix, chains);
        for (auto& chain : chains) {
          std::string name = k.names[n][tau];
          if (m > 0) {
            name += "|";
            for (auto s : chain) name += mask_name(s);
          }
          KanSubdivision::Key key{n, tau, std::move(chain)};
          sd.index[m].emplace(key, static_cast<int>(sd.keys[m].size()));
          sd.keys[m].push_back(std::move(key));
          out.names[m].push_back(std::move(name));
        }
      }
    }
  }
  const Canonicalizer canonical(k);
  for (int m = 0; m <= levels; ++m) {
    for (const auto& key : sd.keys[m]) {
      std::vector<int> fs;
      for (int j = 0; m > 0 && j <= m; ++j) {
        std::vector<std::uint32_t> chain = key.chain;
        chain.erase(chain.begin() + j);
        const auto face_key = j < m ? KanSubdivision::Key{key.dim, key.simplex, std::move(chain)}
                                    : canonical(key.dim, key.simplex, std::move(chain));
        fs.push_back(sd.index[m - 1].at(face_key));
      }
      std::vector<int> ds;
      for (int j = 0; m < levels && j <= m; ++j) {
        std::vector<std::uint32_t> chain = key.chain;
        chain.insert(chain.begin() + j, chain[j]);
        ds.push_back(sd.index[m + 1].at(KanSubdivision::Key{key.dim, key.simplex, std::move(chain)}));
      }
      out.faces[m].push_back(std::move(fs));
      out.degeneracies[m].push_back(std::move(ds));
    }
  }
  return sd;
}

// ---------------------------------------------------------------------------
// Fundamental category

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
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

struct WordHash {
  std::size_t operator()(const std::vector<int>& w) const noexcept {
    std::size_t h = w.size();
    for (int x : w) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

struct Graph {
  std::vector<int> gens;  // nondegenerate edges
  std::vector<int> src, dst;  // per edge id of level 1
  std::vector<bool> nondegenerate_edge;
};

Graph edge_graph(const TruncatedSimplicialSet& k) {
  Graph g;
  const int edges = k.top() >= 1 ? k.size(1) : 0;
  g.src.resize(edges);
  g.dst.resize(edges);
  g.nondegenerate_edge.assign(edges, false);
  for (int e = 0; e < edges; ++e) {
    g.src[e] = k.face(1, e, 1);
    g.dst[e] = k.face(1, e, 0);
    if (k.nondegenerate(1, e)) {
      g.nondegenerate_edge[e] = true;
      g.gens.push_back(e);
    }
  }
  return g;
}

bool acyclic(const TruncatedSimplicialSet& k, const Graph& g) {
  const int n = k.size(0);
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> next(n);
  for (int e : g.gens) {
    next[g.src[e]].push_back(g.dst[e]);
    ++indegree[g.dst[e]];
  }
  std::vector<int> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : next[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return seen == n;
}

std::string word_name(const TruncatedSimplicialSet& k, const std::vector<int>& word) {
  if (word.size() == 1) return k.names[1][word[0]];
  std::string out = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ";";
    out += k.names[1][word[i]];
  }
  return out + "]";
}

bool shortlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

FinCategory graded_category(const TruncatedSimplicialSet& k, const Graph& g, std::size_t max_paths,
                            std::vector<int>* edge_arrows) {
  const int n = k.size(0);
  std::vector<std::vector<int>> out_gens(n);
  for (int e : g.gens) out_gens[g.src[e]].push_back(e);

  std::vector<std::vector<int>> words;
  std::vector<int> word_src, word_dst;
  std::unordered_map<std::vector<int>, int, WordHash> word_id;
  std::vector<std::vector<int>> from(n), into(n);
  for (int v = 0; v < n; ++v) {
    // depth-first enumeration of all paths out of v, the empty one first
    std::vector<int> path;
    std::function<void(int)> walk = [&](int at) {
      if (words.size() >= max_paths) {
        throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(max_paths) + " paths");
      }
      const int id = static_cast<int>(words.size());
      words.push_back(path);
      word_src.push_back(v);
      word_dst.push_back(at);
      from[v].push_back(id);
      into[at].push_back(id);
      for (int e : out_gens[at]) {
        path.push_back(e);
        walk(g.dst[e]);
        path.pop_back();
      }
    };
    walk(v);
  }
  // empty words of different vertices coincide as vectors, so key them apart
  auto key = [&](int src, const std::vector<int>& w) {
    std::vector<int> kw;
    kw.reserve(w.size() + 1);
    kw.push_back(src);
    kw.insert(kw.end(), w.begin(), w.end());
    return kw;
  };
  for (std::size_t id = 0; id < words.size(); ++id) word_id.emplace(key(word_src[id], words[id]), id);

  UnionFind uf(words.size());
  auto as_word = [&](int e) { return g.nondegenerate_edge[e] ? std::vector<int>{e} : std::vector<int>{}; };
  if (k.top() >= 2) {
    for (int s = 0; s < k.size(2); ++s) {
      const int e2 = k.face(2, s, 2);
      const int e0 = k.face(2, s, 0);
      const int e1 = k.face(2, s, 1);
      std::vector<int> lhs = as_word(e2);
      const auto tail = as_word(e0);
      lhs.insert(lhs.end(), tail.begin(), tail.end());
      const std::vector<int> rhs = as_word(e1);
      if (lhs == rhs) continue;
      const int a = g.src[e2];
      const int b = g.dst[e0];
      for (int u : into[a]) {
        for (int v : from[b]) {
          std::vector<int> left = words[u];
          std::vector<int> right = words[u];
          left.insert(left.end(), lhs.begin(), lhs.end());
          right.insert(right.end(), rhs.begin(), rhs.end());
          left.insert(left.end(), words[v].begin(), words[v].end());
          right.insert(right.end(), words[v].begin(), words[v].end());
          const int src = word_src[u];
          uf.unite(word_id.at(key(src, left)), word_id.at(key(src, right)));
        }
      }
    }
  }

  // minimal word of each class
  std::vector<int> best(words.size(), -1);
  for (std::size_t id = 0; id < words.size(); ++id) {
    const int r = uf.find(static_cast<int>(id));
    if (best[r] < 0 || shortlex_less(words[id], words[best[r]])) best[r] = static_cast<int>(id);
  }
  CategoryBuilder b;
  for (int v = 0; v < n; ++v) b.add_object(k.names[0][v]);
  std::vector<int> arrow_of(words.size(), -1);
  std::vector<std::tuple<int, int, std::vector<int>, int>> classes;
  for (std::size_t id = 0; id < words.size(); ++id) {
    if (uf.find(static_cast<int>(id)) != static_cast<int>(id)) continue;
    const int w = best[id];
    if (words[w].empty()) {
      arrow_of[id] = b.identity(word_src[w]);
    } else {
      classes.emplace_back(word_src[w], word_dst[w], words[w], static_cast<int>(id));
    }
  }
  std::sort(classes.begin(), classes.end());
  for (const auto& [s, t, w, root] : classes) arrow_of[root] = b.add_arrow(word_name(k, w), s, t);

  std::vector<int> rep(b.arrow_count());
  for (std::size_t id = 0; id < words.size(); ++id) {
    if (uf.find(static_cast<int>(id)) == static_cast<int>(id)) rep[arrow_of[id]] = best[id];
  }
  for (int f = 0; f < b.arrow_count(); ++f) {
    for (int h = 0; h < b.arrow_count(); ++h) {
      if (b.arrow(h).src != b.arrow(f).dst) continue;
      std::vector<int> w = words[rep[f]];
      w.insert(w.end(), words[rep[h]].begin(), words[rep[h]].end());
      b.set_composite(h, f, arrow_of[uf.find(word_id.at(key(b.arrow(f).src, w)))]);
    }
  }
  if (edge_arrows) {
    edge_arrows->assign(g.src.size(), -1);
    for (std::size_t e = 0; e < g.src.size(); ++e) {
      (*edge_arrows)[e] = g.nondegenerate_edge[e]
                              ? arrow_of[uf.find(word_id.at(key(g.src[e], {static_cast<int>(e)})))]
                              : b.identity(g.src[e]);
    }
  }
  return b.build();
}

FinCategory reduced_category(const TruncatedSimplicialSet& k, const Graph& g,
                             std::vector<int>* edge_arrows) {
  const int n = k.size(0);
  // elements: identities 0..n-1, then generators
  std::vector<int> element_of_edge(g.src.size());
  std::vector<int> esrc(n), edst(n), edge_of_element(n, -1);
  std::iota(esrc.begin(), esrc.end(), 0);
  std::iota(edst.begin(), edst.end(), 0);
  for (std::size_t e = 0; e < g.src.size(); ++e) {
    if (g.nondegenerate_edge[e]) {
      element_of_edge[e] = static_cast<int>(esrc.size());
      esrc.push_back(g.src[e]);
      edst.push_back(g.dst[e]);
      edge_of_element.push_back(static_cast<int>(e));
    } else {
      element_of_edge[e] = g.src[e];
    }
  }
  const int count = static_cast<int>(esrc.size());
  std::vector<std::tuple<int, int, int>> relations;  // (a, b, c): b ∘ a = c
  for (int a = 0; a < count; ++a) {
    relations.emplace_back(edst[a], a, a);
    relations.emplace_back(a, esrc[a], a);
  }
  if (k.top() >= 2) {
    for (int s = 0; s < k.size(2); ++s) {
      relations.emplace_back(element_of_edge[k.face(2, s, 0)], element_of_edge[k.face(2, s, 2)],
                             element_of_edge[k.face(2, s, 1)]);
    }
  }
  std::set<std::pair<int, int>> filled;
  for (const auto& [b, a, c] : relations) filled.emplace(b, a);
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (esrc[b] == edst[a] && !filled.count({b, a})) {
        throw Error(ErrorKind::Ungraded, "no 2-simplex fills the pair " +
                                             std::to_string(a) + ", " + std::to_string(b) +
                                             " and the edge graph has a cycle");
      }
    }
  }

  UnionFind uf(count);
  std::map<std::pair<int, int>, int> table;
  for (bool changed = true; changed;) {
    changed = false;
    table.clear();
    for (const auto& [b, a, c] : relations) {
      const auto [it, fresh] = table.emplace(std::make_pair(uf.find(b), uf.find(a)), uf.find(c));
      if (!fresh && uf.unite(it->second, c)) changed = true;
    }
    if (changed) continue;
    std::vector<int> roots;
    for (int a = 0; a < count; ++a) {
      if (uf.find(a) == a) roots.push_back(a);
    }
    // stop at the first merge: the table is keyed by the current roots
    auto associativity_merge = [&] {
      for (int a : roots) {
        for (int b : roots) {
          if (esrc[b] != edst[a]) continue;
          for (int c : roots) {
            if (esrc[c] != edst[b]) continue;
            const int left = table.at({c, uf.find(table.at({b, a}))});
            const int right = table.at({uf.find(table.at({c, b})), a});
            if (uf.unite(left, right)) return true;
          }
        }
      }
      return false;
    };
    changed = associativity_merge();
  }

  CategoryBuilder builder;
  for (int v = 0; v < n; ++v) builder.add_object(k.names[0][v]);
  std::vector<int> arrow_of(count, -1);
  for (int v = 0; v < n; ++v) arrow_of[uf.find(v)] = builder.identity(v);
  for (int a = n; a < count; ++a) {
    if (uf.find(a) == a && arrow_of[a] < 0) {
      arrow_of[a] = builder.add_arrow(k.names[1][edge_of_element[a]], esrc[a], edst[a]);
    }
  }
  for (const auto& [ba, c] : table) {
    builder.set_composite(arrow_of[ba.first], arrow_of[ba.second], arrow_of[uf.find(c)]);
  }
  if (edge_arrows) {
    edge_arrows->assign(g.src.size(), -1);
    for (std::size_t e = 0; e < g.src.size(); ++e) (*edge_arrows)[e] = arrow_of[uf.find(element_of_edge[e])];
  }
  return builder.build();
}

}  // namespace

FinCategory fundamental_category(const TruncatedSimplicialSet& k, std::size_t max_paths,
                                 std::vector<int>* edge_arrows) {
  const Graph g = edge_graph(k);
  if (acyclic(k, g)) return graded_category(k, g, max_paths, edge_arrows);
  return reduced_category(k, g, edge_arrows);
}

// ---------------------------------------------------------------------------
// Comparison

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "Match";
    case Verdict::Mismatch:
      return "Mismatch";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

// Arrow bijection with a fixed object map, respecting composition.
class HomSearch {
 public:
  HomSearch(const FinCategory& a, const FinCategory& b, std::vector<int> objects, std::size_t budget)
      : a_(a), b_(b), objects_(std::move(objects)), budget_(budget),
        map_(a.arrow_count(), -1), used_(b.arrow_count(), false) {}

  std::optional<bool> run() {
    try {
      return step(0);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  const std::vector<int>& map() const { return map_; }

 private:
  bool step(int f) {
    if (++nodes_ > budget_) throw Error(ErrorKind::BudgetExceeded, "hom search");
    if (f == a_.arrow_count()) return true;
    const int x = objects_[a_.src(f)];
    const int y = objects_[a_.dst(f)];
    std::vector<int> candidates;
    if (a_.is_identity(f)) {
      candidates.push_back(b_.identity(x));
    } else {
      candidates = b_.hom(x, y);
    }
    for (int c : candidates) {
      if (used_[c]) continue;
      map_[f] = c;
      used_[c] = true;
      if (consistent(f) && step(f + 1)) return true;
      used_[c] = false;
      map_[f] = -1;
    }
    return false;
  }

  bool consistent(int f) const {
    for (int g = 0; g <= f; ++g) {
      for (int h = 0; h <= f; ++h) {
        if (g != f && h != f) continue;
        if (a_.dst(h) != a_.src(g)) continue;
        const int gh = a_.compose(g, h);
        if (map_[gh] >= 0 && b_.compose(map_[g], map_[h]) != map_[gh]) return false;
      }
    }
    return true;
  }

  const FinCategory& a_;
  const FinCategory& b_;
  std::vector<int> objects_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

OracleReport oracle_compare(CategoryPtr c, int cap, int slack, Budget budget) {
  OracleReport report;
  report.cap = cap;
  report.slack = slack;
  try {
    const SdCategory sd = sd_category(c, SdOptions{cap, slack, budget});
    const FinCategory& intrinsic = sd.category();
    const TruncatedSimplicialSet nerve = nerve_sset(*c, cap);
    const KanSubdivision kan = kan_sd(nerve, 2);
    std::vector<int> edge_arrows;
    const FinCategory oracle = fundamental_category(kan.sset, 2'000'000, &edge_arrows);

    std::vector<int> objects(intrinsic.object_count(), -1);
    for (int x = 0; x < intrinsic.object_count(); ++x) {
      const auto y = oracle.find_object(intrinsic.object_name(x));
      if (!y) {
        report.verdict = Verdict::Mismatch;
        report.note = "object " + intrinsic.object_name(x) + " has no barycenter";
        return report;
      }
      objects[x] = *y;
    }
    if (oracle.object_count() != intrinsic.object_count()) {
      report.verdict = Verdict::Mismatch;
      report.note = "barycenters without an intrinsic object";
      return report;
    }

    std::optional<std::tuple<int, int, std::string, std::string>> witness;
    for (int x = 0; x < intrinsic.object_count(); ++x) {
      for (int y = 0; y < intrinsic.object_count(); ++y) {
        const int left = static_cast<int>(intrinsic.hom(x, y).size());
        const int right = static_cast<int>(oracle.hom(objects[x], objects[y]).size());
        if (left == 0 && right == 0) continue;
        report.census[{intrinsic.object_name(x), intrinsic.object_name(y)}] = {left, right};
        if (left != right) {
          auto cand = std::make_tuple(std::max(left, right), sd.dim(x) + sd.dim(y),
                                      intrinsic.object_name(x), intrinsic.object_name(y));
          if (!witness || cand < *witness) witness = cand;
        }
      }
    }
    if (witness) {
      report.verdict = Verdict::Mismatch;
      report.witness = {std::get<2>(*witness), std::get<3>(*witness)};
      report.note = "hom-set sizes differ";
      return report;
    }

    // canonical map: [i] : X -> Y goes to the edge (Y, image of i ⊂ [q_Y])
    std::vector<int> arrows(intrinsic.arrow_count(), -1);
    bool canonical = true;
    auto edge_arrow = [&](int member, int y) -> int {
      const OrderMap& map = sd.delta().order_map(member);
      const int ny = sd.dim(y);
      const auto& level = kan.index[1];
      std::uint32_t image = 0;
      for (int v : map.values) image |= 1u << v;
      const std::uint32_t full = (1u << (ny + 1)) - 1;
      const KanSubdivision::Key& vertex = kan.keys[0][objects[y]];
      const int tau = vertex.simplex;
      const auto it = level.find(KanSubdivision::Key{ny, tau, {image, full}});
      return it == level.end() ? -1 : edge_arrows[it->second];
    };
    for (int f = 0; f < intrinsic.arrow_count() && canonical; ++f) {
      if (intrinsic.is_identity(f)) {
        arrows[f] = oracle.identity(objects[intrinsic.src(f)]);
        continue;
      }
      for (int m : sd.members(f)) {
        const int a = edge_arrow(m, intrinsic.dst(f));
        if (a < 0 || (arrows[f] >= 0 && arrows[f] != a)) {
          canonical = false;
          break;
        }
        arrows[f] = a;
      }
    }
    if (canonical) {
      std::vector<bool> hit(oracle.arrow_count(), false);
      for (int a : arrows) {
        if (hit[a]) canonical = false;
        hit[a] = true;
      }
    }
    if (canonical) {
      try {
        check_functor(FunctorData{sd.category_ptr(), std::make_shared<const FinCategory>(oracle),
                                  objects, arrows});
      } catch (const Error&) {
        canonical = false;
      }
    }
    report.canonical = canonical;
    if (canonical) {
      report.verdict = Verdict::Match;
      return report;
    }
    HomSearch search(intrinsic, oracle, objects, 2'000'000);
    const auto found = search.run();
    if (!found) {
      report.verdict = Verdict::Inconclusive;
      report.note = "isomorphism search budget exhausted";
    } else if (*found) {
      report.verdict = Verdict::Match;
      report.note = "isomorphic, but not through the canonical edge map";
    } else {
      report.verdict = Verdict::Mismatch;
      report.note = "equal hom-set sizes but no isomorphism fixing objects";
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::CapExceeded) {
      report.verdict = Verdict::Inconclusive;
      report.note = e.what();
      return report;
    }
    throw;
  }
  return report;
}

}  // namespace sdcat

#include "sdcat/acceptance.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sdcat/corpus.hpp"
#include "sdcat/finspace.hpp"
#include "sdcat/io.hpp"
#include "sdcat/kan_oracle.hpp"

namespace sdcat {

HomologyResult sd_homology(const SdCategory& sd) {
  const auto base_top = top_nondegenerate_dim(sd.base());
  const bool complete = base_top && sd.cap() >= *base_top;
  const int top = top_nondegenerate_dim(sd.category()).value_or(0);
  HomologyResult h = homology(normalized_chains_of_nerve(sd.category(), top));
  h.valid_up_to = complete ? std::nullopt : std::optional<int>(sd.cap() - 2);
  return h;
}

std::string direct_category_violation(const SdCategory& sd) {
  const FinCategory& s = sd.category();
  for (int f = 0; f < s.arrow_count(); ++f) {
    if (s.is_identity(f)) continue;
    const int x = s.src(f);
    const int y = s.dst(f);
    if (sd.dim(x) >= sd.dim(y)) return "arrow " + s.arrow_name(f) + " does not raise dimension";
    for (int g : s.hom(y, x)) {
      if (s.compose(g, f) == s.identity(x)) return "arrow " + s.arrow_name(f) + " has a left inverse";
    }
  }
  return {};
}

namespace {

using Clock = std::chrono::steady_clock;

// Collects failures; the detail line keeps the first few.
struct Tally {
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  std::string summary(const std::string& extra = {}) const {
    std::ostringstream out;
    out << checks << " checks, " << failures.size() << " failures";
    if (!extra.empty()) out << "; " << extra;
    for (std::size_t i = 0; i < failures.size() && i < 4; ++i) out << " | " << failures[i];
    return out.str();
  }
};

bool is_point(const HomologyResult& h, int up_to) {
  for (int k = 0; k <= up_to; ++k) {
    const HomologyGroup g = h.degree(k);
    if (g.betti != (k == 0 ? 1 : 0) || !g.torsion.empty()) return false;
  }
  return true;
}

bool is_sphere(const HomologyResult& h, int n, int up_to) {
  for (int k = 0; k <= up_to; ++k) {
    const HomologyGroup g = h.degree(k);
    const int expected = (k == 0 || k == n) ? 1 : 0;
    if (g.betti != expected || !g.torsion.empty()) return false;
  }
  return true;
}

// caps per corpus category for the structural criteria
int structural_cap(const std::string& name) { return name == "groupoid" ? 3 : 2; }

// ---------------------------------------------------------------------------

void criterion1(Tally& t) {
  const CategoryPtr c = corpus_category("parallel_pair");
  const SdCategory sd = sd_category(c, SdOptions{2, 2, {}});
  const FinCategory& s = sd.category();
  std::set<std::string> objects;
  for (int x = 0; x < s.object_count(); ++x) objects.insert(s.object_name(x));
  t.expect(objects == std::set<std::string>{"0", "1", "(a)", "(b)"}, "objects are 0, 1, a, b");
  std::multiset<std::pair<std::string, std::string>> arrows;
  for (int f = 0; f < s.arrow_count(); ++f) {
    if (!s.is_identity(f)) arrows.emplace(s.object_name(s.src(f)), s.object_name(s.dst(f)));
  }
  const std::multiset<std::pair<std::string, std::string>> expected = {
      {"0", "(a)"}, {"0", "(b)"}, {"1", "(a)"}, {"1", "(b)"}};
  t.expect(arrows == expected, "exactly the arrows 0->a, 0->b, 1->a, 1->b");
  const HomologyResult h = sd_homology(sd);
  t.expect(is_sphere(h, 1, 3), "B Sd(C) has the homology of the circle");
}

void criterion2(Tally& t) {
  const CategoryPtr c = corpus_category("groupoid");
  for (int n = 1; n <= 3; ++n) {
    const SdCategory sd = sd_category(c, SdOptions{n, 1, {}});
    const FinCategory& s = sd.category();
    const std::string tag = "n=" + std::to_string(n) + ": ";
    std::vector<int> per_dim(n + 1, 0);
    for (int x = 0; x < s.object_count(); ++x) ++per_dim[sd.dim(x)];
    t.expect(per_dim == std::vector<int>(n + 1, 2), tag + "two objects in each dimension");
    bool poset = true;
    for (int x = 0; x < s.object_count(); ++x) {
      for (int y = 0; y < s.object_count(); ++y) {
        const std::size_t size = s.hom(x, y).size();
        if (size > 1 || (x != y && size == 1 && !s.hom(y, x).empty())) poset = false;
      }
    }
    t.expect(poset, tag + "Sd(C)_{<=n} is a poset");
    const Poset p = preorder_collapse(s).poset;
    const HomologyResult h = complex_homology(order_complex(p));
    t.expect(is_sphere(h, n, n + 1), tag + "order complex has the homology of S^n, got " + to_string(h));
  }
}

void criterion3(Tally& t, const AcceptanceOptions& options) {
  std::vector<NamedCategory> inputs = corpus_categories();
  std::mt19937 rng(options.seed);
  for (int i = 0; i < options.random_categories; ++i) {
    inputs.push_back({"random" + std::to_string(i),
                      std::make_shared<const FinCategory>(random_category(rng, 4, 8))});
  }
  for (const auto& [name, c] : inputs) {
    try {
      const int cap = name.rfind("random", 0) == 0 ? 2 : structural_cap(name);
      const Sd2Result r = sd2_poset(c, SdOptions{cap, 1, {}});
      // elements of Sd^2 are the nondegenerate simplices of N Sd(C)
      const NerveEnumeration chains = enumerate_simplices(r.first.category(), std::nullopt, 1'000'000);
      std::size_t count = 0;
      for (auto k : chains.nondegenerate_counts) count += k;
      t.expect(static_cast<std::size_t>(r.poset.size()) == count,
               name + ": Sd^2 has one element per nondegenerate chain of Sd");
    } catch (const Error& e) {
      t.expect(false, name + ": " + e.what());
    }
  }
}

void criterion4(Tally& t, const AcceptanceOptions& options) {
  auto check = [&](const std::string& name, const CategoryPtr& c, int cap, int slack) {
    try {
      const SdCategory sd = sd_category(c, SdOptions{cap, slack, {}});
      const std::string v = direct_category_violation(sd);
      t.expect(v.empty(), name + " cap " + std::to_string(cap) + ": " + v);
      // the second subdivision is again direct
      const Sd2Result r = sd2_poset(c, SdOptions{cap, slack, {}});
      const std::string v2 = direct_category_violation(r.second);
      t.expect(v2.empty(), name + " Sd^2: " + v2);
    } catch (const Error& e) {
      t.expect(false, name + ": " + e.what());
    }
  };
  for (const auto& [name, c] : corpus_categories()) {
    for (int cap = 1; cap <= 3; ++cap) check(name, c, cap, 1);
  }
  std::mt19937 rng(options.seed + 1);
  for (int i = 0; i < options.random_categories; ++i) {
    check("random" + std::to_string(i), std::make_shared<const FinCategory>(random_category(rng, 4, 8)), 2, 1);
  }
}

void criterion5(Tally& t, int& instances) {
  const int cap = 2;
  const int slack = 2;
  std::map<std::string, SdCategory> sd;
  auto sd_of = [&](const std::string& name) -> const SdCategory& {
    auto it = sd.find(name);
    if (it == sd.end()) it = sd.emplace(name, sd_category(corpus_category(name), SdOptions{cap, slack, {}})).first;
    return it->second;
  };
  const auto& functors = corpus_functors();
  for (const auto& f : functors) {
    const SdCategory& s = sd_of(f.source);
    const SdCategory& d = sd_of(f.target);
    const FunctorData image = sd_functor(f.functor, s, d);
    if (f.source == f.target && same_functor(f.functor, identity_functor(f.functor.source))) {
      t.expect(same_functor(image, identity_functor(s.category_ptr())), f.name + ": Sd(id) = id");
    }
    const FunctorData left = compose(f.functor, epsilon(s));
    const FunctorData right = compose(epsilon(d), image);
    t.expect(same_functor(left, right), f.name + ": f eps = eps Sd(f)");
    ++instances;
  }
  for (const auto& f : functors) {
    for (const auto& g : functors) {
      if (f.target != g.source) continue;
      const FunctorData gf = compose(g.functor, f.functor);
      const FunctorData whole = sd_functor(gf, sd_of(f.source), sd_of(g.target));
      const FunctorData parts = compose(sd_functor(g.functor, sd_of(g.source), sd_of(g.target)),
                                        sd_functor(f.functor, sd_of(f.source), sd_of(f.target)));
      t.expect(same_functor(whole, parts), g.name + " . " + f.name + ": Sd(gf) = Sd(g) Sd(f)");
      ++instances;
    }
  }
}

void criterion6(Tally& t) {
  for (const auto& [name, c] : corpus_categories()) {
    for (int cap = 3; cap <= 4; ++cap) {
      const std::string tag = name + " cap " + std::to_string(cap) + ": ";
      try {
        const SdCategory sd = sd_category(c, SdOptions{cap, 1, {}});
        const HomologyResult hs = sd_homology(sd);
        const HomologyResult hc = nerve_homology(*c, cap);
        const RangeComparison cmp = homology_equal_in_range(hs, hc);
        t.expect(cmp.up_to >= cap - 2 && cmp.equal, tag + "H(Sd) = H(C) up to degree " + std::to_string(cmp.up_to));
        if (name == "z2") {
          const HomologyGroup h1 = hs.degree(1);
          t.expect(h1.betti == 0 && h1.torsion == std::vector<mpz_class>{2}, tag + "H_1(Sd) = Z/2");
        }
      } catch (const Error& e) {
        t.expect(false, tag + e.what());
      }
    }
  }
}

void criterion7(Tally& t) {
  std::vector<std::pair<std::string, int>> runs;
  for (const auto& entry : corpus_categories()) runs.emplace_back(entry.name, 2);
  runs.emplace_back("groupoid", 3);
  for (const auto& [name, cap] : runs) {
    const CategoryPtr c = corpus_category(name);
    const StabilizationReport stab = stabilization_check(c, cap, {0, 1, 2});
    t.expect(stab.stable, name + ": hom-sets stable between slack 1 and 2");
    const OracleReport r = oracle_compare(c, cap, 2);
    t.expect(r.verdict == Verdict::Match,
             name + " cap " + std::to_string(cap) + ": oracle " + std::string(to_string(r.verdict)) + " " + r.note);
  }
}

void criterion8(Tally& t) {
  for (const auto& [name, p] : corpus_posets()) {
    t.expect(s(a(p)) == p, name + ": s a = id");
    t.expect(a(s(a(p))) == a(p), name + ": a s = id on a(P)");
    t.expect(preorder_collapse(poset_to_category(p)).poset == p, name + ": p j = id");
    const NerveComparison cmp = nerve_vs_order_complex(p);
    t.expect(cmp.bijection && cmp.faces_compatible, name + ": N j(P) and k a(P) have the same simplices");
    t.expect(cmp.homology_equal, name + ": homology of N j(P) and k a(P) agree");
  }
  for (const auto& [name, k] : corpus_complexes()) {
    t.expect(same_complex_by_names(order_complex(face_space(k)), barycentric(k)), name + ": k x(K) = K'");
    t.expect(!homology_equal_in_range(complex_homology(k), complex_homology(barycentric(k))).differing.size(),
             name + ": H(K) = H(K')");
  }
}

void criterion9(Tally& t) {
  const CategoryPtr c = corpus_category("chain2");
  const int x = c->object_index("0");
  const int f = c->arrow_index("0<1");
  const Simplex vertex = vertex_simplex(x);
  const Simplex edge = make_simplex(*c, {f});

  auto delta = std::make_shared<const DeltaCategory>(c, 2);
  const TruncatedSimplexCategory plain = delta_as_category(delta);
  const int d = delta->arrow(*delta->find(edge), delta->maps().id_of(OrderMap::coface(1, 1)));
  if (delta->source(d) != *delta->find(vertex)) {
    t.expect(false, "d_* does not start at (0)");
    return;
  }
  int u = -1;
  for (int a = 0; a < plain.category->arrow_count(); ++a) {
    if (plain.delta_arrow[a] == d) u = a;
  }
  t.expect(u >= 0 && plain.sup.arrow_map[u] == f, "sup(d_*) = f");
  t.expect(u >= 0 && !is_cocartesian(plain.sup, u), "d_* is not cocartesian for sup");

  auto wide = std::make_shared<const DeltaCategory>(c, 4);
  const Congruence cong = congruence_closure(wide);
  const TruncatedSimplexCategory quotient = quotient_as_category(cong, 2);
  const int dw = wide->arrow(*wide->find(edge), wide->maps().id_of(OrderMap::coface(1, 1)));
  int uq = -1;
  for (int a = 0; a < quotient.category->arrow_count(); ++a) {
    if (quotient.delta_arrow[a] == cong.representative(dw)) uq = a;
  }
  t.expect(uq >= 0 && is_cocartesian(quotient.sup, uq), "[d_*] is cocartesian for [sup]");
}

void criterion10(Tally& t) {
  struct Expected {
    std::string name;
    int objects;
    int betti0;
  };
  for (const Expected& e : {Expected{"empty", 0, 0}, Expected{"terminal", 1, 1}, Expected{"discrete2", 2, 2}}) {
    const CategoryPtr c = corpus_category(e.name);
    const std::string& n = e.name;
    t.expect(category_from_json(category_to_json(*c)) == *c, n + ": JSON round trip");
    const NerveEnumeration nerve = enumerate_simplices(*c, 3);
    t.expect(nerve.nondegenerate_counts == std::vector<std::size_t>{static_cast<std::size_t>(e.objects), 0, 0, 0},
             n + ": nerve is discrete");
    const SdCategory sd = sd_category(c, SdOptions{2, 2, {}});
    t.expect(sd.category() == *c || (sd.category().object_count() == e.objects &&
                                      sd.category().non_identity_arrow_count() == 0),
             n + ": Sd(C) = C");
    const Sd2Result r = sd2_poset(c, SdOptions{2, 2, {}});
    bool discrete = r.poset.size() == e.objects;
    for (int i = 0; i < r.poset.size(); ++i) {
      for (int j = 0; j < r.poset.size(); ++j) discrete = discrete && (i == j || !r.poset.leq(i, j));
    }
    t.expect(discrete, n + ": Sd^2 is the discrete poset on the objects");
    const FunctorData eps = epsilon(sd);
    t.expect(static_cast<int>(eps.object_map.size()) == e.objects, n + ": epsilon is defined");
    t.expect(oracle_compare(c, 2, 2).verdict == Verdict::Match, n + ": oracle Match");
    const HomologyResult hc = nerve_homology(*c, 3);
    const HomologyResult hs = sd_homology(sd);
    t.expect(hc.degree(0).betti == e.betti0 && is_point(hc, 3) == (e.betti0 == 1), n + ": H_0 = Z^" + std::to_string(e.betti0));
    for (int k = 1; k <= 3; ++k) t.expect(hc.degree(k) == HomologyGroup{}, n + ": H_k = 0 for k > 0");
    t.expect(homology_equal_in_range(hs, hc).equal, n + ": H(Sd) = H(C)");
    t.expect(preorder_collapse(*c).poset.size() == e.objects, n + ": p(C) has one point per object");
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit;
};

constexpr Criterion kCriteria[] = {
    {1, "parallel pair golden test", 1.0},
    {2, "simply connected groupoid golden test", 5.0},
    {3, "Sd^2 is a poset (corpus and random categories)", 120.0},
    {4, "Sd is direct with no non-identity isomorphisms", 120.0},
    {5, "Sd functoriality and naturality of epsilon", 120.0},
    {6, "homology of Sd(C) equals homology of C in range", 120.0},
    {7, "Kan-subdivision oracle and slack stabilization", 120.0},
    {8, "finite spaces, order complexes, barycentric subdivision", 30.0},
    {9, "cocartesian arrows for sup and [sup]", 120.0},
    {10, "degenerate inputs", 120.0},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  CriterionResult r;
  r.id = id;
  const Criterion* criterion = nullptr;
  for (const Criterion& s : kCriteria) {
    if (s.id == id) criterion = &s;
  }
  if (!criterion) throw Error(ErrorKind::IndexOutOfRange, "no criterion " + std::to_string(id));
  r.title = criterion->title;
  r.limit_seconds = criterion->limit;
  Tally t;
  std::string extra;
  const auto start = Clock::now();
  try {
    switch (id) {
      case 1: criterion1(t); break;
      case 2: criterion2(t); break;
      case 3: criterion3(t, options); break;
      case 4: criterion4(t, options); break;
      case 5: {
        int instances = 0;
        criterion5(t, instances);
        t.expect(instances >= 10, "at least 10 functor instances");
        extra = std::to_string(instances) + " functor instances";
        break;
      }
      case 6: criterion6(t); break;
      case 7: criterion7(t); break;
      case 8: criterion8(t); break;
      case 9: criterion9(t); break;
      case 10: criterion10(t); break;
    }
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = r.seconds <= r.limit_seconds;
  if (!in_time) t.failures.push_back("time limit exceeded");
  r.pass = t.failures.empty() && t.checks > 0;
  r.detail = t.summary(extra);
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (const Criterion& s : kCriteria) out.push_back(run_criterion(s.id, options));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << " (" << r.seconds << " s / "
      << r.limit_seconds << " s): " << r.detail;
  return out.str();
}

}  // namespace sdcat

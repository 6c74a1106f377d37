// sdcat: command-line front end.
//
// Inputs are JSON files, `-` for stdin, or built-in fixtures written as
// `category:NAME`, `poset:NAME`, `complex:NAME`.
//
// Exit codes: 0 success or Match, 1 bad input or usage, 2 theorem violation
// or Mismatch, 3 inconclusive oracle.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sdcat/acceptance.hpp"
#include "sdcat/corpus.hpp"
#include "sdcat/finspace.hpp"
#include "sdcat/io.hpp"
#include "sdcat/kan_oracle.hpp"

using namespace sdcat;

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kViolation = 2;
constexpr int kInconclusive = 3;

struct Common {
  std::string input;
  std::string format = "json";
  std::string out;
  int cap = -1;  // -1: not given
  int slack = 2;
};

enum class Kind { Category, Poset, Complex, Space };

Json load(const std::string& input) {
  const auto colon = input.find(':');
  if (colon != std::string::npos && input.find('/') == std::string::npos) {
    const std::string kind = input.substr(0, colon);
    const std::string name = input.substr(colon + 1);
    if (kind == "category") return category_to_json(*corpus_category(name));
    if (kind == "poset") {
      for (const auto& p : corpus_posets()) {
        if (p.name == name) return poset_to_json(p.poset);
      }
      throw Error(ErrorKind::UnknownObject, "no corpus poset " + name);
    }
    if (kind == "complex") {
      for (const auto& k : corpus_complexes()) {
        if (k.name == name) return complex_to_json(k.complex);
      }
      throw Error(ErrorKind::UnknownObject, "no corpus complex " + name);
    }
  }
  if (input == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return parse_json(buffer.str());
  }
  return read_json_file(input);
}

Kind kind_of(const Json& j) {
  if (j.is_object()) {
    if (j.contains("objects")) return Kind::Category;
    if (j.contains("elements")) return Kind::Poset;
    if (j.contains("vertices")) return Kind::Complex;
    if (j.contains("points")) return Kind::Space;
  }
  throw Error(ErrorKind::ParseError, "input is not a category, poset, complex or finite space");
}

CategoryPtr load_category(const std::string& input) {
  const Json j = load(input);
  if (kind_of(j) == Kind::Poset) return std::make_shared<const FinCategory>(poset_to_category(poset_from_json(j)));
  if (kind_of(j) != Kind::Category) throw Error(ErrorKind::ParseError, "expected a category");
  return std::make_shared<const FinCategory>(category_from_json(j));
}

Poset load_poset(const std::string& input) {
  const Json j = load(input);
  switch (kind_of(j)) {
    case Kind::Poset: return poset_from_json(j);
    case Kind::Space: return s(space_from_json(j));
    default: throw Error(ErrorKind::ParseError, "expected a poset or finite space");
  }
}

SimplicialComplex load_complex(const std::string& input) {
  const Json j = load(input);
  if (kind_of(j) != Kind::Complex) throw Error(ErrorKind::ParseError, "expected a simplicial complex");
  return complex_from_json(j);
}

void emit(const Common& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Error(ErrorKind::ParseError, "cannot write " + o.out);
  file << text;
}

void emit_json(const Common& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

std::string census_key(const std::pair<std::string, std::string>& k) { return k.first + " -> " + k.second; }

Json homology_json(const HomologyResult& h) {
  Json degrees = Json::array();
  for (std::size_t k = 0; k < h.groups.size(); ++k) {
    Json torsion = Json::array();
    for (const auto& t : h.groups[k].torsion) torsion.push_back(t.get_str());
    degrees.push_back({{"degree", k},
                       {"betti", h.groups[k].betti},
                       {"torsion", torsion},
                       {"valid", h.valid(static_cast<int>(k))}});
  }
  return {{"degrees", degrees}, {"valid_up_to", h.valid_up_to ? Json(*h.valid_up_to) : Json(nullptr)}};
}

std::string homology_text(const HomologyResult& h) {
  std::ostringstream out;
  for (std::size_t k = 0; k < h.groups.size(); ++k) {
    std::string g = to_string(h.groups[k]);
    for (std::size_t p; (p = g.find(" + ")) != std::string::npos;) g.replace(p, 3, " ⊕ ");
    out << "H_" << k << " = " << g;
    if (!h.valid(static_cast<int>(k))) out << "  (beyond validity range)";
    out << "\n";
  }
  out << "valid up to: " << (h.valid_up_to ? std::to_string(*h.valid_up_to) : std::string("all degrees")) << "\n";
  return out.str();
}

std::string hom_census_text(const FinCategory& c) {
  std::ostringstream out;
  for (int x = 0; x < c.object_count(); ++x) {
    for (int y = 0; y < c.object_count(); ++y) {
      const std::size_t n = c.hom(x, y).size();
      if (x != y && n) out << c.object_name(x) << " -> " << c.object_name(y) << ": " << n << "\n";
    }
  }
  return out.str();
}

std::vector<int> parse_slacks(const std::string& list) {
  std::vector<int> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size() || out.back() < 0) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--stabilize", "expected non-negative integers separated by commas");
    }
  }
  if (out.size() < 2) throw CLI::ValidationError("--stabilize", "needs at least two slacks");
  return out;
}

/// `a,b:1/2,1/2`
BarycentricPoint parse_point(const FiniteSpace& x, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--point", "expected <face:weights>");
  BarycentricPoint u;
  std::stringstream names(text.substr(0, colon));
  for (std::string item; std::getline(names, item, ',');) {
    const auto p = x.find(item);
    if (!p) throw Error(ErrorKind::UnknownObject, "no point " + item);
    u.carrier.push_back(*p);
  }
  std::stringstream weights(text.substr(colon + 1));
  for (std::string item; std::getline(weights, item, ',');) {
    mpq_class q;
    if (q.set_str(item, 10) != 0) throw CLI::ValidationError("--point", "bad weight " + item);
    q.canonicalize();
    u.weights.push_back(q);
  }
  return u;
}

int require_cap(const Common& o) {
  if (o.cap < 0) throw CLI::ValidationError("--cap", "this command needs --cap");
  return o.cap;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Common& o) {
  const Json j = load(o.input);
  Json normal;
  switch (kind_of(j)) {
    case Kind::Category: normal = category_to_json(category_from_json(j)); break;
    case Kind::Poset: normal = poset_to_json(poset_from_json(j)); break;
    case Kind::Complex: normal = complex_to_json(complex_from_json(j)); break;
    case Kind::Space: normal = space_to_json(space_from_json(j)); break;
  }
  if (o.format == "text") {
    emit(o, "valid\n");
  } else {
    emit_json(o, normal);
  }
  return kOk;
}

int cmd_nerve(const Common& o) {
  const CategoryPtr c = load_category(o.input);
  const NerveEnumeration n =
      enumerate_simplices(*c, o.cap < 0 ? std::nullopt : std::optional<int>(o.cap));
  if (o.format == "text") {
    std::ostringstream out;
    out << "dim  total  nondegenerate\n";
    for (std::size_t k = 0; k < n.simplices.size(); ++k) {
      out << k << "  " << n.simplices[k].size() << "  " << n.nondegenerate_counts[k] << "\n";
    }
    emit(o, out.str());
  } else {
    Json rows = Json::array();
    for (std::size_t k = 0; k < n.simplices.size(); ++k) {
      rows.push_back({{"dim", k}, {"total", n.simplices[k].size()}, {"nondegenerate", n.nondegenerate_counts[k]}});
    }
    emit_json(o, {{"cap", n.cap},
                  {"counts", rows},
                  {"top_nondegenerate_dim",
                   n.top_nondegenerate_dim ? Json(*n.top_nondegenerate_dim) : Json(nullptr)}});
  }
  return kOk;
}

int cmd_sd(const Common& o, const std::string& stabilize) {
  const CategoryPtr c = load_category(o.input);
  const int cap = require_cap(o);
  if (!stabilize.empty()) {
    const StabilizationReport r = stabilization_check(c, cap, parse_slacks(stabilize));
    if (o.format == "text") {
      std::ostringstream out;
      for (std::size_t i = 0; i < r.slacks.size(); ++i) {
        out << "slack " << r.slacks[i] << ":\n";
        for (const auto& [k, n] : r.census[i]) out << "  " << census_key(k) << ": " << n << "\n";
      }
      out << (r.stable ? "stable" : "not stable") << "\n";
      emit(o, out.str());
    } else {
      Json census = Json::array();
      for (std::size_t i = 0; i < r.slacks.size(); ++i) {
        Json rows = Json::array();
        for (const auto& [k, n] : r.census[i]) rows.push_back({{"src", k.first}, {"dst", k.second}, {"count", n}});
        census.push_back({{"slack", r.slacks[i]}, {"census", rows}});
      }
      emit_json(o, {{"cap", cap}, {"stable", r.stable}, {"slacks", census}});
    }
    return kOk;
  }
  const SdCategory sd = sd_category(c, SdOptions{cap, o.slack, {}});
  if (o.format == "dot") {
    emit(o, category_to_dot(sd.category(), "Sd"));
  } else if (o.format == "text") {
    emit(o, hom_census_text(sd.category()));
  } else {
    emit_json(o, category_to_json(sd.category()));
  }
  return kOk;
}

int cmd_sd2(const Common& o) {
  const CategoryPtr c = load_category(o.input);
  const Sd2Result r = sd2_poset(c, SdOptions{require_cap(o), o.slack, {}});
  if (o.format == "dot") {
    emit(o, poset_to_dot(r.poset, "Sd2"));
  } else if (o.format == "text") {
    emit(o, std::to_string(r.poset.size()) + " elements\n");
  } else {
    emit_json(o, poset_to_json(r.poset));
  }
  return kOk;
}

int cmd_epsilon(const Common& o, const std::string& functor_name) {
  const int cap = o.cap < 0 ? 2 : o.cap;
  if (functor_name.empty()) {
    const SdCategory sd = sd_category(load_category(o.input), SdOptions{cap, o.slack, {}});
    const FunctorData eps = epsilon(sd);
    if (o.format == "text") {
      emit(o, "epsilon is a functor on " + std::to_string(sd.category().object_count()) + " objects\n");
    } else {
      emit_json(o, functor_to_json(eps));
    }
    return kOk;
  }
  const NamedFunctor* f = nullptr;
  for (const auto& g : corpus_functors()) {
    if (g.name == functor_name) f = &g;
  }
  if (!f) throw Error(ErrorKind::UnknownObject, "no corpus functor " + functor_name);
  const SdCategory s = sd_category(f->functor.source, SdOptions{cap, o.slack, {}});
  const SdCategory d = sd_category(f->functor.target, SdOptions{cap, o.slack, {}});
  const FunctorData image = sd_functor(f->functor, s, d);
  const bool natural = same_functor(compose(f->functor, epsilon(s)), compose(epsilon(d), image));
  if (o.format == "text") {
    emit(o, std::string("naturality: ") + (natural ? "holds" : "fails") + "\n");
  } else {
    emit_json(o, {{"functor", f->name}, {"natural", natural}, {"sd_functor", functor_to_json(image)}});
  }
  return natural ? kOk : kViolation;
}

int cmd_oracle(const Common& o) {
  const OracleReport r = oracle_compare(load_category(o.input), require_cap(o), o.slack);
  if (o.format == "text") {
    std::ostringstream out;
    out << "verdict: " << to_string(r.verdict) << "\n";
    if (!r.note.empty()) out << "note: " << r.note << "\n";
    for (const auto& [k, v] : r.census) {
      out << (v.first == v.second ? "  " : "! ") << census_key(k) << ": " << v.first << " vs " << v.second << "\n";
    }
    emit(o, out.str());
  } else {
    Json census = Json::array();
    for (const auto& [k, v] : r.census) {
      census.push_back({{"src", k.first}, {"dst", k.second}, {"sd", v.first}, {"oracle", v.second}});
    }
    Json witness = r.witness ? Json{r.witness->first, r.witness->second} : Json(nullptr);
    emit_json(o, {{"verdict", std::string(to_string(r.verdict))},
                  {"cap", r.cap},
                  {"slack", r.slack},
                  {"canonical", r.canonical},
                  {"note", r.note},
                  {"census", census},
                  {"witness", witness}});
  }
  switch (r.verdict) {
    case Verdict::Match: return kOk;
    case Verdict::Mismatch: return kViolation;
    default: return kInconclusive;
  }
}

int cmd_aspace(const Common& o) {
  const FiniteSpace x = a(load_poset(o.input));
  emit_json(o, space_to_json(x));
  return kOk;
}

int cmd_order_complex(const Common& o) {
  const SimplicialComplex k = order_complex(load_poset(o.input));
  if (o.format == "dot") {
    emit(o, complex_to_dot(k, "order_complex"));
  } else {
    emit_json(o, complex_to_json(k));
  }
  return kOk;
}

int cmd_face_poset(const Common& o) {
  const Poset p = face_poset(load_complex(o.input));
  if (o.format == "dot") {
    emit(o, poset_to_dot(p, "face_poset"));
  } else {
    emit_json(o, poset_to_json(p));
  }
  return kOk;
}

int cmd_barycentric_check(const Common& o) {
  const SimplicialComplex k = load_complex(o.input);
  const SimplicialComplex sub = barycentric(k);
  const bool same = same_complex_by_names(order_complex(face_space(k)), sub);
  const bool homology_same = homology_equal_in_range(complex_homology(k), complex_homology(sub)).equal;
  if (o.format == "text") {
    emit(o, std::string("k(x(K)) = K': ") + (same ? "yes" : "no") + "\nH(K) = H(K'): " +
                (homology_same ? "yes" : "no") + "\n");
  } else {
    emit_json(o, {{"same_complex", same}, {"same_homology", homology_same}, {"barycentric", complex_to_json(sub)}});
  }
  return same && homology_same ? kOk : kViolation;
}

int cmd_mccord(const Common& o, const std::string& point) {
  const Json j = load(o.input);
  const FiniteSpace x = kind_of(j) == Kind::Space ? space_from_json(j) : a(load_poset(o.input));
  const int image = mccord_point(x, parse_point(x, point));
  if (o.format == "text") {
    emit(o, x.point(image) + "\n");
  } else {
    emit_json(o, {{"point", point}, {"image", x.point(image)}});
  }
  return kOk;
}

int cmd_homology(const Common& o, bool of_sd) {
  const Json j = load(o.input);
  HomologyResult h;
  if (kind_of(j) == Kind::Complex) {
    h = complex_homology(complex_from_json(j));
  } else if (kind_of(j) == Kind::Poset && !of_sd) {
    h = complex_homology(order_complex(poset_from_json(j)));
  } else {
    const CategoryPtr c = load_category(o.input);
    if (of_sd) {
      h = sd_homology(sd_category(c, SdOptions{require_cap(o), o.slack, {}}));
    } else if (o.cap >= 0) {
      h = nerve_homology(*c, o.cap);
    } else {
      const auto top = top_nondegenerate_dim(*c);
      if (!top) throw CLI::ValidationError("--cap", "the nerve is infinite, so --cap is required");
      h = nerve_homology(*c, std::max(*top, 0));
    }
  }
  if (o.format == "text") {
    emit(o, homology_text(h));
  } else {
    emit_json(o, homology_json(h));
  }
  return kOk;
}

int cmd_dot(const Common& o) {
  const Json j = load(o.input);
  switch (kind_of(j)) {
    case Kind::Category: emit(o, category_to_dot(category_from_json(j), "C")); break;
    case Kind::Poset: emit(o, poset_to_dot(poset_from_json(j), "P")); break;
    case Kind::Complex: emit(o, complex_to_dot(complex_from_json(j), "K")); break;
    case Kind::Space: emit(o, poset_to_dot(s(space_from_json(j)), "X")); break;
  }
  return kOk;
}

// Checks that each fixture file equals its built-in counterpart, then runs
// the acceptance suite. Timings are left out so reports are reproducible.
int cmd_corpus_verify(const Common& o, const std::string& dir) {
  std::ostringstream out;
  bool ok = true;
  if (!dir.empty()) {
    auto check = [&](const std::string& path, const Json& expected) {
      bool same = false;
      try {
        same = read_json_file(path) == expected;
      } catch (const Error& e) {
        out << "[FAIL] " << path << ": " << e.what() << "\n";
        ok = false;
        return;
      }
      out << (same ? "[PASS] " : "[FAIL] ") << path << "\n";
      ok = ok && same;
    };
    for (const auto& c : corpus_categories()) check(dir + "/categories/" + c.name + ".json", category_to_json(*c.category));
    for (const auto& p : corpus_posets()) check(dir + "/posets/" + p.name + ".json", poset_to_json(p.poset));
    for (const auto& k : corpus_complexes()) check(dir + "/complexes/" + k.name + ".json", complex_to_json(k.complex));
  }
  for (const CriterionResult& r : run_acceptance()) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << ": " << r.detail << "\n";
    ok = ok && r.pass;
  }
  emit(o, out.str());
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Categorical subdivision of finite categories"};
  app.require_subcommand(1);
  Common o;
  std::string stabilize, functor_name, point, corpus_dir;
  bool of_sd = false;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "JSON file, - for stdin, or category:NAME / poset:NAME / complex:NAME")
        ->required();
  };
  std::map<std::string, std::string> format_of;  // per subcommand, so defaults differ
  auto with_output = [&](CLI::App* sub, std::vector<std::string> formats) {
    format_of[sub->get_name()] = formats.front();
    sub->add_option("--format", format_of[sub->get_name()], "output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", o.out, "write the report to a file");
  };
  auto with_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "dimension cap")->check(CLI::NonNegativeNumber);
  };
  auto with_slack = [&](CLI::App* sub) {
    sub->add_option("--slack", o.slack, "extra dimensions for the congruence window")
        ->check(CLI::NonNegativeNumber);
  };

  std::map<std::string, std::function<int()>> run;
  auto add = [&](const char* name, const char* help, std::function<int()> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    run[name] = std::move(body);
    return sub;
  };

  auto* validate = add("validate", "validate an input and print its normal form", [&] { return cmd_validate(o); });
  with_input(validate);
  with_output(validate, {"json", "text"});

  auto* nerve = add("nerve", "simplex counts of the nerve", [&] { return cmd_nerve(o); });
  with_input(nerve);
  with_cap(nerve);
  with_output(nerve, {"json", "text"});

  auto* sd = add("sd", "the subdivision Sd(C) up to --cap", [&] { return cmd_sd(o, stabilize); });
  with_input(sd);
  with_cap(sd);
  with_slack(sd);
  sd->add_option("--stabilize", stabilize, "comma-separated slacks for a stabilization census");
  with_output(sd, {"json", "text", "dot"});

  auto* sd2 = add("sd2", "the poset Sd(Sd(C) up to --cap)", [&] { return cmd_sd2(o); });
  with_input(sd2);
  with_cap(sd2);
  with_slack(sd2);
  with_output(sd2, {"json", "text", "dot"});

  auto* eps = add("epsilon-check", "the counit Sd(C) -> C, or naturality for a corpus functor",
                  [&] { return cmd_epsilon(o, functor_name); });
  eps->add_option("input", o.input, "category input");
  eps->add_option("--functor", functor_name, "corpus functor name");
  with_cap(eps);
  with_slack(eps);
  with_output(eps, {"json", "text"});

  auto* oracle = add("oracle-compare", "compare Sd(C) with c(sd N C)", [&] { return cmd_oracle(o); });
  with_input(oracle);
  with_cap(oracle);
  with_slack(oracle);
  with_output(oracle, {"json", "text"});

  auto* aspace = add("aspace", "the finite space a(P) of a poset", [&] { return cmd_aspace(o); });
  with_input(aspace);
  with_output(aspace, {"json"});

  auto* oc = add("order-complex", "order complex of a poset or finite space", [&] { return cmd_order_complex(o); });
  with_input(oc);
  with_output(oc, {"json", "dot"});

  auto* fp = add("face-poset", "face poset of a simplicial complex", [&] { return cmd_face_poset(o); });
  with_input(fp);
  with_output(fp, {"json", "dot"});

  auto* bc = add("barycentric-check", "check k(x(K)) against the barycentric subdivision",
                 [&] { return cmd_barycentric_check(o); });
  with_input(bc);
  with_output(bc, {"json", "text"});

  auto* mc = add("mccord", "image of a point of |k(X)| under the McCord map", [&] { return cmd_mccord(o, point); });
  with_input(mc);
  mc->add_option("--point", point, "carrier and weights, e.g. a,b:1/2,1/2")->required();
  with_output(mc, {"json", "text"});

  auto* hom = add("homology", "integral homology of a complex, poset, nerve or Sd",
                  [&] { return cmd_homology(o, of_sd); });
  with_input(hom);
  with_cap(hom);
  with_slack(hom);
  hom->add_flag("--sd", of_sd, "homology of Sd(C) up to --cap instead of the nerve");
  with_output(hom, {"text", "json"});

  auto* dot = add("dot", "Graphviz rendering of any input", [&] { return cmd_dot(o); });
  with_input(dot);
  dot->add_option("--out", o.out, "write the report to a file");

  auto* cv = add("corpus-verify", "check the fixture files and run the acceptance suite",
                 [&] { return cmd_corpus_verify(o, corpus_dir); });
  cv->add_option("--corpus", corpus_dir, "fixture directory")->check(CLI::ExistingDirectory);
  cv->add_option("--out", o.out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }
  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (format_of.count(name)) o.format = format_of[name];
    return run.at(name)();
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return is_theorem_violation(e.kind()) ? kViolation : kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

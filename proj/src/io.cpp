#include "sdcat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace sdcat {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw Error(ErrorKind::ParseError, std::string(what) + " must be a string");
  return j.get<std::string>();
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an array");
  return j;
}

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

FinCategory category_from_json(const Json& j) {
  CategoryBuilder b;
  for (const Json& o : array(field(j, "objects"), "objects")) {
    const std::string name = text(o, "object");
    if (b.find_object(name)) throw Error(ErrorKind::DuplicateId, "object " + name);
    b.add_object(name);
  }
  auto object = [&](const Json& v) {
    const std::string name = text(v, "endpoint");
    const auto x = b.find_object(name);
    if (!x) throw Error(ErrorKind::DanglingReference, "unknown object " + name);
    return *x;
  };
  auto arrow = [&](const Json& v) {
    const std::string name = text(v, "arrow");
    const auto f = b.find_arrow(name);
    if (!f) throw Error(ErrorKind::DanglingReference, "unknown arrow " + name);
    return *f;
  };
  if (j.contains("arrows")) {
    for (const Json& a : array(j.at("arrows"), "arrows")) {
      const std::string name = text(field(a, "name"), "arrow name");
      if (b.find_arrow(name)) throw Error(ErrorKind::DuplicateId, "arrow " + name);
      b.add_arrow(name, object(field(a, "src")), object(field(a, "dst")));
    }
  }
  if (j.contains("compose")) {
    for (const Json& c : array(j.at("compose"), "compose")) {
      b.set_composite(arrow(field(c, "g")), arrow(field(c, "f")), arrow(field(c, "gf")));
    }
  }
  return b.build();
}

Json category_to_json(const FinCategory& c) {
  Json objects = Json::array();
  for (int x = 0; x < c.object_count(); ++x) objects.push_back(c.object_name(x));
  Json arrows = Json::array();
  Json compose = Json::array();
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (c.is_identity(f)) continue;
    arrows.push_back({{"name", c.arrow_name(f)},
                      {"src", c.object_name(c.src(f))},
                      {"dst", c.object_name(c.dst(f))}});
  }
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (c.is_identity(f)) continue;
    for (int g : c.out_arrows(c.dst(f))) {
      if (c.is_identity(g)) continue;
      compose.push_back({{"g", c.arrow_name(g)}, {"f", c.arrow_name(f)}, {"gf", c.arrow_name(c.compose(g, f))}});
    }
  }
  return {{"objects", objects}, {"arrows", arrows}, {"compose", compose}};
}

Poset poset_from_json(const Json& j) {
  std::vector<std::string> elements;
  for (const Json& e : array(field(j, "elements"), "elements")) elements.push_back(text(e, "element"));
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("leq")) {
    for (const Json& p : array(j.at("leq"), "leq")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::ParseError, "leq entries are pairs");
      pairs.emplace_back(text(p[0], "element"), text(p[1], "element"));
    }
  }
  return Poset::from_pairs(std::move(elements), pairs);
}

Json poset_to_json(const Poset& p) {
  Json leq = Json::array();
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < p.size() && cover; ++z) cover = !(p.less(x, z) && p.less(z, y));
      if (cover) leq.push_back({p.element(x), p.element(y)});
    }
  }
  return {{"elements", p.elements()}, {"leq", leq}};
}

SimplicialComplex complex_from_json(const Json& j) {
  std::vector<std::string> vertices;
  std::map<std::string, int> index;
  for (const Json& v : array(field(j, "vertices"), "vertices")) {
    const std::string name = text(v, "vertex");
    if (!index.emplace(name, static_cast<int>(vertices.size())).second) {
      throw Error(ErrorKind::DuplicateId, "vertex " + name);
    }
    vertices.push_back(name);
  }
  auto read_faces = [&](const Json& list) {
    std::vector<std::vector<int>> faces;
    for (const Json& f : array(list, "faces")) {
      std::vector<int> face;
      for (const Json& v : array(f, "face")) {
        const auto it = index.find(text(v, "vertex"));
        if (it == index.end()) throw Error(ErrorKind::DanglingReference, "unknown vertex " + v.dump());
        face.push_back(it->second);
      }
      faces.push_back(std::move(face));
    }
    return faces;
  };
  if (j.contains("facets")) return SimplicialComplex::from_facets(std::move(vertices), read_faces(j.at("facets")));
  return SimplicialComplex(std::move(vertices), read_faces(field(j, "faces")));
}

Json complex_to_json(const SimplicialComplex& k) {
  Json faces = Json::array();
  for (const auto& f : k.faces()) {
    Json face = Json::array();
    for (int v : f) face.push_back(k.vertex(v));
    faces.push_back(face);
  }
  return {{"vertices", k.vertices()}, {"faces", faces}};
}

FiniteSpace space_from_json(const Json& j) {
  std::vector<std::string> points;
  std::map<std::string, int> index;
  for (const Json& p : array(field(j, "points"), "points")) {
    const std::string name = text(p, "point");
    if (!index.emplace(name, static_cast<int>(points.size())).second) {
      throw Error(ErrorKind::DuplicateId, "point " + name);
    }
    points.push_back(name);
  }
  const Json& open = field(j, "open");
  if (!open.is_object()) throw Error(ErrorKind::ParseError, "open must map points to lists");
  std::vector<std::vector<int>> sets(points.size());
  for (auto it = open.begin(); it != open.end(); ++it) {
    const auto x = index.find(it.key());
    if (x == index.end()) throw Error(ErrorKind::DanglingReference, "unknown point " + it.key());
    for (const Json& y : array(it.value(), "open set")) {
      const auto yi = index.find(text(y, "point"));
      if (yi == index.end()) throw Error(ErrorKind::DanglingReference, "unknown point " + y.dump());
      sets[x->second].push_back(yi->second);
    }
  }
  return FiniteSpace(std::move(points), std::move(sets));
}

Json space_to_json(const FiniteSpace& x) {
  Json open = Json::object();
  for (int p = 0; p < x.size(); ++p) {
    Json u = Json::array();
    for (int y : x.minimal_open(p)) u.push_back(x.point(y));
    open[x.point(p)] = u;
  }
  return {{"points", x.points()}, {"open", open}};
}

FunctorData functor_from_json(const Json& j, CategoryPtr source, CategoryPtr target) {
  std::map<std::string, std::string> objects, arrows;
  for (auto it = field(j, "objects").begin(); it != field(j, "objects").end(); ++it) {
    objects[it.key()] = text(it.value(), "object image");
  }
  if (j.contains("arrows")) {
    for (auto it = j.at("arrows").begin(); it != j.at("arrows").end(); ++it) {
      arrows[it.key()] = text(it.value(), "arrow image");
    }
  }
  return functor_from_names(std::move(source), std::move(target), objects, arrows);
}

Json functor_to_json(const FunctorData& f) {
  Json objects = Json::object();
  Json arrows = Json::object();
  for (int x = 0; x < f.source->object_count(); ++x) {
    objects[f.source->object_name(x)] = f.target->object_name(f.object_map[x]);
  }
  for (int a = 0; a < f.source->arrow_count(); ++a) {
    if (f.source->is_identity(a)) continue;
    arrows[f.source->arrow_name(a)] = f.target->arrow_name(f.arrow_map[a]);
  }
  return {{"objects", objects}, {"arrows", arrows}};
}

std::string category_to_dot(const FinCategory& c, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << dot_id(name) << " {\n";
  for (int x = 0; x < c.object_count(); ++x) out << "  " << dot_id(c.object_name(x)) << ";\n";
  for (int f = 0; f < c.arrow_count(); ++f) {
    if (c.is_identity(f)) continue;
    out << "  " << dot_id(c.object_name(c.src(f))) << " -> " << dot_id(c.object_name(c.dst(f)))
        << " [label=" << dot_id(c.arrow_name(f)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string poset_to_dot(const Poset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << dot_id(name) << " {\n  rankdir=BT;\n";
  for (int x = 0; x < p.size(); ++x) out << "  " << dot_id(p.element(x)) << ";\n";
  for (const Json& e : poset_to_json(p).at("leq")) {
    out << "  " << dot_id(e[0].get<std::string>()) << " -> " << dot_id(e[1].get<std::string>()) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string complex_to_dot(const SimplicialComplex& k, const std::string& name) {
  std::ostringstream out;
  out << "graph " << dot_id(name) << " {\n";
  for (int v = 0; v < k.vertex_count(); ++v) out << "  " << dot_id(k.vertex(v)) << ";\n";
  for (const auto& f : k.faces()) {
    if (f.size() == 2) out << "  " << dot_id(k.vertex(f[0])) << " -- " << dot_id(k.vertex(f[1])) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sdcat

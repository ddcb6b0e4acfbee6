#include "halin/io.hpp"

#include <fstream>
#include <sstream>

namespace halin {

json read_json(const std::filesystem::path& p) {
  const std::string text = read_text(p);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::BadConfig, p.string() + ": " + e.what());
  }
}

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::IoFailure, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  require(static_cast<bool>(out), ErrorCode::IoFailure, "cannot write " + p.string());
  out << text;
  require(static_cast<bool>(out), ErrorCode::IoFailure, "write failed for " + p.string());
}

namespace {

template <class T>
T field(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorCode::BadConfig, std::string("missing field ") + key);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorCode::BadConfig, std::string("field ") + key + ": " + e.what());
  }
}

json path_json(const Path& p) {
  json a = json::array();
  for (Vertex v : p) a.push_back(v.id);
  return a;
}

Path path_from(const json& j) {
  require(j.is_array(), ErrorCode::BadConfig, "vertex list expected");
  Path p;
  for (const auto& v : j) p.push_back(Vertex{v.get<std::uint64_t>()});
  return p;
}

json tail_json(const TailRef& t) { return {{"base", t.base->index()}, {"offset", t.offset}, {"dir", t.direction}}; }

TailRef tail_from(const json& j, const BaseRayRegistry& reg) {
  TailRef t;
  t.base = reg.get(field<std::size_t>(j, "base"));
  t.offset = field<std::int64_t>(j, "offset");
  t.direction = j.value("dir", 1);
  require(t.direction == 1 || t.direction == -1, ErrorCode::BadConfig, "dir must be 1 or -1");
  return t;
}

}  // namespace

json graph_to_json(const FiniteGraph& g) {
  json j;
  j["kind"] = std::string(1, kind_letter(g.kind()));
  j["vertices"] = json::array();
  json labels = json::object();
  for (Vertex v : g.vertices()) {
    j["vertices"].push_back(v.id);
    if (auto l = g.labels.label(v)) labels[std::to_string(v.id)] = *l;
  }
  j["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u.id, v.id});
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

FiniteGraph graph_from_json(const json& j) {
  const auto kind = field<std::string>(j, "kind");
  require(kind == "U" || kind == "D", ErrorCode::BadConfig, "kind must be U or D");
  FiniteGraph g(kind == "U" ? GraphKind::Undirected : GraphKind::Directed);
  for (Vertex v : path_from(j.at("vertices"))) g.add_vertex(v);
  require(j.contains("edges") && j["edges"].is_array(), ErrorCode::BadConfig, "edges must be an array");
  for (const auto& e : j["edges"]) {
    require(e.is_array() && e.size() == 2, ErrorCode::BadConfig, "edge must be [u,v]");
    const Vertex u{e[0].get<std::uint64_t>()}, v{e[1].get<std::uint64_t>()};
    require(g.has_vertex(u) && g.has_vertex(v), ErrorCode::BadConfig, "edge endpoint not in vertices");
    g.add_edge(u, v);
  }
  if (j.contains("labels"))
    for (const auto& [k, l] : j["labels"].items()) g.labels.add(Vertex{std::stoull(k)}, l.get<std::string>());
  return g;
}

json enumeration_to_json(const StagewiseEnumeration& W) {
  json a = json::array();
  for (const auto& [e, s] : W.pairs) a.push_back({e, s});
  return a;
}

StagewiseEnumeration enumeration_from_json(const json& j) {
  require(j.is_array(), ErrorCode::BadConfig, "enumeration must be an array of [element, stage]");
  StagewiseEnumeration W;
  for (const auto& p : j) {
    require(p.is_array() && p.size() == 2, ErrorCode::BadConfig, "enumeration entry must be [element, stage]");
    W.pairs.emplace_back(p[0].get<std::uint64_t>(), p[1].get<std::uint64_t>());
  }
  W.validate();
  return W;
}

json spec_to_json(const InstanceSpec& s) {
  json j;
  j["instance"] = s.name;
  j["params"] = s.params;
  if (s.enumeration) j["enumeration"] = enumeration_to_json(*s.enumeration);
  return j;
}

InstanceSpec spec_from_json(const json& j) {
  InstanceSpec s;
  s.name = field<std::string>(j, "instance");
  if (j.contains("params")) s.params = j["params"].get<std::map<std::string, std::int64_t>>();
  if (j.contains("enumeration")) s.enumeration = enumeration_from_json(j["enumeration"]);
  return s;
}

std::vector<std::string> instance_names() {
  auto names = sample_names();
  names.push_back("enum_forest");
  names.push_back("nonuniform");
  return names;
}

Instance build_instance(const InstanceSpec& s) {
  if (s.name == "enum_forest" || s.name == "nonuniform") {
    require(s.enumeration.has_value(), ErrorCode::BadConfig, s.name + " needs an enumeration");
    if (s.name == "nonuniform") return nonuniform_graph(*s.enumeration);
    auto it = s.params.find("count");
    const std::int64_t count = it == s.params.end() ? 10 : it->second;
    require(count >= 1, ErrorCode::BadConfig, "count must be positive");
    return enum_forest(*s.enumeration, static_cast<std::size_t>(count));
  }
  return sample_graph(s.name, s.params);
}

json ray_to_json(const RayDescriptor& r) {
  json j = tail_json(r.tail);
  j["prefix"] = path_json(r.prefix);
  return j;
}

RayDescriptor ray_from_json(const json& j, const BaseRayRegistry& reg) {
  RayDescriptor r;
  r.prefix = path_from(j.value("prefix", json::array()));
  r.tail = tail_from(j, reg);
  return r;
}

json double_to_json(const DoubleRayDescriptor& d) {
  return {{"left", tail_json(d.left)}, {"center", path_json(d.center)}, {"right", tail_json(d.right)}};
}

DoubleRayDescriptor double_from_json(const json& j, const BaseRayRegistry& reg) {
  DoubleRayDescriptor d;
  d.left = tail_from(field<json>(j, "left"), reg);
  d.center = path_from(j.value("center", json::array()));
  d.right = tail_from(field<json>(j, "right"), reg);
  return d;
}

json transcript_to_json(const StageState& st, const InstanceSpec& spec, std::int64_t horizon) {
  json j;
  j["mode"] = st.mode;
  j["instance"] = spec_to_json(spec);
  j["horizon"] = horizon;
  j["Y"] = std::string(1, letter(st.Y));
  j["n"] = st.n;
  j["multi_tree"] = st.multi_tree;
  j["calls"] = json::array();
  for (const auto& c : st.calls) j["calls"].push_back({{"stage", c.stage}, {"k", c.k}, {"purpose", c.purpose}});
  j["stages"] = json::array();
  for (std::size_t s = 0; s < st.stages.size(); ++s) {
    const StageRecord& r = st.stages[s];
    json e{{"n", r.n}, {"requested", r.requested}};
    if (!r.prefix_hits.empty()) e["prefix_hits"] = r.prefix_hits;
    if (r.single)
      e["extension"] = {{"kept", r.single->kept},       {"discarded", r.single->discarded},
                        {"I", r.single->I},             {"new_ray", r.single->new_ray},
                        {"menger_paths", r.single->menger_paths}, {"routed", r.single->routed}};
    if (r.uvd)
      e["extension"] = {{"budget", r.uvd->budget}, {"hit_prefix", r.uvd->hit_prefix},
                        {"used", r.uvd->used},     {"new_ray", r.uvd->new_ray}};
    if (r.ded)
      e["extension"] = {{"budget", r.ded->budget}, {"edge_hitters", r.ded->edge_hitters},
                        {"a", r.ded->a},           {"e", r.ded->e},
                        {"action", r.ded->action}, {"swapped", r.ded->swapped}};
    if (s < st.history.size()) {
      json h = json::array();
      for (const Path& p : st.history[s]) h.push_back(path_json(p));
      e["frozen"] = h;
    }
    j["stages"].push_back(e);
  }
  if (st.shape == RayShape::Single) {
    j["rays"] = json::array();
    for (const auto& r : st.rays) j["rays"].push_back(ray_to_json(r));
    j["prefixes"] = json::array();
    for (const auto& p : st.prefixes) j["prefixes"].push_back(path_json(p));
  } else {
    j["doubles"] = json::array();
    for (const auto& d : st.doubles) {
      json e = double_to_json(d.ray);
      e["subpath"] = {d.path.start, d.path.end()};
      j["doubles"].push_back(e);
    }
  }
  return j;
}

json report_to_json(const DisjointReport& r) {
  json j{{"verdict", r.pass ? "PASS" : "FAIL"},
         {"mode", r.mode},
         {"horizon", r.horizon},
         {"pairs_checked", r.pairs_checked},
         {"summary", r.summary()}};
  j["failures"] = json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"a", f.a}, {"b", f.b}, {"evidence", f.evidence}});
  j["ray_problems"] = r.ray_problems;
  return j;
}

json script_to_json(const AdversaryScript& a) {
  json j{{"e", a.e}, {"values", json::array()}, {"traces", json::array()}};
  for (const auto& v : a.values)
    j["values"].push_back({{"i", v.i}, {"n", v.n}, {"stage", v.stage}, {"vertex", v.vertex}});
  for (const auto& t : a.traces)
    j["traces"].push_back({{"i", t.i}, {"k", t.k}, {"j", t.j}, {"from_stage", t.from_stage}, {"max_n", t.max_n}});
  return j;
}

AdversaryScript script_from_json(const json& j) {
  AdversaryScript a;
  a.e = field<std::size_t>(j, "e");
  for (const auto& v : j.value("values", json::array()))
    a.values.push_back({field<std::uint64_t>(v, "i"), field<std::uint64_t>(v, "n"), field<std::uint64_t>(v, "stage"),
                        field<std::uint64_t>(v, "vertex")});
  for (const auto& t : j.value("traces", json::array()))
    a.traces.push_back({field<std::uint64_t>(t, "i"), field<std::uint64_t>(t, "k"), field<std::uint64_t>(t, "j"),
                        field<std::uint64_t>(t, "from_stage"), t.value("max_n", std::uint64_t{1000000})});
  a.validate();
  return a;
}

json wirt_to_json(const WirtRun& run) {
  json j{{"stages", run.stages}, {"vertices", run.next_vertex}, {"paths", run.paths.size()}, {"dc", run.dc_holds()}};
  j["merges"] = json::array();
  for (const auto& m : run.merges)
    j["merges"].push_back({{"stage", m.stage}, {"e", m.e}, {"r", m.r}, {"x", m.x}, {"y", m.y}, {"z", m.z},
                           {"a", m.a}, {"u", m.u}, {"b", m.b}, {"v", m.v}, {"at_x", m.at_x}, {"at_y", m.at_y}});
  j["inits"] = json::array();
  for (const auto& i : run.inits) j["inits"].push_back({{"stage", i.stage}, {"e", i.e}, {"by", i.by}});
  j["requirements"] = json::array();
  for (const auto& r : run.requirements)
    j["requirements"].push_back({{"e", r.e}, {"satisfied", r.satisfied}, {"f", r.f}, {"acted", r.acted}});
  j["log"] = json::array();
  for (const auto& l : run.log) {
    json e{{"stage", l.stage}, {"vertices", l.vertices}, {"endpoints", l.endpoints}, {"dc", l.dc}};
    if (l.acted) e["acted"] = *l.acted;
    j["log"].push_back(e);
  }
  return j;
}

LoadedFamily load_family(const json& j) {
  LoadedFamily f;
  f.spec = spec_from_json(field<json>(j, "instance"));
  f.instance = build_instance(f.spec);
  const BaseRayRegistry& reg = *f.instance.registry;
  if (j.contains("doubles")) {
    f.is_double = true;
    for (const auto& d : j["doubles"]) f.doubles.push_back(double_from_json(d, reg));
  } else {
    for (const auto& r : field<json>(j, "rays")) f.rays.push_back(ray_from_json(r, reg));
  }
  return f;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const FiniteGraph& g) {
  const bool directed = g.kind() == GraphKind::Directed;
  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " G {\n";
  for (Vertex v : g.vertices()) {
    auto l = g.labels.label(v);
    out << "  " << v.id << " [label=" << quote(l ? *l : std::to_string(v.id)) << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u.id << (directed ? " -> " : " -- ") << v.id << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const LoadedFamily& f, std::int64_t window, std::function<std::string(Vertex)> label) {
  const bool directed = f.instance.graph && f.instance.graph->kind == GraphKind::Directed;
  std::vector<std::pair<std::string, Path>> paths;
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    Path p;
    for (std::int64_t n = 0; n < window; ++n) p.push_back(ray_vertex_at(f.rays[i], n));
    paths.emplace_back("R" + std::to_string(i), p);
  }
  for (std::size_t i = 0; i < f.doubles.size(); ++i) {
    Path p;
    for (std::int64_t n = -window; n < window; ++n) p.push_back(double_vertex_at(f.doubles[i], n));
    paths.emplace_back("D" + std::to_string(i), p);
  }
  std::set<Vertex> vs;
  for (const auto& [_, p] : paths) vs.insert(p.begin(), p.end());
  if (!label) label = f.instance.label;
  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " G {\n";
  for (Vertex v : vs) out << "  " << v.id << " [label=" << quote(label ? label(v) : std::to_string(v.id)) << "];\n";
  for (const auto& [name, p] : paths)
    for (std::size_t t = 0; t + 1 < p.size(); ++t)
      out << "  " << p[t].id << (directed ? " -> " : " -- ") << p[t + 1].id << " [label=" << quote(name) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace halin

// halin: generate instances, run engines, verify families, apply gadgets, export graphs.

#include <filesystem>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "halin/engine.hpp"
#include "halin/io.hpp"
#include "halin/reductions.hpp"
#include "halin/wirt.hpp"

using namespace halin;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string what;
  std::string instance;
  std::vector<std::string> params;
  std::string enumeration;
  std::int64_t k = -1, count = -1;
  std::uint64_t seed = 0;
  bool random_enum = false;
  std::size_t stages = 10;
  std::int64_t horizon = 1024;
  std::string mode;
  std::string family, graph, gadget, adversaries;
  std::int64_t depth = 3, window = 8;
  std::string out;
  std::string format = "json";
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) std::cout << text;
  else write_text(o.out, text);
}

void emit(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

std::map<std::string, std::int64_t> parse_params(const std::vector<std::string>& kv) {
  std::map<std::string, std::int64_t> out;
  for (const auto& s : kv) {
    const auto eq = s.find('=');
    require(eq != std::string::npos && eq > 0, ErrorCode::BadConfig, "--param expects key=value, got " + s);
    try {
      out[s.substr(0, eq)] = std::stoll(s.substr(eq + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::BadConfig, "--param value must be an integer: " + s);
    }
  }
  return out;
}

StagewiseEnumeration parse_enumeration(const std::string& text) {
  StagewiseEnumeration W;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto c = item.find(':');
    require(c != std::string::npos, ErrorCode::BadConfig, "--enum expects element:stage pairs, got " + item);
    try {
      W.pairs.emplace_back(std::stoull(item.substr(0, c)), std::stoull(item.substr(c + 1)));
    } catch (const std::exception&) {
      fail(ErrorCode::BadConfig, "bad --enum entry " + item);
    }
  }
  W.validate();
  return W;
}

InstanceSpec spec_from_options(const Options& o, const std::string& name) {
  InstanceSpec s;
  s.name = name;
  s.params = parse_params(o.params);
  if (o.k >= 0) s.params["k"] = o.k;
  if (o.count >= 0) s.params["count"] = o.count;
  if (!o.enumeration.empty()) {
    s.enumeration = parse_enumeration(o.enumeration);
  } else if (o.random_enum || name == "enum_forest" || name == "nonuniform") {
    std::mt19937_64 rng(o.seed);
    s.enumeration = random_enumeration(rng, 8, 8, 6);
  }
  return s;
}

InstanceSpec resolve_instance(const Options& o) {
  require(!o.instance.empty(), ErrorCode::BadConfig, "--instance is required");
  if (fs::exists(o.instance)) {
    json j = read_json(o.instance);
    return spec_from_json(j.contains("instance") && j["instance"].is_object() ? j["instance"] : j);
  }
  return spec_from_options(o, o.instance);
}

int cmd_gen(const Options& o) {
  const InstanceSpec s = spec_from_options(o, o.what);
  const Instance inst = build_instance(s);
  json j = spec_to_json(s);
  j["family"] = {{"name", inst.family.name},
                 {"kind", std::string(1, kind_letter(inst.family.kind))},
                 {"Y", std::string(1, letter(inst.family.Y))},
                 {"Z", std::string(1, letter(inst.family.Z))}};
  emit(o, j);
  return 0;
}

int cmd_run(const Options& o) {
  require(o.stages >= 1, ErrorCode::BadConfig, "--stages must be at least 1");
  require(o.horizon >= static_cast<std::int64_t>(o.stages), ErrorCode::BadConfig, "--horizon must be >= --stages");
  if (o.what == "wirt") {
    std::vector<AdversaryScript> adv;
    if (o.adversaries.empty()) {
      adv = wirt_demo_adversaries();
    } else {
      json j = read_json(o.adversaries);
      for (const auto& a : j.at("adversaries")) adv.push_back(script_from_json(a));
    }
    WirtRun run = wirt_priority_build(adv, o.stages);
    json j = wirt_to_json(run);
    j["adversaries"] = json::array();
    for (const auto& a : adv) j["adversaries"].push_back(script_to_json(a));
    j["obs_violations"] = run.obs_violations();
    emit(o, j);
    return 0;
  }
  const InstanceSpec spec = resolve_instance(o);
  const Instance inst = build_instance(spec);
  EngineOptions opt;
  opt.horizon = o.horizon;
  StageState st;
  if (o.what == "irt-single") st = irt_run_single(inst.family, o.stages, opt);
  else if (o.what == "irt-uvd") st = irt_run_double_uvd(inst.family, o.stages, opt);
  else if (o.what == "irt-ded") st = irt_run_ded_forest(inst.family, o.stages, opt);
  else fail(ErrorCode::UnknownName, "unknown engine " + o.what);
  emit(o, transcript_to_json(st, spec, o.horizon));
  return 0;
}

Disjointness mode_disjointness(const std::string& mode) {
  if (mode == "V") return Disjointness::Vertex;
  if (mode == "E") return Disjointness::Edge;
  if (mode == "DED-forest") return Disjointness::Edge;
  require(mode.size() == 3 && (mode[0] == 'U' || mode[0] == 'D') && (mode[1] == 'V' || mode[1] == 'E') &&
              (mode[2] == 'S' || mode[2] == 'D'),
          ErrorCode::BadConfig, "unknown mode " + mode);
  return mode[1] == 'V' ? Disjointness::Vertex : Disjointness::Edge;
}

int cmd_verify(const Options& o) {
  require(!o.family.empty(), ErrorCode::BadConfig, "--family is required");
  const json j = read_json(o.family);
  const LoadedFamily f = load_family(j);
  std::string mode = o.mode;
  if (mode.empty()) mode = j.value("Y", std::string(1, letter(f.instance.family.Y)));
  if (mode.size() == 3 && mode != "DED")
    require((mode[2] == 'D') == f.is_double, ErrorCode::KindMismatch, "mode " + mode + " does not match the family");
  const Disjointness Y = mode_disjointness(mode);
  const GraphKind kind = f.instance.graph ? f.instance.graph->kind : GraphKind::Undirected;
  const LazyGraph* g = f.instance.graph.get();
  DisjointReport r = f.is_double ? verify_disjoint(f.doubles, Y, o.horizon, *f.instance.oracle, kind, g)
                                 : verify_disjoint(f.rays, Y, o.horizon, *f.instance.oracle, kind, g);
  json rep = report_to_json(r);
  if (o.out.empty()) {
    std::cout << r.summary() << "\n";
  } else {
    emit(o, rep);
    std::cout << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  if (!r.pass) {
    for (const auto& p : r.failures) std::cerr << "offending pair (" << p.a << ", " << p.b << "): " << p.evidence << "\n";
    for (const auto& p : r.ray_problems) std::cerr << "ray problem: " << p << "\n";
    return static_cast<int>(ErrorCode::FamilyNotDisjoint);
  }
  return 0;
}

int cmd_transform(const Options& o) {
  require(!o.graph.empty(), ErrorCode::BadConfig, "--graph is required");
  const FiniteGraph g = graph_from_json(read_json(o.graph));
  const GadgetKind kind = gadget_from_string(o.gadget);
  const FiniteGraph t = transform_graph(kind, g, o.depth);
  if (o.format == "dot") emit(o, export_dot(t));
  else emit(o, graph_to_json(t));
  return 0;
}

int cmd_export(const Options& o) {
  require(o.format == "dot" || o.format == "json", ErrorCode::BadConfig, "--format must be json or dot");
  if (!o.graph.empty()) {
    const FiniteGraph g = graph_from_json(read_json(o.graph));
    emit(o, o.format == "dot" ? export_dot(g) : graph_to_json(g).dump(2) + "\n");
    return 0;
  }
  require(!o.family.empty(), ErrorCode::BadConfig, "--graph or --family is required");
  const json j = read_json(o.family);
  const LoadedFamily f = load_family(j);
  if (o.format == "dot") emit(o, export_dot(f, o.window));
  else emit(o, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Disjoint ray constructions: instances, engines, verification, gadgets"};
  app.require_subcommand(1);

  auto add_instance_flags = [&](CLI::App* c) {
    c->add_option("--param", o.params, "instance parameter key=value");
    c->add_option("--k", o.k, "shorthand for --param k=K");
    c->add_option("--count", o.count, "shorthand for --param count=C");
    c->add_option("--enum", o.enumeration, "enumeration pairs element:stage,...");
    c->add_option("--seed", o.seed, "seed for a random enumeration");
    c->add_flag("--random-enum", o.random_enum, "draw the enumeration from --seed");
    c->add_option("--out", o.out, "output path (stdout if absent)");
  };

  auto* gen = app.add_subcommand("gen", "write an instance description");
  gen->add_option("name", o.what, "instance name")->required()->check(CLI::IsMember(instance_names()));
  add_instance_flags(gen);

  auto* run = app.add_subcommand("run", "run an engine and write its transcript");
  run->add_option("engine", o.what, "irt-single | irt-uvd | irt-ded | wirt")
      ->required()
      ->check(CLI::IsMember({"irt-single", "irt-uvd", "irt-ded", "wirt"}));
  run->add_option("--instance", o.instance, "instance JSON path or instance name");
  run->add_option("--stages", o.stages, "number of stages N");
  run->add_option("--horizon", o.horizon, "verification horizon H");
  run->add_option("--mode", o.mode, "UVS|UES|DVS|DES|UVD|DED-forest (informational)");
  run->add_option("--adversaries", o.adversaries, "adversary scripts for wirt");
  add_instance_flags(run);

  auto* verify = app.add_subcommand("verify", "check pairwise disjointness of a family");
  verify->add_option("--family", o.family, "transcript or family JSON")->required();
  verify->add_option("--mode", o.mode, "V | E | UVS | UES | DVS | DES | UVD | DED-forest");
  verify->add_option("--horizon", o.horizon, "verification horizon H");
  verify->add_option("--out", o.out, "report path");

  auto* transform = app.add_subcommand("transform", "apply a gadget to a finite graph");
  transform->add_option("--gadget", o.gadget, "UtoD | VtoE_split | attach_neg_tails | line_graph")->required();
  transform->add_option("--graph", o.graph, "graph JSON")->required();
  transform->add_option("--depth", o.depth, "tail length for attach_neg_tails");
  transform->add_option("--format", o.format, "json | dot");
  transform->add_option("--out", o.out, "output path");

  auto* exp = app.add_subcommand("export", "export a graph or a family");
  exp->add_option("--graph", o.graph, "graph JSON");
  exp->add_option("--family", o.family, "transcript or family JSON");
  exp->add_option("--window", o.window, "ray positions drawn");
  exp->add_option("--format", o.format, "json | dot");
  exp->add_option("--out", o.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ErrorCode::BadConfig);
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*run) return cmd_run(o);
    if (*verify) return cmd_verify(o);
    if (*transform) return cmd_transform(o);
    if (*exp) return cmd_export(o);
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(error_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 125;
  }
  return static_cast<int>(ErrorCode::BadConfig);
}

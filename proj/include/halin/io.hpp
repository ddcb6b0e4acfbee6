#pragma once

// JSON persistence for graphs, instances, ray families and run transcripts; DOT export.

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "halin/engine.hpp"
#include "halin/graph.hpp"
#include "halin/instances.hpp"
#include "halin/wirt.hpp"

namespace halin {

using json = nlohmann::json;

json read_json(const std::filesystem::path& p);  // IoFailure
void write_text(const std::filesystem::path& p, const std::string& text);
std::string read_text(const std::filesystem::path& p);

// {"kind": "U"|"D", "vertices": [...], "edges": [[u,v],...]}, labels under "labels" when present.
json graph_to_json(const FiniteGraph& g);
FiniteGraph graph_from_json(const json& j);  // BadConfig on malformed input

// Named instance: {"instance": name, "params": {...}, "enumeration": [[e,s],...]}.
struct InstanceSpec {
  std::string name;
  std::map<std::string, std::int64_t> params;
  std::optional<StagewiseEnumeration> enumeration;
};

json spec_to_json(const InstanceSpec& s);
InstanceSpec spec_from_json(const json& j);
// sample names plus enum_forest (params count) and nonuniform; UnknownName otherwise.
Instance build_instance(const InstanceSpec& s);
std::vector<std::string> instance_names();

json enumeration_to_json(const StagewiseEnumeration& W);
StagewiseEnumeration enumeration_from_json(const json& j);

// Rays: {"prefix": [...], "base": i, "offset": o, "dir": d}.
json ray_to_json(const RayDescriptor& r);
RayDescriptor ray_from_json(const json& j, const BaseRayRegistry& reg);
json double_to_json(const DoubleRayDescriptor& d);
DoubleRayDescriptor double_from_json(const json& j, const BaseRayRegistry& reg);

json transcript_to_json(const StageState& st, const InstanceSpec& spec, std::int64_t horizon);
json report_to_json(const DisjointReport& r);

json script_to_json(const AdversaryScript& a);
AdversaryScript script_from_json(const json& j);
json wirt_to_json(const WirtRun& run);

// Loaded family file: any run transcript or {"instance": ..., "rays"|"doubles": [...]}.
struct LoadedFamily {
  InstanceSpec spec;
  Instance instance;
  std::vector<RayDescriptor> rays;
  std::vector<DoubleRayDescriptor> doubles;
  bool is_double = false;
};
LoadedFamily load_family(const json& j);

std::string export_dot(const FiniteGraph& g);
// Rays drawn as annotated paths over positions [0, window) (double rays: [-window, window)).
std::string export_dot(const LoadedFamily& f, std::int64_t window, std::function<std::string(Vertex)> label = {});

}  // namespace halin

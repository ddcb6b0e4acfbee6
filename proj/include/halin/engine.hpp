#pragma once

// Stagewise constructions of many disjoint rays, maximality engines, and the
// family verifier.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "halin/extension.hpp"
#include "halin/graph.hpp"

namespace halin {

enum class Disjointness { Vertex, Edge };
enum class RayShape { Single, Double };

char letter(Disjointness y);
char letter(RayShape z);

// family(k) gives k pairwise disjoint rays over one registry.
struct RayFamilyOracle {
  std::string name;
  GraphKind kind = GraphKind::Undirected;
  Disjointness Y = Disjointness::Vertex;
  RayShape Z = RayShape::Single;
  std::function<std::vector<RayDescriptor>(std::size_t)> single;
  std::function<std::vector<DoubleRayDescriptor>(std::size_t)> doubles;
  std::shared_ptr<const IntersectionOracle> oracle;
  std::shared_ptr<const BaseRayRegistry> registry;
  std::shared_ptr<const LazyGraph> graph;  // optional, enables adjacency checks
  // Base index -> tree id, for forests.
  std::function<std::size_t(std::size_t)> tree_of;
};

struct EngineOptions {
  std::int64_t horizon = 1024;
  bool validate = true;
};

struct FamilyCall {
  std::size_t stage = 0;
  std::size_t k = 0;
  std::string purpose;  // "base", "stage" or "probe"
};

struct StageRecord {
  std::size_t n = 0;  // rays before the stage
  std::size_t requested = 0;
  std::vector<std::size_t> prefix_hits;  // single mode
  std::optional<ExtensionLog> single;
  std::optional<DoubleExtensionLog> uvd;
  std::optional<DedExtensionLog> ded;
};

struct StageState {
  std::string mode;  // "irt-single", "irt-uvd", "irt-ded"
  RayShape shape = RayShape::Single;
  Disjointness Y = Disjointness::Vertex;
  std::size_t n = 0;
  std::vector<RayDescriptor> rays;
  std::vector<Path> prefixes;
  std::vector<DoubleWithPath> doubles;
  std::vector<FamilyCall> calls;
  std::vector<StageRecord> stages;
  // Frozen prefix (single) or subpath vertices (double) of every ray after each stage.
  std::vector<std::vector<Path>> history;
  bool multi_tree = false;
};

StageState irt_run_single(const RayFamilyOracle& oracle, std::size_t N, const EngineOptions& opt = {});
StageState irt_run_double_uvd(const RayFamilyOracle& oracle, std::size_t N, const EngineOptions& opt = {});
StageState irt_run_ded_forest(const RayFamilyOracle& oracle, std::size_t N, const EngineOptions& opt = {});

// ---- verification ----

struct PairVerdict {
  std::size_t a = 0, b = 0;
  bool ok = true;
  std::string evidence;
};

struct DisjointReport {
  bool pass = true;
  std::int64_t horizon = 0;
  std::string mode;
  std::vector<PairVerdict> failures;
  std::vector<std::string> ray_problems;
  std::size_t pairs_checked = 0;
  std::string summary() const;
};

DisjointReport verify_disjoint(const std::vector<RayDescriptor>& family, Disjointness Y,
                               std::int64_t horizon, const IntersectionOracle& oracle,
                               GraphKind kind = GraphKind::Undirected, const LazyGraph* graph = nullptr);
DisjointReport verify_disjoint(const std::vector<DoubleRayDescriptor>& family, Disjointness Y,
                               std::int64_t horizon, const IntersectionOracle& oracle,
                               GraphKind kind = GraphKind::Undirected, const LazyGraph* graph = nullptr);

bool rays_conflict(const MeetResult& m, Disjointness Y, GraphKind kind);

// ---- maximality ----

// Returns a ray starting at start disjoint from forbidden, or nullopt.
using RayDecider =
    std::function<std::optional<RayDescriptor>(Vertex start, const std::vector<RayDescriptor>& forbidden)>;

struct MirtOptions {
  Disjointness Y = Disjointness::Vertex;
  GraphKind kind = GraphKind::Undirected;
  std::size_t max_calls = 100000;
};

struct MirtResult {
  std::vector<RayDescriptor> family;
  std::vector<Vertex> chosen_starts;
  std::size_t decider_calls = 0;
};

// Greedy over start data in the given order.
MirtResult mirt_greedy(const std::vector<Vertex>& starts, const RayDecider& decide,
                       const MirtOptions& opt = {});

// Decider over a finite declared ray universe: first declared ray with that start
// which is disjoint from the forbidden family.
RayDecider universe_decider(std::vector<RayDescriptor> universe,
                            std::shared_ptr<const IntersectionOracle> oracle, MirtOptions opt);

// Indices of declared rays that could still be added to family.
std::vector<std::size_t> addable(const std::vector<RayDescriptor>& universe,
                                 const std::vector<RayDescriptor>& family,
                                 const IntersectionOracle& oracle, const MirtOptions& opt);

// Maximum-size pairwise disjoint subfamily (indices); at most 20 rays.
std::vector<std::size_t> max_cardinality_brute(const std::vector<RayDescriptor>& universe,
                                               const IntersectionOracle& oracle,
                                               const MirtOptions& opt = {});

}  // namespace halin

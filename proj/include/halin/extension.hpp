#pragma once

// Ray-extension steps: from n disjoint rays and a surplus family build n+1
// disjoint rays that keep the old start data.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halin/graph.hpp"

namespace halin {

struct ExtensionOptions {
  std::int64_t horizon = 1024;
  GraphKind kind = GraphKind::Undirected;
  // Optional adjacency used to check concatenations.
  AdjacencyFn adjacency;
  // Check pairwise disjointness of the inputs before starting.
  bool validate_inputs = true;
};

struct ExtensionLog {
  std::size_t n = 0;
  std::size_t surplus = 0;
  std::vector<std::size_t> kept;       // R indices kept unchanged, in the order they were fixed
  std::vector<std::size_t> discarded;  // S indices discarded by the loop, in order
  std::vector<std::size_t> I;
  std::map<std::size_t, std::int64_t> z;
  std::size_t new_ray = 0;               // S index taken as the extra ray
  std::vector<std::size_t> menger_side;  // S indices meeting F
  std::size_t menger_vertices = 0;
  std::size_t menger_edges = 0;
  std::size_t menger_paths = 0;
  std::size_t separator = 0;
  std::vector<std::pair<std::size_t, std::size_t>> routed;  // (i, q): R'_i continues along S_q
};

struct SingleExtension {
  std::vector<RayDescriptor> rays;  // R'_0 .. R'_n
  ExtensionLog log;
};

SingleExtension extend_single(const std::vector<RayDescriptor>& R,
                              const std::vector<RayDescriptor>& S,
                              const IntersectionOracle& oracle,
                              const ExtensionOptions& opt = {});

// z_i for i in I: least position on R_i by which m = |I| distinct rays of S have been met.
std::map<std::size_t, std::int64_t> compute_z_points(const std::vector<std::size_t>& I,
                                                     const std::vector<RayDescriptor>& R,
                                                     const std::vector<RayDescriptor>& S,
                                                     const IntersectionOracle& oracle,
                                                     std::int64_t horizon = 1024);

struct DoubleWithPath {
  DoubleRayDescriptor ray;
  Subpath path;
};

struct DoubleExtensionLog {
  std::size_t n = 0;
  std::size_t budget = 0;
  std::vector<std::size_t> hit_prefix;  // S indices dropped for touching some P_i
  std::vector<std::size_t> used;        // surviving S indices handed to the single-ray extension
  ExtensionLog halves;                  // on half-rays: R index 2i+d, S index 2j+d (d: 0 back, 1 fwd)
  std::size_t new_ray = 0;              // original S index
};

struct DoubleExtension {
  std::vector<DoubleWithPath> rays;
  DoubleExtensionLog log;
};

std::size_t uvd_budget(std::size_t n);

DoubleExtension extend_double_uvd(const std::vector<DoubleWithPath>& R,
                                  const std::vector<DoubleRayDescriptor>& S,
                                  const IntersectionOracle& oracle,
                                  const ExtensionOptions& opt = {});

// Common stretch of two double rays in a directed forest, in r0 positions;
// r1 position = r0 position + shift.
struct ForestInterval {
  bool from_neg_inf = false;
  bool to_pos_inf = false;
  std::int64_t start = 0;  // valid unless from_neg_inf
  std::int64_t end = 0;    // valid unless to_pos_inf
  std::int64_t shift = 0;
  bool operator==(const ForestInterval&) const = default;
};

std::string to_string(const std::optional<ForestInterval>& iv);

// nullopt when the rays share no edge. NotAForest when the common part is not one interval.
std::optional<ForestInterval> forest_intersection(const DoubleRayDescriptor& r0,
                                                  const DoubleRayDescriptor& r1,
                                                  const IntersectionOracle& oracle);

struct LabelDED {
  std::vector<std::size_t> order;  // C in order of appearance along the pool ray
  std::vector<int> sides;          // +1 above P_i, -1 below, aligned with order
  auto operator<=>(const LabelDED&) const = default;
};

std::string to_string(const LabelDED& label);

std::uint64_t ded_budget(std::size_t n);

struct DedExtensionLog {
  std::size_t n = 0;
  std::size_t budget = 0;
  std::vector<std::size_t> edge_hitters;
  std::vector<std::pair<std::size_t, LabelDED>> labels;  // surviving pool index -> label
  std::size_t a = 0, e = 0;
  std::string action;  // "disjoint" or "swap"
  std::size_t swapped = 0;
  std::size_t c = 0, d = 0;
};

struct DedExtension {
  std::vector<DoubleWithPath> rays;
  DedExtensionLog log;
};

DedExtension extend_double_ded_forest(const std::vector<DoubleWithPath>& S,
                                      const std::vector<DoubleRayDescriptor>& pool,
                                      const IntersectionOracle& oracle,
                                      const ExtensionOptions& opt = {});

// True iff d contains the directed edge (u, v) in traversal order.
bool double_has_edge(const DoubleRayDescriptor& d, Vertex u, Vertex v);

}  // namespace halin

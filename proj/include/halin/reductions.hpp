#pragma once

// Gadget transformations between ray problems: graph maps and forward/backward
// ray maps, line graphs, and locally finite subgraphs of edge-disjoint families.

#include <string>
#include <variant>
#include <vector>

#include "halin/engine.hpp"
#include "halin/graph.hpp"

namespace halin {

enum class GadgetKind { UtoD, VtoE_split, attach_neg_tails, line_graph };
enum class MapDirection { Forward, Backward };

std::string to_string(GadgetKind kind);
GadgetKind gadget_from_string(const std::string& name);  // UnknownName

// ---- vertex ids ----

// UtoD: u -> 3u, x(u,v) = 3 pair(min,max) + 1, y(u,v) = 3 pair(min,max) + 2.
Vertex utod_vertex(Vertex u);
Vertex utod_x(Vertex u, Vertex v);
Vertex utod_y(Vertex u, Vertex v);
// VtoE_split: x_i = 2x, x_o = 2x + 1.
Vertex split_in(Vertex x);
Vertex split_out(Vertex x);
// attach_neg_tails: x -> 2x, x_n (n < 0) -> 2 pair(x, -n-1) + 1.
Vertex tail_host(Vertex x);
Vertex tail_vertex(Vertex x, std::int64_t n);
// line graph: vertex for the edge (u,v); undirected edges are stored as (min,max).
Vertex line_vertex(GraphKind kind, Vertex u, Vertex v);
std::pair<Vertex, Vertex> line_endpoints(Vertex e);

// ---- graphs ----

// attach_neg_tails on a finite graph keeps tails of length depth.
FiniteGraph transform_graph(GadgetKind kind, const FiniteGraph& g, std::int64_t depth = 3);
LazyGraph transform_graph(GadgetKind kind, const LazyGraph& g);

struct GadgetCounts {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  bool operator==(const GadgetCounts&) const = default;
};

GadgetCounts closed_form_counts(GadgetKind kind, const FiniteGraph& g, std::int64_t depth = 3);

// ---- ray maps ----

using AnyRay = std::variant<RayDescriptor, DoubleRayDescriptor>;

// Forward maps take rays of the source graph (kind is its orientation); backward
// maps take rays of the transformed graph. attach_neg_tails sends single rays
// forward to double rays and double rays back to single rays.
AnyRay map_ray(GadgetKind kind, MapDirection dir, const AnyRay& r, GraphKind source_kind = GraphKind::Undirected);

RayDescriptor utod_forward(const RayDescriptor& r);
DoubleRayDescriptor utod_forward(const DoubleRayDescriptor& d);
RayDescriptor utod_backward(const RayDescriptor& r);
DoubleRayDescriptor utod_backward(const DoubleRayDescriptor& d);

RayDescriptor split_forward(const RayDescriptor& r);
DoubleRayDescriptor split_forward(const DoubleRayDescriptor& d);
RayDescriptor split_backward(const RayDescriptor& r);
DoubleRayDescriptor split_backward(const DoubleRayDescriptor& d);

DoubleRayDescriptor attach_forward(const RayDescriptor& r);
RayDescriptor attach_backward(const DoubleRayDescriptor& d);
// Replaces rays by tails until all start vertices differ.
std::vector<RayDescriptor> normalize_starts(const std::vector<RayDescriptor>& family);

RayDescriptor line_ray_forward(const RayDescriptor& r, GraphKind kind);

struct LineBackward {
  RayDescriptor ray;
  std::vector<std::int64_t> k;  // k_n for the computed steps
};

// g must be locally finite with an exhaustive neighbour list.
LineBackward line_ray_backward(const LazyGraph& g, const RayDescriptor& r, std::int64_t steps = 1024);
// Finite variant on a path of line-graph vertices; FuelExhausted when the recursion stalls.
LineBackward line_path_backward(const LazyGraph& g, const Path& edges);

// ---- window checks ----

bool window_disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b, Disjointness Y, GraphKind kind);

// ---- locally finite subgraph ----

struct SubgraphStage {
  std::size_t k = 0;
  std::vector<std::vector<std::int64_t>> n;  // n[j][i] = position of v_i on R_j^k, 0 if absent
  std::vector<std::int64_t> cut;             // S_j^k starts at position cut[j] of R_j^k
};

struct LocallyFiniteSubgraph {
  std::vector<Vertex> order;                        // v_0 .. v_{K-1}
  std::vector<std::vector<RayDescriptor>> family;   // family[k-1] = S^k
  std::vector<RayDescriptor> seed;                  // R_0^1, all of its edges
  std::vector<SubgraphStage> log;
  GraphKind kind = GraphKind::Undirected;

  // Edge test against the union of all contributed rays.
  bool has_edge(Vertex u, Vertex v) const;
  // Neighbours of v in the subgraph (finite by construction).
  std::vector<Vertex> neighbors(Vertex v) const;
  LazyGraph graph() const;
};

LocallyFiniteSubgraph locally_finite_subgraph(const LazyGraph& g,
                                              const std::function<std::vector<RayDescriptor>(std::size_t)>& family,
                                              std::size_t K, const IntersectionOracle& oracle,
                                              std::int64_t horizon = 1024);

}  // namespace halin

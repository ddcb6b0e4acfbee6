#pragma once

// Core data model: finite and lazily presented graphs, paths, rays in
// prefix-plus-tail form, double rays, and meet certificates.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "halin/error.hpp"

namespace halin {

struct Vertex {
  std::uint64_t id = 0;
  auto operator<=>(const Vertex&) const = default;
};

struct VertexHash {
  std::size_t operator()(Vertex v) const noexcept { return std::hash<std::uint64_t>{}(v.id); }
};

enum class GraphKind { Undirected, Directed };

char kind_letter(GraphKind kind);

// Edge as stored: ordered pair for directed graphs, (min, max) for undirected.
using Edge = std::pair<Vertex, Vertex>;

Edge canonical_edge(GraphKind kind, Vertex u, Vertex v);

using Path = std::vector<Vertex>;

namespace codec {

std::uint64_t pair(std::uint64_t a, std::uint64_t b);
std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t z);
std::uint64_t zigzag(std::int64_t z);
std::int64_t unzigzag(std::uint64_t u);

}  // namespace codec

// Injective id <-> label map for gadget vertices with structured names.
class LabelCodec {
 public:
  void add(Vertex v, std::string label);
  std::optional<std::string> label(Vertex v) const;
  std::optional<Vertex> find(const std::string& label) const;
  std::size_t size() const { return by_id_.size(); }

 private:
  std::map<std::uint64_t, std::string> by_id_;
  std::map<std::string, std::uint64_t> by_label_;
};

class FiniteGraph {
 public:
  explicit FiniteGraph(GraphKind kind = GraphKind::Undirected) : kind_(kind) {}

  GraphKind kind() const { return kind_; }
  void add_vertex(Vertex v);
  // Throws PreconditionViolated on self-loops or unknown endpoints.
  void add_edge(Vertex u, Vertex v);

  bool has_vertex(Vertex v) const { return adj_out_.count(v) != 0; }
  // Respects orientation for directed graphs.
  bool has_edge(Vertex u, Vertex v) const;

  const std::map<Vertex, std::set<Vertex>>& out_adjacency() const { return adj_out_; }
  std::vector<Vertex> vertices() const;
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return adj_out_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Out-neighbours (directed) or neighbours (undirected), ascending.
  const std::set<Vertex>& successors(Vertex v) const;
  // All neighbours regardless of orientation.
  std::vector<Vertex> neighbors(Vertex v) const;

  FiniteGraph without(const std::set<Vertex>& removed) const;

  LabelCodec labels;

 private:
  GraphKind kind_;
  std::map<Vertex, std::set<Vertex>> adj_out_;
  std::map<Vertex, std::set<Vertex>> adj_in_;
  std::set<Edge> edges_;
};

// An infinite (or finite) graph given by an adjacency predicate.
struct LazyGraph {
  GraphKind kind = GraphKind::Undirected;
  std::function<bool(Vertex, Vertex)> adjacent;
  // Exhaustive neighbour list in both orientations; required when locally_finite.
  std::function<std::vector<Vertex>(Vertex)> neighbors;
  bool locally_finite = false;
  // Enumeration v_0, v_1, ... of the vertex set when available.
  std::function<std::optional<Vertex>(std::uint64_t)> vertex_at;
  std::shared_ptr<const LabelCodec> labels;

  static LazyGraph from_finite(const FiniteGraph& g);
};

// A registered base ray. Single base rays are defined on n >= 0, double base
// rays on all integers.
class BaseRay {
 public:
  virtual ~BaseRay() = default;
  virtual std::size_t index() const = 0;
  virtual bool is_double() const = 0;
  virtual Vertex at(std::int64_t n) const = 0;
  virtual std::optional<std::int64_t> position(Vertex v) const = 0;

  bool in_domain(std::int64_t n) const { return is_double() || n >= 0; }
  // Position of the edge (u, v) traversed in increasing order, if present.
  std::optional<std::int64_t> edge_position(Vertex u, Vertex v) const;
};

class FunctionBaseRay final : public BaseRay {
 public:
  using AtFn = std::function<Vertex(std::int64_t)>;
  using PosFn = std::function<std::optional<std::int64_t>(Vertex)>;

  FunctionBaseRay(std::size_t index, bool is_double, AtFn at, PosFn pos)
      : index_(index), double_(is_double), at_(std::move(at)), pos_(std::move(pos)) {}

  std::size_t index() const override { return index_; }
  bool is_double() const override { return double_; }
  Vertex at(std::int64_t n) const override { return at_(n); }
  std::optional<std::int64_t> position(Vertex v) const override;

 private:
  std::size_t index_;
  bool double_;
  AtFn at_;
  PosFn pos_;
};

using BaseRayPtr = std::shared_ptr<const BaseRay>;

class BaseRayRegistry {
 public:
  virtual ~BaseRayRegistry() = default;
  virtual BaseRayPtr get(std::size_t index) const = 0;
};

class VectorRegistry final : public BaseRayRegistry {
 public:
  explicit VectorRegistry(std::vector<BaseRayPtr> entries) : entries_(std::move(entries)) {}
  BaseRayPtr get(std::size_t index) const override;
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<BaseRayPtr> entries_;
};

// Infinite registry whose entries are produced on demand by a pure generator.
class GeneratedRegistry final : public BaseRayRegistry {
 public:
  explicit GeneratedRegistry(std::function<BaseRayPtr(std::size_t)> gen) : gen_(std::move(gen)) {}
  BaseRayPtr get(std::size_t index) const override { return gen_(index); }

 private:
  std::function<BaseRayPtr(std::size_t)> gen_;
};

// Tail vertex k is base->at(offset + direction * k).
struct TailRef {
  BaseRayPtr base;
  std::int64_t offset = 0;
  int direction = 1;

  Vertex at(std::int64_t k) const { return base->at(offset + direction * k); }
  // Tail index of v, if v lies on the tail.
  std::optional<std::int64_t> index_of(Vertex v) const;
  TailRef advanced(std::int64_t k) const { return {base, offset + direction * k, direction}; }
};

struct RayDescriptor {
  Path prefix;
  TailRef tail;
};

struct DoubleRayDescriptor {
  TailRef left;   // position -1-k is left.at(k)
  Path center;    // positions 0 .. center.size()-1
  TailRef right;  // position center.size()+k is right.at(k)
};

// Closed position interval [start, start + length] inside a double ray.
struct Subpath {
  std::int64_t start = 0;
  std::int64_t length = 0;  // number of edges
  std::int64_t end() const { return start + length; }
};

// first(a + da*k) == second(b + db*k) for all k >= 0.
struct SharedRun {
  std::int64_t first = 0;
  std::int64_t second = 0;
  int first_dir = 1;
  int second_dir = 1;
  auto operator<=>(const SharedRun&) const = default;
};

// Exhaustive meet structure between two base rays, in base coordinates.
struct BaseMeet {
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  std::vector<SharedRun> runs;
};

class IntersectionOracle {
 public:
  virtual ~IntersectionOracle() = default;
  // Only called for distinct registry indices.
  virtual BaseMeet certify(const BaseRay& a, const BaseRay& b) const = 0;
};

class FunctionOracle final : public IntersectionOracle {
 public:
  explicit FunctionOracle(std::function<BaseMeet(const BaseRay&, const BaseRay&)> fn)
      : fn_(std::move(fn)) {}
  BaseMeet certify(const BaseRay& a, const BaseRay& b) const override { return fn_(a, b); }

 private:
  std::function<BaseMeet(const BaseRay&, const BaseRay&)> fn_;
};

// User-declared certificate table; missing pairs are Disjoint.
class TableOracle final : public IntersectionOracle {
 public:
  void declare(std::size_t a, std::size_t b, BaseMeet meet);
  BaseMeet certify(const BaseRay& a, const BaseRay& b) const override;

 private:
  std::map<std::pair<std::size_t, std::size_t>, BaseMeet> table_;
};

BaseMeet swap_meet(const BaseMeet& m);

struct MeetResult {
  enum class Kind { Disjoint, FiniteMeets, SharedTail };
  Kind kind = Kind::Disjoint;
  // Meets outside shared runs, sorted by first-ray position.
  std::vector<std::pair<std::int64_t, std::int64_t>> meets;
  // Infinite shared stretches; for single rays at most one, giving the earliest alignment.
  std::vector<SharedRun> runs;

  bool disjoint() const { return kind == Kind::Disjoint; }
  std::optional<std::pair<std::int64_t, std::int64_t>> shared_tail() const;
  // First-ray positions p such that edge (p, p+1) of the first ray is also an edge of the second.
  std::vector<std::int64_t> shared_edges(GraphKind kind, std::size_t limit = 64) const;
  bool shares_edge(GraphKind kind) const;
};

std::string to_string(MeetResult::Kind kind);

// ---- single rays ----

Vertex ray_vertex_at(const RayDescriptor& r, std::int64_t n);
std::optional<std::int64_t> ray_membership(const RayDescriptor& r, Vertex v);
RayDescriptor tail_of(const RayDescriptor& r, std::int64_t n);
RayDescriptor ray_from_base(BaseRayPtr base, std::int64_t offset = 0, int direction = 1);
std::vector<Vertex> enumerate(const RayDescriptor& r, std::int64_t horizon);
Path ray_prefix(const RayDescriptor& r, std::int64_t count);

using AdjacencyFn = std::function<bool(Vertex, Vertex)>;

// Prepends p to r. adjacency may be empty, in which case it is not checked.
RayDescriptor concat_path_ray(const Path& p, const RayDescriptor& r,
                              const AdjacencyFn& adjacency = {});

// Meet structure of two rays; tail-vs-tail stretches come from the oracle.
MeetResult rays_meet(const RayDescriptor& r1, const RayDescriptor& r2,
                     const IntersectionOracle& oracle);

// ---- double rays ----

Vertex double_vertex_at(const DoubleRayDescriptor& d, std::int64_t z);
std::optional<std::int64_t> double_membership(const DoubleRayDescriptor& d, Vertex v);
DoubleRayDescriptor double_from_base(BaseRayPtr base);
// Ray d(p), d(p+1), ...
RayDescriptor forward_from(const DoubleRayDescriptor& d, std::int64_t p);
// Ray d(p), d(p-1), ...
RayDescriptor backward_from(const DoubleRayDescriptor& d, std::int64_t p);
// Double ray reverse(back) ++ middle ++ fwd; middle starts at position back.prefix.size().
DoubleRayDescriptor join_double(const RayDescriptor& back, const Path& middle,
                                const RayDescriptor& fwd);
std::vector<Vertex> enumerate(const DoubleRayDescriptor& d, std::int64_t lo, std::int64_t hi);
Path subpath_vertices(const DoubleRayDescriptor& d, const Subpath& s);

// Splits at an edge (c, next) occurring at consecutive positions.
std::pair<RayDescriptor, RayDescriptor> split_double(const DoubleRayDescriptor& d,
                                                     std::pair<Vertex, Vertex> edge);

MeetResult rays_meet(const DoubleRayDescriptor& d1, const DoubleRayDescriptor& d2,
                     const IntersectionOracle& oracle);
MeetResult rays_meet(const RayDescriptor& r, const DoubleRayDescriptor& d,
                     const IntersectionOracle& oracle);

// Checks injectivity and (optionally) adjacency over positions [lo, hi].
struct WindowCheck {
  bool ok = true;
  std::string problem;
};
WindowCheck check_window(const std::function<Vertex(std::int64_t)>& at, std::int64_t lo,
                         std::int64_t hi, const LazyGraph* graph);
WindowCheck check_ray(const RayDescriptor& r, std::int64_t horizon, const LazyGraph* graph);
WindowCheck check_double(const DoubleRayDescriptor& d, std::int64_t horizon,
                         const LazyGraph* graph);

}  // namespace halin

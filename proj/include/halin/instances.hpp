#pragma once

// Instance generators: enumeration trees, the decoder graph, sample graphs with
// closed-form registries and meet oracles, and decoders.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "halin/engine.hpp"
#include "halin/graph.hpp"

namespace halin {

// Finite list of (element, stage) pairs standing in for a c.e. set.
struct StagewiseEnumeration {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;

  // Throws BadConfig on repeated elements or stage 0.
  void validate() const;
  // W_s restricted to [0, n).
  std::set<std::uint64_t> at_stage(std::uint64_t n, std::uint64_t s) const;
  // W restricted to [0, n).
  std::set<std::uint64_t> limit(std::uint64_t n) const;
  // Stages s at which some element below n enters, ascending.
  std::vector<std::uint64_t> entry_stages(std::uint64_t n) const;
  std::optional<std::uint64_t> least_element() const;
  std::uint64_t max_stage() const;
};

StagewiseEnumeration random_enumeration(std::mt19937_64& rng, std::uint64_t max_element,
                                        std::uint64_t max_stage, std::size_t count);

struct Instance {
  std::string name;
  std::map<std::string, std::int64_t> params;
  std::shared_ptr<LazyGraph> graph;
  std::shared_ptr<const BaseRayRegistry> registry;
  std::shared_ptr<const IntersectionOracle> oracle;
  RayFamilyOracle family;
  // Declared ray universe with start data, for maximality runs.
  std::vector<RayDescriptor> universe;
  std::vector<Vertex> starts;
  std::function<std::string(Vertex)> label;
};

// ---- enumeration trees ----

// Tree T_n: strings s^0^t. Strand s is finite (t <= length) or infinite.
struct EnumTree {
  std::uint64_t n = 0;
  std::map<std::uint64_t, std::optional<std::uint64_t>> strands;  // s -> last t, nullopt = infinite
  std::optional<std::uint64_t> branch;                            // s of the infinite strand

  bool contains(std::uint64_t s, std::uint64_t t) const;
};

EnumTree enum_tree(std::uint64_t n, const StagewiseEnumeration& W);

Vertex enum_root(std::uint64_t n);
Vertex enum_vertex(std::uint64_t n, std::uint64_t s, std::uint64_t t);
// (tree, s, t) for non-root vertices; tree only for roots.
struct EnumCoords {
  std::uint64_t tree = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> st;
};
EnumCoords enum_coords(Vertex v);

// Disjoint union of the trees T_n, n >= 1. family(k) returns the branches of the
// first k trees that have one; count is the advertised number of trees.
Instance enum_forest(const StagewiseEnumeration& W, std::size_t count);

// W restricted to [0, m), read off a ray lying in some T_n with n >= m.
std::set<std::uint64_t> decode_enumeration(const std::vector<RayDescriptor>& rays, std::uint64_t m,
                                           const StagewiseEnumeration& W);

// ---- decoder graph ----

Vertex spine_vertex(std::uint64_t n);  // 0^n, n >= 1
Vertex strand_vertex(std::uint64_t n, std::uint64_t s, std::uint64_t t);
bool in_nonuniform(const StagewiseEnumeration& W, std::uint64_t n, std::uint64_t s, std::uint64_t t);

// family(k) is the witness sequence of strand rays R_{n, s_n}, l < n <= l + k.
Instance nonuniform_graph(const StagewiseEnumeration& W);

// The ray starting at n^s (strand, then spine if the strand dies).
RayDescriptor nonuniform_ray(const Instance& inst, const StagewiseEnumeration& W, std::uint64_t n,
                             std::uint64_t s);

std::set<std::uint64_t> decode_nonuniform(const std::vector<RayDescriptor>& rays, std::uint64_t m,
                                          const StagewiseEnumeration& W);

// ---- sample graphs ----

// comb | grid | ray_forest | double_comb | ded_tree | ded_lines | hub | mirt_gap
Instance sample_graph(const std::string& name, const std::map<std::string, std::int64_t>& params);
std::vector<std::string> sample_names();

Vertex comb_spine(std::uint64_t n);
Vertex comb_tooth(std::uint64_t j, std::uint64_t k);  // k >= 1
Vertex grid_vertex(std::uint64_t r, std::uint64_t c);
Vertex plane_vertex(std::int64_t r, std::int64_t c);

// Pieces of the grid registry: row r is base 2r, column c is base 2c+1.
BaseRayPtr grid_row(const Instance& grid, std::uint64_t r);
BaseRayPtr grid_column(const Instance& grid, std::uint64_t c);

// Random extension input: n pairwise disjoint rays R and n^2+1 pairwise disjoint S.
struct ExtensionCase {
  Instance instance;
  std::vector<RayDescriptor> R;
  std::vector<RayDescriptor> S;
};

ExtensionCase random_grid_case(std::mt19937_64& rng, std::size_t n);
ExtensionCase random_comb_case(std::mt19937_64& rng, std::size_t n);

// Finite-branch forest with a declared ray universe (at most max_rays rays).
Instance random_branch_forest(std::mt19937_64& rng, bool unique_branches, std::size_t max_rays);

}  // namespace halin

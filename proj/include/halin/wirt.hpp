#pragma once

// Finite-injury priority construction of a computable graph carrying, for each
// k, k vertex-disjoint double rays, against scripted adversaries.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "halin/error.hpp"

namespace halin {

// Phi_{e,s}(i, n) = vertex for every s >= stage.
struct ScriptValue {
  std::uint64_t i = 0, n = 0, stage = 0;
  std::uint64_t vertex = 0;
};

// Phi_{e,s}(i, n) = P^k_{j,s}(n) for s >= from_stage and 0 <= n <= max_n inside the current domain.
struct ScriptTrace {
  std::uint64_t i = 0;
  std::uint64_t k = 0, j = 0;
  std::uint64_t from_stage = 0;
  std::uint64_t max_n = 1000000;
};

struct AdversaryScript {
  std::size_t e = 0;
  std::vector<ScriptValue> values;
  std::vector<ScriptTrace> traces;

  // ScriptViolation on conflicting values or columns converging out of order.
  void validate() const;
};

struct WirtPath {
  std::size_t k = 0, i = 0;
  std::int64_t lo = 0;
  std::deque<std::uint32_t> v;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(v.size()) - 1; }
  bool covers(std::int64_t n) const { return n >= lo && n <= hi(); }
  std::uint32_t at(std::int64_t n) const { return v[static_cast<std::size_t>(n - lo)]; }
};

struct RequirementState {
  std::size_t e = 0;
  bool satisfied = false;
  std::size_t f = 0;  // last initialization stage
  std::size_t acted = 0;
};

struct MergeRecord {
  std::size_t stage = 0, e = 0;
  std::uint32_t r = 0, x = 0, y = 0, z = 0;
  std::uint64_t a = 0, u = 0, b = 0, v = 0;
  std::vector<std::pair<std::size_t, std::size_t>> at_x, at_y;  // (k, i) of paths ending at x / y
};

struct InitRecord {
  std::size_t stage = 0, e = 0, by = 0;
};

struct WirtStageLog {
  std::size_t stage = 0;
  std::optional<std::size_t> acted;
  std::size_t vertices = 0;
  std::size_t endpoints = 0;
  bool dc = true;
};

struct WirtRun {
  std::size_t stages = 0;
  std::vector<WirtPath> paths;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;  // (k, i) -> path id
  std::vector<RequirementState> requirements;
  std::vector<MergeRecord> merges;
  std::vector<InitRecord> inits;
  std::vector<WirtStageLog> log;
  std::uint32_t next_vertex = 0;

  // Ownership: first (path, coordinate) per vertex, further owners in extra.
  std::vector<std::uint32_t> owner;
  std::vector<std::int32_t> coord;
  std::unordered_map<std::uint32_t, std::vector<std::pair<std::uint32_t, std::int32_t>>> extra;
  std::unordered_map<std::uint32_t, std::size_t> merge_point;  // r -> merge index

  const WirtPath& path(std::size_t k, std::size_t i) const;
  std::vector<std::pair<std::uint32_t, std::int32_t>> owners(std::uint32_t v) const;
  std::vector<std::uint32_t> neighbors(std::uint32_t v) const;
  bool is_endpoint(std::uint32_t v) const;
  std::size_t edge_count() const;

  // Full check of the disjointness condition.
  bool dc_holds() const;
  // Degree facts: merge points have exactly the neighbours x, y, z; other non-endpoints
  // have exactly two neighbours; no endpoint is a merge point.
  std::vector<std::string> obs_violations() const;
  bool share_edge(std::pair<std::size_t, std::size_t> p, std::pair<std::size_t, std::size_t> q) const;
};

WirtRun wirt_priority_build(const std::vector<AdversaryScript>& adversaries, std::size_t S);

// Three adversaries with a cascade of initializations.
std::vector<AdversaryScript> wirt_demo_adversaries();

}  // namespace halin

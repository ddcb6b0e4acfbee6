#include "halin/engine.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace halin {

char letter(Disjointness y) { return y == Disjointness::Vertex ? 'V' : 'E'; }
char letter(RayShape z) { return z == RayShape::Single ? 'S' : 'D'; }

bool rays_conflict(const MeetResult& m, Disjointness Y, GraphKind kind) {
  return Y == Disjointness::Vertex ? !m.disjoint() : m.shares_edge(kind);
}

namespace {

std::string describe(const MeetResult& m) {
  std::string out = to_string(m.kind);
  if (!m.runs.empty())
    out += " at (" + std::to_string(m.runs[0].first) + "," + std::to_string(m.runs[0].second) + ")";
  else if (!m.meets.empty())
    out += " first (" + std::to_string(m.meets[0].first) + "," + std::to_string(m.meets[0].second) + ")";
  return out;
}

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.first.id * 0x9E3779B97F4A7C15ULL ^ e.second.id);
  }
};

// Enumerated windows of every ray, checked for collisions across rays.
template <typename At>
std::vector<std::string> window_collisions(std::size_t count, const At& at, std::int64_t lo,
                                           const std::function<std::int64_t(std::size_t)>& hi,
                                           Disjointness Y, GraphKind kind,
                                           std::vector<std::pair<std::size_t, std::size_t>>* pairs) {
  std::vector<std::string> problems;
  std::unordered_map<Vertex, std::size_t, VertexHash> owner;
  std::unordered_map<Edge, std::size_t, EdgeHash> edge_owner;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t r = 0; r < count; ++r) {
    std::optional<Vertex> prev;
    for (std::int64_t p = lo; p <= hi(r); ++p) {
      const Vertex v = at(r, p);
      if (Y == Disjointness::Vertex) {
        auto [it, fresh] = owner.emplace(v, r);
        if (!fresh && it->second != r && seen.insert({it->second, r}).second) {
          problems.push_back("rays " + std::to_string(it->second) + " and " + std::to_string(r) +
                             " share vertex " + std::to_string(v.id));
          if (pairs) pairs->emplace_back(it->second, r);
        }
      } else if (prev) {
        auto [it, fresh] = edge_owner.emplace(canonical_edge(kind, *prev, v), r);
        if (!fresh && it->second != r && seen.insert({it->second, r}).second) {
          problems.push_back("rays " + std::to_string(it->second) + " and " + std::to_string(r) +
                             " share edge (" + std::to_string(prev->id) + "," + std::to_string(v.id) + ")");
          if (pairs) pairs->emplace_back(it->second, r);
        }
      }
      prev = v;
    }
  }
  return problems;
}

std::vector<RayDescriptor> fetch_single(const RayFamilyOracle& o, std::size_t k, std::size_t stage,
                                        const std::string& purpose, StageState& st,
                                        const EngineOptions& opt) {
  st.calls.push_back({stage, k, purpose});
  require(static_cast<bool>(o.single), ErrorCode::KindMismatch, "oracle does not provide single rays");
  auto fam = o.single(k);
  require(fam.size() == k, ErrorCode::OracleBroke,
          "family(" + std::to_string(k) + ") returned " + std::to_string(fam.size()) + " rays");
  if (opt.validate) {
    auto rep = verify_disjoint(fam, o.Y, opt.horizon, *o.oracle, o.kind, o.graph.get());
    require(rep.pass, ErrorCode::OracleBroke, "family(" + std::to_string(k) + "): " + rep.summary());
  }
  return fam;
}

std::vector<DoubleRayDescriptor> fetch_double(const RayFamilyOracle& o, std::size_t k, std::size_t stage,
                                              const std::string& purpose, StageState& st,
                                              const EngineOptions& opt) {
  st.calls.push_back({stage, k, purpose});
  require(static_cast<bool>(o.doubles), ErrorCode::KindMismatch, "oracle does not provide double rays");
  auto fam = o.doubles(k);
  require(fam.size() == k, ErrorCode::OracleBroke,
          "family(" + std::to_string(k) + ") returned " + std::to_string(fam.size()) + " double rays");
  if (opt.validate) {
    auto rep = verify_disjoint(fam, o.Y, opt.horizon, *o.oracle, o.kind, o.graph.get());
    require(rep.pass, ErrorCode::OracleBroke, "family(" + std::to_string(k) + "): " + rep.summary());
  }
  return fam;
}

void snapshot_doubles(StageState& st) {
  std::vector<Path> snap;
  for (const auto& d : st.doubles) snap.push_back(subpath_vertices(d.ray, d.path));
  st.history.push_back(std::move(snap));
  st.n = st.doubles.size();
}

}  // namespace

// ------------------------------------------------------------------ engines

StageState irt_run_single(const RayFamilyOracle& oracle, std::size_t N, const EngineOptions& opt) {
  require(N >= 1, ErrorCode::BadConfig, "stages must be >= 1");
  require(oracle.Z == RayShape::Single, ErrorCode::KindMismatch, "single-ray engine needs Z=S");
  require(opt.horizon >= static_cast<std::int64_t>(N), ErrorCode::BadConfig, "horizon must be >= stages");
  StageState st;
  st.mode = "irt-single";
  st.shape = RayShape::Single;
  st.Y = oracle.Y;
  AdjacencyFn adj;
  if (oracle.graph) adj = oracle.graph->adjacent;

  auto base = fetch_single(oracle, 1, 0, "base", st, opt);
  st.rays = {base[0]};
  st.prefixes = {ray_prefix(base[0], 1)};
  st.n = 1;
  st.stages.push_back({0, 1, {}, std::nullopt, std::nullopt, std::nullopt});
  st.history.push_back(st.prefixes);

  for (std::size_t n = 1; n < N; ++n) {
    StageRecord rec;
    rec.n = n;
    rec.requested = 2 * n * n + 1;
    auto fam = fetch_single(oracle, rec.requested, n, "stage", st, opt);
    std::unordered_set<Vertex, VertexHash> pv;
    for (const auto& p : st.prefixes) pv.insert(p.begin(), p.end());
    std::vector<RayDescriptor> S;
    for (std::size_t j = 0; j < fam.size(); ++j) {
      bool hit = false;
      for (Vertex v : pv)
        if (ray_membership(fam[j], v)) {
          hit = true;
          break;
        }
      if (hit) rec.prefix_hits.push_back(j);
      else if (S.size() < n * n + 1) S.push_back(fam[j]);
    }
    require(S.size() >= n * n + 1, ErrorCode::DiscardExhausted,
            "stage " + std::to_string(n) + ": only " + std::to_string(S.size()) + " rays avoid the prefixes");
    std::vector<RayDescriptor> tails;
    for (const auto& r : st.rays) tails.push_back(tail_of(r, static_cast<std::int64_t>(n)));
    ExtensionOptions eo;
    eo.horizon = opt.horizon;
    eo.kind = oracle.kind;
    eo.adjacency = adj;
    eo.validate_inputs = false;
    SingleExtension ext = extend_single(tails, S, *oracle.oracle, eo);
    for (std::size_t i = 0; i < n; ++i) {
      st.rays[i] = concat_path_ray(st.prefixes[i], ext.rays[i], adj);
      st.prefixes[i].push_back(ray_vertex_at(ext.rays[i], 0));
    }
    st.rays.push_back(ext.rays[n]);
    st.prefixes.push_back(ray_prefix(ext.rays[n], static_cast<std::int64_t>(n + 1)));
    rec.single = ext.log;
    st.stages.push_back(std::move(rec));
    st.n = st.rays.size();
    st.history.push_back(st.prefixes);
  }
  return st;
}

StageState irt_run_double_uvd(const RayFamilyOracle& oracle, std::size_t N, const EngineOptions& opt) {
  require(N >= 1, ErrorCode::BadConfig, "stages must be >= 1");
  require(oracle.Z == RayShape::Double, ErrorCode::KindMismatch, "double-ray engine needs Z=D");
  require(oracle.Y == Disjointness::Vertex && oracle.kind == GraphKind::Undirected, ErrorCode::KindMismatch,
          "this engine handles undirected vertex-disjoint double rays");
  StageState st;
  st.mode = "irt-uvd";
  st.shape = RayShape::Double;
  st.Y = oracle.Y;
  auto base = fetch_double(oracle, 1, 0, "base", st, opt);
  st.doubles = {{base[0], {0, 2}}};
  st.stages.push_back({0, 1, {}, std::nullopt, std::nullopt, std::nullopt});
  snapshot_doubles(st);
  ExtensionOptions eo;
  eo.horizon = opt.horizon;
  eo.kind = oracle.kind;
  if (oracle.graph) eo.adjacency = oracle.graph->adjacent;
  eo.validate_inputs = false;
  for (std::size_t n = 1; n < N; ++n) {
    StageRecord rec;
    rec.n = n;
    rec.requested = uvd_budget(n);
    auto fam = fetch_double(oracle, rec.requested, n, "stage", st, opt);
    DoubleExtension ext = extend_double_uvd(st.doubles, fam, *oracle.oracle, eo);
    st.doubles = ext.rays;
    rec.uvd = ext.log;
    st.stages.push_back(std::move(rec));
    snapshot_doubles(st);
  }
  return st;
}

StageState irt_run_ded_forest(const RayFamilyOracle& oracle, std::size_t N, const EngineOptions& opt) {
  require(N >= 1, ErrorCode::BadConfig, "stages must be >= 1");
  require(oracle.Z == RayShape::Double && oracle.Y == Disjointness::Edge && oracle.kind == GraphKind::Directed,
          ErrorCode::KindMismatch, "forest engine handles directed edge-disjoint double rays");
  StageState st;
  st.mode = "irt-ded";
  st.shape = RayShape::Double;
  st.Y = oracle.Y;

  if (oracle.tree_of) {
    auto probe = fetch_double(oracle, N, 0, "probe", st, opt);
    std::vector<std::size_t> trees_seen;
    std::vector<DoubleWithPath> picked;
    for (const auto& d : probe) {
      const std::size_t t = oracle.tree_of(d.right.base->index());
      if (std::find(trees_seen.begin(), trees_seen.end(), t) != trees_seen.end()) continue;
      trees_seen.push_back(t);
      picked.push_back({d, {0, static_cast<std::int64_t>(2 * N)}});
    }
    if (picked.size() >= N) {
      st.multi_tree = true;
      st.doubles = picked;
      snapshot_doubles(st);
      return st;
    }
  }

  ExtensionOptions eo;
  eo.horizon = opt.horizon;
  eo.kind = GraphKind::Directed;
  eo.validate_inputs = false;
  st.history.push_back({});
  for (std::size_t n = 0; n < N; ++n) {
    StageRecord rec;
    rec.n = n;
    rec.requested = static_cast<std::size_t>(ded_budget(n));
    auto pool = fetch_double(oracle, rec.requested, n, "stage", st, opt);
    DedExtension ext = extend_double_ded_forest(st.doubles, pool, *oracle.oracle, eo);
    st.doubles = ext.rays;
    rec.ded = ext.log;
    st.stages.push_back(std::move(rec));
    snapshot_doubles(st);
  }
  return st;
}

// ------------------------------------------------------------- verification

std::string DisjointReport::summary() const {
  if (pass) return "PASS (" + mode + ", " + std::to_string(pairs_checked) + " pairs, horizon " +
                   std::to_string(horizon) + ")";
  std::string out = "FAIL (" + mode + ")";
  for (const auto& f : failures)
    out += "; pair (" + std::to_string(f.a) + "," + std::to_string(f.b) + "): " + f.evidence;
  for (const auto& p : ray_problems) out += "; " + p;
  return out;
}

namespace {

template <typename Ray, typename At, typename Check>
DisjointReport verify_family(const std::vector<Ray>& family, Disjointness Y, std::int64_t horizon,
                             const IntersectionOracle& oracle, GraphKind kind, const LazyGraph* graph,
                             const At& at, std::int64_t lo, const std::function<std::int64_t(std::size_t)>& hi,
                             const Check& check) {
  DisjointReport rep;
  rep.horizon = horizon;
  rep.mode = std::string(1, letter(Y));
  std::set<std::pair<std::size_t, std::size_t>> certified_bad;
  for (std::size_t a = 0; a < family.size(); ++a) {
    const WindowCheck wc = check(family[a]);
    if (!wc.ok) rep.ray_problems.push_back("ray " + std::to_string(a) + ": " + wc.problem);
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      ++rep.pairs_checked;
      const MeetResult m = rays_meet(family[a], family[b], oracle);
      if (rays_conflict(m, Y, kind)) {
        rep.failures.push_back({a, b, false, describe(m)});
        certified_bad.insert({a, b});
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> window_pairs;
  auto problems = window_collisions(family.size(), at, lo, hi, Y, kind, &window_pairs);
  for (std::size_t k = 0; k < window_pairs.size(); ++k)
    if (!certified_bad.count(window_pairs[k]))
      rep.ray_problems.push_back("certificate missed: " + problems[k]);
  (void)graph;
  rep.pass = rep.failures.empty() && rep.ray_problems.empty();
  return rep;
}

}  // namespace

DisjointReport verify_disjoint(const std::vector<RayDescriptor>& family, Disjointness Y,
                               std::int64_t horizon, const IntersectionOracle& oracle, GraphKind kind,
                               const LazyGraph* graph) {
  return verify_family(
      family, Y, horizon, oracle, kind, graph,
      [&](std::size_t r, std::int64_t p) { return ray_vertex_at(family[r], p); }, 0,
      [&](std::size_t) { return horizon; },
      [&](const RayDescriptor& r) { return check_ray(r, horizon, graph); });
}

DisjointReport verify_disjoint(const std::vector<DoubleRayDescriptor>& family, Disjointness Y,
                               std::int64_t horizon, const IntersectionOracle& oracle, GraphKind kind,
                               const LazyGraph* graph) {
  return verify_family(
      family, Y, horizon, oracle, kind, graph,
      [&](std::size_t r, std::int64_t p) { return double_vertex_at(family[r], p); }, -horizon,
      [&](std::size_t r) { return horizon + static_cast<std::int64_t>(family[r].center.size()); },
      [&](const DoubleRayDescriptor& d) { return check_double(d, horizon, graph); });
}

// --------------------------------------------------------------- maximality

MirtResult mirt_greedy(const std::vector<Vertex>& starts, const RayDecider& decide, const MirtOptions& opt) {
  MirtResult res;
  for (Vertex s : starts) {
    require(res.decider_calls < opt.max_calls, ErrorCode::DeciderTimeout,
            "decider call budget " + std::to_string(opt.max_calls) + " exhausted");
    ++res.decider_calls;
    if (auto r = decide(s, res.family)) {
      res.family.push_back(*r);
      res.chosen_starts.push_back(s);
    }
  }
  return res;
}

RayDecider universe_decider(std::vector<RayDescriptor> universe,
                            std::shared_ptr<const IntersectionOracle> oracle, MirtOptions opt) {
  return [universe = std::move(universe), oracle, opt](
             Vertex start, const std::vector<RayDescriptor>& forbidden) -> std::optional<RayDescriptor> {
    for (const auto& r : universe) {
      if (ray_vertex_at(r, 0) != start) continue;
      bool ok = true;
      for (const auto& f : forbidden)
        if (rays_conflict(rays_meet(r, f, *oracle), opt.Y, opt.kind)) {
          ok = false;
          break;
        }
      if (ok) return r;
    }
    return std::nullopt;
  };
}

std::vector<std::size_t> addable(const std::vector<RayDescriptor>& universe,
                                 const std::vector<RayDescriptor>& family,
                                 const IntersectionOracle& oracle, const MirtOptions& opt) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    bool ok = true;
    for (const auto& f : family)
      if (rays_conflict(rays_meet(universe[i], f, oracle), opt.Y, opt.kind)) ok = false;
    if (ok) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> max_cardinality_brute(const std::vector<RayDescriptor>& universe,
                                               const IntersectionOracle& oracle, const MirtOptions& opt) {
  const std::size_t n = universe.size();
  require(n <= 20, ErrorCode::TooLarge, std::to_string(n) + " declared rays exceeds limit 20");
  std::vector<std::uint32_t> clash(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rays_conflict(rays_meet(universe[a], universe[b], oracle), opt.Y, opt.kind)) {
        clash[a] |= 1u << b;
        clash[b] |= 1u << a;
      }
  std::uint32_t best = 0;
  int best_size = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best_size) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      if ((mask >> a & 1u) && (clash[a] & mask)) ok = false;
    if (ok) {
      best = mask;
      best_size = size;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < n; ++a)
    if (best >> a & 1u) out.push_back(a);
  return out;
}

}  // namespace halin

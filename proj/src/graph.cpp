#include "halin/graph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace halin {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::VertexRepetition: return "VertexRepetition";
    case ErrorCode::EdgeNotOnRay: return "EdgeNotOnRay";
    case ErrorCode::OracleInconsistent: return "OracleInconsistent";
    case ErrorCode::OracleBroke: return "OracleBroke";
    case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorCode::FuelExhausted: return "FuelExhausted";
    case ErrorCode::DiscardExhausted: return "DiscardExhausted";
    case ErrorCode::NoEqualLabelPair: return "NoEqualLabelPair";
    case ErrorCode::NotAForest: return "NotAForest";
    case ErrorCode::InstanceContract: return "InstanceContract";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::MalformedImage: return "MalformedImage";
    case ErrorCode::NotLocallyFinite: return "NotLocallyFinite";
    case ErrorCode::FamilyNotDisjoint: return "FamilyNotDisjoint";
    case ErrorCode::InsufficientRays: return "InsufficientRays";
    case ErrorCode::ScriptViolation: return "ScriptViolation";
    case ErrorCode::DeciderTimeout: return "DeciderTimeout";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

char kind_letter(GraphKind kind) { return kind == GraphKind::Directed ? 'D' : 'U'; }

Edge canonical_edge(GraphKind kind, Vertex u, Vertex v) {
  if (kind == GraphKind::Undirected && v < u) std::swap(u, v);
  return {u, v};
}

namespace codec {

std::uint64_t pair(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t z) {
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(z) + 1) - 1) / 2);
  while (w * (w + 1) / 2 > z) --w;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  const std::uint64_t b = z - w * (w + 1) / 2;
  return {w - b, b};
}

std::uint64_t zigzag(std::int64_t z) {
  return z >= 0 ? static_cast<std::uint64_t>(z) * 2 : static_cast<std::uint64_t>(-z) * 2 - 1;
}

std::int64_t unzigzag(std::uint64_t u) {
  return (u % 2 == 0) ? static_cast<std::int64_t>(u / 2) : -static_cast<std::int64_t>((u + 1) / 2);
}

}  // namespace codec

void LabelCodec::add(Vertex v, std::string label) {
  auto it = by_label_.find(label);
  require(it == by_label_.end() || it->second == v.id, ErrorCode::PreconditionViolated,
          "label '" + label + "' already bound to another vertex");
  auto jt = by_id_.find(v.id);
  require(jt == by_id_.end() || jt->second == label, ErrorCode::PreconditionViolated,
          "vertex " + std::to_string(v.id) + " already labelled");
  by_id_[v.id] = label;
  by_label_[std::move(label)] = v.id;
}

std::optional<std::string> LabelCodec::label(Vertex v) const {
  auto it = by_id_.find(v.id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<Vertex> LabelCodec::find(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return Vertex{it->second};
}

// ---------------------------------------------------------------- FiniteGraph

void FiniteGraph::add_vertex(Vertex v) {
  adj_out_[v];
  adj_in_[v];
}

void FiniteGraph::add_edge(Vertex u, Vertex v) {
  require(u != v, ErrorCode::PreconditionViolated, "self-loop at " + std::to_string(u.id));
  require(has_vertex(u) && has_vertex(v), ErrorCode::PreconditionViolated,
          "edge references unknown vertex");
  edges_.insert(canonical_edge(kind_, u, v));
  adj_out_[u].insert(v);
  adj_in_[v].insert(u);
  if (kind_ == GraphKind::Undirected) {
    adj_out_[v].insert(u);
    adj_in_[u].insert(v);
  }
}

bool FiniteGraph::has_edge(Vertex u, Vertex v) const {
  auto it = adj_out_.find(u);
  return it != adj_out_.end() && it->second.count(v) != 0;
}

std::vector<Vertex> FiniteGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adj_out_.size());
  for (const auto& [v, _] : adj_out_) out.push_back(v);
  return out;
}

const std::set<Vertex>& FiniteGraph::successors(Vertex v) const {
  static const std::set<Vertex> empty;
  auto it = adj_out_.find(v);
  return it == adj_out_.end() ? empty : it->second;
}

std::vector<Vertex> FiniteGraph::neighbors(Vertex v) const {
  std::set<Vertex> all;
  if (auto it = adj_out_.find(v); it != adj_out_.end()) all.insert(it->second.begin(), it->second.end());
  if (auto it = adj_in_.find(v); it != adj_in_.end()) all.insert(it->second.begin(), it->second.end());
  return {all.begin(), all.end()};
}

FiniteGraph FiniteGraph::without(const std::set<Vertex>& removed) const {
  FiniteGraph out(kind_);
  for (const auto& [v, _] : adj_out_)
    if (!removed.count(v)) out.add_vertex(v);
  for (const auto& [u, v] : edges_)
    if (!removed.count(u) && !removed.count(v)) out.add_edge(u, v);
  return out;
}

LazyGraph LazyGraph::from_finite(const FiniteGraph& g) {
  auto shared = std::make_shared<const FiniteGraph>(g);
  auto order = std::make_shared<const std::vector<Vertex>>(g.vertices());
  LazyGraph out;
  out.kind = g.kind();
  out.adjacent = [shared](Vertex u, Vertex v) { return shared->has_edge(u, v); };
  out.neighbors = [shared](Vertex v) { return shared->neighbors(v); };
  out.locally_finite = true;
  out.vertex_at = [order](std::uint64_t i) -> std::optional<Vertex> {
    if (i >= order->size()) return std::nullopt;
    return (*order)[i];
  };
  out.labels = std::make_shared<const LabelCodec>(g.labels);
  return out;
}

// ------------------------------------------------------------------ base rays

std::optional<std::int64_t> BaseRay::edge_position(Vertex u, Vertex v) const {
  auto p = position(u);
  if (!p || !in_domain(*p + 1) || at(*p + 1) != v) return std::nullopt;
  return p;
}

std::optional<std::int64_t> FunctionBaseRay::position(Vertex v) const { return pos_(v); }

BaseRayPtr VectorRegistry::get(std::size_t index) const {
  require(index < entries_.size(), ErrorCode::PreconditionViolated,
          "registry index " + std::to_string(index) + " out of range");
  return entries_[index];
}

std::optional<std::int64_t> TailRef::index_of(Vertex v) const {
  auto p = base->position(v);
  if (!p) return std::nullopt;
  const std::int64_t k = (*p - offset) * direction;
  if (k < 0) return std::nullopt;
  return k;
}

void TableOracle::declare(std::size_t a, std::size_t b, BaseMeet meet) {
  table_[{b, a}] = swap_meet(meet);
  table_[{a, b}] = std::move(meet);
}

BaseMeet TableOracle::certify(const BaseRay& a, const BaseRay& b) const {
  auto it = table_.find({a.index(), b.index()});
  return it == table_.end() ? BaseMeet{} : it->second;
}

BaseMeet swap_meet(const BaseMeet& m) {
  BaseMeet out;
  for (auto [p, q] : m.points) out.points.emplace_back(q, p);
  for (const auto& r : m.runs) out.runs.push_back({r.second, r.first, r.second_dir, r.first_dir});
  return out;
}

// --------------------------------------------------------------- MeetResult

std::optional<std::pair<std::int64_t, std::int64_t>> MeetResult::shared_tail() const {
  if (runs.empty()) return std::nullopt;
  return std::make_pair(runs.front().first, runs.front().second);
}

std::vector<std::int64_t> MeetResult::shared_edges(GraphKind kind, std::size_t limit) const {
  std::vector<std::int64_t> out;
  for (const auto& r : runs) {
    for (std::int64_t k = 0; k < 2 && out.size() < limit; ++k) {
      const std::int64_t p = r.first + r.first_dir * k;
      out.push_back(r.first_dir > 0 ? p : p - 1);
    }
  }
  std::set<std::pair<std::int64_t, std::int64_t>> pts(meets.begin(), meets.end());
  for (auto [p, q] : meets) {
    if (out.size() >= limit) break;
    if (pts.count({p + 1, q + 1}) || (kind == GraphKind::Undirected && pts.count({p + 1, q - 1})))
      out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool MeetResult::shares_edge(GraphKind kind) const {
  return !runs.empty() || !shared_edges(kind, 1).empty();
}

std::string to_string(MeetResult::Kind kind) {
  switch (kind) {
    case MeetResult::Kind::Disjoint: return "Disjoint";
    case MeetResult::Kind::FiniteMeets: return "FiniteMeets";
    case MeetResult::Kind::SharedTail: return "SharedTail";
  }
  return "?";
}

// ---------------------------------------------------------------- single rays

Vertex ray_vertex_at(const RayDescriptor& r, std::int64_t n) {
  const auto len = static_cast<std::int64_t>(r.prefix.size());
  if (n < len) return r.prefix[static_cast<std::size_t>(n)];
  return r.tail.at(n - len);
}

std::optional<std::int64_t> ray_membership(const RayDescriptor& r, Vertex v) {
  for (std::size_t i = 0; i < r.prefix.size(); ++i)
    if (r.prefix[i] == v) return static_cast<std::int64_t>(i);
  if (auto k = r.tail.index_of(v)) return *k + static_cast<std::int64_t>(r.prefix.size());
  return std::nullopt;
}

RayDescriptor tail_of(const RayDescriptor& r, std::int64_t n) {
  const auto len = static_cast<std::int64_t>(r.prefix.size());
  if (n <= len) return {Path(r.prefix.begin() + n, r.prefix.end()), r.tail};
  return {{}, r.tail.advanced(n - len)};
}

RayDescriptor ray_from_base(BaseRayPtr base, std::int64_t offset, int direction) {
  return {{}, TailRef{std::move(base), offset, direction}};
}

std::vector<Vertex> enumerate(const RayDescriptor& r, std::int64_t horizon) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(horizon + 1));
  for (std::int64_t n = 0; n <= horizon; ++n) out.push_back(ray_vertex_at(r, n));
  return out;
}

Path ray_prefix(const RayDescriptor& r, std::int64_t count) {
  Path out;
  for (std::int64_t n = 0; n < count; ++n) out.push_back(ray_vertex_at(r, n));
  return out;
}

RayDescriptor concat_path_ray(const Path& p, const RayDescriptor& r, const AdjacencyFn& adjacency) {
  if (p.empty()) return r;
  std::unordered_set<Vertex, VertexHash> seen;
  for (Vertex v : p) {
    require(seen.insert(v).second, ErrorCode::VertexRepetition,
            "path repeats vertex " + std::to_string(v.id));
    require(!ray_membership(r, v), ErrorCode::VertexRepetition,
            "vertex " + std::to_string(v.id) + " already on the ray");
  }
  if (adjacency)
    require(adjacency(p.back(), ray_vertex_at(r, 0)), ErrorCode::NotAdjacent,
            "path end " + std::to_string(p.back().id) + " not adjacent to ray start");
  RayDescriptor out;
  out.prefix = p;
  out.prefix.insert(out.prefix.end(), r.prefix.begin(), r.prefix.end());
  out.tail = r.tail;
  return out;
}

// ------------------------------------------------------------------- meeting

namespace {

struct Piece {
  bool is_explicit = false;
  const Path* verts = nullptr;
  TailRef tail;
  std::int64_t pos_start = 0;
  int pos_dir = 1;
};

std::vector<Piece> pieces_of(const RayDescriptor& r) {
  std::vector<Piece> out;
  if (!r.prefix.empty()) out.push_back({true, &r.prefix, {}, 0, 1});
  out.push_back({false, nullptr, r.tail, static_cast<std::int64_t>(r.prefix.size()), 1});
  return out;
}

std::vector<Piece> pieces_of(const DoubleRayDescriptor& d) {
  std::vector<Piece> out;
  out.push_back({false, nullptr, d.left, -1, -1});
  if (!d.center.empty()) out.push_back({true, &d.center, {}, 0, 1});
  out.push_back({false, nullptr, d.right, static_cast<std::int64_t>(d.center.size()), 1});
  return out;
}

using PointSet = std::set<std::pair<std::int64_t, std::int64_t>>;

BaseMeet certified(const BaseRay& a, const BaseRay& b, const IntersectionOracle& oracle) {
  if (&a == &b || a.index() == b.index()) {
    BaseMeet id;
    id.runs.push_back({0, 0, 1, 1});
    if (a.is_double()) id.runs.push_back({-1, -1, -1, -1});
    return id;
  }
  BaseMeet m = oracle.certify(a, b);
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::OracleInconsistent, "certificate for bases " + std::to_string(a.index()) +
                                            "/" + std::to_string(b.index()) + ": " + why);
  };
  for (auto [p, q] : m.points) {
    if (!a.in_domain(p) || !b.in_domain(q)) bad("point outside domain");
    if (a.at(p) != b.at(q)) bad("point (" + std::to_string(p) + "," + std::to_string(q) + ") is not a meet");
  }
  for (const auto& r : m.runs) {
    for (std::int64_t k = 0; k < 3; ++k) {
      const std::int64_t p = r.first + r.first_dir * k, q = r.second + r.second_dir * k;
      if (!a.in_domain(p) || !b.in_domain(q)) bad("run leaves domain");
      if (a.at(p) != b.at(q)) bad("run does not align");
    }
  }
  return m;
}

void meet_tail_tail(const Piece& A, const Piece& B, const IntersectionOracle& oracle,
                    PointSet& points, std::vector<SharedRun>& runs) {
  const BaseMeet m = certified(*A.tail.base, *B.tail.base, oracle);
  const auto kA = [&](std::int64_t bp) { return (bp - A.tail.offset) * A.tail.direction; };
  const auto kB = [&](std::int64_t bp) { return (bp - B.tail.offset) * B.tail.direction; };
  for (auto [p, q] : m.points) {
    const std::int64_t ka = kA(p), kb = kB(q);
    if (ka >= 0 && kb >= 0) points.insert({A.pos_start + A.pos_dir * ka, B.pos_start + B.pos_dir * kb});
  }
  constexpr std::int64_t kInf = INT64_MAX;
  for (const auto& r : m.runs) {
    // tail index along the run: k = alpha + beta * t, t >= 0
    const std::int64_t alpha = kA(r.first);
    const int beta = r.first_dir * A.tail.direction;
    const std::int64_t gamma = kB(r.second);
    const int delta = r.second_dir * B.tail.direction;
    std::int64_t lo = 0, hi = kInf;
    auto constrain = [&](std::int64_t c, int slope) {
      if (slope > 0) lo = std::max(lo, -c);
      else hi = std::min(hi, c);
    };
    constrain(alpha, beta);
    constrain(gamma, delta);
    if (lo > hi) continue;
    const auto posA = [&](std::int64_t t) { return A.pos_start + A.pos_dir * (alpha + beta * t); };
    const auto posB = [&](std::int64_t t) { return B.pos_start + B.pos_dir * (gamma + delta * t); };
    if (hi == kInf) {
      runs.push_back({posA(lo), posB(lo), A.pos_dir * beta, B.pos_dir * delta});
    } else {
      for (std::int64_t t = lo; t <= hi; ++t) points.insert({posA(t), posB(t)});
    }
  }
}

void meet_explicit_tail(const Piece& E, const Piece& T, bool explicit_first, PointSet& points) {
  for (std::size_t i = 0; i < E.verts->size(); ++i) {
    if (auto k = T.tail.index_of((*E.verts)[i])) {
      const std::int64_t pe = E.pos_start + E.pos_dir * static_cast<std::int64_t>(i);
      const std::int64_t pt = T.pos_start + T.pos_dir * *k;
      points.insert(explicit_first ? std::make_pair(pe, pt) : std::make_pair(pt, pe));
    }
  }
}

void meet_explicit_explicit(const Piece& A, const Piece& B, PointSet& points) {
  std::unordered_map<Vertex, std::int64_t, VertexHash> where;
  for (std::size_t j = 0; j < B.verts->size(); ++j)
    where.emplace((*B.verts)[j], B.pos_start + B.pos_dir * static_cast<std::int64_t>(j));
  for (std::size_t i = 0; i < A.verts->size(); ++i)
    if (auto it = where.find((*A.verts)[i]); it != where.end())
      points.insert({A.pos_start + A.pos_dir * static_cast<std::int64_t>(i), it->second});
}

bool run_covers(const SharedRun& r, std::int64_t p, std::int64_t q) {
  const std::int64_t k = (p - r.first) * r.first_dir;
  return k >= 0 && q == r.second + r.second_dir * k;
}

MeetResult meet_pieces(const std::vector<Piece>& A, const std::vector<Piece>& B,
                       const IntersectionOracle& oracle) {
  PointSet points;
  std::vector<SharedRun> runs;
  for (const auto& a : A) {
    for (const auto& b : B) {
      if (a.is_explicit && b.is_explicit) meet_explicit_explicit(a, b, points);
      else if (a.is_explicit) meet_explicit_tail(a, b, true, points);
      else if (b.is_explicit) meet_explicit_tail(b, a, false, points);
      else meet_tail_tail(a, b, oracle, points, runs);
    }
  }
  // Drop runs contained in earlier ones, then absorb points that continue a run backwards.
  std::vector<SharedRun> kept;
  for (const auto& r : runs) {
    bool dup = false;
    for (const auto& k : kept)
      if (k.first_dir == r.first_dir && run_covers(k, r.first, r.second)) dup = true;
    if (!dup) {
      std::erase_if(kept, [&](const SharedRun& k) {
        return k.first_dir == r.first_dir && run_covers(r, k.first, k.second);
      });
      kept.push_back(r);
    }
  }
  for (auto& r : kept) {
    while (points.erase({r.first - r.first_dir, r.second - r.second_dir})) {
      r.first -= r.first_dir;
      r.second -= r.second_dir;
    }
  }
  std::erase_if(points, [&](const auto& pq) {
    for (const auto& r : kept)
      if (run_covers(r, pq.first, pq.second)) return true;
    return false;
  });
  std::sort(kept.begin(), kept.end(), [](const SharedRun& x, const SharedRun& y) {
    return std::make_pair(x.first_dir, x.first) > std::make_pair(y.first_dir, y.first);
  });
  MeetResult out;
  out.meets.assign(points.begin(), points.end());
  out.runs = std::move(kept);
  if (!out.runs.empty()) out.kind = MeetResult::Kind::SharedTail;
  else if (!out.meets.empty()) out.kind = MeetResult::Kind::FiniteMeets;
  return out;
}

}  // namespace

MeetResult rays_meet(const RayDescriptor& r1, const RayDescriptor& r2,
                     const IntersectionOracle& oracle) {
  return meet_pieces(pieces_of(r1), pieces_of(r2), oracle);
}

MeetResult rays_meet(const DoubleRayDescriptor& d1, const DoubleRayDescriptor& d2,
                     const IntersectionOracle& oracle) {
  return meet_pieces(pieces_of(d1), pieces_of(d2), oracle);
}

MeetResult rays_meet(const RayDescriptor& r, const DoubleRayDescriptor& d,
                     const IntersectionOracle& oracle) {
  return meet_pieces(pieces_of(r), pieces_of(d), oracle);
}

// ---------------------------------------------------------------- double rays

Vertex double_vertex_at(const DoubleRayDescriptor& d, std::int64_t z) {
  const auto c = static_cast<std::int64_t>(d.center.size());
  if (z < 0) return d.left.at(-1 - z);
  if (z < c) return d.center[static_cast<std::size_t>(z)];
  return d.right.at(z - c);
}

std::optional<std::int64_t> double_membership(const DoubleRayDescriptor& d, Vertex v) {
  for (std::size_t i = 0; i < d.center.size(); ++i)
    if (d.center[i] == v) return static_cast<std::int64_t>(i);
  if (auto k = d.right.index_of(v)) return static_cast<std::int64_t>(d.center.size()) + *k;
  if (auto k = d.left.index_of(v)) return -1 - *k;
  return std::nullopt;
}

DoubleRayDescriptor double_from_base(BaseRayPtr base) {
  require(base->is_double(), ErrorCode::PreconditionViolated, "base ray is not double");
  DoubleRayDescriptor d;
  d.center = {base->at(0)};
  d.left = {base, -1, -1};
  d.right = {base, 1, 1};
  return d;
}

RayDescriptor forward_from(const DoubleRayDescriptor& d, std::int64_t p) {
  const auto c = static_cast<std::int64_t>(d.center.size());
  if (p >= c) return {{}, d.right.advanced(p - c)};
  RayDescriptor out;
  for (std::int64_t z = p; z < 0; ++z) out.prefix.push_back(d.left.at(-1 - z));
  out.prefix.insert(out.prefix.end(), d.center.begin() + std::max<std::int64_t>(p, 0), d.center.end());
  out.tail = d.right;
  return out;
}

RayDescriptor backward_from(const DoubleRayDescriptor& d, std::int64_t p) {
  const auto c = static_cast<std::int64_t>(d.center.size());
  if (p < 0) return {{}, d.left.advanced(-1 - p)};
  RayDescriptor out;
  for (std::int64_t z = p; z >= c; --z) out.prefix.push_back(d.right.at(z - c));
  for (std::int64_t z = std::min(p, c - 1); z >= 0; --z) out.prefix.push_back(d.center[static_cast<std::size_t>(z)]);
  out.tail = d.left;
  return out;
}

DoubleRayDescriptor join_double(const RayDescriptor& back, const Path& middle,
                                const RayDescriptor& fwd) {
  DoubleRayDescriptor d;
  d.left = back.tail;
  d.center.assign(back.prefix.rbegin(), back.prefix.rend());
  d.center.insert(d.center.end(), middle.begin(), middle.end());
  d.center.insert(d.center.end(), fwd.prefix.begin(), fwd.prefix.end());
  d.right = fwd.tail;
  return d;
}

std::vector<Vertex> enumerate(const DoubleRayDescriptor& d, std::int64_t lo, std::int64_t hi) {
  std::vector<Vertex> out;
  for (std::int64_t z = lo; z <= hi; ++z) out.push_back(double_vertex_at(d, z));
  return out;
}

Path subpath_vertices(const DoubleRayDescriptor& d, const Subpath& s) {
  return enumerate(d, s.start, s.end());
}

std::pair<RayDescriptor, RayDescriptor> split_double(const DoubleRayDescriptor& d,
                                                     std::pair<Vertex, Vertex> edge) {
  auto p = double_membership(d, edge.first);
  require(p && double_vertex_at(d, *p + 1) == edge.second, ErrorCode::EdgeNotOnRay,
          "edge (" + std::to_string(edge.first.id) + "," + std::to_string(edge.second.id) +
              ") does not occur in traversal order");
  return {forward_from(d, *p + 1), backward_from(d, *p)};
}

// ------------------------------------------------------------------ checking

WindowCheck check_window(const std::function<Vertex(std::int64_t)>& at, std::int64_t lo,
                         std::int64_t hi, const LazyGraph* graph) {
  std::unordered_map<Vertex, std::int64_t, VertexHash> seen;
  std::optional<Vertex> prev;
  for (std::int64_t z = lo; z <= hi; ++z) {
    const Vertex v = at(z);
    auto [it, fresh] = seen.emplace(v, z);
    if (!fresh)
      return {false, "vertex " + std::to_string(v.id) + " repeats at positions " +
                         std::to_string(it->second) + " and " + std::to_string(z)};
    if (graph && prev && !graph->adjacent(*prev, v))
      return {false, "positions " + std::to_string(z - 1) + "," + std::to_string(z) + " not adjacent"};
    prev = v;
  }
  return {};
}

WindowCheck check_ray(const RayDescriptor& r, std::int64_t horizon, const LazyGraph* graph) {
  if (!r.tail.base) return {false, "missing tail base"};
  if (!r.tail.base->is_double() && (r.tail.direction != 1 || r.tail.offset < 0))
    return {false, "tail runs off a single base ray"};
  return check_window([&](std::int64_t n) { return ray_vertex_at(r, n); }, 0, horizon, graph);
}

WindowCheck check_double(const DoubleRayDescriptor& d, std::int64_t horizon, const LazyGraph* graph) {
  for (const TailRef* t : {&d.left, &d.right}) {
    if (!t->base) return {false, "missing tail base"};
    if (!t->base->is_double() && (t->direction != 1 || t->offset < 0))
      return {false, "tail runs off a single base ray"};
  }
  return check_window([&](std::int64_t z) { return double_vertex_at(d, z); }, -horizon,
                      horizon + static_cast<std::int64_t>(d.center.size()), graph);
}

}  // namespace halin

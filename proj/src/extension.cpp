#include "halin/extension.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>
#include <unordered_set>

#include "halin/menger.hpp"

namespace halin {

namespace {

std::int64_t first_meet_position(const MeetResult& m) {
  std::int64_t best = INT64_MAX;
  for (const auto& [p, q] : m.meets) best = std::min(best, p);
  for (const auto& r : m.runs) best = std::min(best, r.first);
  return best;
}

void require_pairwise_disjoint(const std::vector<RayDescriptor>& rays, const IntersectionOracle& oracle,
                               const std::string& what) {
  for (std::size_t a = 0; a < rays.size(); ++a)
    for (std::size_t b = a + 1; b < rays.size(); ++b)
      require(rays_meet(rays[a], rays[b], oracle).disjoint(), ErrorCode::PreconditionViolated,
              what + " rays " + std::to_string(a) + " and " + std::to_string(b) + " meet");
}

// The discard / z / Menger machinery shared by the single and double-ray steps.
class ExtensionRun {
 public:
  ExtensionRun(const std::vector<RayDescriptor>& R, const std::vector<RayDescriptor>& S,
           const IntersectionOracle& oracle, const ExtensionOptions& opt, std::size_t threshold)
      : R_(R), S_(S), oracle_(oracle), opt_(opt), threshold_(threshold) {
    first_.assign(R.size(), std::vector<std::int64_t>(S.size(), -1));
    for (std::size_t i = 0; i < R.size(); ++i)
      for (std::size_t q = 0; q < S.size(); ++q) {
        const MeetResult m = rays_meet(R[i], S[q], oracle);
        if (!m.disjoint()) first_[i][q] = first_meet_position(m);
      }
    discarded_.assign(S.size(), false);
    out_.assign(R.size(), std::nullopt);
    log.n = R.size();
    log.surplus = S.size();
  }

  void discard_loop() {
    for (;;) {
      std::optional<std::size_t> pick;
      for (std::size_t i = 0; i < R_.size() && !pick; ++i) {
        if (out_[i]) continue;
        std::size_t hits = 0;
        for (std::size_t q = 0; q < S_.size(); ++q)
          if (!discarded_[q] && first_[i][q] >= 0) ++hits;
        if (hits <= threshold_) pick = i;
      }
      if (!pick) break;
      for (std::size_t q = 0; q < S_.size(); ++q)
        if (!discarded_[q] && first_[*pick][q] >= 0) {
          discarded_[q] = true;
          log.discarded.push_back(q);
        }
      out_[*pick] = R_[*pick];
      log.kept.push_back(*pick);
    }
    for (std::size_t i = 0; i < R_.size(); ++i)
      if (!out_[i]) log.I.push_back(i);
  }

  void compute_z() {
    const std::size_t m = log.I.size();
    for (std::size_t i : log.I) {
      std::vector<std::int64_t> firsts;
      for (std::size_t q = 0; q < S_.size(); ++q)
        if (!discarded_[q] && first_[i][q] >= 0) firsts.push_back(first_[i][q]);
      require(firsts.size() >= m, ErrorCode::InstanceContract,
              "ray " + std::to_string(i) + " meets fewer than m surviving rays");
      std::sort(firsts.begin(), firsts.end());
      const std::int64_t z = firsts[m - 1];
      require(z <= opt_.horizon, ErrorCode::FuelExhausted,
              "z point of ray " + std::to_string(i) + " lies beyond horizon " + std::to_string(opt_.horizon));
      log.z[i] = z;
    }
    for (std::size_t i : log.I)
      for (std::int64_t p = 0; p <= log.z[i]; ++p) F_.insert(ray_vertex_at(R_[i], p));
  }

  bool discarded(std::size_t q) const { return discarded_[q]; }

  bool meets_F(std::size_t q) const {
    for (std::size_t i : log.I)
      if (first_[i][q] >= 0 && first_[i][q] <= log.z.at(i)) return true;
    return false;
  }

  // Routes every i in I to a distinct tail of an S ray meeting F.
  void route() {
    const std::size_t m = log.I.size();
    if (m == 0) return;
    std::vector<std::size_t> side;
    for (std::size_t q = 0; q < S_.size(); ++q)
      if (!discarded_[q] && meets_F(q)) side.push_back(q);
    log.menger_side = side;

    FiniteGraph H(opt_.kind);
    auto add_path = [&](const RayDescriptor& r, std::int64_t last) {
      std::optional<Vertex> prev;
      for (std::int64_t p = 0; p <= last; ++p) {
        const Vertex v = ray_vertex_at(r, p);
        H.add_vertex(v);
        if (prev) H.add_edge(*prev, v);
        prev = v;
      }
    };
    std::set<Vertex> X, Y;
    std::map<Vertex, std::size_t> start_of, end_of;
    for (std::size_t i : log.I) {
      add_path(R_[i], log.z[i]);
      const Vertex x = ray_vertex_at(R_[i], 0);
      X.insert(x);
      start_of[x] = i;
    }
    std::map<std::size_t, std::int64_t> y_pos;
    for (std::size_t q : side) {
      std::int64_t last = -1;
      for (Vertex v : F_)
        if (auto p = ray_membership(S_[q], v)) last = std::max(last, *p);
      const std::int64_t y = last + 1;
      require(y <= opt_.horizon + 1, ErrorCode::FuelExhausted, "y point beyond horizon");
      y_pos[q] = y;
      add_path(S_[q], y);
      const Vertex yv = ray_vertex_at(S_[q], y);
      Y.insert(yv);
      end_of[yv] = q;
    }
    log.menger_vertices = H.vertex_count();
    log.menger_edges = H.edge_count();
    const MengerSolution sol = menger_solve(H, X, Y);
    log.menger_paths = sol.paths.size();
    log.separator = sol.separator.size();
    require(sol.separator.size() >= m, ErrorCode::InstanceContract,
            "X can be separated from Y by " + std::to_string(sol.separator.size()) + " < m vertices");
    for (const Path& path : sol.paths) {
      const std::size_t i = start_of.at(path.front());
      const std::size_t q = end_of.at(path.back());
      Path body(path.begin(), path.end() - 1);
      out_[i] = concat_path_ray(body, tail_of(S_[q], y_pos[q]), opt_.adjacency);
      log.routed.emplace_back(i, q);
    }
    std::sort(log.routed.begin(), log.routed.end());
  }

  const std::optional<RayDescriptor>& out(std::size_t i) const { return out_[i]; }

  ExtensionLog log;

 private:
  const std::vector<RayDescriptor>& R_;
  const std::vector<RayDescriptor>& S_;
  const IntersectionOracle& oracle_;
  const ExtensionOptions& opt_;
  std::size_t threshold_;
  std::vector<std::vector<std::int64_t>> first_;
  std::vector<bool> discarded_;
  std::vector<std::optional<RayDescriptor>> out_;
  std::unordered_set<Vertex, VertexHash> F_;
};

}  // namespace

SingleExtension extend_single(const std::vector<RayDescriptor>& R,
                              const std::vector<RayDescriptor>& S,
                              const IntersectionOracle& oracle, const ExtensionOptions& opt) {
  const std::size_t n = R.size();
  require(S.size() >= n * n + 1, ErrorCode::BudgetTooSmall,
          "need " + std::to_string(n * n + 1) + " surplus rays, got " + std::to_string(S.size()));
  if (opt.validate_inputs) {
    require_pairwise_disjoint(R, oracle, "input");
    require_pairwise_disjoint(S, oracle, "surplus");
  }
  ExtensionRun run(R, S, oracle, opt, n);
  run.discard_loop();
  run.compute_z();
  std::optional<std::size_t> fresh;
  for (std::size_t q = 0; q < S.size() && !fresh; ++q)
    if (!run.discarded(q) && !run.meets_F(q)) fresh = q;
  require(fresh.has_value(), ErrorCode::InstanceContract, "every surviving surplus ray meets F");
  run.log.new_ray = *fresh;
  run.route();

  SingleExtension res;
  for (std::size_t i = 0; i < n; ++i) res.rays.push_back(*run.out(i));
  res.rays.push_back(S[*fresh]);
  res.log = run.log;
  for (std::size_t a = 0; a < res.rays.size(); ++a)
    for (std::size_t b = a + 1; b < res.rays.size(); ++b)
      require(rays_meet(res.rays[a], res.rays[b], oracle).disjoint(), ErrorCode::InstanceContract,
              "extended rays " + std::to_string(a) + " and " + std::to_string(b) + " meet");
  return res;
}

std::map<std::size_t, std::int64_t> compute_z_points(const std::vector<std::size_t>& I,
                                                     const std::vector<RayDescriptor>& R,
                                                     const std::vector<RayDescriptor>& S,
                                                     const IntersectionOracle& oracle,
                                                     std::int64_t horizon) {
  std::map<std::size_t, std::int64_t> z;
  const std::size_t m = I.size();
  for (std::size_t i : I) {
    std::vector<std::int64_t> firsts;
    for (const auto& s : S) {
      const MeetResult mr = rays_meet(R.at(i), s, oracle);
      if (!mr.disjoint()) firsts.push_back(first_meet_position(mr));
    }
    require(firsts.size() >= m, ErrorCode::FuelExhausted,
            "ray " + std::to_string(i) + " never meets " + std::to_string(m) + " rays");
    std::sort(firsts.begin(), firsts.end());
    require(firsts[m - 1] <= horizon, ErrorCode::FuelExhausted, "z point beyond horizon");
    z[i] = firsts[m - 1];
  }
  return z;
}

// ------------------------------------------------------------ double, vertex

std::size_t uvd_budget(std::size_t n) { return 11 * n * n + 1; }

DoubleExtension extend_double_uvd(const std::vector<DoubleWithPath>& R,
                                  const std::vector<DoubleRayDescriptor>& S,
                                  const IntersectionOracle& oracle, const ExtensionOptions& opt) {
  const std::size_t n = R.size();
  DoubleExtension res;
  res.log.n = n;
  res.log.budget = uvd_budget(n);
  require(S.size() >= uvd_budget(n), ErrorCode::BudgetTooSmall,
          "need " + std::to_string(uvd_budget(n)) + " double rays, got " + std::to_string(S.size()));
  for (const auto& r : R)
    require(r.path.length == static_cast<std::int64_t>(2 * n), ErrorCode::PreconditionViolated,
            "subpath length " + std::to_string(r.path.length) + " != " + std::to_string(2 * n));
  if (opt.validate_inputs) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        require(rays_meet(R[a].ray, R[b].ray, oracle).disjoint(), ErrorCode::PreconditionViolated,
                "input double rays " + std::to_string(a) + " and " + std::to_string(b) + " meet");
    for (std::size_t a = 0; a < S.size(); ++a)
      for (std::size_t b = a + 1; b < S.size(); ++b)
        require(rays_meet(S[a], S[b], oracle).disjoint(), ErrorCode::PreconditionViolated,
                "surplus double rays " + std::to_string(a) + " and " + std::to_string(b) + " meet");
  }

  std::vector<Vertex> pverts;
  for (const auto& r : R) {
    const Path p = subpath_vertices(r.ray, r.path);
    pverts.insert(pverts.end(), p.begin(), p.end());
  }
  std::vector<std::size_t> survivors;
  for (std::size_t j = 0; j < S.size(); ++j) {
    bool hit = false;
    for (Vertex v : pverts)
      if (double_membership(S[j], v)) hit = true;
    if (hit) res.log.hit_prefix.push_back(j);
    else survivors.push_back(j);
  }
  const std::size_t need = 8 * n * n + 1;
  require(survivors.size() >= need, ErrorCode::DiscardExhausted,
          std::to_string(survivors.size()) + " survivors, need " + std::to_string(need));
  survivors.resize(need);
  res.log.used = survivors;

  std::vector<RayDescriptor> Rh, Sh;
  for (const auto& r : R) {
    Rh.push_back(backward_from(r.ray, r.path.start - 1));
    Rh.push_back(forward_from(r.ray, r.path.end() + 1));
  }
  for (std::size_t j : survivors) {
    Sh.push_back(backward_from(S[j], 0));
    Sh.push_back(forward_from(S[j], 1));
  }
  ExtensionOptions inner = opt;
  inner.validate_inputs = false;
  ExtensionRun run(Rh, Sh, oracle, inner, 2 * n);
  run.discard_loop();
  run.compute_z();
  std::optional<std::size_t> fresh;
  for (std::size_t k = 0; k < survivors.size() && !fresh; ++k) {
    bool ok = true;
    for (std::size_t d = 0; d < 2; ++d)
      if (run.discarded(2 * k + d) || run.meets_F(2 * k + d)) ok = false;
    if (ok) fresh = k;
  }
  require(fresh.has_value(), ErrorCode::InstanceContract, "no surplus double ray avoids F");
  run.route();
  res.log.halves = run.log;
  res.log.halves.new_ray = 2 * *fresh;
  res.log.new_ray = survivors[*fresh];

  for (std::size_t i = 0; i < n; ++i) {
    const RayDescriptor& back = *run.out(2 * i);
    const RayDescriptor& fwd = *run.out(2 * i + 1);
    DoubleWithPath next;
    next.ray = join_double(back, subpath_vertices(R[i].ray, R[i].path), fwd);
    next.path = {static_cast<std::int64_t>(back.prefix.size()) - 1, R[i].path.length + 2};
    res.rays.push_back(std::move(next));
  }
  res.rays.push_back({S[survivors[*fresh]], {0, static_cast<std::int64_t>(2 * n + 2)}});
  for (std::size_t a = 0; a < res.rays.size(); ++a)
    for (std::size_t b = a + 1; b < res.rays.size(); ++b)
      require(rays_meet(res.rays[a].ray, res.rays[b].ray, oracle).disjoint(), ErrorCode::InstanceContract,
              "extended double rays " + std::to_string(a) + " and " + std::to_string(b) + " meet");
  return res;
}

// ------------------------------------------------------------ double, edge

std::string to_string(const std::optional<ForestInterval>& iv) {
  if (!iv) return "Disjoint";
  std::string lo = iv->from_neg_inf ? "-inf" : std::to_string(iv->start);
  std::string hi = iv->to_pos_inf ? "+inf" : std::to_string(iv->end);
  return "[" + lo + "," + hi + "]+" + std::to_string(iv->shift);
}

std::optional<ForestInterval> forest_intersection(const DoubleRayDescriptor& r0,
                                                  const DoubleRayDescriptor& r1,
                                                  const IntersectionOracle& oracle) {
  const MeetResult m = rays_meet(r0, r1, oracle);
  if (!m.shares_edge(GraphKind::Directed)) return std::nullopt;
  std::optional<std::int64_t> shift;
  auto agree = [&](std::int64_t s) {
    if (!shift) shift = s;
    require(*shift == s, ErrorCode::NotAForest, "common vertices at inconsistent offsets");
  };
  std::optional<std::int64_t> down, up;
  for (const auto& r : m.runs) {
    require(r.first_dir == r.second_dir, ErrorCode::NotAForest, "rays share a stretch in opposite directions");
    agree(r.second - r.first);
    auto& slot = r.first_dir > 0 ? up : down;
    require(!slot, ErrorCode::NotAForest, "two separate infinite common stretches");
    slot = r.first;
  }
  std::vector<std::int64_t> pts;
  for (const auto& [p, q] : m.meets) {
    agree(q - p);
    pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  ForestInterval iv;
  iv.shift = *shift;
  iv.from_neg_inf = down.has_value();
  iv.to_pos_inf = up.has_value();
  const std::int64_t lo = down ? *down + 1 : (pts.empty() ? *up : pts.front());
  const std::int64_t hi = up ? *up - 1 : (pts.empty() ? *down : pts.back());
  std::int64_t expect = lo;
  for (std::int64_t p : pts) {
    require(p == expect, ErrorCode::NotAForest, "common vertices do not form one interval");
    ++expect;
  }
  require(expect == hi + 1, ErrorCode::NotAForest, "common vertices do not form one interval");
  if (!iv.from_neg_inf) iv.start = lo;
  if (!iv.to_pos_inf) iv.end = hi;
  return iv;
}

std::string to_string(const LabelDED& label) {
  std::string out = "{";
  for (std::size_t k = 0; k < label.order.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(label.order[k]) + (label.sides[k] > 0 ? "+" : "-");
  }
  return out + "}";
}

std::uint64_t ded_budget(std::size_t n) {
  std::uint64_t fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= k;
  return 2 * n * n + (std::uint64_t{1} << (2 * n)) * fact + 1;
}

bool double_has_edge(const DoubleRayDescriptor& d, Vertex u, Vertex v) {
  auto p = double_membership(d, u);
  return p && double_vertex_at(d, *p + 1) == v;
}

DedExtension extend_double_ded_forest(const std::vector<DoubleWithPath>& S,
                                      const std::vector<DoubleRayDescriptor>& pool,
                                      const IntersectionOracle& oracle, const ExtensionOptions& opt) {
  const std::size_t n = S.size();
  DedExtension res;
  res.log.n = n;
  res.log.budget = ded_budget(n);
  require(pool.size() >= ded_budget(n), ErrorCode::BudgetTooSmall,
          "need " + std::to_string(ded_budget(n)) + " pool rays, got " + std::to_string(pool.size()));
  for (const auto& s : S)
    require(s.path.length == static_cast<std::int64_t>(2 * n), ErrorCode::PreconditionViolated,
            "subpath length " + std::to_string(s.path.length) + " != " + std::to_string(2 * n));
  if (opt.validate_inputs) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        require(!rays_meet(S[a].ray, S[b].ray, oracle).shares_edge(GraphKind::Directed),
                ErrorCode::PreconditionViolated,
                "input rays " + std::to_string(a) + " and " + std::to_string(b) + " share an edge");
    for (std::size_t a = 0; a < pool.size(); ++a)
      for (std::size_t b = a + 1; b < pool.size(); ++b)
        require(!rays_meet(pool[a], pool[b], oracle).shares_edge(GraphKind::Directed),
                ErrorCode::PreconditionViolated,
                "pool rays " + std::to_string(a) + " and " + std::to_string(b) + " share an edge");
  }

  std::vector<std::pair<Vertex, Vertex>> pedges;
  for (const auto& s : S) {
    const Path p = subpath_vertices(s.ray, s.path);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) pedges.emplace_back(p[k], p[k + 1]);
  }
  std::vector<std::size_t> survivors;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    bool hit = false;
    for (auto [u, v] : pedges)
      if (double_has_edge(pool[j], u, v)) hit = true;
    if (hit) res.log.edge_hitters.push_back(j);
    else survivors.push_back(j);
  }

  // Q_{j,i} in pool coordinates, with S-side coordinates for the side test.
  std::map<std::pair<std::size_t, std::size_t>, ForestInterval> Q;
  std::map<std::size_t, LabelDED> labels;
  for (std::size_t j : survivors) {
    std::vector<std::tuple<std::int64_t, std::size_t, int>> parts;
    for (std::size_t i = 0; i < n; ++i) {
      auto iv = forest_intersection(pool[j], S[i].ray, oracle);
      if (!iv) continue;
      const Subpath& P = S[i].path;
      int side = 0;
      if (!iv->from_neg_inf && iv->start + iv->shift >= P.end()) side = +1;
      else if (!iv->to_pos_inf && iv->end + iv->shift <= P.start) side = -1;
      require(side != 0, ErrorCode::InstanceContract,
              "intersection of pool ray " + std::to_string(j) + " with ray " + std::to_string(i) +
                  " overlaps its subpath");
      Q[{j, i}] = *iv;
      parts.emplace_back(iv->from_neg_inf ? INT64_MIN : iv->start, i, side);
    }
    std::sort(parts.begin(), parts.end());
    LabelDED label;
    for (auto [pos, i, side] : parts) {
      label.order.push_back(i);
      label.sides.push_back(side);
    }
    labels[j] = label;
    res.log.labels.emplace_back(j, label);
  }

  std::optional<std::pair<std::size_t, std::size_t>> pair;
  for (std::size_t x = 0; x < survivors.size() && !pair; ++x)
    for (std::size_t y = x + 1; y < survivors.size() && !pair; ++y)
      if (labels[survivors[x]] == labels[survivors[y]]) pair = {survivors[x], survivors[y]};
  require(pair.has_value(), ErrorCode::NoEqualLabelPair,
          "no two of " + std::to_string(survivors.size()) + " surviving pool rays share a label");
  const auto [a, e] = *pair;
  res.log.a = a;
  res.log.e = e;
  const LabelDED& C = labels[a];
  require(C.order.size() < 2, ErrorCode::InstanceContract,
          "equal-label pair with |C| = " + std::to_string(C.order.size()));

  const auto grown = static_cast<std::int64_t>(2 * n + 2);
  for (const auto& s : S) res.rays.push_back({s.ray, {s.path.start - 1, s.path.length + 2}});
  if (C.order.empty()) {
    res.log.action = "disjoint";
    res.log.d = a;
    res.rays.push_back({pool[a], {0, grown}});
  } else {
    const std::size_t i = C.order[0];
    const int side = C.sides[0];
    const ForestInterval& qa = Q.at({a, i});
    const ForestInterval& qe = Q.at({e, i});
    std::size_t c, d;
    if (side > 0) c = (qa.start + qa.shift <= qe.start + qe.shift) ? a : e;
    else c = (qa.end + qa.shift >= qe.end + qe.shift) ? a : e;
    d = (c == a) ? e : a;
    const ForestInterval& qc = Q.at({c, i});
    DoubleRayDescriptor swapped;
    if (side > 0) {
      swapped = join_double(backward_from(S[i].ray, qc.start + qc.shift - 1), {},
                            forward_from(pool[c], qc.start));
    } else {
      swapped = join_double(backward_from(pool[c], qc.end), {},
                            forward_from(S[i].ray, qc.end + qc.shift + 1));
    }
    const Vertex first = double_vertex_at(S[i].ray, S[i].path.start);
    const auto p0 = double_membership(swapped, first);
    require(p0.has_value(), ErrorCode::InstanceContract, "tail swap lost the subpath");
    res.rays[i] = {swapped, {*p0 - 1, S[i].path.length + 2}};
    res.rays.push_back({pool[d], {0, grown}});
    res.log.action = "swap";
    res.log.swapped = i;
    res.log.c = c;
    res.log.d = d;
  }
  for (std::size_t x = 0; x < res.rays.size(); ++x)
    for (std::size_t y = x + 1; y < res.rays.size(); ++y)
      require(!rays_meet(res.rays[x].ray, res.rays[y].ray, oracle).shares_edge(GraphKind::Directed),
              ErrorCode::InstanceContract,
              "extended rays " + std::to_string(x) + " and " + std::to_string(y) + " share an edge");
  return res;
}

}  // namespace halin

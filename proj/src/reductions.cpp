#include "halin/reductions.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <unordered_set>

namespace halin {

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::UtoD: return "UtoD";
    case GadgetKind::VtoE_split: return "VtoE_split";
    case GadgetKind::attach_neg_tails: return "attach_neg_tails";
    case GadgetKind::line_graph: return "line_graph";
  }
  return "?";
}

GadgetKind gadget_from_string(const std::string& name) {
  for (auto k : {GadgetKind::UtoD, GadgetKind::VtoE_split, GadgetKind::attach_neg_tails, GadgetKind::line_graph})
    if (to_string(k) == name) return k;
  fail(ErrorCode::UnknownName, "unknown gadget '" + name + "'");
}

Vertex utod_vertex(Vertex u) { return {3 * u.id}; }
Vertex utod_x(Vertex u, Vertex v) { return {3 * codec::pair(std::min(u.id, v.id), std::max(u.id, v.id)) + 1}; }
Vertex utod_y(Vertex u, Vertex v) { return {3 * codec::pair(std::min(u.id, v.id), std::max(u.id, v.id)) + 2}; }
Vertex split_in(Vertex x) { return {2 * x.id}; }
Vertex split_out(Vertex x) { return {2 * x.id + 1}; }
Vertex tail_host(Vertex x) { return {2 * x.id}; }
Vertex tail_vertex(Vertex x, std::int64_t n) {
  require(n < 0, ErrorCode::PreconditionViolated, "tail index must be negative");
  return {2 * codec::pair(x.id, static_cast<std::uint64_t>(-n - 1)) + 1};
}

Vertex line_vertex(GraphKind kind, Vertex u, Vertex v) {
  if (kind == GraphKind::Undirected && v < u) std::swap(u, v);
  return {codec::pair(u.id, v.id)};
}

std::pair<Vertex, Vertex> line_endpoints(Vertex e) {
  auto [a, b] = codec::unpair(e.id);
  return {Vertex{a}, Vertex{b}};
}

namespace {

std::size_t synthetic_index() {
  static std::atomic<std::size_t> next{std::size_t{1} << 48};
  return next++;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

RayDescriptor synthetic_ray(FunctionBaseRay::AtFn at, FunctionBaseRay::PosFn pos) {
  return ray_from_base(std::make_shared<FunctionBaseRay>(synthetic_index(), false, std::move(at), std::move(pos)));
}

DoubleRayDescriptor synthetic_double(FunctionBaseRay::AtFn at, FunctionBaseRay::PosFn pos) {
  return double_from_base(
      std::make_shared<FunctionBaseRay>(synthetic_index(), true, std::move(at), std::move(pos)));
}

// Generic access to single or double rays as position functions.
struct Walk {
  std::function<Vertex(std::int64_t)> at;
  std::function<std::optional<std::int64_t>(Vertex)> pos;
};

Walk walk(const RayDescriptor& r) {
  return {[r](std::int64_t n) { return ray_vertex_at(r, n); },
          [r](Vertex v) { return ray_membership(r, v); }};
}

Walk walk(const DoubleRayDescriptor& d) {
  return {[d](std::int64_t z) { return double_vertex_at(d, z); },
          [d](Vertex v) { return double_membership(d, v); }};
}

// ---- UtoD ----

Walk utod_image(const Walk& w) {
  return {[w](std::int64_t p) {
            const std::int64_t k = floor_div(p, 3), rho = floor_mod(p, 3);
            const Vertex u = w.at(k);
            if (rho == 0) return utod_vertex(u);
            const Vertex v = w.at(k + 1);
            return rho == 1 ? utod_x(u, v) : utod_y(u, v);
          },
          [w](Vertex x) -> std::optional<std::int64_t> {
            const auto rho = static_cast<std::int64_t>(x.id % 3);
            if (rho == 0) {
              auto k = w.pos({x.id / 3});
              if (!k) return std::nullopt;
              return 3 * *k;
            }
            auto [a, b] = codec::unpair(x.id / 3);
            auto ka = w.pos({a}), kb = w.pos({b});
            if (!ka || !kb || (*ka - *kb != 1 && *kb - *ka != 1)) return std::nullopt;
            return 3 * std::min(*ka, *kb) + rho;
          }};
}

Walk utod_preimage(const Walk& w, std::int64_t j0) {
  return {[w, j0](std::int64_t k) { return Vertex{w.at(j0 + 3 * k).id / 3}; },
          [w, j0](Vertex v) -> std::optional<std::int64_t> {
            auto p = w.pos(utod_vertex(v));
            if (!p || floor_mod(*p - j0, 3) != 0) return std::nullopt;
            return floor_div(*p - j0, 3);
          }};
}

std::int64_t utod_align(const std::function<Vertex(std::int64_t)>& at) {
  std::vector<std::int64_t> hits;
  for (std::int64_t p = 0; p < 3; ++p)
    if (at(p).id % 3 == 0) hits.push_back(p);
  require(hits.size() == 1, ErrorCode::MalformedImage,
          std::to_string(hits.size()) + " original vertices among the first three");
  const std::int64_t j0 = hits[0];
  // Spot-check the gadget pattern over a short window.
  for (std::int64_t k = 0; k < 8; ++k) {
    const Vertex u{at(j0 + 3 * k).id}, x = at(j0 + 3 * k + 1), y = at(j0 + 3 * k + 2), v = at(j0 + 3 * k + 3);
    require(u.id % 3 == 0 && v.id % 3 == 0, ErrorCode::MalformedImage, "gadget pattern broken");
    const Vertex a{u.id / 3}, b{v.id / 3};
    require(x == utod_x(a, b) && y == utod_y(a, b), ErrorCode::MalformedImage, "gadget pattern broken");
  }
  return j0;
}

// ---- VtoE ----

Walk split_image(const Walk& w) {
  return {[w](std::int64_t p) {
            const Vertex x = w.at(floor_div(p, 2));
            return floor_mod(p, 2) == 0 ? split_in(x) : split_out(x);
          },
          [w](Vertex v) -> std::optional<std::int64_t> {
            auto k = w.pos({v.id / 2});
            if (!k) return std::nullopt;
            return 2 * *k + static_cast<std::int64_t>(v.id % 2);
          }};
}

Walk split_preimage(const Walk& w, std::int64_t j0) {
  return {[w, j0](std::int64_t k) {
            const Vertex v = w.at(j0 + 2 * k);
            require(v.id % 2 == 0, ErrorCode::MalformedImage, "expected an in-vertex");
            return Vertex{v.id / 2};
          },
          [w, j0](Vertex v) -> std::optional<std::int64_t> {
            auto p = w.pos(split_in(v));
            if (!p || floor_mod(*p - j0, 2) != 0) return std::nullopt;
            return floor_div(*p - j0, 2);
          }};
}

}  // namespace

RayDescriptor utod_forward(const RayDescriptor& r) {
  auto w = utod_image(walk(r));
  return synthetic_ray(w.at, w.pos);
}

DoubleRayDescriptor utod_forward(const DoubleRayDescriptor& d) {
  auto w = utod_image(walk(d));
  return synthetic_double(w.at, w.pos);
}

RayDescriptor utod_backward(const RayDescriptor& r) {
  const Walk src = walk(r);
  const std::int64_t j0 = utod_align(src.at);
  auto w = utod_preimage(src, j0);
  return synthetic_ray(w.at, [w](Vertex v) -> std::optional<std::int64_t> {
    auto k = w.pos(v);
    if (k && *k < 0) return std::nullopt;
    return k;
  });
}

DoubleRayDescriptor utod_backward(const DoubleRayDescriptor& d) {
  const Walk src = walk(d);
  const std::int64_t j0 = utod_align(src.at);
  auto w = utod_preimage(src, j0);
  return synthetic_double(w.at, w.pos);
}

RayDescriptor split_forward(const RayDescriptor& r) {
  auto w = split_image(walk(r));
  return synthetic_ray(w.at, w.pos);
}

DoubleRayDescriptor split_forward(const DoubleRayDescriptor& d) {
  auto w = split_image(walk(d));
  return synthetic_double(w.at, w.pos);
}

RayDescriptor split_backward(const RayDescriptor& r) {
  const Walk src = walk(r);
  const std::int64_t j0 = static_cast<std::int64_t>(src.at(0).id % 2);
  auto w = split_preimage(src, j0);
  return synthetic_ray(w.at, [w](Vertex v) -> std::optional<std::int64_t> {
    auto k = w.pos(v);
    if (k && *k < 0) return std::nullopt;
    return k;
  });
}

DoubleRayDescriptor split_backward(const DoubleRayDescriptor& d) {
  const Walk src = walk(d);
  const std::int64_t j0 = src.at(0).id % 2 ? -1 : 0;
  auto w = split_preimage(src, j0);
  return synthetic_double(w.at, w.pos);
}

DoubleRayDescriptor attach_forward(const RayDescriptor& r) {
  const Vertex x0 = ray_vertex_at(r, 0);
  return synthetic_double(
      [r, x0](std::int64_t z) { return z >= 0 ? tail_host(ray_vertex_at(r, z)) : tail_vertex(x0, z); },
      [r, x0](Vertex v) -> std::optional<std::int64_t> {
        if (v.id % 2 == 0) return ray_membership(r, {v.id / 2});
        auto [x, m] = codec::unpair((v.id - 1) / 2);
        if (x != x0.id) return std::nullopt;
        return -static_cast<std::int64_t>(m) - 1;
      });
}

RayDescriptor attach_backward(const DoubleRayDescriptor& d) {
  const Vertex first = double_vertex_at(d, 0);
  std::int64_t n = 0;
  if (first.id % 2 == 1) {
    auto [x, m] = codec::unpair((first.id - 1) / 2);
    n = static_cast<std::int64_t>(m) + 1;
    require(double_vertex_at(d, n) == tail_host({x}), ErrorCode::MalformedImage,
            "double ray does not leave the added tail of " + std::to_string(x));
    for (std::int64_t p = 1; p < n; ++p)
      require(double_vertex_at(d, p).id % 2 == 1, ErrorCode::MalformedImage, "tail chain broken");
  }
  return synthetic_ray(
      [d, n](std::int64_t k) {
        const Vertex v = double_vertex_at(d, n + k);
        require(v.id % 2 == 0, ErrorCode::MalformedImage, "added vertex after the original part");
        return Vertex{v.id / 2};
      },
      [d, n](Vertex v) -> std::optional<std::int64_t> {
        auto p = double_membership(d, tail_host(v));
        if (!p || *p < n) return std::nullopt;
        return *p - n;
      });
}

std::vector<RayDescriptor> normalize_starts(const std::vector<RayDescriptor>& family) {
  std::vector<RayDescriptor> out;
  std::set<Vertex> starts;
  for (const auto& r : family) {
    RayDescriptor t = r;
    std::int64_t shift = 0;
    while (starts.count(ray_vertex_at(t, 0))) {
      ++shift;
      t = tail_of(r, shift);
    }
    starts.insert(ray_vertex_at(t, 0));
    out.push_back(t);
  }
  return out;
}

AnyRay map_ray(GadgetKind kind, MapDirection dir, const AnyRay& r, GraphKind source_kind) {
  const bool fwd = dir == MapDirection::Forward;
  switch (kind) {
    case GadgetKind::UtoD:
      if (auto s = std::get_if<RayDescriptor>(&r)) return fwd ? utod_forward(*s) : utod_backward(*s);
      return fwd ? utod_forward(std::get<DoubleRayDescriptor>(r)) : utod_backward(std::get<DoubleRayDescriptor>(r));
    case GadgetKind::VtoE_split:
      if (auto s = std::get_if<RayDescriptor>(&r)) return fwd ? split_forward(*s) : split_backward(*s);
      return fwd ? split_forward(std::get<DoubleRayDescriptor>(r)) : split_backward(std::get<DoubleRayDescriptor>(r));
    case GadgetKind::attach_neg_tails:
      if (fwd) {
        require(std::holds_alternative<RayDescriptor>(r), ErrorCode::KindMismatch, "forward map takes a single ray");
        return attach_forward(std::get<RayDescriptor>(r));
      }
      require(std::holds_alternative<DoubleRayDescriptor>(r), ErrorCode::KindMismatch,
              "backward map takes a double ray");
      return attach_backward(std::get<DoubleRayDescriptor>(r));
    case GadgetKind::line_graph:
      require(fwd, ErrorCode::PreconditionViolated, "line graph backward map needs the graph");
      require(std::holds_alternative<RayDescriptor>(r), ErrorCode::KindMismatch, "line graph maps single rays");
      return line_ray_forward(std::get<RayDescriptor>(r), source_kind);
  }
  fail(ErrorCode::UnknownName, "gadget");
}

// ------------------------------------------------------------- line graph

RayDescriptor line_ray_forward(const RayDescriptor& r, GraphKind kind) {
  return synthetic_ray(
      [r, kind](std::int64_t k) { return line_vertex(kind, ray_vertex_at(r, k), ray_vertex_at(r, k + 1)); },
      [r, kind](Vertex e) -> std::optional<std::int64_t> {
        auto [a, b] = line_endpoints(e);
        auto ka = ray_membership(r, a), kb = ray_membership(r, b);
        if (!ka || !kb) return std::nullopt;
        if (*kb == *ka + 1) return *ka;
        if (kind == GraphKind::Undirected && *ka == *kb + 1) return *kb;
        return std::nullopt;
      });
}

namespace {

// Lazily extended recursion y_0, y_1, ... with k_n.
class LineRecursion {
 public:
  LineRecursion(const LazyGraph& g, RayDescriptor r) : kind_(g.kind), neighbors_(g.neighbors), r_(std::move(r)) {
    y_.push_back(line_endpoints(ray_vertex_at(r_, 0)).first);
  }

  Vertex y(std::int64_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<std::int64_t>(y_.size()) <= n) step();
    return y_[static_cast<std::size_t>(n)];
  }

  std::vector<std::int64_t> ks(std::int64_t steps) {
    y(steps);
    std::lock_guard<std::mutex> lock(mu_);
    return {k_.begin(), k_.begin() + steps};
  }

  // Position of v on the output, if any.
  std::optional<std::int64_t> position(Vertex v) {
    // Last line-graph position touching v bounds where v can appear.
    std::optional<std::int64_t> last;
    for (Vertex w : neighbors_(v))
      for (Vertex e : {line_vertex(kind_, v, w), line_vertex(kind_, w, v)})
        if (auto p = ray_membership(r_, e)) last = std::max(last.value_or(*p), *p);
    if (!last) return std::nullopt;
    std::lock_guard<std::mutex> lock(mu_);
    for (std::size_t n = 0;; ++n) {
      while (y_.size() <= n) step();
      if (y_[n] == v) return static_cast<std::int64_t>(n);
      if (n < k_.size() && k_[n] > *last) return std::nullopt;
    }
  }

 private:
  void step() {
    const Vertex yn = y_.back();
    std::optional<std::int64_t> best;
    for (Vertex w : neighbors_(yn))
      for (Vertex e : {line_vertex(kind_, yn, w), line_vertex(kind_, w, yn)})
        if (auto p = ray_membership(r_, e)) best = std::max(best.value_or(*p), *p);
    const std::int64_t prev = k_.empty() ? -1 : k_.back();
    require(best.has_value() && *best > prev, ErrorCode::FuelExhausted,
            "k_" + std::to_string(k_.size()) + " does not advance past " + std::to_string(prev));
    auto [a, b] = line_endpoints(ray_vertex_at(r_, *best));
    k_.push_back(*best);
    y_.push_back(a == yn ? b : a);
  }

  GraphKind kind_;
  std::function<std::vector<Vertex>(Vertex)> neighbors_;
  RayDescriptor r_;
  std::vector<Vertex> y_;
  std::vector<std::int64_t> k_;
  std::mutex mu_;
};

}  // namespace

LineBackward line_ray_backward(const LazyGraph& g, const RayDescriptor& r, std::int64_t steps) {
  require(g.locally_finite && static_cast<bool>(g.neighbors), ErrorCode::NotLocallyFinite,
          "line ray backward map needs a locally finite graph with neighbour lists");
  auto rec = std::make_shared<LineRecursion>(g, r);
  LineBackward out;
  out.k = rec->ks(steps);
  out.ray = synthetic_ray([rec](std::int64_t n) { return rec->y(n); },
                          [rec](Vertex v) { return rec->position(v); });
  return out;
}

LineBackward line_path_backward(const LazyGraph& g, const Path& edges) {
  require(g.locally_finite && static_cast<bool>(g.neighbors), ErrorCode::NotLocallyFinite,
          "line ray backward map needs a locally finite graph with neighbour lists");
  require(!edges.empty(), ErrorCode::PreconditionViolated, "empty path");
  LineBackward out;
  Path ys{line_endpoints(edges[0]).first};
  std::int64_t prev = -1;
  while (true) {
    const Vertex yn = ys.back();
    std::optional<std::int64_t> best;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = line_endpoints(edges[i]);
      if (a == yn || b == yn) best = static_cast<std::int64_t>(i);
    }
    require(best.has_value() && *best > prev, ErrorCode::FuelExhausted,
            "k_" + std::to_string(out.k.size()) + " does not advance past " + std::to_string(prev));
    out.k.push_back(*best);
    auto [a, b] = line_endpoints(edges[static_cast<std::size_t>(*best)]);
    ys.push_back(a == yn ? b : a);
    prev = *best;
    if (*best + 1 == static_cast<std::int64_t>(edges.size())) break;
  }
  out.ray.prefix = ys;
  return out;
}

// ------------------------------------------------------------ graphs

FiniteGraph transform_graph(GadgetKind kind, const FiniteGraph& g, std::int64_t depth) {
  auto label = [&](Vertex v) { return g.labels.label(v).value_or(std::to_string(v.id)); };
  switch (kind) {
    case GadgetKind::UtoD: {
      require(g.kind() == GraphKind::Undirected, ErrorCode::KindMismatch, "UtoD needs an undirected graph");
      FiniteGraph out(GraphKind::Directed);
      for (Vertex v : g.vertices()) {
        out.add_vertex(utod_vertex(v));
        out.labels.add(utod_vertex(v), label(v));
      }
      for (auto [u, v] : g.edges()) {
        const Vertex x = utod_x(u, v), y = utod_y(u, v);
        out.add_vertex(x);
        out.add_vertex(y);
        out.labels.add(x, "x(" + label(u) + "," + label(v) + ")");
        out.labels.add(y, "y(" + label(u) + "," + label(v) + ")");
        out.add_edge(utod_vertex(u), x);
        out.add_edge(utod_vertex(v), x);
        out.add_edge(x, y);
        out.add_edge(y, utod_vertex(u));
        out.add_edge(y, utod_vertex(v));
      }
      return out;
    }
    case GadgetKind::VtoE_split: {
      require(g.kind() == GraphKind::Directed, ErrorCode::KindMismatch, "VtoE_split needs a directed graph");
      FiniteGraph out(GraphKind::Directed);
      for (Vertex v : g.vertices()) {
        out.add_vertex(split_in(v));
        out.add_vertex(split_out(v));
        out.labels.add(split_in(v), label(v) + "_i");
        out.labels.add(split_out(v), label(v) + "_o");
        out.add_edge(split_in(v), split_out(v));
      }
      for (auto [u, v] : g.edges()) out.add_edge(split_out(u), split_in(v));
      return out;
    }
    case GadgetKind::attach_neg_tails: {
      require(g.kind() == GraphKind::Directed, ErrorCode::KindMismatch, "attach_neg_tails needs a directed graph");
      require(depth >= 0, ErrorCode::BadConfig, "depth must be >= 0");
      FiniteGraph out(GraphKind::Directed);
      for (Vertex v : g.vertices()) {
        out.add_vertex(tail_host(v));
        out.labels.add(tail_host(v), label(v));
        for (std::int64_t n = -1; n >= -depth; --n) {
          out.add_vertex(tail_vertex(v, n));
          out.labels.add(tail_vertex(v, n), label(v) + "_" + std::to_string(n));
          out.add_edge(tail_vertex(v, n), n == -1 ? tail_host(v) : tail_vertex(v, n + 1));
        }
      }
      for (auto [u, v] : g.edges()) out.add_edge(tail_host(u), tail_host(v));
      return out;
    }
    case GadgetKind::line_graph: {
      FiniteGraph out(g.kind());
      for (auto [u, v] : g.edges()) {
        const Vertex e = line_vertex(g.kind(), u, v);
        out.add_vertex(e);
        out.labels.add(e, "(" + label(u) + "," + label(v) + ")");
      }
      for (auto [u, v] : g.edges()) {
        const Vertex e = line_vertex(g.kind(), u, v);
        if (g.kind() == GraphKind::Directed) {
          for (Vertex w : g.successors(v)) out.add_edge(e, line_vertex(g.kind(), v, w));
        } else {
          for (Vertex end : {u, v})
            for (Vertex w : g.successors(end)) {
              const Vertex f = line_vertex(g.kind(), end, w);
              if (f != e) out.add_edge(e, f);
            }
        }
      }
      return out;
    }
  }
  fail(ErrorCode::UnknownName, "gadget");
}

LazyGraph transform_graph(GadgetKind kind, const LazyGraph& g) {
  LazyGraph out;
  auto adj = g.adjacent;
  switch (kind) {
    case GadgetKind::UtoD:
      require(g.kind == GraphKind::Undirected, ErrorCode::KindMismatch, "UtoD needs an undirected graph");
      out.kind = GraphKind::Directed;
      out.adjacent = [adj](Vertex a, Vertex b) {
        auto gadget = [&](Vertex g1) -> std::optional<std::pair<Vertex, Vertex>> {
          auto [p, q] = codec::unpair(g1.id / 3);
          if (!adj({p}, {q}) || p >= q) return std::nullopt;
          return std::pair<Vertex, Vertex>{Vertex{p}, Vertex{q}};
        };
        const auto ra = a.id % 3, rb = b.id % 3;
        if (ra == 0 && rb == 1) {
          auto e = gadget(b);
          return e && (e->first.id * 3 == a.id || e->second.id * 3 == a.id);
        }
        if (ra == 1 && rb == 2) return a.id / 3 == b.id / 3 && gadget(a).has_value();
        if (ra == 2 && rb == 0) {
          auto e = gadget(a);
          return e && (e->first.id * 3 == b.id || e->second.id * 3 == b.id);
        }
        return false;
      };
      break;
    case GadgetKind::VtoE_split:
      require(g.kind == GraphKind::Directed, ErrorCode::KindMismatch, "VtoE_split needs a directed graph");
      out.kind = GraphKind::Directed;
      out.adjacent = [adj](Vertex a, Vertex b) {
        if (a.id % 2 == 0) return b.id == a.id + 1;
        return b.id % 2 == 0 && adj({a.id / 2}, {b.id / 2});
      };
      break;
    case GadgetKind::attach_neg_tails:
      require(g.kind == GraphKind::Directed, ErrorCode::KindMismatch, "attach_neg_tails needs a directed graph");
      out.kind = GraphKind::Directed;
      out.adjacent = [adj](Vertex a, Vertex b) {
        if (a.id % 2 == 0) return b.id % 2 == 0 && adj({a.id / 2}, {b.id / 2});
        auto [x, m] = codec::unpair((a.id - 1) / 2);
        if (m == 0) return b == tail_host({x});
        return b == tail_vertex({x}, -static_cast<std::int64_t>(m));
      };
      break;
    case GadgetKind::line_graph: {
      out.kind = g.kind;
      const GraphKind k = g.kind;
      out.adjacent = [adj, k](Vertex e, Vertex f) {
        auto [a, b] = line_endpoints(e);
        auto [c, d] = line_endpoints(f);
        if (e == f || !adj(a, b) || !adj(c, d)) return false;
        if (k == GraphKind::Directed) return b == c;
        return a == c || a == d || b == c || b == d;
      };
      if (g.locally_finite && g.neighbors) {
        auto nb = g.neighbors;
        out.locally_finite = true;
        out.neighbors = [nb, adj, k](Vertex e) {
          auto [a, b] = line_endpoints(e);
          std::set<Vertex> found;
          for (Vertex end : {a, b})
            for (Vertex w : nb(end))
              for (Vertex f : {line_vertex(k, end, w), line_vertex(k, w, end)}) {
                auto [c, d] = line_endpoints(f);
                if (f == e || !adj(c, d)) continue;
                if (k == GraphKind::Directed && b != c && d != a) continue;
                found.insert(f);
              }
          return std::vector<Vertex>(found.begin(), found.end());
        };
      }
      break;
    }
  }
  return out;
}

GadgetCounts closed_form_counts(GadgetKind kind, const FiniteGraph& g, std::int64_t depth) {
  const std::uint64_t V = g.vertex_count(), E = g.edge_count();
  switch (kind) {
    case GadgetKind::UtoD: return {V + 2 * E, 5 * E};
    case GadgetKind::VtoE_split: return {2 * V, V + E};
    case GadgetKind::attach_neg_tails:
      return {V * (1 + static_cast<std::uint64_t>(depth)), E + V * static_cast<std::uint64_t>(depth)};
    case GadgetKind::line_graph: {
      std::uint64_t edges = 0;
      for (Vertex v : g.vertices()) {
        if (g.kind() == GraphKind::Undirected) {
          const std::uint64_t d = g.successors(v).size();
          edges += d * (d - (d > 0 ? 1 : 0)) / 2;
        } else {
          std::uint64_t in = 0;
          for (Vertex u : g.neighbors(v))
            if (g.has_edge(u, v)) ++in;
          edges += in * g.successors(v).size();
        }
      }
      return {E, edges};
    }
  }
  fail(ErrorCode::UnknownName, "gadget");
}

// ------------------------------------------------------------ windows

bool window_disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b, Disjointness Y, GraphKind kind) {
  if (Y == Disjointness::Vertex) {
    std::unordered_set<Vertex, VertexHash> sa(a.begin(), a.end());
    for (Vertex v : b)
      if (sa.count(v)) return false;
    return true;
  }
  std::set<Edge> ea;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) ea.insert(canonical_edge(kind, a[i], a[i + 1]));
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (ea.count(canonical_edge(kind, b[i], b[i + 1]))) return false;
  return true;
}

// ------------------------------------------------- locally finite subgraph

bool LocallyFiniteSubgraph::has_edge(Vertex u, Vertex v) const {
  auto on = [&](const RayDescriptor& r) {
    auto p = ray_membership(r, u);
    if (!p) return false;
    if (ray_vertex_at(r, *p + 1) == v) return true;
    return kind == GraphKind::Undirected && *p > 0 && ray_vertex_at(r, *p - 1) == v;
  };
  for (const auto& r : seed)
    if (on(r)) return true;
  for (const auto& fam : family)
    for (const auto& r : fam)
      if (on(r)) return true;
  return false;
}

std::vector<Vertex> LocallyFiniteSubgraph::neighbors(Vertex v) const {
  std::set<Vertex> out;
  auto scan = [&](const RayDescriptor& r) {
    auto p = ray_membership(r, v);
    if (!p) return;
    out.insert(ray_vertex_at(r, *p + 1));
    if (*p > 0) out.insert(ray_vertex_at(r, *p - 1));
  };
  for (const auto& r : seed) scan(r);
  for (const auto& fam : family)
    for (const auto& r : fam) scan(r);
  return {out.begin(), out.end()};
}

LazyGraph LocallyFiniteSubgraph::graph() const {
  auto self = std::make_shared<const LocallyFiniteSubgraph>(*this);
  LazyGraph g;
  g.kind = kind;
  g.adjacent = [self](Vertex u, Vertex v) { return self->has_edge(u, v); };
  g.neighbors = [self](Vertex v) { return self->neighbors(v); };
  g.locally_finite = true;
  return g;
}

LocallyFiniteSubgraph locally_finite_subgraph(const LazyGraph& g,
                                              const std::function<std::vector<RayDescriptor>(std::size_t)>& family,
                                              std::size_t K, const IntersectionOracle& oracle,
                                              std::int64_t horizon) {
  require(K >= 1, ErrorCode::BadConfig, "K must be >= 1");
  require(static_cast<bool>(g.vertex_at), ErrorCode::PreconditionViolated, "graph needs a vertex enumeration");
  LocallyFiniteSubgraph out;
  out.kind = g.kind;
  for (std::size_t i = 0; i < K; ++i) {
    auto v = g.vertex_at(i);
    require(v.has_value(), ErrorCode::PreconditionViolated, "vertex enumeration ended early");
    out.order.push_back(*v);
  }
  for (std::size_t k = 1; k <= K; ++k) {
    const auto R = family(k);
    require(R.size() == k, ErrorCode::FamilyNotDisjoint,
            "family(" + std::to_string(k) + ") has " + std::to_string(R.size()) + " rays");
    const auto rep = verify_disjoint(R, Disjointness::Edge, horizon, oracle, g.kind);
    require(rep.pass, ErrorCode::FamilyNotDisjoint, "family(" + std::to_string(k) + "): " + rep.summary());
    if (k == 1) out.seed.push_back(R[0]);
    SubgraphStage st;
    st.k = k;
    std::vector<RayDescriptor> S;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::int64_t> n;
      std::int64_t mx = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const std::int64_t p = ray_membership(R[j], out.order[i]).value_or(0);
        n.push_back(p);
        mx = std::max(mx, p);
      }
      st.n.push_back(n);
      st.cut.push_back(mx + 1);
      S.push_back(tail_of(R[j], mx + 1));
    }
    out.family.push_back(std::move(S));
    out.log.push_back(std::move(st));
  }
  return out;
}

}  // namespace halin

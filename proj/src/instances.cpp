#include "halin/instances.hpp"

#include <algorithm>

namespace halin {

// ------------------------------------------------------------ enumerations

void StagewiseEnumeration::validate() const {
  std::set<std::uint64_t> seen;
  for (auto [x, s] : pairs) {
    require(s >= 1, ErrorCode::BadConfig, "stage of element " + std::to_string(x) + " must be positive");
    require(seen.insert(x).second, ErrorCode::BadConfig, "element " + std::to_string(x) + " enters twice");
  }
}

std::set<std::uint64_t> StagewiseEnumeration::at_stage(std::uint64_t n, std::uint64_t s) const {
  std::set<std::uint64_t> out;
  for (auto [x, st] : pairs)
    if (x < n && st <= s) out.insert(x);
  return out;
}

std::set<std::uint64_t> StagewiseEnumeration::limit(std::uint64_t n) const {
  std::set<std::uint64_t> out;
  for (auto [x, st] : pairs)
    if (x < n) out.insert(x);
  return out;
}

std::vector<std::uint64_t> StagewiseEnumeration::entry_stages(std::uint64_t n) const {
  std::set<std::uint64_t> st;
  for (auto [x, s] : pairs)
    if (x < n) st.insert(s);
  return {st.begin(), st.end()};
}

std::optional<std::uint64_t> StagewiseEnumeration::least_element() const {
  std::optional<std::uint64_t> best;
  for (auto [x, s] : pairs)
    if (!best || x < *best) best = x;
  return best;
}

std::uint64_t StagewiseEnumeration::max_stage() const {
  std::uint64_t m = 0;
  for (auto [x, s] : pairs) m = std::max(m, s);
  return m;
}

StagewiseEnumeration random_enumeration(std::mt19937_64& rng, std::uint64_t max_element,
                                        std::uint64_t max_stage, std::size_t count) {
  require(count <= max_element, ErrorCode::BadConfig, "count exceeds the element range");
  require(max_stage >= 1, ErrorCode::BadConfig, "max_stage must be >= 1");
  std::vector<std::uint64_t> elems(max_element);
  for (std::uint64_t x = 0; x < max_element; ++x) elems[x] = x;
  std::shuffle(elems.begin(), elems.end(), rng);
  std::uniform_int_distribution<std::uint64_t> stage(1, max_stage);
  StagewiseEnumeration W;
  for (std::size_t i = 0; i < count; ++i) W.pairs.emplace_back(elems[i], stage(rng));
  return W;
}

// ------------------------------------------------------------------- trees

bool EnumTree::contains(std::uint64_t s, std::uint64_t t) const {
  auto it = strands.find(s);
  if (it == strands.end()) return false;
  return !it->second || t <= *it->second;
}

EnumTree enum_tree(std::uint64_t n, const StagewiseEnumeration& W) {
  require(n >= 1, ErrorCode::BadConfig, "tree index must be >= 1");
  EnumTree T;
  T.n = n;
  const auto stages = W.entry_stages(n);
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (i + 1 == stages.size()) {
      T.strands[stages[i]] = std::nullopt;
      T.branch = stages[i];
    } else {
      // W_t restricted to n changes first at the next entry stage.
      T.strands[stages[i]] = stages[i + 1] - 1;
    }
  }
  return T;
}

Vertex enum_root(std::uint64_t n) { return {codec::pair(n, 0)}; }

Vertex enum_vertex(std::uint64_t n, std::uint64_t s, std::uint64_t t) {
  return {codec::pair(n, codec::pair(s, t) + 1)};
}

EnumCoords enum_coords(Vertex v) {
  auto [n, node] = codec::unpair(v.id);
  EnumCoords c;
  c.tree = n;
  if (node > 0) c.st = codec::unpair(node - 1);
  return c;
}

namespace {

BaseRayPtr make_base(std::size_t index, bool dbl, FunctionBaseRay::AtFn at, FunctionBaseRay::PosFn pos) {
  return std::make_shared<FunctionBaseRay>(index, dbl, std::move(at), std::move(pos));
}

std::shared_ptr<const IntersectionOracle> disjoint_oracle() {
  return std::make_shared<FunctionOracle>([](const BaseRay&, const BaseRay&) { return BaseMeet{}; });
}

std::string enum_label(Vertex v) {
  const EnumCoords c = enum_coords(v);
  std::string out = "T" + std::to_string(c.tree) + ":";
  if (!c.st) return out + "root";
  out += std::to_string(c.st->first);
  for (std::uint64_t t = 0; t < c.st->second && t < 8; ++t) out += "0";
  if (c.st->second > 8) out += "^" + std::to_string(c.st->second);
  return out;
}

}  // namespace

Instance enum_forest(const StagewiseEnumeration& W, std::size_t count) {
  require(count >= 1, ErrorCode::BadConfig, "count must be >= 1");
  W.validate();
  Instance inst;
  inst.name = "enum_forest";
  inst.params["count"] = static_cast<std::int64_t>(count);

  auto g = std::make_shared<LazyGraph>();
  g->kind = GraphKind::Undirected;
  g->adjacent = [W](Vertex u, Vertex v) {
    const EnumCoords a = enum_coords(u), b = enum_coords(v);
    if (a.tree != b.tree || a.tree == 0) return false;
    const EnumTree T = enum_tree(a.tree, W);
    auto in = [&](const EnumCoords& c) { return !c.st || T.contains(c.st->first, c.st->second); };
    if (!in(a) || !in(b)) return false;
    if (!a.st && b.st) return b.st->second == 0;
    if (a.st && !b.st) return a.st->second == 0;
    if (!a.st || !b.st) return false;
    if (a.st->first != b.st->first) return false;
    const auto ta = a.st->second, tb = b.st->second;
    return ta + 1 == tb || tb + 1 == ta;
  };
  g->locally_finite = true;
  g->neighbors = [W](Vertex v) {
    std::vector<Vertex> out;
    const EnumCoords c = enum_coords(v);
    if (c.tree == 0) return out;
    const EnumTree T = enum_tree(c.tree, W);
    if (!c.st) {
      for (const auto& [s, last] : T.strands) out.push_back(enum_vertex(c.tree, s, 0));
      return out;
    }
    const auto [s, t] = *c.st;
    if (!T.contains(s, t)) return out;
    out.push_back(t == 0 ? enum_root(c.tree) : enum_vertex(c.tree, s, t - 1));
    if (T.contains(s, t + 1)) out.push_back(enum_vertex(c.tree, s, t + 1));
    return out;
  };
  inst.graph = g;

  // Base n is the branch of T_n, rooted.
  auto registry = std::make_shared<GeneratedRegistry>([W](std::size_t n) -> BaseRayPtr {
    const EnumTree T = enum_tree(n, W);
    require(T.branch.has_value(), ErrorCode::InsufficientRays, "tree " + std::to_string(n) + " has no branch");
    const std::uint64_t s = *T.branch;
    return make_base(
        n, false,
        [n, s](std::int64_t k) {
          return k == 0 ? enum_root(n) : enum_vertex(n, s, static_cast<std::uint64_t>(k - 1));
        },
        [n, s](Vertex v) -> std::optional<std::int64_t> {
          const EnumCoords c = enum_coords(v);
          if (c.tree != n) return std::nullopt;
          if (!c.st) return 0;
          if (c.st->first != s) return std::nullopt;
          return static_cast<std::int64_t>(c.st->second) + 1;
        });
  });
  inst.registry = registry;
  inst.oracle = disjoint_oracle();

  const std::uint64_t first = W.least_element().value_or(0) + 1;
  const bool any = W.least_element().has_value();
  RayFamilyOracle& f = inst.family;
  f.name = "enum_forest";
  f.kind = GraphKind::Undirected;
  f.Y = Disjointness::Vertex;
  f.Z = RayShape::Single;
  f.oracle = inst.oracle;
  f.registry = registry;
  f.graph = g;
  f.single = [registry, first, any](std::size_t k) {
    require(any || k == 0, ErrorCode::InsufficientRays, "no tree has a branch");
    std::vector<RayDescriptor> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(ray_from_base(registry->get(first + i)));
    return out;
  };
  f.tree_of = [](std::size_t idx) { return idx; };
  inst.label = enum_label;
  return inst;
}

std::set<std::uint64_t> decode_enumeration(const std::vector<RayDescriptor>& rays, std::uint64_t m,
                                           const StagewiseEnumeration& W) {
  if (m == 0) return {};
  for (const auto& r : rays) {
    for (std::int64_t p = 0; p < 2; ++p) {
      const EnumCoords c = enum_coords(ray_vertex_at(r, p));
      if (!c.st) continue;
      if (c.tree >= m) return W.at_stage(m, c.st->first);
      break;
    }
  }
  fail(ErrorCode::InsufficientRays, "no ray lies in a tree with index >= " + std::to_string(m));
}

// ---------------------------------------------------------- decoder graph

Vertex spine_vertex(std::uint64_t n) { return {2 * n}; }

Vertex strand_vertex(std::uint64_t n, std::uint64_t s, std::uint64_t t) {
  return {2 * codec::pair(codec::pair(n, s), t) + 1};
}

bool in_nonuniform(const StagewiseEnumeration& W, std::uint64_t n, std::uint64_t s, std::uint64_t t) {
  if (n == 0) return false;
  return enum_tree(n, W).contains(s, t);
}

namespace {

struct StrandCoords {
  std::uint64_t n, s, t;
};

std::optional<StrandCoords> strand_coords(Vertex v) {
  if (v.id % 2 == 0) return std::nullopt;
  auto [ns, t] = codec::unpair((v.id - 1) / 2);
  auto [n, s] = codec::unpair(ns);
  return StrandCoords{n, s, t};
}

bool dead_end(const StagewiseEnumeration& W, const StrandCoords& c) {
  return in_nonuniform(W, c.n, c.s, c.t) && !in_nonuniform(W, c.n, c.s, c.t + 1);
}

std::string nonuniform_label(Vertex v) {
  if (v.id % 2 == 0) return "0^" + std::to_string(v.id / 2);
  const auto c = *strand_coords(v);
  return std::to_string(c.n) + "." + std::to_string(c.s) + ".0^" + std::to_string(c.t);
}

}  // namespace

Instance nonuniform_graph(const StagewiseEnumeration& W) {
  W.validate();
  Instance inst;
  inst.name = "nonuniform";
  auto g = std::make_shared<LazyGraph>();
  g->kind = GraphKind::Undirected;
  g->adjacent = [W](Vertex u, Vertex v) {
    const auto a = strand_coords(u), b = strand_coords(v);
    if (!a && !b) {
      const auto x = u.id / 2, y = v.id / 2;
      return x >= 1 && y >= 1 && (x + 1 == y || y + 1 == x);
    }
    if (a && b) {
      if (a->n != b->n || a->s != b->s) return false;
      if (!(a->t + 1 == b->t || b->t + 1 == a->t)) return false;
      return in_nonuniform(W, a->n, a->s, a->t) && in_nonuniform(W, b->n, b->s, b->t);
    }
    const Vertex sp = a ? v : u;
    const StrandCoords c = a ? *a : *b;
    return sp == spine_vertex(1) && dead_end(W, c);
  };
  g->locally_finite = false;
  inst.graph = g;

  auto registry = std::make_shared<GeneratedRegistry>([](std::size_t idx) -> BaseRayPtr {
    if (idx == 0)
      return make_base(
          0, false, [](std::int64_t k) { return spine_vertex(static_cast<std::uint64_t>(k) + 1); },
          [](Vertex v) -> std::optional<std::int64_t> {
            if (v.id % 2 != 0 || v.id < 2) return std::nullopt;
            return static_cast<std::int64_t>(v.id / 2) - 1;
          });
    auto [n, s] = codec::unpair(idx);
    return make_base(
        idx, false,
        [n = n, s = s](std::int64_t k) { return strand_vertex(n, s, static_cast<std::uint64_t>(k)); },
        [n = n, s = s](Vertex v) -> std::optional<std::int64_t> {
          auto c = strand_coords(v);
          if (!c || c->n != n || c->s != s) return std::nullopt;
          return static_cast<std::int64_t>(c->t);
        });
  });
  inst.registry = registry;
  inst.oracle = disjoint_oracle();

  RayFamilyOracle& f = inst.family;
  f.name = "nonuniform";
  f.kind = GraphKind::Undirected;
  f.Y = Disjointness::Vertex;
  f.Z = RayShape::Single;
  f.oracle = inst.oracle;
  f.registry = registry;
  f.graph = g;
  const auto least = W.least_element();
  f.single = [W, registry, least](std::size_t k) {
    require(least.has_value() || k == 0, ErrorCode::InsufficientRays, "no strand is infinite");
    std::vector<RayDescriptor> out;
    for (std::size_t i = 1; i <= k; ++i) {
      const std::uint64_t n = *least + i;
      const EnumTree T = enum_tree(n, W);
      out.push_back(ray_from_base(registry->get(codec::pair(n, *T.branch))));
    }
    return out;
  };
  inst.label = nonuniform_label;
  return inst;
}

RayDescriptor nonuniform_ray(const Instance& inst, const StagewiseEnumeration& W, std::uint64_t n,
                             std::uint64_t s) {
  const EnumTree T = enum_tree(n, W);
  auto it = T.strands.find(s);
  require(it != T.strands.end(), ErrorCode::PreconditionViolated,
          "no strand " + std::to_string(n) + "." + std::to_string(s));
  if (!it->second) return ray_from_base(inst.registry->get(codec::pair(n, s)));
  RayDescriptor r;
  for (std::uint64_t t = 0; t <= *it->second; ++t) r.prefix.push_back(strand_vertex(n, s, t));
  r.tail = {inst.registry->get(0), 0, 1};
  return r;
}

std::set<std::uint64_t> decode_nonuniform(const std::vector<RayDescriptor>& rays, std::uint64_t m,
                                          const StagewiseEnumeration& W) {
  if (m == 0) return {};
  for (const auto& r : rays) {
    // Rays through (0,00) or along the spine have two consecutive even vertices early on.
    const auto reach = static_cast<std::int64_t>(r.prefix.size()) + 2;
    bool spine = false;
    for (std::int64_t p = 0; p < reach && !spine; ++p)
      spine = ray_vertex_at(r, p).id % 2 == 0 && ray_vertex_at(r, p + 1).id % 2 == 0;
    if (spine) continue;
    const auto c = strand_coords(ray_vertex_at(r, 0));
    if (!c) continue;
    if (c->n >= m) return W.at_stage(m, c->s);
  }
  fail(ErrorCode::InsufficientRays, "no strand ray with index >= " + std::to_string(m));
}

}  // namespace halin

#include <algorithm>
#include <numeric>

#include "halin/instances.hpp"

namespace halin {

namespace {

BaseRayPtr make_base(std::size_t index, bool dbl, FunctionBaseRay::AtFn at, FunctionBaseRay::PosFn pos) {
  return std::make_shared<FunctionBaseRay>(index, dbl, std::move(at), std::move(pos));
}

std::shared_ptr<const IntersectionOracle> disjoint_oracle() {
  return std::make_shared<FunctionOracle>([](const BaseRay&, const BaseRay&) { return BaseMeet{}; });
}

std::int64_t param(const std::map<std::string, std::int64_t>& p, const std::string& key, std::int64_t dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : it->second;
}

void fill_family(Instance& inst, const std::string& name, GraphKind kind, Disjointness Y, RayShape Z) {
  RayFamilyOracle& f = inst.family;
  f.name = name;
  f.kind = kind;
  f.Y = Y;
  f.Z = Z;
  f.oracle = inst.oracle;
  f.registry = inst.registry;
  f.graph = inst.graph;
}

// ------------------------------------------------------------------ comb

Instance make_comb() {
  Instance inst;
  inst.name = "comb";
  auto g = std::make_shared<LazyGraph>();
  g->adjacent = [](Vertex u, Vertex v) {
    auto side = [](Vertex a, Vertex b) {
      if (a.id % 2 == 0 && b.id % 2 == 0) return a.id + 2 == b.id;
      if (a.id % 2 == 0 && b.id % 2 == 1) {
        auto [j, k] = codec::unpair((b.id - 1) / 2);
        return k == 1 && a == comb_spine(j);
      }
      if (a.id % 2 == 1 && b.id % 2 == 1) {
        auto [j1, k1] = codec::unpair((a.id - 1) / 2);
        auto [j2, k2] = codec::unpair((b.id - 1) / 2);
        return j1 == j2 && k1 >= 1 && k1 + 1 == k2;
      }
      return false;
    };
    return side(u, v) || side(v, u);
  };
  g->locally_finite = true;
  g->neighbors = [](Vertex v) {
    std::vector<Vertex> out;
    if (v.id % 2 == 0) {
      const auto n = v.id / 2;
      if (n > 0) out.push_back(comb_spine(n - 1));
      out.push_back(comb_spine(n + 1));
      out.push_back(comb_tooth(n, 1));
    } else {
      auto [j, k] = codec::unpair((v.id - 1) / 2);
      if (k == 0) return out;
      out.push_back(k == 1 ? comb_spine(j) : comb_tooth(j, k - 1));
      out.push_back(comb_tooth(j, k + 1));
    }
    return out;
  };
  inst.graph = g;
  inst.registry = std::make_shared<GeneratedRegistry>([](std::size_t idx) -> BaseRayPtr {
    if (idx == 0)
      return make_base(
          0, false, [](std::int64_t k) { return comb_spine(static_cast<std::uint64_t>(k)); },
          [](Vertex v) -> std::optional<std::int64_t> {
            if (v.id % 2) return std::nullopt;
            return static_cast<std::int64_t>(v.id / 2);
          });
    const std::uint64_t j = idx - 1;
    return make_base(
        idx, false,
        [j](std::int64_t k) { return k == 0 ? comb_spine(j) : comb_tooth(j, static_cast<std::uint64_t>(k)); },
        [j](Vertex v) -> std::optional<std::int64_t> {
          if (v == comb_spine(j)) return 0;
          if (v.id % 2 == 0) return std::nullopt;
          auto [jj, k] = codec::unpair((v.id - 1) / 2);
          if (jj != j || k == 0) return std::nullopt;
          return static_cast<std::int64_t>(k);
        });
  });
  inst.oracle = std::make_shared<FunctionOracle>([](const BaseRay& a, const BaseRay& b) {
    BaseMeet m;
    if (a.index() == 0) m.points.emplace_back(static_cast<std::int64_t>(b.index() - 1), 0);
    if (b.index() == 0) m.points.emplace_back(0, static_cast<std::int64_t>(a.index() - 1));
    return m;
  });
  fill_family(inst, "comb", GraphKind::Undirected, Disjointness::Vertex, RayShape::Single);
  auto reg = inst.registry;
  inst.family.single = [reg](std::size_t k) {
    std::vector<RayDescriptor> out;
    if (k == 1) return std::vector<RayDescriptor>{ray_from_base(reg->get(0))};
    for (std::size_t j = 0; j < k; ++j) out.push_back(ray_from_base(reg->get(j + 1)));
    return out;
  };
  inst.label = [](Vertex v) {
    if (v.id % 2 == 0) return "s" + std::to_string(v.id / 2);
    auto [j, k] = codec::unpair((v.id - 1) / 2);
    return "t" + std::to_string(j) + "_" + std::to_string(k);
  };
  return inst;
}

// ------------------------------------------------------------------ grid

Instance make_grid(bool directed) {
  Instance inst;
  inst.name = "grid";
  inst.params["directed"] = directed ? 1 : 0;
  auto g = std::make_shared<LazyGraph>();
  g->kind = directed ? GraphKind::Directed : GraphKind::Undirected;
  g->adjacent = [directed](Vertex u, Vertex v) {
    auto [r1, c1] = codec::unpair(u.id);
    auto [r2, c2] = codec::unpair(v.id);
    const bool fwd = (r1 == r2 && c1 + 1 == c2) || (c1 == c2 && r1 + 1 == r2);
    const bool bwd = (r1 == r2 && c2 + 1 == c1) || (c1 == c2 && r2 + 1 == r1);
    return fwd || (!directed && bwd);
  };
  g->locally_finite = true;
  g->neighbors = [](Vertex v) {
    auto [r, c] = codec::unpair(v.id);
    std::vector<Vertex> out{grid_vertex(r + 1, c), grid_vertex(r, c + 1)};
    if (r > 0) out.push_back(grid_vertex(r - 1, c));
    if (c > 0) out.push_back(grid_vertex(r, c - 1));
    return out;
  };
  g->vertex_at = [](std::uint64_t i) -> std::optional<Vertex> { return Vertex{i}; };
  inst.graph = g;
  inst.registry = std::make_shared<GeneratedRegistry>([](std::size_t idx) -> BaseRayPtr {
    const std::uint64_t line = idx / 2;
    if (idx % 2 == 0)
      return make_base(
          idx, false, [line](std::int64_t k) { return grid_vertex(line, static_cast<std::uint64_t>(k)); },
          [line](Vertex v) -> std::optional<std::int64_t> {
            auto [r, c] = codec::unpair(v.id);
            if (r != line) return std::nullopt;
            return static_cast<std::int64_t>(c);
          });
    return make_base(
        idx, false, [line](std::int64_t k) { return grid_vertex(static_cast<std::uint64_t>(k), line); },
        [line](Vertex v) -> std::optional<std::int64_t> {
          auto [r, c] = codec::unpair(v.id);
          if (c != line) return std::nullopt;
          return static_cast<std::int64_t>(r);
        });
  });
  inst.oracle = std::make_shared<FunctionOracle>([](const BaseRay& a, const BaseRay& b) {
    BaseMeet m;
    const auto la = static_cast<std::int64_t>(a.index() / 2), lb = static_cast<std::int64_t>(b.index() / 2);
    if (a.index() % 2 == 0 && b.index() % 2 == 1) m.points.emplace_back(lb, la);
    if (a.index() % 2 == 1 && b.index() % 2 == 0) m.points.emplace_back(lb, la);
    return m;
  });
  fill_family(inst, "grid", g->kind, Disjointness::Vertex, RayShape::Single);
  auto reg = inst.registry;
  inst.family.single = [reg](std::size_t k) {
    std::vector<RayDescriptor> out;
    for (std::size_t r = 0; r < k; ++r) out.push_back(ray_from_base(reg->get(2 * r)));
    return out;
  };
  inst.label = [](Vertex v) {
    auto [r, c] = codec::unpair(v.id);
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
  };
  return inst;
}

// ------------------------------------------------------------ ray forest

Instance make_ray_forest(std::size_t k) {
  require(k >= 1, ErrorCode::BadConfig, "ray_forest needs k >= 1");
  Instance inst;
  inst.name = "ray_forest";
  inst.params["k"] = static_cast<std::int64_t>(k);
  auto g = std::make_shared<LazyGraph>();
  g->adjacent = [k](Vertex u, Vertex v) {
    auto [i1, n1] = codec::unpair(u.id);
    auto [i2, n2] = codec::unpair(v.id);
    return i1 == i2 && i1 < k && (n1 + 1 == n2 || n2 + 1 == n1);
  };
  g->locally_finite = true;
  g->neighbors = [k](Vertex v) {
    auto [i, n] = codec::unpair(v.id);
    std::vector<Vertex> out;
    if (i >= k) return out;
    if (n > 0) out.push_back({codec::pair(i, n - 1)});
    out.push_back({codec::pair(i, n + 1)});
    return out;
  };
  inst.graph = g;
  inst.registry = std::make_shared<GeneratedRegistry>([k](std::size_t idx) -> BaseRayPtr {
    require(idx < k, ErrorCode::InsufficientRays, "ray_forest has " + std::to_string(k) + " rays");
    return make_base(
        idx, false, [idx](std::int64_t n) { return Vertex{codec::pair(idx, static_cast<std::uint64_t>(n))}; },
        [idx](Vertex v) -> std::optional<std::int64_t> {
          auto [i, n] = codec::unpair(v.id);
          if (i != idx) return std::nullopt;
          return static_cast<std::int64_t>(n);
        });
  });
  inst.oracle = disjoint_oracle();
  fill_family(inst, "ray_forest", GraphKind::Undirected, Disjointness::Vertex, RayShape::Single);
  auto reg = inst.registry;
  inst.family.single = [reg, k](std::size_t j) {
    require(j <= k, ErrorCode::InsufficientRays, "ray_forest has " + std::to_string(k) + " rays");
    std::vector<RayDescriptor> out;
    for (std::size_t i = 0; i < j; ++i) out.push_back(ray_from_base(reg->get(i)));
    return out;
  };
  inst.family.tree_of = [](std::size_t idx) { return idx; };
  inst.label = [](Vertex v) {
    auto [i, n] = codec::unpair(v.id);
    return "r" + std::to_string(i) + "_" + std::to_string(n);
  };
  return inst;
}

// ----------------------------------------------------------- double comb

std::pair<std::int64_t, std::int64_t> plane_coords(Vertex v) {
  auto [r, c] = codec::unpair(v.id);
  return {codec::unzigzag(r), codec::unzigzag(c)};
}

Instance make_double_comb() {
  Instance inst;
  inst.name = "double_comb";
  auto g = std::make_shared<LazyGraph>();
  auto in_graph = [](std::int64_t r, std::int64_t c) { return r == 0 || c >= 0; };
  g->adjacent = [in_graph](Vertex u, Vertex v) {
    auto [r1, c1] = plane_coords(u);
    auto [r2, c2] = plane_coords(v);
    if (!in_graph(r1, c1) || !in_graph(r2, c2)) return false;
    if (r1 == 0 && r2 == 0 && (c1 - c2 == 1 || c2 - c1 == 1)) return true;
    return c1 == c2 && c1 >= 0 && (r1 - r2 == 1 || r2 - r1 == 1);
  };
  g->locally_finite = true;
  g->neighbors = [in_graph](Vertex v) {
    auto [r, c] = plane_coords(v);
    std::vector<Vertex> out;
    if (!in_graph(r, c)) return out;
    if (r == 0) {
      out.push_back(plane_vertex(0, c - 1));
      out.push_back(plane_vertex(0, c + 1));
    }
    if (c >= 0) {
      out.push_back(plane_vertex(r - 1, c));
      out.push_back(plane_vertex(r + 1, c));
    }
    return out;
  };
  inst.graph = g;
  inst.registry = std::make_shared<GeneratedRegistry>([](std::size_t idx) -> BaseRayPtr {
    if (idx == 0)
      return make_base(
          0, true, [](std::int64_t z) { return plane_vertex(0, z); },
          [](Vertex v) -> std::optional<std::int64_t> {
            auto [r, c] = plane_coords(v);
            if (r != 0) return std::nullopt;
            return c;
          });
    const auto j = static_cast<std::int64_t>(idx - 1);
    return make_base(
        idx, true, [j](std::int64_t z) { return plane_vertex(z, j); },
        [j](Vertex v) -> std::optional<std::int64_t> {
          auto [r, c] = plane_coords(v);
          if (c != j) return std::nullopt;
          return r;
        });
  });
  inst.oracle = std::make_shared<FunctionOracle>([](const BaseRay& a, const BaseRay& b) {
    BaseMeet m;
    if (a.index() == 0) m.points.emplace_back(static_cast<std::int64_t>(b.index() - 1), 0);
    if (b.index() == 0) m.points.emplace_back(0, static_cast<std::int64_t>(a.index() - 1));
    return m;
  });
  fill_family(inst, "double_comb", GraphKind::Undirected, Disjointness::Vertex, RayShape::Double);
  auto reg = inst.registry;
  inst.family.doubles = [reg](std::size_t k) {
    if (k == 1) return std::vector<DoubleRayDescriptor>{double_from_base(reg->get(0))};
    std::vector<DoubleRayDescriptor> out;
    for (std::size_t j = 0; j < k; ++j) out.push_back(double_from_base(reg->get(j + 1)));
    return out;
  };
  inst.label = [](Vertex v) {
    auto [r, c] = plane_coords(v);
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
  };
  return inst;
}

// ---------------------------------------------------- directed forest

// Tags: 0 spine s_z, 1 in-hanger (j,m), 2 out-hanger (j,m), 3 X in-hanger m, 4 X out-hanger m.
Vertex ded_v(std::uint64_t tag, std::uint64_t payload) { return {payload * 5 + tag}; }
Vertex ded_spine(std::int64_t z) { return ded_v(0, codec::zigzag(z)); }
Vertex ded_in(std::uint64_t j, std::uint64_t m) { return ded_v(1, codec::pair(j, m)); }
Vertex ded_out(std::uint64_t j, std::uint64_t m) { return ded_v(2, codec::pair(j, m)); }
constexpr std::int64_t kXAnchor = -10;

std::vector<Vertex> ded_successors(Vertex u) {
  const std::uint64_t tag = u.id % 5, pay = u.id / 5;
  switch (tag) {
    case 0: {
      const std::int64_t z = codec::unzigzag(pay);
      std::vector<Vertex> out{ded_spine(z + 1)};
      if (z >= 0 && z % 3 == 2) out.push_back(ded_out(static_cast<std::uint64_t>(z / 3), 1));
      if (z == kXAnchor) out.push_back(ded_v(4, 1));
      return out;
    }
    case 1: {
      auto [j, m] = codec::unpair(pay);
      if (m == 0) return {};
      return {m == 1 ? ded_spine(static_cast<std::int64_t>(3 * j)) : ded_in(j, m - 1)};
    }
    case 2: {
      auto [j, m] = codec::unpair(pay);
      if (m == 0) return {};
      return {ded_out(j, m + 1)};
    }
    case 3:
      if (pay == 0) return {};
      return {pay == 1 ? ded_spine(kXAnchor) : ded_v(3, pay - 1)};
    default:
      if (pay == 0) return {};
      return {ded_v(4, pay + 1)};
  }
}

Instance make_ded_tree() {
  Instance inst;
  inst.name = "ded_tree";
  auto g = std::make_shared<LazyGraph>();
  g->kind = GraphKind::Directed;
  g->adjacent = [](Vertex u, Vertex v) {
    const auto s = ded_successors(u);
    return std::find(s.begin(), s.end(), v) != s.end();
  };
  inst.graph = g;
  inst.registry = std::make_shared<GeneratedRegistry>([](std::size_t idx) -> BaseRayPtr {
    if (idx == 0)
      return make_base(
          0, true, [](std::int64_t z) { return ded_spine(z); },
          [](Vertex v) -> std::optional<std::int64_t> {
            if (v.id % 5 != 0) return std::nullopt;
            return codec::unzigzag(v.id / 5);
          });
    if (idx == 1)
      return make_base(
          1, true,
          [](std::int64_t z) {
            if (z == 0) return ded_spine(kXAnchor);
            return z < 0 ? ded_v(3, static_cast<std::uint64_t>(-z)) : ded_v(4, static_cast<std::uint64_t>(z));
          },
          [](Vertex v) -> std::optional<std::int64_t> {
            if (v == ded_spine(kXAnchor)) return 0;
            const std::uint64_t tag = v.id % 5, pay = v.id / 5;
            if (pay == 0) return std::nullopt;
            if (tag == 3) return -static_cast<std::int64_t>(pay);
            if (tag == 4) return static_cast<std::int64_t>(pay);
            return std::nullopt;
          });
    const std::uint64_t j = idx - 2;
    return make_base(
        idx, true,
        [j](std::int64_t p) {
          if (p < 0) return ded_in(j, static_cast<std::uint64_t>(-p));
          if (p <= 2) return ded_spine(static_cast<std::int64_t>(3 * j) + p);
          return ded_out(j, static_cast<std::uint64_t>(p - 2));
        },
        [j](Vertex v) -> std::optional<std::int64_t> {
          const std::uint64_t tag = v.id % 5, pay = v.id / 5;
          if (tag == 0) {
            const std::int64_t z = codec::unzigzag(pay) - static_cast<std::int64_t>(3 * j);
            if (z >= 0 && z <= 2) return z;
            return std::nullopt;
          }
          if (tag != 1 && tag != 2) return std::nullopt;
          auto [jj, m] = codec::unpair(pay);
          if (jj != j || m == 0) return std::nullopt;
          return tag == 1 ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m) + 2;
        });
  });
  inst.oracle = std::make_shared<FunctionOracle>([](const BaseRay& a, const BaseRay& b) {
    auto one_sided = [](std::size_t sp, std::size_t other) {
      BaseMeet m;
      if (sp != 0) return m;
      if (other == 1) {
        m.points.emplace_back(kXAnchor, 0);
      } else {
        const auto j = static_cast<std::int64_t>(other - 2);
        for (std::int64_t p = 0; p < 3; ++p) m.points.emplace_back(3 * j + p, p);
      }
      return m;
    };
    if (a.index() == 0) return one_sided(0, b.index());
    if (b.index() == 0) return swap_meet(one_sided(0, a.index()));
    return BaseMeet{};
  });
  fill_family(inst, "ded_tree", GraphKind::Directed, Disjointness::Edge, RayShape::Double);
  auto reg = inst.registry;
  inst.family.doubles = [reg](std::size_t k) {
    std::vector<DoubleRayDescriptor> out;
    if (k <= 2) {
      for (std::size_t i = 0; i < k; ++i) out.push_back(double_from_base(reg->get(i)));
      return out;
    }
    for (std::size_t j = 0; j < k; ++j) out.push_back(double_from_base(reg->get(j + 2)));
    return out;
  };
  inst.family.tree_of = [](std::size_t) -> std::size_t { return 0; };
  inst.label = [](Vertex v) {
    const std::uint64_t tag = v.id % 5, pay = v.id / 5;
    switch (tag) {
      case 0: return "s" + std::to_string(codec::unzigzag(pay));
      case 1:
      case 2: {
        auto [j, m] = codec::unpair(pay);
        return std::string(tag == 1 ? "in" : "out") + std::to_string(j) + "_" + std::to_string(m);
      }
      default: return std::string(tag == 3 ? "xin" : "xout") + std::to_string(pay);
    }
  };
  return inst;
}

Instance make_ded_lines() {
  Instance inst;
  inst.name = "ded_lines";
  auto g = std::make_shared<LazyGraph>();
  g->kind = GraphKind::Directed;
  g->adjacent = [](Vertex u, Vertex v) {
    auto [i1, z1] = codec::unpair(u.id);
    auto [i2, z2] = codec::unpair(v.id);
    return i1 == i2 && codec::unzigzag(z1) + 1 == codec::unzigzag(z2);
  };
  inst.graph = g;
  inst.registry = std::make_shared<GeneratedRegistry>([](std::size_t idx) -> BaseRayPtr {
    return make_base(
        idx, true, [idx](std::int64_t z) { return Vertex{codec::pair(idx, codec::zigzag(z))}; },
        [idx](Vertex v) -> std::optional<std::int64_t> {
          auto [i, z] = codec::unpair(v.id);
          if (i != idx) return std::nullopt;
          return codec::unzigzag(z);
        });
  });
  inst.oracle = disjoint_oracle();
  fill_family(inst, "ded_lines", GraphKind::Directed, Disjointness::Edge, RayShape::Double);
  auto reg = inst.registry;
  inst.family.doubles = [reg](std::size_t k) {
    std::vector<DoubleRayDescriptor> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(double_from_base(reg->get(i)));
    return out;
  };
  inst.family.tree_of = [](std::size_t idx) { return idx; };
  inst.label = [](Vertex v) {
    auto [i, z] = codec::unpair(v.id);
    return "l" + std::to_string(i) + "_" + std::to_string(codec::unzigzag(z));
  };
  return inst;
}

// ------------------------------------------------------------------- hub

Instance make_hub() {
  Instance inst;
  inst.name = "hub";
  auto g = std::make_shared<LazyGraph>();
  auto spoke = [](Vertex v) { return codec::unpair(v.id - 1); };
  g->adjacent = [spoke](Vertex u, Vertex v) {
    if (u.id == 0 || v.id == 0) {
      const Vertex o = u.id == 0 ? v : u;
      return o.id != 0 && spoke(o).second == 0;
    }
    auto [i1, k1] = spoke(u);
    auto [i2, k2] = spoke(v);
    return i1 == i2 && (k1 + 1 == k2 || k2 + 1 == k1);
  };
  g->locally_finite = false;
  g->vertex_at = [](std::uint64_t i) -> std::optional<Vertex> { return Vertex{i}; };
  inst.graph = g;
  inst.registry = std::make_shared<GeneratedRegistry>([](std::size_t idx) -> BaseRayPtr {
    return make_base(
        idx, false, [idx](std::int64_t k) { return Vertex{codec::pair(idx, static_cast<std::uint64_t>(k)) + 1}; },
        [idx](Vertex v) -> std::optional<std::int64_t> {
          if (v.id == 0) return std::nullopt;
          auto [i, k] = codec::unpair(v.id - 1);
          if (i != idx) return std::nullopt;
          return static_cast<std::int64_t>(k);
        });
  });
  inst.oracle = disjoint_oracle();
  fill_family(inst, "hub", GraphKind::Undirected, Disjointness::Edge, RayShape::Single);
  auto reg = inst.registry;
  // family(k): ray j walks down spoke a to the hub and leaves along spoke a+1, a = k(k-1) + 2j.
  inst.family.single = [reg](std::size_t k) {
    std::vector<RayDescriptor> out;
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t a = k * (k - 1) + 2 * j;
      RayDescriptor r;
      for (std::uint64_t m = 3; m-- > 0;) r.prefix.push_back({codec::pair(a, m) + 1});
      r.prefix.push_back({0});
      r.tail = {reg->get(a + 1), 0, 1};
      out.push_back(r);
    }
    return out;
  };
  inst.label = [](Vertex v) {
    if (v.id == 0) return std::string("hub");
    auto [i, k] = codec::unpair(v.id - 1);
    return "h" + std::to_string(i) + "_" + std::to_string(k);
  };
  return inst;
}

// ------------------------------------------------------ branch forests

// Explicit vertices have even ids 2m; line l vertex k is 2*pair(l,k)+1.
Vertex line_vertex(std::uint64_t l, std::uint64_t k) { return {2 * codec::pair(l, k) + 1}; }

struct ForestShape {
  std::vector<std::pair<Vertex, Vertex>> explicit_edges;  // stub-center
  std::vector<std::pair<Vertex, std::uint64_t>> hooks;    // center -> line
};

Instance make_branch_forest(const ForestShape& shape) {
  Instance inst;
  inst.name = "branch_forest";
  auto g = std::make_shared<LazyGraph>();
  g->adjacent = [shape](Vertex u, Vertex v) {
    for (auto [a, b] : shape.explicit_edges)
      if ((a == u && b == v) || (a == v && b == u)) return true;
    for (auto [c, l] : shape.hooks)
      if ((c == u && v == line_vertex(l, 0)) || (c == v && u == line_vertex(l, 0))) return true;
    if (u.id % 2 == 1 && v.id % 2 == 1) {
      auto [l1, k1] = codec::unpair((u.id - 1) / 2);
      auto [l2, k2] = codec::unpair((v.id - 1) / 2);
      return l1 == l2 && (k1 + 1 == k2 || k2 + 1 == k1);
    }
    return false;
  };
  inst.graph = g;
  inst.registry = std::make_shared<GeneratedRegistry>([](std::size_t idx) -> BaseRayPtr {
    return make_base(
        idx, false, [idx](std::int64_t k) { return line_vertex(idx, static_cast<std::uint64_t>(k)); },
        [idx](Vertex v) -> std::optional<std::int64_t> {
          if (v.id % 2 == 0) return std::nullopt;
          auto [l, k] = codec::unpair((v.id - 1) / 2);
          if (l != idx) return std::nullopt;
          return static_cast<std::int64_t>(k);
        });
  });
  inst.oracle = disjoint_oracle();
  fill_family(inst, "branch_forest", GraphKind::Undirected, Disjointness::Vertex, RayShape::Single);
  inst.label = [](Vertex v) {
    if (v.id % 2 == 0) return "v" + std::to_string(v.id / 2);
    auto [l, k] = codec::unpair((v.id - 1) / 2);
    return "L" + std::to_string(l) + "_" + std::to_string(k);
  };
  return inst;
}

Instance make_mirt_gap() {
  const Vertex stub{0}, c{2};
  ForestShape shape;
  shape.explicit_edges = {{stub, c}};
  shape.hooks = {{c, 0}, {c, 1}};
  Instance inst = make_branch_forest(shape);
  inst.name = "mirt_gap";
  const auto L0 = inst.registry->get(0), L1 = inst.registry->get(1);
  inst.universe = {
      RayDescriptor{{stub, c}, {L0, 0, 1}},
      RayDescriptor{{}, {L0, 0, 1}},
      RayDescriptor{{c}, {L1, 0, 1}},
  };
  inst.starts = {stub, line_vertex(0, 0), c};
  return inst;
}

Vertex first_vertex(const RayDescriptor& r) { return ray_vertex_at(r, 0); }

}  // namespace

Vertex comb_spine(std::uint64_t n) { return {2 * n}; }
Vertex comb_tooth(std::uint64_t j, std::uint64_t k) { return {2 * codec::pair(j, k) + 1}; }
Vertex grid_vertex(std::uint64_t r, std::uint64_t c) { return {codec::pair(r, c)}; }
Vertex plane_vertex(std::int64_t r, std::int64_t c) { return {codec::pair(codec::zigzag(r), codec::zigzag(c))}; }

BaseRayPtr grid_row(const Instance& grid, std::uint64_t r) { return grid.registry->get(2 * r); }
BaseRayPtr grid_column(const Instance& grid, std::uint64_t c) { return grid.registry->get(2 * c + 1); }

std::vector<std::string> sample_names() {
  return {"comb", "grid", "ray_forest", "double_comb", "ded_tree", "ded_lines", "hub", "mirt_gap"};
}

Instance sample_graph(const std::string& name, const std::map<std::string, std::int64_t>& params) {
  Instance inst;
  if (name == "comb") inst = make_comb();
  else if (name == "grid") inst = make_grid(param(params, "directed", 0) != 0);
  else if (name == "ray_forest") {
    const auto k = param(params, "k", 3);
    require(k >= 1, ErrorCode::BadConfig, "ray_forest needs k >= 1");
    inst = make_ray_forest(static_cast<std::size_t>(k));
  } else if (name == "double_comb") inst = make_double_comb();
  else if (name == "ded_tree") inst = make_ded_tree();
  else if (name == "ded_lines") inst = make_ded_lines();
  else if (name == "hub") inst = make_hub();
  else if (name == "mirt_gap") inst = make_mirt_gap();
  else fail(ErrorCode::UnknownName, "unknown sample graph '" + name + "'");
  for (const auto& [k, v] : params) inst.params[k] = v;
  return inst;
}

// ------------------------------------------------------ extension cases

ExtensionCase random_grid_case(std::mt19937_64& rng, std::size_t n) {
  require(n >= 1, ErrorCode::BadConfig, "n must be >= 1");
  ExtensionCase ec;
  ec.instance = make_grid(false);
  const Instance& G = ec.instance;
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  // R_i is a staircase inside rows [3i, 3i+2], then runs along its last row.
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t r = 3 * i, c = pick(0, 3);
    RayDescriptor ray;
    ray.prefix.push_back(grid_vertex(r, c));
    const auto moves = pick(0, 6);
    for (std::uint64_t m = 0; m < moves; ++m) {
      if (r < 3 * i + 2 && pick(0, 2) == 0) ++r;
      else ++c;
      ray.prefix.push_back(grid_vertex(r, c));
    }
    ray.tail = {grid_row(G, r), static_cast<std::int64_t>(c + 1), 1};
    ec.R.push_back(ray);
  }
  // S: some columns from row 0, the rest rows above every band starting beyond every column.
  const std::size_t total = n * n + 1;
  const std::size_t cols = static_cast<std::size_t>(pick(std::min<std::size_t>(n + 1, total), total));
  std::vector<std::uint64_t> pool(3 * total + 6);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::uint64_t> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(cols));
  std::sort(chosen.begin(), chosen.end());
  std::uint64_t cmax = 0;
  for (auto c : chosen) {
    ec.S.push_back(ray_from_base(grid_column(G, c)));
    cmax = std::max(cmax, c);
  }
  for (std::size_t k = 0; k < total - cols; ++k)
    ec.S.push_back(
        ray_from_base(grid_row(G, 3 * n + k), static_cast<std::int64_t>(cmax + 1 + pick(0, 4))));
  std::shuffle(ec.S.begin(), ec.S.end(), rng);
  return ec;
}

ExtensionCase random_comb_case(std::mt19937_64& rng, std::size_t n) {
  require(n >= 1, ErrorCode::BadConfig, "n must be >= 1");
  ExtensionCase ec;
  ec.instance = make_comb();
  const Instance& C = ec.instance;
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  const std::uint64_t a = (n - 1) + pick(0, 4);
  ec.R.push_back(ray_from_base(C.registry->get(0), static_cast<std::int64_t>(a)));
  std::vector<std::uint64_t> below(a);
  std::iota(below.begin(), below.end(), 0);
  std::shuffle(below.begin(), below.end(), rng);
  std::set<std::uint64_t> used;
  for (std::size_t i = 1; i < n; ++i) {
    const std::uint64_t b = below[i - 1];
    used.insert(b);
    ec.R.push_back(ray_from_base(C.registry->get(b + 1), static_cast<std::int64_t>(pick(0, 2))));
  }
  std::shuffle(ec.R.begin(), ec.R.end(), rng);
  const std::size_t total = n * n + 1;
  std::vector<std::uint64_t> cand;
  for (std::uint64_t j = 0; j < a + 3 * total + 6; ++j)
    if (!used.count(j)) cand.push_back(j);
  std::shuffle(cand.begin(), cand.end(), rng);
  for (std::size_t k = 0; k < total; ++k) {
    const std::int64_t off = pick(0, 3) == 0 ? 1 : 0;
    ec.S.push_back(ray_from_base(C.registry->get(cand[k] + 1), off));
  }
  return ec;
}

Instance random_branch_forest(std::mt19937_64& rng, bool unique_branches, std::size_t max_rays) {
  require(max_rays >= 1, ErrorCode::BadConfig, "max_rays must be >= 1");
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  ForestShape shape;
  struct Tree {
    Vertex stub, center;
    std::vector<std::uint64_t> lines;
  };
  std::vector<Tree> trees;
  const auto T = pick(1, 3);
  std::uint64_t next_line = 0;
  for (std::uint64_t t = 0; t < T; ++t) {
    Tree tr{{2 * (10 * t)}, {2 * (10 * t + 1)}, {}};
    shape.explicit_edges.emplace_back(tr.stub, tr.center);
    const auto b = unique_branches ? 1 : pick(1, 3);
    for (std::uint64_t j = 0; j < b; ++j) {
      tr.lines.push_back(next_line);
      shape.hooks.emplace_back(tr.center, next_line);
      ++next_line;
    }
    trees.push_back(tr);
  }
  Instance inst = make_branch_forest(shape);
  inst.params["trees"] = static_cast<std::int64_t>(T);
  inst.params["unique"] = unique_branches ? 1 : 0;
  std::vector<RayDescriptor> all;
  for (const auto& tr : trees)
    for (auto l : tr.lines) {
      const TailRef L{inst.registry->get(l), 0, 1};
      all.push_back({{}, L});
      all.push_back({{tr.center}, L});
      all.push_back({{tr.stub, tr.center}, L});
      all.push_back({{}, L.advanced(static_cast<std::int64_t>(pick(1, 3)))});
    }
  std::shuffle(all.begin(), all.end(), rng);
  const auto keep = std::min<std::size_t>(all.size(), pick(1, max_rays));
  inst.universe.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep));
  std::set<Vertex> seen;
  for (const auto& r : inst.universe)
    if (seen.insert(first_vertex(r)).second) inst.starts.push_back(first_vertex(r));
  std::shuffle(inst.starts.begin(), inst.starts.end(), rng);
  return inst;
}

}  // namespace halin

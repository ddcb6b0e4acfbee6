#include "doctest.h"
#include "halin/extension.hpp"
#include "halin/instances.hpp"
#include "halin/menger.hpp"

using namespace halin;

namespace {

// Base #0: k -> 10 + k. Base #1: k -> 1000 + k.
BaseRayPtr offset_base(std::size_t index, std::uint64_t start) {
  return std::make_shared<FunctionBaseRay>(
      index, false, [start](std::int64_t k) { return Vertex{start + static_cast<std::uint64_t>(k)}; },
      [start](Vertex v) -> std::optional<std::int64_t> {
        if (v.id < start) return std::nullopt;
        return static_cast<std::int64_t>(v.id - start);
      });
}

BaseRayPtr line_base(std::size_t index) {
  return std::make_shared<FunctionBaseRay>(
      index, true, [](std::int64_t k) { return Vertex{codec::zigzag(k) + 100}; },
      [](Vertex v) -> std::optional<std::int64_t> {
        if (v.id < 100) return std::nullopt;
        return codec::unzigzag(v.id - 100);
      });
}

FiniteGraph from_edges(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> es) {
  FiniteGraph g(GraphKind::Undirected);
  for (auto [u, v] : es) {
    g.add_vertex(Vertex{u});
    g.add_vertex(Vertex{v});
    g.add_edge(Vertex{u}, Vertex{v});
  }
  return g;
}

std::set<Vertex> vs(std::initializer_list<std::uint64_t> ids) {
  std::set<Vertex> out;
  for (auto i : ids) out.insert(Vertex{i});
  return out;
}

}  // namespace

TEST_CASE("ray vertex and membership") {
  RayDescriptor r{{Vertex{7}, Vertex{3}}, {offset_base(0, 10), 0, 1}};
  CHECK(ray_vertex_at(r, 1) == Vertex{3});
  CHECK(ray_vertex_at(r, 2) == Vertex{10});
  CHECK(ray_vertex_at(r, 5) == Vertex{13});
  CHECK(ray_membership(r, Vertex{3}) == 1);
  CHECK(ray_membership(r, Vertex{13}) == 5);
  CHECK_FALSE(ray_membership(r, Vertex{5}).has_value());
}

TEST_CASE("tails") {
  RayDescriptor r{{Vertex{7}, Vertex{3}}, {offset_base(0, 10), 0, 1}};
  RayDescriptor t0 = tail_of(r, 0);
  CHECK(t0.prefix == r.prefix);
  RayDescriptor t2 = tail_of(r, 2);
  CHECK(t2.prefix.empty());
  CHECK(t2.tail.offset == 0);
  RayDescriptor t5 = tail_of(r, 5);
  CHECK(t5.prefix.empty());
  CHECK(t5.tail.offset == 3);
  for (std::int64_t n = 0; n < 20; ++n) CHECK(ray_vertex_at(t5, n) == ray_vertex_at(r, n + 5));
}

TEST_CASE("meets") {
  TableOracle oracle;
  oracle.declare(0, 1, {});
  RayDescriptor r{{Vertex{7}, Vertex{3}}, {offset_base(0, 10), 0, 1}};
  MeetResult self = rays_meet(r, r, oracle);
  CHECK(self.kind == MeetResult::Kind::SharedTail);
  CHECK(self.shared_tail() == std::pair<std::int64_t, std::int64_t>{0, 0});
  RayDescriptor q{{Vertex{5}}, {offset_base(1, 1000), 0, 1}};
  CHECK(rays_meet(r, q, oracle).kind == MeetResult::Kind::Disjoint);

  Instance comb = sample_graph("comb", {});
  RayDescriptor spine = ray_from_base(comb.registry->get(0));
  for (std::int64_t j = 0; j < 5; ++j) {
    RayDescriptor tooth = ray_from_base(comb.registry->get(static_cast<std::size_t>(j + 1)));
    MeetResult m = rays_meet(spine, tooth, *comb.oracle);
    CHECK(m.kind == MeetResult::Kind::FiniteMeets);
    REQUIRE(m.meets.size() == 1);
    CHECK(m.meets[0] == std::pair<std::int64_t, std::int64_t>{j, 0});
  }
}

TEST_CASE("concat path ray") {
  Instance comb = sample_graph("comb", {});
  RayDescriptor r = ray_from_base(comb.registry->get(0), 1);
  AdjacencyFn adj = comb.graph->adjacent;
  RayDescriptor same = concat_path_ray({}, r, adj);
  CHECK(same.prefix.empty());
  CHECK(same.tail.offset == 1);
  RayDescriptor grown = concat_path_ray({comb_spine(0)}, r, adj);
  CHECK(grown.prefix.size() == 1);
  CHECK(ray_vertex_at(grown, 1) == comb_spine(1));
  CHECK_THROWS_AS(concat_path_ray({comb_spine(3)}, r, adj), Error);
}

TEST_CASE("split double") {
  DoubleRayDescriptor d = double_from_base(line_base(0));
  const Vertex a = double_vertex_at(d, 4), b = double_vertex_at(d, 5);
  auto [fwd, back] = split_double(d, {a, b});
  CHECK(ray_vertex_at(fwd, 0) == b);
  CHECK(ray_vertex_at(back, 0) == a);
  CHECK(ray_vertex_at(back, 1) == double_vertex_at(d, 3));
  for (std::int64_t z = -20; z < 20; ++z) {
    const Vertex v = double_vertex_at(d, z);
    const bool in_back = ray_membership(back, v).has_value();
    const bool in_fwd = ray_membership(fwd, v).has_value();
    CHECK(in_back != in_fwd);
  }
}

TEST_CASE("menger examples") {
  FiniteGraph edge = from_edges({{0, 1}});
  MengerSolution s1 = menger_solve(edge, vs({0}), vs({1}));
  REQUIRE(s1.paths.size() == 1);
  CHECK(s1.paths[0] == Path{Vertex{0}, Vertex{1}});
  CHECK(s1.separator == vs({0}));
  CHECK(brute_force_menger(edge, vs({0}), vs({1})).max_paths == 1);
  CHECK(brute_force_menger(edge, vs({0}), vs({1})).min_separator == 1);

  FiniteGraph two = from_edges({{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {1, 5}});
  MengerSolution s2 = menger_solve(two, vs({0, 5}), vs({1, 4}));
  CHECK(s2.paths.size() == 2);
  CHECK(s2.separator.size() == 2);
  CHECK(separates(two, vs({0, 5}), vs({1, 4}), s2.separator));

  // a=0, c=2, b=1, d=3 with A = {a, x}, B = {b, y} and pendant x-a, y-b.
  FiniteGraph cycle = from_edges({{0, 2}, {2, 1}, {1, 3}, {3, 0}, {10, 2}, {11, 3}});
  MengerSolution s3 = menger_solve(cycle, vs({10, 11}), vs({1}));
  CHECK(s3.paths.size() == 1);
  MengerSolution s4 = menger_solve(cycle, vs({0}), vs({1}));
  CHECK(s4.paths.size() == 1);
  CHECK(s4.separator == vs({0}));
  auto opt = brute_force_menger(cycle, vs({0}), vs({1}));
  CHECK(opt.max_paths == 1);
  CHECK(opt.min_separator == 1);

  FiniteGraph split = from_edges({{0, 1}, {2, 3}});
  MengerSolution s5 = menger_solve(split, vs({0}), vs({3}));
  CHECK(s5.paths.empty());
  CHECK(s5.separator.empty());
  CHECK(brute_force_menger(split, vs({0}), vs({3})).max_paths == 0);
  CHECK_THROWS_AS(menger_solve(split, vs({0}), vs({0})), Error);
}

TEST_CASE("extend single small cases") {
  Instance rf = sample_graph("ray_forest", {{"k", 3}});
  auto fam = rf.family.single(3);
  SingleExtension e0 = extend_single({}, {fam[0]}, *rf.oracle);
  REQUIRE(e0.rays.size() == 1);
  CHECK(ray_vertex_at(e0.rays[0], 0) == ray_vertex_at(fam[0], 0));

  SingleExtension e1 = extend_single({fam[0]}, {fam[1], fam[2]}, *rf.oracle);
  REQUIRE(e1.rays.size() == 2);
  CHECK(ray_vertex_at(e1.rays[0], 0) == ray_vertex_at(fam[0], 0));
  CHECK(ray_vertex_at(e1.rays[0], 7) == ray_vertex_at(fam[0], 7));
  CHECK(rays_meet(e1.rays[0], e1.rays[1], *rf.oracle).disjoint());

  CHECK(compute_z_points({}, {fam[0]}, {fam[1]}, *rf.oracle).empty());
}

TEST_CASE("budgets") {
  CHECK(ded_budget(0) == 2);
  CHECK(ded_budget(1) == 7);
  CHECK(ded_budget(2) == 41);
  CHECK(ded_budget(3) == 403);
  CHECK(uvd_budget(1) == 12);
  CHECK(uvd_budget(2) == 45);
}

TEST_CASE("forest intersection") {
  Instance lines = sample_graph("ded_lines", {});
  auto ds = lines.family.doubles(2);
  auto self = forest_intersection(ds[0], ds[0], *lines.oracle);
  REQUIRE(self.has_value());
  CHECK(self->from_neg_inf);
  CHECK(self->to_pos_inf);
  CHECK_FALSE(forest_intersection(ds[0], ds[1], *lines.oracle).has_value());
}

TEST_CASE("error classes are distinct") {
  std::set<std::string> names;
  for (int c = static_cast<int>(ErrorCode::BadConfig); c <= static_cast<int>(ErrorCode::IoFailure); ++c) {
    const std::string name(error_name(static_cast<ErrorCode>(c)));
    CHECK_FALSE(name.empty());
    CHECK(names.insert(name).second);
  }
  CHECK(names.size() == 23);
}

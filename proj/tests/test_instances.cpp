#include "doctest.h"
#include "halin/engine.hpp"
#include "halin/instances.hpp"
#include "halin/io.hpp"

using namespace halin;

TEST_CASE("enum trees") {
  StagewiseEnumeration none{{{5, 2}}};
  EnumTree t0 = enum_tree(2, none);
  CHECK_FALSE(t0.branch.has_value());
  CHECK(t0.strands.empty());

  StagewiseEnumeration w1{{{1, 3}}};
  EnumTree t1 = enum_tree(2, w1);
  REQUIRE(t1.branch.has_value());
  CHECK(*t1.branch == 3);
  CHECK(t1.contains(3, 0));
  CHECK(t1.contains(3, 2));

  StagewiseEnumeration w2{{{1, 3}, {0, 5}}};
  EnumTree t2 = enum_tree(2, w2);
  REQUIRE(t2.branch.has_value());
  CHECK(*t2.branch == 5);
  CHECK(t2.contains(3, 1));
  CHECK(t2.contains(3, 4));
  CHECK_FALSE(t2.contains(3, 5));
}

TEST_CASE("enum forest family") {
  StagewiseEnumeration W{{{0, 2}, {2, 4}}};
  Instance inst = enum_forest(W, 3);
  auto fam = inst.family.single(2);
  REQUIRE(fam.size() == 2);
  CHECK(enum_coords(ray_vertex_at(fam[0], 0)).tree == 1);
  CHECK(enum_coords(ray_vertex_at(fam[1], 0)).tree == 2);
  CHECK(verify_disjoint(fam, Disjointness::Vertex, 256, *inst.oracle).pass);
}

TEST_CASE("enumeration decoding") {
  StagewiseEnumeration W{{{1, 3}}};
  Instance inst = enum_forest(W, 4);
  auto fam = inst.family.single(1);
  CHECK(enum_coords(ray_vertex_at(fam[0], 0)).tree == 2);
  CHECK(decode_enumeration(fam, 2, W) == std::set<std::uint64_t>{1});
  CHECK(decode_enumeration(fam, 0, W).empty());
}

TEST_CASE("enumeration validation") {
  StagewiseEnumeration bad{{{1, 3}, {1, 5}}};
  CHECK_THROWS_AS(bad.validate(), Error);
  StagewiseEnumeration W{{{1, 3}, {4, 1}, {5, 6}}};
  CHECK(W.at_stage(5, 2) == std::set<std::uint64_t>{4});
  CHECK(W.limit(5) == std::set<std::uint64_t>{1, 4});
}

TEST_CASE("sample families") {
  Instance rf = sample_graph("ray_forest", {{"k", 3}});
  auto three = rf.family.single(3);
  CHECK(three.size() == 3);
  CHECK(verify_disjoint(three, Disjointness::Vertex, 256, *rf.oracle).pass);
  CHECK_THROWS_AS(rf.family.single(4), Error);

  Instance grid = sample_graph("grid", {});
  auto rows = grid.family.single(4);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::int64_t c = 0; c < 5; ++c)
      CHECK(ray_vertex_at(rows[r], c) == grid_vertex(r, static_cast<std::uint64_t>(c)));
  CHECK(verify_disjoint(rows, Disjointness::Vertex, 256, *grid.oracle, GraphKind::Undirected, grid.graph.get()).pass);

  for (const auto& name : sample_names()) {
    Instance inst = sample_graph(name, {});
    const GraphKind kind = inst.graph->kind;
    if (!inst.family.single && !inst.family.doubles) continue;
    if (inst.family.Z == RayShape::Single) {
      auto fam = inst.family.single(2);
      CHECK_MESSAGE(verify_disjoint(fam, inst.family.Y, 256, *inst.oracle, kind, inst.graph.get()).pass, name);
    } else {
      auto fam = inst.family.doubles(2);
      CHECK_MESSAGE(verify_disjoint(fam, inst.family.Y, 256, *inst.oracle, kind, inst.graph.get()).pass, name);
    }
  }
  CHECK_THROWS_AS(sample_graph("nope", {}), Error);
}

TEST_CASE("verifier examples") {
  Instance comb = sample_graph("comb", {});
  CHECK(verify_disjoint(std::vector<RayDescriptor>{}, Disjointness::Vertex, 64, *comb.oracle).pass);
  RayDescriptor spine = ray_from_base(comb.registry->get(0));
  DisjointReport dup = verify_disjoint({spine, spine}, Disjointness::Vertex, 64, *comb.oracle);
  CHECK_FALSE(dup.pass);
  REQUIRE(dup.failures.size() == 1);
  CHECK(dup.failures[0].evidence.find("SharedTail") != std::string::npos);
  RayDescriptor tooth = ray_from_base(comb.registry->get(3));
  CHECK(verify_disjoint({spine, tooth}, Disjointness::Edge, 64, *comb.oracle).pass);
  CHECK_FALSE(verify_disjoint({spine, tooth}, Disjointness::Vertex, 64, *comb.oracle).pass);
}

TEST_CASE("engine base cases") {
  Instance comb = sample_graph("comb", {});
  StageState one = irt_run_single(comb.family, 1);
  REQUIRE(one.rays.size() == 1);
  CHECK(one.prefixes[0].size() == 1);
  CHECK(ray_vertex_at(one.rays[0], 0) == comb_spine(0));

  Instance dc = sample_graph("double_comb", {});
  StageState d1 = irt_run_double_uvd(dc.family, 1);
  REQUIRE(d1.doubles.size() == 1);
  CHECK(d1.doubles[0].path.length == 2);

  Instance lines = sample_graph("ded_lines", {});
  StageState multi = irt_run_ded_forest(lines.family, 3);
  CHECK(multi.multi_tree);
  CHECK(multi.doubles.size() == 3);
  REQUIRE(multi.calls.size() == 1);
  CHECK(multi.calls[0].purpose == "probe");

  RayFamilyOracle broken = dc.family;
  broken.doubles = [&](std::size_t k) {
    auto fam = dc.family.doubles(k);
    if (k > 1) fam[1] = fam[0];
    return fam;
  };
  try {
    irt_run_double_uvd(broken, 3);
    FAIL("expected OracleBroke");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OracleBroke);
  }
}

TEST_CASE("engine determinism") {
  Instance comb = sample_graph("comb", {});
  InstanceSpec spec{"comb", {}, std::nullopt};
  const std::string a = transcript_to_json(irt_run_single(comb.family, 5), spec, 1024).dump();
  const std::string b = transcript_to_json(irt_run_single(sample_graph("comb", {}).family, 5), spec, 1024).dump();
  CHECK(a == b);
}

TEST_CASE("mirt examples") {
  MirtOptions opt;
  auto empty_decider = [](Vertex, const std::vector<RayDescriptor>&) -> std::optional<RayDescriptor> {
    return std::nullopt;
  };
  CHECK(mirt_greedy({Vertex{0}, Vertex{1}}, empty_decider, opt).family.empty());

  Instance rf = sample_graph("ray_forest", {{"k", 3}});
  auto two = rf.family.single(2);
  CHECK(max_cardinality_brute(two, *rf.oracle, opt).size() == 2);

  Instance comb = sample_graph("comb", {});
  RayDescriptor spine = ray_from_base(comb.registry->get(0));
  std::vector<RayDescriptor> crossing{spine, tail_of(spine, 1), ray_from_base(comb.registry->get(4))};
  CHECK(max_cardinality_brute(crossing, *comb.oracle, opt).size() == 1);

  // Spine and its tail meet each other and the teeth; the teeth are pairwise disjoint.
  std::vector<RayDescriptor> five{spine, tail_of(spine, 1)};
  for (std::size_t j = 2; j <= 4; ++j) five.push_back(ray_from_base(comb.registry->get(j)));
  CHECK(max_cardinality_brute(five, *comb.oracle, opt).size() == 3);

  std::mt19937_64 rng(7);
  Instance forest = random_branch_forest(rng, true, 15);
  RayDecider decide = universe_decider(forest.universe, forest.oracle, opt);
  MirtResult greedy = mirt_greedy(forest.starts, decide, opt);
  CHECK(addable(forest.universe, greedy.family, *forest.oracle, opt).empty());
  CHECK(greedy.family.size() == max_cardinality_brute(forest.universe, *forest.oracle, opt).size());

  Instance gap = sample_graph("mirt_gap", {});
  RayDecider dg = universe_decider(gap.universe, gap.oracle, opt);
  MirtResult g2 = mirt_greedy(gap.starts, dg, opt);
  CHECK(addable(gap.universe, g2.family, *gap.oracle, opt).empty());
  CHECK(g2.family.size() == 1);
  CHECK(max_cardinality_brute(gap.universe, *gap.oracle, opt).size() == 2);
}

TEST_CASE("json round trips") {
  FiniteGraph g(GraphKind::Directed);
  for (std::uint64_t v = 0; v < 3; ++v) g.add_vertex(Vertex{v});
  g.add_edge(Vertex{0}, Vertex{1});
  g.add_edge(Vertex{2}, Vertex{1});
  g.labels.add(Vertex{2}, "two");
  const json j = graph_to_json(g);
  FiniteGraph back = graph_from_json(j);
  CHECK(back.kind() == GraphKind::Directed);
  CHECK(back.edge_count() == 2);
  CHECK(back.has_edge(Vertex{2}, Vertex{1}));
  CHECK(back.labels.label(Vertex{2}) == "two");
  CHECK(graph_to_json(back) == j);
  CHECK(export_dot(back) == export_dot(g));
  CHECK_THROWS_AS(graph_from_json(json{{"kind", "X"}, {"vertices", json::array()}, {"edges", json::array()}}), Error);
  CHECK_THROWS_AS(graph_from_json(json{{"kind", "U"}, {"vertices", {0}}, {"edges", {{0, 4}}}}), Error);

  InstanceSpec spec{"enum_forest", {{"count", 12}}, StagewiseEnumeration{{{1, 3}, {4, 1}, {5, 6}}}};
  InstanceSpec again = spec_from_json(spec_to_json(spec));
  CHECK(again.name == spec.name);
  CHECK(again.params == spec.params);
  CHECK(again.enumeration->pairs == spec.enumeration->pairs);

  Instance inst = build_instance(spec);
  StageState st = irt_run_single(inst.family, 6);
  const json t = transcript_to_json(st, spec, 512);
  LoadedFamily f = load_family(json::parse(t.dump()));
  REQUIRE(f.rays.size() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::int64_t n = 0; n < 30; ++n) CHECK(ray_vertex_at(f.rays[i], n) == ray_vertex_at(st.rays[i], n));
  CHECK(verify_disjoint(f.rays, Disjointness::Vertex, 512, *f.instance.oracle).pass ==
        verify_disjoint(st.rays, Disjointness::Vertex, 512, *inst.oracle).pass);

  AdversaryScript a = wirt_demo_adversaries()[1];
  AdversaryScript b = script_from_json(script_to_json(a));
  CHECK(script_to_json(b) == script_to_json(a));
}

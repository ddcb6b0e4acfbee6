#include "doctest.h"
#include "halin/engine.hpp"
#include "halin/instances.hpp"

using namespace halin;

TEST_CASE("irt single on enum forest") {
  StagewiseEnumeration W{{{1, 3}, {4, 1}, {5, 6}}};
  Instance inst = enum_forest(W, 12);
  StageState st = irt_run_single(inst.family, 10);
  CHECK(st.rays.size() == 10);
  auto rep = verify_disjoint(st.rays, Disjointness::Vertex, 1024, *inst.oracle);
  CHECK(rep.pass);
  CHECK(decode_enumeration(st.rays, 5, W) == std::set<std::uint64_t>{1, 4});
}

TEST_CASE("irt single on comb") {
  Instance inst = sample_graph("comb", {});
  StageState st = irt_run_single(inst.family, 5);
  CHECK(st.rays.size() == 5);
  CHECK(verify_disjoint(st.rays, Disjointness::Vertex, 1024, *inst.oracle, GraphKind::Undirected,
                        inst.graph.get())
            .pass);
}

TEST_CASE("uvd on double comb") {
  Instance inst = sample_graph("double_comb", {});
  StageState st = irt_run_double_uvd(inst.family, 4);
  REQUIRE(st.doubles.size() == 4);
  std::vector<DoubleRayDescriptor> ds;
  for (auto& d : st.doubles) ds.push_back(d.ray);
  CHECK(verify_disjoint(ds, Disjointness::Vertex, 1024, *inst.oracle, GraphKind::Undirected, inst.graph.get())
            .pass);
  CHECK(st.calls[1].k == 12);
  CHECK(st.calls[2].k == 45);
}

TEST_CASE("ded on engineered tree") {
  Instance inst = sample_graph("ded_tree", {});
  StageState st = irt_run_ded_forest(inst.family, 3);
  REQUIRE(st.doubles.size() == 3);
  CHECK(st.stages[1].ded->action == "swap");
  CHECK(st.stages[2].ded->a == 3);
}

TEST_CASE("extension random cases") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int i = 0; i < 10; ++i) {
      auto ec = (i % 2) ? random_grid_case(rng, n) : random_comb_case(rng, n);
      ExtensionOptions eo;
      eo.adjacency = ec.instance.graph->adjacent;
      auto ext = extend_single(ec.R, ec.S, *ec.instance.oracle, eo);
      REQUIRE(ext.rays.size() == n + 1);
      CHECK(verify_disjoint(ext.rays, Disjointness::Vertex, 1024, *ec.instance.oracle, GraphKind::Undirected,
                            ec.instance.graph.get())
                .pass);
    }
}

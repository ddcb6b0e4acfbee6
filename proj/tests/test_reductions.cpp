#include "doctest.h"
#include "halin/instances.hpp"
#include "halin/reductions.hpp"

using namespace halin;

namespace {

FiniteGraph star(std::size_t leaves) {
  FiniteGraph g;
  g.add_vertex({0});
  for (std::uint64_t i = 1; i <= leaves; ++i) {
    g.add_vertex({i});
    g.add_edge({0}, {i});
  }
  return g;
}

}  // namespace

TEST_CASE("gadget sizes") {
  FiniteGraph e;
  e.add_vertex({0});
  e.add_vertex({1});
  e.add_edge({0}, {1});
  auto d = transform_graph(GadgetKind::UtoD, e);
  CHECK(d.vertex_count() == 4);
  CHECK(d.edge_count() == 5);
  FiniteGraph de(GraphKind::Directed);
  de.add_vertex({0});
  de.add_vertex({1});
  de.add_edge({0}, {1});
  auto s = transform_graph(GadgetKind::VtoE_split, de);
  CHECK(s.vertex_count() == 4);
  CHECK(s.edge_count() == 3);
  auto l = transform_graph(GadgetKind::line_graph, star(4));
  CHECK(l.vertex_count() == 4);
  CHECK(l.edge_count() == 6);
  CHECK_THROWS_AS(transform_graph(GadgetKind::UtoD, de), Error);
}

TEST_CASE("round trips on the comb") {
  Instance comb = sample_graph("comb", {});
  RayDescriptor r = concat_path_ray({comb_spine(0), comb_spine(1)}, ray_from_base(comb.registry->get(2), 1));
  auto img = utod_forward(r);
  auto back = utod_backward(img);
  CHECK(enumerate(back, 200) == enumerate(r, 200));
  auto img2 = utod_forward(tail_of(img, 0));
  CHECK(enumerate(utod_backward(tail_of(img, 1)), 50) == enumerate(tail_of(r, 1), 50));
  auto line = line_ray_forward(r, GraphKind::Undirected);
  auto lb = line_ray_backward(*comb.graph, line, 200);
  for (std::size_t i = 1; i < lb.k.size(); ++i) CHECK(lb.k[i] > lb.k[i - 1]);
  auto orig = enumerate(r, 300);
  auto got = enumerate(lb.ray, 100);
  auto it = std::search(orig.begin(), orig.end(), got.begin(), got.end());
  CHECK(it != orig.end());
}

TEST_CASE("star line path backward") {
  LazyGraph g = LazyGraph::from_finite(star(4));
  Path p;
  for (std::uint64_t i = 1; i <= 4; ++i) p.push_back(line_vertex(GraphKind::Undirected, {0}, {i}));
  auto out = line_path_backward(g, p);
  CHECK(out.ray.prefix == Path{{0}, {4}});
  CHECK(out.k == std::vector<std::int64_t>{3});
  Instance hub = sample_graph("hub", {});
  RayDescriptor spokes = hub.family.single(1)[0];
  try {
    line_ray_backward(*hub.graph, line_ray_forward(spokes, GraphKind::Undirected), 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotLocallyFinite);
  }
}

TEST_CASE("hub subgraph") {
  Instance hub = sample_graph("hub", {});
  auto lf = locally_finite_subgraph(*hub.graph, hub.family.single, 4, *hub.oracle);
  CHECK(lf.neighbors({0}).size() == 2);
  CHECK(lf.family.size() == 4);
}

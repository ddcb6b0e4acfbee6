#include "doctest.h"
#include "halin/wirt.hpp"

using namespace halin;

TEST_CASE("wirt pure growth") {
  WirtRun run = wirt_priority_build({}, 3);
  CHECK(run.merges.empty());
  CHECK(run.paths.size() == 3);
  CHECK(run.dc_holds());
  CHECK(run.obs_violations().empty());
}

TEST_CASE("wirt single merge") {
  AdversaryScript q;
  q.e = 0;
  q.traces = {{0, 1, 0, 5}, {1, 2, 0, 5}};
  WirtRun run = wirt_priority_build({q}, 12);
  REQUIRE(run.merges.size() == 1);
  const MergeRecord& m = run.merges[0];
  CHECK(m.stage == 5);
  CHECK(m.u == 1);
  CHECK(m.v == 1);
  CHECK(run.path(1, 0).at(run.path(1, 0).hi()) == run.path(2, 0).at(run.path(2, 0).hi()));
  CHECK(run.share_edge({1, 0}, {2, 0}));
  CHECK(run.requirements[0].satisfied);
  CHECK(run.obs_violations().empty());
}

TEST_CASE("wirt same family never merges") {
  AdversaryScript q;
  q.e = 0;
  q.traces = {{0, 8, 0, 10}, {1, 8, 1, 10}};
  WirtRun run = wirt_priority_build({q}, 30);
  CHECK(run.merges.empty());
  CHECK_FALSE(run.requirements[0].satisfied);
  CHECK(run.dc_holds());
}

TEST_CASE("wirt script violations") {
  AdversaryScript q;
  q.e = 0;
  q.values = {{0, 0, 1, 3}, {0, 0, 2, 4}};
  CHECK_THROWS_AS(q.validate(), Error);
  q.values = {{0, 1, 1, 3}};
  CHECK_THROWS_AS(q.validate(), Error);
  q.values = {{0, 0, 4, 3}, {0, 1, 2, 4}};
  CHECK_THROWS_AS(wirt_priority_build({q}, 5), Error);
  AdversaryScript d0, d1;
  d0.e = d1.e = 2;
  CHECK_THROWS_AS(wirt_priority_build({d0, d1}, 3), Error);
}

TEST_CASE("wirt literal script") {
  // P^1_0 occupies 0,1,2 with coordinates -1,0,1; P^2_0 starts at 3.
  AdversaryScript q;
  q.e = 0;
  q.values = {{0, 0, 3, 1}, {0, 1, 3, 2}, {1, 0, 3, 5}, {1, 1, 3, 6}};
  WirtRun run = wirt_priority_build({q}, 6);
  REQUIRE(run.merges.size() == 1);
  CHECK(run.merges[0].stage == 3);
  CHECK(run.merges[0].at_x.size() == 1);
  CHECK(run.obs_violations().empty());
}

TEST_CASE("wirt demo cascade") {
  WirtRun run = wirt_priority_build(wirt_demo_adversaries(), 60);
  REQUIRE(run.merges.size() == 3);
  CHECK(run.merges[0].stage == 5);
  CHECK(run.merges[1].stage == 12);
  CHECK(run.merges[2].stage == 40);
  REQUIRE(run.inits.size() == 3);
  CHECK(run.inits[2].e == 2);
  CHECK(run.inits[2].stage == 12);
  CHECK(run.requirements[2].f == 12);
  CHECK(run.dc_holds());
  CHECK(run.obs_violations().empty());
  CHECK(run.share_edge({1, 0}, {2, 0}));
  CHECK(run.share_edge({6, 1}, {7, 3}));
  CHECK(run.share_edge({20, 0}, {25, 0}));
}

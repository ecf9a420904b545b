#include <doctest.h>

#include "pqf/polyhedra.hpp"
#include "support.hpp"

using namespace pqf;

TEST_CASE("primitive direction") {
  CHECK(primitive_direction({Rat(2, 3), Rat(-4, 3)}) == RatVec{Rat(1), Rat(-2)});
  CHECK(primitive_direction({Rat(6), Rat(9)}) == RatVec{Rat(2), Rat(3)});
  CHECK_THROWS_AS(primitive_direction({Rat(0), Rat(0)}), std::domain_error);
}

TEST_CASE("quadrant cone") {
  Cone c{2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
  auto facets = dual_description(c);
  REQUIRE(facets.size() == 2);
  CHECK(facets[0].normal == RatVec{Rat(0), Rat(1)});
  CHECK(facets[1].normal == RatVec{Rat(1), Rat(0)});
  CHECK(facets[0].incident == std::vector<int>{0});
  CHECK(facets[1].incident == std::vector<int>{1});
}

TEST_CASE("redundant generator lies on no facet") {
  Cone c{3,
         {{Rat(1), Rat(0), Rat(0)},
          {Rat(0), Rat(1), Rat(0)},
          {Rat(0), Rat(0), Rat(1)},
          {Rat(1), Rat(1), Rat(1)}}};
  auto facets = dual_description(c);
  CHECK(facets.size() == 3);
  for (const auto& fac : facets) {
    // the interior generator (1,1,1) is incident to nothing
    for (int idx : fac.incident) CHECK(idx != 3);
    CHECK(fac.incident.size() == 2);
  }
}

TEST_CASE("voronoi domain of the hexagonal form") {
  // evaluation vectors of (1,0), (0,1), (1,-1) in the rational binary space
  Cone c{3,
         {{Rat(1), Rat(0), Rat(0)},
          {Rat(0), Rat(0), Rat(1)},
          {Rat(1), Rat(-2), Rat(1)}}};
  auto facets = dual_description(c);
  REQUIRE(facets.size() == 3);
  for (const auto& fac : facets) CHECK(fac.incident.size() == 2);
  // each generator is on exactly two facets
  std::vector<int> touch(3, 0);
  for (const auto& fac : facets)
    for (int idx : fac.incident) ++touch[idx];
  CHECK(touch == std::vector<int>{2, 2, 2});
}

TEST_CASE("membership") {
  Cone c{2, {{Rat(1), Rat(0)}, {Rat(1), Rat(2)}}};
  auto facets = dual_description(c);
  CHECK(cone_contains(c, facets, {Rat(1), Rat(1)}));
  CHECK(cone_contains(c, facets, {Rat(1), Rat(0)}));
  CHECK(cone_contains(c, facets, {Rat(0), Rat(0)}));
  CHECK(!cone_contains(c, facets, {Rat(0), Rat(1)}));
  CHECK(!cone_contains(c, facets, {Rat(-1), Rat(0)}));
  CHECK_THROWS_AS(cone_contains(c, facets, {Rat(1)}), std::domain_error);
}

TEST_CASE("facets support the cone from inside") {
  pqftest::TestRng rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    Cone c = pqftest::random_pointed_cone(rng, 4, 7);
    auto facets = dual_description(c);
    for (const auto& fac : facets) {
      for (const auto& g : c.generators) {
        Rat dp = dot(fac.normal, g);
        CHECK(dp >= 0);
      }
      for (int idx : fac.incident)
        CHECK(dot(fac.normal, c.generators[idx]) == 0);
    }
  }
}

TEST_CASE("every facet is essential") {
  pqftest::TestRng rng(6160);
  for (int trial = 0; trial < 10; ++trial) {
    Cone c = pqftest::random_pointed_cone(rng, 3, 6);
    auto facets = dual_description(c);
    for (size_t fi = 0; fi < facets.size(); ++fi) {
      // sum of the incident generators sits on this facet and strictly
      // inside every other; stepping outward violates only this one
      RatVec p(c.ambient_dim, Rat(0));
      for (int idx : facets[fi].incident)
        for (size_t k = 0; k < p.size(); ++k)
          p[k] += c.generators[idx][k];
      Rat step(1, 1000000);
      for (size_t k = 0; k < p.size(); ++k)
        p[k] -= step * facets[fi].normal[k];
      CHECK(dot(facets[fi].normal, p) < 0);
      for (size_t fj = 0; fj < facets.size(); ++fj) {
        if (fj == fi) continue;
        CHECK(dot(facets[fj].normal, p) > 0);
      }
    }
  }
}

TEST_CASE("agreement with the subset-kernel oracle") {
  pqftest::TestRng rng(7170);
  int done = 0;
  while (done < 100) {
    int dim = 3 + (done % 2);
    Cone c = pqftest::random_pointed_cone(rng, dim, dim + 3);
    auto fast = dual_description(c);
    auto slow = pqftest::facet_oracle(c);
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i) {
      CHECK(fast[i].normal == slow[i].normal);
      CHECK(fast[i].incident == slow[i].incident);
    }
    ++done;
  }
}

TEST_CASE("degenerate input is rejected") {
  Cone flat{3, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}}};
  CHECK_THROWS_AS(dual_description(flat), std::domain_error);
  Cone empty{2, {}};
  CHECK_THROWS_AS(dual_description(empty), std::domain_error);
}

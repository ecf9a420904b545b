#include <doctest.h>

#include <algorithm>

#include "pqf/shortvec.hpp"
#include "support.hpp"

using namespace pqf;

TEST_CASE("minimal vectors of small grams") {
  RatMat a2{{Rat(1), Rat(1, 2)}, {Rat(1, 2), Rat(1)}};
  MinimalData md = minimal_vectors(a2);
  CHECK(md.minimum == 1);
  CHECK(md.vectors == std::vector<IntVec>{{0, 1}, {1, -1}, {1, 0}});

  // sign-flipped variant: same minimum, reflected vectors
  RatMat a2m{{Rat(1), Rat(-1, 2)}, {Rat(-1, 2), Rat(1)}};
  MinimalData mm = minimal_vectors(a2m);
  CHECK(mm.minimum == 1);
  CHECK(mm.vectors == std::vector<IntVec>{{0, 1}, {1, 0}, {1, 1}});

  RatMat i2{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  MinimalData mi = minimal_vectors(i2);
  CHECK(mi.minimum == 1);
  CHECK(mi.vectors == std::vector<IntVec>{{0, 1}, {1, 0}});

  RatMat g2{{Rat(1), Rat(-1)}, {Rat(-1), Rat(2)}};
  MinimalData m2 = minimal_vectors(g2);
  CHECK(m2.minimum == 1);
  CHECK(m2.vectors == std::vector<IntVec>{{1, 0}, {1, 1}});
}

TEST_CASE("four dimensional tensor gram") {
  // restriction of the d = 5 initial form: two orthogonal A2 blocks
  RatMat g(4, RatVec(4, Rat(0)));
  RatMat a2{{Rat(1), Rat(1, 2)}, {Rat(1, 2), Rat(1)}};
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) g[k * 2 + i][k * 2 + j] = a2[i][j];
  MinimalData md = minimal_vectors(g);
  CHECK(md.minimum == 1);
  std::vector<IntVec> expect{{0, 0, 0, 1}, {0, 0, 1, -1}, {0, 0, 1, 0},
                             {0, 1, 0, 0}, {1, -1, 0, 0}, {1, 0, 0, 0}};
  CHECK(md.vectors == expect);
  MinimalData bf = brute_force_minimal_vectors(g, 4);
  CHECK(bf.minimum == md.minimum);
  CHECK(bf.vectors == md.vectors);
}

TEST_CASE("identity in four dimensions") {
  RatMat g(4, RatVec(4, Rat(0)));
  for (int i = 0; i < 4; ++i) g[i][i] = 1;
  MinimalData md = minimal_vectors(g);
  CHECK(md.minimum == 1);
  CHECK(md.vectors.size() == 4);
  MinimalData bf = brute_force_minimal_vectors(g, 2);
  CHECK(bf.vectors == md.vectors);
}

TEST_CASE("non positive definite input throws") {
  RatMat g{{Rat(1), Rat(2)}, {Rat(2), Rat(1)}};
  CHECK_THROWS_AS(minimal_vectors(g), std::domain_error);
  RatMat z{{Rat(0), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK_THROWS_AS(minimal_vectors(z), std::domain_error);
}

TEST_CASE("canonical sign representative") {
  RatMat g{{Rat(2), Rat(1)}, {Rat(1), Rat(2)}};
  MinimalData md = minimal_vectors(g);
  for (const auto& v : md.vectors) {
    auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
    REQUIRE(first != v.end());
    CHECK(*first > 0);
  }
}

TEST_CASE("scaling the gram scales the minimum") {
  RatMat g{{Rat(1), Rat(-1, 2)}, {Rat(-1, 2), Rat(1)}};
  MinimalData base = minimal_vectors(g);
  RatMat h = g;
  for (auto& row : h)
    for (auto& x : row) x *= Rat(3, 7);
  MinimalData scaled = minimal_vectors(h);
  CHECK(scaled.minimum == base.minimum * Rat(3, 7));
  CHECK(scaled.vectors == base.vectors);
}

TEST_CASE("shallow wells keep only the unit vectors") {
  for (Rat lam : {Rat(0), Rat(1, 2), Rat(-1, 2)}) {
    RatMat g{{Rat(1), lam / 2}, {lam / 2, Rat(1)}};
    MinimalData md = minimal_vectors(g);
    CHECK(md.minimum == 1);
    CHECK(md.vectors == std::vector<IntVec>{{0, 1}, {1, 0}});
  }
}

TEST_CASE("vectors below a fixed bound") {
  RatMat a2{{Rat(1), Rat(-1, 2)}, {Rat(-1, 2), Rat(1)}};
  auto below1 = vectors_below(a2, Rat(1));
  CHECK(below1.size() == 3);
  auto below3 = vectors_below(a2, Rat(3));
  CHECK(below3.size() > below1.size());
  for (const auto& [v, val] : below3) {
    CHECK(val <= 3);
    CHECK(gram_value(a2, v) == val);
  }
  // every returned vector is distinct and sorted
  auto sorted = below3;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == below3);
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("agreement with brute force on random grams") {
  pqftest::TestRng rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    RatMat g = pqftest::random_pd_gram(rng, 4);
    MinimalData fast = minimal_vectors(g);
    long box = certified_box_radius(g, fast.minimum);
    MinimalData slow = brute_force_minimal_vectors(g, box);
    CHECK(fast.minimum == slow.minimum);
    CHECK(fast.vectors == slow.vectors);
  }
}

TEST_CASE("ldlt decomposition of a2") {
  RatMat a2{{Rat(1), Rat(-1, 2)}, {Rat(-1, 2), Rat(1)}};
  auto dec = ldlt(a2);
  REQUIRE(dec.has_value());
  REQUIRE(dec->diag.size() == 2);
  CHECK(dec->diag[0] == 1);
  CHECK(dec->diag[1] == Rat(3, 4));
  CHECK(dec->coef[0][1] == Rat(-1, 2));
  RatMat bad{{Rat(1), Rat(2)}, {Rat(2), Rat(1)}};
  CHECK(!ldlt(bad).has_value());
}

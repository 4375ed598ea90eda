#include "doctest.h"
#include "kummerws/semigroup.hpp"

#include <stdexcept>

using namespace kws;

TEST_CASE("gap set basics") {
  const GapSet g({1, 2, 5});
  CHECK(g.genus() == 3);
  CHECK(g.frobenius() == 5);
  CHECK(g.contains(2));
  CHECK_FALSE(g.contains(3));
  CHECK(GapSet().frobenius() == -1);
  CHECK(GapSet().genus() == 0);
}

TEST_CASE("gap set rejects bad input") {
  CHECK_THROWS_AS(GapSet({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GapSet({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(GapSet({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GapSet({-3}), std::invalid_argument);
}

TEST_CASE("semigroup membership and enumeration") {
  const NumericalSemigroup h(GapSet({1, 2, 5}));
  CHECK(h.contains(0));
  CHECK_FALSE(h.contains(-1));
  CHECK_FALSE(h.contains(5));
  CHECK(h.contains(6));
  CHECK(h.validate());

  const auto rho = h.enumerate(8);
  CHECK(rho == std::vector<Int>{0, 3, 4, 6, 7, 8, 9, 10});
  // past the Frobenius number rho_l = l - 1 + g
  for (std::size_t l = 4; l < rho.size(); ++l)
    CHECK(rho[l] == static_cast<Int>(l) + h.genus());
}

TEST_CASE("validate rejects non-semigroup gap sets") {
  // complement of {1, 3} contains 2 but not 2+2
  CHECK_FALSE(NumericalSemigroup(GapSet({1, 4})).validate());
  CHECK(NumericalSemigroup(GapSet({1, 3})).validate());
  CHECK(NumericalSemigroup(GapSet()).validate());
}

TEST_CASE("lub and glb") {
  const PairPoint x{2, 7}, y{5, 3};
  CHECK(lub(x, y) == PairPoint{5, 7});
  CHECK(glb(x, y) == PairPoint{2, 3});
  CHECK(lub(x, x) == x);
  CHECK(glb(lub(x, y), x) == x);
}

TEST_CASE("pair set sorts and dedups") {
  const PairSet s({{3, 1}, {1, 2}, {3, 1}, {1, 1}});
  CHECK(s.size() == 3);
  CHECK(s.points() == std::vector<PairPoint>{{1, 1}, {1, 2}, {3, 1}});
  CHECK(s.contains({3, 1}));
  CHECK_FALSE(s.contains({2, 2}));
}

TEST_CASE("lub closure") {
  const Box box{8, 8};
  const PairSet gen({{1, 5}, {5, 1}, {2, 2}});
  const PairSet closed = lub_closure(gen, box);
  CHECK(closed.contains({1, 5}));
  CHECK(closed.contains({5, 5}));  // lub of (1,5) and (5,1)
  CHECK(closed.contains({2, 5}));
  CHECK_FALSE(closed.contains({1, 1}));
  CHECK_FALSE(closed.contains({3, 3}));
  // clipping: nothing beyond the box
  for (PairPoint p : closed)
    CHECK(box.contains(p));
  // idempotent
  CHECK(lub_closure(closed, box) == closed);
}

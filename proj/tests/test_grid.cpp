// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "roughvol/errors.hpp"
#include "roughvol/grid.hpp"

using namespace roughvol;

TEST_CASE("grid construction and times") {
  Grid g(8, 2.0);
  CHECK(g.n() == 8);
  CHECK(g.step() == 0.25);
  CHECK(g.time(0) == 0.0);
  CHECK(g.time(8) == 2.0);
  CHECK(g.times().size() == 9);
  CHECK(g.times()[3] == doctest::Approx(0.75));
  CHECK_THROWS_AS(Grid(0, 1.0), ValidationError);
  CHECK_THROWS_AS(Grid(4, 0.0), ValidationError);
  CHECK_THROWS_AS(Grid(4, -1.0), ValidationError);
}

TEST_CASE("nested grids") {
  CHECK(Grid(16, 1.0).refines(Grid(4, 1.0)));
  CHECK_FALSE(Grid(16, 1.0).refines(Grid(3, 1.0)));
  CHECK_FALSE(Grid(16, 1.0).refines(Grid(4, 2.0)));
  CHECK(Grid(4, 1.0) == Grid(4, 1.0));
}

TEST_CASE("coarsen sums increments and subsamples values") {
  JointPath fine;
  fine.grid = Grid(4, 1.0);
  fine.y = {0.0, 0.1, 0.2, 0.3, 0.4};
  fine.dv = {1.0, 2.0, 3.0, 4.0};
  fine.dw = {-1.0, 0.5, 0.25, 2.0};
  fine.seed_info = {9, 3};

  const auto same = coarsen(fine, 1);
  CHECK(same.y == fine.y);
  CHECK(same.dv == fine.dv);
  CHECK(same.dw == fine.dw);

  const auto half = coarsen(fine, 2);
  CHECK(half.grid == Grid(2, 1.0));
  CHECK(half.y == std::vector<double>{0.0, 0.2, 0.4});
  CHECK(half.dv == std::vector<double>{3.0, 7.0});
  CHECK(half.dw == std::vector<double>{-0.5, 2.25});
  CHECK(half.seed_info == fine.seed_info);

  const auto one = coarsen(fine, 4);
  CHECK(one.dv == std::vector<double>{10.0});

  CHECK_THROWS_AS(coarsen(fine, 3), IncompatibleGrids);
  CHECK_THROWS_AS(coarsen(fine, 0), IncompatibleGrids);
}

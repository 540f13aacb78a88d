// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <vector>

#include "roughvol/rng.hpp"

using namespace roughvol;

TEST_CASE("philox4x32-10 known-answer vectors") {
  using A4 = std::array<std::uint32_t, 4>;
  CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and independent of consumption elsewhere") {
  GaussianStream a({42, 7, StreamRole::joint});
  GaussianStream b({42, 7, StreamRole::joint});
  GaussianStream noise({42, 8, StreamRole::joint});
  for (int i = 0; i < 1000; ++i) {
    noise.next();
    CHECK(a.next() == b.next());
  }
  CHECK(a.blocks_consumed() == 500);
}

TEST_CASE("seed, replication and role each select a distinct stream") {
  auto first = [](StreamKey k) {
    GaussianStream s(k);
    return s.next();
  };
  const double base = first({42, 0, StreamRole::joint});
  CHECK(first({43, 0, StreamRole::joint}) != base);
  CHECK(first({42, 1, StreamRole::joint}) != base);
  CHECK(first({42, 0, StreamRole::dw}) != base);
  CHECK(first({42, 0, StreamRole::dh}) != base);
  CHECK(first({42, std::uint64_t{1} << 32, StreamRole::joint}) != base);
  CHECK(first({std::uint64_t{42} | (std::uint64_t{1} << 40), 0, StreamRole::joint}) != base);
}

TEST_CASE("fill matches repeated next") {
  GaussianStream a({1, 2, StreamRole::dw});
  GaussianStream b({1, 2, StreamRole::dw});
  std::vector<double> buf(17);
  a.fill(buf);
  for (double x : buf) CHECK(x == b.next());
}

TEST_CASE("uniforms lie strictly inside (0, 1]") {
  GaussianStream s({3, 0, StreamRole::dh});
  for (int i = 0; i < 100000; ++i) {
    const auto [u1, u2] = s.next_uniform_pair();
    CHECK_UNARY(u1 > 0.0);
    CHECK_UNARY(u1 <= 1.0);
    CHECK_UNARY(u2 > 0.0);
    CHECK_UNARY(u2 <= 1.0);
  }
}

TEST_CASE("normal moments") {
  GaussianStream s({2026, 0, StreamRole::joint});
  constexpr int kCount = 400000;
  double m1 = 0, m2 = 0, m3 = 0, m4 = 0, lag = 0, prev = 0;
  for (int i = 0; i < kCount; ++i) {
    const double x = s.next();
    m1 += x;
    m2 += x * x;
    m3 += x * x * x;
    m4 += x * x * x * x;
    lag += x * prev;
    prev = x;
  }
  m1 /= kCount;
  m2 /= kCount;
  m3 /= kCount;
  m4 /= kCount;
  lag /= kCount;
  const double se = 1.0 / std::sqrt(static_cast<double>(kCount));
  CHECK(std::abs(m1) < 4 * se);
  CHECK(std::abs(m2 - 1.0) < 4 * std::sqrt(2.0) * se);
  CHECK(std::abs(m3) < 4 * std::sqrt(15.0) * se);
  CHECK(std::abs(m4 - 3.0) < 4 * std::sqrt(96.0) * se);
  CHECK(std::abs(lag) < 4 * se);
}

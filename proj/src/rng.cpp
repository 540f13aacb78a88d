// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include "roughvol/rng.hpp"

#include <cmath>
#include <numbers>

namespace roughvol {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

inline double to_unit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

GaussianStream::GaussianStream(StreamKey key) : key_(key) {}

std::array<double, 2> GaussianStream::next_uniform_pair() {
  const std::array<std::uint32_t, 4> ctr{
      block_++, static_cast<std::uint32_t>(key_.role),
      static_cast<std::uint32_t>(key_.replication),
      static_cast<std::uint32_t>(key_.replication >> 32)};
  const std::array<std::uint32_t, 2> k{static_cast<std::uint32_t>(key_.seed),
                                       static_cast<std::uint32_t>(key_.seed >> 32)};
  const auto r = philox4x32(ctr, k);
  return {to_unit(r[0], r[1]), to_unit(r[2], r[3])};
}

double GaussianStream::next() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const auto [u1, u2] = next_uniform_pair();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

void GaussianStream::fill(std::span<double> out) {
  for (double& x : out) x = next();
}

}  // namespace roughvol

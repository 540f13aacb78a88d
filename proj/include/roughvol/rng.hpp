// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace roughvol {

/// Independent random streams used by one replication.
enum class StreamRole : std::uint32_t {
  joint = 1,  ///< Gaussians fed to the Cholesky factor
  dw = 2,     ///< increments of W
  dh = 3,     ///< Gaussians fed to the circulant-embedding sampler
};

/// Philox4x32-10 block function.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Identifies a stream: (experiment seed, replication index, role).
struct StreamKey {
  std::uint64_t seed = 0;
  std::uint64_t replication = 0;
  StreamRole role = StreamRole::joint;
};

/// Counter-based standard-normal stream.
///
/// The seed is the Philox key; the counter holds (block, role, replication),
/// so streams for distinct keys never overlap and any replication can be
/// generated independently of the others. Each block yields two uniforms
/// and, by Box-Muller, exactly two normals.
class GaussianStream {
 public:
  explicit GaussianStream(StreamKey key);

  double next();
  void fill(std::span<double> out);

  /// Uniform on (0, 1], 53-bit resolution. Consumes a full block.
  std::array<double, 2> next_uniform_pair();

  const StreamKey& key() const noexcept { return key_; }
  std::uint32_t blocks_consumed() const noexcept { return block_; }

 private:
  StreamKey key_;
  std::uint32_t block_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace roughvol

// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#include "roughvol/errors.hpp"

namespace roughvol {

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::validation: return "ValidationError";
    case ErrorKind::quadrature_not_converged: return "QuadratureNotConverged";
    case ErrorKind::not_positive_definite: return "NotPositiveDefinite";
    case ErrorKind::embedding_not_psd: return "EmbeddingNotPSD";
    case ErrorKind::incompatible_grids: return "IncompatibleGrids";
    case ErrorKind::tractability_exceeded: return "TractabilityExceeded";
    case ErrorKind::insufficient_data: return "InsufficientData";
  }
  return "Error";
}

}  // namespace roughvol

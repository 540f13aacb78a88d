// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace roughvol {

/// Failure categories. Each maps to a distinct CLI exit code.
enum class ErrorKind {
  validation,
  quadrature_not_converged,
  not_positive_definite,
  embedding_not_psd,
  incompatible_grids,
  tractability_exceeded,
  insufficient_data,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

class QuadratureNotConverged : public Error {
 public:
  explicit QuadratureNotConverged(const std::string& what)
      : Error(ErrorKind::quadrature_not_converged, what) {}
};

class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(const std::string& what)
      : Error(ErrorKind::not_positive_definite, what) {}
};

class EmbeddingNotPSD : public Error {
 public:
  explicit EmbeddingNotPSD(const std::string& what)
      : Error(ErrorKind::embedding_not_psd, what) {}
};

class IncompatibleGrids : public Error {
 public:
  explicit IncompatibleGrids(const std::string& what)
      : Error(ErrorKind::incompatible_grids, what) {}
};

class TractabilityExceeded : public Error {
 public:
  explicit TractabilityExceeded(const std::string& what)
      : Error(ErrorKind::tractability_exceeded, what) {}
};

class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& what)
      : Error(ErrorKind::insufficient_data, what) {}
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace roughvol

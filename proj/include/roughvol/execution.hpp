// Copyright 2026 The roughvol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace roughvol {

/// Selects the OpenMP kernel or the plain serial reference path.
enum class Execution { serial, parallel };

}  // namespace roughvol

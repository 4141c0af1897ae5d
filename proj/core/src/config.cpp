// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include "consistat/config.hpp"

#include "consistat/errors.hpp"

namespace consistat {

void AnalysisConfig::validate() const {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw DomainError("config: alpha must lie strictly between 0 and 1");
  }
  if (!(strong_r > 0.0) || !(strong_r <= 1.0)) {
    throw DomainError("config: strong_r must lie in (0, 1]");
  }
}

}  // namespace consistat

// Copyright 2026 The cctsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gtest/gtest.h>

#include <cmath>

#include "cct/hilbert.hpp"

namespace cct::testing {

inline constexpr double kR = 0.70710678118654752440;  // 1/sqrt(2)

inline ::testing::AssertionResult states_near(const StateVector& a, const StateVector& b,
                                              double tol = 1e-12) {
  if (a.dims() != b.dims()) return ::testing::AssertionFailure() << "dims differ";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) {
      return ::testing::AssertionFailure()
             << "amplitude " << basis_label(a.dims(), i) << ": " << a[i] << " vs " << b[i];
    }
  }
  return ::testing::AssertionSuccess();
}

inline ::testing::AssertionResult operators_near(const Operator& a, const Operator& b,
                                                 double tol = 1e-12) {
  if (a.dims() != b.dims()) return ::testing::AssertionFailure() << "dims differ";
  const double d = a.max_abs_difference(b);
  if (d > tol) return ::testing::AssertionFailure() << "max entry difference " << d;
  return ::testing::AssertionSuccess();
}

/// Four standard errors of a Bernoulli frequency estimate.
inline double four_sigma(double p, double n) { return 4.0 * std::sqrt(p * (1.0 - p) / n); }

}  // namespace cct::testing

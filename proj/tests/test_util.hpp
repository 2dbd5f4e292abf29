// Copyright 2026 The Spinsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINSIM_TESTS_TEST_UTIL_HPP
#define SPINSIM_TESTS_TEST_UTIL_HPP

#include <random>

#include "spinsim/linalg.hpp"

namespace spinsim::testutil {

inline cxmat random_hermitian(long dim, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, scale);
  cxmat m(dim, dim);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c) m(r, c) = cx(gauss(rng), gauss(rng));
  return 0.5 * (m + m.adjoint().eval());
}

inline cxmat random_unitary(long dim, std::mt19937_64& rng) {
  return propagator(random_hermitian(dim, rng), 1.0);
}

inline cxvec random_state(long dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  cxvec v(dim);
  for (long i = 0; i < dim; ++i) v(i) = cx(gauss(rng), gauss(rng));
  return v / v.norm();
}

// Matrix exponential exp(-i H t) by scaling-and-squaring Taylor series;
// independent of the eigendecomposition route.
inline cxmat expm_taylor(const cxmat& h, double t) {
  cxmat a = cx(0.0, -t) * h;
  int squarings = 0;
  while (a.norm() > 0.25) {
    a *= 0.5;
    ++squarings;
  }
  cxmat result = cxmat::Identity(h.rows(), h.cols());
  cxmat term = result;
  for (int k = 1; k <= 24; ++k) {
    term = (term * a) / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace spinsim::testutil

#endif  // SPINSIM_TESTS_TEST_UTIL_HPP

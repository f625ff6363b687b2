// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace optheory {

/// Deterministic splittable generator (splitmix64). Every random quantity in
/// the library flows through this class; no <random> distributions are used,
/// so a seed pins the exact sample sequence independent of the standard
/// library. split() derives an independent child stream, which keeps sharded
/// runs reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 significant bits.
  double next_double();

  /// Standard normal via Box–Muller (two uniforms per call).
  double next_gaussian();

  /// Real and imaginary parts independent standard normals.
  std::complex<double> next_complex_gaussian();

  SplitMix64 split();

 private:
  std::uint64_t state_;
};

/// n draws from the categorical distribution {probs}; probabilities must be
/// nonnegative within 1e-12 and sum to 1 within 1e-9. Returns one count per
/// category; the last category absorbs rounding at the top of the CDF.
std::vector<std::int64_t> multinomial(SplitMix64& rng, const std::vector<double>& probs,
                                      std::int64_t n);

}  // namespace optheory

// SPDX-License-Identifier: Apache-2.0
#include "optheory/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "optheory/errors.hpp"

namespace optheory {

std::uint64_t SplitMix64::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_gaussian() {
  const double u1 = next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log1p(-u1));  // log(1-u1), strictly negative argument avoided
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> SplitMix64::next_complex_gaussian() {
  const double re = next_gaussian();
  const double im = next_gaussian();
  return {re, im};
}

SplitMix64 SplitMix64::split() { return SplitMix64(next_u64()); }

std::vector<std::int64_t> multinomial(SplitMix64& rng, const std::vector<double>& probs,
                                      std::int64_t n) {
  if (n < 0) throw Error("multinomial: negative sample count");
  double sum = 0.0;
  for (double p : probs) {
    if (p < -1e-12) throw Error("multinomial: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw Error("multinomial: probabilities must sum to one");

  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += std::max(0.0, probs[i]);
    cdf[i] = acc;
  }
  if (!cdf.empty()) cdf.back() = 1.0;

  std::vector<std::int64_t> counts(probs.size(), 0);
  for (std::int64_t k = 0; k < n; ++k) {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx >= counts.size()) idx = counts.size() - 1;
    ++counts[idx];
  }
  return counts;
}

}  // namespace optheory

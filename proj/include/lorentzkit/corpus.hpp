#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lorentzkit/rearrange.hpp"

namespace lorentzkit {

/// Shape controls for random continuous non-increasing power-affine profiles.
struct CorpusOptions {
  int max_segments = 5;
  /// Singular heads r^-beta draw beta from (0.05, max_head_exponent).
  double max_head_exponent = 0.45;
  /// Power tails r^-m draw m from (min_tail_exponent, min_tail_exponent + 1.5).
  double min_tail_exponent = 1.3;
  bool allow_singular_head = true;
  /// Bounded heads c r^alpha + d with 0 < alpha < 1.
  bool allow_holder_head = true;
  bool allow_power_tail = true;
};

/// Bounded, Lipschitz at the origin and compactly supported.
CorpusOptions lipschitz_compact_options();

RadialProfile random_profile(std::mt19937_64& rng, const CorpusOptions& opts = {});

std::vector<RadialProfile> make_corpus(std::uint64_t seed, std::size_t count,
                                       const CorpusOptions& opts = {});

/// Compactly supported profiles dilated so that their support radius is 1.
std::vector<RadialProfile> unit_support(const std::vector<RadialProfile>& corpus);

/// Random cell values with zeros and ties, 1..max_cells cells.
SampledFunction random_sampled(std::mt19937_64& rng, std::size_t max_cells = 64);

}  // namespace lorentzkit

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "histrel/hist_core.hpp"

namespace histrel {

/// Bounds for random desk-scale instances.
struct InstanceShape {
  std::size_t min_symbols = 2;
  std::size_t max_symbols = 4;
  std::size_t min_members = 1;
  std::size_t max_members = 5;
  Count min_length = 1;
  Count max_length = 12;
};

/// Draws |V|, |M| and |T| uniformly within `shape`, then each member as the
/// histogram of a sample whose entries follow a per-instance random symbol
/// distribution (so some instances are skewed enough to reduce).
HistogramSet random_instance(std::mt19937_64& rng, const InstanceShape& shape);

std::vector<HistogramSet> random_instances(std::uint64_t seed, std::size_t count, const InstanceShape& shape);

/// Every ordered pair {(a, T-a), (b, T-b)}, a, b in 0..T, over alphabet {0, 1}:
/// (T+1)^2 sets, including a == b.
std::vector<HistogramSet> binary_pair_sweep(Count length);

}  // namespace histrel

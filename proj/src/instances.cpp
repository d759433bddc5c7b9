#include "histrel/instances.hpp"

#include <algorithm>
#include <string>

namespace histrel {
namespace {

Alphabet numbered_alphabet(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(n == 2 ? std::to_string(i) : "s" + std::to_string(i));
  return Alphabet(std::move(labels));
}

}  // namespace

HistogramSet random_instance(std::mt19937_64& rng, const InstanceShape& shape) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t n = pick(shape.min_symbols, shape.max_symbols);
  const std::size_t k = pick(shape.min_members, shape.max_members);
  const Count t = std::uniform_int_distribution<Count>(shape.min_length, shape.max_length)(rng);

  std::vector<int> bias(n);
  for (auto& b : bias) b = static_cast<int>(pick(0, 4));
  if (std::all_of(bias.begin(), bias.end(), [](int b) { return b == 0; })) bias[pick(0, n - 1)] = 1;
  std::discrete_distribution<std::size_t> symbol(bias.begin(), bias.end());

  std::vector<Histogram> members;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Count> counts(n, 0);
    for (Count pos = 0; pos < t; ++pos) ++counts[symbol(rng)];
    members.emplace_back(std::move(counts));
  }
  return HistogramSet(numbered_alphabet(n), t, std::move(members));
}

std::vector<HistogramSet> random_instances(std::uint64_t seed, std::size_t count, const InstanceShape& shape) {
  std::mt19937_64 rng(seed);
  std::vector<HistogramSet> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_instance(rng, shape));
  return out;
}

std::vector<HistogramSet> binary_pair_sweep(Count length) {
  std::vector<HistogramSet> out;
  for (Count a = 0; a <= length; ++a)
    for (Count b = 0; b <= length; ++b)
      out.emplace_back(numbered_alphabet(2), length,
                       std::vector<Histogram>{Histogram({a, length - a}), Histogram({b, length - b})});
  return out;
}

}  // namespace histrel

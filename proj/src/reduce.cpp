#include "histrel/reduce.hpp"

#include <numeric>

namespace histrel {

std::string_view to_string(Problem p) { return p == Problem::supporting ? "supporting" : "covering"; }

std::vector<std::size_t> reducible_symbols(const CountMatrix& rows, Problem mode) {
  std::vector<std::size_t> out;
  if (rows.empty()) return out;
  const std::size_t n = rows.front().size();
  if (n < 2) return out;
  const auto k = static_cast<Count>(n - 1);
  for (std::size_t w = 0; w < n; ++w) {
    bool all = true;
    for (const auto& m : rows) {
      const Count total = std::accumulate(m.begin(), m.end(), Count{0});
      const Count lhs = k * m[w];
      const Count rhs = total - m[w];
      if (mode == Problem::supporting ? !(lhs < rhs) : !(lhs > rhs)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(w);
  }
  return out;
}

std::vector<std::size_t> corollary_threshold_check(const HistogramSet& set, Problem mode) {
  std::vector<std::size_t> out;
  const std::size_t n = set.alphabet().size();
  if (n < 2) return out;
  const Count t = set.sample_length();
  const auto v = static_cast<Count>(n);
  for (std::size_t w = 0; w < n; ++w) {
    bool all = true;
    for (const auto& m : set.members()) {
      const Count scaled = v * m[w];
      if (mode == Problem::supporting ? !(scaled < t) : !(scaled > t)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(w);
  }
  return out;
}

ReducedProblem reduce_fixpoint(const CountMatrix& rows, Problem mode) {
  ReducedProblem out;
  out.rows = rows;
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  out.trace.surviving.resize(n);
  std::iota(out.trace.surviving.begin(), out.trace.surviving.end(), std::size_t{0});

  for (std::size_t pass = 1; out.trace.surviving.size() > 1; ++pass) {
    const auto drop = reducible_symbols(out.rows, mode);
    if (drop.empty()) break;
    std::vector<bool> removed(out.trace.surviving.size(), false);
    for (std::size_t w : drop) {
      removed[w] = true;
      out.trace.steps.push_back({out.trace.surviving[w], mode, pass});
    }
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < removed.size(); ++j)
      if (!removed[j]) keep.push_back(j);
    for (auto& m : out.rows) {
      std::vector<Count> restricted;
      restricted.reserve(keep.size());
      for (std::size_t j : keep) restricted.push_back(m[j]);
      m = std::move(restricted);
    }
    std::vector<std::size_t> surviving;
    for (std::size_t j : keep) surviving.push_back(out.trace.surviving[j]);
    out.trace.surviving = std::move(surviving);
  }
  return out;
}

ReducedProblem reduce_fixpoint(const HistogramSet& set, Problem mode) {
  CountMatrix rows;
  rows.reserve(set.size());
  for (const auto& m : set.members()) rows.emplace_back(m.counts().begin(), m.counts().end());
  return reduce_fixpoint(rows, mode);
}

}  // namespace histrel

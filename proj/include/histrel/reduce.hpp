#pragma once

#include <cstddef>
#include <vector>

#include "histrel/hist_core.hpp"

namespace histrel {

enum class Problem { supporting, covering };

std::string_view to_string(Problem p);

/// Rows are nonnegative functions on the current (possibly restricted)
/// alphabet; all rows have the same length.
using CountMatrix = std::vector<std::vector<Count>>;

struct ReductionStep {
  std::size_t symbol;  // index into the full alphabet
  Problem mode;
  std::size_t pass;    // 1-based

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  std::vector<std::size_t> surviving;  // indices into the full alphabet, ascending

  std::size_t passes() const { return steps.empty() ? 0 : steps.back().pass; }
  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Symbols w (column indices) for which every row satisfies the strict test
///   supporting: m(w) < (1/(n-1)) * sum_{v != w} m(v)
///   covering:   m(w) > (1/(n-1)) * sum_{v != w} m(v)
/// evaluated in integer arithmetic. Empty when fewer than two columns.
std::vector<std::size_t> reducible_symbols(const CountMatrix& rows, Problem mode);

/// First-pass screen for genuine histograms: m(w) < |T|/|V| (supporting) or
/// m(w) > |T|/|V| (covering) for every member.
std::vector<std::size_t> corollary_threshold_check(const HistogramSet& set, Problem mode);

struct ReducedProblem {
  CountMatrix rows;  // members restricted to trace.surviving, in member order
  ReductionTrace trace;
};

/// Applies reducible_symbols to a fixpoint, removing every qualifying symbol
/// of a pass together. Stops when nothing qualifies or one symbol remains.
ReducedProblem reduce_fixpoint(const HistogramSet& set, Problem mode);
ReducedProblem reduce_fixpoint(const CountMatrix& rows, Problem mode);

}  // namespace histrel

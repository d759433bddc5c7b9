#pragma once

#include <cstddef>
#include <vector>

#include "histrel/number.hpp"

namespace histrel {

/// maximize c·z subject to A z = b, z >= 0. Rows with negative b are
/// accepted and sign-flipped internally.
template <class T>
struct StandardFormLp {
  std::vector<std::vector<T>> a;
  std::vector<T> b;
  std::vector<T> c;

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return c.size(); }
};

template <class T>
struct BasicSolution {
  T objective;
  std::vector<T> primal;            // one entry per column of A
  std::vector<T> dual;              // one entry per row: y = c_B B^-1
  std::vector<std::size_t> basis;   // basic column per row; >= cols() marks an artificial
  std::size_t iterations = 0;
};

struct SimplexOptions {
  double tol = kDefaultTolerance;   // ignored in exact arithmetic
  std::size_t iteration_cap = 0;    // 0 picks a size-based default (float only)
};

/// Dense two-phase tableau simplex with Bland's smallest-index rule.
///
/// Exact arithmetic always terminates. In floating point an iteration cap
/// applies; on the first overrun the right-hand side is perturbed and the
/// solve retried once before throwing IterationCapExceeded. Infeasible or
/// unbounded programs throw NumericalFailure.
template <class T>
BasicSolution<T> simplex_optimize(const StandardFormLp<T>& lp, const SimplexOptions& options = {});

}  // namespace histrel

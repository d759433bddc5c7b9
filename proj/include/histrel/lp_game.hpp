#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "histrel/hist_core.hpp"
#include "histrel/reduce.hpp"
#include "histrel/simplex.hpp"

namespace histrel {

/// Weight over the members of M (input order, duplicates included).
template <class T>
using DualWeight = BasicWeight<T>;

template <class T>
struct GameSolution {
  Problem mode = Problem::supporting;
  T alpha{};
  Weight<T> weight;                        // over the full alphabet
  DualWeight<T> dual;                      // over M's members
  std::vector<std::size_t> tight_members;  // pairing(weight, m) == alpha
  std::vector<std::size_t> tight_symbols;  // weight(v) > 0
  ReductionTrace reduction_trace;
  bool weight_unique = true;               // false when the optimal face is not a single point

  friend bool operator==(const GameSolution&, const GameSolution&) = default;
};

struct SolveOptions {
  double tol = kDefaultTolerance;
  bool reduce = true;            // run reduce_fixpoint before the LP
  bool check_uniqueness = true;  // probe the optimal face for weight_unique
  std::size_t iteration_cap = 0;
};

/// Game LP on `rows` (members x symbols). Columns are the weight x, then
/// alpha split as alpha+ and alpha-, then one slack per member; rows are one
/// constraint per member followed by sum(x) = 1.
///   supporting: maximize alpha  s.t.  alpha - (x, m) + s_m = 0
///   covering:   maximize -alpha s.t.  (x, m) - alpha + s_m = 0
template <class T>
StandardFormLp<T> build_game_lp(const CountMatrix& rows, Problem mode);

/// Member-row duals of an optimal basis as a weight over those rows. For the
/// supporting LP this is a covering weight for the evaluation maps v -> m(v),
/// and vice versa.
template <class T>
DualWeight<T> extract_dual(const BasicSolution<T>& lp, std::size_t member_count,
                           double tol = kDefaultTolerance);

template <class T>
GameSolution<T> solve_game(const HistogramSet& set, Problem mode, const SolveOptions& options = {});

template <class T>
GameSolution<T> solve_supporting(const HistogramSet& set, const SolveOptions& options = {}) {
  return solve_game<T>(set, Problem::supporting, options);
}

template <class T>
GameSolution<T> solve_covering(const HistogramSet& set, const SolveOptions& options = {}) {
  return solve_game<T>(set, Problem::covering, options);
}

/// Assembles a GameSolution from a weight and a dual given on deduplicated
/// members: spreads the dual evenly over duplicate copies and derives the
/// tight sets on the full member list.
template <class T>
GameSolution<T> assemble_solution(const HistogramSet& set, Problem mode, T alpha, std::vector<T> weight,
                                  const std::vector<T>& unique_dual, const HistogramSet::Deduplicated& dedup,
                                  ReductionTrace trace, double tol);

/// Whether `weight` is the only optimal weight of the game on `rows`,
/// decided by minimizing and maximizing each coordinate over the optimal face.
template <class T>
bool optimal_weight_is_unique(const CountMatrix& rows, Problem mode, const T& alpha,
                              const std::vector<T>& weight, const SolveOptions& options = {});

/// Column sums D(v) = sum_m d(m) m(v) of a dual weight.
template <class T>
std::vector<T> dual_column_values(const DualWeight<T>& dual, const HistogramSet& set);

struct CertificateReport {
  bool pass = true;
  std::string violated_clause;  // first failing clause, empty on pass
  double max_violation = 0.0;   // largest violation magnitude over all clauses

  explicit operator bool() const { return pass; }
};

/// Optimality certificate via weak-duality equality and complementary
/// slackness, evaluated in the solution's own arithmetic. Failures are
/// reported, never thrown.
template <class T>
CertificateReport certify(const GameSolution<T>& solution, const HistogramSet& set,
                          double tol = kDefaultTolerance);

}  // namespace histrel

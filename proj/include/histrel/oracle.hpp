#pragma once

#include <cstddef>

#include "histrel/lp_game.hpp"

namespace histrel {

inline constexpr std::size_t kOracleMaxSymbols = 6;
inline constexpr std::size_t kOracleMaxMembers = 8;
inline constexpr std::size_t kGridMaxSymbols = 4;

/// Exact support enumeration for the matrix game with payoff m(v).
///
/// Walks all support pairs S (symbols) x Q (distinct members) with
/// |S| = |Q|, solves both equalizing systems over the rationals, and returns
/// the first pair whose strategies are nonnegative and optimal against every
/// pure reply. Singular systems are skipped. Shares no code with the simplex
/// path. Throws CapExceeded beyond 6 symbols or 8 distinct members. The
/// returned solution's weight_unique flag is not evaluated.
GameSolution<Rational> oracle_solve(const HistogramSet& set, Problem mode);

/// Best min_m (resp. max_m) pairing over all weights with entries in
/// {0, 1/k, ..., 1}. Within |T||V|/k of the true value, and never better
/// than it. Throws CapExceeded beyond 4 symbols.
Rational oracle_grid(const HistogramSet& set, Problem mode, std::size_t resolution);

}  // namespace histrel

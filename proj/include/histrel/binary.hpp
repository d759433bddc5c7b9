#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "histrel/lp_game.hpp"

namespace histrel {

enum class BinaryTag {
  zero_dominant,  // every member has m(0) > m(1)
  one_dominant,   // every member has m(1) > m(0)
  mixed,          // some m' has m'(1) >= m'(0) and some m'' has m''(1) <= m''(0)
};

std::string_view to_string(BinaryTag tag);

struct Witnesses {
  std::size_t rising;   // m': m'(1) >= m'(0)
  std::size_t falling;  // m'': m''(1) <= m''(0)

  friend bool operator==(const Witnesses&, const Witnesses&) = default;
};

struct BinaryCase {
  BinaryTag tag;
  std::optional<Witnesses> witnesses;  // member indices, present iff mixed
};

/// Symbol 0 is the alphabet's first label. Mixed witnesses: a balanced member
/// (m(0) = m(1)) used for both roles if one exists; otherwise m' maximizing
/// m'(1) and m'' maximizing m''(0), first occurrence on ties.
BinaryCase classify_binary(const HistogramSet& set);

/// Duals for the all-m(0)-dominant case: (supporting-problem dual,
/// covering-problem dual), uniform over the members attaining min m(0) and
/// max m(1) respectively. Throws WrongCase otherwise.
template <class T>
std::pair<DualWeight<T>, DualWeight<T>> binary_dual_case1(const HistogramSet& set);

/// The two-member solution of the balance equations
///   sum_m m(j) d(m) = |T|/2,  j = 0, 1
/// supported on the witnesses (mass split evenly over duplicate copies).
template <class T>
DualWeight<T> binary_dual_case2(const HistogramSet& set, const Witnesses& witnesses);

template <class T>
struct BinarySolution {
  BinaryCase kind;
  GameSolution<T> supporting;
  GameSolution<T> covering;
};

/// Closed-form solutions of both problems for a two-symbol alphabet.
template <class T>
BinarySolution<T> solve_binary(const HistogramSet& set, double tol = kDefaultTolerance);

}  // namespace histrel

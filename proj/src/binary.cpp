#include "histrel/binary.hpp"

#include <algorithm>

namespace histrel {
namespace {

void require_binary(const HistogramSet& set) {
  if (set.alphabet().size() != 2)
    throw Error(ErrorCode::not_binary,
                "closed form needs a two-symbol alphabet, got " + std::to_string(set.alphabet().size()));
}

// Uniform weight over the members selected by `pick`.
template <class T, class Pred>
DualWeight<T> uniform_over(const HistogramSet& set, Pred pick) {
  std::size_t count = 0;
  for (const auto& m : set.members()) count += pick(m) ? 1 : 0;
  std::vector<T> values(set.size(), T(0));
  for (std::size_t i = 0; i < set.size(); ++i)
    if (pick(set[i])) values[i] = T(1) / T(static_cast<long long>(count));
  return DualWeight<T>(std::move(values));
}

HistogramSet swapped(const HistogramSet& set) {
  const auto& a = set.alphabet();
  std::vector<Histogram> members;
  members.reserve(set.size());
  for (const auto& m : set.members()) members.emplace_back(std::vector<Count>{m[1], m[0]});
  return HistogramSet(Alphabet({a[1], a[0]}), set.sample_length(), std::move(members));
}

template <class T>
GameSolution<T> make_solution(const HistogramSet& set, Problem mode, T alpha, std::vector<T> weight,
                              DualWeight<T> dual, bool unique, double tol) {
  GameSolution<T> out;
  out.mode = mode;
  out.alpha = std::move(alpha);
  out.weight = Weight<T>(std::move(weight), tol);
  out.dual = std::move(dual);
  for (std::size_t i = 0; i < set.size(); ++i)
    if (approx_equal(pairing(out.weight, set[i]), out.alpha, tol)) out.tight_members.push_back(i);
  for (std::size_t v = 0; v < 2; ++v)
    if (is_positive(out.weight[v], tol)) out.tight_symbols.push_back(v);
  out.reduction_trace = reduce_fixpoint(set, mode).trace;
  out.weight_unique = unique;
  return out;
}

}  // namespace

std::string_view to_string(BinaryTag tag) {
  switch (tag) {
    case BinaryTag::zero_dominant: return "zero-dominant";
    case BinaryTag::one_dominant: return "one-dominant";
    case BinaryTag::mixed: return "mixed";
  }
  return "?";
}

BinaryCase classify_binary(const HistogramSet& set) {
  require_binary(set);
  const auto& ms = set.members();
  if (std::all_of(ms.begin(), ms.end(), [](const Histogram& m) { return m[0] > m[1]; }))
    return {BinaryTag::zero_dominant, std::nullopt};
  if (std::all_of(ms.begin(), ms.end(), [](const Histogram& m) { return m[1] > m[0]; }))
    return {BinaryTag::one_dominant, std::nullopt};

  for (std::size_t i = 0; i < ms.size(); ++i)
    if (ms[i][0] == ms[i][1]) return {BinaryTag::mixed, Witnesses{i, i}};

  // Neither dominance holds and nothing is balanced, so both sides are strict
  // and nonempty.
  std::optional<std::size_t> rising, falling;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i][1] > ms[i][0] && (!rising || ms[i][1] > ms[*rising][1])) rising = i;
    if (ms[i][0] > ms[i][1] && (!falling || ms[i][0] > ms[*falling][0])) falling = i;
  }
  return {BinaryTag::mixed, Witnesses{*rising, *falling}};
}

template <class T>
std::pair<DualWeight<T>, DualWeight<T>> binary_dual_case1(const HistogramSet& set) {
  if (classify_binary(set).tag != BinaryTag::zero_dominant)
    throw Error(ErrorCode::wrong_case, "binary_dual_case1 needs m(0) > m(1) for every member");
  Count min0 = set[0][0];
  Count max1 = set[0][1];
  for (const auto& m : set.members()) {
    min0 = std::min(min0, m[0]);
    max1 = std::max(max1, m[1]);
  }
  return {uniform_over<T>(set, [&](const Histogram& m) { return m[0] == min0; }),
          uniform_over<T>(set, [&](const Histogram& m) { return m[1] == max1; })};
}

template <class T>
DualWeight<T> binary_dual_case2(const HistogramSet& set, const Witnesses& w) {
  require_binary(set);
  if (w.rising >= set.size() || w.falling >= set.size())
    throw Error(ErrorCode::invalid_argument, "witness index out of range");
  const Histogram& lo = set[w.rising];   // m'
  const Histogram& hi = set[w.falling];  // m''
  if (lo[1] < lo[0] || hi[1] > hi[0])
    throw Error(ErrorCode::wrong_case, "witnesses do not satisfy m'(1) >= m'(0) and m''(1) <= m''(0)");

  if (lo == hi) return uniform_over<T>(set, [&](const Histogram& m) { return m == lo; });
  if (lo[0] == hi[0]) throw Error(ErrorCode::degenerate_pair, "witnesses share m(0); balance system is singular");

  const T half = from_count<T>(set.sample_length()) / T(2);
  const T denom = from_count<T>(hi[0] - lo[0]);
  const T d_lo = (from_count<T>(hi[0]) - half) / denom;
  const T d_hi = (half - from_count<T>(lo[0])) / denom;

  std::size_t copies_lo = 0, copies_hi = 0;
  for (const auto& m : set.members()) {
    copies_lo += m == lo;
    copies_hi += m == hi;
  }
  std::vector<T> values(set.size(), T(0));
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] == lo) values[i] = d_lo / T(static_cast<long long>(copies_lo));
    if (set[i] == hi) values[i] = d_hi / T(static_cast<long long>(copies_hi));
  }
  return DualWeight<T>(std::move(values));
}

template <class T>
BinarySolution<T> solve_binary(const HistogramSet& set, double tol) {
  const auto kind = classify_binary(set);
  const T zero(0), one(1);

  switch (kind.tag) {
    case BinaryTag::zero_dominant: {
      Count min0 = set[0][0], max1 = set[0][1];
      for (const auto& m : set.members()) {
        min0 = std::min(min0, m[0]);
        max1 = std::max(max1, m[1]);
      }
      auto [sup_dual, cov_dual] = binary_dual_case1<T>(set);
      return {kind,
              make_solution<T>(set, Problem::supporting, from_count<T>(min0), {one, zero}, std::move(sup_dual),
                               true, tol),
              make_solution<T>(set, Problem::covering, from_count<T>(max1), {zero, one}, std::move(cov_dual),
                               true, tol)};
    }
    case BinaryTag::one_dominant: {
      // Relabel, apply the m(0)-dominant closed form, relabel back.
      const auto flipped = solve_binary<T>(swapped(set), tol);
      auto unflip = [&](const GameSolution<T>& s) {
        const auto& w = s.weight;
        return make_solution<T>(set, s.mode, s.alpha, {w[1], w[0]}, s.dual, true, tol);
      };
      return {kind, unflip(flipped.supporting), unflip(flipped.covering)};
    }
    case BinaryTag::mixed: {
      const T half = from_count<T>(set.sample_length()) / T(2);
      const T mid = one / T(2);
      const auto dual = binary_dual_case2<T>(set, *kind.witnesses);
      // (1/2, 1/2) is the only optimum unless one side has no strict member,
      // in which case the balanced members leave a flat segment.
      bool strict_rise = false, strict_fall = false;
      for (const auto& m : set.members()) {
        strict_rise = strict_rise || m[1] > m[0];
        strict_fall = strict_fall || m[0] > m[1];
      }
      const bool unique = strict_rise && strict_fall;
      return {kind, make_solution<T>(set, Problem::supporting, half, {mid, mid}, dual, unique, tol),
              make_solution<T>(set, Problem::covering, half, {mid, mid}, dual, unique, tol)};
    }
  }
  throw Error(ErrorCode::wrong_case, "unreachable binary case");
}

template std::pair<DualWeight<Rational>, DualWeight<Rational>> binary_dual_case1<Rational>(const HistogramSet&);
template std::pair<DualWeight<double>, DualWeight<double>> binary_dual_case1<double>(const HistogramSet&);
template DualWeight<Rational> binary_dual_case2<Rational>(const HistogramSet&, const Witnesses&);
template DualWeight<double> binary_dual_case2<double>(const HistogramSet&, const Witnesses&);
template BinarySolution<Rational> solve_binary<Rational>(const HistogramSet&, double);
template BinarySolution<double> solve_binary<double>(const HistogramSet&, double);

}  // namespace histrel

#include "histrel/oracle.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace histrel {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Solves the square system A z = rhs by Gauss-Jordan elimination; nullopt
// when A is singular.
std::optional<std::vector<Rational>> solve_square(Matrix a, std::vector<Rational> rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational p = a[col][col];
    for (auto& v : a[col]) v /= p;
    rhs[col] /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

// Equalizing strategy on `support` against the opposing support `opposing`:
// payoff(o, s) for s in support, o in opposing. Returns (strategy, value).
template <class Payoff>
std::optional<std::pair<std::vector<Rational>, Rational>> equalize(const std::vector<std::size_t>& support,
                                                                   const std::vector<std::size_t>& opposing,
                                                                   Payoff payoff) {
  const std::size_t s = support.size();
  Matrix a(s + 1, std::vector<Rational>(s + 1, Rational(0)));
  std::vector<Rational> rhs(s + 1, Rational(0));
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < s; ++c) a[r][c] = Rational(static_cast<long long>(payoff(opposing[r], support[c])));
    a[r][s] = Rational(-1);
  }
  for (std::size_t c = 0; c < s; ++c) a[s][c] = Rational(1);
  rhs[s] = Rational(1);
  auto z = solve_square(std::move(a), std::move(rhs));
  if (!z) return std::nullopt;
  Rational value = z->back();
  z->pop_back();
  return std::make_pair(std::move(*z), std::move(value));
}

// Calls f on every k-subset of {0..n-1} in lexicographic order until f
// returns true.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

GameSolution<Rational> oracle_solve(const HistogramSet& set, Problem mode) {
  const auto dedup = set.deduplicated();
  const auto& rows = dedup.members;
  const std::size_t n = set.alphabet().size();
  const std::size_t k = rows.size();
  if (n > kOracleMaxSymbols || k > kOracleMaxMembers)
    throw Error(ErrorCode::cap_exceeded, "support enumeration is capped at " + std::to_string(kOracleMaxSymbols) +
                                             " symbols and " + std::to_string(kOracleMaxMembers) + " members");
  const bool supporting = mode == Problem::supporting;

  std::optional<GameSolution<Rational>> found;
  for (std::size_t size = 1; size <= std::min(n, k) && !found; ++size) {
    for_each_subset(n, size, [&](const std::vector<std::size_t>& symbols) {
      return for_each_subset(k, size, [&](const std::vector<std::size_t>& members) {
        auto x = equalize(symbols, members, [&](std::size_t i, std::size_t v) { return rows[i][v]; });
        if (!x) return false;
        auto d = equalize(members, symbols, [&](std::size_t v, std::size_t i) { return rows[i][v]; });
        if (!d) return false;
        const auto& [xs, alpha] = *x;
        const auto& [ds, beta] = *d;
        if (alpha != beta) return false;
        if (std::any_of(xs.begin(), xs.end(), [](const Rational& r) { return r < 0; })) return false;
        if (std::any_of(ds.begin(), ds.end(), [](const Rational& r) { return r < 0; })) return false;

        std::vector<Rational> weight(n, Rational(0));
        for (std::size_t j = 0; j < size; ++j) weight[symbols[j]] = xs[j];
        std::vector<Rational> dual(k, Rational(0));
        for (std::size_t j = 0; j < size; ++j) dual[members[j]] = ds[j];

        for (const auto& row : rows) {
          Rational value(0);
          for (std::size_t v = 0; v < n; ++v) value += weight[v] * Rational(static_cast<long long>(row[v]));
          if (supporting ? value < alpha : value > alpha) return false;
        }
        for (std::size_t v = 0; v < n; ++v) {
          Rational column(0);
          for (std::size_t i = 0; i < k; ++i) column += dual[i] * Rational(static_cast<long long>(rows[i][v]));
          if (supporting ? column > alpha : column < alpha) return false;
        }

        ReductionTrace trace;
        for (std::size_t v = 0; v < n; ++v) trace.surviving.push_back(v);
        found = assemble_solution<Rational>(set, mode, alpha, std::move(weight), dual, dedup, std::move(trace), 0.0);
        return true;
      });
    });
  }
  if (!found) throw Error(ErrorCode::numerical_failure, "support enumeration found no equilibrium");
  return std::move(*found);
}

Rational oracle_grid(const HistogramSet& set, Problem mode, std::size_t resolution) {
  const std::size_t n = set.alphabet().size();
  if (n > kGridMaxSymbols)
    throw Error(ErrorCode::cap_exceeded, "grid oracle is capped at " + std::to_string(kGridMaxSymbols) + " symbols");
  if (resolution == 0) throw Error(ErrorCode::invalid_argument, "grid resolution must be positive");
  const bool supporting = mode == Problem::supporting;
  const auto k = static_cast<Count>(resolution);

  // Integer pairings scaled by k; divide once at the end.
  std::optional<Count> best;
  std::vector<Count> parts(n, 0);
  auto visit = [&](auto& self, std::size_t pos, Count left) -> void {
    if (pos + 1 == n) {
      parts[pos] = left;
      std::optional<Count> worst;
      for (const auto& m : set.members()) {
        Count value = 0;
        for (std::size_t v = 0; v < n; ++v) value += parts[v] * m[v];
        if (!worst || (supporting ? value < *worst : value > *worst)) worst = value;
      }
      if (!best || (supporting ? *worst > *best : *worst < *best)) best = worst;
      return;
    }
    for (Count p = 0; p <= left; ++p) {
      parts[pos] = p;
      self(self, pos + 1, left - p);
    }
  };
  visit(visit, 0, k);
  return Rational(static_cast<long long>(*best), static_cast<long long>(k));
}

}  // namespace histrel

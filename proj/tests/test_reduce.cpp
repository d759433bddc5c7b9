#include "doctest.h"

#include "histrel/instances.hpp"
#include "histrel/lp_game.hpp"
#include "histrel/oracle.hpp"
#include "histrel/reduce.hpp"

using namespace histrel;

namespace {

const Alphabet ab({"a", "b"});
const Alphabet abc({"a", "b", "c"});
const HistogramSet e1(ab, 10, {Histogram({7, 3}), Histogram({6, 4})});
const HistogramSet e3(abc, 6, {Histogram({3, 2, 1}), Histogram({1, 2, 3})});
const HistogramSet e4(abc, 6, {Histogram({4, 1, 1}), Histogram({3, 2, 1})});

using Indices = std::vector<std::size_t>;

CountMatrix rows_of(const HistogramSet& set) {
  CountMatrix rows;
  for (const auto& m : set.members()) rows.emplace_back(m.counts().begin(), m.counts().end());
  return rows;
}

}  // namespace

TEST_CASE("general-form screen on the worked examples") {
  CHECK(reducible_symbols(rows_of(e4), Problem::supporting) == Indices{2});
  CHECK(reducible_symbols(rows_of(e4), Problem::covering) == Indices{0});
  CHECK(reducible_symbols(rows_of(e3), Problem::supporting).empty());
  CHECK(reducible_symbols(rows_of(e3), Problem::covering).empty());
  CHECK(reducible_symbols({{5}}, Problem::supporting).empty());
}

TEST_CASE("corollary screen on the worked examples") {
  CHECK(corollary_threshold_check(e4, Problem::supporting) == Indices{2});
  CHECK(corollary_threshold_check(e1, Problem::covering) == Indices{0});
  CHECK(corollary_threshold_check(e3, Problem::supporting).empty());
  CHECK(corollary_threshold_check(e3, Problem::covering).empty());
}

TEST_CASE("E4 supporting fixpoint removes c then b") {
  const auto r = reduce_fixpoint(e4, Problem::supporting);
  REQUIRE(r.trace.steps.size() == 2);
  CHECK(r.trace.steps[0] == ReductionStep{2, Problem::supporting, 1});
  CHECK(r.trace.steps[1] == ReductionStep{1, Problem::supporting, 2});
  CHECK(r.trace.surviving == Indices{0});
  CHECK(r.rows == CountMatrix{{4}, {3}});
  CHECK(solve_supporting<Rational>(e4).alpha == 3);
}

TEST_CASE("E4 covering fixpoint stops at the strict boundary") {
  const auto r = reduce_fixpoint(e4, Problem::covering);
  REQUIRE(r.trace.steps.size() == 1);
  CHECK(r.trace.steps[0].symbol == 0);
  CHECK(r.trace.surviving == Indices{1, 2});
  CHECK(r.rows == CountMatrix{{1, 1}, {2, 1}});
}

TEST_CASE("E1 supporting fixpoint leaves a") {
  const auto r = reduce_fixpoint(e1, Problem::supporting);
  CHECK(r.trace.surviving == Indices{0});
  CHECK(r.trace.passes() == 1);
  CHECK(solve_supporting<Rational>(e1).alpha == 6);
}

TEST_CASE("property: corollary screen equals the general screen on genuine histograms") {
  for (const auto& set : random_instances(21, 300, InstanceShape{2, 5, 1, 5, 1, 12}))
    for (Problem mode : {Problem::supporting, Problem::covering})
      CHECK(corollary_threshold_check(set, mode) == reducible_symbols(rows_of(set), mode));
}

TEST_CASE("property: reduction preserves alpha and eliminated symbols carry zero weight") {
  SolveOptions unreduced;
  unreduced.reduce = false;
  for (const auto& set : random_instances(22, 150, InstanceShape{2, 4, 1, 5, 1, 12})) {
    for (Problem mode : {Problem::supporting, Problem::covering}) {
      const auto r = reduce_fixpoint(set, mode);
      CHECK(r.trace.passes() + 1 <= set.alphabet().size());
      CHECK_FALSE(r.trace.surviving.empty());

      const auto full = solve_game<Rational>(set, mode, unreduced);
      const auto reduced = solve_game<Rational>(set, mode);
      CHECK(full.alpha == reduced.alpha);
      CHECK(full.alpha == oracle_solve(set, mode).alpha);
      CHECK(certify(reduced, set));
      for (const auto& step : r.trace.steps) {
        CHECK(full.weight[step.symbol] == 0);
        CHECK(reduced.weight[step.symbol] == 0);
      }
    }
  }
}

TEST_CASE("property: moving mass off a reducible symbol strictly improves the supporting value") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(0, 6);
  int exercised = 0;
  for (const auto& set : random_instances(24, 300, InstanceShape{3, 4, 1, 4, 1, 12})) {
    const auto rows = rows_of(set);
    const auto drop = reducible_symbols(rows, Problem::supporting);
    if (drop.empty()) continue;
    const std::size_t n = set.alphabet().size();
    const std::size_t w = drop.front();

    std::vector<Rational> x(n);
    Rational sum(0);
    for (auto& v : x) {
      v = Rational(num(rng));
      sum += v;
    }
    x[w] += 1;
    sum += 1;
    for (auto& v : x) v /= sum;

    // Spread x(w) evenly over the other symbols.
    std::vector<Rational> moved(n);
    for (std::size_t v = 0; v < n; ++v)
      moved[v] = v == w ? Rational(0) : x[v] + x[w] / Rational(static_cast<long long>(n - 1));

    for (const auto& m : set.members())
      CHECK(pairing<Rational>(moved, m.counts()) > pairing<Rational>(x, m.counts()));
    ++exercised;
  }
  CHECK(exercised > 20);
}

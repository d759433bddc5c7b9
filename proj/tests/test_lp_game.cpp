#include "doctest.h"

#include <cmath>

#include "histrel/instances.hpp"
#include "histrel/lp_game.hpp"
#include "histrel/oracle.hpp"

using namespace histrel;

namespace {

const Alphabet ab({"a", "b"});
const Alphabet abc({"a", "b", "c"});
const HistogramSet e1(ab, 10, {Histogram({7, 3}), Histogram({6, 4})});
const HistogramSet e2(ab, 10, {Histogram({4, 6}), Histogram({7, 3})});
const HistogramSet e3(abc, 6, {Histogram({3, 2, 1}), Histogram({1, 2, 3})});
const HistogramSet e4(abc, 6, {Histogram({4, 1, 1}), Histogram({3, 2, 1})});

Weight<Rational> rational_weight(std::initializer_list<Rational> values) { return Weight<Rational>(values); }

}  // namespace

TEST_CASE("E1 supporting and covering") {
  const auto sup = solve_supporting<Rational>(e1);
  CHECK(sup.alpha == 6);
  CHECK(sup.weight == rational_weight({1, 0}));
  CHECK(sup.dual == rational_weight({0, 1}));
  CHECK(sup.tight_members == std::vector<std::size_t>{1});
  CHECK(sup.tight_symbols == std::vector<std::size_t>{0});
  CHECK(certify(sup, e1));

  const auto cov = solve_covering<Rational>(e1);
  CHECK(cov.alpha == 4);
  CHECK(cov.weight == rational_weight({0, 1}));
  CHECK(cov.dual == rational_weight({0, 1}));
  CHECK(certify(cov, e1));
}

TEST_CASE("E2 supporting dual solves the balance equations") {
  SolveOptions no_reduce;
  no_reduce.reduce = false;
  const auto sup = solve_supporting<Rational>(e2, no_reduce);
  CHECK(sup.alpha == 5);
  CHECK(sup.dual == rational_weight({Rational(2, 3), Rational(1, 3)}));
  CHECK(sup.weight_unique);
}

TEST_CASE("E3 value is |T|/|V| in both problems") {
  const auto sup = solve_supporting<Rational>(e3);
  const auto cov = solve_covering<Rational>(e3);
  CHECK(sup.alpha == 2);
  CHECK(cov.alpha == 2);
  CHECK(certify(sup, e3));
  CHECK(certify(cov, e3));
  // (1/2, 0, 1/2) and (0, 1, 0) are both optimal.
  CHECK_FALSE(sup.weight_unique);
}

TEST_CASE("E4 covering weight is forced") {
  const auto cov = solve_covering<Rational>(e4);
  CHECK(cov.alpha == 1);
  CHECK(cov.weight == rational_weight({0, 0, 1}));
  CHECK(cov.weight_unique);
  const auto sup = solve_supporting<Rational>(e4);
  CHECK(sup.alpha == 3);
  CHECK(sup.weight == rational_weight({1, 0, 0}));
}

TEST_CASE("singleton constant member") {
  const HistogramSet single(abc, 6, {Histogram({2, 2, 2})});
  const auto sup = solve_supporting<Rational>(single);
  CHECK(sup.alpha == 2);
  CHECK(sup.dual == rational_weight({1}));
  CHECK_FALSE(sup.weight_unique);
  CHECK(certify(sup, single));
}

TEST_CASE("single-symbol alphabet") {
  const HistogramSet set(Alphabet({"x"}), 5, {Histogram({5}), Histogram({5})});
  const auto sup = solve_supporting<Rational>(set);
  const auto cov = solve_covering<Rational>(set);
  CHECK(sup.alpha == 5);
  CHECK(cov.alpha == 5);
  CHECK(sup.dual == rational_weight({Rational(1, 2), Rational(1, 2)}));
  CHECK(certify(sup, set));
  CHECK(certify(cov, set));
}

TEST_CASE("duplicates share the dual mass of their row") {
  const HistogramSet dup(ab, 10, {Histogram({7, 3}), Histogram({6, 4}), Histogram({6, 4})});
  const auto sup = solve_supporting<Rational>(dup);
  CHECK(sup.alpha == 6);
  CHECK(sup.dual == rational_weight({0, Rational(1, 2), Rational(1, 2)}));
  CHECK(sup.tight_members == std::vector<std::size_t>{1, 2});
}

TEST_CASE("certify rejects a weight that is infeasible for the claimed alpha") {
  auto bogus = solve_supporting<Rational>(e1);
  bogus.weight = rational_weight({0, 1});
  const auto report = certify(bogus, e1);
  CHECK_FALSE(report.pass);
  CHECK(report.violated_clause == "primal-feasibility");
  CHECK(report.max_violation == doctest::Approx(3.0));
}

TEST_CASE("certify rejects a dual that does not price out") {
  // D = (7, 3) under this dual, so min_v D(v) = 3 falls short of alpha = 4.
  auto bogus = solve_covering<Rational>(e1);
  bogus.dual = rational_weight({1, 0});
  const auto report = certify(bogus, e1);
  CHECK_FALSE(report.pass);
  CHECK(report.violated_clause == "dual-complementary-slackness");
}

TEST_CASE("oracle solutions self-certify on E3") {
  CHECK(certify(oracle_solve(e3, Problem::supporting), e3));
  CHECK(certify(oracle_solve(e3, Problem::covering), e3));
}

TEST_CASE("float mode agrees with rational mode") {
  for (const auto& set : random_instances(11, 60, InstanceShape{2, 4, 1, 5, 1, 12})) {
    for (Problem mode : {Problem::supporting, Problem::covering}) {
      const auto exact = solve_game<Rational>(set, mode);
      const auto approx = solve_game<double>(set, mode);
      CHECK(std::fabs(approx.alpha - to_double(exact.alpha)) <= 1e-6);
      CHECK(certify(approx, set));
    }
  }
}

TEST_CASE("property: bounds, feasibility, tightness and certificates on random instances") {
  for (const auto& set : random_instances(3, 150, InstanceShape{1, 4, 1, 5, 1, 12})) {
    const Rational uniform(static_cast<long long>(set.sample_length()), static_cast<long long>(set.alphabet().size()));
    const auto sup = solve_supporting<Rational>(set);
    const auto cov = solve_covering<Rational>(set);
    CHECK(sup.alpha >= uniform);
    CHECK(cov.alpha <= uniform);
    for (const auto& m : set.members()) {
      CHECK(pairing(sup.weight, m) >= sup.alpha);
      CHECK(pairing(cov.weight, m) <= cov.alpha);
    }
    CHECK_FALSE(sup.tight_members.empty());
    CHECK_FALSE(cov.tight_members.empty());
    CHECK(certify(sup, set));
    CHECK(certify(cov, set));

    const auto sup_cols = dual_column_values(sup.dual, set);
    const auto cov_cols = dual_column_values(cov.dual, set);
    CHECK(*std::max_element(sup_cols.begin(), sup_cols.end()) == sup.alpha);
    CHECK(*std::min_element(cov_cols.begin(), cov_cols.end()) == cov.alpha);

    CHECK(solve_supporting<Rational>(set) == sup);
  }
}

TEST_CASE("weight_unique agrees with a second optimal vertex search") {
  // When the face is a point, no other weight on the simplex grid attains alpha.
  for (const auto& set : random_instances(5, 60, InstanceShape{2, 3, 1, 4, 1, 8})) {
    for (Problem mode : {Problem::supporting, Problem::covering}) {
      const auto s = solve_game<Rational>(set, mode);
      bool other_optimum = false;
      const std::size_t n = set.alphabet().size();
      const long long k = 12;
      std::vector<long long> parts(n, 0);
      auto visit = [&](auto& self, std::size_t pos, long long left) -> void {
        if (pos + 1 == n) {
          parts[pos] = left;
          std::vector<Rational> x(n);
          for (std::size_t v = 0; v < n; ++v) x[v] = Rational(parts[v], k);
          Rational worst = pairing<Rational>(x, set[0].counts());
          for (const auto& m : set.members()) {
            const auto p = pairing<Rational>(x, m.counts());
            worst = mode == Problem::supporting ? std::min(worst, p) : std::max(worst, p);
          }
          if (worst == s.alpha && x != std::vector<Rational>(s.weight.values().begin(), s.weight.values().end()))
            other_optimum = true;
          return;
        }
        for (long long p = 0; p <= left; ++p) {
          parts[pos] = p;
          self(self, pos + 1, left - p);
        }
      };
      visit(visit, 0, k);
      if (s.weight_unique) CHECK_FALSE(other_optimum);
    }
  }
}

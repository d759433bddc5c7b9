#include "doctest.h"

#include <random>

#include "histrel/binary.hpp"
#include "histrel/instances.hpp"

using namespace histrel;

namespace {

const Alphabet bits({"0", "1"});

HistogramSet binary(Count length, std::vector<std::pair<Count, Count>> members) {
  std::vector<Histogram> hs;
  for (auto [a, b] : members) hs.emplace_back(std::vector<Count>{a, b});
  return HistogramSet(bits, length, std::move(hs));
}

Weight<Rational> w(std::initializer_list<Rational> values) { return Weight<Rational>(values); }

const HistogramSet e1 = binary(10, {{7, 3}, {6, 4}});
const HistogramSet e2 = binary(10, {{4, 6}, {7, 3}});

}  // namespace

TEST_CASE("classification examples") {
  CHECK(classify_binary(e1).tag == BinaryTag::zero_dominant);
  CHECK_FALSE(classify_binary(e1).witnesses);

  const auto mixed = classify_binary(e2);
  CHECK(mixed.tag == BinaryTag::mixed);
  CHECK(*mixed.witnesses == Witnesses{0, 1});

  const auto balanced = classify_binary(binary(10, {{5, 5}}));
  CHECK(balanced.tag == BinaryTag::mixed);
  CHECK(*balanced.witnesses == Witnesses{0, 0});

  CHECK(classify_binary(binary(10, {{3, 7}, {2, 8}})).tag == BinaryTag::one_dominant);
  CHECK_THROWS_AS(classify_binary(HistogramSet(Alphabet({"a", "b", "c"}), 3, {Histogram({1, 1, 1})})), Error);
}

TEST_CASE("witness selection prefers a balanced member, else extreme members") {
  const auto c = classify_binary(binary(10, {{4, 6}, {2, 8}, {7, 3}, {9, 1}}));
  CHECK(*c.witnesses == Witnesses{1, 3});
  const auto b = classify_binary(binary(10, {{4, 6}, {5, 5}, {9, 1}}));
  CHECK(*b.witnesses == Witnesses{1, 1});
}

TEST_CASE("E1 closed form") {
  const auto s = solve_binary<Rational>(e1);
  CHECK(s.supporting.alpha == 6);
  CHECK(s.supporting.weight == w({1, 0}));
  CHECK(s.covering.alpha == 4);
  CHECK(s.covering.weight == w({0, 1}));
  CHECK(s.supporting.dual == w({0, 1}));
  CHECK(s.covering.dual == w({0, 1}));
  CHECK(certify(s.supporting, e1));
  CHECK(certify(s.covering, e1));
}

TEST_CASE("E2 closed form") {
  const auto s = solve_binary<Rational>(e2);
  CHECK(s.supporting.alpha == 5);
  CHECK(s.covering.alpha == 5);
  CHECK(s.supporting.weight == w({Rational(1, 2), Rational(1, 2)}));
  CHECK(s.covering.weight == s.supporting.weight);
  CHECK(s.supporting.dual == w({Rational(2, 3), Rational(1, 3)}));
  CHECK(certify(s.supporting, e2));
  CHECK(certify(s.covering, e2));
}

TEST_CASE("one-dominant sets are handled by relabeling") {
  const auto set = binary(10, {{3, 7}, {2, 8}});
  const auto s = solve_binary<Rational>(set);
  CHECK(s.supporting.alpha == 7);
  CHECK(s.supporting.weight == w({0, 1}));
  CHECK(s.covering.alpha == 3);
  CHECK(s.covering.weight == w({1, 0}));
  CHECK(certify(s.supporting, set));
  CHECK(certify(s.covering, set));
  const auto lp_sup = solve_supporting<Rational>(set);
  const auto lp_cov = solve_covering<Rational>(set);
  CHECK(lp_sup.alpha == 7);
  CHECK(lp_cov.alpha == 3);
}

TEST_CASE("case 1 duals") {
  const auto [sup, cov] = binary_dual_case1<Rational>(e1);
  CHECK(sup == w({0, 1}));
  CHECK(cov == w({0, 1}));

  const auto dup = binary(10, {{7, 3}, {7, 3}, {6, 4}});
  CHECK(binary_dual_case1<Rational>(dup).first == w({0, 0, 1}));
  const auto tie = binary(10, {{6, 4}, {6, 4}});
  CHECK(binary_dual_case1<Rational>(tie).first == w({Rational(1, 2), Rational(1, 2)}));

  CHECK_THROWS_AS(binary_dual_case1<Rational>(e2), Error);
}

TEST_CASE("case 2 duals") {
  CHECK(binary_dual_case2<Rational>(e2, {0, 1}) == w({Rational(2, 3), Rational(1, 3)}));
  CHECK(binary_dual_case2<Rational>(binary(10, {{5, 5}}), {0, 0}) == w({1}));
  CHECK(binary_dual_case2<Rational>(binary(10, {{2, 8}, {8, 2}}), {0, 1}) == w({Rational(1, 2), Rational(1, 2)}));
  CHECK_THROWS_AS(binary_dual_case2<Rational>(e2, {1, 0}), Error);
}

TEST_CASE("odd sample length keeps |T|/2 exact") {
  const auto set = binary(7, {{2, 5}, {6, 1}});
  const auto s = solve_binary<Rational>(set);
  CHECK(s.supporting.alpha == Rational(7, 2));
  CHECK(s.covering.alpha == Rational(7, 2));
  CHECK(certify(s.supporting, set));
}

TEST_CASE("float closed form matches rational") {
  const auto exact = solve_binary<Rational>(e2);
  const auto approx = solve_binary<double>(e2);
  CHECK(approx.supporting.alpha == doctest::Approx(5.0));
  CHECK(approx.supporting.dual[0] == doctest::Approx(to_double(exact.supporting.dual[0])));
}

TEST_CASE("property: classification is exclusive and exhaustive, closed form matches LP") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Count length = std::uniform_int_distribution<Count>(1, 20)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<std::pair<Count, Count>> ms;
    for (std::size_t i = 0; i < k; ++i) {
      const Count a = std::uniform_int_distribution<Count>(0, length)(rng);
      ms.emplace_back(a, length - a);
    }
    const auto set = binary(length, ms);
    const auto c = classify_binary(set);

    const bool all_zero = std::all_of(ms.begin(), ms.end(), [](auto p) { return p.first > p.second; });
    const bool all_one = std::all_of(ms.begin(), ms.end(), [](auto p) { return p.second > p.first; });
    const bool rising = std::any_of(ms.begin(), ms.end(), [](auto p) { return p.second >= p.first; });
    const bool falling = std::any_of(ms.begin(), ms.end(), [](auto p) { return p.second <= p.first; });
    CHECK(int(all_zero) + int(all_one) + int(rising && falling) == 1);
    CHECK((c.tag == BinaryTag::zero_dominant) == all_zero);
    CHECK((c.tag == BinaryTag::one_dominant) == all_one);
    if (c.tag == BinaryTag::mixed) {
      const auto& m1 = set[c.witnesses->rising];
      const auto& m2 = set[c.witnesses->falling];
      CHECK(m1[1] >= m1[0]);
      CHECK(m2[1] <= m2[0]);
    }

    const auto s = solve_binary<Rational>(set);
    const auto lp_sup = solve_supporting<Rational>(set);
    const auto lp_cov = solve_covering<Rational>(set);
    CHECK(s.supporting.alpha == lp_sup.alpha);
    CHECK(s.covering.alpha == lp_cov.alpha);
    if (s.supporting.weight_unique) CHECK(s.supporting.weight == lp_sup.weight);
    if (s.covering.weight_unique) CHECK(s.covering.weight == lp_cov.weight);
    CHECK(s.supporting.weight_unique == lp_sup.weight_unique);
    CHECK(certify(s.supporting, set));
    CHECK(certify(s.covering, set));

    const Rational half(length, 2);
    CHECK(s.supporting.alpha >= half);
    CHECK(s.covering.alpha <= half);

    if (c.tag == BinaryTag::mixed) {
      const auto cols = dual_column_values(s.supporting.dual, set);
      CHECK(cols[0] == half);
      CHECK(cols[1] == half);
    }
    if (c.tag == BinaryTag::zero_dominant) {
      const auto cols = dual_column_values(s.supporting.dual, set);
      Count min0 = set[0][0];
      for (const auto& m : set.members()) min0 = std::min(min0, m[0]);
      CHECK(cols[0] == min0);
    }
  }
}

#include "histrel/lp_game.hpp"

#include <algorithm>
#include <cmath>

namespace histrel {
namespace {

CountMatrix to_rows(const std::vector<Histogram>& members) {
  CountMatrix rows;
  rows.reserve(members.size());
  for (const auto& m : members) rows.emplace_back(m.counts().begin(), m.counts().end());
  return rows;
}

// Float-mode cleanup of a vector that should be a weight: tiny negatives
// become zero and the remainder is renormalized. Exact values pass through.
template <class T>
std::vector<T> settle(std::vector<T> v, double tol) {
  if constexpr (arithmetic_of<T> == Arithmetic::floating) {
    T sum(0);
    for (auto& x : v) {
      if (x < 0 && x > -tol) x = 0;
      sum += x;
    }
    if (sum > 0)
      for (auto& x : v) x /= sum;
  } else {
    (void)tol;
  }
  return v;
}

template <class T>
double magnitude(const T& v) {
  return std::fabs(to_double(v));
}

}  // namespace

template <class T>
StandardFormLp<T> build_game_lp(const CountMatrix& rows, Problem mode) {
  const std::size_t k = rows.size();
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  const std::size_t cols = n + 2 + k;
  const bool supporting = mode == Problem::supporting;

  StandardFormLp<T> lp;
  lp.a.assign(k + 1, std::vector<T>(cols, T(0)));
  lp.b.assign(k + 1, T(0));
  lp.c.assign(cols, T(0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = 0; v < n; ++v) {
      const T coeff = from_count<T>(rows[i][v]);
      lp.a[i][v] = supporting ? T(-coeff) : coeff;
    }
    lp.a[i][n] = supporting ? T(1) : T(-1);
    lp.a[i][n + 1] = supporting ? T(-1) : T(1);
    lp.a[i][n + 2 + i] = T(1);
  }
  for (std::size_t v = 0; v < n; ++v) lp.a[k][v] = T(1);
  lp.b[k] = T(1);
  lp.c[n] = supporting ? T(1) : T(-1);
  lp.c[n + 1] = supporting ? T(-1) : T(1);
  return lp;
}

template <class T>
DualWeight<T> extract_dual(const BasicSolution<T>& lp, std::size_t member_count, double tol) {
  std::vector<T> values(lp.dual.begin(), lp.dual.begin() + static_cast<std::ptrdiff_t>(member_count));
  return DualWeight<T>(settle(std::move(values), tol), tol);
}

template <class T>
GameSolution<T> assemble_solution(const HistogramSet& set, Problem mode, T alpha, std::vector<T> weight,
                                  const std::vector<T>& unique_dual, const HistogramSet::Deduplicated& dedup,
                                  ReductionTrace trace, double tol) {
  GameSolution<T> out;
  out.mode = mode;
  out.alpha = std::move(alpha);
  out.weight = Weight<T>(settle(std::move(weight), tol), tol);

  std::vector<T> dual(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const std::size_t u = dedup.index_of[i];
    dual[i] = unique_dual[u] / T(static_cast<long long>(dedup.multiplicity[u]));
  }
  out.dual = DualWeight<T>(std::move(dual), tol);

  for (std::size_t i = 0; i < set.size(); ++i)
    if (approx_equal(pairing(out.weight, set[i]), out.alpha, tol)) out.tight_members.push_back(i);
  for (std::size_t v = 0; v < out.weight.size(); ++v)
    if (is_positive(out.weight[v], tol)) out.tight_symbols.push_back(v);
  out.reduction_trace = std::move(trace);
  return out;
}

template <class T>
bool optimal_weight_is_unique(const CountMatrix& rows, Problem mode, const T& alpha,
                              const std::vector<T>& weight, const SolveOptions& options) {
  const std::size_t k = rows.size();
  const std::size_t n = weight.size();
  if (n <= 1) return true;
  const bool supporting = mode == Problem::supporting;

  T level = alpha;
  if constexpr (arithmetic_of<T> == Arithmetic::floating) {
    const double slack = options.tol * std::max(1.0, std::fabs(alpha));
    level = supporting ? alpha - slack : alpha + slack;
  }

  // Optimal face: (x, m) >= alpha (supporting) or <= alpha (covering), x in the simplex.
  StandardFormLp<T> lp;
  lp.a.assign(k + 1, std::vector<T>(n + k, T(0)));
  lp.b.assign(k + 1, level);
  lp.c.assign(n + k, T(0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = 0; v < n; ++v) lp.a[i][v] = from_count<T>(rows[i][v]);
    lp.a[i][n + i] = supporting ? T(-1) : T(1);
  }
  for (std::size_t v = 0; v < n; ++v) lp.a[k][v] = T(1);
  lp.b[k] = T(1);

  const double compare_tol = arithmetic_of<T> == Arithmetic::floating ? 1e-6 : 0.0;
  const SimplexOptions simplex{options.tol, options.iteration_cap};
  for (std::size_t v = 0; v < n; ++v) {
    for (int direction : {1, -1}) {
      lp.c[v] = T(direction);
      const auto sol = simplex_optimize(lp, simplex);
      const T extreme = direction > 0 ? sol.objective : T(-sol.objective);
      if (!approx_equal(extreme, weight[v], compare_tol)) return false;
    }
    lp.c[v] = T(0);
  }
  return true;
}

template <class T>
GameSolution<T> solve_game(const HistogramSet& set, Problem mode, const SolveOptions& options) {
  const auto dedup = set.deduplicated();
  const CountMatrix unique_rows = to_rows(dedup.members);
  const std::size_t k = unique_rows.size();
  const std::size_t full_n = set.alphabet().size();

  ReducedProblem reduced;
  if (options.reduce) {
    reduced = reduce_fixpoint(unique_rows, mode);
  } else {
    reduced.rows = unique_rows;
    for (std::size_t v = 0; v < full_n; ++v) reduced.trace.surviving.push_back(v);
  }
  const auto& surviving = reduced.trace.surviving;

  T alpha;
  std::vector<T> reduced_weight;
  std::vector<T> unique_dual(k, T(0));
  bool unique = true;

  if (surviving.size() == 1) {
    // The restricted simplex is a single point.
    Count best = reduced.rows[0][0];
    for (const auto& row : reduced.rows)
      best = mode == Problem::supporting ? std::min(best, row[0]) : std::max(best, row[0]);
    alpha = from_count<T>(best);
    reduced_weight = {T(1)};
    std::size_t achieving = 0;
    for (const auto& row : reduced.rows) achieving += row[0] == best;
    for (std::size_t i = 0; i < k; ++i)
      if (reduced.rows[i][0] == best) unique_dual[i] = T(1) / T(static_cast<long long>(achieving));
  } else {
    const auto lp = build_game_lp<T>(reduced.rows, mode);
    const auto sol = simplex_optimize(lp, SimplexOptions{options.tol, options.iteration_cap});
    alpha = mode == Problem::supporting ? sol.objective : T(-sol.objective);
    reduced_weight.assign(sol.primal.begin(), sol.primal.begin() + static_cast<std::ptrdiff_t>(surviving.size()));
    reduced_weight = settle(std::move(reduced_weight), options.tol);
    const auto dual = extract_dual(sol, k, options.tol);
    unique_dual.assign(dual.values().begin(), dual.values().end());
    if (options.check_uniqueness)
      unique = optimal_weight_is_unique(reduced.rows, mode, alpha, reduced_weight, options);
  }

  std::vector<T> weight(full_n, T(0));
  for (std::size_t j = 0; j < surviving.size(); ++j) weight[surviving[j]] = reduced_weight[j];

  auto out = assemble_solution(set, mode, std::move(alpha), std::move(weight), unique_dual, dedup,
                               std::move(reduced.trace), options.tol);
  out.weight_unique = unique;
  return out;
}

template <class T>
std::vector<T> dual_column_values(const DualWeight<T>& dual, const HistogramSet& set) {
  std::vector<T> columns(set.alphabet().size(), T(0));
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (dual[i] == 0) continue;
    for (std::size_t v = 0; v < columns.size(); ++v)
      if (set[i][v] != 0) columns[v] += dual[i] * from_count<T>(set[i][v]);
  }
  return columns;
}

template <class T>
CertificateReport certify(const GameSolution<T>& solution, const HistogramSet& set, double tol) {
  CertificateReport report;
  auto fail = [&](const char* clause, double amount) {
    if (report.pass) {
      report.pass = false;
      report.violated_clause = clause;
    }
    report.max_violation = std::max(report.max_violation, amount);
  };

  const auto& x = solution.weight;
  const auto& d = solution.dual;
  if (x.size() != set.alphabet().size()) {
    fail("weight-shape", 0.0);
    return report;
  }
  if (d.size() != set.size()) {
    fail("dual-shape", 0.0);
    return report;
  }

  T sum_x(0);
  for (const auto& v : x.values()) {
    if (definitely_less(v, T(0), tol)) fail("weight-nonnegative", magnitude(v));
    sum_x += v;
  }
  if (!approx_equal(sum_x, T(1), tol)) fail("weight-normalized", magnitude(T(sum_x - 1)));

  T sum_d(0);
  for (const auto& v : d.values()) {
    if (definitely_less(v, T(0), tol)) fail("dual-nonnegative", magnitude(v));
    sum_d += v;
  }
  if (!approx_equal(sum_d, T(1), tol)) fail("dual-normalized", magnitude(T(sum_d - 1)));

  const bool supporting = solution.mode == Problem::supporting;
  const T& alpha = solution.alpha;

  // Primal feasibility for every member; equality wherever the dual is positive.
  bool any_tight = false;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const T value = pairing(x, set[i]);
    const bool violated = supporting ? definitely_less(value, alpha, tol) : definitely_less(alpha, value, tol);
    if (violated) fail("primal-feasibility", magnitude(T(value - alpha)));
    const bool tight = approx_equal(value, alpha, tol);
    any_tight = any_tight || tight;
    if (is_positive(d[i], tol) && !tight) fail("dual-complementary-slackness", magnitude(T(value - alpha)));
  }
  if (!any_tight) fail("tight-members", 0.0);

  // Dual value max_v D(v) (supporting) or min_v D(v) (covering) must equal alpha.
  const auto columns = dual_column_values(d, set);
  for (std::size_t v = 0; v < columns.size(); ++v) {
    const bool violated =
        supporting ? definitely_less(alpha, columns[v], tol) : definitely_less(columns[v], alpha, tol);
    if (violated) fail("dual-feasibility", magnitude(T(columns[v] - alpha)));
    if (is_positive(x[v], tol) && !approx_equal(columns[v], alpha, tol))
      fail("primal-complementary-slackness", magnitude(T(columns[v] - alpha)));
  }
  T dual_value = columns.front();
  for (const auto& c : columns)
    dual_value = supporting ? std::max(dual_value, c) : std::min(dual_value, c);
  if (!approx_equal(dual_value, alpha, tol)) fail("value-equality", magnitude(T(dual_value - alpha)));

  return report;
}

#define HISTREL_INSTANTIATE(T)                                                                               \
  template StandardFormLp<T> build_game_lp<T>(const CountMatrix&, Problem);                                 \
  template DualWeight<T> extract_dual<T>(const BasicSolution<T>&, std::size_t, double);                     \
  template GameSolution<T> solve_game<T>(const HistogramSet&, Problem, const SolveOptions&);                \
  template GameSolution<T> assemble_solution<T>(const HistogramSet&, Problem, T, std::vector<T>,             \
                                                const std::vector<T>&, const HistogramSet::Deduplicated&,    \
                                                ReductionTrace, double);                                     \
  template bool optimal_weight_is_unique<T>(const CountMatrix&, Problem, const T&, const std::vector<T>&,    \
                                            const SolveOptions&);                                            \
  template std::vector<T> dual_column_values<T>(const DualWeight<T>&, const HistogramSet&);                 \
  template CertificateReport certify<T>(const GameSolution<T>&, const HistogramSet&, double);

HISTREL_INSTANTIATE(Rational)
HISTREL_INSTANTIATE(double)

#undef HISTREL_INSTANTIATE

}  // namespace histrel

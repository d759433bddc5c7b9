#include "histrel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "histrel/binary.hpp"
#include "histrel/oracle.hpp"
#include "histrel/profile.hpp"

namespace histrel {
namespace {

std::string describe(const HistogramSet& set) { return to_json(set).dump(); }

double gap(const Rational& a, const Rational& b) { return std::fabs(to_double(Rational(a - b))); }

class Checks {
 public:
  PropertyResult& operator[](const std::string& name) {
    auto [it, inserted] = index_.emplace(name, results_.size());
    if (inserted) results_.push_back(PropertyResult{name});
    return results_[it->second];
  }
  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<PropertyResult> results_;
};

void check_instance(Checks& checks, const HistogramSet& set) {
  const std::string ctx = describe(set);
  const Rational uniform(static_cast<long long>(set.sample_length()), static_cast<long long>(set.alphabet().size()));

  for (Problem mode : {Problem::supporting, Problem::covering}) {
    const auto lp = solve_game<Rational>(set, mode);
    const auto oracle = oracle_solve(set, mode);
    checks["oracle-equivalence"].record(lp.alpha == oracle.alpha, gap(lp.alpha, oracle.alpha), ctx);

    const bool bound = mode == Problem::supporting ? lp.alpha >= uniform : lp.alpha <= uniform;
    checks["alpha-bounds"].record(bound, bound ? 0.0 : gap(lp.alpha, uniform), ctx);

    const auto cert = certify(lp, set);
    checks["lp-certificate"].record(cert.pass, cert.max_violation, ctx + " " + cert.violated_clause);
    const auto ocert = certify(oracle, set);
    checks["oracle-certificate"].record(ocert.pass, ocert.max_violation, ctx + " " + ocert.violated_clause);

    const auto first_pass = reduce_fixpoint(set, mode);
    CountMatrix rows;
    for (const auto& m : set.members()) rows.emplace_back(m.counts().begin(), m.counts().end());
    checks["reduction-screen-equivalence"].record(
        corollary_threshold_check(set, mode) == reducible_symbols(rows, mode), 0.0, ctx);

    SolveOptions unreduced_options;
    unreduced_options.reduce = false;
    const auto unreduced = solve_game<Rational>(set, mode, unreduced_options);
    checks["reduction-soundness"].record(unreduced.alpha == lp.alpha, gap(unreduced.alpha, lp.alpha), ctx);
    bool zero_on_eliminated = true;
    for (const auto& step : first_pass.trace.steps)
      zero_on_eliminated = zero_on_eliminated && unreduced.weight[step.symbol] == 0 && lp.weight[step.symbol] == 0;
    checks["reduction-zero-weight"].record(zero_on_eliminated, 0.0, ctx);

    const auto approx = solve_game<double>(set, mode);
    const double diff = std::fabs(approx.alpha - to_double(lp.alpha));
    checks["float-agreement"].record(diff <= 1e-6, diff, ctx);
  }

  const auto profile = build_profile<Rational>(set, "");
  const auto rows = score_samples(profile, set);
  const bool members_pass = std::all_of(rows.begin(), rows.end(), [](const auto& r) {
    return r.relevance_at_least_alpha && r.irrelevance_at_most_alpha;
  });
  checks["scoring-contract"].record(members_pass, 0.0, ctx);
}

void check_binary(Checks& checks, const HistogramSet& set) {
  const std::string ctx = describe(set);
  const auto closed = solve_binary<Rational>(set);
  for (const auto* s : {&closed.supporting, &closed.covering}) {
    const auto lp = solve_game<Rational>(set, s->mode);
    bool ok = lp.alpha == s->alpha;
    // Strict dominance and mixed sets with strict members on both sides force the weight.
    if (s->weight_unique) ok = ok && lp.weight == s->weight;
    checks["binary-closed-form"].record(ok, gap(lp.alpha, s->alpha), ctx);
    const auto cert = certify(*s, set);
    checks["binary-certificate"].record(cert.pass, cert.max_violation, ctx + " " + cert.violated_clause);
  }
}

}  // namespace

void PropertyResult::record(bool ok, double violation, const std::string& context) {
  ++total;
  if (ok) {
    ++passed;
  } else if (first_failure.empty()) {
    first_failure = context;
  }
  worst_violation = std::max(worst_violation, violation);
}

bool VerificationReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.ok(); });
}

json VerificationReport::to_json() const {
  json props = json::array();
  for (const auto& p : properties) {
    json entry{{"property", p.name},
               {"passed", p.passed},
               {"total", p.total},
               {"worst_violation", p.worst_violation}};
    if (!p.first_failure.empty()) entry["first_failure"] = p.first_failure;
    props.push_back(std::move(entry));
  }
  return json{{"all_passed", all_passed()}, {"properties", props}};
}

VerificationReport run_verification(const VerifyOptions& options) {
  Checks checks;
  for (const auto& set : random_instances(options.seed, options.trials, options.shape)) check_instance(checks, set);

  const HistogramSet e3(Alphabet({"a", "b", "c"}), 6, {Histogram({3, 2, 1}), Histogram({1, 2, 3})});
  check_instance(checks, e3);
  for (Problem mode : {Problem::supporting, Problem::covering}) {
    const Rational two(2);
    checks["e3-targeted"].record(solve_game<Rational>(e3, mode).alpha == two && oracle_solve(e3, mode).alpha == two);
  }

  if (options.binary_sweep_length > 0)
    for (const auto& set : binary_pair_sweep(options.binary_sweep_length)) check_binary(checks, set);

  return VerificationReport{checks.take()};
}

}  // namespace histrel

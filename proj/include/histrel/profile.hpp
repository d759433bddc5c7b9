#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "histrel/binary.hpp"
#include "histrel/io.hpp"
#include "histrel/lp_game.hpp"

namespace histrel {

/// Supporting and covering solutions of one histogram set, persisted as a
/// unit together with the set itself so the solutions can be re-certified.
template <class T>
struct WeightProfile {
  HistogramSet set;
  GameSolution<T> supporting;
  GameSolution<T> covering;
  std::string input_digest;
  double tol = kDefaultTolerance;
};

using AnyProfile = std::variant<WeightProfile<Rational>, WeightProfile<double>>;

/// Two-symbol alphabets use the closed form; everything else goes through
/// reduce_fixpoint and the LP.
template <class T>
WeightProfile<T> build_profile(const HistogramSet& set, std::string input_digest, const SolveOptions& options = {});

/// Throws Error(certificate_failure) when either solution fails certify or
/// the alphas violate alpha_supporting >= |T|/|V| >= alpha_covering.
template <class T>
void validate_profile(const WeightProfile<T>& profile);

template <class T>
json profile_to_json(const WeightProfile<T>& profile);

/// Parses and re-certifies.
AnyProfile profile_from_json(const json& doc);
AnyProfile load_profile(const std::filesystem::path& path);

template <class T>
struct ScoreRow {
  Histogram histogram;
  T relevance;                       // pairing with the supporting weight
  T irrelevance;                     // pairing with the covering weight
  std::optional<T> relevance_ratio;  // relevance / alpha_supporting
  std::optional<T> irrelevance_ratio;  // irrelevance / alpha_covering, absent when that alpha is 0
  bool relevance_at_least_alpha;     // relevance >= alpha_supporting
  bool irrelevance_at_most_alpha;    // irrelevance <= alpha_covering
};

/// Samples must share the profile's alphabet and sample length.
template <class T>
std::vector<ScoreRow<T>> score_samples(const WeightProfile<T>& profile, const HistogramSet& samples);

template <class T>
json score_report_to_json(const WeightProfile<T>& profile, const std::vector<ScoreRow<T>>& rows);

template <class T>
json number_to_json(const T& v);
template <class T>
T number_from_json(const json& v);

template <>
json number_to_json<Rational>(const Rational& v);
template <>
json number_to_json<double>(const double& v);
template <>
Rational number_from_json<Rational>(const json& v);
template <>
double number_from_json<double>(const json& v);

}  // namespace histrel

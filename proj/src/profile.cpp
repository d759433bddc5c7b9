#include "histrel/profile.hpp"

namespace histrel {
namespace {

constexpr std::string_view kProfileFormat = "histrel-profile/1";
constexpr std::string_view kScoreFormat = "histrel-scores/1";
constexpr std::string_view kFlagConvention =
    "convention: relevance_at_least_alpha = (relevance >= supporting alpha), "
    "irrelevance_at_most_alpha = (irrelevance <= covering alpha); both hold for every member of the profiled set";

template <class T>
json numbers_to_json(std::span<const T> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(number_to_json(v));
  return out;
}

template <class T>
std::vector<T> numbers_from_json(const json& arr) {
  std::vector<T> out;
  for (const auto& v : arr) out.push_back(number_from_json<T>(v));
  return out;
}

template <class T>
json solution_to_json(const GameSolution<T>& s, const Alphabet& alphabet) {
  json steps = json::array();
  for (const auto& step : s.reduction_trace.steps)
    steps.push_back({{"symbol", alphabet[step.symbol]}, {"pass", step.pass}});
  json surviving = json::array();
  for (std::size_t v : s.reduction_trace.surviving) surviving.push_back(alphabet[v]);
  return json{{"alpha", number_to_json(s.alpha)},
              {"weight", numbers_to_json<T>(s.weight.values())},
              {"dual", numbers_to_json<T>(s.dual.values())},
              {"tight_members", s.tight_members},
              {"tight_symbols", s.tight_symbols},
              {"weight_unique", s.weight_unique},
              {"reduction", {{"steps", steps}, {"surviving", surviving}}}};
}

template <class T>
GameSolution<T> solution_from_json(const json& doc, Problem mode, const Alphabet& alphabet, double tol) {
  auto index_of = [&](const json& label) {
    const auto idx = alphabet.find(label.get<std::string>());
    if (idx == alphabet.size()) throw ParseError(0, "reduction trace names an unknown symbol");
    return idx;
  };
  GameSolution<T> s;
  s.mode = mode;
  s.alpha = number_from_json<T>(doc.at("alpha"));
  s.weight = Weight<T>(numbers_from_json<T>(doc.at("weight")), tol);
  s.dual = DualWeight<T>(numbers_from_json<T>(doc.at("dual")), tol);
  s.tight_members = doc.at("tight_members").get<std::vector<std::size_t>>();
  s.tight_symbols = doc.at("tight_symbols").get<std::vector<std::size_t>>();
  s.weight_unique = doc.at("weight_unique").get<bool>();
  for (const auto& step : doc.at("reduction").at("steps"))
    s.reduction_trace.steps.push_back({index_of(step.at("symbol")), mode, step.at("pass").get<std::size_t>()});
  for (const auto& label : doc.at("reduction").at("surviving")) s.reduction_trace.surviving.push_back(index_of(label));
  return s;
}

template <class T>
WeightProfile<T> typed_profile_from_json(const json& doc, HistogramSet set) {
  const double tol = doc.value("tolerance", kDefaultTolerance);
  WeightProfile<T> p{std::move(set), {}, {}, doc.value("input_digest", std::string()), tol};
  p.supporting = solution_from_json<T>(doc.at("supporting"), Problem::supporting, p.set.alphabet(), tol);
  p.covering = solution_from_json<T>(doc.at("covering"), Problem::covering, p.set.alphabet(), tol);
  return p;
}

}  // namespace

template <>
json number_to_json<Rational>(const Rational& v) {
  return format_number(v);
}
template <>
json number_to_json<double>(const double& v) {
  return v;
}

template <>
Rational number_from_json<Rational>(const json& v) {
  if (!v.is_string()) throw ParseError(0, "rational values must be strings \"p/q\"");
  return parse_rational(v.get<std::string>());
}
template <>
double number_from_json<double>(const json& v) {
  if (!v.is_number()) throw ParseError(0, "float values must be JSON numbers");
  return v.get<double>();
}

template <class T>
WeightProfile<T> build_profile(const HistogramSet& set, std::string input_digest, const SolveOptions& options) {
  WeightProfile<T> p{set, {}, {}, std::move(input_digest), options.tol};
  if (set.alphabet().size() == 2) {
    auto solved = solve_binary<T>(set, options.tol);
    p.supporting = std::move(solved.supporting);
    p.covering = std::move(solved.covering);
  } else {
    p.supporting = solve_supporting<T>(set, options);
    p.covering = solve_covering<T>(set, options);
  }
  return p;
}

template <class T>
void validate_profile(const WeightProfile<T>& p) {
  for (const auto* s : {&p.supporting, &p.covering}) {
    const auto report = certify(*s, p.set, p.tol);
    if (!report)
      throw Error(ErrorCode::certificate_failure, std::string(to_string(s->mode)) +
                                                      " solution fails certification: " + report.violated_clause);
  }
  const T uniform = from_count<T>(p.set.sample_length()) / T(static_cast<long long>(p.set.alphabet().size()));
  if (definitely_less(p.supporting.alpha, uniform, p.tol) || definitely_less(uniform, p.covering.alpha, p.tol))
    throw Error(ErrorCode::certificate_failure, "profile alphas violate alpha_supporting >= |T|/|V| >= alpha_covering");
}

template <class T>
json profile_to_json(const WeightProfile<T>& p) {
  json doc = to_json(p.set);
  doc["format"] = kProfileFormat;
  doc["mode"] = to_string(arithmetic_of<T>);
  doc["tolerance"] = p.tol;
  doc["input_digest"] = p.input_digest;
  doc["supporting"] = solution_to_json(p.supporting, p.set.alphabet());
  doc["covering"] = solution_to_json(p.covering, p.set.alphabet());
  return doc;
}

AnyProfile profile_from_json(const json& doc) {
  AnyProfile out = [&]() -> AnyProfile {
    try {
      if (doc.value("format", std::string()) != kProfileFormat)
        throw ParseError(0, "not a weight profile (format tag missing or unsupported)");
      auto set = histogram_set_from_json(doc);
      if (parse_arithmetic(doc.at("mode").get<std::string>()) == Arithmetic::exact)
        return typed_profile_from_json<Rational>(doc, std::move(set));
      return typed_profile_from_json<double>(doc, std::move(set));
    } catch (const json::exception& e) {
      throw ParseError(0, std::string("malformed profile: ") + e.what());
    }
  }();
  std::visit([](const auto& p) { validate_profile(p); }, out);
  return out;
}

AnyProfile load_profile(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid profile JSON: ") + e.what());
  }
  return profile_from_json(doc);
}

template <class T>
std::vector<ScoreRow<T>> score_samples(const WeightProfile<T>& p, const HistogramSet& samples) {
  if (!(samples.alphabet() == p.set.alphabet()))
    throw Error(ErrorCode::alphabet_mismatch, "sample alphabet differs from the profile alphabet");
  if (samples.sample_length() != p.set.sample_length())
    throw LengthMismatch(0, static_cast<std::size_t>(p.set.sample_length()),
                         static_cast<std::size_t>(samples.sample_length()));

  const T& lo = p.supporting.alpha;
  const T& hi = p.covering.alpha;
  std::vector<ScoreRow<T>> rows;
  rows.reserve(samples.size());
  for (const auto& m : samples.members()) {
    ScoreRow<T> row{m, relevance_score(m, p.supporting.weight), irrelevance_score(m, p.covering.weight), {}, {},
                    false, false};
    if (!is_zero(lo, 0.0)) row.relevance_ratio = row.relevance / lo;
    if (!is_zero(hi, 0.0)) row.irrelevance_ratio = row.irrelevance / hi;
    row.relevance_at_least_alpha = !definitely_less(row.relevance, lo, p.tol);
    row.irrelevance_at_most_alpha = !definitely_less(hi, row.irrelevance, p.tol);
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
json score_report_to_json(const WeightProfile<T>& p, const std::vector<ScoreRow<T>>& rows) {
  auto optional_number = [](const std::optional<T>& v) { return v ? number_to_json(*v) : json(nullptr); };
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"histogram", std::vector<Count>(r.histogram.counts().begin(), r.histogram.counts().end())},
                   {"relevance", number_to_json(r.relevance)},
                   {"irrelevance", number_to_json(r.irrelevance)},
                   {"relevance_ratio", optional_number(r.relevance_ratio)},
                   {"irrelevance_ratio", optional_number(r.irrelevance_ratio)},
                   {"relevance_at_least_alpha", r.relevance_at_least_alpha},
                   {"irrelevance_at_most_alpha", r.irrelevance_at_most_alpha}});
  }
  json warnings = json::array();
  if (!p.supporting.weight_unique)
    warnings.push_back("supporting weight is one of several optima; relevance scores depend on that choice");
  if (!p.covering.weight_unique)
    warnings.push_back("covering weight is one of several optima; irrelevance scores depend on that choice");
  return json{{"format", kScoreFormat},
              {"mode", to_string(arithmetic_of<T>)},
              {"alphabet", p.set.alphabet().symbols()},
              {"sample_length", p.set.sample_length()},
              {"profile_digest", p.input_digest},
              {"supporting_alpha", number_to_json(p.supporting.alpha)},
              {"covering_alpha", number_to_json(p.covering.alpha)},
              {"flag_convention", kFlagConvention},
              {"warnings", warnings},
              {"rows", out}};
}

#define HISTREL_INSTANTIATE(T)                                                                     \
  template WeightProfile<T> build_profile<T>(const HistogramSet&, std::string, const SolveOptions&); \
  template void validate_profile<T>(const WeightProfile<T>&);                                      \
  template json profile_to_json<T>(const WeightProfile<T>&);                                       \
  template std::vector<ScoreRow<T>> score_samples<T>(const WeightProfile<T>&, const HistogramSet&);  \
  template json score_report_to_json<T>(const WeightProfile<T>&, const std::vector<ScoreRow<T>>&);

HISTREL_INSTANTIATE(Rational)
HISTREL_INSTANTIATE(double)

#undef HISTREL_INSTANTIATE

}  // namespace histrel

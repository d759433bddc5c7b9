#include "histrel/hist_core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace histrel {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(ErrorCode::empty_set, "alphabet must be nonempty");
  std::unordered_set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw Error(ErrorCode::parse_error, "alphabet labels must be nonempty");
    if (!seen.insert(s).second)
      throw Error(ErrorCode::invalid_argument, "duplicate alphabet label '" + s + "'");
  }
}

std::size_t Alphabet::find(std::string_view label) const {
  return static_cast<std::size_t>(std::find(symbols_.begin(), symbols_.end(), label) - symbols_.begin());
}

Histogram::Histogram(std::vector<Count> counts) : counts_(std::move(counts)) {
  for (Count c : counts_)
    if (c < 0) throw Error(ErrorCode::invalid_argument, "histogram counts must be nonnegative");
  total_ = std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

Histogram operator+(const Histogram& a, const Histogram& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::alphabet_mismatch, "histograms on different alphabets");
  std::vector<Count> sum(a.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
  return Histogram(std::move(sum));
}

Histogram build_histogram(const Sample& sample, const Alphabet& alphabet) {
  std::vector<Count> counts(alphabet.size(), 0);
  for (std::size_t pos = 0; pos < sample.size(); ++pos) {
    const auto idx = alphabet.find(sample[pos]);
    if (idx == alphabet.size()) throw UnknownSymbol(0, pos + 1, sample[pos]);
    ++counts[idx];
  }
  return Histogram(std::move(counts));
}

HistogramSet::HistogramSet(Alphabet alphabet, Count sample_length, std::vector<Histogram> members)
    : alphabet_(std::move(alphabet)), sample_length_(sample_length), members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorCode::empty_set, "histogram set is empty");
  if (sample_length_ < 1) throw Error(ErrorCode::length_mismatch, "sample length must be at least 1");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].size() != alphabet_.size())
      throw Error(ErrorCode::alphabet_mismatch,
                  "histogram " + std::to_string(i + 1) + " has " + std::to_string(members_[i].size()) +
                      " counts for an alphabet of " + std::to_string(alphabet_.size()));
    if (members_[i].total() != sample_length_)
      throw LengthMismatch(i + 1, static_cast<std::size_t>(sample_length_),
                           static_cast<std::size_t>(members_[i].total()));
  }
}

HistogramSet::Deduplicated HistogramSet::deduplicated() const {
  Deduplicated out;
  std::map<Histogram, std::size_t> seen;
  out.index_of.reserve(members_.size());
  for (const auto& m : members_) {
    auto [it, inserted] = seen.emplace(m, out.members.size());
    if (inserted) {
      out.members.push_back(m);
      out.multiplicity.push_back(0);
    }
    out.index_of.push_back(it->second);
    ++out.multiplicity[it->second];
  }
  return out;
}

template <class T>
BasicWeight<T>::BasicWeight(std::vector<T> values, double tol) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::empty_set, "weight over an empty index set");
  T sum(0);
  for (const auto& v : values_) {
    if (definitely_less(v, T(0), tol)) throw Error(ErrorCode::numerical_failure, "weight has a negative value");
    sum += v;
  }
  if (!approx_equal(sum, T(1), tol))
    throw Error(ErrorCode::numerical_failure, "weight does not sum to one (sum " + format_number(sum) + ")");
}

template <class T>
BasicWeight<T> BasicWeight<T>::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::empty_set, "weight over an empty index set");
  BasicWeight w;
  w.values_.assign(n, T(1) / T(static_cast<long long>(n)));
  return w;
}

template <class T>
BasicWeight<T> BasicWeight<T>::point_mass(std::size_t n, std::size_t at) {
  if (at >= n) throw Error(ErrorCode::invalid_argument, "point mass index out of range");
  BasicWeight w;
  w.values_.assign(n, T(0));
  w.values_[at] = T(1);
  return w;
}

template <class T>
T pairing(std::span<const T> x, std::span<const Count> m) {
  if (x.size() != m.size())
    throw Error(ErrorCode::alphabet_mismatch, "pairing of functions on alphabets of sizes " +
                                                  std::to_string(x.size()) + " and " + std::to_string(m.size()));
  T sum(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (m[i] != 0) sum += x[i] * from_count<T>(m[i]);
  return sum;
}

template class BasicWeight<Rational>;
template class BasicWeight<double>;
template Rational pairing<Rational>(std::span<const Rational>, std::span<const Count>);
template double pairing<double>(std::span<const double>, std::span<const Count>);

}  // namespace histrel

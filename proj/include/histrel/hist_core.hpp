#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "histrel/errors.hpp"
#include "histrel/number.hpp"

namespace histrel {

/// Ordered, nonempty set of distinct value labels. The construction order is
/// the canonical index order for every histogram and weight built on it.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  /// Index of `label`, or size() when absent.
  std::size_t find(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label) < size(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

using Sample = std::vector<std::string>;

/// Per-symbol occurrence counts; total() is the sample length |T|.
class Histogram {
 public:
  Histogram() = default;
  explicit Histogram(std::vector<Count> counts);

  std::size_t size() const noexcept { return counts_.size(); }
  Count operator[](std::size_t i) const { return counts_[i]; }
  std::span<const Count> counts() const noexcept { return counts_; }
  Count total() const noexcept { return total_; }

  friend Histogram operator+(const Histogram& a, const Histogram& b);
  friend bool operator==(const Histogram& a, const Histogram& b) { return a.counts_ == b.counts_; }
  friend auto operator<=>(const Histogram& a, const Histogram& b) { return a.counts_ <=> b.counts_; }

 private:
  std::vector<Count> counts_;
  Count total_ = 0;
};

Histogram build_histogram(const Sample& sample, const Alphabet& alphabet);

/// The set M: nonempty, every member on the shared alphabet with the shared
/// sample length. Members are kept in input order, duplicates included.
class HistogramSet {
 public:
  HistogramSet(Alphabet alphabet, Count sample_length, std::vector<Histogram> members);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  Count sample_length() const noexcept { return sample_length_; }
  const std::vector<Histogram>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Histogram& operator[](std::size_t i) const { return members_[i]; }

  struct Deduplicated {
    std::vector<Histogram> members;          // first-occurrence order
    std::vector<std::size_t> index_of;       // original index -> unique index
    std::vector<std::size_t> multiplicity;   // per unique member
  };
  Deduplicated deduplicated() const;

  friend bool operator==(const HistogramSet&, const HistogramSet&) = default;

 private:
  Alphabet alphabet_;
  Count sample_length_;
  std::vector<Histogram> members_;
};

/// Nonnegative values summing to one over an index set (the alphabet for a
/// Weight, the members of M for a DualWeight).
template <class T>
class BasicWeight {
 public:
  using value_type = T;
  static constexpr Arithmetic arithmetic = arithmetic_of<T>;

  BasicWeight() = default;
  /// Throws Error(numerical_failure) when a value is negative or the sum is
  /// not one (exactly for Rational, within `tol` for double).
  explicit BasicWeight(std::vector<T> values, double tol = kDefaultTolerance);

  static BasicWeight uniform(std::size_t n);
  static BasicWeight point_mass(std::size_t n, std::size_t at);

  std::size_t size() const noexcept { return values_.size(); }
  const T& operator[](std::size_t i) const { return values_[i]; }
  std::span<const T> values() const noexcept { return values_; }

  friend bool operator==(const BasicWeight&, const BasicWeight&) = default;

 private:
  std::vector<T> values_;
};

template <class T>
using Weight = BasicWeight<T>;

template <class T>
T pairing(std::span<const T> x, std::span<const Count> m);

template <class T>
T pairing(const Weight<T>& x, const Histogram& m) {
  return pairing<T>(x.values(), m.counts());
}

/// Relevance of a tested histogram under the supporting weight.
template <class T>
T relevance_score(const Histogram& tested, const Weight<T>& supporting) {
  return pairing(supporting, tested);
}

/// Irrelevance of a tested histogram under the covering weight; lower means
/// more relevant.
template <class T>
T irrelevance_score(const Histogram& tested, const Weight<T>& covering) {
  return pairing(covering, tested);
}

}  // namespace histrel

#include "histrel/simplex.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "histrel/errors.hpp"

namespace histrel {
namespace {

inline void scrub(Rational&) {}
inline void scrub(double& v) {
  if (std::fabs(v) < 1e-14) v = 0.0;
}

inline bool above(const Rational& v, double) { return v > 0; }
inline bool above(double v, double tol) { return v > tol; }

struct CapExceeded {};

template <class T>
class Tableau {
 public:
  Tableau(const StandardFormLp<T>& lp, double tol, std::size_t cap)
      : m_(lp.rows()), n_(lp.cols()), tol_(tol), cap_(cap), sign_(m_, 1) {
    const std::size_t width = n_ + m_ + 1;
    rows_.assign(m_ + 1, std::vector<T>(width, T(0)));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.a[i].size() != n_) throw Error(ErrorCode::invalid_argument, "ragged constraint matrix");
      if (lp.b[i] < 0) sign_[i] = -1;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = sign_[i] < 0 ? T(-lp.a[i][j]) : lp.a[i][j];
      rows_[i][n_ + i] = T(1);
      rows_[i][rhs()] = sign_[i] < 0 ? T(-lp.b[i]) : lp.b[i];
      basis_[i] = n_ + i;
    }
  }

  BasicSolution<T> solve(const std::vector<T>& c) {
    // Phase 1: maximize -(sum of artificials).
    auto& obj = rows_[m_];
    for (std::size_t j = 0; j <= rhs(); ++j) obj[j] = T(0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) obj[j] += rows_[i][j];
      obj[rhs()] += rows_[i][rhs()];
    }
    run(n_ + m_);
    const T infeasibility = obj[rhs()];
    if (above(infeasibility, tol_ * static_cast<double>(m_ + 1)))
      throw Error(ErrorCode::numerical_failure, "linear program is infeasible");

    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      rows_[i][rhs()] = T(0);
      for (std::size_t j = 0; j < n_; ++j) {
        if (!is_zero(rows_[i][j], tol_)) {
          pivot(i, j);
          break;
        }
      }
      // A row with no structural entry is redundant; its artificial stays
      // basic at level zero and never changes.
    }

    // Phase 2.
    for (std::size_t j = 0; j <= rhs(); ++j) {
      T value = j < n_ ? c[j] : T(0);
      for (std::size_t i = 0; i < m_; ++i)
        if (basis_[i] < n_) value -= c[basis_[i]] * rows_[i][j];
      obj[j] = value;
    }
    run(n_);

    BasicSolution<T> out;
    out.objective = -obj[rhs()];
    out.primal.assign(n_, T(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) out.primal[basis_[i]] = rows_[i][rhs()];
    out.dual.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      T y = -obj[n_ + i];
      out.dual[i] = sign_[i] < 0 ? T(-y) : y;
    }
    out.basis = basis_;
    out.iterations = iterations_;
    return out;
  }

 private:
  std::size_t rhs() const { return n_ + m_; }

  void run(std::size_t enterable) {
    auto& obj = rows_[m_];
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < enterable; ++j) {
        if (above(obj[j], tol_)) {
          entering = j;
          break;
        }
      }
      if (!entering) return;
      const std::size_t col = *entering;

      std::optional<std::size_t> leaving;
      T best_ratio(0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (!above(rows_[i][col], tol_)) continue;
        T ratio = rows_[i][rhs()] / rows_[i][col];
        if (!leaving || definitely_less(ratio, best_ratio, tol_)) {
          best_ratio = ratio;
          leaving = i;
        } else if (approx_equal(ratio, best_ratio, tol_) && basis_[i] < basis_[*leaving]) {
          leaving = i;
        }
      }
      if (!leaving) throw Error(ErrorCode::numerical_failure, "linear program is unbounded");
      if (cap_ && iterations_ >= cap_) throw CapExceeded{};
      pivot(*leaving, col);
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    ++iterations_;
    auto& prow = rows_[r];
    const T p = prow[col];
    for (auto& v : prow) v /= p;
    prow[col] = T(1);
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      auto& row = rows_[i];
      const T f = row[col];
      if (f == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (prow[j] == 0) continue;
        row[j] -= f * prow[j];
        scrub(row[j]);
      }
      row[col] = T(0);
    }
    basis_[r] = col;
  }

  std::size_t m_, n_;
  double tol_;
  std::size_t cap_;
  std::size_t iterations_ = 0;
  std::vector<int> sign_;
  std::vector<std::vector<T>> rows_;  // m_ constraint rows, then the objective row
  std::vector<std::size_t> basis_;
};

}  // namespace

template <class T>
BasicSolution<T> simplex_optimize(const StandardFormLp<T>& lp, const SimplexOptions& options) {
  if (lp.b.size() != lp.rows())
    throw Error(ErrorCode::invalid_argument, "right-hand side length differs from row count");
  if constexpr (arithmetic_of<T> == Arithmetic::exact) {
    Tableau<T> tableau(lp, options.tol, options.iteration_cap);
    try {
      return tableau.solve(lp.c);
    } catch (const CapExceeded&) {
      throw Error(ErrorCode::iteration_cap_exceeded, "simplex iteration cap exceeded");
    }
  } else {
    const std::size_t cap =
        options.iteration_cap ? options.iteration_cap : 50 * (lp.rows() + lp.cols() + 10);
    try {
      Tableau<T> tableau(lp, options.tol, cap);
      return tableau.solve(lp.c);
    } catch (const CapExceeded&) {
    }
    StandardFormLp<T> perturbed = lp;
    const double rows = static_cast<double>(lp.rows());
    for (std::size_t i = 0; i < lp.rows(); ++i)
      perturbed.b[i] += 10.0 * options.tol * (static_cast<double>(i) + 1.0) / (rows + 1.0);
    try {
      Tableau<T> tableau(perturbed, options.tol, cap);
      return tableau.solve(perturbed.c);
    } catch (const CapExceeded&) {
      throw Error(ErrorCode::iteration_cap_exceeded,
                  "simplex iteration cap of " + std::to_string(cap) + " exceeded after perturbation");
    }
  }
}

template BasicSolution<Rational> simplex_optimize(const StandardFormLp<Rational>&, const SimplexOptions&);
template BasicSolution<double> simplex_optimize(const StandardFormLp<double>&, const SimplexOptions&);

}  // namespace histrel

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/polynomial.hpp"
#include "tropcomp/rational.hpp"
#include "tropcomp/topology.hpp"

namespace tropcomp {

/// Rectangular matrix over Q with +inf.
class TropicalMatrix {
 public:
  TropicalMatrix() = default;
  TropicalMatrix(std::size_t rows, std::size_t cols, ExtRational fill = ExtRational::infinity())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static TropicalMatrix from_rows(const std::vector<std::vector<ExtRational>>& rows) {
    if (rows.empty()) return {};
    TropicalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw InvalidArgument("matrix rows have unequal length");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  ExtRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ExtRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  TropicalMatrix transposed() const {
    TropicalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Square submatrix on all rows and the given columns.
  TropicalMatrix columns(std::span<const std::size_t> cols) const {
    TropicalMatrix s(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols.size(); ++k) s(i, k) = (*this)(i, cols[k]);
    }
    return s;
  }

  friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtRational> data_;
};

/// Optimal assignment: value (min over permutations of the matched sum) and
/// one optimal permutation, row i -> column perm[i]. Empty perm when every
/// permutation hits an infinite entry.
struct Assignment {
  ExtRational value;
  std::vector<std::size_t> perm;
};

/// Hungarian algorithm (shortest augmenting paths with potentials) over exact
/// rationals. Infinite entries are replaced by a finite penalty larger than any
/// all-finite assignment; an optimum that still uses one means no finite
/// assignment exists.
inline Assignment min_cost_assignment(const TropicalMatrix& a) {
  if (!a.is_square()) {
    throw InvalidArgument("assignment needs a square matrix, got " + std::to_string(a.rows()) +
                          "x" + std::to_string(a.cols()));
  }
  const std::size_t k = a.rows();
  if (k == 0) return {ExtRational(0), {}};

  Rational lo = 0, hi = 0;
  bool any_finite = false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!a(i, j).is_finite()) continue;
      const Rational& v = a(i, j).value();
      if (!any_finite || v < lo) lo = v;
      if (!any_finite || v > hi) hi = v;
      any_finite = true;
    }
  }
  if (!any_finite) return {ExtRational::infinity(), {}};
  const Rational penalty = hi + Rational(static_cast<long>(k)) * (hi - lo) + 1;
  auto cost = [&](std::size_t i, std::size_t j) -> Rational {
    return a(i, j).is_finite() ? a(i, j).value() : penalty;
  };

  // 1-based arrays; column 0 is the virtual source.
  std::vector<Rational> u(k + 1, Rational(0)), v(k + 1, Rational(0));
  std::vector<std::size_t> p(k + 1, 0), way(k + 1, 0);
  for (std::size_t i = 1; i <= k; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(k + 1);
    std::vector<bool> used(k + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= k; ++j) {
        if (used[j]) continue;
        Rational cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= k; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  out.perm.assign(k, 0);
  for (std::size_t j = 1; j <= k; ++j) out.perm[p[j] - 1] = j - 1;
  Rational total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (!a(i, out.perm[i]).is_finite()) return {ExtRational::infinity(), {}};
    total += a(i, out.perm[i]).value();
  }
  out.value = total;
  return out;
}

/// Tropical determinant: min over permutations of sum a_{i,sigma(i)}.
inline ExtRational trop_det(const TropicalMatrix& a) { return min_cost_assignment(a).value; }

/// The minimum in the tropical determinant is attained by at least two
/// permutations. For each cell of one optimal permutation, that cell is raised
/// to +inf and the determinant recomputed; the matrix is singular iff some
/// recomputation still reaches the optimum. A matrix without any finite
/// assignment counts as singular.
inline bool is_singular(const TropicalMatrix& a) {
  auto best = min_cost_assignment(a);
  if (best.value.is_infinite()) return true;
  for (std::size_t j = 0; j < a.rows(); ++j) {
    TropicalMatrix bumped = a;
    bumped(j, best.perm[j]) = ExtRational::infinity();
    if (trop_det(bumped) == best.value) return true;
  }
  return false;
}

/// Coefficient matrix of linear polynomials: row i holds the coefficients of
/// x_1..x_n followed by the constant term, +inf where a term is absent.
inline TropicalMatrix coefficient_matrix(std::span<const TropicalPolynomial> fs, std::size_t n) {
  TropicalMatrix a(fs.size(), n + 1);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& f = fs[i];
    if (f.dimension() != n) throw InvalidArgument("coefficient_matrix: dimension mismatch");
    if (f.degree() > 1) {
      throw InvalidArgument("coefficient_matrix: polynomial " + std::to_string(i + 1) +
                            " is not linear");
    }
    for (const auto& t : f.terms()) {
      auto it = std::find(t.exponent.begin(), t.exponent.end(), 1u);
      const std::size_t col = it == t.exponent.end()
                                  ? n
                                  : static_cast<std::size_t>(it - t.exponent.begin());
      a(i, col) = t.coefficient;
    }
  }
  return a;
}

/// Calls visit(cols) for every k-subset of {0..n-1} in lexicographic order;
/// stops early when visit returns false.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!visit(std::span<const std::size_t>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Decides whether m linear tropical polynomials in n variables cut out a
/// linear tropical variety of codimension m.
///   m > n+1: never.
///   m = n+1: exactly when the prevariety is nonempty.
///   m <= n : exactly when no m x m column submatrix of the coefficient
///            matrix is tropically singular.
inline bool m_consistency_linear(std::span<const TropicalPolynomial> fs, std::size_t n,
                                 const EnumerationOptions& opts = {}) {
  const std::size_t m = fs.size();
  const TropicalMatrix a = coefficient_matrix(fs, n);
  if (m > n + 1) return false;
  if (m == n + 1) return intersect_nonempty(fs, n, opts).nonempty;
  return for_each_subset(n + 1, m, [&](std::span<const std::size_t> cols) {
    return !is_singular(a.columns(cols));
  });
}

}  // namespace tropcomp

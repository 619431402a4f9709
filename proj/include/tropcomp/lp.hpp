#pragma once

// Exact rational linear programming over closed polyhedra
//   { x in Q^n : E x = e, A x <= b }.
//
// Equalities are eliminated up front by exact Gauss-Jordan elimination, which
// parametrises the affine hull of E x = e as x = x0 + N y. Inequalities are
// rewritten over the free parameters y, and whatever is left goes through a
// two-phase tableau simplex with Bland's rule (free parameters split as
// y = u - v). Systems whose equalities pin every coordinate never reach the
// simplex at all.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/rational.hpp"

namespace tropcomp {

using Vector = std::vector<Rational>;

/// coeffs . x  (<= or =)  rhs
struct Constraint {
  Vector coeffs;
  Rational rhs;
};

struct LinearSystem {
  std::size_t n = 0;
  std::vector<Constraint> equalities;
  std::vector<Constraint> inequalities;  // coeffs . x <= rhs

  LinearSystem() = default;
  explicit LinearSystem(std::size_t dim) : n(dim) {}

  void add_equality(Vector coeffs, Rational rhs) {
    check(coeffs);
    equalities.push_back({std::move(coeffs), std::move(rhs)});
  }
  void add_inequality(Vector coeffs, Rational rhs) {
    check(coeffs);
    inequalities.push_back({std::move(coeffs), std::move(rhs)});
  }

  /// Appends every constraint of `other` (same ambient dimension).
  void merge(const LinearSystem& other) {
    if (other.n != n) throw InvalidArgument("LinearSystem::merge: dimension mismatch");
    equalities.insert(equalities.end(), other.equalities.begin(), other.equalities.end());
    inequalities.insert(inequalities.end(), other.inequalities.begin(),
                        other.inequalities.end());
  }

  /// Exact check of every constraint at x.
  bool satisfied_by(std::span<const Rational> x) const {
    if (x.size() != n) return false;
    for (const auto& c : equalities) {
      if (dot(c.coeffs, x) != c.rhs) return false;
    }
    for (const auto& c : inequalities) {
      if (dot(c.coeffs, x) > c.rhs) return false;
    }
    return true;
  }

  static Rational dot(std::span<const Rational> a, std::span<const Rational> x) {
    Rational s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (sgn(a[j]) != 0) s += a[j] * x[j];
    }
    return s;
  }

 private:
  void check(const Vector& coeffs) const {
    if (coeffs.size() != n) {
      throw InvalidArgument("constraint has " + std::to_string(coeffs.size()) +
                            " coefficients, system dimension is " + std::to_string(n));
    }
  }
};

enum class LpStatus { feasible, infeasible, unbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::feasible: return "feasible";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::optional<Vector> witness;
  std::optional<Rational> objective;

  bool is_feasible() const noexcept { return status == LpStatus::feasible; }
};

namespace detail {

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Dense tableau simplex: maximize c.z s.t. rows z = rhs, z >= 0, rhs >= 0,
/// started from a feasible basis. Bland's rule throughout.
class Tableau {
 public:
  // rows: r x m coefficient matrix, rhs: r, basis: r column indices (unit columns)
  Tableau(std::vector<Vector> rows, Vector rhs, std::vector<std::size_t> basis)
      : a_(std::move(rows)), b_(std::move(rhs)), basis_(std::move(basis)) {
    m_ = a_.empty() ? 0 : a_[0].size();
  }

  std::size_t columns() const { return m_; }
  std::size_t rows() const { return a_.size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }

  /// Runs primal simplex on objective c; returns false when unbounded.
  /// `allowed` masks columns that may enter the basis.
  bool optimize(const Vector& c, const std::vector<bool>& allowed) {
    for (;;) {
      // reduced costs d_j = c_j - c_B . column_j
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < m_ && !entering; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        Rational d = c[j];
        for (std::size_t i = 0; i < a_.size(); ++i) {
          if (!is_zero(a_[i][j]) && !is_zero(c[basis_[i]])) d -= c[basis_[i]] * a_[i][j];
        }
        if (sgn(d) > 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t j = *entering;

      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (sgn(a_[i][j]) <= 0) continue;
        Rational ratio = b_[i] / a_[i][j];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, j);
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    Rational inv = 1 / a_[r][col];
    for (auto& v : a_[r]) {
      if (!is_zero(v)) v *= inv;
    }
    b_[r] *= inv;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || is_zero(a_[i][col])) continue;
      Rational f = a_[i][col];
      for (std::size_t k = 0; k < m_; ++k) {
        if (!is_zero(a_[r][k])) a_[i][k] -= f * a_[r][k];
      }
      b_[i] -= f * b_[r];
    }
    basis_[r] = col;
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  const Vector& row(std::size_t r) const { return a_[r]; }

  Vector solution() const {
    Vector z(m_, Rational(0));
    for (std::size_t i = 0; i < basis_.size(); ++i) z[basis_[i]] = b_[i];
    return z;
  }

 private:
  bool is_basic(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  std::vector<Vector> a_;
  Vector b_;
  std::vector<std::size_t> basis_;
  std::size_t m_ = 0;
};

struct DenseLpResult {
  LpStatus status;
  Vector y;
  Rational value;
};

/// maximize c.y s.t. G y <= h with y free. G may have zero columns.
inline DenseLpResult solve_free_lp(const std::vector<Vector>& g, const Vector& h,
                                   const Vector& c) {
  const std::size_t k = c.size();
  const std::size_t r = g.size();
  if (r == 0) {
    bool zero_obj = std::all_of(c.begin(), c.end(), [](const Rational& v) { return is_zero(v); });
    if (!zero_obj) return {LpStatus::unbounded, {}, 0};
    return {LpStatus::feasible, Vector(k, Rational(0)), 0};
  }

  // columns: u (k), v (k), slack (r), artificial (one per negative rhs row)
  std::vector<std::size_t> art_row;
  for (std::size_t i = 0; i < r; ++i) {
    if (sgn(h[i]) < 0) art_row.push_back(i);
  }
  const std::size_t n_struct = 2 * k + r;
  const std::size_t m = n_struct + art_row.size();
  std::vector<Vector> rows(r, Vector(m, Rational(0)));
  Vector rhs(r);
  std::vector<std::size_t> basis(r);
  std::size_t next_art = n_struct;
  for (std::size_t i = 0; i < r; ++i) {
    const bool neg = sgn(h[i]) < 0;
    const int s = neg ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (is_zero(g[i][j])) continue;
      rows[i][j] = s * g[i][j];
      rows[i][k + j] = -s * g[i][j];
    }
    rows[i][2 * k + i] = s;
    rhs[i] = s * h[i];
    if (neg) {
      rows[i][next_art] = 1;
      basis[i] = next_art++;
    } else {
      basis[i] = 2 * k + i;
    }
  }

  Tableau t(std::move(rows), std::move(rhs), std::move(basis));

  if (!art_row.empty()) {
    Vector phase1(m, Rational(0));
    for (std::size_t j = n_struct; j < m; ++j) phase1[j] = -1;
    t.optimize(phase1, std::vector<bool>(m, true));
    Vector z = t.solution();
    for (std::size_t j = n_struct; j < m; ++j) {
      if (sgn(z[j]) != 0) return {LpStatus::infeasible, {}, 0};
    }
    // drive artificial variables out of the basis
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basis()[i] < n_struct) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_struct && !col; ++j) {
        if (!is_zero(t.row(i)[j])) col = j;
      }
      if (col) {
        t.pivot(i, *col);
        ++i;
      } else {
        t.drop_row(i);  // redundant row
      }
    }
  }

  Vector obj(m, Rational(0));
  for (std::size_t j = 0; j < k; ++j) {
    obj[j] = c[j];
    obj[k + j] = -c[j];
  }
  std::vector<bool> allowed(m, false);
  std::fill(allowed.begin(), allowed.begin() + static_cast<std::ptrdiff_t>(n_struct), true);
  if (!t.optimize(obj, allowed)) return {LpStatus::unbounded, {}, 0};

  Vector z = t.solution();
  Vector y(k);
  Rational value = 0;
  for (std::size_t j = 0; j < k; ++j) {
    y[j] = z[j] - z[k + j];
    if (!is_zero(c[j])) value += c[j] * y[j];
  }
  return {LpStatus::feasible, std::move(y), std::move(value)};
}

/// The system rewritten over the free parameters of its equality subspace.
struct ReducedSystem {
  bool infeasible = false;
  std::size_t n = 0;
  std::size_t k = 0;  // number of free parameters
  Vector x0;
  std::vector<Vector> basis;  // k direction vectors of length n
  // per original inequality: reduced row g.y <= h
  std::vector<Vector> g;
  Vector h;
  std::vector<bool> constant;  // row has g == 0

  Vector lift(std::span<const Rational> y) const {
    Vector x = x0;
    for (std::size_t f = 0; f < k; ++f) {
      if (is_zero(y[f])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(basis[f][j])) x[j] += y[f] * basis[f][j];
      }
    }
    return x;
  }

  /// Linear functional a.x as (a.N, a.x0).
  std::pair<Vector, Rational> reduce_form(std::span<const Rational> a) const {
    Vector row(k, Rational(0));
    for (std::size_t f = 0; f < k; ++f) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(a[j]) && !is_zero(basis[f][j])) row[f] += a[j] * basis[f][j];
      }
    }
    return {std::move(row), LinearSystem::dot(a, x0)};
  }
};

inline ReducedSystem reduce(const LinearSystem& sys) {
  ReducedSystem red;
  red.n = sys.n;
  const std::size_t n = sys.n;

  // Gauss-Jordan on [E | e]
  std::vector<Vector> m;
  m.reserve(sys.equalities.size());
  for (const auto& c : sys.equalities) {
    Vector row = c.coeffs;
    row.push_back(c.rhs);
    m.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
    std::optional<std::size_t> p;
    for (std::size_t i = rank; i < m.size() && !p; ++i) {
      if (!is_zero(m[i][col])) p = i;
    }
    if (!p) continue;
    std::swap(m[rank], m[*p]);
    Rational inv = 1 / m[rank][col];
    for (auto& v : m[rank]) {
      if (!is_zero(v)) v *= inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || is_zero(m[i][col])) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j <= n; ++j) {
        if (!is_zero(m[rank][j])) m[i][j] -= f * m[rank][j];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < m.size(); ++i) {
    if (!is_zero(m[i][n])) {
      red.infeasible = true;
      return red;
    }
  }

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  red.x0.assign(n, Rational(0));
  for (std::size_t i = 0; i < rank; ++i) red.x0[pivot_col[i]] = m[i][n];
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector dir(n, Rational(0));
    dir[f] = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      if (!is_zero(m[i][f])) dir[pivot_col[i]] = -m[i][f];
    }
    red.basis.push_back(std::move(dir));
  }
  red.k = red.basis.size();

  for (const auto& c : sys.inequalities) {
    auto [row, offset] = red.reduce_form(c.coeffs);
    Rational rhs = c.rhs - offset;
    bool zero = std::all_of(row.begin(), row.end(), [](const Rational& v) { return is_zero(v); });
    if (zero && sgn(rhs) < 0) {
      red.infeasible = true;
      return red;
    }
    red.g.push_back(std::move(row));
    red.h.push_back(std::move(rhs));
    red.constant.push_back(zero);
  }
  return red;
}

/// maximize c.y over the non-constant reduced rows.
inline DenseLpResult solve_reduced(const ReducedSystem& red, const Vector& c) {
  std::vector<Vector> g;
  Vector h;
  for (std::size_t i = 0; i < red.g.size(); ++i) {
    if (red.constant[i]) continue;
    g.push_back(red.g[i]);
    h.push_back(red.h[i]);
  }
  return solve_free_lp(g, h, c);
}

/// Margin LP in reduced space: maximize s s.t. g_i.y + s <= h_i for selected
/// rows, g_i.y <= h_i otherwise, s <= 1.
inline DenseLpResult margin_reduced(const ReducedSystem& red, const std::vector<bool>& selected) {
  const std::size_t k = red.k;
  std::vector<Vector> g;
  Vector h;
  for (std::size_t i = 0; i < red.g.size(); ++i) {
    if (red.constant[i] && !selected[i]) continue;
    Vector row = red.g[i];
    row.push_back(selected[i] ? Rational(1) : Rational(0));
    g.push_back(std::move(row));
    h.push_back(red.h[i]);
  }
  Vector cap(k + 1, Rational(0));
  cap[k] = 1;
  g.push_back(cap);
  h.push_back(Rational(1));
  Vector c(k + 1, Rational(0));
  c[k] = 1;
  return solve_free_lp(g, h, c);
}

}  // namespace detail

/// Finds an exact point of the system or reports infeasibility.
inline LpResult feasible(const LinearSystem& sys) {
  auto red = detail::reduce(sys);
  if (red.infeasible) return {};
  auto r = detail::solve_reduced(red, Vector(red.k, Rational(0)));
  if (r.status != LpStatus::feasible) return {};
  return {LpStatus::feasible, red.lift(r.y), std::nullopt};
}

/// maximize objective.x over the system.
inline LpResult maximize(const LinearSystem& sys, std::span<const Rational> objective) {
  if (objective.size() != sys.n) throw InvalidArgument("maximize: objective length mismatch");
  auto red = detail::reduce(sys);
  if (red.infeasible) return {};
  auto [c, offset] = red.reduce_form(objective);
  auto r = detail::solve_reduced(red, c);
  if (r.status == LpStatus::infeasible) return {};
  if (r.status == LpStatus::unbounded) return {LpStatus::unbounded, std::nullopt, std::nullopt};
  return {LpStatus::feasible, red.lift(r.y), r.value + offset};
}

/// Maximizes a common slack s <= 1 on the selected inequalities. The objective
/// is the optimal s; s > 0 certifies a point where all of them are strict.
inline LpResult maximize_margin(const LinearSystem& sys, std::span<const std::size_t> strict_idx) {
  auto red = detail::reduce(sys);
  if (red.infeasible) return {};
  std::vector<bool> selected(sys.inequalities.size(), false);
  for (auto i : strict_idx) {
    if (i >= selected.size()) throw InvalidArgument("maximize_margin: index out of range");
    selected[i] = true;
  }
  auto r = detail::margin_reduced(red, selected);
  if (r.status != LpStatus::feasible) return {};
  Rational s = r.y.back();
  r.y.pop_back();
  return {LpStatus::feasible, red.lift(r.y), s};
}

/// Affine hull description of a nonempty polyhedron.
struct AffineHull {
  int dimension = -1;
  std::vector<bool> implicit;  // per inequality: tight on the whole polyhedron
  Vector interior;             // a relative-interior point
};

/// Dimension, implicit equalities and a relative-interior point; nullopt when
/// the system is infeasible.
inline std::optional<AffineHull> affine_hull(const LinearSystem& sys) {
  auto red = detail::reduce(sys);
  if (red.infeasible) return std::nullopt;
  const std::size_t r = red.g.size();
  std::vector<bool> slack(r, false), implicit(r, false);

  auto absorb = [&](const Vector& y) {
    for (std::size_t i = 0; i < r; ++i) {
      if (slack[i] || red.constant[i]) continue;
      if (LinearSystem::dot(red.g[i], y) < red.h[i]) slack[i] = true;
    }
  };
  for (std::size_t i = 0; i < r; ++i) {
    if (!red.constant[i]) continue;
    if (sgn(red.h[i]) > 0) slack[i] = true;
    else implicit[i] = true;
  }

  // One joint margin first; it settles the common full-dimensional case.
  std::vector<bool> all(r, false);
  for (std::size_t i = 0; i < r; ++i) all[i] = !red.constant[i];
  auto joint = detail::margin_reduced(red, all);
  // the margin is free, so a negative optimum means the system itself is infeasible
  if (joint.status != LpStatus::feasible || sgn(joint.y.back()) < 0) return std::nullopt;
  if (sgn(joint.y.back()) > 0) {
    for (std::size_t i = 0; i < r; ++i) slack[i] = slack[i] || !red.constant[i];
  } else {
    joint.y.pop_back();
    absorb(joint.y);
    for (std::size_t i = 0; i < r; ++i) {
      if (slack[i] || implicit[i]) continue;
      std::vector<bool> one(r, false);
      one[i] = true;
      auto res = detail::margin_reduced(red, one);
      if (sgn(res.y.back()) > 0) {
        slack[i] = true;
        res.y.pop_back();
        absorb(res.y);
      } else {
        implicit[i] = true;
      }
    }
  }

  // rank of the implicit rows in parameter space
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < r; ++i) {
    if (implicit[i] && !red.constant[i]) rows.push_back(red.g[i]);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < red.k && rank < rows.size(); ++col) {
    std::optional<std::size_t> p;
    for (std::size_t i = rank; i < rows.size() && !p; ++i) {
      if (!detail::is_zero(rows[i][col])) p = i;
    }
    if (!p) continue;
    std::swap(rows[rank], rows[*p]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (detail::is_zero(rows[i][col])) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < red.k; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }

  // relative interior: margin on every inequality that can be slack
  std::vector<bool> strict(r, false);
  for (std::size_t i = 0; i < r; ++i) strict[i] = slack[i] && !red.constant[i];
  auto interior = detail::margin_reduced(red, strict);
  interior.y.pop_back();

  AffineHull hull;
  hull.dimension = static_cast<int>(red.k - rank);
  hull.implicit = std::move(implicit);
  hull.interior = red.lift(interior.y);
  return hull;
}

/// For each inequality index in `subset`, whether it holds with equality on the
/// whole (nonempty) polyhedron. nullopt when the system is infeasible.
inline std::optional<std::vector<bool>> implicit_equalities(const LinearSystem& sys,
                                                            std::span<const std::size_t> subset) {
  auto red = detail::reduce(sys);
  if (red.infeasible) return std::nullopt;
  const std::size_t r = red.g.size();
  std::vector<bool> todo(r, false), slack(r, false), implicit(r, false);
  for (auto i : subset) {
    if (i >= r) throw InvalidArgument("implicit_equalities: index out of range");
    if (red.constant[i]) {
      (sgn(red.h[i]) > 0 ? slack : implicit)[i] = true;
    } else {
      todo[i] = true;
    }
  }
  auto absorb = [&](const Vector& y) {
    for (std::size_t i = 0; i < r; ++i) {
      if (todo[i] && !slack[i] && LinearSystem::dot(red.g[i], y) < red.h[i]) slack[i] = true;
    }
  };
  if (std::any_of(todo.begin(), todo.end(), [](bool b) { return b; })) {
    auto joint = detail::margin_reduced(red, todo);
    if (joint.status != LpStatus::feasible || sgn(joint.y.back()) < 0) return std::nullopt;
    if (sgn(joint.y.back()) > 0) {
      for (std::size_t i = 0; i < r; ++i) slack[i] = slack[i] || todo[i];
    } else {
      joint.y.pop_back();
      absorb(joint.y);
      for (std::size_t i = 0; i < r; ++i) {
        if (!todo[i] || slack[i]) continue;
        std::vector<bool> one(r, false);
        one[i] = true;
        auto res = detail::margin_reduced(red, one);
        if (sgn(res.y.back()) > 0) {
          res.y.pop_back();
          absorb(res.y);
        } else {
          implicit[i] = true;
        }
      }
    }
  }
  std::vector<bool> out;
  out.reserve(subset.size());
  for (auto i : subset) out.push_back(implicit[i]);
  return out;
}

/// Dimension of the affine hull of the solution set, -1 when infeasible.
inline int affine_dimension(const LinearSystem& sys) {
  auto hull = affine_hull(sys);
  return hull ? hull->dimension : -1;
}

}  // namespace tropcomp

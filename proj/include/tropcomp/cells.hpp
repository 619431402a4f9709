#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/lp.hpp"
#include "tropcomp/polynomial.hpp"

namespace tropcomp {

/// One unordered pair of term indices per polynomial (first < second).
using TermPair = std::pair<std::size_t, std::size_t>;
using CellChoice = std::vector<TermPair>;

/// Closed polyhedron on which every f_i attains its minimum at the chosen pair.
struct Cell {
  CellChoice choice;
  LinearSystem system;
  Point witness;  // relative-interior point
  int dimension = -1;
};

struct EnumerationOptions {
  /// Maximum number of pair-feasibility checks before giving up.
  std::size_t cap = 10'000'000;
};

namespace detail {

inline Vector exponent_difference(const Exponent& a, const Exponent& b) {
  Vector d(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    d[j] = static_cast<long>(a[j]) - static_cast<long>(b[j]);
  }
  return d;
}

/// Appends the constraints "terms b and g attain the minimum of f" to sys.
inline void append_pair_constraints(LinearSystem& sys, const TropicalPolynomial& f,
                                    const TermPair& p) {
  const Monomial& beta = f.term(p.first);
  const Monomial& gamma = f.term(p.second);
  // c_b + b.x = c_g + g.x
  sys.add_equality(exponent_difference(beta.exponent, gamma.exponent),
                   gamma.coefficient - beta.coefficient);
  // c_b + b.x <= c_a + a.x
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (a == p.first || a == p.second) continue;
    const Monomial& alpha = f.term(a);
    sys.add_inequality(exponent_difference(beta.exponent, alpha.exponent),
                       alpha.coefficient - beta.coefficient);
  }
}

inline std::vector<TermPair> all_pairs(const TropicalPolynomial& f) {
  std::vector<TermPair> out;
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = a + 1; b < f.size(); ++b) out.emplace_back(a, b);
  }
  return out;
}

inline std::vector<std::size_t> variables_of(const TropicalPolynomial& f) {
  std::vector<std::size_t> vars;
  for (std::size_t j = 0; j < f.dimension(); ++j) {
    for (const auto& t : f.terms()) {
      if (t.exponent[j] != f.term(0).exponent[j]) {
        vars.push_back(j);
        break;
      }
    }
  }
  return vars;
}

/// Search order: polynomials whose variables are all fixed by earlier ones go
/// first, then those introducing the fewest new variables; ties prefer new
/// variables that occur in many polynomials, so shared coordinates get pinned
/// early and prune the most.
inline std::vector<std::size_t> search_order(std::span<const TropicalPolynomial> fs,
                                             std::size_t n) {
  std::vector<std::vector<std::size_t>> vars;
  vars.reserve(fs.size());
  for (const auto& f : fs) vars.push_back(variables_of(f));
  std::vector<std::size_t> occurrences(n, 0);
  for (const auto& vs : vars) {
    for (auto v : vs) ++occurrences[v];
  }
  std::vector<bool> covered(n, false), used(fs.size(), false);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < fs.size(); ++step) {
    std::optional<std::size_t> best;
    std::tuple<std::size_t, long, std::size_t, std::size_t> best_key{};
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (used[i]) continue;
      std::size_t fresh = 0;
      long reach = 0;
      for (auto v : vars[i]) {
        if (covered[v]) continue;
        ++fresh;
        reach += static_cast<long>(occurrences[v]);
      }
      auto key = std::make_tuple(fresh, -reach, vars[i].size(), i);
      if (!best || key < best_key) {
        best = i;
        best_key = key;
      }
    }
    used[*best] = true;
    for (auto v : vars[*best]) covered[v] = true;
    order.push_back(*best);
  }
  return order;
}

inline void require_dimension(std::span<const TropicalPolynomial> fs, std::size_t n) {
  for (const auto& f : fs) {
    if (f.dimension() != n) {
      throw InvalidArgument("polynomial of dimension " + std::to_string(f.dimension()) +
                            " in a system of dimension " + std::to_string(n));
    }
  }
}

enum class SearchMode {
  exact,  // every feasible choice
  cover,  // branches whose polyhedron is contained in a sibling's are dropped
};

/// Depth-first search over pair choices with infeasible-prefix pruning.
/// `visit` receives each surviving complete choice (indexed in the caller's
/// polynomial order) and its system; returning false stops the search.
class CellSearch {
 public:
  using Visitor = std::function<bool(const CellChoice&, const LinearSystem&)>;

  CellSearch(std::span<const TropicalPolynomial> fs, std::size_t n, SearchMode mode,
             const EnumerationOptions& opts)
      : fs_(fs), n_(n), mode_(mode), opts_(opts), order_(search_order(fs, n)) {
    require_dimension(fs, n);
  }

  void run(const Visitor& visit) {
    CellChoice choice(fs_.size());
    LinearSystem sys(n_);
    stopped_ = false;
    descend(0, choice, sys, visit);
  }

  std::size_t checks() const noexcept { return checks_; }

 private:
  void count_check() {
    if (++checks_ > opts_.cap) {
      throw ResourceLimit("cell enumeration exceeded the cap of " + std::to_string(opts_.cap) +
                          " feasibility checks");
    }
  }

  void descend(std::size_t depth, CellChoice& choice, const LinearSystem& sys,
               const Visitor& visit) {
    if (stopped_) return;
    if (depth == order_.size()) {
      if (!visit(choice, sys)) stopped_ = true;
      return;
    }
    const std::size_t idx = order_[depth];
    const TropicalPolynomial& f = fs_[idx];

    std::vector<TermPair> feasible_pairs;
    std::vector<LinearSystem> systems;
    for (const auto& p : all_pairs(f)) {
      count_check();
      LinearSystem next = sys;
      append_pair_constraints(next, f, p);
      if (!feasible(next).is_feasible()) continue;
      feasible_pairs.push_back(p);
      systems.push_back(std::move(next));
    }

    std::vector<bool> keep(feasible_pairs.size(), true);
    if (mode_ == SearchMode::cover && feasible_pairs.size() > 1) {
      keep = maximal_pairs(f, feasible_pairs, systems);
    }
    for (std::size_t k = 0; k < feasible_pairs.size() && !stopped_; ++k) {
      if (!keep[k]) continue;
      choice[idx] = feasible_pairs[k];
      descend(depth + 1, choice, systems[k], visit);
    }
  }

  // A pair survives unless another pair's polyhedron (given the prefix) contains
  // its own, with ties broken towards the smaller pair. Pair q's polyhedron
  // contains p's exactly when both terms of q are tight on all of p's.
  std::vector<bool> maximal_pairs(const TropicalPolynomial& f, const std::vector<TermPair>& pairs,
                                  const std::vector<LinearSystem>& systems) {
    const std::size_t count = pairs.size();
    std::vector<std::vector<bool>> tight(count, std::vector<bool>(f.size(), false));
    for (std::size_t k = 0; k < count; ++k) {
      // the pair's own inequalities are the last f.size()-2 of systems[k]
      const std::size_t total = systems[k].inequalities.size();
      const std::size_t own = f.size() - 2;
      std::vector<std::size_t> subset;
      for (std::size_t i = total - own; i < total; ++i) subset.push_back(i);
      count_check();
      auto flags = implicit_equalities(systems[k], subset);
      tight[k][pairs[k].first] = tight[k][pairs[k].second] = true;
      std::size_t pos = 0;
      for (std::size_t a = 0; a < f.size(); ++a) {
        if (a == pairs[k].first || a == pairs[k].second) continue;
        if ((*flags)[pos++]) tight[k][a] = true;
      }
    }
    std::vector<bool> keep(count, true);
    for (std::size_t k = 0; k < count; ++k) {
      for (std::size_t q = 0; q < count && keep[k]; ++q) {
        if (q == k) continue;
        const bool q_contains_k = tight[k][pairs[q].first] && tight[k][pairs[q].second];
        if (!q_contains_k) continue;
        const bool k_contains_q = tight[q][pairs[k].first] && tight[q][pairs[k].second];
        if (!k_contains_q || q < k) keep[k] = false;
      }
    }
    return keep;
  }

  std::span<const TropicalPolynomial> fs_;
  std::size_t n_;
  SearchMode mode_;
  EnumerationOptions opts_;
  std::vector<std::size_t> order_;
  std::size_t checks_ = 0;
  bool stopped_ = false;
};

inline Cell make_cell(const CellChoice& choice, const LinearSystem& sys) {
  auto hull = affine_hull(sys);
  if (!hull) throw InvalidArgument("make_cell: infeasible system");
  return Cell{choice, sys, std::move(hull->interior), hull->dimension};
}

inline std::vector<Cell> collect(std::span<const TropicalPolynomial> fs, std::size_t n,
                                 SearchMode mode, const EnumerationOptions& opts) {
  std::vector<Cell> cells;
  if (fs.empty()) return cells;
  CellSearch search(fs, n, mode, opts);
  search.run([&](const CellChoice& c, const LinearSystem& s) {
    cells.push_back(make_cell(c, s));
    return true;
  });
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return a.choice < b.choice; });
  return cells;
}

}  // namespace detail

/// The system of linear constraints describing the cell of `choice`.
inline LinearSystem cell_system(std::span<const TropicalPolynomial> fs, std::size_t n,
                                const CellChoice& choice) {
  detail::require_dimension(fs, n);
  if (choice.size() != fs.size()) throw InvalidArgument("cell_system: choice size mismatch");
  LinearSystem sys(n);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& [a, b] = choice[i];
    if (a >= b || b >= fs[i].size()) throw InvalidArgument("cell_system: invalid term pair");
    detail::append_pair_constraints(sys, fs[i], choice[i]);
  }
  return sys;
}

/// Every feasible pair choice, with witness and dimension, ordered
/// lexicographically by choice. An empty polynomial list yields no cells.
inline std::vector<Cell> enumerate_cells(std::span<const TropicalPolynomial> fs,
                                         const EnumerationOptions& opts = {}) {
  if (fs.empty()) return {};
  return detail::collect(fs, fs.front().dimension(), detail::SearchMode::exact, opts);
}

/// A subset of the feasible cells whose union is still the whole prevariety:
/// at each search step pair choices whose polyhedron lies inside a sibling's
/// are skipped.
inline std::vector<Cell> cover_cells(std::span<const TropicalPolynomial> fs,
                                     const EnumerationOptions& opts = {}) {
  if (fs.empty()) return {};
  return detail::collect(fs, fs.front().dimension(), detail::SearchMode::cover, opts);
}

/// Some point of the prevariety, or nullopt if it is empty. The empty system
/// is the whole space; its witness is the origin of R^n.
inline std::optional<Point> witness_or_empty(std::span<const TropicalPolynomial> fs,
                                             std::size_t n,
                                             const EnumerationOptions& opts = {}) {
  if (fs.empty()) return Point(n, Rational(0));
  // cover mode is complete for points: a dropped pair lies inside a kept sibling
  std::optional<Point> found;
  detail::CellSearch search(fs, n, detail::SearchMode::cover, opts);
  search.run([&](const CellChoice& c, const LinearSystem& s) {
    found = detail::make_cell(c, s).witness;
    return false;
  });
  return found;
}

inline std::optional<Point> witness_or_empty(std::span<const TropicalPolynomial> fs,
                                             const EnumerationOptions& opts = {}) {
  if (fs.empty()) throw InvalidArgument("witness_or_empty: empty system needs a dimension");
  return witness_or_empty(fs, fs.front().dimension(), opts);
}

inline int cell_dimension(const Cell& c) { return affine_dimension(c.system); }

// ---------------------------------------------------------------------------
// Regular subdivision of a planar Newton polygon

/// A face of the regular subdivision: term indices whose lifted points
/// (exponent, coefficient) lie on a common lower supporting plane.
struct SubdivisionFace {
  std::vector<std::size_t> tight_set;
  int dimension = 0;  // affine dimension of the exponents

  friend bool operator==(const SubdivisionFace&, const SubdivisionFace&) = default;
};

namespace detail {

inline int exponent_rank(const TropicalPolynomial& f, const std::vector<std::size_t>& idx) {
  if (idx.size() <= 1) return 0;
  const Exponent& base = f.term(idx[0]).exponent;
  std::vector<std::array<long, 2>> d;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const Exponent& e = f.term(idx[k]).exponent;
    d.push_back({static_cast<long>(e[0]) - static_cast<long>(base[0]),
                 static_cast<long>(e[1]) - static_cast<long>(base[1])});
  }
  bool nonzero = false;
  for (auto& v : d) nonzero = nonzero || v[0] != 0 || v[1] != 0;
  if (!nonzero) return 0;
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      if (d[a][0] * d[b][1] - d[a][1] * d[b][0] != 0) return 2;
    }
  }
  return 1;
}

}  // namespace detail

/// True iff some affine function w - u.x lies below every lifted point and
/// touches exactly `tight` (strictness certified by a positive margin).
inline bool is_lower_face(const TropicalPolynomial& f, const std::vector<std::size_t>& tight) {
  if (f.dimension() != 2) throw InvalidArgument("is_lower_face: polynomial must be bivariate");
  LinearSystem sys(3);  // (x1, x2, w)
  std::vector<bool> in(f.size(), false);
  for (auto i : tight) in.at(i) = true;
  std::vector<std::size_t> strict;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Monomial& t = f.term(i);
    Vector row{Rational(t.exponent[0]), Rational(t.exponent[1]), Rational(-1)};
    if (in[i]) {
      sys.add_equality(std::move(row), -t.coefficient);  // a.x + c_a = w
    } else {
      row[0] = -row[0];
      row[1] = -row[1];
      row[2] = 1;
      strict.push_back(sys.inequalities.size());
      sys.add_inequality(std::move(row), t.coefficient);  // w - a.x <= c_a
    }
  }
  auto r = maximize_margin(sys, strict);
  return r.is_feasible() && (strict.empty() || sgn(*r.objective) > 0);
}

/// Vertices of the planar curve T(f): 0-dimensional cells and the bounded
/// endpoints of 1-dimensional cells, deduplicated and sorted.
inline std::vector<Point> curve_vertices(const TropicalPolynomial& f,
                                         const EnumerationOptions& opts = {}) {
  if (f.dimension() != 2) throw InvalidArgument("curve_vertices: polynomial must be bivariate");
  std::set<Point> out;
  const std::vector<TropicalPolynomial> system{f};
  for (const auto& c : enumerate_cells(system, opts)) {
    if (c.dimension == 0) {
      out.insert(c.witness);
      continue;
    }
    if (c.dimension != 1) continue;
    const Vector& normal = c.system.equalities.front().coeffs;
    for (int sign : {1, -1}) {
      const Vector dir{-sign * normal[1], sign * normal[0]};
      auto r = maximize(c.system, dir);
      if (r.is_feasible()) out.insert(*r.witness);
    }
  }
  return {out.begin(), out.end()};
}

/// Maximal faces of the regular subdivision of New(f) induced by lifting each
/// exponent to its coefficient. Candidate tight sets are the argmin sets at
/// relative-interior points of the cells of T(f) and at its vertices; each
/// candidate is confirmed by `is_lower_face`.
inline std::vector<SubdivisionFace> regular_subdivision_2d(const TropicalPolynomial& f,
                                                           const EnumerationOptions& opts = {}) {
  if (f.dimension() != 2) {
    throw InvalidArgument("regular_subdivision_2d: polynomial must be bivariate");
  }
  if (f.size() == 1) return {SubdivisionFace{{0}, 0}};

  std::set<std::vector<std::size_t>> candidates;
  const std::vector<TropicalPolynomial> system{f};
  for (const auto& cell : enumerate_cells(system, opts)) {
    candidates.insert(eval(f, cell.witness).indices);
  }
  for (const auto& v : curve_vertices(f, opts)) candidates.insert(eval(f, v).indices);
  std::vector<std::vector<std::size_t>> faces;
  for (const auto& c : candidates) {
    if (is_lower_face(f, c)) faces.push_back(c);
  }
  std::vector<SubdivisionFace> out;
  for (const auto& a : faces) {
    bool maximal = std::none_of(faces.begin(), faces.end(), [&](const auto& b) {
      return b.size() > a.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    });
    if (maximal) out.push_back(SubdivisionFace{a, detail::exponent_rank(f, a)});
  }
  return out;
}

}  // namespace tropcomp

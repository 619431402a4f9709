#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropcomp/cells.hpp"
#include "tropcomp/error.hpp"
#include "tropcomp/lp.hpp"
#include "tropcomp/polynomial.hpp"

namespace tropcomp {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  std::size_t components() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) c += find(i) == i ? 1 : 0;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

/// Do two closed cells share a point?
inline bool cells_intersect(const Cell& a, const Cell& b) {
  if (a.dimension == 0 && b.dimension == 0) return a.witness == b.witness;
  if (a.dimension == 0) return b.system.satisfied_by(a.witness);
  if (b.dimension == 0) return a.system.satisfied_by(b.witness);
  LinearSystem merged = a.system;
  merged.merge(b.system);
  return feasible(merged).is_feasible();
}

/// Cells as vertices, closed-cell intersections as edges.
struct CellGraph {
  std::vector<Cell> cells;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> component;  // component label per cell, 0-based
  std::size_t component_count = 0;
};

/// Builds the component structure of the cover. Edges are only tested between
/// cells that are not already known to be connected, so `edges` is a spanning
/// forest of the intersection graph rather than the full graph.
inline CellGraph build_cell_graph(std::vector<Cell> cells) {
  CellGraph g;
  g.cells = std::move(cells);
  const std::size_t t = g.cells.size();
  UnionFind uf(t);

  // zero-dimensional cells meet exactly when their points coincide
  std::map<Point, std::size_t> point_owner;
  for (std::size_t i = 0; i < t; ++i) {
    if (g.cells[i].dimension != 0) continue;
    auto [it, inserted] = point_owner.emplace(g.cells[i].witness, i);
    if (!inserted && uf.unite(it->second, i)) g.edges.emplace_back(it->second, i);
  }
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g.cells[i].dimension == 0 && g.cells[j].dimension == 0) continue;
      if (uf.find(i) == uf.find(j)) continue;
      if (cells_intersect(g.cells[i], g.cells[j])) {
        uf.unite(i, j);
        g.edges.emplace_back(i, j);
      }
    }
  }

  std::map<std::size_t, std::size_t> label;
  g.component.resize(t);
  for (std::size_t i = 0; i < t; ++i) {
    auto [it, inserted] = label.emplace(uf.find(i), label.size());
    g.component[i] = it->second;
  }
  g.component_count = label.size();
  return g;
}

struct TopologyReport {
  bool nonempty = false;
  std::size_t component_count = 0;
  int dimension = -1;
  bool finite = true;
  std::vector<Point> points;  // filled only when finite
};

inline std::string format_point(std::span<const Rational> x) {
  std::string s;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) s += ',';
    s += x[j].get_str();
  }
  return s;
}

/// Line-oriented report: nonempty / components / dimension / finite / points.
inline std::ostream& operator<<(std::ostream& os, const TopologyReport& r) {
  os << "nonempty: " << (r.nonempty ? "yes" : "no") << '\n'
     << "components: " << r.component_count << '\n'
     << "dimension: " << r.dimension << '\n'
     << "finite: " << (r.finite ? "yes" : "no") << '\n';
  for (const auto& p : r.points) os << "point: " << format_point(p) << '\n';
  return os;
}

namespace detail {

inline void require_system(std::span<const TropicalPolynomial> fs, std::size_t n) {
  if (n == 0) throw InvalidArgument("ambient dimension must be >= 1");
  require_dimension(fs, n);
}

}  // namespace detail

/// Full topological summary of the prevariety of fs in R^n.
inline TopologyReport analyze(std::span<const TropicalPolynomial> fs, std::size_t n,
                              const EnumerationOptions& opts = {}) {
  detail::require_system(fs, n);
  TopologyReport r;
  if (fs.empty()) {
    r.nonempty = true;
    r.component_count = 1;
    r.dimension = static_cast<int>(n);
    r.finite = false;
    return r;
  }
  auto graph = build_cell_graph(cover_cells(fs, opts));
  r.nonempty = !graph.cells.empty();
  r.component_count = graph.component_count;
  r.finite = std::all_of(graph.cells.begin(), graph.cells.end(),
                         [](const Cell& c) { return c.dimension == 0; });
  for (const auto& c : graph.cells) r.dimension = std::max(r.dimension, c.dimension);
  if (r.finite) {
    std::set<Point> distinct;
    for (const auto& c : graph.cells) distinct.insert(c.witness);
    r.points.assign(distinct.begin(), distinct.end());
  }
  return r;
}

struct IntersectionResult {
  bool nonempty = false;
  std::optional<Point> witness;
};

inline IntersectionResult intersect_nonempty(std::span<const TropicalPolynomial> fs,
                                             std::size_t n, const EnumerationOptions& opts = {}) {
  detail::require_system(fs, n);
  auto w = witness_or_empty(fs, n, opts);
  return {w.has_value(), std::move(w)};
}

inline std::size_t connected_components(std::span<const TropicalPolynomial> fs, std::size_t n,
                                        const EnumerationOptions& opts = {}) {
  detail::require_system(fs, n);
  if (fs.empty()) return 1;
  return build_cell_graph(cover_cells(fs, opts)).component_count;
}

/// Throws EmptyPrevariety when the intersection is empty.
inline bool is_connected(std::span<const TropicalPolynomial> fs, std::size_t n,
                         const EnumerationOptions& opts = {}) {
  const std::size_t k = connected_components(fs, n, opts);
  if (k == 0) throw EmptyPrevariety();
  return k == 1;
}

/// Largest cell dimension; -1 when empty, n for the empty system.
inline int prevariety_dimension(std::span<const TropicalPolynomial> fs, std::size_t n,
                                const EnumerationOptions& opts = {}) {
  detail::require_system(fs, n);
  if (fs.empty()) return static_cast<int>(n);
  int d = -1;
  for (const auto& c : cover_cells(fs, opts)) d = std::max(d, c.dimension);
  return d;
}

/// (lambda (.) x) (+) (mu (.) y), componentwise min(lambda + x_i, mu + y_i).
inline Point tropical_combination(std::span<const Rational> x, std::span<const Rational> y,
                                  const Rational& lambda, const Rational& mu) {
  if (x.size() != y.size()) throw InvalidArgument("tropical_combination: length mismatch");
  Point z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational a = lambda + x[i];
    Rational b = mu + y[i];
    z[i] = a < b ? a : b;
  }
  return z;
}

}  // namespace tropcomp

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/rational.hpp"

namespace tropcomp {

using Exponent = std::vector<unsigned>;
using Point = std::vector<Rational>;

inline unsigned total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

/// A present term c * x^e. Absent terms (coefficient +inf) are never stored.
struct Monomial {
  Exponent exponent;
  Rational coefficient;

  /// The classical affine form c + e.x
  Rational value_at(std::span<const Rational> x) const {
    Rational v = coefficient;
    for (std::size_t j = 0; j < exponent.size(); ++j) {
      if (exponent[j] != 0) v += exponent[j] * x[j];
    }
    return v;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct EvalResult {
  Rational value;
  std::vector<std::size_t> indices;  // terms attaining the minimum, ascending
  std::vector<Exponent> argmin;
};

/// Min-plus polynomial in `dimension` variables with a nonempty sparse support.
/// Terms are kept sorted by exponent, so two polynomials with the same terms
/// compare equal regardless of construction order.
class TropicalPolynomial {
 public:
  TropicalPolynomial(std::size_t dimension, std::vector<Monomial> terms)
      : dimension_(dimension), terms_(std::move(terms)) {
    if (dimension_ == 0) throw InvalidArgument("polynomial dimension must be >= 1");
    if (terms_.empty()) throw InvalidArgument("polynomial support must be nonempty");
    for (const auto& t : terms_) {
      if (t.exponent.size() != dimension_) {
        throw InvalidArgument("exponent length " + std::to_string(t.exponent.size()) +
                              " does not match dimension " + std::to_string(dimension_));
      }
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Monomial& a, const Monomial& b) { return a.exponent < b.exponent; });
    for (std::size_t i = 1; i < terms_.size(); ++i) {
      if (terms_[i].exponent == terms_[i - 1].exponent) {
        throw InvalidArgument("duplicate exponent in polynomial support");
      }
    }
  }

  /// Single constant term c in n variables.
  static TropicalPolynomial constant(std::size_t n, const Rational& c) {
    return TropicalPolynomial(n, {Monomial{Exponent(n, 0), c}});
  }

  /// c * x_var^power in n variables.
  static TropicalPolynomial monomial(std::size_t n, std::size_t var, unsigned power,
                                     const Rational& c) {
    Exponent e(n, 0);
    e.at(var) = power;
    return TropicalPolynomial(n, {Monomial{std::move(e), c}});
  }

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  const Monomial& term(std::size_t i) const { return terms_.at(i); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.exponent));
    return d;
  }

  /// Coefficient of exponent e, +inf when absent.
  ExtRational coefficient(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Monomial& m, const Exponent& k) { return m.exponent < k; });
    if (it != terms_.end() && it->exponent == e) return it->coefficient;
    return ExtRational::infinity();
  }

  friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

 private:
  std::size_t dimension_;
  std::vector<Monomial> terms_;
};

namespace detail {

inline void require_same_dimension(const TropicalPolynomial& f, const TropicalPolynomial& g) {
  if (f.dimension() != g.dimension()) {
    throw InvalidArgument("dimension mismatch: " + std::to_string(f.dimension()) + " vs " +
                          std::to_string(g.dimension()));
  }
}

inline void require_point(const TropicalPolynomial& f, std::span<const Rational> x) {
  if (x.size() != f.dimension()) {
    throw InvalidArgument("point has " + std::to_string(x.size()) +
                          " coordinates, polynomial has dimension " +
                          std::to_string(f.dimension()));
  }
}

inline TropicalPolynomial from_map(std::size_t n, const std::map<Exponent, Rational>& m) {
  std::vector<Monomial> terms;
  terms.reserve(m.size());
  for (const auto& [e, c] : m) terms.push_back(Monomial{e, c});
  return TropicalPolynomial(n, std::move(terms));
}

}  // namespace detail

inline EvalResult eval(const TropicalPolynomial& f, std::span<const Rational> x) {
  detail::require_point(f, x);
  EvalResult r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Rational v = f.term(i).value_at(x);
    if (r.indices.empty() || v < r.value) {
      r.value = v;
      r.indices.assign(1, i);
    } else if (v == r.value) {
      r.indices.push_back(i);
    }
  }
  for (auto i : r.indices) r.argmin.push_back(f.term(i).exponent);
  return r;
}

/// x lies on the tropical hypersurface: the minimum is attained at least twice.
inline bool is_member(const TropicalPolynomial& f, std::span<const Rational> x) {
  return eval(f, x).indices.size() >= 2;
}

/// Membership in every hypersurface of a system.
inline bool is_member(std::span<const TropicalPolynomial> fs, std::span<const Rational> x) {
  return std::all_of(fs.begin(), fs.end(),
                     [&](const TropicalPolynomial& f) { return is_member(f, x); });
}

inline TropicalPolynomial trop_add(const TropicalPolynomial& f, const TropicalPolynomial& g) {
  detail::require_same_dimension(f, g);
  std::map<Exponent, Rational> acc;
  for (const auto* p : {&f, &g}) {
    for (const auto& t : p->terms()) {
      auto [it, inserted] = acc.emplace(t.exponent, t.coefficient);
      if (!inserted && t.coefficient < it->second) it->second = t.coefficient;
    }
  }
  return detail::from_map(f.dimension(), acc);
}

/// Min-plus convolution: exponents add, coefficients add, duplicates take the min.
inline TropicalPolynomial trop_mul(const TropicalPolynomial& f, const TropicalPolynomial& g) {
  detail::require_same_dimension(f, g);
  const std::size_t n = f.dimension();
  std::map<Exponent, Rational> acc;
  Exponent e(n);
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      for (std::size_t j = 0; j < n; ++j) e[j] = a.exponent[j] + b.exponent[j];
      Rational c = a.coefficient + b.coefficient;
      auto [it, inserted] = acc.emplace(e, c);
      if (!inserted && c < it->second) it->second = c;
    }
  }
  return detail::from_map(n, acc);
}

/// c (.) f: shifts every coefficient by c.
inline TropicalPolynomial scale(const TropicalPolynomial& f, const Rational& c) {
  std::vector<Monomial> terms = f.terms();
  for (auto& t : terms) t.coefficient += c;
  return TropicalPolynomial(f.dimension(), std::move(terms));
}

/// Re-embeds f into `n` >= f.dimension() variables; new variables get exponent 0.
inline TropicalPolynomial embed(const TropicalPolynomial& f, std::size_t n) {
  if (n < f.dimension()) throw InvalidArgument("embed: target dimension too small");
  std::vector<Monomial> terms = f.terms();
  for (auto& t : terms) t.exponent.resize(n, 0);
  return TropicalPolynomial(n, std::move(terms));
}

}  // namespace tropcomp

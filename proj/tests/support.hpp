#pragma once

// Shared fixtures for the test suites: seeded generators and brute-force
// oracles that do not go through the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tropcomp.hpp"

namespace testing_support {

using namespace tropcomp;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<TropicalPolynomial> sys(const std::string& text) {
  return io::parse_system(text);
}

inline TropicalPolynomial poly(const std::string& text) { return io::parse_system(text).front(); }

inline Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

/// Rational p/q with |p| <= 4q, q in 1..4.
inline Rational random_rational(Rng& rng, int range = 4) {
  const int q = uniform(rng, 1, 4);
  return make_rational(uniform(rng, -range * q, range * q), q);
}

inline Point random_point(Rng& rng, std::size_t n, int range = 4) {
  Point x(n);
  for (auto& v : x) v = random_rational(rng, range);
  return x;
}

/// All exponents of total degree <= d in n variables.
inline std::vector<Exponent> exponents_up_to(std::size_t n, unsigned d) {
  std::vector<Exponent> out;
  Exponent e(n, 0);
  for (;;) {
    if (total_degree(e) <= d) out.push_back(e);
    std::size_t j = 0;
    while (j < n && e[j] == d) e[j++] = 0;
    if (j == n) break;
    ++e[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Random polynomial: `terms` distinct exponents of degree <= d, integer or
/// half-integer coefficients in [-3, 3].
inline TropicalPolynomial random_polynomial(Rng& rng, std::size_t n, unsigned d, std::size_t terms) {
  auto pool = exponents_up_to(n, d);
  std::shuffle(pool.begin(), pool.end(), rng);
  terms = std::min(terms, pool.size());
  std::vector<Monomial> ms;
  for (std::size_t i = 0; i < terms; ++i) {
    ms.push_back(Monomial{pool[i], make_rational(uniform(rng, -6, 6), 2)});
  }
  return TropicalPolynomial(n, std::move(ms));
}

/// Random linear polynomial in n variables with at least two terms.
inline TropicalPolynomial random_linear(Rng& rng, std::size_t n, int coef_hi = 4) {
  std::vector<Monomial> ms;
  for (std::size_t j = 0; j <= n; ++j) {
    if (uniform(rng, 0, 3) == 0) continue;
    Exponent e(n, 0);
    if (j < n) e[j] = 1;
    ms.push_back(Monomial{e, Rational(uniform(rng, 0, coef_hi))});
  }
  while (ms.size() < 2) {
    const std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n)));
    Exponent e(n, 0);
    if (j < n) e[j] = 1;
    if (std::none_of(ms.begin(), ms.end(), [&](const Monomial& m) { return m.exponent == e; })) {
      ms.push_back(Monomial{e, Rational(uniform(rng, 0, coef_hi))});
    }
  }
  return TropicalPolynomial(n, std::move(ms));
}

/// Pointwise membership oracle: evaluate every term, count the minimum.
inline bool member_oracle(const TropicalPolynomial& f, const Point& x) {
  std::vector<Rational> vals;
  for (const auto& t : f.terms()) {
    Rational v = t.coefficient;
    for (std::size_t j = 0; j < x.size(); ++j) v += Rational(t.exponent[j]) * x[j];
    vals.push_back(v);
  }
  const Rational m = *std::min_element(vals.begin(), vals.end());
  return std::count(vals.begin(), vals.end(), m) >= 2;
}

inline bool member_oracle(const std::vector<TropicalPolynomial>& fs, const Point& x) {
  return std::all_of(fs.begin(), fs.end(), [&](const auto& f) { return member_oracle(f, x); });
}

/// Brute force over all k! permutations: (minimum, number of minimizers).
/// The minimum is nullopt when every permutation hits +inf.
struct PermOracle {
  std::optional<Rational> value;
  std::size_t attained = 0;
};

inline PermOracle permutation_oracle(const TropicalMatrix& a) {
  std::vector<std::size_t> p(a.rows());
  std::iota(p.begin(), p.end(), std::size_t{0});
  PermOracle out;
  do {
    Rational s = 0;
    bool finite = true;
    for (std::size_t i = 0; i < p.size() && finite; ++i) {
      if (a(i, p[i]).is_infinite()) {
        finite = false;
      } else {
        s += a(i, p[i]).value();
      }
    }
    if (!finite) continue;
    if (!out.value || s < *out.value) {
      out.value = s;
      out.attained = 1;
    } else if (s == *out.value) {
      ++out.attained;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline TropicalMatrix random_matrix(Rng& rng, std::size_t k, int inf_weight = 2) {
  TropicalMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const int v = uniform(rng, 0, 9 + inf_weight);
      a(i, j) = v <= 9 ? ExtRational(v) : ExtRational::infinity();
    }
  }
  return a;
}

/// Random CNF with clauses of size 1..3 over distinct variables, mixed
/// polarity. `all_positive_3` forces that many all-positive 3-clauses.
inline CnfFormula random_cnf(Rng& rng, std::size_t n, std::size_t k, std::size_t all_positive_3 = 0) {
  std::vector<Clause> clauses;
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t want = std::min<std::size_t>(n, c < all_positive_3 ? 3 : uniform(rng, 1, 3));
    std::vector<std::size_t> vars(n);
    std::iota(vars.begin(), vars.end(), std::size_t{1});
    std::shuffle(vars.begin(), vars.end(), rng);
    Clause cl;
    for (std::size_t i = 0; i < want; ++i) {
      cl.push_back(Literal{vars[i], c < all_positive_3 ? true : uniform(rng, 0, 1) == 1});
    }
    clauses.push_back(std::move(cl));
  }
  std::shuffle(clauses.begin(), clauses.end(), rng);
  return CnfFormula(n, std::move(clauses));
}

/// Direct truth-table count, independent of the library's bitmask oracle.
inline std::uint64_t count_models(const CnfFormula& f) {
  std::uint64_t count = 0;
  std::vector<bool> value(f.n_vars() + 1);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.n_vars()); ++a) {
    for (std::size_t v = 1; v <= f.n_vars(); ++v) value[v] = (a >> (v - 1)) & 1;
    bool all = true;
    for (const auto& c : f.clauses()) {
      bool any = false;
      for (const auto& l : c) any = any || value[l.var] == l.positive;
      all = all && any;
    }
    count += all ? 1 : 0;
  }
  return count;
}

}  // namespace testing_support

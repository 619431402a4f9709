#pragma once

// 3-SAT reductions to tropical prevarieties.
//
// Truth values map to coordinates by False -> 0, True -> 1. The structural
// hypersurface of 0*x^2 (+) 0*x (+) 1 is {x in {0,1}}; clause hypersurfaces
// pass through exactly the 0/1 points satisfying their clause, so the
// intersection variant's prevariety is the set of satisfying points.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/polynomial.hpp"

namespace tropcomp {

struct Literal {
  std::size_t var;  // 1-based
  bool positive;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

class CnfFormula {
 public:
  CnfFormula() = default;
  CnfFormula(std::size_t n_vars, std::vector<Clause> clauses)
      : n_vars_(n_vars), clauses_(std::move(clauses)) {
    for (const auto& c : clauses_) {
      for (const auto& l : c) {
        if (l.var < 1 || l.var > n_vars_) {
          throw InvalidArgument("literal variable " + std::to_string(l.var) +
                                " outside 1.." + std::to_string(n_vars_));
        }
      }
    }
  }

  std::size_t n_vars() const noexcept { return n_vars_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  /// Duplicate literals removed (first occurrence kept), tautologies dropped.
  std::vector<Clause> normalized_clauses() const {
    std::vector<Clause> out;
    for (const auto& c : clauses_) {
      Clause d;
      bool tautology = false;
      for (const auto& l : c) {
        if (std::find(d.begin(), d.end(), l) != d.end()) continue;
        if (std::find(d.begin(), d.end(), Literal{l.var, !l.positive}) != d.end()) {
          tautology = true;
          break;
        }
        d.push_back(l);
      }
      if (!tautology) out.push_back(std::move(d));
    }
    return out;
  }

  bool satisfied_by(std::uint64_t assignment) const {
    for (const auto& c : clauses_) {
      bool sat = false;
      for (const auto& l : c) {
        const bool value = (assignment >> (l.var - 1)) & 1u;
        if (value == l.positive) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
    }
    return true;
  }

 private:
  std::size_t n_vars_ = 0;
  std::vector<Clause> clauses_;
};

/// Exhaustive #SAT.
inline std::uint64_t brute_force_count(const CnfFormula& f) {
  constexpr std::size_t kMaxVars = 24;
  if (f.n_vars() > kMaxVars) {
    throw InvalidArgument("brute_force_count supports at most 24 variables, got " +
                          std::to_string(f.n_vars()));
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;  // (positive, negative)
  for (const auto& c : f.clauses()) {
    std::uint32_t pos = 0, neg = 0;
    for (const auto& l : c) (l.positive ? pos : neg) |= 1u << (l.var - 1);
    masks.emplace_back(pos, neg);
  }
  const std::uint32_t total = 1u << f.n_vars();
  std::uint64_t count = 0;
  for (std::uint32_t a = 0; a < total; ++a) {
    bool ok = true;
    for (const auto& [pos, neg] : masks) {
      if (!((a & pos) | (~a & neg))) {
        ok = false;
        break;
      }
    }
    count += ok ? 1 : 0;
  }
  return count;
}

enum class EncodingVariant { intersection, consistency, connectivity };

inline const char* to_string(EncodingVariant v) {
  switch (v) {
    case EncodingVariant::intersection: return "intersection";
    case EncodingVariant::consistency: return "consistency";
    case EncodingVariant::connectivity: return "connectivity";
  }
  return "?";
}

inline std::optional<EncodingVariant> parse_variant(const std::string& s) {
  if (s == "intersection") return EncodingVariant::intersection;
  if (s == "consistency") return EncodingVariant::consistency;
  if (s == "connectivity") return EncodingVariant::connectivity;
  return std::nullopt;
}

struct Encoding {
  EncodingVariant variant = EncodingVariant::intersection;
  std::vector<TropicalPolynomial> polynomials;
  std::size_t total_vars = 0;    // ambient dimension
  std::size_t original_vars = 0;
  /// Clause index (into the normalized clause list) owning each auxiliary
  /// variable; auxiliaries occupy coordinates original_vars .. +aux.size()-1.
  std::vector<std::size_t> aux_clause;
  /// Coordinate of the extra axis of the consistency/connectivity variants.
  std::optional<std::size_t> height_coordinate;

  /// Human-readable meaning of coordinate j (0-based).
  std::string describe(std::size_t j) const {
    if (j < original_vars) return "y" + std::to_string(j + 1);
    if (j < original_vars + aux_clause.size()) {
      return "z (auxiliary, clause " + std::to_string(aux_clause[j - original_vars] + 1) + ")";
    }
    return "height";
  }
};

namespace detail {

/// 0*x_var (+) c
inline TropicalPolynomial shifted_factor(std::size_t n, std::size_t var, const Rational& c) {
  return trop_add(TropicalPolynomial::monomial(n, var, 1, 0), TropicalPolynomial::constant(n, c));
}

inline TropicalPolynomial structural_quadric(std::size_t n, std::size_t var) {
  return trop_mul(shifted_factor(n, var, 1), shifted_factor(n, var, 0));
}

/// Coordinate literal: 0-based coordinate plus polarity.
struct CoordLiteral {
  std::size_t coord;
  bool positive;
};

/// Hypersurface meeting {0,1}^n exactly in the points satisfying a clause with
/// at most one positive literal: prod_{pos}(0*y (+) 1) (.) ((+)_{neg} 0*z (+) 0).
inline TropicalPolynomial few_positive_clause(std::size_t n, const std::vector<CoordLiteral>& c) {
  std::optional<TropicalPolynomial> f;
  std::optional<TropicalPolynomial> negatives;
  for (const auto& l : c) {
    if (l.positive) {
      auto g = shifted_factor(n, l.coord, 1);
      f = f ? trop_mul(*f, g) : g;
    } else {
      auto g = TropicalPolynomial::monomial(n, l.coord, 1, 0);
      negatives = negatives ? trop_add(*negatives, g) : g;
    }
  }
  if (negatives) {
    auto g = trop_add(*negatives, TropicalPolynomial::constant(n, 0));
    f = f ? trop_mul(*f, g) : g;
  }
  return *f;
}

/// (0*x_a (+) t_a) (.) (0*x_b (+) t_b)
inline TropicalPolynomial two_clause(std::size_t n, const CoordLiteral& a, const CoordLiteral& b) {
  return trop_mul(shifted_factor(n, a.coord, a.positive ? 1 : 0),
                  shifted_factor(n, b.coord, b.positive ? 1 : 0));
}

/// y_a v y_b v not y_c:
/// 0*x_a*x_b (+) 1*x_a (+) 1*x_b (+) 0*x_c (+) 0*x_c^2 (+) 1
inline TropicalPolynomial two_positive_three_clause(std::size_t n, std::size_t a, std::size_t b,
                                                    std::size_t c) {
  auto e = [n](std::initializer_list<std::pair<std::size_t, unsigned>> powers) {
    Exponent x(n, 0);
    for (auto [v, p] : powers) x[v] = p;
    return x;
  };
  return TropicalPolynomial(n, {
                                   Monomial{e({{a, 1}, {b, 1}}), 0},
                                   Monomial{e({{a, 1}}), 1},
                                   Monomial{e({{b, 1}}), 1},
                                   Monomial{e({{c, 1}}), 0},
                                   Monomial{e({{c, 2}}), 0},
                                   Monomial{e({}), 1},
                               });
}

inline void append_clause(std::vector<TropicalPolynomial>& out, std::size_t n,
                          std::vector<CoordLiteral> c) {
  if (c.empty()) {
    // unsatisfiable clause: a single term never attains its minimum twice
    out.push_back(TropicalPolynomial::constant(n, 0));
    return;
  }
  std::stable_partition(c.begin(), c.end(), [](const CoordLiteral& l) { return l.positive; });
  const auto p = static_cast<std::size_t>(
      std::count_if(c.begin(), c.end(), [](const CoordLiteral& l) { return l.positive; }));
  if (p <= 1) {
    out.push_back(few_positive_clause(n, c));
  } else if (c.size() == 2) {
    out.push_back(two_clause(n, c[0], c[1]));
  } else if (p == 2) {
    out.push_back(two_positive_three_clause(n, c[0].coord, c[1].coord, c[2].coord));
  } else {
    throw InvalidArgument("append_clause: three positive literals need an auxiliary variable");
  }
}

inline std::vector<CoordLiteral> to_coords(const Clause& c) {
  std::vector<CoordLiteral> out;
  for (const auto& l : c) out.push_back({l.var - 1, l.positive});
  return out;
}

/// Clause polynomials over n' = original + #aux coordinates, padded to `dim`.
/// Three-positive clauses y1 v y2 v y3 become (y1 v y2 v not z), (y3 v z),
/// (not y3 v not z) over a fresh z.
inline std::vector<TropicalPolynomial> clause_polynomials(const CnfFormula& cnf, Encoding& enc,
                                                          std::size_t dim) {
  const auto clauses = cnf.normalized_clauses();
  std::vector<TropicalPolynomial> out;
  std::size_t next_aux = cnf.n_vars();
  for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
    const auto& c = clauses[ci];
    if (c.size() > 3) {
      throw InvalidArgument("clause " + std::to_string(ci + 1) + " has " +
                            std::to_string(c.size()) + " literals; at most 3 are supported");
    }
    auto lits = to_coords(c);
    const bool all_positive =
        c.size() == 3 && std::all_of(c.begin(), c.end(), [](const Literal& l) { return l.positive; });
    if (!all_positive) {
      append_clause(out, dim, lits);
      continue;
    }
    const std::size_t z = next_aux++;
    enc.aux_clause.push_back(ci);
    append_clause(out, dim, {lits[0], lits[1], {z, false}});
    append_clause(out, dim, {lits[2], {z, true}});
    append_clause(out, dim, {{lits[2].coord, false}, {z, false}});
  }
  return out;
}

inline std::size_t count_all_positive_3(const CnfFormula& cnf) {
  std::size_t k = 0;
  for (const auto& c : cnf.normalized_clauses()) {
    if (c.size() == 3 &&
        std::all_of(c.begin(), c.end(), [](const Literal& l) { return l.positive; })) {
      ++k;
    }
  }
  return k;
}

}  // namespace detail

/// Structural quadrics h_i on every coordinate plus clause hypersurfaces; the
/// prevariety is the set of satisfying 0/1 points (auxiliaries determined).
inline Encoding encode_intersection(const CnfFormula& cnf) {
  Encoding enc;
  enc.variant = EncodingVariant::intersection;
  enc.original_vars = cnf.n_vars();
  const std::size_t n = cnf.n_vars() + detail::count_all_positive_3(cnf);
  if (n == 0) throw InvalidArgument("encoding needs at least one variable");
  enc.total_vars = n;
  for (std::size_t i = 0; i < n; ++i) enc.polynomials.push_back(detail::structural_quadric(n, i));
  auto clauses = detail::clause_polynomials(cnf, enc, n);
  enc.polynomials.insert(enc.polynomials.end(), clauses.begin(), clauses.end());
  return enc;
}

/// The intersection construction embedded in one more coordinate t, plus
/// g_i = 0*x_i^2 (+) 0*x_i (+) 1 (+) 1*t. Each satisfying point a becomes the
/// upward ray a x [0, inf), or a x [-1, inf) for the all-zero point.
inline Encoding encode_consistency(const CnfFormula& cnf) {
  Encoding enc;
  enc.variant = EncodingVariant::consistency;
  enc.original_vars = cnf.n_vars();
  const std::size_t base = cnf.n_vars() + detail::count_all_positive_3(cnf);
  if (base == 0) throw InvalidArgument("encoding needs at least one variable");
  const std::size_t n = base + 1;
  const std::size_t t = base;
  enc.total_vars = n;
  enc.height_coordinate = t;
  for (std::size_t i = 0; i < base; ++i) {
    enc.polynomials.push_back(detail::structural_quadric(n, i));
  }
  for (std::size_t i = 0; i < base; ++i) {
    enc.polynomials.push_back(trop_add(detail::structural_quadric(n, i),
                                       TropicalPolynomial::monomial(n, t, 1, 1)));
  }
  auto clauses = detail::clause_polynomials(cnf, enc, n);
  enc.polynomials.insert(enc.polynomials.end(), clauses.begin(), clauses.end());
  return enc;
}

/// Degree <= 3 system over n'+1 coordinates (last one t) whose prevariety is
/// {satisfying points} x {0}  together with the anchor (2,...,2):
///   (x_i (+) 1)(x_i (+) 0)(x_i (+) 2)   x_i in {0,1,2}
///   (t (+) 0)(t (+) 2)                  t in {0,2}
///   (x_i (+) 1)(x_i (+) 0)(t (+) 2)     t = 0 forces x_i in {0,1}
///   (t (+) 0)(x_i (+) t)                t = 2 forces x_i = 2
///   clause (.) (t (+) 2)                clauses only bind when t = 0
inline Encoding encode_connectivity(const CnfFormula& cnf) {
  Encoding enc;
  enc.variant = EncodingVariant::connectivity;
  enc.original_vars = cnf.n_vars();
  const std::size_t base = cnf.n_vars() + detail::count_all_positive_3(cnf);
  if (base == 0) throw InvalidArgument("encoding needs at least one variable");
  const std::size_t n = base + 1;
  const std::size_t t = base;
  enc.total_vars = n;
  enc.height_coordinate = t;

  using detail::shifted_factor;
  const auto lift_guard = shifted_factor(n, t, 2);
  for (std::size_t i = 0; i < base; ++i) {
    enc.polynomials.push_back(trop_mul(detail::structural_quadric(n, i), shifted_factor(n, i, 2)));
  }
  enc.polynomials.push_back(trop_mul(shifted_factor(n, t, 0), lift_guard));
  for (std::size_t i = 0; i < base; ++i) {
    enc.polynomials.push_back(trop_mul(detail::structural_quadric(n, i), lift_guard));
    auto diagonal = trop_add(TropicalPolynomial::monomial(n, i, 1, 0),
                             TropicalPolynomial::monomial(n, t, 1, 0));
    enc.polynomials.push_back(trop_mul(shifted_factor(n, t, 0), diagonal));
  }
  for (const auto& c : detail::clause_polynomials(cnf, enc, n)) {
    enc.polynomials.push_back(trop_mul(c, lift_guard));
  }
  return enc;
}

inline Encoding encode(const CnfFormula& cnf, EncodingVariant v) {
  switch (v) {
    case EncodingVariant::intersection: return encode_intersection(cnf);
    case EncodingVariant::consistency: return encode_consistency(cnf);
    case EncodingVariant::connectivity: return encode_connectivity(cnf);
  }
  throw InvalidArgument("unknown encoding variant");
}

/// The 0/1 point of an assignment of the original variables, extended by the
/// forced auxiliary values z = not y3; any height coordinate is left at 0.
inline Point assignment_point(const CnfFormula& cnf, const Encoding& enc, std::uint64_t a) {
  Point x(enc.total_vars, Rational(0));
  for (std::size_t i = 0; i < cnf.n_vars(); ++i) x[i] = (a >> i) & 1u;
  const auto clauses = cnf.normalized_clauses();
  for (std::size_t k = 0; k < enc.aux_clause.size(); ++k) {
    const auto& c = clauses[enc.aux_clause[k]];
    x[enc.original_vars + k] = ((a >> (c[2].var - 1)) & 1u) ? 0 : 1;
  }
  return x;
}

}  // namespace tropcomp

#pragma once

// Text formats.
//
// Polynomial systems: one monomial per line, `coef : e1 e2 ... en`, where coef
// is `p` or `p/q`. `#` starts a comment. Polynomials are separated by a line
// consisting of exactly `---`.
//
// Matrices: one row per line, whitespace-separated entries, `inf` for +inf.
//
// CNF: DIMACS (`p cnf <vars> <clauses>`, clauses as 0-terminated signed ints).

#include <cstddef>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/linalg.hpp"
#include "tropcomp/polynomial.hpp"
#include "tropcomp/rational.hpp"
#include "tropcomp/sat.hpp"

namespace tropcomp::io {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('#');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace detail

/// Parses a polynomial system; all polynomials must share one dimension.
inline std::vector<TropicalPolynomial> parse_system(std::istream& in) {
  std::vector<TropicalPolynomial> out;
  std::vector<Monomial> current;
  std::optional<std::size_t> dim;
  std::size_t current_start = 0;
  std::string line;
  std::size_t lineno = 0;

  auto flush = [&](std::size_t at_line) {
    if (current.empty()) {
      throw ParseError(at_line, 1, "empty polynomial");
    }
    try {
      out.emplace_back(*dim, std::move(current));
    } catch (const InvalidArgument& e) {
      throw ParseError(current_start, 1, e.what());
    }
    current.clear();
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string_view raw = detail::strip_comment(line);
    std::string_view body = detail::trim(raw);
    if (body.empty()) continue;
    if (body == "---") {
      flush(lineno);
      continue;
    }
    auto colon = raw.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(lineno, 1, "expected `coefficient : exponents`");
    }
    auto lhs = detail::tokenize(raw.substr(0, colon));
    if (lhs.size() != 1) {
      throw ParseError(lineno, lhs.empty() ? 1 : lhs[1 % lhs.size()].column,
                       "expected exactly one coefficient before `:`");
    }
    auto coef = parse_rational(lhs[0].text);
    if (!coef) {
      throw ParseError(lineno, lhs[0].column,
                       "malformed rational `" + std::string(lhs[0].text) + "`");
    }
    auto rhs = detail::tokenize(raw.substr(colon + 1));
    Exponent e;
    for (const auto& tok : rhs) {
      const std::size_t col = tok.column + colon + 1;
      std::size_t pos = 0;
      unsigned long v = 0;
      bool ok = !tok.text.empty() && tok.text.size() < 10;
      for (char c : tok.text) ok = ok && c >= '0' && c <= '9';
      if (ok) v = std::stoul(std::string(tok.text), &pos);
      if (!ok) {
        throw ParseError(lineno, col, "malformed exponent `" + std::string(tok.text) + "`");
      }
      e.push_back(static_cast<unsigned>(v));
    }
    if (e.empty()) throw ParseError(lineno, colon + 2, "monomial has no exponents");
    if (!dim) dim = e.size();
    if (e.size() != *dim) {
      throw ParseError(lineno, colon + 2,
                       "expected " + std::to_string(*dim) + " exponents, found " +
                           std::to_string(e.size()));
    }
    if (current.empty()) current_start = lineno;
    current.push_back(Monomial{std::move(e), std::move(*coef)});
  }
  if (!current.empty()) flush(lineno);
  if (out.empty()) throw ParseError(lineno == 0 ? 1 : lineno, 1, "no polynomials in input");
  return out;
}

inline std::vector<TropicalPolynomial> parse_system(const std::string& text) {
  std::istringstream in(text);
  return parse_system(in);
}

inline void write_polynomial(std::ostream& os, const TropicalPolynomial& f) {
  for (const auto& t : f.terms()) {
    os << t.coefficient.get_str() << " :";
    for (auto e : t.exponent) os << ' ' << e;
    os << '\n';
  }
}

inline void write_system(std::ostream& os, const std::vector<TropicalPolynomial>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) os << "---\n";
    write_polynomial(os, fs[i]);
  }
}

inline std::string to_text(const std::vector<TropicalPolynomial>& fs) {
  std::ostringstream os;
  write_system(os, fs);
  return os.str();
}

/// Encoding as a system file preceded by a comment block mapping coordinates.
inline void write_encoding(std::ostream& os, const Encoding& enc) {
  os << "# variant: " << to_string(enc.variant) << '\n'
     << "# dimension: " << enc.total_vars << '\n'
     << "# polynomials: " << enc.polynomials.size() << '\n';
  for (std::size_t j = 0; j < enc.total_vars; ++j) {
    os << "# var x" << (j + 1) << " = " << enc.describe(j) << '\n';
  }
  write_system(os, enc.polynomials);
}

inline TropicalMatrix parse_matrix(std::istream& in) {
  std::vector<std::vector<ExtRational>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::tokenize(detail::strip_comment(line));
    if (toks.empty()) continue;
    std::vector<ExtRational> row;
    for (const auto& t : toks) {
      auto v = ExtRational::parse(t.text);
      if (!v) throw ParseError(lineno, t.column, "malformed entry `" + std::string(t.text) + "`");
      row.push_back(*v);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(lineno, 1,
                       "row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(1, 1, "empty matrix");
  return TropicalMatrix::from_rows(rows);
}

inline TropicalMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

/// Comma-separated rationals, e.g. "1/2,0,-3".
inline Point parse_point(std::string_view text) {
  Point x;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    auto piece = detail::trim(text.substr(start, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - start));
    auto r = parse_rational(piece);
    if (!r) {
      throw ParseError(1, start + 1, "malformed coordinate `" + std::string(piece) + "`");
    }
    x.push_back(*r);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return x;
}

inline CnfFormula parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n_vars, n_clauses;
  std::vector<Clause> clauses;
  Clause current;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    if (toks[0].text == "c") continue;
    if (toks[0].text == "%") break;  // SATLIB trailer
    if (toks[0].text == "p") {
      if (n_vars) throw ParseError(lineno, 1, "duplicate problem line");
      if (toks.size() != 4 || toks[1].text != "cnf") {
        throw ParseError(lineno, 1, "expected `p cnf <variables> <clauses>`");
      }
      for (std::size_t k = 2; k < 4; ++k) {
        for (char c : toks[k].text) {
          if (c < '0' || c > '9') {
            throw ParseError(lineno, toks[k].column, "malformed count");
          }
        }
      }
      n_vars = std::stoul(std::string(toks[2].text));
      n_clauses = std::stoul(std::string(toks[3].text));
      continue;
    }
    if (!n_vars) throw ParseError(lineno, 1, "clause before problem line");
    for (const auto& t : toks) {
      std::string s(t.text);
      char* end = nullptr;
      long v = std::strtol(s.c_str(), &end, 10);
      if (s.empty() || *end != '\0') {
        throw ParseError(lineno, t.column, "malformed literal `" + s + "`");
      }
      if (v == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(v < 0 ? -v : v);
      if (var > *n_vars) {
        throw ParseError(lineno, t.column,
                         "variable " + std::to_string(var) + " exceeds declared " +
                             std::to_string(*n_vars));
      }
      current.push_back(Literal{var, v > 0});
    }
  }
  if (!n_vars) throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing problem line");
  if (!current.empty()) clauses.push_back(std::move(current));
  if (clauses.size() != *n_clauses) {
    throw ParseError(lineno == 0 ? 1 : lineno, 1,
                     "declared " + std::to_string(*n_clauses) + " clauses, found " +
                         std::to_string(clauses.size()));
  }
  return CnfFormula(*n_vars, std::move(clauses));
}

inline CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline void write_dimacs(std::ostream& os, const CnfFormula& f) {
  os << "p cnf " << f.n_vars() << ' ' << f.clauses().size() << '\n';
  for (const auto& c : f.clauses()) {
    for (const auto& l : c) os << (l.positive ? "" : "-") << l.var << ' ';
    os << "0\n";
  }
}

}  // namespace tropcomp::io

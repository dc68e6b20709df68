#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "operadix/completion.hpp"
#include "operadix/rational.hpp"

namespace operadix {

/// Coefficients of a truncated multivariate power series, keyed by
/// exponent vector (one entry per colour variable, total degree bounded).
/// Zero coefficients are never stored.
using ExponentMap = std::map<std::vector<int>, Rational>;

/// Truncated exponential generating series of a coloured collection: one
/// component per output colour; the coefficient of t1^m1...td^md is
/// dim/(m1!...md!).
struct TruncatedEGF {
  PaletteRef palette;
  int truncation = 0;
  std::vector<ExponentMap> components;  // by output colour

  Rational coefficient(int colour, const std::vector<int>& exponents) const;
  /// The dimension encoded at a weight vector: coefficient times the
  /// product of the weight factorials.
  Rational dimension(int colour, const std::vector<int>& weights) const;

  bool operator==(const TruncatedEGF& o) const {
    return truncation == o.truncation && components == o.components &&
           *palette == *o.palette;
  }
  bool operator!=(const TruncatedEGF& o) const { return !(*this == o); }

  /// One line per nonzero entry: `(m1,...,md | colour) : dim`, sorted by
  /// total weight then lexicographically.
  std::string to_string() const;
};

/// Packs a dimension table into a truncated series. Throws when the table
/// misses a (weights, colour) entry with total weight in 1..N.
TruncatedEGF series_from_dimensions(const DimensionTable& table,
                                    const PaletteRef& palette, int N);

/// Componentwise substitution t_j -> G^j into F, truncated at N. Every
/// component of G must have zero constant term; palettes must match.
TruncatedEGF compose_series(const TruncatedEGF& F, const TruncatedEGF& G,
                            int N);

/// Closed-form series expression: rational constants, variables t1..td,
/// +, -, *, /, exp, log.
struct SeriesExpr;
using SeriesExprRef = std::shared_ptr<const SeriesExpr>;

/// Parses the infix grammar `exp(t1/(1-t2)) - 1`. Variables beyond
/// t<n_vars> are rejected.
SeriesExprRef parse_series_expr(const std::string& text, int n_vars);

/// Taylor truncation at N with exact coefficients. Domain rules: exp needs
/// a zero constant term, log a constant term of exactly 1, and divisors a
/// nonzero constant term.
ExponentMap eval_series_expr(const SeriesExprRef& expr, int n_vars, int N);

/// Convenience: evaluates one closed form per output colour.
TruncatedEGF eval_closed_form(const std::vector<std::string>& component_exprs,
                              const PaletteRef& palette, int N);

}  // namespace operadix

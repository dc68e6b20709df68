#include "operadix/series.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "operadix/error.hpp"

namespace operadix {

namespace {

int total(const std::vector<int>& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

Rational factorial_product(const std::vector<int>& weights) {
  Rational out = 1;
  for (int m : weights)
    for (int k = 2; k <= m; ++k) out *= k;
  return out;
}

void add_term(ExponentMap& f, const std::vector<int>& e, const Rational& c) {
  auto it = f.find(e);
  if (it == f.end()) {
    if (c != 0) f.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) f.erase(it);
}

ExponentMap add(const ExponentMap& a, const ExponentMap& b) {
  ExponentMap out = a;
  for (const auto& [e, c] : b) add_term(out, e, c);
  return out;
}

ExponentMap negate(ExponentMap f) {
  for (auto& [e, c] : f) c = -c;
  return f;
}

ExponentMap multiply(const ExponentMap& a, const ExponentMap& b, int N) {
  ExponentMap out;
  for (const auto& [ea, ca] : a) {
    int ta = total(ea);
    for (const auto& [eb, cb] : b) {
      if (ta + total(eb) > N) continue;
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb);
    }
  }
  return out;
}

Rational constant_term(const ExponentMap& f, int n_vars) {
  auto it = f.find(std::vector<int>(n_vars, 0));
  return it == f.end() ? Rational(0) : it->second;
}

/// exp(u) for u with zero constant term: sum u^k/k!, k <= N.
ExponentMap exponential(const ExponentMap& u, int n_vars, int N) {
  if (constant_term(u, n_vars) != 0)
    throw Error("series: exp needs a zero constant term");
  ExponentMap out{{std::vector<int>(n_vars, 0), Rational(1)}};
  ExponentMap power = out;
  Rational kfact = 1;
  for (int k = 1; k <= N; ++k) {
    power = multiply(power, u, N);
    if (power.empty()) break;
    kfact *= k;
    for (const auto& [e, c] : power) add_term(out, e, c / kfact);
  }
  return out;
}

/// log(1+u) for u with zero constant term: sum (-1)^{k+1} u^k/k.
ExponentMap logarithm(const ExponentMap& f, int n_vars, int N) {
  if (constant_term(f, n_vars) != 1)
    throw Error("series: log needs a constant term of 1");
  ExponentMap u = f;
  add_term(u, std::vector<int>(n_vars, 0), Rational(-1));
  ExponentMap out, power{{std::vector<int>(n_vars, 0), Rational(1)}};
  for (int k = 1; k <= N; ++k) {
    power = multiply(power, u, N);
    if (power.empty()) break;
    Rational coeff = rational(k % 2 == 1 ? 1 : -1, k);
    for (const auto& [e, c] : power) add_term(out, e, c * coeff);
  }
  return out;
}

/// f/g for g with nonzero constant term c: f * (1/c) * sum (-(g-c)/c)^k.
ExponentMap divide(const ExponentMap& f, const ExponentMap& g, int n_vars,
                   int N) {
  Rational c = constant_term(g, n_vars);
  if (c == 0) throw Error("series: division needs a nonzero constant term");
  ExponentMap u = g;
  add_term(u, std::vector<int>(n_vars, 0), -c);
  for (auto& [e, coeff] : u) coeff = -coeff / c;
  ExponentMap inv{{std::vector<int>(n_vars, 0), rational(1) / c}};
  ExponentMap power{{std::vector<int>(n_vars, 0), rational(1) / c}};
  for (int k = 1; k <= N; ++k) {
    power = multiply(power, u, N);
    if (power.empty()) break;
    inv = add(inv, power);
  }
  return multiply(f, inv, N);
}

}  // namespace

Rational TruncatedEGF::coefficient(int colour,
                                   const std::vector<int>& exponents) const {
  const auto& comp = components.at(colour);
  auto it = comp.find(exponents);
  return it == comp.end() ? Rational(0) : it->second;
}

Rational TruncatedEGF::dimension(int colour,
                                 const std::vector<int>& weights) const {
  return coefficient(colour, weights) * factorial_product(weights);
}

std::string TruncatedEGF::to_string() const {
  // Collect (total, exponents, colour) triples for a stable ordering.
  std::vector<std::pair<std::vector<int>, int>> keys;
  for (int c = 0; c < static_cast<int>(components.size()); ++c)
    for (const auto& [e, coeff] : components[c]) keys.push_back({e, c});
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (total(a.first) != total(b.first))
      return total(a.first) < total(b.first);
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::ostringstream os;
  for (const auto& [e, c] : keys) {
    os << "(";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << " | " << palette->name(c)
       << ") : " << operadix::to_string(dimension(c, e)) << "\n";
  }
  return os.str();
}

TruncatedEGF series_from_dimensions(const DimensionTable& table,
                                    const PaletteRef& palette, int N) {
  int d = palette->size();
  TruncatedEGF out{palette, N, std::vector<ExponentMap>(d)};
  std::vector<int> weights(d, 0);
  for (int n = 1; n <= N; ++n) {
    std::fill(weights.begin(), weights.end(), 0);
    weights[d - 1] = n;
    for (;;) {
      for (int c = 0; c < d; ++c) {
        auto it = table.find({weights, c});
        if (it == table.end())
          throw Error("series_from_dimensions: table is missing a weight");
        if (it->second != 0)
          out.components[c].emplace(
              weights, Rational(it->second) / factorial_product(weights));
      }
      int i = d - 1;
      while (i > 0 && weights[i] == 0) --i;
      if (i == 0) break;
      ++weights[i - 1];
      int rest = weights[i] - 1;
      weights[i] = 0;
      weights[d - 1] = rest;
    }
  }
  return out;
}

TruncatedEGF compose_series(const TruncatedEGF& F, const TruncatedEGF& G,
                            int N) {
  if (*F.palette != *G.palette)
    throw Error("compose_series: palettes differ");
  int d = F.palette->size();
  for (int j = 0; j < d; ++j)
    if (constant_term(G.components[j], d) != 0)
      throw Error("compose_series: substituted series has a constant term");

  // powers[j][k] = (G^j)^k, truncated.
  std::vector<std::vector<ExponentMap>> powers(d);
  for (int j = 0; j < d; ++j) {
    powers[j].push_back({{std::vector<int>(d, 0), Rational(1)}});
    for (int k = 1; k <= N; ++k)
      powers[j].push_back(multiply(powers[j][k - 1], G.components[j], N));
  }

  TruncatedEGF out{F.palette, N, std::vector<ExponentMap>(d)};
  for (int c = 0; c < d; ++c) {
    for (const auto& [e, coeff] : F.components[c]) {
      if (total(e) > N) continue;  // cannot reach degree <= N after subst
      ExponentMap term{{std::vector<int>(d, 0), coeff}};
      for (int j = 0; j < d && !term.empty(); ++j)
        if (e[j] > 0) term = multiply(term, powers[j][e[j]], N);
      out.components[c] = add(out.components[c], term);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form expressions.

struct SeriesExpr {
  enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Exp, Log };
  Kind kind;
  Rational value;     // Constant
  int variable = -1;  // Variable, 0-based
  SeriesExprRef lhs, rhs;
};

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, int n_vars)
      : text_(text), n_vars_(n_vars) {}

  SeriesExprRef parse() {
    auto e = parse_sum();
    skip_ws();
    if (pos_ != text_.size())
      throw Error("series expression: trailing input at '" +
                  text_.substr(pos_) + "'");
    return e;
  }

 private:
  static SeriesExprRef node(SeriesExpr e) {
    return std::make_shared<const SeriesExpr>(std::move(e));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(text_[pos_])) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SeriesExprRef parse_sum() {
    auto lhs = parse_product();
    for (;;) {
      if (eat('+'))
        lhs = node({SeriesExpr::Kind::Add, 0, -1, lhs, parse_product()});
      else if (eat('-'))
        lhs = node({SeriesExpr::Kind::Sub, 0, -1, lhs, parse_product()});
      else
        return lhs;
    }
  }

  SeriesExprRef parse_product() {
    auto lhs = parse_atom();
    for (;;) {
      if (eat('*'))
        lhs = node({SeriesExpr::Kind::Mul, 0, -1, lhs, parse_atom()});
      else if (eat('/'))
        lhs = node({SeriesExpr::Kind::Div, 0, -1, lhs, parse_atom()});
      else
        return lhs;
    }
  }

  SeriesExprRef parse_atom() {
    skip_ws();
    if (eat('-'))  // unary minus: 0 - atom
      return node({SeriesExpr::Kind::Sub, 0, -1,
                   node({SeriesExpr::Kind::Constant, 0, -1, {}, {}}),
                   parse_atom()});
    if (eat('(')) {
      auto e = parse_sum();
      if (!eat(')')) throw Error("series expression: expected ')'");
      return e;
    }
    if (pos_ < text_.size() && std::isdigit(text_[pos_])) {
      long v = 0;
      while (pos_ < text_.size() && std::isdigit(text_[pos_]))
        v = v * 10 + (text_[pos_++] - '0');
      return node({SeriesExpr::Kind::Constant, rational(v), -1, {}, {}});
    }
    std::string word;
    while (pos_ < text_.size() &&
           (std::isalnum(text_[pos_]) || text_[pos_] == '_'))
      word += text_[pos_++];
    if (word == "exp" || word == "log") {
      if (!eat('(')) throw Error("series expression: expected '(' after " +
                                 word);
      auto arg = parse_sum();
      if (!eat(')')) throw Error("series expression: expected ')'");
      return node({word == "exp" ? SeriesExpr::Kind::Exp
                                 : SeriesExpr::Kind::Log,
                   0, -1, arg, {}});
    }
    if (word.size() >= 2 && word[0] == 't') {
      int idx = 0;
      for (size_t i = 1; i < word.size(); ++i) {
        if (!std::isdigit(word[i]))
          throw Error("series expression: bad variable '" + word + "'");
        idx = idx * 10 + (word[i] - '0');
      }
      if (idx < 1 || idx > n_vars_)
        throw Error("series expression: variable '" + word +
                    "' is out of range");
      return node({SeriesExpr::Kind::Variable, 0, idx - 1, {}, {}});
    }
    throw Error("series expression: unexpected input at position " +
                std::to_string(pos_));
  }

  const std::string& text_;
  int n_vars_;
  size_t pos_ = 0;
};

ExponentMap eval(const SeriesExpr& e, int n_vars, int N) {
  switch (e.kind) {
    case SeriesExpr::Kind::Constant: {
      ExponentMap out;
      if (e.value != 0) out.emplace(std::vector<int>(n_vars, 0), e.value);
      return out;
    }
    case SeriesExpr::Kind::Variable: {
      ExponentMap out;
      if (N >= 1) {
        std::vector<int> exp(n_vars, 0);
        exp[e.variable] = 1;
        out.emplace(std::move(exp), Rational(1));
      }
      return out;
    }
    case SeriesExpr::Kind::Add:
      return add(eval(*e.lhs, n_vars, N), eval(*e.rhs, n_vars, N));
    case SeriesExpr::Kind::Sub:
      return add(eval(*e.lhs, n_vars, N), negate(eval(*e.rhs, n_vars, N)));
    case SeriesExpr::Kind::Mul:
      return multiply(eval(*e.lhs, n_vars, N), eval(*e.rhs, n_vars, N), N);
    case SeriesExpr::Kind::Div:
      return divide(eval(*e.lhs, n_vars, N), eval(*e.rhs, n_vars, N), n_vars,
                    N);
    case SeriesExpr::Kind::Exp:
      return exponential(eval(*e.lhs, n_vars, N), n_vars, N);
    case SeriesExpr::Kind::Log:
      return logarithm(eval(*e.lhs, n_vars, N), n_vars, N);
  }
  throw Error("series expression: unreachable");
}

}  // namespace

SeriesExprRef parse_series_expr(const std::string& text, int n_vars) {
  return ExprParser(text, n_vars).parse();
}

ExponentMap eval_series_expr(const SeriesExprRef& expr, int n_vars, int N) {
  return eval(*expr, n_vars, N);
}

TruncatedEGF eval_closed_form(const std::vector<std::string>& component_exprs,
                              const PaletteRef& palette, int N) {
  if (static_cast<int>(component_exprs.size()) != palette->size())
    throw Error("eval_closed_form: one expression per colour required");
  TruncatedEGF out{palette, N, {}};
  for (const auto& text : component_exprs)
    out.components.push_back(eval_series_expr(
        parse_series_expr(text, palette->size()), palette->size(), N));
  return out;
}

}  // namespace operadix

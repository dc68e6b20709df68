#include "operadix/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "operadix/error.hpp"

namespace operadix {

namespace {

constexpr const char* kMinus = "\xe2\x88\x92";  // U+2212

/// Terms of f sorted descending under the ordering.
std::vector<std::pair<TreeMonomial, Rational>> sorted_terms(
    const OperadPolynomial& f, const MonomialOrder& ord) {
  std::vector<std::pair<TreeMonomial, Rational>> out(f.terms().begin(),
                                                     f.terms().end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) {
              return ord.greater(a.first, b.first);
            });
  return out;
}

/// The embedding of lt(g) in `host` whose root vertex is earliest in
/// preorder; empty optional when not divisible.
std::vector<Embedding> divisor_embeddings(const TreeMonomial& host,
                                          const TreeMonomial& pattern) {
  auto embs = find_divisors(host, pattern);
  std::stable_sort(embs.begin(), embs.end(),
                   [](const Embedding& a, const Embedding& b) {
                     return a.vertex_map.at(0) < b.vertex_map.at(0);
                   });
  return embs;
}

}  // namespace

OperadPolynomial OperadPolynomial::monomial(const TreeMonomial& t,
                                            const Rational& c) {
  OperadPolynomial p(Signature::of(t));
  p.add_term(t, c);
  return p;
}

void OperadPolynomial::add_term(const TreeMonomial& t, const Rational& c) {
  if (c == 0) return;
  if (Signature::of(t) != sig_)
    throw Error("polynomial: signature mismatch adding a term");
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational OperadPolynomial::coefficient(const TreeMonomial& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

OperadPolynomial& OperadPolynomial::operator+=(const OperadPolynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && sig_ != o.sig_ && sig_.arity == 0) sig_ = o.sig_;
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

OperadPolynomial& OperadPolynomial::operator-=(const OperadPolynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && sig_ != o.sig_ && sig_.arity == 0) sig_ = o.sig_;
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

OperadPolynomial& OperadPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms_) coeff *= c;
  return *this;
}

std::string OperadPolynomial::to_string(const GeneratorSet& gens,
                                        const MonomialOrder& ord) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : sorted_terms(*this, ord)) {
    bool neg = c < 0;
    if (first) {
      if (neg) os << kMinus;
    } else {
      os << (neg ? std::string(" ") + kMinus + " " : " + ");
    }
    Rational mag = neg ? Rational(-c) : c;
    if (mag != 1) os << operadix::to_string(mag) << " ";
    os << t.to_string(gens);
    first = false;
  }
  return os.str();
}

std::pair<TreeMonomial, Rational> leading_term(const OperadPolynomial& f,
                                               const MonomialOrder& ord) {
  if (f.is_zero()) throw Error("leading_term of the zero polynomial");
  const std::pair<const TreeMonomial, Rational>* best = nullptr;
  for (const auto& entry : f.terms())
    if (!best || ord.greater(entry.first, best->first)) best = &entry;
  return {best->first, best->second};
}

OperadPolynomial monic(const OperadPolynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) return f;
  auto [lt, c] = leading_term(f, ord);
  OperadPolynomial out = f;
  out *= Rational(1) / c;
  return out;
}

OperadPolynomial substitute_polynomial(const Embedding& e,
                                       const OperadPolynomial& g) {
  OperadPolynomial out(Signature::of(e.host));
  for (const auto& [t, c] : g.terms()) out.add_term(substitute(e, t), c);
  return out;
}

OperadPolynomial reduce_once(const OperadPolynomial& f,
                             const OperadPolynomial& g,
                             const MonomialOrder& ord) {
  auto [ltf, cf] = leading_term(f, ord);
  auto [ltg, cg] = leading_term(g, ord);
  auto embs = divisor_embeddings(ltf, ltg);
  if (embs.empty())
    throw Error("reduce_once: leading term not divisible");
  return f - substitute_polynomial(embs.front(), g) * (cf / cg);
}

NormalFormResult normal_form(const OperadPolynomial& f,
                             const std::vector<OperadPolynomial>& basis,
                             const MonomialOrder& ord) {
  NormalFormResult res{f, {}};
  std::vector<std::pair<TreeMonomial, Rational>> lts;
  lts.reserve(basis.size());
  for (const auto& g : basis) lts.push_back(leading_term(g, ord));

  for (;;) {
    bool reduced = false;
    for (const auto& [u, cu] : sorted_terms(res.remainder, ord)) {
      for (size_t k = 0; k < basis.size() && !reduced; ++k) {
        auto embs = divisor_embeddings(u, lts[k].first);
        if (embs.empty()) continue;
        res.remainder -=
            substitute_polynomial(embs.front(), basis[k]) * (cu / lts[k].second);
        res.trace.push_back(
            {static_cast<int>(k), u, res.remainder});
        reduced = true;
      }
      if (reduced) break;
    }
    if (!reduced) return res;
  }
}

OperadPolynomial apply_rule_step(const OperadPolynomial& f,
                                 const OperadPolynomial& rule,
                                 const MonomialOrder& ord) {
  auto [ltr, cr] = leading_term(rule, ord);
  OperadPolynomial out = f;
  for (const auto& entry : sorted_terms(f, ord)) {
    const TreeMonomial& u = entry.first;
    Rational cu = out.coefficient(u);
    if (cu == 0) continue;
    auto embs = divisor_embeddings(u, ltr);
    if (embs.empty()) continue;
    out -= substitute_polynomial(embs.front(), rule) * (cu / cr);
  }
  return out;
}

OperadPolynomial s_polynomial(const OperadPolynomial& f,
                              const OperadPolynomial& g,
                              const SmallCommonMultiple& scm,
                              const MonomialOrder& ord) {
  auto [ltf, cf] = leading_term(f, ord);
  auto [ltg, cg] = leading_term(g, ord);
  if (scm.emb_alpha.pattern != ltf || scm.emb_beta.pattern != ltg)
    throw Error("s_polynomial: SCM embeddings do not match leading terms");
  return substitute_polynomial(scm.emb_alpha, f) -
         substitute_polynomial(scm.emb_beta, g) * (cf / cg);
}

std::string format_trace(const OperadPolynomial& start,
                         const std::vector<TraceStep>& steps,
                         const std::vector<std::string>& rule_labels,
                         const GeneratorSet& gens, const MonomialOrder& ord) {
  std::ostringstream os;
  const OperadPolynomial* prev = &start;
  for (const auto& step : steps) {
    os << prev->to_string(gens, ord) << "  ={"
       << rule_labels.at(step.rule) << "}=>  "
       << step.result.to_string(gens, ord) << "\n";
    prev = &step.result;
  }
  return os.str();
}

}  // namespace operadix

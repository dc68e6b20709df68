#pragma once

#include <map>
#include <string>
#include <vector>

#include "operadix/ordering.hpp"
#include "operadix/rational.hpp"
#include "operadix/tree.hpp"

namespace operadix {

/// Common shape of all monomials in a homogeneous polynomial.
struct Signature {
  int arity = 0;
  std::vector<int> input_colours;  // by leaf label
  int output_colour = 0;

  bool operator==(const Signature& o) const {
    return arity == o.arity && input_colours == o.input_colours &&
           output_colour == o.output_colour;
  }
  bool operator!=(const Signature& o) const { return !(*this == o); }

  static Signature of(const TreeMonomial& t) {
    return {t.arity(), t.input_colours(), t.output_colour()};
  }
};

/// Linear combination of tree monomials sharing one signature, with exact
/// rational coefficients. Zero coefficients are never stored; the zero
/// polynomial is an empty term map tagged with its signature.
class OperadPolynomial {
 public:
  explicit OperadPolynomial(Signature sig) : sig_(std::move(sig)) {}
  static OperadPolynomial monomial(const TreeMonomial& t,
                                   const Rational& c = 1);

  const Signature& signature() const { return sig_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TreeMonomial, Rational>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Adds c·t, erasing the entry when it cancels. Throws on a signature
  /// mismatch.
  void add_term(const TreeMonomial& t, const Rational& c);
  Rational coefficient(const TreeMonomial& t) const;

  OperadPolynomial& operator+=(const OperadPolynomial& o);
  OperadPolynomial& operator-=(const OperadPolynomial& o);
  OperadPolynomial& operator*=(const Rational& c);
  friend OperadPolynomial operator+(OperadPolynomial a,
                                    const OperadPolynomial& b) {
    return a += b;
  }
  friend OperadPolynomial operator-(OperadPolynomial a,
                                    const OperadPolynomial& b) {
    return a -= b;
  }
  friend OperadPolynomial operator*(OperadPolynomial a, const Rational& c) {
    return a *= c;
  }
  bool operator==(const OperadPolynomial& o) const {
    return sig_ == o.sig_ && terms_ == o.terms_;
  }
  bool operator!=(const OperadPolynomial& o) const { return !(*this == o); }

  /// Canonical text form: terms sorted descending under `ord`, coefficient
  /// magnitude as `p/q` (omitted when ±1), signs folded into ` + ` / ` − `
  /// separators (leading `−` for a negative first term).
  std::string to_string(const GeneratorSet& gens,
                        const MonomialOrder& ord) const;

 private:
  Signature sig_;
  std::map<TreeMonomial, Rational> terms_;
};

/// Greatest monomial of f under the ordering, with its coefficient.
/// Throws on the zero polynomial.
std::pair<TreeMonomial, Rational> leading_term(const OperadPolynomial& f,
                                               const MonomialOrder& ord);

/// Divides f by its leading coefficient.
OperadPolynomial monic(const OperadPolynomial& f, const MonomialOrder& ord);

/// The substitution operator applied to a whole polynomial: every term of
/// g replaces the embedded pattern in e.host.
OperadPolynomial substitute_polynomial(const Embedding& e,
                                       const OperadPolynomial& g);

/// One reduction of f modulo g at the leading term of f:
/// f − (c_f/c_g)·m(g) where m substitutes g for the embedding of lt(g)
/// inside lt(f) whose root vertex is earliest in preorder. Throws when
/// lt(f) is not divisible by lt(g).
OperadPolynomial reduce_once(const OperadPolynomial& f,
                             const OperadPolynomial& g,
                             const MonomialOrder& ord);

struct TraceStep {
  int rule = -1;                   // index into the basis list
  TreeMonomial reduced_monomial;   // the monomial rewritten at this step
  OperadPolynomial result;
};

struct NormalFormResult {
  OperadPolynomial remainder;
  std::vector<TraceStep> trace;
};

/// Iterated reduction of every divisible monomial (not only leading
/// terms): repeatedly rewrites the greatest monomial divisible by some
/// basis leading term, scanning the basis in list order. The remainder
/// contains no monomial divisible by any lt(g).
NormalFormResult normal_form(const OperadPolynomial& f,
                             const std::vector<OperadPolynomial>& basis,
                             const MonomialOrder& ord);

/// One printed-trace style step: rewrites every monomial of f divisible
/// by lt(rule) (one reduction per monomial, earliest embedding), walking
/// a descending snapshot of f's support with live coefficients.
OperadPolynomial apply_rule_step(const OperadPolynomial& f,
                                 const OperadPolynomial& rule,
                                 const MonomialOrder& ord);

/// The S-polynomial at a small common multiple γ of lt(f), lt(g):
/// m_{γ,lt(f)}(f) − (c_f/c_g)·m_{γ,lt(g)}(g); the γ-terms cancel. The
/// embeddings carried by `scm` must embed the leading terms.
OperadPolynomial s_polynomial(const OperadPolynomial& f,
                              const OperadPolynomial& g,
                              const SmallCommonMultiple& scm,
                              const MonomialOrder& ord);

/// Renders a reduction run in the fixed trace format: one line per step,
/// `<poly>  ={<RuleLabel>}=>  <poly>`.
std::string format_trace(const OperadPolynomial& start,
                         const std::vector<TraceStep>& steps,
                         const std::vector<std::string>& rule_labels,
                         const GeneratorSet& gens, const MonomialOrder& ord);

}  // namespace operadix

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "operadix/error.hpp"
#include "operadix/polynomial.hpp"

using namespace operadix;

namespace {

GeneratorSetRef mono_gens() {
  auto p = make_palette({"*"});
  std::vector<Generator> gens = {{"b", Colouring(p, {0, 0}), 0}};
  return std::make_shared<const GeneratorSet>(p, std::move(gens));
}

MonomialOrder mono_order(const GeneratorSetRef& g) {
  PathLexSpec pl;
  pl.letters = {"b"};
  return MonomialOrder(OrderingSpec{pl}, g);
}

// Commutative algebra with a compatible Lie algebra acting by derivations.
GeneratorSetRef lier_gens() {
  auto p = make_palette({"c1", "c2"});
  std::vector<Generator> gens = {
      {"alpha", Colouring(p, {0, 0}), 0}, {"beta", Colouring(p, {1, 1}), 1},
      {"d", Colouring(p, {0, 1}), 0},     {"e", Colouring(p, {1, 0}), 0},
      {"m", Colouring(p, {0, 1}), 1},     {"n", Colouring(p, {1, 0}), 1},
  };
  return std::make_shared<const GeneratorSet>(p, std::move(gens));
}

MonomialOrder lier_order(const GeneratorSetRef& g) {
  TieredQMSpec tq;
  tq.tiers = {{{"alpha"}, false, false},
              {{"d", "e"}, false, false},
              {{"beta", "n", "m"}, true, false}};
  tq.greater_q_is_greater = true;
  tq.fallback.letters = {"alpha", "m", "n", "beta", "d", "e"};
  tq.fallback_weights = {{"alpha", -1}, {"d", 1}, {"e", 1},
                         {"beta", 1},   {"m", 0}, {"n", -1}};
  return MonomialOrder(OrderingSpec{tq}, g);
}

// Commutative algebra with one derivation-like arrow d and its flip e.
GeneratorSetRef dcom_gens() {
  auto p = make_palette({"c1", "c2"});
  std::vector<Generator> gens = {
      {"alpha", Colouring(p, {0, 0}), 0},
      {"d", Colouring(p, {0, 1}), 0},
      {"e", Colouring(p, {1, 0}), 0},
  };
  return std::make_shared<const GeneratorSet>(p, std::move(gens));
}

MonomialOrder dcom_order(const GeneratorSetRef& g) {
  TieredQMSpec tq;
  tq.tiers = {{{"alpha"}, false, false}, {{"d", "e"}, true, false}};
  tq.greater_q_is_greater = true;
  tq.fallback.letters = {"alpha", "d", "e"};
  tq.fallback_weights = {{"alpha", -1}, {"d", 1}, {"e", 1}};
  return MonomialOrder(OrderingSpec{tq}, g);
}

/// Builds a polynomial from (coefficient, canonical term text) pairs.
OperadPolynomial poly(const GeneratorSetRef& g,
                      std::vector<std::pair<long, const char*>> terms) {
  REQUIRE(!terms.empty());
  auto first = parse_monomial(*g, terms.front().second);
  OperadPolynomial out(Signature::of(first));
  for (const auto& [c, text] : terms)
    out.add_term(parse_monomial(*g, text), rational(c));
  return out;
}

}  // namespace

TEST_CASE("term map arithmetic and signature checks") {
  auto g = mono_gens();
  auto t = parse_monomial(*g, "b(b(1,2),3)");
  auto u = parse_monomial(*g, "b(1,b(2,3))");
  auto f = OperadPolynomial::monomial(t, rational(2));
  f.add_term(u, rational(1, 2));
  CHECK(f.term_count() == 2);
  CHECK(f.coefficient(t) == rational(2));
  CHECK(f.coefficient(u) == rational(1, 2));

  // Cancellation erases the entry.
  f.add_term(t, rational(-2));
  CHECK(f.term_count() == 1);
  CHECK(f.coefficient(t) == 0);

  // Arity-mismatched terms are rejected.
  CHECK_THROWS_AS(f.add_term(parse_monomial(*g, "b(1,2)"), rational(1)), Error);

  f *= rational(4);
  CHECK(f.coefficient(u) == rational(2));
  f *= rational(0);
  CHECK(f.is_zero());

  auto s = OperadPolynomial::monomial(t) + OperadPolynomial::monomial(u);
  auto diff = s - OperadPolynomial::monomial(u);
  CHECK(diff == OperadPolynomial::monomial(t));
}

TEST_CASE("leading terms of curated quadratic relations") {
  auto g = lier_gens();
  auto ord = lier_order(g);

  // Right-comb associativity form: the right comb leads with coefficient -1.
  auto com2 = poly(g, {{1, "alpha(alpha(1,2),3)"}, {-1, "alpha(1,alpha(2,3))"}});
  auto [lt2, c2] = leading_term(com2, ord);
  CHECK(lt2 == parse_monomial(*g, "alpha(1,alpha(2,3))"));
  CHECK(c2 == rational(-1));

  // Jacobi form: the left comb beta(beta(1,2),3) leads.
  auto jac = poly(g, {{1, "beta(beta(1,2),3)"},
                      {-1, "beta(beta(1,3),2)"},
                      {-1, "beta(1,beta(2,3))"}});
  auto [ltj, cj] = leading_term(jac, ord);
  CHECK(ltj == parse_monomial(*g, "beta(beta(1,2),3)"));
  CHECK(cj == rational(1));

  CHECK_THROWS_AS(leading_term(OperadPolynomial(com2.signature()), ord), Error);

  auto m = monic(com2, ord);
  CHECK(m.coefficient(lt2) == rational(1));
  CHECK(m.coefficient(parse_monomial(*g, "alpha(alpha(1,2),3)")) ==
        rational(-1));
}

TEST_CASE("canonical text rendering") {
  auto g = mono_gens();
  auto ord = mono_order(g);
  auto L = parse_monomial(*g, "b(b(1,2),3)");
  auto R = parse_monomial(*g, "b(1,b(2,3))");

  auto f = OperadPolynomial::monomial(L) - OperadPolynomial::monomial(R);
  // Descending terms, sign folded into the separator, unit magnitude omitted.
  CHECK(f.to_string(*g, ord) == "b(b(1,2),3) − b(1,b(2,3))");

  auto h = OperadPolynomial::monomial(R, rational(-1, 2));
  h.add_term(L, rational(3));
  CHECK(h.to_string(*g, ord) == "3 b(b(1,2),3) − 1/2 b(1,b(2,3))");

  CHECK(OperadPolynomial(f.signature()).to_string(*g, ord) == "0");
}

TEST_CASE("single reduction steps") {
  auto g = mono_gens();
  auto ord = mono_order(g);
  auto rule = poly(g, {{1, "b(b(1,2),3)"}, {-1, "b(1,b(2,3))"}});

  // Self-reduction is exact.
  CHECK(reduce_once(rule, rule, ord).is_zero());

  auto f = OperadPolynomial::monomial(parse_monomial(*g, "b(b(1,2),3)"),
                                      rational(5));
  auto r = reduce_once(f, rule, ord);
  CHECK(r == OperadPolynomial::monomial(parse_monomial(*g, "b(1,b(2,3))"),
                                        rational(5)));

  // The right comb is not divisible by the left comb.
  CHECK_THROWS_AS(reduce_once(r, rule, ord), Error);
}

TEST_CASE("normal form with trace on the one-generator comb rule") {
  auto g = mono_gens();
  auto ord = mono_order(g);
  auto rule = poly(g, {{1, "b(b(1,2),3)"}, {-1, "b(1,b(2,3))"}});

  auto f = OperadPolynomial::monomial(parse_monomial(*g, "b(b(1,2),3)"),
                                      rational(1, 2));
  auto res = normal_form(f, {rule}, ord);
  CHECK(res.remainder ==
        OperadPolynomial::monomial(parse_monomial(*g, "b(1,b(2,3))"),
                                   rational(1, 2)));
  REQUIRE(res.trace.size() == 1);
  CHECK(res.trace[0].rule == 0);
  CHECK(res.trace[0].reduced_monomial == parse_monomial(*g, "b(b(1,2),3)"));

  CHECK(format_trace(f, res.trace, {"As"}, *g, ord) ==
        "1/2 b(b(1,2),3)  ={As}=>  1/2 b(1,b(2,3))\n");

  // Idempotence: the remainder is already reduced.
  CHECK(normal_form(res.remainder, {rule}, ord).remainder == res.remainder);
}

TEST_CASE("full-polynomial reduction below the leading term") {
  auto g = mono_gens();
  auto ord = mono_order(g);
  auto rule = poly(g, {{1, "b(b(1,2),3)"}, {-1, "b(1,b(2,3))"}});

  // Arity-4 monomial whose non-leading terms also need rewriting.
  auto f = poly(g, {{1, "b(b(b(1,2),3),4)"}, {1, "b(b(1,2),b(3,4))"}});
  auto res = normal_form(f, {rule}, ord);
  CHECK(res.remainder ==
        poly(g, {{2, "b(1,b(2,b(3,4)))"}}));
  for (const auto& step : res.trace) CHECK(step.rule == 0);
  CHECK(res.trace.size() == 2);

  // Linearity in the input scalar.
  auto scaled = normal_form(f * rational(-3, 7), {rule}, ord);
  CHECK(scaled.remainder == res.remainder * rational(-3, 7));
}

TEST_CASE("s-polynomial cancels the common multiple") {
  auto g = mono_gens();
  auto ord = mono_order(g);
  auto rule = poly(g, {{1, "b(b(1,2),3)"}, {-1, "b(1,b(2,3))"}});
  auto lt = parse_monomial(*g, "b(b(1,2),3)");

  auto scms = small_common_multiples(*g, lt, lt);
  CHECK(!scms.empty());
  for (const auto& scm : scms) {
    auto s = s_polynomial(rule, rule, scm, ord);
    CHECK(s.coefficient(scm.gamma) == 0);
    // Associativity is a Groebner basis for itself: every s-polynomial
    // reduces to zero.
    CHECK(normal_form(s, {rule}, ord).remainder.is_zero());
  }
}

TEST_CASE("two-colour overlap: the derivation trace start line") {
  auto g = dcom_gens();
  auto ord = dcom_order(g);

  // Associativity family member with the 132-comb leading term, and the
  // derivation rule in its flipped form rooted at e.
  auto as_lx =
      poly(g, {{1, "alpha(alpha(1,2),3)"}, {-1, "alpha(alpha(1,3),2)"}});
  auto leib_e = poly(g, {{1, "e(1,alpha(2,3))"},
                         {-1, "alpha(e(1,2),3)"},
                         {-1, "alpha(e(1,3),2)"}});

  auto ltf = leading_term(leib_e, ord).first;
  CHECK(ltf == parse_monomial(*g, "e(1,alpha(2,3))"));
  auto ltg = leading_term(as_lx, ord).first;
  CHECK(ltg == parse_monomial(*g, "alpha(alpha(1,3),2)"));

  auto gamma = parse_monomial(*g, "e(1,alpha(alpha(2,4),3))");
  OperadPolynomial s(Signature::of(gamma));
  bool found = false;
  for (const auto& scm : small_common_multiples(*g, ltf, ltg)) {
    if (scm.gamma != gamma) continue;
    found = true;
    s = s_polynomial(leib_e, as_lx, scm, ord);
  }
  REQUIRE(found);
  CHECK(s == poly(g, {{1, "e(1,alpha(alpha(2,3),4))"},
                      {-1, "alpha(e(1,alpha(2,4)),3)"},
                      {-1, "alpha(e(1,3),alpha(2,4))"}}));
}

TEST_CASE("stepwise rule application replays the derivation overlap to zero") {
  auto g = dcom_gens();
  auto ord = dcom_order(g);

  auto as_lr =
      poly(g, {{1, "alpha(alpha(1,2),3)"}, {-1, "alpha(1,alpha(2,3))"}});
  auto as_lx =
      poly(g, {{1, "alpha(alpha(1,2),3)"}, {-1, "alpha(alpha(1,3),2)"}});
  auto leib_e = poly(g, {{1, "e(1,alpha(2,3))"},
                         {-1, "alpha(e(1,2),3)"},
                         {-1, "alpha(e(1,3),2)"}});

  auto p0 = poly(g, {{1, "e(1,alpha(alpha(2,3),4))"},
                     {-1, "alpha(e(1,alpha(2,4)),3)"},
                     {-1, "alpha(e(1,3),alpha(2,4))"}});

  auto p1 = apply_rule_step(p0, as_lr, ord);
  CHECK(p1 == poly(g, {{1, "e(1,alpha(alpha(2,3),4))"},
                       {-1, "alpha(e(1,alpha(2,4)),3)"},
                       {-1, "alpha(alpha(e(1,3),2),4)"}}));

  // One step rewrites both monomials rooted in the flipped derivation.
  auto p2 = apply_rule_step(p1, leib_e, ord);
  CHECK(p2 == poly(g, {{-1, "alpha(alpha(e(1,3),2),4)"},
                       {1, "alpha(e(1,alpha(2,3)),4)"},
                       {1, "alpha(e(1,4),alpha(2,3))"},
                       {-1, "alpha(alpha(e(1,2),4),3)"},
                       {-1, "alpha(alpha(e(1,4),2),3)"}}));

  auto p3 = apply_rule_step(p2, leib_e, ord);
  CHECK(p3 == poly(g, {{1, "alpha(e(1,4),alpha(2,3))"},
                       {-1, "alpha(alpha(e(1,2),4),3)"},
                       {-1, "alpha(alpha(e(1,4),2),3)"},
                       {1, "alpha(alpha(e(1,2),3),4)"}}));

  auto p4 = apply_rule_step(p3, as_lx, ord);
  CHECK(p4 == poly(g, {{1, "alpha(e(1,4),alpha(2,3))"},
                       {-1, "alpha(alpha(e(1,4),2),3)"}}));

  auto p5 = apply_rule_step(p4, as_lr, ord);
  CHECK(p5.is_zero());

  // The generic reducer also kills the overlap against the same rules,
  // and a rule with no divisible monomial is a no-op.
  CHECK(normal_form(p0, {as_lr, as_lx, leib_e}, ord).remainder.is_zero());
  CHECK(apply_rule_step(p4, leib_e, ord) == p4);
}

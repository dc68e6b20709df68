#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "operadix/completion.hpp"
#include "operadix/symmetrize.hpp"
#include "test_operads.hpp"

using namespace operadix;
using namespace operadix::testing;

namespace {

struct Instance {
  SymmetricPresentation sp;
  ShuffleExpansion ex;
  MonomialOrder ord;
  std::vector<OperadPolynomial> rels;
};

Instance make_instance(SymmetricPresentation sp, OrderingSpec spec) {
  auto ex = expand_generators(sp);
  MonomialOrder ord(spec, ex.gens);
  auto rels = expand_relations(sp, ex);
  return {std::move(sp), std::move(ex), std::move(ord), std::move(rels)};
}

long slice_total(const MonomialOrder& ord, int arity,
                 const std::vector<int>& colouring, int output_colour) {
  EnumerationFilter filter;
  filter.arity = arity;
  filter.output_colour = output_colour;
  filter.input_colouring = colouring;
  filter.max_degree = degree_bound_for_arity(*ord.gens(), arity);
  return static_cast<long>(enumerate_monomials(*ord.gens(), filter).size());
}

/// Checks #normal == #monomials - rank(ideal slice) on every signature
/// with total arity <= max_arity, both built from the raw relations.
void check_rank_oracle(const Instance& inst, int max_arity) {
  auto gb = buchberger(inst.rels, inst.ord, 3);
  const auto& palette = inst.ex.gens->palette();
  int d = palette->size();
  for (int n = 1; n <= max_arity; ++n) {
    std::vector<int> weights(d, 0);
    weights[d - 1] = n;
    for (;;) {
      auto colouring = standard_colouring(palette, weights).values();
      for (int out = 0; out < d; ++out) {
        long normal = static_cast<long>(
            normal_monomials(gb, inst.ord, n, colouring, out).size());
        long total = slice_total(inst.ord, n, colouring, out);
        long rank = ideal_slice_rank(inst.rels, inst.ord, n, colouring, out);
        CHECK_MESSAGE(normal == total - rank, "arity ", n, " output ", out,
                      " weights (", weights[0], ",", weights[d - 1], ")");
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
}

/// The colour-blind consistency check: every small common multiple of a
/// colour-mixing monomial and a (stripped) basis element reduces to zero
/// using the colour-mixing monomials alone.
void check_colour_mixing(const Instance& inst) {
  auto blind = colour_blind(*inst.ex.gens);
  MonomialOrder bord(inst.ord.spec(), blind);
  auto mixing = colour_mixing_monomials(*inst.ex.gens);
  REQUIRE(!mixing.empty());

  std::vector<OperadPolynomial> mixing_polys;
  for (const auto& b : mixing)
    mixing_polys.push_back(OperadPolynomial::monomial(b));

  auto gb = buchberger(inst.rels, inst.ord, 3);
  long scms_checked = 0;
  for (const auto& g : gb.elements) {
    OperadPolynomial g_blind(
        Signature{g.signature().arity,
                  std::vector<int>(g.signature().arity, 0), 0});
    for (const auto& [t, c] : g.terms())
      g_blind.add_term(strip_colours(*blind, t), c);
    auto lt_g = leading_term(g_blind, bord).first;

    for (const auto& b : mixing) {
      auto b_poly = OperadPolynomial::monomial(b);
      for (const auto& scm : small_common_multiples(*blind, b, lt_g)) {
        if (scm.gamma.arity() > 4) continue;
        auto s = s_polynomial(b_poly, g_blind, scm, bord);
        auto nf = normal_form(s, mixing_polys, bord);
        CHECK(nf.remainder.is_zero());
        ++scms_checked;
      }
    }
  }
  CHECK(scms_checked > 0);
}

}  // namespace

TEST_CASE("full two-coloured derivation system certifies as quadratic") {
  auto inst = make_instance(lier_sp(), lier_order_spec());
  CHECK(inst.rels.size() == 28);

  auto report = is_quadratic_groebner(inst.rels, inst.ord);
  CHECK(report.new_elements_added == 0);
  for (const auto& outcome : report.log) CHECK(outcome.reduced_to_zero);
  // This ordering genuinely needs its deterministic fallback.
  CHECK(report.fallback_uses > 0);

  // The first sixteen relations avoid the action generators m, n entirely;
  // their S-polynomial reductions never touch a cross-family rule.
  for (const auto& outcome : report.log)
    if (outcome.f < 16 && outcome.g < 16)
      for (int rule : outcome.rules_used) CHECK(rule < 16);
}

TEST_CASE("the fragment without the cross families certifies on its own") {
  auto inst = make_instance(dercom_sp(), lier_order_spec());
  CHECK(inst.rels.size() == 16);
  auto report = is_quadratic_groebner(inst.rels, inst.ord);
  CHECK(report.new_elements_added == 0);
}

TEST_CASE("commutative algebra with a derivation arrow certifies") {
  auto inst = make_instance(dcom_sp(), dcom_order_spec());
  CHECK(inst.rels.size() == 6);
  auto gb = buchberger(inst.rels, inst.ord, 3);
  CHECK(gb.certificate.new_elements_added == 0);
  std::set<std::string> lts;
  for (const auto& g : gb.elements)
    lts.insert(leading_term(g, inst.ord).first.to_string(*inst.ex.gens));
  std::set<std::string> expected = {
      "alpha(1,alpha(2,3))", "alpha(alpha(1,3),2)", "d(alpha(1,2),3)",
      "d(alpha(1,3),2)",     "e(1,alpha(2,3))",
  };
  CHECK(lts == expected);
}

TEST_CASE("signature-pinned enumeration agrees with the degree-levelled one") {
  auto inst = make_instance(icom_sp(), icom_order_spec());
  for (auto [colouring, out] : std::vector<std::pair<std::vector<int>, int>>{
           {{1, 1}, 0}, {{0, 1, 1}, 1}, {{1, 0, 1, 0}, 0}}) {
    int arity = static_cast<int>(colouring.size());
    EnumerationFilter pinned;
    pinned.arity = arity;
    pinned.output_colour = out;
    pinned.input_colouring = colouring;
    pinned.max_degree = degree_bound_for_arity(*inst.ex.gens, arity);
    auto fast = enumerate_monomials(*inst.ex.gens, pinned);

    EnumerationFilter levelled = pinned;
    levelled.input_colouring.reset();  // forces the degree-levelled route
    std::vector<TreeMonomial> slow;
    for (const auto& t : enumerate_monomials(*inst.ex.gens, levelled))
      if (t.input_colours() == colouring) slow.push_back(t);
    CHECK(fast.size() == slow.size());
    for (size_t k = 0; k < std::min(fast.size(), slow.size()); ++k)
      CHECK(fast[k] == slow[k]);
  }
}

TEST_CASE("normal counts match the Gaussian rank oracle: algebra with ideal") {
  check_rank_oracle(make_instance(icom_sp(), icom_order_spec()), 4);
}

TEST_CASE("normal counts match the Gaussian rank oracle: module over lie") {
  check_rank_oracle(make_instance(mlie_sp(), mlie_order_spec()), 4);
}

TEST_CASE("normal counts match the Gaussian rank oracle: derivation arrow") {
  check_rank_oracle(make_instance(dcom_sp(), dcom_order_spec()), 4);
}

TEST_CASE("colour-mixing monomials close under overlaps with the basis") {
  check_colour_mixing(make_instance(icom_sp(), icom_order_spec()));
  check_colour_mixing(make_instance(mlie_sp(), mlie_order_spec()));
  check_colour_mixing(make_instance(dcom_sp(), dcom_order_spec()));
}

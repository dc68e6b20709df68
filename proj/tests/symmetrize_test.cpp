#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "operadix/error.hpp"
#include "operadix/symmetrize.hpp"

using namespace operadix;

namespace {

SymmetricRelation rel(const SymmetricPresentation& sp, const char* label,
                      std::vector<std::pair<long, const char*>> terms) {
  SymmetricRelation out{label, {}};
  for (const auto& [c, text] : terms)
    out.terms.push_back({rational(c), parse_symmetric_term(sp, text)});
  return out;
}

/// Two-colour presentation with a symmetric product and one free binary
/// generator whose flip gets its own shuffle name.
SymmetricPresentation ideal_sp() {
  SymmetricPresentation sp;
  sp.palette = make_palette({"A", "I"});
  sp.generators = {
      {"alpha", Colouring(sp.palette, {0, 0}), 0, Symmetry::Symmetric, ""},
      {"r", Colouring(sp.palette, {1, 0}), 1, Symmetry::Free, "l"},
  };
  sp.relations = {};
  return sp;
}

/// Commutative algebra with a compatible Lie algebra acting by
/// derivations: seven symmetric relations.
SymmetricPresentation lier_sp() {
  SymmetricPresentation sp;
  sp.palette = make_palette({"c1", "c2"});
  sp.generators = {
      {"alpha", Colouring(sp.palette, {0, 0}), 0, Symmetry::Symmetric, ""},
      {"beta", Colouring(sp.palette, {1, 1}), 1, Symmetry::Antisymmetric, ""},
      {"d", Colouring(sp.palette, {0, 1}), 0, Symmetry::Free, "e"},
      {"m", Colouring(sp.palette, {0, 1}), 1, Symmetry::Free, "n"},
  };
  sp.relations = {
      rel(sp, "As", {{1, "alpha(alpha(1,2),3)"}, {-1, "alpha(1,alpha(2,3))"}}),
      rel(sp, "Jac",
          {{1, "beta(beta(1,2),3)"},
           {1, "beta(beta(2,3),1)"},
           {1, "beta(beta(3,1),2)"}}),
      rel(sp, "Leib",
          {{1, "d(alpha(1,2),3)"},
           {-1, "alpha(d(1,3),2)"},
           {-1, "alpha(1,d(2,3))"}}),
      rel(sp, "Mor",
          {{1, "d(1,beta(2,3))"}, {1, "d(d(1,2),3)"}, {-1, "d(d(1,3),2)"}}),
      rel(sp, "SMod", {{1, "m(alpha(1,2),3)"}, {-1, "m(1,m(2,3))"}}),
      rel(sp, "Act", {{1, "d(1,m(2,3))"}, {-1, "alpha(d(1,3),2)"}}),
      rel(sp, "Comp",
          {{1, "beta(1,m(2,3))"},
           {-1, "m(d(2,1),3)"},
           {-1, "m(2,beta(1,3))"}}),
  };
  return sp;
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

TEST_CASE("generator expansion splits free binary generators") {
  auto sp = ideal_sp();
  auto ex = expand_generators(sp);
  REQUIRE(ex.gens->size() == 3);
  CHECK(ex.gens->at(0).name == "alpha");
  CHECK(ex.gens->at(1).name == "r");
  CHECK(ex.gens->at(2).name == "l");
  // The flip swaps the slot colours: l(x,y) = r(y,x).
  CHECK(ex.gens->at(1).input_colours == Colouring(sp.palette, {1, 0}));
  CHECK(ex.gens->at(2).input_colours == Colouring(sp.palette, {0, 1}));
  CHECK(ex.gens->at(2).output_colour == 1);
  CHECK(ex.provenance[0].symmetric_gen == 0);
  CHECK_FALSE(ex.provenance[0].flipped);
  CHECK(ex.provenance[2].symmetric_gen == 1);
  CHECK(ex.provenance[2].flipped);
}

TEST_CASE("generator expansion rejects malformed symmetry data") {
  SymmetricPresentation sp;
  sp.palette = make_palette({"A", "I"});
  sp.generators = {
      {"s", Colouring(sp.palette, {0, 1}), 0, Symmetry::Symmetric, ""}};
  CHECK_THROWS_AS(expand_generators(sp), Error);

  sp.generators = {{"r", Colouring(sp.palette, {1, 0}), 1, Symmetry::Free, ""}};
  CHECK_THROWS_AS(expand_generators(sp), Error);

  sp.generators = {
      {"r", Colouring(sp.palette, {1, 0}), 1, Symmetry::Free, "r"}};
  CHECK_THROWS_AS(expand_generators(sp), Error);
}

TEST_CASE("binary orbit images: flip, symmetric and antisymmetric swaps") {
  auto sp = lier_sp();
  auto ex = expand_generators(sp);
  auto g = ex.gens;

  auto mono_rel = [&](const char* text) {
    return rel(sp, "t", {{1, text}});
  };
  // Swapping a symmetric product changes nothing.
  CHECK(apply_permutation(sp, ex, mono_rel("alpha(1,2)"), {2, 1}) ==
        poly(g, {{1, "alpha(1,2)"}}));
  // An antisymmetric bracket picks up a sign.
  CHECK(apply_permutation(sp, ex, mono_rel("beta(1,2)"), {2, 1}) ==
        poly(g, {{-1, "beta(1,2)"}}));
  // A free generator is replaced by its flip.
  CHECK(apply_permutation(sp, ex, mono_rel("d(1,2)"), {2, 1}) ==
        poly(g, {{1, "e(1,2)"}}));
  CHECK(apply_permutation(sp, ex, mono_rel("d(2,1)"), {1, 2}) ==
        poly(g, {{1, "e(1,2)"}}));

  CHECK_THROWS_AS(apply_permutation(sp, ex, mono_rel("beta(1,2)"), {1, 1}),
                  Error);
}

TEST_CASE("worked ternary orbit over the two-colour ideal presentation") {
  auto sp = ideal_sp();
  auto ex = expand_generators(sp);
  auto g = ex.gens;
  auto base =
      rel(sp, "base", {{1, "r(r(1,3),2)"}, {-1, "r(1,alpha(2,3))"}});

  CHECK(apply_permutation(sp, ex, base, {1, 2, 3}) ==
        poly(g, {{1, "r(r(1,3),2)"}, {-1, "r(1,alpha(2,3))"}}));
  CHECK(apply_permutation(sp, ex, base, {2, 1, 3}) ==
        poly(g, {{1, "l(1,r(2,3))"}, {-1, "l(alpha(1,3),2)"}}));
  CHECK(apply_permutation(sp, ex, base, {1, 3, 2}) ==
        poly(g, {{1, "r(r(1,2),3)"}, {-1, "r(1,alpha(2,3))"}}));
  CHECK(apply_permutation(sp, ex, base, {3, 2, 1}) ==
        poly(g, {{1, "r(l(1,3),2)"}, {-1, "l(alpha(1,2),3)"}}));
  CHECK(apply_permutation(sp, ex, base, {2, 3, 1}) ==
        poly(g, {{1, "r(l(1,2),3)"}, {-1, "l(alpha(1,3),2)"}}));
  CHECK(apply_permutation(sp, ex, base, {3, 1, 2}) ==
        poly(g, {{1, "l(1,l(2,3))"}, {-1, "l(alpha(1,2),3)"}}));

  CHECK(expand_relation(sp, ex, base).size() == 6);
}

TEST_CASE("orbit expansion of the seven-relation two-colour presentation") {
  auto sp = lier_sp();
  auto ex = expand_generators(sp);
  auto g = ex.gens;
  REQUIRE(g->size() == 6);

  std::vector<size_t> orbit_sizes;
  for (const auto& r : sp.relations)
    orbit_sizes.push_back(expand_relation(sp, ex, r).size());
  CHECK(orbit_sizes == std::vector<size_t>{3, 1, 3, 3, 6, 6, 6});

  auto expanded = expand_relations(sp, ex);
  REQUIRE(expanded.size() == 28);

  // The curated 30-row table: every row is a scalar multiple of an orbit
  // member (three rows are sign duplicates, and one associativity member
  // appears in no row).
  std::vector<std::pair<const char*, OperadPolynomial>> table = {
      {"Com1",
       poly(g, {{1, "alpha(alpha(1,2),3)"}, {-1, "alpha(alpha(1,3),2)"}})},
      {"Com2",
       poly(g, {{1, "alpha(alpha(1,2),3)"}, {-1, "alpha(1,alpha(2,3))"}})},
      {"Lie", poly(g, {{1, "beta(beta(1,2),3)"},
                       {-1, "beta(beta(1,3),2)"},
                       {-1, "beta(1,beta(2,3))"}})},
      {"Leib1", poly(g, {{1, "e(1,alpha(2,3))"},
                         {-1, "alpha(e(1,2),3)"},
                         {-1, "alpha(e(1,3),2)"}})},
      {"Leib2", poly(g, {{1, "d(alpha(1,3),2)"},
                         {-1, "alpha(d(1,2),3)"},
                         {-1, "alpha(1,e(2,3))"}})},
      {"Leib3", poly(g, {{1, "d(alpha(1,2),3)"},
                         {-1, "alpha(1,d(2,3))"},
                         {-1, "alpha(d(1,3),2)"}})},
      {"Mor1", poly(g, {{1, "d(1,beta(2,3))"},
                        {1, "d(d(1,2),3)"},
                        {-1, "d(d(1,3),2)"}})},
      {"Mor2", poly(g, {{1, "e(beta(1,3),2)"},
                        {1, "d(e(1,2),3)"},
                        {-1, "e(1,d(2,3))"}})},
      {"Mor3", poly(g, {{-1, "d(1,beta(2,3))"},
                        {1, "d(d(1,3),2)"},
                        {-1, "d(d(1,2),3)"}})},
      {"Mor4", poly(g, {{-1, "e(beta(1,2),3)"},
                        {1, "e(1,e(2,3))"},
                        {-1, "d(e(1,3),2)"}})},
      {"Mor5", poly(g, {{-1, "e(beta(1,3),2)"},
                        {1, "e(1,d(2,3))"},
                        {-1, "d(e(1,2),3)"}})},
      {"Mor6", poly(g, {{1, "e(beta(1,2),3)"},
                        {1, "d(e(1,3),2)"},
                        {-1, "e(1,e(2,3))"}})},
      {"SMod1", poly(g, {{1, "m(alpha(1,2),3)"}, {-1, "m(1,m(2,3))"}})},
      {"SMod2", poly(g, {{1, "m(alpha(1,2),3)"}, {-1, "n(m(1,3),2)"}})},
      {"SMod3", poly(g, {{1, "m(alpha(1,3),2)"}, {-1, "m(1,n(2,3))"}})},
      {"SMod4", poly(g, {{1, "n(1,alpha(2,3))"}, {-1, "n(n(1,2),3)"}})},
      {"SMod5", poly(g, {{1, "n(1,alpha(2,3))"}, {-1, "n(n(1,3),2)"}})},
      {"SMod6", poly(g, {{1, "m(alpha(1,3),2)"}, {-1, "n(m(1,2),3)"}})},
      {"LR-A1", poly(g, {{1, "e(m(1,2),3)"}, {-1, "alpha(1,e(2,3))"}})},
      {"LR-A2", poly(g, {{1, "e(n(1,2),3)"}, {-1, "alpha(e(1,3),2)"}})},
      {"LR-A3", poly(g, {{1, "d(1,n(2,3))"}, {-1, "alpha(d(1,2),3)"}})},
      {"LR-A4", poly(g, {{1, "e(m(1,3),2)"}, {-1, "alpha(1,d(2,3))"}})},
      {"LR-A5", poly(g, {{1, "d(1,m(2,3))"}, {-1, "alpha(d(1,3),2)"}})},
      {"LR-A6", poly(g, {{1, "e(n(1,3),2)"}, {-1, "alpha(e(1,2),3)"}})},
      {"LR-B1", poly(g, {{1, "beta(1,m(2,3))"},
                         {-1, "m(e(1,2),3)"},
                         {-1, "n(beta(1,3),2)"}})},
      {"LR-B2", poly(g, {{-1, "beta(m(1,3),2)"},
                         {-1, "m(d(1,2),3)"},
                         {-1, "m(1,beta(2,3))"}})},
      {"LR-B3", poly(g, {{-1, "beta(n(1,2),3)"},
                         {-1, "n(1,d(2,3))"},
                         {1, "n(beta(1,3),2)"}})},
      {"LR-B4", poly(g, {{1, "beta(1,n(2,3))"},
                         {-1, "m(e(1,3),2)"},
                         {-1, "n(beta(1,2),3)"}})},
      {"LR-B5", poly(g, {{-1, "beta(n(1,3),2)"},
                         {-1, "n(1,e(2,3))"},
                         {1, "n(beta(1,2),3)"}})},
      {"LR-B6", poly(g, {{-1, "beta(m(1,2),3)"},
                         {-1, "m(d(1,3),2)"},
                         {1, "m(1,beta(2,3))"}})},
  };
  for (const auto& [label, row] : table) {
    bool hit = false;
    for (const auto& f : expanded)
      if (scalar_multiple(row, f)) {
        hit = true;
        break;
      }
    CHECK_MESSAGE(hit, label);
  }

  // Orbit members are pairwise non-proportional.
  for (size_t i = 0; i < expanded.size(); ++i)
    for (size_t j = i + 1; j < expanded.size(); ++j)
      CHECK_FALSE(scalar_multiple(expanded[i], expanded[j]));
}

TEST_CASE("orbit colourings cover the multinomial of the weight vector") {
  auto sp = lier_sp();
  auto ex = expand_generators(sp);

  auto colourings = [&](const SymmetricRelation& r) {
    std::set<std::vector<int>> out;
    for (const auto& f : expand_relation(sp, ex, r))
      out.insert(f.signature().input_colours);
    return out;
  };
  // Weight (2,1): 3!/2!1! = 3 colourings for both ternary mixed families.
  CHECK(colourings(sp.relations[2]) ==
        std::set<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(colourings(sp.relations[4]).size() == 3);
  // Weight (1,2): again 3, each carried by two orbit members.
  CHECK(colourings(sp.relations[6]) ==
        std::set<std::vector<int>>{{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
}

TEST_CASE("expanded relations reduce to zero against the expanded basis") {
  auto sp = lier_sp();
  auto ex = expand_generators(sp);
  auto expanded = expand_relations(sp, ex);
  auto ord = lier_order(ex.gens);
  for (const auto& f : expanded)
    CHECK(normal_form(f, expanded, ord).remainder.is_zero());
}

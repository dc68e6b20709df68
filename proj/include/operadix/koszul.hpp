#pragma once

#include <string>
#include <vector>

#include "operadix/polynomial.hpp"

namespace operadix {

/// A shuffle presentation whose relations are all of operation degree 2,
/// ready for quadratic dualization. Per generator a dual generator name
/// (by default the base name with `!` appended).
struct QuadraticPresentation {
  GeneratorSetRef gens;
  std::vector<OperadPolynomial> relations;
  OrderingSpec ordering;
  std::vector<std::string> dual_names;  // by generator index
  /// Suspension parity per colour (empty = all 1). Enters only the signs
  /// of the duality pairing; operads whose generators mix colours may
  /// need a non-uniform assignment for the dual to be quadratic again.
  std::vector<int> colour_shifts;
};

/// Packs and validates a quadratic presentation: every relation term must
/// have operation degree 2, and the relation spans must be linearly
/// independent per signature (rank-checked). Dual names default to
/// `name!`.
QuadraticPresentation make_quadratic(GeneratorSetRef gens,
                                     std::vector<OperadPolynomial> relations,
                                     OrderingSpec ordering,
                                     std::vector<std::string> dual_names = {});

/// The reverse admissible ordering: same-arity comparisons are swapped,
/// the arity clause is kept. Reversing twice restores the original.
OrderingSpec reverse_ordering(OrderingSpec spec);

/// Generator set carrying the dual names over the same colour signatures
/// (indices are preserved, so tree monomials transfer unchanged).
GeneratorSetRef dual_generator_set(const GeneratorSet& gens,
                                   const std::vector<std::string>& dual_names);

/// Complement of the given degree-2 leading terms within the full set of
/// quadratic shuffle monomials, per signature. An involution.
std::vector<TreeMonomial> monomial_dual(
    const std::vector<TreeMonomial>& leading_terms, const GeneratorSet& gens);

/// Maximal linearly independent subset of the relations per signature,
/// keeping the earliest spanning set; orbit expansion of symmetric
/// relations routinely produces scalar duplicates that must be dropped
/// before `make_quadratic`.
std::vector<OperadPolynomial> prune_dependent(
    const std::vector<OperadPolynomial>& relations);

/// The pairing sign of a quadratic monomial under per-colour suspension
/// parities (entries beyond the vector weigh 1): the graded sign of the
/// planar leaf permutation -- an inversion of two leaves counts when both
/// their colour parities are odd -- times (-1)^(|h| * L), where |h| is
/// the parity sum of the inner operation's input and output colours, and
/// L is the parity sum of the leaves planar-left
/// of the inner subtree. With all parities odd this reduces to
/// sign(permutation) * (-1)^(slot-1) and pairs the Jacobi span with the
/// associativity span; only relative signs within a signature matter.
int pairing_sign(const TreeMonomial& t, const std::vector<int>& colour_shifts);

/// The quadratic dual presentation: per weight-2 signature the dual
/// relations span the annihilator of the primal relation span under the
/// signed dual-basis pairing <u, v> = pairing_sign(u) delta_{u,v}; the
/// ordering is reversed and renamed to the dual alphabet. Signatures
/// without primal relations contribute all their quadratic monomials.
/// Dualizing twice returns to a presentation with the original generator
/// names and an equal relation span per signature.
QuadraticPresentation quadratic_dual(const QuadraticPresentation& qp);

}  // namespace operadix

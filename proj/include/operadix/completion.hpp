#pragma once

#include <map>
#include <string>
#include <vector>

#include "operadix/polynomial.hpp"

namespace operadix {

/// Outcome of one S-polynomial reduction during completion.
struct PairOutcome {
  int f = -1, g = -1;     // basis indices at examination time
  TreeMonomial gamma;     // the small common multiple
  std::vector<int> rules_used;  // basis indices applied during reduction
  bool reduced_to_zero = true;
  int added_index = -1;   // index of the inserted element, when any
};

struct CompletionReport {
  long pairs_processed = 0;
  long scms_examined = 0;
  long new_elements_added = 0;
  int max_degree_reached = 0;
  long fallback_uses = 0;
  /// True when small common multiples above the degree bound were skipped.
  bool truncated = false;
  std::vector<PairOutcome> log;

  std::string to_string() const;
};

struct GroebnerBasis {
  std::vector<OperadPolynomial> elements;  // monic, inter-reduced
  OrderingSpec ordering;
  CompletionReport certificate;
};

/// Degree-truncated Buchberger completion. Pairs are processed ascending
/// by (degree, canonical serialization) of their small common multiple;
/// nonzero remainders are normal-formed, made monic and inserted, and the
/// basis is inter-reduced at the end (keeping earlier elements on leading
/// term ties). Relations must be nonzero and colouring-homogeneous.
GroebnerBasis buchberger(const std::vector<OperadPolynomial>& relations,
                         const MonomialOrder& ord,
                         int max_operation_degree = 3);

/// Certifies a quadratic Gröbner basis: runs completion to degree 3 and
/// reports; new_elements_added == 0 means every S-polynomial of the given
/// quadratic relations reduces to zero. Throws on non-quadratic input.
CompletionReport is_quadratic_groebner(
    const std::vector<OperadPolynomial>& relations, const MonomialOrder& ord);

/// Upper bound on the vertex count of a shuffle monomial with `arity`
/// leaves over this generator set: arity-1 vertices of arity >= 2 plus the
/// longest acyclic unary chain on each edge. Throws when the unary colour
/// graph has a cycle (unbounded monomial degree).
int degree_bound_for_arity(const GeneratorSet& gens, int arity);

/// All monomials of the signature not divisible by any basis leading term.
std::vector<TreeMonomial> normal_monomials(const GroebnerBasis& gb,
                                           const MonomialOrder& ord, int arity,
                                           const std::vector<int>& colouring,
                                           int output_colour);

/// Counts of normal monomials per (colour weight vector, output colour),
/// over the standard colouring of each weight vector, for total arities
/// 1..max_total_arity.
using DimensionTable = std::map<std::pair<std::vector<int>, int>, long>;
DimensionTable dimension_table(const GroebnerBasis& gb,
                               const MonomialOrder& ord, int max_total_arity);

/// Rank of the arity slice of the ideal generated by the relations: the
/// span of all substitutions of each relation into every monomial of the
/// signature, computed by exact Gaussian elimination. Independent of
/// completion; #monomials - rank is the slice dimension oracle.
long ideal_slice_rank(const std::vector<OperadPolynomial>& relations,
                      const MonomialOrder& ord, int arity,
                      const std::vector<int>& colouring, int output_colour);

}  // namespace operadix

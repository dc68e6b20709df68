#pragma once

#include <string>
#include <vector>

#include "operadix/dsl.hpp"
#include "operadix/series.hpp"
#include "operadix/symmetrize.hpp"

namespace operadix {

/// One recorded overlap reduction: the S-polynomial of the two named
/// relations at the given small common multiple reduces to zero through
/// the listed rule applications (one batch rewrite per step).
struct TraceFixture {
  std::string name;
  std::string rule_a, rule_b;
  /// Canonical text of the overlap monomial.
  std::string overlap;
  /// Labels of the rules applied, in order.
  std::vector<std::string> steps;
};

struct LabelledRelation {
  std::string label;
  OperadPolynomial poly;
};

/// A built-in presentation with everything needed to certify it: the
/// canonical source text, its parsed document, the shuffle expansion, the
/// individually labelled shuffle relations (the completion input), the
/// expected factorization of its dimension series, and recorded overlap
/// reductions.
struct CatalogueEntry {
  std::string name;
  std::string source;  // canonical `.opd` text; parse/format fixpoint
  PresentationDoc doc;
  ShuffleExpansion expansion;
  /// Labelled shuffle relations. Orbit expansions that print the same
  /// relation twice up to scale keep both labels, so this list may be
  /// linearly dependent.
  std::vector<LabelledRelation> relations;
  /// Human-readable factorization of the dimension series; empty when no
  /// factorization is on record.
  std::string decomposition;
  std::vector<TraceFixture> fixtures;
};

/// Names of the built-in presentations, in catalogue order.
const std::vector<std::string>& builtin_names();

/// The catalogue entry for `name`; throws Error for an unknown name.
const CatalogueEntry& builtin(const std::string& name);

/// Index of the labelled relation called `label`; -1 when absent.
int relation_index(const CatalogueEntry& entry, const std::string& label);

/// The dimension series predicted by the entry's factorization, truncated
/// at total weight N. Throws Error when the entry has no factorization.
TruncatedEGF decomposition_series(const CatalogueEntry& entry, int N);

/// A replayed reduction: the S-polynomial and the polynomial after each
/// recorded step. A faithful replay rewrites at least one monomial per
/// step and ends at zero.
struct ReplayResult {
  OperadPolynomial start;
  std::vector<OperadPolynomial> intermediates;
  bool every_step_rewrote = true;
  bool reduced_to_zero = false;
};

/// Forms the S-polynomial of the fixture's rule pair at its overlap and
/// applies the listed rules in order (one batch rewrite per step). Throws
/// Error when a label is unknown or the overlap is not a small common
/// multiple of the two leading terms.
ReplayResult replay_fixture(const CatalogueEntry& entry,
                            const TraceFixture& fixture);

/// The closed-form series stated in the entry's source, truncated at N.
/// Components whose expression cannot be evaluated (or is unstated) are
/// reported by name in `failed`; their component is left empty.
TruncatedEGF closed_form_series(const CatalogueEntry& entry, int N,
                                std::vector<std::string>& failed);

}  // namespace operadix

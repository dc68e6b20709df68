#pragma once

#include <string>
#include <vector>

#include "operadix/polynomial.hpp"
#include "operadix/tree.hpp"

namespace operadix {

enum class Symmetry { Free, Symmetric, Antisymmetric };

/// A generator of a symmetric presentation. Binary generators carry their
/// Σ₂-action: trivial (Symmetric), by sign (Antisymmetric), or free, in
/// which case the order-reversed operation becomes a shuffle generator of
/// its own named `flip_name`.
struct SymmetricGenerator {
  std::string name;
  Colouring input_colours;
  int output_colour = 0;
  Symmetry symmetry = Symmetry::Free;
  std::string flip_name;  // required for free binary generators
};

/// A term tree on the symmetric side: arguments are kept in slot order and
/// need not satisfy the shuffle condition.
struct SymTerm {
  int gen = -1;   // index into the presentation's generators; -1 for a leaf
  int label = 0;  // leaf label when gen < 0
  std::vector<SymTerm> args;
};

struct SymmetricRelation {
  std::string label;
  std::vector<std::pair<Rational, SymTerm>> terms;
};

struct SymmetricPresentation {
  PaletteRef palette;
  std::vector<SymmetricGenerator> generators;
  std::vector<SymmetricRelation> relations;

  /// Index of the generator called `name`, or -1 when absent.
  int generator_index(const std::string& name) const;
};

/// Which symmetric generator a shuffle generator came from, and whether it
/// is the order-reversed copy (e.g. l with l(x,y) = r(y,x)).
struct ShuffleProvenance {
  int symmetric_gen = -1;
  bool flipped = false;
};

struct ShuffleExpansion {
  GeneratorSetRef gens;
  std::vector<ShuffleProvenance> provenance;  // by shuffle generator index
};

/// Forgets the Σ-action on the generators: free binary generators split
/// into the original and its flip (with swapped slot colours); symmetric,
/// antisymmetric and arity-1 generators map to a single shuffle generator.
/// Throws on (anti)symmetric generators with mismatched slot colours, on
/// arities other than 1 and 2, and on missing or clashing flip names.
ShuffleExpansion expand_generators(const SymmetricPresentation& sp);

/// Parses a symmetric term such as "r(r(1,3),2)" over the presentation's
/// generator names, keeping the written argument order.
SymTerm parse_symmetric_term(const SymmetricPresentation& sp,
                             const std::string& text);

/// Acts by σ on the relation's leaf labels and planarizes each term over
/// the shuffle generators: whenever a binary vertex's arguments violate
/// the min-leaf order they are swapped, replacing a free generator by its
/// flip and flipping the sign of an antisymmetric one. σ is given as the
/// images of 1..n.
OperadPolynomial apply_permutation(const SymmetricPresentation& sp,
                                   const ShuffleExpansion& ex,
                                   const SymmetricRelation& rel,
                                   const std::vector<int>& sigma);

/// Divides f by the coefficient of its smallest-key monomial, giving a
/// canonical representative of the scalar line of f.
OperadPolynomial scalar_normal(const OperadPolynomial& f);

/// The full Σₙ-orbit of one relation, duplicate-free up to nonzero scalar,
/// in lexicographic permutation order; identically-zero images are
/// dropped.
std::vector<OperadPolynomial> expand_relation(const SymmetricPresentation& sp,
                                              const ShuffleExpansion& ex,
                                              const SymmetricRelation& rel);

/// Orbit expansion of every relation of the presentation, concatenated in
/// relation order (deduplicated within each orbit).
std::vector<OperadPolynomial> expand_relations(const SymmetricPresentation& sp,
                                               const ShuffleExpansion& ex);

/// True when f and g span the same scalar line (both nonzero).
bool scalar_multiple(const OperadPolynomial& f, const OperadPolynomial& g);

}  // namespace operadix

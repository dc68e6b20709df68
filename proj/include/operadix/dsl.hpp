#pragma once

#include <string>
#include <utility>
#include <vector>

#include "operadix/error.hpp"
#include "operadix/ordering.hpp"
#include "operadix/polynomial.hpp"
#include "operadix/symmetrize.hpp"

namespace operadix {

/// A parse failure with its 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& message)
      : Error("line " + std::to_string(line) + ", col " +
              std::to_string(col) + ": " + message),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

/// One parsed `.opd` document. Symmetric documents carry a symmetric
/// presentation whose relations expand to shuffle relations; shuffle
/// documents (header `operad <name> shuffle;`) declare shuffle generators
/// directly and their relations are shuffle polynomials as written.
struct PresentationDoc {
  std::string name;
  bool shuffle_mode = false;
  /// Symmetric payload (palette is set in both modes).
  SymmetricPresentation sym;
  /// Shuffle payload.
  GeneratorSetRef shuffle_gens;
  std::vector<std::pair<std::string, OperadPolynomial>> shuffle_relations;
  OrderingSpec ordering;
  /// Suspension parity per colour; empty when the document has no
  /// `shifts` block (all odd).
  std::vector<int> colour_shifts;
  /// Closed-form series text per output colour; empty string = unstated.
  std::vector<std::string> series;
};

/// Parses a `.opd` document. Every relation term is type-checked against
/// the generator signatures (arity, slot colours, bijective leaf labels,
/// one shared signature per relation); all failures raise ParseError with
/// the offending position. `B` is accepted as an alias for a generator
/// named `beta` in term position.
PresentationDoc parse_presentation(const std::string& text);

/// Canonical text form; parse(format(doc)) reproduces the document and
/// format(parse(text)) is a fixpoint of formatting.
std::string format_presentation(const PresentationDoc& doc);

/// Canonical `gen(arg,...)` text of a symmetric term in written slot
/// order; a bare leaf prints as its label.
std::string format_term(const SymmetricPresentation& sp, const SymTerm& t);

}  // namespace operadix

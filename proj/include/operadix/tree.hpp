#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "operadix/colour.hpp"

namespace operadix {

/// A generating operation with a colour signature.
struct Generator {
  std::string name;
  Colouring input_colours;  // length = arity >= 1
  int output_colour = 0;

  int arity() const { return input_colours.size(); }
};

/// Immutable set of generators shared by a presentation; generators are
/// referenced by index everywhere else.
class GeneratorSet {
 public:
  GeneratorSet(PaletteRef palette, std::vector<Generator> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& at(int idx) const { return gens_.at(idx); }
  /// Index of the generator called `name`, or -1 when absent.
  int index_of(const std::string& name) const;
  const PaletteRef& palette() const { return palette_; }

 private:
  PaletteRef palette_;
  std::vector<Generator> gens_;
};

using GeneratorSetRef = std::shared_ptr<const GeneratorSet>;

/// A shuffle tree monomial: a planar coloured rooted tree whose vertices
/// carry generators and whose leaves are bijectively labelled 1..n. At
/// every vertex the children are stored sorted by their minimal reachable
/// leaf label (the planar normal form), so that the shuffle condition --
/// the minimal descendants of the subtrees at a vertex increase left to
/// right -- holds by construction. Edge colours are derived from the
/// generator signatures and cached, never stored independently.
///
/// The degenerate arity-1, degree-0 tree (one leaf, no vertex) represents
/// the identity element of its colour.
class TreeMonomial {
 public:
  /// A single leaf labelled `label` of the given colour. As a complete
  /// monomial this is the identity element of its colour.
  static TreeMonomial leaf(int label, int colour);
  static TreeMonomial identity(int colour) { return leaf(1, colour); }

  /// A vertex decorated with generator `gen` over the given children.
  /// Children are reordered into planar normal form; child output colours
  /// must match the generator's input colours.
  static TreeMonomial vertex(const GeneratorSet& gens, int gen,
                             std::vector<TreeMonomial> children);

  /// Engine-internal builder used when the children are already known to
  /// be colour-consistent (rebuilds after relabelling or splicing); still
  /// checks label disjointness and restores planar normal form.
  static TreeMonomial rebuild(int gen, int out_colour,
                              std::vector<TreeMonomial> children);

  bool is_leaf() const { return node_->gen < 0; }
  /// Generator index at the root vertex (-1 for a leaf).
  int generator() const { return node_->gen; }
  int leaf_label() const { return node_->label; }
  const std::vector<TreeMonomial>& children() const { return node_->children; }

  /// Number of leaves.
  int arity() const { return node_->arity; }
  /// Operation degree: the number of vertices.
  int degree() const { return node_->degree; }
  int output_colour() const { return node_->colour; }
  /// Smallest leaf label in the tree.
  int min_leaf() const { return node_->min_leaf; }
  /// (label, colour) pairs of the leaves in planar (left-to-right) order.
  const std::vector<std::pair<int, int>>& planar_leaves() const {
    return node_->leaves;
  }
  /// Input colouring by label: entry k-1 is the colour of the leaf
  /// labelled k. Meaningful for complete monomials (labels are 1..n).
  std::vector<int> input_colours() const;

  /// True when the leaf labels are exactly {1..n}.
  bool labels_bijective() const;
  /// True when every vertex's children are in increasing min-leaf order
  /// (always holds for monomials built through this interface).
  bool shuffle_condition_holds() const;

  /// Canonical serialization over generator indices; equality, hashing and
  /// ordering-free comparisons all use this key.
  const std::string& key() const { return node_->key; }
  /// Canonical text form `gen(child,...)` with generator names; the
  /// identity monomial prints as `id_<colour>(1)`.
  std::string to_string(const GeneratorSet& gens) const;

  bool operator==(const TreeMonomial& o) const { return key() == o.key(); }
  bool operator!=(const TreeMonomial& o) const { return !(*this == o); }
  bool operator<(const TreeMonomial& o) const { return key() < o.key(); }

  /// Number of vertices (= degree); vertices are indexed 0..degree-1 in
  /// planar preorder (root first, then subtrees left to right).
  TreeMonomial subtree_at_vertex(int preorder_idx) const;

 private:
  struct Node {
    int gen = -1;    // -1 for a leaf
    int label = 0;   // leaf label when gen < 0
    int colour = 0;  // output colour (= own colour for a leaf)
    std::vector<TreeMonomial> children;
    int arity = 1;
    int degree = 0;
    int min_leaf = 0;
    std::vector<std::pair<int, int>> leaves;  // planar order
    std::string key;
  };

  explicit TreeMonomial(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// The corolla of a generator: a single vertex whose k-th input is a leaf
/// labelled k coloured by the generator's k-th input colour.
TreeMonomial corolla(const GeneratorSet& gens, int gen);

/// The shuffle permutation of a partial composition T1 o_{l,sigma} T2. It
/// lists the new labels of the affected positions: first the arity(T2)
/// labels assigned to T2's leaves (in T2-label order), then the labels of
/// T1's former leaves l+1..n (in order). Valid shuffles are permutations
/// of {l..n+m-1} that keep both blocks increasing and give T2's first leaf
/// the label l.
struct GraftShuffle {
  std::vector<int> new_labels;

  static GraftShuffle identity(int l, int n, int m);
};

/// All valid shuffles for grafting an arity-m tree at leaf l of an
/// arity-n tree.
std::vector<GraftShuffle> all_graft_shuffles(int n, int l, int m);

/// Partial composition T1 o_{l,sigma} T2: grafts T2 on the leaf of T1
/// labelled l, relabels and replanarizes. Throws ColourMismatchError when
/// T2's output colour differs from the colour of that leaf (the polynomial
/// layer maps this case to zero), and InvalidShuffleError for a bad sigma.
TreeMonomial graft(const TreeMonomial& t1, int l, const GraftShuffle& sigma,
                   const TreeMonomial& t2);

/// A witness that `pattern` divides `host`: an injective structure
/// preserving map from pattern vertices onto a connected subtree of host,
/// both sides indexed in planar preorder.
struct Embedding {
  TreeMonomial host;
  TreeMonomial pattern;
  std::vector<int> vertex_map;  // pattern preorder idx -> host preorder idx
};

/// All embeddings of `pattern` into `host`; an empty list means `host` is
/// not divisible by `pattern`.
std::vector<Embedding> find_divisors(const TreeMonomial& host,
                                     const TreeMonomial& pattern);

/// The tree monomial carried by the embedded subtree: the image with its
/// leaves relabelled in smallest-descendant order. Always equals
/// e.pattern; exposed for validation.
TreeMonomial subtree_monomial(const Embedding& e);

/// The substitution operator on tree monomials: replaces the embedded
/// image of e.pattern inside e.host by `gamma`, which must have the same
/// arity, input colouring and output colour as the pattern.
TreeMonomial substitute(const Embedding& e, const TreeMonomial& gamma);

struct SmallCommonMultiple {
  TreeMonomial gamma;
  Embedding emb_alpha;
  Embedding emb_beta;
};

/// All small common multiples of alpha and beta: monomials covered by one
/// overlapping copy of each, with fewer vertices than deg(alpha) +
/// deg(beta). Self-overlaps (alpha = beta, shifted) are included.
std::vector<SmallCommonMultiple> small_common_multiples(
    const GeneratorSet& gens, const TreeMonomial& alpha,
    const TreeMonomial& beta);

struct EnumerationFilter {
  std::optional<int> arity;
  std::optional<int> output_colour;
  std::optional<std::vector<int>> input_colouring;  // by label
  std::optional<int> max_degree;
  /// Hard cap on the number of monomials visited; exceeding it throws
  /// ResourceLimitError.
  long monomial_cap = 2'000'000;
};

/// Complete duplicate-free list of shuffle monomials matching the filter,
/// sorted by canonical text serialization. At least one of `arity` and
/// `max_degree` must be present. Identity monomials are included when
/// compatible with the filter.
std::vector<TreeMonomial> enumerate_monomials(const GeneratorSet& gens,
                                              const EnumerationFilter& filter);

/// Parses the canonical `gen(...)` text form (inverse of to_string), e.g.
/// "alpha(alpha(1,3),2)" or "id_A(1)". Leaf colours are inferred from the
/// generator signatures; arguments must be written in planar order.
/// Throws Error on malformed input or unknown names.
TreeMonomial parse_monomial(const GeneratorSet& gens, const std::string& text);

/// The colour-blind shadow of a generator set: same names and arities over
/// a single-colour palette.
GeneratorSetRef colour_blind(const GeneratorSet& gens);

/// Rebuilds a monomial over the colour-blind shadow of its generator set.
TreeMonomial strip_colours(const GeneratorSet& blind, const TreeMonomial& t);

/// The set B of quadratic colour-mixing monomials: all graftings
/// a_i o_{l,sigma} a_j of two generator corollas whose colours do not
/// match, built in the colour-blind free operad.
std::vector<TreeMonomial> colour_mixing_monomials(const GeneratorSet& gens);

}  // namespace operadix

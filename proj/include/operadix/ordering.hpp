#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "operadix/tree.hpp"

namespace operadix {

enum class Ordering { Less, Equal, Greater };

/// Path-lexicographic ordering: compare arity, then the root-to-leaf
/// generator words component by component (degree first, longer word
/// greater, then letter ranks), then the planar leaf permutation by
/// reverse lexicographic comparison.
struct PathLexSpec {
  /// Generator names in ascending order (first = smallest).
  std::vector<std::string> letters;
  /// Degree polarity of the word comparison: when true (the default) a
  /// longer path word is greater at equal weight.
  bool longer_greater = true;
};

/// One tier of a tiered quantum-monomial ordering.
struct Tier {
  std::vector<std::string> letters;
  /// Polarity: when true, a larger tier-degree makes the word greater.
  bool greater_degree_is_greater = true;
  /// When true, equal tier-degrees are refined by comparing the tier
  /// subwords lexicographically in the order given by `letters`
  /// (later letter = greater). When false the tier letters are mutually
  /// incomparable and ties fall through to the fallback.
  bool lex_inside = false;
};

/// Tiered QM ordering: words are compared by walking the tiers heaviest
/// first (degree with the tier's polarity, then the optional intra-tier
/// word comparison) and finally by the q-exponent. Tree monomials are
/// compared by componentwise dominance of their per-leaf path words; pairs
/// left incomparable by the partial order are resolved by a deterministic
/// weighted path-lexicographic fallback: first differing path component by
/// total letter weight, then word length, then letter ranks (all weights
/// zero = plain PathLex fallback).
struct TieredQMSpec {
  std::vector<Tier> tiers;  // heaviest first
  bool greater_q_is_greater = true;
  PathLexSpec fallback;
  /// Optional per-generator integer weights steering the fallback; a word
  /// of larger total weight is greater. Missing generators weigh 0.
  std::map<std::string, int> fallback_weights;
};

struct OrderingSpec {
  std::variant<PathLexSpec, TieredQMSpec> variant;
  /// When true, same-arity comparisons are swapped (a < b iff the base
  /// ordering says a > b); the arity clause is untouched so the result
  /// stays admissible.
  bool reversed = false;

  bool is_pathlex() const {
    return std::holds_alternative<PathLexSpec>(variant);
  }
  const PathLexSpec& pathlex() const { return std::get<PathLexSpec>(variant); }
  const TieredQMSpec& tiered() const {
    return std::get<TieredQMSpec>(variant);
  }
};

/// The path fingerprint of a tree monomial: for each leaf label k the word
/// of generator names on the root-to-leaf path, plus the leaf labels in
/// planar left-to-right order.
struct PathFingerprint {
  std::vector<std::string> words;      // indexed by leaf label
  std::vector<int> leaf_permutation;   // planar order

  /// Renders as ((w1,w2,...)|(perm)), e.g. ((rl,r,rl)|(132)).
  std::string to_string() const;
};

PathFingerprint path_fingerprint(const GeneratorSet& gens,
                                 const TreeMonomial& t);

/// Normal form of a generator word in the quantum algebra attached to a
/// tiered spec: letters sorted stably heaviest tier first, with one factor
/// of q for every transposition of a lighter letter past a heavier one.
struct QMWord {
  std::vector<std::vector<std::string>> tier_words;  // per tier, in order
  long q = 0;
};

QMWord qm_normal_form(const std::vector<std::string>& word,
                      const TieredQMSpec& spec);

struct CompareResult {
  Ordering order = Ordering::Equal;
  /// True when a TieredQM comparison was decided by the deterministic
  /// fallback rather than the tier/q partial order.
  bool fallback_used = false;
};

/// Compiled comparison engine for one ordering over one generator set.
class MonomialOrder {
 public:
  MonomialOrder(OrderingSpec spec, GeneratorSetRef gens);

  CompareResult compare(const TreeMonomial& a, const TreeMonomial& b) const;
  bool less(const TreeMonomial& a, const TreeMonomial& b) const {
    return compare(a, b).order == Ordering::Less;
  }
  bool greater(const TreeMonomial& a, const TreeMonomial& b) const {
    return compare(a, b).order == Ordering::Greater;
  }

  const OrderingSpec& spec() const { return spec_; }
  const GeneratorSetRef& gens() const { return gens_; }

  /// Number of comparisons decided by the deterministic fallback since
  /// construction or the last reset.
  long fallback_uses() const { return fallback_uses_; }
  void reset_fallback_uses() const { fallback_uses_ = 0; }

 private:
  struct LetterInfo {
    int tier = -1;       // tier index, heaviest = 0 (TieredQM only)
    int tier_rank = 0;   // position inside the tier's letter list
    int fallback_rank = 0;
    int weight = 0;
  };

  CompareResult compare_pathlex(const TreeMonomial& a,
                                const TreeMonomial& b) const;
  CompareResult compare_tiered(const TreeMonomial& a,
                               const TreeMonomial& b) const;
  /// Partial word comparison per the tier prose; Incomparable encoded as
  /// an empty optional.
  enum class Partial { Less, Equal, Greater, Incomparable };
  Partial compare_words_tiered(const std::vector<int>& u,
                               const std::vector<int>& v) const;
  Ordering compare_words_fallback(const std::vector<int>& u,
                                  const std::vector<int>& v) const;
  Ordering compare_perm_revlex(const TreeMonomial& a,
                               const TreeMonomial& b) const;

  OrderingSpec spec_;
  GeneratorSetRef gens_;
  std::vector<LetterInfo> info_;  // by generator index
  int n_tiers_ = 0;
  mutable long fallback_uses_ = 0;
};

CompareResult compare(const OrderingSpec& spec, const GeneratorSetRef& gens,
                      const TreeMonomial& a, const TreeMonomial& b);

struct AdmissibilityReport {
  long pairs_checked = 0;
  /// Monotonicity pairs skipped because the comparison (before or after
  /// grafting) was decided by the deterministic fallback rather than the
  /// tier/q partial order; the admissibility clauses are claimed only for
  /// the partial order, whose incomparable pairs never interact during
  /// completion.
  long fallback_skips = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Property check of the two admissibility clauses: smaller arity is
/// smaller, and partial composition is monotone in both arguments. Pairs
/// and composition contexts are sampled pseudo-randomly (deterministic
/// seed) from monomials up to `arity_bound`.
AdmissibilityReport check_admissibility(const OrderingSpec& spec,
                                        const GeneratorSetRef& gens,
                                        int arity_bound, int samples,
                                        unsigned seed = 2026);

}  // namespace operadix

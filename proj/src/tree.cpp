#include "operadix/tree.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "operadix/error.hpp"

namespace operadix {

GeneratorSet::GeneratorSet(PaletteRef palette, std::vector<Generator> gens)
    : palette_(std::move(palette)), gens_(std::move(gens)) {
  std::set<std::string> names;
  for (const auto& g : gens_) {
    if (!names.insert(g.name).second)
      throw Error("duplicate generator name: " + g.name);
    if (g.arity() < 1) throw Error("generator arity must be >= 1");
    if (g.output_colour < 0 || g.output_colour >= palette_->size())
      throw Error("generator output colour out of range");
    if (*g.input_colours.palette() != *palette_)
      throw PaletteMismatchError("generator colours use a foreign palette");
  }
}

int GeneratorSet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[i].name == name) return i;
  return -1;
}

TreeMonomial TreeMonomial::leaf(int label, int colour) {
  auto n = std::make_shared<Node>();
  n->gen = -1;
  n->label = label;
  n->colour = colour;
  n->arity = 1;
  n->degree = 0;
  n->min_leaf = label;
  n->leaves = {{label, colour}};
  n->key = "L" + std::to_string(label) + ":" + std::to_string(colour);
  return TreeMonomial(std::move(n));
}

TreeMonomial TreeMonomial::rebuild(int gen, int out_colour,
                                   std::vector<TreeMonomial> children) {
  if (children.empty()) throw Error("vertex must have children");
  std::sort(children.begin(), children.end(),
            [](const TreeMonomial& a, const TreeMonomial& b) {
              return a.min_leaf() < b.min_leaf();
            });
  auto n = std::make_shared<Node>();
  n->gen = gen;
  n->colour = out_colour;
  n->arity = 0;
  n->degree = 1;
  n->key = "V" + std::to_string(gen) + "(";
  std::set<int> seen;
  for (const auto& c : children) {
    n->arity += c.arity();
    n->degree += c.degree();
    for (const auto& lc : c.planar_leaves()) {
      if (!seen.insert(lc.first).second)
        throw Error("duplicate leaf label in tree monomial");
      n->leaves.push_back(lc);
    }
    n->key += c.key() + ",";
  }
  n->key += ")";
  n->min_leaf = children.front().min_leaf();
  n->children = std::move(children);
  return TreeMonomial(std::move(n));
}

TreeMonomial TreeMonomial::vertex(const GeneratorSet& gens, int gen,
                                  std::vector<TreeMonomial> children) {
  const Generator& g = gens.at(gen);
  if (static_cast<int>(children.size()) != g.arity())
    throw Error("vertex of " + g.name + ": wrong number of children");
  // Children arrive in any order; identify the slot of each child by the
  // planar position after sorting, and check colours slotwise then.
  std::vector<TreeMonomial> sorted = children;
  std::sort(sorted.begin(), sorted.end(),
            [](const TreeMonomial& a, const TreeMonomial& b) {
              return a.min_leaf() < b.min_leaf();
            });
  for (int k = 0; k < g.arity(); ++k)
    if (sorted[k].output_colour() != g.input_colours.at(k + 1))
      throw ColourMismatchError("vertex of " + g.name + ": child colour at slot " +
                                std::to_string(k + 1) + " does not match");
  return rebuild(gen, g.output_colour, std::move(sorted));
}

std::vector<int> TreeMonomial::input_colours() const {
  std::vector<int> out(arity(), 0);
  for (const auto& lc : planar_leaves()) {
    int idx = lc.first - 1;
    if (idx < 0 || idx >= arity())
      throw Error("input_colours: labels are not 1..n");
    out[idx] = lc.second;
  }
  return out;
}

bool TreeMonomial::labels_bijective() const {
  std::set<int> seen;
  for (const auto& lc : planar_leaves()) seen.insert(lc.first);
  return static_cast<int>(seen.size()) == arity() && *seen.begin() == 1 &&
         *seen.rbegin() == arity();
}

bool TreeMonomial::shuffle_condition_holds() const {
  if (is_leaf()) return true;
  int prev = -1;
  for (const auto& c : children()) {
    if (c.min_leaf() <= prev) return false;
    prev = c.min_leaf();
    if (!c.shuffle_condition_holds()) return false;
  }
  return true;
}

std::string TreeMonomial::to_string(const GeneratorSet& gens) const {
  if (is_leaf())
    return "id_" + gens.palette()->name(output_colour()) + "(" +
           std::to_string(leaf_label()) + ")";
  std::string out;
  auto rec = [&](auto&& self, const TreeMonomial& t) -> void {
    if (t.is_leaf()) {
      out += std::to_string(t.leaf_label());
      return;
    }
    out += gens.at(t.generator()).name;
    out += "(";
    for (size_t i = 0; i < t.children().size(); ++i) {
      if (i) out += ",";
      self(self, t.children()[i]);
    }
    out += ")";
  };
  rec(rec, *this);
  return out;
}

TreeMonomial TreeMonomial::subtree_at_vertex(int preorder_idx) const {
  if (is_leaf() || preorder_idx < 0 || preorder_idx >= degree())
    throw Error("vertex index out of range");
  if (preorder_idx == 0) return *this;
  int idx = 1;
  for (const auto& c : children()) {
    if (preorder_idx < idx + c.degree())
      return c.subtree_at_vertex(preorder_idx - idx);
    idx += c.degree();
  }
  throw Error("vertex index out of range");  // unreachable
}

TreeMonomial corolla(const GeneratorSet& gens, int gen) {
  const Generator& g = gens.at(gen);
  std::vector<TreeMonomial> leaves;
  for (int k = 1; k <= g.arity(); ++k)
    leaves.push_back(TreeMonomial::leaf(k, g.input_colours.at(k)));
  return TreeMonomial::vertex(gens, gen, std::move(leaves));
}

GraftShuffle GraftShuffle::identity(int l, int n, int m) {
  GraftShuffle s;
  for (int k = l; k <= n + m - 1; ++k) s.new_labels.push_back(k);
  return s;
}

std::vector<GraftShuffle> all_graft_shuffles(int n, int l, int m) {
  // T2's first leaf gets label l; choose which of the labels l+1..n+m-1 go
  // to T2's remaining m-1 leaves (in increasing order); the rest continue
  // T1's leaves l+1..n, also in increasing order.
  std::vector<GraftShuffle> out;
  std::vector<int> rest;
  for (int k = l + 1; k <= n + m - 1; ++k) rest.push_back(k);
  const int r = static_cast<int>(rest.size());
  std::vector<int> pick(m - 1, 0);
  auto emit = [&](const std::vector<int>& chosen_idx) {
    GraftShuffle s;
    s.new_labels.push_back(l);
    std::vector<bool> used(r, false);
    for (int i : chosen_idx) {
      s.new_labels.push_back(rest[i]);
      used[i] = true;
    }
    for (int i = 0; i < r; ++i)
      if (!used[i]) s.new_labels.push_back(rest[i]);
    out.push_back(std::move(s));
  };
  // Enumerate (m-1)-subsets of rest in lexicographic order.
  std::vector<int> idx(m - 1);
  for (int i = 0; i < m - 1; ++i) idx[i] = i;
  if (m - 1 > r) return out;
  while (true) {
    emit(idx);
    int i = m - 2;
    while (i >= 0 && idx[i] == r - (m - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m - 1; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

/// Applies a label map to every leaf of `t`, re-sorting into planar normal
/// form bottom-up. `splice(label)` may return a replacement subtree for a
/// leaf (used by grafting); otherwise the leaf is relabelled via `relab`.
template <typename Relab, typename Splice>
TreeMonomial transform_leaves(const TreeMonomial& t, const Relab& relab,
                              const Splice& splice) {
  if (t.is_leaf()) {
    if (auto rep = splice(t.leaf_label())) return *rep;
    return TreeMonomial::leaf(relab(t.leaf_label()), t.output_colour());
  }
  std::vector<TreeMonomial> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children())
    kids.push_back(transform_leaves(c, relab, splice));
  return TreeMonomial::rebuild(t.generator(), t.output_colour(),
                               std::move(kids));
}

std::optional<TreeMonomial> no_splice(int) { return std::nullopt; }

}  // namespace

TreeMonomial graft(const TreeMonomial& t1, int l, const GraftShuffle& sigma,
                   const TreeMonomial& t2) {
  const int n = t1.arity();
  const int m = t2.arity();
  // Locate the colour of t1's leaf labelled l.
  int leaf_colour = -1;
  for (const auto& lc : t1.planar_leaves())
    if (lc.first == l) leaf_colour = lc.second;
  if (leaf_colour < 0) throw Error("graft: no leaf labelled " + std::to_string(l));
  if (t2.output_colour() != leaf_colour)
    throw ColourMismatchError("graft: output colour of the grafted tree differs "
                              "from the colour of the target leaf");
  // Validate sigma: a permutation of {l..n+m-1}, both blocks increasing,
  // first block starting at l.
  const auto& s = sigma.new_labels;
  if (static_cast<int>(s.size()) != m + (n - l))
    throw InvalidShuffleError("graft: shuffle has wrong size");
  std::set<int> vals(s.begin(), s.end());
  if (static_cast<int>(vals.size()) != m + n - l || *vals.begin() != l ||
      *vals.rbegin() != n + m - 1)
    throw InvalidShuffleError("graft: shuffle is not a permutation of the "
                              "affected labels");
  if (s[0] != l) throw InvalidShuffleError("graft: first grafted label must be l");
  for (int i = 1; i < m; ++i)
    if (s[i] <= s[i - 1])
      throw InvalidShuffleError("graft: grafted-block labels must increase");
  for (int i = m + 1; i < static_cast<int>(s.size()); ++i)
    if (s[i] <= s[i - 1])
      throw InvalidShuffleError("graft: host-block labels must increase");

  auto relab1 = [&](int k) { return k < l ? k : s[m + (k - l - 1)]; };
  auto relab2 = [&](int j) { return s[j - 1]; };
  auto splice = [&](int k) -> std::optional<TreeMonomial> {
    if (k != l) return std::nullopt;
    return transform_leaves(t2, relab2, no_splice);
  };
  if (t1.is_leaf()) return transform_leaves(t2, relab2, no_splice);
  return transform_leaves(t1, relab1, splice);
}

namespace {

/// Attempts to match `pat` against the host subtree `hv` whose root has
/// preorder index `hv_idx` in the full host; on success appends matched
/// host indices in pattern preorder and the (pattern leaf label, host
/// subtree min) pairs of the boundary.
bool try_match(const TreeMonomial& hv, int hv_idx, const TreeMonomial& pat,
               std::vector<int>& vmap,
               std::vector<std::pair<int, int>>& boundary) {
  if (hv.generator() != pat.generator()) return false;
  vmap.push_back(hv_idx);
  int child_idx = hv_idx + 1;
  for (size_t j = 0; j < pat.children().size(); ++j) {
    const auto& pc = pat.children()[j];
    const auto& hc = hv.children()[j];
    if (pc.is_leaf()) {
      boundary.emplace_back(pc.leaf_label(), hc.min_leaf());
    } else {
      if (hc.is_leaf()) return false;
      if (!try_match(hc, child_idx, pc, vmap, boundary)) return false;
    }
    child_idx += hc.degree();
  }
  return true;
}

/// The pattern leaf labels must list the ranks of the host boundary mins.
bool ranks_consistent(std::vector<std::pair<int, int>> boundary) {
  std::sort(boundary.begin(), boundary.end());  // by pattern label
  for (size_t i = 0; i + 1 < boundary.size(); ++i) {
    if (boundary[i].first + 1 != boundary[i + 1].first) return false;
    if (boundary[i].second >= boundary[i + 1].second) return false;
  }
  return boundary.empty() || boundary.front().first == 1;
}

}  // namespace

std::vector<Embedding> find_divisors(const TreeMonomial& host,
                                     const TreeMonomial& pattern) {
  std::vector<Embedding> out;
  if (pattern.degree() == 0) {
    if (host.degree() == 0 && host.output_colour() == pattern.output_colour())
      out.push_back(Embedding{host, pattern, {}});
    return out;
  }
  // Walk host vertices in preorder.
  auto walk = [&](auto&& self, const TreeMonomial& t, int idx) -> void {
    if (t.is_leaf()) return;
    std::vector<int> vmap;
    std::vector<std::pair<int, int>> boundary;
    if (try_match(t, idx, pattern, vmap, boundary) &&
        ranks_consistent(boundary))
      out.push_back(Embedding{host, pattern, std::move(vmap)});
    int child_idx = idx + 1;
    for (const auto& c : t.children()) {
      self(self, c, child_idx);
      child_idx += c.degree();
    }
  };
  walk(walk, host, 0);
  return out;
}

namespace {

/// Collects, for a valid embedding, the host subtrees hanging off the
/// image, keyed by the pattern leaf label they correspond to.
void collect_boundary(const TreeMonomial& hv, const TreeMonomial& pat,
                      std::map<int, TreeMonomial>& out) {
  for (size_t j = 0; j < pat.children().size(); ++j) {
    const auto& pc = pat.children()[j];
    const auto& hc = hv.children()[j];
    if (pc.is_leaf())
      out.emplace(pc.leaf_label(), hc);
    else
      collect_boundary(hc, pc, out);
  }
}

TreeMonomial replace_at_vertex(const TreeMonomial& t, int target, int idx,
                               const TreeMonomial& repl) {
  if (idx == target) return repl;
  std::vector<TreeMonomial> kids;
  int child_idx = idx + 1;
  for (const auto& c : t.children()) {
    if (!c.is_leaf() && target >= child_idx && target < child_idx + c.degree())
      kids.push_back(replace_at_vertex(c, target, child_idx, repl));
    else
      kids.push_back(c);
    child_idx += c.degree();
  }
  return TreeMonomial::rebuild(t.generator(), t.output_colour(),
                               std::move(kids));
}

}  // namespace

TreeMonomial subtree_monomial(const Embedding& e) {
  if (e.pattern.degree() == 0) return e.host;
  const TreeMonomial image_root = e.host.subtree_at_vertex(e.vertex_map.at(0));
  // Determine boundary ranks: pattern leaf label j corresponds to the host
  // subtree with the j-th smallest min.
  std::map<int, TreeMonomial> boundary;
  collect_boundary(image_root, e.pattern, boundary);
  std::vector<int> mins;
  for (const auto& [lbl, sub] : boundary) mins.push_back(sub.min_leaf());
  std::sort(mins.begin(), mins.end());
  // Rebuild the pattern shape from the host image with rank labels.
  auto rec = [&](auto&& self, const TreeMonomial& hv,
                 const TreeMonomial& pat) -> TreeMonomial {
    std::vector<TreeMonomial> kids;
    for (size_t j = 0; j < pat.children().size(); ++j) {
      const auto& pc = pat.children()[j];
      const auto& hc = hv.children()[j];
      if (pc.is_leaf()) {
        int rank = static_cast<int>(std::lower_bound(mins.begin(), mins.end(),
                                                     hc.min_leaf()) -
                                    mins.begin()) +
                   1;
        kids.push_back(TreeMonomial::leaf(rank, hc.output_colour()));
      } else {
        kids.push_back(self(self, hc, pc));
      }
    }
    return TreeMonomial::rebuild(hv.generator(), hv.output_colour(),
                                 std::move(kids));
  };
  return rec(rec, image_root, e.pattern);
}

TreeMonomial substitute(const Embedding& e, const TreeMonomial& gamma) {
  if (gamma.arity() != e.pattern.arity() ||
      gamma.output_colour() != e.pattern.output_colour() ||
      gamma.input_colours() != e.pattern.input_colours())
    throw Error("substitute: replacement signature differs from the pattern");
  if (e.pattern.degree() == 0) return gamma;  // host is an identity monomial
  const TreeMonomial image_root = e.host.subtree_at_vertex(e.vertex_map.at(0));
  std::map<int, TreeMonomial> boundary;
  collect_boundary(image_root, e.pattern, boundary);
  auto splice = [&](int j) -> std::optional<TreeMonomial> {
    return boundary.at(j);
  };
  auto relab = [](int k) { return k; };
  TreeMonomial repl = transform_leaves(gamma, relab, splice);
  if (e.vertex_map.at(0) == 0) return repl;
  return replace_at_vertex(e.host, e.vertex_map.at(0), 0, repl);
}

namespace {

/// All monomials over the allowed generators, grouped by operation degree
/// 1..max_degree; monomials of arity above `arity_cap` (when set) are
/// pruned, which is sound because grafting never decreases arity.
std::vector<std::vector<TreeMonomial>> monomials_by_degree(
    const GeneratorSet& gens, const std::vector<int>& allowed, int max_degree,
    std::optional<int> arity_cap, long monomial_cap) {
  std::vector<std::vector<TreeMonomial>> levels;
  long count = 0;
  std::vector<TreeMonomial> corollas;
  for (int g : allowed) corollas.push_back(corolla(gens, g));
  auto admit = [&](const TreeMonomial& t) {
    return !arity_cap || t.arity() <= *arity_cap;
  };
  std::vector<TreeMonomial> level;
  for (const auto& c : corollas)
    if (admit(c)) level.push_back(c);
  std::sort(level.begin(), level.end());
  while (!level.empty() && static_cast<int>(levels.size()) < max_degree) {
    count += static_cast<long>(level.size());
    if (count > monomial_cap)
      throw ResourceLimitError("monomial enumeration exceeded the cap");
    levels.push_back(level);
    if (static_cast<int>(levels.size()) == max_degree) break;
    std::set<TreeMonomial> next;
    for (const auto& t : levels.back()) {
      for (const auto& c : corollas) {
        for (int l = 1; l <= t.arity(); ++l) {
          for (const auto& sig : all_graft_shuffles(t.arity(), l, c.arity())) {
            try {
              TreeMonomial g2 = graft(t, l, sig, c);
              if (admit(g2)) next.insert(std::move(g2));
            } catch (const ColourMismatchError&) {
            }
          }
        }
      }
    }
    level.assign(next.begin(), next.end());
  }
  return levels;
}

/// All shuffle trees with leaf-label set exactly `labels` (ascending), leaf
/// colours fixed by `colouring` (indexed by label), the given output colour
/// and degree <= max_degree. Blocks at each vertex are assigned in min-leaf
/// order, so every tree is produced exactly once.
void enumerate_exact(const GeneratorSet& gens, const std::vector<int>& labels,
                     int colour, const std::vector<int>& colouring,
                     int max_degree, long cap, long& count,
                     std::vector<TreeMonomial>& out) {
  auto admit = [&](TreeMonomial t) {
    if (++count > cap)
      throw ResourceLimitError("monomial enumeration exceeded the cap");
    out.push_back(std::move(t));
  };
  const int n = static_cast<int>(labels.size());
  if (n == 1 && colouring[labels[0] - 1] == colour)
    admit(TreeMonomial::leaf(labels[0], colour));
  if (max_degree < 1) return;
  for (int g = 0; g < gens.size(); ++g) {
    const Generator& gen = gens.at(g);
    if (gen.output_colour != colour) continue;
    const int k = gen.arity();
    if (n < k) continue;
    // Distribute the labels over k blocks; the smallest label anchors the
    // first block and block minima must increase (shuffle condition).
    std::vector<int> block_of(n, 0);
    for (;;) {
      std::vector<std::vector<int>> blocks(k);
      for (int i = 0; i < n; ++i) blocks[block_of[i]].push_back(labels[i]);
      bool valid = true;
      int prev_min = -1;
      for (const auto& b : blocks) {
        if (b.empty() || b.front() < prev_min) {
          valid = false;
          break;
        }
        prev_min = b.front();
      }
      if (valid) {
        std::vector<std::vector<TreeMonomial>> options(k);
        for (int i = 0; i < k && valid; ++i) {
          long sub_count = 0;
          enumerate_exact(gens, blocks[i], gen.input_colours.at(i + 1),
                          colouring, max_degree - 1, cap, sub_count,
                          options[i]);
          if (options[i].empty()) valid = false;
        }
        if (valid) {
          std::vector<int> pick(k, 0);
          for (;;) {
            std::vector<TreeMonomial> children;
            for (int i = 0; i < k; ++i) children.push_back(options[i][pick[i]]);
            TreeMonomial t = TreeMonomial::vertex(gens, g, std::move(children));
            if (t.degree() <= max_degree) admit(std::move(t));
            int i = k - 1;
            while (i >= 0 && ++pick[i] == static_cast<int>(options[i].size()))
              pick[i--] = 0;
            if (i < 0) break;
          }
        }
      }
      // Next block assignment; label 0 stays in block 0.
      int i = n - 1;
      while (i >= 1 && ++block_of[i] == k) block_of[i--] = 0;
      if (i < 1) break;
    }
  }
}

std::vector<int> all_indices(const GeneratorSet& gens) {
  std::vector<int> out;
  for (int i = 0; i < gens.size(); ++i) out.push_back(i);
  return out;
}

void collect_used_generators(const TreeMonomial& t, std::set<int>& out) {
  if (t.is_leaf()) return;
  out.insert(t.generator());
  for (const auto& c : t.children()) collect_used_generators(c, out);
}

}  // namespace

std::vector<TreeMonomial> enumerate_monomials(
    const GeneratorSet& gens, const EnumerationFilter& filter) {
  if (!filter.arity && !filter.max_degree)
    throw Error("enumerate_monomials: need an arity or a degree bound");
  std::vector<TreeMonomial> out;
  auto matches = [&](const TreeMonomial& t) {
    if (filter.arity && t.arity() != *filter.arity) return false;
    if (filter.output_colour && t.output_colour() != *filter.output_colour)
      return false;
    if (filter.input_colouring && t.input_colours() != *filter.input_colouring)
      return false;
    return true;
  };
  // Fully-pinned signature: build trees over the exact label set instead
  // of sieving the degree-levelled universe.
  if (filter.arity && filter.input_colouring && filter.max_degree) {
    const auto& colouring = *filter.input_colouring;
    if (static_cast<int>(colouring.size()) != *filter.arity)
      return out;  // no monomial can match an inconsistent filter
    std::vector<int> labels(*filter.arity);
    for (int i = 0; i < *filter.arity; ++i) labels[i] = i + 1;
    long count = 0;
    int first = filter.output_colour ? *filter.output_colour : 0;
    int last =
        filter.output_colour ? *filter.output_colour : gens.palette()->size() - 1;
    for (int c = first; c <= last; ++c)
      enumerate_exact(gens, labels, c, colouring, *filter.max_degree,
                      filter.monomial_cap, count, out);
    std::sort(out.begin(), out.end(),
              [&](const TreeMonomial& a, const TreeMonomial& b) {
                return a.to_string(gens) < b.to_string(gens);
              });
    return out;
  }
  // Identity monomials (degree 0, arity 1).
  for (int c = 0; c < gens.palette()->size(); ++c) {
    TreeMonomial id = TreeMonomial::identity(c);
    if (matches(id)) out.push_back(id);
  }
  const int max_degree =
      filter.max_degree ? *filter.max_degree : std::numeric_limits<int>::max();
  if (max_degree >= 1) {
    auto levels = monomials_by_degree(gens, all_indices(gens), max_degree,
                                      filter.arity, filter.monomial_cap);
    for (const auto& level : levels)
      for (const auto& t : level)
        if (matches(t)) out.push_back(t);
  }
  std::sort(out.begin(), out.end(),
            [&](const TreeMonomial& a, const TreeMonomial& b) {
              return a.to_string(gens) < b.to_string(gens);
            });
  return out;
}

std::vector<SmallCommonMultiple> small_common_multiples(
    const GeneratorSet& gens, const TreeMonomial& alpha,
    const TreeMonomial& beta) {
  std::vector<SmallCommonMultiple> out;
  if (alpha.degree() == 0 || beta.degree() == 0) return out;
  std::set<int> used;
  collect_used_generators(alpha, used);
  collect_used_generators(beta, used);
  const int dmin = std::max(alpha.degree(), beta.degree());
  const int dmax = alpha.degree() + beta.degree() - 1;
  auto levels = monomials_by_degree(
      gens, std::vector<int>(used.begin(), used.end()), dmax, std::nullopt,
      2'000'000);
  const bool same = alpha == beta;
  for (int d = dmin; d <= dmax; ++d) {
    if (d - 1 >= static_cast<int>(levels.size())) break;
    for (const auto& gamma : levels[d - 1]) {
      auto ea = find_divisors(gamma, alpha);
      if (ea.empty()) continue;
      auto eb = find_divisors(gamma, beta);
      for (const auto& a : ea) {
        for (const auto& b : eb) {
          if (same && b.vertex_map <= a.vertex_map) continue;
          // Overlap in at least one vertex; union covers gamma.
          std::set<int> verts(a.vertex_map.begin(), a.vertex_map.end());
          bool overlap = false;
          for (int v : b.vertex_map) {
            if (!verts.insert(v).second) overlap = true;
          }
          if (!overlap) continue;
          if (static_cast<int>(verts.size()) != gamma.degree()) continue;
          out.push_back(SmallCommonMultiple{gamma, a, b});
        }
      }
    }
  }
  return out;
}

GeneratorSetRef colour_blind(const GeneratorSet& gens) {
  auto palette = make_palette({"*"});
  std::vector<Generator> blind;
  for (int i = 0; i < gens.size(); ++i) {
    const Generator& g = gens.at(i);
    blind.push_back(Generator{
        g.name, Colouring(palette, std::vector<int>(g.arity(), 0)), 0});
  }
  return std::make_shared<const GeneratorSet>(palette, std::move(blind));
}

TreeMonomial strip_colours(const GeneratorSet& blind, const TreeMonomial& t) {
  if (t.is_leaf()) return TreeMonomial::leaf(t.leaf_label(), 0);
  std::vector<TreeMonomial> kids;
  for (const auto& c : t.children()) kids.push_back(strip_colours(blind, c));
  return TreeMonomial::vertex(blind, t.generator(), std::move(kids));
}

std::vector<TreeMonomial> colour_mixing_monomials(const GeneratorSet& gens) {
  auto blind = colour_blind(gens);
  std::set<TreeMonomial> out;
  for (int i = 0; i < gens.size(); ++i) {
    const Generator& gi = gens.at(i);
    for (int j = 0; j < gens.size(); ++j) {
      const Generator& gj = gens.at(j);
      for (int l = 1; l <= gi.arity(); ++l) {
        if (gi.input_colours.at(l) == gj.output_colour) continue;
        TreeMonomial outer = corolla(*blind, i);
        TreeMonomial inner = corolla(*blind, j);
        for (const auto& sig : all_graft_shuffles(gi.arity(), l, gj.arity()))
          out.insert(graft(outer, l, sig, inner));
      }
    }
  }
  return std::vector<TreeMonomial>(out.begin(), out.end());
}

}  // namespace operadix

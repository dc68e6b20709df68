#include "operadix/ordering.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "operadix/error.hpp"

namespace operadix {

namespace {

void collect_words(const TreeMonomial& t, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (t.is_leaf()) {
    out[t.leaf_label() - 1] = prefix;
    return;
  }
  prefix.push_back(t.generator());
  for (const auto& c : t.children()) collect_words(c, prefix, out);
  prefix.pop_back();
}

/// Root-to-leaf generator-index words indexed by leaf label (0-based).
std::vector<std::vector<int>> words_by_label(const TreeMonomial& t) {
  std::vector<std::vector<int>> out(t.arity());
  std::vector<int> prefix;
  collect_words(t, prefix, out);
  return out;
}

Ordering flip(Ordering o) {
  if (o == Ordering::Less) return Ordering::Greater;
  if (o == Ordering::Greater) return Ordering::Less;
  return Ordering::Equal;
}

}  // namespace

std::string PathFingerprint::to_string() const {
  std::ostringstream os;
  os << "((";
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) os << ",";
    os << words[i];
  }
  os << ")|(";
  bool wide = leaf_permutation.size() >= 10;
  for (size_t i = 0; i < leaf_permutation.size(); ++i) {
    if (i && wide) os << ",";
    os << leaf_permutation[i];
  }
  os << "))";
  return os.str();
}

PathFingerprint path_fingerprint(const GeneratorSet& gens,
                                 const TreeMonomial& t) {
  PathFingerprint fp;
  for (const auto& w : words_by_label(t)) {
    std::string s;
    for (int g : w) s += gens.at(g).name;
    fp.words.push_back(std::move(s));
  }
  for (const auto& [label, colour] : t.planar_leaves())
    fp.leaf_permutation.push_back(label);
  return fp;
}

QMWord qm_normal_form(const std::vector<std::string>& word,
                      const TieredQMSpec& spec) {
  QMWord out;
  out.tier_words.resize(spec.tiers.size());
  std::vector<int> tiers;
  for (const auto& name : word) {
    int tier = -1;
    for (size_t t = 0; t < spec.tiers.size(); ++t) {
      const auto& ls = spec.tiers[t].letters;
      if (std::find(ls.begin(), ls.end(), name) != ls.end()) {
        tier = static_cast<int>(t);
        break;
      }
    }
    if (tier < 0) throw Error("qm_normal_form: unknown generator " + name);
    // Each heavier letter moves left past every lighter letter already
    // placed, contributing one factor of q per transposition.
    for (int seen : tiers)
      if (seen > tier) ++out.q;
    tiers.push_back(tier);
    out.tier_words[tier].push_back(name);
  }
  return out;
}

MonomialOrder::MonomialOrder(OrderingSpec spec, GeneratorSetRef gens)
    : spec_(std::move(spec)), gens_(std::move(gens)) {
  info_.resize(gens_->size());
  auto rank_in = [](const std::vector<std::string>& v, const std::string& s) {
    auto it = std::find(v.begin(), v.end(), s);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
  };
  if (spec_.is_pathlex()) {
    for (int g = 0; g < gens_->size(); ++g) {
      info_[g].fallback_rank = rank_in(spec_.pathlex().letters,
                                       gens_->at(g).name);
      if (info_[g].fallback_rank < 0)
        throw Error("ordering: generator " + gens_->at(g).name +
                    " missing from the letter order");
    }
    return;
  }
  const auto& tq = spec_.tiered();
  n_tiers_ = static_cast<int>(tq.tiers.size());
  for (int g = 0; g < gens_->size(); ++g) {
    const auto& name = gens_->at(g).name;
    for (int t = 0; t < n_tiers_; ++t) {
      int r = rank_in(tq.tiers[t].letters, name);
      if (r >= 0) {
        info_[g].tier = t;
        info_[g].tier_rank = r;
        break;
      }
    }
    if (info_[g].tier < 0)
      throw Error("ordering: generator " + name + " belongs to no tier");
    info_[g].fallback_rank = rank_in(tq.fallback.letters, name);
    if (info_[g].fallback_rank < 0)
      throw Error("ordering: generator " + name +
                  " missing from the fallback letter order");
    auto it = tq.fallback_weights.find(name);
    info_[g].weight = it == tq.fallback_weights.end() ? 0 : it->second;
  }
}

Ordering MonomialOrder::compare_perm_revlex(const TreeMonomial& a,
                                            const TreeMonomial& b) const {
  const auto& la = a.planar_leaves();
  const auto& lb = b.planar_leaves();
  // Reverse lexicographic: scan from the right; at the first difference
  // the smaller label makes the greater permutation.
  for (size_t i = la.size(); i-- > 0;) {
    if (la[i].first != lb[i].first)
      return la[i].first < lb[i].first ? Ordering::Greater : Ordering::Less;
  }
  return Ordering::Equal;
}

CompareResult MonomialOrder::compare_pathlex(const TreeMonomial& a,
                                             const TreeMonomial& b) const {
  auto wa = words_by_label(a), wb = words_by_label(b);
  for (size_t i = 0; i < wa.size(); ++i) {
    const auto& u = wa[i];
    const auto& v = wb[i];
    if (u == v) continue;
    if (u.size() != v.size()) {
      bool greater = (u.size() > v.size()) == spec_.pathlex().longer_greater;
      return {greater ? Ordering::Greater : Ordering::Less, false};
    }
    for (size_t j = 0; j < u.size(); ++j) {
      int ru = info_[u[j]].fallback_rank, rv = info_[v[j]].fallback_rank;
      if (ru != rv)
        return {ru > rv ? Ordering::Greater : Ordering::Less, false};
    }
  }
  Ordering p = compare_perm_revlex(a, b);
  if (p != Ordering::Equal) return {p, false};
  // Distinct trees with identical words and permutation cannot occur, but
  // keep the comparison total.
  return {a.key() < b.key() ? Ordering::Less : Ordering::Greater, false};
}

MonomialOrder::Partial MonomialOrder::compare_words_tiered(
    const std::vector<int>& u, const std::vector<int>& v) const {
  if (u == v) return Partial::Equal;
  const auto& tq = spec_.tiered();
  // Tier degrees, intra-tier subwords and q-exponents of both words.
  std::vector<int> du(n_tiers_, 0), dv(n_tiers_, 0);
  long qu = 0, qv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    int t = info_[u[i]].tier;
    for (size_t j = 0; j < i; ++j)
      if (info_[u[j]].tier > t) ++qu;
    ++du[t];
  }
  for (size_t i = 0; i < v.size(); ++i) {
    int t = info_[v[i]].tier;
    for (size_t j = 0; j < i; ++j)
      if (info_[v[j]].tier > t) ++qv;
    ++dv[t];
  }
  for (int t = 0; t < n_tiers_; ++t) {
    if (du[t] != dv[t]) {
      bool greater = (du[t] > dv[t]) == tq.tiers[t].greater_degree_is_greater;
      return greater ? Partial::Greater : Partial::Less;
    }
    // Equal degrees: compare the tier subwords when an intra-tier order
    // is declared; otherwise differing subwords are incomparable.
    std::vector<int> su, sv;
    for (int g : u)
      if (info_[g].tier == t) su.push_back(info_[g].tier_rank);
    for (int g : v)
      if (info_[g].tier == t) sv.push_back(info_[g].tier_rank);
    if (su != sv) {
      if (!tq.tiers[t].lex_inside) return Partial::Incomparable;
      for (size_t j = 0; j < su.size(); ++j)
        if (su[j] != sv[j])
          return su[j] > sv[j] ? Partial::Greater : Partial::Less;
    }
  }
  if (qu != qv) {
    bool greater = (qu > qv) == tq.greater_q_is_greater;
    return greater ? Partial::Greater : Partial::Less;
  }
  // Same degrees, subword ranks and q but different words: the letters
  // only differ across tiers in interleaving already accounted by q, so
  // this is unreachable for distinct words; treat as incomparable.
  return Partial::Incomparable;
}

Ordering MonomialOrder::compare_words_fallback(const std::vector<int>& u,
                                               const std::vector<int>& v) const {
  long wu = 0, wv = 0;
  for (int g : u) wu += info_[g].weight;
  for (int g : v) wv += info_[g].weight;
  if (wu != wv) return wu > wv ? Ordering::Greater : Ordering::Less;
  if (u.size() != v.size()) {
    bool greater =
        (u.size() > v.size()) == spec_.tiered().fallback.longer_greater;
    return greater ? Ordering::Greater : Ordering::Less;
  }
  for (size_t j = 0; j < u.size(); ++j) {
    int ru = info_[u[j]].fallback_rank, rv = info_[v[j]].fallback_rank;
    if (ru != rv) return ru > rv ? Ordering::Greater : Ordering::Less;
  }
  return Ordering::Equal;
}

CompareResult MonomialOrder::compare_tiered(const TreeMonomial& a,
                                            const TreeMonomial& b) const {
  auto wa = words_by_label(a), wb = words_by_label(b);
  // Stage 1: componentwise dominance in the tiered partial order.
  bool some_greater = false, some_less = false, undecided = false;
  for (size_t i = 0; i < wa.size(); ++i) {
    switch (compare_words_tiered(wa[i], wb[i])) {
      case Partial::Greater: some_greater = true; break;
      case Partial::Less: some_less = true; break;
      case Partial::Equal: break;
      case Partial::Incomparable: undecided = true; break;
    }
  }
  if (!undecided) {
    if (some_greater && !some_less) return {Ordering::Greater, false};
    if (some_less && !some_greater) return {Ordering::Less, false};
    if (!some_greater && !some_less) {
      // All path words literally equal: only the planar structure differs,
      // so the partial order is silent and the tiebreak is fallback.
      Ordering p = compare_perm_revlex(a, b);
      if (p != Ordering::Equal) return {p, true};
      return {a.key() < b.key() ? Ordering::Less : Ordering::Greater, true};
    }
  }
  // Stage 2: deterministic fallback. The first differing path component
  // decides, by letter weight, then word length, then letter rank; this
  // scan is stable under partial composition because shuffles preserve
  // the relative order of existing labels and a grafted block's first
  // leaf inherits the replaced label.
  for (size_t i = 0; i < wa.size(); ++i) {
    if (wa[i] == wb[i]) continue;
    Ordering o = compare_words_fallback(wa[i], wb[i]);
    if (o != Ordering::Equal) return {o, true};
  }
  Ordering p = compare_perm_revlex(a, b);
  if (p != Ordering::Equal) return {p, true};
  return {a.key() < b.key() ? Ordering::Less : Ordering::Greater, true};
}

CompareResult MonomialOrder::compare(const TreeMonomial& a,
                                     const TreeMonomial& b) const {
  if (a.key() == b.key()) return {Ordering::Equal, false};
  if (a.arity() != b.arity())
    return {a.arity() < b.arity() ? Ordering::Less : Ordering::Greater, false};
  auto res = spec_.is_pathlex() ? compare_pathlex(a, b) : compare_tiered(a, b);
  if (spec_.reversed && res.order != Ordering::Equal)
    res.order =
        res.order == Ordering::Less ? Ordering::Greater : Ordering::Less;
  if (res.fallback_used) ++fallback_uses_;
  return res;
}

CompareResult compare(const OrderingSpec& spec, const GeneratorSetRef& gens,
                      const TreeMonomial& a, const TreeMonomial& b) {
  return MonomialOrder(spec, gens).compare(a, b);
}

AdmissibilityReport check_admissibility(const OrderingSpec& spec,
                                        const GeneratorSetRef& gens,
                                        int arity_bound, int samples,
                                        unsigned seed) {
  AdmissibilityReport report;
  MonomialOrder order(spec, gens);
  std::mt19937 rng(seed);

  EnumerationFilter f;
  f.max_degree = arity_bound;
  std::vector<TreeMonomial> pool;
  for (const auto& t : enumerate_monomials(*gens, f))
    if (t.arity() <= arity_bound) pool.push_back(t);
  if (pool.size() < 2) return report;
  // Buckets of monomials sharing a full colour signature, so that
  // monotonicity pairs can be drawn directly.
  std::map<std::string, std::vector<TreeMonomial>> buckets;
  for (const auto& t : pool) {
    std::string sig = std::to_string(t.output_colour()) + "|";
    for (int c : t.input_colours()) sig += std::to_string(c) + ",";
    buckets[sig].push_back(t);
  }
  std::vector<const std::vector<TreeMonomial>*> rich;
  for (const auto& [sig, v] : buckets)
    if (v.size() >= 2) rich.push_back(&v);
  auto pick = [&](const std::vector<TreeMonomial>& v) -> const TreeMonomial& {
    std::uniform_int_distribution<size_t> d(0, v.size() - 1);
    return v[d(rng)];
  };
  auto describe = [&](const TreeMonomial& t) { return t.to_string(*gens); };

  for (int s = 0; s < samples; ++s) {
    // Clause 1 on a random cross-arity pair.
    if (s % 4 == 0 || rich.empty()) {
      const auto& x = pick(pool);
      const auto& y = pick(pool);
      if (x.arity() == y.arity()) continue;
      ++report.pairs_checked;
      auto c = order.compare(x, y).order;
      bool want_less = x.arity() < y.arity();
      if ((want_less && c != Ordering::Less) ||
          (!want_less && c != Ordering::Greater))
        report.violations.push_back("arity clause: " + describe(x) + " vs " +
                                    describe(y));
      continue;
    }
    std::uniform_int_distribution<size_t> db(0, rich.size() - 1);
    const auto& bucket = *rich[db(rng)];
    const auto& x = pick(bucket);
    const auto& y = pick(bucket);
    if (x == y) continue;
    auto base_res = order.compare(x, y);
    Ordering base = base_res.order;
    const TreeMonomial& lo = base == Ordering::Less ? x : y;
    const TreeMonomial& hi = base == Ordering::Less ? y : x;
    // Clause 2a: grafting the pair into a shared host preserves order.
    const auto& host = pick(pool);
    if (host.degree() > 0) {
      auto cols = host.input_colours();
      for (int l = 1; l <= host.arity(); ++l) {
        if (cols[l - 1] != lo.output_colour()) continue;
        auto shuffles = all_graft_shuffles(host.arity(), l, lo.arity());
        std::uniform_int_distribution<size_t> d(0, shuffles.size() - 1);
        const auto& sh = shuffles[d(rng)];
        auto glo = graft(host, l, sh, lo);
        auto ghi = graft(host, l, sh, hi);
        auto res = order.compare(glo, ghi);
        if (base_res.fallback_used || res.fallback_used) {
          ++report.fallback_skips;
          break;
        }
        ++report.pairs_checked;
        if (res.order != Ordering::Less)
          report.violations.push_back("graft clause (inner): " +
                                      describe(glo) + " !< " + describe(ghi));
        break;
      }
    }
    // Clause 2b: grafting a shared argument below the pair preserves order.
    if (lo.degree() > 0) {
      const auto& arg = pick(pool);
      auto cols = lo.input_colours();
      for (int l = 1; l <= lo.arity(); ++l) {
        if (cols[l - 1] != arg.output_colour()) continue;
        auto shuffles = all_graft_shuffles(lo.arity(), l, arg.arity());
        std::uniform_int_distribution<size_t> d(0, shuffles.size() - 1);
        const auto& sh = shuffles[d(rng)];
        auto glo = graft(lo, l, sh, arg);
        auto ghi = graft(hi, l, sh, arg);
        auto res = order.compare(glo, ghi);
        if (base_res.fallback_used || res.fallback_used) {
          ++report.fallback_skips;
          break;
        }
        ++report.pairs_checked;
        if (res.order != Ordering::Less)
          report.violations.push_back("graft clause (outer): " +
                                      describe(glo) + " !< " + describe(ghi));
        break;
      }
    }
  }
  return report;
}

}  // namespace operadix

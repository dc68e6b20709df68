#include "operadix/koszul.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "operadix/error.hpp"

namespace operadix {

namespace {

std::string signature_key(const TreeMonomial& t) {
  std::string k = std::to_string(t.output_colour()) + "|";
  for (int c : t.input_colours()) k += std::to_string(c) + ",";
  return k;
}

/// All degree-2 shuffle monomials, grouped by signature, each group sorted
/// by canonical key.
std::map<std::string, std::vector<TreeMonomial>> quadratic_monomials(
    const GeneratorSet& gens) {
  EnumerationFilter f;
  f.max_degree = 2;
  std::map<std::string, std::vector<TreeMonomial>> out;
  for (const auto& t : enumerate_monomials(gens, f))
    if (t.degree() == 2) out[signature_key(t)].push_back(t);
  for (auto& [key, group] : out)
    std::sort(group.begin(), group.end());
  return out;
}

/// In-place reduced row echelon form; returns the pivot column of each
/// surviving row. Zero rows are dropped.
std::vector<size_t> rref(std::vector<std::vector<Rational>>& rows) {
  std::vector<size_t> pivots;
  if (rows.empty()) return pivots;
  size_t cols = rows.front().size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

std::map<std::string, std::vector<std::vector<Rational>>> relation_rows(
    const QuadraticPresentation& qp,
    const std::map<std::string, std::vector<TreeMonomial>>& monos) {
  std::map<std::string, std::vector<std::vector<Rational>>> rows;
  for (const auto& rel : qp.relations) {
    if (rel.is_zero()) throw Error("koszul: zero relation");
    const auto& sig_key = signature_key(rel.terms().begin()->first);
    auto it = monos.find(sig_key);
    if (it == monos.end())
      throw Error("koszul: relation signature has no quadratic monomials");
    const auto& group = it->second;
    std::vector<Rational> row(group.size(), Rational(0));
    for (const auto& [t, c] : rel.terms()) {
      if (t.degree() != 2)
        throw Error("koszul: relation term of operation degree " +
                    std::to_string(t.degree()));
      auto pos = std::lower_bound(group.begin(), group.end(), t);
      if (pos == group.end() || *pos != t)
        throw Error("koszul: relation term outside its signature");
      row[pos - group.begin()] = c;
    }
    rows[sig_key].push_back(std::move(row));
  }
  return rows;
}

void check_independent(
    std::map<std::string, std::vector<std::vector<Rational>>> rows) {
  for (auto& [key, group] : rows) {
    size_t count = group.size();
    if (rref(group).size() != count)
      throw Error("koszul: linearly dependent relations in one signature");
  }
}

}  // namespace

QuadraticPresentation make_quadratic(GeneratorSetRef gens,
                                     std::vector<OperadPolynomial> relations,
                                     OrderingSpec ordering,
                                     std::vector<std::string> dual_names) {
  QuadraticPresentation qp{std::move(gens), std::move(relations),
                           std::move(ordering), std::move(dual_names)};
  if (qp.dual_names.empty())
    for (int g = 0; g < qp.gens->size(); ++g)
      qp.dual_names.push_back(qp.gens->at(g).name + "!");
  if (static_cast<int>(qp.dual_names.size()) != qp.gens->size())
    throw Error("koszul: one dual name per generator required");
  check_independent(relation_rows(qp, quadratic_monomials(*qp.gens)));
  return qp;
}

std::vector<OperadPolynomial> prune_dependent(
    const std::vector<OperadPolynomial>& relations) {
  // Incremental elimination per signature over the sparse monomial basis.
  std::map<std::string, std::vector<std::map<std::string, Rational>>> echelon;
  std::vector<OperadPolynomial> kept;
  for (const auto& rel : relations) {
    if (rel.is_zero()) continue;
    std::map<std::string, Rational> row;
    for (const auto& [t, c] : rel.terms()) row[t.key()] = c;
    auto& rows = echelon[signature_key(rel.terms().begin()->first)];
    for (const auto& r : rows) {
      auto it = row.find(r.begin()->first);
      if (it == row.end() || it->second == 0) continue;
      Rational f = it->second / r.begin()->second;
      for (const auto& [k, v] : r) {
        row[k] -= f * v;
        if (row[k] == 0) row.erase(k);
      }
    }
    if (row.empty()) continue;
    rows.push_back(std::move(row));
    kept.push_back(rel);
  }
  return kept;
}

int pairing_sign(const TreeMonomial& t,
                 const std::vector<int>& colour_shifts) {
  if (t.degree() != 2) throw Error("koszul: pairing sign needs degree 2");
  auto parity = [&](int colour) {
    return colour < static_cast<int>(colour_shifts.size())
               ? colour_shifts[colour] & 1
               : 1;
  };
  const auto& leaves = t.planar_leaves();
  int exp = 0;
  // Graded sign of the planar leaf permutation.
  for (size_t i = 0; i < leaves.size(); ++i)
    for (size_t j = i + 1; j < leaves.size(); ++j)
      if (leaves[i].first > leaves[j].first)
        exp += parity(leaves[i].second) * parity(leaves[j].second);
  // The inner operation moves past the leaves planar-left of its subtree.
  const auto& ch = t.children();
  size_t slot = 0;
  while (slot < ch.size() && ch[slot].is_leaf()) ++slot;
  const TreeMonomial& inner = ch[slot];
  int inner_parity = parity(inner.output_colour());
  for (const auto& c : inner.children()) inner_parity += parity(c.output_colour());
  int left = 0;
  for (size_t k = 0; k < slot; ++k) left += parity(ch[k].output_colour());
  exp += (inner_parity & 1) * left;
  return exp % 2 ? -1 : 1;
}

OrderingSpec reverse_ordering(OrderingSpec spec) {
  spec.reversed = !spec.reversed;
  return spec;
}

GeneratorSetRef dual_generator_set(
    const GeneratorSet& gens, const std::vector<std::string>& dual_names) {
  std::vector<Generator> dual;
  for (int g = 0; g < gens.size(); ++g)
    dual.push_back(
        {dual_names.at(g), gens.at(g).input_colours, gens.at(g).output_colour});
  return std::make_shared<GeneratorSet>(gens.palette(), std::move(dual));
}

std::vector<TreeMonomial> monomial_dual(
    const std::vector<TreeMonomial>& leading_terms, const GeneratorSet& gens) {
  std::set<std::string> keys;
  for (const auto& t : leading_terms) {
    if (t.degree() != 2) throw Error("koszul: leading term not quadratic");
    keys.insert(t.key());
  }
  std::vector<TreeMonomial> out;
  for (const auto& [sig, group] : quadratic_monomials(gens))
    for (const auto& t : group)
      if (!keys.count(t.key())) out.push_back(t);
  return out;
}

QuadraticPresentation quadratic_dual(const QuadraticPresentation& qp) {
  auto monos = quadratic_monomials(*qp.gens);
  auto rows = relation_rows(qp, monos);

  QuadraticPresentation dual;
  dual.gens = dual_generator_set(*qp.gens, qp.dual_names);
  dual.colour_shifts = qp.colour_shifts;
  for (int g = 0; g < qp.gens->size(); ++g)
    dual.dual_names.push_back(qp.gens->at(g).name);

  // Reverse the ordering and move it onto the dual alphabet.
  dual.ordering = reverse_ordering(qp.ordering);
  auto rename = [&](std::string& name) {
    int g = qp.gens->index_of(name);
    if (g < 0) throw Error("koszul: ordering letter " + name + " unknown");
    name = qp.dual_names[g];
  };
  if (dual.ordering.is_pathlex()) {
    for (auto& l : std::get<PathLexSpec>(dual.ordering.variant).letters)
      rename(l);
  } else {
    auto& tq = std::get<TieredQMSpec>(dual.ordering.variant);
    for (auto& tier : tq.tiers)
      for (auto& l : tier.letters) rename(l);
    for (auto& l : tq.fallback.letters) rename(l);
    std::map<std::string, int> weights;
    for (const auto& [name, w] : tq.fallback_weights) {
      std::string renamed = name;
      rename(renamed);
      weights[renamed] = w;
    }
    tq.fallback_weights = std::move(weights);
  }

  // Per signature: the annihilator of the relation span under the signed
  // dual-basis pairing. Scaling column c by pairing_sign(monomial c) turns
  // the annihilator into the plain kernel of the scaled row space. Columns
  // are eliminated in decreasing primal order, so every kernel vector is
  // one primal-non-leading monomial plus strictly primal-greater pivots;
  // under the reversed ordering its leading term is exactly that
  // complement monomial.
  MonomialOrder primal_ord(qp.ordering, qp.gens);
  for (const auto& [sig_key, key_group] : monos) {
    // Columns in decreasing primal order; rows re-indexed to match.
    std::vector<size_t> perm(key_group.size());
    for (size_t c = 0; c < perm.size(); ++c) perm[c] = c;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
      return primal_ord.greater(key_group[a], key_group[b]);
    });
    std::vector<TreeMonomial> group;
    for (size_t c : perm) group.push_back(key_group[c]);
    std::vector<std::vector<Rational>> sig_rows;
    if (auto it = rows.find(sig_key); it != rows.end())
      for (const auto& key_row : it->second) {
        std::vector<Rational> row(key_row.size());
        for (size_t c = 0; c < row.size(); ++c) row[c] = key_row[perm[c]];
        sig_rows.push_back(std::move(row));
      }
    for (auto& row : sig_rows)
      for (size_t c = 0; c < group.size(); ++c)
        if (pairing_sign(group[c], qp.colour_shifts) < 0) row[c] = -row[c];
    size_t count = sig_rows.size();
    auto pivots = rref(sig_rows);
    if (pivots.size() != count)
      throw Error("koszul: linearly dependent relations in one signature");
    std::vector<bool> is_pivot(group.size(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    for (size_t c = 0; c < group.size(); ++c) {
      if (is_pivot[c]) continue;
      OperadPolynomial rel(Signature::of(group[c]));
      rel.add_term(group[c], 1);
      for (size_t r = 0; r < pivots.size(); ++r)
        if (sig_rows[r][c] != 0)
          rel.add_term(group[pivots[r]], -sig_rows[r][c]);
      dual.relations.push_back(std::move(rel));
    }
  }
  return dual;
}

}  // namespace operadix

#include "operadix/completion.hpp"

#include <algorithm>
#include <sstream>

#include "operadix/error.hpp"

namespace operadix {

namespace {

struct Task {
  int degree = 0;
  std::string gamma_key;
  int f = -1, g = -1;
  SmallCommonMultiple scm;

  bool operator<(const Task& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (gamma_key != o.gamma_key) return gamma_key < o.gamma_key;
    if (f != o.f) return f < o.f;
    return g < o.g;
  }
};

/// Expands the pair (i, j) into SCM tasks, flagging skipped deep overlaps.
void expand_pair(const GeneratorSet& gens,
                 const std::vector<OperadPolynomial>& elements,
                 const MonomialOrder& ord, int i, int j, int bound,
                 std::vector<Task>& tasks, bool& truncated) {
  auto lt_i = leading_term(elements[i], ord).first;
  auto lt_j = leading_term(elements[j], ord).first;
  for (auto& scm : small_common_multiples(gens, lt_i, lt_j)) {
    if (scm.gamma.degree() > bound) {
      truncated = true;
      continue;
    }
    tasks.push_back({scm.gamma.degree(), scm.gamma.key(), i, j, scm});
  }
  // Two distinct elements sharing a leading term overlap trivially on the
  // term itself; their S-polynomial is the difference.
  if (i != j && lt_i == lt_j && lt_i.degree() <= bound) {
    auto self = find_divisors(lt_i, lt_i).front();
    tasks.push_back({lt_i.degree(), lt_i.key(), i, j,
                     SmallCommonMultiple{lt_i, self, self}});
  }
}

/// Removes elements whose leading term is divisible by another element's;
/// survivors are normal-formed against each other. Later elements are
/// reduced first so that on ties the earlier one survives.
void inter_reduce(std::vector<OperadPolynomial>& elements,
                  const MonomialOrder& ord) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = static_cast<int>(elements.size()) - 1; i >= 0; --i) {
      std::vector<OperadPolynomial> others;
      others.reserve(elements.size() - 1);
      for (int k = 0; k < static_cast<int>(elements.size()); ++k)
        if (k != i) others.push_back(elements[k]);
      auto nf = normal_form(elements[i], others, ord).remainder;
      if (nf.is_zero()) {
        elements.erase(elements.begin() + i);
        changed = true;
      } else {
        auto m = monic(nf, ord);
        if (m != elements[i]) {
          elements[i] = std::move(m);
          changed = true;
        }
      }
    }
  }
}

}  // namespace

std::string CompletionReport::to_string() const {
  std::ostringstream os;
  os << "pairs processed:    " << pairs_processed << "\n"
     << "scms examined:      " << scms_examined << "\n"
     << "new elements:       " << new_elements_added << "\n"
     << "max degree reached: " << max_degree_reached << "\n"
     << "fallback uses:      " << fallback_uses << "\n"
     << "truncated:          " << (truncated ? "yes" : "no") << "\n";
  for (const auto& o : log) {
    os << "  pair (" << o.f << "," << o.g << ") at degree "
       << o.gamma.degree() << ": "
       << (o.reduced_to_zero ? "reduced to zero" : "new element") << " [rules";
    for (int r : o.rules_used) os << " " << r;
    os << "]\n";
  }
  return os.str();
}

GroebnerBasis buchberger(const std::vector<OperadPolynomial>& relations,
                         const MonomialOrder& ord, int max_operation_degree) {
  const GeneratorSet& gens = *ord.gens();
  GroebnerBasis gb;
  gb.ordering = ord.spec();
  ord.reset_fallback_uses();

  for (const auto& r : relations) {
    if (r.is_zero()) throw Error("buchberger: zero relation");
    if (leading_term(r, ord).first.degree() > max_operation_degree)
      throw Error("buchberger: relation degree exceeds the bound");
    gb.elements.push_back(monic(r, ord));
  }

  auto& report = gb.certificate;
  std::vector<Task> tasks;
  for (size_t i = 0; i < gb.elements.size(); ++i)
    for (size_t j = i; j < gb.elements.size(); ++j) {
      expand_pair(gens, gb.elements, ord, static_cast<int>(i),
                  static_cast<int>(j), max_operation_degree, tasks,
                  report.truncated);
      ++report.pairs_processed;
    }
  std::sort(tasks.begin(), tasks.end());

  for (size_t idx = 0; idx < tasks.size(); ++idx) {
    const Task& task = tasks[idx];
    ++report.scms_examined;
    report.max_degree_reached = std::max(report.max_degree_reached,
                                         task.degree);
    auto s = s_polynomial(gb.elements[task.f], gb.elements[task.g], task.scm,
                          ord);
    auto nf = normal_form(s, gb.elements, ord);
    PairOutcome outcome{task.f, task.g, task.scm.gamma, {}, true, -1};
    for (const auto& step : nf.trace) outcome.rules_used.push_back(step.rule);
    if (!nf.remainder.is_zero()) {
      outcome.reduced_to_zero = false;
      outcome.added_index = static_cast<int>(gb.elements.size());
      gb.elements.push_back(monic(nf.remainder, ord));
      ++report.new_elements_added;
      int k = outcome.added_index;
      size_t before = tasks.size();
      for (int i = 0; i <= k; ++i) {
        expand_pair(gens, gb.elements, ord, i, k, max_operation_degree, tasks,
                    report.truncated);
        ++report.pairs_processed;
      }
      if (tasks.size() > before)
        std::sort(tasks.begin() + idx + 1, tasks.end());
    }
    report.log.push_back(std::move(outcome));
  }

  inter_reduce(gb.elements, ord);
  report.fallback_uses = ord.fallback_uses();
  return gb;
}

CompletionReport is_quadratic_groebner(
    const std::vector<OperadPolynomial>& relations, const MonomialOrder& ord) {
  for (const auto& r : relations) {
    if (r.is_zero()) throw Error("is_quadratic_groebner: zero relation");
    for (const auto& [t, c] : r.terms())
      if (t.degree() != 2)
        throw Error("is_quadratic_groebner: non-quadratic relation");
  }
  return buchberger(relations, ord, 3).certificate;
}

int degree_bound_for_arity(const GeneratorSet& gens, int arity) {
  int n_colours = gens.palette()->size();
  // Longest chain ending at each colour in the unary-generator graph,
  // computed by relaxation; more than n_colours rounds means a cycle.
  std::vector<int> longest(n_colours, 0);
  for (int round = 0; round <= n_colours; ++round) {
    bool changed = false;
    for (int g = 0; g < gens.size(); ++g) {
      const auto& gen = gens.at(g);
      if (gen.arity() != 1) continue;
      int from = gen.input_colours.at(1), to = gen.output_colour;
      if (longest[from] + 1 > longest[to]) {
        longest[to] = longest[from] + 1;
        changed = true;
      }
    }
    if (!changed) break;
    if (round == n_colours)
      throw Error("degree_bound_for_arity: unary generators form a cycle");
  }
  int chain = *std::max_element(longest.begin(), longest.end());
  return (arity - 1) + (2 * arity - 1) * chain;
}

std::vector<TreeMonomial> normal_monomials(const GroebnerBasis& gb,
                                           const MonomialOrder& ord, int arity,
                                           const std::vector<int>& colouring,
                                           int output_colour) {
  const GeneratorSet& gens = *ord.gens();
  EnumerationFilter filter;
  filter.arity = arity;
  filter.output_colour = output_colour;
  filter.input_colouring = colouring;
  filter.max_degree = degree_bound_for_arity(gens, arity);
  std::vector<TreeMonomial> lts;
  lts.reserve(gb.elements.size());
  for (const auto& g : gb.elements) lts.push_back(leading_term(g, ord).first);

  std::vector<TreeMonomial> out;
  for (auto& t : enumerate_monomials(gens, filter)) {
    bool divisible = false;
    for (const auto& lt : lts)
      if (!find_divisors(t, lt).empty()) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(std::move(t));
  }
  return out;
}

DimensionTable dimension_table(const GroebnerBasis& gb,
                               const MonomialOrder& ord, int max_total_arity) {
  const auto& palette = ord.gens()->palette();
  int d = palette->size();
  DimensionTable table;
  // Weak compositions of n into d parts, lexicographically.
  std::vector<int> weights(d, 0);
  for (int n = 1; n <= max_total_arity; ++n) {
    std::fill(weights.begin(), weights.end(), 0);
    weights[d - 1] = n;
    for (;;) {
      auto colouring = standard_colouring(palette, weights).values();
      for (int c = 0; c < d; ++c)
        table[{weights, c}] = static_cast<long>(
            normal_monomials(gb, ord, n, colouring, c).size());
      // Next weak composition: move one unit leftwards.
      int i = d - 1;
      while (i > 0 && weights[i] == 0) --i;
      if (i == 0) break;
      ++weights[i - 1];
      int rest = weights[i] - 1;
      weights[i] = 0;
      weights[d - 1] = rest;
    }
  }
  return table;
}

long ideal_slice_rank(const std::vector<OperadPolynomial>& relations,
                      const MonomialOrder& ord, int arity,
                      const std::vector<int>& colouring, int output_colour) {
  const GeneratorSet& gens = *ord.gens();
  EnumerationFilter filter;
  filter.arity = arity;
  filter.output_colour = output_colour;
  filter.input_colouring = colouring;
  filter.max_degree = degree_bound_for_arity(gens, arity);
  auto monomials = enumerate_monomials(gens, filter);
  std::map<std::string, int> column;
  for (size_t k = 0; k < monomials.size(); ++k)
    column[monomials[k].key()] = static_cast<int>(k);

  std::vector<std::vector<Rational>> rows;
  for (const auto& g : relations) {
    auto lt = leading_term(g, ord).first;
    for (const auto& gamma : monomials) {
      for (const auto& emb : find_divisors(gamma, lt)) {
        std::vector<Rational> row(monomials.size(), Rational(0));
        auto image = substitute_polynomial(emb, g);
        for (const auto& [t, c] : image.terms())
          row[column.at(t.key())] = c;
        rows.push_back(std::move(row));
      }
    }
  }

  // Exact Gaussian elimination.
  long rank = 0;
  size_t cols = monomials.size();
  for (size_t col = 0; col < cols && rank < static_cast<long>(rows.size());
       ++col) {
    size_t pivot = rows.size();
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (size_t c = col; c < cols; ++c)
        rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace operadix

#include "operadix/symmetrize.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "operadix/error.hpp"

namespace operadix {

namespace {

/// Leaf count of a symmetric term.
int term_arity(const SymTerm& t) {
  if (t.gen < 0) return 1;
  int n = 0;
  for (const auto& a : t.args) n += term_arity(a);
  return n;
}

void collect_labels(const SymTerm& t, std::vector<int>& out) {
  if (t.gen < 0) {
    out.push_back(t.label);
    return;
  }
  for (const auto& a : t.args) collect_labels(a, out);
}

struct Planarizer {
  const SymmetricPresentation& sp;
  const ShuffleExpansion& ex;
  const std::vector<int>& sigma;
  std::vector<int> primary;  // symmetric index -> shuffle index
  std::vector<int> flip;     // symmetric index -> flipped shuffle index or -1

  Planarizer(const SymmetricPresentation& s, const ShuffleExpansion& e,
             const std::vector<int>& sg)
      : sp(s), ex(e), sigma(sg) {
    primary.assign(sp.generators.size(), -1);
    flip.assign(sp.generators.size(), -1);
    for (int i = 0; i < ex.gens->size(); ++i) {
      const auto& prov = ex.provenance.at(i);
      (prov.flipped ? flip : primary)[prov.symmetric_gen] = i;
    }
  }

  /// Builds the shuffle tree for a relabelled symmetric term; `expected`
  /// is the colour the surrounding slot imposes on leaves.
  std::pair<TreeMonomial, int> run(const SymTerm& t, int expected) const {
    if (t.gen < 0) {
      if (t.label < 1 || t.label > static_cast<int>(sigma.size()))
        throw Error("apply_permutation: leaf label out of range");
      return {TreeMonomial::leaf(sigma[t.label - 1], expected), 1};
    }
    const auto& g = sp.generators.at(t.gen);
    int sign = 1;
    std::vector<TreeMonomial> children;
    children.reserve(t.args.size());
    for (size_t i = 0; i < t.args.size(); ++i) {
      auto [c, s] = run(t.args[i], g.input_colours.at(static_cast<int>(i) + 1));
      children.push_back(std::move(c));
      sign *= s;
    }
    int shuffle_gen = primary[t.gen];
    if (children.size() == 2 &&
        children[0].min_leaf() > children[1].min_leaf()) {
      std::swap(children[0], children[1]);
      switch (g.symmetry) {
        case Symmetry::Free:
          shuffle_gen = flip[t.gen];
          break;
        case Symmetry::Symmetric:
          break;
        case Symmetry::Antisymmetric:
          sign = -sign;
          break;
      }
    }
    return {TreeMonomial::vertex(*ex.gens, shuffle_gen, std::move(children)),
            sign};
  }
};

/// Recursive-descent parser for symmetric terms.
struct SymParser {
  const SymmetricPresentation& sp;
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error("symmetric term '" + text + "': " + msg + " at position " +
                std::to_string(pos));
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }

  SymTerm parse() {
    skip_ws();
    if (pos >= text.size()) fail("empty term");
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      int label = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        label = label * 10 + (text[pos++] - '0');
      return SymTerm{-1, label, {}};
    }
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_' || text[pos] == '*'))
      ++pos;
    std::string name = text.substr(start, pos - start);
    int gen = sp.generator_index(name);
    if (gen < 0) fail("unknown generator '" + name + "'");
    SymTerm out{gen, 0, {}};
    expect('(');
    int arity = sp.generators[gen].input_colours.size();
    for (int i = 0; i < arity; ++i) {
      if (i > 0) expect(',');
      out.args.push_back(parse());
    }
    expect(')');
    return out;
  }
};

}  // namespace

int SymmetricPresentation::generator_index(const std::string& name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return static_cast<int>(i);
  return -1;
}

ShuffleExpansion expand_generators(const SymmetricPresentation& sp) {
  std::vector<Generator> gens;
  std::vector<ShuffleProvenance> prov;
  std::vector<std::string> seen;
  auto claim = [&](const std::string& name) {
    if (std::find(seen.begin(), seen.end(), name) != seen.end())
      throw Error("expand_generators: duplicate generator name '" + name + "'");
    seen.push_back(name);
  };
  for (size_t i = 0; i < sp.generators.size(); ++i) {
    const auto& g = sp.generators[i];
    int arity = g.input_colours.size();
    if (arity != 1 && arity != 2)
      throw Error("expand_generators: generator '" + g.name +
                  "' must have arity 1 or 2");
    if (g.symmetry != Symmetry::Free) {
      if (arity != 2 || g.input_colours.at(1) != g.input_colours.at(2))
        throw Error("expand_generators: symmetry of '" + g.name +
                    "' requires two slots of one colour");
    }
    claim(g.name);
    gens.push_back({g.name, g.input_colours, g.output_colour});
    prov.push_back({static_cast<int>(i), false});
    if (g.symmetry == Symmetry::Free && arity == 2) {
      if (g.flip_name.empty() || g.flip_name == g.name)
        throw Error("expand_generators: free binary generator '" + g.name +
                    "' needs a distinct flip name");
      claim(g.flip_name);
      Colouring swapped(sp.palette,
                        {g.input_colours.at(2), g.input_colours.at(1)});
      gens.push_back({g.flip_name, swapped, g.output_colour});
      prov.push_back({static_cast<int>(i), true});
    }
  }
  auto set = std::make_shared<const GeneratorSet>(sp.palette, std::move(gens));
  return {std::move(set), std::move(prov)};
}

SymTerm parse_symmetric_term(const SymmetricPresentation& sp,
                             const std::string& text) {
  SymParser parser{sp, text};
  SymTerm t = parser.parse();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return t;
}

OperadPolynomial apply_permutation(const SymmetricPresentation& sp,
                                   const ShuffleExpansion& ex,
                                   const SymmetricRelation& rel,
                                   const std::vector<int>& sigma) {
  if (rel.terms.empty())
    throw Error("apply_permutation: relation '" + rel.label + "' has no terms");
  int n = term_arity(rel.terms.front().second);
  {
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(n);
    std::iota(expected.begin(), expected.end(), 1);
    if (sorted != expected)
      throw Error("apply_permutation: sigma is not a permutation of 1..n");
  }
  Planarizer planar(sp, ex, sigma);
  OperadPolynomial out(Signature{0, {}, 0});
  bool first = true;
  for (const auto& [coeff, term] : rel.terms) {
    if (term.gen < 0)
      throw Error("apply_permutation: bare-leaf terms are not supported");
    std::vector<int> labels;
    collect_labels(term, labels);
    std::sort(labels.begin(), labels.end());
    for (int k = 0; k < static_cast<int>(labels.size()); ++k)
      if (labels[k] != k + 1)
        throw Error("apply_permutation: term labels of '" + rel.label +
                    "' are not 1..n");
    auto [tree, sign] = planar.run(term, -1);
    auto mono = OperadPolynomial::monomial(tree, coeff * sign);
    if (first) {
      out = OperadPolynomial(mono.signature());
      first = false;
    }
    out += mono;
  }
  return out;
}

OperadPolynomial scalar_normal(const OperadPolynomial& f) {
  if (f.is_zero()) throw Error("scalar_normal of the zero polynomial");
  OperadPolynomial out = f;
  out *= Rational(1) / f.terms().begin()->second;
  return out;
}

bool scalar_multiple(const OperadPolynomial& f, const OperadPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return false;
  if (f.signature() != g.signature()) return false;
  return scalar_normal(f) == scalar_normal(g);
}

std::vector<OperadPolynomial> expand_relation(const SymmetricPresentation& sp,
                                              const ShuffleExpansion& ex,
                                              const SymmetricRelation& rel) {
  if (rel.terms.empty())
    throw Error("expand_relation: relation '" + rel.label + "' has no terms");
  int n = term_arity(rel.terms.front().second);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<OperadPolynomial> out;
  std::vector<OperadPolynomial> lines;
  do {
    auto f = apply_permutation(sp, ex, rel, sigma);
    if (f.is_zero()) continue;
    auto line = scalar_normal(f);
    if (std::find(lines.begin(), lines.end(), line) != lines.end()) continue;
    lines.push_back(line);
    out.push_back(std::move(f));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<OperadPolynomial> expand_relations(const SymmetricPresentation& sp,
                                               const ShuffleExpansion& ex) {
  std::vector<OperadPolynomial> out;
  for (const auto& rel : sp.relations) {
    auto orbit = expand_relation(sp, ex, rel);
    out.insert(out.end(), orbit.begin(), orbit.end());
  }
  return out;
}

}  // namespace operadix

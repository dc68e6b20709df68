#include <cctype>
#include <string>

#include "operadix/error.hpp"
#include "operadix/tree.hpp"

namespace operadix {

namespace {

struct Parser {
  const GeneratorSet& gens;
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error("parse_monomial: " + what + " at offset " +
                std::to_string(pos) + " in \"" + text + "\"");
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }

  int parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a leaf label");
    return std::stoi(text.substr(start, pos - start));
  }

  std::string parse_name() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_' || text[pos] == '*'))
      ++pos;
    if (pos == start) fail("expected a name");
    return text.substr(start, pos - start);
  }

  /// expected_colour < 0 means "unconstrained" (top level).
  TreeMonomial parse_term(int expected_colour) {
    skip_ws();
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (expected_colour < 0) fail("bare leaf needs a colour context");
      return TreeMonomial::leaf(parse_int(), expected_colour);
    }
    std::string name = parse_name();
    if (name.rfind("id_", 0) == 0) {
      int colour = gens.palette()->index_of(name.substr(3));
      if (colour < 0) fail("unknown colour in " + name);
      expect('(');
      int label = parse_int();
      expect(')');
      return TreeMonomial::leaf(label, colour);
    }
    int g = gens.index_of(name);
    if (g < 0) fail("unknown generator " + name);
    const Generator& gen = gens.at(g);
    expect('(');
    std::vector<TreeMonomial> children;
    for (int slot = 0; slot < gen.arity(); ++slot) {
      if (slot) expect(',');
      children.push_back(parse_term(gen.input_colours.at(slot + 1)));
    }
    expect(')');
    return TreeMonomial::vertex(gens, g, std::move(children));
  }
};

}  // namespace

TreeMonomial parse_monomial(const GeneratorSet& gens, const std::string& text) {
  Parser p{gens, text};
  TreeMonomial t = p.parse_term(-1);
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  if (!t.labels_bijective())
    p.fail("leaf labels are not a bijection onto 1..n");
  return t;
}

}  // namespace operadix

#include "operadix/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "operadix/series.hpp"

namespace operadix {

namespace {

struct Token {
  enum Kind { Ident, Number, Punct, End } kind = End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  /// Raw text up to (not including) the next top-level `;`, trimmed.
  std::string take_raw_until_semicolon() {
    std::string out;
    // Rewind to the start of the current token.
    size_t p = tok_start_;
    while (p < text_.size() && text_[p] != ';') out += text_[p++];
    pos_ = p;
    sync_position(out);
    if (pos_ < text_.size()) {  // consume the ';'
      ++pos_;
      ++col_;
    }
    advance();
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back())))
      out.pop_back();
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(tok_.line, tok_.col, message);
  }

 private:
  void sync_position(const std::string& consumed) {
    line_ = tok_.line;
    col_ = tok_.col;
    for (char c : consumed) {
      if (c == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    tok_ = Token{Token::End, "", line_, col_};
    tok_start_ = pos_;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        id += text_[pos_++];
      if (pos_ < text_.size() && text_[pos_] == '!') id += text_[pos_++];
      tok_.kind = Token::Ident;
      tok_.text = id;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        num += text_[pos_++];
      tok_.kind = Token::Number;
      tok_.text = num;
    } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok_.kind = Token::Punct;
      tok_.text = "->";
      pos_ += 2;
    } else {
      tok_.kind = Token::Punct;
      tok_.text = std::string(1, c);
      ++pos_;
    }
    col_ += static_cast<int>(pos_ - tok_start_);
  }

  const std::string& text_;
  size_t pos_ = 0, tok_start_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  PresentationDoc run() {
    expect_keyword("operad");
    doc_.name = expect_ident("operad name");
    if (lex_.peek().kind == Token::Ident && lex_.peek().text == "shuffle") {
      lex_.take();
      doc_.shuffle_mode = true;
    }
    expect_punct(";");
    bool saw_colours = false, saw_ordering = false;
    while (lex_.peek().kind != Token::End) {
      const Token& t = lex_.peek();
      if (t.kind != Token::Ident) lex_.fail("block keyword expected");
      if (t.text == "colours") {
        if (saw_colours) lex_.fail("duplicate colours block");
        parse_colours();
        saw_colours = true;
      } else if (t.text == "generator") {
        require(saw_colours, "generator before colours block");
        parse_generator();
      } else if (t.text == "ordering") {
        if (saw_ordering) lex_.fail("duplicate ordering block");
        parse_ordering();
        saw_ordering = true;
      } else if (t.text == "shifts") {
        require(saw_colours, "shifts before colours block");
        parse_shifts();
      } else if (t.text == "relation") {
        require(!gens().empty(), "relation before generators");
        parse_relation();
      } else if (t.text == "series") {
        require(saw_colours, "series before colours block");
        parse_series();
      } else {
        lex_.fail("unknown block keyword '" + t.text + "'");
      }
    }
    require(saw_colours, "missing colours block");
    require(saw_ordering, "missing ordering block");
    if (doc_.shuffle_mode) finish_shuffle();
    validate_ordering_letters();
    return std::move(doc_);
  }

 private:
  struct RawGenerator {
    std::string name;
    std::vector<int> inputs;
    int output = 0;
    Symmetry symmetry = Symmetry::Free;
    std::string flip;
  };

  const std::vector<RawGenerator>& gens() const { return raw_gens_; }

  void require(bool cond, const std::string& message) {
    if (!cond) lex_.fail(message);
  }

  void expect_keyword(const std::string& kw) {
    Token t = lex_.take();
    if (t.kind != Token::Ident || t.text != kw)
      throw ParseError(t.line, t.col, "'" + kw + "' expected");
  }

  std::string expect_ident(const std::string& what) {
    Token t = lex_.take();
    if (t.kind != Token::Ident)
      throw ParseError(t.line, t.col, what + " expected");
    return t.text;
  }

  void expect_punct(const std::string& p) {
    Token t = lex_.take();
    if (t.kind != Token::Punct || t.text != p)
      throw ParseError(t.line, t.col, "'" + p + "' expected");
  }

  long expect_integer(const std::string& what) {
    bool neg = false;
    if (lex_.peek().kind == Token::Punct && lex_.peek().text == "-") {
      lex_.take();
      neg = true;
    }
    Token t = lex_.take();
    if (t.kind != Token::Number)
      throw ParseError(t.line, t.col, what + " expected");
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  int colour_index(const Token& t) {
    int c = doc_.sym.palette->index_of(t.text);
    if (c < 0) throw ParseError(t.line, t.col, "unknown colour '" + t.text + "'");
    return c;
  }

  void parse_colours() {
    lex_.take();
    std::vector<std::string> names;
    while (true) {
      names.push_back(expect_ident("colour name"));
      if (lex_.peek().kind == Token::Punct && lex_.peek().text == ",")
        lex_.take();
      else
        break;
    }
    std::set<std::string> uniq(names.begin(), names.end());
    require(uniq.size() == names.size(), "duplicate colour name");
    expect_punct(";");
    doc_.sym.palette = make_palette(std::move(names));
  }

  void parse_generator() {
    lex_.take();
    RawGenerator g;
    Token name_tok = lex_.peek();
    g.name = expect_ident("generator name");
    for (const auto& other : raw_gens_)
      if (other.name == g.name || other.flip == g.name)
        throw ParseError(name_tok.line, name_tok.col,
                         "duplicate generator name '" + g.name + "'");
    expect_punct(":");
    expect_punct("(");
    while (true) {
      Token t = lex_.take();
      if (t.kind != Token::Ident)
        throw ParseError(t.line, t.col, "colour name expected");
      g.inputs.push_back(colour_index(t));
      if (lex_.peek().kind == Token::Punct && lex_.peek().text == ",")
        lex_.take();
      else
        break;
    }
    expect_punct(")");
    expect_punct("->");
    Token out = lex_.take();
    if (out.kind != Token::Ident)
      throw ParseError(out.line, out.col, "colour name expected");
    g.output = colour_index(out);
    if (lex_.peek().kind == Token::Punct && lex_.peek().text == ",") {
      lex_.take();
      Token tail = lex_.take();
      if (tail.kind != Token::Ident)
        throw ParseError(tail.line, tail.col, "generator attribute expected");
      if (tail.text == "symmetric") {
        g.symmetry = Symmetry::Symmetric;
      } else if (tail.text == "antisymmetric") {
        g.symmetry = Symmetry::Antisymmetric;
      } else if (tail.text == "flip") {
        require(!doc_.shuffle_mode, "flip names have no meaning in shuffle mode");
        g.flip = expect_ident("flip name");
      } else {
        throw ParseError(tail.line, tail.col,
                         "'symmetric', 'antisymmetric' or 'flip' expected");
      }
    }
    expect_punct(";");
    raw_gens_.push_back(g);
    doc_.sym.generators.push_back(
        {g.name, Colouring(doc_.sym.palette, g.inputs), g.output, g.symmetry,
         g.flip});
  }

  std::vector<std::string> parse_letter_list() {
    expect_punct("[");
    std::vector<std::string> letters;
    while (true) {
      letters.push_back(expect_ident("generator letter"));
      if (lex_.peek().kind == Token::Punct && lex_.peek().text == ",")
        lex_.take();
      else
        break;
    }
    expect_punct("]");
    return letters;
  }

  bool parse_polarity() {
    Token t = lex_.take();
    if (t.kind != Token::Ident || (t.text != "up" && t.text != "down"))
      throw ParseError(t.line, t.col, "'up' or 'down' expected");
    return t.text == "up";
  }

  void parse_ordering() {
    lex_.take();
    Token kind = lex_.take();
    if (kind.kind != Token::Ident)
      throw ParseError(kind.line, kind.col, "'pathlex' or 'tiers' expected");
    if (kind.text == "pathlex") {
      PathLexSpec pl;
      pl.letters = parse_letter_list();
      if (lex_.peek().kind == Token::Ident) pl.longer_greater = parse_polarity();
      expect_punct(";");
      doc_.ordering = OrderingSpec{pl};
      return;
    }
    if (kind.text != "tiers")
      throw ParseError(kind.line, kind.col, "'pathlex' or 'tiers' expected");
    TieredQMSpec tq;
    expect_punct("{");
    bool saw_q = false;
    while (!(lex_.peek().kind == Token::Punct && lex_.peek().text == "}")) {
      std::string kw = expect_ident("'tier', 'q' or 'fallback'");
      if (kw == "tier") {
        Tier tier;
        tier.letters = parse_letter_list();
        tier.greater_degree_is_greater = parse_polarity();
        if (lex_.peek().kind == Token::Ident && lex_.peek().text == "lex") {
          lex_.take();
          tier.lex_inside = true;
        }
        expect_punct(";");
        tq.tiers.push_back(std::move(tier));
      } else if (kw == "q") {
        tq.greater_q_is_greater = parse_polarity();
        saw_q = true;
        expect_punct(";");
      } else if (kw == "fallback") {
        tq.fallback.letters = parse_letter_list();
        if (lex_.peek().kind == Token::Ident &&
            lex_.peek().text == "weights") {
          lex_.take();
          expect_punct("{");
          while (true) {
            std::string letter = expect_ident("generator letter");
            expect_punct(":");
            tq.fallback_weights[letter] =
                static_cast<int>(expect_integer("weight"));
            if (lex_.peek().kind == Token::Punct && lex_.peek().text == ",")
              lex_.take();
            else
              break;
          }
          expect_punct("}");
        }
        expect_punct(";");
      } else {
        lex_.fail("'tier', 'q' or 'fallback' expected");
      }
    }
    lex_.take();  // }
    require(!tq.tiers.empty(), "tiered ordering needs at least one tier");
    require(saw_q, "tiered ordering needs a q polarity");
    doc_.ordering = OrderingSpec{std::move(tq)};
  }

  void parse_shifts() {
    lex_.take();
    require(doc_.colour_shifts.empty(), "duplicate shifts block");
    doc_.colour_shifts.assign(doc_.sym.palette->size(), 1);
    while (true) {
      Token t = lex_.take();
      if (t.kind != Token::Ident)
        throw ParseError(t.line, t.col, "colour name expected");
      int c = colour_index(t);
      expect_punct(":");
      doc_.colour_shifts[c] = static_cast<int>(expect_integer("shift parity"));
      if (lex_.peek().kind == Token::Punct && lex_.peek().text == ",")
        lex_.take();
      else
        break;
    }
    expect_punct(";");
  }

  /// Resolves a generator name in term position (with the `B` alias).
  int term_generator(const Token& t) {
    int g = doc_.sym.generator_index(t.text);
    if (g < 0 && t.text == "B") g = doc_.sym.generator_index("beta");
    if (g < 0)
      throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
    return g;
  }

  SymTerm parse_term() {
    Token head = lex_.take();
    if (head.kind == Token::Number) {
      SymTerm leaf;
      leaf.label = std::stoi(head.text);
      if (leaf.label <= 0)
        throw ParseError(head.line, head.col, "leaf labels are positive");
      return leaf;
    }
    if (head.kind != Token::Ident)
      throw ParseError(head.line, head.col, "term expected");
    SymTerm t;
    t.gen = term_generator(head);
    expect_punct("(");
    while (true) {
      t.args.push_back(parse_term());
      if (lex_.peek().kind == Token::Punct && lex_.peek().text == ",")
        lex_.take();
      else
        break;
    }
    expect_punct(")");
    int arity = doc_.sym.generators[t.gen].input_colours.size();
    if (static_cast<int>(t.args.size()) != arity)
      throw ParseError(head.line, head.col,
                       "generator '" + head.text + "' takes " +
                           std::to_string(arity) + " arguments");
    return t;
  }

  /// Output colour of a checked term; records leaf colours by label.
  int check_term(const SymTerm& t, const Token& at,
                 std::map<int, int>& leaf_colours) {
    if (t.gen < 0) lex_.fail("internal: leaf checked as vertex");
    const auto& gen = doc_.sym.generators[t.gen];
    for (size_t j = 0; j < t.args.size(); ++j) {
      int slot_colour = gen.input_colours.at(static_cast<int>(j) + 1);
      const SymTerm& arg = t.args[j];
      if (arg.gen < 0) {
        auto [it, inserted] = leaf_colours.insert({arg.label, slot_colour});
        if (!inserted)
          throw ParseError(at.line, at.col,
                           "leaf label " + std::to_string(arg.label) +
                               " repeated");
      } else if (check_term(arg, at, leaf_colours) != slot_colour) {
        throw ParseError(at.line, at.col,
                         "colour mismatch at argument " +
                             std::to_string(j + 1) + " of '" + gen.name + "'");
      }
    }
    return gen.output_colour;
  }

  void parse_relation() {
    lex_.take();
    Token label_tok = lex_.peek();
    std::string label;
    // Labels may contain '-' (e.g. LR-B1).
    label = expect_ident("relation label");
    while (lex_.peek().kind == Token::Punct && lex_.peek().text == "-") {
      lex_.take();
      label += "-" + expect_ident("relation label");
    }
    expect_punct(":");
    SymmetricRelation rel{label, {}};
    std::vector<Token> term_positions;
    bool first = true;
    while (true) {
      Rational coeff = 1;
      if (lex_.peek().kind == Token::Punct &&
          (lex_.peek().text == "+" || lex_.peek().text == "-")) {
        if (lex_.take().text == "-") coeff = -1;
      } else if (!first) {
        lex_.fail("'+' or '-' expected between terms");
      }
      if (lex_.peek().kind == Token::Number) {
        // Optional magnitude, written `k mono` or `k/m mono`.
        Token num = lex_.take();
        Rational mag(std::stol(num.text));
        if (lex_.peek().kind == Token::Punct && lex_.peek().text == "/") {
          lex_.take();
          Token den = lex_.take();
          if (den.kind != Token::Number)
            throw ParseError(den.line, den.col, "denominator expected");
          mag /= Rational(std::stol(den.text));
        }
        coeff *= mag;
      }
      Token at = lex_.peek();
      term_positions.push_back(at);
      rel.terms.push_back({coeff, parse_term()});
      first = false;
      if (lex_.peek().kind == Token::Punct && lex_.peek().text == ";") break;
      if (lex_.peek().kind == Token::End) lex_.fail("';' expected");
    }
    expect_punct(";");
    require(!rel.terms.empty(), "relation without terms");
    // Shared signature across the relation's terms.
    std::map<int, int> first_leaves;
    int out = check_term(rel.terms.front().second, term_positions.front(),
                         first_leaves);
    check_bijective(first_leaves, term_positions.front());
    for (size_t i = 1; i < rel.terms.size(); ++i) {
      std::map<int, int> leaves;
      int o = check_term(rel.terms[i].second, term_positions[i], leaves);
      if (o != out || leaves != first_leaves)
        throw ParseError(term_positions[i].line, term_positions[i].col,
                         "term signature differs from the first term");
    }
    doc_.sym.relations.push_back(std::move(rel));
  }

  void check_bijective(const std::map<int, int>& leaves, const Token& at) {
    int expect = 1;
    for (const auto& [label, colour] : leaves)
      if (label != expect++)
        throw ParseError(at.line, at.col,
                         "leaf labels must be exactly 1.." +
                             std::to_string(leaves.size()));
  }

  void parse_series() {
    lex_.take();
    Token t = lex_.take();
    if (t.kind != Token::Ident)
      throw ParseError(t.line, t.col, "colour name expected");
    int c = colour_index(t);
    expect_punct(":");
    Token at = lex_.peek();
    std::string expr = lex_.take_raw_until_semicolon();
    require(!expr.empty(), "series expression expected");
    if (doc_.series.empty())
      doc_.series.assign(doc_.sym.palette->size(), "");
    if (!doc_.series[c].empty())
      throw ParseError(t.line, t.col, "duplicate series for this colour");
    try {
      parse_series_expr(expr, doc_.sym.palette->size());
    } catch (const Error& e) {
      throw ParseError(at.line, at.col,
                       "bad series expression: " + std::string(e.what()));
    }
    doc_.series[c] = expr;
  }

  /// Converts the symmetric payload of a shuffle-mode document into a
  /// shuffle generator set and shuffle relations.
  void finish_shuffle() {
    std::vector<Generator> gens;
    for (const auto& g : doc_.sym.generators) {
      require(g.symmetry == Symmetry::Free,
              "shuffle generators carry no symmetry attribute");
      gens.push_back({g.name, g.input_colours, g.output_colour});
    }
    doc_.shuffle_gens =
        std::make_shared<GeneratorSet>(doc_.sym.palette, std::move(gens));
    for (const auto& rel : doc_.sym.relations) {
      OperadPolynomial p = shuffle_polynomial(rel);
      doc_.shuffle_relations.push_back({rel.label, std::move(p)});
    }
    doc_.sym.relations.clear();
  }

  OperadPolynomial shuffle_polynomial(const SymmetricRelation& rel) {
    std::vector<std::pair<TreeMonomial, Rational>> monos;
    for (const auto& [coeff, term] : rel.terms)
      monos.push_back({shuffle_monomial(term), coeff});
    OperadPolynomial p(Signature::of(monos.front().first));
    for (auto& [t, c] : monos) p.add_term(t, c);
    return p;
  }

  TreeMonomial shuffle_monomial(const SymTerm& term) {
    const auto& gens = *doc_.shuffle_gens;
    if (term.gen < 0) lex_.fail("bare leaf is not a shuffle monomial");
    std::vector<TreeMonomial> children;
    const auto& gen = gens.at(term.gen);
    for (size_t j = 0; j < term.args.size(); ++j) {
      const SymTerm& arg = term.args[j];
      if (arg.gen < 0)
        children.push_back(TreeMonomial::leaf(
            arg.label, gen.input_colours.at(static_cast<int>(j) + 1)));
      else
        children.push_back(shuffle_monomial(arg));
    }
    return TreeMonomial::vertex(gens, term.gen, std::move(children));
  }

  void validate_ordering_letters() {
    std::set<std::string> known;
    if (doc_.shuffle_mode) {
      for (int g = 0; g < doc_.shuffle_gens->size(); ++g)
        known.insert(doc_.shuffle_gens->at(g).name);
    } else {
      for (const auto& g : doc_.sym.generators) {
        known.insert(g.name);
        if (!g.flip_name.empty()) known.insert(g.flip_name);
      }
    }
    auto check = [&](const std::vector<std::string>& letters) {
      for (const auto& l : letters)
        require(known.count(l) > 0, "ordering letter '" + l +
                                        "' is not a generator");
    };
    if (doc_.ordering.is_pathlex()) {
      check(doc_.ordering.pathlex().letters);
    } else {
      for (const auto& tier : doc_.ordering.tiered().tiers)
        check(tier.letters);
      check(doc_.ordering.tiered().fallback.letters);
    }
  }

  Lexer lex_;
  PresentationDoc doc_;
  std::vector<RawGenerator> raw_gens_;
};

std::string letter_list(const std::vector<std::string>& letters) {
  std::string out = "[";
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ", ";
    out += letters[i];
  }
  return out + "]";
}

}  // namespace

PresentationDoc parse_presentation(const std::string& text) {
  return Parser(text).run();
}

std::string format_term(const SymmetricPresentation& sp, const SymTerm& t) {
  if (t.gen < 0) return std::to_string(t.label);
  std::string out = sp.generators.at(t.gen).name + "(";
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ",";
    out += format_term(sp, t.args[i]);
  }
  return out + ")";
}

std::string format_presentation(const PresentationDoc& doc) {
  std::ostringstream os;
  os << "operad " << doc.name << (doc.shuffle_mode ? " shuffle" : "") << ";\n";
  const auto& palette = *doc.sym.palette;
  os << "\ncolours ";
  for (int c = 0; c < palette.size(); ++c)
    os << (c ? ", " : "") << palette.name(c);
  os << ";\n\n";
  auto signature = [&](const Colouring& in, int out) {
    std::string s = "(";
    for (int j = 0; j < in.size(); ++j) {
      if (j) s += ", ";
      s += palette.name(in.at(j + 1));
    }
    return s + ") -> " + palette.name(out);
  };
  if (doc.shuffle_mode) {
    for (int g = 0; g < doc.shuffle_gens->size(); ++g) {
      const auto& gen = doc.shuffle_gens->at(g);
      os << "generator " << gen.name << " : "
         << signature(gen.input_colours, gen.output_colour) << ";\n";
    }
  } else {
    for (const auto& g : doc.sym.generators) {
      os << "generator " << g.name << " : "
         << signature(g.input_colours, g.output_colour);
      if (g.symmetry == Symmetry::Symmetric) os << ", symmetric";
      if (g.symmetry == Symmetry::Antisymmetric) os << ", antisymmetric";
      if (!g.flip_name.empty()) os << ", flip " << g.flip_name;
      os << ";\n";
    }
  }
  os << "\n";
  if (doc.ordering.is_pathlex()) {
    const auto& pl = doc.ordering.pathlex();
    os << "ordering pathlex " << letter_list(pl.letters);
    if (!pl.longer_greater) os << " down";
    os << ";\n";
  } else {
    const auto& tq = doc.ordering.tiered();
    os << "ordering tiers {\n";
    for (const auto& tier : tq.tiers) {
      os << "  tier " << letter_list(tier.letters)
         << (tier.greater_degree_is_greater ? " up" : " down");
      if (tier.lex_inside) os << " lex";
      os << ";\n";
    }
    os << "  q " << (tq.greater_q_is_greater ? "up" : "down") << ";\n";
    if (!tq.fallback.letters.empty()) {
      os << "  fallback " << letter_list(tq.fallback.letters);
      bool any = false;
      for (const auto& l : tq.fallback.letters) {
        auto it = tq.fallback_weights.find(l);
        if (it == tq.fallback_weights.end() || it->second == 0) continue;
        os << (any ? ", " : " weights { ") << l << ": " << it->second;
        any = true;
      }
      if (any) os << " }";
      os << ";\n";
    }
    os << "}\n";
  }
  if (!doc.colour_shifts.empty()) {
    os << "\nshifts ";
    for (int c = 0; c < palette.size(); ++c)
      os << (c ? ", " : "") << palette.name(c) << ": "
         << doc.colour_shifts[c];
    os << ";\n";
  }
  auto coeff_prefix = [](const Rational& c, bool first) {
    Rational mag = c < 0 ? Rational(-c) : c;
    std::string s;
    if (first)
      s = c < 0 ? "-" : "";
    else
      s = c < 0 ? " - " : " + ";
    if (mag != 1) s += operadix::to_string(mag) + " ";
    return s;
  };
  if (doc.shuffle_mode) {
    if (!doc.shuffle_relations.empty()) os << "\n";
    MonomialOrder ord(doc.ordering, doc.shuffle_gens);
    for (const auto& [label, poly] : doc.shuffle_relations) {
      os << "relation " << label << ": ";
      std::vector<std::pair<TreeMonomial, Rational>> ts(poly.terms().begin(),
                                                        poly.terms().end());
      std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        return ord.greater(a.first, b.first);
      });
      bool first = true;
      for (const auto& [t, c] : ts) {
        os << coeff_prefix(c, first) << t.to_string(*doc.shuffle_gens);
        first = false;
      }
      os << ";\n";
    }
  } else {
    if (!doc.sym.relations.empty()) os << "\n";
    for (const auto& rel : doc.sym.relations) {
      os << "relation " << rel.label << ": ";
      bool first = true;
      for (const auto& [c, term] : rel.terms) {
        os << coeff_prefix(c, first) << format_term(doc.sym, term);
        first = false;
      }
      os << ";\n";
    }
  }
  bool any_series = false;
  for (const auto& s : doc.series) any_series |= !s.empty();
  if (any_series) {
    os << "\n";
    for (int c = 0; c < palette.size(); ++c)
      if (!doc.series[c].empty())
        os << "series " << palette.name(c) << ": " << doc.series[c] << ";\n";
  }
  return os.str();
}

}  // namespace operadix

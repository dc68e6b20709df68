#include "operadix/catalogue.hpp"

#include <map>
#include <utility>

#include "operadix/error.hpp"
#include "operadix/polynomial.hpp"

namespace operadix {

namespace {

const char* kICom = R"(operad ICom;

colours A, I;

generator alpha : (A, A) -> A, symmetric;
generator i : (I) -> A;
generator r : (I, A) -> I, flip l;

ordering pathlex [alpha, i, l, r];

shifts A: 1, I: 0;

relation Com: alpha(alpha(1,2),3) - alpha(1,alpha(2,3));
relation Mult1: r(r(1,2),3) - r(r(1,3),2);
relation Mult2: r(r(1,2),3) - r(1,alpha(2,3));
relation In1: alpha(i(1),2) - i(r(1,2));
relation In2: r(1,i(2)) - r(2,i(1));

series A: exp(t1 + t2) - 1;
series I: exp(t1 + t2) - exp(t1);
)";

const char* kAffHS = R"(operad AffHS;

colours c1, c2;

generator beta : (c1, c1) -> c1, antisymmetric;
generator i : (c1) -> c2;
generator m : (c1, c2) -> c2, flip n;

ordering tiers {
  tier [n, m] down lex;
  tier [i, beta] up lex;
  q up;
  fallback [n, m, i, beta] weights { n: -1, m: -1, i: 1, beta: 2 };
}

shifts c1: 1, c2: 0;

relation Lie: beta(beta(1,2),3) - beta(beta(1,3),2) - beta(1,beta(2,3));
relation Mod: m(beta(1,2),3) + m(1,m(2,3)) - m(2,m(1,3));
relation Mor: i(beta(1,2)) + m(1,i(2)) - m(2,i(1));

series c1: -log(1 - t1);
series c2: (t1 + t2)/(1 - t1);
)";

const char* kMLie = R"(operad MLie;

colours c1, c2;

generator beta : (c2, c2) -> c2, antisymmetric;
generator d : (c2, c1) -> c1, flip e;

ordering tiers {
  tier [d, e] down;
  tier [beta] up;
  q up;
  fallback [beta, d, e] weights { beta: 2, d: 1, e: 1 };
}

relation J: beta(beta(1,2),3) - beta(beta(1,3),2) - beta(1,beta(2,3));
relation M: d(beta(1,2),3) - d(1,d(2,3)) + d(2,d(1,3));

series c1: t1/(1 - t2);
series c2: -log(1 - t2);
)";

const char* kLP = R"(operad LP;

colours c1, c2;

generator beta : (c2, c2) -> c2, antisymmetric;
generator a : (c1, c1) -> c1, flip b;
generator d : (c2, c1) -> c1, flip e;

ordering tiers {
  tier [b, a] down lex;
  tier [e, d, beta] up lex;
  q up;
  fallback [b, a, e, d, beta] weights { b: -1, a: -1, e: 1, d: 1, beta: 2 };
}

relation LPJ: beta(beta(1,2),3) - beta(beta(1,3),2) - beta(1,beta(2,3));
relation LPA: a(a(1,2),3) - a(1,a(2,3));
relation LPD: d(1,a(2,3)) - a(2,d(1,3)) - a(d(1,2),3);
relation LPM: d(beta(1,2),3) - d(1,d(2,3)) + d(2,d(1,3));

series c1: -t1/(t1 + t2);
series c2: -log(1 - t2);
)";

const char* kDCom = R"(operad DCom;

colours c1, c2;

generator alpha : (c1, c1) -> c1, symmetric;
generator d : (c1, c2) -> c1, flip e;

ordering tiers {
  tier [alpha] down;
  tier [d, e] up;
  q up;
  fallback [alpha, d, e] weights { alpha: -1, d: 1, e: 1 };
}

relation As: alpha(alpha(1,2),3) - alpha(1,alpha(2,3));
relation Leib: d(alpha(1,2),3) - alpha(1,d(2,3)) - alpha(d(1,3),2);

series c1: exp(t1/(1 - t2)) - 1;
series c2: t2;
)";

const char* kLieR = R"(operad LieR;

colours c1, c2;

generator alpha : (c1, c1) -> c1, symmetric;
generator beta : (c2, c2) -> c2, antisymmetric;
generator d : (c1, c2) -> c1, flip e;
generator m : (c1, c2) -> c2, flip n;

ordering tiers {
  tier [alpha] down;
  tier [d, e] down;
  tier [beta, n, m] up;
  q up;
  fallback [alpha, m, n, beta, d, e] weights { alpha: -1, n: -1, beta: 1, d: 1, e: 1 };
}

relation As: alpha(alpha(1,2),3) - alpha(1,alpha(2,3));
relation Jac: beta(beta(1,2),3) + beta(beta(2,3),1) + beta(beta(3,1),2);
relation Leib: d(alpha(1,2),3) - alpha(d(1,3),2) - alpha(1,d(2,3));
relation Mor: d(1,beta(2,3)) + d(d(1,2),3) - d(d(1,3),2);
relation SMod: m(alpha(1,2),3) - m(1,m(2,3));
relation Act: d(1,m(2,3)) - alpha(d(1,3),2);
relation Comp: beta(1,m(2,3)) - m(d(2,1),3) - m(2,beta(1,3));

series c1: exp(t1/(1 - t2)) - 1;
series c2: -log(1 - t2) * exp(t1/(1 - t2));
)";

const char* kDerCom = R"(operad DerCom;

colours c1, c2;

generator alpha : (c1, c1) -> c1, symmetric;
generator beta : (c2, c2) -> c2, antisymmetric;
generator d : (c1, c2) -> c1, flip e;
generator m : (c1, c2) -> c2, flip n;

ordering tiers {
  tier [alpha] down;
  tier [d, e] down;
  tier [beta, n, m] up;
  q up;
  fallback [alpha, m, n, beta, d, e] weights { alpha: -1, n: -1, beta: 1, d: 1, e: 1 };
}

relation As: alpha(alpha(1,2),3) - alpha(1,alpha(2,3));
relation Jac: beta(beta(1,2),3) + beta(beta(2,3),1) + beta(beta(3,1),2);
relation Leib: d(alpha(1,2),3) - alpha(d(1,3),2) - alpha(1,d(2,3));
relation Mor: d(1,beta(2,3)) + d(d(1,2),3) - d(d(1,3),2);
relation SMod: m(alpha(1,2),3) - m(1,m(2,3));
)";

/// The individually labelled shuffle relations of LieR (and, filtered by
/// label, of DerCom and DCom), written with the signs of their display
/// form; they are stored monic under the entry's ordering.
const std::vector<std::pair<const char*, const char*>>& labelled_texts() {
  static const std::vector<std::pair<const char*, const char*>> kTable = {
      {"Com1", "alpha(alpha(1,2),3) - alpha(alpha(1,3),2)"},
      {"Com2", "alpha(alpha(1,2),3) - alpha(1,alpha(2,3))"},
      {"Lie", "beta(beta(1,2),3) - beta(beta(1,3),2) - beta(1,beta(2,3))"},
      {"Leib1", "e(1,alpha(2,3)) - alpha(e(1,2),3) - alpha(e(1,3),2)"},
      {"Leib2", "d(alpha(1,3),2) - alpha(d(1,2),3) - alpha(1,e(2,3))"},
      {"Leib3", "d(alpha(1,2),3) - alpha(1,d(2,3)) - alpha(d(1,3),2)"},
      {"Mor1", "d(1,beta(2,3)) + d(d(1,2),3) - d(d(1,3),2)"},
      {"Mor2", "e(beta(1,3),2) + d(e(1,2),3) - e(1,d(2,3))"},
      {"Mor3", "-d(1,beta(2,3)) + d(d(1,3),2) - d(d(1,2),3)"},
      {"Mor4", "-e(beta(1,2),3) + e(1,e(2,3)) - d(e(1,3),2)"},
      {"Mor5", "-e(beta(1,3),2) + e(1,d(2,3)) - d(e(1,2),3)"},
      {"Mor6", "e(beta(1,2),3) + d(e(1,3),2) - e(1,e(2,3))"},
      {"SMod1", "m(alpha(1,2),3) - m(1,m(2,3))"},
      {"SMod2", "m(alpha(1,2),3) - n(m(1,3),2)"},
      {"SMod3", "m(alpha(1,3),2) - m(1,n(2,3))"},
      {"SMod4", "n(1,alpha(2,3)) - n(n(1,2),3)"},
      {"SMod5", "n(1,alpha(2,3)) - n(n(1,3),2)"},
      {"SMod6", "m(alpha(1,3),2) - n(m(1,2),3)"},
      {"LR-A1", "e(m(1,2),3) - alpha(1,e(2,3))"},
      {"LR-A2", "e(n(1,2),3) - alpha(e(1,3),2)"},
      {"LR-A3", "d(1,n(2,3)) - alpha(d(1,2),3)"},
      {"LR-A4", "e(m(1,3),2) - alpha(1,d(2,3))"},
      {"LR-A5", "d(1,m(2,3)) - alpha(d(1,3),2)"},
      {"LR-A6", "e(n(1,3),2) - alpha(e(1,2),3)"},
      {"LR-B1", "beta(1,m(2,3)) - m(e(1,2),3) - n(beta(1,3),2)"},
      {"LR-B2", "-beta(m(1,3),2) - m(d(1,2),3) - m(1,beta(2,3))"},
      {"LR-B3", "-beta(n(1,2),3) - n(1,d(2,3)) + n(beta(1,3),2)"},
      {"LR-B4", "beta(1,n(2,3)) - m(e(1,3),2) - n(beta(1,2),3)"},
      {"LR-B5", "-beta(n(1,3),2) - n(1,e(2,3)) + n(beta(1,2),3)"},
      {"LR-B6", "-beta(m(1,2),3) - m(d(1,3),2) + m(1,beta(2,3))"},
  };
  return kTable;
}

/// Parses `-m1 + m2 - m3` over the generator set (coefficients are ±1).
OperadPolynomial signed_combination(const GeneratorSet& gens,
                                    const std::string& text) {
  std::vector<std::pair<Rational, std::string>> parts;
  size_t pos = 0;
  Rational sign = 1;
  if (!text.empty() && text[0] == '-') {
    sign = -1;
    pos = 1;
  }
  while (pos < text.size()) {
    size_t end = text.find(' ', pos);
    if (end == std::string::npos) end = text.size();
    parts.push_back({sign, text.substr(pos, end - pos)});
    pos = end;
    if (pos < text.size()) {
      // " + " or " - "
      if (pos + 3 > text.size()) throw Error("catalogue: bad relation text");
      sign = text[pos + 1] == '-' ? -1 : 1;
      pos += 3;
    }
  }
  if (parts.empty()) throw Error("catalogue: empty relation text");
  TreeMonomial first = parse_monomial(gens, parts.front().second);
  OperadPolynomial out(Signature::of(first));
  for (const auto& [c, mono] : parts)
    out.add_term(parse_monomial(gens, mono), c);
  return out;
}

std::vector<LabelledRelation> from_table(
    const GeneratorSet& gens, const MonomialOrder& ord,
    const std::vector<std::string>& labels) {
  std::map<std::string, const char*> by_label;
  for (const auto& [l, t] : labelled_texts()) by_label[l] = t;
  std::vector<LabelledRelation> out;
  for (const auto& l : labels) {
    auto it = by_label.find(l);
    if (it == by_label.end()) throw Error("catalogue: unknown label " + l);
    out.push_back({l, monic(signed_combination(gens, it->second), ord)});
  }
  return out;
}

std::vector<LabelledRelation> auto_labelled(const SymmetricPresentation& sp,
                                            const ShuffleExpansion& ex,
                                            const MonomialOrder& ord) {
  std::vector<LabelledRelation> out;
  for (const auto& rel : sp.relations) {
    auto orbit = expand_relation(sp, ex, rel);
    for (size_t k = 0; k < orbit.size(); ++k) {
      std::string label =
          orbit.size() == 1 ? rel.label : rel.label + std::to_string(k + 1);
      out.push_back({label, monic(orbit[k], ord)});
    }
  }
  return out;
}

std::vector<TraceFixture> lier_fixtures() {
  return {
      {"T1", "LR-B1", "LR-B2", "beta(m(1,4),m(2,3))",
       {"LR-B2", "LR-B6", "LR-A4", "LR-A5", "SMod1", "SMod2"}},
      {"T2", "LR-B1", "LR-B2", "d(1,beta(2,m(3,4)))",
       {"LR-A3", "LR-A5", "Mor1", "Leib2"}},
      {"T3", "LR-B1", "SMod1", "beta(1,m(2,m(3,4)))",
       {"LR-B1", "SMod1", "SMod2", "SMod5", "Leib1"}},
      {"T4", "LR-B1", "Lie", "beta(beta(1,2),m(3,4))",
       {"LR-B1", "LR-B1", "LR-B2", "LR-B4", "LR-B5", "Mor4", "Lie"}},
      {"T5", "LR-A1", "SMod1", "e(m(1,m(2,3)),4)", {"LR-A1", "Com2"}},
      {"T6", "LR-A1", "Leib1", "e(m(1,2),alpha(3,4))",
       {"LR-A1", "Leib1", "Com2"}},
      {"T7", "Mor1", "Lie", "d(1,beta(beta(2,3),4))", {"Mor1", "Mor1"}},
      {"T8", "Mor1", "Leib2", "d(alpha(1,4),beta(2,3))",
       {"Mor1", "Mor4", "Leib2", "Leib2", "Leib3"}},
      {"T9", "SMod1", "SMod2", "n(m(1,m(3,4)),2)",
       {"SMod1", "SMod2", "Com1"}},
      {"T10", "Com1", "Com2", "alpha(alpha(1,3),alpha(2,4))",
       {"Com1", "Com2", "Com1"}},
      {"T11", "Com1", "Leib1", "e(1,alpha(alpha(2,4),3))",
       {"Com2", "Leib1", "Leib1", "Com1", "Com2"}},
  };
}

CatalogueEntry make_entry(const std::string& name, const char* source,
                          const char* decomposition) {
  CatalogueEntry e;
  e.name = name;
  e.source = source;
  e.doc = parse_presentation(source);
  e.expansion = expand_generators(e.doc.sym);
  MonomialOrder ord(e.doc.ordering, e.expansion.gens);
  if (name == "LieR") {
    std::vector<std::string> labels;
    for (const auto& [l, t] : labelled_texts()) labels.push_back(l);
    e.relations = from_table(*e.expansion.gens, ord, labels);
    e.fixtures = lier_fixtures();
  } else if (name == "DerCom") {
    std::vector<std::string> labels;
    for (const auto& [l, t] : labelled_texts())
      if (std::string(l).rfind("LR-", 0) != 0) labels.push_back(l);
    e.relations = from_table(*e.expansion.gens, ord, labels);
  } else if (name == "DCom") {
    e.relations = from_table(*e.expansion.gens, ord,
                             {"Com1", "Com2", "Leib1", "Leib2", "Leib3"});
    e.fixtures = {{"D1", "Com1", "Leib1", "e(1,alpha(alpha(2,4),3))",
                   {"Com2", "Leib1", "Leib1", "Com1", "Com2"}}};
  } else {
    e.relations = auto_labelled(e.doc.sym, e.expansion, ord);
  }
  if (name == "MLie")
    e.fixtures = {{"Mu", "J", "M", "d(beta(beta(1,2),3),4)", {"M", "M"}}};
  if (name == "LP")
    e.fixtures = {{"S1", "LPD", "LPA", "d(1,a(2,a(3,4)))",
                   {"LPA", "LPD", "LPD", "LPA", "LPA"}}};
  e.decomposition = decomposition;
  return e;
}

const std::map<std::string, CatalogueEntry>& entries() {
  static const std::map<std::string, CatalogueEntry> kEntries = [] {
    std::map<std::string, CatalogueEntry> m;
    auto put = [&](const std::string& n, const char* src, const char* dec) {
      m.emplace(n, make_entry(n, src, dec));
    };
    put("ICom", kICom, "");
    put("AffHS", kAffHS, "c1 = Lie(t1); c2 = (t1 + t2) * (1 + As(t1))");
    put("MLie", kMLie, "c1 = t1 * (1 + As(t2)); c2 = Lie(t2)");
    put("LP", kLP, "As composed with MLie, componentwise");
    put("DCom", kDCom, "Com composed with (t1/(1 - t2), t2)");
    put("LieR", kLieR, "c1 = DCom c1; c2 = Lie(t2) * (1 + DCom c1)");
    put("DerCom", kDerCom, "");
    return m;
  }();
  return kEntries;
}

ExponentMap eval_text(const std::string& text, int n_vars, int N) {
  return eval_series_expr(parse_series_expr(text, n_vars), n_vars, N);
}

/// Truncated product of two exponent maps.
ExponentMap product(const ExponentMap& a, const ExponentMap& b, int N) {
  ExponentMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      int total = 0;
      for (size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        total += e[i];
      }
      if (total > N) continue;
      Rational& c = out[e];
      c += ca * cb;
      if (c == 0) out.erase(e);
    }
  return out;
}

ExponentMap plus_one(ExponentMap m, int n_vars) {
  std::vector<int> zero(n_vars, 0);
  Rational& c = m[zero];
  c += 1;
  if (c == 0) m.erase(zero);
  return m;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> kNames = {
      "ICom", "AffHS", "MLie", "LP", "DCom", "LieR", "DerCom"};
  return kNames;
}

const CatalogueEntry& builtin(const std::string& name) {
  const auto& m = entries();
  auto it = m.find(name);
  if (it == m.end()) throw Error("unknown builtin operad '" + name + "'");
  return it->second;
}

int relation_index(const CatalogueEntry& entry, const std::string& label) {
  for (size_t i = 0; i < entry.relations.size(); ++i)
    if (entry.relations[i].label == label) return static_cast<int>(i);
  return -1;
}

TruncatedEGF decomposition_series(const CatalogueEntry& entry, int N) {
  if (entry.decomposition.empty())
    throw Error("builtin '" + entry.name + "' has no series factorization");
  const PaletteRef& pal = entry.doc.sym.palette;
  int d = pal->size();
  auto ev = [&](const char* s) { return eval_text(s, d, N); };
  if (entry.name == "AffHS")
    return {pal, N,
            {ev("-log(1 - t1)"),
             product(ev("t1 + t2"), plus_one(ev("t1/(1 - t1)"), d), N)}};
  if (entry.name == "MLie")
    return {pal, N,
            {product(ev("t1"), plus_one(ev("t2/(1 - t2)"), d), N),
             ev("-log(1 - t2)")}};
  if (entry.name == "LP") {
    TruncatedEGF as{pal, N, {ev("t1/(1 - t1)"), ev("t2")}};
    TruncatedEGF mlie{pal, N, {ev("t1/(1 - t2)"), ev("-log(1 - t2)")}};
    return compose_series(as, mlie, N);
  }
  if (entry.name == "DCom") {
    TruncatedEGF com{pal, N, {ev("exp(t1) - 1"), ev("t2")}};
    TruncatedEGF free_d{pal, N, {ev("t1/(1 - t2)"), ev("t2")}};
    return compose_series(com, free_d, N);
  }
  if (entry.name == "LieR") {
    TruncatedEGF dcom = decomposition_series(builtin("DCom"), N);
    return {pal, N,
            {dcom.components[0],
             product(ev("-log(1 - t2)"), plus_one(dcom.components[0], d), N)}};
  }
  throw Error("builtin '" + entry.name + "' has no series factorization");
}

TruncatedEGF closed_form_series(const CatalogueEntry& entry, int N,
                                std::vector<std::string>& failed) {
  const PaletteRef& pal = entry.doc.sym.palette;
  TruncatedEGF out{pal, N, {}};
  out.components.resize(pal->size());
  for (int c = 0; c < pal->size(); ++c) {
    if (static_cast<size_t>(c) >= entry.doc.series.size() ||
        entry.doc.series[c].empty())
      continue;  // unstated components are skipped
    try {
      out.components[c] = eval_text(entry.doc.series[c], pal->size(), N);
    } catch (const Error& err) {
      failed.push_back(pal->name(c) + ": " + err.what());
    }
  }
  return out;
}

}  // namespace operadix

#pragma once

#include <sstream>

#include "parser.hpp"
#include "proof.hpp"

namespace superll {

// S-expression proof format, one parenthesized group per node:
//
//   (ax "X")                      (cut "A" i j P1 P2)
//   (ex (2 0 1) P)                (tensor i j P1 P2)   (parr i j P)
//   (one)  (bot P)                (with i j P1 P2)
//   (plus1 i "B" P)  (plus2 i "A" P)       (top "X, Y")
//   (de e i P)                    (co (e1 .. ek) e (i1 .. ik) P)
//   (co () e "A" P)               (dg e1 e2 e i P)
//   (prom e i P)                  (prom-g e i (t1 .. tn) P)
//                                 (prom-o e i (t1 .. tn) P)
//
// A node may carry `:concl "|- ..."` after its arguments; the loader then
// checks the annotation against the computed conclusion.

namespace detail {

struct SexprToken {
  enum class Kind { LParen, RParen, Atom, String, Keyword, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class SexprLexer {
 public:
  explicit SexprLexer(std::string_view text) : text_(text) { advance(); }

  const SexprToken& peek() const { return tok_; }

  SexprToken next() {
    SexprToken t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == ';')) {
      if (text_[pos_] == ';') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        ++pos_;
      }
    }
    if (pos_ >= text_.size()) {
      tok_ = {SexprToken::Kind::End, "", pos_};
      return;
    }
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      tok_ = {SexprToken::Kind::LParen, "(", start};
    } else if (c == ')') {
      ++pos_;
      tok_ = {SexprToken::Kind::RParen, ")", start};
    } else if (c == '"') {
      ++pos_;
      std::string s;
      while (pos_ < text_.size() && text_[pos_] != '"') s += text_[pos_++];
      if (pos_ >= text_.size())
        throw ParseError("unterminated string", start);
      ++pos_;
      tok_ = {SexprToken::Kind::String, std::move(s), start};
    } else if (c == ':') {
      ++pos_;
      std::string s;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(
                                        text_[pos_])) &&
             text_[pos_] != '(' && text_[pos_] != ')')
        s += text_[pos_++];
      tok_ = {SexprToken::Kind::Keyword, std::move(s), start};
    } else {
      std::string s;
      while (pos_ < text_.size() &&
             !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != '(' && text_[pos_] != ')')
        s += text_[pos_++];
      tok_ = {SexprToken::Kind::Atom, std::move(s), start};
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SexprToken tok_{SexprToken::Kind::End, "", 0};
};

class ProofReader {
 public:
  explicit ProofReader(std::string_view text) : lex_(text) {}

  Proof read() {
    Proof p = node();
    if (lex_.peek().kind != SexprToken::Kind::End)
      throw ParseError("trailing input after proof", lex_.peek().pos);
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, lex_.peek().pos);
  }

  void expect(SexprToken::Kind k, const char* what) {
    if (lex_.peek().kind != k) fail(std::string("expected ") + what);
    lex_.next();
  }

  std::string atom(const char* what) {
    if (lex_.peek().kind != SexprToken::Kind::Atom)
      fail(std::string("expected ") + what);
    return lex_.next().text;
  }

  std::size_t index() {
    std::string a = atom("index");
    for (char c : a)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail("expected a numeric index, got '" + a + "'");
    return static_cast<std::size_t>(std::stoull(a));
  }

  Sig sig() { return Sig{atom("signature")}; }

  Formula formula_arg() {
    if (lex_.peek().kind != SexprToken::Kind::String)
      fail("expected a quoted formula");
    return parse_formula(lex_.next().text);
  }

  std::vector<Sig> sig_list() {
    expect(SexprToken::Kind::LParen, "'(' starting a signature list");
    std::vector<Sig> out;
    while (lex_.peek().kind == SexprToken::Kind::Atom) out.push_back(sig());
    expect(SexprToken::Kind::RParen, "')' ending a signature list");
    return out;
  }

  std::vector<std::size_t> index_list() {
    expect(SexprToken::Kind::LParen, "'(' starting an index list");
    std::vector<std::size_t> out;
    while (lex_.peek().kind == SexprToken::Kind::Atom) out.push_back(index());
    expect(SexprToken::Kind::RParen, "')' ending an index list");
    return out;
  }

  Proof node() {
    expect(SexprToken::Kind::LParen, "'(' starting a proof node");
    std::size_t at = lex_.peek().pos;
    std::string name = atom("rule name");
    Rule rule = OneRule{};
    std::size_t arity = 0;

    if (name == "ax") {
      rule = AxRule{formula_arg()};
    } else if (name == "cut") {
      Formula f = formula_arg();
      std::size_t i = index(), j = index();
      rule = CutRule{f, i, j};
      arity = 2;
    } else if (name == "ex") {
      rule = ExchangeRule{index_list()};
      arity = 1;
    } else if (name == "tensor") {
      std::size_t i = index(), j = index();
      rule = TensorRule{i, j};
      arity = 2;
    } else if (name == "parr") {
      std::size_t i = index(), j = index();
      rule = ParrRule{i, j};
      arity = 1;
    } else if (name == "one") {
      rule = OneRule{};
    } else if (name == "bot") {
      rule = BotRule{};
      arity = 1;
    } else if (name == "with") {
      std::size_t i = index(), j = index();
      rule = WithRule{i, j};
      arity = 2;
    } else if (name == "plus1") {
      std::size_t i = index();
      rule = Plus1Rule{i, formula_arg()};
      arity = 1;
    } else if (name == "plus2") {
      std::size_t i = index();
      rule = Plus2Rule{i, formula_arg()};
      arity = 1;
    } else if (name == "top") {
      Sequent ctx;
      if (lex_.peek().kind == SexprToken::Kind::String)
        ctx = parse_sequent(lex_.next().text);
      rule = TopRule{std::move(ctx)};
    } else if (name == "de") {
      Sig e = sig();
      rule = DeRule{e, index()};
      arity = 1;
    } else if (name == "co") {
      std::vector<Sig> froms = sig_list();
      Sig to = sig();
      std::vector<std::size_t> indices;
      Formula weakened;
      if (froms.empty())
        weakened = formula_arg();
      else
        indices = index_list();
      rule = CoRule{std::move(froms), to, std::move(indices), weakened};
      arity = 1;
    } else if (name == "dg") {
      Sig e1 = sig(), e2 = sig(), e = sig();
      rule = DgRule{e1, e2, e, index()};
      arity = 1;
    } else if (name == "prom") {
      Sig e = sig();
      rule = PromRule{e, index()};
      arity = 1;
    } else if (name == "prom-g") {
      Sig e = sig();
      std::size_t i = index();
      rule = PromGirardRule{e, i, sig_list()};
      arity = 1;
    } else if (name == "prom-o") {
      Sig e = sig();
      std::size_t i = index();
      rule = PromOrderedRule{e, i, sig_list()};
      arity = 1;
    } else {
      throw ParseError("unknown rule name '" + name + "'", at);
    }

    std::optional<Sequent> annotated;
    if (lex_.peek().kind == SexprToken::Kind::Keyword) {
      SexprToken kw = lex_.next();
      if (kw.text != "concl") fail("unknown keyword :" + kw.text);
      if (lex_.peek().kind != SexprToken::Kind::String)
        fail("expected a quoted sequent after :concl");
      annotated = parse_sequent(lex_.next().text);
    }

    std::vector<Proof> premises;
    for (std::size_t i = 0; i < arity; ++i) premises.push_back(node());
    expect(SexprToken::Kind::RParen, "')' ending a proof node");

    Proof p = [&] {
      try {
        return Proof::make(rule, std::move(premises));
      } catch (const ShapeError& err) {
        throw ParseError(err.what(), at);
      }
    }();
    if (annotated && !sequent_eq(*annotated, p.conclusion()))
      throw ParseError(":concl annotation " + to_string(*annotated) +
                           " differs from the computed conclusion " +
                           to_string(p.conclusion()),
                       at);
    return p;
  }

  SexprLexer lex_;
};

inline void write_node(std::ostream& os, const Proof& p, int indent,
                       bool annotate) {
  auto pad = [&]() {
    for (int i = 0; i < indent; ++i) os << ' ';
  };
  pad();
  os << '(';
  const Rule& r = p.rule();
  auto num_list = [&](const std::vector<std::size_t>& xs) {
    os << '(';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    os << ')';
  };
  auto sig_list = [&](const std::vector<Sig>& xs) {
    os << '(';
    for (std::size_t i = 0; i < xs.size(); ++i)
      os << (i ? " " : "") << xs[i].name;
    os << ')';
  };
  if (const auto* ax = std::get_if<AxRule>(&r)) {
    os << "ax \"" << to_string(ax->formula) << '"';
  } else if (const auto* cut = std::get_if<CutRule>(&r)) {
    os << "cut \"" << to_string(cut->formula) << "\" " << cut->left_index
       << ' ' << cut->right_index;
  } else if (const auto* ex = std::get_if<ExchangeRule>(&r)) {
    os << "ex ";
    num_list(ex->perm);
  } else if (const auto* t = std::get_if<TensorRule>(&r)) {
    os << "tensor " << t->left_index << ' ' << t->right_index;
  } else if (const auto* pa = std::get_if<ParrRule>(&r)) {
    os << "parr " << pa->first_index << ' ' << pa->second_index;
  } else if (std::holds_alternative<OneRule>(r)) {
    os << "one";
  } else if (std::holds_alternative<BotRule>(r)) {
    os << "bot";
  } else if (const auto* w = std::get_if<WithRule>(&r)) {
    os << "with " << w->left_index << ' ' << w->right_index;
  } else if (const auto* p1 = std::get_if<Plus1Rule>(&r)) {
    os << "plus1 " << p1->index << " \"" << to_string(p1->right) << '"';
  } else if (const auto* p2 = std::get_if<Plus2Rule>(&r)) {
    os << "plus2 " << p2->index << " \"" << to_string(p2->left) << '"';
  } else if (const auto* top = std::get_if<TopRule>(&r)) {
    os << "top";
    if (!top->context.empty()) {
      std::string s = to_string(top->context);
      os << " \"" << s.substr(3) << '"';  // strip "|- "
    }
  } else if (const auto* de = std::get_if<DeRule>(&r)) {
    os << "de " << de->sig.name << ' ' << de->index;
  } else if (const auto* co = std::get_if<CoRule>(&r)) {
    os << "co ";
    sig_list(co->froms);
    os << ' ' << co->to.name << ' ';
    if (co->froms.empty())
      os << '"' << to_string(co->weakened) << '"';
    else
      num_list(co->indices);
  } else if (const auto* dg = std::get_if<DgRule>(&r)) {
    os << "dg " << dg->outer.name << ' ' << dg->inner.name << ' '
       << dg->to.name << ' ' << dg->index;
  } else if (const auto* pr = std::get_if<PromRule>(&r)) {
    os << "prom " << pr->sig.name << ' ' << pr->index;
  } else if (const auto* pg = std::get_if<PromGirardRule>(&r)) {
    os << "prom-g " << pg->sig.name << ' ' << pg->index << ' ';
    sig_list(pg->targets);
  } else if (const auto* po = std::get_if<PromOrderedRule>(&r)) {
    os << "prom-o " << po->sig.name << ' ' << po->index << ' ';
    sig_list(po->targets);
  }
  if (annotate) os << " :concl \"" << to_string(p.conclusion()) << '"';
  for (const Proof& q : p.premises()) {
    os << '\n';
    write_node(os, q, indent + 2, annotate);
  }
  os << ')';
}

}  // namespace detail

inline Proof read_proof(std::string_view text) {
  return detail::ProofReader(text).read();
}

inline std::string write_proof(const Proof& p, bool annotate = false) {
  std::ostringstream os;
  detail::write_node(os, p, 0, annotate);
  os << '\n';
  return os.str();
}

namespace detail {

inline std::string latex_formula(const Formula& f, int parent_prec,
                                 bool left_child, Formula::Kind parent) {
  using K = Formula::Kind;
  K k = f.kind();
  int cp = print_prec(k);
  bool parens;
  if (cp > parent_prec)
    parens = false;
  else if (cp < parent_prec)
    parens = true;
  else
    parens = !(cp == 3 || (left_child && k == parent));
  std::string out;
  switch (k) {
    case K::Atom:
      out = f.atom_name();
      break;
    case K::DualAtom:
      out = f.atom_name() + "^{\\bot}";
      break;
    case K::One:
      out = "1";
      break;
    case K::Zero:
      out = "0";
      break;
    case K::Top:
      out = "\\top";
      break;
    case K::Bot:
      out = "\\bot";
      break;
    case K::Bang:
    case K::Quest:
      out = (k == K::Bang ? "\\oc_{" : "\\wn_{") + f.sig().name + "} " +
            latex_formula(f.body(), 3, true, k);
      break;
    default: {
      const char* op = k == K::Tensor ? " \\otimes "
                       : k == K::Parr ? " \\parr "
                       : k == K::With ? " \\with "
                                      : " \\oplus ";
      out = latex_formula(f.left(), cp, true, k) + op +
            latex_formula(f.right(), cp, false, k);
      break;
    }
  }
  if (parens) return "(" + out + ")";
  return out;
}

inline std::string latex_sequent(const Sequent& g) {
  std::string out = "\\vdash ";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ", ";
    out += latex_formula(g[i], 0, true, Formula::Kind::Atom);
  }
  return out;
}

inline std::string latex_rule_label(const Rule& r) {
  std::string name = rule_name(r);
  if (const auto* co = std::get_if<CoRule>(&r))
    name = "co_{" + std::to_string(co->froms.size()) + "}";
  if (std::holds_alternative<PromGirardRule>(r)) name = "p_{g}";
  if (std::holds_alternative<PromOrderedRule>(r)) name = "p_{\\leq}";
  if (std::holds_alternative<PromRule>(r)) name = "p";
  return name;
}

inline void latex_node(std::ostream& os, const Proof& p) {
  for (const Proof& q : p.premises()) latex_node(os, q);
  if (p.premises().empty()) os << "\\AxiomC{}\n";
  os << "\\RightLabel{$\\mathrm{" << latex_rule_label(p.rule()) << "}$}\n";
  const char* inf = p.premises().size() == 2   ? "\\BinaryInfC"
                    : p.premises().size() == 1 ? "\\UnaryInfC"
                                               : "\\UnaryInfC";
  os << inf << "{$" << latex_sequent(p.conclusion()) << "$}\n";
}

}  // namespace detail

// bussproofs-style inference tree, one prooftree environment per proof.
// The \oc \wn \parr \with macros follow the usual linear-logic preambles.
inline std::string export_latex(const Proof& p) {
  std::ostringstream os;
  os << "% requires \\usepackage{bussproofs} and the linear logic macros\n"
     << "% \\oc \\wn \\parr \\with (e.g. from cmll or manual definitions)\n"
     << "\\begin{prooftree}\n";
  detail::latex_node(os, p);
  os << "\\end{prooftree}\n";
  return os.str();
}

}  // namespace superll

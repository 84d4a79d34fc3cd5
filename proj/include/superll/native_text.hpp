#pragma once

#include "native.hpp"
#include "proof_text.hpp"

namespace superll {

// S-expression format for native proofs, sharing the non-exponential syntax
// with the indexed calculus; exponential rules use system-specific names:
//
//   (prom-f i P)  (dig i P)  (der SIG i P)  (wk SIG "A" P)  (con SIG i j P)
//   (mpx (i1 .. ik) P)  (mpx () "A" P)  (prom i P)  (prom-u i P)
//   (prom-sec i (k1 .. kn) P)  (shpos i P)  (shneg i P)
//   (prom-sub SIG i P)  (subs SIG1 SIG2 i P)  (con-plus SIG1 SIG2 i j P)
//   (prom-dot SIG i P)

namespace detail {

class NativeReader {
 public:
  explicit NativeReader(std::string_view text) : lex_(text) {}

  NativeProof read(const NativeSystem& sys) {
    NativeProof p = node(sys);
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
    expect(SexprToken::Kind::LParen, "'('");
    std::vector<Sig> out;
    while (lex_.peek().kind == SexprToken::Kind::Atom) out.push_back(sig());
    expect(SexprToken::Kind::RParen, "')'");
    return out;
  }

  std::vector<std::size_t> index_list() {
    expect(SexprToken::Kind::LParen, "'('");
    std::vector<std::size_t> out;
    while (lex_.peek().kind == SexprToken::Kind::Atom) out.push_back(index());
    expect(SexprToken::Kind::RParen, "')'");
    return out;
  }

  NativeProof node(const NativeSystem& sys) {
    expect(SexprToken::Kind::LParen, "'(' starting a proof node");
    std::size_t at = lex_.peek().pos;
    std::string name = atom("rule name");
    NativeRule rule = NOneRule{};
    std::size_t arity = 0;

    if (name == "ax") {
      rule = NAxRule{formula_arg()};
    } else if (name == "cut") {
      Formula f = formula_arg();
      std::size_t i = index(), j = index();
      rule = NCutRule{f, i, j};
      arity = 2;
    } else if (name == "ex") {
      rule = NExchangeRule{index_list()};
      arity = 1;
    } else if (name == "tensor") {
      std::size_t i = index(), j = index();
      rule = NTensorRule{i, j};
      arity = 2;
    } else if (name == "parr") {
      std::size_t i = index(), j = index();
      rule = NParrRule{i, j};
      arity = 1;
    } else if (name == "one") {
      rule = NOneRule{};
    } else if (name == "bot") {
      rule = NBotRule{};
      arity = 1;
    } else if (name == "with") {
      std::size_t i = index(), j = index();
      rule = NWithRule{i, j};
      arity = 2;
    } else if (name == "plus1") {
      std::size_t i = index();
      rule = NPlus1Rule{i, formula_arg()};
      arity = 1;
    } else if (name == "plus2") {
      std::size_t i = index();
      rule = NPlus2Rule{i, formula_arg()};
      arity = 1;
    } else if (name == "top") {
      Sequent ctx;
      if (lex_.peek().kind == SexprToken::Kind::String)
        ctx = parse_sequent(lex_.next().text);
      rule = NTopRule{std::move(ctx)};
    } else if (name == "prom-f") {
      rule = NPromFRule{index()};
      arity = 1;
    } else if (name == "dig") {
      rule = NDigRule{index()};
      arity = 1;
    } else if (name == "der") {
      Sig e = sig();
      rule = NDeRule{e, index()};
      arity = 1;
    } else if (name == "wk") {
      Sig e = sig();
      rule = NWkRule{e, formula_arg()};
      arity = 1;
    } else if (name == "con") {
      Sig e = sig();
      std::size_t i = index(), j = index();
      rule = NCoRule{e, i, j};
      arity = 1;
    } else if (name == "mpx") {
      std::vector<std::size_t> idx = index_list();
      Formula weakened;
      if (idx.empty()) weakened = formula_arg();
      rule = NMpxRule{std::move(idx), weakened};
      arity = 1;
    } else if (name == "prom") {
      rule = NPromLLRule{index()};
      arity = 1;
    } else if (name == "prom-u") {
      rule = NPromURule{index()};
      arity = 1;
    } else if (name == "prom-sec") {
      std::size_t i = index();
      rule = NPromSecRule{i, sig_list()};
      arity = 1;
    } else if (name == "shpos") {
      rule = NShiftPosRule{index()};
      arity = 1;
    } else if (name == "shneg") {
      rule = NShiftNegRule{index()};
      arity = 1;
    } else if (name == "prom-sub") {
      Sig e = sig();
      rule = NPromSubRule{e, index()};
      arity = 1;
    } else if (name == "subs") {
      Sig e1 = sig(), e2 = sig();
      rule = NSubsRule{e1, e2, index()};
      arity = 1;
    } else if (name == "con-plus") {
      Sig e1 = sig(), e2 = sig();
      std::size_t i = index(), j = index();
      rule = NCoPlusRule{e1, e2, i, j};
      arity = 1;
    } else if (name == "prom-dot") {
      Sig e = sig();
      rule = NPromDotRule{e, index()};
      arity = 1;
    } else {
      throw ParseError("unknown native rule name '" + name + "'", at);
    }

    std::vector<NativeProof> premises;
    for (std::size_t i = 0; i < arity; ++i) premises.push_back(node(sys));
    expect(SexprToken::Kind::RParen, "')' ending a proof node");
    try {
      return NativeProof::infer(sys, std::move(rule), std::move(premises));
    } catch (const Error& err) {
      throw ParseError(err.what(), at);
    }
  }

  SexprLexer lex_;
};

inline void write_native_node(std::ostream& os, const NativeProof& p,
                              int indent) {
  for (int i = 0; i < indent; ++i) os << ' ';
  os << '(';
  const NativeRule& r = p.rule();
  os << native_rule_name(r);
  auto num_list = [&](const std::vector<std::size_t>& xs) {
    os << " (";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    os << ')';
  };
  if (const auto* ax = std::get_if<NAxRule>(&r)) {
    os << " \"" << to_string(ax->formula) << '"';
  } else if (const auto* cut = std::get_if<NCutRule>(&r)) {
    os << " \"" << to_string(cut->formula) << "\" " << cut->left_index << ' '
       << cut->right_index;
  } else if (const auto* ex = std::get_if<NExchangeRule>(&r)) {
    num_list(ex->perm);
  } else if (const auto* t = std::get_if<NTensorRule>(&r)) {
    os << ' ' << t->left_index << ' ' << t->right_index;
  } else if (const auto* pa = std::get_if<NParrRule>(&r)) {
    os << ' ' << pa->first_index << ' ' << pa->second_index;
  } else if (const auto* w = std::get_if<NWithRule>(&r)) {
    os << ' ' << w->left_index << ' ' << w->right_index;
  } else if (const auto* p1 = std::get_if<NPlus1Rule>(&r)) {
    os << ' ' << p1->index << " \"" << to_string(p1->right) << '"';
  } else if (const auto* p2 = std::get_if<NPlus2Rule>(&r)) {
    os << ' ' << p2->index << " \"" << to_string(p2->left) << '"';
  } else if (const auto* top = std::get_if<NTopRule>(&r)) {
    if (!top->context.empty()) {
      std::string s = to_string(top->context);
      os << " \"" << s.substr(3) << '"';
    }
  } else if (const auto* pf = std::get_if<NPromFRule>(&r)) {
    os << ' ' << pf->index;
  } else if (const auto* dig = std::get_if<NDigRule>(&r)) {
    os << ' ' << dig->index;
  } else if (const auto* de = std::get_if<NDeRule>(&r)) {
    os << ' ' << de->sig.name << ' ' << de->index;
  } else if (const auto* wk = std::get_if<NWkRule>(&r)) {
    os << ' ' << wk->sig.name << " \"" << to_string(wk->formula) << '"';
  } else if (const auto* co = std::get_if<NCoRule>(&r)) {
    os << ' ' << co->sig.name << ' ' << co->first_index << ' '
       << co->second_index;
  } else if (const auto* mpx = std::get_if<NMpxRule>(&r)) {
    num_list(mpx->indices);
    if (mpx->indices.empty())
      os << " \"" << to_string(mpx->weakened) << '"';
  } else if (const auto* pl = std::get_if<NPromLLRule>(&r)) {
    os << ' ' << pl->index;
  } else if (const auto* pu = std::get_if<NPromURule>(&r)) {
    os << ' ' << pu->index;
  } else if (const auto* ps = std::get_if<NPromSecRule>(&r)) {
    os << ' ' << ps->index << " (";
    for (std::size_t i = 0; i < ps->kinds.size(); ++i)
      os << (i ? " " : "") << ps->kinds[i].name;
    os << ')';
  } else if (const auto* sp = std::get_if<NShiftPosRule>(&r)) {
    os << ' ' << sp->index;
  } else if (const auto* sn = std::get_if<NShiftNegRule>(&r)) {
    os << ' ' << sn->index;
  } else if (const auto* su = std::get_if<NPromSubRule>(&r)) {
    os << ' ' << su->sig.name << ' ' << su->index;
  } else if (const auto* sb = std::get_if<NSubsRule>(&r)) {
    os << ' ' << sb->from.name << ' ' << sb->to.name << ' ' << sb->index;
  } else if (const auto* cp = std::get_if<NCoPlusRule>(&r)) {
    os << ' ' << cp->first.name << ' ' << cp->second.name << ' '
       << cp->first_index << ' ' << cp->second_index;
  } else if (const auto* pd = std::get_if<NPromDotRule>(&r)) {
    os << ' ' << pd->sig.name << ' ' << pd->index;
  }
  for (const NativeProof& q : p.premises()) {
    os << '\n';
    write_native_node(os, q, indent + 2);
  }
  os << ')';
}

}  // namespace detail

inline NativeProof read_native_proof(const NativeSystem& sys,
                                     std::string_view text) {
  return detail::NativeReader(text).read(sys);
}

inline std::string write_native_proof(const NativeProof& p) {
  std::ostringstream os;
  detail::write_native_node(os, p, 0);
  os << '\n';
  return os.str();
}

}  // namespace superll

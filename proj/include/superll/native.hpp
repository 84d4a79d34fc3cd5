#pragma once

#include "presets.hpp"
#include "proof.hpp"

namespace superll {

// Native rules of the embedded systems, one shared tree shape with
// per-system vocabularies. The non-exponential rules mirror the indexed
// calculus; the exponential ones are each system's own.

struct NAxRule {
  Formula formula;
};
struct NCutRule {
  Formula formula;
  std::size_t left_index, right_index;
};
struct NExchangeRule {
  std::vector<std::size_t> perm;
};
struct NTensorRule {
  std::size_t left_index, right_index;
};
struct NParrRule {
  std::size_t first_index, second_index;
};
struct NOneRule {};
struct NBotRule {};
struct NWithRule {
  std::size_t left_index, right_index;
};
struct NPlus1Rule {
  std::size_t index;
  Formula right;
};
struct NPlus2Rule {
  std::size_t index;
  Formula left;
};
struct NTopRule {
  Sequent context;
};
// functorial promotion |- A, G  /  |- !A, ?G
struct NPromFRule {
  std::size_t index;
};
// digging |- ??A, G / |- ?A, G
struct NDigRule {
  std::size_t index;
};
struct NDeRule {
  Sig sig;
  std::size_t index;
};
struct NWkRule {
  Sig sig;
  Formula formula;
};
struct NCoRule {
  Sig sig;
  std::size_t first_index, second_index;
};
// multiplexing |- A,..,A, G / |- ?A, G; arity 0 is soft weakening and
// carries the introduced formula
struct NMpxRule {
  std::vector<std::size_t> indices;
  Formula weakened;
};
// Girard promotion |- A, ?G / |- !A, ?G
struct NPromLLRule {
  std::size_t index;
};
// unary promotion |- A, B / |- !A, ?B
struct NPromURule {
  std::size_t index;
};
// paragraph promotion |- A, G, D / |- par A, parbar G, ?D; kinds[i] picks the
// paragraph (star) or plain (bullet) wrapper per context formula
struct NPromSecRule {
  std::size_t index;
  std::vector<Sig> kinds;
};
// positive shift |- A, neg G / |- pos A, neg G
struct NShiftPosRule {
  std::size_t index;
};
// negative shift |- A, G / |- neg A, G
struct NShiftNegRule {
  std::size_t index;
};
// subexponential promotion |- A, ?_{e1}B1 .. / e <= ei / |- !_e A, ?_{e1}B1 ..
struct NPromSubRule {
  Sig sig;
  std::size_t index;
};
// subsumption |- ?_{e1}A, G / e1 <= e2 / |- ?_{e2}A, G
struct NSubsRule {
  Sig from, to;
  std::size_t index;
};
// semiring contraction |- ?_{e1}A, ?_{e2}A, G / |- ?_{e1+e2}A, G
struct NCoPlusRule {
  Sig first, second;
  std::size_t first_index, second_index;
};
// semiring promotion |- A, ?_{e1}B1 .. / |- !_e A, ?_{e.e1}B1 ..
struct NPromDotRule {
  Sig sig;
  std::size_t index;
};

using NativeRule =
    std::variant<NAxRule, NCutRule, NExchangeRule, NTensorRule, NParrRule,
                 NOneRule, NBotRule, NWithRule, NPlus1Rule, NPlus2Rule,
                 NTopRule, NPromFRule, NDigRule, NDeRule, NWkRule, NCoRule,
                 NMpxRule, NPromLLRule, NPromURule, NPromSecRule,
                 NShiftPosRule, NShiftNegRule, NPromSubRule, NSubsRule,
                 NCoPlusRule, NPromDotRule>;

inline std::string native_rule_name(const NativeRule& r) {
  if (std::holds_alternative<NAxRule>(r)) return "ax";
  if (std::holds_alternative<NCutRule>(r)) return "cut";
  if (std::holds_alternative<NExchangeRule>(r)) return "ex";
  if (std::holds_alternative<NTensorRule>(r)) return "tensor";
  if (std::holds_alternative<NParrRule>(r)) return "parr";
  if (std::holds_alternative<NOneRule>(r)) return "one";
  if (std::holds_alternative<NBotRule>(r)) return "bot";
  if (std::holds_alternative<NWithRule>(r)) return "with";
  if (std::holds_alternative<NPlus1Rule>(r)) return "plus1";
  if (std::holds_alternative<NPlus2Rule>(r)) return "plus2";
  if (std::holds_alternative<NTopRule>(r)) return "top";
  if (std::holds_alternative<NPromFRule>(r)) return "prom-f";
  if (std::holds_alternative<NDigRule>(r)) return "dig";
  if (std::holds_alternative<NDeRule>(r)) return "der";
  if (std::holds_alternative<NWkRule>(r)) return "wk";
  if (std::holds_alternative<NCoRule>(r)) return "con";
  if (std::holds_alternative<NMpxRule>(r)) return "mpx";
  if (std::holds_alternative<NPromLLRule>(r)) return "prom";
  if (std::holds_alternative<NPromURule>(r)) return "prom-u";
  if (std::holds_alternative<NPromSecRule>(r)) return "prom-sec";
  if (std::holds_alternative<NShiftPosRule>(r)) return "shpos";
  if (std::holds_alternative<NShiftNegRule>(r)) return "shneg";
  if (std::holds_alternative<NPromSubRule>(r)) return "prom-sub";
  if (std::holds_alternative<NSubsRule>(r)) return "subs";
  if (std::holds_alternative<NCoPlusRule>(r)) return "con-plus";
  if (std::holds_alternative<NPromDotRule>(r)) return "prom-dot";
  return "?";
}

inline std::size_t native_premise_count(const NativeRule& r) {
  if (std::holds_alternative<NAxRule>(r) ||
      std::holds_alternative<NOneRule>(r) ||
      std::holds_alternative<NTopRule>(r))
    return 0;
  if (std::holds_alternative<NCutRule>(r) ||
      std::holds_alternative<NTensorRule>(r) ||
      std::holds_alternative<NWithRule>(r))
    return 2;
  return 1;
}

inline bool native_is_cut(const NativeRule& r) {
  return std::holds_alternative<NCutRule>(r);
}

// The semantic data a native checker needs beyond the rule labels: the
// subexponential pre-order and parameter sets, or the semiring operations.
struct NativeSystem {
  PresetId id;

  // sell
  std::function<bool(const Sig&, const Sig&)> leq;
  std::set<Sig> weakenable, contractible;
  std::vector<Sig> elements;

  // bsll
  std::function<std::optional<long>(const Sig&)> value;
  detail::RingOps ring{};

  Sig dot(const Sig& a, const Sig& b) const {
    return detail::nat_sig(ring.mul(*value(a), *value(b)));
  }
  Sig add(const Sig& a, const Sig& b) const {
    return detail::nat_sig(ring.add(*value(a), *value(b)));
  }
  bool is_sell() const { return id.kind == PresetId::Kind::SeLL; }
  bool is_bsll() const { return id.kind == PresetId::Kind::BSLL; }
};

inline NativeSystem make_native_system(const PresetId& id) {
  NativeSystem sys;
  sys.id = id;
  if (id.kind == PresetId::Kind::SeLL) {
    auto rel = detail::preorder_closure(id.sell);
    sys.leq = [rel](const Sig& a, const Sig& b) {
      return rel.count({a, b}) > 0;
    };
    sys.weakenable.insert(id.sell.weakenable.begin(),
                          id.sell.weakenable.end());
    sys.contractible.insert(id.sell.contractible.begin(),
                            id.sell.contractible.end());
    sys.elements = id.sell.elements;
  } else if (id.kind == PresetId::Kind::BSLL) {
    sys.ring = detail::ring_ops(id.bsll.ring);
    sys.value = detail::nat_sig_value;
    sys.leq = [](const Sig& a, const Sig& b) {
      auto va = detail::nat_sig_value(a), vb = detail::nat_sig_value(b);
      return va && vb && *va <= *vb;
    };
  }
  return sys;
}

namespace detail {

[[noreturn]] inline void nfail(const std::string& msg) {
  throw ShapeError(msg);
}

inline void nside(bool ok, const std::string& what) {
  if (!ok) throw SideConditionError(what);
}

}  // namespace detail

// Computes the conclusion of a native rule and enforces the system's side
// conditions (signature vocabulary, E_W / E_C membership, the pre-order, the
// semiring indices).
inline Sequent native_conclusion_of(const NativeSystem& sys,
                                    const NativeRule& rule,
                                    const std::vector<Sequent>& prems) {
  using detail::nfail;
  using detail::nside;
  using Kind = PresetId::Kind;
  const Kind kind = sys.id.kind;
  if (prems.size() != native_premise_count(rule))
    nfail(native_rule_name(rule) + ": arity mismatch");

  auto need_index = [&](const Sequent& g, std::size_t i) {
    if (i >= g.size())
      nfail(native_rule_name(rule) + ": active index out of range");
  };
  auto allowed = [&](std::initializer_list<Kind> kinds) {
    for (Kind k : kinds)
      if (k == kind) return;
    nfail(native_rule_name(rule) + ": rule not in system " + sys.id.name());
  };

  if (const auto* ax = std::get_if<NAxRule>(&rule))
    return {ax->formula, dual(ax->formula)};
  if (const auto* cut = std::get_if<NCutRule>(&rule)) {
    need_index(prems[0], cut->left_index);
    need_index(prems[1], cut->right_index);
    if (prems[0][cut->left_index] != cut->formula ||
        prems[1][cut->right_index] != dual(cut->formula))
      nfail("cut: premises do not carry the cut formula");
    return concat(erased(prems[0], cut->left_index),
                  erased(prems[1], cut->right_index));
  }
  if (const auto* ex = std::get_if<NExchangeRule>(&rule)) {
    if (ex->perm.size() != prems[0].size())
      nfail("ex: permutation length mismatch");
    Sequent out;
    std::vector<bool> seen(ex->perm.size(), false);
    for (std::size_t i : ex->perm) {
      if (i >= ex->perm.size() || seen[i]) nfail("ex: not a permutation");
      seen[i] = true;
      out.push_back(prems[0][i]);
    }
    return out;
  }
  if (const auto* t = std::get_if<NTensorRule>(&rule)) {
    need_index(prems[0], t->left_index);
    need_index(prems[1], t->right_index);
    Sequent out{Formula::tensor(prems[0][t->left_index],
                                prems[1][t->right_index])};
    return concat(concat(std::move(out), erased(prems[0], t->left_index)),
                  erased(prems[1], t->right_index));
  }
  if (const auto* pa = std::get_if<NParrRule>(&rule)) {
    need_index(prems[0], pa->first_index);
    need_index(prems[0], pa->second_index);
    if (pa->first_index == pa->second_index) nfail("parr: indices must differ");
    Sequent out{
        Formula::parr(prems[0][pa->first_index], prems[0][pa->second_index])};
    return concat(std::move(out),
                  erased(prems[0], {pa->first_index, pa->second_index}));
  }
  if (std::holds_alternative<NOneRule>(rule)) return {Formula::one()};
  if (std::holds_alternative<NBotRule>(rule))
    return concat({Formula::bot()}, prems[0]);
  if (const auto* w = std::get_if<NWithRule>(&rule)) {
    need_index(prems[0], w->left_index);
    need_index(prems[1], w->right_index);
    Sequent c1 = erased(prems[0], w->left_index);
    Sequent c2 = erased(prems[1], w->right_index);
    if (!sequent_eq(c1, c2)) nfail("with: premise contexts differ");
    Sequent out{
        Formula::with(prems[0][w->left_index], prems[1][w->right_index])};
    return concat(std::move(out), c1);
  }
  if (const auto* p1 = std::get_if<NPlus1Rule>(&rule)) {
    need_index(prems[0], p1->index);
    Sequent out{Formula::plus(prems[0][p1->index], p1->right)};
    return concat(std::move(out), erased(prems[0], p1->index));
  }
  if (const auto* p2 = std::get_if<NPlus2Rule>(&rule)) {
    need_index(prems[0], p2->index);
    Sequent out{Formula::plus(p2->left, prems[0][p2->index])};
    return concat(std::move(out), erased(prems[0], p2->index));
  }
  if (const auto* top = std::get_if<NTopRule>(&rule))
    return concat({Formula::top()}, top->context);

  if (const auto* pf = std::get_if<NPromFRule>(&rule)) {
    allowed({Kind::LLFunctorial, Kind::ELL, Kind::SLL});
    need_index(prems[0], pf->index);
    Sequent out{Formula::bang(kBullet, prems[0][pf->index])};
    for (std::size_t j = 0; j < prems[0].size(); ++j)
      if (j != pf->index) out.push_back(Formula::quest(kBullet, prems[0][j]));
    return out;
  }
  if (const auto* dig = std::get_if<NDigRule>(&rule)) {
    allowed({Kind::LLFunctorial});
    need_index(prems[0], dig->index);
    const Formula& f = prems[0][dig->index];
    if (!f.is_quest() || f.sig() != kBullet || !f.body().is_quest() ||
        f.body().sig() != kBullet)
      nfail("dig: active formula is not ? ? shaped");
    Sequent out{Formula::quest(kBullet, f.body().body())};
    return concat(std::move(out), erased(prems[0], dig->index));
  }
  if (const auto* de = std::get_if<NDeRule>(&rule)) {
    switch (kind) {
      case Kind::LLFunctorial:
      case Kind::LLFull:
      case Kind::Shift:
        nside(de->sig == kBullet, "der applies to the plain signature only");
        break;
      case Kind::SeLL:
        nside(std::find(sys.elements.begin(), sys.elements.end(), de->sig) !=
                  sys.elements.end(),
              "der: unknown signature " + de->sig.name);
        break;
      case Kind::BSLL:
        nside(sys.value(de->sig) && *sys.value(de->sig) == sys.ring.one,
              "der applies to the unit index only");
        break;
      default:
        nfail("der: rule not in system " + sys.id.name());
    }
    need_index(prems[0], de->index);
    Sequent out{Formula::quest(de->sig, prems[0][de->index])};
    return concat(std::move(out), erased(prems[0], de->index));
  }
  if (const auto* wk = std::get_if<NWkRule>(&rule)) {
    switch (kind) {
      case Kind::LLFunctorial:
      case Kind::ELL:
      case Kind::LLFull:
      case Kind::LLL:
      case Kind::Shift:
        nside(wk->sig == kBullet, "wk applies to the plain signature only");
        break;
      case Kind::SeLL:
        nside(sys.weakenable.count(wk->sig) > 0,
              "wk: " + wk->sig.name + " is not weakenable");
        break;
      case Kind::BSLL:
        nside(sys.value(wk->sig) && *sys.value(wk->sig) == sys.ring.zero,
              "wk applies to the zero index only");
        break;
      default:
        nfail("wk: rule not in system " + sys.id.name());
    }
    return concat({Formula::quest(wk->sig, wk->formula)}, prems[0]);
  }
  if (const auto* co = std::get_if<NCoRule>(&rule)) {
    switch (kind) {
      case Kind::LLFunctorial:
      case Kind::ELL:
      case Kind::LLFull:
      case Kind::LLL:
      case Kind::Shift:
        nside(co->sig == kBullet, "con applies to the plain signature only");
        break;
      case Kind::SeLL:
        nside(sys.contractible.count(co->sig) > 0,
              "con: " + co->sig.name + " is not contractible");
        break;
      default:
        nfail("con: rule not in system " + sys.id.name());
    }
    need_index(prems[0], co->first_index);
    need_index(prems[0], co->second_index);
    if (co->first_index == co->second_index) nfail("con: indices must differ");
    const Formula& a = prems[0][co->first_index];
    const Formula& b = prems[0][co->second_index];
    if (!a.is_quest() || a.sig() != co->sig || a != b)
      nfail("con: active formulas are not matching ?_" + co->sig.name +
            " copies");
    Sequent out{a};
    return concat(std::move(out),
                  erased(prems[0], {co->first_index, co->second_index}));
  }
  if (const auto* mpx = std::get_if<NMpxRule>(&rule)) {
    allowed({Kind::SLL});
    Formula body;
    std::vector<bool> seen(prems[0].size(), false);
    for (std::size_t j = 0; j < mpx->indices.size(); ++j) {
      need_index(prems[0], mpx->indices[j]);
      if (seen[mpx->indices[j]]) nfail("mpx: duplicate active index");
      seen[mpx->indices[j]] = true;
      if (j == 0)
        body = prems[0][mpx->indices[j]];
      else if (prems[0][mpx->indices[j]] != body)
        nfail("mpx: active copies differ");
    }
    if (mpx->indices.empty()) {
      if (mpx->weakened.null()) nfail("mpx of arity 0 carries the formula");
      return concat({Formula::quest(kBullet, mpx->weakened)}, prems[0]);
    }
    Sequent out{Formula::quest(kBullet, body)};
    return concat(std::move(out), erased(prems[0], mpx->indices));
  }
  if (const auto* pl = std::get_if<NPromLLRule>(&rule)) {
    allowed({Kind::LLFull, Kind::Shift});
    need_index(prems[0], pl->index);
    for (std::size_t j = 0; j < prems[0].size(); ++j)
      if (j != pl->index &&
          (!prems[0][j].is_quest() || prems[0][j].sig() != kBullet))
        nfail("prom: context formula not ?-prefixed");
    Sequent out{Formula::bang(kBullet, prems[0][pl->index])};
    for (std::size_t j = 0; j < prems[0].size(); ++j)
      if (j != pl->index) out.push_back(prems[0][j]);
    return out;
  }
  if (const auto* pu = std::get_if<NPromURule>(&rule)) {
    allowed({Kind::LLL});
    if (prems[0].size() != 2) nfail("prom-u: premise must have two formulas");
    need_index(prems[0], pu->index);
    std::size_t other = 1 - pu->index;
    return {Formula::bang(kBullet, prems[0][pu->index]),
            Formula::quest(kBullet, prems[0][other])};
  }
  if (const auto* ps = std::get_if<NPromSecRule>(&rule)) {
    allowed({Kind::LLL});
    need_index(prems[0], ps->index);
    if (ps->kinds.size() != prems[0].size() - 1)
      nfail("prom-sec: one wrapper kind per context formula required");
    Sequent out{Formula::bang(kStar, prems[0][ps->index])};
    std::size_t t = 0;
    for (std::size_t j = 0; j < prems[0].size(); ++j) {
      if (j == ps->index) continue;
      const Sig& k = ps->kinds[t++];
      nside(k == kBullet || k == kStar, "prom-sec: wrapper kind unknown");
      out.push_back(Formula::quest(k, prems[0][j]));
    }
    return out;
  }
  if (const auto* sp = std::get_if<NShiftPosRule>(&rule)) {
    allowed({Kind::Shift});
    need_index(prems[0], sp->index);
    for (std::size_t j = 0; j < prems[0].size(); ++j)
      if (j != sp->index &&
          (!prems[0][j].is_quest() || prems[0][j].sig() != kStar))
        nfail("shpos: context formula not negative-shifted");
    Sequent out{Formula::bang(kStar, prems[0][sp->index])};
    for (std::size_t j = 0; j < prems[0].size(); ++j)
      if (j != sp->index) out.push_back(prems[0][j]);
    return out;
  }
  if (const auto* sn = std::get_if<NShiftNegRule>(&rule)) {
    allowed({Kind::Shift});
    need_index(prems[0], sn->index);
    Sequent out{Formula::quest(kStar, prems[0][sn->index])};
    return concat(std::move(out), erased(prems[0], sn->index));
  }
  if (const auto* su = std::get_if<NPromSubRule>(&rule)) {
    allowed({Kind::SeLL});
    need_index(prems[0], su->index);
    Sequent out{Formula::bang(su->sig, prems[0][su->index])};
    for (std::size_t j = 0; j < prems[0].size(); ++j) {
      if (j == su->index) continue;
      const Formula& f = prems[0][j];
      if (!f.is_quest()) nfail("prom-sub: context formula not ?-prefixed");
      nside(sys.leq(su->sig, f.sig()), "prom-sub: " + su->sig.name +
                                           " is not below " + f.sig().name);
      out.push_back(f);
    }
    return out;
  }
  if (const auto* sb = std::get_if<NSubsRule>(&rule)) {
    allowed({Kind::BSLL});
    need_index(prems[0], sb->index);
    const Formula& f = prems[0][sb->index];
    if (!f.is_quest() || f.sig() != sb->from)
      nfail("subs: active formula is not ?_" + sb->from.name + " shaped");
    nside(sys.leq(sb->from, sb->to),
          "subs: " + sb->from.name + " is not below " + sb->to.name);
    Sequent out{Formula::quest(sb->to, f.body())};
    return concat(std::move(out), erased(prems[0], sb->index));
  }
  if (const auto* cp = std::get_if<NCoPlusRule>(&rule)) {
    allowed({Kind::BSLL});
    need_index(prems[0], cp->first_index);
    need_index(prems[0], cp->second_index);
    if (cp->first_index == cp->second_index)
      nfail("con-plus: indices must differ");
    const Formula& a = prems[0][cp->first_index];
    const Formula& b = prems[0][cp->second_index];
    if (!a.is_quest() || a.sig() != cp->first || !b.is_quest() ||
        b.sig() != cp->second || a.body() != b.body())
      nfail("con-plus: active formulas do not match the rule signatures");
    Sequent out{Formula::quest(sys.add(cp->first, cp->second), a.body())};
    return concat(std::move(out),
                  erased(prems[0], {cp->first_index, cp->second_index}));
  }
  if (const auto* pd = std::get_if<NPromDotRule>(&rule)) {
    allowed({Kind::BSLL});
    need_index(prems[0], pd->index);
    nside(sys.value(pd->sig).has_value(),
          "prom-dot: bad semiring index " + pd->sig.name);
    Sequent out{Formula::bang(pd->sig, prems[0][pd->index])};
    for (std::size_t j = 0; j < prems[0].size(); ++j) {
      if (j == pd->index) continue;
      const Formula& f = prems[0][j];
      if (!f.is_quest()) nfail("prom-dot: context formula not ?-prefixed");
      out.push_back(Formula::quest(sys.dot(pd->sig, f.sig()), f.body()));
    }
    return out;
  }
  nfail("unhandled native rule");
}

// Derivation tree over the native vocabulary, mirroring Proof.
class NativeProof {
 public:
  NativeProof() = default;

  static NativeProof infer(const NativeSystem& sys, NativeRule rule,
                           std::vector<NativeProof> premises) {
    std::vector<Sequent> prems;
    prems.reserve(premises.size());
    for (const NativeProof& p : premises) prems.push_back(p.conclusion());
    Sequent concl = native_conclusion_of(sys, rule, prems);
    return NativeProof(std::make_shared<const Node>(
        Node{std::move(rule), std::move(concl), std::move(premises)}));
  }

  static NativeProof unchecked(NativeRule rule, Sequent conclusion,
                               std::vector<NativeProof> premises) {
    return NativeProof(std::make_shared<const Node>(
        Node{std::move(rule), std::move(conclusion), std::move(premises)}));
  }

  bool null() const { return !n_; }
  const NativeRule& rule() const { return n_->rule; }
  const Sequent& conclusion() const { return n_->conclusion; }
  const std::vector<NativeProof>& premises() const { return n_->premises; }

 private:
  struct Node {
    NativeRule rule;
    Sequent conclusion;
    std::vector<NativeProof> premises;
  };

  explicit NativeProof(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  std::shared_ptr<const Node> n_;
};

inline bool native_cut_free(const NativeProof& p) {
  if (native_is_cut(p.rule())) return false;
  for (const NativeProof& q : p.premises())
    if (!native_cut_free(q)) return false;
  return true;
}

inline std::size_t native_size(const NativeProof& p) {
  std::size_t n = 1;
  for (const NativeProof& q : p.premises()) n += native_size(q);
  return n;
}

// Re-checks every node's schema under the system; reports the first failure
// by premise-index path.
inline CheckReport check_native(const NativeSystem& sys, const NativeProof& p) {
  CheckReport report;
  std::function<bool(const NativeProof&, std::string&)> go =
      [&](const NativeProof& q, std::string& path) -> bool {
    for (std::size_t i = 0; i < q.premises().size(); ++i) {
      std::size_t len = path.size();
      if (!path.empty()) path += '.';
      path += std::to_string(i);
      if (!go(q.premises()[i], path)) return false;
      path.resize(len);
    }
    std::vector<Sequent> prems;
    for (const NativeProof& r : q.premises()) prems.push_back(r.conclusion());
    try {
      Sequent expect = native_conclusion_of(sys, q.rule(), prems);
      if (!sequent_eq(expect, q.conclusion())) {
        report = {false, path.empty() ? "root" : path,
                  "stored conclusion " + to_string(q.conclusion()) +
                      " differs from inferred " + to_string(expect)};
        return false;
      }
    } catch (const Error& err) {
      report = {false, path.empty() ? "root" : path, err.what()};
      return false;
    }
    return true;
  };
  std::string path;
  go(p, path);
  return report;
}

// Wraps p in a native exchange so its conclusion is exactly `target`.
inline NativeProof native_with_order(const NativeSystem& sys, NativeProof p,
                                     const Sequent& target) {
  if (sequent_eq(p.conclusion(), target)) return p;
  auto perm = find_permutation(p.conclusion(), target);
  if (!perm)
    throw InternalError("native_with_order: " + to_string(target) +
                        " is not a permutation of " +
                        to_string(p.conclusion()));
  return NativeProof::infer(sys, NExchangeRule{*perm}, {std::move(p)});
}

}  // namespace superll

#pragma once

#include "native.hpp"
#include "transform.hpp"

namespace superll {

namespace detail {

// Erasure of the soft signature: the image of the soft system keeps only the
// plain exponentials.
inline Formula erase_star(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Bang:
      if (f.sig() == kStar) return erase_star(f.body());
      return Formula::bang(f.sig(), erase_star(f.body()));
    case K::Quest:
      if (f.sig() == kStar) return erase_star(f.body());
      return Formula::quest(f.sig(), erase_star(f.body()));
    case K::Tensor:
      return Formula::tensor(erase_star(f.left()), erase_star(f.right()));
    case K::Parr:
      return Formula::parr(erase_star(f.left()), erase_star(f.right()));
    case K::With:
      return Formula::with(erase_star(f.left()), erase_star(f.right()));
    case K::Plus:
      return Formula::plus(erase_star(f.left()), erase_star(f.right()));
    default:
      return f;
  }
}

inline Sequent erase_star(const Sequent& g) {
  Sequent out;
  out.reserve(g.size());
  for (const Formula& f : g) out.push_back(erase_star(f));
  return out;
}

}  // namespace detail

// Encodes a native proof into the preset instance. The encoded conclusion is
// list-equal to the native one (the connective renamings are identities on
// the shared formula type); cut-free inputs stay cut-free.
inline Proof encode_native(const PresetId& id, const NativeProof& np) {
  const NativeSystem sys = make_native_system(id);
  CheckReport nc = check_native(sys, np);
  if (!nc)
    throw PreconditionError("encode_native: native proof invalid at " +
                            nc.path + ": " + nc.message);
  const Instance inst = make_preset(id);

  std::function<Proof(const NativeProof&)> go =
      [&](const NativeProof& q) -> Proof {
    std::vector<Proof> prems;
    for (const NativeProof& r : q.premises()) prems.push_back(go(r));
    const NativeRule& rule = q.rule();
    const Sequent& target = q.conclusion();

    auto direct = [&](Rule r) {
      return with_order(Proof::infer(inst, std::move(r), std::move(prems)),
                        target);
    };

    if (const auto* ax = std::get_if<NAxRule>(&rule))
      return direct(AxRule{ax->formula});
    if (const auto* cut = std::get_if<NCutRule>(&rule))
      return direct(CutRule{cut->formula, cut->left_index, cut->right_index});
    if (const auto* ex = std::get_if<NExchangeRule>(&rule))
      return direct(ExchangeRule{ex->perm});
    if (const auto* t = std::get_if<NTensorRule>(&rule))
      return direct(TensorRule{t->left_index, t->right_index});
    if (const auto* pa = std::get_if<NParrRule>(&rule))
      return direct(ParrRule{pa->first_index, pa->second_index});
    if (std::holds_alternative<NOneRule>(rule)) return direct(OneRule{});
    if (std::holds_alternative<NBotRule>(rule)) return direct(BotRule{});
    if (const auto* w = std::get_if<NWithRule>(&rule))
      return direct(WithRule{w->left_index, w->right_index});
    if (const auto* p1 = std::get_if<NPlus1Rule>(&rule))
      return direct(Plus1Rule{p1->index, p1->right});
    if (const auto* p2 = std::get_if<NPlus2Rule>(&rule))
      return direct(Plus2Rule{p2->index, p2->left});
    if (const auto* top = std::get_if<NTopRule>(&rule))
      return direct(TopRule{top->context});

    if (const auto* pf = std::get_if<NPromFRule>(&rule))
      return direct(PromRule{kBullet, pf->index});
    if (const auto* dig = std::get_if<NDigRule>(&rule))
      return direct(DgRule{kBullet, kBullet, kBullet, dig->index});
    if (const auto* de = std::get_if<NDeRule>(&rule))
      return direct(DeRule{de->sig, de->index});
    if (const auto* wk = std::get_if<NWkRule>(&rule))
      return direct(CoRule{{}, wk->sig, {}, wk->formula});
    if (const auto* co = std::get_if<NCoRule>(&rule))
      return direct(CoRule{{co->sig, co->sig},
                           co->sig,
                           {co->first_index, co->second_index},
                           {}});
    if (const auto* sb = std::get_if<NSubsRule>(&rule))
      return direct(CoRule{{sb->from}, sb->to, {sb->index}, {}});
    if (const auto* cp = std::get_if<NCoPlusRule>(&rule))
      return direct(CoRule{{cp->first, cp->second},
                           sys.add(cp->first, cp->second),
                           {cp->first_index, cp->second_index},
                           {}});
    if (const auto* pu = std::get_if<NPromURule>(&rule))
      return direct(PromRule{kBullet, pu->index});

    if (const auto* mpx = std::get_if<NMpxRule>(&rule)) {
      // mpx_k is a burst of soft derelictions followed by one contraction
      if (mpx->indices.empty())
        return direct(CoRule{{}, kBullet, {}, mpx->weakened});
      Proof p = std::move(prems[0]);
      std::vector<std::size_t> pos = mpx->indices;
      for (std::size_t i = 0; i < pos.size(); ++i) {
        std::size_t at = pos[i];
        p = Proof::infer(inst, DeRule{kStar, at}, {std::move(p)});
        for (std::size_t j = 0; j < pos.size(); ++j)
          if (j != i) pos[j] = detail::renumber({at}, 1, pos[j]);
        pos[i] = 0;
      }
      Proof out = Proof::infer(
          inst,
          CoRule{std::vector<Sig>(mpx->indices.size(), kStar), kBullet, pos,
                 {}},
          {std::move(p)});
      return with_order(std::move(out), target);
    }

    // the promotions that decompose into functorial promotion plus digging
    // or subsumption on each context formula
    auto prom_then = [&](const Sig& sig, std::size_t index,
                         const std::function<Rule(std::size_t, const Formula&)>&
                             fixup) -> Proof {
      const Sequent& prem_concl = q.premises()[0].conclusion();
      Proof p = Proof::infer(inst, PromRule{sig, index}, {std::move(prems[0])});
      // context formulas now sit at 1..n in premise order
      std::vector<std::size_t> pos;
      std::vector<Formula> orig;
      std::size_t t = 1;
      for (std::size_t j = 0; j < prem_concl.size(); ++j) {
        if (j == index) continue;
        pos.push_back(t++);
        orig.push_back(prem_concl[j]);
      }
      for (std::size_t m = 0; m < pos.size(); ++m) {
        Rule r = fixup(pos[m], orig[m]);
        if (std::holds_alternative<OneRule>(r)) continue;  // no fixup needed
        std::size_t at = pos[m];
        p = Proof::infer(inst, std::move(r), {std::move(p)});
        for (std::size_t j = m + 1; j < pos.size(); ++j)
          pos[j] = detail::renumber({at}, 1, pos[j]);
      }
      return with_order(std::move(p), target);
    };

    if (const auto* pl = std::get_if<NPromLLRule>(&rule))
      return prom_then(kBullet, pl->index,
                       [&](std::size_t at, const Formula&) -> Rule {
                         return DgRule{kBullet, kBullet, kBullet, at};
                       });
    if (const auto* sp = std::get_if<NShiftPosRule>(&rule))
      return prom_then(kStar, sp->index,
                       [&](std::size_t at, const Formula&) -> Rule {
                         return DgRule{kStar, kStar, kStar, at};
                       });
    if (const auto* su = std::get_if<NPromSubRule>(&rule))
      return prom_then(su->sig, su->index,
                       [&](std::size_t at, const Formula& f) -> Rule {
                         return DgRule{su->sig, f.sig(), f.sig(), at};
                       });
    if (const auto* pd = std::get_if<NPromDotRule>(&rule))
      return prom_then(pd->sig, pd->index,
                       [&](std::size_t at, const Formula& f) -> Rule {
                         return DgRule{pd->sig, f.sig(),
                                       sys.dot(pd->sig, f.sig()), at};
                       });
    if (const auto* ps = std::get_if<NPromSecRule>(&rule)) {
      std::size_t slot = 0;
      return prom_then(kStar, ps->index,
                       [&](std::size_t at, const Formula&) -> Rule {
                         Sig k = ps->kinds[slot++];
                         if (k == kStar) return OneRule{};  // stays starred
                         return CoRule{{kStar}, kBullet, {at}, {}};
                       });
    }
    if (const auto* sn = std::get_if<NShiftNegRule>(&rule))
      return direct(DeRule{kStar, sn->index});

    throw InternalError("encode_native: unhandled rule " +
                        native_rule_name(rule));
  };

  Proof out = go(np);
  CheckReport check = check_proof(inst, out);
  if (!check)
    throw InternalError("encode_native: output invalid at " + check.path +
                        ": " + check.message);
  if (native_cut_free(np) && !cut_free(out))
    throw InternalError("encode_native: cut-freeness lost");
  return out;
}

namespace detail {

// Node-wise decoding after the preprocessing transformation. `tr` is the
// formula translation (identity except for the soft system's erasure).
class Decoder {
 public:
  Decoder(const NativeSystem& sys, const Instance& inst)
      : sys_(sys), inst_(inst), kind_(sys.id.kind) {}

  NativeProof decode(const Proof& p) {
    std::vector<NativeProof> prems;
    for (const Proof& q : p.premises()) prems.push_back(decode(q));
    const Rule& rule = p.rule();
    Sequent target = tr(p.conclusion());

    auto direct = [&](NativeRule r) {
      return native_with_order(
          sys_, NativeProof::infer(sys_, std::move(r), std::move(prems)),
          target);
    };
    auto pass = [&]() {
      return native_with_order(sys_, std::move(prems[0]), target);
    };

    using Kind = PresetId::Kind;

    if (const auto* ax = std::get_if<AxRule>(&rule))
      return direct(NAxRule{tr(ax->formula)});
    if (const auto* cut = std::get_if<CutRule>(&rule))
      return direct(
          NCutRule{tr(cut->formula), cut->left_index, cut->right_index});
    if (const auto* ex = std::get_if<ExchangeRule>(&rule))
      return direct(NExchangeRule{ex->perm});
    if (const auto* t = std::get_if<TensorRule>(&rule))
      return direct(NTensorRule{t->left_index, t->right_index});
    if (const auto* pa = std::get_if<ParrRule>(&rule))
      return direct(NParrRule{pa->first_index, pa->second_index});
    if (std::holds_alternative<OneRule>(rule)) return direct(NOneRule{});
    if (std::holds_alternative<BotRule>(rule)) return direct(NBotRule{});
    if (const auto* w = std::get_if<WithRule>(&rule))
      return direct(NWithRule{w->left_index, w->right_index});
    if (const auto* p1 = std::get_if<Plus1Rule>(&rule))
      return direct(NPlus1Rule{p1->index, tr(p1->right)});
    if (const auto* p2 = std::get_if<Plus2Rule>(&rule))
      return direct(NPlus2Rule{p2->index, tr(p2->left)});
    if (const auto* top = std::get_if<TopRule>(&rule))
      return direct(NTopRule{tr(top->context)});

    if (const auto* de = std::get_if<DeRule>(&rule)) {
      switch (kind_) {
        case Kind::SLL:
          return pass();  // the soft dereliction erases
        case Kind::Shift:
          if (de->sig == kStar) return direct(NShiftNegRule{de->index});
          return direct(NDeRule{de->sig, de->index});
        default:
          return direct(NDeRule{de->sig, de->index});
      }
    }

    if (const auto* co = std::get_if<CoRule>(&rule)) {
      std::size_t k = co->froms.size();
      if (kind_ == Kind::SLL)
        return direct(NMpxRule{co->indices, k == 0 ? tr(co->weakened)
                                                   : Formula{}});
      if (k == 0) return direct(NWkRule{co->to, tr(co->weakened)});
      if (k == 1) {
        if (kind_ == Kind::BSLL)
          return direct(NSubsRule{co->froms[0], co->to, co->indices[0]});
        return pass();  // diagonal subsumption is trivial
      }
      if (k == 2) {
        if (kind_ == Kind::BSLL)
          return direct(NCoPlusRule{co->froms[0], co->froms[1], co->indices[0],
                                    co->indices[1]});
        return direct(NCoRule{co->to, co->indices[0], co->indices[1]});
      }
      // wider contractions appear only in the full instance; reduce them to
      // a chain of binary contractions
      NativeProof out = std::move(prems[0]);
      std::vector<std::size_t> cur = co->indices;
      while (cur.size() > 1) {
        out = NativeProof::infer(sys_, NCoRule{co->to, cur[0], cur[1]},
                                 {std::move(out)});
        std::vector<std::size_t> removed{cur[0], cur[1]};
        std::sort(removed.begin(), removed.end());
        std::vector<std::size_t> next{0};
        for (std::size_t i = 2; i < cur.size(); ++i)
          next.push_back(renumber(removed, 1, cur[i]));
        cur = std::move(next);
      }
      return native_with_order(sys_, std::move(out), target);
    }

    if (const auto* dg = std::get_if<DgRule>(&rule)) {
      if (kind_ == Kind::LLFunctorial) return direct(NDigRule{dg->index});
      throw ShapeError("decode: digging is not in the image of " +
                       sys_.id.name());
    }

    if (const auto* pr = std::get_if<PromRule>(&rule)) {
      switch (kind_) {
        case Kind::LLFunctorial:
        case Kind::ELL:
          return direct(NPromFRule{pr->index});
        case Kind::SLL:
          if (pr->sig == kBullet) return direct(NPromFRule{pr->index});
          return pass();  // the soft promotion erases
        default:
          throw ShapeError(
              "decode: functorial promotion survived preprocessing for " +
              sys_.id.name());
      }
    }

    if (const auto* pg = std::get_if<PromGirardRule>(&rule)) {
      switch (kind_) {
        case Kind::LLFull:
          return direct(NPromLLRule{pg->index});
        case Kind::Shift:
          if (pg->sig == kStar) return direct(NShiftPosRule{pg->index});
          return direct(NPromLLRule{pg->index});
        case Kind::SeLL:
          return direct(NPromSubRule{pg->sig, pg->index});
        case Kind::BSLL:
          return direct(NPromDotRule{pg->sig, pg->index});
        case Kind::LLFunctorial: {
          // decompose back into functorial promotion plus digging
          if (pg->targets.empty()) return direct(NPromFRule{pg->index});
          NativeProof out = NativeProof::infer(sys_, NPromFRule{pg->index},
                                               {std::move(prems[0])});
          std::size_t n = pg->targets.size();
          std::vector<std::size_t> pos(n);
          for (std::size_t m = 0; m < n; ++m) pos[m] = m + 1;
          for (std::size_t m = 0; m < n; ++m) {
            std::size_t at = pos[m];
            out = NativeProof::infer(sys_, NDigRule{at}, {std::move(out)});
            for (std::size_t j = m + 1; j < n; ++j)
              pos[j] = renumber({at}, 1, pos[j]);
          }
          return native_with_order(sys_, std::move(out), target);
        }
        case Kind::ELL:
        case Kind::SLL:
          if (pg->targets.empty()) {
            if (kind_ == Kind::SLL && pg->sig == kStar) return pass();
            return direct(NPromFRule{pg->index});
          }
          throw ShapeError("decode: Girard promotion is not in the image of " +
                           sys_.id.name());
        default:
          throw ShapeError("decode: Girard promotion is not in the image of " +
                           sys_.id.name());
      }
    }

    if (const auto* po = std::get_if<PromOrderedRule>(&rule)) {
      if (kind_ == Kind::LLL) {
        if (po->sig == kBullet) return direct(NPromURule{po->index});
        return direct(NPromSecRule{po->index, po->targets});
      }
      throw ShapeError("decode: ordered promotion is not in the image of " +
                       sys_.id.name());
    }

    throw InternalError("decode: unhandled rule " + rule_name(rule));
  }

 private:
  Formula tr(const Formula& f) const {
    return kind_ == PresetId::Kind::SLL ? erase_star(f) : f;
  }
  Sequent tr(const Sequent& g) const {
    return kind_ == PresetId::Kind::SLL ? erase_star(g) : g;
  }

  const NativeSystem& sys_;
  const Instance& inst_;
  PresetId::Kind kind_;
};

}  // namespace detail

// Decodes a proof of the preset instance into the native system. The
// Girard-style systems are girardized first and the light system desubsumed,
// per each embedding's strategy; cut-freeness is preserved. The decoded
// conclusion is the (renamed or erased) image of the input's.
inline NativeProof decode_native(const PresetId& id, const Proof& p,
                                 TransformReport* report = nullptr) {
  const Instance inst = make_preset(id);
  CheckReport valid = check_proof(inst, p);
  if (!valid)
    throw PreconditionError("decode_native: input invalid at " + valid.path +
                            ": " + valid.message);
  Proof prepared = p;
  using Kind = PresetId::Kind;
  switch (id.kind) {
    case Kind::LLFull:
    case Kind::Shift:
    case Kind::SeLL:
    case Kind::BSLL:
      prepared = girardize(inst, p, report);
      break;
    case Kind::LLL:
      prepared = eliminate_subsumption(inst, p, report);
      break;
    default:
      break;
  }
  const NativeSystem sys = make_native_system(id);
  detail::Decoder decoder(sys, inst);
  NativeProof out = decoder.decode(prepared);
  CheckReport nc = check_native(sys, out);
  if (!nc)
    throw InternalError("decode_native: output invalid at " + nc.path + ": " +
                        nc.message);
  if (cut_free(p) && !native_cut_free(out))
    throw InternalError("decode_native: cut-freeness lost");
  return out;
}

}  // namespace superll

#pragma once

#include <map>

#include "presets.hpp"
#include "proof.hpp"

namespace superll {

struct TransformReport {
  std::size_t input_size = 0;
  std::size_t output_size = 0;
  std::map<std::string, std::size_t> steps;  // per case label
  std::size_t witness_queries = 0;

  void step(const char* label) { ++steps[label]; }
};

namespace detail {

// New positions of the original entries of a sequent after some positions
// were replaced in place by blocks of `block_len` formulas each. The start of
// a block is unaffected by its own expansion, so these positions are valid
// both before and after the block at that position is rewritten, as long as
// all earlier blocks already were.
struct Expansion {
  std::vector<std::size_t> start;

  Expansion(std::size_t orig_len, std::vector<std::size_t> block_positions,
            std::size_t block_len) {
    std::sort(block_positions.begin(), block_positions.end());
    start.resize(orig_len);
    std::ptrdiff_t shift = 0;
    std::size_t b = 0;
    for (std::size_t i = 0; i < orig_len; ++i) {
      start[i] = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + shift);
      if (b < block_positions.size() && block_positions[b] == i) {
        ++b;
        shift += static_cast<std::ptrdiff_t>(block_len) - 1;
      }
    }
  }

  std::size_t new_pos(std::size_t i) const { return start.at(i); }
};

// Position of `r` after a rule removed `removed` premise positions and put
// `prepended` principal formulas in front.
inline std::size_t renumber(const std::vector<std::size_t>& removed_sorted,
                            std::size_t prepended, std::size_t r) {
  std::size_t below = 0;
  for (std::size_t x : removed_sorted) {
    if (x == r) throw InternalError("renumber: position was consumed");
    if (x < r) ++below;
  }
  return prepended + r - below;
}

// ?_{sigs} D for every D in delta, in order.
inline Sequent quest_block(const std::vector<Sig>& sigs, const Sequent& delta) {
  Sequent out;
  out.reserve(delta.size());
  for (const Formula& d : delta) {
    Formula f = d;
    for (std::size_t i = sigs.size(); i-- > 0;) f = Formula::quest(sigs[i], f);
    out.push_back(f);
  }
  return out;
}

inline Sequent splice_blocks(const Sequent& s,
                             std::vector<std::pair<std::size_t, Sequent>> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Sequent out;
  std::size_t b = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (b < blocks.size() && blocks[b].first == i) {
      for (const Formula& f : blocks[b].second) out.push_back(f);
      ++b;
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

inline bool acting_on(const Rule& r, std::size_t pos) {
  if (is_promotion(r)) return true;
  if (std::holds_alternative<AxRule>(r) || std::holds_alternative<OneRule>(r))
    return true;
  if (is_exchange(r) || is_cut(r)) return false;
  return pos == 0;
}

}  // namespace detail

// In-place replacement continuation: given a cut-free proof carrying formula
// A at `index`, produce a cut-free proof of the same sequent with that
// occurrence replaced by the substitution context, spliced in place.
using Replacer = std::function<Proof(const Proof&, std::size_t index)>;

struct SubstOcc {
  std::size_t pos;        // occurrence position in the conclusion
  std::vector<Sig> sigs;  // non-empty ?-prefix of the occurrence
};

namespace detail {

// Substitution engine. `p` is a cut-free valid proof whose conclusion carries
// ?_{sigs_j} A at pos_j for every tracked occurrence; the result proves the
// same sequent with each occurrence expanded in place to ?_{sigs_j} Delta.
// Recursion follows the last rule: context rules are rebuilt, promotion
// splits occurrences into singleton prefixes (handled by the replacer) and
// longer ones (recursed), ax / de / co / dg re-derive their rule once per
// element of Delta.
inline Proof substitute_at(const Instance& inst, const Formula& a,
                           const Sequent& delta, std::vector<SubstOcc> occs,
                           const Proof& p, const Replacer& replacer,
                           TransformReport& report) {
  if (occs.empty()) return p;

  const Sequent& concl = p.conclusion();
  for (const SubstOcc& occ : occs) {
    if (occ.sigs.empty())
      throw InternalError("substitute: empty signature list");
    Formula expected = a;
    for (std::size_t i = occ.sigs.size(); i-- > 0;)
      expected = Formula::quest(occ.sigs[i], expected);
    if (Formula::compare(concl.at(occ.pos), expected) != 0)
      throw InternalError("substitute: occurrence mismatch at position " +
                          std::to_string(occ.pos));
  }

  std::vector<std::pair<std::size_t, Sequent>> target_blocks;
  for (const SubstOcc& occ : occs)
    target_blocks.emplace_back(occ.pos, quest_block(occ.sigs, delta));
  Sequent target = splice_blocks(concl, target_blocks);

  auto require_p_fact = [&](const Sig& e) {
    if (!inst.p(delta.size(), e))
      throw PreconditionError("substitute: p(" + std::to_string(delta.size()) +
                              "," + e.name + ") does not hold");
  };

  const Rule& rule = p.rule();

  // Exchange: trace the occurrences into the premise and restore the order
  // afterwards.
  if (const auto* ex = std::get_if<ExchangeRule>(&rule)) {
    std::vector<SubstOcc> inner;
    for (const SubstOcc& occ : occs)
      inner.push_back({ex->perm[occ.pos], occ.sigs});
    Proof q = substitute_at(inst, a, delta, std::move(inner), p.premises()[0],
                            replacer, report);
    return with_order(std::move(q), target);
  }

  if (std::holds_alternative<CutRule>(rule))
    throw InternalError("substitute: input proof is not cut-free");

  // Promotion: all occurrences start with the promoted signature. Singleton
  // prefixes expose bare copies of A in the premise, replaced by the
  // continuation; longer prefixes are recursed with their tails. The new
  // width delta.size()*s + |ctx| is covered by iterating ce1.
  if (const auto* pr = std::get_if<PromRule>(&rule)) {
    report.step("subst-prom");
    const Proof& prem = p.premises()[0];
    auto premise_pos = [&](std::size_t q) {
      std::size_t m = q - 1;
      return m + (m >= pr->index ? 1 : 0);
    };
    std::vector<SubstOcc> inner;
    std::vector<std::size_t> bare, block_positions;
    for (const SubstOcc& occ : occs) {
      if (occ.pos == 0)
        throw InternalError("substitute: occurrence at a promoted formula");
      if (occ.sigs[0] != pr->sig)
        throw InternalError("substitute: occurrence prefix mismatch");
      std::size_t pp = premise_pos(occ.pos);
      block_positions.push_back(pp);
      if (occ.sigs.size() >= 2)
        inner.push_back({pp, {occ.sigs.begin() + 1, occ.sigs.end()}});
      else
        bare.push_back(pp);
    }
    Proof q = substitute_at(inst, a, delta, std::move(inner), prem, replacer,
                            report);
    // Positions under the combined expansion are exact at each step: when a
    // bare copy is replaced (ascending), every block before it has already
    // expanded and none after it matters.
    Expansion exp(prem.conclusion().size(), block_positions, delta.size());
    std::sort(bare.begin(), bare.end());
    for (std::size_t bp : bare) {
      q = replacer(q, exp.new_pos(bp));
      report.step("subst-replacer");
    }
    require_p_fact(pr->sig);  // the M_s fact p(s*|delta| + |ctx|, e)
    Proof out = Proof::infer(inst, PromRule{pr->sig, exp.new_pos(pr->index)},
                             {std::move(q)});
    return with_order(std::move(out), target);
  }

  if (is_promotion(rule))
    throw InternalError(
        "substitute: non-functorial promotion in a cut-elimination input");

  // Ax on an occurrence: |- ?_{sigs} A, !_{sigs} A^. Rebuilt from an atomic
  // start by the continuation and one promotion per prefix signature.
  if (std::get_if<AxRule>(&rule) != nullptr &&
      (occs.size() != 1 ||
       (occs[0].pos != 0 && occs[0].pos != 1))) {
    throw InternalError("substitute: malformed axiom occurrence");
  }
  if (std::get_if<AxRule>(&rule) != nullptr) {
    report.step("subst-ax");
    const SubstOcc& occ = occs[0];
    Proof q = Proof::infer(inst, AxRule{a}, {});  // |- A, A^
    q = replacer(q, 0);                           // |- Delta, A^
    report.step("subst-replacer");
    std::size_t bang_pos = delta.size();
    for (std::size_t i = occ.sigs.size(); i-- > 0;) {
      require_p_fact(occ.sigs[i]);
      q = Proof::infer(inst, PromRule{occ.sigs[i], bang_pos}, {std::move(q)});
      bang_pos = 0;
    }
    return with_order(std::move(q), target);
  }

  // Rules acting on an occurrence at the principal position.
  std::optional<std::size_t> principal_occ;
  for (std::size_t i = 0; i < occs.size(); ++i)
    if (occs[i].pos == 0 && acting_on(rule, 0)) principal_occ = i;

  if (principal_occ &&
      (std::holds_alternative<DeRule>(rule) ||
       std::holds_alternative<CoRule>(rule) ||
       std::holds_alternative<DgRule>(rule))) {
    const SubstOcc main = occs[*principal_occ];
    std::vector<Sig> tail(main.sigs.begin() + 1, main.sigs.end());
    const Proof& prem = p.premises()[0];
    auto sources = context_sources(rule, {prem.conclusion()});
    std::vector<SubstOcc> inner;
    std::vector<std::size_t> block_positions;
    for (std::size_t i = 0; i < occs.size(); ++i) {
      if (i == *principal_occ) continue;
      const auto& src = sources.at(occs[i].pos);
      inner.push_back({src[0].index, occs[i].sigs});
      block_positions.push_back(src[0].index);
    }

    if (const auto* de = std::get_if<DeRule>(&rule)) {
      report.step("subst-de");
      std::vector<std::size_t> tracked{de->index};
      block_positions.push_back(de->index);
      std::optional<std::size_t> bare;
      if (!tail.empty())
        inner.push_back({de->index, tail});
      else
        bare = de->index;
      Proof q = substitute_at(inst, a, delta, std::move(inner), prem, replacer,
                              report);
      Expansion exp(prem.conclusion().size(), block_positions, delta.size());
      std::size_t block_start = exp.new_pos(de->index);
      if (bare) {
        q = replacer(q, block_start);
        report.step("subst-replacer");
      }
      // one dereliction per element of the block
      std::vector<std::size_t> elems(delta.size());
      for (std::size_t m = 0; m < delta.size(); ++m)
        elems[m] = block_start + m;
      for (std::size_t m = 0; m < delta.size(); ++m) {
        std::size_t at = elems[m];
        q = Proof::infer(inst, DeRule{de->sig, at}, {std::move(q)});
        for (std::size_t j = m + 1; j < delta.size(); ++j)
          elems[j] = renumber({at}, 1, elems[j]);
      }
      return with_order(std::move(q), target);
    }

    if (const auto* co = std::get_if<CoRule>(&rule)) {
      report.step("subst-co");
      std::size_t k = co->froms.size();
      for (const Sig& e : co->froms) require_p_fact(e);  // ce2 instances
      for (std::size_t m = 0; m < k; ++m) {
        std::vector<Sig> lst{co->froms[m]};
        lst.insert(lst.end(), tail.begin(), tail.end());
        inner.push_back({co->indices[m], std::move(lst)});
        block_positions.push_back(co->indices[m]);
      }
      Proof q = substitute_at(inst, a, delta, std::move(inner), prem, replacer,
                              report);
      Expansion exp(prem.conclusion().size(), block_positions, delta.size());
      // per element of Delta, contract the m-th formula of every block
      std::vector<std::vector<std::size_t>> elems(
          k, std::vector<std::size_t>(delta.size()));
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t m = 0; m < delta.size(); ++m)
          elems[j][m] = exp.new_pos(co->indices[j]) + m;
      for (std::size_t m = 0; m < delta.size(); ++m) {
        std::vector<std::size_t> actives(k);
        for (std::size_t j = 0; j < k; ++j) actives[j] = elems[j][m];
        Formula weakened;
        if (k == 0) {
          Formula w = delta[m];
          for (std::size_t i = tail.size(); i-- > 0;)
            w = Formula::quest(tail[i], w);
          weakened = w;
        }
        q = Proof::infer(inst, CoRule{co->froms, co->to, actives, weakened},
                         {std::move(q)});
        std::vector<std::size_t> removed = actives;
        std::sort(removed.begin(), removed.end());
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t mm = m + 1; mm < delta.size(); ++mm)
            elems[j][mm] = renumber(removed, 1, elems[j][mm]);
      }
      return with_order(std::move(q), target);
    }

    const auto* dg = std::get_if<DgRule>(&rule);
    report.step("subst-dg");
    require_p_fact(dg->outer);  // ce3 instances
    require_p_fact(dg->inner);
    std::vector<Sig> lst{dg->outer, dg->inner};
    lst.insert(lst.end(), tail.begin(), tail.end());
    inner.push_back({dg->index, std::move(lst)});
    block_positions.push_back(dg->index);
    Proof q = substitute_at(inst, a, delta, std::move(inner), prem, replacer,
                            report);
    Expansion exp(prem.conclusion().size(), block_positions, delta.size());
    std::vector<std::size_t> elems(delta.size());
    for (std::size_t m = 0; m < delta.size(); ++m)
      elems[m] = exp.new_pos(dg->index) + m;
    for (std::size_t m = 0; m < delta.size(); ++m) {
      std::size_t at = elems[m];
      q = Proof::infer(inst, DgRule{dg->outer, dg->inner, dg->to, at},
                       {std::move(q)});
      for (std::size_t j = m + 1; j < delta.size(); ++j)
        elems[j] = renumber({at}, 1, elems[j]);
    }
    return with_order(std::move(q), target);
  }

  // Premise-less context: occurrences inside a T context are replaced
  // directly.
  if (const auto* top = std::get_if<TopRule>(&rule)) {
    report.step("subst-context");
    std::vector<std::pair<std::size_t, Sequent>> blocks;
    for (const SubstOcc& occ : occs) {
      if (occ.pos == 0)
        throw InternalError("substitute: occurrence at the T formula");
      blocks.emplace_back(occ.pos - 1, quest_block(occ.sigs, delta));
    }
    Sequent ctx = splice_blocks(top->context, std::move(blocks));
    return Proof::infer(inst, TopRule{std::move(ctx)}, {});
  }

  if (std::holds_alternative<OneRule>(rule))
    throw InternalError("substitute: occurrence in an empty context");

  // Context rule: trace occurrences into the premises, rebuild the rule with
  // indices adjusted for the expanded blocks.
  report.step("subst-context");
  auto prem_concls = [&] {
    std::vector<Sequent> v;
    for (const Proof& q : p.premises()) v.push_back(q.conclusion());
    return v;
  }();
  auto sources = context_sources(rule, prem_concls);
  std::vector<std::vector<SubstOcc>> inner(p.premises().size());
  std::vector<std::vector<std::size_t>> blocks(p.premises().size());
  for (const SubstOcc& occ : occs) {
    const auto& srcs = sources.at(occ.pos);
    if (srcs.empty())
      throw InternalError("substitute: occurrence at a principal position of " +
                          rule_name(rule));
    for (const CtxSource& src : srcs) {
      inner[src.premise].push_back({src.index, occ.sigs});
      blocks[src.premise].push_back(src.index);
    }
  }
  std::vector<Proof> new_prems;
  std::vector<Expansion> exps;
  for (std::size_t i = 0; i < p.premises().size(); ++i) {
    exps.emplace_back(prem_concls[i].size(), blocks[i], delta.size());
    new_prems.push_back(substitute_at(inst, a, delta, std::move(inner[i]),
                                      p.premises()[i], replacer, report));
  }

  Rule adjusted = rule;
  if (auto* t = std::get_if<TensorRule>(&adjusted)) {
    t->left_index = exps[0].new_pos(t->left_index);
    t->right_index = exps[1].new_pos(t->right_index);
  } else if (auto* w = std::get_if<WithRule>(&adjusted)) {
    w->left_index = exps[0].new_pos(w->left_index);
    w->right_index = exps[1].new_pos(w->right_index);
  } else if (auto* pa = std::get_if<ParrRule>(&adjusted)) {
    pa->first_index = exps[0].new_pos(pa->first_index);
    pa->second_index = exps[0].new_pos(pa->second_index);
  } else if (auto* p1 = std::get_if<Plus1Rule>(&adjusted)) {
    p1->index = exps[0].new_pos(p1->index);
  } else if (auto* p2 = std::get_if<Plus2Rule>(&adjusted)) {
    p2->index = exps[0].new_pos(p2->index);
  } else if (auto* de = std::get_if<DeRule>(&adjusted)) {
    de->index = exps[0].new_pos(de->index);
  } else if (auto* co = std::get_if<CoRule>(&adjusted)) {
    for (std::size_t& idx : co->indices) idx = exps[0].new_pos(idx);
  } else if (auto* dg = std::get_if<DgRule>(&adjusted)) {
    dg->index = exps[0].new_pos(dg->index);
  }
  Proof out = Proof::infer(inst, adjusted, std::move(new_prems));
  return with_order(std::move(out), target);
}

}  // namespace detail

// The hereditary replacement of ?-prefixed occurrences of A by the context
// Delta: from a cut-free proof of |- ?_{l1} A, ..., ?_{ls} A, G (the
// occurrences are the first s formulas) to a cut-free proof of
// |- ?_{l1} Delta, ..., ?_{ls} Delta, G. The replacer must map any cut-free
// proof of |- A, G' to a cut-free proof of |- Delta, G'.
inline Proof substitute(const Instance& inst, const Formula& a,
                        const Sequent& delta,
                        const std::vector<std::vector<Sig>>& lists,
                        const Proof& p,
                        const std::function<Proof(const Proof&)>& replacer,
                        TransformReport* report = nullptr) {
  TransformReport local;
  TransformReport& rep = report ? *report : local;
  for (const auto& lst : lists) {
    if (lst.empty())
      throw PreconditionError("substitute: signature lists must be non-empty");
    for (const Sig& e : lst)
      if (!inst.p(delta.size(), e))
        throw PreconditionError("substitute: p(" +
                                std::to_string(delta.size()) + "," + e.name +
                                ") does not hold");
  }
  std::vector<SubstOcc> occs;
  for (std::size_t j = 0; j < lists.size(); ++j) occs.push_back({j, lists[j]});
  Replacer in_place = [&](const Proof& q, std::size_t idx) -> Proof {
    Sequent fronted{a};
    Sequent rest = erased(q.conclusion(), idx);
    fronted.insert(fronted.end(), rest.begin(), rest.end());
    Proof moved = with_order(q, fronted);
    Proof replaced = replacer(moved);
    Sequent expect = delta;
    expect.insert(expect.end(), rest.begin(), rest.end());
    if (!sequent_perm_eq(replaced.conclusion(), expect))
      throw InternalError("substitute: replacer produced " +
                          to_string(replaced.conclusion()) + ", expected " +
                          to_string(expect));
    Sequent target = detail::splice_blocks(q.conclusion(), {{idx, delta}});
    return with_order(std::move(replaced), target);
  };
  return detail::substitute_at(inst, a, delta, std::move(occs), p, in_place,
                               rep);
}

namespace detail {

// One cut between cut-free proofs: left carries A at li, right carries A^ at
// ri; the result is a cut-free proof of exactly
// (left minus li) ++ (right minus ri). Recursion is on the lexicographic
// measure (size of A, raw size of left + right).
inline Proof join_cut(const Instance& inst, const Formula& a, Proof left,
                      std::size_t li, Proof right, std::size_t ri,
                      TransformReport& report, std::size_t hint_fsize,
                      std::size_t hint_psum);

struct JoinCtx {
  const Instance& inst;
  TransformReport& report;
  std::size_t fsize, psum;  // measure of the current call, for the guard

  Proof recurse(const Formula& a, Proof l, std::size_t li, Proof r,
                std::size_t ri) const {
    return join_cut(inst, a, std::move(l), li, std::move(r), ri, report, fsize,
                    psum);
  }
};

// Commutation: the last rule of `side` does not act on position `pos`; trace
// the cut formula into its premises, join there, and re-apply the rule.
// `side_is_left` fixes the output order before the final fix-up.
inline Proof commute(const JoinCtx& ctx, const Formula& a, const Proof& side,
                     std::size_t pos, const Proof& other, std::size_t opos,
                     bool side_is_left, const Sequent& target) {
  ctx.report.step("commute");
  const Rule& rule = side.rule();

  if (const auto* top = std::get_if<TopRule>(&rule)) {
    Sequent ctx_seq = erased(top->context, pos - 1);
    Sequent delta = erased(other.conclusion(), opos);
    ctx_seq.insert(ctx_seq.end(), delta.begin(), delta.end());
    return with_order(
        Proof::infer(ctx.inst, TopRule{std::move(ctx_seq)}, {}), target);
  }

  std::vector<Sequent> prem_concls;
  for (const Proof& q : side.premises()) prem_concls.push_back(q.conclusion());
  auto sources = context_sources(rule, prem_concls);
  const auto& srcs = sources.at(pos);
  if (srcs.empty())
    throw InternalError("join: no premise source for a non-acting rule " +
                        rule_name(rule));

  std::vector<Proof> new_prems(side.premises().begin(),
                               side.premises().end());
  std::vector<std::optional<std::size_t>> removed(side.premises().size());
  for (const CtxSource& src : srcs) {
    Proof joined =
        side_is_left
            ? ctx.recurse(a, side.premises()[src.premise], src.index, other,
                          opos)
            : ctx.recurse(a, other, opos, side.premises()[src.premise],
                          src.index);
    if (!side_is_left) {
      // reorder to premise-context-first so the rule can be re-applied
      Sequent want = erased(prem_concls[src.premise], src.index);
      Sequent delta = erased(other.conclusion(), opos);
      want.insert(want.end(), delta.begin(), delta.end());
      joined = with_order(std::move(joined), want);
    }
    new_prems[src.premise] = std::move(joined);
    removed[src.premise] = src.index;
  }

  auto adj = [&](std::size_t idx, std::size_t premise) {
    if (!removed[premise]) return idx;
    return idx > *removed[premise] ? idx - 1 : idx;
  };

  Rule adjusted = rule;
  if (auto* t = std::get_if<TensorRule>(&adjusted)) {
    t->left_index = adj(t->left_index, 0);
    t->right_index = adj(t->right_index, 1);
  } else if (auto* w = std::get_if<WithRule>(&adjusted)) {
    w->left_index = adj(w->left_index, 0);
    w->right_index = adj(w->right_index, 1);
  } else if (auto* pa = std::get_if<ParrRule>(&adjusted)) {
    pa->first_index = adj(pa->first_index, 0);
    pa->second_index = adj(pa->second_index, 0);
  } else if (auto* p1 = std::get_if<Plus1Rule>(&adjusted)) {
    p1->index = adj(p1->index, 0);
  } else if (auto* p2 = std::get_if<Plus2Rule>(&adjusted)) {
    p2->index = adj(p2->index, 0);
  } else if (auto* de = std::get_if<DeRule>(&adjusted)) {
    de->index = adj(de->index, 0);
  } else if (auto* co = std::get_if<CoRule>(&adjusted)) {
    for (std::size_t& idx : co->indices) idx = adj(idx, 0);
  } else if (auto* dg = std::get_if<DgRule>(&adjusted)) {
    dg->index = adj(dg->index, 0);
  } else if (std::holds_alternative<CutRule>(adjusted)) {
    throw InternalError("join: cut met during commutation");
  }
  Proof out = Proof::infer(ctx.inst, adjusted, std::move(new_prems));
  return with_order(std::move(out), target);
}

inline Proof join_cut(const Instance& inst, const Formula& a, Proof left,
                      std::size_t li, Proof right, std::size_t ri,
                      TransformReport& report, std::size_t hint_fsize,
                      std::size_t hint_psum) {
  std::size_t fsize = formula_size(a);
  std::size_t psum =
      proof_size(left, SizeMode::Raw) + proof_size(right, SizeMode::Raw);
  if (hint_fsize &&
      !(fsize < hint_fsize || (fsize == hint_fsize && psum < hint_psum)))
    throw InternalError("join: termination measure did not decrease");
  JoinCtx ctx{inst, report, fsize, psum};

  if (Formula::compare(left.conclusion().at(li), a) != 0 ||
      Formula::compare(right.conclusion().at(ri), dual(a)) != 0)
    throw InternalError("join: premises do not carry the cut formula");

  Sequent target = concat(erased(left.conclusion(), li),
                          erased(right.conclusion(), ri));

  // exchange peels off, then identity axioms close the cut
  if (const auto* ex = std::get_if<ExchangeRule>(&left.rule())) {
    report.step("commute");
    Proof inner =
        ctx.recurse(a, left.premises()[0], ex->perm[li], right, ri);
    return with_order(std::move(inner), target);
  }
  if (const auto* ex = std::get_if<ExchangeRule>(&right.rule())) {
    report.step("commute");
    Proof inner = ctx.recurse(a, left, li, right.premises()[0], ex->perm[ri]);
    return with_order(std::move(inner), target);
  }
  if (std::holds_alternative<AxRule>(left.rule())) {
    report.step("key-ax");
    return with_order(right, target);
  }
  if (std::holds_alternative<AxRule>(right.rule())) {
    report.step("key-ax");
    return with_order(left, target);
  }

  if (!acting_on(left.rule(), li))
    return commute(ctx, a, left, li, right, ri, true, target);
  if (!acting_on(right.rule(), ri))
    return commute(ctx, a, right, ri, left, li, false, target);

  // both sides act: key cases by the cut formula's main connective
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::One:
    case K::Bot: {
      report.step("key-unit");
      const Proof& bot_side =
          std::holds_alternative<BotRule>(left.rule()) ? left : right;
      return with_order(bot_side.premises()[0], target);
    }
    case K::Tensor:
    case K::Parr: {
      report.step("key-mult");
      bool left_is_tensor = left.conclusion()[li].kind() == K::Tensor;
      const Proof& tside = left_is_tensor ? left : right;
      const Proof& pside = left_is_tensor ? right : left;
      const auto* tr = std::get_if<TensorRule>(&tside.rule());
      const auto* pa = std::get_if<ParrRule>(&pside.rule());
      if (!tr || !pa)
        throw InternalError("join: multiplicative key case shape mismatch");
      const Proof& ta = tside.premises()[0];
      const Proof& tb = tside.premises()[1];
      const Proof& pp = pside.premises()[0];
      Formula a1 = ta.conclusion()[tr->left_index];
      Formula a2 = tb.conclusion()[tr->right_index];
      // cut A1 against the parr premise, then A2 against the result
      Proof j1 = ctx.recurse(a1, ta, tr->left_index, pp, pa->first_index);
      std::size_t s2 = pa->second_index -
                       (pa->second_index > pa->first_index ? 1 : 0);
      std::size_t pos2 = ta.conclusion().size() - 1 + s2;
      Proof j2 = ctx.recurse(a2, tb, tr->right_index, j1, pos2);
      return with_order(std::move(j2), target);
    }
    case K::With:
    case K::Plus: {
      report.step("key-add");
      bool left_is_with = left.conclusion()[li].kind() == K::With;
      const Proof& wside = left_is_with ? left : right;
      const Proof& sside = left_is_with ? right : left;
      const auto* w = std::get_if<WithRule>(&wside.rule());
      if (!w) throw InternalError("join: additive key case shape mismatch");
      if (const auto* p1 = std::get_if<Plus1Rule>(&sside.rule())) {
        const Proof& wa = wside.premises()[0];
        Formula w1 = wa.conclusion()[w->left_index];
        Proof j = ctx.recurse(w1, wa, w->left_index, sside.premises()[0],
                              p1->index);
        return with_order(std::move(j), target);
      }
      if (const auto* p2 = std::get_if<Plus2Rule>(&sside.rule())) {
        const Proof& wb = wside.premises()[1];
        Formula w2 = wb.conclusion()[w->right_index];
        Proof j = ctx.recurse(w2, wb, w->right_index, sside.premises()[0],
                              p2->index);
        return with_order(std::move(j), target);
      }
      throw InternalError("join: additive key case shape mismatch");
    }
    case K::Bang:
    case K::Quest: {
      bool left_is_bang = left.conclusion()[li].kind() == K::Bang;
      const Proof& bside = left_is_bang ? left : right;
      const Proof& qside = left_is_bang ? right : left;
      std::size_t qpos = left_is_bang ? ri : li;
      const auto* pr = std::get_if<PromRule>(&bside.rule());
      if (!pr)
        throw InternalError(
            "join: stuck exponential redex (cut on a non-functorial "
            "promotion)");
      report.step("key-substitute");
      const Proof& prem = bside.premises()[0];
      Formula core = prem.conclusion()[pr->index];  // = A^ of the quest side
      Sequent delta = erased(prem.conclusion(), pr->index);
      Formula body = dual(core);
      Replacer rep = [&, core, delta](const Proof& q, std::size_t idx) {
        Proof inner = join_cut(inst, dual(core), q, idx, prem, pr->index,
                               report, ctx.fsize, ctx.psum);
        Sequent tgt = splice_blocks(q.conclusion(), {{idx, delta}});
        return with_order(std::move(inner), tgt);
      };
      Proof out =
          substitute_at(inst, body, delta,
                        {{qpos, {pr->sig}}}, qside, rep, report);
      return with_order(std::move(out), target);
    }
    default:
      throw InternalError("join: unreachable key case for " +
                          to_string(a));
  }
}

}  // namespace detail

// Cut elimination: the output proves a sequent permutation-equal to the
// input's and contains no cut. Cuts are reduced one at a time, innermost
// first, so every single-cut elimination runs on cut-free premises; each
// rebuilt node re-validates its side conditions on construction.
inline Proof eliminate_cut(const Instance& inst, const Proof& p,
                           TransformReport* report = nullptr,
                           Bounds bounds = {}) {
  if (!inst.proved.cut && !check_cut_axioms(inst, bounds).ok())
    throw PreconditionError(
        "eliminate_cut: the cut-elimination axiom table fails for instance " +
        inst.name);
  CheckReport valid = check_proof(inst, p);
  if (!valid)
    throw PreconditionError("eliminate_cut: input proof invalid at " +
                            valid.path + ": " + valid.message);
  TransformReport local;
  TransformReport& rep = report ? *report : local;
  rep.input_size = proof_size(p, SizeMode::Raw);

  std::function<Proof(const Proof&)> go = [&](const Proof& q) -> Proof {
    std::vector<Proof> prems;
    for (const Proof& r : q.premises()) prems.push_back(go(r));
    if (const auto* cut = std::get_if<CutRule>(&q.rule())) {
      Proof joined =
          detail::join_cut(inst, cut->formula, prems[0], cut->left_index,
                           prems[1], cut->right_index, rep, 0, 0);
      ++rep.steps["cuts-eliminated"];
      return joined;
    }
    return Proof::infer(inst, q.rule(), std::move(prems));
  };
  Proof out = go(p);
  rep.output_size = proof_size(out, SizeMode::Raw);
  if (!cut_free(out)) throw InternalError("eliminate_cut: output has a cut");
  if (!sequent_perm_eq(out.conclusion(), p.conclusion()))
    throw InternalError("eliminate_cut: conclusion changed");
  return out;
}

namespace detail {

// Proof of |- A, A^ built from atomic axioms only; the exponential step is
// the unary promotion granted by the expansion axiom.
inline Proof expand_formula(const Instance& inst, const Formula& f) {
  using K = Formula::Kind;
  Sequent target{f, dual(f)};
  switch (f.kind()) {
    case K::Atom:
      return Proof::infer(inst, AxRule{f}, {});
    case K::DualAtom:
      return with_order(
          Proof::infer(inst, AxRule{Formula::atom(f.atom_name())}, {}), target);
    case K::One:
      return with_order(
          Proof::infer(inst, BotRule{}, {Proof::infer(inst, OneRule{}, {})}),
          target);
    case K::Bot:
      return Proof::infer(inst, BotRule{}, {Proof::infer(inst, OneRule{}, {})});
    case K::Top:
      return Proof::infer(inst, TopRule{{Formula::zero()}}, {});
    case K::Zero:
      return with_order(Proof::infer(inst, TopRule{{Formula::zero()}}, {}),
                        target);
    case K::Tensor: {
      Proof pb = expand_formula(inst, f.left());
      Proof pc = expand_formula(inst, f.right());
      Proof t = Proof::infer(inst, TensorRule{0, 0}, {pb, pc});
      Proof pr = Proof::infer(inst, ParrRule{1, 2}, {t});
      return with_order(std::move(pr), target);
    }
    case K::Parr: {
      Proof pb = with_order(expand_formula(inst, f.left()),
                            {dual(f.left()), f.left()});
      Proof pc = with_order(expand_formula(inst, f.right()),
                            {dual(f.right()), f.right()});
      Proof t = Proof::infer(inst, TensorRule{0, 0}, {pb, pc});
      Proof pr = Proof::infer(inst, ParrRule{1, 2}, {t});
      return with_order(std::move(pr), target);
    }
    case K::With: {
      Proof pb = expand_formula(inst, f.left());
      Proof l = with_order(
          Proof::infer(inst, Plus1Rule{1, dual(f.right())}, {pb}),
          {f.left(), Formula::plus(dual(f.left()), dual(f.right()))});
      Proof pc = expand_formula(inst, f.right());
      Proof r = with_order(
          Proof::infer(inst, Plus2Rule{1, dual(f.left())}, {pc}),
          {f.right(), Formula::plus(dual(f.left()), dual(f.right()))});
      return Proof::infer(inst, WithRule{0, 0}, {l, r});
    }
    case K::Plus: {
      Proof pb = with_order(expand_formula(inst, f.left()),
                            {dual(f.left()), f.left()});
      Proof l = with_order(Proof::infer(inst, Plus1Rule{1, f.right()}, {pb}),
                           {dual(f.left()), f});
      Proof pc = with_order(expand_formula(inst, f.right()),
                            {dual(f.right()), f.right()});
      Proof r = with_order(Proof::infer(inst, Plus2Rule{1, f.left()}, {pc}),
                           {dual(f.right()), f});
      Proof w = Proof::infer(inst, WithRule{0, 0}, {l, r});
      return with_order(std::move(w), target);
    }
    case K::Bang: {
      Proof pb = expand_formula(inst, f.body());
      return Proof::infer(inst, PromRule{f.sig(), 0}, {pb});
    }
    case K::Quest: {
      Proof pb = expand_formula(inst, f.body());
      Proof pr = Proof::infer(inst, PromRule{f.sig(), 1}, {pb});
      return with_order(std::move(pr), target);
    }
  }
  throw InternalError("expand_formula: bad kind");
}

}  // namespace detail

// Axiom expansion: every ax node in the output is atomic. Requires the
// expansion axiom p_1(e) for every signature.
inline Proof expand_axioms(const Instance& inst, const Proof& p,
                           TransformReport* report = nullptr) {
  if (!inst.proved.expansion && !check_expansion_axiom(inst).ok())
    throw PreconditionError(
        "expand_axioms: the expansion axiom fails for instance " + inst.name);
  TransformReport local;
  TransformReport& rep = report ? *report : local;
  rep.input_size = proof_size(p, SizeMode::Raw);
  std::function<Proof(const Proof&)> go = [&](const Proof& q) -> Proof {
    std::vector<Proof> prems;
    for (const Proof& r : q.premises()) prems.push_back(go(r));
    if (const auto* ax = std::get_if<AxRule>(&q.rule())) {
      if (!ax->formula.is_atomic() ||
          ax->formula.kind() == Formula::Kind::DualAtom) {
        rep.step("ax-expanded");
        return detail::expand_formula(inst, ax->formula);
      }
    }
    return Proof::infer(inst, q.rule(), std::move(prems));
  };
  Proof out = go(p);
  rep.output_size = proof_size(out, SizeMode::Raw);
  return out;
}

namespace detail {

// A tracked ?_{outer} ?_{inner} B occurrence being collapsed to ?_{target} B
// where dg(outer, inner, target) holds.
struct DgOcc {
  std::size_t pos;
  Sig outer, inner, target;
};

// Digging admissibility: `p` uses Girard promotion but neither functorial
// promotion nor digging; the result replaces each tracked occurrence,
// migrating the collapse upward until an ax, de, co or Girard promotion
// discharges it through the Girardization witnesses.
inline Proof dg_admissible(const Instance& inst, std::vector<DgOcc> occs,
                           const Proof& p, TransformReport& report) {
  if (occs.empty()) return p;
  const Sequent& concl = p.conclusion();

  for (const DgOcc& occ : occs) {
    const Formula& f = concl.at(occ.pos);
    if (!f.is_quest() || f.sig() != occ.outer || !f.body().is_quest() ||
        f.body().sig() != occ.inner)
      throw InternalError("girardize: tracked occurrence shape mismatch");
  }
  auto collapsed = [&](const DgOcc& occ) {
    return Formula::quest(occ.target, concl[occ.pos].body().body());
  };
  Sequent target = concl;
  for (const DgOcc& occ : occs) target[occ.pos] = collapsed(occ);

  const Rule& rule = p.rule();

  if (const auto* ex = std::get_if<ExchangeRule>(&rule)) {
    std::vector<DgOcc> inner;
    for (const DgOcc& occ : occs)
      inner.push_back({ex->perm[occ.pos], occ.outer, occ.inner, occ.target});
    Proof q = dg_admissible(inst, std::move(inner), p.premises()[0], report);
    return with_order(std::move(q), target);
  }

  if (std::holds_alternative<PromRule>(rule) ||
      std::holds_alternative<PromOrderedRule>(rule) ||
      std::holds_alternative<DgRule>(rule))
    throw InternalError("girardize: " + rule_name(rule) +
                        " inside a digging-admissibility input");

  if (std::holds_alternative<AxRule>(rule)) {
    report.step("dg-adm-ax");
    if (occs.size() != 1)
      throw InternalError("girardize: several occurrences in an axiom");
    const DgOcc& occ = occs[0];
    Formula body = concl[occ.pos].body().body();
    Proof ax =
        Proof::infer(inst, AxRule{Formula::bang(occ.inner, dual(body))}, {});
    // |- !_{inner} B^, ?_{inner} B; then Girard promotion with p_1 from gir1
    Proof pg = Proof::infer(
        inst, PromGirardRule{occ.outer, 0, {occ.target}}, {ax});
    return with_order(std::move(pg), target);
  }

  if (const auto* pg = std::get_if<PromGirardRule>(&rule)) {
    report.step("dg-adm-prom");
    const Proof& prem = p.premises()[0];
    auto premise_pos = [&](std::size_t q) {
      std::size_t m = q - 1;
      return m + (m >= pg->index ? 1 : 0);
    };
    std::vector<DgOcc> inner;
    std::vector<Sig> targets = pg->targets;
    for (const DgOcc& occ : occs) {
      if (occ.pos == 0)
        throw InternalError("girardize: occurrence at a promoted formula");
      std::size_t pp = premise_pos(occ.pos);
      Sig eps = prem.conclusion()[pp].sig();
      WitnessQuery q4{WitnessQuery::Kind::DigAssoc, {},        pg->sig, eps,
                      occ.inner,                    occ.target};
      // gir4: dg(sig,eps,outer) and dg(outer,inner,target) give a middle w
      // with dg(eps,inner,w) and dg(sig,w,target)
      Sig w = find_witness(inst, q4)[0];
      ++report.witness_queries;
      inner.push_back({pp, eps, occ.inner, w});
      targets[occ.pos - 1] = occ.target;
    }
    Proof q = dg_admissible(inst, std::move(inner), prem, report);
    Proof out = Proof::infer(
        inst, PromGirardRule{pg->sig, pg->index, std::move(targets)},
        {std::move(q)});
    return with_order(std::move(out), target);
  }

  std::optional<std::size_t> principal_occ;
  for (std::size_t i = 0; i < occs.size(); ++i)
    if (occs[i].pos == 0 && acting_on(rule, 0)) principal_occ = i;

  if (principal_occ && std::holds_alternative<DeRule>(rule)) {
    report.step("dg-adm-de");
    const DgOcc main = occs[*principal_occ];
    const auto* de = std::get_if<DeRule>(&rule);
    const Proof& prem = p.premises()[0];
    auto sources = context_sources(rule, {prem.conclusion()});
    std::vector<DgOcc> inner;
    for (std::size_t i = 0; i < occs.size(); ++i) {
      if (i == *principal_occ) continue;
      inner.push_back({sources.at(occs[i].pos)[0].index, occs[i].outer,
                       occs[i].inner, occs[i].target});
    }
    Proof q = dg_admissible(inst, std::move(inner), prem, report);
    // gir2 turns the dereliction into a unary contraction on the inner sig
    Proof out = Proof::infer(
        inst, CoRule{{main.inner}, main.target, {de->index}, {}},
        {std::move(q)});
    return with_order(std::move(out), target);
  }

  if (principal_occ && std::holds_alternative<CoRule>(rule)) {
    report.step("dg-adm-co");
    const DgOcc main = occs[*principal_occ];
    const auto* co = std::get_if<CoRule>(&rule);
    const Proof& prem = p.premises()[0];
    WitnessQuery q3{WitnessQuery::Kind::DigThroughCo,
                    co->froms,
                    co->to,
                    main.inner,
                    {},
                    main.target};
    std::vector<Sig> eps_prime = find_witness(inst, q3);
    ++report.witness_queries;
    auto sources = context_sources(rule, {prem.conclusion()});
    std::vector<DgOcc> inner;
    for (std::size_t i = 0; i < occs.size(); ++i) {
      if (i == *principal_occ) continue;
      inner.push_back({sources.at(occs[i].pos)[0].index, occs[i].outer,
                       occs[i].inner, occs[i].target});
    }
    for (std::size_t m = 0; m < co->froms.size(); ++m)
      inner.push_back({co->indices[m], co->froms[m], main.inner, eps_prime[m]});
    Proof q = dg_admissible(inst, std::move(inner), prem, report);
    Formula weakened;
    if (co->froms.empty()) weakened = concl[0].body().body();
    Proof out = Proof::infer(
        inst, CoRule{eps_prime, main.target, co->indices, weakened},
        {std::move(q)});
    return with_order(std::move(out), target);
  }

  if (const auto* top = std::get_if<TopRule>(&rule)) {
    report.step("dg-adm-context");
    Sequent ctx = top->context;
    for (const DgOcc& occ : occs) {
      if (occ.pos == 0)
        throw InternalError("girardize: occurrence at the T formula");
      ctx[occ.pos - 1] = collapsed(occ);
    }
    return Proof::infer(inst, TopRule{std::move(ctx)}, {});
  }

  if (std::holds_alternative<OneRule>(rule))
    throw InternalError("girardize: occurrence in an empty context");

  // context rule (including cut): blocks have size one, so the stored rule
  // indices stay valid
  report.step("dg-adm-context");
  std::vector<Sequent> prem_concls;
  for (const Proof& q : p.premises()) prem_concls.push_back(q.conclusion());
  auto sources = context_sources(rule, prem_concls);
  std::vector<std::vector<DgOcc>> inner(p.premises().size());
  for (const DgOcc& occ : occs) {
    const auto& srcs = sources.at(occ.pos);
    if (srcs.empty())
      throw InternalError("girardize: occurrence at a principal position of " +
                          rule_name(rule));
    for (const CtxSource& src : srcs)
      inner[src.premise].push_back(
          {src.index, occ.outer, occ.inner, occ.target});
  }
  std::vector<Proof> new_prems;
  for (std::size_t i = 0; i < p.premises().size(); ++i)
    new_prems.push_back(
        dg_admissible(inst, std::move(inner[i]), p.premises()[i], report));
  Proof out = Proof::infer(inst, rule, std::move(new_prems));
  return with_order(std::move(out), target);
}

// A tracked ?_{from} B occurrence being retargeted to ?_{to} B where
// co_1(from, to) holds.
struct SubOcc {
  std::size_t pos;
  Sig from, to;
};

// Subsumption admissibility: `p` uses ordered promotion but neither
// functorial promotion nor unary contraction; each tracked occurrence is
// retargeted, migrating upward through the subsumption witnesses.
inline Proof sub_admissible(const Instance& inst, std::vector<SubOcc> occs,
                            const Proof& p, TransformReport& report) {
  if (occs.empty()) return p;
  const Sequent& concl = p.conclusion();

  for (const SubOcc& occ : occs) {
    const Formula& f = concl.at(occ.pos);
    if (!f.is_quest() || f.sig() != occ.from)
      throw InternalError("desubsume: tracked occurrence shape mismatch");
  }
  Sequent target = concl;
  for (const SubOcc& occ : occs)
    target[occ.pos] = Formula::quest(occ.to, concl[occ.pos].body());

  const Rule& rule = p.rule();

  if (const auto* ex = std::get_if<ExchangeRule>(&rule)) {
    std::vector<SubOcc> inner;
    for (const SubOcc& occ : occs)
      inner.push_back({ex->perm[occ.pos], occ.from, occ.to});
    Proof q = sub_admissible(inst, std::move(inner), p.premises()[0], report);
    return with_order(std::move(q), target);
  }

  if (std::holds_alternative<PromRule>(rule) ||
      std::holds_alternative<PromGirardRule>(rule))
    throw InternalError("desubsume: " + rule_name(rule) +
                        " inside a subsumption-admissibility input");
  if (const auto* co1 = std::get_if<CoRule>(&rule);
      co1 && co1->froms.size() == 1)
    throw InternalError("desubsume: unary contraction left in the input");

  if (std::holds_alternative<AxRule>(rule)) {
    report.step("sub-adm-ax");
    if (occs.size() != 1)
      throw InternalError("desubsume: several occurrences in an axiom");
    const SubOcc& occ = occs[0];
    Formula body = concl[occ.pos].body();
    Proof ax = Proof::infer(inst, AxRule{dual(body)}, {});  // |- B^, B
    Proof po = Proof::infer(
        inst, PromOrderedRule{occ.from, 0, {occ.to}}, {ax});
    return with_order(std::move(po), target);
  }

  if (const auto* po = std::get_if<PromOrderedRule>(&rule)) {
    report.step("sub-adm-prom");
    // transitivity: retarget the tracked context slots, keep the premise
    std::vector<Sig> targets = po->targets;
    for (const SubOcc& occ : occs) {
      if (occ.pos == 0)
        throw InternalError("desubsume: occurrence at a promoted formula");
      targets[occ.pos - 1] = occ.to;
    }
    Proof out = Proof::infer(
        inst, PromOrderedRule{po->sig, po->index, std::move(targets)},
        p.premises());
    return with_order(std::move(out), target);
  }

  std::optional<std::size_t> principal_occ;
  for (std::size_t i = 0; i < occs.size(); ++i)
    if (occs[i].pos == 0 && acting_on(rule, 0)) principal_occ = i;

  if (principal_occ && std::holds_alternative<DeRule>(rule)) {
    report.step("sub-adm-de");
    const SubOcc main = occs[*principal_occ];
    const auto* de = std::get_if<DeRule>(&rule);
    const Proof& prem = p.premises()[0];
    auto sources = context_sources(rule, {prem.conclusion()});
    std::vector<SubOcc> inner;
    for (std::size_t i = 0; i < occs.size(); ++i) {
      if (i == *principal_occ) continue;
      inner.push_back(
          {sources.at(occs[i].pos)[0].index, occs[i].from, occs[i].to});
    }
    Proof q = sub_admissible(inst, std::move(inner), prem, report);
    // de is upward closed (sb4)
    Proof out =
        Proof::infer(inst, DeRule{main.to, de->index}, {std::move(q)});
    return with_order(std::move(out), target);
  }

  if (principal_occ && std::holds_alternative<CoRule>(rule)) {
    report.step("sub-adm-co");
    const SubOcc main = occs[*principal_occ];
    const auto* co = std::get_if<CoRule>(&rule);
    const Proof& prem = p.premises()[0];
    WitnessQuery q5{WitnessQuery::Kind::CoAbove, co->froms, co->to, main.to,
                    {},                          {}};
    std::vector<Sig> eps_prime = find_witness(inst, q5);
    ++report.witness_queries;
    auto sources = context_sources(rule, {prem.conclusion()});
    std::vector<SubOcc> inner;
    for (std::size_t i = 0; i < occs.size(); ++i) {
      if (i == *principal_occ) continue;
      inner.push_back(
          {sources.at(occs[i].pos)[0].index, occs[i].from, occs[i].to});
    }
    for (std::size_t m = 0; m < co->froms.size(); ++m)
      inner.push_back({co->indices[m], co->froms[m], eps_prime[m]});
    Proof q = sub_admissible(inst, std::move(inner), prem, report);
    Formula weakened;
    if (co->froms.empty()) weakened = concl[0].body();
    Proof out = Proof::infer(
        inst, CoRule{eps_prime, main.to, co->indices, weakened},
        {std::move(q)});
    return with_order(std::move(out), target);
  }

  if (principal_occ && std::holds_alternative<DgRule>(rule)) {
    report.step("sub-adm-dg");
    const SubOcc main = occs[*principal_occ];
    const auto* dg = std::get_if<DgRule>(&rule);
    const Proof& prem = p.premises()[0];
    WitnessQuery q6{WitnessQuery::Kind::DigAbove,
                    {dg->outer, dg->inner},
                    dg->to,
                    main.to,
                    {},
                    {}};
    Sig eps_prime = find_witness(inst, q6)[0];
    ++report.witness_queries;
    auto sources = context_sources(rule, {prem.conclusion()});
    std::vector<SubOcc> inner;
    for (std::size_t i = 0; i < occs.size(); ++i) {
      if (i == *principal_occ) continue;
      inner.push_back(
          {sources.at(occs[i].pos)[0].index, occs[i].from, occs[i].to});
    }
    inner.push_back({dg->index, dg->outer, eps_prime});
    Proof q = sub_admissible(inst, std::move(inner), prem, report);
    Proof out = Proof::infer(
        inst, DgRule{eps_prime, dg->inner, main.to, dg->index}, {std::move(q)});
    return with_order(std::move(out), target);
  }

  if (const auto* top = std::get_if<TopRule>(&rule)) {
    report.step("sub-adm-context");
    Sequent ctx = top->context;
    for (const SubOcc& occ : occs) {
      if (occ.pos == 0)
        throw InternalError("desubsume: occurrence at the T formula");
      ctx[occ.pos - 1] = Formula::quest(occ.to, concl[occ.pos].body());
    }
    return Proof::infer(inst, TopRule{std::move(ctx)}, {});
  }

  if (std::holds_alternative<OneRule>(rule))
    throw InternalError("desubsume: occurrence in an empty context");

  report.step("sub-adm-context");
  std::vector<Sequent> prem_concls;
  for (const Proof& q : p.premises()) prem_concls.push_back(q.conclusion());
  auto sources = context_sources(rule, prem_concls);
  std::vector<std::vector<SubOcc>> inner(p.premises().size());
  for (const SubOcc& occ : occs) {
    const auto& srcs = sources.at(occ.pos);
    if (srcs.empty())
      throw InternalError("desubsume: occurrence at a principal position of " +
                          rule_name(rule));
    for (const CtxSource& src : srcs)
      inner[src.premise].push_back({src.index, occ.from, occ.to});
  }
  std::vector<Proof> new_prems;
  for (std::size_t i = 0; i < p.premises().size(); ++i)
    new_prems.push_back(
        sub_admissible(inst, std::move(inner[i]), p.premises()[i], report));
  Proof out = Proof::infer(inst, rule, std::move(new_prems));
  return with_order(std::move(out), target);
}

}  // namespace detail

// Girardization: replaces functorial promotion by Girard's promotion (via
// the gir5 unit) and then removes every digging node by upward migration.
// Cut-freeness is preserved.
inline Proof girardize(const Instance& inst, const Proof& p,
                       TransformReport* report = nullptr, Bounds bounds = {}) {
  if (!inst.proved.girardization &&
      !check_girardization_axioms(inst, bounds).ok())
    throw PreconditionError(
        "girardize: the Girardization axiom table fails for instance " +
        inst.name);
  CheckReport valid = check_proof(inst, p);
  if (!valid)
    throw PreconditionError("girardize: input proof invalid at " + valid.path +
                            ": " + valid.message);
  TransformReport local;
  TransformReport& rep = report ? *report : local;
  rep.input_size = proof_size(p, SizeMode::Raw);

  // step 1: every functorial promotion becomes a Girard promotion over
  // freshly derelicted context formulas
  std::function<Proof(const Proof&)> step1 = [&](const Proof& q) -> Proof {
    std::vector<Proof> prems;
    for (const Proof& r : q.premises()) prems.push_back(step1(r));
    const auto* pr = std::get_if<PromRule>(&q.rule());
    if (!pr) return Proof::infer(inst, q.rule(), std::move(prems));
    rep.step("girard-prom");
    Proof prem = prems[0];
    std::size_t n = prem.conclusion().size() - 1;
    if (n == 0)
      return Proof::infer(inst, PromGirardRule{pr->sig, pr->index, {}},
                          {std::move(prem)});
    WitnessQuery q5{WitnessQuery::Kind::GirardUnit, {}, {}, {}, {},
                    pr->sig,                        n};
    Sig unit = find_witness(inst, q5)[0];
    ++rep.witness_queries;
    // positions of the promoted formula and the pending context formulas
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < prem.conclusion().size(); ++i)
      if (i != pr->index) pending.push_back(i);
    std::size_t promoted = pr->index;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      std::size_t at = pending[i];
      prem = Proof::infer(inst, DeRule{unit, at}, {std::move(prem)});
      promoted = detail::renumber({at}, 1, promoted);
      for (std::size_t j = i + 1; j < pending.size(); ++j)
        pending[j] = detail::renumber({at}, 1, pending[j]);
    }
    Proof out = Proof::infer(
        inst, PromGirardRule{pr->sig, promoted, std::vector<Sig>(n, pr->sig)},
        {std::move(prem)});
    return with_order(std::move(out), q.conclusion());
  };

  // step 2: remove digging nodes, innermost first
  std::function<Proof(const Proof&)> step2 = [&](const Proof& q) -> Proof {
    std::vector<Proof> prems;
    for (const Proof& r : q.premises()) prems.push_back(step2(r));
    if (const auto* dg = std::get_if<DgRule>(&q.rule())) {
      rep.step("dg-removed");
      Proof res = detail::dg_admissible(
          inst, {{dg->index, dg->outer, dg->inner, dg->to}}, prems[0], rep);
      return with_order(std::move(res), q.conclusion());
    }
    return Proof::infer(inst, q.rule(), std::move(prems));
  };

  Proof out = step2(step1(p));
  rep.output_size = proof_size(out, SizeMode::Raw);
  CheckReport final_check =
      check_proof(inst, out, {.rules = RuleSet::girard_only()});
  if (!final_check)
    throw InternalError("girardize: output invalid at " + final_check.path +
                        ": " + final_check.message);
  if (cut_free(p) && !cut_free(out))
    throw InternalError("girardize: cut-freeness lost");
  return out;
}

// Subsumption elimination: replaces functorial promotion by the ordered
// promotion (via reflexivity) and then removes every unary contraction by
// upward migration. Cut-freeness is preserved.
inline Proof eliminate_subsumption(const Instance& inst, const Proof& p,
                                   TransformReport* report = nullptr,
                                   Bounds bounds = {}) {
  if (!inst.proved.subsumption && !check_subsumption_axioms(inst, bounds).ok())
    throw PreconditionError(
        "eliminate_subsumption: the subsumption axiom table fails for "
        "instance " +
        inst.name);
  CheckReport valid = check_proof(inst, p);
  if (!valid)
    throw PreconditionError("eliminate_subsumption: input proof invalid at " +
                            valid.path + ": " + valid.message);
  TransformReport local;
  TransformReport& rep = report ? *report : local;
  rep.input_size = proof_size(p, SizeMode::Raw);

  std::function<Proof(const Proof&)> step1 = [&](const Proof& q) -> Proof {
    std::vector<Proof> prems;
    for (const Proof& r : q.premises()) prems.push_back(step1(r));
    if (const auto* pr = std::get_if<PromRule>(&q.rule())) {
      rep.step("ordered-prom");
      std::size_t n = prems[0].conclusion().size() - 1;
      return Proof::infer(
          inst,
          PromOrderedRule{pr->sig, pr->index, std::vector<Sig>(n, pr->sig)},
          std::move(prems));
    }
    return Proof::infer(inst, q.rule(), std::move(prems));
  };

  std::function<Proof(const Proof&)> step2 = [&](const Proof& q) -> Proof {
    std::vector<Proof> prems;
    for (const Proof& r : q.premises()) prems.push_back(step2(r));
    if (const auto* co = std::get_if<CoRule>(&q.rule());
        co && co->froms.size() == 1) {
      rep.step("subsumption-removed");
      Proof res = detail::sub_admissible(
          inst, {{co->indices[0], co->froms[0], co->to}}, prems[0], rep);
      return with_order(std::move(res), q.conclusion());
    }
    return Proof::infer(inst, q.rule(), std::move(prems));
  };

  Proof out = step2(step1(p));
  rep.output_size = proof_size(out, SizeMode::Raw);
  CheckReport final_check =
      check_proof(inst, out, {.rules = RuleSet::ordered_only()});
  if (!final_check)
    throw InternalError("eliminate_subsumption: output invalid at " +
                        final_check.path + ": " + final_check.message);
  if (cut_free(p) && !cut_free(out))
    throw InternalError("eliminate_subsumption: cut-freeness lost");
  return out;
}

// Derives the k-ary uniform contraction |- ?_e A, G from k copies of ?_e A
// using only co_0 and co_2 at e: a weakening for k = 0, a pass-through for
// k = 1, and a chain of k-1 binary contractions otherwise. In any instance
// where co_0(e) and co_2(e,e,e) hold this yields the same conclusions as a
// primitive k-ary rule.
inline Proof contract_uniform(const Instance& inst, const Sig& e,
                              std::vector<std::size_t> indices, Proof p,
                              Formula weakened = {}) {
  Sequent target = conclusion_of(
      CoRule{std::vector<Sig>(indices.size(), e), e, indices, weakened},
      {p.conclusion()});
  if (indices.empty())
    return Proof::infer(inst, CoRule{{}, e, {}, weakened}, {std::move(p)});
  while (indices.size() > 1) {
    std::vector<std::size_t> actives{indices[0], indices[1]};
    p = Proof::infer(inst, CoRule{{e, e}, e, actives, {}}, {std::move(p)});
    std::vector<std::size_t> removed = actives;
    std::sort(removed.begin(), removed.end());
    std::vector<std::size_t> next{0};
    for (std::size_t i = 2; i < indices.size(); ++i)
      next.push_back(detail::renumber(removed, 1, indices[i]));
    indices = std::move(next);
  }
  return with_order(std::move(p), target);
}

// The forgetful map on formulas: every signature becomes the plain one.
inline Formula collapse_signatures(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Bang:
      return Formula::bang(kBullet, collapse_signatures(f.body()));
    case K::Quest:
      return Formula::quest(kBullet, collapse_signatures(f.body()));
    case K::Tensor:
      return Formula::tensor(collapse_signatures(f.left()),
                             collapse_signatures(f.right()));
    case K::Parr:
      return Formula::parr(collapse_signatures(f.left()),
                           collapse_signatures(f.right()));
    case K::With:
      return Formula::with(collapse_signatures(f.left()),
                           collapse_signatures(f.right()));
    case K::Plus:
      return Formula::plus(collapse_signatures(f.left()),
                           collapse_signatures(f.right()));
    default:
      return f;
  }
}

inline Sequent collapse_signatures(const Sequent& g) {
  Sequent out;
  out.reserve(g.size());
  for (const Formula& f : g) out.push_back(collapse_signatures(f));
  return out;
}

// Forgetful collapse into the full-relations singleton instance: the induced
// rules are all derivable there. Contractions of arity k become a weakening,
// a pass-through, or a chain of k-1 binary contractions.
inline Proof forget_to_ll(const Proof& p, TransformReport* report = nullptr) {
  static const Instance ll = make_preset(PresetId::parse("ll-full"));
  TransformReport local;
  TransformReport& rep = report ? *report : local;
  rep.input_size = proof_size(p, SizeMode::Raw);

  std::function<Proof(const Proof&)> go = [&](const Proof& q) -> Proof {
    std::vector<Proof> prems;
    for (const Proof& r : q.premises()) prems.push_back(go(r));
    Sequent target = collapse_signatures(q.conclusion());
    Rule rule = q.rule();
    if (auto* ax = std::get_if<AxRule>(&rule)) {
      ax->formula = collapse_signatures(ax->formula);
    } else if (auto* cut = std::get_if<CutRule>(&rule)) {
      cut->formula = collapse_signatures(cut->formula);
    } else if (auto* p1 = std::get_if<Plus1Rule>(&rule)) {
      p1->right = collapse_signatures(p1->right);
    } else if (auto* p2 = std::get_if<Plus2Rule>(&rule)) {
      p2->left = collapse_signatures(p2->left);
    } else if (auto* top = std::get_if<TopRule>(&rule)) {
      top->context = collapse_signatures(top->context);
    } else if (auto* de = std::get_if<DeRule>(&rule)) {
      de->sig = kBullet;
    } else if (auto* dg = std::get_if<DgRule>(&rule)) {
      dg->outer = dg->inner = dg->to = kBullet;
    } else if (auto* pr = std::get_if<PromRule>(&rule)) {
      pr->sig = kBullet;
    } else if (auto* pg = std::get_if<PromGirardRule>(&rule)) {
      pg->sig = kBullet;
      for (Sig& t : pg->targets) t = kBullet;
    } else if (auto* po = std::get_if<PromOrderedRule>(&rule)) {
      po->sig = kBullet;
      for (Sig& t : po->targets) t = kBullet;
    } else if (auto* co = std::get_if<CoRule>(&rule)) {
      std::size_t k = co->froms.size();
      if (k == 0) {
        rep.step("forget-weakening");
        Proof out = Proof::infer(
            ll, CoRule{{}, kBullet, {}, collapse_signatures(co->weakened)},
            std::move(prems));
        return with_order(std::move(out), target);
      }
      if (k == 1) {
        rep.step("forget-pass");
        return with_order(prems[0], target);
      }
      rep.step("forget-chain");
      Proof out = contract_uniform(ll, kBullet, co->indices, prems[0]);
      return with_order(std::move(out), target);
    }
    Proof out = Proof::infer(ll, rule, std::move(prems));
    return with_order(std::move(out), target);
  };
  Proof out = go(p);
  rep.output_size = proof_size(out, SizeMode::Raw);
  return out;
}

}  // namespace superll

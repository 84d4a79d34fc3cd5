#pragma once

#include <variant>

#include "instance.hpp"
#include "sequent.hpp"

namespace superll {

// Rule variants. Conclusions are computed from premises by a fixed schema:
// the principal formula lands first, then the contexts in premise order, so
// `conclusion_of` is a function and transformation code stays index-stable.
// Indices address the active occurrence(s) in the premise conclusions.

struct AxRule {
  Formula formula;  // |- A, A^
};
struct CutRule {
  Formula formula;                     // the cut formula A
  std::size_t left_index, right_index;  // A in premise 1, A^ in premise 2
};
struct ExchangeRule {
  std::vector<std::size_t> perm;  // conclusion[i] = premise[perm[i]]
};
struct TensorRule {
  std::size_t left_index, right_index;  // A in premise 1, B in premise 2
};
struct ParrRule {
  std::size_t first_index, second_index;  // A and B in the premise
};
struct OneRule {};
struct BotRule {};
struct WithRule {
  std::size_t left_index, right_index;  // contexts must be list-equal
};
struct Plus1Rule {
  std::size_t index;  // A in the premise
  Formula right;      // the B of A + B
};
struct Plus2Rule {
  std::size_t index;  // B in the premise
  Formula left;       // the A of A + B
};
struct TopRule {
  Sequent context;  // |- T, context
};
struct DeRule {
  Sig sig;
  std::size_t index;
};
struct CoRule {
  std::vector<Sig> froms;           // e1..ek, k = froms.size()
  Sig to;                           // e
  std::vector<std::size_t> indices;  // the k active ?_{ei} A occurrences
  Formula weakened;                 // the A introduced when k == 0
};
struct DgRule {
  Sig outer, inner, to;  // ?_{outer} ?_{inner} A -> ?_{to} A
  std::size_t index;
};
// Functorial promotion: |- A, A1..An  /  |- !_e A, ?_e A1 .. ?_e An.
struct PromRule {
  Sig sig;
  std::size_t index;  // the promoted A
};
// Girard-style promotion: context already ?-prefixed, each ?_{eps_i} A_i
// becomes ?_{targets[i]} A_i, requiring dg(sig, eps_i, targets[i]).
struct PromGirardRule {
  Sig sig;
  std::size_t index;
  std::vector<Sig> targets;  // per context formula, in premise order
};
// Ordered promotion: bare context, each A_i becomes ?_{targets[i]} A_i,
// requiring co_1(sig, targets[i]).
struct PromOrderedRule {
  Sig sig;
  std::size_t index;
  std::vector<Sig> targets;
};

using Rule =
    std::variant<AxRule, CutRule, ExchangeRule, TensorRule, ParrRule, OneRule,
                 BotRule, WithRule, Plus1Rule, Plus2Rule, TopRule, DeRule,
                 CoRule, DgRule, PromRule, PromGirardRule, PromOrderedRule>;

inline std::string rule_name(const Rule& r) {
  struct Visitor {
    std::string operator()(const AxRule&) { return "ax"; }
    std::string operator()(const CutRule&) { return "cut"; }
    std::string operator()(const ExchangeRule&) { return "ex"; }
    std::string operator()(const TensorRule&) { return "tensor"; }
    std::string operator()(const ParrRule&) { return "parr"; }
    std::string operator()(const OneRule&) { return "one"; }
    std::string operator()(const BotRule&) { return "bot"; }
    std::string operator()(const WithRule&) { return "with"; }
    std::string operator()(const Plus1Rule&) { return "plus1"; }
    std::string operator()(const Plus2Rule&) { return "plus2"; }
    std::string operator()(const TopRule&) { return "top"; }
    std::string operator()(const DeRule&) { return "de"; }
    std::string operator()(const CoRule&) { return "co"; }
    std::string operator()(const DgRule&) { return "dg"; }
    std::string operator()(const PromRule&) { return "prom"; }
    std::string operator()(const PromGirardRule&) { return "prom-g"; }
    std::string operator()(const PromOrderedRule&) { return "prom-o"; }
  };
  return std::visit(Visitor{}, r);
}

inline std::size_t premise_count(const Rule& r) {
  if (std::holds_alternative<AxRule>(r) || std::holds_alternative<OneRule>(r) ||
      std::holds_alternative<TopRule>(r))
    return 0;
  if (std::holds_alternative<CutRule>(r) ||
      std::holds_alternative<TensorRule>(r) ||
      std::holds_alternative<WithRule>(r))
    return 2;
  return 1;
}

inline bool is_promotion(const Rule& r) {
  return std::holds_alternative<PromRule>(r) ||
         std::holds_alternative<PromGirardRule>(r) ||
         std::holds_alternative<PromOrderedRule>(r);
}

inline bool is_cut(const Rule& r) { return std::holds_alternative<CutRule>(r); }
inline bool is_exchange(const Rule& r) {
  return std::holds_alternative<ExchangeRule>(r);
}

namespace detail {

inline void need(bool cond, const std::string& msg) {
  if (!cond) throw ShapeError(msg);
}

inline void need_index(const Sequent& g, std::size_t i, const char* rule) {
  if (i >= g.size())
    throw ShapeError(std::string(rule) + ": active index " +
                     std::to_string(i) + " out of range for " + to_string(g));
}

}  // namespace detail

// Computes the conclusion from the rule and premise conclusions. Pure and
// instance-free; throws ShapeError on arity mismatch, bad indices or
// premise-shape mismatch. Side conditions are checked separately.
inline Sequent conclusion_of(const Rule& rule,
                             const std::vector<Sequent>& prems) {
  using detail::need;
  using detail::need_index;
  need(prems.size() == premise_count(rule),
       rule_name(rule) + ": arity mismatch");

  struct Visitor {
    const std::vector<Sequent>& p;

    Sequent operator()(const AxRule& r) {
      return {r.formula, dual(r.formula)};
    }
    Sequent operator()(const CutRule& r) {
      need_index(p[0], r.left_index, "cut");
      need_index(p[1], r.right_index, "cut");
      need(p[0][r.left_index] == r.formula,
           "cut: left premise does not carry the cut formula at index " +
               std::to_string(r.left_index));
      need(p[1][r.right_index] == dual(r.formula),
           "cut: right premise does not carry the dual cut formula at index " +
               std::to_string(r.right_index));
      return concat(erased(p[0], r.left_index), erased(p[1], r.right_index));
    }
    Sequent operator()(const ExchangeRule& r) {
      need(r.perm.size() == p[0].size(), "ex: permutation length mismatch");
      std::vector<bool> seen(r.perm.size(), false);
      Sequent out;
      out.reserve(r.perm.size());
      for (std::size_t i : r.perm) {
        need(i < r.perm.size() && !seen[i], "ex: not a permutation");
        seen[i] = true;
        out.push_back(p[0][i]);
      }
      return out;
    }
    Sequent operator()(const TensorRule& r) {
      need_index(p[0], r.left_index, "tensor");
      need_index(p[1], r.right_index, "tensor");
      Sequent out{Formula::tensor(p[0][r.left_index], p[1][r.right_index])};
      return concat(concat(std::move(out), erased(p[0], r.left_index)),
                    erased(p[1], r.right_index));
    }
    Sequent operator()(const ParrRule& r) {
      need_index(p[0], r.first_index, "parr");
      need_index(p[0], r.second_index, "parr");
      need(r.first_index != r.second_index, "parr: indices must differ");
      Sequent out{Formula::parr(p[0][r.first_index], p[0][r.second_index])};
      return concat(std::move(out),
                    erased(p[0], {r.first_index, r.second_index}));
    }
    Sequent operator()(const OneRule&) { return {Formula::one()}; }
    Sequent operator()(const BotRule&) {
      return concat({Formula::bot()}, p[0]);
    }
    Sequent operator()(const WithRule& r) {
      need_index(p[0], r.left_index, "with");
      need_index(p[1], r.right_index, "with");
      Sequent ctx1 = erased(p[0], r.left_index);
      Sequent ctx2 = erased(p[1], r.right_index);
      need(sequent_eq(ctx1, ctx2), "with: premise contexts differ");
      Sequent out{Formula::with(p[0][r.left_index], p[1][r.right_index])};
      return concat(std::move(out), ctx1);
    }
    Sequent operator()(const Plus1Rule& r) {
      need_index(p[0], r.index, "plus1");
      Sequent out{Formula::plus(p[0][r.index], r.right)};
      return concat(std::move(out), erased(p[0], r.index));
    }
    Sequent operator()(const Plus2Rule& r) {
      need_index(p[0], r.index, "plus2");
      Sequent out{Formula::plus(r.left, p[0][r.index])};
      return concat(std::move(out), erased(p[0], r.index));
    }
    Sequent operator()(const TopRule& r) {
      return concat({Formula::top()}, r.context);
    }
    Sequent operator()(const DeRule& r) {
      need_index(p[0], r.index, "de");
      Sequent out{Formula::quest(r.sig, p[0][r.index])};
      return concat(std::move(out), erased(p[0], r.index));
    }
    Sequent operator()(const CoRule& r) {
      std::size_t k = r.froms.size();
      need(r.indices.size() == k, "co: index count differs from arity");
      if (k == 0) {
        need(!r.weakened.null(), "co: missing weakened formula for k=0");
        return concat({Formula::quest(r.to, r.weakened)}, p[0]);
      }
      std::vector<bool> seen(p[0].size(), false);
      Formula body;
      for (std::size_t j = 0; j < k; ++j) {
        need_index(p[0], r.indices[j], "co");
        need(!seen[r.indices[j]], "co: duplicate active index");
        seen[r.indices[j]] = true;
        const Formula& f = p[0][r.indices[j]];
        need(f.is_quest() && f.sig() == r.froms[j],
             "co: active formula " + std::to_string(j) + " is not ?_" +
                 r.froms[j].name + " shaped");
        if (j == 0)
          body = f.body();
        else
          need(f.body() == body, "co: active formulas have different bodies");
      }
      Sequent out{Formula::quest(r.to, body)};
      return concat(std::move(out), erased(p[0], r.indices));
    }
    Sequent operator()(const DgRule& r) {
      need_index(p[0], r.index, "dg");
      const Formula& f = p[0][r.index];
      need(f.is_quest() && f.sig() == r.outer && f.body().is_quest() &&
               f.body().sig() == r.inner,
           "dg: active formula is not ?_" + r.outer.name + " ?_" +
               r.inner.name + " shaped");
      Sequent out{Formula::quest(r.to, f.body().body())};
      return concat(std::move(out), erased(p[0], r.index));
    }
    Sequent operator()(const PromRule& r) {
      need_index(p[0], r.index, "prom");
      Sequent out{Formula::bang(r.sig, p[0][r.index])};
      for (std::size_t j = 0; j < p[0].size(); ++j)
        if (j != r.index) out.push_back(Formula::quest(r.sig, p[0][j]));
      return out;
    }
    Sequent operator()(const PromGirardRule& r) {
      need_index(p[0], r.index, "prom-g");
      need(r.targets.size() == p[0].size() - 1,
           "prom-g: target count differs from context size");
      Sequent out{Formula::bang(r.sig, p[0][r.index])};
      std::size_t t = 0;
      for (std::size_t j = 0; j < p[0].size(); ++j) {
        if (j == r.index) continue;
        need(p[0][j].is_quest(),
             "prom-g: context formula at " + std::to_string(j) +
                 " is not ?-prefixed");
        out.push_back(Formula::quest(r.targets[t++], p[0][j].body()));
      }
      return out;
    }
    Sequent operator()(const PromOrderedRule& r) {
      need_index(p[0], r.index, "prom-o");
      need(r.targets.size() == p[0].size() - 1,
           "prom-o: target count differs from context size");
      Sequent out{Formula::bang(r.sig, p[0][r.index])};
      std::size_t t = 0;
      for (std::size_t j = 0; j < p[0].size(); ++j)
        if (j != r.index)
          out.push_back(Formula::quest(r.targets[t++], p[0][j]));
      return out;
    }
  };
  return std::visit(Visitor{prems}, rule);
}

// The parameter queries a rule application must satisfy.
inline std::vector<ParamQuery> side_conditions(
    const Rule& rule, const std::vector<Sequent>& prems) {
  if (const auto* de = std::get_if<DeRule>(&rule))
    return {ParamQuery::de(de->sig)};
  if (const auto* co = std::get_if<CoRule>(&rule))
    return {ParamQuery::co(co->froms, co->to)};
  if (const auto* dg = std::get_if<DgRule>(&rule))
    return {ParamQuery::dg(dg->outer, dg->inner, dg->to)};
  if (const auto* pr = std::get_if<PromRule>(&rule))
    return {ParamQuery::p(prems[0].size() - 1, pr->sig)};
  if (const auto* pg = std::get_if<PromGirardRule>(&rule)) {
    std::vector<ParamQuery> out{ParamQuery::p(prems[0].size() - 1, pg->sig)};
    std::size_t t = 0;
    for (std::size_t j = 0; j < prems[0].size(); ++j)
      if (j != pg->index)
        out.push_back(ParamQuery::dg(pg->sig, prems[0][j].sig(),
                                     pg->targets[t++]));
    return out;
  }
  if (const auto* po = std::get_if<PromOrderedRule>(&rule)) {
    std::vector<ParamQuery> out{ParamQuery::p(prems[0].size() - 1, po->sig)};
    for (const Sig& t : po->targets)
      out.push_back(ParamQuery::co({po->sig}, t));
    return out;
  }
  return {};
}

// For each conclusion position, where that formula sits in the premises: no
// entry for principal or leaf-introduced positions, two entries for the
// shared context of `with`. Used by the rewriting engine to trace occurrences
// upward past rules that do not act on them. Promotions act on every
// conclusion formula, so they report no sources.
struct CtxSource {
  std::size_t premise, index;
};

inline std::vector<std::vector<CtxSource>> context_sources(
    const Rule& rule, const std::vector<Sequent>& prems) {
  std::vector<std::vector<CtxSource>> out;
  auto context_after = [&](std::size_t premise,
                           std::vector<std::size_t> skipped) {
    std::sort(skipped.begin(), skipped.end());
    for (std::size_t j = 0; j < prems[premise].size(); ++j) {
      if (std::find(skipped.begin(), skipped.end(), j) != skipped.end())
        continue;
      out.push_back({CtxSource{premise, j}});
    }
  };

  if (const auto* ex = std::get_if<ExchangeRule>(&rule)) {
    for (std::size_t i : ex->perm) out.push_back({CtxSource{0, i}});
    return out;
  }
  if (is_promotion(rule)) {
    out.resize(conclusion_of(rule, prems).size());
    return out;
  }
  if (const auto* top = std::get_if<TopRule>(&rule)) {
    out.resize(1 + top->context.size());
    return out;
  }

  // principal positions at the front of the conclusion carry no source
  std::size_t principals = 1;
  if (std::holds_alternative<AxRule>(rule)) principals = 2;
  if (std::holds_alternative<CutRule>(rule)) principals = 0;
  out.resize(principals);

  if (const auto* cut = std::get_if<CutRule>(&rule)) {
    context_after(0, {cut->left_index});
    context_after(1, {cut->right_index});
  } else if (const auto* t = std::get_if<TensorRule>(&rule)) {
    context_after(0, {t->left_index});
    context_after(1, {t->right_index});
  } else if (const auto* w = std::get_if<WithRule>(&rule)) {
    // shared context: each conclusion position maps into both premises
    std::size_t n = prems[0].size() - 1;
    std::vector<std::size_t> idx1, idx2;
    for (std::size_t j = 0; j < prems[0].size(); ++j)
      if (j != w->left_index) idx1.push_back(j);
    for (std::size_t j = 0; j < prems[1].size(); ++j)
      if (j != w->right_index) idx2.push_back(j);
    for (std::size_t j = 0; j < n; ++j)
      out.push_back({CtxSource{0, idx1[j]}, CtxSource{1, idx2[j]}});
  } else if (const auto* pr = std::get_if<ParrRule>(&rule)) {
    context_after(0, {pr->first_index, pr->second_index});
  } else if (std::holds_alternative<BotRule>(rule)) {
    context_after(0, {});
  } else if (const auto* p1 = std::get_if<Plus1Rule>(&rule)) {
    context_after(0, {p1->index});
  } else if (const auto* p2 = std::get_if<Plus2Rule>(&rule)) {
    context_after(0, {p2->index});
  } else if (const auto* de = std::get_if<DeRule>(&rule)) {
    context_after(0, {de->index});
  } else if (const auto* co = std::get_if<CoRule>(&rule)) {
    context_after(0, co->indices);
  } else if (const auto* dg = std::get_if<DgRule>(&rule)) {
    context_after(0, {dg->index});
  }
  return out;
}

}  // namespace superll

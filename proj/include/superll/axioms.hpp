#pragma once

#include <map>
#include <string>

#include "instance.hpp"

namespace superll {

enum class AxiomTable { CutElimination, Expansion, Girardization, Subsumption };

inline std::string to_string(AxiomTable t) {
  switch (t) {
    case AxiomTable::CutElimination:
      return "cut-elimination";
    case AxiomTable::Expansion:
      return "expansion";
    case AxiomTable::Girardization:
      return "girardization";
    case AxiomTable::Subsumption:
      return "subsumption";
  }
  return {};
}

struct Bounds {
  std::size_t max_contraction_arity = 6;  // K
  std::size_t max_promotion_width = 6;    // N
};

// A concrete violation: the hypothesis queries all hold, and either one of
// the conclusion queries is false or the existential has no witness.
// Replaying through Instance::eval reproduces the verdict.
struct Counterexample {
  std::string axiom;
  std::string text;
  std::vector<ParamQuery> hypotheses;
  std::vector<ParamQuery> conclusions;
  std::optional<WitnessQuery> existential;
  bool bad_witness = false;
};

struct AxiomReport {
  AxiomTable table{};
  Bounds bounds;
  bool analytically_proved = false;
  std::vector<std::pair<std::string, bool>> verdicts;  // axiom id -> pass
  std::vector<Counterexample> counterexamples;

  bool ok() const {
    for (const auto& [id, pass] : verdicts)
      if (!pass) return false;
    return true;
  }

  bool passed(const std::string& id) const {
    for (const auto& [ax, pass] : verdicts)
      if (ax == id) return pass;
    return false;
  }
};

namespace detail {

// Bounded exhaustive checking keeps a few counterexamples per axiom.
constexpr std::size_t kMaxCounterexamplesPerAxiom = 4;

inline void for_each_tuple(const std::vector<Sig>& sigs, std::size_t k,
                           const std::function<void(const std::vector<Sig>&)>& fn) {
  std::vector<Sig> tuple(k);
  std::function<void(std::size_t)> go = [&](std::size_t slot) {
    if (slot == k) {
      fn(tuple);
      return;
    }
    for (const Sig& s : sigs) {
      tuple[slot] = s;
      go(slot + 1);
    }
  };
  go(0);
}

struct AxiomSink {
  AxiomReport& report;
  std::map<std::string, std::size_t> fails;

  void axiom(const std::string& id) { report.verdicts.emplace_back(id, true); }

  void violation(Counterexample ce) {
    for (auto& [id, pass] : report.verdicts)
      if (id == ce.axiom) pass = false;
    if (fails[ce.axiom]++ < kMaxCounterexamplesPerAxiom)
      report.counterexamples.push_back(std::move(ce));
  }
};

}  // namespace detail

// Table of cut-elimination axioms:
//   ce1: m>0 -> p_m(e) -> p_n(e) -> p_{m+n-1}(e)
//   ce2: co_k(e1..ek,e) -> p_n(e) -> p_n(e1) /\ ... /\ p_n(ek)
//   ce3: dg(e1,e2,e) -> p_n(e) -> p_n(e1) /\ p_n(e2)
// checked for all m,n <= N and k <= K over the declared signature set.
inline AxiomReport check_cut_axioms(const Instance& inst, Bounds bounds = {}) {
  AxiomReport report{AxiomTable::CutElimination, bounds, inst.proved.cut};
  detail::AxiomSink sink{report};
  const std::size_t N = bounds.max_promotion_width;
  const std::size_t K = bounds.max_contraction_arity;

  sink.axiom("ce1");
  for (const Sig& e : inst.signatures)
    for (std::size_t m = 1; m <= N; ++m) {
      if (!inst.p(m, e)) continue;
      for (std::size_t n = 0; n <= N; ++n) {
        if (!inst.p(n, e)) continue;
        if (!inst.p(m + n - 1, e)) {
          sink.violation({"ce1",
                          "ce1 m=" + std::to_string(m) +
                              " n=" + std::to_string(n) + " e=" + e.name,
                          {ParamQuery::p(m, e), ParamQuery::p(n, e)},
                          {ParamQuery::p(m + n - 1, e)},
                          std::nullopt});
        }
      }
    }

  sink.axiom("ce2");
  for (std::size_t k = 0; k <= K; ++k)
    detail::for_each_tuple(inst.signatures, k, [&](const std::vector<Sig>& es) {
      for (const Sig& e : inst.signatures) {
        if (!inst.co(es, e)) continue;
        for (std::size_t n = 0; n <= N; ++n) {
          if (!inst.p(n, e)) continue;
          for (std::size_t i = 0; i < k; ++i) {
            if (!inst.p(n, es[i])) {
              std::string text = "ce2 k=" + std::to_string(k);
              for (std::size_t j = 0; j < k; ++j)
                text += " e" + std::to_string(j + 1) + "=" + es[j].name;
              text += " e=" + e.name + " n=" + std::to_string(n);
              sink.violation({"ce2",
                              text,
                              {ParamQuery::co(es, e), ParamQuery::p(n, e)},
                              {ParamQuery::p(n, es[i])},
                              std::nullopt});
              break;
            }
          }
        }
      }
    });

  sink.axiom("ce3");
  detail::for_each_tuple(inst.signatures, 2, [&](const std::vector<Sig>& es) {
    for (const Sig& e : inst.signatures) {
      if (!inst.dg(es[0], es[1], e)) continue;
      for (std::size_t n = 0; n <= N; ++n) {
        if (!inst.p(n, e)) continue;
        if (!inst.p(n, es[0]) || !inst.p(n, es[1])) {
          sink.violation({"ce3",
                          "ce3 e1=" + es[0].name + " e2=" + es[1].name +
                              " e=" + e.name + " n=" + std::to_string(n),
                          {ParamQuery::dg(es[0], es[1], e), ParamQuery::p(n, e)},
                          {ParamQuery::p(n, es[0]), ParamQuery::p(n, es[1])},
                          std::nullopt});
        }
      }
    }
  });

  return report;
}

// Expansion axiom: p_1(e) for every declared signature.
inline AxiomReport check_expansion_axiom(const Instance& inst) {
  AxiomReport report{AxiomTable::Expansion, Bounds{}, inst.proved.expansion};
  detail::AxiomSink sink{report};
  sink.axiom("ea");
  for (const Sig& e : inst.signatures)
    if (!inst.p(1, e))
      sink.violation(
          {"ea", "ea e=" + e.name, {}, {ParamQuery::p(1, e)}, std::nullopt});
  return report;
}

namespace detail {

// Shared helper: checks an existential obligation, recording either a
// no-witness violation or a bad-witness one.
inline void check_existential(const Instance& inst, AxiomSink& sink,
                              const std::string& axiom, const std::string& text,
                              std::vector<ParamQuery> hyps,
                              const WitnessQuery& wq) {
  try {
    find_witness(inst, wq);
  } catch (const WitnessError& err) {
    bool bad = std::string(err.what()).find("bad witness") != std::string::npos;
    Counterexample ce{axiom, text, std::move(hyps), {}, wq, bad};
    if (bad) ce.text += " bad witness";
    sink.violation(std::move(ce));
  }
}

}  // namespace detail

// Girardization axioms gir1..gir5; existentials discharged by enumeration
// over the signature set or by the instance's witness providers.
inline AxiomReport check_girardization_axioms(const Instance& inst,
                                              Bounds bounds = {}) {
  AxiomReport report{AxiomTable::Girardization, bounds,
                     inst.proved.girardization};
  detail::AxiomSink sink{report};
  const std::size_t N = bounds.max_promotion_width;
  const std::size_t K = bounds.max_contraction_arity;

  sink.axiom("gir1");
  sink.axiom("gir2");
  detail::for_each_tuple(inst.signatures, 3, [&](const std::vector<Sig>& t) {
    const Sig &e1 = t[0], &e2 = t[1], &e = t[2];
    if (!inst.dg(e1, e2, e)) return;
    std::string suffix = " e1=" + e1.name + " e2=" + e2.name + " e=" + e.name;
    if (!inst.p(1, e1))
      sink.violation({"gir1",
                      "gir1" + suffix,
                      {ParamQuery::dg(e1, e2, e)},
                      {ParamQuery::p(1, e1)},
                      std::nullopt});
    if (inst.de(e1) && !inst.co({e2}, e))
      sink.violation({"gir2",
                      "gir2" + suffix,
                      {ParamQuery::de(e1), ParamQuery::dg(e1, e2, e)},
                      {ParamQuery::co({e2}, e)},
                      std::nullopt});
  });

  sink.axiom("gir3");
  for (std::size_t k = 0; k <= K; ++k)
    detail::for_each_tuple(inst.signatures, k, [&](const std::vector<Sig>& eps) {
      detail::for_each_tuple(
          inst.signatures, 3, [&](const std::vector<Sig>& t) {
            const Sig &e1 = t[0], &e2 = t[1], &e = t[2];
            if (!inst.co(eps, e1) || !inst.dg(e1, e2, e)) return;
            std::string text = "gir3 k=" + std::to_string(k);
            for (std::size_t j = 0; j < k; ++j)
              text += " eps" + std::to_string(j + 1) + "=" + eps[j].name;
            text += " e1=" + e1.name + " e2=" + e2.name + " e=" + e.name;
            detail::check_existential(
                inst, sink, "gir3", text,
                {ParamQuery::co(eps, e1), ParamQuery::dg(e1, e2, e)},
                {WitnessQuery::Kind::DigThroughCo, eps, e1, e2, {}, e});
          });
    });

  sink.axiom("gir4");
  detail::for_each_tuple(inst.signatures, 5, [&](const std::vector<Sig>& t) {
    const Sig &e1 = t[0], &e2 = t[1], &e3 = t[2], &ep = t[3], &e = t[4];
    if (!inst.dg(e1, e2, ep) || !inst.dg(ep, e3, e)) return;
    detail::check_existential(
        inst, sink, "gir4",
        "gir4 e1=" + e1.name + " e2=" + e2.name + " e3=" + e3.name + " e'=" +
            ep.name + " e=" + e.name,
        {ParamQuery::dg(e1, e2, ep), ParamQuery::dg(ep, e3, e)},
        {WitnessQuery::Kind::DigAssoc, {}, e1, e2, e3, e});
  });

  sink.axiom("gir5");
  for (const Sig& e : inst.signatures)
    for (std::size_t n = 1; n <= N; ++n) {
      if (!inst.p(n, e)) continue;
      detail::check_existential(
          inst, sink, "gir5", "gir5 n=" + std::to_string(n) + " e=" + e.name,
          {ParamQuery::p(n, e)},
          {WitnessQuery::Kind::GirardUnit, {}, {}, {}, {}, e, n});
    }

  return report;
}

// Subsumption axioms (with e <= e' := co_1(e,e')): p_1 totality, co_1 a
// pre-order, de upward closed, and the co_k / dg commutations.
inline AxiomReport check_subsumption_axioms(const Instance& inst,
                                            Bounds bounds = {}) {
  AxiomReport report{AxiomTable::Subsumption, bounds, inst.proved.subsumption};
  detail::AxiomSink sink{report};
  const std::size_t K = bounds.max_contraction_arity;

  auto leq = [&](const Sig& a, const Sig& b) { return inst.co({a}, b); };

  sink.axiom("ea");
  for (const Sig& e : inst.signatures)
    if (!inst.p(1, e))
      sink.violation(
          {"ea", "ea e=" + e.name, {}, {ParamQuery::p(1, e)}, std::nullopt});

  sink.axiom("sb2");
  for (const Sig& e : inst.signatures)
    if (!leq(e, e))
      sink.violation(
          {"sb2", "sb2 e=" + e.name, {}, {ParamQuery::co({e}, e)}, std::nullopt});

  sink.axiom("sb3");
  detail::for_each_tuple(inst.signatures, 3, [&](const std::vector<Sig>& t) {
    if (leq(t[0], t[1]) && leq(t[1], t[2]) && !leq(t[0], t[2]))
      sink.violation({"sb3",
                      "sb3 e1=" + t[0].name + " e2=" + t[1].name + " e3=" +
                          t[2].name,
                      {ParamQuery::co({t[0]}, t[1]), ParamQuery::co({t[1]}, t[2])},
                      {ParamQuery::co({t[0]}, t[2])},
                      std::nullopt});
  });

  sink.axiom("sb4");
  detail::for_each_tuple(inst.signatures, 2, [&](const std::vector<Sig>& t) {
    if (inst.de(t[0]) && leq(t[0], t[1]) && !inst.de(t[1]))
      sink.violation({"sb4",
                      "sb4 e1=" + t[0].name + " e2=" + t[1].name,
                      {ParamQuery::de(t[0]), ParamQuery::co({t[0]}, t[1])},
                      {ParamQuery::de(t[1])},
                      std::nullopt});
  });

  sink.axiom("sb5");
  for (std::size_t k = 0; k <= K; ++k) {
    if (k == 1) continue;  // trivial: take eps' = e2
    detail::for_each_tuple(inst.signatures, k, [&](const std::vector<Sig>& eps) {
      detail::for_each_tuple(
          inst.signatures, 2, [&](const std::vector<Sig>& t) {
            const Sig &e1 = t[0], &e2 = t[1];
            if (!inst.co(eps, e1) || !leq(e1, e2)) return;
            std::string text = "sb5 k=" + std::to_string(k);
            for (std::size_t j = 0; j < k; ++j)
              text += " eps" + std::to_string(j + 1) + "=" + eps[j].name;
            text += " e1=" + e1.name + " e2=" + e2.name;
            detail::check_existential(
                inst, sink, "sb5", text,
                {ParamQuery::co(eps, e1), ParamQuery::co({e1}, e2)},
                {WitnessQuery::Kind::CoAbove, eps, e1, e2, {}, {}});
          });
    });
  }

  sink.axiom("sb6");
  detail::for_each_tuple(inst.signatures, 4, [&](const std::vector<Sig>& t) {
    const Sig &eps1 = t[0], &eps2 = t[1], &e1 = t[2], &e2 = t[3];
    if (!inst.dg(eps1, eps2, e1) || !leq(e1, e2)) return;
    detail::check_existential(
        inst, sink, "sb6",
        "sb6 eps1=" + eps1.name + " eps2=" + eps2.name + " e1=" + e1.name +
            " e2=" + e2.name,
        {ParamQuery::dg(eps1, eps2, e1), ParamQuery::co({e1}, e2)},
        {WitnessQuery::Kind::DigAbove, {eps1, eps2}, e1, e2, {}, {}});
  });

  return report;
}

inline AxiomReport check_axiom_table(const Instance& inst, AxiomTable table,
                                     Bounds bounds = {}) {
  switch (table) {
    case AxiomTable::CutElimination:
      return check_cut_axioms(inst, bounds);
    case AxiomTable::Expansion:
      return check_expansion_axiom(inst);
    case AxiomTable::Girardization:
      return check_girardization_axioms(inst, bounds);
    case AxiomTable::Subsumption:
      return check_subsumption_axioms(inst, bounds);
  }
  throw InternalError("check_axiom_table: bad table");
}

// Functional-instance detection: de, dg and each co_k (k != 1) determine
// their last argument over the checked domain.
struct FunctionalReport {
  bool functional = true;
  std::vector<std::pair<std::string, bool>> verdicts;  // relation -> pass
  std::vector<std::string> violations;

  void record(const std::string& rel, bool pass) {
    verdicts.emplace_back(rel, pass);
    if (!pass) functional = false;
  }
};

inline FunctionalReport is_functional(const Instance& inst, Bounds bounds = {}) {
  FunctionalReport report;

  std::vector<Sig> de_hits;
  for (const Sig& e : inst.signatures)
    if (inst.de(e)) de_hits.push_back(e);
  report.record("de", de_hits.size() <= 1);
  if (de_hits.size() > 1)
    report.violations.push_back("de(" + de_hits[0].name + ") and de(" +
                                de_hits[1].name + ")");

  bool dg_ok = true;
  detail::for_each_tuple(inst.signatures, 2, [&](const std::vector<Sig>& t) {
    std::vector<Sig> hits;
    for (const Sig& e : inst.signatures)
      if (inst.dg(t[0], t[1], e)) hits.push_back(e);
    if (hits.size() > 1) {
      dg_ok = false;
      report.violations.push_back("dg(" + t[0].name + "," + t[1].name +
                                  " -> " + hits[0].name + ") and -> " +
                                  hits[1].name);
    }
  });
  report.record("dg", dg_ok);

  for (std::size_t k = 0; k <= bounds.max_contraction_arity; ++k) {
    if (k == 1) continue;
    bool co_ok = true;
    detail::for_each_tuple(inst.signatures, k, [&](const std::vector<Sig>& es) {
      std::vector<Sig> hits;
      for (const Sig& e : inst.signatures)
        if (inst.co(es, e)) hits.push_back(e);
      if (hits.size() > 1) {
        co_ok = false;
        report.violations.push_back("co_" + std::to_string(k) + "(" +
                                    sig_list_str(es) + " -> " + hits[0].name +
                                    ") and -> " + hits[1].name);
      }
    });
    report.record("co_" + std::to_string(k), co_ok);
  }

  return report;
}

}  // namespace superll

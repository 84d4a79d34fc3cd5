// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance and threshold is pinned here; the random generators are
// seeded so runs are reproducible.

#include <chrono>
#include <iostream>
#include <superll/instance_text.hpp>
#include <superll/proof_text.hpp>
#include <superll/search.hpp>
#include <superll/transform.hpp>
#include <superll/translate.hpp>

#include "gen.hpp"

using namespace superll;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass,
            const std::string& detail = "") {
  std::cout << "criterion " << criterion << " (" << what
            << "): " << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n" << std::flush;
  if (!pass) ++failures;
}

std::vector<std::string> preset_names() {
  return {"ll-functorial", "ell", "sll", "ll-full",
          "lll",           "shift", "sell", "bsll"};
}

std::size_t max_co_arity(const Proof& p) {
  std::size_t k = 0;
  if (const auto* co = std::get_if<CoRule>(&p.rule())) k = co->froms.size();
  for (const Proof& q : p.premises()) k = std::max(k, max_co_arity(q));
  return k;
}

std::size_t max_prom_width(const Proof& p) {
  std::size_t w = 0;
  if (is_promotion(p.rule())) w = p.conclusion().size() - 1;
  for (const Proof& q : p.premises()) w = std::max(w, max_prom_width(q));
  return w;
}

// longest run of consecutive digging nodes along any path, skipping exchange
std::size_t max_dg_run(const Proof& p, std::size_t run = 0) {
  std::size_t here = run;
  if (std::holds_alternative<DgRule>(p.rule()))
    here = run + 1;
  else if (!is_exchange(p.rule()))
    here = 0;
  std::size_t best = here;
  for (const Proof& q : p.premises())
    best = std::max(best, max_dg_run(q, here));
  return best;
}

struct EliminatedSample {
  std::string preset;
  Proof output;  // the cut-free witness
};

// --- criterion 1 + harvest for criterion 2 -------------------------------
std::vector<EliminatedSample> criterion_1() {
  const std::size_t kProofsPerPreset = 500;
  auto start = Clock::now();
  std::vector<EliminatedSample> harvest;
  std::size_t total = 0, ok = 0;
  std::string first_failure;
  for (const std::string& name : preset_names()) {
    Instance inst = make_preset(PresetId::parse(name));
    gen::Rng rng(20260810);
    gen::ProofGrower grower(inst, rng, {.max_depth = 8, .steps = 12});
    for (std::size_t i = 0; i < kProofsPerPreset; ++i) {
      Proof p = grower.grown_with_cut(10);
      ++total;
      try {
        if (cut_free(p)) throw InternalError("generator produced no cut");
        if (proof_depth(p) > 8)
          throw InternalError("generator exceeded the depth bound");
        Proof out = eliminate_cut(inst, p);
        bool good = cut_free(out) && check_proof(inst, out).ok &&
                    sequent_perm_eq(out.conclusion(), p.conclusion());
        if (!good) throw InternalError("postcondition failed");
        ++ok;
        harvest.push_back({name, std::move(out)});
      } catch (const Error& err) {
        if (first_failure.empty()) first_failure = std::string(name) + ": " + err.what();
      }
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool pass = ok == total && secs <= 300.0;
  report(1, "cut-elimination soundness sweep", pass,
         std::to_string(ok) + "/" + std::to_string(total) + " proofs, " +
             std::to_string(secs) + "s" +
             (first_failure.empty() ? "" : ", first: " + first_failure));
  return harvest;
}

// --- criterion 2 ----------------------------------------------------------
void criterion_2(const std::vector<EliminatedSample>& harvest) {
  std::vector<const EliminatedSample*> candidates;
  for (const auto& s : harvest)
    if (s.output.conclusion().size() <= 6) candidates.push_back(&s);
  std::sort(candidates.begin(), candidates.end(),
            [](const EliminatedSample* a, const EliminatedSample* b) {
              return proof_size(a->output) < proof_size(b->output);
            });
  std::size_t confirmed = 0, disagreements = 0;
  std::string detail;
  for (const EliminatedSample* s : candidates) {
    if (confirmed >= 100) break;
    Instance inst = make_preset(PresetId::parse(s->preset));
    SearchBudget budget;
    budget.max_depth = proof_depth(s->output, SizeMode::ExchangeFree) + 2;
    budget.max_nodes = 300000;
    budget.max_contraction_arity =
        std::max<std::size_t>(3, max_co_arity(s->output));
    budget.max_promotion_width =
        std::max<std::size_t>(8, max_prom_width(s->output));
    budget.max_dg_chain = std::max<std::size_t>(2, max_dg_run(s->output));
    SearchResult r = search_cutfree(inst, s->output.conclusion(), budget);
    if (r.found()) {
      bool sound = check_proof(inst, *r.proof).ok && cut_free(*r.proof) &&
                   sequent_perm_eq(r.proof->conclusion(),
                                   s->output.conclusion());
      if (sound) {
        ++confirmed;
      } else {
        ++disagreements;
        if (detail.empty()) detail = "unsound proof from search";
      }
    } else if (r.status == SearchStatus::NotProvable) {
      ++disagreements;  // a cut-free witness exists within the budget
      if (detail.empty())
        detail = s->preset + ": " + to_string(s->output.conclusion());
    }
    // Exhausted runs are inconclusive and simply skipped
  }
  bool pass = confirmed >= 100 && disagreements == 0;
  report(2, "independent search oracle agreement", pass,
         std::to_string(confirmed) + " confirmed, " +
             std::to_string(disagreements) + " disagreements" +
             (detail.empty() ? "" : ", " + detail));
}

// --- criterion 3 ----------------------------------------------------------
void criterion_3() {
  Instance broken = make_broken_instance();
  Sig e{"e"}, ep{"e'"};
  Formula X = Formula::atom("X");
  Proof ax1 = Proof::infer(broken, AxRule{Formula::dual_atom("X")}, {});
  Proof prom1 = Proof::infer(broken, PromRule{ep, 0}, {ax1});
  Proof co1 = Proof::infer(broken, CoRule{{ep}, e, {1}, {}}, {prom1});
  Proof ax2 = Proof::infer(broken, AxRule{X}, {});
  Proof tensor = Proof::infer(broken, TensorRule{0, 0}, {ax2, ax2});
  Proof prom2 = Proof::infer(broken, PromRule{e, 1}, {tensor});
  Proof pi = Proof::infer(broken, CutRule{Formula::quest(e, X), 0, 0},
                          {co1, prom2});

  bool validates = check_proof(broken, pi).ok;

  AxiomReport r = check_cut_axioms(broken);
  bool ce2_violation = !r.passed("ce2");
  bool exact_counterexample = false;
  for (const auto& ce : r.counterexamples)
    if (ce.text == "ce2 k=1 e1=e' e=e n=2") exact_counterexample = true;

  SearchResult sr =
      search_cutfree(broken, parse_sequent("|- !e' X^, ?e (X * X), ?e X^"),
                     {.max_depth = 12, .max_nodes = 100000});
  bool not_provable = sr.status == SearchStatus::NotProvable;

  report(3, "counterexample instance triple",
         validates && ce2_violation && exact_counterexample && not_provable,
         std::string("derivation ") + (validates ? "valid" : "INVALID") +
             ", ce2 " + (ce2_violation ? "fails" : "PASSES") + ", search " +
             (not_provable ? "not-provable-within-budget" : "WRONG"));
}

// --- criterion 4 ----------------------------------------------------------
void criterion_4() {
  bool pass = true;
  std::string detail;
  for (const std::string& name : preset_names()) {
    Instance inst = make_preset(PresetId::parse(name));
    if (!check_cut_axioms(inst).ok() || !check_expansion_axiom(inst).ok()) {
      pass = false;
      detail += name + " cut/expansion; ";
    }
    bool want_gir = name == "sell" || name == "bsll" || name == "ll-full" ||
                    name == "shift";
    if (want_gir && !check_girardization_axioms(inst).ok()) {
      pass = false;
      detail += name + " girardization; ";
    }
  }
  if (!check_subsumption_axioms(make_preset(PresetId::parse("lll"))).ok()) {
    pass = false;
    detail += "lll subsumption; ";
  }
  report(4, "axiom tables at bounds (6,6)", pass, detail);
}

// --- criterion 5 ----------------------------------------------------------
void criterion_5() {
  const std::size_t kPerPreset = 200;
  std::size_t total = 0, ok = 0;
  std::string first_failure;
  for (const char* name : {"ll-full", "shift", "sell", "bsll"}) {
    Instance inst = make_preset(PresetId::parse(name));
    gen::Rng rng(5150);
    gen::ProofGrower grower(inst, rng);
    for (std::size_t i = 0; i < kPerPreset; ++i) {
      Proof p = grower.grown(12);
      ++total;
      try {
        Proof out = girardize(inst, p);
        bool clean = count_nodes_if(out, [](const Rule& r) {
                       return std::holds_alternative<PromRule>(r) ||
                              std::holds_alternative<DgRule>(r);
                     }) == 0;
        bool good = clean && check_proof(inst, out).ok &&
                    sequent_perm_eq(out.conclusion(), p.conclusion()) &&
                    cut_free(out);
        if (!good) throw InternalError("postcondition failed");
        ++ok;
      } catch (const Error& err) {
        if (first_failure.empty()) first_failure = std::string(name) + ": " + err.what();
      }
    }
  }
  {
    Instance lll = make_preset(PresetId::parse("lll"));
    gen::Rng rng(5151);
    gen::ProofGrower grower(lll, rng);
    for (std::size_t i = 0; i < kPerPreset; ++i) {
      Proof p = grower.grown(12);
      ++total;
      try {
        Proof out = eliminate_subsumption(lll, p);
        bool clean = count_nodes_if(out, [](const Rule& r) {
                       if (std::holds_alternative<PromRule>(r)) return true;
                       const auto* co = std::get_if<CoRule>(&r);
                       return co && co->froms.size() == 1;
                     }) == 0;
        bool good = clean && check_proof(lll, out).ok &&
                    sequent_perm_eq(out.conclusion(), p.conclusion()) &&
                    cut_free(out);
        if (!good) throw InternalError("postcondition failed");
        ++ok;
      } catch (const Error& err) {
        if (first_failure.empty())
          first_failure = std::string("lll: ") + err.what();
      }
    }
  }
  report(5, "girardization and subsumption elimination sweeps", ok == total,
         std::to_string(ok) + "/" + std::to_string(total) +
             (first_failure.empty() ? "" : ", first: " + first_failure));
}

// --- criterion 6 ----------------------------------------------------------
void criterion_6() {
  const std::size_t kPerPreset = 200;
  std::size_t total = 0, ok = 0;
  std::string first_failure;
  for (const std::string& name : preset_names()) {
    Instance inst = make_preset(PresetId::parse(name));
    gen::Rng rng(6001);
    for (std::size_t i = 0; i < kPerPreset; ++i) {
      Formula a =
          gen::random_formula(rng, inst.signatures, 1 + gen::pick(rng, 12));
      ++total;
      try {
        Proof ax = Proof::infer(inst, AxRule{a}, {});
        Proof out = expand_axioms(inst, ax);
        bool atomic = count_nodes_if(out, [](const Rule& r) {
                        const auto* axr = std::get_if<AxRule>(&r);
                        return axr &&
                               axr->formula.kind() != Formula::Kind::Atom;
                      }) == 0;
        bool good = atomic && check_proof(inst, out).ok &&
                    sequent_perm_eq(out.conclusion(), Sequent{a, dual(a)});
        if (!good) throw InternalError("postcondition failed");
        ++ok;
      } catch (const Error& err) {
        if (first_failure.empty()) first_failure = std::string(name) + ": " + err.what();
      }
    }
  }
  report(6, "axiom expansion sweep", ok == total,
         std::to_string(ok) + "/" + std::to_string(total) +
             (first_failure.empty() ? "" : ", first: " + first_failure));
}

// --- criterion 7 ----------------------------------------------------------
void criterion_7() {
  const std::size_t kPerSystem = 100;
  std::size_t total = 0, ok = 0;
  std::string first_failure;
  for (const char* name : {"sll", "lll", "sell", "bsll", "ell"}) {
    PresetId id = PresetId::parse(name);
    NativeSystem sys = make_native_system(id);
    gen::Rng rng(7007);
    gen::NativeGrower grower(sys, rng);
    for (std::size_t i = 0; i < kPerSystem; ++i) {
      NativeProof np = grower.grown(12);
      ++total;
      try {
        Proof enc = encode_native(id, np);
        if (native_cut_free(np) && !cut_free(enc))
          throw InternalError("encode lost cut-freeness");
        NativeProof dec = decode_native(id, enc);
        Sequent expect = id.kind == PresetId::Kind::SLL
                             ? detail::erase_star(np.conclusion())
                             : np.conclusion();
        bool good = check_native(sys, dec).ok &&
                    sequent_perm_eq(dec.conclusion(), expect) &&
                    (!native_cut_free(np) || native_cut_free(dec));
        if (!good) throw InternalError("postcondition failed");
        ++ok;
      } catch (const Error& err) {
        if (first_failure.empty()) first_failure = std::string(name) + ": " + err.what();
      }
    }
  }
  report(7, "native translation round trips", ok == total,
         std::to_string(ok) + "/" + std::to_string(total) +
             (first_failure.empty() ? "" : ", first: " + first_failure));
}

// --- criterion 8 ----------------------------------------------------------
void criterion_8() {
  const std::size_t kPerPreset = 25;  // 25 x 8 = 200 proofs
  Instance full = make_preset(PresetId::parse("ll-full"));
  std::size_t total = 0, ok = 0;
  std::string first_failure;
  for (const std::string& name : preset_names()) {
    Instance inst = make_preset(PresetId::parse(name));
    gen::Rng rng(8088);
    gen::ProofGrower grower(inst, rng);
    for (std::size_t i = 0; i < kPerPreset; ++i) {
      Proof p = grower.grown_with_cut(9);
      ++total;
      try {
        Proof forgotten = forget_to_ll(p);
        if (!check_proof(full, forgotten).ok)
          throw InternalError("forgetful image invalid");
        Proof a = forget_to_ll(eliminate_cut(inst, p));
        Proof b = eliminate_cut(full, forgotten);
        Sequent collapsed = collapse_signatures(p.conclusion());
        bool good = cut_free(a) && cut_free(b) && check_proof(full, a).ok &&
                    check_proof(full, b).ok &&
                    sequent_perm_eq(a.conclusion(), collapsed) &&
                    sequent_perm_eq(b.conclusion(), collapsed);
        if (!good) throw InternalError("postcondition failed");
        ++ok;
      } catch (const Error& err) {
        if (first_failure.empty()) first_failure = std::string(name) + ": " + err.what();
      }
    }
  }
  report(8, "forgetful collapse and commutation with cut elimination",
         ok == total,
         std::to_string(ok) + "/" + std::to_string(total) +
             (first_failure.empty() ? "" : ", first: " + first_failure));
}

// --- criterion 9 ----------------------------------------------------------
void criterion_9() {
  gen::Rng rng(9009);
  std::vector<Sig> sigs = {Sig{"e"}, Sig{"e'"}, Sig{"f"}};
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    Formula f = gen::random_formula(rng, sigs, 1 + gen::pick(rng, 12));
    if (dual(dual(f)) != f) ++bad;
    if (formula_size(dual(f)) != formula_size(f)) ++bad;
    try {
      if (parse_formula(to_string(f)) != f) ++bad;
    } catch (const ParseError&) {
      ++bad;
    }
  }

  Instance full = make_preset(PresetId::parse("ll-full"));
  gen::ProofGrower grower(full, rng, {.max_depth = 8, .steps = 6});
  for (int i = 0; i < 10000; ++i) {
    Proof p = grower.grown(4);
    std::size_t n = p.conclusion().size();
    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) perm[j] = j;
    std::shuffle(perm.begin(), perm.end(), rng);
    Proof ex = Proof::infer(full, ExchangeRule{perm}, {p});
    if (proof_size(ex, SizeMode::ExchangeFree) !=
        proof_size(p, SizeMode::ExchangeFree))
      ++bad;
    if (proof_size(ex, SizeMode::Raw) != proof_size(p, SizeMode::Raw) + 1)
      ++bad;
  }

  for (int i = 0; i < 10000; ++i) {
    Sequent a;
    for (std::size_t j = 0, n = gen::pick(rng, 6); j < n; ++j)
      a.push_back(gen::random_formula(rng, sigs, 3));
    Sequent b = a, c = a;
    std::shuffle(b.begin(), b.end(), rng);
    std::shuffle(c.begin(), c.end(), rng);
    // reflexivity, symmetry, transitivity, permutation invariance
    if (!sequent_perm_eq(a, a)) ++bad;
    if (!sequent_perm_eq(a, b) || !sequent_perm_eq(b, a)) ++bad;
    if (sequent_perm_eq(a, b) && sequent_perm_eq(b, c) &&
        !sequent_perm_eq(a, c))
      ++bad;
    if (!a.empty()) {
      Sequent d = a;
      d.push_back(a[0]);
      if (sequent_perm_eq(a, d)) ++bad;
    }
  }

  report(9, "structural invariants, 10^4 inputs per property", bad == 0,
         std::to_string(bad) + " violations");
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  std::vector<EliminatedSample> harvest = criterion_1();
  criterion_2(harvest);
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria FAILED")
            << " in " << secs << "s\n";
  return failures == 0 ? 0 : 1;
}

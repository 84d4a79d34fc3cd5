#include <catch2/catch_amalgamated.hpp>
#include <superll/instance_text.hpp>
#include <superll/proof_text.hpp>
#include <superll/search.hpp>
#include <superll/transform.hpp>

#include "gen.hpp"

using namespace superll;

TEST_CASE("proof files round trip") {
  Instance broken = make_broken_instance();
  std::string text = R"((cut "?e X" 0 0
  (co (e') e (1) (prom e' 0 (ax "X^")))
  (prom e 1 (tensor 0 0 (ax "X") (ax "X")))))";
  Proof p = read_proof(text);
  CHECK(to_string(p.conclusion()) == "|- !e' X^, ?e (X * X), ?e X^");
  CHECK(check_proof(broken, p));

  std::string written = write_proof(p);
  Proof back = read_proof(written);
  CHECK(sequent_eq(back.conclusion(), p.conclusion()));
  CHECK(proof_size(back, SizeMode::Raw) == proof_size(p, SizeMode::Raw));

  // annotated output round trips and checks its own redundancy
  Proof annotated = read_proof(write_proof(p, true));
  CHECK(sequent_eq(annotated.conclusion(), p.conclusion()));
}

TEST_CASE("proof file errors") {
  CHECK_THROWS_AS(read_proof("(frobnicate 1)"), ParseError);
  CHECK_THROWS_AS(read_proof("(ax \"X\""), ParseError);
  CHECK_THROWS_AS(read_proof("(bot (one)) (one)"), ParseError);
  // shape errors carry the node position
  CHECK_THROWS_AS(read_proof("(parr 0 5 (ax \"X\"))"), ParseError);
  // :concl mismatches are rejected
  CHECK_THROWS_AS(read_proof("(ax \"X\" :concl \"|- X, X\")"), ParseError);
  CHECK_NOTHROW(read_proof("(ax \"X\" :concl \"|- X, X^\")"));
}

TEST_CASE("proof file round trip on random proofs") {
  Instance full = make_preset(PresetId::parse("ll-full"));
  gen::Rng rng(99);
  gen::ProofGrower grower(full, rng);
  for (int i = 0; i < 50; ++i) {
    Proof p = grower.grown(10);
    Proof back = read_proof(write_proof(p, i % 2 == 0));
    REQUIRE(sequent_eq(back.conclusion(), p.conclusion()));
    REQUIRE(check_proof(full, back));
  }
}

TEST_CASE("latex export contains one environment and the right connectives") {
  Instance full = make_preset(PresetId::parse("ll-full"));
  Proof p = Proof::infer(
      full, ParrRule{0, 1},
      {Proof::infer(full, AxRule{Formula::bang(kBullet, Formula::atom("X"))},
                    {})});
  std::string tex = export_latex(p);
  CHECK(tex.find("\\begin{prooftree}") != std::string::npos);
  CHECK(tex.find("\\end{prooftree}") != std::string::npos);
  CHECK(tex.find("\\oc_{b}") != std::string::npos);
  CHECK(tex.find("\\parr") != std::string::npos);
  CHECK(tex.find("\\vdash") != std::string::npos);
}

TEST_CASE("instance files") {
  std::string text = R"(
# the cut-elimination counterexample instance
signatures: e e'
co 1: e' -> e
p: e = {2}
p: e' = {1}
)";
  Instance inst = parse_instance(text);
  Sig e{"e"}, ep{"e'"};
  CHECK(inst.co({ep}, e));
  CHECK_FALSE(inst.co({e}, ep));
  CHECK(inst.p(2, e));
  CHECK_FALSE(inst.p(2, ep));
  CHECK(inst.p(1, ep));
  CHECK_FALSE(inst.de(e));
  AxiomReport r = check_cut_axioms(inst);
  CHECK_FALSE(r.passed("ce2"));

  Instance all = parse_instance(R"(
signatures: a
de: a
co 0: -> a
co 1: a -> a
co 2: a a -> a
dg: a a -> a
p: a = all
)");
  CHECK(all.de(Sig{"a"}));
  CHECK(all.dg(Sig{"a"}, Sig{"a"}, Sig{"a"}));
  CHECK(all.p(17, Sig{"a"}));

  Instance ge = parse_instance("signatures: a\np: a = >=2\n");
  CHECK_FALSE(ge.p(1, Sig{"a"}));
  CHECK(ge.p(2, Sig{"a"}));

  Instance preset = parse_instance("preset: ell\n");
  CHECK(preset.name == "ell");

  CHECK_THROWS_AS(parse_instance("signatures: a\nde: zz\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("de: a\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("signatures: a\nco 2: a -> a\n"), ParseError);
}

TEST_CASE("random proofs with cuts eliminate cleanly on every preset") {
  for (const std::string& name : PresetId::names()) {
    INFO("preset " << name);
    Instance inst = make_preset(PresetId::parse(name));
    gen::Rng rng(1234);
    gen::ProofGrower grower(inst, rng);
    for (int i = 0; i < 25; ++i) {
      Proof p = grower.grown_with_cut(10);
      CAPTURE(name, write_proof(p));
      REQUIRE_FALSE(cut_free(p));
      Proof out = eliminate_cut(inst, p);
      REQUIRE(cut_free(out));
      REQUIRE(check_proof(inst, out));
      REQUIRE(sequent_perm_eq(out.conclusion(), p.conclusion()));
    }
  }
}

TEST_CASE("cut-free elimination output is confirmed by the search oracle") {
  Instance ell = make_preset(PresetId::parse("ell"));
  gen::Rng rng(4321);
  gen::ProofGrower grower(ell, rng);
  int confirmed = 0;
  for (int i = 0; i < 40 && confirmed < 10; ++i) {
    Proof p = grower.grown_with_cut(8);
    Proof out = eliminate_cut(ell, p);
    if (out.conclusion().size() > 5) continue;
    SearchBudget budget;
    budget.max_depth = proof_depth(out, SizeMode::ExchangeFree) + 2;
    budget.max_nodes = 400000;
    budget.max_contraction_arity = 3;
    SearchResult r = search_cutfree(ell, p.conclusion(), budget);
    if (r.status == SearchStatus::Exhausted) continue;
    REQUIRE(r.found());
    REQUIRE(check_proof(ell, *r.proof));
    ++confirmed;
  }
  CHECK(confirmed >= 5);
}

TEST_CASE("girardize and desubsume hold on random cut-free proofs") {
  for (const char* name : {"ll-full", "shift", "sell", "bsll"}) {
    INFO("preset " << name);
    Instance inst = make_preset(PresetId::parse(name));
    gen::Rng rng(777);
    gen::ProofGrower grower(inst, rng);
    for (int i = 0; i < 20; ++i) {
      Proof p = grower.grown(10);
      CAPTURE(name, write_proof(p));
      Proof out = girardize(inst, p);
      REQUIRE(count_nodes_if(out, [](const Rule& r) {
                return std::holds_alternative<PromRule>(r) ||
                       std::holds_alternative<DgRule>(r);
              }) == 0);
      REQUIRE(sequent_perm_eq(out.conclusion(), p.conclusion()));
      REQUIRE(cut_free(out));
    }
  }
  Instance lll = make_preset(PresetId::parse("lll"));
  gen::Rng rng(888);
  gen::ProofGrower grower(lll, rng);
  for (int i = 0; i < 20; ++i) {
    Proof p = grower.grown(10);
    CAPTURE(write_proof(p));
    Proof out = eliminate_subsumption(lll, p);
    REQUIRE(count_nodes_if(out, [](const Rule& r) {
              if (std::holds_alternative<PromRule>(r)) return true;
              const auto* co = std::get_if<CoRule>(&r);
              return co && co->froms.size() == 1;
            }) == 0);
    REQUIRE(sequent_perm_eq(out.conclusion(), p.conclusion()));
    REQUIRE(cut_free(out));
  }
}

TEST_CASE("forgetting commutes with cut elimination up to permutation") {
  Instance sll = make_preset(PresetId::parse("sll"));
  Instance full = make_preset(PresetId::parse("ll-full"));
  gen::Rng rng(555);
  gen::ProofGrower grower(sll, rng);
  for (int i = 0; i < 15; ++i) {
    Proof p = grower.grown_with_cut(8);
    Proof a = forget_to_ll(eliminate_cut(sll, p));
    Proof b = eliminate_cut(full, forget_to_ll(p));
    REQUIRE(cut_free(a));
    REQUIRE(cut_free(b));
    REQUIRE(check_proof(full, a));
    REQUIRE(check_proof(full, b));
    REQUIRE(sequent_perm_eq(a.conclusion(), b.conclusion()));
    REQUIRE(sequent_perm_eq(a.conclusion(),
                            collapse_signatures(p.conclusion())));
  }
}

#include <catch2/catch_amalgamated.hpp>
#include <superll/presets.hpp>

using namespace superll;

TEST_CASE("parameter evaluation on presets") {
  Instance lll = make_preset(PresetId::parse("lll"));
  CHECK_FALSE(lll.co({kBullet}, kStar));  // co_1(b,s) is the key false entry
  CHECK(lll.co({kStar}, kBullet));
  CHECK(lll.p(1, kBullet));
  CHECK_FALSE(lll.p(2, kBullet));
  CHECK(lll.p(5, kStar));

  Instance sll = make_preset(PresetId::parse("sll"));
  CHECK(sll.de(kStar));
  CHECK_FALSE(sll.de(kBullet));
  CHECK(sll.co({kStar, kStar, kStar}, kBullet));
  CHECK_FALSE(sll.co({kStar, kStar}, kStar));

  Instance ell = make_preset(PresetId::parse("ell"));
  CHECK_FALSE(ell.dg(kBullet, kBullet, kBullet));
  CHECK(ell.co({}, kBullet));
  CHECK(ell.co({kBullet, kBullet}, kBullet));

  CHECK_THROWS_AS(ell.de(Sig{"zz"}), UnknownSignatureError);
}

TEST_CASE("broken instance fails ce2 with the expected counterexample") {
  Instance broken = make_broken_instance();
  AxiomReport r = check_cut_axioms(broken);
  REQUIRE_FALSE(r.ok());
  REQUIRE_FALSE(r.passed("ce2"));
  bool found = false;
  for (const auto& ce : r.counterexamples)
    if (ce.text == "ce2 k=1 e1=e' e=e n=2") found = true;
  CHECK(found);

  // counterexamples replay through eval: hypotheses hold, a conclusion fails
  for (const auto& ce : r.counterexamples) {
    for (const auto& h : ce.hypotheses) CHECK(broken.eval(h));
    bool some_false = false;
    for (const auto& c : ce.conclusions)
      if (!broken.eval(c)) some_false = true;
    CHECK(some_false);
  }
}

TEST_CASE("instances with full p satisfy the cut-elimination table") {
  Instance inst;
  inst.signatures = {Sig{"x"}, Sig{"y"}};
  inst.de_fn = [](const Sig& e) { return e.name == "x"; };
  inst.co_fn = [](const std::vector<Sig>&, const Sig&) { return true; };
  inst.dg_fn = [](const Sig&, const Sig&, const Sig&) { return true; };
  inst.p_fn = [](std::size_t, const Sig&) { return true; };
  CHECK(check_cut_axioms(inst).ok());
  CHECK(check_expansion_axiom(inst).ok());
}

TEST_CASE("expansion axiom failure carries the offending signature") {
  Instance inst;
  inst.signatures = {Sig{"x"}, Sig{"y"}};
  inst.de_fn = [](const Sig&) { return false; };
  inst.co_fn = [](const std::vector<Sig>&, const Sig&) { return false; };
  inst.dg_fn = [](const Sig&, const Sig&, const Sig&) { return false; };
  inst.p_fn = [](std::size_t n, const Sig& e) {
    return !(n == 1 && e.name == "y");
  };
  AxiomReport r = check_expansion_axiom(inst);
  REQUIRE_FALSE(r.ok());
  REQUIRE(r.counterexamples.size() == 1);
  CHECK(r.counterexamples[0].text == "ea e=y");
}

TEST_CASE("axiom tables match the preset property lemmas at (6,6)") {
  for (const std::string& name : PresetId::names()) {
    INFO("preset " << name);
    Instance inst = make_preset(PresetId::parse(name));
    CHECK(check_cut_axioms(inst).ok());
    CHECK(check_expansion_axiom(inst).ok());
    bool gir = name == "sell" || name == "bsll" || name == "ll-full" ||
               name == "shift";
    CHECK(check_girardization_axioms(inst).ok() == gir);
  }
  CHECK(check_subsumption_axioms(make_preset(PresetId::parse("lll"))).ok());
}

TEST_CASE("lll fails girardization at gir5") {
  AxiomReport r =
      check_girardization_axioms(make_preset(PresetId::parse("lll")));
  REQUIRE_FALSE(r.ok());
  CHECK_FALSE(r.passed("gir5"));
  CHECK(r.passed("gir1"));
  CHECK(r.passed("gir2"));
  CHECK(r.passed("gir3"));
  CHECK(r.passed("gir4"));
}

TEST_CASE("subsumption transitivity violations are located") {
  Instance inst;
  Sig a{"a"}, b{"b"}, c{"c"};
  inst.signatures = {a, b, c};
  inst.de_fn = [](const Sig&) { return false; };
  inst.co_fn = [a, b, c](const std::vector<Sig>& from, const Sig& to) {
    if (from.size() != 1) return false;
    if (from[0] == to) return true;
    return (from[0] == a && to == b) || (from[0] == b && to == c);
  };
  inst.dg_fn = [](const Sig&, const Sig&, const Sig&) { return false; };
  inst.p_fn = [](std::size_t, const Sig&) { return true; };
  AxiomReport r = check_subsumption_axioms(inst);
  REQUIRE_FALSE(r.passed("sb3"));
  bool found = false;
  for (const auto& ce : r.counterexamples)
    if (ce.text == "sb3 e1=a e2=b e3=c") found = true;
  CHECK(found);
}

TEST_CASE("functional instance detection") {
  // any singleton set is immediately functional
  CHECK(is_functional(make_preset(PresetId::parse("ll-full"))).functional);
  CHECK(is_functional(make_preset(PresetId::parse("ell"))).functional);

  // subexponential 2-chain: dg determines its last argument but de is total,
  // so the instance as a whole is not functional
  PresetId sell2 = PresetId::of(PresetId::Kind::SeLL);
  sell2.sell = SellParams::two_chain();
  FunctionalReport fr = is_functional(make_preset(sell2));
  CHECK_FALSE(fr.functional);
  bool de_ok = true, dg_ok = false;
  for (const auto& [rel, ok] : fr.verdicts) {
    if (rel == "de") de_ok = ok;
    if (rel == "dg") dg_ok = ok;
  }
  CHECK_FALSE(de_ok);
  CHECK(dg_ok);

  // semiring multiplication is a function on the sample
  CHECK(is_functional(make_preset(PresetId::parse("bsll"))).functional);
}

TEST_CASE("sell preset rejects non-upward-closed parameter sets") {
  PresetId bad = PresetId::of(PresetId::Kind::SeLL);
  bad.sell = SellParams::three_chain();
  bad.sell.weakenable = {Sig{"a"}};  // a <= b but b not weakenable
  CHECK_THROWS_AS(make_preset(bad), PreconditionError);
}

TEST_CASE("witness search picks the first candidate in canonical order") {
  Instance full = make_preset(PresetId::parse("ll-full"));
  WitnessQuery q{WitnessQuery::Kind::GirardUnit, {}, {}, {}, {}, kBullet, 1};
  auto w = find_witness(full, q);
  REQUIRE(w.size() == 1);
  CHECK(w[0] == kBullet);

  // bsll: gir4 witness is the semiring product e2 * e3
  Instance bsll = make_preset(PresetId::parse("bsll"));
  WitnessQuery q4{WitnessQuery::Kind::DigAssoc, {}, Sig{"n2"}, Sig{"n2"},
                  Sig{"n3"}, Sig{"n12"}};
  auto w4 = find_witness(bsll, q4);
  REQUIRE(w4.size() == 1);
  CHECK(w4[0] == Sig{"n6"});
}

TEST_CASE("bad witnesses from providers are rejected") {
  Instance inst = make_preset(PresetId::parse("bsll"));
  inst.witnesses.girard_unit = [](std::size_t,
                                  const Sig&) -> std::optional<Sig> {
    return Sig{"n3"};  // de(n3) is false
  };
  WitnessQuery q{WitnessQuery::Kind::GirardUnit, {}, {}, {}, {}, Sig{"n2"}, 1};
  CHECK_THROWS_AS(find_witness(inst, q), WitnessError);
}

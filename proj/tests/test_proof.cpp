#include <catch2/catch_amalgamated.hpp>
#include <superll/presets.hpp>
#include <superll/proof.hpp>

using namespace superll;

namespace {

const Formula X = Formula::atom("X");
const Formula Xd = Formula::dual_atom("X");

// The derivation whose cut cannot be eliminated in the broken instance:
// cut of |- ?e X, !e' X^ (from p_1(e') and co_1(e',e)) against
// |- !e X^, ?e (X*X), ?e X^ (from p_2(e)).
Proof broken_instance_derivation(const Instance& broken) {
  Sig e{"e"}, ep{"e'"};
  Proof ax1 = Proof::infer(broken, AxRule{Xd}, {});  // |- X^, X
  Proof prom1 = Proof::infer(broken, PromRule{ep, 0}, {ax1});
  // |- !e' X^, ?e' X
  Proof co1 = Proof::infer(broken, CoRule{{ep}, e, {1}, {}}, {prom1});
  // |- ?e X, !e' X^
  Proof ax2 = Proof::infer(broken, AxRule{X}, {});  // |- X, X^
  Proof tensor = Proof::infer(broken, TensorRule{0, 0}, {ax2, ax2});
  // |- X*X, X^, X^
  Proof prom2 = Proof::infer(broken, PromRule{e, 1}, {tensor});
  // |- !e X^, ?e (X*X), ?e X^
  return Proof::infer(broken, CutRule{Formula::quest(e, X), 0, 0},
                      {co1, prom2});
}

}  // namespace

TEST_CASE("axiom and structural rules compute their schemas") {
  Instance full = make_preset(PresetId::parse("ll-full"));
  Proof ax = Proof::infer(full, AxRule{X}, {});
  CHECK(to_string(ax.conclusion()) == "|- X, X^");

  Proof one = Proof::infer(full, OneRule{}, {});
  CHECK(to_string(one.conclusion()) == "|- 1");

  Proof bot = Proof::infer(full, BotRule{}, {one});
  CHECK(to_string(bot.conclusion()) == "|- F, 1");

  Proof ex = Proof::infer(full, ExchangeRule{{1, 0}}, {bot});
  CHECK(to_string(ex.conclusion()) == "|- 1, F");

  Proof parr = Proof::infer(full, ParrRule{0, 1}, {ax});
  CHECK(to_string(parr.conclusion()) == "|- X | X^");

  Proof top = Proof::infer(full, TopRule{{X, X}}, {});
  CHECK(to_string(top.conclusion()) == "|- T, X, X");
}

TEST_CASE("weakening is 0-ary contraction and multiplexing is de then co") {
  Instance ell = make_preset(PresetId::parse("ell"));
  Proof one = Proof::infer(ell, OneRule{}, {});
  Proof wk = Proof::infer(ell, CoRule{{}, kBullet, {}, X}, {one});
  CHECK(to_string(wk.conclusion()) == "|- ?b X, 1");

  // SLL: |- X, X, G becomes |- ?b X, G through de(s); de(s); co([s,s],b)
  Instance sll = make_preset(PresetId::parse("sll"));
  Proof ax = Proof::infer(sll, AxRule{X}, {});
  Proof t = Proof::infer(sll, TensorRule{1, 1}, {ax, ax});  // |- X^*X^, X, X
  Proof d1 = Proof::infer(sll, DeRule{kStar, 1}, {t});
  Proof d2 = Proof::infer(sll, DeRule{kStar, 2}, {d1});
  // |- ?s X, ?s X, X^*X^
  Proof co = Proof::infer(sll, CoRule{{kStar, kStar}, kBullet, {0, 1}, {}}, {d2});
  CHECK(to_string(co.conclusion()) == "|- ?b X, X^ * X^");
  CHECK(check_proof(sll, co));
}

TEST_CASE("promotion side conditions") {
  Instance lll = make_preset(PresetId::parse("lll"));
  Proof ax = Proof::infer(lll, AxRule{X}, {});
  // p_1(b) holds: unary promotion
  Proof pu = Proof::infer(lll, PromRule{kBullet, 0}, {ax});
  CHECK(to_string(pu.conclusion()) == "|- !b X, ?b X^");
  // p_2(b) fails
  Proof t = Proof::infer(lll, TensorRule{0, 0}, {ax, ax});
  CHECK_THROWS_AS(Proof::infer(lll, PromRule{kBullet, 0}, {t}),
                  SideConditionError);
  // p_n(s) is full
  Proof ps = Proof::infer(lll, PromRule{kStar, 0}, {t});
  CHECK(to_string(ps.conclusion()) == "|- !s (X * X), ?s X^, ?s X^");
}

TEST_CASE("girard and ordered promotion variants") {
  Instance shift = make_preset(PresetId::parse("shift"));
  Proof ax = Proof::infer(shift, AxRule{X}, {});
  Proof de = Proof::infer(shift, DeRule{kStar, 1}, {ax});  // |- ?s X^ ... wait
  // de puts the principal first: |- ?s X^, X
  Proof ex = Proof::infer(shift, ExchangeRule{{1, 0}}, {de});  // |- X, ?s X^
  Proof pg = Proof::infer(shift, PromGirardRule{kStar, 0, {kStar}}, {ex});
  CHECK(to_string(pg.conclusion()) == "|- !s X, ?s X^");
  CHECK(check_proof(shift, pg));
  // dg(s, s, b) is false: retargeting across signatures is rejected
  CHECK_THROWS_AS(
      Proof::infer(shift, PromGirardRule{kStar, 0, {kBullet}}, {ex}),
      SideConditionError);

  Instance lll = make_preset(PresetId::parse("lll"));
  Proof ax2 = Proof::infer(lll, AxRule{X}, {});
  Proof t = Proof::infer(lll, TensorRule{0, 0}, {ax2, ax2});
  Proof po = Proof::infer(lll, PromOrderedRule{kStar, 0, {kStar, kBullet}}, {t});
  CHECK(to_string(po.conclusion()) == "|- !s (X * X), ?s X^, ?b X^");
  CHECK(check_proof(lll, po));
}

TEST_CASE("digging changes the signature per the instance relation") {
  Instance full = make_preset(PresetId::parse("ll-full"));
  Proof ax = Proof::infer(full, AxRule{X}, {});
  Proof d1 = Proof::infer(full, DeRule{kBullet, 1}, {ax});
  Proof d2 = Proof::infer(full, DeRule{kBullet, 0}, {d1});  // |- ?b ?b X^, X
  Proof dg = Proof::infer(full, DgRule{kBullet, kBullet, kBullet, 0}, {d2});
  CHECK(to_string(dg.conclusion()) == "|- ?b X^, X");
  // applying dg where the formula is not doubly ?-prefixed is a shape error
  CHECK_THROWS_AS(Proof::infer(full, DgRule{kBullet, kBullet, kBullet, 1}, {d2}),
                  ShapeError);
}

TEST_CASE("the counterexample derivation validates under the broken instance") {
  Instance broken = make_broken_instance();
  Proof pi = broken_instance_derivation(broken);
  CHECK(to_string(pi.conclusion()) == "|- !e' X^, ?e (X * X), ?e X^");
  CHECK(check_proof(broken, pi));
  CHECK_FALSE(cut_free(pi));
}

TEST_CASE("check_proof pinpoints failures by path") {
  Instance broken = make_broken_instance();
  Proof pi = broken_instance_derivation(broken);

  // swapping the cut premises breaks the cut-formula duality
  Proof swapped = Proof::unchecked(pi.rule(), pi.conclusion(),
                                   {pi.premises()[1], pi.premises()[0]});
  CheckReport r = check_proof(broken, swapped);
  REQUIRE_FALSE(r.ok);
  CHECK(r.path == "root");
  CHECK(r.message.find("cut") != std::string::npos);

  // a promotion of width 3 where p_3(e) is false
  Sig e{"e"};
  Proof ax = Proof::infer(broken, AxRule{X}, {});
  Proof t1 = Proof::infer(broken, TensorRule{0, 0}, {ax, ax});
  Proof t2 = Proof::infer(broken, TensorRule{0, 1}, {t1, ax});
  Proof bad = Proof::unchecked(PromRule{e, 0},
                               conclusion_of(PromRule{e, 0}, {t2.conclusion()}),
                               {t2});
  CheckReport r2 = check_proof(broken, bad);
  REQUIRE_FALSE(r2.ok);
  CHECK(r2.message == "side condition failed: p(3,e)");

  // a tampered stored conclusion is caught at the right node
  Proof inner = Proof::unchecked(ax.rule(), {X, X}, {});
  Proof outer = Proof::make(BotRule{}, {inner});
  CheckReport r3 = check_proof(broken, outer);
  REQUIRE_FALSE(r3.ok);
  CHECK(r3.path == "0");
}

TEST_CASE("strict mode distinguishes list equality from permutation equality") {
  Instance full = make_preset(PresetId::parse("ll-full"));
  Proof ax = Proof::infer(full, AxRule{X}, {});
  Proof stored = Proof::unchecked(AxRule{X}, {Xd, X}, {});
  CHECK(check_proof(full, stored));
  CHECK_FALSE(check_proof(full, stored, {.strict = true}));
  CHECK(check_proof(full, ax, {.strict = true}));
}

TEST_CASE("proof size and depth exclude exchange in measure mode") {
  Instance full = make_preset(PresetId::parse("ll-full"));
  Proof ax = Proof::infer(full, AxRule{X}, {});
  CHECK(proof_size(ax) == 1);
  Proof ex = Proof::infer(full, ExchangeRule{{1, 0}}, {ax});
  CHECK(proof_size(ex, SizeMode::Raw) == 2);
  CHECK(proof_size(ex, SizeMode::ExchangeFree) == 1);
  Proof t = Proof::infer(full, TensorRule{0, 0}, {ax, ax});
  CHECK(proof_size(t) == 3);
  CHECK(proof_depth(t) == 2);
}

TEST_CASE("unary contraction with subdiagonal co_1 can be omitted") {
  // sell co_1 is diagonal, so dropping a Co([e],e) node preserves validity
  Instance sell = make_preset(PresetId::parse("sell"));
  Sig a{"a"};
  Proof ax = Proof::infer(sell, AxRule{X}, {});
  Proof de = Proof::infer(sell, DeRule{a, 0}, {ax});  // |- ?a X, X^
  Proof co = Proof::infer(sell, CoRule{{a}, a, {0}, {}}, {de});
  CHECK(check_proof(sell, co));
  CHECK(sequent_perm_eq(co.conclusion(), de.conclusion()));
  CHECK(check_proof(sell, de));
}

TEST_CASE("rule set restrictions flag excluded flavors") {
  Instance full = make_preset(PresetId::parse("ll-full"));
  Proof ax = Proof::infer(full, AxRule{X}, {});
  Proof pr = Proof::infer(full, PromRule{kBullet, 0}, {ax});
  CHECK(check_proof(full, pr));
  CheckReport r = check_proof(full, pr, {.rules = RuleSet::girard_only()});
  REQUIRE_FALSE(r.ok);
  CHECK(r.message.find("not admitted") != std::string::npos);
}

TEST_CASE("validity is monotone: every subproof of a valid proof is valid") {
  Instance broken = make_broken_instance();
  std::function<void(const Proof&)> walk = [&](const Proof& p) {
    CHECK(check_proof(broken, p));
    for (const Proof& q : p.premises()) walk(q);
  };
  walk(broken_instance_derivation(broken));
}

TEST_CASE("with_order wraps in a single exchange") {
  Instance full = make_preset(PresetId::parse("ll-full"));
  Proof ax = Proof::infer(full, AxRule{X}, {});
  Proof moved = with_order(ax, {Xd, X});
  CHECK(to_string(moved.conclusion()) == "|- X^, X");
  CHECK(check_proof(full, moved));
  CHECK(with_order(ax, ax.conclusion()).premises().empty());
}

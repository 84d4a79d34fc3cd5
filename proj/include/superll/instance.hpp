#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "formula.hpp"
#include "signature.hpp"

namespace superll {

// One evaluated parameter fact: de(e), co(e1..ek -> e), dg(e1,e2 -> e) or
// p(n,e).
struct ParamQuery {
  enum class Kind { De, Co, Dg, P };

  Kind kind;
  std::vector<Sig> sigs;  // co premises / dg pair
  Sig target;
  std::size_t n = 0;  // promotion width

  static ParamQuery de(Sig e) { return {Kind::De, {}, std::move(e), 0}; }
  static ParamQuery co(std::vector<Sig> from, Sig to) {
    return {Kind::Co, std::move(from), std::move(to), 0};
  }
  static ParamQuery dg(Sig e1, Sig e2, Sig to) {
    return {Kind::Dg, {std::move(e1), std::move(e2)}, std::move(to), 0};
  }
  static ParamQuery p(std::size_t n, Sig e) {
    return {Kind::P, {}, std::move(e), n};
  }

  std::string str() const {
    switch (kind) {
      case Kind::De:
        return "de(" + target.name + ")";
      case Kind::Co:
        return "co(" + sig_list_str(sigs) + " -> " + target.name + ")";
      case Kind::Dg:
        return "dg(" + sig_list_str(sigs) + " -> " + target.name + ")";
      case Kind::P:
        return "p(" + std::to_string(n) + "," + target.name + ")";
    }
    return {};
  }
};

// An existential obligation from the Girardization or subsumption tables.
// The answer is a signature tuple satisfying the demanded conjunction.
struct WitnessQuery {
  enum class Kind {
    DigThroughCo,  // co_k(eps,e1), dg(e1,e2,e)  |-  dg(eps_i,e2,out_i), co_k(out,e)
    DigAssoc,      // dg(e1,e2,e'), dg(e',e3,e)  |-  dg(e2,e3,out), dg(e1,out,e)
    GirardUnit,    // n>0, p_n(e)                |-  de(out), dg(e,out,e)
    CoAbove,       // co_k(eps,e1), e1<=e2       |-  eps_i<=out_i, co_k(out,e2)
    DigAbove,      // dg(eps1,eps2,e1), e1<=e2   |-  eps1<=out, dg(out,eps2,e2)
  };

  Kind kind;
  std::vector<Sig> eps;
  Sig e1, e2, e3, e;
  std::size_t n = 0;

  std::string str() const {
    switch (kind) {
      case Kind::DigThroughCo:
        return "gir3(" + sig_list_str(eps) + "; " + e1.name + "," + e2.name +
               "," + e.name + ")";
      case Kind::DigAssoc:
        return "gir4(" + e1.name + "," + e2.name + "," + e3.name + "," +
               e.name + ")";
      case Kind::GirardUnit:
        return "gir5(" + std::to_string(n) + "," + e.name + ")";
      case Kind::CoAbove:
        return "sb5(" + sig_list_str(eps) + "; " + e2.name + ")";
      case Kind::DigAbove:
        return "sb6(" + eps[0].name + "," + eps[1].name + "; " + e2.name + ")";
    }
    return {};
  }
};

// Optional witness providers for instances whose signature set is not
// finitely enumerable. Every returned tuple is re-checked at the use site.
struct WitnessProviders {
  std::function<std::optional<std::vector<Sig>>(
      const std::vector<Sig>& eps, const Sig& e2, const Sig& e)>
      dig_through_co;
  std::function<std::optional<Sig>(const Sig& e1, const Sig& e2, const Sig& e3,
                                   const Sig& e)>
      dig_assoc;
  std::function<std::optional<Sig>(std::size_t n, const Sig& e)> girard_unit;
  std::function<std::optional<std::vector<Sig>>(const std::vector<Sig>& eps,
                                                const Sig& e2)>
      co_above;
  std::function<std::optional<Sig>(const Sig& eps1, const Sig& eps2,
                                   const Sig& e2)>
      dig_above;
};

// A superLL parameter bundle (E, de, co, dg, p). Predicates must be total and
// deterministic on the declared signature set. Immutable after construction;
// all evaluation is pure.
class Instance {
 public:
  std::string name = "anonymous";

  // Canonical enumeration of signatures, in declaration order. For instances
  // over an infinite set (semiring presets) this is a declared sample and
  // `sample_only` is set; `member` then accepts the full set.
  std::vector<Sig> signatures;
  bool sample_only = false;
  std::function<bool(const Sig&)> member;  // defaults to declared-set lookup

  std::function<bool(const Sig&)> de_fn;
  std::function<bool(const std::vector<Sig>&, const Sig&)> co_fn;
  std::function<bool(const Sig&, const Sig&, const Sig&)> dg_fn;
  std::function<bool(std::size_t, const Sig&)> p_fn;

  WitnessProviders witnesses;

  // Axiom tables established analytically for built-in presets; reports for
  // these state unconditional validity instead of a bounded claim.
  struct Proved {
    bool cut = false;
    bool expansion = false;
    bool girardization = false;
    bool subsumption = false;
  } proved;

  bool contains(const Sig& s) const {
    if (member) return member(s);
    return std::find(signatures.begin(), signatures.end(), s) !=
           signatures.end();
  }

  void require(const Sig& s) const {
    if (!contains(s)) throw UnknownSignatureError(s.name);
  }

  void require_formula(const Formula& f) const {
    if (f.is_exponential()) {
      require(f.sig());
      require_formula(f.body());
    } else if (f.is_binary()) {
      require_formula(f.left());
      require_formula(f.right());
    }
  }

  bool de(const Sig& e) const {
    require(e);
    return de_fn && de_fn(e);
  }
  bool co(const std::vector<Sig>& from, const Sig& to) const {
    for (const Sig& s : from) require(s);
    require(to);
    return co_fn && co_fn(from, to);
  }
  bool dg(const Sig& e1, const Sig& e2, const Sig& to) const {
    require(e1);
    require(e2);
    require(to);
    return dg_fn && dg_fn(e1, e2, to);
  }
  bool p(std::size_t n, const Sig& e) const {
    require(e);
    return p_fn && p_fn(n, e);
  }

  bool eval(const ParamQuery& q) const {
    switch (q.kind) {
      case ParamQuery::Kind::De:
        return de(q.target);
      case ParamQuery::Kind::Co:
        return co(q.sigs, q.target);
      case ParamQuery::Kind::Dg:
        return dg(q.sigs[0], q.sigs[1], q.target);
      case ParamQuery::Kind::P:
        return p(q.n, q.target);
    }
    return false;
  }

  void check_side_condition(const ParamQuery& q) const {
    if (!eval(q)) throw SideConditionError(q.str());
  }
};

namespace detail {

// Enumerates candidate tuples slot by slot; each slot's candidates come from
// a unary filter, the joint condition is checked on complete tuples.
inline std::optional<std::vector<Sig>> product_search(
    const std::vector<std::vector<Sig>>& candidates,
    const std::function<bool(const std::vector<Sig>&)>& joint) {
  std::vector<Sig> tuple(candidates.size());
  std::function<bool(std::size_t)> go = [&](std::size_t slot) {
    if (slot == candidates.size()) return joint(tuple);
    for (const Sig& s : candidates[slot]) {
      tuple[slot] = s;
      if (go(slot + 1)) return true;
    }
    return false;
  };
  if (go(0)) return tuple;
  return std::nullopt;
}

}  // namespace detail

// Discharges an existential obligation: deterministic, first witness in the
// instance's canonical signature ordering, or the witness provider's output
// (validated). Throws WitnessError when no witness exists.
inline std::vector<Sig> find_witness(const Instance& inst,
                                     const WitnessQuery& q) {
  auto validate = [&](const std::vector<Sig>& out) -> bool {
    switch (q.kind) {
      case WitnessQuery::Kind::DigThroughCo: {
        if (out.size() != q.eps.size()) return false;
        for (std::size_t i = 0; i < out.size(); ++i)
          if (!inst.dg(q.eps[i], q.e2, out[i])) return false;
        return inst.co(out, q.e);
      }
      case WitnessQuery::Kind::DigAssoc:
        return out.size() == 1 && inst.dg(q.e2, q.e3, out[0]) &&
               inst.dg(q.e1, out[0], q.e);
      case WitnessQuery::Kind::GirardUnit:
        return out.size() == 1 && inst.de(out[0]) &&
               inst.dg(q.e, out[0], q.e);
      case WitnessQuery::Kind::CoAbove: {
        if (out.size() != q.eps.size()) return false;
        for (std::size_t i = 0; i < out.size(); ++i)
          if (!inst.co({q.eps[i]}, out[i])) return false;
        return inst.co(out, q.e2);
      }
      case WitnessQuery::Kind::DigAbove:
        return out.size() == 1 && inst.co({q.eps[0]}, out[0]) &&
               inst.dg(out[0], q.eps[1], q.e2);
    }
    return false;
  };

  // Provider first: for sampled infinite sets it is the only exact source.
  std::optional<std::vector<Sig>> provided;
  switch (q.kind) {
    case WitnessQuery::Kind::DigThroughCo:
      if (inst.witnesses.dig_through_co)
        provided = inst.witnesses.dig_through_co(q.eps, q.e2, q.e);
      break;
    case WitnessQuery::Kind::DigAssoc:
      if (inst.witnesses.dig_assoc) {
        if (auto w = inst.witnesses.dig_assoc(q.e1, q.e2, q.e3, q.e))
          provided = std::vector<Sig>{*w};
      }
      break;
    case WitnessQuery::Kind::GirardUnit:
      if (inst.witnesses.girard_unit) {
        if (auto w = inst.witnesses.girard_unit(q.n, q.e))
          provided = std::vector<Sig>{*w};
      }
      break;
    case WitnessQuery::Kind::CoAbove:
      if (inst.witnesses.co_above)
        provided = inst.witnesses.co_above(q.eps, q.e2);
      break;
    case WitnessQuery::Kind::DigAbove:
      if (inst.witnesses.dig_above) {
        if (auto w = inst.witnesses.dig_above(q.eps[0], q.eps[1], q.e2))
          provided = std::vector<Sig>{*w};
      }
      break;
  }
  if (provided) {
    if (!validate(*provided))
      throw WitnessError("bad witness for obligation " + q.str());
    return *provided;
  }

  std::size_t arity =
      (q.kind == WitnessQuery::Kind::DigThroughCo ||
       q.kind == WitnessQuery::Kind::CoAbove)
          ? q.eps.size()
          : 1;
  std::vector<std::vector<Sig>> candidates(arity, inst.signatures);
  // Narrow per-slot by the independent unary conjuncts; keeps the product
  // tiny on functional instances.
  if (q.kind == WitnessQuery::Kind::DigThroughCo) {
    for (std::size_t i = 0; i < arity; ++i) {
      std::vector<Sig> cs;
      for (const Sig& s : inst.signatures)
        if (inst.dg(q.eps[i], q.e2, s)) cs.push_back(s);
      candidates[i] = std::move(cs);
    }
  } else if (q.kind == WitnessQuery::Kind::CoAbove) {
    for (std::size_t i = 0; i < arity; ++i) {
      std::vector<Sig> cs;
      for (const Sig& s : inst.signatures)
        if (inst.co({q.eps[i]}, s)) cs.push_back(s);
      candidates[i] = std::move(cs);
    }
  }
  auto found = detail::product_search(
      candidates, [&](const std::vector<Sig>& t) { return validate(t); });
  if (!found) throw WitnessError("no witness for obligation " + q.str());
  return *found;
}

}  // namespace superll

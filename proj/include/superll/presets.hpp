#pragma once

#include <map>
#include <set>

#include "axioms.hpp"

namespace superll {

// Signature names used by the two-signature presets. `b` plays the role of
// the plain exponential pair !/?, `s` the second signature (soft/paragraph/
// shift, depending on the system).
inline const Sig kBullet{"b"};
inline const Sig kStar{"s"};

// Parameters of the subexponential preset: a pre-ordered signature set plus
// the weakenable and contractible subsets, which must be upward closed.
struct SellParams {
  std::vector<Sig> elements;
  std::vector<std::pair<Sig, Sig>> order;  // closed reflexively/transitively
  std::vector<Sig> weakenable;             // E_W
  std::vector<Sig> contractible;           // E_C

  static SellParams three_chain() {
    Sig a{"a"}, b{"b"}, c{"c"};
    return {{a, b, c}, {{a, b}, {b, c}}, {b, c}, {b, c}};
  }

  static SellParams two_chain() {
    Sig a{"a"}, b{"b"};
    return {{a, b}, {{a, b}}, {a, b}, {a, b}};
  }
};

// Ordered semiring over the naturals; signatures are named n0, n1, n2, ...
// Plain is (N,+,0,*,1,<=); MaxPlus is (N,max,0,+,0,<=).
struct BsllParams {
  enum class Ring { Plain, MaxPlus };
  Ring ring = Ring::Plain;
  std::size_t sample_max = 4;  // declared sample {n0..n(sample_max)}
};

struct PresetId {
  enum class Kind { LLFunctorial, ELL, SLL, LLFull, LLL, Shift, SeLL, BSLL };

  Kind kind = Kind::LLFull;
  SellParams sell = SellParams::three_chain();
  BsllParams bsll;

  static PresetId of(Kind k) {
    PresetId id;
    id.kind = k;
    return id;
  }

  static std::vector<std::string> names() {
    return {"ll-functorial", "ell", "sll", "ll-full",
            "lll",           "shift", "sell", "bsll"};
  }

  static PresetId parse(const std::string& name) {
    using K = Kind;
    static const std::map<std::string, Kind> table = {
        {"ll-functorial", K::LLFunctorial},
        {"ell", K::ELL},
        {"sll", K::SLL},
        {"ll-full", K::LLFull},
        {"lll", K::LLL},
        {"shift", K::Shift},
        {"sell", K::SeLL},
        {"bsll", K::BSLL}};
    auto it = table.find(name);
    if (it == table.end()) throw Error("unknown preset: " + name);
    return of(it->second);
  }

  std::string name() const {
    switch (kind) {
      case Kind::LLFunctorial:
        return "ll-functorial";
      case Kind::ELL:
        return "ell";
      case Kind::SLL:
        return "sll";
      case Kind::LLFull:
        return "ll-full";
      case Kind::LLL:
        return "lll";
      case Kind::Shift:
        return "shift";
      case Kind::SeLL:
        return "sell";
      case Kind::BSLL:
        return "bsll";
    }
    return {};
  }
};

namespace detail {

struct SigPairLess {
  bool operator()(const std::pair<Sig, Sig>& a,
                  const std::pair<Sig, Sig>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

// Reflexive-transitive closure of the declared order edges.
inline std::set<std::pair<Sig, Sig>, SigPairLess> preorder_closure(
    const SellParams& params) {
  std::set<std::pair<Sig, Sig>, SigPairLess> rel;
  for (const Sig& e : params.elements) rel.insert({e, e});
  for (const auto& edge : params.order) rel.insert(edge);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& xy : rel)
      for (const auto& yz : rel)
        if (xy.second == yz.first && !rel.count({xy.first, yz.second})) {
          rel.insert({xy.first, yz.second});
          changed = true;
        }
  }
  return rel;
}

struct RingOps {
  long zero, one;
  long (*add)(long, long);
  long (*mul)(long, long);
};

inline RingOps ring_ops(BsllParams::Ring ring) {
  if (ring == BsllParams::Ring::MaxPlus)
    return {0, 0, [](long a, long b) { return a > b ? a : b; },
            [](long a, long b) { return a + b; }};
  return {0, 1, [](long a, long b) { return a + b; },
          [](long a, long b) { return a * b; }};
}

inline std::optional<long> nat_sig_value(const Sig& s) {
  if (s.name.size() < 2 || s.name[0] != 'n') return std::nullopt;
  long v = 0;
  for (std::size_t i = 1; i < s.name.size(); ++i) {
    char c = s.name[i];
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

inline Sig nat_sig(long v) { return Sig{"n" + std::to_string(v)}; }

inline void check_semiring_laws(const RingOps& ops, long sample_max) {
  auto fail = [](const std::string& law) {
    throw PreconditionError("semiring law violated on the sample: " + law);
  };
  for (long a = 0; a <= sample_max; ++a) {
    if (ops.add(a, ops.zero) != a) fail("additive unit");
    if (ops.mul(a, ops.one) != a || ops.mul(ops.one, a) != a)
      fail("multiplicative unit");
    for (long b = 0; b <= sample_max; ++b) {
      if (ops.add(a, b) != ops.add(b, a)) fail("additive commutativity");
      for (long c = 0; c <= sample_max; ++c) {
        if (ops.add(ops.add(a, b), c) != ops.add(a, ops.add(b, c)))
          fail("additive associativity");
        if (ops.mul(ops.mul(a, b), c) != ops.mul(a, ops.mul(b, c)))
          fail("multiplicative associativity");
        if (ops.mul(a, ops.add(b, c)) != ops.add(ops.mul(a, b), ops.mul(a, c)))
          fail("left distributivity");
        if (ops.mul(ops.add(a, b), c) != ops.add(ops.mul(a, c), ops.mul(b, c)))
          fail("right distributivity");
        // order compatibility: a <= b entails a+c <= b+c and a*c <= b*c
        if (a <= b &&
            (ops.add(a, c) > ops.add(b, c) || ops.mul(a, c) > ops.mul(b, c) ||
             ops.mul(c, a) > ops.mul(c, b)))
          fail("order compatibility");
      }
    }
  }
}

}  // namespace detail

// Builds the predicate tables of the built-in systems; only the listed
// combinations are true. Analytically-proved flags record which axiom tables
// each preset is known to satisfy unconditionally.
inline Instance make_preset(const PresetId& id) {
  using Kind = PresetId::Kind;
  Instance inst;
  inst.name = id.name();
  const Sig b = kBullet, s = kStar;

  auto only = [](std::vector<Sig> sigs) { return sigs; };

  switch (id.kind) {
    case Kind::LLFunctorial: {
      inst.signatures = only({b});
      inst.de_fn = [b](const Sig& e) { return e == b; };
      inst.co_fn = [b](const std::vector<Sig>& from, const Sig& to) {
        if (to != b) return false;
        if (from.size() != 0 && from.size() != 2) return false;
        for (const Sig& e : from)
          if (e != b) return false;
        return true;
      };
      inst.dg_fn = [b](const Sig& e1, const Sig& e2, const Sig& e) {
        return e1 == b && e2 == b && e == b;
      };
      inst.p_fn = [](std::size_t, const Sig&) { return true; };
      inst.proved = {true, true, false, false};
      break;
    }
    case Kind::ELL: {
      inst.signatures = only({b});
      inst.de_fn = [](const Sig&) { return false; };
      inst.co_fn = [b](const std::vector<Sig>& from, const Sig& to) {
        if (to != b) return false;
        if (from.size() != 0 && from.size() != 2) return false;
        for (const Sig& e : from)
          if (e != b) return false;
        return true;
      };
      inst.dg_fn = [](const Sig&, const Sig&, const Sig&) { return false; };
      inst.p_fn = [](std::size_t, const Sig&) { return true; };
      inst.proved = {true, true, false, false};
      break;
    }
    case Kind::SLL: {
      inst.signatures = only({b, s});
      inst.de_fn = [s](const Sig& e) { return e == s; };
      // co_k(s,...,s,b) for every k (multiplexing through the soft signature)
      inst.co_fn = [b, s](const std::vector<Sig>& from, const Sig& to) {
        if (to != b) return false;
        for (const Sig& e : from)
          if (e != s) return false;
        return true;
      };
      inst.dg_fn = [](const Sig&, const Sig&, const Sig&) { return false; };
      inst.p_fn = [](std::size_t, const Sig&) { return true; };
      inst.proved = {true, true, false, false};
      break;
    }
    case Kind::LLFull: {
      inst.signatures = only({b});
      inst.de_fn = [b](const Sig& e) { return e == b; };
      inst.co_fn = [b](const std::vector<Sig>& from, const Sig& to) {
        if (to != b) return false;
        for (const Sig& e : from)
          if (e != b) return false;
        return true;
      };
      inst.dg_fn = [b](const Sig& e1, const Sig& e2, const Sig& e) {
        return e1 == b && e2 == b && e == b;
      };
      inst.p_fn = [](std::size_t, const Sig&) { return true; };
      inst.proved = {true, true, true, false};
      break;
    }
    case Kind::LLL: {
      inst.signatures = only({b, s});
      inst.de_fn = [](const Sig&) { return false; };
      // co_0(b); co_1(b,b), co_1(s,s), co_1(s,b); co_2(b,b,b).
      // The key point is co_1(b,s) = false.
      inst.co_fn = [b, s](const std::vector<Sig>& from, const Sig& to) {
        switch (from.size()) {
          case 0:
            return to == b;
          case 1:
            return (from[0] == b && to == b) || (from[0] == s && to == s) ||
                   (from[0] == s && to == b);
          case 2:
            return from[0] == b && from[1] == b && to == b;
          default:
            return false;
        }
      };
      inst.dg_fn = [](const Sig&, const Sig&, const Sig&) { return false; };
      inst.p_fn = [b, s](std::size_t n, const Sig& e) {
        if (e == s) return true;
        return e == b && n == 1;
      };
      inst.proved = {true, true, false, true};
      break;
    }
    case Kind::Shift: {
      inst.signatures = only({b, s});
      inst.de_fn = [](const Sig&) { return true; };
      inst.co_fn = [b, s](const std::vector<Sig>& from, const Sig& to) {
        switch (from.size()) {
          case 0:
            return to == b;
          case 1:
            return from[0] == to;  // co_1(b,b) and co_1(s,s)
          case 2:
            return from[0] == b && from[1] == b && to == b;
          default:
            return false;
        }
      };
      // the two signatures do not interact
      inst.dg_fn = [](const Sig& e1, const Sig& e2, const Sig& e) {
        return e1 == e2 && e2 == e;
      };
      inst.p_fn = [](std::size_t, const Sig&) { return true; };
      inst.proved = {true, true, true, false};
      break;
    }
    case Kind::SeLL: {
      auto rel = detail::preorder_closure(id.sell);
      auto leq = [rel](const Sig& x, const Sig& y) {
        return rel.count({x, y}) > 0;
      };
      std::set<Sig> ew(id.sell.weakenable.begin(), id.sell.weakenable.end());
      std::set<Sig> ec(id.sell.contractible.begin(),
                       id.sell.contractible.end());
      for (const Sig& e : id.sell.elements) {
        for (const Sig& f : id.sell.elements) {
          if (!leq(e, f)) continue;
          if (ew.count(e) && !ew.count(f))
            throw PreconditionError("sell: E_W not upward closed at " + e.name +
                                    " <= " + f.name);
          if (ec.count(e) && !ec.count(f))
            throw PreconditionError("sell: E_C not upward closed at " + e.name +
                                    " <= " + f.name);
        }
      }
      inst.signatures = id.sell.elements;
      inst.de_fn = [](const Sig&) { return true; };
      inst.co_fn = [ew, ec](const std::vector<Sig>& from, const Sig& to) {
        switch (from.size()) {
          case 0:
            return ew.count(to) > 0;
          case 1:
            return from[0] == to;
          case 2:
            return from[0] == to && from[1] == to && ec.count(to) > 0;
          default:
            return false;
        }
      };
      inst.dg_fn = [leq](const Sig& e1, const Sig& e2, const Sig& e) {
        return leq(e1, e2) && e2 == e;
      };
      inst.p_fn = [](std::size_t, const Sig&) { return true; };
      inst.proved = {true, true, true, false};
      break;
    }
    case Kind::BSLL: {
      auto ops = detail::ring_ops(id.bsll.ring);
      detail::check_semiring_laws(ops, static_cast<long>(id.bsll.sample_max));
      for (long v = 0; v <= static_cast<long>(id.bsll.sample_max); ++v)
        inst.signatures.push_back(detail::nat_sig(v));
      inst.sample_only = true;
      inst.member = [](const Sig& e) {
        return detail::nat_sig_value(e).has_value();
      };
      auto val = [](const Sig& e) { return *detail::nat_sig_value(e); };
      inst.de_fn = [ops, val](const Sig& e) { return val(e) == ops.one; };
      inst.co_fn = [ops, val](const std::vector<Sig>& from, const Sig& to) {
        switch (from.size()) {
          case 0:
            return val(to) == ops.zero;
          case 1:
            return val(from[0]) <= val(to);
          case 2:
            return ops.add(val(from[0]), val(from[1])) == val(to);
          default:
            return false;
        }
      };
      inst.dg_fn = [ops, val](const Sig& e1, const Sig& e2, const Sig& e) {
        return ops.mul(val(e1), val(e2)) == val(e);
      };
      inst.p_fn = [](std::size_t, const Sig&) { return true; };
      // witnesses for the (infinite) semiring: products, associativity and
      // the multiplicative unit
      inst.witnesses.dig_through_co =
          [ops, val](const std::vector<Sig>& eps, const Sig& e2,
                     const Sig&) -> std::optional<std::vector<Sig>> {
        std::vector<Sig> out;
        for (const Sig& x : eps)
          out.push_back(detail::nat_sig(ops.mul(val(x), val(e2))));
        return out;
      };
      inst.witnesses.dig_assoc = [ops, val](const Sig&, const Sig& e2,
                                            const Sig& e3,
                                            const Sig&) -> std::optional<Sig> {
        return detail::nat_sig(ops.mul(val(e2), val(e3)));
      };
      inst.witnesses.girard_unit = [ops](std::size_t,
                                         const Sig&) -> std::optional<Sig> {
        return detail::nat_sig(ops.one);
      };
      inst.proved = {true, true, true, false};
      break;
    }
  }
  return inst;
}

// The instance of the cut-elimination counterexample: E = {e, e'} with
// p_2(e), p_1(e'), co_1(e',e) and everything else false. Its proofs can use
// a cut that no cut-free proof can replace.
inline Instance make_broken_instance() {
  Instance inst;
  inst.name = "broken";
  Sig e{"e"}, ep{"e'"};
  inst.signatures = {e, ep};
  inst.de_fn = [](const Sig&) { return false; };
  inst.co_fn = [e, ep](const std::vector<Sig>& from, const Sig& to) {
    return from.size() == 1 && from[0] == ep && to == e;
  };
  inst.dg_fn = [](const Sig&, const Sig&, const Sig&) { return false; };
  inst.p_fn = [e, ep](std::size_t n, const Sig& x) {
    return (n == 2 && x == e) || (n == 1 && x == ep);
  };
  return inst;
}

}  // namespace superll

#pragma once

#include <unordered_map>

#include "proof.hpp"

namespace superll {

struct SearchBudget {
  std::size_t max_depth = 12;
  std::size_t max_nodes = 100000;
  std::size_t max_contraction_arity = 3;
  std::size_t max_promotion_width = 8;
  std::size_t max_dg_chain = 2;  // consecutive digging steps per branch
};

enum class SearchStatus {
  Found,       // a cut-free proof of the goal
  Exhausted,   // node budget hit; inconclusive
  NotProvable  // the bounded space was explored completely, no proof
};

struct SearchResult {
  SearchStatus status = SearchStatus::NotProvable;
  std::optional<Proof> proof;
  std::size_t visited = 0;

  bool found() const { return status == SearchStatus::Found; }
};

namespace detail {

// Backward bounded search. Deterministic: rules are tried in a fixed order
// and the first proof found is returned. Failed sequents are memoized per
// remaining depth and digging allowance.
class Searcher {
 public:
  Searcher(const Instance& inst, const SearchBudget& budget)
      : inst_(inst), budget_(budget) {}

  SearchResult run(const Sequent& goal) {
    SearchResult result;
    try {
      auto proof = prove(goal, budget_.max_depth, budget_.max_dg_chain);
      result.visited = visited_;
      if (proof) {
        result.status = SearchStatus::Found;
        result.proof = std::move(*proof);
      } else {
        result.status =
            out_of_nodes_ ? SearchStatus::Exhausted : SearchStatus::NotProvable;
      }
    } catch (const Error&) {
      throw;
    }
    return result;
  }

 private:
  std::string key(const Sequent& g, std::size_t dg_chain) const {
    Sequent sorted = g;
    std::sort(sorted.begin(), sorted.end(),
              [](const Formula& a, const Formula& b) {
                return Formula::compare(a, b) < 0;
              });
    std::string k = std::to_string(dg_chain) + "#";
    for (const Formula& f : sorted) {
      k += to_string(f);
      k += ';';
    }
    return k;
  }

  // depth is the remaining rule-node budget on this branch
  std::optional<Proof> prove(const Sequent& goal, std::size_t depth,
                             std::size_t dg_chain) {
    if (++visited_ > budget_.max_nodes) {
      out_of_nodes_ = true;
      return std::nullopt;
    }
    if (depth == 0) return std::nullopt;

    std::string k = key(goal, dg_chain);
    auto memo = failed_.find(k);
    if (memo != failed_.end() && memo->second >= depth) return std::nullopt;

    std::optional<Proof> found = attempt(goal, depth, dg_chain);
    if (!found && !out_of_nodes_) {
      // only genuine exhaustive failures are memoized; a truncated branch
      // proves nothing
      auto& best = failed_[k];
      best = std::max(best, depth);
    }
    return found;
  }

  std::optional<Proof> attempt(const Sequent& goal, std::size_t depth,
                               std::size_t dg_chain) {
    // T closes any branch immediately
    for (std::size_t i = 0; i < goal.size(); ++i)
      if (goal[i].kind() == Formula::Kind::Top)
        return with_order(
            Proof::infer(inst_, TopRule{erased(goal, i)}, {}), goal);

    if (goal.size() == 1 && goal[0].kind() == Formula::Kind::One)
      return Proof::infer(inst_, OneRule{}, {});

    if (goal.size() == 2) {
      if (dual(goal[0]) == goal[1])
        return Proof::infer(inst_, AxRule{goal[0]}, {});
      if (dual(goal[1]) == goal[0])
        return with_order(Proof::infer(inst_, AxRule{goal[1]}, {}), goal);
    }

    for (std::size_t i = 0; i < goal.size(); ++i) {
      auto out = attempt_at(goal, i, depth, dg_chain);
      if (out) return out;
    }
    return std::nullopt;
  }

  // close `proof of premise-shaped goal` into the original order
  std::optional<Proof> finish(const Rule& rule, std::vector<Proof> prems,
                              const Sequent& goal) {
    Proof out = Proof::infer(inst_, rule, std::move(prems));
    return with_order(std::move(out), goal);
  }

  std::optional<Proof> attempt_at(const Sequent& goal, std::size_t i,
                                  std::size_t depth, std::size_t dg_chain) {
    using K = Formula::Kind;
    const Formula& f = goal[i];
    Sequent rest = erased(goal, i);
    std::size_t d = depth - 1;
    std::size_t fresh_chain = budget_.max_dg_chain;

    switch (f.kind()) {
      case K::Bot: {
        auto sub = prove(rest, d, fresh_chain);
        if (!sub) return std::nullopt;
        Proof out = Proof::infer(inst_, BotRule{}, {std::move(*sub)});
        return with_order(std::move(out), goal);
      }
      case K::Parr: {
        Sequent prem{f.left(), f.right()};
        prem.insert(prem.end(), rest.begin(), rest.end());
        auto sub = prove(prem, d, fresh_chain);
        if (!sub) return std::nullopt;
        Proof out = Proof::infer(inst_, ParrRule{0, 1}, {std::move(*sub)});
        return with_order(std::move(out), goal);
      }
      case K::With: {
        Sequent p1{f.left()}, p2{f.right()};
        p1.insert(p1.end(), rest.begin(), rest.end());
        p2.insert(p2.end(), rest.begin(), rest.end());
        auto s1 = prove(p1, d, fresh_chain);
        if (!s1) return std::nullopt;
        auto s2 = prove(p2, d, fresh_chain);
        if (!s2) return std::nullopt;
        Proof out = Proof::infer(inst_, WithRule{0, 0},
                                 {std::move(*s1), std::move(*s2)});
        return with_order(std::move(out), goal);
      }
      case K::Plus: {
        Sequent p1{f.left()};
        p1.insert(p1.end(), rest.begin(), rest.end());
        if (auto s1 = prove(p1, d, fresh_chain)) {
          Proof out =
              Proof::infer(inst_, Plus1Rule{0, f.right()}, {std::move(*s1)});
          return with_order(std::move(out), goal);
        }
        Sequent p2{f.right()};
        p2.insert(p2.end(), rest.begin(), rest.end());
        if (auto s2 = prove(p2, d, fresh_chain)) {
          Proof out =
              Proof::infer(inst_, Plus2Rule{0, f.left()}, {std::move(*s2)});
          return with_order(std::move(out), goal);
        }
        return std::nullopt;
      }
      case K::Tensor: {
        // enumerate every split of the context between the premises
        std::size_t n = rest.size();
        if (n > 20) return std::nullopt;
        for (std::size_t mask = 0; mask < (1u << n); ++mask) {
          Sequent p1{f.left()}, p2{f.right()};
          for (std::size_t j = 0; j < n; ++j)
            (mask & (1u << j) ? p1 : p2).push_back(rest[j]);
          auto s1 = prove(p1, d, fresh_chain);
          if (!s1) continue;
          auto s2 = prove(p2, d, fresh_chain);
          if (!s2) continue;
          Proof out = Proof::infer(inst_, TensorRule{0, 0},
                                   {std::move(*s1), std::move(*s2)});
          return with_order(std::move(out), goal);
        }
        return std::nullopt;
      }
      case K::Bang: {
        // functorial promotion: every other formula must be ?_e-prefixed
        // with the promoted signature
        const Sig& e = f.sig();
        if (rest.size() > budget_.max_promotion_width) return std::nullopt;
        for (const Formula& g : rest)
          if (!g.is_quest() || g.sig() != e) return std::nullopt;
        if (!inst_.p(rest.size(), e)) return std::nullopt;
        Sequent prem{f.body()};
        for (const Formula& g : rest) prem.push_back(g.body());
        auto sub = prove(prem, d, fresh_chain);
        if (!sub) return std::nullopt;
        Proof out = Proof::infer(inst_, PromRule{e, 0}, {std::move(*sub)});
        return with_order(std::move(out), goal);
      }
      case K::Quest: {
        const Sig& e = f.sig();
        // dereliction
        if (inst_.de(e)) {
          Sequent prem{f.body()};
          prem.insert(prem.end(), rest.begin(), rest.end());
          if (auto sub = prove(prem, d, fresh_chain)) {
            Proof out =
                Proof::infer(inst_, DeRule{e, 0}, {std::move(*sub)});
            return with_order(std::move(out), goal);
          }
        }
        // contraction family, k = 0 .. K
        for (std::size_t karity = 0; karity <= budget_.max_contraction_arity;
             ++karity) {
          auto out = try_contraction(goal, i, karity, d);
          if (out) return out;
        }
        // digging grows the formula; bounded by the consecutive-dg budget
        if (dg_chain > 0) {
          for (const Sig& e1 : inst_.signatures)
            for (const Sig& e2 : inst_.signatures) {
              if (!inst_.dg(e1, e2, e)) continue;
              Sequent prem{Formula::quest(e1, Formula::quest(e2, f.body()))};
              prem.insert(prem.end(), rest.begin(), rest.end());
              if (auto sub = prove(prem, d, dg_chain - 1)) {
                Proof out = Proof::infer(inst_, DgRule{e1, e2, e, 0},
                                         {std::move(*sub)});
                return with_order(std::move(out), goal);
              }
            }
        }
        return std::nullopt;
      }
      default:
        return std::nullopt;
    }
  }

  std::optional<Proof> try_contraction(const Sequent& goal, std::size_t i,
                                       std::size_t karity, std::size_t d) {
    const Formula& f = goal[i];
    Sequent rest = erased(goal, i);
    std::vector<Sig> tuple(karity);
    std::function<std::optional<Proof>(std::size_t)> go =
        [&](std::size_t slot) -> std::optional<Proof> {
      if (slot == karity) {
        if (!inst_.co(tuple, f.sig())) return std::nullopt;
        Sequent prem;
        for (const Sig& e : tuple) prem.push_back(Formula::quest(e, f.body()));
        prem.insert(prem.end(), rest.begin(), rest.end());
        auto sub = prove(prem, d, budget_.max_dg_chain);
        if (!sub) return std::nullopt;
        std::vector<std::size_t> indices(karity);
        for (std::size_t j = 0; j < karity; ++j) indices[j] = j;
        Formula weakened;
        if (karity == 0) weakened = f.body();
        Proof out = Proof::infer(inst_, CoRule{tuple, f.sig(), indices, weakened},
                                 {std::move(*sub)});
        return with_order(std::move(out), goal);
      }
      for (const Sig& e : inst_.signatures) {
        tuple[slot] = e;
        if (auto out = go(slot + 1)) return out;
      }
      return std::nullopt;
    };
    return go(0);
  }

  const Instance& inst_;
  const SearchBudget& budget_;
  std::unordered_map<std::string, std::size_t> failed_;
  std::size_t visited_ = 0;
  bool out_of_nodes_ = false;
};

}  // namespace detail

// Bounded backward search for a cut-free proof. A Found proof re-validates
// and concludes exactly the goal; NotProvable is a claim only up to the
// budget. Enlarging any budget field never turns Found into a miss.
inline SearchResult search_cutfree(const Instance& inst, const Sequent& goal,
                                   const SearchBudget& budget = {}) {
  for (const Formula& f : goal) inst.require_formula(f);
  detail::Searcher searcher(inst, budget);
  return searcher.run(goal);
}

}  // namespace superll

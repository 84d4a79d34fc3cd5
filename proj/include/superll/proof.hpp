#pragma once

#include "rules.hpp"

namespace superll {

// A rule-labeled derivation tree. Nodes store the conclusion computed by the
// rule schema; `unchecked` exists so that files and tests can carry stored
// conclusions for the validator to scrutinize.
class Proof {
 public:
  Proof() = default;

  // Shape-checked construction: the conclusion is computed by the schema.
  // Side conditions are not evaluated (no instance at hand).
  static Proof make(Rule rule, std::vector<Proof> premises) {
    std::vector<Sequent> prems;
    prems.reserve(premises.size());
    for (const Proof& p : premises) prems.push_back(p.conclusion());
    Sequent concl = conclusion_of(rule, prems);
    return Proof(std::make_shared<const Node>(
        Node{std::move(rule), std::move(concl), std::move(premises)}));
  }

  // Full construction: shape plus side conditions under the instance.
  // Premises are assumed to validate already.
  static Proof infer(const Instance& inst, Rule rule,
                     std::vector<Proof> premises) {
    std::vector<Sequent> prems;
    prems.reserve(premises.size());
    for (const Proof& p : premises) prems.push_back(p.conclusion());
    Sequent concl = conclusion_of(rule, prems);
    for (const ParamQuery& q : side_conditions(rule, prems))
      inst.check_side_condition(q);
    return Proof(std::make_shared<const Node>(
        Node{std::move(rule), std::move(concl), std::move(premises)}));
  }

  // Raw construction with a stored conclusion; nothing is checked.
  static Proof unchecked(Rule rule, Sequent conclusion,
                         std::vector<Proof> premises) {
    return Proof(std::make_shared<const Node>(
        Node{std::move(rule), std::move(conclusion), std::move(premises)}));
  }

  bool null() const { return !n_; }
  const Rule& rule() const { return n_->rule; }
  const Sequent& conclusion() const { return n_->conclusion; }
  const std::vector<Proof>& premises() const { return n_->premises; }

 private:
  struct Node {
    Rule rule;
    Sequent conclusion;
    std::vector<Proof> premises;
  };

  explicit Proof(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  std::shared_ptr<const Node> n_;
};

// Number of rule nodes. Exchange nodes are excluded in measure mode (exchange
// is treated implicitly by every induction) and included in raw mode.
enum class SizeMode { Raw, ExchangeFree };

inline std::size_t proof_size(const Proof& p,
                              SizeMode mode = SizeMode::ExchangeFree) {
  std::size_t n = (mode == SizeMode::Raw || !is_exchange(p.rule())) ? 1 : 0;
  for (const Proof& q : p.premises()) n += proof_size(q, mode);
  return n;
}

inline std::size_t proof_depth(const Proof& p,
                               SizeMode mode = SizeMode::ExchangeFree) {
  std::size_t d = 0;
  for (const Proof& q : p.premises()) d = std::max(d, proof_depth(q, mode));
  return d + ((mode == SizeMode::Raw || !is_exchange(p.rule())) ? 1 : 0);
}

inline bool cut_free(const Proof& p) {
  if (is_cut(p.rule())) return false;
  for (const Proof& q : p.premises())
    if (!cut_free(q)) return false;
  return true;
}

inline std::size_t count_nodes_if(const Proof& p,
                                  const std::function<bool(const Rule&)>& f) {
  std::size_t n = f(p.rule()) ? 1 : 0;
  for (const Proof& q : p.premises()) n += count_nodes_if(q, f);
  return n;
}

// Wraps p in an exchange so its conclusion is exactly `target`; identity when
// already equal. The target must be a permutation of p's conclusion.
inline Proof with_order(Proof p, const Sequent& target) {
  if (sequent_eq(p.conclusion(), target)) return p;
  auto perm = find_permutation(p.conclusion(), target);
  if (!perm)
    throw InternalError("with_order: " + to_string(target) +
                        " is not a permutation of " +
                        to_string(p.conclusion()));
  return Proof::make(ExchangeRule{*perm}, {std::move(p)});
}

// Which rule flavors the validator admits. Transformations adjust the rule
// set: a girardized proof is checked without functorial promotion or digging,
// a desubsumed one without functorial promotion or unary contraction.
struct RuleSet {
  bool functorial_promotion = true;
  bool girard_promotion = true;
  bool ordered_promotion = true;
  bool digging = true;
  bool unary_contraction = true;

  static RuleSet all() { return {}; }
  static RuleSet girard_only() { return {false, true, true, false, true}; }
  static RuleSet ordered_only() { return {false, true, true, true, false}; }

  bool admits(const Rule& r) const {
    if (std::holds_alternative<PromRule>(r)) return functorial_promotion;
    if (std::holds_alternative<PromGirardRule>(r)) return girard_promotion;
    if (std::holds_alternative<PromOrderedRule>(r)) return ordered_promotion;
    if (std::holds_alternative<DgRule>(r)) return digging;
    if (const auto* co = std::get_if<CoRule>(&r))
      return co->froms.size() != 1 || unary_contraction;
    return true;
  }
};

struct CheckOptions {
  bool strict = false;  // require stored conclusions list-equal, not just
                        // permutation-equal
  RuleSet rules = RuleSet::all();
};

// Structured validation outcome; `path` is the premise-index path from the
// root to the first failing node ("" for the root).
struct CheckReport {
  bool ok = true;
  std::string path;
  std::string message;

  explicit operator bool() const { return ok; }
};

namespace detail {

inline bool check_proof_rec(const Instance& inst, const Proof& p,
                            const CheckOptions& opts, std::string& path,
                            CheckReport& report) {
  for (std::size_t i = 0; i < p.premises().size(); ++i) {
    std::size_t len = path.size();
    if (!path.empty()) path += '.';
    path += std::to_string(i);
    if (!check_proof_rec(inst, p.premises()[i], opts, path, report))
      return false;
    path.resize(len);
  }
  auto fail = [&](const std::string& msg) {
    report.ok = false;
    report.path = path.empty() ? "root" : path;
    report.message = msg;
    return false;
  };
  if (!opts.rules.admits(p.rule()))
    return fail("rule " + rule_name(p.rule()) +
                " not admitted by the active rule set");
  std::vector<Sequent> prems;
  prems.reserve(p.premises().size());
  for (const Proof& q : p.premises()) prems.push_back(q.conclusion());
  Sequent expect;
  try {
    expect = conclusion_of(p.rule(), prems);
    for (const ParamQuery& q : side_conditions(p.rule(), prems)) {
      if (!inst.eval(q)) return fail("side condition failed: " + q.str());
    }
  } catch (const Error& err) {
    return fail(err.what());
  }
  bool match = opts.strict ? sequent_eq(expect, p.conclusion())
                           : sequent_perm_eq(expect, p.conclusion());
  if (!match)
    return fail("stored conclusion " + to_string(p.conclusion()) +
                " differs from inferred " + to_string(expect));
  return true;
}

}  // namespace detail

// Re-infers every node and compares against the stored conclusion. Returns a
// structured report and never throws on invalid proofs.
inline CheckReport check_proof(const Instance& inst, const Proof& p,
                               CheckOptions opts = {}) {
  CheckReport report;
  std::string path;
  detail::check_proof_rec(inst, p, opts, path, report);
  return report;
}

}  // namespace superll

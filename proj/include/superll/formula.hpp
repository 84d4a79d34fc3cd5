#pragma once

#include <cassert>
#include <memory>
#include <string>
#include <utility>

#include "errors.hpp"
#include "signature.hpp"

namespace superll {

// Immutable formula tree over indexed exponentials. Negation is primitive on
// atoms only; duality on compound formulas is computed, never stored.
class Formula {
 public:
  enum class Kind {
    Atom,
    DualAtom,
    Tensor,
    Parr,
    One,
    Bot,
    With,
    Plus,
    Top,
    Zero,
    Bang,
    Quest,
  };

  Formula() = default;  // null placeholder; factories always produce nodes

  static Formula atom(std::string name) {
    return Formula(Kind::Atom, std::move(name));
  }
  static Formula dual_atom(std::string name) {
    return Formula(Kind::DualAtom, std::move(name));
  }
  static Formula tensor(Formula a, Formula b) {
    return Formula(Kind::Tensor, std::move(a), std::move(b));
  }
  static Formula parr(Formula a, Formula b) {
    return Formula(Kind::Parr, std::move(a), std::move(b));
  }
  static Formula with(Formula a, Formula b) {
    return Formula(Kind::With, std::move(a), std::move(b));
  }
  static Formula plus(Formula a, Formula b) {
    return Formula(Kind::Plus, std::move(a), std::move(b));
  }
  static Formula one() { return Formula(Kind::One); }
  static Formula bot() { return Formula(Kind::Bot); }
  static Formula top() { return Formula(Kind::Top); }
  static Formula zero() { return Formula(Kind::Zero); }
  static Formula bang(Sig e, Formula a) {
    return Formula(Kind::Bang, std::move(e), std::move(a));
  }
  static Formula quest(Sig e, Formula a) {
    return Formula(Kind::Quest, std::move(e), std::move(a));
  }

  bool null() const { return !n_; }
  Kind kind() const {
    assert(n_);
    return n_->kind;
  }
  const std::string& atom_name() const {
    assert(n_ && (n_->kind == Kind::Atom || n_->kind == Kind::DualAtom));
    return n_->name;
  }
  const Sig& sig() const {
    assert(n_ && (n_->kind == Kind::Bang || n_->kind == Kind::Quest));
    return n_->sig;
  }
  Formula left() const {
    assert(n_ && n_->a);
    return Formula(n_->a);
  }
  Formula right() const {
    assert(n_ && n_->b);
    return Formula(n_->b);
  }
  // Unary child of !_e / ?_e.
  Formula body() const { return left(); }

  bool is_binary() const {
    Kind k = kind();
    return k == Kind::Tensor || k == Kind::Parr || k == Kind::With ||
           k == Kind::Plus;
  }
  bool is_unit() const {
    Kind k = kind();
    return k == Kind::One || k == Kind::Bot || k == Kind::Top ||
           k == Kind::Zero;
  }
  bool is_exponential() const {
    Kind k = kind();
    return k == Kind::Bang || k == Kind::Quest;
  }
  bool is_quest() const { return kind() == Kind::Quest; }
  bool is_bang() const { return kind() == Kind::Bang; }
  bool is_atomic() const {
    Kind k = kind();
    return k == Kind::Atom || k == Kind::DualAtom;
  }

  friend bool operator==(const Formula& x, const Formula& y) {
    return compare(x, y) == 0;
  }
  friend bool operator!=(const Formula& x, const Formula& y) {
    return compare(x, y) != 0;
  }

  // Total structural order; used for canonical multiset comparison.
  static int compare(const Formula& x, const Formula& y) {
    if (x.n_ == y.n_) return 0;
    if (!x.n_) return -1;
    if (!y.n_) return 1;
    if (x.n_->kind != y.n_->kind)
      return static_cast<int>(x.n_->kind) < static_cast<int>(y.n_->kind) ? -1
                                                                         : 1;
    switch (x.n_->kind) {
      case Kind::Atom:
      case Kind::DualAtom:
        return x.n_->name.compare(y.n_->name);
      case Kind::One:
      case Kind::Bot:
      case Kind::Top:
      case Kind::Zero:
        return 0;
      case Kind::Bang:
      case Kind::Quest: {
        int c = x.n_->sig.name.compare(y.n_->sig.name);
        if (c) return c;
        return compare(Formula(x.n_->a), Formula(y.n_->a));
      }
      default: {
        int c = compare(Formula(x.n_->a), Formula(y.n_->a));
        if (c) return c;
        return compare(Formula(x.n_->b), Formula(y.n_->b));
      }
    }
  }

 private:
  struct Node {
    Kind kind;
    std::string name;  // Atom / DualAtom
    Sig sig;           // Bang / Quest
    std::shared_ptr<const Node> a, b;
  };

  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  explicit Formula(Kind k)
      : n_(std::make_shared<Node>(Node{k, {}, {}, nullptr, nullptr})) {}
  Formula(Kind k, std::string name)
      : n_(std::make_shared<Node>(Node{k, std::move(name), {}, nullptr, nullptr})) {}
  Formula(Kind k, Formula a, Formula b)
      : n_(std::make_shared<Node>(Node{k, {}, {}, std::move(a.n_), std::move(b.n_)})) {}
  Formula(Kind k, Sig e, Formula a)
      : n_(std::make_shared<Node>(Node{k, {}, std::move(e), std::move(a.n_), nullptr})) {}

  std::shared_ptr<const Node> n_;
};

// Duality: the involution of the standard table, extended to indexed
// exponentials by (!_e A)^ = ?_e A^ and (?_e A)^ = !_e A^.
inline Formula dual(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
      return Formula::dual_atom(f.atom_name());
    case K::DualAtom:
      return Formula::atom(f.atom_name());
    case K::Tensor:
      return Formula::parr(dual(f.left()), dual(f.right()));
    case K::Parr:
      return Formula::tensor(dual(f.left()), dual(f.right()));
    case K::With:
      return Formula::plus(dual(f.left()), dual(f.right()));
    case K::Plus:
      return Formula::with(dual(f.left()), dual(f.right()));
    case K::One:
      return Formula::bot();
    case K::Bot:
      return Formula::one();
    case K::Top:
      return Formula::zero();
    case K::Zero:
      return Formula::top();
    case K::Bang:
      return Formula::quest(f.sig(), dual(f.body()));
    case K::Quest:
      return Formula::bang(f.sig(), dual(f.body()));
  }
  throw InternalError("dual: bad kind");
}

// Node count. Strictly decreases into subformulas, which is all the
// cut-elimination induction needs.
inline std::size_t formula_size(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
    case K::DualAtom:
    case K::One:
    case K::Bot:
    case K::Top:
    case K::Zero:
      return 1;
    case K::Bang:
    case K::Quest:
      return 1 + formula_size(f.body());
    default:
      return 1 + formula_size(f.left()) + formula_size(f.right());
  }
}

namespace detail {

// Printing precedence: multiplicatives loosest, then additives, then the
// prefix modalities, then primaries. `& +` bind tighter than `* |`.
inline int print_prec(Formula::Kind k) {
  using K = Formula::Kind;
  switch (k) {
    case K::Tensor:
    case K::Parr:
      return 1;
    case K::With:
    case K::Plus:
      return 2;
    case K::Bang:
    case K::Quest:
      return 3;
    default:
      return 4;
  }
}

// parent_prec 0 means top level. Same-operator chains associate to the left
// without parentheses; mixed operators at equal precedence are always
// parenthesized (the grammar forbids mixing). Prefix modalities nest freely.
inline void print_formula(std::string& out, const Formula& f, int parent_prec,
                          Formula::Kind parent, bool left_child) {
  using K = Formula::Kind;
  K k = f.kind();
  int cp = print_prec(k);
  bool parens;
  if (cp > parent_prec) {
    parens = false;
  } else if (cp < parent_prec) {
    parens = true;
  } else {
    parens = !(cp == 3 || (left_child && k == parent));
  }
  if (parens) out += '(';
  switch (k) {
    case K::Atom:
      out += f.atom_name();
      break;
    case K::DualAtom:
      out += f.atom_name();
      out += '^';
      break;
    case K::One:
      out += '1';
      break;
    case K::Zero:
      out += '0';
      break;
    case K::Top:
      out += 'T';
      break;
    case K::Bot:
      out += 'F';
      break;
    case K::Bang:
    case K::Quest:
      out += (k == K::Bang ? '!' : '?');
      out += f.sig().name;
      out += ' ';
      print_formula(out, f.body(), 3, k, true);
      break;
    default: {
      const char* op = k == K::Tensor ? " * "
                       : k == K::Parr ? " | "
                       : k == K::With ? " & "
                                      : " + ";
      print_formula(out, f.left(), cp, k, true);
      out += op;
      print_formula(out, f.right(), cp, k, false);
      break;
    }
  }
  if (parens) out += ')';
}

}  // namespace detail

// Canonical text form; parse_formula(to_string(f)) == f.
inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print_formula(out, f, 0, Formula::Kind::Atom, true);
  return out;
}

}  // namespace superll

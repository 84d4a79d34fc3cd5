#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "formula.hpp"

namespace superll {

// One-sided sequent |- G; an ordered list so proofs can record exchange
// explicitly. Multiset comparison is provided for checking transformation
// outputs.
using Sequent = std::vector<Formula>;

inline std::string to_string(const Sequent& g) {
  std::string out = "|-";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out += i ? ", " : " ";
    out += to_string(g[i]);
  }
  return out;
}

inline bool sequent_eq(const Sequent& a, const Sequent& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Multiset equality: true iff b is a permutation of a.
inline bool sequent_perm_eq(const Sequent& a, const Sequent& b) {
  if (a.size() != b.size()) return false;
  Sequent x = a, y = b;
  auto lt = [](const Formula& p, const Formula& q) {
    return Formula::compare(p, q) < 0;
  };
  std::sort(x.begin(), x.end(), lt);
  std::sort(y.begin(), y.end(), lt);
  return sequent_eq(x, y);
}

// Permutation p with to[i] == from[p[i]], chosen by leftmost greedy matching;
// nullopt when the multisets differ.
inline std::optional<std::vector<std::size_t>> find_permutation(
    const Sequent& from, const Sequent& to) {
  if (from.size() != to.size()) return std::nullopt;
  std::vector<bool> used(from.size(), false);
  std::vector<std::size_t> perm(from.size());
  for (std::size_t i = 0; i < to.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < from.size(); ++j) {
      if (!used[j] && from[j] == to[i]) {
        used[j] = true;
        perm[i] = j;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return perm;
}

inline Sequent erased(const Sequent& g, std::size_t i) {
  Sequent out;
  out.reserve(g.size() - 1);
  for (std::size_t j = 0; j < g.size(); ++j)
    if (j != i) out.push_back(g[j]);
  return out;
}

inline Sequent erased(const Sequent& g, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  Sequent out;
  out.reserve(g.size());
  std::size_t k = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (k < idx.size() && idx[k] == j) {
      ++k;
      continue;
    }
    out.push_back(g[j]);
  }
  return out;
}

inline Sequent concat(Sequent a, const Sequent& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace superll

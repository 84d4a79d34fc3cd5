#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace superll {

// An exponential signature: the index decorating !_e / ?_e. Two signatures
// are equal iff their identifiers are equal.
struct Sig {
  std::string name;

  Sig() = default;
  explicit Sig(std::string n) : name(std::move(n)) {}

  auto operator<=>(const Sig&) const = default;
};

inline std::string to_string(const Sig& s) { return s.name; }

inline std::string sig_list_str(const std::vector<Sig>& sigs,
                                const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    if (i) out += sep;
    out += sigs[i].name;
  }
  return out;
}

}  // namespace superll

template <>
struct std::hash<superll::Sig> {
  std::size_t operator()(const superll::Sig& s) const noexcept {
    return std::hash<std::string>{}(s.name);
  }
};

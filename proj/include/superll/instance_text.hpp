#pragma once

#include <set>
#include <sstream>

#include "presets.hpp"

namespace superll {

// Line-oriented instance files, `#` starts a comment:
//
//   signatures: a b c
//   de: a c
//   co 0: -> a
//   co 2: a a -> a
//   dg: a b -> b
//   p: a = all | none | {0,1,2} | >=1
//   preset: ell          # overrides everything else
//
// Unlisted combinations are false; a signature without a `p` line has no
// promotion width at all. User-file instances are always finite; witness
// functions exist only for built-in presets.
inline Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;

  std::vector<Sig> signatures;
  std::set<std::string> declared;
  std::set<std::string> de_set;
  std::set<std::string> co_set;  // "e1,e2->e"
  std::set<std::string> dg_set;
  struct PSpec {
    enum class Kind { All, None, Set, AtLeast } kind = Kind::None;
    std::set<std::size_t> values;
    std::size_t at_least = 0;
  };
  std::map<std::string, PSpec> p_spec;

  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("instance file, line " + std::to_string(lineno) + ": " +
                         msg,
                     lineno);
  };
  auto known = [&](const std::string& s) {
    if (!declared.count(s)) fail("undeclared signature '" + s + "'");
    return s;
  };
  auto co_key = [](const std::vector<std::string>& from,
                   const std::string& to) {
    std::string k;
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (i) k += ',';
      k += from[i];
    }
    return k + "->" + to;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;

    if (head == "preset:") {
      std::string name;
      if (!(ls >> name)) fail("missing preset name");
      return make_preset(PresetId::parse(name));
    }
    if (head == "signatures:") {
      std::string s;
      while (ls >> s) {
        if (declared.count(s)) fail("duplicate signature '" + s + "'");
        declared.insert(s);
        signatures.push_back(Sig{s});
      }
      continue;
    }
    if (head == "de:") {
      std::string s;
      while (ls >> s) de_set.insert(known(s));
      continue;
    }
    if (head == "co") {
      std::string k_str, tok;
      if (!(ls >> k_str)) fail("missing contraction arity");
      if (!k_str.empty() && k_str.back() == ':') k_str.pop_back();
      std::size_t k = 0;
      try {
        k = std::stoull(k_str);
      } catch (...) {
        fail("bad contraction arity '" + k_str + "'");
      }
      std::vector<std::string> from;
      bool seen_arrow = false;
      std::string to;
      while (ls >> tok) {
        if (tok == ":") continue;
        if (tok == "->") {
          seen_arrow = true;
          continue;
        }
        if (!seen_arrow)
          from.push_back(known(tok));
        else if (to.empty())
          to = known(tok);
        else
          fail("extra token '" + tok + "' after the target signature");
      }
      if (!seen_arrow || to.empty()) fail("expected 'e1 .. ek -> e'");
      if (from.size() != k)
        fail("arity " + std::to_string(k) + " but " +
             std::to_string(from.size()) + " premise signatures");
      co_set.insert(co_key(from, to));
      continue;
    }
    if (head == "dg:") {
      std::string e1, e2, arrow, e;
      if (!(ls >> e1 >> e2 >> arrow >> e) || arrow != "->")
        fail("expected 'dg: e1 e2 -> e'");
      dg_set.insert(co_key({known(e1), known(e2)}, known(e)));
      continue;
    }
    if (head == "p:") {
      std::string s, eq, spec;
      if (!(ls >> s >> eq) || eq != "=") fail("expected 'p: e = spec'");
      known(s);
      std::string restl;
      std::getline(ls, restl);
      // strip spaces
      std::string compact;
      for (char c : restl)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
      PSpec ps;
      if (compact == "all") {
        ps.kind = PSpec::Kind::All;
      } else if (compact == "none") {
        ps.kind = PSpec::Kind::None;
      } else if (compact.rfind(">=", 0) == 0) {
        ps.kind = PSpec::Kind::AtLeast;
        try {
          ps.at_least = std::stoull(compact.substr(2));
        } catch (...) {
          fail("bad width bound '" + compact + "'");
        }
      } else if (compact.size() >= 2 && compact.front() == '{' &&
                 compact.back() == '}') {
        ps.kind = PSpec::Kind::Set;
        std::string body = compact.substr(1, compact.size() - 2);
        std::istringstream bs(body);
        std::string item;
        while (std::getline(bs, item, ',')) {
          if (item.empty()) continue;
          try {
            ps.values.insert(std::stoull(item));
          } catch (...) {
            fail("bad width '" + item + "'");
          }
        }
      } else {
        fail("bad p spec '" + compact + "' (use all, none, {..} or >=n)");
      }
      p_spec[s] = std::move(ps);
      continue;
    }
    fail("unknown directive '" + head + "'");
  }

  if (signatures.empty())
    throw ParseError("instance file declares no signatures", 0);

  Instance inst;
  inst.name = "file";
  inst.signatures = std::move(signatures);
  inst.de_fn = [de_set](const Sig& e) { return de_set.count(e.name) > 0; };
  inst.co_fn = [co_set, co_key](const std::vector<Sig>& from, const Sig& to) {
    std::vector<std::string> names;
    names.reserve(from.size());
    for (const Sig& s : from) names.push_back(s.name);
    return co_set.count(co_key(names, to.name)) > 0;
  };
  inst.dg_fn = [dg_set, co_key](const Sig& e1, const Sig& e2, const Sig& e) {
    return dg_set.count(co_key({e1.name, e2.name}, e.name)) > 0;
  };
  inst.p_fn = [p_spec](std::size_t n, const Sig& e) {
    auto it = p_spec.find(e.name);
    if (it == p_spec.end()) return false;
    switch (it->second.kind) {
      case PSpec::Kind::All:
        return true;
      case PSpec::Kind::None:
        return false;
      case PSpec::Kind::Set:
        return it->second.values.count(n) > 0;
      case PSpec::Kind::AtLeast:
        return n >= it->second.at_least;
    }
    return false;
  };
  return inst;
}

}  // namespace superll

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burchlab/resolution.hpp"

namespace burchlab {

struct SessionOptions {
  int cap = 30;
  int steps = 9;
  std::uint64_t seed = 0;
  std::size_t trials = 20;
};

/// A parsed session file. Grammar, one statement per line, `#` comments:
///
///   ring [NAME =] GF(p)[v1, ..., vn]
///   ideal NAME = f, f, ...            (or `= 0`)
///   quotient NAME = RING / IDEAL
///   module NAME = BASE / (f, ...)                 cyclic
///   module NAME = BASE^{d1, ..., dr} / (c), ...    columns of r entries each
///   set cap=30 steps=9 seed=0 trials=20
///
/// BASE names the ring or a quotient. Names share one namespace.
struct Session {
  std::string ring_name = "S";
  Ring ring;
  std::map<std::string, IdealHandle> ideals;
  std::map<std::string, std::string> quotients;  // quotient name -> ideal name
  std::map<std::string, ModulePresentation> modules;
  SessionOptions options;

  const IdealHandle& ideal(const std::string& name) const;
  const ModulePresentation& module(const std::string& name) const;
  bool has_ideal(const std::string& name) const { return ideals.count(name) > 0; }
  bool has_module(const std::string& name) const { return modules.count(name) > 0; }
};

/// Errors are ParseError with a "line L, column C:" prefix, except
/// DegreeCapExceeded for polynomials above the cap. cap_override replaces the
/// `set cap=` value.
Session parse_session(std::string_view text, std::optional<int> cap_override = std::nullopt);

}  // namespace burchlab

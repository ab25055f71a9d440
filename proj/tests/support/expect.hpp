#pragma once

#include <optional>
#include <string>

#include "eitff/error.hpp"

namespace eitff::testing {

struct Caught {
  ErrorKind kind;
  std::string axiom;
  std::string location;
};

/// Runs f and reports the Error it threw, if any.
template <class F>
std::optional<Caught> caught(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return Caught{e.kind(), e.axiom(), e.location()};
  }
  return std::nullopt;
}

template <class F>
bool throws_kind(F&& f, ErrorKind kind) {
  const auto c = caught(f);
  return c && c->kind == kind;
}

template <class F>
bool violates(F&& f, const std::string& axiom) {
  const auto c = caught(f);
  return c && c->kind == ErrorKind::AxiomViolation && c->axiom == axiom;
}

}  // namespace eitff::testing

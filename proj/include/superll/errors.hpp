#pragma once

#include <stdexcept>
#include <string>

namespace superll {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexical or grammatical error in a formula, sequent, proof or instance file.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// A signature referenced somewhere does not belong to the instance.
struct UnknownSignatureError : Error {
  std::string signature;
  explicit UnknownSignatureError(const std::string& sig)
      : Error("unknown signature: " + sig), signature(sig) {}
};

// A rule was applied to premises of the wrong shape (arity, indices, formula
// structure).
struct ShapeError : Error {
  using Error::Error;
};

// A rule's parameter side condition evaluated to false; the message names the
// failing query.
struct SideConditionError : Error {
  std::string query;
  explicit SideConditionError(const std::string& q)
      : Error("side condition failed: " + q), query(q) {}
};

// A transformation was invoked on inputs violating its contract (axiom table
// not satisfied, proof not of the expected shape).
struct PreconditionError : Error {
  using Error::Error;
};

// An existential obligation could not be discharged, or a user witness
// function returned a tuple that fails its obligation.
struct WitnessError : Error {
  using Error::Error;
};

// A state the transformation engine should never reach; carries the path of
// the stuck redex when known.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace superll

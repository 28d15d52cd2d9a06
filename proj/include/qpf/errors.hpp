#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct SingularSpecialization : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct MinPolyDoesNotSplit : Error {
  using Error::Error;
};
// An eigenvalue matched both +q^a and -q^b (happens at q = i, q = -1).
struct AmbiguousSign : Error {
  using Error::Error;
};
struct NotInvariant : Error {
  using Error::Error;
};
struct IncompatibleAmbient : Error {
  using Error::Error;
};
struct DegreeMismatch : Error {
  using Error::Error;
};
struct NotInCommutant : Error {
  using Error::Error;
};
struct InvalidPair : Error {
  using Error::Error;
};
struct Unsupported : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos, std::string token)
      : Error(what + " at position " + std::to_string(pos) +
              (token.empty() ? std::string() : " near '" + token + "'")),
        position(pos),
        token(std::move(token)) {}
  std::size_t position;
  std::string token;
};

}  // namespace qpf

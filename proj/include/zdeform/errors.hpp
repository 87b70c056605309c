#pragma once

#include <stdexcept>
#include <string>

namespace zdeform {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroPolynomial : public Error {
  public:
    using Error::Error;
};

class SingularSystem : public Error {
  public:
    using Error::Error;
};

class UnknownName : public Error {
  public:
    using Error::Error;
};

class InvalidParam : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class SchemaError : public Error {
  public:
    using Error::Error;
};

class InvariantError : public Error {
  public:
    using Error::Error;
};

class NyquistExceeded : public Error {
  public:
    using Error::Error;
};

class NonRepresentable : public Error {
  public:
    using Error::Error;
};

class DegenerateModel : public Error {
  public:
    using Error::Error;
};

class GrowthOverflow : public Error {
  public:
    using Error::Error;
};

class RankDeficient : public Error {
  public:
    using Error::Error;
};

}  // namespace zdeform

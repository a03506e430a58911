#ifndef KMH_ERRORS_HPP
#define KMH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kmh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Diagonal not 2, positive off-diagonal entry, or asymmetric zero pattern.
class NotGCM : public Error {
public:
  using Error::Error;
};

class NotSymmetrizable : public Error {
public:
  using Error::Error;
};

class NotAffineType : public Error {
public:
  using Error::Error;
};

/// Operands built over different root data.
class MixedData : public Error {
public:
  MixedData() : Error("operands belong to different root data") {}
  using Error::Error;
};

class IntervalTooLarge : public Error {
public:
  using Error::Error;
};

/// Character parameters at which the principal series degenerates.
class BadParameter : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

} // namespace kmh

#endif // KMH_ERRORS_HPP

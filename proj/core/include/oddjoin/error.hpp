#pragma once

#include <stdexcept>
#include <string>

namespace oddjoin {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown ids, odd terminal sets, bad JSON payloads.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Resigning on a shore that contains an odd number of terminals.
class InvalidResignError : public Error {
 public:
  using Error::Error;
};

/// Contracting an odd edge without resigning first.
class MustResignFirstError : public Error {
 public:
  using Error::Error;
};

/// No resigning makes the requested contraction set even.
class NotAValidMinorError : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A certificate failed independent re-verification. Always a bug.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace oddjoin

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace solw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closure or orbit grew past the enumeration cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

class ElementNotInGroup : public Error {
 public:
  using Error::Error;
};

class SubgroupNotContained : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class DoesNotNormalize : public Error {
 public:
  using Error::Error;
};

class UnknownSpec : public Error {
 public:
  using Error::Error;
};

class UnsupportedSylow : public Error {
 public:
  using Error::Error;
};

class WrongSylowShape : public Error {
 public:
  using Error::Error;
};

/// A spectral-sequence term did not vanish; this is not a proof of nonvanishing.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

class NotAFunctor : public Error {
 public:
  using Error::Error;
};

class CyclicInput : public Error {
 public:
  using Error::Error;
};

class ValidationFailure : public Error {
 public:
  using Error::Error;
};

class MissingCertificate : public Error {
 public:
  using Error::Error;
};

}  // namespace solw

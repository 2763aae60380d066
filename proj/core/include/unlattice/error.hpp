#ifndef UNLATTICE_ERROR_HPP
#define UNLATTICE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace unlattice {

enum class ErrorCode {
  KindMismatch,
  BadRegion,
  NotInIdeal,
  BadUnit,
  UnsupportedPair,
  NotDense,
  BadParams,
  UnknownLaw,
  CertificateViolated,
  HorizonExhausted,
  BadFamily,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unlattice

#endif  // UNLATTICE_ERROR_HPP

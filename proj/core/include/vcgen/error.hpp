#pragma once

#include <stdexcept>
#include <string>

namespace vcgen {

// Malformed or out-of-domain input (unknown vertex, bad file, degree above bound).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size cap was exceeded (oracle, canonicalizer, requirement DAG).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A caller broke an operation's precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A generated table failed to cover an instance it claims to cover.
class CertificateViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vcgen

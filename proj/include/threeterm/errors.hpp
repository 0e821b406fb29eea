#pragma once

#include <stdexcept>
#include <string>

namespace threeterm {

/// Input that does not describe a valid object (odd roots, empty lists, bad ranges).
class MalformedInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A theorem-level hypothesis (admissibility, tail stability) does not hold.
class HypothesisViolation : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Residue data outside the canonical window u in [0, 1).
class BranchError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

}  // namespace threeterm

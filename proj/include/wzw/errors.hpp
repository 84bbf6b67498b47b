#pragma once

#include <stdexcept>
#include <string>

namespace wzw {

// Input outside an operation's domain (bad labels, invalid root-system type,
// coincident points, ...). The CLI maps this to exit status 1.
class Rejection : public std::invalid_argument {
public:
    explicit Rejection(const std::string& what) : std::invalid_argument(what) {}
};

// An identity the implementation guarantees has failed. Always a bug; the
// CLI maps this to exit status 2.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wzw

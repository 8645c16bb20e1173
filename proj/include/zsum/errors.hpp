#ifndef ZSUM_ERRORS_HPP
#define ZSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zsum {

// Bad argument values: out-of-domain moduli, non-invertible elements, ...
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Text that does not conform to a grammar (polynomials, graph files, JSON).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), position_(0) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A polynomial of higher degree than an operation supports.
class DegreeError : public InvalidInput {
public:
    explicit DegreeError(const std::string& what) : InvalidInput(what) {}
};

// Work would exceed an enumeration budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A checked precondition of a higher-level operation does not hold.
class PreconditionError : public InvalidInput {
public:
    explicit PreconditionError(const std::string& what) : InvalidInput(what) {}
};

// Always-on internal invariant check; a failure indicates a bug, not bad input.
inline void sanity_check(bool condition, const char* message) {
    if (!condition)
        throw std::logic_error(message);
}

} // namespace zsum

#endif

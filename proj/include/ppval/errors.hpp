#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppval {

/// Argument outside an operation's mathematical domain (e.g. v2(0)).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class OddCubeForTSSCPP : public std::invalid_argument {
public:
    explicit OddCubeForTSSCPP(unsigned long cube)
        : std::invalid_argument("TSSCPP is only defined for even cube sizes, got " +
                                std::to_string(cube)) {}
};

/// A product formula that should be integral left a remainder. Always a bug.
class NonIntegerProduct : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class RenderCapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found);

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

class UnboundedRegion : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonpositiveFactor : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ppval

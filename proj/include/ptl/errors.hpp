#ifndef PTL_ERRORS_HPP
#define PTL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptl {

struct MalformedRotation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotConsecutive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivergentBound : std::domain_error {
    using std::domain_error::domain_error;
};

struct TooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what) : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace ptl

#endif

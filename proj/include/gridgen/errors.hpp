#pragma once

#include <stdexcept>
#include <string>

namespace gridgen {

struct InvalidNodeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MissingEdgeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a metric needs finite distances but the graph is disconnected,
// or when a connected input was required.
struct DisconnectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Target value sits on the boundary of the model's range (parameter would be infinite).
struct BoundaryError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NumericError : std::domain_error {
    using std::domain_error::domain_error;
};

struct EmptyInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace gridgen

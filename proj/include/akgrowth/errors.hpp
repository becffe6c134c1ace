#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace akgrowth {

/// Scenario file could not be parsed. Carries the 1-based line number when known.
class ScenarioParseError : public std::runtime_error {
public:
    ScenarioParseError(std::string message, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A numerical procedure failed to converge within its budget
/// (adaptive quadrature, Duhamel integration, linear solve breakdown).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace akgrowth

#pragma once

#include <stdexcept>
#include <string>

namespace commkit {

// Exit-code relevant error taxonomy: argument misuse vs. data problems vs.
// measures/methods that are mathematically undefined on the given input.

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct ArgumentError : std::invalid_argument {
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// A measure/method cannot be evaluated on this graph (isolated vertex,
// divergent series, empty edge set, ...).
struct MethodUndefinedError : std::runtime_error {
    explicit MethodUndefinedError(const std::string& what) : std::runtime_error(what) {}
};

struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace commkit

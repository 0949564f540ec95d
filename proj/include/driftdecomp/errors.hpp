#pragma once

#include <stdexcept>
#include <string>

namespace driftdecomp {

/// Shape or size mismatch between operands.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A linear system was numerically singular. Carries the condition
/// estimate and, when applicable, the offending slice or sample index.
class SingularSystemError : public std::runtime_error {
  public:
    SingularSystemError(const std::string& what, double condition,
                        long index = -1)
        : std::runtime_error(what), condition_(condition), index_(index) {}

    double condition() const { return condition_; }
    long index() const { return index_; }

  private:
    double condition_;
    long index_;
};

/// Objective became non-finite during an ALS run.
class DivergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file. byte_offset() locates the failure when known.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what, long byte_offset = -1)
        : std::runtime_error(what), byte_offset_(byte_offset) {}

    long byte_offset() const { return byte_offset_; }

  private:
    long byte_offset_;
};

/// Invalid configuration value.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Operation is undefined for the given input (zero vector, zero tensor).
class UndefinedInputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace driftdecomp

#pragma once

#include <stdexcept>
#include <string>

namespace mcf {

// Base for errors that map to CLI exit code 2 (domain failures the
// algorithms themselves report, as opposed to usage mistakes).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two or more zero coordinates: the map is not defined there.
class DegenerateInputError : public DomainError {
public:
    explicit DegenerateInputError(const std::string& msg) : DomainError(msg) {}
};

// Integer orbit revisited a state (or hit a fixed point) before reaching
// a terminal axis vector.  `vector_repr` holds the offending state.
class LoopError : public DomainError {
public:
    LoopError(const std::string& msg, std::string vector_repr)
        : DomainError(msg), vector_repr_(std::move(vector_repr)) {}
    const std::string& vector_repr() const { return vector_repr_; }

private:
    std::string vector_repr_;
};

// Integer orbit left the integers (Reverse halves entries).
class NonIntegerError : public DomainError {
public:
    NonIntegerError(const std::string& msg, std::string vector_repr)
        : DomainError(msg), vector_repr_(std::move(vector_repr)) {}
    const std::string& vector_repr() const { return vector_repr_; }

private:
    std::string vector_repr_;
};

// Dual-substitution incidence matrix has |det| != 1.
class UnimodularityError : public DomainError {
public:
    UnimodularityError(const std::string& msg, std::string substitution_repr)
        : DomainError(msg), substitution_repr_(std::move(substitution_repr)) {}
    const std::string& substitution_repr() const { return substitution_repr_; }

private:
    std::string substitution_repr_;
};

// Word generation could not reach the requested length.
class StallError : public DomainError {
public:
    explicit StallError(const std::string& msg) : DomainError(msg) {}
};

// Orbit left the classifiable region; carries the step index.
class OrbitDegenerateError : public DomainError {
public:
    OrbitDegenerateError(const std::string& msg, std::size_t step_index)
        : DomainError(msg), step_index_(step_index) {}
    std::size_t step_index() const { return step_index_; }

private:
    std::size_t step_index_;
};

}  // namespace mcf

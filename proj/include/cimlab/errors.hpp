#pragma once

#include <stdexcept>
#include <string>

namespace cimlab {

/// Caller broke a precondition (mismatched parents, non-normal quotient, ...).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Element enumeration exceeded the configured cap.
class EnumerationOverflow : public std::runtime_error {
public:
    explicit EnumerationOverflow(long long cap)
        : std::runtime_error("enumeration exceeded cap of " + std::to_string(cap) +
                             " elements"),
          cap_(cap) {}
    long long cap() const { return cap_; }

private:
    long long cap_;
};

/// Subgroup lattice enumeration exceeded the configured cap.
class LatticeOverflow : public std::runtime_error {
public:
    explicit LatticeOverflow(std::size_t cap)
        : std::runtime_error("subgroup lattice exceeded cap of " + std::to_string(cap) +
                             " subgroups"),
          cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

/// A structured group description violates its shape rules.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed group file / element string.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cimlab

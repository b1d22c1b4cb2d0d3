#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcnlab {

// Bad arguments, malformed expressions, mismatched inputs. CLI exit code 2.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Query outside the range a table or list can answer exactly. There is no
// silent truncation or implicit regrowth anywhere.
class out_of_range_error : public std::out_of_range {
public:
    explicit out_of_range_error(const std::string& what) : std::out_of_range(what) {}
};

// Prime table does not certify the requested Ramanujan prime.
class insufficient_table_error : public std::runtime_error {
public:
    explicit insufficient_table_error(const std::string& what) : std::runtime_error(what) {}
};

// Syntactically malformed input file. Carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed input whose content violates a structural invariant
// (non-record entry, inconsistent divisor count, gapped prime support, ...).
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

// Resource cap hit (memory budget, internal width limits). CLI exit code 2.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hcnlab

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace skelforge {

// Bad inputs: malformed documents, broken invariants, unresolvable paths.
// Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failures while executing otherwise valid work (I/O, degenerate data mid-run).
// Maps to CLI exit code 2.
class RuntimeError : public std::runtime_error {
public:
    explicit RuntimeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-fatal diagnostics collected by operations that keep going.
using Warnings = std::vector<std::string>;

inline void warn(Warnings* sink, const std::string& msg) {
    if (sink) sink->push_back(msg);
}

}  // namespace skelforge

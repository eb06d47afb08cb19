#ifndef HICOMM_ERRORS_HPP
#define HICOMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hicomm {

// Malformed textual/JSON input (element grammar, partition text, algebra files).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates a contract (bad table entry,
// arity mismatch, non-congruence argument, index out of range).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap (cube count, carrier size, element count) was hit.
// Maps to exit code 3 in the CLI.
struct ResourceCapError : std::runtime_error {
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hicomm

#endif  // HICOMM_ERRORS_HPP

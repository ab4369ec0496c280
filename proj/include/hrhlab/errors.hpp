#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace hrhlab {

// Machine-readable error codes. Every DomainError maps to process exit
// code 2, every ConsistencyError to exit code 3; success is 0.
enum class Errc {
  Syntax,    // E_SYNTAX: malformed command text (carries a byte offset)
  Exponent,  // E_EXPONENT: Brieskorn-Pham exponent < 2
  DetRange,  // E_DET_RANGE: determinantal parameters out of range
  Domain,    // E_DOMAIN: other precondition violation
  MuCap,     // E_MU_CAP: enumeration size above HRHLAB_MAX_MU
  Io,        // E_IO: unreadable batch file or missing input
};

const char* errc_name(Errc c);

class DomainError : public std::runtime_error {
public:
  DomainError(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  DomainError(Errc code, const std::string& msg, std::size_t offset)
      : std::runtime_error(msg), code_(code), offset_(offset) {}

  Errc code() const { return code_; }
  const std::optional<std::size_t>& offset() const { return offset_; }

private:
  Errc code_;
  std::optional<std::size_t> offset_;
};

// Two independent computations of the same invariant disagreed. This is a
// bug in the artifact or in a transcribed formula, never a user error.
class ConsistencyError : public std::logic_error {
public:
  explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace hrhlab

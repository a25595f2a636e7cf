#pragma once

#include <stdexcept>
#include <string>

namespace wfgcri {

// Error categories map onto process exit codes at the CLI boundary:
// usage-class errors (domain, parse, io) -> 2, numerical-class errors -> 3.
enum class ErrorCode {
  domain,        // invalid parameter or argument value
  parse,         // malformed model spec / file content
  io,            // missing or unreadable file
  integration,   // quadrature failed to converge within budget
  divergence,    // integral diverges (tail does not decay)
  conditioning,  // survival function vanishes at the conditioning time
  degenerate,    // input sample cannot support the requested estimate
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  const char* code_name() const noexcept {
    switch (code_) {
      case ErrorCode::domain: return "domain";
      case ErrorCode::parse: return "parse";
      case ErrorCode::io: return "io";
      case ErrorCode::integration: return "integration";
      case ErrorCode::divergence: return "divergence";
      case ErrorCode::conditioning: return "conditioning";
      case ErrorCode::degenerate: return "degenerate";
    }
    return "unknown";
  }

  bool numerical() const noexcept {
    return code_ == ErrorCode::integration || code_ == ErrorCode::divergence ||
           code_ == ErrorCode::conditioning || code_ == ErrorCode::degenerate;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_domain(const std::string& msg) {
  throw Error(ErrorCode::domain, msg);
}

}  // namespace wfgcri

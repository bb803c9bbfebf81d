#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semitotal {

enum class Errc {
  InvalidInput,     // malformed instance, violated precondition
  Infeasible,       // no solution exists (isolated vertex, singleton component)
  SizeCapExceeded,  // instance too large for the exhaustive oracle
  Uncoverable,      // set-cover family misses part of the universe
  Internal,         // a post-condition failed; always a bug
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "INVALID_INPUT";
    case Errc::Infeasible: return "INFEASIBLE";
    case Errc::SizeCapExceeded: return "SIZE_CAP_EXCEEDED";
    case Errc::Uncoverable: return "UNCOVERABLE";
    case Errc::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace semitotal

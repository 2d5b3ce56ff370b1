#pragma once

#include <stdexcept>
#include <string>

namespace oddgraph {

enum class ErrorCode {
  Range,
  Validation,
  NoParent,
  CanonicalForm,
  Weight,
  Adjacency,
  Structure,
  Generation,
  Supplementation,
  Partition,
  Construction,
  Assembly,
  Unsupported,
  Lift,
  Parse,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace oddgraph

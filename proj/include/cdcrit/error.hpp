#pragma once

#include <stdexcept>
#include <string>

namespace cdcrit {

enum class Errc {
  VertexOutOfRange,
  DuplicateEdge,
  SelfLoop,
  EdgePresent,
  EmptySet,
  OverlappingOperands,
  BadMarkedSubset,
  Disconnected,
  ParityMismatch,
  DegreeTooSmall,
  CapExceeded,
  BadParameter,
  BadFormat,
  ReportMismatch,
  Precondition,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Scale caps can be lifted with CDCRIT_MAX_N; returns max(default_cap, env).
int scale_cap(int default_cap);

}  // namespace cdcrit

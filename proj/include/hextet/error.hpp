#ifndef HEXTET_ERROR_HPP
#define HEXTET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hextet {

enum class Errc {
  NonManifoldFace,
  BadDiagonal,
  DanglingVertex,
  NotOpposite,
  NotCut,
  DegeneratePrism,
  DifferentOrientationPair,
  NotFiveEligible,
  IllegalConfig,
  FlipBreaksMarkedNeighbor,
  UnresolvedDegenerate,
  ParseError,
  UnsupportedElement,
  IoError,
};

const char* errc_name(Errc c);

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hextet

#endif

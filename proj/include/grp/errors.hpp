#ifndef GRP_ERRORS_HPP
#define GRP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grp {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error { using Error::Error; };
struct OrderCapExceeded : Error { using Error::Error; };
struct DegreeCapExceeded : Error { using Error::Error; };
struct IndexCapExceeded : Error { using Error::Error; };
struct LatticeCapExceeded : Error { using Error::Error; };
struct ForeignElement : Error { using Error::Error; };
struct ForeignSubgroup : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotNormalInH : Error { using Error::Error; };
struct ChainViolation : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct NotPGroup : Error { using Error::Error; };
struct UnknownTheoremId : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };
struct UnsupportedSpec : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

/// Parse failure in cycle notation or a corpus file; carries the offending
/// line (0 when not applicable).
struct ParseError : Error {
  int line = 0;
  explicit ParseError(const std::string& what, int line_no = 0)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
        line(line_no) {}
};

}  // namespace grp

#endif  // GRP_ERRORS_HPP

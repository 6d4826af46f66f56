#ifndef VACALIB_ERRORS_HPP
#define VACALIB_ERRORS_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace vacalib {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimension of an input does not match the cause set or a peer object.
struct DimensionMismatch : Error { using Error::Error; };
// A matrix row has no mass over the active columns.
struct RowDegenerate : Error { using Error::Error; };
// Linear system is singular or too ill-conditioned to invert.
struct SingularMatrix : Error { using Error::Error; };
// A record carries a cause label the dictionary does not cover.
struct UnmappedCause : Error { using Error::Error; };
// The donotcalib mask would leave nothing to calibrate.
struct AllCausesExcluded : Error { using Error::Error; };
// A posterior row has zero sample variance where spread is required.
struct DegenerateRow : Error { using Error::Error; };
// No asset matches the requested key and no fallback exists.
struct AssetNotFound : Error { using Error::Error; };
// Malformed input file; message names the line or field.
struct ParseError : Error { using Error::Error; };
// Type invariant violated on construction.
struct InvalidArgument : Error { using Error::Error; };

using WarningHandler = std::function<void(const std::string&)>;

// Replaces the process-wide warning sink (default: stderr). Returns the
// previous handler so tests can restore it.
WarningHandler set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

}  // namespace vacalib

#endif

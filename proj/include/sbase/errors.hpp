#pragma once

#include <stdexcept>
#include <string>

namespace sbase {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };
struct NotEnumerable : Error { using Error::Error; };
struct OutOfRegime : Error { using Error::Error; };

// caps: results are inconclusive rather than wrong
struct CapExceeded : Error { using Error::Error; };
struct IndexCapExceeded : CapExceeded { using CapExceeded::CapExceeded; };
struct WorkCapExceeded : CapExceeded { using CapExceeded::CapExceeded; };

}  // namespace sbase

#pragma once

#include <stdexcept>
#include <string>

namespace slowmode {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedImpurity : Error { using Error::Error; };
struct SpanError : Error { using Error::Error; };
struct BudgetError : Error { using Error::Error; };
struct SizeError : Error { using Error::Error; };
struct EigFailure : Error { using Error::Error; };
struct WindowError : Error { using Error::Error; };
struct NonPositiveValue : Error { using Error::Error; };
struct QuadratureFailure : Error { using Error::Error; };
struct RootFindFailure : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct OverlapError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct GridMismatch : Error { using Error::Error; };
struct UnknownRegime : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

}  // namespace slowmode

#pragma once

#include <stdexcept>
#include <string>

namespace tcplan {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// geometry
struct DimensionMismatch : Error { using Error::Error; };
struct DuplicatePoint : Error { using Error::Error; };
struct EmptyConfiguration : Error { using Error::Error; };
struct PoleExcluded : Error { using Error::Error; };
struct InvalidConfiguration : Error { using Error::Error; };

// paths and planners
struct EndpointMismatch : Error { using Error::Error; };
struct Uncovered : Error { using Error::Error; };
struct NotPartition : Error { using Error::Error; };
struct GradeOverflow : Error { using Error::Error; };
struct HomotopyEndpointMismatch : Error { using Error::Error; };
struct NotFixedPointFree : Error { using Error::Error; };
struct NotRetraction : Error { using Error::Error; };
struct AnchorInY : Error { using Error::Error; };

// algebra
struct InvalidPresentation : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };
struct NotHomogeneous : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct SourceMismatch : Error { using Error::Error; };
struct DegreeAssumptionViolated : Error { using Error::Error; };

// bounds
struct InconsistentBounds : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };
struct ParamOutOfRange : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };

}  // namespace tcplan

#pragma once

#include <stdexcept>
#include <string>

namespace musicid {

// Base class for all data-level failures raised by the pipeline. The CLI
// maps these to a dedicated exit code, distinct from usage and internal
// errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ingest
struct MissingColumn : Error { using Error::Error; };
struct EmptySession : Error { using Error::Error; };
struct NonMonotonicTime : Error { using Error::Error; };

// featurize
struct SessionTooShort : Error { using Error::Error; };
struct SeriesTooShort : Error { using Error::Error; };
struct EmptySelection : Error { using Error::Error; };

// forest
struct EmptyCounts : Error { using Error::Error; };
struct SingleClass : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct UnknownUser : Error { using Error::Error; };

// eval
struct TooFewFrames : Error { using Error::Error; };
struct TooFewRows : Error { using Error::Error; };
struct UnseenLabel : Error { using Error::Error; };
struct DegenerateGroups : Error { using Error::Error; };
struct InvalidDf : Error { using Error::Error; };
struct MissingCondition : Error { using Error::Error; };
struct MissingInput : Error { using Error::Error; };

// configuration / misc
struct InvalidConfig : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

} // namespace musicid

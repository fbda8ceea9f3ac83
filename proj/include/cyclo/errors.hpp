#pragma once
#include <stdexcept>
#include <string>

namespace cyclo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositionNonzero : Error { using Error::Error; };
struct WindowOverflow : Error { using Error::Error; };
struct NotNonNegativelyGraded : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DegreeOverflow : Error { using Error::Error; };
struct NotChainMap : Error { using Error::Error; };
struct OutsideSafeBand : Error { using Error::Error; };
struct NotStabilized : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

} // namespace cyclo

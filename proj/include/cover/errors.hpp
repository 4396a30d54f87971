#pragma once

#include <stdexcept>
#include <string>

namespace cover {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidPolygon : Error {
    using Error::Error;
};
struct DegenerateHull : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct InvalidInstance : Error {
    using Error::Error;
};
struct InvalidSolution : Error {
    using Error::Error;
};
struct WrongInstance : Error {
    using Error::Error;
};
struct NormalizationFailed : Error {
    using Error::Error;
};
struct GeneratorStall : Error {
    using Error::Error;
};
struct InvalidParams : Error {
    using Error::Error;
};
struct PointOutsideRegion : Error {
    using Error::Error;
};
struct NotACover : Error {
    using Error::Error;
};
struct InfeasibleSetCover : Error {
    using Error::Error;
};
struct InconsistentBest : Error {
    using Error::Error;
};
struct MissingInstance : Error {
    using Error::Error;
};

}  // namespace cover

#pragma once

#include <stdexcept>
#include <string>

namespace gtx {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : Error {
    using Error::Error;
};
struct RankError : Error {
    using Error::Error;
};
struct PoleAtPoint : Error {
    using Error::Error;
};
struct DenominatorZero : Error {
    using Error::Error;
};
struct NotStronglyGeneric : Error {
    using Error::Error;
};
struct ZeroElement : Error {
    using Error::Error;
};
struct NonRemovableSingularity : Error {
    using Error::Error;
};
struct NotEigenvector : Error {
    using Error::Error;
};
struct OrbitEmpty : Error {
    using Error::Error;
};
struct ParameterClash : Error {
    using Error::Error;
};
struct ConstraintViolation : Error {
    using Error::Error;
};
struct NotInvertible : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace gtx

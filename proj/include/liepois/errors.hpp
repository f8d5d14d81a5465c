#pragma once

#include <stdexcept>
#include <string>

namespace liepois {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct JacobiViolation : Error {
    using Error::Error;
};
struct AntisymmetryViolation : Error {
    using Error::Error;
};
struct NonPositiveDegreeInput : Error {
    using Error::Error;
};
struct PoleAtZero : Error {
    using Error::Error;
};
struct NotHamiltonian : Error {
    using Error::Error;
};
struct Inconsistent : Error {
    using Error::Error;
};
struct NotFactorizable : Error {
    using Error::Error;
};
struct DegreeOverflow : Error {
    using Error::Error;
};
struct NotInvariant : Error {
    using Error::Error;
};
struct InputError : Error {
    using Error::Error;
};

}  // namespace liepois

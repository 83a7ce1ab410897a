#pragma once

#include <stdexcept>
#include <string>

namespace entm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct BadRank : Error {
    using Error::Error;
};

struct InvalidState : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    using Error::Error;
};

struct NoBracket : Error {
    using Error::Error;
};

struct DegenerateDelta : Error {
    using Error::Error;
};

struct RankDeficient : Error {
    using Error::Error;
};

struct SamplingExhausted : Error {
    using Error::Error;
};

struct NotEntangled : Error {
    using Error::Error;
};

struct RankMismatch : Error {
    using Error::Error;
};

struct SupportMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace entm

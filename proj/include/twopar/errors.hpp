#pragma once

#include <stdexcept>
#include <string>

namespace twopar {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroLambda : Error {
    ZeroLambda() : Error("lambda must be nonzero") {}
};

struct IdentityElement : Error {
    IdentityElement() : Error("element is +/-identity; fixed points undefined") {}
};

struct BadLetter : Error {
    explicit BadLetter(char c) : Error(std::string("bad word letter '") + c + "' (alphabet is S,s,T,t)") {}
};

struct DepthExceeded : Error {
    explicit DepthExceeded(const std::string& what) : Error(what) {}
};

struct BadIndex : Error {
    explicit BadIndex(const std::string& what) : Error(what) {}
};

struct ZeroMultiplier : Error {
    ZeroMultiplier() : Error("lateral multiplier must be nonzero") {}
};

struct MalformedProgram : Error {
    explicit MalformedProgram(const std::string& what) : Error(what) {}
};

struct EmptyRange : Error {
    explicit EmptyRange(const std::string& what) : Error(what) {}
};

struct ZeroOffset : Error {
    ZeroOffset() : Error("line offset must be nonzero") {}
};

struct DegenerateLine : Error {
    explicit DegenerateLine(const std::string& what) : Error(what) {}
};

struct BadSampleCount : Error {
    explicit BadSampleCount(const std::string& what) : Error(what) {}
};

struct WrongRegion : Error {
    explicit WrongRegion(const std::string& what) : Error(what) {}
};

struct ConstructionFailed : Error {
    explicit ConstructionFailed(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

} // namespace twopar

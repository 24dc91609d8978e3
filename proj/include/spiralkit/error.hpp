#pragma once

#include <stdexcept>
#include <string>

namespace spiralkit
{

enum class ErrorKind
{
    InvalidInput,
    InversionCenterHit,
    CoincidentEndpoints,
    ResolutionTooCoarse,
    DegenerateLense,
    ContactAtInfinity,
    PolePoint,
    NotASpiralPair,
    NoSpiralExists,
    DegenerateGamma,
    NotDisjoint,
    DegenerateTriple,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace spiralkit

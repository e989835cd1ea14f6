#pragma once

#include <stdexcept>
#include <string>

namespace conic {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error
{
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Input that violates a documented shape: dimension mismatch, bad rational, non-homogeneous cone data. */
class MalformedInput : public Error
{
  public:
    explicit MalformedInput(const std::string& what) : Error(what) {}
};

/** The requested computation is not available for this variant or norm. */
class Unsupported : public Error
{
  public:
    explicit Unsupported(const std::string& what) : Error(what) {}
};

/** A functional handed in as a probe is outside the required dual cone. */
class InvalidProbe : public Error
{
  public:
    explicit InvalidProbe(const std::string& what) : Error(what) {}
};

/** An operation precondition (pointedness, nonempty interior, ...) does not hold. */
class PreconditionViolated : public Error
{
  public:
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

} // namespace conic

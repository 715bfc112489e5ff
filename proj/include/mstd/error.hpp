#ifndef MSTD_ERROR_HPP
#define MSTD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mstd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An intermediate sum or difference left the signed 64-bit range.
class OverflowError : public Error
{
public:
    using Error::Error;
};

/// A parameter or input was outside the accepted domain.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// Malformed set text or corpus text.
class ParseError : public Error
{
public:
    using Error::Error;
};

} // namespace mstd

#endif

#ifndef UNIMODAL_ERROR_HPP
#define UNIMODAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace unimodal {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An internal identity that must always hold was found broken. These are
/// never recovered from; they indicate a convention bug or a counterexample.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// A request exceeds a configured size guard.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

[[noreturn]] void throw_invalid(const std::string& what);
[[noreturn]] void throw_inconsistent(const std::string& what);

} // namespace unimodal

#endif // UNIMODAL_ERROR_HPP

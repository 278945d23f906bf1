#include "unimodal/error.hpp"

namespace unimodal {

void throw_invalid(const std::string& what) { throw InvalidArgument(what); }

void throw_inconsistent(const std::string& what) { throw InconsistencyError(what); }

} // namespace unimodal

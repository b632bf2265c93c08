#pragma once

#include <stdexcept>
#include <string>

namespace hsubdiv {

/// Problems caused by caller-supplied data (files, parameters). The CLI maps
/// these to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariants. Reaching one of these is a bug; the CLI maps
/// them to exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace hsubdiv

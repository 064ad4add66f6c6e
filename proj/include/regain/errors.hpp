#pragma once

#include <stdexcept>
#include <string>

namespace regain {

/// A stated invariant or claim failed; the CLI maps this to exit code 2.
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

/// A search the source material treats as total ran past its horizon.
class horizon_exhausted : public std::runtime_error {
public:
    explicit horizon_exhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input files or unusable parameters; CLI exit code 1.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace regain

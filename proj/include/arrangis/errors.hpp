#pragma once

#include <stdexcept>
#include <string>

namespace arrangis {

// Malformed or inconsistent input: files, combinatorics, characters, cycles.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A seeded projection search or strand tracking ran out of usable frames.
struct GenericityError : std::runtime_error {
    explicit GenericityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Character enumeration would exceed the configured candidate cap.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace arrangis

#pragma once

#include <stdexcept>
#include <string>

namespace gws {

// Thrown when an enumeration or scan would exceed its configured result or
// point budget. Callers get an error instead of a truncated answer.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gws

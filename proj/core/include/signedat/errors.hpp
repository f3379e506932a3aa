#pragma once

#include <stdexcept>
#include <string>

namespace signedat {

/// Thrown when an operation would exceed a configured enumeration,
/// expansion, or search cap.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

} // namespace signedat

#pragma once

#include <stdexcept>
#include <string>

namespace packkit {

// Thrown on malformed input, violated preconditions and guard violations.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

} // namespace packkit

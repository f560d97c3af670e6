#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graham {

enum class ErrorKind {
    InvalidInput,
    NotMeaningful,         // formula undefined for the inputs (e.g. eps <= 0)
    ValuationUnavailable,
    InsufficientData,
    DegenerateGroup,
    Io,
    Schema,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace graham

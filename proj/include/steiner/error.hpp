#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steiner {

enum class ErrorKind {
    overflow,
    ambiguous,
    torsion,
    not_composable,
    enum_cap,
    dim,
    bad_params,
    parse,
    schema,
    validation,
    inconsistent,
    not_closed,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the error classes above;
/// the CLI maps them onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the error-class prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace steiner

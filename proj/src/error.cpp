#include "steiner/error.hpp"

namespace steiner {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::overflow: return "OVERFLOW";
    case ErrorKind::ambiguous: return "AMBIGUOUS";
    case ErrorKind::torsion: return "TORSION";
    case ErrorKind::not_composable: return "NOT_COMPOSABLE";
    case ErrorKind::enum_cap: return "ENUM_CAP";
    case ErrorKind::dim: return "DIM";
    case ErrorKind::bad_params: return "BAD_PARAMS";
    case ErrorKind::parse: return "PARSE";
    case ErrorKind::schema: return "SCHEMA";
    case ErrorKind::validation: return "VALIDATION";
    case ErrorKind::inconsistent: return "INCONSISTENT";
    case ErrorKind::not_closed: return "NOT_CLOSED";
    }
    return "UNKNOWN";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what)
{
}

} // namespace steiner

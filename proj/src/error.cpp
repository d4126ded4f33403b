#include "lcabs/error.hpp"

namespace lcabs {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownState: return "UnknownState";
        case ErrorKind::UnknownInput: return "UnknownInput";
        case ErrorKind::UnknownOutput: return "UnknownOutput";
        case ErrorKind::NotAccepted: return "NotAccepted";
        case ErrorKind::IncompatibleAlphabets: return "IncompatibleAlphabets";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::InvalidPartition: return "InvalidPartition";
        case ErrorKind::MalformedRelation: return "MalformedRelation";
        case ErrorKind::DigestMismatch: return "DigestMismatch";
        case ErrorKind::InvalidWindow: return "InvalidWindow";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace lcabs

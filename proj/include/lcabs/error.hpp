#pragma once

#include <stdexcept>
#include <string>

namespace lcabs {

enum class ErrorKind {
    UnknownState,
    UnknownInput,
    UnknownOutput,
    NotAccepted,
    IncompatibleAlphabets,
    InvalidSpec,
    InvalidPartition,
    MalformedRelation,
    DigestMismatch,
    InvalidWindow,
    ParseError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace lcabs

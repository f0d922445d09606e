#pragma once

#include <stdexcept>
#include <string>

namespace veering {

/// Domain error: invalid input data or a violated operation precondition.
/// `kind` is a stable machine-readable tag, `what()` the human diagnostic.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// Internal invariant failure. These checks stay on in release builds:
/// downstream constructions assume them and exact arithmetic makes them cheap.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& message) : std::logic_error(message) {}
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw Error(kind, message);
}

inline void check_internal(bool ok, const std::string& message) {
    if (!ok) throw InternalError(message);
}

inline void require(bool ok, const std::string& kind, const std::string& message) {
    if (!ok) fail(kind, message);
}

}  // namespace veering

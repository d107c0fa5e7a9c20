#pragma once

#include <stdexcept>
#include <string>

namespace comack {

// Error taxonomy shared by the whole library. The kinds map 1:1 onto the
// CLI exit codes and the C API status codes.
enum class ErrorKind {
    Usage,     // malformed input, violated precondition
    Resource,  // a configured ceiling (group order, resolution term size) was hit
    Internal,  // an invariant the implementation guarantees failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void usage_error(const std::string& msg) {
    throw Error(ErrorKind::Usage, msg);
}
[[noreturn]] inline void resource_error(const std::string& msg) {
    throw Error(ErrorKind::Resource, msg);
}
[[noreturn]] inline void internal_error(const std::string& msg) {
    throw Error(ErrorKind::Internal, msg);
}

}  // namespace comack

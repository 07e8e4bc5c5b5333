#pragma once

#include <stdexcept>
#include <string>

namespace clifford {

enum class ErrorKind {
    Parse,         // malformed input text
    Domain,        // mathematically invalid request
    Internal,      // broken invariant
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

[[noreturn]] inline void domain_fail(const std::string& what) { throw DomainError(what); }
[[noreturn]] inline void internal_fail(const std::string& what) { throw InternalError(what); }

inline void ensure(bool cond, const char* what) {
    if (!cond) throw InternalError(what);
}

}  // namespace clifford

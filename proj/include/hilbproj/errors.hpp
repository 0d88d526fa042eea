#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hilbproj {

// Base of all library errors. `code` is a stable machine-readable tag that
// the CLI copies into its error object.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Invalid input or violated precondition. CLI exit status 1.
class DomainError : public Error {
public:
    DomainError(std::string code, const std::string& what) : Error(std::move(code), what) {}
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

// Valid input outside the supported range (small modulus, deep ramification
// profile, m != 1, ...). CLI exit status 1.
class UnsupportedError : public Error {
public:
    UnsupportedError(std::string code, const std::string& what) : Error(std::move(code), what) {}
    explicit UnsupportedError(const std::string& what) : Error("unsupported", what) {}
};

// Text input could not be parsed; carries the byte offset and the offending
// token.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::string token, const std::string& what)
        : Error("parse", what), offset_(offset), token_(std::move(token)) {}
    std::size_t offset() const noexcept { return offset_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t offset_;
    std::string token_;
};

// A consistency check that holds by construction failed. CLI exit status 2.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error("internal", what) {}
};

}  // namespace hilbproj

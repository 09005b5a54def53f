#pragma once

#include <stdexcept>
#include <string>

namespace ellsurf {

/// Failure of a mathematical precondition (degenerate curve, bad prime, ...).
/// `code()` is a short stable identifier used in machine-readable error records.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Malformed polynomial or rational-function text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace ellsurf

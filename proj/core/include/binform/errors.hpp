#ifndef BINFORM_ERRORS_HPP
#define BINFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace binform {

// Violated precondition or bad mathematical input (wrong degree, zero
// leading coefficient, parity mismatch, ...). Maps to CLI exit code 2.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input. `offset` is the byte position of the first
// offending character. Maps to CLI exit code 1.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A symbolic computation outgrew the configured term budget. Identity
// verification catches this and falls back to exact specializations.
class term_budget_exceeded : public std::runtime_error {
public:
    term_budget_exceeded()
        : std::runtime_error("polynomial term budget exceeded") {}
};

// A resource cap (for the brute-force dimension oracle).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace binform

#endif

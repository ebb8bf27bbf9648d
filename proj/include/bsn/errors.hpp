#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsn {

/// Malformed textual input (words, rationals, endomorphism specs).
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Arguments outside an operation's domain (|n| <= 1, wrong t-exponent, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A computed certificate failed exact re-verification. Always a bug or a
/// falsified mathematical claim, never an ordinary answer.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace bsn

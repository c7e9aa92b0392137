#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cherednik {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when an input is outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Throws DomainError unless q is an integer fitting in 64 bits.
std::int64_t to_int64(const Rational& q);
std::int64_t to_int64(const Integer& z);

// Accepts "a", "-a", "a/b". Result is canonical.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace cherednik

#include "cherednik/rational.hpp"

#include <cctype>

namespace cherednik {

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw DomainError("integer out of 64-bit range: " + z.get_str());
  return z.get_si();
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw DomainError("not an integer: " + q.get_str());
  return to_int64(Integer(q.get_num()));
}

static bool valid_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den))
    throw DomainError("malformed rational: " + text);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw DomainError("zero denominator: " + text);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace cherednik

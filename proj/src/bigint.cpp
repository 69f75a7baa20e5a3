#include "lenscob/bigint.hpp"

#include <cctype>

#include "lenscob/errors.hpp"

namespace lenscob {

Int parse_int(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) {
    throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (!std::isdigit(c)) {
      throw DomainError("not an integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Int(-value) : value;
}

std::string to_string(const Int& value) { return value.str(); }

Int floor_mod(const Int& a, const Int& m) {
  if (m == 0) {
    throw DomainError("floor_mod: zero modulus");
  }
  const Int mm = m < 0 ? Int(-m) : m;
  Int r = a % mm;
  if (r < 0) {
    r += mm;
  }
  return r;
}

Int abs(const Int& value) { return value < 0 ? Int(-value) : value; }

}  // namespace lenscob

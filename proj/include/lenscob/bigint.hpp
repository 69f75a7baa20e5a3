#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lenscob {

using Int = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal integer. Throws DomainError on anything else.
Int parse_int(std::string_view text);

std::string to_string(const Int& value);

/// Remainder in [0, |m|). m must be nonzero.
Int floor_mod(const Int& a, const Int& m);

Int abs(const Int& value);

}  // namespace lenscob

#pragma once

#include <cstdint>
#include <optional>

#include "lenscob/bigint.hpp"
#include "lenscob/lens.hpp"
#include "lenscob/quadform.hpp"
#include "lenscob/witness.hpp"

/// Naive exhaustive searches used as ground truth for the fast paths. Nothing
/// here calls into numtheory or the solver; agreement between the two is the
/// evidence the tests rely on.
///
/// The scans of brute_n3 and brute_form_represents visit each coordinate in
/// the order 0, 1, -1, 2, -2, ... and evaluate in 128-bit arithmetic; inputs
/// too large for that are rejected with DomainError.
namespace lenscob::oracle {

/// x^2 = a (mod m) for some x in [0, m). m >= 2.
bool brute_qr(const Int& a, const Int& m);

struct OneHole {
  Int a;
  Int t;
};

/// First a in [0, min(p, bound)) with q a^2 = +1, then -1 (mod p); t is
/// solved exactly from t p + q a^2 = +-1.
std::optional<OneHole> brute_n2(const LensSpace& lens, const Int& bound);

/// Scans (a1, a2, l12, t1, t2) in [-box, box]^5 for a two-hole witness.
std::optional<Witness> brute_n3(const LensSpace& lens, std::int64_t box);

struct Representation {
  Int x;
  Int y;
};

/// Primitive (gcd(x, y) = 1) solution of f(x, y) = n with |x|, |y| <= bound.
std::optional<Representation> brute_form_represents(const QuadForm& f, const Int& n,
                                                    std::int64_t bound);

}  // namespace lenscob::oracle

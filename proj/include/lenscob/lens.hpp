#pragma once

#include <string>
#include <variant>

#include "lenscob/bigint.hpp"

namespace lenscob {

/// L(p, q) in canonical form: p >= 2, 0 < q < p, gcd(p, q) = 1.
class LensSpace {
 public:
  /// Throws DomainError unless (p, q) is already canonical. Use normalize()
  /// for arbitrary input.
  LensSpace(Int p, Int q);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  /// "L(p,q)"
  std::string name() const;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  Int p_;
  Int q_;
};

enum class SpecialCase {
  ThreeSphere,     // p = +-1
  NotALensSpace,   // p = 0 (S^2 x S^1)
};

std::string describe(SpecialCase special);

using NormalizedLens = std::variant<LensSpace, SpecialCase>;

/// Brings (p, q) to canonical form. Negative p is handled by negating both
/// entries, i.e. L(-p, q) becomes L(p, p - (q mod p)). Throws DomainError when
/// gcd(p, q) != 1.
NormalizedLens normalize(const Int& p, const Int& q);

/// Positive (s, r) with p*s - q*r = 1 and 0 < r <= p.
struct BezoutPair {
  Int s;
  Int r;
};

BezoutPair bezout(const LensSpace& lens);

/// Unoriented classification: same p and q2 = +-q1^(+-1) (mod p).
bool same_homeomorphism_class(const LensSpace& first, const LensSpace& second);

}  // namespace lenscob

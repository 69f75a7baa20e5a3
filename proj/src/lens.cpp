#include "lenscob/lens.hpp"

#include "lenscob/errors.hpp"
#include "lenscob/numtheory.hpp"

namespace lenscob {

LensSpace::LensSpace(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ < 2 || q_ <= 0 || q_ >= p_ || nt::gcd(p_, q_) != 1) {
    throw DomainError("L(" + p_.str() + "," + q_.str() +
                      ") is not canonical: need p >= 2, 0 < q < p, gcd(p, q) = 1");
  }
}

std::string LensSpace::name() const { return "L(" + p_.str() + "," + q_.str() + ")"; }

std::string describe(SpecialCase special) {
  switch (special) {
    case SpecialCase::ThreeSphere:
      return "3-sphere";
    case SpecialCase::NotALensSpace:
      return "S^2 x S^1 (p = 0, not a lens space)";
  }
  return "unknown";
}

NormalizedLens normalize(const Int& p, const Int& q) {
  if (nt::gcd(p, q) != 1) {
    throw DomainError("normalize: gcd(" + p.str() + ", " + q.str() + ") != 1");
  }
  if (p == 0) {
    return SpecialCase::NotALensSpace;
  }
  if (p == 1 || p == -1) {
    return SpecialCase::ThreeSphere;
  }
  const Int pp = p < 0 ? Int(-p) : p;
  const Int qq = p < 0 ? Int(-q) : q;
  return LensSpace(pp, floor_mod(qq, pp));
}

BezoutPair bezout(const LensSpace& lens) {
  // r = -q^{-1} mod p lies in [1, p - 1]; then s = (1 + q r) / p is a positive integer.
  const Int r = lens.p() - nt::mod_inv(lens.q(), lens.p());
  const Int s = (1 + lens.q() * r) / lens.p();
  return {s, r};
}

bool same_homeomorphism_class(const LensSpace& first, const LensSpace& second) {
  if (first.p() != second.p()) {
    return false;
  }
  const Int& p = first.p();
  const Int inverse = nt::mod_inv(first.q(), p);
  const Int& target = second.q();
  return target == first.q() || target == p - first.q() || target == inverse ||
         target == floor_mod(-inverse, p);
}

}  // namespace lenscob

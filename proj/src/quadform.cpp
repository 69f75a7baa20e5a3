#include "lenscob/quadform.hpp"

#include "lenscob/errors.hpp"
#include "lenscob/numtheory.hpp"

namespace lenscob {

Int eval(const QuadForm& f, const Int& x, const Int& y) {
  return f.a * x * x + 2 * f.b * x * y + f.c * y * y;
}

QuadForm construct_representing_form(const Int& n, const Int& determinant, const Int& z0) {
  if (n == 0) {
    throw DomainError("construct_representing_form: n must be nonzero");
  }
  const Int numerator = determinant + z0 * z0;
  if (numerator % n != 0) {
    throw DomainError("construct_representing_form: " + n.str() + " does not divide D + z0^2 = " +
                      numerator.str());
  }
  return QuadForm{n, z0, numerator / n};
}

std::optional<Int> solvable_congruence(const Int& n, const Int& determinant) {
  if (n == 0) {
    if (determinant > 0) {
      return std::nullopt;
    }
    const Int target = -determinant;
    const Int root = boost::multiprecision::sqrt(target);
    if (root * root == target) {
      return root;
    }
    return std::nullopt;
  }
  const Int modulus = lenscob::abs(n);
  if (modulus == 1) {
    return Int(0);
  }
  const Int residue = floor_mod(-determinant, modulus);
  if (nt::gcd(residue, modulus) == 1) {
    // Root sets are closed under negation, so the least root lies in [0, |n|/2].
    return nt::sqrt_mod(residue, modulus, nt::factor(modulus));
  }
  // Non-coprime residue: roots need not be units, scan directly.
  for (Int z = 0; 2 * z <= modulus; ++z) {
    if ((z * z) % modulus == residue) {
      return z;
    }
  }
  return std::nullopt;
}

}  // namespace lenscob

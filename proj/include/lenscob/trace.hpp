#pragma once

#include <string>

#include "lenscob/bigint.hpp"

namespace lenscob {

/// Which prime shift made the three-boundary construction work: q + k*p
/// (QBranch) or r + k*p (RBranch), where p*s - q*r = 1.
enum class Branch { QBranch, RBranch };

std::string to_string(Branch branch);

/// Every intermediate of the three-boundary construction, kept for auditing.
///
/// q_prime is the prime shift, s_prime its Bezout partner:
/// p*s_prime - q_tilde*q_prime = 1 with q_tilde = r on the q-branch and q on
/// the r-branch. eps is the sign making eps*p a square mod q_prime and z the
/// smaller root; z_inv = z^{-1} mod q_prime. eps_prime = -eps is the
/// determinant of the emitted witness. The quadratic form
/// (n_form, z0, c0) has determinant D and represents n_form at (1, 0).
/// w is the scale of the first linking coefficient: the witness has
/// a = (w, 0), so the form value at a is w^2 * n_form.
struct ConstructionTrace {
  Branch branch = Branch::RBranch;
  Int k;
  Int q_prime;
  Int s_prime;
  Int q_tilde;
  int eps = 1;
  Int z;
  Int z_inv;
  int eps_prime = -1;
  Int D;
  Int n_form;
  Int z0;
  Int c0;
  Int w = 1;

  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

}  // namespace lenscob

#pragma once

#include <optional>

#include "lenscob/bigint.hpp"

namespace lenscob {

/// Binary quadratic form a*x^2 + 2*b*x*y + c*y^2 (even middle coefficient).
struct QuadForm {
  Int a;
  Int b;
  Int c;

  /// a*c - b^2.
  Int determinant() const { return a * c - b * b; }

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

Int eval(const QuadForm& f, const Int& x, const Int& y);

/// The form n*x^2 + 2*z0*x*y + C0*y^2 with C0 = (D + z0^2) / n. It has
/// determinant D and represents n primitively at (1, 0). Throws DomainError
/// unless n != 0 and n divides D + z0^2.
QuadForm construct_representing_form(const Int& n, const Int& determinant, const Int& z0);

/// Smallest-magnitude z0 with -z0^2 = D (mod |n|), ties toward positive, or
/// nullopt when the congruence has no solution. For n = 0 the congruence
/// degenerates to the equation -z0^2 = D.
std::optional<Int> solvable_congruence(const Int& n, const Int& determinant);

}  // namespace lenscob

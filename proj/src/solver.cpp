#include "lenscob/solver.hpp"

#include <algorithm>
#include <sstream>

#include "lenscob/quadform.hpp"

namespace lenscob {

std::string to_string(Branch branch) {
  return branch == Branch::QBranch ? "q-branch" : "r-branch";
}

namespace {

std::string describe(const ConstructionTrace& tr) {
  std::ostringstream out;
  out << to_string(tr.branch) << " k=" << tr.k << " q'=" << tr.q_prime << " s'=" << tr.s_prime
      << " q~=" << tr.q_tilde << " eps=" << tr.eps << " z=" << tr.z << " z'=" << tr.z_inv
      << " eps'=" << tr.eps_prime << " D=" << tr.D << " n=" << tr.n_form << " z0=" << tr.z0
      << " C0=" << tr.c0 << " w=" << tr.w;
  return out.str();
}

[[noreturn]] void integrity_failure(const LensSpace& lens, const std::string& what,
                                    const ConstructionTrace& trace) {
  throw IntegrityError(lens.name() + ": " + what + " [" + describe(trace) + "]");
}

std::string describe(const BranchProgress& progress) {
  return to_string(progress.branch) + " tested " + std::to_string(progress.k_tested) +
         " shifts (" + std::to_string(progress.primes_seen) + " primes = 1 mod 4)";
}

bool square_mod(const Int& value, const Int& modulus) {
  return nt::sqrt_mod(value, modulus, nt::factor(modulus)).has_value();
}

}  // namespace

std::optional<TwoBoundaryWitness> solve_n2(const LensSpace& lens, const SolverOptions& options) {
  const Int& p = lens.p();
  const Int& q = lens.q();
  nt::FactorOptions factor_options;
  factor_options.mr_rounds = options.mr_rounds;
  const nt::Factorization fact = nt::factor(p, factor_options);
  const Int q_inverse = nt::mod_inv(q, p);

  // t p + q a^2 = delta  <=>  a^2 = delta q^{-1} (mod p).
  for (const int delta : {1, -1}) {
    const auto a = nt::sqrt_mod(floor_mod(delta * q_inverse, p), p, fact);
    if (!a) {
      continue;
    }
    const Int numerator = delta - q * *a * *a;
    if (numerator % p != 0) {
      throw IntegrityError(lens.name() + ": root " + a->str() + " does not give q a^2 = " +
                           std::to_string(delta) + " mod p");
    }
    Witness witness = Witness::one_hole(*a, numerator / p);
    const Certificate check = verify(lens, witness);
    if (check.det != delta) {
      throw IntegrityError(lens.name() + ": one-hole witness has determinant " +
                           check.det.str() + ", expected " + std::to_string(delta));
    }
    return TwoBoundaryWitness{std::move(witness), delta};
  }
  return std::nullopt;
}

PrimeSearchExhausted::PrimeSearchExhausted(const LensSpace& lens, BranchProgress q_branch,
                                           BranchProgress r_branch)
    : ResourceError(lens.name() + ": no prime = 3 mod 4 found; " + describe(q_branch) + ", " +
                    describe(r_branch)),
      q_branch_(q_branch),
      r_branch_(r_branch) {}

PrimeShift find_prime_shift(const LensSpace& lens, const BezoutPair& bezout,
                            const SolverOptions& options) {
  const Int& p = lens.p();
  BranchProgress q_progress{Branch::QBranch};
  BranchProgress r_progress{Branch::RBranch};

  auto hit = [&](const Int& candidate, BranchProgress& progress) {
    ++progress.k_tested;
    if (!nt::is_prime(candidate, options.mr_rounds)) {
      return false;
    }
    if (candidate % 4 == 3) {
      return true;
    }
    ++progress.primes_seen;
    return false;
  };

  Int q_candidate = lens.q();
  Int r_candidate = bezout.r;
  for (std::uint64_t k = 0; k < options.prime_search_cap; ++k) {
    if (hit(q_candidate, q_progress)) {
      return {Branch::QBranch, Int(k), q_candidate, bezout.s + Int(k) * bezout.r};
    }
    if (hit(r_candidate, r_progress)) {
      return {Branch::RBranch, Int(k), r_candidate, bezout.s + Int(k) * lens.q()};
    }
    q_candidate += p;
    r_candidate += p;
  }
  throw PrimeSearchExhausted(lens, q_progress, r_progress);
}

ThreeBoundaryWitness solve_n3(const LensSpace& lens, const SolverOptions& options) {
  const Int& p = lens.p();
  const Int& q = lens.q();
  const BezoutPair bz = bezout(lens);
  const PrimeShift shift = find_prime_shift(lens, bz, options);

  ConstructionTrace tr;
  tr.branch = shift.branch;
  tr.k = shift.k;
  tr.q_prime = shift.q_prime;
  tr.s_prime = shift.s_prime;
  tr.q_tilde = shift.branch == Branch::QBranch ? bz.r : q;
  const Int& prime = tr.q_prime;

  if (p * tr.s_prime - tr.q_tilde * prime != 1) {
    integrity_failure(lens, "shifted Bezout identity fails", tr);
  }

  // prime = 3 mod 4 makes (-1 | prime) = -1, so exactly one of +-p is a square.
  const int plus = nt::jacobi(p, prime);
  const int minus = nt::jacobi(-p, prime);
  if (plus * minus != -1) {
    integrity_failure(lens, "Legendre symbols of +-p are not opposite", tr);
  }
  tr.eps = plus == 1 ? 1 : -1;
  tr.eps_prime = -tr.eps;

  const auto root = nt::sqrt_mod_prime(tr.eps * p, prime);
  if (!root) {
    integrity_failure(lens, "eps*p has no square root", tr);
  }
  tr.z = *root;
  tr.z_inv = nt::mod_inv(tr.z, prime);

  // Witness a = (w, 0). The q-branch prime only satisfies q*q' = +-1 (mod p)
  // after scaling by w^2 with (w q)^2 = +-1; w = r always qualifies.
  if (shift.branch == Branch::RBranch) {
    tr.w = 1;
  } else {
    const Int q_squared = (q * q) % p;
    tr.w = (q_squared == 1 || q_squared == p - 1) ? Int(1) : std::min(bz.r, Int(p - bz.r));
  }
  const Int scale = q * tr.w * tr.w;
  const Int residue = floor_mod(scale * prime, p);
  int sigma = 0;
  if (residue == floor_mod(Int(-1), p)) {
    sigma = -tr.eps_prime;
  } else if (residue == 1) {
    sigma = tr.eps_prime;
  } else {
    integrity_failure(lens, "q w^2 q' is not +-1 mod p", tr);
  }
  tr.n_form = sigma * prime;

  // p D + q w^2 n_form = eps'.
  const Int numerator = tr.eps_prime - scale * tr.n_form;
  if (numerator % p != 0) {
    integrity_failure(lens, "form determinant is not integral", tr);
  }
  tr.D = numerator / p;

  tr.z0 = std::min(tr.z_inv, Int(prime - tr.z_inv));
  QuadForm form;
  try {
    form = construct_representing_form(tr.n_form, tr.D, tr.z0);
  } catch (const DomainError& e) {
    integrity_failure(lens, e.what(), tr);
  }
  tr.c0 = form.c;

  Witness witness = Witness::two_holes(tr.w, 0, tr.c0, tr.n_form, -tr.z0);
  const Certificate check = verify(lens, witness);
  if (check.det != tr.eps_prime) {
    integrity_failure(lens, "two-hole witness has determinant " + check.det.str(), tr);
  }
  return ThreeBoundaryWitness{std::move(witness), std::move(tr)};
}

BoundaryAnswer minimal_planar_boundaries(const LensSpace& lens, const SolverOptions& options) {
  if (auto two = solve_n2(lens, options)) {
    Certificate cert = verify(lens, two->witness);
    if (!cert.valid) {
      throw IntegrityError(lens.name() + ": one-hole certificate failed verification");
    }
    return {2, std::move(cert)};
  }
  ThreeBoundaryWitness three = solve_n3(lens, options);
  Certificate cert = verify(lens, three.witness);
  if (!cert.valid) {
    throw IntegrityError(lens.name() + ": two-hole certificate failed verification [" +
                         describe(three.trace) + "]");
  }
  cert.trace = std::move(three.trace);
  return {3, std::move(cert)};
}

std::optional<int> hc_upper_bound_connected_sum(const std::vector<LensSpace>& summands) {
  if (summands.empty() || summands.size() > 3) {
    throw DomainError("hc bound: expected 1 to 3 summands, got " +
                      std::to_string(summands.size()));
  }
  const auto residues = std::count_if(summands.begin(), summands.end(), [](const LensSpace& l) {
    return square_mod(l.q(), l.p());
  });
  if (summands.size() == 2 && residues == 2) {
    return 1;
  }
  if (summands.size() == 3 && residues >= 2) {
    return 2;
  }
  return std::nullopt;
}

std::size_t continued_fraction_bound(const LensSpace& lens) {
  return 1 + nt::cf_expansion(lens.p(), lens.q()).size();
}

}  // namespace lenscob

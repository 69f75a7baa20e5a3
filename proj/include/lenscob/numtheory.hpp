#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lenscob/bigint.hpp"

/// Exact integer kernel: Bezout data, modular arithmetic, residue symbols,
/// primality, modular square roots and factorization.
///
/// Every function here is pure; nothing holds mutable state, so all of it is
/// safe to call concurrently.
namespace lenscob::nt {

inline constexpr unsigned kDefaultMillerRabinRounds = 64;

/// Below this value the fixed witness set {2, 3, ..., 41} makes Miller-Rabin
/// deterministic.
extern const Int kDeterministicPrimalityBound;

struct GcdResult {
  Int g;
  Int x;
  Int y;
};

/// g = gcd(a, b) >= 0 and a*x + b*y = g. Throws DomainError when a = b = 0.
GcdResult ext_gcd(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);

/// Inverse of a modulo m in [1, m). m must be >= 2; throws NotInvertibleError
/// when gcd(a, m) != 1.
Int mod_inv(const Int& a, const Int& m);

/// base^exponent mod modulus for exponent >= 0, modulus >= 1. Result in [0, modulus).
Int pow_mod(const Int& base, const Int& exponent, const Int& modulus);

/// Jacobi symbol (a | m) for odd m >= 1.
int jacobi(const Int& a, const Int& m);

/// Miller-Rabin. Deterministic below kDeterministicPrimalityBound, otherwise
/// `rounds` pseudo-random bases derived from m itself (so the answer is still
/// a pure function of the arguments).
bool is_prime(const Int& m, unsigned rounds = kDefaultMillerRabinRounds);

/// Square root of a modulo a prime. Returns the smaller root min(z, prime - z),
/// or nullopt when a is a non-residue. Throws IntegrityError when the modulus
/// turns out to be composite along the way.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& prime);

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  Int value;
  std::vector<PrimePower> factors;  // strictly increasing primes

  Int product() const;
};

struct FactorOptions {
  std::uint32_t trial_division_bound = 1u << 14;
  // Total Pollard-rho iterations across all splits before giving up.
  std::uint64_t rho_iteration_budget = std::uint64_t{1} << 26;
  unsigned mr_rounds = kDefaultMillerRabinRounds;
};

/// Complete factorization of m >= 1 (trial division, then Pollard-rho with
/// every prime factor certified by is_prime). Throws ResourceError when the
/// rho budget runs out.
Factorization factor(const Int& m, const FactorOptions& options = {});

/// All square roots of a modulo m, sorted ascending. gcd(a, m) must be 1 and
/// `fact` must factor m; both are checked (DomainError).
std::vector<Int> sqrt_mod_all(const Int& a, const Int& m, const Factorization& fact);

/// Smallest root of z^2 = a (mod m), or nullopt. Same preconditions as sqrt_mod_all.
std::optional<Int> sqrt_mod(const Int& a, const Int& m, const Factorization& fact);

/// Euclidean continued fraction of p/q (all partial quotients positive).
/// Requires 0 < q < p and gcd(p, q) = 1.
std::vector<Int> cf_expansion(const Int& p, const Int& q);

}  // namespace lenscob::nt

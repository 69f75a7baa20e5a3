#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lenscob/bigint.hpp"
#include "lenscob/errors.hpp"
#include "lenscob/lens.hpp"
#include "lenscob/numtheory.hpp"
#include "lenscob/trace.hpp"
#include "lenscob/witness.hpp"

namespace lenscob {

inline constexpr std::uint64_t kDefaultPrimeSearchCap = 100000;

struct SolverOptions {
  /// Number of k values tried per branch in the prime-shift search.
  std::uint64_t prime_search_cap = kDefaultPrimeSearchCap;
  unsigned mr_rounds = nt::kDefaultMillerRabinRounds;
};

struct TwoBoundaryWitness {
  Witness witness;
  int det = 1;  // the sign delta with t*p + q*a^2 = delta
};

/// Two boundary components (one hole). Succeeds iff q or -q is a square mod p.
/// Prefers det = +1; within a sign, the smallest a in [0, p).
std::optional<TwoBoundaryWitness> solve_n2(const LensSpace& lens,
                                           const SolverOptions& options = {});

struct PrimeShift {
  Branch branch = Branch::QBranch;
  Int k;
  Int q_prime;
  Int s_prime;
};

struct BranchProgress {
  Branch branch;
  std::uint64_t k_tested = 0;
  std::uint64_t primes_seen = 0;  // primes that failed only the 3 (mod 4) test
};

class PrimeSearchExhausted : public ResourceError {
 public:
  PrimeSearchExhausted(const LensSpace& lens, BranchProgress q_branch, BranchProgress r_branch);

  const BranchProgress& q_branch() const { return q_branch_; }
  const BranchProgress& r_branch() const { return r_branch_; }

 private:
  BranchProgress q_branch_;
  BranchProgress r_branch_;
};

/// First k (testing the q-branch before the r-branch at each k) for which
/// q + k p, resp. r + k p, is a prime congruent to 3 mod 4. s_prime is s + k r
/// on the q-branch and s + k q on the r-branch.
PrimeShift find_prime_shift(const LensSpace& lens, const BezoutPair& bezout,
                            const SolverOptions& options = {});

struct ThreeBoundaryWitness {
  Witness witness;
  ConstructionTrace trace;
};

/// Three boundary components (two holes); always succeeds unless the prime
/// search cap is hit. The witness has determinant trace.eps_prime; any
/// internal inconsistency raises IntegrityError.
ThreeBoundaryWitness solve_n3(const LensSpace& lens, const SolverOptions& options = {});

struct BoundaryAnswer {
  int boundaries = 0;  // 2 or 3
  Certificate certificate;
};

/// Minimal number of boundary components of a planar homologically fibered
/// surface in the lens space, with a verified certificate.
BoundaryAnswer minimal_planar_boundaries(const LensSpace& lens,
                                         const SolverOptions& options = {});

/// Upper bound on hc of a connected sum of 1 to 3 lens spaces, when one of
/// the two known patterns applies: two summands with both q_i square mod p_i
/// give 1; three summands with at least two such give 2.
std::optional<int> hc_upper_bound_connected_sum(const std::vector<LensSpace>& summands);

/// One plus the length of the Euclidean continued fraction of p/q: the
/// classical count of fibered-link components with planar fiber.
std::size_t continued_fraction_bound(const LensSpace& lens);

}  // namespace lenscob

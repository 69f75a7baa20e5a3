#include "lenscob/numtheory.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <random>
#include <string>

#include "lenscob/errors.hpp"

namespace lenscob::nt {

namespace mp = boost::multiprecision;

const Int kDeterministicPrimalityBound{"3317044064679887385961981"};

namespace {

constexpr std::array<unsigned, 13> kDeterministicBases = {2,  3,  5,  7,  11, 13, 17,
                                                          19, 23, 29, 31, 37, 41};

constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                   29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                   67, 71, 73, 79, 83, 89, 97};

// One Miller-Rabin round; m - 1 = d * 2^s with d odd.
bool strong_probable_prime(const Int& m, const Int& base, const Int& d, unsigned s) {
  Int x = mp::powm(base, d, m);
  const Int minus_one = m - 1;
  if (x == 1 || x == minus_one) {
    return true;
  }
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x) % m;
    if (x == minus_one) {
      return true;
    }
    if (x == 1) {
      return false;
    }
  }
  return false;
}

std::uint64_t low_word(const Int& value) {
  return static_cast<std::uint64_t>(value & Int(std::numeric_limits<std::uint64_t>::max()));
}

// Uniform-ish value in [2, m - 2] for m > 4.
Int random_base(std::mt19937_64& rng, const Int& m) {
  const unsigned words = static_cast<unsigned>(mp::msb(m) / 64) + 2;
  Int raw = 0;
  for (unsigned i = 0; i < words; ++i) {
    raw = (raw << 64) | Int(rng());
  }
  return raw % (m - 3) + 2;
}

Int abs_diff(const Int& a, const Int& b) { return a > b ? Int(a - b) : Int(b - a); }

Int rho_split(const Int& n, std::uint64_t& budget) {
  if (n % 2 == 0) {
    return 2;
  }
  constexpr unsigned kBlock = 128;
  for (unsigned c = 1;; ++c) {
    auto step = [&](const Int& v) { return Int((v * v + c) % n); };
    Int y = 2, x = 2, ys = 2, q = 1, g = 1;
    std::uint64_t r = 1;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) {
        y = step(y);
      }
      for (std::uint64_t k = 0; k < r && g == 1; k += kBlock) {
        ys = y;
        const std::uint64_t chunk = std::min<std::uint64_t>(kBlock, r - k);
        if (budget < chunk) {
          throw ResourceError("factor: Pollard-rho iteration budget exhausted on " + n.str());
        }
        budget -= chunk;
        for (std::uint64_t i = 0; i < chunk; ++i) {
          y = step(y);
          q = (q * abs_diff(x, y)) % n;
        }
        g = mp::gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = mp::gcd(abs_diff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) {
      return g;
    }
  }
}

void split_into(const Int& n, std::map<Int, unsigned>& out, std::uint64_t& budget,
                unsigned rounds) {
  if (n == 1) {
    return;
  }
  if (is_prime(n, rounds)) {
    ++out[n];
    return;
  }
  const Int d = rho_split(n, budget);
  split_into(d, out, budget, rounds);
  split_into(n / d, out, budget, rounds);
}

void check_factorization(const Int& m, const Factorization& fact) {
  if (fact.value != m || fact.product() != m) {
    throw DomainError("factorization does not match modulus " + m.str());
  }
}

// Roots of x^2 = a modulo prime^exponent, a coprime to prime.
std::vector<Int> prime_power_roots(const Int& a, const PrimePower& pp) {
  const Int modulus = mp::pow(pp.prime, pp.exponent);
  const Int x = floor_mod(a, modulus);
  if (pp.prime == 2) {
    if (pp.exponent == 1) {
      return {1};
    }
    if (pp.exponent == 2) {
      if (x % 4 != 1) {
        return {};
      }
      return {1, 3};
    }
    if (x % 8 != 1) {
      return {};
    }
    // z^2 = a mod 2^k implies z or z + 2^(k-1) is a root mod 2^(k+1).
    Int z = 1;
    for (unsigned k = 3; k < pp.exponent; ++k) {
      const Int next = Int(1) << (k + 1);
      if ((z * z - x) % next != 0) {
        z += Int(1) << (k - 1);
      }
    }
    const Int half = modulus >> 1;
    std::vector<Int> roots = {z % modulus, floor_mod(-z, modulus), (z + half) % modulus,
                              floor_mod(half - z, modulus)};
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
  }

  const auto base = sqrt_mod_prime(x % pp.prime, pp.prime);
  if (!base) {
    return {};
  }
  // Hensel: z <- z - (z^2 - a) / (2z), one power at a time.
  Int z = *base;
  Int current = pp.prime;
  for (unsigned k = 1; k < pp.exponent; ++k) {
    current *= pp.prime;
    const Int correction = floor_mod((z * z - x) * mod_inv(2 * z, current), current);
    z = floor_mod(z - correction, current);
  }
  if (floor_mod(z * z - x, modulus) != 0) {
    throw IntegrityError("Hensel lifting produced a non-root modulo " + modulus.str());
  }
  std::vector<Int> roots = {z, floor_mod(-z, modulus)};
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

GcdResult ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) {
    throw DomainError("ext_gcd: both arguments are zero");
  }
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    const Int quotient = old_r / r;
    Int tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_x - quotient * x;
    old_x = x;
    x = tmp;
    tmp = old_y - quotient * y;
    old_y = y;
    y = tmp;
  }
  if (old_r < 0) {
    return {-old_r, -old_x, -old_y};
  }
  return {old_r, old_x, old_y};
}

Int gcd(const Int& a, const Int& b) { return mp::gcd(lenscob::abs(a), lenscob::abs(b)); }

Int mod_inv(const Int& a, const Int& m) {
  if (m < 2) {
    throw DomainError("mod_inv: modulus must be >= 2, got " + m.str());
  }
  const GcdResult res = ext_gcd(floor_mod(a, m), m);
  if (res.g != 1) {
    throw NotInvertibleError("mod_inv: " + a.str() + " is not invertible modulo " + m.str());
  }
  return floor_mod(res.x, m);
}

Int pow_mod(const Int& base, const Int& exponent, const Int& modulus) {
  if (modulus < 1 || exponent < 0) {
    throw DomainError("pow_mod: need exponent >= 0 and modulus >= 1");
  }
  if (modulus == 1) {
    return 0;
  }
  return mp::powm(floor_mod(base, modulus), exponent, modulus);
}

int jacobi(const Int& a, const Int& m) {
  if (m < 1 || m % 2 == 0) {
    throw DomainError("jacobi: modulus must be odd and positive, got " + m.str());
  }
  Int x = floor_mod(a, m);
  Int n = m;
  int result = 1;
  while (x != 0) {
    const unsigned twos = static_cast<unsigned>(mp::lsb(x));
    x >>= twos;
    const unsigned n_mod_8 = static_cast<unsigned>(n % 8);
    if ((twos & 1u) != 0 && (n_mod_8 == 3 || n_mod_8 == 5)) {
      result = -result;
    }
    if (x % 4 == 3 && n % 4 == 3) {
      result = -result;
    }
    std::swap(x, n);
    x %= n;
  }
  return n == 1 ? result : 0;
}

bool is_prime(const Int& m, unsigned rounds) {
  if (m < 2) {
    return false;
  }
  for (unsigned p : kSmallPrimes) {
    if (m == p) {
      return true;
    }
    if (m % p == 0) {
      return false;
    }
  }
  if (m < 97 * 97) {
    return true;
  }
  Int d = m - 1;
  const unsigned s = static_cast<unsigned>(mp::lsb(d));
  d >>= s;

  if (m < kDeterministicPrimalityBound) {
    return std::all_of(kDeterministicBases.begin(), kDeterministicBases.end(),
                       [&](unsigned base) { return strong_probable_prime(m, base, d, s); });
  }
  std::mt19937_64 rng(low_word(m) ^ (static_cast<std::uint64_t>(mp::msb(m)) << 56));
  for (unsigned i = 0; i < rounds; ++i) {
    if (!strong_probable_prime(m, random_base(rng, m), d, s)) {
      return false;
    }
  }
  return true;
}

std::optional<Int> sqrt_mod_prime(const Int& a, const Int& prime) {
  if (prime < 2) {
    throw DomainError("sqrt_mod_prime: modulus must be prime, got " + prime.str());
  }
  const Int x = floor_mod(a, prime);
  if (prime == 2 || x == 0) {
    return x;
  }
  const Int minus_one = prime - 1;
  auto composite = [&]() {
    return IntegrityError("sqrt_mod_prime: modulus " + prime.str() + " is composite");
  };

  if (prime % 4 == 3) {
    const Int z = mp::powm(x, (prime + 1) / 4, prime);
    if ((z * z) % prime == x) {
      return std::min(z, Int(prime - z));
    }
    if (mp::powm(x, minus_one / 2, prime) == minus_one) {
      return std::nullopt;
    }
    throw composite();
  }
  if (prime % 2 == 0) {
    throw composite();
  }

  const Int euler = mp::powm(x, minus_one / 2, prime);
  if (euler == minus_one) {
    return std::nullopt;
  }
  if (euler != 1) {
    throw composite();
  }

  // Tonelli-Shanks.
  Int odd = minus_one;
  const unsigned s = static_cast<unsigned>(mp::lsb(odd));
  odd >>= s;

  Int nonresidue = 2;
  for (;; ++nonresidue) {
    if (nonresidue >= prime) {
      throw composite();
    }
    const Int e = mp::powm(nonresidue, minus_one / 2, prime);
    if (e == minus_one) {
      break;
    }
    if (e != 1) {
      throw composite();
    }
  }

  unsigned order_bound = s;
  Int c = mp::powm(nonresidue, odd, prime);
  Int t = mp::powm(x, odd, prime);
  Int root = mp::powm(x, (odd + 1) / 2, prime);
  while (t != 1) {
    unsigned i = 0;
    Int probe = t;
    while (probe != 1) {
      probe = (probe * probe) % prime;
      if (++i == order_bound) {
        throw composite();
      }
    }
    Int b = c;
    for (unsigned j = 0; j + i + 1 < order_bound; ++j) {
      b = (b * b) % prime;
    }
    order_bound = i;
    c = (b * b) % prime;
    t = (t * c) % prime;
    root = (root * b) % prime;
  }
  if ((root * root) % prime != x) {
    throw composite();
  }
  return std::min(root, Int(prime - root));
}

Int Factorization::product() const {
  Int acc = 1;
  for (const auto& pp : factors) {
    acc *= mp::pow(pp.prime, pp.exponent);
  }
  return acc;
}

Factorization factor(const Int& m, const FactorOptions& options) {
  if (m < 1) {
    throw DomainError("factor: argument must be positive, got " + m.str());
  }
  std::map<Int, unsigned> found;
  Int rest = m;
  for (std::uint32_t d = 2; d <= options.trial_division_bound; d += (d == 2 ? 1 : 2)) {
    if (Int(d) * d > rest) {
      break;
    }
    while (rest % d == 0) {
      ++found[Int(d)];
      rest /= d;
    }
  }
  if (rest > 1) {
    std::uint64_t budget = options.rho_iteration_budget;
    split_into(rest, found, budget, options.mr_rounds);
  }
  Factorization out{m, {}};
  for (const auto& [prime, exponent] : found) {
    out.factors.push_back({prime, exponent});
  }
  return out;
}

std::vector<Int> sqrt_mod_all(const Int& a, const Int& m, const Factorization& fact) {
  if (m < 1) {
    throw DomainError("sqrt_mod: modulus must be positive, got " + m.str());
  }
  check_factorization(m, fact);
  if (gcd(a, m) != 1) {
    throw DomainError("sqrt_mod: " + a.str() + " is not coprime to " + m.str());
  }
  std::vector<Int> roots = {0};
  Int modulus = 1;
  for (const auto& pp : fact.factors) {
    const std::vector<Int> local = prime_power_roots(a, pp);
    if (local.empty()) {
      return {};
    }
    const Int local_mod = mp::pow(pp.prime, pp.exponent);
    const Int bridge = modulus == 1 ? Int(1) : mod_inv(modulus, local_mod);
    std::vector<Int> combined;
    combined.reserve(roots.size() * local.size());
    for (const Int& r : roots) {
      for (const Int& s : local) {
        combined.push_back(r + modulus * floor_mod((s - r) * bridge, local_mod));
      }
    }
    roots = std::move(combined);
    modulus *= local_mod;
  }
  for (Int& r : roots) {
    r = floor_mod(r, m);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<Int> sqrt_mod(const Int& a, const Int& m, const Factorization& fact) {
  const std::vector<Int> roots = sqrt_mod_all(a, m, fact);
  if (roots.empty()) {
    return std::nullopt;
  }
  return roots.front();
}

std::vector<Int> cf_expansion(const Int& p, const Int& q) {
  if (!(q > 0 && q < p) || gcd(p, q) != 1) {
    throw DomainError("cf_expansion: need 0 < q < p with gcd(p, q) = 1");
  }
  std::vector<Int> quotients;
  Int num = p, den = q;
  while (den != 0) {
    quotients.push_back(num / den);
    Int rem = num % den;
    num = den;
    den = rem;
  }
  return quotients;
}

}  // namespace lenscob::nt

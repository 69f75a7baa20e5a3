#include "lenscob/oracle.hpp"

#include <numeric>
#include <vector>

#include "lenscob/errors.hpp"

namespace lenscob::oracle {

namespace {

using i128 = __int128;

constexpr std::int64_t kCoefficientLimit = std::int64_t{1} << 40;
constexpr std::int64_t kScanLimit = std::int64_t{1} << 15;

std::int64_t small(const Int& value, std::int64_t limit, const char* what) {
  if (value >= limit || value <= -limit) {
    throw DomainError(std::string("oracle: ") + what + " = " + value.str() + " is out of range");
  }
  return value.convert_to<std::int64_t>();
}

std::vector<std::int64_t> small_first(std::int64_t bound) {
  if (bound < 0 || bound > kScanLimit) {
    throw DomainError("oracle: scan bound out of range");
  }
  std::vector<std::int64_t> order = {0};
  for (std::int64_t v = 1; v <= bound; ++v) {
    order.push_back(v);
    order.push_back(-v);
  }
  return order;
}

}  // namespace

bool brute_qr(const Int& a, const Int& m) {
  if (m < 2) {
    throw DomainError("brute_qr: modulus must be >= 2");
  }
  const Int target = floor_mod(a, m);
  for (Int x = 0; x < m; ++x) {
    if ((x * x) % m == target) {
      return true;
    }
  }
  return false;
}

std::optional<OneHole> brute_n2(const LensSpace& lens, const Int& bound) {
  const Int& p = lens.p();
  const Int& q = lens.q();
  const Int limit = bound < p ? bound : p;
  for (Int a = 0; a < limit; ++a) {
    const Int value = q * a * a;
    for (const int delta : {1, -1}) {
      if ((value - delta) % p == 0) {
        return OneHole{a, (delta - value) / p};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> brute_n3(const LensSpace& lens, std::int64_t box) {
  const i128 p = small(lens.p(), kCoefficientLimit, "p");
  const i128 q = small(lens.q(), kCoefficientLimit, "q");
  const std::vector<std::int64_t> order = small_first(box);
  for (const i128 a1 : order) {
    for (const i128 a2 : order) {
      for (const i128 l : order) {
        for (const i128 t1 : order) {
          for (const i128 t2 : order) {
            const i128 value =
                p * (t1 * t2 - l * l) - q * (2 * l * a1 * a2 - t2 * a1 * a1 - t1 * a2 * a2);
            if (value == 1 || value == -1) {
              return Witness::two_holes(Int(static_cast<std::int64_t>(a1)),
                                        Int(static_cast<std::int64_t>(a2)),
                                        Int(static_cast<std::int64_t>(t1)),
                                        Int(static_cast<std::int64_t>(t2)),
                                        Int(static_cast<std::int64_t>(l)));
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Representation> brute_form_represents(const QuadForm& f, const Int& n,
                                                    std::int64_t bound) {
  const i128 a = small(f.a, kCoefficientLimit, "form coefficient a");
  const i128 b = small(f.b, kCoefficientLimit, "form coefficient b");
  const i128 c = small(f.c, kCoefficientLimit, "form coefficient c");
  const i128 target = small(n, std::int64_t{1} << 62, "n");
  const std::vector<std::int64_t> order = small_first(bound);
  for (const std::int64_t x : order) {
    for (const std::int64_t y : order) {
      if (std::gcd(x, y) != 1) {
        continue;
      }
      const i128 value = a * x * x + 2 * b * x * y + c * y * y;
      if (value == target) {
        return Representation{Int(x), Int(y)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace lenscob::oracle

#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilext {

// The single scalar type of the whole library: exact rationals, always in
// lowest terms with positive denominator (mpq_class canonical form).
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

inline Scalar frac(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("frac: zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p/q" etc.; rejects q = 0 and garbage.
std::optional<Scalar> parse_scalar(const std::string& s);

// Serializes as "p" or "p/q", denominator always positive.
std::string scalar_str(const Scalar& q);

Scalar pow_scalar(const Scalar& base, unsigned exp);

inline int sgn(const Scalar& q) { return sgn(q.get_num()); }

Vec zero_vec(std::size_t n);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& a);
bool is_zero_vec(const Vec& a);

// Deterministic stream of small rationals used wherever the spec calls for
// pseudo-random sampling; same seed, same sequence, on every platform.
class RationalStream {
 public:
  explicit RationalStream(std::uint64_t seed) : state_(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 11;
  }

  // Rational with numerator in [-9, 9] and denominator in {1, 2, 3, 4}.
  Scalar next() {
    long num = static_cast<long>(next_u64() % 19) - 9;
    long den = static_cast<long>(next_u64() % 4) + 1;
    return frac(num, den);
  }

  Scalar next_nonzero() {
    for (;;) {
      Scalar q = next();
      if (q != 0) return q;
    }
  }

 private:
  std::uint64_t state_;
};

// Fixed grid of sample values for deterministic witness searches.
const std::vector<Scalar>& sample_grid();

}  // namespace nilext

#pragma once

// Exact coefficient arithmetic: arbitrary-precision rationals (normalized
// sign, gcd-reduced) and prime fields F_p with p < 2^61, canonical
// representatives in [0, p).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wciscope {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kMaxPrimeFieldModulus = 1ull << 61;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1) acc = mulmod_u64(acc, base, p);
    base = mulmod_u64(base, base, p);
    exp >>= 1;
  }
  return acc;
}

// Inverse mod p via extended Euclid; throws on non-invertible input.
inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("element not invertible mod " + std::to_string(p));
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace detail

// Deterministic Miller-Rabin, exact for every 64-bit input.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r && composite; ++i) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

inline void require_odd_prime(std::uint64_t p) {
  if (p < 3 || p >= kMaxPrimeFieldModulus || p % 2 == 0 || !is_prime_u64(p)) {
    throw std::invalid_argument("modulus must be an odd prime below 2^61, got " + std::to_string(p));
  }
}

// Element of F_p. A default-constructed or integer-constructed element has
// modulus 0 ("unbound") and adopts the modulus of the first bound operand it
// meets; binary operations on two bound elements with different moduli throw.
class Fp {
 public:
  Fp() = default;
  explicit Fp(long long v) : v_(v) {}
  Fp(long long v, std::uint64_t p) : p_(p) {
    if (p != 0) {
      if (p < 2 || p >= kMaxPrimeFieldModulus) {
        throw std::invalid_argument("prime-field modulus out of range");
      }
      v_ = canonical(v, p);
    } else {
      v_ = v;
    }
  }

  static Fp from_rational(const Rational& x, std::uint64_t p);

  bool bound() const { return p_ != 0; }
  std::uint64_t modulus() const { return p_; }
  // Canonical representative when bound; the raw integer otherwise.
  long long value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp bind(std::uint64_t p) const { return Fp(v_, p); }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = reconcile(a, b);
    if (p == 0) return Fp(a.v_ + b.v_);
    return Fp(canonical(a.v_, p) + canonical(b.v_, p), p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t p = reconcile(a, b);
    if (p == 0) return Fp(a.v_ - b.v_);
    return Fp(canonical(a.v_, p) - canonical(b.v_, p), p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = reconcile(a, b);
    if (p == 0) return Fp(a.v_ * b.v_);
    std::uint64_t prod = detail::mulmod_u64(
        static_cast<std::uint64_t>(canonical(a.v_, p)), static_cast<std::uint64_t>(canonical(b.v_, p)), p);
    return Fp(static_cast<long long>(prod), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    std::uint64_t p = reconcile(a, b);
    if (p == 0) throw std::domain_error("division of unbound prime-field elements");
    std::uint64_t inv = detail::invmod_u64(static_cast<std::uint64_t>(canonical(b.v_, p)), p);
    std::uint64_t q = detail::mulmod_u64(static_cast<std::uint64_t>(canonical(a.v_, p)), inv, p);
    return Fp(static_cast<long long>(q), p);
  }
  Fp operator-() const { return Fp(-v_, p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint64_t p = reconcile(a, b);
    if (p == 0) return a.v_ == b.v_;
    return canonical(a.v_, p) == canonical(b.v_, p);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  static long long canonical(long long v, std::uint64_t p) {
    long long m = static_cast<long long>(p);
    long long r = v % m;
    return r < 0 ? r + m : r;
  }
  // Common modulus of two operands, 0 when both are unbound.
  static std::uint64_t reconcile(const Fp& a, const Fp& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) {
      throw std::invalid_argument("prime-field modulus mismatch: " + std::to_string(a.p_) + " vs " +
                                  std::to_string(b.p_));
    }
    return a.p_ != 0 ? a.p_ : b.p_;
  }

  long long v_ = 0;
  std::uint64_t p_ = 0;
};

inline Fp Fp::from_rational(const Rational& x, std::uint64_t p) {
  if (p < 2 || p >= kMaxPrimeFieldModulus) throw std::invalid_argument("prime-field modulus out of range");
  Int pp(p);
  Int den = denominator(x) % pp;
  if (den == 0) {
    throw std::invalid_argument("prime " + std::to_string(p) + " divides a coefficient denominator");
  }
  Int num = numerator(x) % pp;
  std::uint64_t n = static_cast<std::uint64_t>(num < 0 ? num + pp : num);
  std::uint64_t d = static_cast<std::uint64_t>(den < 0 ? den + pp : den);
  return Fp(static_cast<long long>(detail::mulmod_u64(n, detail::invmod_u64(d, p), p)), p);
}

// cpp_rational's two-argument constructor rejects negative denominators.
inline Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline bool is_zero_coeff(const Rational& c) { return c.is_zero(); }
inline bool is_zero_coeff(const Fp& c) { return c.is_zero(); }

inline std::string coeff_to_string(const Rational& c) { return c.str(); }
inline std::string coeff_to_string(const Fp& c) { return std::to_string(c.value()); }

}  // namespace wciscope

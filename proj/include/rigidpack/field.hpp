#pragma once

#include <cstdint>
#include <ostream>

namespace rigidpack::ff {

__extension__ typedef unsigned __int128 u128;

/// The field modulus: the Mersenne prime 2^61 - 1, the largest prime below
/// 2^61. Products fit in unsigned 128-bit intermediates and reduce with a
/// shift and an add.
inline constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

/// Element of GF(2^61 - 1), always held in canonical form [0, p).
class Fp {
 public:
  constexpr Fp() = default;
  constexpr explicit Fp(std::uint64_t v) : v_(reduce64(v)) {}

  static constexpr Fp from_signed(std::int64_t v) {
    return v >= 0 ? Fp(static_cast<std::uint64_t>(v))
                  : -Fp(static_cast<std::uint64_t>(-(v + 1)) + 1);
  }

  constexpr std::uint64_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr Fp operator+(Fp o) const {
    std::uint64_t s = v_ + o.v_;
    return raw(s >= kModulus ? s - kModulus : s);
  }
  constexpr Fp operator-(Fp o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + kModulus - o.v_); }
  constexpr Fp operator-() const { return raw(v_ == 0 ? 0 : kModulus - v_); }
  constexpr Fp operator*(Fp o) const {
    const u128 prod = static_cast<u128>(v_) * o.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(prod) & kModulus;
    std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    std::uint64_t s = lo + hi;
    return raw(s >= kModulus ? s - kModulus : s);
  }
  constexpr Fp& operator+=(Fp o) { return *this = *this + o; }
  constexpr Fp& operator-=(Fp o) { return *this = *this - o; }
  constexpr Fp& operator*=(Fp o) { return *this = *this * o; }

  constexpr Fp pow(std::uint64_t e) const {
    Fp base = *this, acc = raw(1);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }
  /// Multiplicative inverse; the inverse of zero is reported as zero.
  constexpr Fp inverse() const { return pow(kModulus - 2); }

  friend constexpr bool operator==(Fp a, Fp b) = default;
  friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.v_; }

 private:
  static constexpr Fp raw(std::uint64_t v) {
    Fp x;
    x.v_ = v;
    return x;
  }
  static constexpr std::uint64_t reduce64(std::uint64_t v) {
    std::uint64_t s = (v & kModulus) + (v >> 61);
    return s >= kModulus ? s - kModulus : s;
  }

  std::uint64_t v_ = 0;
};

}  // namespace rigidpack::ff

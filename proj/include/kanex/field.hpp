#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kanex {

using Rational = boost::multiprecision::cpp_rational;

// Coefficient field: characteristic 0 means exact rationals, otherwise a
// prime p and arithmetic is done in F_p.
struct FieldSpec {
  std::uint32_t characteristic = 32003;

  bool is_rational() const { return characteristic == 0; }
  bool operator==(const FieldSpec& o) const { return characteristic == o.characteristic; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

inline FieldSpec make_field(std::uint32_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                std::to_string(characteristic));
  return FieldSpec{characteristic};
}

namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1, base = a % p;
  while (e) {
    if (e & 1) r = (r * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}
inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  return pow(a, p - 2, p);
}
inline std::uint32_t from_int(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace fp

}  // namespace kanex

#ifndef SPRINGER_FIELD_HPP
#define SPRINGER_FIELD_HPP

// Exact arithmetic in F_p and F_{p^2}.
//
// F_{p^2} is realized as F_p[t]/(t^2 + m1*t + m0) where the modulus is the
// first monic irreducible quadratic when (m1, m0) is enumerated
// lexicographically.  Elements are stored as coordinate pairs (c0, c1)
// meaning c0 + c1*t; for e = 1 the c1 slot is always zero.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace springer {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Reduced representative of an F_{p^e} element.
struct Coords {
  std::uint32_t c0 = 0;
  std::uint32_t c1 = 0;
  friend auto operator<=>(const Coords&, const Coords&) = default;
};

class Field {
 public:
  static constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

  Field() : Field(2, 1) {}

  Field(std::uint32_t p, unsigned e = 1) : p_(p), e_(e) {
    if (!is_prime(p) || p > kMaxPrime)
      throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                  std::to_string(p));
    if (e != 1 && e != 2)
      throw std::invalid_argument("extension degree must be 1 or 2, got " + std::to_string(e));
    if (e == 2) pick_modulus();
  }

  std::uint32_t p() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint64_t order() const { return e_ == 1 ? p_ : std::uint64_t{p_} * p_; }

  // Modulus t^2 + m1*t + m0 (meaningful for e = 2 only).
  std::uint32_t modulus_linear() const { return m1_; }
  std::uint32_t modulus_constant() const { return m0_; }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_ && a.e_ == b.e_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  Coords embed(std::int64_t v) const { return {reduce(v), 0}; }

  Coords add(Coords a, Coords b) const { return {addp(a.c0, b.c0), addp(a.c1, b.c1)}; }
  Coords sub(Coords a, Coords b) const { return {subp(a.c0, b.c0), subp(a.c1, b.c1)}; }
  Coords neg(Coords a) const { return {subp(0, a.c0), subp(0, a.c1)}; }

  Coords mul(Coords a, Coords b) const {
    if (e_ == 1) return {mulp(a.c0, b.c0), 0};
    // (a0 + a1 t)(b0 + b1 t) with t^2 = -m1 t - m0
    std::uint32_t hi = mulp(a.c1, b.c1);
    std::uint32_t lo = subp(mulp(a.c0, b.c0), mulp(hi, m0_));
    std::uint32_t mid = subp(addp(mulp(a.c0, b.c1), mulp(a.c1, b.c0)), mulp(hi, m1_));
    return {lo, mid};
  }

  Coords pow(Coords a, std::uint64_t k) const {
    Coords r{1, 0};
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }

  Coords inv(Coords a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero in F_" + name());
    return pow(a, order() - 2);
  }

  Coords frobenius(Coords a) const { return pow(a, p_); }

  static bool is_zero(Coords a) { return a.c0 == 0 && a.c1 == 0; }

  bool valid(Coords a) const { return a.c0 < p_ && a.c1 < p_ && (e_ == 2 || a.c1 == 0); }

  std::string name() const {
    return e_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^2";
  }

 private:
  std::uint32_t addp(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t subp(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t mulp(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }

  void pick_modulus() {
    for (std::uint32_t a = 0; a < p_; ++a)
      for (std::uint32_t b = 0; b < p_; ++b) {
        bool has_root = false;
        for (std::uint64_t x = 0; x < p_ && !has_root; ++x) {
          std::uint64_t v = (x * x + std::uint64_t{a} * x + b) % p_;
          has_root = v == 0;
        }
        if (!has_root) {
          m1_ = a;
          m0_ = b;
          return;
        }
      }
    throw std::logic_error("no irreducible quadratic found");
  }

  std::uint32_t p_ = 2;
  unsigned e_ = 1;
  std::uint32_t m1_ = 0;
  std::uint32_t m0_ = 0;
};

/// An element of F_{p^e} that knows its field.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(const Field& f, Coords c) : f_(f), c_(c) {
    if (!f.valid(c)) throw std::invalid_argument("coordinates not reduced for F_" + f.name());
  }
  FieldScalar(const Field& f, std::int64_t v) : f_(f), c_(f.embed(v)) {}

  static FieldScalar zero(const Field& f) { return {f, Coords{}}; }
  static FieldScalar one(const Field& f) { return {f, Coords{1, 0}}; }

  const Field& field() const { return f_; }
  Coords coords() const { return c_; }
  bool is_zero() const { return Field::is_zero(c_); }
  bool is_one() const { return c_.c0 == 1 && c_.c1 == 0; }

  FieldScalar inverse() const { return {f_, f_.inv(c_), raw_tag{}}; }
  FieldScalar pow(std::uint64_t k) const { return {f_, f_.pow(c_, k), raw_tag{}}; }
  FieldScalar frobenius() const { return {f_, f_.frobenius(c_), raw_tag{}}; }

  FieldScalar operator-() const { return {f_, f_.neg(c_), raw_tag{}}; }

  friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
    check(a, b);
    return {a.f_, a.f_.add(a.c_, b.c_), raw_tag{}};
  }
  friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
    check(a, b);
    return {a.f_, a.f_.sub(a.c_, b.c_), raw_tag{}};
  }
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
    check(a, b);
    return {a.f_, a.f_.mul(a.c_, b.c_), raw_tag{}};
  }
  friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
    check(a, b);
    return {a.f_, a.f_.mul(a.c_, a.f_.inv(b.c_)), raw_tag{}};
  }
  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

  friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
    return a.f_ == b.f_ && a.c_ == b.c_;
  }

  /// "c0" for prime-field elements, "c0:c1" otherwise.
  std::string to_string() const {
    if (f_.degree() == 1) return std::to_string(c_.c0);
    return std::to_string(c_.c0) + ":" + std::to_string(c_.c1);
  }

 private:
  struct raw_tag {};
  FieldScalar(const Field& f, Coords c, raw_tag) : f_(f), c_(c) {}

  static void check(const FieldScalar& a, const FieldScalar& b) {
    if (!(a.f_ == b.f_))
      throw std::invalid_argument("field mismatch: F_" + a.f_.name() + " vs F_" + b.f_.name());
  }

  Field f_;
  Coords c_;
};

}  // namespace springer

#endif  // SPRINGER_FIELD_HPP

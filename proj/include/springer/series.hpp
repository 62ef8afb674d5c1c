#ifndef SPRINGER_SERIES_HPP
#define SPRINGER_SERIES_HPP

// Truncated power series over Q and F_p, and the Artin-Hasse exponential
//   E_p(t) = exp(t + t^p/p + t^{p^2}/p^2 + ...)
// together with its reduction e_p(t) in F_p[[t]].

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "springer/field.hpp"

namespace springer {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficients c_0..c_N of a series truncated at t^{N+1}.
struct RationalSeries {
  std::vector<Rational> coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

class FpSeries {
 public:
  FpSeries(const Field& f, std::vector<FieldScalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least a constant term");
    for (const auto& c : coeffs_)
      if (!(c.field() == field_)) throw std::invalid_argument("series coefficient from another field");
  }

  static FpSeries from_ints(const Field& f, const std::vector<std::int64_t>& v) {
    std::vector<FieldScalar> c;
    c.reserve(v.size());
    for (auto x : v) c.emplace_back(f, x);
    return {f, std::move(c)};
  }

  const Field& field() const { return field_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<FieldScalar>& coeffs() const { return coeffs_; }
  const FieldScalar& operator[](std::size_t i) const { return coeffs_.at(i); }

  FpSeries truncated(std::size_t n) const {
    if (n > degree()) throw std::invalid_argument("cannot extend a truncated series");
    return {field_, {coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1)}};
  }

  std::vector<std::uint32_t> values() const {
    std::vector<std::uint32_t> out;
    for (const auto& c : coeffs_) out.push_back(c.coords().c0);
    return out;
  }

  friend bool operator==(const FpSeries&, const FpSeries&) = default;

 private:
  Field field_;
  std::vector<FieldScalar> coeffs_;
};

namespace detail {

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

inline RationalSeries rational_mul(const RationalSeries& a, const RationalSeries& b) {
  std::size_t n = std::min(a.degree(), b.degree());
  RationalSeries r{std::vector<Rational>(n + 1)};
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return r;
}

inline std::uint32_t reduce_rational(const Rational& q, std::uint32_t p) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt bp = p;
  BigInt dm = den % bp;
  if (dm == 0)
    throw std::logic_error("coefficient " + q.str() + " is not p-integral for p=" + std::to_string(p));
  BigInt nm = num % bp;
  if (nm < 0) nm += bp;
  Field f(p);
  Coords n{static_cast<std::uint32_t>(nm), 0};
  Coords d{static_cast<std::uint32_t>(dm), 0};
  return f.mul(n, f.inv(d)).c0;
}

}  // namespace detail

/// E_p coefficients from the recurrence (n+1) C_{n+1} = sum_{p^j - 1 <= n} C_{n - p^j + 1},
/// which is E_p' = E_p * sum_j t^{p^j - 1}.
inline RationalSeries ah_rational_coeffs_by_recurrence(std::uint32_t p, std::size_t n) {
  detail::require_prime(p);
  RationalSeries s{std::vector<Rational>(n + 1)};
  s.coeffs[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = 0;
    for (std::uint64_t pj = 1; pj - 1 <= k; pj *= p) acc += s.coeffs[k - (pj - 1)];
    s.coeffs[k + 1] = acc / Rational(k + 1);
  }
  return s;
}

namespace detail {

/// exp(sign * sum_{p^j <= N} t^{p^j}/p^j) as a product of single-term exponentials.
inline RationalSeries exp_of_power_sum(std::uint32_t p, std::size_t n, int sign) {
  RationalSeries acc{std::vector<Rational>(n + 1)};
  acc.coeffs[0] = 1;
  for (std::uint64_t pj = 1; pj <= n; pj *= p) {
    RationalSeries term{std::vector<Rational>(n + 1)};
    Rational base = Rational(sign, static_cast<long long>(pj));
    Rational c = 1;
    for (std::uint64_t k = 0; k * pj <= n; ++k) {
      term.coeffs[k * pj] = c;
      c = c * base / Rational(k + 1);
    }
    acc = rational_mul(acc, term);
  }
  return acc;
}

}  // namespace detail

/// C_0..C_N of E_p(t), by multiplying exp(t^{p^j}/p^j) over p^j <= N.
/// Every returned coefficient is checked to be p-integral and to agree with
/// the derivative recurrence.
inline RationalSeries ah_rational_coeffs(std::uint32_t p, std::size_t n) {
  detail::require_prime(p);
  RationalSeries acc = detail::exp_of_power_sum(p, n, 1);
  if (acc != ah_rational_coeffs_by_recurrence(p, n))
    throw std::logic_error("Artin-Hasse product and recurrence disagree");
  for (const auto& c : acc.coeffs)
    if (boost::multiprecision::denominator(c) % p == 0)
      throw std::logic_error("Artin-Hasse coefficient " + c.str() + " not p-integral");
  return acc;
}

/// Coefficients of F_p(t) = exp(-(t + t^p/p + ...)) over Q.
inline RationalSeries ah_rational_inverse_coeffs(std::uint32_t p, std::size_t n) {
  detail::require_prime(p);
  return detail::exp_of_power_sum(p, n, -1);
}

/// Truncated product of rational series.
inline RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  return detail::rational_mul(a, b);
}

/// Reduction mod p of a p-integral rational series; throws std::logic_error otherwise.
inline FpSeries reduce_mod_p(const RationalSeries& s, std::uint32_t p) {
  Field f(p);
  std::vector<FieldScalar> c;
  for (const auto& q : s.coeffs) c.emplace_back(f, Coords{detail::reduce_rational(q, p), 0});
  return {f, std::move(c)};
}

/// e_p(t) truncated at degree N: the mod-p image of E_p(t).
inline FpSeries ah_coeffs_mod_p(std::uint32_t p, std::size_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::size_t>, std::shared_ptr<const FpSeries>> cache;
  detail::require_prime(p);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({p, n}); it != cache.end()) return *it->second;
  }
  auto s = std::make_shared<const FpSeries>(reduce_mod_p(ah_rational_coeffs(p, n), p));
  std::lock_guard lock(mu);
  return *cache.emplace(std::pair{p, n}, s).first->second;
}

inline FpSeries series_mul(const FpSeries& a, const FpSeries& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("series over different fields");
  std::size_t n = std::min(a.degree(), b.degree());
  std::vector<FieldScalar> r(n + 1, FieldScalar::zero(a.field()));
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return {a.field(), std::move(r)};
}

/// Multiplicative inverse modulo t^{N+1}; the constant term must be a unit.
inline FpSeries series_inverse(const FpSeries& s) {
  if (s[0].is_zero()) throw std::invalid_argument("series with zero constant term is not invertible");
  std::size_t n = s.degree();
  FieldScalar c0inv = s[0].inverse();
  std::vector<FieldScalar> r(n + 1, FieldScalar::zero(s.field()));
  r[0] = c0inv;
  for (std::size_t k = 1; k <= n; ++k) {
    FieldScalar acc = FieldScalar::zero(s.field());
    for (std::size_t i = 1; i <= k; ++i) acc += s[i] * r[k - i];
    r[k] = -acc * c0inv;
  }
  return {s.field(), std::move(r)};
}

/// The inverse series F_p(t) = 1 / E_p(t), reduced mod p.
inline FpSeries ah_inverse_coeffs(std::uint32_t p, std::size_t n) {
  return series_inverse(ah_coeffs_mod_p(p, n));
}

/// outer(inner(t)) truncated at the shorter degree; inner must have zero constant term.
inline FpSeries series_compose(const FpSeries& outer, const FpSeries& inner) {
  if (!(outer.field() == inner.field())) throw std::invalid_argument("series over different fields");
  if (!inner[0].is_zero()) throw std::invalid_argument("inner series must have zero constant term");
  std::size_t n = std::min(outer.degree(), inner.degree());
  const Field& f = outer.field();
  std::vector<FieldScalar> r(n + 1, FieldScalar::zero(f));
  std::vector<FieldScalar> one(n + 1, FieldScalar::zero(f));
  one[0] = FieldScalar::one(f);
  FpSeries power(f, one);
  FpSeries in = inner.truncated(n);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i <= n; ++i) r[i] += outer[k] * power[i];
    power = series_mul(power, in);
  }
  return {f, std::move(r)};
}

/// Compositional inverse l with l(s(t)) = t mod t^{N+1}.
inline FpSeries series_reversion(const FpSeries& s) {
  if (!s[0].is_zero()) throw std::invalid_argument("reversion needs a zero constant term");
  if (s.degree() < 1 || s[1].is_zero())
    throw std::invalid_argument("reversion needs an invertible linear coefficient");
  const Field& f = s.field();
  std::size_t n = s.degree();
  // powers[j] = s^j; coefficient k of sum_j l_j s^j must vanish for k >= 2
  std::vector<FpSeries> powers;
  std::vector<FieldScalar> unit(n + 1, FieldScalar::zero(f));
  unit[0] = FieldScalar::one(f);
  powers.emplace_back(f, unit);
  for (std::size_t j = 1; j <= n; ++j) powers.push_back(series_mul(powers.back(), s));

  std::vector<FieldScalar> l(n + 1, FieldScalar::zero(f));
  l[1] = s[1].inverse();
  for (std::size_t k = 2; k <= n; ++k) {
    FieldScalar acc = FieldScalar::zero(f);
    for (std::size_t j = 1; j < k; ++j) acc += l[j] * powers[j][k];
    l[k] = -acc / powers[k][k];
  }
  return {f, std::move(l)};
}

/// Reversion of e_p(t) - 1, the series behind the inverse Artin-Hasse map.
inline FpSeries ah_log_series(std::uint32_t p, std::size_t n) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::size_t>, std::shared_ptr<const FpSeries>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({p, n}); it != cache.end()) return *it->second;
  }
  FpSeries e = ah_coeffs_mod_p(p, std::max<std::size_t>(n, 1));
  std::vector<FieldScalar> c = e.coeffs();
  c[0] = FieldScalar::zero(e.field());
  auto rev = series_reversion(FpSeries(e.field(), std::move(c)));
  auto s = std::make_shared<const FpSeries>(n >= 1 ? rev.truncated(n) : rev.truncated(0));
  std::lock_guard lock(mu);
  return *cache.emplace(std::pair{p, n}, s).first->second;
}

inline std::vector<std::string> to_strings(const RationalSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coeffs) out.push_back(c.str());
  return out;
}

inline std::vector<std::string> to_strings(const FpSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coeffs()) out.push_back(c.to_string());
  return out;
}

}  // namespace springer

#endif  // SPRINGER_SERIES_HPP

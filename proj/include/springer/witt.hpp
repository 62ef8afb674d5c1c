#ifndef SPRINGER_WITT_HPP
#define SPRINGER_WITT_HPP

// Witt vectors of length m <= 3 over F_{p^e}.
//
// The group law comes from the sum polynomials S_0, S_1, ... in Z[a, b],
// defined by  w_n(S_0..S_n) = w_n(a) + w_n(b)  with ghost components
// w_n(x) = sum_{i<=n} p^i x_i^{p^{n-i}}.  They are built once over Z,
// reduced mod p and evaluated over any field of characteristic p.

#include <array>
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
#include "springer/series.hpp"

namespace springer {

inline constexpr std::size_t kMaxWittLength = 3;

/// Multivariate polynomial over Z in a_0..a_2 (slots 0..2) and b_0..b_2 (slots 3..5).
class ZPoly {
 public:
  using Monomial = std::array<std::uint16_t, 2 * kMaxWittLength>;
  using Terms = std::map<Monomial, BigInt>;

  ZPoly() = default;
  explicit ZPoly(BigInt c) {
    if (c != 0) terms_[Monomial{}] = std::move(c);
  }

  static ZPoly var(std::size_t slot) {
    Monomial m{};
    m.at(slot) = 1;
    ZPoly r;
    r.terms_[m] = 1;
    return r;
  }
  static ZPoly a(std::size_t i) { return var(i); }
  static ZPoly b(std::size_t i) { return var(kMaxWittLength + i); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend ZPoly operator+(ZPoly x, const ZPoly& y) {
    for (const auto& [m, c] : y.terms_) x.accumulate(m, c);
    return x;
  }
  friend ZPoly operator-(ZPoly x, const ZPoly& y) {
    for (const auto& [m, c] : y.terms_) x.accumulate(m, -c);
    return x;
  }
  friend ZPoly operator*(const ZPoly& x, const ZPoly& y) {
    ZPoly r;
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) {
        Monomial m;
        for (std::size_t k = 0; k < m.size(); ++k) m[k] = static_cast<std::uint16_t>(mx[k] + my[k]);
        r.accumulate(m, cx * cy);
      }
    return r;
  }
  friend ZPoly operator*(const BigInt& s, const ZPoly& x) {
    ZPoly r;
    if (s == 0) return r;
    for (const auto& [m, c] : x.terms_) r.terms_[m] = s * c;
    return r;
  }
  friend bool operator==(const ZPoly&, const ZPoly&) = default;

  ZPoly pow(std::uint64_t k) const {
    ZPoly r(1);
    ZPoly b = *this;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  /// Exact division; throws std::logic_error if any coefficient is not divisible.
  ZPoly divide_exact(const BigInt& d) const {
    ZPoly r;
    for (const auto& [m, c] : terms_) {
      if (c % d != 0) throw std::logic_error("inexact division by " + d.str() + " in Witt recursion");
      r.terms_[m] = c / d;
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str();
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (!m[k]) continue;
        s += std::string("*") + (k < kMaxWittLength ? "a" : "b") + std::to_string(k % kMaxWittLength);
        if (m[k] > 1) s += "^" + std::to_string(m[k]);
      }
    }
    return s;
  }

 private:
  void accumulate(const Monomial& m, const BigInt& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  Terms terms_;
};

/// Ghost component w_n(x) = sum_{i<=n} p^i x_i^{p^{n-i}}.
inline ZPoly ghost_component(std::uint32_t p, std::size_t n, const std::vector<ZPoly>& x) {
  ZPoly w;
  BigInt pi = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    BigInt e = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n - i));
    w = w + pi * x.at(i).pow(static_cast<std::uint64_t>(e));
    pi *= p;
  }
  return w;
}

/// Sum polynomials S_0..S_{m-1} over Z.
inline std::vector<ZPoly> witt_sum_polys(std::uint32_t p, std::size_t m) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (m < 1 || m > kMaxWittLength)
    throw std::invalid_argument("Witt length must be between 1 and 3, got " + std::to_string(m));
  std::vector<ZPoly> a, b, s;
  for (std::size_t i = 0; i < m; ++i) {
    a.push_back(ZPoly::a(i));
    b.push_back(ZPoly::b(i));
  }
  for (std::size_t n = 0; n < m; ++n) {
    ZPoly rhs = ghost_component(p, n, a) + ghost_component(p, n, b);
    BigInt pi = 1;
    for (std::size_t i = 0; i < n; ++i) {
      BigInt e = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n - i));
      rhs = rhs - pi * s[i].pow(static_cast<std::uint64_t>(e));
      pi *= p;
    }
    s.push_back(rhs.divide_exact(pi));
  }
  return s;
}

/// A sum polynomial with coefficients reduced mod p, ready for evaluation.
struct ReducedPoly {
  struct Term {
    ZPoly::Monomial exps;
    std::uint32_t coeff;
  };
  std::vector<Term> terms;
  std::array<std::uint16_t, 2 * kMaxWittLength> max_exp{};
};

namespace detail {

inline std::vector<ReducedPoly> reduce_polys(std::uint32_t p, const std::vector<ZPoly>& polys) {
  std::vector<ReducedPoly> out;
  for (const auto& poly : polys) {
    ReducedPoly r;
    for (const auto& [m, c] : poly.terms()) {
      BigInt cm = c % p;
      if (cm < 0) cm += p;
      if (cm == 0) continue;
      r.terms.push_back({m, static_cast<std::uint32_t>(cm)});
      for (std::size_t k = 0; k < m.size(); ++k) r.max_exp[k] = std::max(r.max_exp[k], m[k]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

/// Sum polynomials reduced mod p; computed once per p and shared.
inline std::shared_ptr<const std::vector<ReducedPoly>> reduced_sum_polys(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const std::vector<ReducedPoly>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
  }
  auto polys = std::make_shared<const std::vector<ReducedPoly>>(
      detail::reduce_polys(p, witt_sum_polys(p, kMaxWittLength)));
  std::lock_guard lock(mu);
  return cache.emplace(p, polys).first->second;
}

class WittVector {
 public:
  WittVector(const Field& f, std::vector<FieldScalar> entries) : field_(f), entries_(std::move(entries)) {
    if (entries_.empty() || entries_.size() > kMaxWittLength)
      throw std::invalid_argument("Witt length must be between 1 and 3");
    for (const auto& e : entries_)
      if (!(e.field() == field_)) throw std::invalid_argument("Witt entry from another field");
  }

  static WittVector zero(const Field& f, std::size_t m) {
    return {f, std::vector<FieldScalar>(m, FieldScalar::zero(f))};
  }
  static WittVector unit(const Field& f, std::size_t m) {
    auto w = zero(f, m);
    w.entries_[0] = FieldScalar::one(f);
    return w;
  }
  static WittVector from_ints(const Field& f, const std::vector<std::int64_t>& v) {
    std::vector<FieldScalar> e;
    for (auto x : v) e.emplace_back(f, x);
    return {f, std::move(e)};
  }

  const Field& field() const { return field_; }
  std::size_t length() const { return entries_.size(); }
  const std::vector<FieldScalar>& entries() const { return entries_; }
  const FieldScalar& operator[](std::size_t i) const { return entries_.at(i); }
  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const WittVector&, const WittVector&) = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) s += (i ? "," : "") + entries_[i].to_string();
    return s;
  }

 private:
  Field field_;
  std::vector<FieldScalar> entries_;
};

namespace detail {

inline void check_compatible(const WittVector& u, const WittVector& v) {
  if (!(u.field() == v.field()) || u.length() != v.length())
    throw std::invalid_argument("Witt vectors differ in field or length");
}

/// Evaluates S_n at (a, b); b entries beyond `b_known` are treated as zero.
inline FieldScalar eval_sum_poly(const ReducedPoly& poly, const WittVector& a, const std::vector<FieldScalar>& b) {
  const Field& f = a.field();
  std::array<std::vector<Coords>, 2 * kMaxWittLength> powers;
  for (std::size_t k = 0; k < powers.size(); ++k) {
    if (!poly.max_exp[k]) continue;
    std::size_t idx = k % kMaxWittLength;
    bool is_a = k < kMaxWittLength;
    Coords x{};
    if (is_a && idx < a.length()) x = a[idx].coords();
    if (!is_a && idx < b.size()) x = b[idx].coords();
    powers[k].resize(poly.max_exp[k] + 1);
    powers[k][0] = {1, 0};
    for (std::size_t e = 1; e <= poly.max_exp[k]; ++e) powers[k][e] = f.mul(powers[k][e - 1], x);
  }
  Coords acc{};
  for (const auto& t : poly.terms) {
    Coords term = f.embed(t.coeff);
    for (std::size_t k = 0; k < t.exps.size() && !Field::is_zero(term); ++k)
      if (t.exps[k]) term = f.mul(term, powers[k][t.exps[k]]);
    acc = f.add(acc, term);
  }
  return {f, acc};
}

}  // namespace detail

inline WittVector witt_add(const WittVector& u, const WittVector& v) {
  detail::check_compatible(u, v);
  auto polys = reduced_sum_polys(u.field().p());
  std::vector<FieldScalar> out;
  for (std::size_t n = 0; n < u.length(); ++n) out.push_back(detail::eval_sum_poly((*polys)[n], u, v.entries()));
  return {u.field(), std::move(out)};
}

/// Additive inverse: S_n(a, b) = b_n + (terms in a_0..a_n, b_0..b_{n-1}), solved coordinate by coordinate.
inline WittVector witt_neg(const WittVector& w) {
  auto polys = reduced_sum_polys(w.field().p());
  std::vector<FieldScalar> b;
  for (std::size_t n = 0; n < w.length(); ++n) {
    std::vector<FieldScalar> trial = b;
    trial.push_back(FieldScalar::zero(w.field()));
    b.push_back(-detail::eval_sum_poly((*polys)[n], w, trial));
  }
  return {w.field(), std::move(b)};
}

/// The p-th multiple: (a_0, ..., a_{m-1}) -> (0, a_0^p, ..., a_{m-2}^p).
inline WittVector witt_pow_p(const WittVector& w) {
  std::vector<FieldScalar> out{FieldScalar::zero(w.field())};
  for (std::size_t i = 0; i + 1 < w.length(); ++i) out.push_back(w[i].pow(w.field().p()));
  return {w.field(), std::move(out)};
}

/// Order of w in W_m; always a power of p.
inline std::uint64_t witt_order(const WittVector& w) {
  std::uint64_t order = 1;
  WittVector x = w;
  while (!x.is_zero()) {
    x = witt_pow_p(x);
    order *= w.field().p();
  }
  return order;
}

/// k-fold sum of w (k >= 0) by double-and-add.
inline WittVector witt_multiple(const WittVector& w, std::uint64_t k) {
  WittVector r = WittVector::zero(w.field(), w.length());
  WittVector b = w;
  while (k) {
    if (k & 1) r = witt_add(r, b);
    k >>= 1;
    if (k) b = witt_add(b, b);
  }
  return r;
}

/// n * (1, 0, ..., 0) in W_m(F_p); realizes Z/p^m -> W_m(F_p).
inline WittVector witt_from_integer(const Field& f, std::size_t m, std::int64_t n) {
  if (f.degree() != 1) throw std::invalid_argument("witt_from_integer needs the prime field");
  if (m < 1 || m > kMaxWittLength) throw std::invalid_argument("Witt length must be between 1 and 3");
  std::int64_t modulus = 1;
  for (std::size_t i = 0; i < m; ++i) modulus *= f.p();
  std::int64_t r = n % modulus;
  if (r < 0) r += modulus;
  return witt_multiple(WittVector::unit(f, m), static_cast<std::uint64_t>(r));
}

/// Every vector of W_m(F_{p^e}), in lexicographic order of entries.
inline std::vector<WittVector> enumerate_witt(const Field& f, std::size_t m) {
  std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= q;
  std::vector<WittVector> all;
  all.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<FieldScalar> e(m);
    std::uint64_t rest = idx;
    for (std::size_t i = m; i-- > 0;) {
      std::uint64_t d = rest % q;
      rest /= q;
      e[i] = FieldScalar(f, Coords{static_cast<std::uint32_t>(d % f.p()), static_cast<std::uint32_t>(d / f.p())});
    }
    all.emplace_back(f, std::move(e));
  }
  return all;
}

}  // namespace springer

#endif  // SPRINGER_WITT_HPP

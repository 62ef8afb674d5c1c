#ifndef SPRINGER_SPRINGER_HPP
#define SPRINGER_SPRINGER_HPP

// Explicit maps between nilpotent and unipotent matrices:
//   truncated_exp / truncated_log   sum_{i<p} X^i / i!  and its inverse
//   phi_seq                         1 + sum a_i Y^i
//   ah_exp / ah_log                 e_p(X) and its compositional inverse
//   witt_embed                      W_m -> GL_n, (a_i) -> prod_i e_p(a_i X^{p^i})
//   bch / bch_dynkin                log(exp X exp Y), two independent ways

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "springer/field.hpp"
#include "springer/groups.hpp"
#include "springer/matrix.hpp"
#include "springer/series.hpp"
#include "springer/witt.hpp"

namespace springer {

namespace detail {

inline FieldScalar prime_constant(const Field& f, std::uint32_t v) { return {f, Coords{v, 0}}; }

/// sum_i coeffs[i] * x^i by Horner's rule.
inline FpMatrix eval_poly(const std::vector<FieldScalar>& coeffs, const FpMatrix& x) {
  FpMatrix acc(x.field(), x.size());
  FpMatrix id = FpMatrix::identity(x.field(), x.size());
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i] * id;
  return acc;
}

inline void require_p_nilpotent(const FpMatrix& x, const char* what) {
  if (!x.pow(x.field().p()).is_zero())
    throw std::domain_error(std::string(what) + ": matrix is not killed by its p-th power");
}

}  // namespace detail

/// sum_{i<p} X^i / i!; requires X^p = 0.
inline FpMatrix truncated_exp(const FpMatrix& x) {
  detail::require_p_nilpotent(x, "truncated_exp");
  const Field& f = x.field();
  std::vector<FieldScalar> c;
  FieldScalar fact = FieldScalar::one(f);
  for (std::uint32_t i = 0; i < f.p(); ++i) {
    if (i) fact *= FieldScalar(f, static_cast<std::int64_t>(i));
    c.push_back(fact.inverse());
  }
  return detail::eval_poly(c, x);
}

/// sum_{1<=i<p} (-1)^{i+1} (u-I)^i / i; requires (u-I)^p = 0.
inline FpMatrix truncated_log(const FpMatrix& u) {
  const Field& f = u.field();
  FpMatrix n = u - FpMatrix::identity(f, u.size());
  detail::require_p_nilpotent(n, "truncated_log");
  std::vector<FieldScalar> c{FieldScalar::zero(f)};
  for (std::uint32_t i = 1; i < f.p(); ++i) {
    FieldScalar inv = FieldScalar(f, static_cast<std::int64_t>(i)).inverse();
    c.push_back(i % 2 ? inv : -inv);
  }
  return detail::eval_poly(c, n);
}

/// Coefficients a_1, a_2, ... of phi_a(Y) = 1 + sum a_i Y^i.
struct CoefficientSequence {
  Field field;
  std::vector<FieldScalar> a;

  /// a_i = c_i, the Artin-Hasse coefficients, for i = 1..len.
  static CoefficientSequence artin_hasse(const Field& f, std::size_t len) {
    auto e = ah_coeffs_mod_p(f.p(), len);
    CoefficientSequence s{f, {}};
    for (std::size_t i = 1; i <= len; ++i) s.a.push_back(detail::prime_constant(f, e.values()[i]));
    return s;
  }
};

inline FpMatrix phi_seq(const CoefficientSequence& seq, const FpMatrix& y) {
  if (seq.a.empty() || seq.a.front().is_zero())
    throw std::invalid_argument("phi_seq needs a nonzero linear coefficient a_1");
  for (const auto& c : seq.a)
    if (!(c.field() == y.field())) throw std::invalid_argument("coefficient from another field");
  if (!nilpotency_degree(y)) throw std::domain_error("phi_seq: matrix is not nilpotent");
  std::vector<FieldScalar> c{FieldScalar::one(y.field())};
  c.insert(c.end(), seq.a.begin(), seq.a.end());
  return detail::eval_poly(c, y);
}

/// e_p(X) = sum_i c_i X^i, truncated where X^i vanishes.
inline FpMatrix ah_exp(const FpMatrix& x) {
  auto d = nilpotency_degree(x);
  if (!d) throw std::domain_error("ah_exp: matrix is not nilpotent");
  if (*d == 0) return x;
  const Field& f = x.field();
  auto e = ah_coeffs_mod_p(f.p(), *d - 1);
  std::vector<FieldScalar> c;
  for (auto v : e.values()) c.push_back(detail::prime_constant(f, v));
  return detail::eval_poly(c, x);
}

/// Inverse of ah_exp on unipotent matrices: l(u - I) with l the reversion of e_p(t) - 1.
inline FpMatrix ah_log(const FpMatrix& u) {
  const Field& f = u.field();
  FpMatrix n = u - FpMatrix::identity(f, u.size());
  auto d = nilpotency_degree(n);
  if (!d) throw std::domain_error("ah_log: matrix is not unipotent");
  if (*d <= 1) return n;
  auto l = ah_log_series(f.p(), *d - 1);
  std::vector<FieldScalar> c;
  for (auto v : l.values()) c.push_back(detail::prime_constant(f, v));
  return detail::eval_poly(c, n);
}

/// Least k with u^{p^k} = I; u must be unipotent.
inline unsigned unipotent_order_exponent(const FpMatrix& u) {
  const Field& f = u.field();
  if (!nilpotency_degree(u - FpMatrix::identity(f, u.size())))
    throw std::domain_error("matrix is not unipotent");
  unsigned k = 0;
  FpMatrix x = u;
  while (!x.is_identity()) {
    x = x.pow(f.p());
    ++k;
  }
  return k;
}

/// Multiplicative order of a unipotent matrix (a power of p).
inline std::uint64_t unipotent_order(const FpMatrix& u) {
  std::uint64_t order = 1;
  for (unsigned k = unipotent_order_exponent(u); k; --k) order *= u.field().p();
  return order;
}

/// (a_0, ..., a_{m-1}) -> e_p(a_0 X) e_p(a_1 X^p) ... e_p(a_{m-1} X^{p^{m-1}}),
/// where m must be the nilpotent order of X.
inline FpMatrix witt_embed(const FpMatrix& x, const WittVector& w) {
  if (!(x.field() == w.field())) throw std::invalid_argument("Witt vector and matrix over different fields");
  unsigned m = nilpotent_order(x);
  if (m != w.length())
    throw std::domain_error("Witt length " + std::to_string(w.length()) + " differs from nilpotent order " +
                            std::to_string(m));
  FpMatrix result = FpMatrix::identity(x.field(), x.size());
  FpMatrix xp = x;
  for (std::size_t i = 0; i < w.length(); ++i) {
    result = result * ah_exp(w[i] * xp);
    xp = xp.pow(x.field().p());
  }
  return result;
}

/// log(exp X exp Y) with the degree-<p exponential and logarithm.
inline FpMatrix bch(const FpMatrix& x, const FpMatrix& y) {
  FpMatrix u = truncated_exp(x) * truncated_exp(y);
  return truncated_log(u);
}

namespace detail {

/// Right-normed bracket [w_1, [w_2, ... [w_{n-1}, w_n]]].
inline FpMatrix nested_bracket(const std::vector<const FpMatrix*>& word) {
  FpMatrix v = *word.back();
  for (std::size_t i = word.size() - 1; i-- > 0;) v = commutator(*word[i], v);
  return v;
}

}  // namespace detail

/// Dynkin's form of the BCH series through total degree maxdeg < p:
///   sum_k (-1)^{k-1}/k  sum  [X^{r_1} Y^{s_1} ... X^{r_k} Y^{s_k}] / (n * prod r_i! s_i!)
/// over (r_i, s_i) != (0, 0), n = sum (r_i + s_i).
inline FpMatrix bch_dynkin(const FpMatrix& x, const FpMatrix& y, std::size_t maxdeg) {
  const Field& f = x.field();
  if (maxdeg >= f.p())
    throw std::invalid_argument("bch_dynkin: degree " + std::to_string(maxdeg) + " would divide by p");
  if (maxdeg == 0) throw std::invalid_argument("bch_dynkin: degree must be positive");
  detail::require_p_nilpotent(x, "bch_dynkin");
  detail::require_p_nilpotent(y, "bch_dynkin");
  detail::require_p_nilpotent(truncated_exp(x) * truncated_exp(y) - FpMatrix::identity(f, x.size()),
                              "bch_dynkin");

  std::vector<Rational> factorial{1};
  for (std::size_t i = 1; i <= maxdeg; ++i) factorial.push_back(factorial.back() * i);

  FpMatrix sum(f, x.size());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  // Depth-first over sequences of (r, s) pairs with total degree <= maxdeg.
  std::function<void(std::size_t)> extend = [&](std::size_t used) {
    if (!pairs.empty()) {
      std::size_t k = pairs.size();
      Rational coeff = Rational(k % 2 ? 1 : -1, static_cast<long>(k)) / Rational(static_cast<long>(used));
      std::vector<const FpMatrix*> word;
      for (auto [r, s] : pairs) {
        coeff /= factorial[r] * factorial[s];
        for (std::size_t i = 0; i < r; ++i) word.push_back(&x);
        for (std::size_t i = 0; i < s; ++i) word.push_back(&y);
      }
      FpMatrix term = detail::nested_bracket(word);
      if (!term.is_zero()) sum += detail::prime_constant(f, detail::reduce_rational(coeff, f.p())) * term;
    }
    for (std::size_t r = 0; used + r <= maxdeg; ++r)
      for (std::size_t s = 0; used + r + s <= maxdeg; ++s) {
        if (r + s == 0) continue;
        pairs.emplace_back(r, s);
        extend(used + r + s);
        pairs.pop_back();
      }
  };
  extend(0);
  return sum;
}

}  // namespace springer

#endif  // SPRINGER_SPRINGER_HPP

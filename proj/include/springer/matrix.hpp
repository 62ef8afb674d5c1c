#ifndef SPRINGER_MATRIX_HPP
#define SPRINGER_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "springer/field.hpp"

namespace springer {

using Vec = std::vector<Coords>;

namespace linalg {

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(const Field& f, std::vector<Vec>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && Field::is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Coords inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || Field::is_zero(rows[i][c])) continue;
      Coords factor = rows[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline std::size_t rank(const Field& f, std::vector<Vec> rows, std::size_t ncols) {
  return rref(f, rows, ncols).size();
}

/// Basis of {x : A x = 0} where A is given by its rows.
inline std::vector<Vec> nullspace(const Field& f, std::vector<Vec> rows, std::size_t ncols) {
  auto pivots = rref(f, rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols);
    v[free] = {1, 0};
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(rows[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// True when span(a) == span(b).
inline bool same_span(const Field& f, const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t ncols) {
  std::size_t ra = rank(f, a, ncols);
  std::size_t rb = rank(f, b, ncols);
  if (ra != rb) return false;
  std::vector<Vec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(f, std::move(both), ncols) == ra;
}

}  // namespace linalg

/// Dense square matrix over F_{p^e}.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(const Field& f, std::size_t n) : field_(f), n_(n), a_(n * n) {}

  static FpMatrix identity(const Field& f, std::size_t n) {
    FpMatrix m(f, n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = {1, 0};
    return m;
  }

  static FpMatrix from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
    FpMatrix m(f, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix rows must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m.a_[i * m.n_ + j] = f.embed(rows[i][j]);
    }
    return m;
  }

  /// Matrix unit E_{ij} (0-based).
  static FpMatrix unit(const Field& f, std::size_t n, std::size_t i, std::size_t j) {
    FpMatrix m(f, n);
    m.a_.at(i * n + j) = {1, 0};
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t size() const { return n_; }

  Coords raw(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set_raw(std::size_t i, std::size_t j, Coords c) { a_[i * n_ + j] = c; }
  FieldScalar operator()(std::size_t i, std::size_t j) const { return {field_, a_.at(i * n_ + j)}; }
  void set(std::size_t i, std::size_t j, const FieldScalar& v) {
    if (!(v.field() == field_)) throw std::invalid_argument("entry from another field");
    a_.at(i * n_ + j) = v.coords();
  }

  /// Row-major coordinates, n^2 long.
  const Vec& data() const { return a_; }
  static FpMatrix from_data(const Field& f, std::size_t n, Vec data) {
    if (data.size() != n * n) throw std::invalid_argument("matrix data has wrong length");
    FpMatrix m(f, n);
    m.a_ = std::move(data);
    return m;
  }

  bool is_zero() const {
    for (auto c : a_)
      if (!Field::is_zero(c)) return false;
    return true;
  }
  bool is_identity() const { return *this == identity(field_, n_); }

  FpMatrix operator+(const FpMatrix& o) const {
    check(o);
    FpMatrix r(field_, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.add(a_[k], o.a_[k]);
    return r;
  }
  FpMatrix operator-(const FpMatrix& o) const {
    check(o);
    FpMatrix r(field_, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.sub(a_[k], o.a_[k]);
    return r;
  }
  FpMatrix operator-() const {
    FpMatrix r(field_, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.neg(a_[k]);
    return r;
  }
  FpMatrix operator*(const FpMatrix& o) const {
    check(o);
    FpMatrix r(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        Coords x = a_[i * n_ + k];
        if (Field::is_zero(x)) continue;
        for (std::size_t j = 0; j < n_; ++j)
          r.a_[i * n_ + j] = field_.add(r.a_[i * n_ + j], field_.mul(x, o.a_[k * n_ + j]));
      }
    return r;
  }
  friend FpMatrix operator*(const FieldScalar& s, const FpMatrix& m) {
    if (!(s.field() == m.field_)) throw std::invalid_argument("scalar from another field");
    FpMatrix r(m.field_, m.n_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = m.field_.mul(s.coords(), m.a_[k]);
    return r;
  }
  FpMatrix& operator+=(const FpMatrix& o) { return *this = *this + o; }
  FpMatrix& operator*=(const FpMatrix& o) { return *this = *this * o; }

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.a_ == b.a_;
  }

  FpMatrix pow(std::uint64_t k) const {
    FpMatrix r = identity(field_, n_);
    FpMatrix b = *this;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
      if (b.is_zero()) return k ? FpMatrix(field_, n_) : r;
    }
    return r;
  }

  FpMatrix transpose() const {
    FpMatrix r(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r.a_[j * n_ + i] = a_[i * n_ + j];
    return r;
  }

  FieldScalar trace() const {
    Coords t{};
    for (std::size_t i = 0; i < n_; ++i) t = field_.add(t, a_[i * n_ + i]);
    return {field_, t};
  }

  /// Applies x -> x^p to every entry.
  FpMatrix frobenius() const {
    FpMatrix r(field_, n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.frobenius(a_[k]);
    return r;
  }

  std::size_t rank() const { return linalg::rank(field_, rows(), n_); }

  FieldScalar det() const {
    auto m = rows();
    Coords d{1, 0};
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t piv = c;
      while (piv < n_ && Field::is_zero(m[piv][c])) ++piv;
      if (piv == n_) return FieldScalar::zero(field_);
      if (piv != c) {
        std::swap(m[piv], m[c]);
        d = field_.neg(d);
      }
      d = field_.mul(d, m[c][c]);
      Coords inv = field_.inv(m[c][c]);
      for (std::size_t i = c + 1; i < n_; ++i) {
        if (Field::is_zero(m[i][c])) continue;
        Coords factor = field_.mul(m[i][c], inv);
        for (std::size_t k = c; k < n_; ++k) m[i][k] = field_.sub(m[i][k], field_.mul(factor, m[c][k]));
      }
    }
    return {field_, d};
  }

  std::optional<FpMatrix> inverse() const {
    std::vector<Vec> aug(n_, Vec(2 * n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) aug[i][j] = a_[i * n_ + j];
      aug[i][n_ + i] = {1, 0};
    }
    auto pivots = linalg::rref(field_, aug, 2 * n_);
    if (pivots.size() < n_ || (n_ > 0 && pivots[n_ - 1] != n_ - 1)) return std::nullopt;
    FpMatrix r(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r.a_[i * n_ + j] = aug[i][n_ + j];
    return r;
  }

  std::vector<Vec> rows() const {
    std::vector<Vec> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
    return out;
  }

 private:
  void check(const FpMatrix& o) const {
    if (!(field_ == o.field_) || n_ != o.n_)
      throw std::invalid_argument("matrix shape or field mismatch");
  }

  Field field_;
  std::size_t n_ = 0;
  Vec a_;
};

inline FpMatrix commutator(const FpMatrix& a, const FpMatrix& b) { return a * b - b * a; }

/// Least d with X^d = 0, or nullopt if X is not nilpotent.
inline std::optional<std::size_t> nilpotency_degree(const FpMatrix& x) {
  FpMatrix pw = FpMatrix::identity(x.field(), x.size());
  for (std::size_t d = 0; d <= x.size(); ++d) {
    if (pw.is_zero()) return d;
    pw = pw * x;
  }
  return std::nullopt;
}

}  // namespace springer

#endif  // SPRINGER_MATRIX_HPP

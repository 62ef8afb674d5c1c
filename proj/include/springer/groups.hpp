#ifndef SPRINGER_GROUPS_HPP
#define SPRINGER_GROUPS_HPP

// Classical groups GL_n, SL_n, SO_n, Sp_n inside GL_n, their Lie algebras,
// nilpotent Jordan types and linear commutants.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "springer/field.hpp"
#include "springer/matrix.hpp"

namespace springer {

class JordanType {
 public:
  JordanType() = default;
  explicit JordanType(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("Jordan type needs at least one block");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw std::invalid_argument("Jordan block sizes must be positive");
      if (i && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Jordan block sizes must be weakly decreasing");
    }
  }

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t dimension() const { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

  /// Dual partition: entry k is the number of blocks of size > k.
  std::vector<std::size_t> transpose() const {
    std::vector<std::size_t> t(parts_.empty() ? 0 : parts_.front(), 0);
    for (auto b : parts_)
      for (std::size_t k = 0; k < b; ++k) ++t[k];
    return t;
  }

  friend bool operator==(const JordanType&, const JordanType&) = default;

  std::string to_string() const {
    std::string s;
    for (auto b : parts_) s += (s.empty() ? "" : ",") + std::to_string(b);
    return s;
  }

 private:
  std::vector<std::size_t> parts_;
};

/// Block-diagonal sum of nilpotent Jordan blocks, ones on the superdiagonal.
inline FpMatrix jordan_nilpotent(const JordanType& t, const Field& f) {
  if (t.parts().empty()) throw std::invalid_argument("empty partition");
  FpMatrix m(f, t.dimension());
  std::size_t off = 0;
  for (auto b : t.parts()) {
    for (std::size_t i = 0; i + 1 < b; ++i) m.set_raw(off + i, off + i + 1, {1, 0});
    off += b;
  }
  return m;
}

/// Least m with X^{p^m} = 0.  Throws std::domain_error if X is not nilpotent.
inline unsigned nilpotent_order(const FpMatrix& x) {
  auto d = nilpotency_degree(x);
  if (!d) throw std::domain_error("matrix is not nilpotent");
  unsigned m = 0;
  for (std::uint64_t pm = 1; pm < *d; pm *= x.field().p()) ++m;
  return m;
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
inline JordanType jordan_type_of(const FpMatrix& x) {
  auto d = nilpotency_degree(x);
  if (!d) throw std::domain_error("matrix is not nilpotent");
  std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  std::vector<std::size_t> ranks{n};
  FpMatrix pw = x;
  while (ranks.back() > 0) {
    ranks.push_back(pw.rank());
    pw = pw * x;
  }
  // blocks of size >= k: ranks[k-1] - ranks[k]
  std::vector<std::size_t> parts;
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    std::size_t at_least_k = ranks[k - 1] - ranks[k];
    std::size_t at_least_k1 = k < ranks.size() - 1 ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = 0; c < at_least_k - at_least_k1; ++c) parts.push_back(k);
  }
  return JordanType(parts);
}

enum class GroupKind { GL, SL, SO, Sp };

inline std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::GL: return "GL";
    case GroupKind::SL: return "SL";
    case GroupKind::SO: return "SO";
    case GroupKind::Sp: return "Sp";
  }
  return "?";
}

inline GroupKind parse_group_kind(const std::string& s) {
  if (s == "GL") return GroupKind::GL;
  if (s == "SL") return GroupKind::SL;
  if (s == "SO") return GroupKind::SO;
  if (s == "Sp") return GroupKind::Sp;
  throw std::invalid_argument("unknown group kind '" + s + "' (expected GL, SL, SO or Sp)");
}

/// Antidiagonal form; for Sp the lower half of the antidiagonal is -1.
inline FpMatrix default_form(GroupKind kind, const Field& f, std::size_t n) {
  FpMatrix j(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    bool negate = kind == GroupKind::Sp && i >= n / 2;
    j.set_raw(i, n - 1 - i, negate ? f.embed(-1) : f.embed(1));
  }
  return j;
}

class GroupSpec {
 public:
  GroupSpec(GroupKind kind, const Field& f, std::size_t n, std::optional<FpMatrix> form)
      : kind_(kind), field_(f), n_(n), form_(std::move(form)) {
    if (n == 0) throw std::invalid_argument("group dimension must be positive");
    bool needs_form = kind == GroupKind::SO || kind == GroupKind::Sp;
    if (!needs_form) {
      if (form_) throw std::invalid_argument(to_string(kind) + " carries no bilinear form");
      return;
    }
    if (!form_) throw std::invalid_argument(to_string(kind) + " requires a bilinear form");
    if (f.p() == 2) throw std::invalid_argument(to_string(kind) + " requires p >= 3");
    if (form_->size() != n || !(form_->field() == f))
      throw std::invalid_argument("form has wrong size or field");
    if (form_->det().is_zero()) throw std::invalid_argument("form must be invertible");
    FpMatrix jt = form_->transpose();
    if (kind == GroupKind::SO && !(jt == *form_)) throw std::invalid_argument("SO form must be symmetric");
    if (kind == GroupKind::Sp) {
      if (n % 2) throw std::invalid_argument("Sp requires even dimension");
      if (!(jt == -*form_)) throw std::invalid_argument("Sp form must be skew-symmetric");
    }
  }

  /// The group with its default antidiagonal form.
  static GroupSpec standard(GroupKind kind, const Field& f, std::size_t n) {
    std::optional<FpMatrix> form;
    if (kind == GroupKind::SO || kind == GroupKind::Sp) form = default_form(kind, f, n);
    return {kind, f, n, std::move(form)};
  }

  GroupKind kind() const { return kind_; }
  const Field& field() const { return field_; }
  std::size_t dimension() const { return n_; }
  const std::optional<FpMatrix>& form() const { return form_; }
  bool uses_default_form() const { return !form_ || *form_ == default_form(kind_, field_, n_); }

  std::string name() const { return to_string(kind_) + "_" + std::to_string(n_) + "(F_" + field_.name() + ")"; }

 private:
  GroupKind kind_;
  Field field_;
  std::size_t n_;
  std::optional<FpMatrix> form_;
};

namespace detail {
inline void check_dims(const GroupSpec& g, const FpMatrix& m) {
  if (m.size() != g.dimension() || !(m.field() == g.field()))
    throw std::invalid_argument("matrix does not match " + g.name());
}
}  // namespace detail

inline bool in_group(const GroupSpec& g, const FpMatrix& m) {
  detail::check_dims(g, m);
  switch (g.kind()) {
    case GroupKind::GL: return !m.det().is_zero();
    case GroupKind::SL: return m.det().is_one();
    case GroupKind::SO: {
      const FpMatrix& j = *g.form();
      return m.transpose() * j * m == j && m.det().is_one();
    }
    case GroupKind::Sp: {
      const FpMatrix& j = *g.form();
      return m.transpose() * j * m == j;
    }
  }
  return false;
}

inline bool in_lie_algebra(const GroupSpec& g, const FpMatrix& x) {
  detail::check_dims(g, x);
  switch (g.kind()) {
    case GroupKind::GL: return true;
    case GroupKind::SL: return x.trace().is_zero();
    case GroupKind::SO:
    case GroupKind::Sp: {
      const FpMatrix& j = *g.form();
      return (x.transpose() * j + j * x).is_zero();
    }
  }
  return false;
}

/// Linear conditions cutting Lie(G) out of gl_n, as rows over the n^2 row-major coordinates.
inline std::vector<Vec> lie_algebra_equations(const GroupSpec& g) {
  const Field& f = g.field();
  std::size_t n = g.dimension();
  std::vector<Vec> eqs;
  if (g.kind() == GroupKind::SL) {
    Vec row(n * n);
    for (std::size_t i = 0; i < n; ++i) row[i * n + i] = {1, 0};
    eqs.push_back(row);
  } else if (g.kind() == GroupKind::SO || g.kind() == GroupKind::Sp) {
    const FpMatrix& j = *g.form();
    // (X^T J + J X)_{ab} = sum_k X_{ka} J_{kb} + sum_k J_{ak} X_{kb}
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vec row(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          row[k * n + a] = f.add(row[k * n + a], j.raw(k, b));
          row[k * n + b] = f.add(row[k * n + b], j.raw(a, k));
        }
        eqs.push_back(std::move(row));
      }
  }
  return eqs;
}

/// Basis of Lie(G) intersected with strictly upper (or strictly lower) triangular matrices.
inline std::vector<FpMatrix> triangular_lie_basis(const GroupSpec& g, bool upper) {
  const Field& f = g.field();
  std::size_t n = g.dimension();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (upper ? i < j : i > j) vars.push_back(i * n + j);
  std::vector<Vec> restricted;
  for (const auto& eq : lie_algebra_equations(g)) {
    Vec row(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) row[v] = eq[vars[v]];
    restricted.push_back(std::move(row));
  }
  std::vector<FpMatrix> basis;
  for (const auto& sol : linalg::nullspace(f, restricted, vars.size())) {
    Vec data(n * n);
    for (std::size_t v = 0; v < vars.size(); ++v) data[vars[v]] = sol[v];
    basis.push_back(FpMatrix::from_data(f, n, std::move(data)));
  }
  return basis;
}

struct CentralizerSpace {
  std::size_t dimension = 0;
  std::vector<FpMatrix> basis;
};

/// Rows of the linear map Z -> ZA - AZ on row-major coordinates of Z.
inline std::vector<Vec> commutator_map(const FpMatrix& a) {
  const Field& f = a.field();
  std::size_t n = a.size();
  std::vector<Vec> rows;
  rows.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec row(n * n);
      for (std::size_t k = 0; k < n; ++k) {
        row[i * n + k] = f.add(row[i * n + k], a.raw(k, j));
        row[k * n + j] = f.sub(row[k * n + j], a.raw(i, k));
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

/// The linear commutant {Z : ZA = AZ} inside gl_n.
inline CentralizerSpace centralizer_space(const FpMatrix& a) {
  std::size_t n = a.size();
  CentralizerSpace c;
  for (auto& v : linalg::nullspace(a.field(), commutator_map(a), n * n))
    c.basis.push_back(FpMatrix::from_data(a.field(), n, std::move(v)));
  c.dimension = c.basis.size();
  return c;
}

inline bool same_subspace(const std::vector<FpMatrix>& a, const std::vector<FpMatrix>& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  std::vector<Vec> va, vb;
  for (const auto& m : a) va.push_back(m.data());
  for (const auto& m : b) vb.push_back(m.data());
  return linalg::same_span(a.front().field(), va, vb, a.front().data().size());
}

}  // namespace springer

#endif  // SPRINGER_GROUPS_HPP

#ifndef SPRINGER_PARABOLIC_HPP
#define SPRINGER_PARABOLIC_HPP

// Standard parabolic subgroups of GL_n given by a composition of n.  The
// unipotent radical U_P consists of the block upper unitriangular matrices
// and its Lie algebra u_P of the strictly block upper triangular ones.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "springer/matrix.hpp"
#include "springer/random.hpp"
#include "springer/springer.hpp"

namespace springer {

class Composition {
 public:
  explicit Composition(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("composition needs at least one block");
    for (auto b : blocks_)
      if (b == 0) throw std::invalid_argument("composition blocks must be positive");
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      for (std::size_t i = 0; i < blocks_[k]; ++i) block_of_.push_back(k);
  }

  const std::vector<std::size_t>& blocks() const { return blocks_; }
  std::size_t dimension() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_of(std::size_t row) const { return block_of_.at(row); }

  std::string to_string() const {
    std::string s;
    for (auto b : blocks_) s += (s.empty() ? "" : ",") + std::to_string(b);
    return s;
  }

  friend bool operator==(const Composition& a, const Composition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<std::size_t> blocks_;
  std::vector<std::size_t> block_of_;
};

/// All compositions of n, in lexicographic order.
inline std::vector<Composition> compositions(std::size_t n) {
  std::vector<Composition> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t rest) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t b = 1; b <= rest; ++b) {
      cur.push_back(b);
      self(self, rest - b);
      cur.pop_back();
    }
  };
  if (n) rec(rec, n);
  return out;
}

struct ParabolicGL {
  Composition comp;
  Field field;

  std::size_t dimension() const { return comp.dimension(); }
};

/// Matrix units E_ij with row i in an earlier block than column j.
inline std::vector<FpMatrix> nilradical_basis(const ParabolicGL& p) {
  std::size_t n = p.dimension();
  std::vector<FpMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.comp.block_of(i) < p.comp.block_of(j)) basis.push_back(FpMatrix::unit(p.field, n, i, j));
  return basis;
}

inline bool in_nilradical(const ParabolicGL& p, const FpMatrix& x) {
  if (x.size() != p.dimension() || !(x.field() == p.field)) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (p.comp.block_of(i) >= p.comp.block_of(j) && !Field::is_zero(x.raw(i, j))) return false;
  return true;
}

/// Length of the descending central series u, [u,u], [u,[u,u]], ... before it reaches 0.
inline std::size_t nilpotence_class(const ParabolicGL& p) {
  const Field& f = p.field;
  std::size_t n = p.dimension();
  auto u = nilradical_basis(p);
  std::vector<Vec> term;
  for (const auto& b : u) term.push_back(b.data());
  std::size_t cls = 0;
  while (true) {
    linalg::rref(f, term, n * n);
    if (term.empty()) return cls;
    ++cls;
    std::vector<Vec> next;
    for (const auto& b : u)
      for (const auto& c : term) {
        auto br = commutator(b, FpMatrix::from_data(f, n, c));
        if (!br.is_zero()) next.push_back(br.data());
      }
    term = std::move(next);
  }
}

inline bool is_restricted(const ParabolicGL& p) { return nilpotence_class(p) < p.field.p(); }

/// The canonical exponential u_P -> U_P of a restricted parabolic: the degree-<p exponential.
inline FpMatrix eps_P(const ParabolicGL& p, const FpMatrix& x) {
  if (!is_restricted(p))
    throw std::domain_error("parabolic (" + p.comp.to_string() + ") is not restricted for p=" +
                            std::to_string(p.field.p()));
  if (!in_nilradical(p, x)) throw std::domain_error("matrix is not in the nilradical of (" + p.comp.to_string() + ")");
  return truncated_exp(x);
}

inline FpMatrix random_nilradical_element(const ParabolicGL& p, Rng& rng) {
  FpMatrix x(p.field, p.dimension());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (p.comp.block_of(i) < p.comp.block_of(j)) x.set(i, j, rng.scalar(p.field));
  return x;
}

/// Invertible block upper triangular matrix.
inline FpMatrix random_p_element(const ParabolicGL& p, Rng& rng) {
  std::size_t n = p.dimension();
  FpMatrix g(p.field, n);
  std::size_t off = 0;
  for (auto b : p.comp.blocks()) {
    FpMatrix block(p.field, b);
    do {
      for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) block.set(i, j, rng.scalar(p.field));
    } while (block.det().is_zero());
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) g.set_raw(off + i, off + j, block.raw(i, j));
    off += b;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.comp.block_of(i) < p.comp.block_of(j)) g.set(i, j, rng.scalar(p.field));
  return g;
}

inline FpMatrix random_p_element(const ParabolicGL& p, std::uint64_t seed) {
  Rng rng(seed);
  return random_p_element(p, rng);
}

}  // namespace springer

#endif  // SPRINGER_PARABOLIC_HPP

#ifndef SPRINGER_SAMPLING_HPP
#define SPRINGER_SAMPLING_HPP

// Seeded sampling of nilpotent Lie algebra elements and group elements for
// the classical groups with their default antidiagonal forms.  With those
// forms the strictly upper (lower) triangular part of Lie(G) is the Lie
// algebra of a maximal unipotent subgroup, so nilpotents are drawn there
// and then moved around by conjugation.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "springer/groups.hpp"
#include "springer/matrix.hpp"
#include "springer/random.hpp"
#include "springer/springer.hpp"

namespace springer {

/// Random linear combination of `basis`; each coefficient is zero with probability zero_num/4.
inline FpMatrix random_combination(const std::vector<FpMatrix>& basis, const Field& f, std::size_t n, Rng& rng,
                                   std::uint64_t zero_num = 0) {
  FpMatrix x(f, n);
  for (const auto& b : basis) {
    if (rng.chance(zero_num, 4)) continue;
    x += rng.scalar(f) * b;
  }
  return x;
}

/// Whether some nilpotent of Lie(G) has Jordan type t.
inline bool jordan_type_admissible(const GroupSpec& g, const JordanType& t) {
  if (t.dimension() != g.dimension()) return false;
  if (g.kind() == GroupKind::GL || g.kind() == GroupKind::SL) return true;
  std::map<std::size_t, std::size_t> mult;
  for (auto b : t.parts()) ++mult[b];
  // SO: even parts have even multiplicity.  Sp: odd parts have even multiplicity.
  std::size_t parity = g.kind() == GroupKind::SO ? 0 : 1;
  for (auto [size, count] : mult)
    if (size % 2 == parity && count % 2) return false;
  return true;
}

/// Random element of G: a product of Artin-Hasse exponentials of strictly upper and
/// strictly lower nilpotents of Lie(G), times a random invertible diagonal for GL.
inline FpMatrix random_group_element(const GroupSpec& g, Rng& rng) {
  if (!g.uses_default_form()) throw std::invalid_argument("sampling requires the default form");
  const Field& f = g.field();
  std::size_t n = g.dimension();
  auto upper = triangular_lie_basis(g, true);
  auto lower = triangular_lie_basis(g, false);
  FpMatrix elt = FpMatrix::identity(f, n);
  for (int round = 0; round < 2; ++round) {
    elt = elt * ah_exp(random_combination(upper, f, n, rng));
    elt = elt * ah_exp(random_combination(lower, f, n, rng));
  }
  if (g.kind() == GroupKind::GL) {
    FpMatrix d(f, n);
    for (std::size_t i = 0; i < n; ++i) d.set(i, i, rng.nonzero_scalar(f));
    elt = d * elt;
  }
  if (!in_group(g, elt)) throw std::logic_error("sampled element left " + g.name());
  return elt;
}

/// Nilpotent element of Lie(G), optionally of a requested Jordan type, conjugated by a random
/// group element.  Throws std::domain_error if the type cannot occur (or is not found) in G.
inline FpMatrix random_nilpotent(const GroupSpec& g, const std::optional<JordanType>& type, Rng& rng) {
  if (!g.uses_default_form()) throw std::invalid_argument("sampling requires the default form");
  const Field& f = g.field();
  std::size_t n = g.dimension();
  FpMatrix x(f, n);
  if (type) {
    if (!jordan_type_admissible(g, *type))
      throw std::domain_error("Jordan type (" + type->to_string() + ") does not occur in " + g.name());
    if (g.kind() == GroupKind::GL || g.kind() == GroupKind::SL) {
      x = jordan_nilpotent(*type, f);
    } else {
      auto upper = triangular_lie_basis(g, true);
      bool found = false;
      for (int attempt = 0; attempt < 4000 && !found; ++attempt) {
        x = random_combination(upper, f, n, rng, rng.below(4));
        found = jordan_type_of(x) == *type;
      }
      if (!found) throw std::domain_error("no element of type (" + type->to_string() + ") found in " + g.name());
    }
  } else {
    x = random_combination(triangular_lie_basis(g, true), f, n, rng, rng.below(4));
  }
  FpMatrix c = random_group_element(g, rng);
  return c * x * *c.inverse();
}

inline FpMatrix random_nilpotent(const GroupSpec& g, const std::optional<JordanType>& type, std::uint64_t seed) {
  Rng rng(seed);
  return random_nilpotent(g, type, rng);
}

}  // namespace springer

#endif  // SPRINGER_SAMPLING_HPP

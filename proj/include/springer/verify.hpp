#ifndef SPRINGER_VERIFY_HPP
#define SPRINGER_VERIFY_HPP

// Named property suites.  Every suite carries an anchor naming the claim it
// checks, runs deterministic cases derived from (seed, suite, config, index)
// and records complete inputs for any failing case.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "springer/field.hpp"
#include "springer/groups.hpp"
#include "springer/json_io.hpp"
#include "springer/matrix.hpp"
#include "springer/parabolic.hpp"
#include "springer/random.hpp"
#include "springer/sampling.hpp"
#include "springer/series.hpp"
#include "springer/springer.hpp"
#include "springer/witt.hpp"

namespace springer {

/// Bad verifier configuration (unknown suite, invalid prime, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  std::vector<std::string> suites;
  std::vector<std::uint32_t> primes{2, 3, 5, 7};
  std::vector<GroupKind> kinds{GroupKind::GL, GroupKind::SL, GroupKind::SO, GroupKind::Sp};
  bool kinds_explicit = false;
  std::optional<std::size_t> max_dim;
  std::optional<std::size_t> trials;
  std::uint64_t seed = 0;
  std::string report_path;

  bool has_prime(std::uint32_t p) const { return std::find(primes.begin(), primes.end(), p) != primes.end(); }
  bool has_kind(GroupKind k) const { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); }
  std::size_t trials_or(std::size_t d) const { return trials.value_or(d); }
  std::size_t dim_or(std::size_t d) const { return max_dim.value_or(d); }
};

struct SuiteRecord {
  std::string name;
  std::string anchor;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<Json> witnesses;
};

struct Report {
  int version = 1;
  Json config;
  std::vector<SuiteRecord> suites;
  std::string timestamp;

  bool all_passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteRecord& s) { return s.failed == 0; });
  }

  Json to_json(bool with_timestamp = true) const {
    Json j;
    j["version"] = version;
    if (with_timestamp) j["timestamp"] = timestamp;
    j["config"] = config;
    Json arr = Json::array();
    for (const auto& s : suites) {
      Json r;
      r["name"] = s.name;
      r["anchor"] = s.anchor;
      r["cases"] = s.cases;
      r["passed"] = s.passed;
      r["failed"] = s.failed;
      r["witnesses"] = s.witnesses;
      arr.push_back(std::move(r));
    }
    j["suites"] = std::move(arr);
    return j;
  }
};

/// Collects case outcomes for one suite.
class Recorder {
 public:
  static constexpr std::size_t kMaxWitnesses = 25;

  Recorder(const SuiteConfig& cfg, SuiteRecord& rec) : cfg_(cfg), rec_(rec) {}

  const SuiteConfig& config() const { return cfg_; }

  /// Independent random stream for case `index` of configuration `label`.
  Rng rng(const std::string& label, std::uint64_t index) const {
    return Rng(cfg_.seed, rec_.name + "/" + label, index);
  }

  /// Runs one case; an exception counts as a failure and its message joins the witness.
  void check(const std::function<bool()>& body, const std::function<Json()>& witness) {
    ++rec_.cases;
    std::string error;
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (ok) {
      ++rec_.passed;
      return;
    }
    ++rec_.failed;
    if (rec_.witnesses.size() < kMaxWitnesses) {
      Json w = witness();
      if (!error.empty()) w["error"] = error;
      rec_.witnesses.push_back(std::move(w));
    }
  }

 private:
  const SuiteConfig& cfg_;
  SuiteRecord& rec_;
};

namespace suites {

inline Json mat(const FpMatrix& m) { return matrix_to_json(m); }

inline std::vector<std::uint32_t> primes_in(const SuiteConfig& cfg, std::initializer_list<std::uint32_t> allowed) {
  std::vector<std::uint32_t> out;
  for (auto p : allowed)
    if (cfg.has_prime(p)) out.push_back(p);
  return out;
}

/// (kind, n) pairs for the classical-group suites, honoring good-prime constraints.
inline std::vector<GroupSpec> classical_configs(const SuiteConfig& cfg, std::uint32_t p, std::size_t default_cap,
                                                unsigned e = 1) {
  std::vector<GroupSpec> out;
  Field f(p, e);
  std::size_t cap = cfg.dim_or(default_cap);
  for (auto kind : {GroupKind::GL, GroupKind::SL, GroupKind::SO, GroupKind::Sp}) {
    if (!cfg.has_kind(kind)) continue;
    bool classical = kind == GroupKind::SO || kind == GroupKind::Sp;
    if (classical && p == 2) continue;
    for (std::size_t n = kind == GroupKind::SO ? 3 : 2; n <= cap; ++n) {
      if (kind == GroupKind::Sp && n % 2) continue;
      out.push_back(GroupSpec::standard(kind, f, n));
    }
  }
  return out;
}

/// Every n x n matrix over F_p with X^n = 0.
inline std::vector<FpMatrix> all_nilpotents(const Field& f, std::size_t n) {
  std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < n * n; ++k) total *= q;
  std::vector<FpMatrix> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec data(n * n);
    std::uint64_t rest = idx;
    for (auto& c : data) {
      std::uint64_t d = rest % q;
      rest /= q;
      c = {static_cast<std::uint32_t>(d % f.p()), static_cast<std::uint32_t>(d / f.p())};
    }
    auto m = FpMatrix::from_data(f, n, std::move(data));
    if (nilpotency_degree(m)) out.push_back(std::move(m));
  }
  return out;
}

/// Integer congruent to the Teichmueller lift of a in Z/p^m: the limit of a^{p^k}.
inline std::int64_t teichmuller(std::int64_t a, std::uint32_t p, std::int64_t modulus) {
  std::int64_t t = a % modulus;
  for (int it = 0; it < 8; ++it) {
    std::int64_t r = 1;
    for (std::uint32_t k = 0; k < p; ++k) r = r * t % modulus;
    t = r;
  }
  return t;
}

// ---------------------------------------------------------------------------

inline void ah_integrality(Recorder& rec) {
  constexpr std::size_t kDegree = 60;
  for (auto p : rec.config().primes) {
    auto by_recurrence = ah_rational_coeffs_by_recurrence(p, kDegree);
    for (std::size_t i = 0; i <= kDegree; ++i) {
      const Rational& c = by_recurrence.coeffs[i];
      rec.check([&] { return boost::multiprecision::denominator(c) % p != 0; },
                [&] { return Json{{"p", p}, {"i", i}, {"coefficient", c.str()}}; });
    }
    rec.check([&] { return ah_rational_coeffs(p, kDegree) == by_recurrence; },
              [&] { return Json{{"p", p}, {"N", kDegree}, {"check", "product route equals recurrence"}}; });
    auto e = ah_coeffs_mod_p(p, kDegree);
    Field f(p);
    FieldScalar fact = FieldScalar::one(f);
    for (std::uint32_t i = 0; i < p && i <= kDegree; ++i) {
      if (i) fact *= FieldScalar(f, static_cast<std::int64_t>(i));
      rec.check([&] { return (e[i] * fact).is_one(); },
                [&] { return Json{{"p", p}, {"i", i}, {"c_i", e[i].to_string()}, {"check", "c_i * i! = 1"}}; });
    }
    auto inverse = ah_rational_inverse_coeffs(p, kDegree);
    rec.check(
        [&] {
          RationalSeries one{std::vector<Rational>(kDegree + 1)};
          one.coeffs[0] = 1;
          return series_mul(inverse, by_recurrence) == one;
        },
        [&] { return Json{{"p", p}, {"N", kDegree}, {"check", "F_p(t) E_p(t) = 1 over Q"}}; });
    rec.check([&] { return reduce_mod_p(inverse, p) == ah_inverse_coeffs(p, kDegree); },
              [&] { return Json{{"p", p}, {"N", kDegree}, {"check", "reduced F_p equals series inverse of e_p"}}; });
    rec.check(
        [&] {
          auto prod = series_mul(ah_inverse_coeffs(p, kDegree), e);
          for (std::size_t i = 0; i <= kDegree; ++i)
            if (!(prod[i] == FieldScalar(f, i == 0 ? 1 : 0))) return false;
          return true;
        },
        [&] { return Json{{"p", p}, {"N", kDegree}, {"check", "F_p * E_p = 1"}}; });
  }
}

inline void witt_group(Recorder& rec) {
  const std::vector<std::pair<std::uint32_t, std::size_t>> configs{{2, 2}, {2, 3}, {3, 2}};
  for (auto [p, m] : configs) {
    if (!rec.config().has_prime(p)) continue;
    Field f(p);
    auto all = enumerate_witt(f, m);
    auto zero = WittVector::zero(f, m);
    auto wj = [&](const WittVector& w) { return witt_to_json(w); };
    auto base = [&] { return Json{{"p", p}, {"m", m}}; };
    for (const auto& u : all) {
      rec.check([&] { return witt_add(u, zero) == u && witt_add(zero, u) == u; },
                [&] { auto j = base(); j["u"] = wj(u); j["check"] = "identity"; return j; });
      rec.check([&] { return witt_add(u, witt_neg(u)).is_zero(); },
                [&] { auto j = base(); j["u"] = wj(u); j["check"] = "inverse"; return j; });
      rec.check([&] { return witt_multiple(u, p) == witt_pow_p(u); },
                [&] { auto j = base(); j["u"] = wj(u); j["check"] = "p-fold sum equals shifted Frobenius"; return j; });
      rec.check(
          [&] {
            std::size_t lead = 0;
            while (lead < m && u[lead].is_zero()) ++lead;
            std::uint64_t expect = 1;
            for (std::size_t k = lead; k < m; ++k) expect *= p;
            return witt_order(u) == expect;
          },
          [&] { auto j = base(); j["u"] = wj(u); j["check"] = "order from leading entry"; return j; });
      for (const auto& v : all) {
        rec.check([&] { return witt_add(u, v) == witt_add(v, u); },
                  [&] { auto j = base(); j["u"] = wj(u); j["v"] = wj(v); j["check"] = "commutativity"; return j; });
        for (const auto& w : all) {
          rec.check([&] { return witt_add(witt_add(u, v), w) == witt_add(u, witt_add(v, w)); },
                    [&] {
                      auto j = base();
                      j["u"] = wj(u);
                      j["v"] = wj(v);
                      j["w"] = wj(w);
                      j["check"] = "associativity";
                      return j;
                    });
        }
      }
    }
    std::int64_t modulus = static_cast<std::int64_t>(all.size());
    std::set<std::string> images;
    for (std::int64_t a = 0; a < modulus; ++a) {
      images.insert(witt_from_integer(f, m, a).to_string());
      // Teichmueller digits: a = sum p^i [x_i] mod p^m
      rec.check(
          [&] {
            auto w = witt_from_integer(f, m, a);
            std::int64_t total = 0, pi = 1;
            for (std::size_t i = 0; i < m; ++i) {
              total += pi * teichmuller(w[i].coords().c0, p, modulus);
              pi *= p;
            }
            return ((total % modulus) + modulus) % modulus == a;
          },
          [&] { auto j = base(); j["n"] = a; j["check"] = "Teichmueller expansion"; return j; });
      for (std::int64_t b = 0; b < modulus; ++b)
        rec.check(
            [&] {
              return witt_from_integer(f, m, a + b) == witt_add(witt_from_integer(f, m, a), witt_from_integer(f, m, b));
            },
            [&] { auto j = base(); j["n1"] = a; j["n2"] = b; j["check"] = "Z/p^m homomorphism"; return j; });
    }
    rec.check([&] { return images.size() == all.size(); },
              [&] { auto j = base(); j["check"] = "Z/p^m map is bijective"; return j; });
  }
}

inline void witt_hom(Recorder& rec) {
  struct Cfg {
    std::uint32_t p;
    unsigned e;
    std::size_t block;
  };
  const std::vector<Cfg> configs{{2, 1, 3}, {2, 1, 5}, {3, 1, 4}, {5, 1, 6}, {2, 2, 3}, {3, 2, 4}};
  for (const auto& c : configs) {
    if (!rec.config().has_prime(c.p)) continue;
    Field f(c.p, c.e);
    FpMatrix x = jordan_nilpotent(JordanType({c.block}), f);
    std::size_t m = nilpotent_order(x);
    std::string label = "p" + std::to_string(c.p) + "e" + std::to_string(c.e) + "J" + std::to_string(c.block);
    auto all = enumerate_witt(f, m);
    auto base = [&](const FpMatrix& xx) { return Json{{"X", mat(xx)}, {"m", m}}; };
    auto hom_case = [&](const FpMatrix& xx, const WittVector& u, const WittVector& v) {
      rec.check([&] { return witt_embed(xx, witt_add(u, v)) == witt_embed(xx, u) * witt_embed(xx, v); },
                [&] {
                  auto j = base(xx);
                  j["u"] = witt_to_json(u);
                  j["v"] = witt_to_json(v);
                  j["check"] = "homomorphism";
                  return j;
                });
    };
    if (all.size() * all.size() <= 10000) {
      for (const auto& u : all)
        for (const auto& v : all) hom_case(x, u, v);
    }
    // Seeded pairs with X a random conjugate of the regular nilpotent.
    std::size_t trials = rec.config().trials_or(200);
    auto gl = GroupSpec::standard(GroupKind::GL, f, c.block);
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng = rec.rng(label, t);
      FpMatrix xx = random_nilpotent(gl, JordanType({c.block}), rng);
      std::vector<FieldScalar> a, b;
      for (std::size_t i = 0; i < m; ++i) {
        a.push_back(rng.scalar(f));
        b.push_back(rng.scalar(f));
      }
      hom_case(xx, WittVector(f, a), WittVector(f, b));
    }
    if (all.size() <= 4096) {
      rec.check(
          [&] {
            std::set<Vec> seen;
            for (const auto& u : all) seen.insert(witt_embed(x, u).data());
            return seen.size() == all.size();
          },
          [&] { auto j = base(x); j["check"] = "injective on all Witt vectors"; return j; });
    }
    rec.check([&] { return witt_embed(x, WittVector::unit(f, m)) == ah_exp(x); },
              [&] { auto j = base(x); j["check"] = "unit vector maps to ah_exp(X)"; return j; });
  }
}

/// Runs `body(G, X)` on seeded nilpotents of every classical configuration for p in {2,3,5}.
inline void over_classical_nilpotents(Recorder& rec, std::size_t default_trials, std::size_t default_cap,
                                      const std::function<void(const GroupSpec&, const FpMatrix&, Rng&)>& body) {
  for (auto p : primes_in(rec.config(), {2, 3, 5}))
    for (const auto& g : classical_configs(rec.config(), p, default_cap)) {
      std::size_t trials = rec.config().trials_or(default_trials);
      for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = rec.rng(g.name(), t);
        std::optional<FpMatrix> x;
        rec.check(
            [&] {
              x = random_nilpotent(g, std::nullopt, rng);
              return true;
            },
            [&] { return Json{{"group", g.name()}, {"case", t}, {"check", "sampling"}}; });
        if (x) body(g, *x, rng);
      }
    }
}

inline void frobenius_power(Recorder& rec) {
  over_classical_nilpotents(rec, 100, 8, [&](const GroupSpec& g, const FpMatrix& x, Rng&) {
    rec.check([&] { return ah_exp(x.pow(g.field().p())) == ah_exp(x).pow(g.field().p()); },
              [&] { return Json{{"group", g.name()}, {"X", mat(x)}}; });
  });
}

inline void same_order(Recorder& rec) {
  over_classical_nilpotents(rec, 100, 8, [&](const GroupSpec& g, const FpMatrix& x, Rng&) {
    rec.check([&] { return unipotent_order_exponent(ah_exp(x)) == nilpotent_order(x); },
              [&] { return Json{{"group", g.name()}, {"X", mat(x)}}; });
  });
}

inline void equivariance(Recorder& rec) {
  over_classical_nilpotents(rec, 50, 6, [&](const GroupSpec& g, const FpMatrix& x, Rng& rng) {
    FpMatrix h = random_group_element(g, rng);
    FpMatrix hinv = *h.inverse();
    rec.check([&] { return ah_exp(h * x * hinv) == h * ah_exp(x) * hinv && in_lie_algebra(g, h * x * hinv); },
              [&] { return Json{{"group", g.name()}, {"X", mat(x)}, {"g", mat(h)}}; });
  });
}

inline void log_roundtrip(Recorder& rec) {
  over_classical_nilpotents(rec, 30, 6, [&](const GroupSpec& g, const FpMatrix& x, Rng&) {
    rec.check([&] { return ah_log(ah_exp(x)) == x; }, [&] { return Json{{"group", g.name()}, {"X", mat(x)}}; });
    rec.check(
        [&] {
          auto seq = CoefficientSequence::artin_hasse(g.field(), g.dimension());
          return phi_seq(seq, x) == ah_exp(x);
        },
        [&] { return Json{{"group", g.name()}, {"X", mat(x)}, {"check", "phi_seq with AH coefficients"}}; });
  });
}

inline void restricts(Recorder& rec) {
  struct Cfg {
    GroupKind kind;
    std::size_t n;
  };
  const std::vector<Cfg> configs{{GroupKind::Sp, 4}, {GroupKind::Sp, 6}, {GroupKind::SO, 5}, {GroupKind::SO, 7},
                                 {GroupKind::SL, 4}};
  for (auto p : primes_in(rec.config(), {3, 5}))
    for (const auto& c : configs) {
      if (!rec.config().has_kind(c.kind)) continue;
      auto g = GroupSpec::standard(c.kind, Field(p), c.n);
      std::size_t trials = rec.config().trials_or(100);
      for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = rec.rng(g.name(), t);
        std::optional<FpMatrix> x;
        rec.check(
            [&] {
              x = random_nilpotent(g, std::nullopt, rng);
              return in_group(g, ah_exp(*x));
            },
            [&] {
              Json j{{"group", g.name()}, {"case", t}};
              if (x) j["X"] = mat(*x);
              return j;
            });
      }
    }
}

/// Searches sp_6(F_3) for X with X^3 != 0 whose naive truncation sum_{i<3} X^i/i! leaves Sp_6
/// while ah_exp(X) stays inside.  One case: passes when such an X is found.
inline void negative_control(Recorder& rec) {
  if (!rec.config().has_prime(3) || !rec.config().has_kind(GroupKind::Sp)) return;
  Field f(3);
  auto g = GroupSpec::standard(GroupKind::Sp, f, 6);
  std::optional<FpMatrix> found;
  rec.check(
      [&] {
        for (std::size_t t = 0; t < 10000 && !found; ++t) {
          Rng rng = rec.rng("sp6", t);
          FpMatrix x = random_nilpotent(g, std::nullopt, rng);
          if (x.pow(3).is_zero()) continue;
          FpMatrix id = FpMatrix::identity(f, 6);
          FpMatrix naive = id + x + FieldScalar(f, 2).inverse() * x * x;
          if (!in_group(g, naive) && in_group(g, ah_exp(x))) found = x;
        }
        return found.has_value();
      },
      [&] { return Json{{"group", g.name()}, {"candidates", 10000}, {"check", "no witness found"}}; });
}

/// Parabolic configurations: every restricted composition of n <= cap for p in {2,3,5}.
inline void over_restricted_parabolics(Recorder& rec, std::initializer_list<std::uint32_t> allowed,
                                       const std::function<void(const ParabolicGL&, const std::string&)>& body) {
  for (auto p : primes_in(rec.config(), allowed))
    for (std::size_t n = 2; n <= rec.config().dim_or(6); ++n)
      for (const auto& comp : compositions(n)) {
        ParabolicGL par{comp, Field(p)};
        if (!is_restricted(par)) continue;
        body(par, "p" + std::to_string(p) + "/" + comp.to_string());
      }
}

inline Json par_json(const ParabolicGL& par) {
  return Json{{"p", par.field.p()}, {"composition", par.comp.to_string()}};
}

inline void eps_equivariance(Recorder& rec) {
  over_restricted_parabolics(rec, {2, 3, 5}, [&](const ParabolicGL& par, const std::string& label) {
    for (std::size_t t = 0; t < rec.config().trials_or(100); ++t) {
      Rng rng = rec.rng(label, t);
      FpMatrix g = random_p_element(par, rng);
      FpMatrix x = random_nilradical_element(par, rng);
      FpMatrix ginv = *g.inverse();
      rec.check([&] { return eps_P(par, g * x * ginv) == g * eps_P(par, x) * ginv; },
                [&] { auto j = par_json(par); j["g"] = mat(g); j["X"] = mat(x); return j; });
    }
  });
}

inline void eps_bch(Recorder& rec) {
  over_restricted_parabolics(rec, {2, 3, 5}, [&](const ParabolicGL& par, const std::string& label) {
    for (std::size_t t = 0; t < rec.config().trials_or(100); ++t) {
      Rng rng = rec.rng(label, t);
      FpMatrix x = random_nilradical_element(par, rng);
      FpMatrix y = random_nilradical_element(par, rng);
      rec.check([&] { return eps_P(par, bch(x, y)) == eps_P(par, x) * eps_P(par, y); },
                [&] { auto j = par_json(par); j["X"] = mat(x); j["Y"] = mat(y); return j; });
    }
  });
}

inline void bch_vs_dynkin(Recorder& rec) {
  auto run = [&](const ParabolicGL& par, const std::string& label) {
    for (std::size_t t = 0; t < rec.config().trials_or(100); ++t) {
      Rng rng = rec.rng(label, t);
      FpMatrix x = random_nilradical_element(par, rng);
      FpMatrix y = random_nilradical_element(par, rng);
      rec.check([&] { return bch(x, y) == bch_dynkin(x, y, par.field.p() - 1); },
                [&] { auto j = par_json(par); j["X"] = mat(x); j["Y"] = mat(y); return j; });
    }
  };
  for (auto p : primes_in(rec.config(), {3, 5})) {
    ParabolicGL borel{Composition(std::vector<std::size_t>(p, 1)), Field(p)};
    run(borel, "borel-p" + std::to_string(p));
  }
  over_restricted_parabolics(rec, {3, 5}, run);
}

inline void eps_tangent(Recorder& rec) {
  for (auto p : primes_in(rec.config(), {2, 3, 5}))
    rec.check([&] { return ah_coeffs_mod_p(p, 1)[1].is_one(); },
              [&] { return Json{{"p", p}, {"check", "linear coefficient of e_p is 1"}}; });
  over_restricted_parabolics(rec, {2, 3, 5}, [&](const ParabolicGL& par, const std::string& label) {
    const Field& f = par.field;
    std::uint32_t p = f.p();
    for (std::size_t t = 0; t < rec.config().trials_or(20); ++t) {
      Rng rng = rec.rng(label, t);
      FpMatrix x = random_nilradical_element(par, rng);
      // eps_P(sX) is a polynomial of degree < p in s; interpolate its s^1 coefficient from s = 0..p-1.
      rec.check(
          [&] {
            FpMatrix lin(f, x.size());
            for (std::uint32_t k = 0; k < p; ++k) {
              // Lagrange basis L_k(s) = prod_{j!=k} (s - j)/(k - j); take its linear coefficient.
              std::vector<FieldScalar> poly{FieldScalar::one(f)};
              FieldScalar denom = FieldScalar::one(f);
              for (std::uint32_t j = 0; j < p; ++j) {
                if (j == k) continue;
                std::vector<FieldScalar> next(poly.size() + 1, FieldScalar::zero(f));
                for (std::size_t d = 0; d < poly.size(); ++d) {
                  next[d + 1] += poly[d];
                  next[d] -= FieldScalar(f, static_cast<std::int64_t>(j)) * poly[d];
                }
                poly = std::move(next);
                denom *= FieldScalar(f, static_cast<std::int64_t>(k) - static_cast<std::int64_t>(j));
              }
              FieldScalar w = (poly.size() > 1 ? poly[1] : FieldScalar::zero(f)) / denom;
              lin += w * eps_P(par, FieldScalar(f, static_cast<std::int64_t>(k)) * x);
            }
            return lin == x;
          },
          [&] { auto j = par_json(par); j["X"] = mat(x); return j; });
    }
  });
}

inline void eps_restriction(Recorder& rec) {
  over_restricted_parabolics(rec, {2, 3, 5}, [&](const ParabolicGL& par, const std::string& label) {
    for (std::size_t t = 0; t < rec.config().trials_or(100); ++t) {
      Rng rng = rec.rng(label, t);
      FpMatrix x = random_nilradical_element(par, rng);
      rec.check([&] { return ah_exp(x) == eps_P(par, x); },
                [&] { auto j = par_json(par); j["X"] = mat(x); return j; });
    }
  });
}

inline void eps_bijective(Recorder& rec) {
  over_restricted_parabolics(rec, {2, 3, 5}, [&](const ParabolicGL& par, const std::string& label) {
    for (std::size_t t = 0; t < rec.config().trials_or(200); ++t) {
      Rng rng = rec.rng(label, t);
      FpMatrix x = random_nilradical_element(par, rng);
      rec.check([&] { return truncated_log(eps_P(par, x)) == x; },
                [&] { auto j = par_json(par); j["X"] = mat(x); return j; });
    }
  });
}

inline void commutativity(Recorder& rec) {
  auto pair_case = [&](const FpMatrix& x, const FpMatrix& y) {
    rec.check(
        [&] {
          bool lie = x * y == y * x;
          FpMatrix ex = ah_exp(x), ey = ah_exp(y);
          return lie == (ex * ey == ey * ex);
        },
        [&] { return Json{{"X", mat(x)}, {"Y", mat(y)}}; });
  };
  const std::vector<std::pair<std::uint32_t, std::size_t>> exhaustive{{3, 2}, {2, 3}};
  for (auto [p, n] : exhaustive) {
    if (!rec.config().has_prime(p)) continue;
    auto nil = all_nilpotents(Field(p), n);
    for (const auto& x : nil)
      for (const auto& y : nil) pair_case(x, y);
  }
  if (rec.config().has_prime(3)) {
    Field f(3);
    auto gl = GroupSpec::standard(GroupKind::GL, f, 4);
    for (std::size_t t = 0; t < rec.config().trials_or(10000); ++t) {
      Rng rng = rec.rng("gl4-F3", t);
      FpMatrix x = random_nilpotent(gl, std::nullopt, rng);
      FpMatrix y(f, 4);
      if (rng.chance(1, 4)) {
        // a polynomial in X without constant term: nilpotent and commuting
        FpMatrix pw = x;
        for (int k = 0; k < 3; ++k, pw = pw * x) y += rng.scalar(f) * pw;
      } else {
        y = random_nilpotent(gl, std::nullopt, rng);
      }
      pair_case(x, y);
    }
  }
}

inline void centralizer(Recorder& rec) {
  for (auto p : primes_in(rec.config(), {2, 3, 5}))
    for (std::size_t n = 2; n <= rec.config().dim_or(6); ++n) {
      auto gl = GroupSpec::standard(GroupKind::GL, Field(p), n);
      for (std::size_t t = 0; t < rec.config().trials_or(50); ++t) {
        Rng rng = rec.rng(gl.name(), t);
        FpMatrix x = random_nilpotent(gl, std::nullopt, rng);
        rec.check([&] { return same_subspace(centralizer_space(x).basis, centralizer_space(ah_exp(x)).basis); },
                  [&] { return Json{{"X", mat(x)}}; });
      }
    }
}

inline void frobenius_entries(Recorder& rec) {
  for (auto p : primes_in(rec.config(), {2, 3})) {
    Field f(p, 2);
    for (std::size_t t = 0; t < rec.config().trials_or(50); ++t) {
      Rng rng = rec.rng("F" + std::to_string(p) + "^2", t);
      std::size_t n = 2 + rng.below(rec.config().dim_or(6) - 1);
      FpMatrix x = random_nilpotent(GroupSpec::standard(GroupKind::GL, f, n), std::nullopt, rng);
      rec.check([&] { return ah_exp(x).frobenius() == ah_exp(x.frobenius()); },
                [&] { return Json{{"X", mat(x)}}; });
    }
  }
}

inline void one_parameter(Recorder& rec) {
  for (auto p : primes_in(rec.config(), {2, 3, 5}))
    for (unsigned e : {1u, 2u}) {
      Field f(p, e);
      for (std::size_t t = 0; t < rec.config().trials_or(50); ++t) {
        Rng rng = rec.rng("F" + f.name(), t);
        std::size_t n = 2 + rng.below(rec.config().dim_or(6) - 1);
        // Block sizes at most p guarantee X^p = 0.
        std::vector<std::size_t> blocks;
        for (std::size_t left = n; left;) {
          std::size_t b = 1 + rng.below(std::min<std::size_t>(left, p));
          blocks.push_back(b);
          left -= b;
        }
        std::sort(blocks.rbegin(), blocks.rend());
        FpMatrix x = random_nilpotent(GroupSpec::standard(GroupKind::GL, f, n), JordanType(blocks), rng);
        FieldScalar s = rng.scalar(f), u = rng.scalar(f);
        rec.check([&] { return ah_exp((s + u) * x) == ah_exp(s * x) * ah_exp(u * x) && ah_exp(x) == truncated_exp(x); },
                  [&] { return Json{{"X", mat(x)}, {"s", s.to_string()}, {"t", u.to_string()}}; });
      }
    }
}

inline void ghost_identity(Recorder& rec) {
  for (auto p : rec.config().primes) {
    if (p > 7) continue;
    for (std::size_t m = 1; m <= kMaxWittLength; ++m) {
      rec.check(
          [&] {
            auto s = witt_sum_polys(p, m);
            std::vector<ZPoly> a, b;
            for (std::size_t i = 0; i < m; ++i) {
              a.push_back(ZPoly::a(i));
              b.push_back(ZPoly::b(i));
            }
            for (std::size_t n = 0; n < m; ++n)
              if (!(ghost_component(p, n, s) == ghost_component(p, n, a) + ghost_component(p, n, b))) return false;
            return true;
          },
          [&] { return Json{{"p", p}, {"m", m}}; });
    }
  }
}

}  // namespace suites

struct SuiteDef {
  std::string name;
  std::string anchor;
  std::function<void(Recorder&)> run;
};

/// The registry: one entry per checked claim, in report order.
inline const std::vector<SuiteDef>& suite_registry() {
  static const std::vector<SuiteDef> registry{
      {"ah-integrality", "Artin-Hasse exponential: E_p(t) in Z_(p)[[t]], C_i = 1/i! for i < p, F_p(t)E_p(t) = 1",
       suites::ah_integrality},
      {"ghost-identity", "Witt sum polynomials satisfy w_n(S) = w_n(a) + w_n(b) over Z", suites::ghost_identity},
      {"witt-group", "Witt group W_m(F_p): group axioms, W_m(F_p) = Z/p^m, (a_0,...)^p = (0,a_0^p,...), order p^j criterion",
       suites::witt_group},
      {"witt-hom", "Witt group embedding (a_i) -> prod e_p(a_i X^{p^i}) is an injective group homomorphism",
       suites::witt_hom},
      {"frobenius-power", "Frobenius compatibility: e_p(X^p) = e_p(X)^p", suites::frobenius_power},
      {"same-order", "Order preservation: X of nilpotent order p^m has e_p(X) of unipotent order p^m",
       suites::same_order},
      {"equivariance", "Springer isomorphism is G-equivariant: e_p(gXg^-1) = g e_p(X) g^-1", suites::equivariance},
      {"log-roundtrip", "e_p is an isomorphism N(gl_n) -> U(GL_n) and equals phi_a with a_i = c_i",
       suites::log_roundtrip},
      {"restricts", "Restriction to classical groups: X in Lie(G) implies e_p(X) in G for G = SL, SO, Sp", suites::restricts},
      {"negative-control", "Naive truncated exponential leaves Sp_6(F_3) where e_p does not",
       suites::negative_control},
      {"eps-equivariance", "eps_P is P-equivariant", suites::eps_equivariance},
      {"eps-bch", "eps_P is a group isomorphism for the BCH product", suites::eps_bch},
      {"bch-dynkin", "BCH product log(exp X exp Y) agrees with the Dynkin series through degree p-1",
       suites::bch_vs_dynkin},
      {"eps-tangent", "eps_P has the identity as tangent map", suites::eps_tangent},
      {"eps-restriction", "e_p restricted to a restricted nilradical u_P is eps_P", suites::eps_restriction},
      {"eps-bijective", "eps_P: u_P -> U_P is bijective with inverse the truncated logarithm", suites::eps_bijective},
      {"commutativity", "Commutativity: [X,Y] = 0 iff e_p(X) commutes with e_p(Y)", suites::commutativity},
      {"centralizer", "Centralizers C(X) and C(e_p(X)) coincide", suites::centralizer},
      {"frobenius-entries", "e_p is defined over F_p (commutes with Frobenius on entries)",
       suites::frobenius_entries},
      {"one-parameter", "For X^p = 0, s -> e_p(sX) is a one-parameter additive subgroup and e_p(X) = truncated exp",
       suites::one_parameter},
  };
  return registry;
}

/// Validates a configuration; throws UsageError.
inline void validate(const SuiteConfig& cfg) {
  if (cfg.suites.empty()) throw UsageError("no suites selected");
  for (const auto& name : cfg.suites) {
    if (name == "all") continue;
    const auto& reg = suite_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const SuiteDef& d) { return d.name == name; }))
      throw UsageError("unknown suite '" + name + "'");
  }
  if (cfg.primes.empty()) throw UsageError("no primes given");
  for (auto p : cfg.primes)
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  if (cfg.trials && *cfg.trials < 1) throw UsageError("trials must be at least 1");
  if (cfg.max_dim && *cfg.max_dim < 2) throw UsageError("dimension cap must be at least 2");
  if (cfg.kinds.empty()) throw UsageError("no group kinds given");
  if (cfg.kinds_explicit && cfg.has_prime(2))
    for (auto k : cfg.kinds)
      if (k == GroupKind::SO || k == GroupKind::Sp)
        throw UsageError(to_string(k) + " is not supported with p = 2 (bad prime for types B, C, D)");
}

inline Json config_json(const SuiteConfig& cfg) {
  Json kinds = Json::array();
  for (auto k : cfg.kinds) kinds.push_back(to_string(k));
  Json j;
  j["suites"] = cfg.suites;
  j["primes"] = cfg.primes;
  j["kinds"] = kinds;
  j["max_dim"] = cfg.max_dim ? Json(*cfg.max_dim) : Json(nullptr);
  j["trials"] = cfg.trials ? Json(*cfg.trials) : Json(nullptr);
  j["seed"] = cfg.seed;
  return j;
}

/// Runs the selected suites concurrently; the report lists them in registry order.
inline Report run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  bool all = std::find(cfg.suites.begin(), cfg.suites.end(), "all") != cfg.suites.end();
  std::vector<const SuiteDef*> selected;
  for (const auto& def : suite_registry())
    if (all || std::find(cfg.suites.begin(), cfg.suites.end(), def.name) != cfg.suites.end())
      selected.push_back(&def);

  Report report;
  report.config = config_json(cfg);
  report.suites.resize(selected.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    report.suites[i].name = selected[i]->name;
    report.suites[i].anchor = selected[i]->anchor;
    jobs.push_back(std::async(std::launch::async, [&, i] {
      SuiteRecord& r = report.suites[i];
      Recorder rec(cfg, r);
      try {
        selected[i]->run(rec);
      } catch (const std::exception& e) {
        ++r.cases;
        ++r.failed;
        r.witnesses.push_back(Json{{"check", "suite aborted"}, {"error", e.what()}});
      }
    }));
  }
  for (auto& j : jobs) j.get();
  return report;
}

}  // namespace springer

#endif  // SPRINGER_VERIFY_HPP

// springer: command line front end for the Artin-Hasse Springer maps and the verifier.
//
// Exit codes: 0 success / all checks passed, 1 a check failed or the input is
// outside a map's domain, 2 usage error (bad flags, malformed files).

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "springer/field.hpp"
#include "springer/groups.hpp"
#include "springer/json_io.hpp"
#include "springer/parabolic.hpp"
#include "springer/series.hpp"
#include "springer/springer.hpp"
#include "springer/verify.hpp"
#include "springer/witt.hpp"

namespace {

using namespace springer;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FpMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot open matrix file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return matrix_from_string(ss.str(), path);
}

Field make_field(std::uint32_t p, unsigned e) {
  try {
    return Field(p, e);
  } catch (const std::invalid_argument& err) {
    throw Usage(err.what());
  }
}

WittVector parse_witt(const std::string& text, const Field& f, const char* flag) {
  try {
    return WittVector(f, parse_entry_list(text, f));
  } catch (const std::exception& err) {
    throw Usage(std::string(flag) + ": " + err.what());
  }
}

void print_matrix(const FpMatrix& m) { std::cout << matrix_to_json(m).dump() << "\n"; }

std::string now_utc() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

template <typename T>
std::vector<T> split_list(const std::string& text, const char* flag) {
  try {
    std::vector<T> out;
    for (auto v : parse_size_list(text)) out.push_back(static_cast<T>(v));
    return out;
  } catch (const FormatError& err) {
    throw Usage(std::string(flag) + ": " + err.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin-Hasse exponential Springer isomorphisms over finite fields"};
  app.require_subcommand(1);

  std::uint32_t p = 0;
  unsigned e = 1;
  std::size_t n = 0;
  std::size_t m = 0;
  std::int64_t integer = 0;
  std::string matrix_path, vector_text, lhs_text, rhs_text, comp_text;
  bool rational = false, as_json = false;

  auto* ah = app.add_subcommand("ah-coeffs", "Artin-Hasse coefficients c_0..c_N");
  ah->add_option("--p", p, "prime")->required();
  ah->add_option("--n", n, "truncation degree N")->required();
  ah->add_flag("--rational", rational, "print the rational coefficients C_i");
  ah->add_flag("--json", as_json, "print a JSON array of strings");

  auto* exp = app.add_subcommand("exp", "Artin-Hasse exponential e_p(X) of a nilpotent matrix");
  exp->add_option("--matrix", matrix_path, "matrix JSON file")->required();

  auto* log = app.add_subcommand("log", "inverse of e_p on a unipotent matrix");
  log->add_option("--matrix", matrix_path, "matrix JSON file")->required();

  auto* embed = app.add_subcommand("embed", "Witt group embedding prod_i e_p(a_i X^{p^i})");
  embed->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  embed->add_option("--vector", vector_text, "Witt vector a_0,a_1,...")->required();

  auto* witt = app.add_subcommand("witt", "Witt vector arithmetic");
  witt->require_subcommand(1);
  auto witt_common = [&](CLI::App* sub) {
    sub->add_option("--p", p, "prime")->required();
    sub->add_option("--e", e, "extension degree (1 or 2)");
    sub->add_option("--m", m, "length");
  };
  auto* wadd = witt->add_subcommand("add", "u + v");
  witt_common(wadd);
  wadd->add_option("--lhs", lhs_text)->required();
  wadd->add_option("--rhs", rhs_text)->required();
  auto* wneg = witt->add_subcommand("neg", "-u");
  witt_common(wneg);
  wneg->add_option("--vector", vector_text)->required();
  auto* wpow = witt->add_subcommand("pow-p", "p * u");
  witt_common(wpow);
  wpow->add_option("--vector", vector_text)->required();
  auto* word = witt->add_subcommand("order", "order of u");
  witt_common(word);
  word->add_option("--vector", vector_text)->required();
  auto* wint = witt->add_subcommand("from-int", "n * (1, 0, ..., 0) in W_m(F_p)");
  witt_common(wint);
  wint->add_option("--n", integer, "integer")->required();

  auto* par = app.add_subcommand("parabolic", "standard parabolics of GL_n");
  par->require_subcommand(1);
  auto* peps = par->add_subcommand("eps", "eps_P(X) for X in the nilradical");
  peps->add_option("--comp", comp_text, "block sizes b1,b2,...")->required();
  peps->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  auto* pcls = par->add_subcommand("class", "nilpotence class of the unipotent radical");
  pcls->add_option("--comp", comp_text, "block sizes b1,b2,...")->required();
  pcls->add_option("--p", p, "prime (also reports restrictedness)");

  std::string suite_text, primes_text = "2,3,5,7", kinds_text, report_path;
  std::optional<std::size_t> trials, max_dim;
  std::uint64_t seed = 0;
  auto* ver = app.add_subcommand("verify", "run property suites and write a JSON report");
  ver->add_option("--suite", suite_text, "comma-separated suite names, or 'all'");
  ver->add_option("--p", primes_text, "comma-separated primes");
  ver->add_option("--kinds", kinds_text, "comma-separated group kinds (GL,SL,SO,Sp)");
  ver->add_option("--n", max_dim, "dimension cap");
  ver->add_option("--trials", trials, "seeded cases per configuration");
  ver->add_option("--seed", seed, "run seed");
  ver->add_option("--report", report_path, "report file");
  bool list_suites = false;
  ver->add_flag("--list", list_suites, "list the available suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (*ah) {
      if (!is_prime(p)) throw Usage("--p: " + std::to_string(p) + " is not prime");
      std::vector<std::string> out =
          rational ? to_strings(ah_rational_coeffs(p, n)) : to_strings(ah_coeffs_mod_p(p, n));
      if (as_json) {
        std::cout << Json(out).dump() << "\n";
      } else {
        for (std::size_t i = 0; i < out.size(); ++i) std::cout << (i ? " " : "") << out[i];
        std::cout << "\n";
      }
      return 0;
    }
    if (*exp) {
      print_matrix(ah_exp(read_matrix(matrix_path)));
      return 0;
    }
    if (*log) {
      print_matrix(ah_log(read_matrix(matrix_path)));
      return 0;
    }
    if (*embed) {
      FpMatrix x = read_matrix(matrix_path);
      print_matrix(witt_embed(x, parse_witt(vector_text, x.field(), "--vector")));
      return 0;
    }
    if (*witt) {
      Field f = make_field(p, e);
      auto check_len = [&](const WittVector& w) {
        if (m && w.length() != m)
          throw Usage("vector has length " + std::to_string(w.length()) + " but --m is " + std::to_string(m));
        return w;
      };
      if (*wadd) {
        auto u = check_len(parse_witt(lhs_text, f, "--lhs"));
        auto v = check_len(parse_witt(rhs_text, f, "--rhs"));
        if (u.length() != v.length()) throw Usage("--lhs and --rhs differ in length");
        std::cout << witt_add(u, v).to_string() << "\n";
      } else if (*wneg) {
        std::cout << witt_neg(check_len(parse_witt(vector_text, f, "--vector"))).to_string() << "\n";
      } else if (*wpow) {
        std::cout << witt_pow_p(check_len(parse_witt(vector_text, f, "--vector"))).to_string() << "\n";
      } else if (*word) {
        std::cout << witt_order(check_len(parse_witt(vector_text, f, "--vector"))) << "\n";
      } else if (*wint) {
        if (!m) throw Usage("--m is required for from-int");
        if (e != 1) throw Usage("from-int works over the prime field only");
        if (m > kMaxWittLength) throw Usage("--m must be at most 3");
        std::cout << witt_from_integer(f, m, integer).to_string() << "\n";
      }
      return 0;
    }
    if (*par) {
      std::optional<Composition> comp;
      try {
        comp.emplace(parse_size_list(comp_text));
      } catch (const std::exception& err) {
        throw Usage(std::string("--comp: ") + err.what());
      }
      if (*peps) {
        FpMatrix x = read_matrix(matrix_path);
        if (x.size() != comp->dimension()) throw Usage("--comp does not match the matrix dimension");
        print_matrix(eps_P(ParabolicGL{*comp, x.field()}, x));
      } else {
        Field f = make_field(p ? p : 2, 1);
        ParabolicGL parabolic{*comp, f};
        std::size_t cls = nilpotence_class(parabolic);
        std::cout << cls << "\n";
        if (p) std::cout << (cls < p ? "restricted" : "not restricted") << "\n";
      }
      return 0;
    }
    if (*ver) {
      if (list_suites) {
        for (const auto& def : suite_registry()) std::cout << def.name << "\t" << def.anchor << "\n";
        return 0;
      }
      SuiteConfig cfg;
      std::stringstream ss(suite_text);
      for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) cfg.suites.push_back(tok);
      cfg.primes = split_list<std::uint32_t>(primes_text, "--p");
      if (!kinds_text.empty()) {
        cfg.kinds.clear();
        cfg.kinds_explicit = true;
        std::stringstream ks(kinds_text);
        for (std::string tok; std::getline(ks, tok, ',');) {
          try {
            cfg.kinds.push_back(parse_group_kind(tok));
          } catch (const std::invalid_argument& err) {
            throw Usage(std::string("--kinds: ") + err.what());
          }
        }
      }
      cfg.trials = trials;
      cfg.max_dim = max_dim;
      cfg.seed = seed;
      cfg.report_path = report_path;
      Report report = run_suite(cfg);
      report.timestamp = now_utc();
      for (const auto& s : report.suites)
        std::cout << (s.failed ? "FAIL " : "ok   ") << s.name << "  " << s.passed << "/" << s.cases << "\n";
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw Usage("cannot write report to '" + report_path + "'");
        out << report.to_json().dump(2) << "\n";
      }
      return report.all_passed() ? 0 : kExitFail;
    }
  } catch (const Usage& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFail;
  }
  return 0;
}

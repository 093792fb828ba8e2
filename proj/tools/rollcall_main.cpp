// Command-line front end: compute influence, verify structural properties,
// sweep combinatorial identities, and handle continuous-game limits.
// Exit codes: 0 all requested work passed, 1 a verification check failed,
// 2 usage or input errors (including enumeration guards).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rollcall/axioms.hpp"
#include "rollcall/classic.hpp"
#include "rollcall/combinatorics.hpp"
#include "rollcall/continuous.hpp"
#include "rollcall/errors.hpp"
#include "rollcall/game.hpp"
#include "rollcall/game_io.hpp"
#include "rollcall/generators.hpp"
#include "rollcall/rng.hpp"
#include "rollcall/rollcall.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write file: " + out_path);
  }
  out << text;
}

// CLI-level distribution resolution: the explicit form names a JSON file,
// everything else is an inline spec.
rollcall::VoteDistribution resolve_distribution(const std::string& spec, int n,
                                                int j) {
  if (spec.starts_with("explicit:")) {
    return rollcall::parse_explicit_distribution(read_file(spec.substr(9)), n,
                                                 j);
  }
  return rollcall::parse_distribution(spec, n, j);
}

struct ComputeArgs {
  std::string game_file;
  std::string method;
  std::string dist = "uniform";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::string out_file;
  int threads = 1;
};

int run_compute(const ComputeArgs& args) {
  const rollcall::GameTable g = rollcall::parse_game(read_file(args.game_file));
  rollcall::ResultReport report;
  report.game = g;
  report.method = args.method;

  if (args.method == "swings") {
    if (args.dist != "uniform") {
      throw std::invalid_argument(
          "method 'swings' is distribution-free; drop --dist");
    }
    report.phi = rollcall::ssi_swings(g);
  } else {
    const rollcall::VoteDistribution dist =
        resolve_distribution(args.dist, g.n(), g.j());
    report.distribution = dist.describe();
    if (args.method == "exact") {
      if (dist.kind() == rollcall::VoteDistribution::Kind::Uniform) {
        rollcall::ExactInfluence res = rollcall::phi_exact(g);
        report.phi = std::move(res.phi);
        report.counts = std::move(res.counts);
        report.denominator = res.denominator;
      } else {
        report.phi = rollcall::phi_weighted(g, dist);
      }
    } else {  // montecarlo
      report.mc = rollcall::phi_montecarlo(g, dist, args.samples, args.seed,
                                           args.threads);
    }
  }
  write_output(rollcall::render_report(report), args.out_file);
  return 0;
}

struct VerifyArgs {
  std::string game_file;
  bool axioms = false;
  bool theorem_main = false;
  bool key_lemma = false;
  bool extreme_lemma = false;
  int trials = 10;
  std::uint64_t seed = 1;
};

// Relabelings used for the sampled anonymity and transfer checks: identity,
// full reversal, and a few seeded shuffles.
std::vector<rollcall::CallOrder> sample_relabelings(int n,
                                                    std::uint64_t seed) {
  std::vector<rollcall::CallOrder> out;
  out.push_back(rollcall::CallOrder::identity(n));
  rollcall::CallOrder rev = rollcall::CallOrder::identity(n);
  std::reverse(rev.seq.begin(), rev.seq.end());
  out.push_back(rev);
  rollcall::Rng rng(seed);
  for (int t = 0; t < 3; ++t) {
    rollcall::CallOrder sigma = rollcall::CallOrder::identity(n);
    rng.shuffle(sigma.seq);
    out.push_back(sigma);
  }
  return out;
}

int run_verify(const VerifyArgs& args) {
  const rollcall::GameTable g = rollcall::parse_game(read_file(args.game_file));
  if (!(args.axioms || args.theorem_main || args.key_lemma ||
        args.extreme_lemma)) {
    throw std::invalid_argument(
        "verify: request at least one of --axioms, --theorem-main, "
        "--key-lemma, --extreme-lemma");
  }

  bool any_fail = false;
  const auto line = [&](const std::string& name, bool ok) {
    std::cout << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) any_fail = true;
  };
  const auto skip = [](const std::string& name, const std::string& why) {
    std::cout << name << ": skipped (" << why << ")\n";
  };

  if (args.axioms) {
    if (rollcall::image_size(g) >= 2) {
      line("efficiency", rollcall::check_efficiency(g));
    } else {
      skip("efficiency", "constant game, influence is identically zero");
    }

    bool anon_ok = true;
    for (const auto& sigma : sample_relabelings(g.n(), args.seed)) {
      anon_ok = anon_ok && rollcall::check_anonymity(g, sigma);
    }
    line("anonymity", anon_ok);

    line("null-player-extension", rollcall::check_null_player_extension(g));

    if (rollcall::transfer_admissible(g)) {
      bool found = false;
      for (const auto& sigma : sample_relabelings(g.n(), args.seed + 1)) {
        const rollcall::GameTable w = rollcall::permute_game(g, sigma);
        if (!rollcall::transfer_pair_admissible(g, w)) continue;
        found = true;
        line("transfer", rollcall::check_transfer(g, w));
        break;
      }
      if (!found) skip("transfer", "no admissible partner among relabelings");
    } else {
      skip("transfer", "game is outside the admissible class");
    }

    if (g.k() == 2 && rollcall::is_monotonic(g) && rollcall::is_surjective(g)) {
      const auto direct = rollcall::phi_exact(g).phi;
      const auto rebuilt = rollcall::recursive_phi_via_transfer(g);
      line("transfer-recursion", direct == rebuilt);
    } else {
      skip("transfer-recursion", "needs a monotone surjective two-output game");
    }
  }

  if (args.theorem_main) {
    if (g.j() != 2 || g.k() != 2 || !rollcall::is_monotonic(g)) {
      throw std::invalid_argument(
          "--theorem-main needs a monotone game with j = k = 2");
    }
    const auto classic = rollcall::ssi_swings(g);
    bool ok = rollcall::phi_exact(g).phi == classic;
    rollcall::Rng rng(args.seed);
    for (int t = 0; ok && t < args.trials; ++t) {
      const auto dist = rollcall::random_anonymous_distribution(g.n(), rng);
      ok = rollcall::phi_weighted(g, dist) == classic;
    }
    line("order-free-influence", ok);
  }

  if (args.key_lemma) {
    line("pivot-count-lemma", rollcall::verify_key_lemma(g));
  }

  if (args.extreme_lemma) {
    line("extreme-profile-lemma", rollcall::verify_extreme_profile_lemma(g));
  }

  return any_fail ? 1 : 0;
}

struct IdentityArgs {
  std::string lemma;
  int max_n = 25;
};

int run_identity(const IdentityArgs& args) {
  using rollcall::BigInt;
  long cases = 0;

  if (args.lemma == "vandermonde") {
    for (long n = 1; n <= args.max_n; ++n) {
      for (long h = 1; h <= n; ++h) {
        for (long s = 0; s <= h - 1; ++s) {
          const BigInt lhs = rollcall::vandermonde_sum(n, h, s);
          const BigInt rhs = rollcall::binomial(n, h);
          ++cases;
          if (lhs != rhs) {
            std::cout << "counterexample at n=" << n << " h=" << h
                      << " s=" << s << ": sum=" << lhs.get_str()
                      << " binomial=" << rhs.get_str() << "\n";
            return 1;
          }
        }
      }
    }
    std::cout << "vandermonde: " << cases << " cases verified up to n="
              << args.max_n << "\n";
    return 0;
  }

  if (args.lemma == "split") {
    for (long n = 1; n <= args.max_n; ++n) {
      const BigInt power = BigInt(1) << static_cast<unsigned>(n);
      for (long s = 0; s <= n - 1; ++s) {
        const auto sides = rollcall::split_identity(n, s);
        ++cases;
        if (sides.total != power) {
          std::cout << "counterexample at n=" << n << " s=" << s
                    << ": total=" << sides.total.get_str() << " expected 2^n="
                    << power.get_str() << "\n";
          return 1;
        }
        // Closed forms for the first few s values.
        BigInt expect_first(-1);
        if (s == 0) expect_first = power - 1;
        if (s == 1) expect_first = power - n - 1;
        if (s == 2) expect_first = power - BigInt(n * n + n + 2) / 2;
        if (expect_first >= 0 && sides.first != expect_first) {
          std::cout << "counterexample at n=" << n << " s=" << s
                    << ": first=" << sides.first.get_str() << " expected "
                    << expect_first.get_str() << "\n";
          return 1;
        }
      }
    }
    std::cout << "split: " << cases << " cases verified up to n=" << args.max_n
              << "\n";
    return 0;
  }

  if (args.lemma == "uniform-counts") {
    for (long n = 1; n <= args.max_n; ++n) {
      const BigInt power = BigInt(1) << static_cast<unsigned>(n);
      for (long s = 0; s <= n - 1; ++s) {
        const auto counts = rollcall::direct_uniform_counts(n, s);
        const auto sides = rollcall::split_identity(n, s);
        const BigInt orders = rollcall::factorial(static_cast<unsigned long>(s)) *
                              rollcall::factorial(
                                  static_cast<unsigned long>(n - s - 1));
        ++cases;
        if (counts.high_level != orders * sides.first ||
            counts.low_level != orders * sides.second ||
            counts.total != orders * power) {
          std::cout << "counterexample at n=" << n << " s=" << s << "\n";
          return 1;
        }
      }
    }
    std::cout << "uniform-counts: " << cases << " cases verified up to n="
              << args.max_n << "\n";
    return 0;
  }

  throw std::invalid_argument("unknown lemma '" + args.lemma +
                              "' (expected vandermonde, split, or "
                              "uniform-counts)");
}

struct ContinuousArgs {
  std::string family;
  std::string spec_file;
  std::string method;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::string out_file;
  int threads = 1;
};

int run_continuous(const ContinuousArgs& args) {
  const rollcall::ContinuousDocument doc =
      rollcall::parse_continuous_document(read_file(args.spec_file));
  if (!args.family.empty() && args.family != doc.family) {
    throw std::invalid_argument("--family " + args.family +
                                " does not match the file's family '" +
                                doc.family + "'");
  }

  rollcall::ResultReport report;
  report.family = doc.family;
  report.players = doc.game.players();
  report.method = args.method == "mc" ? "montecarlo" : "exact";

  if (args.method == "exact") {
    if (doc.density) {
      throw std::invalid_argument(
          "density weighting is Monte-Carlo only; use --method mc");
    }
    if (doc.family == "separable") {
      report.phi =
          rollcall::phi_separable(std::get<rollcall::SeparableSum>(
              doc.game.form()));
    } else if (doc.family == "polynomial") {
      report.phi = rollcall::phi_polynomial_exact(
          std::get<rollcall::PolynomialGame>(doc.game.form()));
    } else {
      throw std::invalid_argument(
          "the median family has no exact path; use --method mc");
    }
  } else {
    report.mc = rollcall::phi_continuous_mc(doc.game, doc.density,
                                            args.samples, args.seed,
                                            args.threads);
    if (doc.density) {
      const rollcall::Rational mass = doc.density->total_mass();
      const double m = mass.get_d();
      std::vector<double> normalized = report.mc->phi;
      for (double& x : normalized) x /= m;
      report.phi_normalized = std::move(normalized);
      report.density_mass = mass;
    }
  }

  write_output(rollcall::render_report(report), args.out_file);
  return 0;
}

struct DiscretizeArgs {
  std::string family;
  std::string spec_file;
  int levels = 0;
  std::string out_file;
};

int run_discretize(const DiscretizeArgs& args) {
  const rollcall::ContinuousDocument doc =
      rollcall::parse_continuous_document(read_file(args.spec_file));
  if (!args.family.empty() && args.family != doc.family) {
    throw std::invalid_argument("--family " + args.family +
                                " does not match the file's family '" +
                                doc.family + "'");
  }
  const rollcall::GameTable table = rollcall::discretize(doc.game, args.levels);
  write_output(rollcall::serialize_game(table), args.out_file);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Roll-call influence for ordered voting games: exact rational "
      "computation, structural verification, and continuous limits"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute =
      app.add_subcommand("compute", "Influence of a finite game");
  compute->add_option("--game", compute_args.game_file, "Game document (JSON)")
      ->required();
  compute
      ->add_option("--method", compute_args.method,
                   "exact | swings | montecarlo")
      ->required()
      ->check(CLI::IsMember({"exact", "swings", "montecarlo"}));
  compute->add_option(
      "--dist", compute_args.dist,
      "uniform | iid:p1,...,pj | anon:q0,...,qn | explicit:FILE");
  compute->add_option("--samples", compute_args.samples,
                      "Monte-Carlo sample count");
  compute->add_option("--seed", compute_args.seed, "Monte-Carlo seed");
  compute->add_option("--out", compute_args.out_file,
                      "Write the report here instead of stdout");
  compute->add_option("--threads", compute_args.threads,
                      "Worker thread cap for Monte-Carlo runs");

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "Structural checks on a game");
  verify->add_option("--game", verify_args.game_file, "Game document (JSON)")
      ->required();
  verify->add_flag("--axioms", verify_args.axioms,
                   "Efficiency, anonymity, null players, transfer");
  verify->add_flag("--theorem-main", verify_args.theorem_main,
                   "Influence matches the classic swing index on monotone "
                   "two-level games, for every sampled anonymous distribution");
  verify->add_flag("--key-lemma", verify_args.key_lemma,
                   "Swing counts match direct pivot counts per high-vote "
                   "count");
  verify->add_flag("--extreme-lemma", verify_args.extreme_lemma,
                   "All-high and all-low profile averages reproduce the "
                   "swing index");
  verify->add_option("--trials", verify_args.trials,
                     "Random distributions tried by --theorem-main");
  verify->add_option("--seed", verify_args.seed, "Seed for sampled checks");

  IdentityArgs identity_args;
  CLI::App* identity =
      app.add_subcommand("identity", "Exhaustive combinatorial identities");
  identity
      ->add_option("--lemma", identity_args.lemma,
                   "vandermonde | split | uniform-counts")
      ->required();
  identity->add_option("--max-n", identity_args.max_n, "Upper bound on n")
      ->check(CLI::Range(1, 2000));

  ContinuousArgs continuous_args;
  CLI::App* continuous =
      app.add_subcommand("continuous", "Influence of a continuous game");
  continuous
      ->add_option("--family", continuous_args.family,
                   "separable | polynomial | median (cross-checked against "
                   "the document)")
      ->check(CLI::IsMember({"separable", "polynomial", "median"}));
  continuous
      ->add_option("--spec", continuous_args.spec_file,
                   "Continuous-game document (JSON)")
      ->required();
  continuous->add_option("--method", continuous_args.method, "exact | mc")
      ->required()
      ->check(CLI::IsMember({"exact", "mc"}));
  continuous->add_option("--samples", continuous_args.samples,
                         "Monte-Carlo sample count");
  continuous->add_option("--seed", continuous_args.seed, "Monte-Carlo seed");
  continuous->add_option("--out", continuous_args.out_file,
                         "Write the report here instead of stdout");
  continuous->add_option("--threads", continuous_args.threads,
                         "Worker thread cap for Monte-Carlo runs");

  DiscretizeArgs discretize_args;
  CLI::App* discretize = app.add_subcommand(
      "discretize", "Snapshot a continuous game onto a finite grid");
  discretize
      ->add_option("--family", discretize_args.family,
                   "separable | polynomial | median (cross-checked against "
                   "the document)")
      ->check(CLI::IsMember({"separable", "polynomial", "median"}));
  discretize
      ->add_option("--spec", discretize_args.spec_file,
                   "Continuous-game document (JSON)")
      ->required();
  discretize
      ->add_option("--levels", discretize_args.levels,
                   "Grid levels per player (j >= 2)")
      ->required()
      ->check(CLI::Range(2, 1000000));
  discretize->add_option("--out", discretize_args.out_file,
                         "Write the game document here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return run_compute(compute_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (identity->parsed()) return run_identity(identity_args);
    if (continuous->parsed()) return run_continuous(continuous_args);
    if (discretize->parsed()) return run_discretize(discretize_args);
  } catch (const rollcall::enumeration_guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

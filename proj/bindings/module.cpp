// Python bindings for the roll-call influence library. Exact rationals cross
// the boundary as fractions.Fraction (built from lowest-terms strings), big
// integers as Python ints, so nothing is rounded on the way out.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

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

namespace py = pybind11;

namespace {

using rollcall::BigInt;
using rollcall::Rational;

py::object to_fraction(const Rational& r) {
  static py::object fraction_type =
      py::module_::import("fractions").attr("Fraction");
  return fraction_type(rollcall::fraction_string(r));
}

py::list to_fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& r : v) out.append(to_fraction(r));
  return out;
}

py::object to_pyint(const BigInt& z) {
  const std::string digits = z.get_str();
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(digits.c_str(), nullptr, 10));
}

// Accept int, str ("3/4"), or fractions.Fraction; anything whose str() form
// is an integer or a fraction parses. Floats are rejected to keep the exact
// path exact.
Rational to_rational(const py::object& obj) {
  if (py::isinstance<py::float_>(obj)) {
    throw std::invalid_argument(
        "expected an exact value (int, 'p/q' string, or Fraction), got a "
        "float");
  }
  return rollcall::parse_rational(py::cast<std::string>(py::str(obj)));
}

std::vector<Rational> to_rationals(const py::sequence& seq) {
  std::vector<Rational> out;
  out.reserve(seq.size());
  for (py::handle item : seq) {
    out.push_back(to_rational(py::reinterpret_borrow<py::object>(item)));
  }
  return out;
}

rollcall::CallOrder to_order(const std::vector<int>& seq) {
  rollcall::CallOrder order{seq};
  if (!order.valid()) {
    throw std::invalid_argument("call order must be a permutation of 1..n");
  }
  return order;
}

rollcall::VoteDistribution to_distribution(const py::object& spec, int n,
                                           int j) {
  if (py::isinstance<rollcall::VoteDistribution>(spec)) {
    return py::cast<rollcall::VoteDistribution>(spec);
  }
  if (py::isinstance<py::str>(spec)) {
    return rollcall::parse_distribution(py::cast<std::string>(spec), n, j);
  }
  throw std::invalid_argument(
      "distribution must be a Distribution or a spec string");
}

py::dict exact_result(const rollcall::ExactInfluence& res) {
  py::dict out;
  out["phi"] = to_fractions(res.phi);
  py::list counts;
  for (const auto& c : res.counts) counts.append(to_pyint(c));
  out["counts"] = counts;
  out["denominator"] = to_pyint(res.denominator);
  out["image_size"] = res.image_size;
  out["path"] = res.path_used == rollcall::ExactPath::IntervalTracking
                    ? "interval"
                    : "general";
  return out;
}

py::dict mc_result(const rollcall::McInfluence& res) {
  py::dict out;
  out["phi"] = res.phi;
  out["std_error"] = res.std_error;
  out["samples"] = res.samples;
  out["seed"] = res.seed;
  out["range_violations"] = res.range_violations;
  return out;
}

rollcall::UnivariatePolynomial to_univariate(const py::sequence& coeffs) {
  return rollcall::UnivariatePolynomial(to_rationals(coeffs));
}

std::vector<rollcall::UnivariatePolynomial> to_univariate_list(
    const py::sequence& lists) {
  std::vector<rollcall::UnivariatePolynomial> out;
  out.reserve(lists.size());
  for (py::handle item : lists) {
    out.push_back(to_univariate(py::cast<py::sequence>(item)));
  }
  return out;
}

rollcall::RationalPolynomial to_polynomial(
    int players, const std::vector<std::pair<py::object, std::vector<unsigned>>>&
                     terms) {
  rollcall::RationalPolynomial poly(players);
  for (const auto& [coeff, expo] : terms) {
    if (static_cast<int>(expo.size()) != players) {
      throw std::invalid_argument(
          "each term needs one exponent per player");
    }
    poly = poly + rollcall::RationalPolynomial::monomial(players, expo,
                                                         to_rational(coeff));
  }
  return poly;
}

std::optional<rollcall::DensitySpec> to_density(const py::object& densities) {
  if (densities.is_none()) return std::nullopt;
  rollcall::DensitySpec spec;
  spec.densities = to_univariate_list(py::cast<py::sequence>(densities));
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Roll-call influence for ordered voting games: exact rational "
      "computation, structural verification, and continuous limits";
  m.attr("__version__") = "1.0.0";

  py::register_exception<rollcall::enumeration_guard_error>(
      m, "EnumerationGuardError", PyExc_RuntimeError);

  // --- finite games ---

  py::class_<rollcall::GameTable>(m, "Game",
                                  "An ordered voting game: a map from "
                                  "{1..j}^n profiles to output levels 1..k")
      .def(py::init<int, int, int, std::vector<int>>(), py::arg("n"),
           py::arg("j"), py::arg("k"), py::arg("values"),
           "Build from a flat table; entry index is sum (a_i - 1) * j^(i-1)")
      .def_property_readonly("n", &rollcall::GameTable::n)
      .def_property_readonly("j", &rollcall::GameTable::j)
      .def_property_readonly("k", &rollcall::GameTable::k)
      .def_property_readonly("values", &rollcall::GameTable::values)
      .def("value", &rollcall::GameTable::value, py::arg("profile"),
           "Output level for a profile of 1-based input levels")
      .def("fingerprint", &rollcall::game_fingerprint)
      .def("__eq__",
           [](const rollcall::GameTable& a, const rollcall::GameTable& b) {
             return a == b;
           })
      .def("__repr__", [](const rollcall::GameTable& g) {
        return "Game(n=" + std::to_string(g.n()) +
               ", j=" + std::to_string(g.j()) +
               ", k=" + std::to_string(g.k()) + ")";
      });

  m.def("game_from_min_winning", &rollcall::game_from_min_winning,
        py::arg("n"), py::arg("j"), py::arg("minimal"),
        py::arg("max_entries") = rollcall::kMaxTableEntries,
        "Monotone (j,2) game from an antichain of minimal winning vectors");
  m.def("game_from_weighted", &rollcall::game_from_weighted, py::arg("quota"),
        py::arg("weights"),
        py::arg("max_entries") = rollcall::kMaxTableEntries,
        "Weighted majority game [quota; weights] as a (2,2) game");
  m.def("constant_game", &rollcall::constant_game, py::arg("n"), py::arg("j"),
        py::arg("k"), py::arg("value"));

  m.def("is_monotonic", &rollcall::is_monotonic);
  m.def("image_size", &rollcall::image_size);
  m.def("is_surjective", &rollcall::is_surjective);
  m.def("is_null_player", &rollcall::is_null_player, py::arg("game"),
        py::arg("player"));
  m.def("are_equivalent", &rollcall::are_equivalent, py::arg("game"),
        py::arg("i"), py::arg("h"));
  m.def(
      "is_output_rough",
      [](const rollcall::GameTable& g) { return rollcall::is_output_rough(g); },
      "True iff every partial assignment reaches a contiguous output range");
  m.def("minimal_winning_vectors", &rollcall::minimal_winning_vectors);
  m.def("maximal_losing_vectors", &rollcall::maximal_losing_vectors);
  m.def("join_games", &rollcall::join, "Pointwise maximum of two games");
  m.def("meet_games", &rollcall::meet, "Pointwise minimum of two games");
  m.def(
      "permute_game",
      [](const rollcall::GameTable& g, const std::vector<int>& sigma) {
        return rollcall::permute_game(g, to_order(sigma));
      },
      py::arg("game"), py::arg("sigma"),
      "Relabeled game; influence transports as phi_{sigma(i)}(sigma v) = "
      "phi_i(v)");
  m.def(
      "add_null_player",
      [](const rollcall::GameTable& g) { return rollcall::add_null_player(g); },
      "Same game with an extra ignored last player");
  m.def("parse_game", &rollcall::parse_game, py::arg("text"),
        "Game from a JSON document (values, min_winning, or weighted body)");
  m.def("serialize_game", &rollcall::serialize_game,
        "Canonical JSON document for a game (full-values body)");

  // --- distributions ---

  py::class_<rollcall::VoteDistribution>(m, "Distribution",
                                         "Probability distribution over vote "
                                         "profiles with exact rational masses")
      .def("describe", &rollcall::VoteDistribution::describe);

  m.def("uniform_distribution", &rollcall::VoteDistribution::uniform);
  m.def(
      "iid_distribution",
      [](const py::sequence& masses) {
        return rollcall::VoteDistribution::iid_levels(to_rationals(masses));
      },
      py::arg("level_masses"),
      "Players vote independently; level l has the given mass");
  m.def(
      "anonymous_distribution",
      [](const py::sequence& masses) {
        return rollcall::VoteDistribution::anonymous_by_count(
            to_rationals(masses));
      },
      py::arg("per_profile_masses"),
      "j = 2; the mass of each individual profile with h high votes is "
      "entry h (so sum_h C(n,h) * q_h must be 1)");
  m.def(
      "explicit_distribution",
      [](const py::dict& table) {
        std::map<rollcall::VoteProfile, Rational> mass;
        for (const auto& item : table) {
          mass.emplace(
              py::cast<rollcall::VoteProfile>(item.first),
              to_rational(py::reinterpret_borrow<py::object>(item.second)));
        }
        return rollcall::VoteDistribution::explicit_table(std::move(mass));
      },
      py::arg("profile_masses"),
      "Finite table {profile tuple: mass}; absent profiles have mass zero");
  m.def("parse_distribution", &rollcall::parse_distribution, py::arg("spec"),
        py::arg("n"), py::arg("j"),
        "Inline spec: uniform | iid:p1,...,pj | anon:q0,...,qn");

  // --- roll-call influence ---

  m.def(
      "phi_exact",
      [](const rollcall::GameTable& g, const std::string& path) {
        rollcall::ExactPath p = rollcall::ExactPath::Auto;
        if (path == "interval") p = rollcall::ExactPath::IntervalTracking;
        else if (path == "general") p = rollcall::ExactPath::GeneralCounting;
        else if (path != "auto") {
          throw std::invalid_argument(
              "path must be 'auto', 'interval', or 'general'");
        }
        return exact_result(rollcall::phi_exact(g, p));
      },
      py::arg("game"), py::arg("path") = "auto",
      "Exact uniform-distribution influence: dict with phi (Fractions), "
      "counts, denominator, image_size, path");
  m.def(
      "phi_weighted",
      [](const rollcall::GameTable& g, const py::object& dist) {
        return to_fractions(
            rollcall::phi_weighted(g, to_distribution(dist, g.n(), g.j())));
      },
      py::arg("game"), py::arg("distribution"),
      "Exact influence with profiles drawn from the given distribution");
  m.def(
      "phi_montecarlo",
      [](const rollcall::GameTable& g, const py::object& dist,
         std::uint64_t samples, std::uint64_t seed, int threads) {
        return mc_result(rollcall::phi_montecarlo(
            g, to_distribution(dist, g.n(), g.j()), samples, seed, threads));
      },
      py::arg("game"), py::arg("distribution"), py::arg("samples"),
      py::arg("seed"), py::arg("threads") = 1,
      "Monte-Carlo influence estimate; byte-reproducible for a fixed seed "
      "regardless of thread count");
  m.def(
      "tau",
      [](const rollcall::GameTable& g, const std::vector<int>& order,
         const rollcall::VoteProfile& a, int position) {
        return rollcall::tau(g, to_order(order), a, position);
      },
      py::arg("game"), py::arg("order"), py::arg("profile"),
      py::arg("position"),
      "Uncertainty removed by the declaration at the given call position");
  m.def(
      "reachable_outputs",
      [](const rollcall::GameTable& g, const std::vector<int>& order,
         const rollcall::VoteProfile& a, int declared) {
        return rollcall::reachable_outputs(g, to_order(order), a, declared)
            .outputs;
      },
      py::arg("game"), py::arg("order"), py::arg("profile"),
      py::arg("declared"),
      "Outputs still possible after the first `declared` callers spoke");

  // --- classic swing index and finite lemmas ---

  m.def(
      "ssi_swings",
      [](const rollcall::GameTable& g) {
        return to_fractions(rollcall::ssi_swings(g));
      },
      "Classic coalition-form index from signed swings (j = 2 games)");
  m.def("swings", &rollcall::swings, py::arg("game"), py::arg("player"),
        "Coalitions (sorted member lists) the player swings from losing to "
        "winning");
  m.def(
      "extreme_profile_average",
      [](const rollcall::GameTable& g, int level) {
        return to_fractions(rollcall::extreme_profile_average(g, level));
      },
      py::arg("game"), py::arg("level"));
  m.def("verify_extreme_profile_lemma", &rollcall::verify_extreme_profile_lemma);
  m.def(
      "key_lemma_sides",
      [](const rollcall::GameTable& g, int player, int h) {
        const auto sides = rollcall::key_lemma_sides(g, player, h);
        return py::make_tuple(to_pyint(sides.lhs), to_pyint(sides.rhs));
      },
      py::arg("game"), py::arg("player"), py::arg("h"),
      "Both sides of the swing/pivot counting identity");
  m.def(
      "verify_key_lemma",
      [](const rollcall::GameTable& g) { return rollcall::verify_key_lemma(g); },
      "Swing/pivot counting identity for all players and high-vote counts");

  // --- structural properties ---

  m.def(
      "check_efficiency",
      [](const rollcall::GameTable& g) { return rollcall::check_efficiency(g); });
  m.def(
      "check_anonymity",
      [](const rollcall::GameTable& g, const std::vector<int>& sigma) {
        return rollcall::check_anonymity(g, to_order(sigma));
      },
      py::arg("game"), py::arg("sigma"));
  m.def(
      "check_null_player_extension",
      [](const rollcall::GameTable& g) {
        return rollcall::check_null_player_extension(g);
      });
  m.def("transfer_admissible", &rollcall::transfer_admissible,
        "Monotone, surjective, output-rough, at least two outputs");
  m.def("transfer_pair_admissible", &rollcall::transfer_pair_admissible);
  m.def(
      "check_transfer",
      [](const rollcall::GameTable& u, const rollcall::GameTable& w) {
        return rollcall::check_transfer(u, w);
      },
      py::arg("u"), py::arg("w"),
      "phi(join) + phi(meet) == phi(u) + phi(w), exactly");
  m.def(
      "recursive_phi_via_transfer",
      [](const rollcall::GameTable& g) {
        return to_fractions(rollcall::recursive_phi_via_transfer(g));
      },
      "Influence rebuilt from the transfer identity over minimal winning "
      "vectors");

  // --- combinatorial identities ---

  m.def(
      "binomial",
      [](long n, long k) { return to_pyint(rollcall::binomial(n, k)); },
      py::arg("n"), py::arg("k"));
  m.def(
      "vandermonde_sum",
      [](long n, long h, long s) {
        return to_pyint(rollcall::vandermonde_sum(n, h, s));
      },
      py::arg("n"), py::arg("h"), py::arg("s"),
      "Telescoping binomial sum; equals C(n, h)");
  m.def(
      "split_identity",
      [](long n, long s) {
        const auto sides = rollcall::split_identity(n, s);
        return py::make_tuple(to_pyint(sides.first), to_pyint(sides.second),
                              to_pyint(sides.total));
      },
      py::arg("n"), py::arg("s"),
      "(first, second, total) with first + second == 2^n");
  m.def(
      "direct_uniform_counts",
      [](long n, long s) {
        const auto counts = rollcall::direct_uniform_counts(n, s);
        return py::make_tuple(to_pyint(counts.high_level),
                              to_pyint(counts.low_level),
                              to_pyint(counts.total));
      },
      py::arg("n"), py::arg("s"));

  // --- random instances ---

  m.def(
      "random_monotonic_game",
      [](int n, int j, int k, std::uint64_t seed, bool surjective,
         bool output_rough) {
        rollcall::Rng rng(seed);
        rollcall::GameGenOptions options;
        options.surjective = surjective;
        options.output_rough = output_rough;
        return rollcall::random_monotonic_game(n, j, k, rng, options);
      },
      py::arg("n"), py::arg("j"), py::arg("k"), py::arg("seed"),
      py::arg("surjective") = true, py::arg("output_rough") = false);

  // --- continuous games ---

  py::class_<rollcall::ContinuousGame>(m, "ContinuousGame",
                                       "A game on [0,1]^n built by one of "
                                       "the factory functions")
      .def_property_readonly("players", &rollcall::ContinuousGame::players)
      .def("evaluate", py::overload_cast<const std::vector<double>&>(
                           &rollcall::ContinuousGame::evaluate, py::const_));

  m.def(
      "separable_game",
      [](const py::sequence& weights, const py::object& links) {
        rollcall::SeparableSum g;
        g.weights = to_rationals(weights);
        if (!links.is_none()) {
          g.links = to_univariate_list(py::cast<py::sequence>(links));
        }
        return rollcall::ContinuousGame(std::move(g));
      },
      py::arg("weights"), py::arg("links") = py::none(),
      "v(x) = sum w_i * f_i(x_i); links are coefficient lists (ascending "
      "degree), default identity");
  m.def(
      "polynomial_game",
      [](int players,
         const std::vector<std::pair<py::object, std::vector<unsigned>>>&
             terms) {
        return rollcall::ContinuousGame(
            rollcall::PolynomialGame{to_polynomial(players, terms)});
      },
      py::arg("players"), py::arg("terms"),
      "Terms are (coeff, exponents) pairs; must map the cube into [0,1]");
  m.def(
      "median_game",
      [](int players) {
        return rollcall::ContinuousGame(rollcall::MedianGame{players});
      },
      py::arg("players"), "v(x) = median coordinate; odd player count");

  m.def(
      "phi_separable",
      [](const py::sequence& weights, const py::object& links) {
        rollcall::SeparableSum g;
        g.weights = to_rationals(weights);
        if (!links.is_none()) {
          g.links = to_univariate_list(py::cast<py::sequence>(links));
        }
        return to_fractions(rollcall::phi_separable(g));
      },
      py::arg("weights"), py::arg("links") = py::none(),
      "Closed-form influence of a separable sum: the weight vector");
  m.def(
      "phi_polynomial_exact",
      [](int players,
         const std::vector<std::pair<py::object, std::vector<unsigned>>>&
             terms) {
        return to_fractions(rollcall::phi_polynomial_exact(
            rollcall::PolynomialGame{to_polynomial(players, terms)}));
      },
      py::arg("players"), py::arg("terms"),
      "Exact influence of a polynomial game, averaging per-order bracket "
      "integrals");
  m.def(
      "phi_continuous_mc",
      [](const rollcall::ContinuousGame& game, std::uint64_t samples,
         std::uint64_t seed, int threads, const py::object& densities) {
        return mc_result(rollcall::phi_continuous_mc(
            game, to_density(densities), samples, seed, threads));
      },
      py::arg("game"), py::arg("samples"), py::arg("seed"),
      py::arg("threads") = 1, py::arg("densities") = py::none(),
      "Monte-Carlo influence; optional per-player densities weight each "
      "draw with no renormalization");
  m.def(
      "discretize",
      [](const rollcall::ContinuousGame& game, int levels) {
        return rollcall::discretize(game, levels);
      },
      py::arg("game"), py::arg("levels"),
      "(j,j) snapshot on the grid (level-1)/(j-1), outputs rounded to the "
      "nearest grid level (ties toward the lower level)");
}

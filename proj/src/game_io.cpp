#include "rollcall/game_io.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

namespace rollcall {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_json(const std::string& text, const std::string& what) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw std::invalid_argument(what + ": not valid JSON");
  }
  return doc;
}

void require_object(const json& doc, const std::string& what) {
  if (!doc.is_object()) {
    throw std::invalid_argument(what + ": expected a JSON object");
  }
}

void reject_unknown_fields(const json& doc, const std::set<std::string>& known,
                           const std::string& what) {
  for (const auto& item : doc.items()) {
    if (!known.contains(item.key())) {
      throw std::invalid_argument(what + ": unknown field '" + item.key() +
                                  "'");
    }
  }
}

long long int_field(const json& doc, const std::string& key,
                    const std::string& what) {
  if (!doc.contains(key)) {
    throw std::invalid_argument(what + ": missing field '" + key + "'");
  }
  const json& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(what + ": field '" + key +
                                "' must be an integer");
  }
  return v.get<long long>();
}

void require_schema(const json& doc, const std::string& what) {
  if (int_field(doc, "schema", what) != 1) {
    throw std::invalid_argument(what + ": unsupported schema version");
  }
}

// Exact masses and coefficients travel as fraction strings ("3/4") or plain
// JSON integers; non-integer JSON numbers are rejected to keep files exact.
Rational rational_field(const json& v, const std::string& what) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(what + ": " + e.what());
    }
  }
  if (v.is_number_integer()) {
    return Rational(static_cast<long>(v.get<long long>()));
  }
  throw std::invalid_argument(
      what + ": expected an integer or a fraction string like \"3/4\"");
}

std::vector<Rational> rational_array(const json& v, const std::string& what) {
  if (!v.is_array()) {
    throw std::invalid_argument(what + ": expected an array");
  }
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const json& item : v) out.push_back(rational_field(item, what));
  return out;
}

VoteProfile profile_field(const json& v, int n, int j,
                          const std::string& what) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) {
    throw std::invalid_argument(what + ": expected an array of " +
                                std::to_string(n) + " levels");
  }
  VoteProfile a;
  a.reserve(v.size());
  for (const json& item : v) {
    if (!item.is_number_integer()) {
      throw std::invalid_argument(what + ": levels must be integers");
    }
    const long long lv = item.get<long long>();
    if (lv < 1 || lv > j) {
      throw std::invalid_argument(what + ": level " + std::to_string(lv) +
                                  " outside 1.." + std::to_string(j));
    }
    a.push_back(static_cast<int>(lv));
  }
  return a;
}

bool dominates(const VoteProfile& a, const VoteProfile& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

int small_positive(long long v, long long lo, const std::string& key,
                   const std::string& what) {
  if (v < lo || v > 1'000'000) {
    throw std::invalid_argument(what + ": field '" + key + "' out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

GameDocument parse_game_document(const std::string& text) {
  static const std::string what = "game document";
  const json doc = parse_json(text, what);
  require_object(doc, what);
  require_schema(doc, what);

  const int bodies = static_cast<int>(doc.contains("values")) +
                     static_cast<int>(doc.contains("min_winning")) +
                     static_cast<int>(doc.contains("weighted"));
  if (bodies != 1) {
    throw std::invalid_argument(
        what + ": need exactly one of 'values', 'min_winning', 'weighted'");
  }

  GameDocument out;
  if (doc.contains("values")) {
    reject_unknown_fields(doc, {"schema", "n", "j", "k", "values"}, what);
    out.body = GameDocument::Body::Values;
    out.n = small_positive(int_field(doc, "n", what), 1, "n", what);
    out.j = small_positive(int_field(doc, "j", what), 2, "j", what);
    out.k = small_positive(int_field(doc, "k", what), 2, "k", what);
    const json& vals = doc.at("values");
    if (!vals.is_array()) {
      throw std::invalid_argument(what + ": 'values' must be an array");
    }
    const std::size_t expect = checked_table_size(out.n, out.j);
    if (vals.size() != expect) {
      throw std::invalid_argument(
          what + ": 'values' has " + std::to_string(vals.size()) +
          " entries, expected j^n = " + std::to_string(expect));
    }
    out.values.reserve(vals.size());
    for (const json& v : vals) {
      if (!v.is_number_integer()) {
        throw std::invalid_argument(what + ": 'values' must hold integers");
      }
      const long long lv = v.get<long long>();
      if (lv < 1 || lv > out.k) {
        throw std::invalid_argument(what + ": output level " +
                                    std::to_string(lv) + " outside 1.." +
                                    std::to_string(out.k));
      }
      out.values.push_back(static_cast<int>(lv));
    }
  } else if (doc.contains("min_winning")) {
    reject_unknown_fields(doc, {"schema", "n", "j", "k", "min_winning"}, what);
    out.body = GameDocument::Body::MinWinning;
    out.n = small_positive(int_field(doc, "n", what), 1, "n", what);
    out.j = small_positive(int_field(doc, "j", what), 2, "j", what);
    out.k = 2;
    if (doc.contains("k") && int_field(doc, "k", what) != 2) {
      throw std::invalid_argument(what +
                                  ": min_winning games always have k = 2");
    }
    const json& vecs = doc.at("min_winning");
    if (!vecs.is_array()) {
      throw std::invalid_argument(what + ": 'min_winning' must be an array");
    }
    for (const json& m : vecs) {
      out.min_winning.push_back(
          profile_field(m, out.n, out.j, what + ": min_winning vector"));
    }
    for (std::size_t x = 0; x < out.min_winning.size(); ++x) {
      for (std::size_t y = 0; y < out.min_winning.size(); ++y) {
        if (x != y && dominates(out.min_winning[x], out.min_winning[y])) {
          throw std::invalid_argument(
              what + ": min_winning vectors must form an antichain");
        }
      }
    }
  } else {
    reject_unknown_fields(doc, {"schema", "weighted"}, what);
    out.body = GameDocument::Body::Weighted;
    const json& w = doc.at("weighted");
    require_object(w, what + ": weighted");
    reject_unknown_fields(w, {"quota", "weights"}, what + ": weighted");
    out.quota = int_field(w, "quota", what + ": weighted");
    if (!w.contains("weights") || !w.at("weights").is_array() ||
        w.at("weights").empty()) {
      throw std::invalid_argument(
          what + ": weighted needs a non-empty 'weights' array");
    }
    for (const json& v : w.at("weights")) {
      if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw std::invalid_argument(
            what + ": weights must be nonnegative integers");
      }
      out.weights.push_back(v.get<long long>());
    }
    out.n = static_cast<int>(out.weights.size());
    out.j = 2;
    out.k = 2;
  }
  return out;
}

GameTable GameDocument::expand(std::size_t max_entries) const {
  switch (body) {
    case Body::Values:
      return GameTable(n, j, k, values, max_entries);
    case Body::MinWinning:
      return game_from_min_winning(n, j, min_winning, max_entries);
    case Body::Weighted:
      return game_from_weighted(quota, weights, max_entries);
  }
  throw std::logic_error("game document: invalid body tag");
}

GameTable parse_game(const std::string& text) {
  return parse_game_document(text).expand();
}

std::string serialize_game(const GameTable& g) {
  ordered_json doc;
  doc["schema"] = 1;
  doc["n"] = g.n();
  doc["j"] = g.j();
  doc["k"] = g.k();
  doc["values"] = g.values();
  return doc.dump() + "\n";
}

namespace {

std::vector<Rational> parse_mass_list(const std::string& csv,
                                      const std::string& what) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    const std::string tok = csv.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_rational(tok));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(what + ": " + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

VoteDistribution parse_distribution(const std::string& spec, int n, int j) {
  if (spec == "uniform") return VoteDistribution::uniform();
  if (spec.starts_with("iid:")) {
    auto dist = VoteDistribution::iid_levels(
        parse_mass_list(spec.substr(4), "iid distribution"));
    dist.validate(n, j);
    return dist;
  }
  if (spec.starts_with("anon:")) {
    auto dist = VoteDistribution::anonymous_by_count(
        parse_mass_list(spec.substr(5), "anonymous distribution"));
    dist.validate(n, j);
    return dist;
  }
  if (spec.starts_with("explicit")) {
    throw std::invalid_argument(
        "explicit distributions live in JSON files; pass the file instead of "
        "an inline spec");
  }
  throw std::invalid_argument(
      "unrecognized distribution '" + spec +
      "' (expected uniform, iid:<masses>, or anon:<masses>)");
}

VoteDistribution parse_explicit_distribution(const std::string& text, int n,
                                             int j) {
  static const std::string what = "explicit distribution";
  const json doc = parse_json(text, what);
  require_object(doc, what);
  require_schema(doc, what);
  reject_unknown_fields(doc, {"schema", "profiles"}, what);
  if (!doc.contains("profiles") || !doc.at("profiles").is_array()) {
    throw std::invalid_argument(what + ": missing 'profiles' array");
  }
  std::map<VoteProfile, Rational> mass;
  for (const json& entry : doc.at("profiles")) {
    require_object(entry, what + ": profile entry");
    reject_unknown_fields(entry, {"profile", "mass"}, what + ": profile entry");
    if (!entry.contains("profile") || !entry.contains("mass")) {
      throw std::invalid_argument(
          what + ": each entry needs 'profile' and 'mass'");
    }
    VoteProfile a = profile_field(entry.at("profile"), n, j, what);
    if (mass.contains(a)) {
      throw std::invalid_argument(what + ": duplicate profile");
    }
    mass.emplace(std::move(a), rational_field(entry.at("mass"), what));
  }
  auto dist = VoteDistribution::explicit_table(std::move(mass));
  dist.validate(n, j);
  return dist;
}

namespace {

UnivariatePolynomial coeff_list_to_polynomial(const json& v,
                                              const std::string& what) {
  return UnivariatePolynomial(rational_array(v, what));
}

std::optional<DensitySpec> parse_densities(const json& doc, int players,
                                           const std::string& what) {
  if (!doc.contains("densities")) return std::nullopt;
  const json& arr = doc.at("densities");
  if (!arr.is_array() || static_cast<int>(arr.size()) != players) {
    throw std::invalid_argument(what + ": 'densities' needs one coefficient "
                                       "list per player");
  }
  DensitySpec spec;
  for (const json& d : arr) {
    spec.densities.push_back(coeff_list_to_polynomial(d, what + ": density"));
  }
  return spec;
}

}  // namespace

ContinuousDocument parse_continuous_document(const std::string& text) {
  static const std::string what = "continuous game document";
  const json doc = parse_json(text, what);
  require_object(doc, what);
  if (doc.contains("schema") && int_field(doc, "schema", what) != 1) {
    throw std::invalid_argument(what + ": unsupported schema version");
  }
  if (!doc.contains("family") || !doc.at("family").is_string()) {
    throw std::invalid_argument(what + ": missing 'family' string");
  }
  const std::string family = doc.at("family").get<std::string>();

  if (family == "separable") {
    reject_unknown_fields(doc, {"schema", "family", "weights", "links",
                                "densities"},
                          what);
    if (!doc.contains("weights")) {
      throw std::invalid_argument(what + ": separable needs 'weights'");
    }
    SeparableSum g;
    g.weights = rational_array(doc.at("weights"), what + ": weights");
    if (doc.contains("links")) {
      const json& links = doc.at("links");
      if (!links.is_array()) {
        throw std::invalid_argument(what + ": 'links' must be an array");
      }
      for (const json& f : links) {
        g.links.push_back(coeff_list_to_polynomial(f, what + ": link"));
      }
    }
    const int players = static_cast<int>(g.weights.size());
    auto density = parse_densities(doc, players, what);
    return ContinuousDocument{family, ContinuousGame(std::move(g)),
                              std::move(density)};
  }

  if (family == "polynomial") {
    reject_unknown_fields(doc, {"schema", "family", "players", "terms",
                                "densities"},
                          what);
    const int players =
        small_positive(int_field(doc, "players", what), 1, "players", what);
    if (!doc.contains("terms") || !doc.at("terms").is_array()) {
      throw std::invalid_argument(what + ": polynomial needs a 'terms' array");
    }
    RationalPolynomial poly(players);
    for (const json& term : doc.at("terms")) {
      require_object(term, what + ": term");
      reject_unknown_fields(term, {"coeff", "exponents"}, what + ": term");
      if (!term.contains("coeff") || !term.contains("exponents")) {
        throw std::invalid_argument(
            what + ": each term needs 'coeff' and 'exponents'");
      }
      const json& expo = term.at("exponents");
      if (!expo.is_array() || static_cast<int>(expo.size()) != players) {
        throw std::invalid_argument(what + ": 'exponents' needs one entry per "
                                           "player");
      }
      std::vector<unsigned> e;
      e.reserve(expo.size());
      for (const json& x : expo) {
        if (!x.is_number_integer() || x.get<long long>() < 0 ||
            x.get<long long>() > 64) {
          throw std::invalid_argument(
              what + ": exponents must be integers in 0..64");
        }
        e.push_back(static_cast<unsigned>(x.get<long long>()));
      }
      poly = poly + RationalPolynomial::monomial(
                        players, std::move(e),
                        rational_field(term.at("coeff"), what + ": coeff"));
    }
    auto density = parse_densities(doc, players, what);
    return ContinuousDocument{family,
                              ContinuousGame(PolynomialGame{std::move(poly)}),
                              std::move(density)};
  }

  if (family == "median") {
    reject_unknown_fields(doc, {"schema", "family", "players", "densities"},
                          what);
    const int players =
        small_positive(int_field(doc, "players", what), 1, "players", what);
    auto density = parse_densities(doc, players, what);
    return ContinuousDocument{family, ContinuousGame(MedianGame{players}),
                              std::move(density)};
  }

  throw std::invalid_argument(
      what + ": unknown family '" + family +
      "' (expected separable, polynomial, or median)");
}

std::string render_report(const ResultReport& report) {
  ordered_json out;
  out["schema"] = 1;

  ordered_json subject;
  if (report.game) {
    subject["kind"] = "game";
    subject["n"] = report.game->n();
    subject["j"] = report.game->j();
    subject["k"] = report.game->k();
    subject["fingerprint"] = game_fingerprint(*report.game);
  } else {
    subject["kind"] = "continuous";
    subject["family"] = report.family;
    subject["players"] = report.players;
  }
  out["subject"] = std::move(subject);
  out["method"] = report.method;
  if (!report.distribution.empty()) {
    out["distribution"] = report.distribution;
  }

  ordered_json influence = ordered_json::array();
  if (report.mc) {
    for (std::size_t i = 0; i < report.mc->phi.size(); ++i) {
      ordered_json row;
      row["player"] = i + 1;
      row["value"] = report.mc->phi[i];
      row["std_error"] = report.mc->std_error[i];
      influence.push_back(std::move(row));
    }
  } else {
    for (std::size_t i = 0; i < report.phi.size(); ++i) {
      ordered_json row;
      row["player"] = i + 1;
      row["fraction"] = fraction_string(report.phi[i]);
      row["decimal"] = decimal_string(report.phi[i]);
      influence.push_back(std::move(row));
    }
  }
  out["influence"] = std::move(influence);

  if (!report.counts.empty()) {
    ordered_json counts = ordered_json::array();
    for (const BigInt& c : report.counts) counts.push_back(c.get_str());
    out["counts"] = std::move(counts);
    out["denominator"] = report.denominator.get_str();
  }
  if (report.mc) {
    out["samples"] = report.mc->samples;
    out["seed"] = report.mc->seed;
    out["range_violations"] = report.mc->range_violations;
  }
  if (report.phi_normalized) {
    out["normalized"] = *report.phi_normalized;
  }
  if (report.density_mass) {
    ordered_json mass;
    mass["fraction"] = fraction_string(*report.density_mass);
    mass["decimal"] = decimal_string(*report.density_mass);
    out["density_mass"] = std::move(mass);
  }
  return out.dump(2) + "\n";
}

}  // namespace rollcall

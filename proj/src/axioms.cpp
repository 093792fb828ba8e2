#include "rollcall/axioms.hpp"

#include <stdexcept>

#include "rollcall/errors.hpp"
#include "rollcall/rollcall.hpp"

namespace rollcall {

namespace {

std::vector<Rational> eval_influence(const InfluenceMap& phi, const GameTable& g) {
  if (phi) return phi(g);
  return phi_exact(g).phi;
}

}  // namespace

bool check_efficiency(const GameTable& g, const InfluenceMap& phi) {
  if (image_size(g) < 2) {
    throw std::domain_error(
        "check_efficiency: constant game (influence is identically zero)");
  }
  Rational total(0);
  for (const auto& v : eval_influence(phi, g)) total += v;
  return total == 1;
}

bool check_anonymity(const GameTable& g, const CallOrder& sigma,
                     const InfluenceMap& phi) {
  const auto direct = eval_influence(phi, g);
  const auto relabeled = eval_influence(phi, permute_game(g, sigma));
  for (int i = 1; i <= g.n(); ++i) {
    if (relabeled[sigma.seq[i - 1] - 1] != direct[i - 1]) return false;
  }
  return true;
}

bool check_null_player_extension(const GameTable& g, const InfluenceMap& phi) {
  const auto before = eval_influence(phi, g);
  const auto after = eval_influence(phi, add_null_player(g));
  for (int i = 0; i < g.n(); ++i) {
    if (after[i] != before[i]) return false;
  }
  return after[g.n()] == 0;
}

bool transfer_admissible(const GameTable& g) {
  return is_monotonic(g) && is_surjective(g) && is_output_rough(g);
}

bool transfer_pair_admissible(const GameTable& u, const GameTable& w) {
  if (u.n() != w.n() || u.j() != w.j() || u.k() != w.k()) return false;
  return transfer_admissible(u) && transfer_admissible(w) &&
         transfer_admissible(join(u, w)) && transfer_admissible(meet(u, w));
}

bool check_transfer(const GameTable& u, const GameTable& w,
                    const InfluenceMap& phi) {
  if (!transfer_pair_admissible(u, w)) {
    throw std::domain_error(
        "check_transfer: pair (or its join/meet) leaves the monotone "
        "surjective output-rough class");
  }
  const auto pu = eval_influence(phi, u);
  const auto pw = eval_influence(phi, w);
  const auto pj = eval_influence(phi, join(u, w));
  const auto pm = eval_influence(phi, meet(u, w));
  for (int i = 0; i < u.n(); ++i) {
    if (pj[i] + pm[i] != pu[i] + pw[i]) return false;
  }
  return true;
}

namespace {

std::vector<Rational> rec_phi(int n, int j,
                              const std::vector<VoteProfile>& vectors,
                              std::size_t max_nodes, std::size_t& nodes) {
  if (++nodes > max_nodes) {
    throw enumeration_guard_error(
        "recursive_phi_via_transfer: expansion exceeded " +
        std::to_string(max_nodes) + " nodes");
  }
  if (vectors.size() == 1) {
    return phi_exact(game_from_min_winning(n, j, vectors)).phi;
  }
  // v = (x1 | ... | x_{l-1}) | y, so by the transfer identity
  // phi(v) = phi(x-part) + phi(y) - phi(x-part & y).
  std::vector<VoteProfile> x(vectors.begin(), vectors.end() - 1);
  std::vector<VoteProfile> y{vectors.back()};
  const GameTable gx = game_from_min_winning(n, j, x);
  const GameTable gy = game_from_min_winning(n, j, y);
  const GameTable gm = meet(gx, gy);

  const auto px = rec_phi(n, j, x, max_nodes, nodes);
  const auto py = rec_phi(n, j, y, max_nodes, nodes);
  const auto pm = rec_phi(n, j, minimal_winning_vectors(gm), max_nodes, nodes);

  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = px[i] + py[i] - pm[i];
  return out;
}

}  // namespace

std::vector<Rational> recursive_phi_via_transfer(const GameTable& g,
                                                 std::size_t max_nodes) {
  if (g.k() != 2) {
    throw std::domain_error("recursive_phi_via_transfer: game must have k == 2");
  }
  if (!is_monotonic(g) || !is_surjective(g)) {
    throw std::domain_error(
        "recursive_phi_via_transfer: game must be monotone and surjective");
  }
  std::size_t nodes = 0;
  return rec_phi(g.n(), g.j(), minimal_winning_vectors(g), max_nodes, nodes);
}

}  // namespace rollcall

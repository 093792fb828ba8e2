"""End-to-end checks of the Python bindings.

Exactness is the point of the library, so the assertions here compare
`fractions.Fraction` values, not floats.
"""

from fractions import Fraction

import pytest

import rollcall


def test_version():
    assert rollcall.__version__ == "1.0.0"


def test_worked_example_exact():
    game = rollcall.game_from_min_winning(3, 4, [[2, 3, 4]])
    result = rollcall.phi_exact(game)
    assert result["phi"] == [
        Fraction(5, 32),
        Fraction(5, 16),
        Fraction(17, 32),
    ]
    assert result["counts"] == [60, 120, 204]
    assert result["denominator"] == 384
    assert result["image_size"] == 2
    assert result["path"] == "interval"
    assert sum(result["phi"]) == 1


def test_game_table_and_weighted_influence():
    game = rollcall.Game(n=2, j=2, k=3, values=[1, 3, 2, 3])
    assert game.value([2, 1]) == 3
    assert game.n == 2 and game.j == 2 and game.k == 3
    assert rollcall.image_size(game) == 3

    # phi_2 = (1 + p1) / 4, exactly, with masses given as Fractions or
    # fraction strings.
    dist = rollcall.iid_distribution([Fraction(1, 4), "3/4"])
    phi = rollcall.phi_weighted(game, dist)
    assert phi == [Fraction(11, 16), Fraction(5, 16)]

    # The general-path and forced-path results agree.
    forced = rollcall.phi_exact(game, path="general")
    auto = rollcall.phi_exact(game)
    assert forced["phi"] == auto["phi"]
    assert auto["path"] == "general"


def test_classic_swing_index_agreement():
    game = rollcall.game_from_weighted(3, [2, 1, 1])
    swings = rollcall.ssi_swings(game)
    assert swings == [Fraction(2, 3), Fraction(1, 6), Fraction(1, 6)]
    assert rollcall.phi_exact(game)["phi"] == swings
    anon = rollcall.anonymous_distribution(["1/4", "1/12", "1/12", "1/4"])
    assert rollcall.phi_weighted(game, anon) == swings
    assert rollcall.verify_key_lemma(game)
    assert rollcall.check_efficiency(game)
    assert rollcall.check_transfer(game, rollcall.game_from_weighted(2, [1, 1, 1]))


def test_roll_call_primitives():
    game = rollcall.Game(n=2, j=2, k=3, values=[1, 3, 2, 3])
    assert rollcall.reachable_outputs(game, [1, 2], [2, 1], 0) == [1, 2, 3]
    assert rollcall.reachable_outputs(game, [1, 2], [2, 1], 1) == [3]
    assert rollcall.tau(game, [1, 2], [2, 1], 1) == 2
    assert rollcall.tau(game, [1, 2], [2, 1], 2) == 0


def test_montecarlo_determinism():
    game = rollcall.game_from_min_winning(3, 4, [[2, 3, 4]])
    one = rollcall.phi_montecarlo(game, "uniform", samples=100000, seed=7)
    four = rollcall.phi_montecarlo(
        game, "uniform", samples=100000, seed=7, threads=4
    )
    assert one["phi"] == four["phi"]
    assert one["std_error"] == four["std_error"]
    assert one["samples"] == 100000 and one["seed"] == 7
    exact = rollcall.phi_exact(game)["phi"]
    for estimate, target in zip(one["phi"], exact):
        assert abs(estimate - float(target)) < 0.02


def test_continuous_families():
    squares = [["0", "0", "1"]] * 3
    weights = ["1/6", "1/3", "1/2"]
    assert rollcall.phi_separable(weights, squares) == [
        Fraction(1, 6),
        Fraction(1, 3),
        Fraction(1, 2),
    ]

    phi = rollcall.phi_polynomial_exact(3, [("1", [1, 2, 3])])
    assert phi == [Fraction(35, 144), Fraction(25, 72), Fraction(59, 144)]

    median = rollcall.median_game(3)
    assert median.players == 3
    assert median.evaluate([0.2, 0.8, 0.4]) == pytest.approx(0.4)

    densities = [
        ["3/4", "0", "-3/4"],
        ["3/8", "0", "3/8"],
        ["3/8", "0", "3/8"],
    ]
    mc = rollcall.phi_continuous_mc(
        median, samples=100000, seed=3, threads=2, densities=densities
    )
    assert mc["range_violations"] == 0
    # Raw density weighting: the entries total the density mass 1/8.
    assert sum(mc["phi"]) == pytest.approx(0.125, abs=5e-3)


def test_discretize():
    median = rollcall.median_game(3)
    snapshot = rollcall.discretize(median, 2)
    assert snapshot.values == [1, 1, 1, 2, 1, 2, 2, 2]
    assert snapshot == rollcall.game_from_weighted(2, [1, 1, 1])
    assert rollcall.phi_exact(snapshot)["phi"] == [Fraction(1, 3)] * 3


def test_serialization_round_trip():
    game = rollcall.game_from_weighted(3, [2, 1, 1])
    text = rollcall.serialize_game(game)
    assert rollcall.parse_game(text) == game
    parsed = rollcall.parse_game(
        '{"schema":1,"n":3,"j":4,"min_winning":[[2,3,4]]}'
    )
    assert parsed.fingerprint() == rollcall.game_from_min_winning(
        3, 4, [[2, 3, 4]]
    ).fingerprint()


def test_error_mapping():
    with pytest.raises(ValueError):
        rollcall.Game(n=2, j=2, k=2, values=[1, 2, 1])  # wrong length
    with pytest.raises(ValueError):
        rollcall.parse_game("not json")
    with pytest.raises(ValueError):
        # Floats are rejected: masses must be exact.
        rollcall.iid_distribution([0.5, 0.5])
    with pytest.raises(rollcall.EnumerationGuardError):
        big = rollcall.game_from_weighted(1, [1] + [0] * 12)
        rollcall.phi_exact(big)
    assert issubclass(rollcall.EnumerationGuardError, RuntimeError)

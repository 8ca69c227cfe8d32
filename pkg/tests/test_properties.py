"""Randomized invariants, all seeded for reproducibility."""

from __future__ import annotations

import random
from dataclasses import replace
from fractions import Fraction

from votepower import (
    Nationality,
    Player,
    Quota,
    Status,
    Weight,
    has_veto,
    is_dictator,
    make_game,
    power_report,
    swing_counts_dp,
    swing_counts_enum,
)
from conftest import random_game


def test_dp_equals_enum_on_random_games():
    rng = random.Random(1701)
    for _ in range(150):
        g = random_game(rng, max_players=12, max_weight=50)
        enum = [c.beta for c in swing_counts_enum(g)]
        dp = [c.beta for c in swing_counts_dp(g)]
        assert enum == dp, f"backend mismatch on {g}"


def test_normalized_power_sums_to_one():
    rng = random.Random(42)
    for _ in range(80):
        report = power_report(random_game(rng, max_players=10))
        assert sum(report.normalized_vector()) == 1
        assert report.total_swings > 0


def test_dictator_takes_all():
    rng = random.Random(7)
    for _ in range(60):
        g = random_game(rng, max_players=8, max_weight=30)
        report = power_report(g)
        for player in g.players:
            if not is_dictator(g, player.id):
                continue
            assert report.normalized(player.id) == 1
            for other in g.players:
                if other.id != player.id:
                    assert Status.DUMMY in report.statuses(other.id)
                    assert report.normalized(other.id) == 0


def test_swing_count_monotone_in_own_weight():
    rng = random.Random(99)
    for _ in range(60):
        g = random_game(rng, max_players=8, max_weight=25)
        index = rng.randrange(g.n)
        bump = rng.randint(1, 10)
        before = swing_counts_enum(g)[index].beta
        players = list(g.players)
        grown = players[index]
        players[index] = replace(grown, weight=Weight(grown.weight.bp + bump))
        bigger = make_game(g.quota, players)
        after = swing_counts_enum(bigger)[index].beta
        assert after >= before


def test_unanimity_splits_equally_among_positive_weights():
    rng = random.Random(13)
    for _ in range(40):
        g = random_game(rng, max_players=8)
        unanimous = make_game(Quota.unanimous(), g.players)
        report = power_report(unanimous)
        positive = [p for p in unanimous.players if p.weight.bp > 0]
        for player in unanimous.players:
            if player.weight.bp > 0:
                assert report.normalized(player.id) == Fraction(1, len(positive))
            else:
                assert report.normalized(player.id) == 0


def test_zero_weight_players_are_dummies():
    rng = random.Random(23)
    for _ in range(40):
        g = random_game(rng, max_players=8)
        report = power_report(g)
        for player in g.players:
            if player.weight.bp == 0:
                assert Status.DUMMY in report.statuses(player.id)


def test_two_player_veto_floor():
    rng = random.Random(31)
    found = 0
    for _ in range(200):
        g = random_game(rng, max_players=2)
        if g.n != 2:
            continue
        report = power_report(g)
        for player in g.players:
            if has_veto(g, player.id):
                found += 1
                assert report.normalized(player.id) == Fraction(1, 2)
    assert found > 10


def test_veto_implies_not_dummy():
    rng = random.Random(57)
    for _ in range(60):
        g = random_game(rng, max_players=8)
        report = power_report(g)
        for player in g.players:
            if has_veto(g, player.id):
                assert Status.DUMMY not in report.statuses(player.id)
                assert report.normalized(player.id) > 0


def test_exact_backends_agree_entry_for_entry():
    rng = random.Random(77)
    for _ in range(40):
        g = random_game(rng, max_players=9, max_weight=40)
        enum_report = power_report(g, "enum")
        dp_report = power_report(g, "dp")
        assert enum_report.entries == dp_report.entries
        assert enum_report.total_swings == dp_report.total_swings


def test_mixed_denominator_weights_stay_exact():
    # Rational bp weights (thirds of a basis point) still compare exactly.
    players = [
        Player("a", "a", Nationality.domestic(), Weight(Fraction(10000, 3))),
        Player("b", "b", Nationality.domestic(), Weight(Fraction(10000, 3))),
        Player("c", "c", Nationality.domestic(), Weight(Fraction(10000, 3))),
    ]
    g = make_game(Quota.of(2, 3), players)
    report = power_report(g)
    assert report.normalized_vector() == (Fraction(1, 3),) * 3
    assert [c.beta for c in swing_counts_dp(g)] == [c.beta for c in swing_counts_enum(g)]

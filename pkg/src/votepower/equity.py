"""Foreign-control analysis of a single stockholder meeting.

Contrasts the statute-style Control Test, which sums same-nationality
weights against a threshold, with a power-based classification of each
foreign stockholder relative to the domestic ones. Also hosts the public
float adjustment and the transposition of stockholder weights into board
seats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction

from .core import (
    BP_PER_UNIT,
    NationalityKind,
    Player,
    Quota,
    ValidationError,
    VotingGame,
    Weight,
    make_game,
)
from .engine import PowerReport, is_dictator, power_report


class ControlTestVerdict(enum.Enum):
    NATIONAL = "national"
    FOREIGN = "foreign"


class ControlClassification(enum.Enum):
    NO_CONTROL = "no_control"
    JOINT_CONTROL = "joint_control"
    EFFECTIVE_CONTROL = "effective_control"
    DICTATOR = "dictator"


def control_test(game: VotingGame, domestic_threshold: Fraction) -> ControlTestVerdict:
    """Sum domestic weights and compare the share against the statutory floor.

    Public-float aggregates count toward the total but not the domestic sum.
    """
    if isinstance(domestic_threshold, float):
        raise ValidationError("domestic threshold must be an exact rational")
    domestic_threshold = Fraction(domestic_threshold)
    if not 0 < domestic_threshold <= 1:
        raise ValidationError("domestic threshold must lie in (0, 1]")
    domestic = Fraction(0)
    for player in game.players:
        if player.nationality.kind is NationalityKind.DOMESTIC:
            domestic += player.weight.bp
    share = domestic / game.total_weight.bp
    if share >= domestic_threshold:
        return ControlTestVerdict.NATIONAL
    return ControlTestVerdict.FOREIGN


def classify_foreign_control(
    game: VotingGame,
    quota: Quota | None = None,
    *,
    backend: str = "enum",
) -> dict[str, ControlClassification]:
    """Classify each foreign player's de facto control.

    A foreign stockholder is a dictator when their weight alone meets the
    quota; has effective control when their normalized power strictly
    exceeds every domestic stockholder's; has joint control when it exactly
    equals the best domestic power (and is positive); and otherwise has no
    control. Nationality never aggregates: each foreign player is judged
    individually. ``quota`` optionally overrides the game's own quota.
    """
    if quota is not None:
        game = game.with_quota(quota)
    domestic = [p for p in game.players if p.nationality.kind is NationalityKind.DOMESTIC]
    if not domestic:
        raise ValidationError("no domestic players to compare against")
    report = power_report(game, backend)
    best_domestic = max(report.normalized(p.id) for p in domestic)
    verdicts: dict[str, ControlClassification] = {}
    for player in game.players:
        if player.nationality.kind is not NationalityKind.FOREIGN:
            continue
        power = report.normalized(player.id)
        if is_dictator(game, player.id):
            verdicts[player.id] = ControlClassification.DICTATOR
        elif power > best_domestic:
            verdicts[player.id] = ControlClassification.EFFECTIVE_CONTROL
        elif power == best_domestic and power > 0:
            verdicts[player.id] = ControlClassification.JOINT_CONTROL
        else:
            verdicts[player.id] = ControlClassification.NO_CONTROL
    return verdicts


def float_adjust(game: VotingGame) -> VotingGame:
    """Return the game net of public float.

    Players tagged as public-float aggregates are removed and the remaining
    weights are divided by (1 - float share), preserving their relative
    proportions and the total; the quota fraction is unchanged. A game with
    no float players is returned as is.
    """
    float_share = Fraction(0)
    retained: list[Player] = []
    for player in game.players:
        if player.nationality.kind is NationalityKind.PUBLIC_FLOAT:
            float_share += player.weight.fraction_of(game.total_weight)
        else:
            retained.append(player)
    if float_share == 0:
        return game
    if float_share == 1:
        raise ValidationError("the public float holds the entire voting stock")
    scale = 1 - float_share
    rescaled = [replace(p, weight=Weight(p.weight.bp / scale)) for p in retained]
    return make_game(game.quota, rescaled)


@dataclass(frozen=True)
class SeatAllocation:
    """Board seats per stockholder; the seats always sum to the board size."""

    seats: tuple[tuple[str, int], ...]
    board_size: int

    def __post_init__(self) -> None:
        if sum(s for _, s in self.seats) != self.board_size:
            raise ValidationError("seat counts must sum to the board size")

    def seat_count(self, player_id: str) -> int:
        for pid, count in self.seats:
            if pid == player_id:
                return count
        raise KeyError(player_id)

    def vector(self) -> tuple[int, ...]:
        return tuple(count for _, count in self.seats)


def allocate_board_seats(game: VotingGame, board_size: int) -> SeatAllocation:
    """Apportion board seats proportionally to weight by largest remainder.

    Each stockholder receives the floor of their exact proportional share;
    leftover seats go to the largest fractional remainders, ties broken by
    larger weight and then input order.
    """
    if board_size < 1:
        raise ValidationError("board size must be at least 1")
    total = game.total_weight.bp
    shares = [p.weight.bp / total * board_size for p in game.players]
    base = [int(share) for share in shares]
    leftover = board_size - sum(base)
    order = sorted(
        range(game.n),
        key=lambda i: (-(shares[i] - base[i]), -game.players[i].weight.bp, i),
    )
    for i in order[:leftover]:
        base[i] += 1
    return SeatAllocation(
        seats=tuple((p.id, b) for p, b in zip(game.players, base)),
        board_size=board_size,
    )


def board_power(
    game: VotingGame,
    board_size: int,
    quota: Quota,
    *,
    backend: str = "enum",
) -> PowerReport:
    """Power distribution in the board, with each stockholder's nominees
    voting as one bloc.

    The board game gives every stockholder a weight of seats/board_size, so
    whenever the board size divides the weights evenly the board-level power
    mirrors the stockholder-level power exactly.
    """
    allocation = allocate_board_seats(game, board_size)
    players = [
        replace(p, weight=Weight(Fraction(seats * BP_PER_UNIT, board_size)))
        for p, (_, seats) in zip(game.players, allocation.seats)
    ]
    board_game = make_game(quota, players)
    return power_report(board_game, backend)

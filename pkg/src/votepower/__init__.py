"""Exact voting-power analysis for stockholder meetings and ownership chains."""

from .core import (
    BP_PER_UNIT,
    Coalition,
    EnumerationLimitError,
    Nationality,
    NationalityKind,
    Player,
    Quota,
    UnknownPlayerError,
    ValidationError,
    VotePowerError,
    VotingGame,
    Weight,
    enumerate_coalitions,
    is_winning,
    make_game,
)
from .engine import (
    PlayerPower,
    PowerReport,
    Status,
    SwingCount,
    has_veto,
    is_critical,
    is_dictator,
    one_person_one_vote_power,
    power_report,
    swing_counts_dp,
    swing_counts_enum,
    swing_estimate_mc,
)
from .equity import (
    ControlClassification,
    ControlTestVerdict,
    SeatAllocation,
    allocate_board_seats,
    board_power,
    classify_foreign_control,
    control_test,
    float_adjust,
)
from .ownership import (
    CycleError,
    Entity,
    Holding,
    MethodComparison,
    NationalityVerdict,
    OwnershipGraph,
    TierVerdict,
    compare_methods,
    discrete_propagate,
    grandfather_equity,
    make_graph,
    nationality_verdict,
    tier_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "BP_PER_UNIT",
    "Coalition",
    "ControlClassification",
    "ControlTestVerdict",
    "CycleError",
    "Entity",
    "EnumerationLimitError",
    "Holding",
    "MethodComparison",
    "Nationality",
    "NationalityKind",
    "NationalityVerdict",
    "OwnershipGraph",
    "Player",
    "PlayerPower",
    "PowerReport",
    "Quota",
    "SeatAllocation",
    "Status",
    "SwingCount",
    "TierVerdict",
    "UnknownPlayerError",
    "ValidationError",
    "VotePowerError",
    "VotingGame",
    "Weight",
    "allocate_board_seats",
    "board_power",
    "classify_foreign_control",
    "compare_methods",
    "control_test",
    "discrete_propagate",
    "enumerate_coalitions",
    "float_adjust",
    "grandfather_equity",
    "has_veto",
    "is_critical",
    "is_dictator",
    "is_winning",
    "make_game",
    "make_graph",
    "nationality_verdict",
    "one_person_one_vote_power",
    "power_report",
    "swing_counts_dp",
    "swing_counts_enum",
    "swing_estimate_mc",
    "tier_verdict",
]

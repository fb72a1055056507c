"""
Hurwitz Package
Monodromy factorizations of hyperelliptic Lefschetz fibrations.

Modules:
- system: Factor entries, Hurwitz systems, fiber counts, E(f)
- basic: Hurwitz systems of the basic fibrations
- moves: H1/H2/H3, slide, cyclic and σ moves; certificates
"""

from hurwitz.system import (
    FactorEntry, HurwitzSystem, FiberCounts,
    counts, fiber_sum, total_monodromy, is_closed, is_chiral, is_irreducible,
    is_transitive, euler_invariant, divisibility_check,
)
from hurwitz.basic import W0, W1, W2h, W1p, W2hp, Wprime2h, basic_system
from hurwitz.moves import MoveType, Move, MoveCertificate, apply_move, inverse_move, replay

__all__ = [
    "FactorEntry",
    "HurwitzSystem",
    "FiberCounts",
    "counts",
    "fiber_sum",
    "total_monodromy",
    "is_closed",
    "is_chiral",
    "is_irreducible",
    "is_transitive",
    "euler_invariant",
    "divisibility_check",
    "W0",
    "W1",
    "W2h",
    "W1p",
    "W2hp",
    "Wprime2h",
    "basic_system",
    "MoveType",
    "Move",
    "MoveCertificate",
    "apply_move",
    "inverse_move",
    "replay"
]

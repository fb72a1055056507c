import logging
from typing import Iterable, List, Optional
from dataclasses import dataclass

from errors import BudgetExhausted, MoveError
from hurwitz.system import HurwitzSystem
from hurwitz.moves import Move, MoveCertificate, apply_move

logger = logging.getLogger(__name__)

# ─────────────────────────────────────────────────────────────
# Verification
# ─────────────────────────────────────────────────────────────

@dataclass
class VerificationResult:
    """Outcome of replaying a certificate"""
    ok: bool
    steps: int                               # moves replayed successfully
    failed_step: Optional[int] = None        # index of the failing move; len(moves) for an end mismatch
    reason: Optional[str] = None
    end: Optional[HurwitzSystem] = None

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "steps": self.steps,
            "failed_step": self.failed_step,
            "reason": self.reason,
        }


def verify_certificate(cert: MoveCertificate) -> VerificationResult:
    """
    Replay every move from `start` and compare with `claimed_end` entry for entry.
    Cyclic moves are explicit steps, so no further alignment is applied.
    """
    state = cert.start
    for k, m in enumerate(cert.moves):
        try:
            state = apply_move(state, m)
        except MoveError as e:
            logger.info(f"⚠ certificate fails at step {k}: {e}")
            return VerificationResult(False, k, k, str(e), state)

    if state != cert.claimed_end:
        n = len(cert.moves)
        if len(state) != len(cert.claimed_end):
            reason = f"replayed system has {len(state)} entries, claimed end has {len(cert.claimed_end)}"
        else:
            first = next(i for i, (a, b) in enumerate(zip(state.entries, cert.claimed_end.entries)) if a != b)
            reason = f"replayed system differs from claimed end at entry {first}"
        logger.info(f"⚠ certificate end mismatch: {reason}")
        return VerificationResult(False, n, n, reason, state)

    return VerificationResult(True, len(cert.moves), end=state)


# ─────────────────────────────────────────────────────────────
# Certificate Construction
# ─────────────────────────────────────────────────────────────

class CertificateRecorder:
    """
    Applies moves to a running system and records them.

    Macros build certificates through this so every recorded move has
    already been checked once.
    """

    def __init__(self, start: HurwitzSystem, budget: Optional[int] = None):
        self.start = start
        self.state = start
        self.moves: List[Move] = []
        self.budget = budget

    def apply(self, m: Move) -> HurwitzSystem:
        if self.budget is not None and len(self.moves) >= self.budget:
            raise BudgetExhausted(f"move budget {self.budget} exhausted", len(self.moves))
        self.state = apply_move(self.state, m)
        self.moves.append(m)
        return self.state

    def extend(self, moves: Iterable[Move]) -> HurwitzSystem:
        for m in moves:
            self.apply(m)
        return self.state

    def certificate(self) -> MoveCertificate:
        return MoveCertificate(self.start, tuple(self.moves), self.state)


def concat_certificates(*certs: MoveCertificate) -> MoveCertificate:
    """Chain certificates whose endpoints meet"""
    first = certs[0]
    moves: List[Move] = list(first.moves)
    end = first.claimed_end
    for c in certs[1:]:
        if c.start != end:
            raise MoveError("certificates do not chain: end and next start differ")
        moves.extend(c.moves)
        end = c.claimed_end
    return MoveCertificate(first.start, tuple(moves), end)

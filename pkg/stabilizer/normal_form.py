import logging
from typing import List, Optional, Tuple
from dataclasses import dataclass, field

from errors import DivisibilityError, HypothesisError
from mcg.words import GenusContext
from hurwitz.system import (
    FiberCounts, HurwitzSystem,
    divisibility_check, divisibility_modulus, euler_invariant,
    counts, fiber_sum, repeat_system, empty_system,
)
from hurwitz.basic import W0, W1, W2h, W1p, W2hp, basic_system

logger = logging.getLogger(__name__)

# ─────────────────────────────────────────────────────────────
# Data Classes
# ─────────────────────────────────────────────────────────────

@dataclass
class NormalForm:
    """
    Coefficients of f # m f0 ≅ #(a+m) f0 # b f1 # c_h f2h # d f'1 # e_h f'2h.

    When g is odd both parities of b give an integral a; both pairs are kept
    in `b_options` and `b_underdetermined` is set.
    """
    genus: int
    E: int
    a: int
    b: int
    c: Tuple[int, ...]
    d: int
    e: Tuple[int, ...]
    b_options: List[Tuple[int, int]] = field(default_factory=list)
    b_underdetermined: bool = False
    m0: Optional[int] = None
    m0_reason: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "E": self.E,
            "genus": self.genus,
            "a": self.a,
            "b": self.b,
            "b_options": [{"a": a, "b": b} for a, b in self.b_options],
            "b_underdetermined": self.b_underdetermined,
            "c": list(self.c),
            "d": self.d,
            "e": list(self.e),
            "m0": self.m0,
            "m0_reason": self.m0_reason,
        }


# ─────────────────────────────────────────────────────────────
# Arithmetic
# ─────────────────────────────────────────────────────────────

def m0_bound(c: FiberCounts) -> Optional[int]:
    """
    m₀ = n₀⁻ + Σ_h (h+1) n_h⁺ + 1, asserted only when every n_h⁻ = 0.

    Returns None otherwise.
    """
    if any(c.nh_minus):
        return None
    return c.n0_minus + sum((h + 1) * n for h, n in enumerate(c.nh_plus, start=1)) + 1


def normal_form(c: FiberCounts, g: Optional[int] = None) -> NormalForm:
    g = c.genus if g is None else g
    for h, (p, m) in enumerate(zip(c.nh_plus, c.nh_minus), start=1):
        if p < m:
            raise HypothesisError(f"n_{h}^+ = {p} < n_{h}^- = {m}")

    E = euler_invariant(c, g)
    if not divisibility_check(E, g):
        raise DivisibilityError(
            f"E = {E} is not a multiple of {divisibility_modulus(g)}; no genus-{g} fibration has these counts"
        )

    L = 2 * g + 1
    options = []
    for b in (0, 1):
        rest = E - 2 * (g + 1) * L * b
        if rest % (4 * L) == 0:
            options.append((rest // (4 * L), b))

    if g % 2 == 0:
        # Only one parity is integral: b ≡ E / 2(2g+1) mod 2
        b = (E // (2 * L)) % 2
        a = next(a for a, bb in options if bb == b)
    else:
        a, b = options[0]

    bound = m0_bound(c)
    nf = NormalForm(
        genus=g,
        E=E,
        a=a,
        b=b,
        c=tuple(p - m for p, m in zip(c.nh_plus, c.nh_minus)),
        d=c.n0_minus,
        e=tuple(c.nh_minus),
        b_options=options,
        b_underdetermined=len(options) > 1,
        m0=bound,
        m0_reason=None if bound is not None else "bound not asserted when some n_h^- > 0",
    )
    logger.debug(f"normal form g={g}: E={E}, a={a}, b={b}")
    return nf


# ─────────────────────────────────────────────────────────────
# Stabilization
# ─────────────────────────────────────────────────────────────

def stabilize(s: HurwitzSystem, m: int) -> HurwitzSystem:
    """s # m·W0"""
    if m < 0:
        raise HypothesisError(f"stabilization count must be non-negative, got {m}")
    return fiber_sum(s, repeat_system(W0(s.genus), m))


def realize_normal_form(nf: NormalForm, m: int = 0) -> HurwitzSystem:
    """
    Hurwitz system #(a+m) W0 # b W1 # c_h W2h # d W1p # e_h W2hp.
    """
    if nf.a + m < 0:
        raise HypothesisError(f"a + m = {nf.a + m} is negative; stabilize with m ≥ {-nf.a}")
    ctx = GenusContext(nf.genus)
    parts = [repeat_system(W0(ctx), nf.a + m), repeat_system(W1(ctx), nf.b)]
    for h, n in enumerate(nf.c, start=1):
        parts.append(repeat_system(W2h(ctx, h), n))
    parts.append(repeat_system(W1p(ctx), nf.d))
    for h, n in enumerate(nf.e, start=1):
        parts.append(repeat_system(W2hp(ctx, h), n))
    return fiber_sum(empty_system(ctx), *parts)


def basic_decomposition(name: str, g: int, h: int = 1) -> NormalForm:
    """Normal form of one basic fibration taken alone"""
    return normal_form(counts(basic_system(name, GenusContext(g), h)), g)

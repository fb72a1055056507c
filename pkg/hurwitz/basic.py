"""
Hurwitz systems of the basic fibrations f0, f1, f2h, f'1, f'2h, and the
chain-expanded W'2h that the change lemma ends in.
"""

from typing import Dict, List

from errors import LetterRangeError
from mcg.words import GenusContext, Letter, chain_indices
from hurwitz.system import HurwitzSystem, plain_entry, plain_system

# ─────────────────────────────────────────────────────────────
# Index Sequences
# ─────────────────────────────────────────────────────────────

def ascending(g: int) -> List[int]:
    """δ = (1, ..., 2g+1)"""
    return list(range(1, 2 * g + 2))


def descending(g: int) -> List[int]:
    """δ' = (2g+1, ..., 1)"""
    return list(range(2 * g + 1, 0, -1))


def t_indices(g: int) -> List[int]:
    """T = (1..2g+1, 2g+1..1)"""
    return ascending(g) + descending(g)


def w0_indices(g: int) -> List[int]:
    return t_indices(g) * 2


def w1_indices(g: int) -> List[int]:
    return ascending(g) * (2 * g + 2)


def _check_h(ctx: GenusContext, h: int) -> None:
    if not 1 <= h <= ctx.num_sigma:
        raise LetterRangeError(f"h={h} out of range for genus {ctx.g} (1..{ctx.num_sigma})")


def w2h_blocks(g: int, h: int):
    """
    (prefix, suffix) around the σ_h slot of W2h:
      prefix = δ', B_{2g-2h+1}, ..., B_1   with B_k = (k, ..., k+2h)
      suffix = R_1, ..., R_{2g-2h+1}, δ    with R_k = (k+2h, ..., k)
    """
    top = 2 * g - 2 * h + 1
    prefix = descending(g)
    for k in range(top, 0, -1):
        prefix += list(range(k, k + 2 * h + 1))
    suffix: List[int] = []
    for k in range(1, top + 1):
        suffix += list(range(k + 2 * h, k - 1, -1))
    suffix += ascending(g)
    return prefix, suffix


def chain_offset(g: int, h: int) -> int:
    """Position of the σ_h entry in W2h (= start of the chain block in W'2h)"""
    return len(w2h_blocks(g, h)[0])


# ─────────────────────────────────────────────────────────────
# Basic Systems
# ─────────────────────────────────────────────────────────────

def W0(ctx: GenusContext) -> HurwitzSystem:
    return plain_system(ctx, w0_indices(ctx.g))


def W1(ctx: GenusContext) -> HurwitzSystem:
    return plain_system(ctx, w1_indices(ctx.g))


def W2h(ctx: GenusContext, h: int) -> HurwitzSystem:
    _check_h(ctx, h)
    prefix, suffix = w2h_blocks(ctx.g, h)
    entries = (
        plain_system(ctx, prefix).entries
        + (plain_entry(ctx, Letter.sigma(h)),)
        + plain_system(ctx, suffix).entries
    )
    return HurwitzSystem(ctx, entries)


def W1p(ctx: GenusContext) -> HurwitzSystem:
    z1 = Letter.zeta(1)
    return HurwitzSystem(ctx, (plain_entry(ctx, z1, 1), plain_entry(ctx, z1, -1)))


def W2hp(ctx: GenusContext, h: int) -> HurwitzSystem:
    _check_h(ctx, h)
    s = Letter.sigma(h)
    return HurwitzSystem(ctx, (plain_entry(ctx, s, 1), plain_entry(ctx, s, -1)))


def Wprime2h(ctx: GenusContext, h: int) -> HurwitzSystem:
    """W2h with σ_h spelled out as (ζ1⋯ζ2h)^{4h+2}"""
    _check_h(ctx, h)
    prefix, suffix = w2h_blocks(ctx.g, h)
    return plain_system(ctx, prefix + chain_indices(h) + suffix)


BASIC_NAMES = ("W0", "W1", "W2h", "W1p", "W2hp", "Wprime2h")


def basic_system(name: str, ctx: GenusContext, h: int = 1) -> HurwitzSystem:
    """Dispatch by name; `h` is ignored for the systems without one."""
    builders = {
        "W0": lambda: W0(ctx),
        "W1": lambda: W1(ctx),
        "W2h": lambda: W2h(ctx, h),
        "W1p": lambda: W1p(ctx),
        "W2hp": lambda: W2hp(ctx, h),
        "Wprime2h": lambda: Wprime2h(ctx, h),
    }
    if name not in builders:
        raise LetterRangeError(f"unknown basic system {name!r}; expected one of {', '.join(BASIC_NAMES)}")
    return builders[name]()


def expected_counts(name: str, g: int, h: int = 1) -> Dict[str, int]:
    """Table row (n₀⁺, n₀⁻, n_h⁺, n_h⁻) of a basic fibration"""
    rows = {
        "W0": (4 * (2 * g + 1), 0, 0, 0),
        "W1": (2 * (g + 1) * (2 * g + 1), 0, 0, 0),
        "W2h": (8 * h * (g - h) + 4 * (2 * g + 1), 0, 1, 0),
        "W1p": (1, 1, 0, 0),
        "W2hp": (0, 0, 1, 1),
    }
    n0p, n0m, nhp, nhm = rows[name]
    return {"n0_plus": n0p, "n0_minus": n0m, "nh_plus": nhp, "nh_minus": nhm}

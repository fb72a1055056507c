import logging
from typing import List
from dataclasses import dataclass, field

from mcg.words import (
    GenusContext, Letter, SignedLetter, Word,
    chain_word, full_chain_word, iota_word,
    word_concat, word_inverse, word_power, zeta_word,
)
from mcg.representations import perm_image, symp_image

logger = logging.getLogger(__name__)

# ─────────────────────────────────────────────────────────────
# Report Types
# ─────────────────────────────────────────────────────────────

@dataclass
class RelatorResult:
    """One relator instance evaluated in both images"""
    family: str                      # "commute", "braid", "iota_square", "chain_power", "iota_central", "sigma_chain"
    name: str                        # human-readable instance, e.g. "[z1, z3]"
    length: int
    perm_ok: bool
    symp_ok: bool

    @property
    def ok(self) -> bool:
        return self.perm_ok and self.symp_ok

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "name": self.name,
            "length": self.length,
            "perm": self.perm_ok,
            "symp": self.symp_ok,
        }


@dataclass
class RelationReport:
    genus: int
    results: List[RelatorResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> List[RelatorResult]:
        return [r for r in self.results if not r.ok]

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "ok": self.ok,
            "checked": len(self.results),
            "results": [r.to_dict() for r in self.results],
        }


# ─────────────────────────────────────────────────────────────
# Relator Enumeration
# ─────────────────────────────────────────────────────────────

def _z(ctx: GenusContext, *indices: int) -> Word:
    return zeta_word(ctx, indices)


def relators(ctx: GenusContext) -> List[tuple]:
    """(family, name, word) for every defining relator instance plus the chain relations"""
    n = ctx.num_zeta
    out = []
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            u, v = _z(ctx, i), _z(ctx, j)
            w = word_concat(word_concat(u, v), word_inverse(word_concat(v, u)))
            out.append(("commute", f"[z{i}, z{j}]", w))
    for i in range(1, n):
        aba = _z(ctx, i, i + 1, i)
        bab = _z(ctx, i + 1, i, i + 1)
        out.append(("braid", f"z{i} z{i+1} z{i} = z{i+1} z{i} z{i+1}", word_concat(aba, word_inverse(bab))))

    iota = iota_word(ctx)
    out.append(("iota_square", "iota^2", word_power(iota, 2)))
    out.append(("chain_power", f"(z1..z{n})^{n + 1}", word_power(full_chain_word(ctx), n + 1)))
    for i in range(1, n + 1):
        z = _z(ctx, i)
        w = word_concat(word_concat(iota, z), word_inverse(word_concat(z, iota)))
        out.append(("iota_central", f"[iota, z{i}]", w))
    for h in range(1, ctx.num_sigma + 1):
        sigma = Word(ctx, (SignedLetter(Letter.sigma(h)),))
        out.append(("sigma_chain", f"s{h} = (z1..z{2*h})^{4*h + 2}", word_concat(sigma, word_inverse(chain_word(h, ctx)))))
    return out


def relation_check(ctx: GenusContext) -> RelationReport:
    """Evaluate every relator in both images; failures become report entries."""
    report = RelationReport(genus=ctx.g)
    for family, name, w in relators(ctx):
        report.results.append(RelatorResult(
            family=family,
            name=name,
            length=len(w),
            perm_ok=perm_image(w).is_Identity,
            symp_ok=symp_image(w).is_identity,
        ))

    if report.ok:
        logger.info(f"✓ genus {ctx.g}: {len(report.results)} relators map to the identity")
    else:
        logger.warning(f"⚠ genus {ctx.g}: {len(report.failures)} relators fail")
    return report

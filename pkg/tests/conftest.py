import random

import pytest
from pathlib import Path
from typing import Sequence

from mcg.words import GenusContext, Letter, SignedLetter, Word
from hurwitz.system import FactorEntry, HurwitzSystem, plain_system
from hurwitz.moves import Move, MoveCertificate
from stabilizer.certificate import CertificateRecorder
from formats.io import write_document


@pytest.fixture
def g2() -> GenusContext:
    return GenusContext(2)


def record(g: int, indices: Sequence[int], moves: Sequence[Move]) -> MoveCertificate:
    """Certificate of `moves` applied to the plain system on `indices`"""
    rec = CertificateRecorder(plain_system(GenusContext(g), indices))
    rec.extend(moves)
    return rec.certificate()


def random_letter(rng: random.Random, ctx: GenusContext, sigma: bool = True) -> Letter:
    if sigma and ctx.num_sigma and rng.random() < 0.2:
        return Letter.sigma(rng.randint(1, ctx.num_sigma))
    return Letter.zeta(rng.randint(1, ctx.num_zeta))


def random_word(rng: random.Random, ctx: GenusContext, length: int, sigma: bool = True) -> Word:
    return Word(ctx, tuple(
        SignedLetter(random_letter(rng, ctx, sigma), rng.choice((1, -1))) for _ in range(length)
    ))


def random_system(rng: random.Random, ctx: GenusContext, length: int, conj_len: int = 4) -> HurwitzSystem:
    """Entries with random (possibly unreduced) conjugators, bases and signs"""
    entries = [
        FactorEntry(
            random_word(rng, ctx, rng.randint(0, conj_len)),
            random_letter(rng, ctx),
            rng.choice((1, -1)),
        )
        for _ in range(length)
    ]
    return HurwitzSystem(ctx, tuple(entries))


@pytest.fixture
def write_doc(tmp_path):
    def _write(name: str, obj) -> str:
        path = Path(tmp_path) / name
        write_document(obj, path)
        return str(path)
    return _write

"""
Mapping Class Group Package
Words in the hyperelliptic mapping class group and their exact images.

Modules:
- words: Generators, signed letters, words, ι and the chain words
- representations: Permutation (sympy) and symplectic images, orbits
- relations: Defining-relation checks in both images
"""

from mcg.words import (
    GenusContext, LetterKind, Letter, SignedLetter, Word,
    word_concat, word_inverse, free_reduce, iota_word, chain_word,
    zeta_word, parse_word_text,
)
from mcg.representations import (
    SympMatrix, perm_image, symp_image, point_images, cycle_type, orbits, is_transitive,
)
from mcg.relations import relation_check, RelationReport

__all__ = [
    "GenusContext",
    "LetterKind",
    "Letter",
    "SignedLetter",
    "Word",
    "word_concat",
    "word_inverse",
    "free_reduce",
    "iota_word",
    "chain_word",
    "zeta_word",
    "parse_word_text",
    "SympMatrix",
    "perm_image",
    "symp_image",
    "point_images",
    "cycle_type",
    "orbits",
    "is_transitive",
    "relation_check",
    "RelationReport"
]

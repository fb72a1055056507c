"""
Stabilizer Package
Stabilization arithmetic and the constructive change-lemma derivation.

Modules:
- normal_form: E(f) normal form coefficients, m0 bound, stabilization
- certificate: Certificate replay/verification and recording
- macros: H3 spreading, H1/H2 alignment, derive_w2h
- search: Bounded bidirectional search for certificates
"""

from stabilizer.normal_form import (
    NormalForm, normal_form, m0_bound, stabilize, realize_normal_form, basic_decomposition,
)
from stabilizer.certificate import VerificationResult, verify_certificate, CertificateRecorder
from stabilizer.macros import macro_reverse_chain, macro_block_pass, derive_w2h, derive_w2h_contracted
from stabilizer.search import search_equivalence

__all__ = [
    "NormalForm",
    "normal_form",
    "m0_bound",
    "stabilize",
    "realize_normal_form",
    "basic_decomposition",
    "VerificationResult",
    "verify_certificate",
    "CertificateRecorder",
    "macro_reverse_chain",
    "macro_block_pass",
    "derive_w2h",
    "derive_w2h_contracted",
    "search_equivalence"
]

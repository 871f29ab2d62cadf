"""Brute-force ground truth over finite rings and the coherent prover."""

from .brute import BruteForcer, brute_truth_open
from .chain import entailment_derivation
from .filters import enumerate_prime_filters, prime_ideals, semantic_entails
from .models import EntailmentChain, PrimeFilter, ProofResult, TheoryError
from .prover import CoherentProver, coherent_entails, coherent_prove, prime_filter_prover
from .theory import atom_of, normalize_sequent, prime_filter_theory

__all__ = [
    "BruteForcer",
    "CoherentProver",
    "EntailmentChain",
    "PrimeFilter",
    "ProofResult",
    "TheoryError",
    "atom_of",
    "brute_truth_open",
    "coherent_entails",
    "coherent_prove",
    "entailment_derivation",
    "enumerate_prime_filters",
    "normalize_sequent",
    "prime_filter_prover",
    "prime_filter_theory",
    "prime_ideals",
    "semantic_entails",
]

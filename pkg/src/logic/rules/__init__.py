"""Inference rules of the geometric and intuitionistic sequent calculi."""

from .base import AxiomIndex, InferenceRule
from .registry import RuleRegistry

__all__ = ["AxiomIndex", "InferenceRule", "RuleRegistry"]

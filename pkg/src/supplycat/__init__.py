"""Supplies of props in symmetric monoidal categories, checked on bounded samples."""
from .report import CheckReport, Entry
from .supply import (
    PresentedProp, Supply, SupplyRelationError, check_coherence_homomorphisms, check_supply,
    homomorphic_subcategory, is_homomorphism, make_supply, self_supply,
)

__all__ = [
    "CheckReport", "Entry", "PresentedProp", "Supply", "SupplyRelationError",
    "check_coherence_homomorphisms", "check_supply", "homomorphic_subcategory",
    "is_homomorphism", "make_supply", "self_supply",
]

"""Services package for the Higher-Order Pattern Miner."""

from .mining_service import MiningService

__all__ = ["MiningService"]

"""Utilities package for the Higher-Order Pattern Miner."""

from .logger import MiningLogger

__all__ = ["MiningLogger"]

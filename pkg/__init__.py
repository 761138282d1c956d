"""
Higher-Order Pattern Miner

Constraint-based mining of higher order association patterns over
transaction databases.

Main entry point: python app.py <subcommand> --input FILE [options]
"""

__version__ = "1.0.0"
__author__ = "AI Engineering Team"
__description__ = "Constraint-based mining of higher order association patterns"

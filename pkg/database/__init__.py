"""Transaction database package for the Higher-Order Pattern Miner."""

from .transaction_db import (
    Item,
    Pattern,
    Tidset,
    TransactionDatabase,
    as_fraction,
    below_threshold,
    closure,
    load_basket_file,
    load_basket_path,
    loads_basket,
    make_pattern,
    meets_threshold,
    nonempty_subsets,
    support,
    tidset,
)

__all__ = [
    "Item",
    "Pattern",
    "Tidset",
    "TransactionDatabase",
    "as_fraction",
    "below_threshold",
    "closure",
    "load_basket_file",
    "load_basket_path",
    "loads_basket",
    "make_pattern",
    "meets_threshold",
    "nonempty_subsets",
    "support",
    "tidset",
]

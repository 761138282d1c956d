"""
Transaction database for the Higher-Order Pattern Miner.

Loads basket-format files and answers exact support, tidset and closure
queries. Supports are kept as integer counts; ratios are exact Fractions.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import IO, Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from config import Config
from errors import (
    EnumerationCapError,
    LoadError,
    NoOccurrenceError,
    UndefinedSupportError,
    UnknownItemError,
)
from utils.logger import MiningLogger

# A pattern is a strictly ascending tuple of item ids.
Pattern = Tuple[int, ...]


def make_pattern(ids: Iterable[int]) -> Pattern:
    """Normalise any iterable of item ids into a Pattern."""
    return tuple(sorted(set(ids)))


def as_fraction(threshold) -> Fraction:
    """
    Convert a user threshold to an exact Fraction.

    Floats go through their decimal repr so 0.3 becomes 3/10, not the
    nearest binary double.
    """
    if isinstance(threshold, Fraction):
        return threshold
    if isinstance(threshold, float):
        return Fraction(repr(threshold))
    return Fraction(threshold)


def meets_threshold(count: int, n: int, threshold) -> bool:
    """count / n >= threshold, decided on integers."""
    return count >= as_fraction(threshold) * n


def below_threshold(count: int, n: int, threshold) -> bool:
    """count / n < threshold, decided on integers."""
    return count < as_fraction(threshold) * n


def nonempty_subsets(
    pattern: Pattern,
    cap: Optional[int] = None,
    order_key: Optional[Callable[[int], object]] = None,
) -> Iterator[Pattern]:
    """
    Yield every non-empty sub-pattern of pattern, shortest first.

    Within one length, sub-patterns come out in lexicographic order of the
    items as ranked by order_key (item id when omitted).
    """
    cap = Config.ENUMERATION_CAP if cap is None else cap
    if len(pattern) > cap:
        raise EnumerationCapError(len(pattern), cap)
    ranked = sorted(pattern, key=order_key) if order_key else list(pattern)
    for size in range(1, len(ranked) + 1):
        for combo in combinations(ranked, size):
            yield make_pattern(combo)


@dataclass(frozen=True)
class Item:
    """A single item: dense id plus its label."""

    id: int
    label: str


@dataclass(frozen=True)
class Tidset:
    """
    Set of transaction indices containing a pattern.

    Stored as an int bitset; bit t is set when transaction t contains
    the pattern.
    """

    bits: int
    universe: int

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, tid: int) -> bool:
        return 0 <= tid < self.universe and bool(self.bits >> tid & 1)

    def __iter__(self) -> Iterator[int]:
        bits, tid = self.bits, 0
        while bits:
            if bits & 1:
                yield tid
            bits >>= 1
            tid += 1

    def tids(self) -> List[int]:
        return list(self)


@dataclass(frozen=True)
class TransactionDatabase:
    """
    Immutable transaction database.

    Attributes:
        items: Item dictionary, ids contiguous from 0 in first-appearance order.
        transactions: One Pattern per transaction.
        item_tidsets: Per-item bitsets, indexed by item id.
    """

    items: Tuple[Item, ...]
    transactions: Tuple[Pattern, ...]
    item_tidsets: Tuple[int, ...]
    _index: Dict[str, int] = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        self._index.update({item.label: item.id for item in self.items})

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_transactions(cls, rows: Iterable[Iterable[str]]) -> "TransactionDatabase":
        """
        Build a database from label rows.

        Duplicate labels within a row collapse; ids follow first appearance.
        """
        index: Dict[str, int] = {}
        transactions: List[Pattern] = []
        for row in rows:
            ids = []
            for label in row:
                if label not in index:
                    index[label] = len(index)
                ids.append(index[label])
            transactions.append(make_pattern(ids))

        tidsets = [0] * len(index)
        for tid, transaction in enumerate(transactions):
            for item_id in transaction:
                tidsets[item_id] |= 1 << tid

        items = tuple(Item(item_id, label) for label, item_id in index.items())
        return cls(items, tuple(transactions), tuple(tidsets))

    def with_items(self, labels: Iterable[str]) -> "TransactionDatabase":
        """
        Return a copy that also knows the given labels.

        Labels not yet in the dictionary are appended as items that occur in
        no transaction, so their support is 0.
        """
        missing = [label for label in dict.fromkeys(labels) if label not in self._index]
        if not missing:
            return self
        start = len(self.items)
        items = self.items + tuple(Item(start + k, label) for k, label in enumerate(missing))
        return TransactionDatabase(items, self.transactions, self.item_tidsets + (0,) * len(missing))

    # ------------------------------------------------------------------
    # Dictionary access
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        """Number of transactions."""
        return len(self.transactions)

    @property
    def m(self) -> int:
        """Number of items."""
        return len(self.items)

    @property
    def all_tids(self) -> int:
        return (1 << self.n) - 1

    def label_of(self, item_id: int) -> str:
        try:
            return self.items[item_id].label
        except IndexError:
            raise UnknownItemError(f"unknown item id {item_id}") from None

    def labels_of(self, pattern: Iterable[int]) -> Tuple[str, ...]:
        return tuple(self.label_of(item_id) for item_id in pattern)

    def id_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownItemError(f"unknown item label {label!r}") from None

    def has_label(self, label: str) -> bool:
        return label in self._index

    def pattern_of(self, labels: Iterable[str]) -> Pattern:
        """Resolve labels to a Pattern; unknown labels raise UnknownItemError."""
        return make_pattern(self.id_of(label) for label in labels)

    def _check(self, pattern: Sequence[int]) -> None:
        for item_id in pattern:
            if not 0 <= item_id < self.m:
                raise UnknownItemError(f"unknown item id {item_id}")

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def tid_bits(self, pattern: Sequence[int]) -> int:
        """Bitset of transactions containing pattern."""
        self._check(pattern)
        bits = self.all_tids
        for item_id in pattern:
            bits &= self.item_tidsets[item_id]
        return bits

    def tidset(self, pattern: Sequence[int]) -> Tidset:
        return Tidset(self.tid_bits(pattern), self.n)

    def support_count(self, pattern: Sequence[int]) -> int:
        return bin(self.tid_bits(pattern)).count("1")

    def support(self, pattern: Sequence[int]) -> Fraction:
        """
        Fraction of transactions containing pattern.

        Raises:
            UndefinedSupportError: If the database has no transactions.
        """
        if self.n == 0:
            raise UndefinedSupportError("support is undefined on an empty database")
        return Fraction(self.support_count(pattern), self.n)

    def closure(self, pattern: Sequence[int]) -> Pattern:
        """
        Intersection of all transactions containing pattern.

        Raises:
            NoOccurrenceError: If no transaction contains pattern.
        """
        bits = self.tid_bits(pattern)
        if not bits:
            labels = ",".join(self.labels_of(pattern))
            raise NoOccurrenceError(f"pattern {{{labels}}} occurs in no transaction")
        return tuple(
            item_id for item_id, item_bits in enumerate(self.item_tidsets)
            if bits & item_bits == bits
        )

    def is_closed(self, pattern: Sequence[int]) -> bool:
        return self.closure(pattern) == tuple(pattern)

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def dumps(self) -> str:
        """
        Serialize back to basket format.

        A line whose first label starts with '#' is written with a leading
        space so it loads back as a transaction, not a comment.
        """
        lines = []
        for transaction in self.transactions:
            line = " ".join(self.labels_of(transaction))
            if line.startswith("#"):
                line = " " + line
            lines.append(line + "\n")
        return "".join(lines)


# ----------------------------------------------------------------------
# Loading
# ----------------------------------------------------------------------

def _tokenize_line(raw, line_number: int) -> Optional[List[str]]:
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise LoadError(f"invalid UTF-8 ({exc.reason})", line_number) from exc
    if raw.startswith("#"):
        return None
    return raw.split() or None


def load_basket_file(source: IO) -> TransactionDatabase:
    """
    Load a basket-format database from a text or binary stream.

    One transaction per line, items separated by spaces or tabs. Blank lines
    and lines whose first character is '#' are skipped; a '#' after leading
    whitespace is an ordinary label.

    Raises:
        LoadError: If a line is not valid UTF-8.
    """
    logger = MiningLogger.get_logger(__name__)
    rows: List[List[str]] = []
    line_number = 0
    iterator = iter(source)
    while True:
        try:
            raw = next(iterator)
        except StopIteration:
            break
        except UnicodeDecodeError as exc:
            raise LoadError(f"invalid UTF-8 ({exc.reason})", line_number + 1) from exc
        line_number += 1
        tokens = _tokenize_line(raw, line_number)
        if tokens is not None:
            rows.append(tokens)

    db = TransactionDatabase.from_transactions(rows)
    logger.debug(f"Loaded basket data: {db.n} transactions, {db.m} items")
    return db


def loads_basket(text: str) -> TransactionDatabase:
    return load_basket_file(io.StringIO(text))


def load_basket_path(path: str) -> TransactionDatabase:
    with open(path, "rb") as handle:
        return load_basket_file(handle)


# ----------------------------------------------------------------------
# Functional API
# ----------------------------------------------------------------------

def support(db: TransactionDatabase, pattern: Sequence[int]) -> Fraction:
    return db.support(pattern)


def tidset(db: TransactionDatabase, pattern: Sequence[int]) -> Tidset:
    return db.tidset(pattern)


def closure(db: TransactionDatabase, pattern: Sequence[int]) -> Pattern:
    return db.closure(pattern)

"""
Fixture databases and brute-force oracles shared by the test modules.

The oracles work on label sets and plain Fractions so they stay independent
of the miners' bitset code.
"""

import random
from collections import Counter
from fractions import Fraction
from itertools import combinations

from database import TransactionDatabase

TOL = 1e-9

FIXTURES = {
    "db1": [["a", "b"], ["a", "b", "c"], ["b", "c"], ["a", "c"]],
    "db2": [["a", "c"]] * 3 + [["b", "c"]] * 3,
    "db3": [["a", "b"], ["b", "c"], ["a", "c"]],
    "db4": [["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"]],
    "db5": [["a", "b", "c"], ["a"], ["b"], ["c"], ["a"], ["b"], ["c"], ["d"]],
    "db6": [["a", "b"], ["a", "b"], ["a", "b", "c"]],
    "db7": [["a", "c"]] * 2 + [["b", "c"]] * 2 + [["e", "c"]] * 2,
}


def make_db(name):
    return TransactionDatabase.from_transactions(FIXTURES[name])


def basket_text(name):
    return "".join(" ".join(row) + "\n" for row in FIXTURES[name])


def pat(db, labels):
    """Pattern of item ids for a label string such as "abc" or a label list."""
    return db.pattern_of(list(labels))


def label_set(db, pattern):
    return frozenset(db.labels_of(pattern))


def label_sets(db, patterns):
    return {label_set(db, p) for p in patterns}


def random_db(seed, n_items=5, max_rows=9, density=0.45):
    rng = random.Random(seed)
    rows = []
    for _ in range(rng.randint(3, max_rows)):
        row = [f"i{k}" for k in range(n_items) if rng.random() < density]
        rows.append(row or [f"i{rng.randrange(n_items)}"])
    return TransactionDatabase.from_transactions(rows)


def wide_random_db(seed, max_items=12, max_rows=50):
    """Random database with up to max_items items, up to max_rows rows and a random density."""
    rng = random.Random(seed)
    return random_db(
        rng.randrange(1 << 30),
        n_items=rng.randint(1, max_items),
        max_rows=max_rows,
        density=rng.uniform(0.05, 0.6),
    )


# ----------------------------------------------------------------------
# Oracles
# ----------------------------------------------------------------------

def rows_of(db):
    return [frozenset(db.labels_of(t)) for t in db.transactions]


def bf_support(rows, labels):
    labels = frozenset(labels)
    return Fraction(sum(1 for row in rows if labels <= row), len(rows))


def bf_itemsets(db):
    """Every non-empty label set over the database's items."""
    labels = sorted(item.label for item in db.items)
    return [frozenset(c) for k in range(1, len(labels) + 1) for c in combinations(labels, k)]


def bf_support_counts(db):
    """Count of every itemset that occurs at all, by expanding each row into its subsets."""
    counts = Counter()
    for row in rows_of(db):
        labels = sorted(row)
        for k in range(1, len(labels) + 1):
            counts.update(frozenset(c) for c in combinations(labels, k))
    return counts


def bf_frequent(db, minsup):
    rows = rows_of(db)
    return {s for s in bf_itemsets(db) if bf_support(rows, s) >= Fraction(str(minsup))}


def bf_closed(db, minsup):
    rows = rows_of(db)
    frequent = bf_frequent(db, minsup)
    return {
        s for s in frequent
        if not any(s < t and bf_support(rows, t) == bf_support(rows, s) for t in bf_itemsets(db))
    }


def bf_maximal(db, minsup):
    frequent = bf_frequent(db, minsup)
    return {s for s in frequent if not any(s < t for t in frequent)}


def bf_indirect(db, t_s, t_f, t_d, max_mediator_len):
    """(a, b, mediator) label triples meeting every indirect-association condition."""
    rows = rows_of(db)
    t_s, t_f, t_d = (Fraction(str(t)) for t in (t_s, t_f, t_d))
    labels = sorted(item.label for item in db.items)
    found = set()
    for a, b in combinations(labels, 2):
        if bf_support(rows, {a, b}) >= t_s:
            continue
        others = [x for x in labels if x not in (a, b)]
        for k in range(1, max_mediator_len + 1):
            for mediator in combinations(others, k):
                m = frozenset(mediator)
                ok = True
                for leaf in (a, b):
                    joint = bf_support(rows, m | {leaf})
                    denominator = bf_support(rows, {leaf}) * bf_support(rows, m)
                    if joint < t_f or denominator == 0 or joint / denominator < t_d:
                        ok = False
                        break
                if ok:
                    found.add((a, b, m))
    return found

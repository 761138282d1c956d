import traceback
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from constraints import (
    ConstraintAst,
    EvaluationTrace,
    evaluate_constraint,
    parse_constraint,
    parse_edge_constraint,
)
from constraints.ast_nodes import LiteralSet, iter_nodes
from curves import InterestingnessCurve, compute_curve
from database import Pattern, TransactionDatabase
from hypergraph import (
    ItemHyperGraph,
    build_ihg,
    ihg_from_biclique,
    ihg_from_clique,
    ihg_from_indirect,
    ihg_from_star,
)
from miners import (
    MiningParams,
    compression_contributors,
    mine_all_correlation,
    mine_biclique,
    mine_clique,
    mine_closed,
    mine_frequent,
    mine_indirect,
    mine_maximal,
    mine_star,
    mine_unexpected_correlation,
)
from utils.logger import MiningLogger


class MiningService:

    KINDS = (
        "frequent", "closed", "maximal", "clique", "biclique",
        "indirect", "star", "allcorr", "unexpected",
    )
    GRAPH_KINDS = ("indirect", "star", "clique", "biclique")

    def __init__(self, db: TransactionDatabase, params: Optional[MiningParams] = None):
        self.logger = MiningLogger.get_logger(__name__)
        self.db = db
        self.params = (params or MiningParams()).validate()
        self.logger.info(f"Mining service ready: {db.n} transactions, {db.m} items")

    def _miners(self) -> Dict[str, Callable[[], list]]:
        db, p = self.db, self.params
        return {
            "frequent": lambda: mine_frequent(db, p.minisupport, p.max_pattern_len),
            "closed": lambda: mine_closed(db, p.minisupport),
            "maximal": lambda: mine_maximal(db, p.minisupport),
            "clique": lambda: mine_clique(db, p.minisupport),
            "biclique": lambda: mine_biclique(db, p.minisupport, p.min_side),
            "indirect": lambda: mine_indirect(db, p),
            "star": lambda: mine_star(db, p),
            "allcorr": lambda: mine_all_correlation(db, p.min_correlation, p.max_pattern_len),
            "unexpected": lambda: mine_unexpected_correlation(
                db, p.min_correlation, p.max_pattern_len, p.include_pairs
            ),
        }

    def mine(self, kind: str) -> list:
        miners = self._miners()
        if kind not in miners:
            raise ValueError(f"unknown pattern kind {kind!r}")
        try:
            return miners[kind]()
        except Exception:
            self.logger.debug(f"Mining {kind} failed\n{traceback.format_exc()}")
            raise

    def records(self, kind: str) -> List[dict]:
        return [result.to_record(self.db) for result in self.mine(kind)]

    def compression_records(self) -> List[dict]:
        closed = mine_closed(self.db, self.params.minisupport)
        records = []
        for found, shared in compression_contributors(self.db, closed):
            record = found.to_record(self.db)
            record["measures"]["equal_support_subpatterns"] = shared
            records.append(record)
        return records

    def graphs(self, kind: str) -> List[ItemHyperGraph]:
        builders = {
            "indirect": ihg_from_indirect,
            "star": ihg_from_star,
            "clique": ihg_from_clique,
            "biclique": ihg_from_biclique,
        }
        if kind not in builders:
            raise ValueError(f"no hypergraph view for pattern kind {kind!r}")
        return [builders[kind](self.db, result) for result in self.mine(kind)]

    # -- single-pattern operations --------------------------------------

    def with_labels(self, labels: Sequence[str], ast: Optional[ConstraintAst] = None) -> "MiningService":
        """
        Service over a database that also knows every label mentioned by the
        request; unknown labels become items with support 0.
        """
        wanted = list(labels)
        if ast is not None:
            for node in iter_nodes(ast):
                if isinstance(node, LiteralSet):
                    wanted.extend(node.labels)
        unknown = [label for label in wanted if not self.db.has_label(label)]
        if not unknown:
            return self
        self.logger.warning(f"Items not in the database, treated as support 0: {', '.join(sorted(set(unknown)))}")
        return MiningService(self.db.with_items(unknown), self.params)

    def resolve(self, labels: Sequence[str]) -> Pattern:
        return self.db.pattern_of(labels)

    def evaluate(self, labels: Sequence[str], constraint: str) -> Tuple["MiningService", Pattern, ConstraintAst, EvaluationTrace]:
        ast = parse_constraint(constraint)
        service = self.with_labels(labels, ast)
        pattern = service.resolve(labels)
        return service, pattern, ast, evaluate_constraint(service.db, ast, pattern)

    def hypergraph(self, labels: Sequence[str], constraint: str) -> ItemHyperGraph:
        ast = parse_edge_constraint(constraint)
        service = self.with_labels(labels, ast)
        return build_ihg(service.db, service.resolve(labels), ast)

    def curve(self, labels: Sequence[str], measure: str) -> InterestingnessCurve:
        service = self.with_labels(labels)
        return compute_curve(service.db, service.resolve(labels), measure)

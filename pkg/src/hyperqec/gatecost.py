"""Two-qubit CZ counts: hyperedges as multi-controlled Z versus clique expansion."""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraph import Hypergraph


def _check_size(k: int):
    if isinstance(k, bool) or not isinstance(k, int) or k <= 0:
        raise ValueError(f"edge size must be a positive integer, got {k!r}")


def hyper_cost(k: int) -> int:
    """CZ gates for one k-qubit controlled-Z: 2k in general, 1 for a plain CZ, 0 for a single-qubit Z."""
    _check_size(k)
    if k == 1:
        return 0
    if k == 2:
        return 1
    return 2 * k


def clique_cost(k: int) -> int:
    """CZ gates for the complete graph on k vertices."""
    _check_size(k)
    return k * (k - 1) // 2


def advantage(k: int) -> int:
    return clique_cost(k) - hyper_cost(k)


@dataclass(frozen=True)
class CostReport:
    per_edge: tuple[tuple[int, int, int], ...]
    total_hyper: int
    total_clique: int

    @property
    def advantage(self) -> int:
        return self.total_clique - self.total_hyper

    def to_dict(self) -> dict:
        return {
            "per_edge": [{"size": k, "hyper_cost": h, "clique_cost": c} for k, h, c in self.per_edge],
            "total_hyper": self.total_hyper,
            "total_clique": self.total_clique,
            "advantage": self.advantage,
        }


def compare(g: Hypergraph) -> CostReport:
    """Cost of the declared edges only; the implicit input links are not counted."""
    rows = tuple((len(e), hyper_cost(len(e)), clique_cost(len(e))) for e in g.edges)
    return CostReport(rows, sum(r[1] for r in rows), sum(r[2] for r in rows))

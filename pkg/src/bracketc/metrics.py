"""Accuracy/completeness scoring and Pareto frontier assembly.

ACCURACY = |M ∩ C| / |M| and COMPLETENESS = |M ∩ C| / |C|, where M is the
set of bracket-free statements a program produces and C the reference
corpus.  Both are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptyCorpus
from .syntax import Statement

CSV_HEADER = "method,budget,size,accuracy,completeness,m,c,intersection,truncated"


@dataclass(frozen=True)
class MetricsReport:
    accuracy: Fraction
    completeness: Fraction
    size_chars: int
    m_count: int
    c_count: int
    intersection_count: int
    truncated: bool

    def as_kv(self) -> str:
        lines = [
            f"accuracy={float(self.accuracy):.6f}",
            f"completeness={float(self.completeness):.6f}",
            f"size_chars={self.size_chars}",
            f"m_count={self.m_count}",
            f"c_count={self.c_count}",
            f"intersection_count={self.intersection_count}",
            f"truncated={str(self.truncated).lower()}",
        ]
        return "\n".join(lines)


@dataclass(frozen=True)
class FrontierPoint:
    budget_chars: int
    report: MetricsReport
    method_label: str

    def as_csv_row(self) -> str:
        r = self.report
        return ",".join([
            self.method_label,
            str(self.budget_chars),
            str(r.size_chars),
            f"{float(r.accuracy):.6f}",
            f"{float(r.completeness):.6f}",
            str(r.m_count),
            str(r.c_count),
            str(r.intersection_count),
            str(r.truncated).lower(),
        ])


def evaluate(m: Iterable[Statement], c: Iterable[Statement],
             size_chars: int, truncated: bool = False) -> MetricsReport:
    """Score produced set M against corpus C by exact intersection."""
    m_set = frozenset(m)
    c_set = frozenset(c)
    if not c_set:
        raise EmptyCorpus("reference corpus is empty")
    inter = len(m_set & c_set)
    accuracy = Fraction(inter, len(m_set)) if m_set else Fraction(0)
    completeness = Fraction(inter, len(c_set))
    return MetricsReport(
        accuracy=accuracy,
        completeness=completeness,
        size_chars=size_chars,
        m_count=len(m_set),
        c_count=len(c_set),
        intersection_count=inter,
        truncated=truncated,
    )


def _dominates(a: FrontierPoint, b: FrontierPoint) -> bool:
    """a dominates b in (accuracy up, completeness up, size down)."""
    ra, rb = a.report, b.report
    ge = (ra.accuracy >= rb.accuracy and ra.completeness >= rb.completeness
          and ra.size_chars <= rb.size_chars)
    gt = (ra.accuracy > rb.accuracy or ra.completeness > rb.completeness
          or ra.size_chars < rb.size_chars)
    return ge and gt


def pareto_filter(points: Sequence[FrontierPoint]) -> list[FrontierPoint]:
    """Non-dominated points, sorted by size then accuracy (stable)."""
    kept = [p for p in points
            if not any(_dominates(q, p) for q in points)]
    return sorted(kept, key=lambda p: (p.report.size_chars, p.report.accuracy))

"""(1,1) knots in lens spaces: one grading problem per Spin^c class.

With signed X-count p the primitive-bigon graph splits into p components.
Each component is normalized and reduced on its own; class ids follow the
smallest X-letter label in the class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grading import relative_gradings
from .invariant import BigradedRank, _check, analyze
from .word import CyclicRelator


@dataclass(frozen=True)
class SpincPartition:
    classes: tuple[tuple[int, ...], ...]
    survivors: tuple[int, ...] | None = None
    wrap_bound: int | None = None

    @property
    def p(self) -> int:
        return len(self.classes)

    def class_of(self, label: int) -> int:
        for i, members in enumerate(self.classes):
            if label in members:
                return i
        raise KeyError(label)


def spinc_partition(relator: CyclicRelator, p: int, wrap_bound: int | None = None) -> SpincPartition:
    """Connected components of the primitive-bigon graph, exactly ``p`` of them.

    >>> from hfkword.word import parse_relator
    >>> spinc_partition(parse_relator("XYXy"), 2).classes
    ((1,), (2,))
    """
    _check(relator, p)
    rel = relative_gradings(relator, expected_p=p, wrap_bound=wrap_bound)
    t = rel.table
    return SpincPartition(tuple(tuple(t.members(c)) for c in range(t.component_count)), wrap_bound=rel.wrap_bound)


def lens_analysis(relator: CyclicRelator, p: int, wrap_bound: int | None = None):
    """Full per-class analysis; returns ``(partition, KnotAnalysis)``."""
    analysis = analyze(relator, p, wrap_bound)
    t = analysis.table
    survivors = tuple(sorted(analysis.absolute.reduced.survivors, key=lambda s: t.component[s - 1]))
    partition = SpincPartition(
        tuple(tuple(t.members(c)) for c in range(t.component_count)),
        survivors,
        analysis.relative.wrap_bound,
    )
    return partition, analysis


def compute_hfk_lens(relator: CyclicRelator, p: int, wrap_bound: int | None = None) -> list[BigradedRank]:
    """Bigraded ranks per Spin^c class, in class-id order.  For p = 1 this is ``[compute_hfk(relator)]``."""
    return lens_analysis(relator, p, wrap_bound)[1].per_class

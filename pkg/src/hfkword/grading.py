"""Relative and absolute gradings of the X-letter generators.

Every primitive bigon from x_a to x_b fixes the differences
F(a) - F(b) = n_z - n_w, M(a) - M(b) = +-1 - 2 n_w (sign = orientation) and
w(a) - w(b) = n_w.  The gradings are potentials on the graph of primitive
bigons; each connected component is one Spin^c class.  Absolute Alexander
gradings come from the mod-2 symmetry of the F-multiset, absolute Maslov
gradings from reducing the relator to a single X-letter per class.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass, field, replace

from .basepoint import BasepointPair, word_basepoints
from .bigon import (
    Orientation,
    PrimitiveBigon,
    classify_span,
    default_wrap_bound,
    find_primitive_spans,
)
from .errors import (
    DisconnectedGradingError,
    HFKWordError,
    InconsistentGradingError,
    InternalError,
    NormalizationError,
    ReductionStallError,
)
from .word import CyclicRelator, Letter, _subscript


@dataclass(frozen=True)
class GradingEdge:
    source: int
    target: int
    dF: int
    dM: int
    dw: int
    bigon: PrimitiveBigon
    basepoints: BasepointPair


@dataclass(frozen=True)
class GradingGraph:
    size: int
    edges: tuple[GradingEdge, ...]

    def neighbours(self) -> dict[int, list[tuple[int, GradingEdge]]]:
        adj: dict[int, list] = {k: [] for k in range(1, self.size + 1)}
        for e in self.edges:
            adj[e.source].append((e.target, e))
            adj[e.target].append((e.source, e))
        return adj


def edge_weights(orientation: Orientation, p: BasepointPair) -> tuple[int, int, int]:
    """(dF, dM, dw) for a bigon running from its start letter to its end letter."""
    return p.n_z - p.n_w, orientation.sign - 2 * p.n_w, p.n_w


def build_grading_graph(relator: CyclicRelator, bigons) -> GradingGraph:
    """One edge per primitive bigon.  ``bigons`` holds PrimitiveBigon or (bigon, P) pairs."""
    edges = []
    for item in bigons:
        bigon, p = item if isinstance(item, tuple) else (item, word_basepoints(item.word))
        dF, dM, dw = edge_weights(bigon.orientation, p)
        edges.append(GradingEdge(bigon.span.start_x, bigon.span.end_x, dF, dM, dw, bigon, p))
    return GradingGraph(relator.x_letter_count, tuple(edges))


@dataclass(frozen=True)
class GradingTable:
    """Per-label gradings; list index ``k`` holds X-letter label ``k + 1``."""

    F: tuple[int, ...]
    M: tuple[int, ...]
    w: tuple[int, ...]
    component: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.F)

    @property
    def component_count(self) -> int:
        return max(self.component) + 1 if self.component else 0

    def members(self, component: int) -> list[int]:
        return [k + 1 for k, c in enumerate(self.component) if c == component]

    def shifted(self, component: int, dF: int = 0, dM: int = 0, dw: int = 0) -> "GradingTable":
        def move(values, delta):
            return tuple(v + delta if c == component else v for v, c in zip(values, self.component))

        return replace(self, F=move(self.F, dF), M=move(self.M, dM), w=move(self.w, dw))

    def rows(self):
        for k in range(self.size):
            yield k + 1, self.F[k], self.M[k], self.w[k], self.component[k]


def solve_relative(graph: GradingGraph) -> GradingTable:
    """Breadth-first potentials, the smallest label of each component pinned at 0.

    Component ids follow the order of each component's smallest label.
    """
    n = graph.size
    F = [None] * (n + 1)
    M = [None] * (n + 1)
    w = [None] * (n + 1)
    comp = [None] * (n + 1)
    adj = graph.neighbours()
    cid = 0
    for root in range(1, n + 1):
        if comp[root] is not None:
            continue
        F[root] = M[root] = w[root] = 0
        comp[root] = cid
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b, e in adj[a]:
                if comp[b] is not None:
                    continue
                sign = 1 if e.source == a else -1
                F[b] = F[a] - sign * e.dF
                M[b] = M[a] - sign * e.dM
                w[b] = w[a] - sign * e.dw
                comp[b] = cid
                queue.append(b)
        cid += 1
    for e in graph.edges:
        got = (F[e.source] - F[e.target], M[e.source] - M[e.target], w[e.source] - w[e.target])
        if got != (e.dF, e.dM, e.dw):
            raise InconsistentGradingError(
                f"bigon {e.bigon.span} needs shift {(e.dF, e.dM, e.dw)} but a cycle forces {got}",
                stage="grading",
                witness=str(e.bigon.span),
            )
    return GradingTable(tuple(F[1:]), tuple(M[1:]), tuple(w[1:]), tuple(comp[1:]))


def is_mod2_symmetric(values) -> bool:
    counts = Counter(values)
    return all(counts[i] % 2 == counts[-i] % 2 for i in counts)


def alexander_shift(values) -> int:
    """The unique ``c`` making ``{v + c}`` symmetric mod 2 about 0.

    Values with odd multiplicity must form a set symmetric about ``-c``,
    which pins ``c`` to minus the midpoint of their range.

    >>> alexander_shift([0, 1, 2]), alexander_shift([0, 0, 1, 1, 2])
    (-1, -2)
    """
    counts = Counter(values)
    odd = sorted(v for v, k in counts.items() if k % 2)
    if not odd:
        raise NormalizationError(
            "every value has even multiplicity, so every shift satisfies the symmetry",
            candidates=(),
        )
    twice_mid = odd[0] + odd[-1]
    if twice_mid % 2 == 0:
        c = -twice_mid // 2
        if is_mod2_symmetric([v + c for v in values]):
            return c
    raise NormalizationError(
        f"no shift makes the Alexander multiset {sorted(values)} symmetric mod 2",
        candidates=(),
    )


def normalize_alexander(table: GradingTable, component: int = 0) -> int:
    return alexander_shift([table.F[k - 1] for k in table.members(component)])


# -------------------------------------------------------------- reduction


@dataclass(frozen=True)
class ReductionStep:
    start: int
    end: int
    deleted: str
    before: str
    after: str
    original: bool


@dataclass(frozen=True)
class ReducedRelator:
    """Letters left after deleting w-trivial primitive disk words.

    Each entry is ``(letter, label)``; Y-letters have label ``None``.
    """

    letters: tuple[tuple[Letter, int | None], ...]
    steps: tuple[ReductionStep, ...] = ()

    @property
    def survivors(self) -> tuple[int, ...]:
        return tuple(lab for a, lab in self.letters if a.is_x)

    def __str__(self) -> str:
        return render_labelled(self.letters)

    def trace(self) -> list[str]:
        return [s.after for s in self.steps]


def render_labelled(letters) -> str:
    out = []
    for a, lab in letters:
        s = a.axis if a.sign > 0 else a.axis + "̄"
        if lab is not None:
            s += _subscript(lab)
        out.append(s)
    return " ".join(out) if out else "(empty)"


def _primitive_spans_of(current) -> list[tuple[int, int, int]]:
    """(start index, end index, X-count) of primitive disk words within one period."""
    xs = [i for i, (a, _) in enumerate(current) if a.is_x]
    m = len(xs)
    spans = []
    for k in range(m):
        total = current[xs[k]][0].sign
        for t in range(1, m):
            total += current[xs[(k + t) % m]][0].sign
            if total == 0:
                spans.append((xs[k], xs[(k + t) % m], t + 1))
                break
    return spans


def _cut(current, i: int, j: int):
    """Remove letters i..j inclusive, cyclically."""
    if i <= j:
        return current[:i] + current[j + 1 :]
    return current[j + 1 : i]


def _span_letters(current, i: int, j: int):
    return current[i : j + 1] if i <= j else current[i:] + current[: j + 1]


def reduce_relator(
    relator: CyclicRelator,
    w,
    component=None,
    expected: int | None = None,
    rng: random.Random | None = None,
    pool: str = "shortest",
) -> ReducedRelator:
    """Delete primitive disk words whose endpoints share their original w-grading.

    ``w`` and ``component`` are per-label sequences from the full relator.  A
    span only qualifies when both ends lie in the same component.  The
    shortest span (in letters) goes first, ties broken by lowest start label;
    with ``rng`` the tie among equally short spans is broken at random.
    ``pool="fewest-x"`` widens the random choice to every span that deletes
    the fewest X-letters, whatever its length.
    ``expected`` is the number of survivors required (one per component).
    """
    if pool not in ("shortest", "fewest-x"):
        raise ValueError(f"unknown pool {pool!r}")
    n = relator.x_letter_count
    if component is None:
        component = [0] * n
    if expected is None:
        expected = max(component) + 1
    current = []
    label = 0
    for a in relator.letters:
        if a.is_x:
            label += 1
            current.append((a, label))
        else:
            current.append((a, None))
    steps = []
    while True:
        candidates = []
        for i, j, _count in _primitive_spans_of(current):
            la, lb = current[i][1], current[j][1]
            if component[la - 1] != component[lb - 1] or w[la - 1] != w[lb - 1]:
                continue
            chunk = _span_letters(current, i, j)
            labels = [lab for _, lab in chunk if lab is not None]
            original = all((b - a) % n == 1 for a, b in zip(labels, labels[1:]))
            candidates.append(((len(chunk), la), i, j, chunk, original, len(labels)))
        if not candidates:
            break
        if len(steps) > n:
            raise InternalError("reduction did not terminate within the X-letter count", stage="reduce")
        if rng is None:
            _, i, j, chunk, original, _ = min(candidates, key=lambda c: c[0])
        else:
            size = (lambda c: c[5]) if pool == "fewest-x" else (lambda c: c[0][0])
            least = min(size(c) for c in candidates)
            _, i, j, chunk, original, _ = rng.choice([c for c in candidates if size(c) == least])
        before = render_labelled(current)
        current = _cut(current, i, j)
        steps.append(
            ReductionStep(chunk[0][1], chunk[-1][1], render_labelled(chunk), before, render_labelled(current), original)
        )
    result = ReducedRelator(tuple(current), tuple(steps))
    survivors = result.survivors
    if not survivors:
        raise InternalError("reduction deleted every X-letter", stage="reduce")
    per_class = Counter(component[s - 1] for s in survivors)
    if len(survivors) != expected or any(k != 1 for k in per_class.values()):
        raise ReductionStallError(
            f"reduction stalls at {result} with {len(survivors)} X-letters "
            f"{{{', '.join('x%d' % s for s in survivors)}}}; expected {expected}",
            survivors=survivors,
            word=str(result),
        )
    return result


def absolute_maslov(table: GradingTable, survivors) -> GradingTable:
    """Shift M on each component so that its surviving letter sits at M = 0."""
    for s in survivors:
        table = table.shifted(table.component[s - 1], dM=-table.M[s - 1])
    return table


# ---------------------------------------------------------------- pipeline


@dataclass
class RelativeGradings:
    """Steps I-III: enumerated bigons, their counts, and the relative potentials."""

    relator: CyclicRelator
    bigons: list[PrimitiveBigon]
    basepoints: list[BasepointPair]
    graph: GradingGraph
    table: GradingTable
    wrap_bound: int
    warnings: list[str] = field(default_factory=list)


def relative_gradings(relator: CyclicRelator, expected_p: int = 1, wrap_bound: int | None = None) -> RelativeGradings:
    """Enumerate, count and solve, raising the wrap bound while the graph looks disconnected."""
    n = relator.x_letter_count
    bound = wrap_bound if wrap_bound is not None else default_wrap_bound(relator)
    ceiling = max(4 * n, bound)
    warnings = []
    while True:
        spans, unresolved = find_primitive_spans(relator, bound)
        bigons = []
        for span in spans:
            try:
                bigons.append(classify_span(relator, span))
            except HFKWordError as err:
                err.stage = err.stage or "bigon"
                raise
        counts = [word_basepoints(b.word) for b in bigons]
        graph = build_grading_graph(relator, list(zip(bigons, counts)))
        table = solve_relative(graph)
        if table.component_count == expected_p and not unresolved:
            break
        if bound >= ceiling:
            if table.component_count != expected_p:
                raise DisconnectedGradingError(
                    f"primitive-bigon graph has {table.component_count} components, expected {expected_p} "
                    f"(wrap bound {bound})",
                    stage="grading",
                    witness=[table.members(c) for c in range(table.component_count)],
                )
            warnings.append(f"walks from x{unresolved} unresolved at wrap bound {bound}")
            break
        new_bound = min(max(2 * bound, bound + 1), ceiling)
        warnings.append(f"wrap bound raised from {bound} to {new_bound}")
        bound = new_bound
    return RelativeGradings(relator, bigons, counts, graph, table, bound, warnings)


@dataclass
class AbsoluteGradings:
    relative: RelativeGradings
    table: GradingTable
    alexander_shifts: tuple[int, ...]
    reduced: ReducedRelator


def absolute_gradings(rel: RelativeGradings) -> AbsoluteGradings:
    """Step IV on every component: symmetric Alexander shift, reduction, Maslov pin."""
    table = rel.table
    shifts = []
    for c in range(table.component_count):
        try:
            shift = normalize_alexander(table, c)
        except NormalizationError as err:
            if table.component_count > 1:
                err.message = f"class {c}: {err.message}"
            raise
        shifts.append(shift)
        table = table.shifted(c, dF=shift)
    reduced = reduce_relator(rel.relator, rel.table.w, rel.table.component, table.component_count)
    table = absolute_maslov(table, reduced.survivors)
    return AbsoluteGradings(rel, table, tuple(shifts), reduced)

"""Exact Sudoku numbers: minimum support sizes for uniquely extendable colorings."""

from __future__ import annotations

import itertools
import multiprocessing
import time
from dataclasses import dataclass, field

from .chromatic import chromatic_number
from .coloring import ExtensionKind, PartialColoring, is_proper
from .errors import BudgetExceededError, DisconnectedGraphError
from .extension import count_extensions
from .graph import Graph, build, is_connected

PROVENANCE_EXACT = "exact-search"

PRUNE_PENDANT = "pendant"
PRUNE_UNCOLORED_EDGE = "uncolored-edge"


@dataclass(frozen=True)
class Certificate:
    """A graph, a partial coloring claimed to extend uniquely, and its origin."""

    graph: Graph
    partial: PartialColoring
    claimed_sn: int
    provenance: str


@dataclass
class SearchReport:
    sn: int
    certificate: Certificate
    subsets_examined: int
    colorings_examined: int
    pruned_by: dict[str, int]
    elapsed_seconds: float


@dataclass
class VerificationResult:
    ok: bool
    checks: list[dict] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append({"name": name, "ok": ok, "detail": detail})
        if not ok:
            self.ok = False


def search_lower_bound(chi: int) -> int:
    """Smallest support size worth trying: 1 for bipartite, chi-1 otherwise."""
    return 1 if chi <= 2 else chi - 1


def prune_subset(g: Graph, subset, k: int) -> str | None:
    """Name of the lemma ruling out this support, or None (defined for k >= 3).

    "pendant" fires on an uncolored degree-1 vertex; "uncolored-edge" fires on
    an edge both of whose ends are uncolored with degree at most k-1. Either
    way no coloring of the support can have a unique completion.
    """
    if k < 3:
        raise ValueError(f"pruning assumes k = chi(g) >= 3, got k = {k}")
    in_s = bytearray(g.n)
    for v in subset:
        in_s[v] = 1
    for v in range(g.n):
        if not in_s[v] and g.degree(v) == 1:
            return PRUNE_PENDANT
    limit = k - 1
    for u, v in g.edges:
        if (
            not in_s[u]
            and not in_s[v]
            and g.degree(u) <= limit
            and g.degree(v) <= limit
        ):
            return PRUNE_UNCOLORED_EDGE
    return None


def canonical_colorings(g: Graph, subset, k: int):
    """Proper colorings of g[subset], one per color-permutation orbit.

    Canonical form: scanning the support in ascending vertex order, each vertex
    reuses a previously seen color or opens the next fresh one. For k >= 3 only
    representatives with at least k-1 distinct colors are yielded (a uniquely
    extendable coloring can never use fewer). Yields PartialColorings in
    canonical-form order.
    """
    verts = sorted(subset)
    need = k - 1 if k >= 3 else 1
    inner_adj: list[list[int]] = []
    position = {v: i for i, v in enumerate(verts)}
    for v in verts:
        inner_adj.append([position[u] for u in g.adj[v] if u in position])
    t = len(verts)
    colors = [0] * t

    def rec(i: int, used: int):
        if used + (t - i) < need:
            return
        if i == t:
            yield PartialColoring(k, {verts[j]: colors[j] for j in range(t)})
            return
        taken = {colors[j] for j in inner_adj[i] if j < i}
        top = min(k, used + 1)
        for c in range(1, top + 1):
            if c in taken:
                continue
            colors[i] = c
            yield from rec(i + 1, max(used, c))
            colors[i] = 0

    yield from rec(0, 0)


def _evaluate_subset(g: Graph, k: int, subset, prune: bool):
    """Try every canonical coloring on one support.

    Returns (prune_reason, colorings_tried, winning_assignments or None).
    """
    if prune and k >= 3:
        reason = prune_subset(g, subset, k)
        if reason is not None:
            return reason, 0, None
    tried = 0
    for c in canonical_colorings(g, subset, k):
        tried += 1
        outcome = count_extensions(g, c, 2)
        if outcome.kind is ExtensionKind.UNIQUE:
            return None, tried, dict(c.assignments)
    return None, tried, None


_POOL_STATE: dict = {}


def _pool_init(n: int, edges, k: int, prune: bool) -> None:
    _POOL_STATE["g"] = build(n, list(edges))
    _POOL_STATE["k"] = k
    _POOL_STATE["prune"] = prune


def _pool_eval(subset):
    return _evaluate_subset(
        _POOL_STATE["g"], _POOL_STATE["k"], subset, _POOL_STATE["prune"]
    )


class _Budget:
    def __init__(self, max_subsets: int | None, max_seconds: float | None):
        self.max_subsets = max_subsets
        self.max_seconds = max_seconds
        self.start = time.perf_counter()

    def check(self, subsets_used: int, proven: int) -> None:
        if self.max_subsets is not None and subsets_used >= self.max_subsets:
            raise BudgetExceededError(
                f"subset budget {self.max_subsets} exhausted; sn >= {proven}",
                lower_bound=proven,
            )
        if self.max_seconds is not None and time.perf_counter() - self.start >= self.max_seconds:
            raise BudgetExceededError(
                f"time budget {self.max_seconds}s exhausted; sn >= {proven}",
                lower_bound=proven,
            )

    def elapsed(self) -> float:
        return time.perf_counter() - self.start


def sn_exact(
    g: Graph,
    *,
    prune: bool = True,
    workers: int = 1,
    max_subsets: int | None = None,
    max_seconds: float | None = None,
) -> SearchReport:
    """Exact Sudoku number by exhaustive search.

    Supports are tried in ascending size from the lower bound, each size in
    lexicographic subset order and each support in canonical coloring order,
    so the first success is a deterministic, worker-count-independent winner.
    """
    if g.n < 2:
        raise ValueError("Sudoku numbers need at least 2 vertices (chi >= 2)")
    if not is_connected(g):
        raise DisconnectedGraphError("Sudoku numbers are defined for connected graphs")
    k, _ = chromatic_number(g)
    budget = _Budget(max_subsets, max_seconds)
    subsets_examined = 0
    colorings_examined = 0
    pruned_by = {PRUNE_PENDANT: 0, PRUNE_UNCOLORED_EDGE: 0}

    def finish(subset, assignments) -> SearchReport:
        partial = PartialColoring(k, assignments)
        cert = Certificate(g, partial, len(subset), PROVENANCE_EXACT)
        return SearchReport(
            sn=len(subset),
            certificate=cert,
            subsets_examined=subsets_examined,
            colorings_examined=colorings_examined,
            pruned_by=dict(pruned_by),
            elapsed_seconds=budget.elapsed(),
        )

    for size in range(search_lower_bound(k), g.n):
        subsets = itertools.combinations(range(g.n), size)
        if workers <= 1:
            for subset in subsets:
                budget.check(subsets_examined, size)
                subsets_examined += 1
                reason, tried, win = _evaluate_subset(g, k, subset, prune)
                colorings_examined += tried
                if reason is not None:
                    pruned_by[reason] += 1
                elif win is not None:
                    return finish(subset, win)
        else:
            subset_list = list(subsets)
            chunk = max(1, len(subset_list) // (workers * 8) or 1)
            ctx = multiprocessing.get_context()
            with ctx.Pool(
                workers, initializer=_pool_init, initargs=(g.n, g.edges, k, prune)
            ) as pool:
                results = pool.imap(_pool_eval, subset_list, chunksize=chunk)
                for subset, (reason, tried, win) in zip(subset_list, results):
                    budget.check(subsets_examined, size)
                    subsets_examined += 1
                    colorings_examined += tried
                    if reason is not None:
                        pruned_by[reason] += 1
                    elif win is not None:
                        pool.terminate()
                        return finish(subset, win)
    raise AssertionError("unreachable: sn(G) <= n - 1 for every connected graph")


def verify_certificate(cert: Certificate, *, exact: bool = False) -> VerificationResult:
    """Re-check everything a certificate claims.

    Always: connectivity, support size, properness, unique extension, and the
    color-count observation (a unique extension forces >= k-1 support colors).
    With exact=True, re-run the full search and confirm minimality.
    """
    g = cert.graph
    c = cert.partial
    result = VerificationResult(ok=True)
    result.add("connected", is_connected(g) and g.n >= 2, f"n={g.n}")
    result.add(
        "support-size",
        len(c.assignments) == cert.claimed_sn,
        f"|S|={len(c.assignments)}, claimed {cert.claimed_sn}",
    )
    proper = is_proper(g, c)
    result.add("proper", proper, "no monochromatic edge" if proper else "conflict found")
    if proper:
        outcome = count_extensions(g, c, 2)
        result.add(
            "unique-extension",
            outcome.kind is ExtensionKind.UNIQUE,
            f"kind={outcome.kind.value}",
        )
        if outcome.kind is ExtensionKind.UNIQUE and len(c.assignments) < g.n:
            used = len(c.colors_used)
            result.add(
                "color-count",
                used >= c.k - 1,
                f"{used} colors on the support, k={c.k}",
            )
    if exact and result.ok:
        report = sn_exact(g)
        result.add(
            "minimal",
            report.sn == cert.claimed_sn,
            f"search found sn={report.sn}, claimed {cert.claimed_sn}",
        )
    return result


@dataclass
class ScanReport:
    max_n: int
    classes_scanned: dict[int, int]
    extremal: list[dict]
    counterexamples: list[dict]


def connected_graphs_up_to_iso(n: int):
    """All connected graphs on exactly n vertices, one per isomorphism class.

    Enumerates edge subsets and keeps a graph only when its edge bitmask is
    minimal over all vertex permutations. Deterministic ascending order.
    """
    if n < 1:
        return
    if n == 1:
        yield build(1, [])
        return
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    index = {p: i for i, p in enumerate(pairs)}
    emaps = []
    for perm in itertools.permutations(range(n)):
        emap = [0] * len(pairs)
        for (i, j), idx in index.items():
            a, b = perm[i], perm[j]
            emap[idx] = 1 << index[(a, b) if a < b else (b, a)]
        emaps.append(emap)
    emaps = emaps[1:]
    full_vertex_mask = (1 << n) - 1
    for mask in range(1, 1 << len(pairs)):
        if mask.bit_count() < n - 1:
            continue
        nbr = [0] * n
        rest = mask
        while rest:
            low = rest & (-rest)
            rest ^= low
            u, v = pairs[low.bit_length() - 1]
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                lb = f & (-f)
                f ^= lb
                nxt |= nbr[lb.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        if seen != full_vertex_mask:
            continue
        minimal = True
        for emap in emaps:
            mm = 0
            b = mask
            while b:
                low = b & (-b)
                b ^= low
                mm |= emap[low.bit_length() - 1]
                if mm >= mask:
                    break
            else:
                if mm < mask:
                    minimal = False
                    break
        if not minimal:
            continue
        edges = []
        rest = mask
        while rest:
            low = rest & (-rest)
            rest ^= low
            edges.append(pairs[low.bit_length() - 1])
        yield build(n, edges)


def conjecture_scan(max_n: int, *, max_seconds: float | None = None) -> ScanReport:
    """Compute sn for every connected graph class up to max_n vertices.

    Reports the classes hitting the extreme value n-1 and flags any that are
    not complete. Single-vertex graphs fall outside the definition (chi = 1)
    and are skipped; K_2 is reported but marked degenerate (chi < 3).
    """
    if not (2 <= max_n <= 7):
        raise ValueError(f"scan supports 2 <= max_n <= 7, got {max_n}")
    start = time.perf_counter()
    classes_scanned: dict[int, int] = {}
    extremal: list[dict] = []
    for n in range(2, max_n + 1):
        count = 0
        for g in connected_graphs_up_to_iso(n):
            if max_seconds is not None and time.perf_counter() - start >= max_seconds:
                raise BudgetExceededError(
                    f"time budget {max_seconds}s exhausted during scan at n={n}"
                )
            count += 1
            report = sn_exact(g)
            if report.sn == n - 1:
                chi = report.certificate.partial.k
                complete = g.m == n * (n - 1) // 2
                extremal.append(
                    {
                        "n": n,
                        "edges": [list(e) for e in g.edges],
                        "sn": report.sn,
                        "complete": complete,
                        "degenerate": chi < 3,
                    }
                )
        classes_scanned[n] = count
    counterexamples = [row for row in extremal if not row["complete"]]
    return ScanReport(
        max_n=max_n,
        classes_scanned=classes_scanned,
        extremal=extremal,
        counterexamples=counterexamples,
    )

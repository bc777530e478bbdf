"""Exact chromatic number via branch and bound.

Vertices are chosen by saturation degree (ties: higher degree, then lower
index); a greedily grown clique provides the lower bound and is pre-colored
to break color symmetry. Deterministic by construction.
"""

from __future__ import annotations

from .coloring import PartialColoring
from .errors import BudgetExceededError
from .graph import Graph

DEFAULT_NODE_BUDGET = 50_000_000


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily by degree (ties: lower index)."""
    if g.n == 0:
        return []
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    clique = [order[0]]
    members = {order[0]}
    for v in order[1:]:
        if all(v in g.adj[u] for u in clique):
            clique.append(v)
            members.add(v)
    return clique


def greedy_coloring(g: Graph) -> dict[int, int]:
    """DSATUR greedy: always color the most saturated uncolored vertex next."""
    color: dict[int, int] = {}
    saturation = [set() for _ in range(g.n)]
    uncolored = set(range(g.n))
    while uncolored:
        v = min(uncolored, key=lambda u: (-len(saturation[u]), -g.degree(u), u))
        c = 1
        while c in saturation[v]:
            c += 1
        color[v] = c
        uncolored.discard(v)
        for u in g.adj[v]:
            if u in uncolored:
                saturation[u].add(c)
    return color


class _KColorSearch:
    """Backtracking k-colorability test with DSATUR ordering and new-color capping."""

    def __init__(self, g: Graph, k: int, budget: int, preset: dict[int, int] | None = None):
        self.g = g
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.color = [0] * g.n
        self.uncolored = set(range(g.n))
        self.max_used = 0
        if preset:
            for v, c in preset.items():
                self.color[v] = c
                self.uncolored.discard(v)
                self.max_used = max(self.max_used, c)

    def _saturation(self, v: int) -> int:
        seen = set()
        for u in self.g.adj[v]:
            if self.color[u]:
                seen.add(self.color[u])
        return len(seen)

    def run(self) -> dict[int, int] | None:
        if self._solve():
            return {v: self.color[v] for v in range(self.g.n)}
        return None

    def _solve(self) -> bool:
        if not self.uncolored:
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"k-coloring search exceeded {self.budget} nodes", nodes=self.nodes
            )
        v = min(self.uncolored, key=lambda u: (-self._saturation(u), -self.g.degree(u), u))
        taken = {self.color[u] for u in self.g.adj[v] if self.color[u]}
        # Trying at most one color that is new so far prunes color permutations.
        limit = min(self.k, self.max_used + 1)
        self.uncolored.discard(v)
        prev_max = self.max_used
        for c in range(1, limit + 1):
            if c in taken:
                continue
            self.color[v] = c
            self.max_used = max(prev_max, c)
            if self._solve():
                return True
        self.color[v] = 0
        self.max_used = prev_max
        self.uncolored.add(v)
        return False


def find_k_coloring(
    g: Graph, k: int, *, budget: int = DEFAULT_NODE_BUDGET
) -> dict[int, int] | None:
    """A proper coloring with colors 1..k, or None when none exists."""
    if g.n == 0:
        return {}
    if k < 1:
        return None
    clique = greedy_clique(g)
    if len(clique) > k:
        return None
    preset = {v: i + 1 for i, v in enumerate(clique)}
    return _KColorSearch(g, k, budget, preset).run()


def chromatic_number(
    g: Graph, *, budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, PartialColoring]:
    """Exact chromatic number with a witness coloring."""
    if g.n == 0:
        raise ValueError("chromatic number needs a nonempty graph")
    if g.m == 0:
        return 1, PartialColoring(1, {v: 1 for v in range(g.n)})
    clique = greedy_clique(g)
    greedy = greedy_coloring(g)
    ub = max(greedy.values())
    lb = max(len(clique), 2)
    if lb == ub:
        return ub, PartialColoring(ub, greedy)
    preset = {v: i + 1 for i, v in enumerate(clique)}
    for k in range(lb, ub):
        witness = _KColorSearch(g, k, budget, preset).run()
        if witness is not None:
            return k, PartialColoring(k, witness)
    return ub, PartialColoring(ub, greedy)


def count_labeled_colorings(
    g: Graph, k: int, cap: int | None = None, *, budget: int = DEFAULT_NODE_BUDGET
) -> int:
    """Number of proper colorings using colors from 1..k, saturating at cap.

    cap None means count exactly. No symmetry breaking: colorings differing
    by a color permutation all count.
    """
    if k < 0 or (cap is not None and cap < 1):
        raise ValueError("need k >= 0 and cap >= 1")
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    color = [0] * g.n
    count = 0
    nodes = 0

    def rec(i: int) -> None:
        nonlocal count, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"coloring count exceeded {budget} nodes", nodes=nodes)
        if cap is not None and count >= cap:
            return
        if i == g.n:
            count += 1
            return
        v = order[i]
        taken = {color[u] for u in g.adj[v] if color[u]}
        for c in range(1, k + 1):
            if c in taken:
                continue
            color[v] = c
            rec(i + 1)
            color[v] = 0
            if cap is not None and count >= cap:
                return

    rec(0)
    return count


def count_color_partitions(
    g: Graph, k: int, cap: int | None = None, *, budget: int = DEFAULT_NODE_BUDGET
) -> int:
    """Number of proper colorings with <= k colors counted up to color permutation.

    cap None means count exactly. Enumerates canonical representatives: scanning
    vertices 0..n-1, a vertex may reuse any color seen so far or open the next
    fresh one.
    """
    if k < 0 or (cap is not None and cap < 1):
        raise ValueError("need k >= 0 and cap >= 1")
    color = [0] * g.n
    count = 0
    nodes = 0

    def rec(v: int, used: int) -> None:
        nonlocal count, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"partition count exceeded {budget} nodes", nodes=nodes)
        if cap is not None and count >= cap:
            return
        if v == g.n:
            count += 1
            return
        taken = {color[u] for u in g.adj[v] if u < v}
        top = min(k, used + 1)
        for c in range(1, top + 1):
            if c in taken:
                continue
            color[v] = c
            rec(v + 1, max(used, c))
            color[v] = 0
            if cap is not None and count >= cap:
                return

    rec(0, 0)
    return count


def is_uniquely_colorable(g: Graph, k: int, *, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """True when all proper k-colorings induce a single vertex partition.

    Requires k to be the chromatic number; then the labeled coloring count
    equals k! exactly when one partition exists.
    """
    chi, _ = chromatic_number(g, budget=budget)
    if k != chi:
        raise ValueError(f"unique colorability is defined at k = chi(g) = {chi}, got k = {k}")
    return count_color_partitions(g, k, 2, budget=budget) == 1

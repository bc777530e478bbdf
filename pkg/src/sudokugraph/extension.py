"""Forced-assignment propagation and completion counting for partial colorings.

Internally colors 1..k live in bitmasks (bit i-1 is color i). The search
keeps an undo journal so branching never copies state.
"""

from __future__ import annotations

from .chromatic import chromatic_number
from .coloring import (
    RULE_ATTRACTIVE,
    RULE_BRANCH,
    RULE_COLOR_DOMINATING,
    RULE_LIST_SINGLETON,
    RULE_NEAR_COLOR_DOMINATING,
    ColorListState,
    ExtensionKind,
    ExtensionOutcome,
    PartialColoring,
    PropagationStatus,
    TraceStep,
    is_proper,
)
from .graph import Graph, induced_subgraph

# Above this closed-neighborhood size the attractive rule is skipped; plain
# list propagation stays sound without it.
DEFAULT_ATTRACTIVE_LIMIT = 20

_ASSIGN = 0
_REMOVE = 1


class _Engine:
    def __init__(self, g: Graph, c: PartialColoring, attractive_limit: int):
        self.g = g
        self.k = c.k
        self.full = (1 << c.k) - 1
        self.adj = g.adj
        self.color = [0] * g.n
        self.lists = [self.full] * g.n
        self.uncolored = g.n
        self.class_size = [0] * (c.k + 1)
        self.used_mask = 0
        self.dead = False
        self.journal: list[tuple[int, int, int]] = []
        self.path: list[TraceStep] = []
        self.squeue: list[int] = []
        self.attractive_limit = attractive_limit
        self._chi_memo: dict[int, bool] = {}
        if self.k <= attractive_limit:
            self.attr_eligible = tuple(
                w for w in range(g.n) if g.degree(w) + 1 <= attractive_limit
            )
        else:
            # chi(N[w]) <= |N[w]| <= limit < k, so the rule can never fire.
            self.attr_eligible = ()
        for v, col in c.assignments.items():
            self._assign(v, col, rule=None)
        self.journal.clear()
        # Seed the singleton queue with vertices forced by the root coloring.
        for v in range(g.n):
            if self.color[v] == 0 and self.lists[v].bit_count() == 1:
                self.squeue.append(v)
        # Search bookkeeping.
        self.cap = 0
        self.count = 0
        self.witness1: dict[int, int] | None = None
        self.witness2: dict[int, int] | None = None
        self.trace: tuple[TraceStep, ...] = ()

    def _assign(self, v: int, col: int, rule: str | None) -> None:
        bit = 1 << (col - 1)
        self.journal.append((_ASSIGN, v, col))
        self.color[v] = col
        self.uncolored -= 1
        self.class_size[col] += 1
        self.used_mask |= bit
        if rule is not None:
            self.path.append(TraceStep(v, col, rule))
        for u in self.adj[v]:
            if self.color[u] == 0 and self.lists[u] & bit:
                self.lists[u] ^= bit
                self.journal.append((_REMOVE, u, bit))
                rest = self.lists[u]
                if rest == 0:
                    self.dead = True
                elif rest & (rest - 1) == 0:
                    self.squeue.append(u)

    def _undo(self, mark: int) -> None:
        while len(self.journal) > mark:
            op, v, payload = self.journal.pop()
            if op == _REMOVE:
                self.lists[v] |= payload
            else:
                self.color[v] = 0
                self.uncolored += 1
                self.class_size[payload] -= 1
                if self.class_size[payload] == 0:
                    self.used_mask &= ~(1 << (payload - 1))
                self.path.pop()
        self.dead = False

    def _chi_closed_neighborhood_is_k(self, w: int) -> bool:
        cached = self._chi_memo.get(w)
        if cached is None:
            sub, _ = induced_subgraph(self.g, (w,) + self.adj[w])
            cached = chromatic_number(sub)[0] == self.k
            self._chi_memo[w] = cached
        return cached

    def _attractive_step(self) -> bool:
        """Apply one attractive deduction; may set self.dead on contradiction."""
        for w in self.attr_eligible:
            if self.color[w] != 0:
                continue
            union = 0
            for u in self.adj[w]:
                cu = self.color[u]
                union |= (1 << (cu - 1)) if cu else self.lists[u]
            cand = self.full & ~union
            if cand == 0 or not self._chi_closed_neighborhood_is_k(w):
                continue
            if cand & (cand - 1):
                # Two colors can only appear at w: no completion exists.
                self.dead = True
                return True
            self._assign(w, cand.bit_length(), RULE_ATTRACTIVE)
            return True
        return False

    def _propagate(self) -> bool:
        """Run forced assignments to a fixpoint. False means dead end."""
        while True:
            if self.dead:
                return False
            if self.squeue:
                v = self.squeue.pop()
                mask = self.lists[v]
                if self.color[v] != 0 or mask & (mask - 1):
                    continue
                col = mask.bit_length()
                if self.used_mask & mask:
                    rule = RULE_NEAR_COLOR_DOMINATING
                else:
                    rule = RULE_COLOR_DOMINATING
                self._assign(v, col, rule)
                continue
            if self.attr_eligible and self.uncolored and self._attractive_step():
                continue
            return True

    def _mrv(self) -> int:
        best, best_size = -1, 1 << 62
        for v in range(self.g.n):
            if self.color[v] == 0:
                size = self.lists[v].bit_count()
                if size < best_size:
                    best, best_size = v, size
                    if size == 2:
                        break
        return best

    def _record_witness(self) -> None:
        self.count += 1
        snapshot = {v: self.color[v] for v in range(self.g.n)}
        if self.count == 1:
            self.witness1 = snapshot
            self.trace = tuple(self.path)
        elif self.count == 2:
            self.witness2 = snapshot

    def search(self, cap: int) -> int:
        self.cap = cap
        if self.dead:
            return 0
        self._dfs()
        return self.count

    def _dfs(self) -> None:
        mark = len(self.journal)
        if self._propagate():
            if self.uncolored == 0:
                self._record_witness()
            else:
                w = self._mrv()
                bits = self.lists[w]
                while bits and self.count < self.cap:
                    bit = bits & (-bits)
                    bits ^= bit
                    sub = len(self.journal)
                    self._assign(w, bit.bit_length(), RULE_BRANCH)
                    self._dfs()
                    self._undo(sub)
        self._undo(mark)


def _check_inputs(g: Graph, c: PartialColoring) -> None:
    if not is_proper(g, c):
        raise ValueError("partial coloring is improper on its domain")


def propagate(
    g: Graph, c: PartialColoring, *, attractive_limit: int = DEFAULT_ATTRACTIVE_LIMIT
) -> tuple[PartialColoring, tuple[TraceStep, ...], PropagationStatus]:
    """Extend c by forced assignments only.

    Singleton-list deductions are labeled color-dominating when the forced
    color is new, near-color-dominating when it is already in use; attractive
    deductions need chi(N[w]) = k, tested exactly on the closed neighborhood.
    """
    _check_inputs(g, c)
    eng = _Engine(g, c, attractive_limit)
    alive = eng._propagate()
    extended = dict(c.assignments)
    for step in eng.path:
        extended[step.vertex] = step.color
    trace = tuple(eng.path)
    if not alive:
        status = PropagationStatus.DEAD_END
    elif trace:
        status = PropagationStatus.PROGRESS
    else:
        status = PropagationStatus.STUCK
    return PartialColoring(c.k, extended), trace, status


def count_extensions(
    g: Graph,
    c: PartialColoring,
    cap: int = 2,
    *,
    attractive_limit: int = DEFAULT_ATTRACTIVE_LIMIT,
) -> ExtensionOutcome:
    """Count completions of c to proper k-colorings of g, saturating at cap.

    cap >= 2 so that unique and multiple outcomes stay distinguishable.
    """
    if cap < 2:
        raise ValueError(f"cap must be >= 2, got {cap}")
    _check_inputs(g, c)
    eng = _Engine(g, c, attractive_limit)
    found = eng.search(cap)
    if found == 0:
        return ExtensionOutcome(ExtensionKind.NOT_EXTENDABLE, count=0)
    if found == 1:
        return ExtensionOutcome(
            ExtensionKind.UNIQUE, witness1=eng.witness1, trace=eng.trace, count=1
        )
    return ExtensionOutcome(
        ExtensionKind.MULTIPLE, witness1=eng.witness1, witness2=eng.witness2, count=found
    )


def is_extendable(g: Graph, c: PartialColoring) -> bool:
    return count_extensions(g, c).kind is not ExtensionKind.NOT_EXTENDABLE


def is_sudoku_coloring(g: Graph, c: PartialColoring) -> bool:
    return count_extensions(g, c).kind is ExtensionKind.UNIQUE


def count_list_colorings(g: Graph, state: ColorListState, cap: int = 2) -> int:
    """Count proper colorings where every vertex takes a color from its list.

    Every vertex of g must carry a nonempty list. Saturates at cap.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    lists = state.lists
    missing = [v for v in range(g.n) if v not in lists]
    if missing:
        raise ValueError(f"vertices without lists: {missing}")
    masks = []
    for v in range(g.n):
        mask = 0
        for col in lists[v]:
            if col < 1:
                raise ValueError(f"vertex {v} lists invalid color {col}")
            mask |= 1 << (col - 1)
        if mask == 0:
            raise ValueError(f"vertex {v} has an empty list")
        masks.append(mask)
    color = [0] * g.n
    adj = g.adj
    count = 0

    def rec(assigned: int) -> None:
        nonlocal count
        if count >= cap:
            return
        if assigned == g.n:
            count += 1
            return
        # Most constrained first, ties to the lower index.
        best, best_size = -1, 1 << 62
        for v in range(g.n):
            if color[v] == 0:
                size = masks[v].bit_count()
                if size < best_size:
                    best, best_size = v, size
        v = best
        bits = masks[v]
        while bits:
            bit = bits & (-bits)
            bits ^= bit
            col = bit.bit_length()
            ok = True
            for u in adj[v]:
                if color[u] == col:
                    ok = False
                    break
            if ok:
                color[v] = col
                rec(assigned + 1)
                color[v] = 0
                if count >= cap:
                    return

    rec(0)
    return count

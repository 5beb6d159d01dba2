"""Labeled interval graphs of a base, their subgraphs, and their structure.

The vertices are the open intervals remaining after removing the switch
region and the special points from (0, M/(q-1)); an edge (I, k, J) means the
digit-consumption map x -> q*x - k carries I over J.  All edges leaving a
vertex share one label: the digit forced on every expansion passing through
that interval.  The infinite label paths of the graph spell exactly the
unique expansions (for the strictly-in-between base class) or the unique
doubly infinite expansions (for limit-of-uniqueness bases).

Three variants are built here: the full graph, its restriction to the
central interval (b1, a1), and the further restriction to the vertices
leaning on the orbit points a_i / b_i.  On top of those live the structural
operations: strong-connectedness criteria, the order isomorphism between a
base and its successor, and the tower decomposition along successor chains.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import digits as dg
from .algebraic import apply_digit_map
from .base import (BaseClass, InternalConsistencyError, order_points, special_points,
                   v_successor)

FULL, TILDE, TILDE1 = "FULL", "TILDE", "TILDE1"


class StructuralError(AssertionError):
    """A structural guarantee of the construction failed verification."""


@dataclass(frozen=True)
class Vertex:
    index: int           # position in interval order within the parent graph
    left: int            # class index of the left endpoint
    right: int           # class index of the right endpoint
    label: int           # forced digit of the region containing the interval

    def __repr__(self):
        return f"Vertex#{self.index}"


@dataclass
class UnivoqueGraph:
    ctx: object
    variant: str
    order: object                    # PointOrder of the context
    vertices: list
    edges: list                      # (src index, label, dst index) triples
    out: dict = field(default_factory=dict)

    def __post_init__(self):
        self.out = {v.index: [] for v in self.vertices}
        for i, k, j in self.edges:
            self.out[i].append((k, j))

    def vertex_indices(self):
        return [v.index for v in self.vertices]

    def class_name(self, class_idx):
        return self.order.classes[class_idx][0]

    def vertex_name(self, v):
        return f"({self.class_name(v.left)},{self.class_name(v.right)})"

    def names(self):
        return [self.vertex_name(v) for v in self.vertices]

    def vertex_by_name(self, name):
        for v in self.vertices:
            if self.vertex_name(v) == name:
                return v
        raise KeyError(name)

    def _class_names(self, class_idx):
        return self.order.classes[class_idx]

    def left_names(self, v):
        return self._class_names(v.left)

    def right_names(self, v):
        return self._class_names(v.right)

    def kinds(self, v):
        """The (possibly multiple) endpoint forms of a vertex."""
        N = self.ctx.n_period
        lefts, rights = self.left_names(v), self.right_names(v)
        a_right = any(nm[0] == "a" and int(nm[1:]) <= N for nm in rights)
        b_left = any(nm[0] == "b" and int(nm[1:]) <= N for nm in lefts)
        out = set()
        if a_right:
            out.add("A_RIGHT")
        if b_left:
            out.add("B_LEFT")
        if any(nm[0] == "a" for nm in lefts) and any(nm[0] == "b" for nm in rights):
            out.add("AB")
        if any(nm.startswith("th") and int(nm[2:]) >= 1 for nm in rights):
            out.add("THETA_LEFT")
        if any(nm.startswith("et") and int(nm[2:]) <= self.ctx.M for nm in lefts):
            out.add("ETA_RIGHT")
        return out

    def reflected_vertex_index(self, idx):
        """Index of the mirror image under x -> M/(q-1) - x."""
        pos = {v.index: p for p, v in enumerate(self.vertices)}
        n = len(self.vertices)
        return self.vertices[n - 1 - pos[idx]].index

    def to_dot(self):
        lines = ["digraph univoque {", "  rankdir=LR;"]
        for v in self.vertices:
            lines.append(f'  "{self.vertex_name(v)}";')
        for i, k, j in sorted(self.edges):
            vi = next(v for v in self.vertices if v.index == i)
            vj = next(v for v in self.vertices if v.index == j)
            lines.append(f'  "{self.vertex_name(vi)}" -> "{self.vertex_name(vj)}" [label="{k}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self):
        byidx = {v.index: v for v in self.vertices}
        return {
            "M": self.ctx.M,
            "beta": dg.format_seq(self.ctx.beta),
            "variant": self.variant,
            "vertices": [
                {
                    "name": self.vertex_name(v),
                    "left": self.class_name(v.left),
                    "right": self.class_name(v.right),
                    "label": v.label,
                    "lo_approx": self.order.values[v.left].decimal(12),
                    "hi_approx": self.order.values[v.right].decimal(12),
                }
                for v in self.vertices
            ],
            "edges": [
                {"from": self.vertex_name(byidx[i]), "label": k, "to": self.vertex_name(byidx[j])}
                for i, k, j in sorted(self.edges)
            ],
        }


def _locate_geq(values, x):
    """Least class index whose value is >= x (len(values) if none)."""
    lo, hi = 0, len(values)
    while lo < hi:
        mid = (lo + hi) // 2
        if values[mid].cmp(x) >= 0:
            hi = mid
        else:
            lo = mid + 1
    return lo


def _locate_leq(values, x):
    """Greatest class index whose value is <= x (-1 if none)."""
    lo, hi = -1, len(values) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if values[mid].cmp(x) <= 0:
            lo = mid
        else:
            hi = mid - 1
    return lo


def build_graph(ctx, variant=FULL):
    """Construct the labeled interval graph of a base (FULL/TILDE/TILDE1)."""
    ctx.require_graph_class()
    cache_key = ("graph", variant)
    if cache_key in ctx._cache:
        return ctx._cache[cache_key]
    full = ctx._cache.get(("graph", FULL))
    if full is None:
        full = _build_full(ctx)
        ctx._cache[("graph", FULL)] = full
    if variant == FULL:
        g = full
    elif variant == TILDE:
        g = _restrict(full, _tilde_indices(full), TILDE)
    elif variant == TILDE1:
        tilde = build_graph(ctx, TILDE)
        keep = {v.index for v in tilde.vertices if {"A_RIGHT", "B_LEFT"} & tilde.kinds(v)}
        g = _restrict(full, keep, TILDE1)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    ctx._cache[cache_key] = g
    return g


def _build_full(ctx):
    order = order_points(ctx)
    M = ctx.M
    # gaps between consecutive classes; drop the switch gaps [th_j, et_j]
    switch_left = {order.index_of[f"th{j}"] for j in range(1, M + 1)}
    for j in range(1, M + 1):
        if order.index_of[f"et{j}"] != order.index_of[f"th{j}"] + 1:
            raise StructuralError(f"switch interval {j} is not a single gap")
    vertices = []
    eta_idx = sorted(order.index_of[f"et{j}"] for j in range(1, M + 1))
    for k in range(len(order.classes) - 1):
        if k in switch_left:
            continue
        label = sum(1 for e in eta_idx if e <= k)
        vertices.append(Vertex(index=len(vertices), left=k, right=k + 1, label=label))
    edges = []
    values = order.values
    for v in vertices:
        img_lo = apply_digit_map(values[v.left], v.label)
        img_hi = apply_digit_map(values[v.right], v.label)
        lo_class = _locate_geq(values, img_lo)
        hi_class = _locate_leq(values, img_hi)
        for w in vertices:
            if lo_class <= w.left and w.right <= hi_class:
                edges.append((v.index, v.label, w.index))
    return UnivoqueGraph(ctx=ctx, variant=FULL, order=order, vertices=vertices, edges=edges)


def _tilde_indices(full):
    order = full.order
    b1, a1 = order.index_of["b1"], order.index_of["a1"]
    return {v.index for v in full.vertices if v.left >= b1 and v.right <= a1}


def _restrict(full, keep, variant):
    vertices = [v for v in full.vertices if v.index in keep]
    edges = [(i, k, j) for i, k, j in full.edges if i in keep and j in keep]
    return UnivoqueGraph(ctx=full.ctx, variant=variant, order=full.order,
                         vertices=vertices, edges=edges)


# --- strongly connected components -----------------------------------------

def scc(g):
    """Tarjan components in deterministic order, plus the condensation edges.

    Components are listed with their vertex indices sorted; the component
    list itself is sorted by smallest vertex index.  Condensation edges are
    pairs of component positions in that listing.
    """
    indices = [v.index for v in g.vertices]
    index_of = {}
    low = {}
    counter = [0]
    stack, onstack = [], set()
    comps = []
    comp_of = {}

    for root in indices:
        if root in index_of:
            continue
        work = [(root, iter(g.out[root]))]
        index_of[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        onstack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for _k, w in it:
                if w not in index_of:
                    index_of[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    onstack.add(w)
                    work.append((w, iter(g.out[w])))
                    advanced = True
                    break
                if w in onstack:
                    low[v] = min(low[v], index_of[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index_of[v]:
                comp = []
                while True:
                    w = stack.pop()
                    onstack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    for pos, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = pos
    cond = set()
    for i, _k, j in g.edges:
        if comp_of[i] != comp_of[j]:
            cond.add((comp_of[i], comp_of[j]))
    return comps, sorted(cond)


def is_strongly_connected(g):
    comps, _ = scc(g)
    if len(comps) != 1:
        return False
    if len(g.vertices) == 1:
        v = g.vertices[0].index
        return any(j == v for _k, j in g.out[v])
    return True


def reachable_from(g, starts):
    seen = set(starts)
    frontier = list(starts)
    while frontier:
        v = frontier.pop()
        for _k, w in g.out[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


@dataclass
class ConnectivityReport:
    strongly_connected: bool        # direct verdict on the central subgraph
    reach_criterion: bool           # every AB / THETA_LEFT vertex reachable from the core
    sufficient_b2: bool             # b2 below every middle a_i (sufficient only)
    m1_ab_criterion: bool | None    # alphabet {0,1} specialization of the criterion


def connectivity_report(ctx):
    """Connectivity of the central subgraph, by three routes at once.

    The direct component count must agree with the reachability criterion
    (core subgraph to every crossing or switch-edge vertex); the coarser
    endpoint test (b2 below all middle a_i) is sufficient but not necessary.
    """
    if ctx.base_class is not BaseClass.IN_CLOSURE_U_NOT_U:
        raise ValueError("connectivity criteria apply to limit-of-uniqueness bases only")
    tilde = build_graph(ctx, TILDE)
    core = build_graph(ctx, TILDE1)
    direct = is_strongly_connected(tilde)
    reach = reachable_from(tilde, [v.index for v in core.vertices])
    targets = [v for v in tilde.vertices if {"AB", "THETA_LEFT"} & tilde.kinds(v)]
    crit = all(v.index in reach for v in targets)
    if crit != direct:
        raise InternalConsistencyError(
            "reachability criterion and component count disagree on strong connectedness")
    m1 = None
    if ctx.M == 1:
        ab = [v for v in tilde.vertices if "AB" in tilde.kinds(v)]
        m1 = all(v.index in reach for v in ab)
        if m1 != direct:
            raise InternalConsistencyError("two-digit criterion disagrees with component count")
    pts = special_points(ctx)
    N = ctx.n_period
    suff = False
    if N >= 3:
        suff = all(pts.b[2].cmp(pts.a[i]) < 0 for i in range(2, N))
    if suff and not direct:
        raise InternalConsistencyError("sufficient endpoint condition held but graph is split")
    return ConnectivityReport(direct, crit, suff, m1)


# --- isomorphism ------------------------------------------------------------

def check_isomorphic(g1, g2):
    """Label-preserving digraph isomorphism; returns a vertex map or None.

    The interval orders give the canonical candidate (both graphs sorted by
    position); when that fails, a color-refinement-guided backtracking search
    runs for graphs up to 64 vertices.
    """
    v1 = [v.index for v in g1.vertices]
    v2 = [v.index for v in g2.vertices]
    if len(v1) != len(v2) or len(g1.edges) != len(g2.edges):
        return None
    cand = dict(zip(v1, v2))
    if _is_isomorphism(g1, g2, cand):
        return cand
    if len(v1) > 64:
        return None
    return _search_isomorphism(g1, g2)


def _edge_set(g):
    return {(i, k, j) for i, k, j in g.edges}


def _is_isomorphism(g1, g2, mapping):
    e2 = _edge_set(g2)
    if len(set(mapping.values())) != len(mapping):
        return False
    for i, k, j in g1.edges:
        if (mapping[i], k, mapping[j]) not in e2:
            return False
    return len(g1.edges) == len(g2.edges)


def _refined_colors(g):
    colors = {v.index: (v.label,) for v in g.vertices}
    indeg = {v.index: [] for v in g.vertices}
    for i, k, j in g.edges:
        indeg[j].append(k)
    for v in g.vertices:
        colors[v.index] += (len(g.out[v.index]), tuple(sorted(indeg[v.index])))
    for _ in range(len(g.vertices)):
        new = {}
        for v in g.vertices:
            outc = tuple(sorted((k, colors[j]) for k, j in g.out[v.index]))
            new[v.index] = (colors[v.index], outc)
        canon = {c: n for n, c in enumerate(sorted(set(new.values()), key=repr))}
        new = {v: canon[c] for v, c in new.items()}
        if len(set(new.values())) == len(set(colors.values())):
            colors = new
            break
        colors = new
    return colors


def _search_isomorphism(g1, g2):
    c1, c2 = _refined_colors(g1), _refined_colors(g2)
    if sorted(c1.values()) != sorted(c2.values()):
        return None
    order1 = sorted(c1, key=lambda v: (c1[v], v))
    pool = {}
    for v, c in c2.items():
        pool.setdefault(c, []).append(v)
    e2 = _edge_set(g2)
    mapping = {}
    used = set()

    def ok_partial(v, w):
        for k, j in g1.out[v]:
            if j in mapping and (w, k, mapping[j]) not in e2:
                return False
        for i, k, j in g1.edges:
            if j == v and i in mapping and (mapping[i], k, w) not in e2:
                return False
        return True

    def rec(pos):
        if pos == len(order1):
            return _is_isomorphism(g1, g2, mapping)
        v = order1[pos]
        for w in pool[c1[v]]:
            if w in used or not ok_partial(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if rec(pos + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if rec(0) else None


# --- successor embedding and the tower decomposition ------------------------

def _endpoint_image_names(small_ctx, names):
    """Image names of the successor embedding, for one endpoint class.

    Orbit points map to orbit points with the same position except that the
    reflected half of the orbit is re-indexed, the switch endpoint riding on
    a_n moves onto the new orbit point, and in the first step (periodic
    alpha of odd length allowed) the reflected points b_i map into the upper
    half of the doubled orbit.
    """
    ctx = small_ctx
    N = ctx.n_period
    first_step = ctx.base_class is BaseClass.IN_CLOSURE_U_NOT_U
    w = ctx.alpha_word()
    out = set()
    if first_step:
        for nm in names:
            kind, idx = nm[0], int(nm[1:]) if nm[0] in "ab" else int(nm[2:])
            if nm.startswith("th") or nm.startswith("et"):
                out.add(nm)
            elif kind == "a" and 1 <= idx <= N - 1:
                out.add(f"a{idx}")
            elif kind == "b" and 1 <= idx <= N - 1:
                out.add(f"a{N + idx}")
    else:
        # periodic word is u+ reflect(u+) for the half word u; the incremented
        # last digit of u is therefore the period's digit at position n
        n = N // 2
        alpha_n_plus = w[n - 1]
        for nm in names:
            if nm == f"et{alpha_n_plus}":
                out.add(f"a{n}")
            elif nm.startswith("th") or nm.startswith("et"):
                out.add(nm)
            elif nm[0] == "a":
                idx = int(nm[1:])
                if 1 <= idx <= 2 * n - 1 and idx != n:
                    out.add(nm)
    return out


def embed_successor(g_small, g_big):
    """The order isomorphism of a graph onto a subgraph of its successor's.

    Returns {vertex index in g_small -> vertex index in g_big}.  Verifies
    that the map is increasing, total, and edge-preserving in both
    directions on its image; raises StructuralError otherwise.
    """
    ctx, big = g_small.ctx, g_big.ctx
    mapping = {}
    big_by_left = {}
    for v in g_big.vertices:
        for nm in g_big.left_names(v):
            big_by_left[nm] = v.index
    for v in g_small.vertices:
        images = _endpoint_image_names(ctx, g_small.left_names(v))
        targets = {big_by_left[nm] for nm in images if nm in big_by_left}
        if len(targets) != 1:
            raise StructuralError(
                f"left endpoint of {g_small.vertex_name(v)} maps to {sorted(images)} "
                f"which hits {len(targets)} vertices of the successor graph")
        mapping[v.index] = targets.pop()
    if len(set(mapping.values())) != len(mapping):
        raise StructuralError("successor embedding is not injective")
    image = set(mapping.values())
    e_big = _edge_set(g_big)
    for i, k, j in g_small.edges:
        if (mapping[i], k, mapping[j]) not in e_big:
            raise StructuralError(
                f"edge {g_small.vertex_name(g_small.vertices[i])} -{k}-> ... lost by embedding")
    for i, k, j in g_big.edges:
        if i in image and j in image:
            inv = {w: v for v, w in mapping.items()}
            if (inv[i], k, inv[j]) not in _edge_set(g_small):
                raise StructuralError("embedding image has an extra internal edge")
    return mapping


@dataclass
class TowerDecomposition:
    """Cyclic tower of a successor-chain graph.

    ``graphs[j]`` is the full graph of the j-th chain element (j = 0 is the
    seed).  Inside the top graph, ``blocks[j]`` (1-based level j+1) are
    disjoint vertex sets of size 2^j * n: blocks[0] is the orbit cycle
    inherited from the seed and blocks[j] for j >= 1 the cycle of new
    vertices added at step j+1.  ``residual`` holds the remaining n + M - 1
    embedded vertices, so blocks + residual partition the top graph.
    ``cycles[j]`` gives each block as an ordered vertex list with its label
    word; blocks after the first span pure cycles (no stray in-block edge),
    the first carries the orbit cycle plus chords.
    """

    n: int
    graphs: list
    blocks: list
    residual: set
    cycles: list          # (ordered vertex indices, label word) per level
    block_of: dict


def tower_decompose(ctx0, m):
    """Decompose the m-th successor graph along the embedding chain.

    Builds the graphs of the first m successors of ``ctx0``, embeds each in
    the next, and verifies the announced structure: the new vertices at each
    step form a single pure cycle of doubled length, and a path runs from
    level j to level k exactly when j <= k.
    """
    if ctx0.base_class is not BaseClass.IN_CLOSURE_U_NOT_U:
        raise ValueError("tower decomposition starts from a limit-of-uniqueness base")
    if m < 1:
        raise ValueError("need at least one successor step")
    n = ctx0.n_period
    ctxs = [ctx0]
    for _ in range(m):
        ctxs.append(v_successor(ctxs[-1]))
    graphs = [build_graph(c, FULL) for c in ctxs]

    # push-forward maps toward the top graph
    maps = [embed_successor(graphs[j], graphs[j + 1]) for j in range(m)]

    def push_seq(idx_seq, level):
        cur = list(idx_seq)
        for j in range(level, m):
            cur = [maps[j][v] for v in cur]
        return cur

    top = graphs[m]

    # ordered orbit cycle of the seed: vertices leaning on a_1, ..., a_n
    alpha = ctx0.alpha_word()
    by_right_a = {}
    for v in graphs[0].vertices:
        for nm in graphs[0].right_names(v):
            if nm[0] == "a" and int(nm[1:]) <= n:
                by_right_a[int(nm[1:])] = v.index
    if len(by_right_a) != n:
        raise StructuralError(f"seed orbit touches {len(by_right_a)} vertices, expected {n}")
    seed_cycle = [by_right_a[i] for i in range(1, n + 1)]
    for i in range(n):
        src, dst = seed_cycle[i], seed_cycle[(i + 1) % n]
        if (src, alpha[i], dst) not in _edge_set(graphs[0]):
            raise StructuralError(f"seed orbit edge {i + 1} with digit {alpha[i]} is missing")
    blocks = [push_seq([maps[0][v] for v in seed_cycle], 1)]
    cycles = [(blocks[0], tuple(alpha))]

    fresh_sets = []
    for j in range(2, m + 1):
        prev_img = {maps[j - 1][v.index] for v in graphs[j - 1].vertices}
        fresh = {v.index for v in graphs[j].vertices} - prev_img
        if len(fresh) != 2 ** (j - 1) * n:
            raise StructuralError(
                f"level {j} adds {len(fresh)} vertices, expected {2 ** (j - 1) * n}")
        fresh_sets.append((j, fresh))
    for j, fresh in fresh_sets:
        pushed = set(push_seq(sorted(fresh), j))
        path, labels = _trace_cycle(top, pushed, j - 1)
        blocks.append(path)
        cycles.append((path, labels))

    covered = {v for b in blocks for v in b}
    if sum(len(b) for b in blocks) != len(covered):
        raise StructuralError("tower levels overlap")
    residual = set(top.vertex_indices()) - covered
    if len(residual) != n + top.ctx.M - 1:
        raise StructuralError(
            f"residual block has {len(residual)} vertices, expected {n + top.ctx.M - 1}")

    block_of = {}
    for pos, b in enumerate(blocks):
        for v in b:
            block_of[v] = pos
    block_sets = [set(b) for b in blocks]
    for i in range(len(blocks)):
        reach = reachable_from(top, block_sets[i])
        for j in range(len(blocks)):
            hits = bool(reach & block_sets[j])
            if hits != (i <= j):
                raise StructuralError(
                    f"level {i + 1} {'reaches' if hits else 'misses'} level {j + 1}")
    return TowerDecomposition(n=n, graphs=graphs, blocks=blocks, residual=residual,
                              cycles=cycles, block_of=block_of)


def _trace_cycle(g, cset, level):
    """Check ``cset`` spans a single cycle; return it ordered with labels."""
    succ = {}
    for v in cset:
        inside = [(k, j) for k, j in g.out[v] if j in cset]
        if len(inside) != 1:
            raise StructuralError(
                f"cycle vertex {g.vertex_name(next(x for x in g.vertices if x.index == v))} "
                f"has {len(inside)} successors inside level {level + 1}")
        succ[v] = inside[0]
    start = min(cset)
    path, labels = [start], []
    k, nxt = succ[start]
    labels.append(k)
    while nxt != start:
        path.append(nxt)
        k, nxt2 = succ[nxt]
        labels.append(k)
        nxt = nxt2
    if len(path) != len(cset):
        raise StructuralError(f"level {level + 1} splits into several cycles")
    return path, tuple(labels)


def cycle_word_matches(word, expected):
    """True if two cyclic label words agree up to rotation."""
    if len(word) != len(expected):
        return False
    doubled = expected + expected
    return any(doubled[i:i + len(word)] == tuple(word) for i in range(len(expected)))


# --- label-path language -----------------------------------------------------

def _label_dfa(g):
    """Subset automaton of the labeled graph (paths may start anywhere)."""
    start = frozenset(g.vertex_indices())
    trans = {}
    frontier = [start]
    seen = {start}
    while frontier:
        s = frontier.pop()
        by_label = {}
        for v in s:
            for k, j in g.out[v]:
                by_label.setdefault(k, set()).add(j)
        trans[s] = {k: frozenset(t) for k, t in by_label.items()}
        for t in trans[s].values():
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return start, trans


def count_label_paths(g, L, want_words=False, word_cap=10**6):
    """Number of distinct length-L label words readable along paths.

    Counting runs over the deterministic subset automaton, so it is exact
    for any L.  When ``want_words`` is set (L <= 14) the words themselves
    are returned as a sorted list, capped at ``word_cap``.
    """
    if L < 0:
        raise ValueError("length must be nonnegative")
    start, trans = _label_dfa(g)
    counts = {start: 1}
    for _ in range(L):
        nxt = {}
        for s, c in counts.items():
            for k, t in trans[s].items():
                nxt[t] = nxt.get(t, 0) + c
        counts = nxt
    total = sum(counts.values())
    if not want_words:
        return total, None
    if L > 14 or total > word_cap:
        return total, None
    words = []
    stack = [(start, ())]
    while stack:
        s, w = stack.pop()
        if len(w) == L:
            words.append(w)
            continue
        for k, t in sorted(trans[s].items()):
            stack.append((t, w + (k,)))
    return total, sorted(words)


def path_words(g, L):
    """The set of length-L label words of the graph."""
    total, words = count_label_paths(g, L, want_words=True)
    if words is None:
        raise ValueError(f"word set of size {total} exceeds the enumeration cap")
    return set(words)

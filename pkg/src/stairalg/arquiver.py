"""Auslander-Reiten knitting of the preprojective component, at dim-vector level.

Knitting starts from the corner projective P(1,1) and grows the component
mesh by mesh: a projective P(i,j) enters with a single arrow from the
vertex realizing its radical's dimension vector, every other vertex is
translated forward once all its incoming meshes are known, and vertices
matching an injective's dimension vector are terminal.  For finite types
the process closes up and enumerates all indecomposables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import quadform
from .classify import RepType, classify
from .partitions import Partition
from .quiver import (Rows, add_rows, build_quiver, injective_vector,
                     projective_vector, sub_rows, unit_rows, Vertex)


@dataclass(frozen=True)
class ARVertex:
    idx: int
    dim: Rows
    slice: int
    tau_orbit: int
    depth: int  # tau^- steps from the orbit's opening vertex
    projective: Optional[Vertex] = None
    injective: Optional[Vertex] = None


@dataclass
class ARQuiver:
    lam: Partition
    vertices: list[ARVertex] = field(default_factory=list)
    arrows: list[tuple[int, int]] = field(default_factory=list)
    complete: bool = False
    projectives_inserted: int = 0

    @property
    def all_projectives_inserted(self) -> bool:
        return self.projectives_inserted == self.lam.size

    def out_neighbours(self, idx: int) -> list[int]:
        return [d for s, d in self.arrows if s == idx]

    def in_neighbours(self, idx: int) -> list[int]:
        return [s for s, d in self.arrows if d == idx]

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "complete": self.complete,
            "vertices": [{
                "id": v.idx, "dim": [list(r) for r in v.dim],
                "slice": v.slice, "tau_orbit": v.tau_orbit,
                "projective": list(v.projective) if v.projective else None,
                "injective": list(v.injective) if v.injective else None,
            } for v in self.vertices],
            "arrows": [list(a) for a in self.arrows],
        }


class MeshError(ArithmeticError):
    """A mesh produced a negative dimension at a non-injective vertex."""


def knit(lam: Partition, slice_limit: Optional[int] = None) -> ARQuiver:
    """Knit the preprojective component; stops after `slice_limit` slices.

    The default limit is 10 * n, which closes every finite type and gives a
    generous window otherwise.  The result is flagged `complete` only when
    the component closed up by itself.
    """
    if slice_limit is None:
        slice_limit = 10 * lam.size
    if slice_limit < 1:
        raise ValueError("slice_limit must be >= 1")
    q = build_quiver(lam)
    inj_table = {injective_vector(q, v): v for v in q.vertices}
    # several projectives may share a radical vector: rad P(1,2) = rad P(2,1)
    pending: dict[Rows, list[Vertex]] = {}
    for v in q.vertices:
        rad = sub_rows(projective_vector(q, v), unit_rows(lam, v))
        if any(any(r) for r in rad):
            pending.setdefault(rad, []).append(v)

    ar = ARQuiver(lam)
    out_arrows: list[list[int]] = []
    in_done: list[int] = []   # in-neighbours known to never translate again
    in_total: list[int] = []
    translated: list[bool] = []
    by_dim: dict[Rows, int] = {}
    truncated = False
    next_orbit = 0

    def settled(idx) -> bool:
        return translated[idx] or ar.vertices[idx].injective is not None

    def create(dim, slice_, orbit, depth, projective=None) -> int:
        idx = len(ar.vertices)
        ar.vertices.append(ARVertex(idx, dim, slice_, orbit, depth,
                                    projective=projective,
                                    injective=inj_table.get(dim)))
        out_arrows.append([])
        in_done.append(0)
        in_total.append(0)
        translated.append(False)
        by_dim.setdefault(dim, idx)
        return idx

    def add_arrow(src, dst):
        ar.arrows.append((src, dst))
        out_arrows[src].append(dst)
        in_total[dst] += 1
        if settled(src):
            in_done[dst] += 1

    def insert_projectives():
        nonlocal truncated, next_orbit
        progress = True
        while progress:
            progress = False
            for rad in sorted(pending, key=lambda r: min(pending[r])):
                src = by_dim.get(rad)
                if src is None:
                    continue
                if ar.vertices[src].slice + 1 >= slice_limit:
                    truncated = True
                    continue
                for pv in sorted(pending.pop(rad)):
                    idx = create(projective_vector(q, pv),
                                 ar.vertices[src].slice + 1, next_orbit, 0,
                                 projective=pv)
                    next_orbit += 1
                    add_arrow(src, idx)
                    ar.projectives_inserted += 1
                progress = True

    create(projective_vector(q, (1, 1)), 0, next_orbit, 0, projective=(1, 1))
    next_orbit += 1
    ar.projectives_inserted += 1
    insert_projectives()

    while True:
        candidates = [
            v for v in ar.vertices
            if not translated[v.idx] and v.injective is None
            and in_done[v.idx] == in_total[v.idx]
            and v.dim not in pending
        ]
        if not candidates:
            break
        x = min(candidates, key=lambda v: (v.slice, v.idx))
        if x.slice + 2 >= slice_limit:
            truncated = True
            break
        middles = list(out_arrows[x.idx])
        mesh = None
        for m in middles:
            d = ar.vertices[m].dim
            mesh = d if mesh is None else add_rows(mesh, d)
        if mesh is None:
            raise MeshError(f"non-injective vertex {x.idx} of {lam} has no successors")
        new_dim = sub_rows(mesh, x.dim)
        if any(c < 0 for r in new_dim for c in r) or not any(c for r in new_dim for c in r):
            raise MeshError(
                f"mesh at vertex {x.idx} of {lam} produced dimension {new_dim}")
        translated[x.idx] = True
        for t in out_arrows[x.idx]:
            in_done[t] += 1
        z = create(new_dim, x.slice + 2, x.tau_orbit, x.depth + 1)
        for m in middles:
            add_arrow(m, z)
        insert_projectives()

    ar.complete = (not truncated and not pending
                   and all(translated[v.idx] or v.injective is not None
                           for v in ar.vertices))
    return ar


def check_mesh_additivity(ar: ARQuiver) -> bool:
    """Every translated vertex satisfies dim x + dim tau^-x = sum of middles."""
    # tau^- pairs: same orbit, consecutive depth
    by_orbit: dict[int, dict[int, ARVertex]] = {}
    for v in ar.vertices:
        by_orbit.setdefault(v.tau_orbit, {})[v.depth] = v
    for orbit in by_orbit.values():
        for depth, x in orbit.items():
            z = orbit.get(depth + 1)
            if z is None:
                continue
            mesh = None
            for m in ar.out_neighbours(x.idx):
                d = ar.vertices[m].dim
                mesh = d if mesh is None else add_rows(mesh, d)
            if mesh is None or sub_rows(mesh, x.dim) != z.dim:
                return False
    return True


def count_indecomposables(lam: Partition) -> int:
    """Number of indecomposables of a finite-type algebra, via positive roots."""
    if classify(lam) is not RepType.FINITE:
        raise ValueError(f"{lam} is not of finite representation type")
    return len(quadform.positive_roots(quadform.form_of(lam)))


def has_sincere_preprojective(ar: ARQuiver) -> bool:
    """Whether some knitted vertex is everywhere nonzero."""
    if not ar.vertices:
        raise ValueError("empty component")
    return any(all(c > 0 for r in v.dim for c in r) for v in ar.vertices)


# -- orbit quiver ----------------------------------------------------------


@dataclass(frozen=True)
class OrbitQuiver:
    node_count: int
    edges: tuple[tuple[int, int, int], ...]  # (orbit a < orbit b, multiplicity)
    recognized: "object"  # classify.OrbitType

    def to_json(self) -> dict:
        return {"nodes": self.node_count,
                "edges": [list(e) for e in self.edges],
                "type": str(self.recognized)}


def orbit_quiver(ar: ARQuiver) -> OrbitQuiver:
    """Collapse tau-orbits and recognize the underlying graph's type.

    Edge multiplicity between two orbits is the maximum number of parallel
    arrows observed between fixed members.  Recognition runs on the graph's
    own unit form: positive definite means Dynkin, PSD of corank 1 means
    extended Dynkin, anything else is wild.
    """
    if not ar.all_projectives_inserted:
        raise ValueError("orbit quiver undefined on partial component "
                         "(missing projectives)")
    orbits = sorted({v.tau_orbit for v in ar.vertices})
    pos = {o: k for k, o in enumerate(orbits)}
    pair_counts: dict[tuple[int, int, int, int], int] = {}
    for s, d in ar.arrows:
        os_, od = ar.vertices[s].tau_orbit, ar.vertices[d].tau_orbit
        key = (pos[os_], pos[od], s, d)
        pair_counts[key] = pair_counts.get(key, 0) + 1
    mult: dict[tuple[int, int], int] = {}
    for (oa, ob, _s, _d), k in pair_counts.items():
        key = (min(oa, ob), max(oa, ob))
        mult[key] = max(mult.get(key, 0), k)
    edges = tuple(sorted((a, b, m) for (a, b), m in mult.items()))
    recognized = _recognize_graph(len(orbits), edges)
    return OrbitQuiver(len(orbits), edges, recognized)


def _recognize_graph(n: int, edges):
    from .classify import OrbitType, WILD_ORBIT

    simple_edges = []
    for a, b, m in edges:
        simple_edges.extend([(a, b)] * m)
    form = quadform.graph_form(n, simple_edges)
    if not quadform.is_psd(form):
        return WILD_ORBIT
    rank = quadform.radical_rank(form)
    if rank == 0:
        label = _dynkin_label(n, simple_edges)
        if label is None:
            return WILD_ORBIT
        return label
    if rank == 1:
        label = _euclidean_label(n, simple_edges)
        if label is None:
            return WILD_ORBIT
        return label
    return WILD_ORBIT


def _degrees(n, edges):
    deg = [0] * n
    adj = [[] for _ in range(n)]
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    return deg, adj


def _arm_lengths(n, adj, center):
    """Lengths of the paths hanging off a unique branch vertex."""
    arms = []
    for start in adj[center]:
        length = 1
        prev, cur = center, start
        while len(adj[cur]) == 2:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    return sorted(arms)


def _dynkin_label(n, edges):
    from .classify import OrbitType

    deg, adj = _degrees(n, edges)
    if any(d > 3 for d in deg):
        return None
    branch = [v for v in range(n) if deg[v] == 3]
    if not branch:
        return OrbitType("A", n)
    if len(branch) != 1:
        return None
    arms = _arm_lengths(n, adj, branch[0])
    if arms[:2] == [1, 1]:
        return OrbitType("D", n)
    if arms == [1, 2, 2]:
        return OrbitType("E6")
    if arms == [1, 2, 3]:
        return OrbitType("E7")
    if arms == [1, 2, 4]:
        return OrbitType("E8")
    return None


def _euclidean_label(n, edges):
    from .classify import OrbitType

    deg, adj = _degrees(n, edges)
    branch = [v for v in range(n) if deg[v] == 3]
    if len(branch) != 1 or any(d > 3 for d in deg):
        return None  # cycles and double-branch diagrams do not occur here
    arms = _arm_lengths(n, adj, branch[0])
    if arms == [1, 3, 3]:
        return OrbitType("E7~")
    if arms == [1, 2, 5]:
        return OrbitType("E8~")
    if arms == [2, 2, 2]:
        return OrbitType("E6~")
    return None


def ar_to_dot(ar: ARQuiver) -> str:
    """DOT export: vertices labeled by dim vector, dashed tau lines."""
    def label(v: ARVertex) -> str:
        rows = "|".join(" ".join(str(c) for c in r) for r in v.dim)
        marks = ""
        if v.projective:
            marks += f" P{v.projective[0]},{v.projective[1]}"
        if v.injective:
            marks += f" I{v.injective[0]},{v.injective[1]}"
        return rows + marks

    lines = ["digraph ar {", "  rankdir=LR;"]
    for v in ar.vertices:
        lines.append(f'  n{v.idx} [label="{label(v)}"];')
    for s, d in ar.arrows:
        lines.append(f"  n{s} -> n{d};")
    by_orbit: dict[int, dict[int, ARVertex]] = {}
    for v in ar.vertices:
        by_orbit.setdefault(v.tau_orbit, {})[v.depth] = v
    for orbit in by_orbit.values():
        for depth in sorted(orbit):
            if depth + 1 in orbit:
                lines.append(
                    f"  n{orbit[depth + 1].idx} -> n{orbit[depth].idx}"
                    " [style=dashed, dir=none, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def orbit_to_dot(oq: OrbitQuiver) -> str:
    lines = ["graph orbits {"]
    for k in range(oq.node_count):
        lines.append(f'  o{k} [label="{k}"];')
    for a, b, m in oq.edges:
        for _ in range(m):
            lines.append(f"  o{a} -- o{b};")
    lines.append(f'  label="{oq.recognized}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

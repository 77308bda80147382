"""Independent geometric reconstruction of the three ray systems.

The 600-cell is built exactly over the golden ring from three orbit seeds
under the 192-element group of even coordinate permutations and arbitrary
sign changes; doubling it by the a-scaling and applying the coordinate map
(m + n*a) -> (m, n) yields the 240 roots of E8 (Gosset's polytope).  The
120-cell comes from its classical vertex coordinates (data file).  Bases
are recovered with no reference to the numbered tables, as d-cliques of the
exact orthogonality graph, so the combinatorial tables can be validated by
hypergraph isomorphism.  Only the triacontagonal (Coxeter-plane) projection
uses floating point; every orthogonality decision is exact.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import golden
from .datasets import data_text
from .golden import (ALPHA, BETA, GoldenInt, GoldenVector, canonical_sign,
                     golden_dot, gvec, phi_map, vec_neg, vec_scale,
                     vec_values)
from .raysystem import Basis, BasisTable

IntVector = tuple[int, ...]


@dataclass(frozen=True)
class RaySet:
    """One representative vector per antipodal pair of polytope vertices."""

    polytope: str
    kind: str  # "golden" (GoldenVector entries) or "int" (integer tuples)
    vectors: tuple[tuple, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def dot(self, i: int, j: int):
        if self.kind == "golden":
            return golden_dot(self.vectors[i], self.vectors[j])
        return sum(a * b for a, b in zip(self.vectors[i], self.vectors[j]))

    def is_orthogonal(self, i: int, j: int) -> bool:
        d = self.dot(i, j)
        return d.is_zero() if self.kind == "golden" else d == 0

    def contains_up_to_sign(self, v) -> bool:
        if self.kind == "golden":
            return canonical_sign(v) in self.vectors
        return (v in self.vectors
                or tuple(-c for c in v) in self.vectors)

    def float_vectors(self) -> np.ndarray:
        if self.kind == "golden":
            return np.array([vec_values(v) for v in self.vectors])
        return np.array(self.vectors, dtype=float)


# --------------------------------------------------------------------------
# icosian 600-cell and the E8 image


def signed_permutation_group() -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The 192 even-permutation/sign-change operations on 4 coordinates."""
    ops = []
    for perm in itertools.permutations(range(4)):
        inversions = sum(1 for i in range(4) for j in range(i + 1, 4)
                         if perm[i] > perm[j])
        if inversions % 2:
            continue
        for signs in itertools.product((1, -1), repeat=4):
            ops.append((perm, signs))
    assert len(ops) == 192
    return ops


def _apply_op(op, v: GoldenVector) -> GoldenVector:
    perm, signs = op
    return tuple(v[perm[i]] if signs[i] == 1 else -v[perm[i]]
                 for i in range(4))


_H4_SEEDS = (
    gvec(2, 0, 0, 0),
    gvec(1, 1, 1, 1),
    gvec(0, ALPHA, 1, BETA),
)
_H4_ORBIT_SIZES = (8, 16, 96)


def icosian_600cell() -> RaySet:
    """The 60 rays of the 600-cell, exactly, on a sphere of radius 2."""
    ops = signed_permutation_group()
    vectors: set[GoldenVector] = set()
    for seed, expect in zip(_H4_SEEDS, _H4_ORBIT_SIZES):
        orbit = {_apply_op(op, seed) for op in ops}
        if len(orbit) != expect:
            raise RuntimeError(f"orbit of {seed} has {len(orbit)} vectors, "
                               f"expected {expect}")
        vectors |= orbit
    if len(vectors) != 120:
        raise RuntimeError(f"expected 120 vertices, got {len(vectors)}")
    rays = sorted({canonical_sign(v) for v in vectors},
                  key=lambda v: tuple((c.m, c.n) for c in v))
    if len(rays) != 60:
        raise RuntimeError("antipodal merge did not yield 60 rays")
    return RaySet("600cell", "golden", tuple(rays))


def scale_by_alpha(rs: RaySet) -> RaySet:
    """Coordinatewise multiplication by a (the second, scaled 600-cell)."""
    if rs.kind != "golden":
        raise ValueError("can only scale golden ray sets")
    rays = tuple(canonical_sign(vec_scale(ALPHA, v)) for v in rs.vectors)
    return RaySet(rs.polytope, "golden", rays)


def e8_rays() -> RaySet:
    """The 120 rays (240 roots) of E8 as the coordinate-map image of the
    two concentric 600-cells."""
    h4a = icosian_600cell()
    h4b = scale_by_alpha(h4a)
    images = []
    for v in h4a.vectors + h4b.vectors:
        w = phi_map(v)
        if w[next(i for i, c in enumerate(w) if c)] < 0:
            w = tuple(-c for c in w)
        images.append(w)
    if len(set(images)) != 120:
        raise RuntimeError("coordinate map did not give 120 distinct rays")
    for w in images:
        if sum(c * c for c in w) != 4:
            raise RuntimeError(f"root {w} has squared norm != 4")
    return RaySet("gosset", "int", tuple(sorted(set(images))))


# --------------------------------------------------------------------------
# the 120-cell


def build_120cell_rays() -> RaySet:
    """The 300 rays of the 120-cell from the golden-coordinate data file.

    The file holds one exact representative per antipodal vertex pair,
    oriented in the icosian frame (see dual_120cell_rays, which re-derives
    the same set as the cell centers of the 600-cell).
    """
    doc = json.loads(data_text("120cell_rays.json"))
    rays = tuple(tuple(GoldenInt(m, n) for m, n in v) for v in doc["rays"])
    if len(set(rays)) != 300:
        raise RuntimeError(f"expected 300 distinct rays, got {len(rays)}")
    norms = {golden_dot(v, v) for v in rays}
    if len(norms) != 1:
        raise RuntimeError(f"rays not on one sphere: norms {norms}")
    for v in rays:
        if canonical_sign(v) != v:
            raise RuntimeError(f"ray {v} is not sign-canonical")
    return RaySet("120cell", "golden", rays)


def dual_120cell_rays() -> RaySet:
    """Re-derive the 120-cell rays as cell centers of the 600-cell.

    The 600 tetrahedral cells are the 4-cliques of the nearest-neighbour
    graph (vertex inner product 2*phi at radius 2); each center is the
    exact golden sum of its four vertices.  Independent of the data file.
    """
    h4 = icosian_600cell()
    verts = [v for u in h4.vectors for v in (u, vec_neg(u))]
    two_phi = GoldenInt(2, -2)
    adj = [set() for _ in verts]
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if golden_dot(verts[i], verts[j]) == two_phi:
                adj[i].add(j)
                adj[j].add(i)
    centers: set[GoldenVector] = set()
    n_cells = 0
    for i in range(len(verts)):
        for j in sorted(adj[i]):
            if j < i:
                continue
            common = adj[i] & adj[j]
            for k in sorted(common):
                if k < j:
                    continue
                for m in sorted(common & adj[k]):
                    if m > k:
                        n_cells += 1
                        cell = (i, j, k, m)
                        centers.add(canonical_sign(tuple(
                            sum((verts[x][t] for x in cell),
                                golden.ZERO) for t in range(4))))
    if n_cells != 600:
        raise RuntimeError(f"expected 600 cells, found {n_cells}")
    if len(centers) != 300:
        raise RuntimeError("cell centers did not merge to 300 rays")
    rays = sorted(centers, key=lambda v: tuple((c.m, c.n) for c in v))
    return RaySet("120cell", "golden", tuple(rays))


# --------------------------------------------------------------------------
# orthogonality graphs and clique bases


@dataclass(frozen=True)
class OrthoGraph:
    n: int
    adjacency: tuple[int, ...]  # vertex -> neighbor bitset

    @property
    def n_edges(self) -> int:
        return sum(a.bit_count() for a in self.adjacency) // 2

    def edges(self) -> set[tuple[int, int]]:
        out = set()
        for i, bits in enumerate(self.adjacency):
            v = bits >> (i + 1) << (i + 1)
            while v:
                low = v & -v
                out.add((i, low.bit_length() - 1))
                v ^= low
        return out

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()


def orthogonality_graph(rs: RaySet) -> OrthoGraph:
    adj = [0] * len(rs)
    for i in range(len(rs)):
        for j in range(i + 1, len(rs)):
            if rs.is_orthogonal(i, j):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return OrthoGraph(len(rs), tuple(adj))


def graph_from_bases(bases: Iterable[Basis]) -> OrthoGraph:
    """Co-occurrence graph of a basis list (vertices = ray ids that occur)."""
    bases = list(bases)
    ids = sorted({r for b in bases for r in b})
    pos = {r: i for i, r in enumerate(ids)}
    adj = [0] * len(ids)
    for b in bases:
        for x, y in itertools.combinations(b, 2):
            adj[pos[x]] |= 1 << pos[y]
            adj[pos[y]] |= 1 << pos[x]
    return OrthoGraph(len(ids), tuple(adj))


def enumerate_bases(g: OrthoGraph, d: int) -> list[tuple[int, ...]]:
    """All d-cliques of the graph, sorted, each exactly once."""
    if d < 1:
        raise ValueError("clique size must be positive")
    out: list[tuple[int, ...]] = []
    adj = g.adjacency

    def extend(clique: list[int], cand: int) -> None:
        if len(clique) == d:
            out.append(tuple(clique))
            return
        # prune: not enough candidates left to finish the clique
        while cand and len(clique) + cand.bit_count() >= d:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            clique.append(v)
            extend(clique, cand & adj[v])
            clique.pop()

    above = [(1 << g.n) - 1 & ~((1 << (v + 1)) - 1) for v in range(g.n)]
    for v in range(g.n):
        extend([v], adj[v] & above[v])
    out.sort()
    return out


def saturated(g: OrthoGraph, bases: Iterable[tuple[int, ...]]) -> bool:
    """Whether every edge of the graph occurs inside some basis."""
    covered = set()
    for b in bases:
        for x, y in itertools.combinations(sorted(b), 2):
            covered.add((x, y))
    return covered == g.edges()


# --------------------------------------------------------------------------
# triacontagonal (Coxeter-plane) projection


# simple-system Gram matrices at root norm 4: off-diagonal entries are
# -4*cos(pi/m) for diagram edges with mark m, zero for non-edges.
_MINUS_2PHI = -2 * BETA  # -4*cos(pi/5), exactly, in the golden ring
_H4_GRAM_EDGES = {(0, 1): _MINUS_2PHI,
                  (1, 2): GoldenInt(-2, 0), (2, 3): GoldenInt(-2, 0)}
_E8_GRAM_EDGES = {(0, 2): -2, (2, 3): -2, (3, 4): -2, (4, 5): -2,
                  (5, 6): -2, (6, 7): -2, (1, 3): -2}


def _simple_system(rs: RaySet) -> list[tuple]:
    """Roots realising the polytope's Coxeter diagram, by backtracking.

    Works on the full signed root list with exact inner products; any
    realisation serves, since all Coxeter elements are conjugate.
    """
    if rs.kind == "golden":
        rank, edges = 4, _H4_GRAM_EDGES
        norm, zero = GoldenInt(4, 0), golden.ZERO
        roots = [v for u in rs.vectors for v in (u, vec_neg(u))]

        def dot(u, v):
            return golden_dot(u, v)
    else:
        rank, edges = 8, _E8_GRAM_EDGES
        norm, zero = 4, 0
        roots = [v for u in rs.vectors
                 for v in (u, tuple(-c for c in u))]

        def dot(u, v):
            return sum(a * b for a, b in zip(u, v))

    def target(i: int, j: int):
        key = (min(i, j), max(i, j))
        return edges.get(key, zero)

    chosen: list = []

    def extend() -> bool:
        i = len(chosen)
        if i == rank:
            return True
        for cand in roots:
            if all(dot(cand, chosen[j]) == target(i, j)
                   for j in range(i)):
                chosen.append(cand)
                if extend():
                    return True
                chosen.pop()
        return False

    for first in roots:
        if dot(first, first) != norm:
            raise RuntimeError("root of unexpected norm in the ray set")
    if not extend():
        raise RuntimeError("no simple system realises the Coxeter diagram")
    return chosen


def _coxeter_plane(rs: RaySet) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal basis of the rotation eigenplane with angle 2*pi/30."""
    if rs.kind == "golden":
        simple = np.array([vec_values(v) for v in _simple_system(rs)])
    else:
        simple = np.array(_simple_system(rs), dtype=float)
    dim = simple.shape[1]
    w = np.eye(dim)
    for r in simple:
        refl = np.eye(dim) - 2.0 * np.outer(r, r) / (r @ r)
        w = refl @ w
    eigvals, eigvecs = np.linalg.eig(w)
    target = complex(math.cos(2 * math.pi / 30), math.sin(2 * math.pi / 30))
    idx = int(np.argmin(np.abs(eigvals - target)))
    if abs(eigvals[idx] - target) > 1e-8:
        raise RuntimeError("no eigenvalue at rotation angle 2*pi/30; "
                           "degenerate spectrum")
    u = eigvecs[:, idx]
    x, y = np.real(u), np.imag(u)
    x = x / np.linalg.norm(x)
    y = y - (y @ x) * x
    ny = np.linalg.norm(y)
    if ny < 1e-12:
        raise RuntimeError("degenerate eigenplane")
    y = y / ny
    return x, y


def coxeter_projection(rs: RaySet) -> list[tuple[float, float]]:
    """(radius, angle_deg) of each ray representative in the projection
    plane invariant under the order-30 rotation; radii normalised so the
    largest is exactly 1.

    The 120-cell is not a root system, so its rays are projected onto the
    plane of the 600-cell (both share the same symmetry group).
    """
    if rs.polytope == "120cell":
        plane_source = icosian_600cell()
    else:
        plane_source = rs
    x, y = _coxeter_plane(plane_source)
    out = []
    for v in rs.float_vectors():
        px, py = v @ x, v @ y
        out.append((math.hypot(px, py),
                    math.degrees(math.atan2(py, px)) % 360.0))
    rmax = max(r for r, _ in out)
    return [(r / rmax, a) for r, a in out]


def radius_classes(projection: Sequence[tuple[float, float]],
                   tol: float = 1e-6) -> list[tuple[float, list[int]]]:
    """Group ray indices by projection radius (within tol), outermost first."""
    classes: list[tuple[float, list[int]]] = []
    for i, (r, _) in enumerate(projection):
        for rc, members in classes:
            if abs(rc - r) <= tol:
                members.append(i)
                break
        else:
            classes.append((r, [i]))
    return sorted(classes, key=lambda c: -c[0])


def pentadecagon_classes(projection: Sequence[tuple[float, float]],
                         tol: float = 1e-6
                         ) -> list[tuple[float, float, list[int]]]:
    """(radius, angle residue mod 12 deg, members) per projected 15-gon.

    Rays of one pentadecagon share a radius and an angle residue modulo 12
    degrees (the residue is representative-independent: antipodes differ by
    180 = 15 * 12 degrees).  Two pentadecagons may share a radius but then
    differ in residue, so grouping by both separates them.
    """
    out: list[tuple[float, float, list[int]]] = []
    for radius, members in radius_classes(projection, tol):
        groups: list[tuple[float, list[int]]] = []
        for i in members:
            res = projection[i][1] % 12.0
            for gres, g in groups:
                delta = abs(res - gres)
                if min(delta, 12.0 - delta) <= tol:
                    g.append(i)
                    break
            else:
                groups.append((res, [i]))
        for res, g in sorted(groups):
            out.append((radius, res, g))
    return out


def grid_slots(projection: Sequence[tuple[float, float]],
               members: Sequence[int]) -> list[int]:
    """Even 12-degree grid slots (0..28) occupied by the members' rays.

    A pentadecagon's rays sit 24 degrees apart, i.e. on the fifteen even
    slots of the 12-degree grid; an antipodal representative lands on an
    odd slot, 15 steps away, and is folded back.  Fifteen distinct even
    slots certify the equal 24-degree spacing.
    """
    base = projection[members[0]][1] % 12.0
    slots = []
    for i in members:
        step = round((projection[i][1] - base) / 12.0) % 30
        slots.append(step if step % 2 == 0 else (step + 15) % 30)
    return slots


# --------------------------------------------------------------------------
# hypergraph matching against the numbered tables


class MatchError(RuntimeError):
    """No ray bijection maps the computed bases onto the reference table."""


def _refine(adj_a: Sequence[int], adj_b: Sequence[int],
            colors_a: list[int], colors_b: list[int]) -> bool:
    """Joint Weisfeiler-Lehman color refinement; False when the color
    class sizes of the two graphs diverge (no isomorphism possible)."""
    while True:
        sig_ids: dict[tuple, int] = {}

        def signature(adj, colors, i):
            neigh = []
            bits = adj[i]
            while bits:
                low = bits & -bits
                neigh.append(colors[low.bit_length() - 1])
                bits ^= low
            neigh.sort()
            return (colors[i], tuple(neigh))

        new_a, new_b = [], []
        for i in range(len(colors_a)):
            s = signature(adj_a, colors_a, i)
            new_a.append(sig_ids.setdefault(s, len(sig_ids)))
        for i in range(len(colors_b)):
            s = signature(adj_b, colors_b, i)
            if s not in sig_ids:
                return False
            new_b.append(sig_ids[s])
        from collections import Counter
        if Counter(new_a) != Counter(new_b):
            return False
        stable = new_a == colors_a and new_b == colors_b
        colors_a[:], colors_b[:] = new_a, new_b
        if stable:
            return True


def _iso_search(adj_a, adj_b, colors_a, colors_b, budget: list[int]):
    budget[0] -= 1
    if budget[0] < 0:
        raise MatchError("isomorphism search budget exceeded")
    ca, cb = list(colors_a), list(colors_b)
    if not _refine(adj_a, adj_b, ca, cb):
        return None
    classes: dict[int, list[int]] = {}
    for i, c in enumerate(ca):
        classes.setdefault(c, []).append(i)
    multi = [(len(v), c) for c, v in classes.items() if len(v) > 1]
    if not multi:
        pos_b = {c: i for i, c in enumerate(cb)}
        mapping = [pos_b[c] for c in ca]
        for i in range(len(ca)):
            bits = adj_a[i]
            image = 0
            while bits:
                low = bits & -bits
                image |= 1 << mapping[low.bit_length() - 1]
                bits ^= low
            if image != adj_b[mapping[i]]:
                return None
        return mapping
    _, color = min(multi)
    v = classes[color][0]
    next_color = max(ca) + len(ca) + 1
    for u in range(len(cb)):
        if cb[u] != color:
            continue
        ca2, cb2 = list(ca), list(cb)
        ca2[v] = next_color
        cb2[u] = next_color
        found = _iso_search(adj_a, adj_b, ca2, cb2, budget)
        if found is not None:
            return found
    return None


def match_labeling(computed: Sequence[Basis], reference: BasisTable,
                   budget: int = 200_000) -> dict[int, int]:
    """A ray bijection carrying the computed basis hypergraph onto the
    reference table, found by color refinement plus individualization.

    Returns {computed ray id -> reference ray id}; raises MatchError when
    counts differ or no bijection exists within the search budget.
    """
    ref_bases = list(reference.bases)
    if len(computed) != len(ref_bases):
        raise MatchError(f"basis counts differ: {len(computed)} vs "
                         f"{len(ref_bases)}")
    ga = graph_from_bases(computed)
    gb = graph_from_bases(ref_bases)
    if ga.n != gb.n:
        raise MatchError(f"ray counts differ: {ga.n} vs {gb.n}")
    ids_a = sorted({r for b in computed for r in b})
    ids_b = sorted({r for b in ref_bases for r in b})
    mapping = _iso_search(ga.adjacency, gb.adjacency,
                          [0] * ga.n, [0] * gb.n, [budget])
    if mapping is None:
        raise MatchError("no ray bijection maps the computed bases onto "
                         "the reference table")
    result = {ids_a[i]: ids_b[mapping[i]] for i in range(ga.n)}
    image = {frozenset(result[r] for r in b) for b in computed}
    if image != {frozenset(b) for b in ref_bases}:
        raise MatchError("graph bijection does not carry bases to bases")
    return result


# --------------------------------------------------------------------------
# the non-rigidity demonstration


@dataclass(frozen=True)
class RigidityClaim:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class RigidityReport:
    claims: tuple[RigidityClaim, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.claims)


def rigidity_demo() -> RigidityReport:
    """The six-vector witness that the 600-cell's orthogonality relations
    do not pin it down: the 8-d images of its rays satisfy every 4-d
    orthogonality, plus extra ones with no 4-d counterpart."""
    v = {
        1: gvec(2, 0, 0, 0),
        2: gvec(0, ALPHA, 1, BETA),
        3: gvec(0, 1, BETA, ALPHA),
        4: gvec(0, BETA, ALPHA, 1),
        5: gvec(0, ALPHA, 1, -BETA),
        6: gvec(ALPHA, BETA, 1, 0),
    }
    expected_phi = {
        1: (2, 0, 0, 0, 0, 0, 0, 0),
        2: (0, 0, 1, 1, 0, 1, 0, -1),
        3: (0, 1, 1, 0, 0, 0, -1, 1),
        4: (0, 1, 0, 1, 0, -1, 1, 0),
        5: (0, 0, 1, -1, 0, 1, 0, 1),
        6: (0, 1, 1, 0, 1, -1, 0, 0),
    }
    phi = {i: phi_map(u) for i, u in v.items()}
    h4 = icosian_600cell()
    claims: list[RigidityClaim] = []

    def claim(name: str, ok: bool, detail: str = "") -> None:
        claims.append(RigidityClaim(name, bool(ok), detail))

    for i in sorted(v):
        claim(f"v{i} is a 600-cell ray", h4.contains_up_to_sign(v[i]))
        claim(f"phi(v{i}) matches its stated 8-d image",
              phi[i] == expected_phi[i], f"{phi[i]}")

    def g_orth(i, j):
        return golden_dot(v[i], v[j]).is_zero()

    def e_dot(i, j):
        return sum(a * b for a, b in zip(phi[i], phi[j]))

    for i, j in itertools.combinations((1, 2, 3, 4), 2):
        claim(f"v{i} orthogonal to v{j}", g_orth(i, j))
        claim(f"phi(v{i}) orthogonal to phi(v{j})", e_dot(i, j) == 0)
    for i, j in itertools.combinations((1, 2, 5, 6), 2):
        claim(f"phi(v{i}) orthogonal to phi(v{j})", e_dot(i, j) == 0)
    claim("v1 not orthogonal to v6", not g_orth(1, 6),
          str(golden_dot(v[1], v[6])))
    claim("v2 not orthogonal to v5", not g_orth(2, 5),
          str(golden_dot(v[2], v[5])))
    return RigidityReport(tuple(claims))


# --------------------------------------------------------------------------
# exports


def rayset_to_json(rs: RaySet) -> dict:
    if rs.kind == "golden":
        vecs = [[[c.m, c.n] for c in v] for v in rs.vectors]
    else:
        vecs = [list(v) for v in rs.vectors]
    return {"polytope": rs.polytope, "kind": rs.kind, "rays": vecs}


def projection_to_csv(projection: Sequence[tuple[float, float]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["ray", "radius", "angle_deg"])
    for i, (r, a) in enumerate(projection):
        writer.writerow([i + 1, f"{r:.6f}", f"{a:.6f}"])
    return buf.getvalue()

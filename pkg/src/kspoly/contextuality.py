"""Parity-proof verification, noncontextual-assignment search, and the
decomposition of proofs into smaller embedded proofs.

A parity proof is an odd set of bases in which every participating ray
occurs an even number of times; such a set admits no {0,1} assignment
giving each basis exactly one 1.  Decomposition works on the ray-by-basis
incidence matrix restricted to the proof's bases: every odd-weight vector
of its GF(2) nullspace is an embedded sub-proof.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Mapping, Sequence

from .gf2 import BitMatrix, EnumerationLimitError, gf2_nullspace
from .raysystem import (Basis, BasisTable, Word, parse_word, render_word,
                        word_to_bases)

NODE_BUDGET_ENV = "KSPOLY_NODE_BUDGET"
DEFAULT_NODE_BUDGET = 5_000_000


class SearchBudgetExceeded(RuntimeError):
    """The backtracking search ran out of its node budget."""


@dataclass(frozen=True)
class Proof:
    """A selection of bases out of a basis table (0-based indices)."""

    table: BasisTable
    basis_indices: frozenset[int]

    def __post_init__(self) -> None:
        if not self.basis_indices:
            raise ValueError("a proof needs at least one basis")
        n = len(self.table.bases)
        if any(not 0 <= i < n for i in self.basis_indices):
            raise ValueError("basis index out of table range")

    def bases(self) -> list[Basis]:
        return [self.table.bases[i] for i in sorted(self.basis_indices)]


def proof_from_word(w: Word, table: BasisTable) -> Proof:
    return Proof(table, word_to_bases(w, table))


@dataclass(frozen=True)
class ParityCertificate:
    valid: bool
    basis_count: int
    ray_occurrences: Mapping[int, int]
    offending_rays: tuple[int, ...]  # rays occurring an odd number of times


def verify_parity_proof(p: Proof) -> ParityCertificate:
    """Check the defining parity condition basis-count odd, rays all even."""
    occ: dict[int, int] = {}
    for b in p.bases():
        for r in b:
            occ[r] = occ.get(r, 0) + 1
    offending = tuple(sorted(r for r, c in occ.items() if c % 2))
    count = len(p.basis_indices)
    return ParityCertificate(valid=(count % 2 == 1 and not offending),
                             basis_count=count,
                             ray_occurrences=occ,
                             offending_rays=offending)


def certificate_for_bases(bases: Sequence[Basis]) -> ParityCertificate:
    """Parity certificate over raw bases (no table needed)."""
    occ: dict[int, int] = {}
    for b in bases:
        for r in b:
            occ[r] = occ.get(r, 0) + 1
    offending = tuple(sorted(r for r, c in occ.items() if c % 2))
    return ParityCertificate(valid=(len(bases) % 2 == 1 and not offending),
                             basis_count=len(bases),
                             ray_occurrences=occ,
                             offending_rays=offending)


# --------------------------------------------------------------------------
# noncontextual assignment search


def find_ks_assignment(bases: Sequence[Basis],
                       node_budget: int | None = None
                       ) -> dict[int, int] | None:
    """Exhaustive search for a {0,1} ray assignment with exactly one 1 per
    basis.  Returns such an assignment, or None if none exists (complete
    backtracking; branches on the unsatisfied basis with fewest options).

    node_budget caps branching nodes; default comes from KSPOLY_NODE_BUDGET.
    """
    if node_budget is None:
        node_budget = int(os.environ.get(NODE_BUDGET_ENV,
                                         DEFAULT_NODE_BUDGET))
    bases = [tuple(b) for b in bases]
    if not bases:
        return {}
    rays = sorted({r for b in bases for r in b})
    of_ray: dict[int, list[int]] = {r: [] for r in rays}
    for bi, b in enumerate(bases):
        for r in b:
            of_ray[r].append(bi)

    value: dict[int, int] = {}
    ones = [0] * len(bases)
    zeros = [0] * len(bases)
    nodes = 0

    def set_ray(r: int, val: int, trail: list[int]) -> bool:
        """Assign with unit propagation; False on contradiction."""
        queue = [(r, val)]
        while queue:
            r, val = queue.pop()
            if r in value:
                if value[r] != val:
                    return False
                continue
            value[r] = val
            trail.append(r)
            # update every counter first so that undo() stays consistent
            # even when a contradiction is detected below
            for bi in of_ray[r]:
                if val:
                    ones[bi] += 1
                else:
                    zeros[bi] += 1
            for bi in of_ray[r]:
                if val:
                    if ones[bi] > 1:
                        return False
                    # the basis is satisfied: every other ray must be 0
                    for other in bases[bi]:
                        if other not in value:
                            queue.append((other, 0))
                elif ones[bi] == 0:
                    free = len(bases[bi]) - zeros[bi]
                    if free == 0:
                        return False
                    if free == 1:
                        forced = next(o for o in bases[bi]
                                      if o not in value)
                        queue.append((forced, 1))
        return True

    def undo(trail: list[int]) -> None:
        for r in trail:
            val = value.pop(r)
            for bi in of_ray[r]:
                if val:
                    ones[bi] -= 1
                else:
                    zeros[bi] -= 1

    def branch_basis() -> int | None:
        best, best_free = None, None
        for bi, b in enumerate(bases):
            if ones[bi]:
                continue
            free = len(b) - zeros[bi]
            if best_free is None or free < best_free:
                best, best_free = bi, free
        return best

    def search() -> bool:
        nonlocal nodes
        bi = branch_basis()
        if bi is None:
            return True
        for r in bases[bi]:
            if r in value:
                continue
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceeded(
                    f"assignment search exceeded {node_budget} nodes")
            trail: list[int] = []
            if set_ray(r, 1, trail) and search():
                return True
            undo(trail)
        return False

    if not search():
        return None
    return {r: value.get(r, 0) for r in rays}


# --------------------------------------------------------------------------
# decomposition into embedded sub-proofs


@dataclass(frozen=True)
class Decomposition:
    proofs: tuple[Proof, ...]
    truncated: bool
    nullity: int


def incidence_nullspace_proofs(p: Proof, cap: int = 10_000,
                               nullity_limit: int = 25) -> Decomposition:
    """Every embedded parity proof among subsets of p's bases.

    Builds the ray-by-basis incidence matrix restricted to p's bases and
    returns each odd-weight nullspace vector as a sub-proof (p itself
    included when p is a parity proof).  Sorted by basis count, then by
    index set; capped at `cap` sub-proofs with a truncation flag.
    """
    order = sorted(p.basis_indices)
    rays = sorted({r for i in order for r in p.table.bases[i]})
    ray_pos = {r: i for i, r in enumerate(rays)}
    rows = [0] * len(rays)
    for col, bi in enumerate(order):
        for r in p.table.bases[bi]:
            rows[ray_pos[r]] |= 1 << col
    spec = gf2_nullspace(BitMatrix(len(rows), len(order), tuple(rows)))
    if spec.k > nullity_limit:
        raise EnumerationLimitError(
            f"incidence nullity {spec.k} exceeds the enumeration limit "
            f"{nullity_limit}")
    subs: list[frozenset[int]] = []
    truncated = False
    v = 0
    for i in range(1, 1 << spec.k):
        v ^= spec.nullspace_basis[(i & -i).bit_length() - 1]
        if v.bit_count() % 2 == 0:
            continue
        members = frozenset(order[j] for j in _bits(v))
        subs.append(members)
        if len(subs) > cap:
            truncated = True
            subs.pop()
            break
    subs.sort(key=lambda s: (len(s), tuple(sorted(s))))
    return Decomposition(tuple(Proof(p.table, s) for s in subs),
                         truncated, spec.k)


def _bits(v: int) -> list[int]:
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


def is_irreducible(p: Proof) -> bool:
    """True iff p contains no embedded parity proof other than itself."""
    dec = incidence_nullspace_proofs(p)
    return (not dec.truncated and len(dec.proofs) == 1
            and dec.proofs[0].basis_indices == p.basis_indices)


def classify_decomposition(p: Proof, subs: Sequence[Proof]) -> str:
    """"direct_sum" when some subset of subs partitions p's bases exactly,
    "overlapping" otherwise."""
    target = frozenset(p.basis_indices)
    pieces = sorted({s.basis_indices for s in subs
                     if s.basis_indices <= target},
                    key=lambda s: (len(s), tuple(sorted(s))))

    def cover(remaining: frozenset[int], start: int) -> bool:
        if not remaining:
            return True
        anchor = min(remaining)
        for i in range(start, len(pieces)):
            s = pieces[i]
            if anchor in s and s <= remaining:
                if cover(remaining - s, i + 1):
                    return True
        return False

    return "direct_sum" if cover(target, 0) else "overlapping"


def local_indices(p: Proof, sub: Proof) -> tuple[int, ...]:
    """1-based positions of a sub-proof inside p's sorted basis list."""
    order = sorted(p.basis_indices)
    pos = {bi: i + 1 for i, bi in enumerate(order)}
    return tuple(sorted(pos[bi] for bi in sub.basis_indices))


# --------------------------------------------------------------------------
# JSON interfaces (1-based indices externally)


def proof_to_json(p: Proof, word: Word | None = None) -> dict:
    doc = {"polytope": p.table.layout.polytope,
           "basis_indices": [i + 1 for i in sorted(p.basis_indices)]}
    if word is not None:
        doc["word"] = render_word(word)
    return doc


def proof_from_json(doc: dict, table: BasisTable) -> Proof:
    if doc["polytope"] != table.layout.polytope:
        raise ValueError(f"proof file is for {doc['polytope']}, "
                         f"table is {table.layout.polytope}")
    if "basis_indices" in doc and doc["basis_indices"]:
        indices = frozenset(int(i) - 1 for i in doc["basis_indices"])
    elif "word" in doc:
        indices = word_to_bases(parse_word(doc["word"]), table)
    else:
        raise ValueError("proof file carries neither indices nor a word")
    return Proof(table, indices)


def certificate_to_json(cert: ParityCertificate) -> dict:
    return {"valid": cert.valid,
            "basis_count": cert.basis_count,
            "offending_rays": list(cert.offending_rays),
            "ray_occurrences": {str(r): c for r, c
                                in sorted(cert.ray_occurrences.items())}}


def load_proof(path: str, table: BasisTable) -> Proof:
    with open(path) as fh:
        return proof_from_json(json.load(fh), table)

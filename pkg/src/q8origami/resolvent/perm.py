"""Small permutation groups on {1..8}, stored as full element sets.

Internally a permutation is a tuple ``p`` with ``p[i]`` the image of i
(0-based); cycle notation in and out is 1-based.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

Perm = tuple[int, ...]


def identity(n: int = 8) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def from_cycles(text: str, n: int = 8) -> Perm:
    """Parse cycle notation such as "(1,3,2,4)(5,7,6,8)"."""
    img = list(range(n))
    for cyc in re.findall(r"\(([^)]*)\)", text):
        pts = [int(s) - 1 for s in re.split(r"[,\s]+", cyc.strip()) if s]
        for i, pt in enumerate(pts):
            img[pt] = pts[(i + 1) % len(pts)]
    return tuple(img)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = p[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = p[nxt]
        out.append(tuple(cyc))
    return out


def to_cycles(p: Perm) -> str:
    parts = ["(" + ",".join(str(i + 1) for i in c) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths (fixed points included) in increasing order."""
    return tuple(sorted(len(c) for c in cycles(p)))


def order(p: Perm) -> int:
    from math import lcm

    return lcm(*cycle_type(p))


@dataclass(frozen=True)
class PermGroup:
    elements: frozenset
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return p in self.elements

    def is_group(self) -> bool:
        els = self.elements
        if identity(self.degree) not in els:
            return False
        return all(compose(p, q) in els for p in els for q in els) and all(
            inverse(p) in els for p in els
        )

    @property
    def degree(self) -> int:
        return len(next(iter(self.elements)))


def perm_closure(gens, n: int = 8) -> PermGroup:
    """Group generated by ``gens`` (breadth-first over right multiplication)."""
    gens = tuple(from_cycles(g, n) if isinstance(g, str) else tuple(g) for g in gens)
    start = identity(n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return PermGroup(frozenset(seen), gens)


def normalizer_in_S8(H: PermGroup) -> PermGroup:
    """All s in S_8 with s H s^-1 = H, found by scanning every element."""
    gens = H.generators or tuple(H.elements)
    els = H.elements
    found = []
    for s in itertools.permutations(range(8)):
        s_inv = inverse(s)
        if all(compose(compose(s, g), s_inv) in els for g in gens):
            found.append(s)
    return PermGroup(frozenset(found), _small_generating_set(found))


def _small_generating_set(elements) -> tuple:
    """Greedy generating set, so closure re-checks stay cheap."""
    target = set(elements)
    gens: list = []
    current = {identity(len(next(iter(target))))}
    for p in sorted(target):
        if p not in current:
            gens.append(p)
            current = set(perm_closure(gens, len(p)).elements)
            if current == target:
                break
    return tuple(gens)


def cycle_type_set(G: PermGroup) -> set[tuple[int, ...]]:
    return {cycle_type(p) for p in G.elements}


def quaternion_regular() -> PermGroup:
    """Q8 acting on itself, generated by i and j."""
    return perm_closure(["(1,3,2,4)(5,7,6,8)", "(1,5,2,6)(3,8,4,7)"])


def wreath_s2_s4() -> PermGroup:
    """S_2 wr S_4 preserving the blocks {1,2},{3,4},{5,6},{7,8} (order 384)."""
    return perm_closure(["(1,2)", "(1,3)(2,4)", "(1,3,5,7)(2,4,6,8)"])


def signature_is_q8(G: PermGroup) -> bool:
    """Order 8 with exactly one element of order 2 and six of order 4."""
    orders = sorted(order(p) for p in G.elements)
    return G.order == 8 and orders == [1, 2, 4, 4, 4, 4, 4, 4]

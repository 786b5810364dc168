"""Marked cuspidal cubic configuration and nodal roots of its blowup.

Given a field vector v, the base points on the cubic p(t) = [1 : t : t^3] have
parameters t_i - t_0 where 3 t_0 = v.e_0 and t_i = v.e_i.  Indices sharing a
parameter form an infinitely-near tower, ordered by ascending index.

A candidate root is nodal when it has one of the three shapes

* ``e_i - e_j``: consecutive members of one tower,
* ``e_0 - (three e's)``: a line through three base points,
* ``2 e_0 - (six e's)``: an irreducible conic through six base points,

and pairs to zero against v.  Curves through a tower must use an initial
segment of it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import ClassificationError
from .lattice import LatticeVector, Root, is_positive_root, is_root, pairing
from .numberfield import FieldElement, FieldVector, NumberField, field_pairing

TOWER = "tower"
LINE = "line"
CONIC = "conic"


@dataclass(frozen=True)
class BasePoint:
    parameter: FieldElement  # t_i - t_0
    members: Tuple[int, ...]

    @property
    def height(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class MarkedCubicConfig:
    field: NumberField
    t0: FieldElement
    params: Tuple[FieldElement, ...]  # t_1 .. t_n
    base_points: Tuple[BasePoint, ...]

    @property
    def n(self) -> int:
        return len(self.params)

    def heights(self) -> List[int]:
        return [b.height for b in self.base_points]

    def tower_of(self, i: int) -> BasePoint:
        for b in self.base_points:
            if i in b.members:
                return b
        raise KeyError(i)

    def to_json(self) -> Dict:
        return {
            "t0": self.t0.to_json(),
            "base_points": [
                {"parameter": b.parameter.to_json(), "height": b.height, "members": list(b.members)}
                for b in self.base_points
            ],
        }


def marked_cubic_config(F: NumberField, v: FieldVector) -> MarkedCubicConfig:
    n = v.rank
    t0 = v[0] / 3
    # t_i = v . e_i = -v_i
    params = tuple(-v[i] for i in range(1, n + 1))
    groups: Dict[Tuple, List[int]] = {}
    for i, t in enumerate(params, start=1):
        groups.setdefault(t.coeffs, []).append(i)
    base = []
    for members in sorted(groups.values(), key=lambda m: m[0]):
        base.append(BasePoint(params[members[0] - 1] - t0, tuple(members)))
    return MarkedCubicConfig(F, t0, params, tuple(base))


@dataclass(frozen=True)
class NodalRoot:
    root: Root
    kind: str
    indices: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return self.root[0]

    def describe(self) -> str:
        return str(self.root)

    def to_json(self) -> Dict:
        return {"root": self.root.to_json(), "kind": self.kind, "indices": list(self.indices),
                "text": str(self.root)}


@dataclass(frozen=True)
class LinkedComponent:
    members: Tuple[int, ...]  # indices into NodalSet.roots, in diagram order
    dynkin: str

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class NodalSet:
    roots: Tuple[NodalRoot, ...]
    components: Tuple[LinkedComponent, ...]
    reducible: Tuple[LatticeVector, ...] = ()

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[NodalRoot]:
        return iter(self.roots)

    def vectors(self) -> List[Root]:
        return [r.root for r in self.roots]

    def component_of(self, k: int) -> int:
        for ci, comp in enumerate(self.components):
            if k in comp.members:
                return ci
        raise KeyError(k)

    def span_rank(self) -> int:
        return integer_rank([r.root.coords for r in self.roots])

    def to_json(self) -> List[Dict]:
        out = []
        for k, r in enumerate(self.roots):
            d = r.to_json()
            ci = self.component_of(k)
            d["component_id"] = ci
            d["dynkin"] = self.components[ci].dynkin
            out.append(d)
        return out


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss-style) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    rank = 0
    cols = len(m[0])
    prev = 1
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, len(m)):
            f = m[r][c]
            m[r] = [(p * a - f * b) // prev for a, b in zip(m[r], m[rank])]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def self_intersection(d: int, mults: Sequence[Tuple[int, int]]) -> int:
    """d^2 - sum min(m_i, h_i) for a degree-d curve meeting base points of height h_i."""
    if d < 1:
        raise ValueError("degree must be positive")
    if any(m < 0 or h < 1 for m, h in mults):
        raise ValueError("multiplicities must be >= 0 and heights >= 1")
    if sum(m for m, _ in mults) > 3 * d:
        raise ValueError(f"total multiplicity exceeds 3d = {3 * d} (cubic intersection bound)")
    return d * d - sum(min(m, h) for m, h in mults)


# -- exact zero tests, accelerated by a linear hash ----------------------------

_PRIME = (1 << 61) - 1


class _LinearHash:
    """h(x) = sum r_k x_k mod p: additive, so h(sum) = sum h, and h(0) = 0."""

    def __init__(self, degree: int, seed: int = 20240601):
        rng = random.Random(seed)
        self.weights = [rng.randrange(1, _PRIME) for _ in range(degree)]

    def __call__(self, x: FieldElement) -> Optional[int]:
        acc = 0
        for w, c in zip(self.weights, x.coeffs):
            if c.denominator % _PRIME == 0:
                return None
            acc += w * c.numerator * pow(c.denominator, -1, _PRIME)
        return acc % _PRIME


def _multisets(base: Sequence[BasePoint], size: int) -> Iterator[Tuple[int, ...]]:
    """Multiplicity vectors (as sorted group-index tuples) with m_g <= h_g."""

    def rec(start: int, remaining: int, acc: List[int]):
        if remaining == 0:
            yield tuple(acc)
            return
        for g in range(start, len(base)):
            used = acc.count(g)
            if used >= base[g].height:
                continue
            acc.append(g)
            yield from rec(g, remaining - 1, acc)
            acc.pop()

    yield from rec(0, size, [])


def _indices_for(base: Sequence[BasePoint], groups: Sequence[int]) -> Tuple[int, ...]:
    out: List[int] = []
    for g in sorted(set(groups)):
        out.extend(base[g].members[: groups.count(g)])
    return tuple(sorted(out))


def _curve_root(n: int, d: int, indices: Sequence[int]) -> Root:
    c = [0] * (n + 1)
    c[0] = d
    for i in indices:
        c[i] -= 1
    return Root(tuple(c))


def nodal_set(config: MarkedCubicConfig, v: FieldVector) -> NodalSet:
    """Enumerate nodal roots orthogonal to ``v`` and classify their components."""
    n = config.n
    base = config.base_points
    roots: List[NodalRoot] = []
    reducible: List[LatticeVector] = []

    for b in base:
        for i, j in zip(b.members, b.members[1:]):
            c = [0] * (n + 1)
            c[i], c[j] = 1, -1
            roots.append(NodalRoot(Root(tuple(c)), TOWER, (i, j)))
        # equal parameters but not consecutive: effective, reducible
        for a in range(len(b.members)):
            for z in range(a + 2, len(b.members)):
                c = [0] * (n + 1)
                c[b.members[a]], c[b.members[z]] = 1, -1
                reducible.append(LatticeVector(tuple(c)))

    # w_g = v_i for i in group g; the pairing of d e_0 - sum e_i with v is d v_0 + sum v_i
    values = [v[b.members[0]] for b in base]
    h = _LinearHash(config.field.degree)
    hv0 = h(v[0])
    hvals = [h(x) for x in values]
    exact_needed = hv0 is None or any(x is None for x in hvals)

    def vanishes(d: int, groups: Sequence[int]) -> bool:
        if not exact_needed:
            if (d * hv0 + sum(hvals[g] for g in groups)) % _PRIME:
                return False
        total = v[0] * d
        for g in groups:
            total = total + values[g]
        return total.is_zero()

    line_groups = []
    for groups in _multisets(base, 3):
        if vanishes(1, groups):
            line_groups.append(groups)
            idx = _indices_for(base, groups)
            roots.append(NodalRoot(_curve_root(n, 1, idx), LINE, idx))

    for groups in _multisets(base, 6):
        if not vanishes(2, groups):
            continue
        idx = _indices_for(base, groups)
        if _splits_into_lines(groups, vanishes):
            reducible.append(_curve_root(n, 2, idx))
            continue
        roots.append(NodalRoot(_curve_root(n, 2, idx), CONIC, idx))

    for r in roots:
        if not is_positive_root(r.root) or not field_pairing(v, r.root).is_zero():
            raise ClassificationError(f"candidate {r.root} violates the nodal invariants")
    components = linked_components([r.root for r in roots])
    return NodalSet(tuple(roots), tuple(components), tuple(reducible))


def _splits_into_lines(groups: Sequence[int], vanishes) -> bool:
    for sub in set(combinations(groups, 3)):
        if vanishes(1, sub):
            return True
    return False


# -- linked components and Dynkin types ----------------------------------------


def linked_components(roots: Sequence[LatticeVector]) -> List[LinkedComponent]:
    """Connected components of the pairing-1 graph, each typed A/D/E."""
    k = len(roots)
    adj: List[List[int]] = [[] for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            p = pairing(roots[a], roots[b])
            if p not in (0, 1):
                raise ClassificationError(
                    f"nodal roots {roots[a]} and {roots[b]} pair to {p}, expected 0 or 1"
                )
            if p == 1:
                adj[a].append(b)
                adj[b].append(a)
    seen = [False] * k
    comps: List[LinkedComponent] = []
    for s in range(k):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(_classify(sorted(comp), adj))
    return comps


def _classify(comp: List[int], adj: List[List[int]]) -> LinkedComponent:
    size = len(comp)
    edges = sum(len(adj[x]) for x in comp) // 2
    if edges != size - 1:
        raise ClassificationError(f"component {comp} contains a cycle; not a Dynkin diagram")
    degrees = {x: len(adj[x]) for x in comp}
    if size == 1:
        return LinkedComponent(tuple(comp), "A1")
    branch = [x for x in comp if degrees[x] >= 3]
    if not branch:
        start = min(x for x in comp if degrees[x] == 1)
        return LinkedComponent(tuple(_walk(start, None, adj)), f"A{size}")
    if len(branch) > 1 or degrees[branch[0]] > 3:
        raise ClassificationError(f"component {comp} is not simply-laced ADE")
    c = branch[0]
    arms = sorted((_walk(nb, c, adj) for nb in adj[c]), key=lambda a: (len(a), a))
    lengths = tuple(len(a) for a in arms)
    if lengths[0] == 1 and lengths[1] == 1:
        name = f"D{size}"
    elif lengths == (1, 2, 2):
        name = "E6"
    elif lengths == (1, 2, 3):
        name = "E7"
    elif lengths == (1, 2, 4):
        name = "E8"
    else:
        raise ClassificationError(f"component {comp} with arms {lengths} is not simply-laced ADE")
    # longest arm from its tip, then the branch node, then the shorter arms
    order = list(reversed(arms[2])) + [c] + arms[1] + arms[0]
    return LinkedComponent(tuple(order), name)


def _walk(start: int, prev: Optional[int], adj: List[List[int]]) -> List[int]:
    out = [start]
    while True:
        nxt = [y for y in adj[out[-1]] if y != prev]
        if len(nxt) != 1:
            return out
        prev = out[-1]
        out.append(nxt[0])


def is_periodic_root(alpha: LatticeVector, v: FieldVector) -> bool:
    if not is_root(alpha):
        raise ValueError(f"{alpha} is not a root")
    return field_pairing(v, alpha).is_zero()

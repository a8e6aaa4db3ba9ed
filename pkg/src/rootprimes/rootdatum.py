"""Root data: construction, validation, duality, components, weight lattices.

A root datum is a quadruple (X, roots, Y, coroots) of two rank-r lattices in
duality together with finite subsets in bijection.  Here X and Y are both
identified with Z^r via a fixed pair of dual bases, so the pairing is the
ordinary dot product: ``roots[i]`` holds X-coordinates, ``coroots[i]`` holds
Y-coordinates, and index i matches root with coroot.

Axioms checked by :func:`validate`: the pairing of a root with its own coroot
is 2, and each reflection ``x -> x - <x, a^vee> a`` permutes the root set
(dually for coroots).  Data are required to be reduced (no root is twice
another).

Cartan matrices follow the convention ``C[i][j] = <alpha_j, alpha_i^vee>``,
with Bourbaki Planche node numbering (Groupes et algebres de Lie, ch. VI),
so the j-th column of C lists the coordinates of the j-th simple root in the
simply connected realization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Optional, Sequence

from .errors import NotARootSystemError
from .intlin import (
    FinAbGroup,
    IntMatrix,
    RowLattice,
    dot,
    quotient_group,
    rational_inverse,
    row_basis,
    solve_right,
)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class RootDatum:
    """Immutable root datum in a fixed pair of dual bases of X and Y."""

    rank: int
    roots: tuple[Vector, ...]
    coroots: tuple[Vector, ...]

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if len(self.roots) != len(self.coroots):
            raise ValueError("roots and coroots must match up index by index")
        for v in self.roots + self.coroots:
            if len(v) != self.rank:
                raise ValueError("root/coroot length must equal the rank")

    @property
    def num_roots(self) -> int:
        return len(self.roots)

    def root_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.roots, cols=self.rank)

    def coroot_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.coroots, cols=self.rank)

    def pairing(self, i: int, j: int) -> int:
        """<roots[i], coroots[j]>."""
        return dot(self.roots[i], self.coroots[j])

    def root_index(self, vec: Sequence[int]) -> Optional[int]:
        return _root_lookup(self).get(tuple(vec))

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "roots": [list(r) for r in self.roots],
            "coroots": [list(c) for c in self.coroots],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RootDatum":
        return cls(
            rank=int(data["rank"]),
            roots=tuple(tuple(int(x) for x in r) for r in data["roots"]),
            coroots=tuple(tuple(int(x) for x in c) for c in data["coroots"]),
        )


@lru_cache(maxsize=None)
def _root_lookup(datum: RootDatum) -> dict:
    return {r: i for i, r in enumerate(datum.roots)}


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def validate(datum: RootDatum) -> list[str]:
    """Check the root-datum axioms; return a list of violations (empty = ok)."""
    v: list[str] = []
    roots, coroots = datum.roots, datum.coroots

    seen: dict[Vector, int] = {}
    for i, r in enumerate(roots):
        if r in seen:
            v.append(f"duplicate root at indices {seen[r]} and {i}")
        seen[r] = i
    if any(not any(r) for r in roots):
        v.append("zero vector listed as a root")

    for i in range(len(roots)):
        if dot(roots[i], coroots[i]) != 2:
            v.append(f"pairing <a, a^vee> != 2 at index {i}")

    root_idx = {r: i for i, r in enumerate(roots)}
    for i, r in enumerate(roots):
        j = root_idx.get(tuple(-x for x in r))
        if j is None:
            v.append(f"root set not closed under negation at index {i}")
        elif coroots[j] != tuple(-x for x in coroots[i]):
            v.append(f"coroot of -root[{i}] is not -coroot[{i}]")

    for i, r in enumerate(roots):
        double = tuple(2 * x for x in r)
        if double in root_idx:
            v.append(f"not reduced: root {root_idx[double]} = 2 * root {i}")

    # reflection stability: stop checking once the data is too broken
    if not v:
        root_set = set(roots)
        coroot_set = set(coroots)
        for i in range(len(roots)):
            a, av = roots[i], coroots[i]
            for x in roots:
                k = dot(x, av)
                if tuple(xx - k * aa for xx, aa in zip(x, a)) not in root_set:
                    v.append(f"reflection through root {i} does not stabilize the root set")
                    break
            for y in coroots:
                k = dot(a, y)
                if tuple(yy - k * aa for yy, aa in zip(y, av)) not in coroot_set:
                    v.append(f"dual reflection through coroot {i} does not stabilize the coroot set")
                    break
    return v


@lru_cache(maxsize=None)
def _is_valid(datum: RootDatum) -> bool:
    return not validate(datum)


def ensure_valid(datum: RootDatum) -> RootDatum:
    if not _is_valid(datum):
        raise ValueError("invalid root datum: " + "; ".join(validate(datum)))
    return datum


# ---------------------------------------------------------------------------
# Cartan catalog (Bourbaki numbering)
# ---------------------------------------------------------------------------

_SERIES_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 2,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def _check_series(series: str, rank: int):
    if series not in _SERIES_RANKS:
        raise ValueError(f"unknown series {series!r}")
    if not _SERIES_RANKS[series](rank):
        raise ValueError(f"unsupported rank {rank} for series {series}")


@lru_cache(maxsize=None)
def cartan_matrix(series: str, rank: int) -> IntMatrix:
    """Catalog Cartan matrix C[i][j] = <alpha_j, alpha_i^vee>, Bourbaki order."""
    _check_series(series, rank)
    n = rank
    c = [[2 * int(i == j) for j in range(n)] for i in range(n)]

    def edge(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if series == "A":
        for i in range(n - 1):
            edge(i, i + 1)
    elif series in ("B", "C"):
        for i in range(n - 2):
            edge(i, i + 1)
        if series == "B":
            # alpha_n short: <alpha_n, alpha_{n-1}^vee> = -1, <alpha_{n-1}, alpha_n^vee> = -2
            edge(n - 2, n - 1, -1, -2)
        else:
            edge(n - 2, n - 1, -2, -1)
    elif series == "D":
        if n == 2:
            pass  # two orthogonal A1 nodes
        else:
            for i in range(n - 3):
                edge(i, i + 1)
            edge(n - 3, n - 2)
            edge(n - 3, n - 1)
    elif series == "E":
        for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (1, 3)):
            edge(i, j)
        if n >= 7:
            edge(5, 6)
        if n == 8:
            edge(6, 7)
    elif series == "F":
        edge(0, 1)
        edge(1, 2, -1, -2)  # alpha_3 short against alpha_2 long
        edge(2, 3)
    elif series == "G":
        edge(0, 1, -3, -1)  # alpha_1 short: <alpha_2, alpha_1^vee> = -3

    return IntMatrix.from_rows(c, cols=n)


@dataclass(frozen=True)
class CartanType:
    """Multiset of irreducible components, each a (series, rank) pair."""

    components: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for series, rank in self.components:
            _check_series(series, rank)

    def __str__(self) -> str:
        if not self.components:
            return "0"
        return " x ".join(f"{s}{r}" for s, r in self.components)


# ---------------------------------------------------------------------------
# Presets
# ---------------------------------------------------------------------------


def _reflection_closure(simple_pairs: list[tuple[Vector, Vector]]) -> list[tuple[Vector, Vector]]:
    """All (root, coroot) pairs generated from simple pairs by simple reflections."""
    seen: dict[Vector, Vector] = {}
    queue: list[tuple[Vector, Vector]] = []
    for b, bv in simple_pairs:
        if b not in seen:
            seen[b] = bv
            queue.append((b, bv))
    while queue:
        b, bv = queue.pop()
        for a, av in simple_pairs:
            k = dot(b, av)
            nb = tuple(x - k * y for x, y in zip(b, a))
            if nb not in seen:
                m = dot(a, bv)
                nbv = tuple(x - m * y for x, y in zip(bv, av))
                seen[nb] = nbv
                queue.append((nb, nbv))
    return sorted(seen.items())


def _datum_from_pairs(rank: int, pairs: Iterable[tuple[Vector, Vector]]) -> RootDatum:
    pairs = list(pairs)
    return RootDatum(
        rank=rank,
        roots=tuple(p[0] for p in pairs),
        coroots=tuple(p[1] for p in pairs),
    )


@lru_cache(maxsize=None)
def simply_connected(series: str, rank: int) -> RootDatum:
    """Datum with Y spanned by the simple coroots (X is the weight lattice)."""
    c = cartan_matrix(series, rank)
    simples = [
        (c.column(j), tuple(int(i == j) for i in range(rank)))
        for j in range(rank)
    ]
    return _datum_from_pairs(rank, _reflection_closure(simples))


@lru_cache(maxsize=None)
def adjoint(series: str, rank: int) -> RootDatum:
    """Datum with X spanned by the simple roots (Y is the coweight lattice)."""
    c = cartan_matrix(series, rank)
    simples = [
        (tuple(int(i == j) for i in range(rank)), c.row(j))
        for j in range(rank)
    ]
    return _datum_from_pairs(rank, _reflection_closure(simples))


@lru_cache(maxsize=None)
def general_linear(n: int) -> RootDatum:
    """The GL_n datum: rank n, roots and coroots e_i - e_j."""
    if n < 1:
        raise ValueError("GL(n) needs n >= 1")
    pairs = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = tuple(int(k == i) - int(k == j) for k in range(n))
                pairs.append((v, v))
    return _datum_from_pairs(n, sorted(pairs))


def torus(rank: int) -> RootDatum:
    if rank < 0:
        raise ValueError("torus rank must be nonnegative")
    return RootDatum(rank=rank, roots=(), coroots=())


def direct_sum(r1: RootDatum, r2: RootDatum) -> RootDatum:
    """Block sum: ranks add, roots and coroots embed with zero padding."""
    left = [(r + (0,) * r2.rank, c + (0,) * r2.rank) for r, c in zip(r1.roots, r1.coroots)]
    right = [((0,) * r1.rank + r, (0,) * r1.rank + c) for r, c in zip(r2.roots, r2.coroots)]
    return _datum_from_pairs(r1.rank + r2.rank, left + right)


def dual(datum: RootDatum) -> RootDatum:
    """Swap the two sides: (Y, coroots, X, roots).  An exact involution."""
    return RootDatum(rank=datum.rank, roots=datum.coroots, coroots=datum.roots)


_TYPE_TOKEN = re.compile(r"^([A-G])([0-9]+)$")


def _split_args(body: str) -> list[str]:
    parts = []
    depth = 0
    cur = []
    for ch in body:
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses in preset name")
        cur.append(ch)
    if depth:
        raise ValueError("unbalanced parentheses in preset name")
    parts.append("".join(cur).strip())
    return parts


@lru_cache(maxsize=None)
def preset(name: str) -> RootDatum:
    """Build a datum from a preset name.

    Grammar: ``SC(<type>)`` | ``AD(<type>)`` | ``GL(n)`` | ``Torus(r)`` |
    ``Sum(p1, p2, ...)`` where ``<type>`` is a series letter plus rank, e.g.
    A3, B2, G2, E8.
    """
    text = name.strip()
    m = re.match(r"^(SC|AD|GL|Torus|Sum)\s*\((.*)\)$", text, re.DOTALL)
    if not m:
        raise ValueError(f"cannot parse preset name {name!r}")
    head, body = m.group(1), m.group(2).strip()
    if head in ("SC", "AD"):
        tm = _TYPE_TOKEN.match(body)
        if not tm:
            raise ValueError(f"cannot parse type token {body!r} in {name!r}")
        series, rank = tm.group(1), int(tm.group(2))
        return simply_connected(series, rank) if head == "SC" else adjoint(series, rank)
    if head == "GL":
        if not body.isdigit():
            raise ValueError(f"GL needs an integer rank, got {body!r}")
        return general_linear(int(body))
    if head == "Torus":
        if not body.isdigit():
            raise ValueError(f"Torus needs an integer rank, got {body!r}")
        return torus(int(body))
    # Sum
    if not body:
        return torus(0)
    parts = _split_args(body)
    return reduce(direct_sum, (preset(p) for p in parts))


def is_preset_name(text: str) -> bool:
    return bool(re.match(r"^(SC|AD|GL|Torus|Sum)\s*\(", text.strip()))


# ---------------------------------------------------------------------------
# Simple systems
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def positive_roots(datum: RootDatum) -> tuple[int, ...]:
    """Indices of the positive roots under a deterministic generic functional.

    The functional is lexicographically weighted, ``w = (N^(r-1), ..., N, 1)``
    with ``N = 1 + max |coordinate|``; since every coordinate is smaller than
    N in absolute value it cannot vanish on a nonzero root, but the guard
    loop keeps bumping N just in case.
    """
    ensure_valid(datum)
    roots = datum.roots
    if not roots:
        return ()
    rank = datum.rank
    n_bound = 1 + max(abs(x) for r in roots for x in r)
    while True:
        w = [n_bound ** (rank - 1 - i) for i in range(rank)]
        vals = [dot(w, r) for r in roots]
        if all(vals):
            break
        n_bound += 1
    return tuple(i for i, v in enumerate(vals) if v > 0)


@lru_cache(maxsize=None)
def simple_system(datum: RootDatum) -> tuple[int, ...]:
    """Indices of a base of the root system, ascending.

    The simple roots are the positive roots (see :func:`positive_roots`)
    that are not sums of two positive roots.
    """
    roots = datum.roots
    positive = positive_roots(datum)
    pos_set = {roots[i] for i in positive}
    simple = []
    for i in positive:
        r = roots[i]
        decomposable = any(
            tuple(x - y for x, y in zip(r, roots[j])) in pos_set for j in positive if j != i
        )
        if not decomposable:
            simple.append(i)
    return tuple(simple)


@lru_cache(maxsize=None)
def root_coefficients(datum: RootDatum) -> tuple[tuple[int, ...], ...]:
    """Coordinates of every root over the simple system (integer vectors)."""
    delta = simple_system(datum)
    s_t = IntMatrix.from_rows([datum.roots[i] for i in delta], cols=datum.rank).transpose()
    out = []
    for r in datum.roots:
        sol = solve_right(s_t, r)
        if sol is None or any(f.denominator != 1 for f in sol):
            raise NotARootSystemError("root outside the integer span of the base")
        out.append(tuple(int(f) for f in sol))
    return tuple(out)


# ---------------------------------------------------------------------------
# Irreducible components and type recognition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    """One irreducible component with its Bourbaki-ordered simple roots."""

    series: str
    rank: int
    root_indices: tuple[int, ...]
    simple_indices: tuple[int, ...]  # in Bourbaki node order

    @property
    def label(self) -> tuple[str, int]:
        return (self.series, self.rank)


def _graph_from_cartan(c: dict) -> dict:
    nodes = sorted({i for i, _ in c})
    adj = {i: [] for i in nodes}
    for (i, j), v in c.items():
        if i != j and v:
            adj[i].append(j)
    return adj


def _bourbaki_order(nodes: list[int], c) -> tuple[str, int, list[int]]:
    """Recognize one connected diagram and list its nodes in Bourbaki order.

    ``c(i, j)`` is the pairing <alpha_j, alpha_i^vee> between simple roots.
    Raises NotARootSystemError when the diagram is not in the catalog.  Rank-2
    diagrams with a double bond are reported as C2 (equal to B2 as a root
    system), with the short root first; D2 never reaches this function because
    it is disconnected, and a path of three nodes comes out as A3.
    """
    k = len(nodes)
    if k == 1:
        return ("A", 1, list(nodes))

    edges = {}
    adj = {i: [] for i in nodes}
    for i in nodes:
        for j in nodes:
            if i == j:
                continue
            cij, cji = c(i, j), c(j, i)
            if (cij == 0) != (cji == 0):
                raise NotARootSystemError("one-sided pairing between simple roots")
            if cij:
                if cij > 0 or cji > 0:
                    raise NotARootSystemError("positive pairing between distinct simple roots")
                if i < j:
                    edges[(i, j)] = cij * cji
                adj[i].append(j)

    if len(edges) != k - 1:
        raise NotARootSystemError("diagram is not a tree")
    # connectivity is guaranteed by the caller (component construction)

    marks = sorted(edges.values(), reverse=True)
    if marks and marks[0] > 3:
        raise NotARootSystemError("bond of multiplicity > 3")

    def walk_path(start: int) -> list[int]:
        order = [start]
        prev = None
        cur = start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                return order
            if len(nxt) > 1:
                raise NotARootSystemError("unexpected branch on a path")
            prev, cur = cur, nxt[0]
            order.append(cur)

    degrees = {i: len(adj[i]) for i in nodes}
    branch_nodes = [i for i in nodes if degrees[i] >= 3]
    leaves = sorted(i for i in nodes if degrees[i] == 1)

    if 3 in marks:
        if k != 2 or marks != [3]:
            raise NotARootSystemError("triple bond outside G2")
        i, j = nodes
        first = i if c(i, j) == -3 else j
        second = j if first == i else i
        if c(first, second) != -3:
            raise NotARootSystemError("G2 orientation broken")
        return ("G", 2, [first, second])

    if 2 in marks:
        if marks.count(2) != 1 or branch_nodes:
            raise NotARootSystemError("diagram with a double bond must be a path with one double bond")
        (u, w) = next(e for e, m in edges.items() if m == 2)
        if k == 2:
            # B2 = C2; canonical form is C2 with the short root first
            first = u if c(u, w) == -2 else w
            second = w if first == u else u
            return ("C", 2, [first, second])
        path = walk_path(leaves[0])
        if len(path) != k:
            raise NotARootSystemError("double-bond diagram is not a path")
        pos_u, pos_w = path.index(u), path.index(w)
        if abs(pos_u - pos_w) != 1:
            raise NotARootSystemError("double bond endpoints not adjacent on the path")
        if {pos_u, pos_w} == {k - 2, k - 1} or {pos_u, pos_w} == {0, 1}:
            if 0 in (pos_u, pos_w):
                path = path[::-1]
            tail, end = path[-2], path[-1]
            series = "B" if c(end, tail) == -2 else "C"
            return (series, k, path)
        if k == 4 and {pos_u, pos_w} == {1, 2}:
            if c(path[1], path[2]) != -1:
                path = path[::-1]
            if c(path[1], path[2]) == -1 and c(path[2], path[1]) == -2:
                return ("F", 4, path)
        raise NotARootSystemError("double bond in an unrecognized position")

    # simply laced
    if not branch_nodes:
        path = walk_path(leaves[0])
        if len(path) != k:
            raise NotARootSystemError("disconnected path")
        if path[0] > path[-1]:
            path = path[::-1]
        return ("A", k, path)

    if len(branch_nodes) != 1 or degrees[branch_nodes[0]] != 3:
        raise NotARootSystemError("unrecognized branching")
    b = branch_nodes[0]
    arms = []
    for first in adj[b]:
        arm = [first]
        prev, cur = b, first
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                raise NotARootSystemError("second branch point")
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    arms.sort(key=lambda a: (len(a), a[::-1]))
    lengths = tuple(len(a) for a in arms)

    if lengths[0] == 1 and lengths[1] == 1:
        # D_n: the two short arms are the end leaves, the long arm leads in
        long_arm = arms[2] if len(arms[2]) > 1 else None
        short = sorted([arms[0][0], arms[1][0]] + ([] if long_arm else [arms[2][0]]))
        if long_arm is None:
            # D4: all arms are single nodes
            return ("D", 4, [short[0], b, short[1], short[2]])
        order = long_arm[::-1] + [b] + short
        return ("D", k, order)
    if lengths == (1, 2, 2) or lengths == (1, 2, 3) or lengths == (1, 2, 4):
        one_arm, two_arm, long_arm = arms
        order = [two_arm[1], one_arm[0], two_arm[0], b] + long_arm
        return ("E", k, order)
    raise NotARootSystemError(f"branching with arm lengths {lengths} is not in the catalog")


@lru_cache(maxsize=None)
def components(datum: RootDatum) -> tuple[Component, ...]:
    """Partition of the roots into irreducible components with Cartan types.

    Components are connected classes of roots under nonvanishing pairing.
    Each one carries its simple roots in Bourbaki node order; the pairing
    matrix in that order is checked against the catalog entry, so a mismatch
    anywhere raises NotARootSystemError.
    """
    ensure_valid(datum)
    n = datum.num_roots
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for i in range(n):
        for j in range(i + 1, n):
            if dot(datum.roots[i], datum.coroots[j]):
                union(i, j)

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)

    delta = simple_system(datum)
    out = []
    for rep in sorted(groups, key=lambda r: min(groups[r])):
        indices = tuple(sorted(groups[rep]))
        comp_simple = [i for i in delta if i in set(indices)]

        def pairing(i, j):
            return dot(datum.roots[j], datum.coroots[i])

        series, rank, ordered = _bourbaki_order(comp_simple, pairing)
        catalog = cartan_matrix(series, rank)
        for a in range(rank):
            for b in range(rank):
                if pairing(ordered[a], ordered[b]) != catalog.at(a, b):
                    raise NotARootSystemError(
                        f"component pairing matrix does not match catalog {series}{rank}"
                    )
        out.append(Component(series=series, rank=rank, root_indices=indices, simple_indices=tuple(ordered)))
    return tuple(out)


def cartan_type(datum: RootDatum) -> CartanType:
    return CartanType(components=tuple(c.label for c in components(datum)))


# ---------------------------------------------------------------------------
# Lattice-theoretic predicates
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def root_lattice(datum: RootDatum) -> RowLattice:
    """The lattice Z.roots inside X."""
    return RowLattice(datum.root_matrix())


@lru_cache(maxsize=None)
def coroot_lattice(datum: RootDatum) -> RowLattice:
    return RowLattice(datum.coroot_matrix())


def is_semisimple(datum: RootDatum) -> bool:
    """True when the roots span a finite-index sublattice of X."""
    ensure_valid(datum)
    return root_lattice(datum).rank == datum.rank


@lru_cache(maxsize=None)
def x_mod_root_lattice(datum: RootDatum) -> FinAbGroup:
    """X / Z.roots as an abstract group."""
    ensure_valid(datum)
    return quotient_group(datum.rank, datum.root_matrix())


@lru_cache(maxsize=None)
def y_mod_coroot_lattice(datum: RootDatum) -> FinAbGroup:
    ensure_valid(datum)
    return quotient_group(datum.rank, datum.coroot_matrix())


@lru_cache(maxsize=None)
def _weight_lattice_scaled(datum: RootDatum) -> tuple[IntMatrix, int]:
    """(rows of D * Lambda in X-coordinates, D) for the weight lattice Lambda.

    Lambda lives in the rational span of the roots: vectors pairing
    integrally with every coroot.  Row a of the returned matrix is D times
    the a-th fundamental weight, where D = |det P| clears denominators and
    P is the pairing matrix of the base.
    """
    delta = simple_system(datum)
    n = len(delta)
    if n == 0:
        return IntMatrix.zeros(0, datum.rank), 1
    s = IntMatrix.from_rows([datum.roots[i] for i in delta], cols=datum.rank)
    p = IntMatrix.from_rows(
        [[dot(datum.roots[a], datum.coroots[b]) for b in delta] for a in delta], cols=n
    )
    det = p.det()
    if det == 0:
        raise NotARootSystemError("singular pairing matrix on a base")
    d = abs(det)
    p_inv = rational_inverse(p)
    rows = []
    for a in range(n):
        row = [Fraction(0)] * datum.rank
        for cidx in range(n):
            coeff = p_inv[a][cidx] * d
            for k in range(datum.rank):
                row[k] += coeff * s.at(cidx, k)
        if any(f.denominator != 1 for f in row):
            raise NotARootSystemError("weight lattice scaling failed")
        rows.append([int(f) for f in row])
    return IntMatrix.from_rows(rows, cols=datum.rank), d


def weight_quotient_of_lattice(datum: RootDatum, sub_rows: IntMatrix) -> FinAbGroup:
    """Lambda / L for a sublattice L of the weight lattice, rows in X-coords."""
    lam, d = _weight_lattice_scaled(datum)
    if lam.rows == 0:
        if row_basis(sub_rows).rows:
            raise ValueError("nonzero sublattice but the weight lattice is zero")
        return FinAbGroup((), 0)
    big = RowLattice(lam)
    coords = []
    basis = row_basis(sub_rows)
    for i in range(basis.rows):
        scaled = tuple(d * x for x in basis.row(i))
        c = big.coords(scaled)
        if c is None:
            raise ValueError("sublattice is not inside the weight lattice")
        coords.append(c)
    return quotient_group(big.rank, IntMatrix.from_rows(coords, cols=big.rank))


def weight_lattice_quotients(datum: RootDatum, subset: Iterable[int]) -> FinAbGroup:
    """Lambda / Z.subset for a subset of root indices.

    Lambda is the weight lattice of the full root system: the dual of the
    coroot lattice inside the rational span of the roots.
    """
    ensure_valid(datum)
    idx = sorted(set(subset))
    for i in idx:
        if not 0 <= i < datum.num_roots:
            raise ValueError(f"root index {i} out of range")
    sub = IntMatrix.from_rows([datum.roots[i] for i in idx], cols=datum.rank)
    return weight_quotient_of_lattice(datum, sub)


def same_datum(a: RootDatum, b: RootDatum) -> bool:
    """Exact-coordinate equality up to reindexing of the (root, coroot) pairs."""
    return a.rank == b.rank and sorted(zip(a.roots, a.coroots)) == sorted(zip(b.roots, b.coroots))

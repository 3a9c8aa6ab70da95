"""Graphs, tournaments, two-graphs and skew two-graphs.

Two-graphs and skew two-graphs store one bit per 3-subset, in the
lexicographic order of ``itertools.combinations(range(n), 3)``. For a skew
two-graph the bit of ``{x<y<z}`` is set when the cycle ``(x y z)`` is in the
oriented set and clear when ``(x z y)`` is; rotations of a cycle are the same
cycle, so exactly one orientation of every triple is present by construction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .conference import SKEW, SYMMETRIC, ConferenceMatrix
from .core import InputError, Verdict, as_array


def _check_square01(a: np.ndarray, what: str) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"{what} must be square, got shape {a.shape}")
    if not np.isin(a, (0, 1)).all():
        raise InputError(f"{what} must be 0/1")
    if np.diag(a).any():
        raise InputError(f"{what} must have zero diagonal")


@dataclass(frozen=True, eq=False)
class Graph:
    adjacency: np.ndarray

    def __post_init__(self):
        a = np.array(self.adjacency, dtype=np.int64)
        _check_square01(a, "adjacency")
        if not np.array_equal(a, a.T):
            raise InputError("adjacency must be symmetric")
        a.flags.writeable = False
        object.__setattr__(self, "adjacency", a)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    def __eq__(self, other):
        return isinstance(other, Graph) and np.array_equal(self.adjacency, other.adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        a = np.zeros((n, n), dtype=np.int64)
        for x, y in edges:
            a[x, y] = a[y, x] = 1
        return cls(a)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64))


@dataclass(frozen=True, eq=False)
class Tournament:
    arcs: np.ndarray

    def __post_init__(self):
        a = np.array(self.arcs, dtype=np.int64)
        _check_square01(a, "arcs")
        off = ~np.eye(a.shape[0], dtype=bool)
        if not (a + a.T)[off].all() or (a + a.T).max(initial=0) > 1:
            raise InputError("exactly one of arcs(x,y), arcs(y,x) must be 1 for x != y")
        a.flags.writeable = False
        object.__setattr__(self, "arcs", a)

    @property
    def n(self) -> int:
        return self.arcs.shape[0]

    def __eq__(self, other):
        return isinstance(other, Tournament) and np.array_equal(self.arcs, other.arcs)

    @classmethod
    def cyclic(cls, n: int) -> "Tournament":
        """Circulant tournament ``x -> x + 1, ..., x + (n-1)/2`` for odd ``n``."""
        a = np.zeros((n, n), dtype=np.int64)
        for x in range(n):
            for s in range(1, (n - 1) // 2 + 1):
                a[x, (x + s) % n] = 1
        return cls(a)

    @classmethod
    def transitive(cls, n: int) -> "Tournament":
        return cls(np.triu(np.ones((n, n), dtype=np.int64), k=1))


def seidel_matrix(G) -> np.ndarray:
    """``J - 2A - I`` for a graph; signed arcs for a tournament."""
    if isinstance(G, Graph):
        n = G.n
        return np.ones((n, n), dtype=np.int64) - 2 * G.adjacency - np.eye(n, dtype=np.int64)
    if isinstance(G, Tournament):
        return G.arcs - G.arcs.T
    raise InputError(f"no Seidel matrix for {type(G).__name__}")


def graph_from_seidel(S) -> Graph:
    s = as_array(S)
    n = s.shape[0]
    return Graph((np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64) - s) // 2)


def tournament_from_seidel(S) -> Tournament:
    return Tournament((as_array(S) > 0).astype(np.int64))


def triples(n: int) -> np.ndarray:
    """All 3-subsets of ``range(n)`` as rows, lexicographic."""
    return np.array(list(itertools.combinations(range(n), 3)), dtype=np.int64).reshape(-1, 3)


def _parity(perm: tuple[int, int, int]) -> int:
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
    return inv % 2


_S3 = list(itertools.permutations(range(3)))


@dataclass(frozen=True, eq=False)
class TwoGraph:
    n: int
    coherent: np.ndarray

    def __post_init__(self):
        bits = np.array(self.coherent, dtype=bool).reshape(-1)
        if bits.size != len(triples(self.n)):
            raise InputError(f"expected {len(triples(self.n))} triple bits, got {bits.size}")
        bits.flags.writeable = False
        object.__setattr__(self, "coherent", bits)

    def __eq__(self, other):
        return isinstance(other, TwoGraph) and self.n == other.n and np.array_equal(
            self.coherent, other.coherent)

    def indicator(self) -> np.ndarray:
        """Dense 0/1 tensor over ordered triples, symmetric under all of S3."""
        T = np.zeros((self.n,) * 3, dtype=np.int64)
        tri = triples(self.n)[self.coherent]
        for perm in _S3:
            p = tri[:, perm]
            T[p[:, 0], p[:, 1], p[:, 2]] = 1
        return T

    @classmethod
    def from_indicator(cls, T) -> "TwoGraph":
        t = as_array(T)
        tri = triples(t.shape[0])
        return cls(t.shape[0], t[tri[:, 0], tri[:, 1], tri[:, 2]] != 0)

    def triple_set(self) -> set[tuple[int, int, int]]:
        return {tuple(map(int, r)) for r in triples(self.n)[self.coherent]}


@dataclass(frozen=True, eq=False)
class SkewTwoGraph:
    n: int
    orientation: np.ndarray

    def __post_init__(self):
        bits = np.array(self.orientation, dtype=bool).reshape(-1)
        if bits.size != len(triples(self.n)):
            raise InputError(f"expected {len(triples(self.n))} orientation bits, got {bits.size}")
        bits.flags.writeable = False
        object.__setattr__(self, "orientation", bits)

    def __eq__(self, other):
        return isinstance(other, SkewTwoGraph) and self.n == other.n and np.array_equal(
            self.orientation, other.orientation)

    def indicator(self) -> np.ndarray:
        """1 at ``(x,y,z)`` iff the cycle ``(x y z)`` is in the oriented set."""
        T = np.zeros((self.n,) * 3, dtype=np.int64)
        tri = triples(self.n)
        for perm in _S3:
            p = tri[:, perm]
            on = self.orientation ^ bool(_parity(perm))
            T[p[on, 0], p[on, 1], p[on, 2]] = 1
        return T

    @classmethod
    def from_indicator(cls, T) -> "SkewTwoGraph":
        t = as_array(T)
        tri = triples(t.shape[0])
        return cls(t.shape[0], t[tri[:, 0], tri[:, 1], tri[:, 2]] != 0)

    def with_flipped(self, index: int) -> "SkewTwoGraph":
        bits = self.orientation.copy()
        bits[index] = not bits[index]
        return SkewTwoGraph(self.n, bits)


def triple_products(S) -> np.ndarray:
    s = as_array(S)
    return np.einsum("xy,yz,zx->xyz", s, s, s)


def verify_two_graph(T: TwoGraph) -> Verdict:
    """Every 4-subset must contain an even number of coherent triples."""
    ind = T.indicator()
    for quad in itertools.combinations(range(T.n), 4):
        count = sum(ind[a, b, c] for a, b, c in itertools.combinations(quad, 3))
        if count % 2:
            return Verdict(False, f"quadruple={quad} coherent={count}", quad)
    return Verdict(True, f"n={T.n}")


def four_cycles(quad: tuple[int, int, int, int]):
    x, y, z, w = quad
    return [(x, y, z), (x, w, y), (x, z, w), (y, w, z)]


def verify_skew_two_graph(S: SkewTwoGraph) -> Verdict:
    """Parity condition on the four listed 3-cycles of every 4-subset."""
    ind = S.indicator()
    for quad in itertools.combinations(range(S.n), 4):
        count = sum(ind[c] for c in four_cycles(quad))
        if count % 2:
            return Verdict(False, f"quadruple={quad} cycles={count}", quad)
    return Verdict(True, f"n={S.n}")


def two_graph_from_graph(G: Graph) -> TwoGraph:
    A = G.adjacency
    tri = triples(G.n)
    x, y, z = tri.T
    edges = A[x, y] + A[y, z] + A[x, z]
    return TwoGraph(G.n, edges % 2 == 1)


def two_graph_from_conference(C: ConferenceMatrix) -> TwoGraph:
    if C.kind != SYMMETRIC:
        raise InputError(f"two-graph needs a SYMMETRIC conference matrix, got {C.kind}")
    P = triple_products(C.array)
    tri = triples(C.order)
    return TwoGraph(C.order, P[tri[:, 0], tri[:, 1], tri[:, 2]] == -1)


def skew_two_graph_from_conference(C: ConferenceMatrix) -> SkewTwoGraph:
    if C.kind != SKEW:
        raise InputError(f"skew two-graph needs a SKEW conference matrix, got {C.kind}")
    P = triple_products(C.array)
    tri = triples(C.order)
    return SkewTwoGraph(C.order, P[tri[:, 0], tri[:, 1], tri[:, 2]] == -1)


def skew_two_graph_from_tournament(T: Tournament) -> SkewTwoGraph:
    """Cycles ``(y z w)`` carrying an odd number of the arcs ``y->z, z->w, w->y``."""
    a = T.arcs
    tri = triples(T.n)
    x, y, z = tri.T
    return SkewTwoGraph(T.n, (a[x, y] + a[y, z] + a[z, x]) % 2 == 1)


@dataclass(frozen=True)
class Regularity:
    degree: Optional[int]
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.degree is not None


def _first_unequal(counts: np.ndarray) -> Regularity:
    n = counts.shape[0]
    off = ~np.eye(n, dtype=bool)
    vals = counts[off]
    if np.all(vals == vals[0]):
        return Regularity(int(vals[0]))
    x0, y0 = np.argwhere(off)[0]
    bad = np.argwhere(off & (counts != vals[0]))[0]
    return Regularity(None, ((int(x0), int(y0)), (int(bad[0]), int(bad[1]))))


def is_regular_two_graph(T: TwoGraph) -> Regularity:
    """Common number of coherent triples through each pair, or a witness pair."""
    if T.n < 3:
        raise InputError("regularity needs at least 3 points")
    return _first_unequal(T.indicator().sum(axis=2))


def is_regular_skew_two_graph(S: SkewTwoGraph) -> Regularity:
    """Degree of ``(x, y)`` is the number of ``z`` with ``(x y z)`` oriented."""
    if S.n < 3:
        raise InputError("regularity needs at least 3 points")
    return _first_unequal(S.indicator().sum(axis=2))


def _check_point(n: int, w: int) -> None:
    if not 0 <= w < n:
        raise InputError(f"point {w} out of range 0..{n - 1}")


def descendant_graph(T: TwoGraph, w: int) -> Graph:
    """Graph on the other points (relabelled in order) joining ``x, y`` when ``{w,x,y}`` is coherent."""
    _check_point(T.n, w)
    keep = [x for x in range(T.n) if x != w]
    return Graph(T.indicator()[w][np.ix_(keep, keep)])


def descendant_tournament(S: SkewTwoGraph, w: int) -> Tournament:
    """Tournament on the other points with arc ``y -> z`` when ``(w y z)`` is oriented."""
    _check_point(S.n, w)
    keep = [x for x in range(S.n) if x != w]
    return Tournament(S.indicator()[w][np.ix_(keep, keep)])


def add_dominating_vertex(T: Tournament) -> Tournament:
    """Bordered tournament: a new vertex 0 beating every old vertex (shifted by one)."""
    n = T.n + 1
    a = np.zeros((n, n), dtype=np.int64)
    a[1:, 1:] = T.arcs
    a[0, 1:] = 1
    return Tournament(a)


@dataclass(frozen=True)
class SRGParams:
    n: int
    k: int
    lam: Optional[int]
    mu: Optional[int]

    @property
    def vacuous(self) -> tuple[str, ...]:
        return tuple(name for name in ("lam", "mu") if getattr(self, name) is None)


def is_strongly_regular(G: Graph) -> Optional[SRGParams]:
    """Parameters ``(n, k, lambda, mu)`` if ``A^2 = kI + lambda A + mu (J - I - A)`` holds.

    ``lam`` is None when there are no edges and ``mu`` is None when there are
    no non-adjacent pairs; those parameters are unconstrained.
    """
    n = G.n
    if n < 2:
        raise InputError("strong regularity needs at least 2 vertices")
    A = G.adjacency
    deg = A.sum(axis=1)
    if not np.all(deg == deg[0]):
        return None
    k = int(deg[0])
    A2 = A @ A
    off = ~np.eye(n, dtype=bool)
    adj = (A == 1) & off
    non = (A == 0) & off
    lam = mu = None
    if adj.any():
        vals = A2[adj]
        if not np.all(vals == vals[0]):
            return None
        lam = int(vals[0])
    if non.any():
        vals = A2[non]
        if not np.all(vals == vals[0]):
            return None
        mu = int(vals[0])
    return SRGParams(n, k, lam, mu)


def is_doubly_regular(T: Tournament) -> Verdict:
    """Check ``A A^T = (n-1)/2 I + (n-3)/4 (J - I)`` exactly."""
    n = T.n
    if n < 3 or n % 4 != 3:
        return Verdict(False, f"n={n} is not 3 mod 4")
    A = T.arcs
    target = ((n - 1) // 2) * np.eye(n, dtype=np.int64) + ((n - 3) // 4) * (
        np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64))
    bad = np.argwhere(A @ A.T != target)
    if bad.size:
        x, y = map(int, bad[0])
        return Verdict(False, f"pair=({x},{y}) common_out={(A @ A.T)[x, y]}", (x, y))
    return Verdict(True, f"n={n}")


def switch(G, Y):
    """Reverse adjacency (graph) or orientation (tournament) across the cut ``Y | X - Y``."""
    Y = set(int(y) for y in Y)
    n = G.n
    if any(not 0 <= y < n for y in Y):
        raise InputError(f"switching set {sorted(Y)} not inside 0..{n - 1}")
    inside = np.zeros(n, dtype=bool)
    inside[list(Y)] = True
    cut = inside[:, None] != inside[None, :]
    if isinstance(G, Graph):
        return Graph(np.where(cut, 1 - G.adjacency, G.adjacency))
    if isinstance(G, Tournament):
        return Tournament(np.where(cut, G.arcs.T, G.arcs))
    raise InputError(f"cannot switch a {type(G).__name__}")

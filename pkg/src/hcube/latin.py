"""Latin hypercubes: modular and line-rainbow constructions, layer-count verifiers.

An ``(n,d,r,t)`` Latin hypercube has order ``n``, dimension ``d``, symbols
``0..n**r-1``, and every ``(d-t)``-layer holds each symbol ``n**(d-r-t)``
times.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import SYM, Hypercube, InputError, LayerSpec, Verdict, flatten_layers, unravel


@dataclass(frozen=True)
class SymbolCountWitness:
    layer: LayerSpec
    symbol: int
    count: int
    expected: int

    def __str__(self):
        return f"{self.layer} symbol={self.symbol} count={self.count} expected={self.expected}"


@dataclass(frozen=True)
class RepeatWitness:
    """A line along ``axis`` through ``point`` that repeats ``symbol``."""

    axis: int
    point: tuple[int, ...]
    symbol: int

    def __str__(self):
        return f"line axis={self.axis} through={','.join(map(str, self.point))} repeats symbol={self.symbol}"


@dataclass(frozen=True)
class LatinHypercube:
    cube: Hypercube
    n: int
    d: int
    r: int
    claimed_t: int

    def __post_init__(self):
        c = self.cube
        if c.order != self.n or c.dim != self.d:
            raise InputError(f"cube is n={c.order} d={c.dim}, declared n={self.n} d={self.d}")
        if c.alphabet != SYM(self.n ** self.r):
            raise InputError(f"alphabet {c.alphabet} does not match sym:{self.n ** self.r}")
        report = verify_latin(c, self.r, self.claimed_t)
        if not report:
            raise InputError(f"not an (n,d,r,t) Latin hypercube: {report.message}")

    @property
    def array(self) -> np.ndarray:
        return self.cube.array

    def __getitem__(self, idx):
        return self.cube.array[idx]


def _check_nd(n: int, d: int) -> None:
    if n < 1:
        raise InputError(f"order must be >= 1, got {n}")
    if d < 2:
        raise InputError(f"dimension must be >= 2, got {d}")


def modular_latin(n: int, d: int) -> LatinHypercube:
    """``L(i) = (i_1 + ... + i_d) mod n``; every line is a permutation of the symbols."""
    _check_nd(n, d)
    grids = np.indices((n,) * d).sum(axis=0) % n
    return LatinHypercube(Hypercube(grids, SYM(n)), n, d, 1, d - 1)


def line_rainbow_latin(n: int, d: int, r: int) -> LatinHypercube:
    """Line-rainbow ``(n,d,r,1)`` Latin hypercube.

    The base-``n`` digit ``j`` of ``L(i)`` is ``(i[d-1-j] - (i[0] + ... + i[d-r-1])) mod n``
    for ``j < r``.
    """
    _check_nd(n, d)
    if not 1 <= r <= d - 1:
        raise InputError(f"need 1 <= r <= d-1, got r={r} d={d}")
    idx = np.indices((n,) * d)
    head = idx[: d - r].sum(axis=0)
    L = np.zeros((n,) * d, dtype=np.int64)
    for j in range(r):
        L += ((idx[d - 1 - j] - head) % n) * n ** j
    return LatinHypercube(Hypercube(L, SYM(n ** r)), n, d, r, 1)


def _raw(L) -> Hypercube:
    return L.cube if isinstance(L, LatinHypercube) else L


def verify_latin(L, r: int, t: int) -> Verdict:
    """Tally every ``(d-t)``-layer; each symbol must appear ``n**(d-r-t)`` times."""
    H = _raw(L)
    n, d = H.order, H.dim
    if not 1 <= r <= d:
        raise InputError(f"r={r} out of range 1..{d}")
    if not 0 <= t <= d - r:
        raise InputError(f"t={t} out of range 0..{d - r}")
    k = n ** r
    arr = H.array
    bad = np.flatnonzero((arr < 0) | (arr >= k))
    if bad.size:
        cell = unravel(int(bad[0]), n, d)
        return Verdict(False, f"cell={','.join(map(str, cell))} symbol={arr[cell]} outside 0..{k - 1}", cell)
    expected = n ** (d - r - t)
    for fixed in itertools.combinations(range(d), t):
        rows = flatten_layers(arr, fixed)
        offsets = np.arange(rows.shape[0])[:, None] * k
        counts = np.bincount((rows + offsets).ravel(), minlength=rows.shape[0] * k).reshape(-1, k)
        wrong = np.argwhere(counts != expected)
        if wrong.size:
            row, sym = map(int, wrong[0])
            w = SymbolCountWitness(LayerSpec(fixed, unravel(row, n, t)), sym, int(counts[row, sym]), expected)
            return Verdict(False, str(w), w)
    return Verdict(True, f"n={n} d={d} r={r} t={t}")


def verify_line_rainbow(L) -> Verdict:
    """Every one of the ``d * n**(d-1)`` lines must hold ``n`` distinct symbols."""
    H = _raw(L)
    n, d = H.order, H.dim
    arr = H.array
    for axis in range(d):
        lines = np.moveaxis(arr, axis, -1).reshape(-1, n)
        s = np.sort(lines, axis=1)
        rep = np.argwhere(s[:, 1:] == s[:, :-1])
        if rep.size:
            line = int(rep[0, 0])
            rest = unravel(line, n, d - 1)
            point = rest[:axis] + (0,) + rest[axis:]
            w = RepeatWitness(axis, point, int(s[line, rep[0, 1]]))
            return Verdict(False, str(w), w)
    return Verdict(True, f"n={n} d={d} lines={d * n ** (d - 1)}")

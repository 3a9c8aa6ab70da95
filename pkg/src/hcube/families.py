"""Orthogonal families of hypercubes, the replacement construction, and the recursive pipeline.

An ``(N, m)``-orthogonal family is ``N`` order-``N`` dimension-``m`` pm1 cubes with

* (O1) ``A_{i;a} . B_{i;b} = 0`` for distinct members ``A, B``, any axis ``i`` and values ``a, b``;
* (O2) ``sum_A A_{i;a} . A_{i;b} = 0`` for any axis ``i`` and distinct values ``a, b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .core import PM1, Hypercube, InputError, Verdict, is_hadamard_matrix, verify_hadamard_hypercube
from .latin import LatinHypercube, line_rainbow_latin, verify_line_rainbow


class ConstructionError(RuntimeError):
    """A construction produced an artifact that failed its own verification."""


@dataclass(frozen=True)
class FamilyWitness:
    condition: str
    axis: int
    a: int
    b: int
    value: int
    members: tuple[int, int] | None = None

    def __str__(self):
        who = f" members={self.members[0]},{self.members[1]}" if self.members else ""
        label = "dot" if self.condition == "O1" else "sum"
        return f"{self.condition}{who} axis={self.axis} a={self.a} b={self.b} {label}={self.value}"


def _check_members(members: Sequence[Hypercube]) -> tuple[Hypercube, ...]:
    members = tuple(members)
    if not members:
        raise InputError("a family needs at least one member")
    shape = members[0].array.shape
    for M in members:
        if M.alphabet != PM1:
            raise InputError("family members must be pm1 hypercubes")
        if M.array.shape != shape:
            raise InputError(f"member shapes differ: {M.array.shape} vs {shape}")
    return members


def verify_orthogonal_family(members) -> Verdict:
    """Check (O1) and (O2) exactly; the witness names the failing condition."""
    if isinstance(members, OrthogonalFamily):
        members = members.members
    members = _check_members(members)
    stack = np.stack([M.array for M in members])
    count, n, m = len(members), members[0].order, members[0].dim
    off = ~np.eye(count, dtype=bool)
    for axis in range(m):
        F = np.moveaxis(stack, axis + 1, 1).reshape(count, n, -1)
        G = np.einsum("Aaf,Bbf->ABab", F, F)
        bad = np.argwhere(off[:, :, None, None] & (G != 0))
        if bad.size:
            A, B, a, b = map(int, bad[0])
            w = FamilyWitness("O1", axis, a, b, int(G[A, B, a, b]), (A, B))
            return Verdict(False, str(w), w)
        S = np.einsum("AAab->ab", G)
        bad = np.argwhere(np.triu(S, k=1) != 0)
        if bad.size:
            a, b = map(int, bad[0])
            w = FamilyWitness("O2", axis, a, b, int(S[a, b]))
            return Verdict(False, str(w), w)
    return Verdict(True, f"count={count} n={n} m={m}")


@dataclass(frozen=True)
class OrthogonalFamily:
    members: tuple[Hypercube, ...]

    def __post_init__(self):
        members = _check_members(self.members)
        object.__setattr__(self, "members", members)
        if members[0].order != len(members):
            raise InputError(f"{len(members)} members of order {members[0].order}; counts must match")
        report = verify_orthogonal_family(members)
        if not report:
            raise InputError(f"not an orthogonal family: {report.message}")

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def dim(self) -> int:
        return self.members[0].dim

    def __len__(self):
        return len(self.members)

    def __getitem__(self, i) -> Hypercube:
        return self.members[i]


def _product_family(H: np.ndarray, d: int) -> list[Hypercube]:
    """Member ``l`` is the outer product of ``d`` copies of the layer ``H[l]``."""
    return [Hypercube(reduce(np.multiply.outer, [H[l]] * d), PM1) for l in range(H.shape[0])]


def family_from_hadamard(H: Hypercube, d: int) -> OrthogonalFamily:
    """``C_l(i_1..i_d) = prod_j H(l, i_j)``."""
    if d < 2:
        raise InputError(f"dimension must be >= 2, got {d}")
    if not is_hadamard_matrix(H):
        raise InputError("family_from_hadamard needs a Hadamard matrix")
    return OrthogonalFamily(tuple(_product_family(H.array, d)))


def family_from_hypercube(H: Hypercube, d: int) -> OrthogonalFamily:
    """``C_l(i_1..i_{dr}) = prod_j H(l, block_j)`` for an ``(N, r+1, r)``-Hadamard ``H``.

    Block ``j`` is the run of ``r`` consecutive coordinates starting at ``j*r``.
    """
    if d < 1:
        raise InputError(f"d must be >= 1, got {d}")
    r = H.dim - 1
    if r < 1:
        raise InputError("need a hypercube of dimension >= 2")
    if H.alphabet != PM1:
        raise InputError("need a pm1 hypercube")
    report = verify_hadamard_hypercube(H, r)
    if not report:
        raise InputError(f"input is not an (N,{r + 1},{r})-Hadamard hypercube: {report.message}")
    return OrthogonalFamily(tuple(_product_family(H.array, d)))


def replace(L: LatinHypercube, S: OrthogonalFamily) -> Hypercube:
    """Substitute member ``C_l`` for every symbol ``l`` of a line-rainbow Latin hypercube.

    Each coordinate ``x`` of the order-``n**(r+1)`` output splits as
    ``x = (x // n) * n + x % n``; the low digit ``x % n`` addresses ``L`` and
    the block index ``x // n`` addresses the member cube:
    ``H(x) = C_{L(x % n)}(x // n)``.
    """
    n, m, r = L.n, L.d, L.r
    if L.claimed_t < 1:
        raise InputError("L must be an (n,m,r,1) Latin hypercube")
    rainbow = verify_line_rainbow(L)
    if not rainbow:
        raise InputError(f"L is not line-rainbow: {rainbow.message}")
    if S.count != n ** r or S.dim != m:
        raise InputError(f"need {n ** r} members of dimension {m}, got {S.count} of dimension {S.dim}")
    stack = np.stack([M.array for M in S.members])
    idx = np.indices((n ** (r + 1),) * m)
    symbols = L.array[tuple(idx % n)]
    return Hypercube(stack[(symbols,) + tuple(idx // n)], PM1)


def recursive_hypercube(H: Hypercube, n: int, r: int, d: int) -> Hypercube:
    """An ``(n**(r+1), d*s, d*s-1)``-Hadamard hypercube from an ``(n**r, s+1, s)`` one.

    The output is verified before it is returned.
    """
    if n < 2 or r < 1 or d < 2:
        raise InputError(f"need n >= 2, r >= 1, d >= 2; got n={n} r={r} d={d}")
    if H.order != n ** r:
        raise InputError(f"order {H.order} is not {n}^{r}")
    s = H.dim - 1
    S = family_from_hypercube(H, d)
    L = line_rainbow_latin(n, d * s, r)
    out = replace(L, S)
    report = verify_hadamard_hypercube(out, d * s - 1)
    if not report:
        raise ConstructionError(f"recursive construction failed verification: {report.message}")
    return out
